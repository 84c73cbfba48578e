//! `sccrank`: exact counts for the rank statistic of strongly concave
//! compositions, and verification of their asymptotics.
//!
//! Exit codes: 0 success, 1 verification failure (or I/O error), 2 usage
//! error (unknown flags, missing arguments, values outside supported
//! bounds).

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sccrank_core::asym::dist::fmt_real12;
use sccrank_core::asym::{empirical_rank_cdf, theorem1_estimate};
use sccrank_core::concave::{
    rank_table_oracle, rank_table_prop1, vd_andrews, vd_fast, vd_product, vdm_genfunc, vdm_prop1,
};
use sccrank_core::numtheory::PartitionCache;
use sccrank_core::{Int, Log64};

mod verify;

#[derive(Parser)]
#[command(
    name = "sccrank",
    version,
    about = "Exact rank counts of strongly concave compositions and their asymptotics"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact partition number p(N) in decimal
    Pn {
        #[arg(long)]
        n: u64,
    },
    /// Exact V_d(n) for n = 0..=MAX as `n,vd` rows
    Vd {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = VdMethod::Fast)]
        method: VdMethod,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact V_d(m,n) for n = 0..=MAX as `n,m,count` rows
    RankTable {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = TableMethod::Prop1)]
        method: TableMethod,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact V_d(ell, N + |ell|(|ell|+1)/2) against its main term, in log
    /// scale
    Asym {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        ell: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Empirical rank distribution vs the Gaussian limit on an x-grid
    Dist {
        #[arg(long)]
        n: u64,
        /// Grid step over x in [-4, 4]
        #[arg(long, default_value_t = 0.1)]
        grid_step: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 on any failed check
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Scale knob; default per suite (see README)
        #[arg(long)]
        max: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VdMethod {
    Andrews,
    Product,
    Fast,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableMethod {
    Genfunc,
    Prop1,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Characters,
    Identities,
    Oracle,
    Asymptotic,
    Distribution,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        // domain/bound violations are usage errors
        Err(AppError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(AppError::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(1)
        }
    }
}

enum AppError {
    Core(sccrank_core::Error),
    Io(std::io::Error),
}

impl From<sccrank_core::Error> for AppError {
    fn from(e: sccrank_core::Error) -> Self {
        AppError::Core(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, AppError> {
    match cmd {
        Cmd::Pn { n } => {
            let mut cache = PartitionCache::new();
            let p = cache.partition_count(n as i64)?;
            emit(&None, &format!("{p}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Vd {
            max,
            method,
            format,
            out,
        } => {
            let values = vd_values(max, method)?;
            let content = match format {
                Format::Csv => {
                    let mut s = String::from("n,vd\n");
                    for (n, v) in values.iter().enumerate() {
                        writeln!(s, "{n},{v}").expect("string write");
                    }
                    s
                }
                Format::Json => {
                    let records: Vec<serde_json::Value> = values
                        .iter()
                        .enumerate()
                        .map(|(n, v)| serde_json::json!({ "n": n, "vd": v.to_string() }))
                        .collect();
                    serde_json::to_string_pretty(&records).expect("json") + "\n"
                }
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::RankTable {
            max,
            method,
            format,
            out,
        } => {
            let table = match method {
                TableMethod::Oracle => rank_table_oracle(max)?,
                TableMethod::Genfunc => vdm_genfunc(max as usize),
                TableMethod::Prop1 => {
                    let mut cache = PartitionCache::new();
                    rank_table_prop1(&mut cache, max)?
                }
            };
            let content = match format {
                Format::Csv => table.to_csv(),
                Format::Json => serde_json::to_string_pretty(&table.to_json()).expect("json") + "\n",
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Asym { n, ell, out } => {
            let mut cache = PartitionCache::new();
            let exact = vdm_prop1(&mut cache, ell, n as i64)?;
            let p = cache.partition_count(n as i64)?;
            let estimate = theorem1_estimate(ell, n, &p);
            let exact_log = Log64::from_bigint(&exact);
            let rel_err = exact_log.rel_err(&estimate);
            let content = format!(
                "N,ell,exact_log,estimate_log,rel_err\n{},{},{},{},{}\n",
                n,
                ell,
                fmt_real12(exact_log.ln()),
                fmt_real12(estimate.ln()),
                fmt_real12(rel_err)
            );
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dist {
            n,
            grid_step,
            format,
            out,
        } => {
            if !(grid_step > 0.0) || grid_step > 8.0 {
                return Err(AppError::Core(sccrank_core::Error::Domain(format!(
                    "grid step must lie in (0, 8], got {grid_step}"
                ))));
            }
            let xs = grid(-4.0, 4.0, grid_step);
            let mut cache = PartitionCache::new();
            let curve = empirical_rank_cdf(&mut cache, n, &xs)?;
            let content = match format {
                Format::Csv => curve.to_csv(),
                Format::Json => serde_json::to_string_pretty(&curve.to_json()).expect("json") + "\n",
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max } => {
            let checks = verify::run_suite(suite, max)?;
            let mut all_pass = true;
            for c in &checks {
                println!("{}: {} ({})", c.name, if c.pass { "PASS" } else { "FAIL" }, c.detail);
                all_pass &= c.pass;
            }
            if all_pass {
                println!("{} checks passed", checks.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification failed");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn vd_values(max: u64, method: VdMethod) -> Result<Vec<Int>, AppError> {
    Ok(match method {
        VdMethod::Fast => {
            let mut cache = PartitionCache::new();
            let mut out = Vec::with_capacity(max as usize + 1);
            for n in 0..=max {
                out.push(vd_fast(&mut cache, n)?);
            }
            out
        }
        VdMethod::Andrews => vd_andrews(max as usize).coeffs().to_vec(),
        VdMethod::Product => vd_product(max as usize).coeffs().to_vec(),
    })
}

/// Uniform grid on [lo, hi] built in exact micro-units so the x labels
/// render cleanly and runs are byte-identical.
fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let to_micro = |v: f64| (v * 1e6).round() as i64;
    let (lo_u, hi_u, step_u) = (to_micro(lo), to_micro(hi), to_micro(step).max(1));
    let mut xs = Vec::new();
    let mut x = lo_u;
    while x <= hi_u {
        xs.push(x as f64 / 1e6);
        x += step_u;
    }
    xs
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}
