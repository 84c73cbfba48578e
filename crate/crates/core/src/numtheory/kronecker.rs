//! Kronecker symbol and the two characters `(-12/·)` and `(-3/·)`.
//!
//! The general symbol follows the full standard extension of the Jacobi
//! symbol to all integer arguments, including the `(a/2)` and `(a/-1)`
//! rules. The two characters the counting formulas actually evaluate are
//! also exposed as direct residue-class tables; the agreement of the two
//! routes is part of the verification suite, since a single wrong sign
//! silently corrupts every downstream identity.

/// Kronecker symbol `(a/n)`, defined for all integers `a` and `n`.
///
/// Completely multiplicative in `n`, with `(a/0) = 1` iff `a = ±1`,
/// `(a/-1) = sign-of-a` rule, and the usual mod-8 rule for `(a/2)`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return i32::from(a == 1 || a == -1);
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut a = a;
    let mut n = n;
    let mut sign = 1i32;
    // (a/-1): -1 iff a < 0.
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // Factor 2^v out of n; a is odd here whenever v > 0.
    let mut v = 0u32;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    if v % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
        sign = -sign;
    }
    // Jacobi loop on odd positive n.
    loop {
        if n == 1 {
            return sign;
        }
        a = a.rem_euclid(n);
        if a == 0 {
            return 0;
        }
        let mut w = 0u32;
        while a % 2 == 0 {
            a /= 2;
            w += 1;
        }
        if w % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = -sign;
        }
        // Quadratic reciprocity for odd positive coprime a, n.
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
    }
}

/// `(-12/n)` by its residue-class table mod 12.
///
/// Nonzero exactly on n coprime to 12: +1 for n ≡ 1, 7 and -1 for
/// n ≡ 5, 11 (mod 12). Must agree with [`kronecker`]`(-12, n)`.
pub fn chi_minus12(n: u64) -> i32 {
    const TABLE: [i32; 12] = [0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1];
    TABLE[(n % 12) as usize]
}

/// `(-3/(2n+1))` by its residue-class table mod 3: +1, 0, -1 according
/// to n ≡ 0, 1, 2 (mod 3).
pub fn chi_minus3_at_odd(n: u64) -> i32 {
    const TABLE: [i32; 3] = [1, 0, -1];
    TABLE[(n % 3) as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Legendre symbol by quadratic-residue scan; p must be an odd prime.
    fn legendre_brute(a: i64, p: i64) -> i32 {
        let r = a.rem_euclid(p);
        if r == 0 {
            return 0;
        }
        for x in 1..p {
            if (x * x).rem_euclid(p) == r {
                return 1;
            }
        }
        -1
    }

    fn kron2_brute(a: i64) -> i32 {
        match a.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        }
    }

    /// Kronecker symbol assembled from the definition: factor n and take
    /// the product of Legendre symbols with the unit and 2 rules.
    fn kronecker_brute(a: i64, n: i64) -> i32 {
        if n == 0 {
            return i32::from(a == 1 || a == -1);
        }
        let mut sign = 1;
        if n < 0 && a < 0 {
            sign = -1;
        }
        let mut m = n.unsigned_abs();
        while m % 2 == 0 {
            m /= 2;
            sign *= kron2_brute(a);
        }
        let mut p = 3i64;
        let mut m = m as i64;
        while p * p <= m {
            while m % p == 0 {
                m /= p;
                sign *= legendre_brute(a, p);
            }
            p += 2;
        }
        if m > 1 {
            sign *= legendre_brute(a, m);
        }
        sign
    }

    #[test]
    fn kronecker_matches_brute_force() {
        for a in -40..=40 {
            for n in -40..=150 {
                assert_eq!(
                    kronecker(a, n),
                    kronecker_brute(a, n),
                    "mismatch at ({a}/{n})"
                );
            }
        }
    }

    #[test]
    fn kronecker_known_values() {
        assert_eq!(kronecker(5, 1), 1);
        // -12 ≡ 2 mod 7 and 3² ≡ 2 mod 7, so -12 is a residue mod 7.
        assert_eq!(kronecker(-12, 7), 1);
        // residues mod 5 are {1, 4}; -3 ≡ 2 is not one.
        assert_eq!(kronecker(-3, 5), -1);
        // wikipedia's worked Jacobi example
        assert_eq!(kronecker(1001, 9907), -1);
    }

    #[test]
    fn kronecker_completely_multiplicative_in_n() {
        for a in [-12, -3, 5, 17, -20] {
            for n1 in 1..=60i64 {
                for n2 in 1..=60i64 {
                    assert_eq!(kronecker(a, n1 * n2), kronecker(a, n1) * kronecker(a, n2));
                }
            }
        }
    }

    #[test]
    fn chi_minus12_examples() {
        assert_eq!(chi_minus12(1), 1);
        assert_eq!(chi_minus12(5), -1);
        assert_eq!(chi_minus12(7), 1);
        assert_eq!(chi_minus12(6), 0);
    }

    #[test]
    fn chi_minus3_examples() {
        assert_eq!(chi_minus3_at_odd(0), 1);
        assert_eq!(chi_minus3_at_odd(1), 0);
        assert_eq!(chi_minus3_at_odd(5), -1);
    }

    #[test]
    fn characters_agree_with_kronecker_to_1e4() {
        for n in 0..=10_000u64 {
            assert_eq!(chi_minus12(n), kronecker(-12, n as i64), "chi12 at {n}");
            assert_eq!(
                chi_minus3_at_odd(n),
                kronecker(-3, 2 * n as i64 + 1),
                "chi3 at {n}"
            );
        }
    }

    #[test]
    fn chi_minus12_periodic_and_supported_on_coprimes() {
        for n in 0..=10_000u64 {
            if num_integer::gcd(n, 12) == 1 {
                assert_eq!(chi_minus12(n), chi_minus12(n % 12));
                assert_ne!(chi_minus12(n), 0);
            } else {
                assert_eq!(chi_minus12(n), 0);
            }
        }
    }
}
