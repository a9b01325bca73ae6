//! Classical number theory over `u64`: factorization, divisors, and the
//! Möbius and Euler phi functions.
//!
//! Factorization is plain trial division, sized for desk-scale moduli
//! (up to about 10^7); none of the downstream computations can overflow
//! `u64` at that scale because `μ ∈ {−1, 0, 1}` and `φ(m) ≤ m`.  Values
//! that genuinely grow, such as generator counts of symbolic chain-ring
//! products, live in [`crate::ringspec`] as big integers instead.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("cannot factor zero")]
    Zero,
}

/// One prime power `prime^exponent` of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// A positive integer together with its prime factorization.
///
/// Primes are strictly increasing and every exponent is at least 1; the
/// factor list is empty exactly for the integer 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<PrimePower>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|pp| pp.exponent == 1)
    }
}

/// Factors `n ≥ 1` by trial division.
pub fn factor(n: u64) -> Result<FactoredInteger, NumTheoryError> {
    if n == 0 {
        return Err(NumTheoryError::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push(PrimePower { prime: p, exponent: e });
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    while p.saturating_mul(p) <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push(PrimePower { prime: rest, exponent: 1 });
    }
    Ok(FactoredInteger { value: n, factors })
}

/// The classical Möbius function: 0 on non-squarefree arguments, otherwise
/// `(−1)^r` where `r` counts the prime factors.
pub fn classical_mobius(m: &FactoredInteger) -> i64 {
    if !m.is_squarefree() {
        return 0;
    }
    if m.distinct_primes() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler's phi function, `∏ (p^e − p^{e−1})` over the factorization.
pub fn classical_phi(m: &FactoredInteger) -> u64 {
    m.factors
        .iter()
        .map(|pp| pp.prime.pow(pp.exponent - 1) * (pp.prime - 1))
        .product()
}

/// All positive divisors of `m`, sorted ascending.
pub fn divisors(m: &FactoredInteger) -> Vec<u64> {
    let mut divs = vec![1u64];
    for pp in &m.factors {
        let prev = divs.clone();
        let mut power = 1u64;
        for _ in 0..pp.exponent {
            power *= pp.prime;
            divs.extend(prev.iter().map(|d| d * power));
        }
    }
    divs.sort_unstable();
    divs
}

/// Deterministic Miller–Rabin primality test for `u64`.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known
/// to be exact for every integer below 3.3·10^24, which covers all of
/// `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::gcd;
    use proptest::prelude::*;

    // Independent oracles, kept free of the implementation above: phi by
    // gcd counting, divisors by scanning, primality by scanning.

    fn phi_by_counting(m: u64) -> u64 {
        (1..=m).filter(|&a| gcd(a, m) == 1).count() as u64
    }

    fn divisors_by_scanning(m: u64) -> Vec<u64> {
        (1..=m).filter(|d| m % d == 0).collect()
    }

    fn prime_by_scanning(n: u64) -> bool {
        n >= 2 && (2..n).all(|d| n % d != 0)
    }

    #[test]
    fn factor_rejects_zero() {
        assert_eq!(factor(0), Err(NumTheoryError::Zero));
    }

    #[test]
    fn factor_known_values() {
        assert_eq!(factor(1).unwrap().factors(), &[]);
        assert_eq!(
            factor(24).unwrap().factors(),
            &[
                PrimePower { prime: 2, exponent: 3 },
                PrimePower { prime: 3, exponent: 1 }
            ]
        );
        assert_eq!(
            factor(360).unwrap().factors(),
            &[
                PrimePower { prime: 2, exponent: 3 },
                PrimePower { prime: 3, exponent: 2 },
                PrimePower { prime: 5, exponent: 1 }
            ]
        );
        assert_eq!(
            factor(9_999_991).unwrap().factors(),
            &[PrimePower { prime: 9_999_991, exponent: 1 }]
        );
    }

    #[test]
    fn factor_reconstructs_value_with_prime_parts() {
        for n in 1..=3000u64 {
            let f = factor(n).unwrap();
            let product: u64 = f
                .factors()
                .iter()
                .map(|pp| pp.prime.pow(pp.exponent))
                .product();
            assert_eq!(product, n);
            for pp in f.factors() {
                assert!(prime_by_scanning(pp.prime), "{} not prime", pp.prime);
            }
            for w in f.factors().windows(2) {
                assert!(w[0].prime < w[1].prime);
            }
        }
    }

    #[test]
    fn mobius_known_values() {
        let mu = |m| classical_mobius(&factor(m).unwrap());
        assert_eq!(mu(1), 1);
        assert_eq!(mu(2), -1);
        assert_eq!(mu(3), -1);
        assert_eq!(mu(6), 1);
        assert_eq!(mu(12), 0);
        assert_eq!(mu(24), 0);
        assert_eq!(mu(30), -1);
        assert_eq!(mu(210), 1);
    }

    #[test]
    fn mobius_divisor_sums_vanish() {
        // Σ_{d|m} μ(d) is 1 at m = 1 and 0 for every m ≥ 2.
        for m in 1..=2000u64 {
            let f = factor(m).unwrap();
            let total: i64 = divisors(&f)
                .into_iter()
                .map(|d| classical_mobius(&factor(d).unwrap()))
                .sum();
            assert_eq!(total, i64::from(m == 1), "m = {m}");
        }
    }

    #[test]
    fn phi_known_values() {
        let phi = |m| classical_phi(&factor(m).unwrap());
        assert_eq!(phi(1), 1);
        assert_eq!(phi(2), 1);
        assert_eq!(phi(6), 2);
        assert_eq!(phi(8), 4);
        assert_eq!(phi(24), 8);
        assert_eq!(phi(100), 40);
    }

    #[test]
    fn phi_matches_gcd_counting() {
        for m in 1..=10_000u64 {
            assert_eq!(classical_phi(&factor(m).unwrap()), phi_by_counting(m), "m = {m}");
        }
    }

    #[test]
    fn phi_divisor_sums_give_m() {
        for m in 1..=2000u64 {
            let f = factor(m).unwrap();
            let total: u64 = divisors(&f)
                .into_iter()
                .map(|d| classical_phi(&factor(d).unwrap()))
                .sum();
            assert_eq!(total, m, "m = {m}");
        }
    }

    #[test]
    fn divisors_match_scanning() {
        for m in 1..=500u64 {
            assert_eq!(divisors(&factor(m).unwrap()), divisors_by_scanning(m));
        }
        assert_eq!(divisors(&factor(24).unwrap()), vec![1, 2, 3, 4, 6, 8, 12, 24]);
    }

    #[test]
    fn divisor_count_is_product_of_exponents_plus_one() {
        for m in 1..=2000u64 {
            let f = factor(m).unwrap();
            let expected: usize = f.factors().iter().map(|pp| pp.exponent as usize + 1).product();
            assert_eq!(divisors(&f).len(), expected);
        }
    }

    #[test]
    fn is_prime_matches_scanning() {
        for n in 0..=2000u64 {
            assert_eq!(is_prime(n), prime_by_scanning(n), "n = {n}");
        }
    }

    #[test]
    fn is_prime_large_values() {
        assert!(is_prime(2_147_483_647)); // 2^31 − 1
        assert!(!is_prime(2_147_483_649));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn mobius_and_phi_are_multiplicative(a in 1u64..10_000, b in 1u64..10_000) {
            prop_assume!(gcd(a, b) == 1);
            let fa = factor(a).unwrap();
            let fb = factor(b).unwrap();
            let fab = factor(a * b).unwrap();
            prop_assert_eq!(classical_mobius(&fab), classical_mobius(&fa) * classical_mobius(&fb));
            prop_assert_eq!(classical_phi(&fab), classical_phi(&fa) * classical_phi(&fb));
        }

        #[test]
        fn divisors_divide_and_are_complete(m in 1u64..5000) {
            let f = factor(m).unwrap();
            let divs = divisors(&f);
            for &d in &divs {
                prop_assert_eq!(m % d, 0);
            }
            for d in 1..=m {
                if m % d == 0 {
                    prop_assert!(divs.binary_search(&d).is_ok());
                }
            }
        }
    }
}
