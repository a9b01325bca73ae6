//! Symbolic finite principal ideal rings: products of finite chain rings.
//!
//! A finite chain ring is described by `(q, e)` where `q = p^r` is the
//! residue field size and `e` the nilpotency index of the maximal ideal;
//! a product of chain rings is a [`PirSpec`].  Its principal ideals
//! correspond to exponent tuples `i = (i_1, …, i_s)` on the grid
//! `[0, e_1] × … × [0, e_s]`, ordered componentwise, with the zero ideal
//! at the bottom tuple and the whole ring at the top.  The tuple `i`
//! indexes the ideal of size `∏ q_k^{i_k}`, whose generators are the
//! elements `u · ρ^ī` for the complement tuple `ī = (e_1 − i_1, …)`.
//!
//! On the grid both invariants have closed forms:
//!
//! ```text
//! φ(i) = ∏_{i_k > 0} (q_k^{i_k} − q_k^{i_k − 1})
//! μ(i, j) = 0 unless every i_k − j_k is 0 or 1, else (−1)^β,
//!           β = #{k : i_k − j_k = 1}
//! w(class i) = λ · (1 − μ(i, 0) / φ(i))
//! ```
//!
//! Generator counts multiply up quickly, so they are big integers here.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::lambda::LambdaRational;
use crate::numtheory::is_prime;

/// Upper bound on the exponent-grid size for full-table operations.
pub const MAX_GRID: u128 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingSpecError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("nilpotency index must be at least 1")]
    ZeroNilpotency,
    #[error("a ring spec needs at least one chain component")]
    Empty,
    #[error("invalid ring spec `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("exponent tuple has arity {got}, the spec has {expected} components")]
    Arity { expected: usize, got: usize },
    #[error("exponent {value} exceeds the nilpotency index {max} of component {index}")]
    ExponentOutOfRange { index: usize, value: u32, max: u32 },
    #[error("exponent grid has {size} tuples, the full-table limit is {limit}")]
    GridTooLarge { size: u128, limit: u128 },
}

/// Parameters of one finite chain ring: residue field of size `q = p^r`,
/// maximal ideal nilpotency index `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainRingParams {
    q: u64,
    p: u64,
    r: u32,
    e: u32,
}

impl ChainRingParams {
    pub fn new(q: u64, e: u32) -> Result<ChainRingParams, RingSpecError> {
        if e == 0 {
            return Err(RingSpecError::ZeroNilpotency);
        }
        let (p, r) = prime_power_decompose(q).ok_or(RingSpecError::NotPrimePower(q))?;
        Ok(ChainRingParams { q, p, r, e })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `q^e`, the number of elements of the chain ring.
    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.q).pow(self.e)
    }

    /// Homogeneous weight of a chain-ring element `x = u·γ^ibar` by the
    /// three-case form: `0` at `x = 0` (`ibar = e`), `λ·q/(q−1)` on the
    /// minimal nonzero ideal (`ibar = e − 1`), and `λ` everywhere else.
    pub fn chain_weight(
        &self,
        ibar: u32,
        lambda: &LambdaRational,
    ) -> Result<LambdaRational, RingSpecError> {
        if ibar > self.e {
            return Err(RingSpecError::ExponentOutOfRange {
                index: 0,
                value: ibar,
                max: self.e,
            });
        }
        if ibar == self.e {
            return Ok(LambdaRational::zero());
        }
        if ibar == self.e - 1 {
            // λ(1 − (−1)/(q − 1)) = λ·q/(q − 1)
            return Ok(LambdaRational::weight_from(-1, &BigUint::from(self.q - 1), lambda));
        }
        Ok(lambda.clone())
    }
}

/// Writes `p^r` with the prime base when `q` is a prime power.
fn prime_power_decompose(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    for k in (2..=63u32).rev() {
        if let Some(root) = exact_kth_root(q, k) {
            if is_prime(root) {
                return Some((root, k));
            }
        }
    }
    if is_prime(q) {
        return Some((q, 1));
    }
    None
}

fn exact_kth_root(q: u64, k: u32) -> Option<u64> {
    let mut lo = 1u64;
    let mut hi = 2u64;
    while pow_saturating(hi, k) < q {
        lo = hi;
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pow_saturating(mid, k) < q {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (pow_saturating(lo, k) == q).then_some(lo)
}

fn pow_saturating(base: u64, exp: u32) -> u64 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// An exponent tuple on the ideal grid of a [`PirSpec`].
///
/// Construction goes through [`PirSpec::tuple`], which checks arity and
/// bounds, so a tuple in hand is always valid for the spec it came from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTuple {
    exps: Vec<u32>,
}

impl ExponentTuple {
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_bottom(&self) -> bool {
        self.exps.iter().all(|&i| i == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &ExponentTuple) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// A finite principal ideal ring presented as a product of chain rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PirSpec {
    components: Vec<ChainRingParams>,
}

impl PirSpec {
    pub fn new(components: Vec<ChainRingParams>) -> Result<PirSpec, RingSpecError> {
        if components.is_empty() {
            return Err(RingSpecError::Empty);
        }
        Ok(PirSpec { components })
    }

    /// Convenience constructor from `(q, e)` pairs.
    pub fn from_pairs(pairs: &[(u64, u32)]) -> Result<PirSpec, RingSpecError> {
        let components = pairs
            .iter()
            .map(|&(q, e)| ChainRingParams::new(q, e))
            .collect::<Result<Vec<_>, _>>()?;
        PirSpec::new(components)
    }

    pub fn components(&self) -> &[ChainRingParams] {
        &self.components
    }

    /// Number of chain factors.
    pub fn s(&self) -> usize {
        self.components.len()
    }

    pub fn cardinality(&self) -> BigUint {
        self.components.iter().map(|c| c.cardinality()).product()
    }

    /// Number of tuples on the exponent grid, `∏ (e_k + 1)`.
    pub fn grid_size(&self) -> u128 {
        self.components
            .iter()
            .map(|c| c.e as u128 + 1)
            .product()
    }

    /// Binds an exponent vector to this spec, validating arity and bounds.
    pub fn tuple(&self, exps: Vec<u32>) -> Result<ExponentTuple, RingSpecError> {
        if exps.len() != self.s() {
            return Err(RingSpecError::Arity { expected: self.s(), got: exps.len() });
        }
        for (index, (&value, c)) in exps.iter().zip(&self.components).enumerate() {
            if value > c.e {
                return Err(RingSpecError::ExponentOutOfRange { index, value, max: c.e });
            }
        }
        Ok(ExponentTuple { exps })
    }

    pub fn bottom(&self) -> ExponentTuple {
        ExponentTuple { exps: vec![0; self.s()] }
    }

    pub fn top(&self) -> ExponentTuple {
        ExponentTuple { exps: self.components.iter().map(|c| c.e).collect() }
    }

    fn check(&self, t: &ExponentTuple) -> Result<(), RingSpecError> {
        if t.exps.len() != self.s() {
            return Err(RingSpecError::Arity { expected: self.s(), got: t.exps.len() });
        }
        for (index, (&value, c)) in t.exps.iter().zip(&self.components).enumerate() {
            if value > c.e {
                return Err(RingSpecError::ExponentOutOfRange { index, value, max: c.e });
            }
        }
        Ok(())
    }

    /// The complement tuple `ī = (e_1 − i_1, …, e_s − i_s)` that carries a
    /// tuple between "ideal index" and "generator exponent" roles.
    pub fn complement(&self, i: &ExponentTuple) -> Result<ExponentTuple, RingSpecError> {
        self.check(i)?;
        Ok(ExponentTuple {
            exps: i.exps.iter().zip(&self.components).map(|(&ik, c)| c.e - ik).collect(),
        })
    }

    /// Generator count of the ideal at `i`:
    /// `φ(i) = ∏_{i_k > 0} (q_k^{i_k} − q_k^{i_k − 1})`.
    pub fn phi(&self, i: &ExponentTuple) -> Result<BigUint, RingSpecError> {
        self.check(i)?;
        let mut acc = BigUint::one();
        for (&ik, c) in i.exps.iter().zip(&self.components) {
            if ik > 0 {
                let q = BigUint::from(c.q);
                acc *= q.pow(ik) - q.pow(ik - 1);
            }
        }
        Ok(acc)
    }

    /// Möbius function of the ideal grid in closed form: zero unless every
    /// coordinate of `i − j` is 0 or 1, otherwise `(−1)^β` where `β`
    /// counts the coordinates equal to 1.
    pub fn mobius(&self, i: &ExponentTuple, j: &ExponentTuple) -> Result<i64, RingSpecError> {
        self.check(i)?;
        self.check(j)?;
        let mut beta = 0u32;
        for (&ik, &jk) in i.exps.iter().zip(&j.exps) {
            if jk > ik || ik - jk > 1 {
                return Ok(0);
            }
            if ik - jk == 1 {
                beta += 1;
            }
        }
        Ok(if beta % 2 == 0 { 1 } else { -1 })
    }

    /// Homogeneous weight of the association class indexed by `i`, that
    /// is, of the elements `u·ρ^ī`: `λ · (1 − μ(i, 0) / φ(i))`.
    pub fn weight(
        &self,
        i: &ExponentTuple,
        lambda: &LambdaRational,
    ) -> Result<LambdaRational, RingSpecError> {
        let mu = self.mobius(i, &self.bottom())?;
        let phi = self.phi(i)?;
        Ok(LambdaRational::weight_from(mu, &phi, lambda))
    }

    /// Iterates the whole exponent grid in lexicographic order.
    pub fn tuples(&self) -> impl Iterator<Item = ExponentTuple> + '_ {
        let s = self.s();
        let mut current = Some(vec![0u32; s]);
        std::iter::from_fn(move || {
            let exps = current.take()?;
            let mut next = exps.clone();
            for k in (0..s).rev() {
                if next[k] < self.components[k].e {
                    next[k] += 1;
                    current = Some(next);
                    break;
                }
                next[k] = 0;
            }
            Some(ExponentTuple { exps })
        })
    }

    /// The full weight table over the exponent grid.
    ///
    /// Fails when the grid exceeds [`MAX_GRID`] tuples.
    pub fn weight_table(
        &self,
        lambda: &LambdaRational,
    ) -> Result<BTreeMap<ExponentTuple, LambdaRational>, RingSpecError> {
        let size = self.grid_size();
        if size > MAX_GRID {
            return Err(RingSpecError::GridTooLarge { size, limit: MAX_GRID });
        }
        self.tuples()
            .map(|t| {
                let w = self.weight(&t, lambda)?;
                Ok((t, w))
            })
            .collect()
    }
}

/// Spec strings look like `2^3x3^1`: components `q^e` joined by `x`.
impl FromStr for PirSpec {
    type Err = RingSpecError;

    fn from_str(s: &str) -> Result<PirSpec, RingSpecError> {
        let parse_err = |reason: &str| RingSpecError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.trim().is_empty() {
            return Err(parse_err("empty spec"));
        }
        let mut components = Vec::new();
        for part in s.split('x') {
            let part = part.trim();
            let (q, e) = part
                .split_once('^')
                .ok_or_else(|| parse_err(&format!("component `{part}` is not of the form q^e")))?;
            let q: u64 = q
                .trim()
                .parse()
                .map_err(|_| parse_err(&format!("`{}` is not a valid field size", q.trim())))?;
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| parse_err(&format!("`{}` is not a valid nilpotency index", e.trim())))?;
            components.push(ChainRingParams::new(q, e)?);
        }
        PirSpec::new(components)
    }
}

impl fmt::Display for PirSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{}^{}", c.q, c.e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn lam(n: i64, d: i64) -> LambdaRational {
        LambdaRational::new(n, d).unwrap()
    }

    fn z24_spec() -> PirSpec {
        PirSpec::from_pairs(&[(2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn chain_params_decompose_prime_powers() {
        let c = ChainRingParams::new(2, 3).unwrap();
        assert_eq!((c.q(), c.p(), c.r(), c.e()), (2, 2, 1, 3));
        let c = ChainRingParams::new(4, 2).unwrap();
        assert_eq!((c.q(), c.p(), c.r()), (4, 2, 2));
        let c = ChainRingParams::new(27, 1).unwrap();
        assert_eq!((c.q(), c.p(), c.r()), (27, 3, 3));
        let c = ChainRingParams::new(1024, 1).unwrap();
        assert_eq!((c.q(), c.p(), c.r()), (1024, 2, 10));

        assert_eq!(ChainRingParams::new(6, 1), Err(RingSpecError::NotPrimePower(6)));
        assert_eq!(ChainRingParams::new(1, 1), Err(RingSpecError::NotPrimePower(1)));
        assert_eq!(ChainRingParams::new(0, 1), Err(RingSpecError::NotPrimePower(0)));
        assert_eq!(ChainRingParams::new(36, 1), Err(RingSpecError::NotPrimePower(36)));
        assert_eq!(ChainRingParams::new(2, 0), Err(RingSpecError::ZeroNilpotency));
    }

    #[test]
    fn parses_and_prints_spec_strings() {
        let spec: PirSpec = "2^3x3^1".parse().unwrap();
        assert_eq!(spec, z24_spec());
        assert_eq!(spec.to_string(), "2^3x3^1");

        let spec: PirSpec = " 4^2 x 25^1 ".parse().unwrap();
        assert_eq!(spec.to_string(), "4^2x25^1");
        assert_eq!(spec.s(), 2);

        assert!(matches!("".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert!(matches!("2".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert!(matches!("2^".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert!(matches!("^3".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert!(matches!("2^3x".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert!(matches!("2^3y3^1".parse::<PirSpec>(), Err(RingSpecError::Parse { .. })));
        assert_eq!("6^1".parse::<PirSpec>(), Err(RingSpecError::NotPrimePower(6)));
        assert_eq!("2^0".parse::<PirSpec>(), Err(RingSpecError::ZeroNilpotency));
    }

    #[test]
    fn cardinality_multiplies_components() {
        assert_eq!(z24_spec().cardinality(), BigUint::from(24u32));
        let big = PirSpec::from_pairs(&[(1024, 6)]).unwrap();
        assert_eq!(big.cardinality(), BigUint::from(2u32).pow(60));
    }

    #[test]
    fn tuple_binding_checks_arity_and_bounds() {
        let spec = z24_spec();
        assert!(spec.tuple(vec![3, 1]).is_ok());
        assert_eq!(
            spec.tuple(vec![1]),
            Err(RingSpecError::Arity { expected: 2, got: 1 })
        );
        assert_eq!(
            spec.tuple(vec![4, 0]),
            Err(RingSpecError::ExponentOutOfRange { index: 0, value: 4, max: 3 })
        );
    }

    #[test]
    fn complement_flips_roles() {
        let spec = z24_spec();
        let i = spec.tuple(vec![1, 1]).unwrap();
        assert_eq!(spec.complement(&i).unwrap(), spec.tuple(vec![2, 0]).unwrap());
        assert_eq!(spec.complement(&spec.bottom()).unwrap(), spec.top());
    }

    #[test]
    fn phi_closed_form() {
        let spec = z24_spec();
        assert_eq!(spec.phi(&spec.bottom()).unwrap(), BigUint::one());
        // generators of the ideal of size 6 in Z_24: φ(6) = 2
        assert_eq!(spec.phi(&spec.tuple(vec![1, 1]).unwrap()).unwrap(), BigUint::from(2u32));
        // units of Z_8 within the chain factor 2^3
        let z8 = PirSpec::from_pairs(&[(2, 3)]).unwrap();
        assert_eq!(spec.phi(&spec.tuple(vec![3, 0]).unwrap()).unwrap(), BigUint::from(4u32));
        assert_eq!(z8.phi(&z8.tuple(vec![3]).unwrap()).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn phi_matches_classical_phi_for_prime_components() {
        // with every q_k prime, φ(i) is Euler phi of m = ∏ p_k^{i_k}
        use crate::numtheory::{classical_phi, factor};
        let spec = PirSpec::from_pairs(&[(2, 3), (3, 2), (5, 1)]).unwrap();
        for t in spec.tuples() {
            let m: u64 = t
                .exps()
                .iter()
                .zip(spec.components())
                .map(|(&ik, c)| c.p().pow(ik))
                .product();
            assert_eq!(
                spec.phi(&t).unwrap(),
                BigUint::from(classical_phi(&factor(m).unwrap())),
                "tuple {t}"
            );
        }
    }

    #[test]
    fn mobius_closed_form() {
        let spec = z24_spec();
        let t = |v: Vec<u32>| spec.tuple(v).unwrap();
        assert_eq!(spec.mobius(&t(vec![1, 1]), &t(vec![1, 1])).unwrap(), 1);
        assert_eq!(spec.mobius(&t(vec![1, 1]), &t(vec![0, 0])).unwrap(), 1);
        assert_eq!(spec.mobius(&t(vec![1, 0]), &t(vec![0, 0])).unwrap(), -1);
        assert_eq!(spec.mobius(&t(vec![2, 0]), &t(vec![0, 0])).unwrap(), 0);
        // j above i in one coordinate gives zero, not an error
        assert_eq!(spec.mobius(&t(vec![0, 0]), &t(vec![1, 0])).unwrap(), 0);
    }

    #[test]
    fn mobius_matches_generic_recursion_on_grids() {
        // all specs with s ≤ 3 and e_k ≤ 3, with q varying per slot
        let qs = [2u64, 3, 4];
        for s in 1..=3usize {
            let mut es = vec![1u32; s];
            loop {
                let pairs: Vec<(u64, u32)> =
                    (0..s).map(|k| (qs[k], es[k])).collect();
                let spec = PirSpec::from_pairs(&pairs).unwrap();
                let grid: Vec<ExponentTuple> = spec.tuples().collect();
                let poset = FinitePoset::build(grid.clone(), |a, b| a.leq(b)).unwrap();
                for i in &grid {
                    for j in &grid {
                        if j.leq(i) {
                            assert_eq!(
                                spec.mobius(i, j).unwrap(),
                                poset.mobius(i, j).unwrap(),
                                "spec {spec} i={i} j={j}"
                            );
                        } else {
                            assert_eq!(spec.mobius(i, j).unwrap(), 0);
                        }
                    }
                }
                // odometer over e_k ∈ [1, 3]
                let mut k = 0;
                loop {
                    if k == s {
                        break;
                    }
                    if es[k] < 3 {
                        es[k] += 1;
                        break;
                    }
                    es[k] = 1;
                    k += 1;
                }
                if k == s {
                    break;
                }
            }
        }
    }

    #[test]
    fn weight_closed_form_known_values() {
        let spec = z24_spec();
        let lambda = LambdaRational::one();
        let t = |v: Vec<u32>| spec.tuple(v).unwrap();
        assert!(spec.weight(&spec.bottom(), &lambda).unwrap().is_zero());
        assert_eq!(spec.weight(&t(vec![1, 1]), &lambda).unwrap(), lam(1, 2));
        assert_eq!(spec.weight(&t(vec![0, 1]), &lambda).unwrap(), lam(3, 2));
        assert_eq!(spec.weight(&t(vec![1, 0]), &lambda).unwrap(), lam(2, 1));
        assert_eq!(spec.weight(&t(vec![2, 1]), &lambda).unwrap(), lam(1, 1));
        // λ scales linearly
        assert_eq!(spec.weight(&t(vec![1, 1]), &lam(7, 3)).unwrap(), lam(7, 6));
    }

    #[test]
    fn chain_weight_three_cases() {
        let lambda = LambdaRational::one();
        let c = ChainRingParams::new(2, 2).unwrap(); // Z_4
        assert!(c.chain_weight(2, &lambda).unwrap().is_zero());
        assert_eq!(c.chain_weight(1, &lambda).unwrap(), lam(2, 1));
        assert_eq!(c.chain_weight(0, &lambda).unwrap(), lam(1, 1));
        assert!(c.chain_weight(3, &lambda).is_err());

        let c = ChainRingParams::new(3, 1).unwrap(); // F_3
        assert_eq!(c.chain_weight(0, &lambda).unwrap(), lam(3, 2));
        // normalized to λ = (q−1)/q this is the Hamming weight
        assert_eq!(c.chain_weight(0, &lam(2, 3)).unwrap(), lam(1, 1));
    }

    #[test]
    fn chain_weight_agrees_with_grid_weight() {
        let lambda = lam(7, 3);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 31, 32] {
            for e in 1..=6u32 {
                let params = ChainRingParams::new(q, e).unwrap();
                let spec = PirSpec::new(vec![params]).unwrap();
                for ibar in 0..=e {
                    let i = spec.tuple(vec![e - ibar]).unwrap();
                    assert_eq!(
                        params.chain_weight(ibar, &lambda).unwrap(),
                        spec.weight(&i, &lambda).unwrap(),
                        "q={q} e={e} ibar={ibar}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_table_small_rings() {
        let lambda = LambdaRational::one();

        // the binary field: nonzero elements all weigh 2λ
        let f2 = PirSpec::from_pairs(&[(2, 1)]).unwrap();
        let table = f2.weight_table(&lambda).unwrap();
        assert_eq!(table.len(), 2);
        assert!(table[&f2.bottom()].is_zero());
        assert_eq!(table[&f2.top()], lam(2, 1));

        // the grid of Z_24 carries exactly the classical weight values
        let spec = z24_spec();
        let table = spec.weight_table(&lambda).unwrap();
        assert_eq!(table.len(), 8);
        let t = |v: Vec<u32>| spec.tuple(v).unwrap();
        assert_eq!(table[&t(vec![0, 0])], LambdaRational::zero());
        assert_eq!(table[&t(vec![0, 1])], lam(3, 2));
        assert_eq!(table[&t(vec![1, 0])], lam(2, 1));
        assert_eq!(table[&t(vec![1, 1])], lam(1, 2));
        assert_eq!(table[&t(vec![2, 0])], lam(1, 1));
        assert_eq!(table[&t(vec![2, 1])], lam(1, 1));
        assert_eq!(table[&t(vec![3, 0])], lam(1, 1));
        assert_eq!(table[&t(vec![3, 1])], lam(1, 1));

        // galois ring flavor: GR(16) with q = 4, e = 2
        let gr = PirSpec::from_pairs(&[(4, 2)]).unwrap();
        let table = gr.weight_table(&lambda).unwrap();
        let values: Vec<String> = table.values().map(|w| w.to_string()).collect();
        assert_eq!(values, ["0", "4/3λ", "λ"]);
    }

    #[test]
    fn weight_table_rejects_huge_grids() {
        let spec = PirSpec::from_pairs(&[(2, 1_000_000)]).unwrap();
        assert!(matches!(
            spec.weight_table(&LambdaRational::one()),
            Err(RingSpecError::GridTooLarge { .. })
        ));
        // 101^4 tuples
        let spec = PirSpec::from_pairs(&[(2, 100), (3, 100), (5, 100), (7, 100)]).unwrap();
        assert!(matches!(
            spec.weight_table(&LambdaRational::one()),
            Err(RingSpecError::GridTooLarge { .. })
        ));
    }

    #[test]
    fn phi_sums_give_ideal_sizes() {
        // Σ_{j ≤ i} φ(j) = ∏ q_k^{i_k}, the size of the ideal at i
        for pairs in [vec![(2u64, 3u32), (3, 1)], vec![(4, 2)], vec![(2, 2), (3, 2), (5, 1)]] {
            let spec = PirSpec::from_pairs(&pairs).unwrap();
            let grid: Vec<ExponentTuple> = spec.tuples().collect();
            for i in &grid {
                let total: BigUint = grid
                    .iter()
                    .filter(|j| j.leq(i))
                    .map(|j| spec.phi(j).unwrap())
                    .sum();
                let size: BigUint = i
                    .exps()
                    .iter()
                    .zip(spec.components())
                    .map(|(&ik, c)| BigUint::from(c.q()).pow(ik))
                    .product();
                assert_eq!(total, size, "spec {spec} i={i}");
            }
        }
    }

    #[test]
    fn weights_satisfy_averaging_axiom_symbolically() {
        // Σ_{j ≤ i} φ(j)·w(j) = λ·|ideal at i| for every nonzero ideal
        for lambda in [LambdaRational::one(), lam(1, 2), lam(7, 3)] {
            for pairs in [vec![(2u64, 3u32), (3, 1)], vec![(4, 2)], vec![(8, 1), (9, 2)]] {
                let spec = PirSpec::from_pairs(&pairs).unwrap();
                let grid: Vec<ExponentTuple> = spec.tuples().collect();
                for i in grid.iter().filter(|i| !i.is_bottom()) {
                    let mut total = LambdaRational::zero();
                    for j in grid.iter().filter(|j| j.leq(i)) {
                        let phi = BigRational::from_integer(BigInt::from(spec.phi(j).unwrap()));
                        total += &(&spec.weight(j, &lambda).unwrap() * &phi);
                    }
                    let size: BigUint = i
                        .exps()
                        .iter()
                        .zip(spec.components())
                        .map(|(&ik, c)| BigUint::from(c.q()).pow(ik))
                        .product();
                    let expected =
                        lambda.scaled(&BigRational::from_integer(BigInt::from(size)));
                    assert_eq!(total, expected, "spec {spec} i={i} λ={lambda}");
                }
            }
        }
    }

    #[test]
    fn grid_iteration_is_lexicographic_and_complete() {
        let spec = z24_spec();
        let tuples: Vec<String> = spec.tuples().map(|t| t.to_string()).collect();
        assert_eq!(
            tuples,
            ["(0,0)", "(0,1)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(3,0)", "(3,1)"]
        );
        assert_eq!(spec.grid_size(), 8);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn complement_is_an_involution(
            qe in proptest::collection::vec((0usize..4, 1u32..5), 1..4),
            seed in 0u64..1000,
        ) {
            let qs = [2u64, 3, 5, 7];
            let pairs: Vec<(u64, u32)> = qe.iter().map(|&(qi, e)| (qs[qi], e)).collect();
            let spec = PirSpec::from_pairs(&pairs).unwrap();
            let exps: Vec<u32> = spec
                .components()
                .iter()
                .enumerate()
                .map(|(k, c)| ((seed >> k) % (c.e() as u64 + 1)) as u32)
                .collect();
            let i = spec.tuple(exps).unwrap();
            let twice = spec.complement(&spec.complement(&i).unwrap()).unwrap();
            prop_assert_eq!(twice, i);
        }

        #[test]
        fn weight_is_lambda_off_the_socle_band(
            e1 in 1u32..5,
            e2 in 1u32..5,
            i1 in 0u32..5,
            i2 in 0u32..5,
        ) {
            prop_assume!(i1 <= e1 && i2 <= e2);
            let spec = PirSpec::from_pairs(&[(2, e1), (3, e2)]).unwrap();
            let i = spec.tuple(vec![i1, i2]).unwrap();
            let w = spec.weight(&i, &LambdaRational::one()).unwrap();
            // μ(i, 0) vanishes exactly when some coordinate exceeds 1
            if i1 > 1 || i2 > 1 {
                prop_assert_eq!(w, LambdaRational::one());
            }
        }
    }
}
