//! Brute-force ground truth for everything the closed forms claim.
//!
//! Nothing in this module uses a number-theoretic shortcut: ideals of
//! `Z_n` are enumerated by multiplying out every principal ideal,
//! inclusion is subset testing on element lists, the generator count φ is
//! counted directly, and Möbius values come from the generic recursion in
//! [`crate::poset`] over the materialized inclusion order.  On top of that
//! sit two checkers:
//!
//! * [`verify_axioms`] tests a candidate weight function against the
//!   defining axioms by literal summation: `w(0) = 0`, constancy on
//!   association classes, and `Σ_{y ∈ I} w(y) = λ·|I|` for every nonzero
//!   ideal `I`, with every residual reported exactly.  It also refolds the
//!   helper table `t(I) = λ·|I|` through Möbius inversion and compares the
//!   inverted values against the candidate weight.
//! * [`cross_check_routes`] computes the full weight table five
//!   independent ways and records any element where the routes disagree.

use thiserror::Error;

use crate::lambda::LambdaRational;
use crate::numtheory::mul_mod;
use crate::poset::{FinitePoset, PosetError};
use crate::zn::{ZnError, ZnRing};

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;

/// Largest modulus the brute-force oracle will materialize.
pub const MAX_ORACLE_N: u64 = 5000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("oracle modulus must be between 2 and {max}, got {0}", max = MAX_ORACLE_N)]
    OutOfRange(u64),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Ring(#[from] ZnError),
}

struct IdealData {
    /// sorted element list
    elements: Vec<u64>,
    /// how many x generate exactly this ideal (the counted φ)
    generator_count: u64,
}

/// The poset of principal ideals of `Z_n`, materialized by enumeration.
///
/// Inclusion `J ⊆ I` is mapped to `J ≤ I` in the underlying poset.
pub struct IdealPoset {
    n: u64,
    ideals: Vec<IdealData>,
    /// x → index of the ideal x generates
    ideal_of: Vec<usize>,
    poset: FinitePoset<usize>,
    zero: usize,
    full: usize,
}

/// Enumerates every principal ideal `{r·x : r ∈ Z_n}` of `Z_n`, dedupes,
/// counts generators, and validates the inclusion order.
pub fn enumerate_ideals(n: u64) -> Result<IdealPoset, OracleError> {
    if !(2..=MAX_ORACLE_N).contains(&n) {
        return Err(OracleError::OutOfRange(n));
    }
    let mut ideals: Vec<IdealData> = Vec::new();
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut ideal_of = vec![0usize; n as usize];
    let mut member = vec![false; n as usize];
    for x in 0..n {
        member.fill(false);
        for r in 0..n {
            member[mul_mod(r, x, n) as usize] = true;
        }
        let elements: Vec<u64> = (0..n).filter(|&y| member[y as usize]).collect();
        let idx = match seen.get(&elements) {
            Some(&idx) => idx,
            None => {
                let idx = ideals.len();
                seen.insert(elements.clone(), idx);
                ideals.push(IdealData { elements, generator_count: 0 });
                idx
            }
        };
        ideals[idx].generator_count += 1;
        ideal_of[x as usize] = idx;
    }
    let subset = |a: &[u64], b: &[u64]| -> bool {
        let mut it = b.iter();
        a.iter().all(|x| it.any(|y| y == x))
    };
    let indices: Vec<usize> = (0..ideals.len()).collect();
    let poset = FinitePoset::build(indices, |&a, &b| {
        subset(&ideals[a].elements, &ideals[b].elements)
    })?;
    let zero = ideal_of[0];
    let full = ideal_of[1];
    Ok(IdealPoset { n, ideals, ideal_of, poset, zero, full })
}

impl IdealPoset {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ideal_count(&self) -> usize {
        self.ideals.len()
    }

    pub fn elements_of(&self, idx: usize) -> &[u64] {
        &self.ideals[idx].elements
    }

    pub fn size_of(&self, idx: usize) -> u64 {
        self.ideals[idx].elements.len() as u64
    }

    /// The counted generator number φ(I).
    pub fn generator_count(&self, idx: usize) -> u64 {
        self.ideals[idx].generator_count
    }

    /// Index of the ideal generated by `x`.
    pub fn ideal_of(&self, x: u64) -> usize {
        self.ideal_of[(x % self.n) as usize]
    }

    /// All generators of the ideal, i.e. the association class.
    pub fn generators_of(&self, idx: usize) -> Vec<u64> {
        (0..self.n).filter(|&x| self.ideal_of[x as usize] == idx).collect()
    }

    /// A stable label for reports: the smallest nonzero element, or 0 for
    /// the zero ideal.
    pub fn label_of(&self, idx: usize) -> u64 {
        self.ideals[idx].elements.get(1).copied().unwrap_or(0)
    }

    pub fn zero_ideal(&self) -> usize {
        self.zero
    }

    pub fn full_ideal(&self) -> usize {
        self.full
    }

    /// Whether ideal `a` is contained in ideal `b`.
    pub fn included(&self, a: usize, b: usize) -> Result<bool, OracleError> {
        Ok(self.poset.leq(&a, &b)?)
    }

    /// Möbius value `μ(upper, lower)` of the inclusion poset.
    pub fn mobius(&self, upper: usize, lower: usize) -> Result<i64, OracleError> {
        Ok(self.poset.mobius(&upper, &lower)?)
    }

    /// Recovers φ(I) by Möbius inversion of the size function:
    /// `φ(I) = Σ_{J ⊆ I} μ(I, J) · |J|`.
    pub fn phi_via_inversion(&self, idx: usize) -> Result<i64, OracleError> {
        let mut total = 0i64;
        for j in 0..self.ideal_count() {
            if self.poset.leq(&j, &idx)? {
                total += self.mobius(idx, j)? * self.size_of(j) as i64;
            }
        }
        Ok(total)
    }

    /// The weight of `x` computed entirely inside the poset:
    /// `λ · (1 − μ(Rx, 0) / φ(x))` with the generic Möbius recursion and
    /// the counted φ.
    pub fn weight_via_poset(
        &self,
        x: u64,
        lambda: &LambdaRational,
    ) -> Result<LambdaRational, OracleError> {
        let idx = self.ideal_of(x);
        let mu = self.mobius(idx, self.zero)?;
        let phi = self.generator_count(idx);
        Ok(LambdaRational::weight_from(mu, &phi.into(), lambda))
    }
}

/// A witness that two elements of one association class got different
/// weights.
#[derive(Debug, Clone)]
pub struct H1Witness {
    pub x: u64,
    pub y: u64,
    pub weight_x: LambdaRational,
    pub weight_y: LambdaRational,
}

/// The averaging check for one nonzero ideal: `residual` is
/// `Σ_{y ∈ I} w(y) − λ·|I|` and must be exactly zero.
#[derive(Debug, Clone)]
pub struct H2Residual {
    pub ideal_label: u64,
    pub size: u64,
    pub residual: LambdaRational,
}

/// One entry of the helper table `t(I)`: zero at the zero ideal, `λ·|I|`
/// elsewhere.
#[derive(Debug, Clone)]
pub struct TEntry {
    pub ideal_label: u64,
    pub value: LambdaRational,
}

/// A mismatch between the candidate weight of a class and the weight
/// recovered by inverting the helper table.
#[derive(Debug, Clone)]
pub struct InversionMismatch {
    pub ideal_label: u64,
    pub candidate: LambdaRational,
    pub inverted: LambdaRational,
}

/// An element where two weight routes disagreed, with every route's value.
#[derive(Debug, Clone)]
pub struct RouteDisagreement {
    pub x: u64,
    pub values: Vec<(String, LambdaRational)>,
}

/// Everything the oracle found out about one ring and one λ.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub n: u64,
    pub lambda: LambdaRational,
    pub zero_weight_ok: bool,
    pub h1_witnesses: Vec<H1Witness>,
    pub h2_residuals: Vec<H2Residual>,
    pub t_table: Vec<TEntry>,
    pub inversion_mismatches: Vec<InversionMismatch>,
    pub route_disagreements: Vec<RouteDisagreement>,
    pub routes_checked: Vec<String>,
    /// weight tables per route, indexed by element value
    pub weight_tables: Vec<(String, Vec<LambdaRational>)>,
}

impl VerificationReport {
    /// True when every check that ran came back clean.
    pub fn pass(&self) -> bool {
        self.zero_weight_ok
            && self.h1_witnesses.is_empty()
            && self.h2_residuals.iter().all(|r| r.residual.is_zero())
            && self.inversion_mismatches.is_empty()
            && self.route_disagreements.is_empty()
    }
}

/// Verifies the homogeneous-weight axioms for `weight_fn` on `Z_n` by
/// literal summation over a freshly enumerated ideal poset.
pub fn verify_axioms(
    n: u64,
    weight_fn: impl Fn(u64) -> LambdaRational,
    lambda: &LambdaRational,
) -> Result<VerificationReport, OracleError> {
    let poset = enumerate_ideals(n)?;
    verify_axioms_on(&poset, weight_fn, lambda)
}

/// [`verify_axioms`] against an already-enumerated poset.
pub fn verify_axioms_on(
    poset: &IdealPoset,
    weight_fn: impl Fn(u64) -> LambdaRational,
    lambda: &LambdaRational,
) -> Result<VerificationReport, OracleError> {
    let n = poset.n();
    let weights: Vec<LambdaRational> = (0..n).map(&weight_fn).collect();
    let mut report = VerificationReport {
        n,
        lambda: lambda.clone(),
        zero_weight_ok: weights[0].is_zero(),
        ..VerificationReport::default()
    };

    // H1: within one association class all weights agree.
    for idx in 0..poset.ideal_count() {
        let class = poset.generators_of(idx);
        let first = class[0];
        for &y in &class[1..] {
            if weights[y as usize] != weights[first as usize] {
                report.h1_witnesses.push(H1Witness {
                    x: first,
                    y,
                    weight_x: weights[first as usize].clone(),
                    weight_y: weights[y as usize].clone(),
                });
            }
        }
    }

    // H2: literal sums over every nonzero ideal against λ·|I|, and the
    // helper table t.
    for idx in 0..poset.ideal_count() {
        let size = poset.size_of(idx);
        let t = if idx == poset.zero_ideal() {
            LambdaRational::zero()
        } else {
            lambda.scaled(&BigRational::from_integer(BigInt::from(size)))
        };
        report.t_table.push(TEntry { ideal_label: poset.label_of(idx), value: t });
        if idx == poset.zero_ideal() {
            continue;
        }
        let mut sum = LambdaRational::zero();
        for &y in poset.elements_of(idx) {
            sum += &weights[y as usize];
        }
        let expected = lambda.scaled(&BigRational::from_integer(BigInt::from(size)));
        report.h2_residuals.push(H2Residual {
            ideal_label: poset.label_of(idx),
            size,
            residual: &sum - &expected,
        });
    }

    // Invert t back through the Möbius function: the candidate weight of
    // each class must equal (Σ_{J ⊆ I} μ(I, J)·t(J)) / φ(I).
    for idx in 0..poset.ideal_count() {
        let mut acc = LambdaRational::zero();
        for j in 0..poset.ideal_count() {
            if poset.included(j, idx)? {
                let mu = poset.mobius(idx, j)?;
                let t = &report.t_table[j].value;
                acc += &t.scaled(&BigRational::from_integer(BigInt::from(mu)));
            }
        }
        let inverted = acc.scaled(&BigRational::new(
            BigInt::from(1),
            BigInt::from(poset.generator_count(idx)),
        ));
        let candidate = weights[poset.generators_of(idx)[0] as usize].clone();
        if inverted != candidate {
            report.inversion_mismatches.push(InversionMismatch {
                ideal_label: poset.label_of(idx),
                candidate,
                inverted,
            });
        }
    }

    Ok(report)
}

/// Computes the weight table of `Z_n` five independent ways and records
/// every element where the routes disagree:
///
/// 1. `closed-form`: classical `μ` and `φ` of the class parameter,
/// 2. `ideal-poset`: generic Möbius recursion plus counted generators,
/// 3. `character-sum`: the class character sum,
/// 4. `unit-average`: the character averaged over all units,
/// 5. `chain-product`: the symbolic grid weight at the element's
///    exponent tuple.
///
/// A character sum that drifts past the rounding guard is a hard error,
/// not a disagreement.
pub fn cross_check_routes(
    n: u64,
    lambda: &LambdaRational,
) -> Result<VerificationReport, OracleError> {
    let poset = enumerate_ideals(n)?;
    cross_check_routes_on(&poset, lambda)
}

/// [`cross_check_routes`] against an already-enumerated poset.
pub fn cross_check_routes_on(
    poset: &IdealPoset,
    lambda: &LambdaRational,
) -> Result<VerificationReport, OracleError> {
    let n = poset.n();
    let ring = ZnRing::new(n)?;
    let route_names = [
        "closed-form",
        "ideal-poset",
        "character-sum",
        "unit-average",
        "chain-product",
    ];
    let mut tables: Vec<Vec<LambdaRational>> =
        route_names.iter().map(|_| Vec::with_capacity(n as usize)).collect();
    for x in 0..n {
        let el = ring.element(x);
        tables[0].push(el.weight(lambda));
        tables[1].push(poset.weight_via_poset(x, lambda)?);
        tables[2].push(el.weight_via_character(lambda)?);
        tables[3].push(el.weight_via_unit_average(lambda)?);
        tables[4].push(
            ring.spec()
                .weight(&el.exponent_tuple(), lambda)
                .expect("element tuples are bound to the ring spec"),
        );
    }
    let mut report = VerificationReport {
        n,
        lambda: lambda.clone(),
        zero_weight_ok: tables.iter().all(|t| t[0].is_zero()),
        routes_checked: route_names.iter().map(|s| s.to_string()).collect(),
        ..VerificationReport::default()
    };
    for x in 0..n as usize {
        if tables.iter().any(|t| t[x] != tables[0][x]) {
            report.route_disagreements.push(RouteDisagreement {
                x: x as u64,
                values: route_names
                    .iter()
                    .zip(&tables)
                    .map(|(name, t)| (name.to_string(), t[x].clone()))
                    .collect(),
            });
        }
    }
    report.weight_tables = route_names
        .iter()
        .map(|s| s.to_string())
        .zip(tables)
        .collect();
    Ok(report)
}

/// Runs both checkers, merging their findings into one report: the route
/// cross-check plus the axiom verification of the closed-form weight.
pub fn verify_ring(n: u64, lambda: &LambdaRational) -> Result<VerificationReport, OracleError> {
    let poset = enumerate_ideals(n)?;
    let ring = ZnRing::new(n)?;
    let mut report = cross_check_routes_on(&poset, lambda)?;
    let axioms = verify_axioms_on(&poset, |x| ring.element(x).weight(lambda), lambda)?;
    report.zero_weight_ok = report.zero_weight_ok && axioms.zero_weight_ok;
    report.h1_witnesses = axioms.h1_witnesses;
    report.h2_residuals = axioms.h2_residuals;
    report.t_table = axioms.t_table;
    report.inversion_mismatches = axioms.inversion_mismatches;
    Ok(report)
}
