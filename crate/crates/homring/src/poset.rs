//! Finite posets with a generic Möbius function.
//!
//! The poset is materialized as a bit matrix and validated on
//! construction, so every downstream computation can trust that `≤` is
//! reflexive, antisymmetric, and transitive.  Ring-side callers map ideal
//! inclusion `I ⊇ J` to `J ≤ I`, keeping a single `≤` convention here.
//!
//! The Möbius function is computed by the recursion anchored at the lower
//! argument: `μ(b, b) = 1` and, for `b < a`,
//!
//! ```text
//! μ(a, b) = − Σ_{b ≤ z < a} μ(z, b)
//! ```
//!
//! Values are memoized per poset instance behind a lock, so a shared poset
//! can serve Möbius queries from several threads.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Hard cap on poset size; everything here is desk scale.
pub const MAX_ELEMENTS: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset has {0} elements, the maximum is {max}", max = MAX_ELEMENTS)]
    TooLarge(usize),
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(String),
    #[error("relation is not antisymmetric: {0} ≤ {1} and {1} ≤ {0}")]
    NotAntisymmetric(String, String),
    #[error("relation is not transitive: {0} ≤ {1} and {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(String, String, String),
    #[error("{0} is not an element of the poset")]
    NotAnElement(String),
    #[error("elements {1} and {0} are incomparable")]
    Incomparable(String, String),
    #[error("tuple arity {got} does not match the {expected} poset factors")]
    ArityMismatch { expected: usize, got: usize },
    #[error("no value supplied for element {0}")]
    MissingValue(String),
    #[error("Möbius accumulator overflowed i64")]
    Overflow,
}

fn describe<T: Debug>(t: &T) -> String {
    format!("{t:?}")
}

/// A finite partially ordered set over opaque elements.
pub struct FinitePoset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    // up[a] is the bitset of all b with a ≤ b.
    up: Vec<Vec<u64>>,
    // memoized Möbius values keyed (upper, lower)
    memo: RwLock<HashMap<(usize, usize), i64>>,
}

impl<T: Clone + Eq + Hash + Debug> FinitePoset<T> {
    /// Materializes `leq` over `elements` and verifies the poset axioms.
    /// The error names a witness pair (or triple) when an axiom fails.
    pub fn build(
        elements: Vec<T>,
        leq: impl Fn(&T, &T) -> bool,
    ) -> Result<FinitePoset<T>, PosetError> {
        let n = elements.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, el) in elements.iter().enumerate() {
            if index.insert(el.clone(), i).is_some() {
                return Err(PosetError::DuplicateElement(describe(el)));
            }
        }
        let words = n.div_ceil(64);
        let mut up = vec![vec![0u64; words]; n];
        for a in 0..n {
            for b in 0..n {
                if leq(&elements[a], &elements[b]) {
                    up[a][b / 64] |= 1 << (b % 64);
                }
            }
        }
        let bit = |row: &Vec<u64>, j: usize| row[j / 64] >> (j % 64) & 1 == 1;
        for a in 0..n {
            if !bit(&up[a], a) {
                return Err(PosetError::NotReflexive(describe(&elements[a])));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if bit(&up[a], b) && bit(&up[b], a) {
                    return Err(PosetError::NotAntisymmetric(
                        describe(&elements[a]),
                        describe(&elements[b]),
                    ));
                }
            }
        }
        // a ≤ b forces up[b] ⊆ up[a]; a violating bit names the witness c.
        for a in 0..n {
            for b in 0..n {
                if bit(&up[a], b) {
                    for w in 0..words {
                        let missing = up[b][w] & !up[a][w];
                        if missing != 0 {
                            let c = w * 64 + missing.trailing_zeros() as usize;
                            return Err(PosetError::NotTransitive(
                                describe(&elements[a]),
                                describe(&elements[b]),
                                describe(&elements[c]),
                            ));
                        }
                    }
                }
            }
        }
        Ok(FinitePoset {
            elements,
            index,
            up,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn contains(&self, t: &T) -> bool {
        self.index.contains_key(t)
    }

    fn index_of(&self, t: &T) -> Result<usize, PosetError> {
        self.index
            .get(t)
            .copied()
            .ok_or_else(|| PosetError::NotAnElement(describe(t)))
    }

    fn leq_idx(&self, a: usize, b: usize) -> bool {
        self.up[a][b / 64] >> (b % 64) & 1 == 1
    }

    /// Whether `a ≤ b`.
    pub fn leq(&self, a: &T, b: &T) -> Result<bool, PosetError> {
        Ok(self.leq_idx(self.index_of(a)?, self.index_of(b)?))
    }

    /// The Möbius value `μ(a, b)` for `b ≤ a`.
    pub fn mobius(&self, a: &T, b: &T) -> Result<i64, PosetError> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        if !self.leq_idx(bi, ai) {
            return Err(PosetError::Incomparable(describe(a), describe(b)));
        }
        self.mobius_idx(ai, bi)
    }

    fn mobius_idx(&self, a: usize, b: usize) -> Result<i64, PosetError> {
        if let Some(&v) = self.memo.read().unwrap().get(&(a, b)) {
            return Ok(v);
        }
        self.sweep_lower(b)?;
        Ok(*self
            .memo
            .read()
            .unwrap()
            .get(&(a, b))
            .expect("sweep fills every pair above the lower element"))
    }

    /// Fills `μ(z, b)` for every `z ≥ b` in one topological pass.
    fn sweep_lower(&self, b: usize) -> Result<(), PosetError> {
        let upset: Vec<usize> = (0..self.len()).filter(|&z| self.leq_idx(b, z)).collect();
        // Count of interval elements below z orders z topologically.
        let mut order: Vec<(usize, usize)> = upset
            .iter()
            .map(|&z| {
                let below = upset.iter().filter(|&&y| self.leq_idx(y, z)).count();
                (below, z)
            })
            .collect();
        order.sort_unstable();
        let mut vals: HashMap<usize, i64> = HashMap::with_capacity(upset.len());
        for &(_, z) in &order {
            let v = if z == b {
                1i64
            } else {
                let mut acc = 0i64;
                for (&y, &vy) in &vals {
                    if y != z && self.leq_idx(y, z) {
                        acc = acc.checked_add(vy).ok_or(PosetError::Overflow)?;
                    }
                }
                acc.checked_neg().ok_or(PosetError::Overflow)?
            };
            vals.insert(z, v);
        }
        let mut memo = self.memo.write().unwrap();
        for (z, v) in vals {
            memo.entry((z, b)).or_insert(v);
        }
        Ok(())
    }

    /// Extracts the full Möbius table over every comparable pair.
    pub fn mobius_table(&self) -> Result<MobiusTable<T>, PosetError> {
        let mut entries = HashMap::new();
        for b in 0..self.len() {
            self.sweep_lower(b)?;
            let memo = self.memo.read().unwrap();
            for a in 0..self.len() {
                if self.leq_idx(b, a) {
                    entries.insert(
                        (self.elements[a].clone(), self.elements[b].clone()),
                        memo[&(a, b)],
                    );
                }
            }
        }
        Ok(MobiusTable { entries })
    }

    /// Möbius inversion: given `g`, returns `f` with
    /// `f(a) = Σ_{b ≤ a} μ(a, b) · g(b)`, so that `g(a) = Σ_{b ≤ a} f(b)`.
    ///
    /// `g` must supply a value for every element.
    pub fn mobius_invert(
        &self,
        g: &HashMap<T, BigRational>,
    ) -> Result<HashMap<T, BigRational>, PosetError> {
        for el in &self.elements {
            if !g.contains_key(el) {
                return Err(PosetError::MissingValue(describe(el)));
            }
        }
        let mut f = HashMap::with_capacity(self.len());
        for a in 0..self.len() {
            let mut acc = BigRational::zero();
            for b in 0..self.len() {
                if self.leq_idx(b, a) {
                    let mu = self.mobius_idx(a, b)?;
                    acc += &g[&self.elements[b]] * BigRational::from_integer(mu.into());
                }
            }
            f.insert(self.elements[a].clone(), acc);
        }
        Ok(f)
    }
}

/// A computed Möbius table, detached from its poset.
#[derive(Debug, Clone)]
pub struct MobiusTable<T> {
    entries: HashMap<(T, T), i64>,
}

impl<T: Clone + Eq + Hash + Debug> MobiusTable<T> {
    /// The value `μ(a, b)`, or `None` when the pair is not comparable.
    pub fn get(&self, a: &T, b: &T) -> Option<i64> {
        self.entries.get(&(a.clone(), b.clone())).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Möbius value of a product poset as the product of componentwise values:
/// `μ((a_1,…,a_s), (b_1,…,b_s)) = ∏ μ_k(a_k, b_k)`.
pub fn product_mobius<T: Clone + Eq + Hash + Debug>(
    factors: &[MobiusTable<T>],
    a: &[T],
    b: &[T],
) -> Result<i64, PosetError> {
    if a.len() != factors.len() {
        return Err(PosetError::ArityMismatch { expected: factors.len(), got: a.len() });
    }
    if b.len() != factors.len() {
        return Err(PosetError::ArityMismatch { expected: factors.len(), got: b.len() });
    }
    let mut acc = 1i64;
    for (k, table) in factors.iter().enumerate() {
        let mu = table
            .get(&a[k], &b[k])
            .ok_or_else(|| PosetError::Incomparable(describe(&a[k]), describe(&b[k])))?;
        acc = acc.checked_mul(mu).ok_or(PosetError::Overflow)?;
    }
    Ok(acc)
}

/// The chain `0 ≤ 1 ≤ … ≤ e` as a poset.
pub fn chain_poset(e: u32) -> FinitePoset<u32> {
    FinitePoset::build((0..=e).collect(), |a, b| a <= b)
        .expect("a chain is a valid poset")
}
