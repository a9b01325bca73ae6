//! Concrete arithmetic in `Z_n`.
//!
//! Every element factors as `x = u · n/m` with `m = n / gcd(x, n)` and `u`
//! a unit, so association classes, ideals, and weights are all indexed by
//! divisors of `n`.  The homogeneous weight of `x` collapses to the
//! classical Möbius and phi functions of `m`:
//!
//! ```text
//! w(x) = λ · (1 − μ(m) / φ(m))
//! ```
//!
//! Beyond that closed form, this module evaluates the weight through the
//! generating character `χ(y) = exp(2πi·y/n)`: the Möbius value is the
//! character sum over the association class, and averaging `χ` over all
//! units gives the weight directly.  Those two routes pass through
//! floating point, so their sums are rounded back to integers behind a
//! hard residue guard; drift larger than the guard is an error, never a
//! silently wrong table.

use std::f64::consts::TAU;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_integer::gcd;
use thiserror::Error;

use crate::lambda::LambdaRational;
use crate::numtheory::{
    classical_mobius, classical_phi, divisors, factor, is_prime, mul_mod, FactoredInteger,
};
use crate::ringspec::{ExponentTuple, PirSpec};

/// Maximum distance from the nearest integer a rounded character sum may
/// have.
pub const ROUNDING_GUARD: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum ZnError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("character sum {re}{im:+}i is {residue:.3e} from the nearest integer, over the {guard:.0e} guard")]
    NumericalGuard { re: f64, im: f64, residue: f64, guard: f64 },
    #[error("the zero element has no such form")]
    ZeroElement,
    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("nilpotency index must be at least 1")]
    ZeroNilpotency,
    #[error("element {x} is out of range for modulus {modulus}")]
    ElementOutOfRange { x: u64, modulus: u64 },
    #[error("p^e does not fit in u64")]
    ModulusOverflow,
}

/// Rounds a complex value that is an integer in exact arithmetic,
/// enforcing the residue guard.
pub fn round_guarded(z: Complex64) -> Result<i64, ZnError> {
    let nearest = z.re.round();
    let residue = ((z.re - nearest).powi(2) + z.im.powi(2)).sqrt();
    if !residue.is_finite() || residue >= ROUNDING_GUARD {
        return Err(ZnError::NumericalGuard {
            re: z.re,
            im: z.im,
            residue,
            guard: ROUNDING_GUARD,
        });
    }
    Ok(nearest as i64)
}

/// Cached data of one association class, keyed by its parameter
/// m = n / gcd(x, n).
struct DivisorClass {
    mu: i64,
    phi: u64,
    /// exponent of each ring prime in m
    exps: Vec<u32>,
}

/// The ring `Z_n` with its divisor tables precomputed.
///
/// The ring is immutable after construction; the unit list is filled in
/// lazily but behaves as if precomputed.
pub struct ZnRing {
    n: u64,
    factored: FactoredInteger,
    spec: PirSpec,
    divisors: Vec<u64>,
    classes: Vec<DivisorClass>,
    phi_n: u64,
    units: OnceLock<Vec<u64>>,
}

impl ZnRing {
    pub fn new(n: u64) -> Result<ZnRing, ZnError> {
        if n < 2 {
            return Err(ZnError::ModulusTooSmall(n));
        }
        let factored = factor(n).expect("n is positive");
        let spec = PirSpec::from_pairs(
            &factored
                .factors()
                .iter()
                .map(|pp| (pp.prime, pp.exponent))
                .collect::<Vec<_>>(),
        )
        .expect("prime factors are prime powers");
        let divs = divisors(&factored);
        let classes = divs
            .iter()
            .map(|&m| {
                let fm = factor(m).expect("divisors are positive");
                let exps = factored
                    .factors()
                    .iter()
                    .map(|pp| {
                        fm.factors()
                            .iter()
                            .find(|fp| fp.prime == pp.prime)
                            .map_or(0, |fp| fp.exponent)
                    })
                    .collect();
                DivisorClass {
                    mu: classical_mobius(&fm),
                    phi: classical_phi(&fm),
                    exps,
                }
            })
            .collect();
        let phi_n = classical_phi(&factored);
        Ok(ZnRing {
            n,
            factored,
            spec,
            divisors: divs,
            classes,
            phi_n,
            units: OnceLock::new(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factored(&self) -> &FactoredInteger {
        &self.factored
    }

    /// The chain-ring product underlying `Z_n`: one factor `(p_k, e_k)`
    /// per prime, in increasing prime order.
    pub fn spec(&self) -> &PirSpec {
        &self.spec
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// `φ(n)`, the number of units.
    pub fn unit_count(&self) -> u64 {
        self.phi_n
    }

    pub fn units(&self) -> &[u64] {
        self.units
            .get_or_init(|| (1..self.n).filter(|&u| gcd(u, self.n) == 1).collect())
    }

    /// Wraps a value into the ring, reducing mod `n`.
    pub fn element(&self, value: u64) -> ZnElement<'_> {
        ZnElement { ring: self, value: value % self.n }
    }

    pub fn elements(&self) -> impl Iterator<Item = ZnElement<'_>> {
        (0..self.n).map(move |x| self.element(x))
    }

    fn class_for_m(&self, m: u64) -> &DivisorClass {
        let idx = self
            .divisors
            .binary_search(&m)
            .expect("m = n/gcd(x, n) is a divisor of n");
        &self.classes[idx]
    }

    /// The idempotent-like generator `ρ_k` of the k-th chain factor: the
    /// element that is `p_k` in coordinate `k` and `1` elsewhere under the
    /// Chinese remainder decomposition.
    pub fn rho(&self, k: usize) -> u64 {
        let parts = self.factored.factors();
        assert!(k < parts.len(), "component {k} out of range");
        let mut x = 0u64;
        let mut modulus = 1u64;
        for (l, pp) in parts.iter().enumerate() {
            let ml = pp.prime.pow(pp.exponent);
            let target = if l == k { pp.prime % ml } else { 1 };
            // lift x from `modulus` to `modulus · ml`
            let mut candidate = x;
            while candidate % ml != target {
                candidate += modulus;
            }
            x = candidate;
            modulus *= ml;
        }
        x
    }

    /// The generating character `χ(y) = exp(2πi·y/n)`.
    pub fn character(&self, y: u64) -> Complex64 {
        self.character_with(1, y).expect("1 is a unit")
    }

    /// The character `χ_a(y) = exp(2πi·a·y/n)`; any unit `a` generates.
    pub fn character_with(&self, a: u64, y: u64) -> Result<Complex64, ZnError> {
        if gcd(a % self.n, self.n) != 1 {
            return Err(ZnError::NotAUnit { a, n: self.n });
        }
        let arg = mul_mod(a % self.n, y % self.n, self.n);
        Ok(Complex64::from_polar(1.0, TAU * arg as f64 / self.n as f64))
    }
}

/// An element of a [`ZnRing`], always reduced into `[0, n)`.
#[derive(Clone, Copy)]
pub struct ZnElement<'r> {
    ring: &'r ZnRing,
    value: u64,
}

impl<'r> ZnElement<'r> {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> &'r ZnRing {
        self.ring
    }

    /// `gcd(x, n)`, the canonical generator of the ideal `Rx`.
    pub fn divisor_gcd(&self) -> u64 {
        gcd(self.value, self.ring.n)
    }

    /// The class parameter `m = n / gcd(x, n)`; `m = 1` exactly for 0.
    pub fn class_parameter(&self) -> u64 {
        self.ring.n / self.divisor_gcd()
    }

    /// Writes `x = u · n/m` with `u` the smallest nonnegative unit that
    /// works, which makes the form deterministic.  Returns `(u, m)`; the
    /// zero element yields `(1, 1)`.
    pub fn canonical_form(&self) -> (u64, u64) {
        let n = self.ring.n;
        let d = self.divisor_gcd();
        let m = n / d;
        let xp = self.value / d;
        let u = (xp..n)
            .step_by(m as usize)
            .find(|&u| gcd(u, n) == 1)
            .expect("every residue coprime to m lifts to a unit mod n");
        (u, m)
    }

    pub fn association_class(&self) -> ZnClass<'r> {
        ZnClass { ring: self.ring, d: self.divisor_gcd() }
    }

    /// Generator count of `Rx`, the size of the association class:
    /// `φ(x) = φ(m)`.
    pub fn ring_phi(&self) -> u64 {
        self.ring.class_for_m(self.class_parameter()).phi
    }

    /// Möbius value `μ(Rx, 0) = μ(m)` of the ideal interval below `Rx`.
    pub fn ring_mobius(&self) -> i64 {
        self.ring.class_for_m(self.class_parameter()).mu
    }

    /// The homogeneous weight `λ · (1 − μ(m)/φ(m))`.
    pub fn weight(&self, lambda: &LambdaRational) -> LambdaRational {
        let class = self.ring.class_for_m(self.class_parameter());
        LambdaRational::weight_from(class.mu, &class.phi.into(), lambda)
    }

    /// The weight by square-freeness cases instead of a Möbius value:
    /// `λ` when some prime enters `m` at least twice, otherwise
    /// `λ·(φ(m) ∓ 1)/φ(m)` by the parity of the number of primes in `m`.
    /// Defined for nonzero elements only.
    pub fn weight_case_form(&self, lambda: &LambdaRational) -> Result<LambdaRational, ZnError> {
        if self.value == 0 {
            return Err(ZnError::ZeroElement);
        }
        let class = self.ring.class_for_m(self.class_parameter());
        if class.exps.iter().any(|&i| i > 1) {
            return Ok(lambda.clone());
        }
        let beta = class.exps.iter().filter(|&&i| i == 1).count();
        let mu = if beta % 2 == 0 { 1 } else { -1 };
        Ok(LambdaRational::weight_from(mu, &class.phi.into(), lambda))
    }

    /// The exponent tuple of `m` over the ring's primes: the grid index of
    /// the ideal `Rx` in [`ZnRing::spec`].
    pub fn exponent_tuple(&self) -> ExponentTuple {
        let class = self.ring.class_for_m(self.class_parameter());
        self.ring
            .spec
            .tuple(class.exps.clone())
            .expect("divisor exponents fit the spec grid")
    }

    /// `μ(m)` recovered as the character sum over the association class.
    pub fn mobius_via_character(&self) -> Result<i64, ZnError> {
        let sum: Complex64 = self
            .association_class()
            .elements()
            .into_iter()
            .map(|y| self.ring.character(y))
            .sum();
        round_guarded(sum)
    }

    /// The weight through the class character sum:
    /// `λ · (1 − (Σ_{y ∈ x̃} χ(y)) / φ(x))`.
    pub fn weight_via_character(&self, lambda: &LambdaRational) -> Result<LambdaRational, ZnError> {
        let mu = self.mobius_via_character()?;
        Ok(LambdaRational::weight_from(mu, &self.ring_phi().into(), lambda))
    }

    /// The weight as the unit average of the character:
    /// `λ · (1 − (1/φ(n)) Σ_u χ(u·x))`.
    pub fn weight_via_unit_average(
        &self,
        lambda: &LambdaRational,
    ) -> Result<LambdaRational, ZnError> {
        let n = self.ring.n;
        let sum: Complex64 = self
            .ring
            .units()
            .iter()
            .map(|&u| self.ring.character(mul_mod(u, self.value, n)))
            .sum();
        let total = round_guarded(sum)?;
        Ok(LambdaRational::weight_from(total, &self.ring.phi_n.into(), lambda))
    }

    /// Order of the unit stabilizer `{u : u·x = x}`, counted directly.
    pub fn stabilizer_order(&self) -> u64 {
        let n = self.ring.n;
        self.ring
            .units()
            .iter()
            .filter(|&&u| mul_mod(u, self.value, n) == self.value)
            .count() as u64
    }
}

/// The association class of all elements generating one ideal of `Z_n`:
/// `{y : gcd(y, n) = d}`.
#[derive(Clone, Copy)]
pub struct ZnClass<'r> {
    ring: &'r ZnRing,
    d: u64,
}

impl ZnClass<'_> {
    /// The common gcd of class members with `n`.
    pub fn divisor_gcd(&self) -> u64 {
        self.d
    }

    pub fn class_parameter(&self) -> u64 {
        self.ring.n / self.d
    }

    /// `φ(m)`, the class size.
    pub fn size(&self) -> u64 {
        self.ring.class_for_m(self.class_parameter()).phi
    }

    pub fn contains(&self, y: u64) -> bool {
        gcd(y % self.ring.n, self.ring.n) == self.d
    }

    pub fn elements(&self) -> Vec<u64> {
        (0..self.ring.n).filter(|&y| gcd(y, self.ring.n) == self.d).collect()
    }
}

/// Writes a nonzero element of the chain ring `Z_{p^e}` uniquely as
/// `u · p^i` with `0 ≤ i < e` and `u` a unit reduced mod `p^{e−i}`.
pub fn chainring_unique_form(p: u64, e: u32, x: u64) -> Result<(u32, u64), ZnError> {
    if !is_prime(p) {
        return Err(ZnError::NotPrime(p));
    }
    if e == 0 {
        return Err(ZnError::ZeroNilpotency);
    }
    let modulus = p
        .checked_pow(e)
        .ok_or(ZnError::ModulusOverflow)?;
    if x == 0 {
        return Err(ZnError::ZeroElement);
    }
    if x >= modulus {
        return Err(ZnError::ElementOutOfRange { x, modulus });
    }
    let mut i = 0u32;
    let mut u = x;
    while u % p == 0 {
        u /= p;
        i += 1;
    }
    Ok((i, u))
}
