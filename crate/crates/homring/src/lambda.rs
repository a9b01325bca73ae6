//! Weight values as exact rational multiples of the free scalar λ.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational multiple of the homogeneous-weight scalar λ.
///
/// Every weight in this crate is linear in λ, so values are stored as the
/// coefficient alone.  The coefficient is always reduced with a positive
/// denominator (num-rational keeps that canonical form for us).
/// `Display` renders the symbolic form (`0`, `λ`, `1/2λ`, `2λ`); when λ has
/// been bound to a concrete rational, callers multiply it in and print the
/// plain coefficient instead.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LambdaRational(BigRational);

impl LambdaRational {
    pub fn zero() -> Self {
        LambdaRational(BigRational::zero())
    }

    /// The unit weight 1·λ.
    pub fn one() -> Self {
        LambdaRational(BigRational::one())
    }

    /// Builds `num/den · λ`. Returns `None` when `den` is zero.
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(LambdaRational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_integer(n: i64) -> Self {
        LambdaRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        LambdaRational(r)
    }

    /// The coefficient of λ, reduced, positive denominator.
    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The closed-form weight `λ · (1 − μ/φ) = λ · (φ − μ)/φ`.
    ///
    /// Every weight route in the crate funnels through this once it has
    /// produced its Möbius value and its phi value.
    pub fn weight_from(mu: i64, phi: &BigUint, lambda: &LambdaRational) -> LambdaRational {
        let phi = BigInt::from(phi.clone());
        let base = BigRational::new(&phi - BigInt::from(mu), phi);
        LambdaRational(&lambda.0 * base)
    }

    /// Multiplies the coefficient by an exact rational.
    pub fn scaled(&self, by: &BigRational) -> LambdaRational {
        LambdaRational(&self.0 * by)
    }

    /// Renders the bare coefficient (`0`, `1`, `1/2`), with no λ suffix.
    pub fn coefficient_string(&self) -> String {
        let den = self.0.denom();
        if den.is_one() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), den)
        }
    }
}

impl fmt::Display for LambdaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        if self.0.is_one() {
            return write!(f, "λ");
        }
        write!(f, "{}λ", self.coefficient_string())
    }
}

impl Default for LambdaRational {
    fn default() -> Self {
        LambdaRational::zero()
    }
}

/// Parses `p`, `p/q`, or `-p/q` as an exact rational coefficient.
impl FromStr for LambdaRational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("invalid rational `{s}`: bad numerator"))?;
        let den: BigInt = match den {
            Some(d) => d
                .parse()
                .map_err(|_| format!("invalid rational `{s}`: bad denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(format!("invalid rational `{s}`: denominator is zero"));
        }
        Ok(LambdaRational(BigRational::new(num, den)))
    }
}

impl Add for LambdaRational {
    type Output = LambdaRational;
    fn add(self, rhs: LambdaRational) -> LambdaRational {
        LambdaRational(self.0 + rhs.0)
    }
}

impl Add for &LambdaRational {
    type Output = LambdaRational;
    fn add(self, rhs: &LambdaRational) -> LambdaRational {
        LambdaRational(&self.0 + &rhs.0)
    }
}

impl AddAssign<&LambdaRational> for LambdaRational {
    fn add_assign(&mut self, rhs: &LambdaRational) {
        self.0 += &rhs.0;
    }
}

impl Sub for &LambdaRational {
    type Output = LambdaRational;
    fn sub(self, rhs: &LambdaRational) -> LambdaRational {
        LambdaRational(&self.0 - &rhs.0)
    }
}

impl Mul<&BigRational> for &LambdaRational {
    type Output = LambdaRational;
    fn mul(self, rhs: &BigRational) -> LambdaRational {
        LambdaRational(&self.0 * rhs)
    }
}

impl Sum for LambdaRational {
    fn sum<I: Iterator<Item = LambdaRational>>(iter: I) -> LambdaRational {
        let mut acc = LambdaRational::zero();
        for v in iter {
            acc += &v;
        }
        acc
    }
}
