//! Exact arithmetic for homogeneous weights on finite principal ideal rings.
//!
//! A homogeneous weight on a finite ring `R` is a function `w` with
//! `w(0) = 0` that is constant on association classes (`Rx = Ry` implies
//! `w(x) = w(y)`) and whose average over every nonzero principal ideal is
//! the same scalar `λ`.  Up to the choice of `λ` there is exactly one such
//! weight, and it can be written in closed form with the Möbius function
//! of the ideal poset and the generator-counting phi function:
//!
//! ```text
//! w(x) = λ · (1 − μ(Rx, 0) / φ(x))
//! ```
//!
//! This crate computes that weight several independent ways and checks the
//! ways against each other:
//!
//! * [`zn`] works concretely in `Z_n`, where the closed form collapses to
//!   the classical number-theoretic `μ` and `φ` of `m = n / gcd(x, n)`,
//!   and also evaluates the weight through complex character sums.
//! * [`ringspec`] works symbolically on a product of finite chain rings,
//!   where ideals become exponent tuples on a grid and both `μ` and `φ`
//!   have closed forms in the residue field sizes.
//! * [`oracle`] rebuilds everything from first principles: it enumerates
//!   the principal ideals of `Z_n` by brute force, runs generic Möbius
//!   recursion on the inclusion poset, and verifies the defining axioms by
//!   literal summation.
//! * [`codes`] applies the weight to linear codes over `Z_n`, producing
//!   exact weight enumerators.
//!
//! All weights are exact rationals recorded as multiples of `λ` (see
//! [`LambdaRational`]); floating point appears only inside the character
//! sums, which are guarded before being rounded back to integers.

pub mod codes;
mod lambda;
pub mod numtheory;
pub mod oracle;
pub mod poset;
pub mod ringspec;
pub mod zn;

pub use lambda::LambdaRational;
