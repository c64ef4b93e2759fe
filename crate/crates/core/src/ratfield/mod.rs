//! Exact arithmetic for sparse multivariate polynomials and their fraction
//! field over arbitrary-precision rationals.

mod modp;
mod monomial;
mod poly;
mod random;
mod ratfunc;
mod ring;

pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;
pub use random::{random_identity_check, random_rational};
pub use ratfunc::RationalFunction;
pub use ring::{Ring, PARAMETERS, STANDARD_VARS};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational constant.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests;
