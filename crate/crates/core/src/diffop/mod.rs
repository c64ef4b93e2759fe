//! Linear differential operators in two variables with rational-function
//! coefficients.
//!
//! Operators act on the internal coordinates `xi`, `eta` with `x = xi^2`
//! and `y = eta^2`, so that `sqrt(x)`, `sqrt(x*y)` and `sqrt(y/x)` are
//! rational. [`DiffOp::dx`] and [`DiffOp::dy`] give the derivatives in the
//! original coordinates.

mod gauge;
mod map;
mod op;
mod quasi;

pub use gauge::GaugeData;
pub use map::RationalMap;
pub use op::{DiffOp, MultiIndex, ETA, XI};
pub use quasi::{AffineExponent, QuasiFunction};

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::ratfield::{Rational, RationalFunction, Ring, MAX_VARS};

/// The coordinate `x = xi^2` as a function.
pub fn x(ring: &Arc<Ring>) -> RationalFunction {
    RationalFunction::var_index(ring, XI).pow(2).unwrap()
}

/// The coordinate `y = eta^2` as a function.
pub fn y(ring: &Arc<Ring>) -> RationalFunction {
    RationalFunction::var_index(ring, ETA).pow(2).unwrap()
}

/// `sqrt(f)` for `f = c x^a y^b` with `c` the square of a positive rational
/// and integers `a`, `b` of either sign; the result is rational in `xi`,
/// `eta`.
pub fn sqrt_monomial(f: &RationalFunction) -> Result<RationalFunction> {
    let bad = || Error::BadSquareRoot(f.to_string());
    let ring = f.ring();
    let (num, den) = (f.numerator(), f.denominator());
    if num.len() != 1 || den.len() != 1 {
        return Err(bad());
    }
    let (mn, cn) = &num.terms()[0];
    let (md, cd) = &den.terms()[0];
    let c = cn / cd;
    if !c.is_positive() {
        return Err(bad());
    }
    let root = |z: &BigInt| {
        let r = z.sqrt();
        (&r * &r == *z).then_some(r)
    };
    let (rn, rd) = (root(c.numer()).ok_or_else(bad)?, root(c.denom()).ok_or_else(bad)?);
    let mut out = RationalFunction::constant(ring, Rational::new(rn, rd));
    for (m, sign) in [(mn, 1), (md, -1)] {
        for i in 0..MAX_VARS {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if (i != XI && i != ETA) || e % 2 != 0 {
                return Err(bad());
            }
            out = &out * &RationalFunction::var_index(ring, i).pow(sign * (e / 2) as i32)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
