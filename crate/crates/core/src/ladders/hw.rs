use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::diffop::{AffineExponent, DiffOp, QuasiFunction, ETA, XI};
use crate::error::{Error, Result};
use crate::ratfield::{q, Rational, RationalFunction, Ring};
use crate::systems::killing_basis;

/// The `sl(2)` module generated from the highest weight vector
/// `psi_1 = sqrt(x^n)` by `psi_{r+1} = F psi_r`.
#[derive(Clone, Debug)]
pub struct HwModule {
    pub n: Rational,
    pub vectors: Vec<QuasiFunction>,
}

impl HwModule {
    /// `2n + 1` when `n` is a non-negative integer.
    pub fn finite_dimension(&self) -> Option<usize> {
        finite_dimension(&self.n)
    }

    /// `psi_r`, 1-based; zero outside the constructed range.
    pub fn psi(&self, r: usize) -> QuasiFunction {
        match r.checked_sub(1).and_then(|i| self.vectors.get(i)) {
            Some(v) => v.clone(),
            None => QuasiFunction::rational(RationalFunction::zero(self.ring())).with_powers_of(&self.vectors[0]),
        }
    }

    fn ring(&self) -> &Arc<Ring> {
        self.vectors[0].ring()
    }
}

trait WithPowers {
    fn with_powers_of(self, other: &QuasiFunction) -> QuasiFunction;
}

impl WithPowers for QuasiFunction {
    fn with_powers_of(self, other: &QuasiFunction) -> QuasiFunction {
        QuasiFunction::new(self.body().clone(), other.xi_exp().clone(), other.eta_exp().clone()).expect("canonical powers")
    }
}

/// `2n + 1` for a non-negative integer `n`, `None` otherwise. Half-integer
/// weights are excluded: in this realization `F` does not annihilate
/// `psi_{2n+1}` for them.
pub fn finite_dimension(n: &Rational) -> Option<usize> {
    (n.is_integer() && !n.is_negative()).then(|| n.to_integer().try_into().ok().map(|d: usize| 2 * d + 1))?
}

/// `sqrt(x^n)`.
pub fn highest_weight_vector(ring: &Arc<Ring>, n: &Rational) -> Result<QuasiFunction> {
    QuasiFunction::new(RationalFunction::one(ring), AffineExponent::constant(n.clone()), AffineExponent::zero())
}

/// Builds `psi_1, ..., psi_len`. For a non-negative integer `n` the
/// default length is `2n + 1`; otherwise a length must be given.
pub fn hw_construct(ring: &Arc<Ring>, n: &Rational, len: Option<usize>) -> Result<HwModule> {
    let len = match (len, finite_dimension(n)) {
        (Some(l), _) | (None, Some(l)) => l,
        (None, None) => {
            return Err(Error::InvalidArgument(format!(
                "weight {n} gives an infinite module; a truncation length is required"
            )))
        }
    };
    if len == 0 {
        return Err(Error::InvalidArgument("module length must be positive".into()));
    }
    let f = killing_basis(ring).f;
    let mut vectors = vec![highest_weight_vector(ring, n)?];
    while vectors.len() < len {
        let next = f.apply(vectors.last().expect("nonempty"))?;
        vectors.push(next);
    }
    Ok(HwModule { n: n.clone(), vectors })
}

/// `mu_r = 2(n + 1 - r)`.
pub fn weight(n: &Rational, r: usize) -> Rational {
    (n + Rational::from_integer(1.into()) - Rational::from_integer((r as i64).into())) * q(2, 1)
}

/// `a_r = (r - 1)(2n + 2 - r)`.
pub fn lowering(n: &Rational, r: usize) -> Rational {
    let r = Rational::from_integer((r as i64).into());
    (&r - Rational::from_integer(1.into())) * (n * q(2, 1) + q(2, 1) - r)
}

/// Coefficients of `d_xi`, `d_eta` of a first-order operator.
fn components(d: &DiffOp) -> (RationalFunction, RationalFunction) {
    (d.coefficient((1, 0)), d.coefficient((0, 1)))
}

/// The two coefficient functions of the three-point recursion
/// `psi_{r+1} = c_1 mu_r psi_r + c_2 a_r psi_{r-1}` computed from the
/// components of `H`, `E`, `F`:
/// `c_1 = (f1 e2 - e1 f2)/(h1 e2 - e1 h2)`, `c_2 = (h1 f2 - f1 h2)/(h1 e2 - e1 h2)`.
pub fn generic_recursion_coefficients(ring: &Arc<Ring>) -> Result<(RationalFunction, RationalFunction)> {
    let k = killing_basis(ring);
    let (h1, h2) = components(&k.h);
    let (e1, e2) = components(&k.e);
    let (f1, f2) = components(&k.f);
    let det = &(&h1 * &e2) - &(&e1 * &h2);
    if det.is_zero() {
        return Err(Error::InvalidArgument("H and E are parallel; the module is one-dimensional".into()));
    }
    let c1 = (&(&f1 * &e2) - &(&e1 * &f2)).checked_div(&det)?;
    let c2 = (&(&h1 * &f2) - &(&f1 * &h2)).checked_div(&det)?;
    Ok((c1, c2))
}

/// `psi_{r+1}` from the explicit recursion
/// `2(n - r + 1) sqrt(y/x) psi_r + (r - 1)(2n + 2 - r) ((y - 1)/x) psi_{r-1}`.
pub fn explicit_recursion_step(m: &HwModule, r: usize) -> Result<QuasiFunction> {
    let ring = m.ring().clone();
    let xi = RationalFunction::var_index(&ring, XI);
    let eta = RationalFunction::var_index(&ring, ETA);
    let sqrt_y_over_x = eta.checked_div(&xi)?;
    let y_minus_1_over_x = (&(&eta * &eta) - &RationalFunction::one(&ring)).checked_div(&(&xi * &xi))?;
    let n = &m.n;
    let c1 = (n - Rational::from_integer((r as i64).into()) + q(1, 1)) * q(2, 1);
    let first = m.psi(r).mul_rf(&sqrt_y_over_x.scale(&c1));
    let c2 = lowering(n, r);
    if c2.is_zero() {
        return Ok(first);
    }
    first.try_add(&m.psi(r - 1).mul_rf(&y_minus_1_over_x.scale(&c2)))
}
