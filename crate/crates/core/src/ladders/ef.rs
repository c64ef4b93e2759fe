use std::sync::Arc;

use crate::diffop::{AffineExponent, QuasiFunction};
use crate::error::{Error, Result};
use crate::ratfield::{q, Rational, RationalFunction, Ring};
use crate::systems::{system, Params, SystemName, SystemSpec};

/// The chain `phi_k = I2^(k-1) phi_1` of system `C` with
/// `c1 = (m^2 - 1)/16`, `m = 4p - 1`, starting from
/// `phi_1 = x^(w/4) y^p`.
#[derive(Clone, Debug)]
pub struct EfChain {
    pub p: AffineExponent,
    pub w: AffineExponent,
    /// `4p - 1`.
    pub m: RationalFunction,
    /// `(w + m + 1)(w + m + 3)/16`.
    pub eigenvalue: RationalFunction,
    pub vectors: Vec<QuasiFunction>,
}

impl EfChain {
    /// `phi_k`, 1-based.
    pub fn phi(&self, k: usize) -> &QuasiFunction {
        &self.vectors[k - 1]
    }

    /// `n` when `w = 2n` for a non-negative integer `n`.
    pub fn finite_n(&self) -> Option<usize> {
        finite_n(&self.w)
    }
}

pub fn finite_n(w: &AffineExponent) -> Option<usize> {
    if !w.is_constant() {
        return None;
    }
    let half = w.constant_part() * q(1, 2);
    (half.is_integer() && half >= q(0, 1)).then(|| half.to_integer().try_into().ok())?
}

/// The value of `name` in `params` as an exponent: a rational constant, or
/// the symbolic parameter itself.
pub fn exponent_of(params: &Params, name: &str) -> Result<AffineExponent> {
    if let Some(c) = params.constant(name) {
        return Ok(AffineExponent::constant(c));
    }
    let v = params.get(name);
    if v == RationalFunction::var(params.ring(), name)? {
        return Ok(AffineExponent::param(name, Rational::from_integer(1.into())));
    }
    Err(Error::InvalidArgument(format!("{name} must be a rational or left symbolic to serve as an exponent")))
}

/// Parameters of system `C` for the chain: `p` as given, `m = 4p - 1`,
/// `c1 = (m^2 - 1)/16`.
pub fn chain_params(ring: &Arc<Ring>, p: &AffineExponent) -> Result<Params> {
    Ok(Params::symbolic(ring).with("p", p.to_rf(ring)?).with_m_from_p())
}

pub fn chain_system(ring: &Arc<Ring>, p: &AffineExponent) -> Result<SystemSpec> {
    Ok(system(SystemName::C, &chain_params(ring, p)?))
}

/// `(w + m + 1)(w + m + 3)/16`.
pub fn chain_eigenvalue(w: &RationalFunction, m: &RationalFunction) -> RationalFunction {
    let one = RationalFunction::one(w.ring());
    let s = &(w + m) + &one;
    (&s * &(&s + &one.scale(&q(2, 1)))).scale(&q(1, 16))
}

/// `phi_1 = x^(w/4) y^p`.
pub fn chain_seed(ring: &Arc<Ring>, p: &AffineExponent, w: &AffineExponent) -> Result<QuasiFunction> {
    QuasiFunction::with_xy_powers(RationalFunction::one(ring), &w.scale(&q(1, 4)), p)
}

/// Builds `phi_1, ..., phi_len`.
pub fn ef_construct(ring: &Arc<Ring>, p: &AffineExponent, w: &AffineExponent, len: usize) -> Result<EfChain> {
    if len == 0 {
        return Err(Error::InvalidArgument("chain length must be positive".into()));
    }
    let params = chain_params(ring, p)?;
    let i2 = system(SystemName::C, &params).i2;
    let m = params.get("m");
    let eigenvalue = chain_eigenvalue(&w.to_rf(ring)?, &m);
    let mut vectors = vec![chain_seed(ring, p, w)?];
    while vectors.len() < len {
        let next = i2.apply(vectors.last().expect("nonempty"))?;
        vectors.push(next);
    }
    Ok(EfChain {
        p: p.clone(),
        w: w.clone(),
        m,
        eigenvalue,
        vectors,
    })
}
