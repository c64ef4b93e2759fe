use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::op::{sum_all, DiffOp, ETA, XI};
use crate::error::{Error, Result};
use crate::ratfield::{Rational, RationalFunction, Ring};

/// An exponent `q0 + sum q_i * param_i` with rational `q`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AffineExponent {
    constant: Rational,
    coefficients: BTreeMap<String, Rational>,
}

impl AffineExponent {
    pub fn constant(c: Rational) -> Self {
        AffineExponent {
            constant: c,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * param`.
    pub fn param(name: &str, c: Rational) -> Self {
        let mut coefficients = BTreeMap::new();
        if !c.is_zero() {
            coefficients.insert(name.to_string(), c);
        }
        AffineExponent {
            constant: Rational::zero(),
            coefficients,
        }
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficients(&self) -> &BTreeMap<String, Rational> {
        &self.coefficients
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.constant.is_zero()
    }

    pub fn add(&self, other: &AffineExponent) -> AffineExponent {
        let mut out = self.clone();
        out.constant += &other.constant;
        for (k, v) in &other.coefficients {
            let e = out.coefficients.entry(k.clone()).or_insert_with(Rational::zero);
            *e += v;
            if e.is_zero() {
                out.coefficients.remove(k);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> AffineExponent {
        if c.is_zero() {
            return AffineExponent::zero();
        }
        AffineExponent {
            constant: &self.constant * c,
            coefficients: self
                .coefficients
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Replaces parameters by fixed values.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> AffineExponent {
        let mut out = self.clone();
        for (name, val) in values {
            if let Some(c) = out.coefficients.remove(*name) {
                out.constant += c * val;
            }
        }
        out
    }

    /// The exponent as a polynomial in the ring's parameters.
    pub fn to_rf(&self, ring: &Arc<Ring>) -> Result<RationalFunction> {
        let mut out = RationalFunction::constant(ring, self.constant.clone());
        for (name, c) in &self.coefficients {
            out = &out + &RationalFunction::var(ring, name)?.scale(c);
        }
        Ok(out)
    }

    /// Splits off `floor(constant)` so the remaining constant lies in `[0, 1)`.
    fn split_floor(&self) -> (i64, AffineExponent) {
        let fl = self.constant.numer().div_floor(self.constant.denom());
        let mut rest = self.clone();
        rest.constant -= Rational::from_integer(fl.clone());
        (fl.to_i64().expect("exponent fits in i64"), rest)
    }
}

impl fmt::Display for AffineExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.constant.is_zero() || self.coefficients.is_empty() {
            parts.push(self.constant.to_string());
        }
        for (k, v) in &self.coefficients {
            if v == &Rational::from_integer(1.into()) {
                parts.push(k.clone());
            } else {
                parts.push(format!("{v}*{k}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `body * xi^xi_exp * eta^eta_exp`: a rational function times symbolic
/// powers of the internal coordinates.
///
/// Kept canonical: integer parts of the exponents' constants are moved into
/// the body, so each stored constant lies in `[0, 1)`.
#[derive(Clone)]
pub struct QuasiFunction {
    body: RationalFunction,
    xi_exp: AffineExponent,
    eta_exp: AffineExponent,
}

impl QuasiFunction {
    pub fn new(
        body: RationalFunction,
        xi_exp: AffineExponent,
        eta_exp: AffineExponent,
    ) -> Result<QuasiFunction> {
        let ring = body.ring().clone();
        let (fx, xi_exp) = xi_exp.split_floor();
        let (fe, eta_exp) = eta_exp.split_floor();
        let mut body = body;
        if fx != 0 {
            body = &body * &RationalFunction::var_index(&ring, XI).pow(fx as i32)?;
        }
        if fe != 0 {
            body = &body * &RationalFunction::var_index(&ring, ETA).pow(fe as i32)?;
        }
        Ok(QuasiFunction {
            body,
            xi_exp,
            eta_exp,
        })
    }

    pub fn rational(body: RationalFunction) -> QuasiFunction {
        QuasiFunction {
            body,
            xi_exp: AffineExponent::zero(),
            eta_exp: AffineExponent::zero(),
        }
    }

    /// `body * x^x_exp * y^y_exp` in the original coordinates.
    pub fn with_xy_powers(
        body: RationalFunction,
        x_exp: &AffineExponent,
        y_exp: &AffineExponent,
    ) -> Result<QuasiFunction> {
        let two = Rational::from_integer(2.into());
        QuasiFunction::new(body, x_exp.scale(&two), y_exp.scale(&two))
    }

    pub fn body(&self) -> &RationalFunction {
        &self.body
    }

    pub fn xi_exp(&self) -> &AffineExponent {
        &self.xi_exp
    }

    pub fn eta_exp(&self) -> &AffineExponent {
        &self.eta_exp
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.body.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    fn same_powers(&self, other: &QuasiFunction) -> bool {
        self.xi_exp == other.xi_exp && self.eta_exp == other.eta_exp
    }

    fn with_body(&self, body: RationalFunction) -> QuasiFunction {
        QuasiFunction {
            body,
            xi_exp: self.xi_exp.clone(),
            eta_exp: self.eta_exp.clone(),
        }
    }

    pub fn try_add(&self, other: &QuasiFunction) -> Result<QuasiFunction> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if !self.same_powers(other) {
            return Err(Error::ExponentMismatch);
        }
        Ok(self.with_body(self.body.try_add(&other.body)?))
    }

    pub fn try_sub(&self, other: &QuasiFunction) -> Result<QuasiFunction> {
        self.try_add(&other.mul_rf(&RationalFunction::from_int(other.ring(), -1)))
    }

    /// Multiplication by a rational function.
    pub fn mul_rf(&self, f: &RationalFunction) -> QuasiFunction {
        self.with_body(&self.body * f)
    }

    pub fn scale(&self, c: &Rational) -> QuasiFunction {
        self.with_body(self.body.scale(c))
    }

    /// Equal iff the powers agree and the bodies are `rf_equal`.
    pub fn qf_equal(&self, other: &QuasiFunction) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.same_powers(other) && self.body.rf_equal(&other.body)
    }

    /// Replaces parameters by fixed values, in the body and in the powers.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<QuasiFunction> {
        let ring = self.ring().clone();
        let idx = values
            .iter()
            .map(|(n, v)| Ok((ring.require(n)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        QuasiFunction::new(
            self.body.specialize(&idx)?,
            self.xi_exp.specialize(values),
            self.eta_exp.specialize(values),
        )
    }

    /// The rational function `self / other`, if both carry the same powers.
    pub fn ratio(&self, other: &QuasiFunction) -> Result<RationalFunction> {
        if !self.same_powers(other) && !self.is_zero() {
            return Err(Error::ExponentMismatch);
        }
        self.body.checked_div(&other.body)
    }
}

impl DiffOp {
    /// Action on a quasi-function, using
    /// `d_xi(b xi^mu eta^nu) = (d_xi b + mu b / xi) xi^mu eta^nu`.
    pub fn apply(&self, f: &QuasiFunction) -> Result<QuasiFunction> {
        let ring = self.ring().clone();
        let mu = f.xi_exp.to_rf(&ring)?;
        let nu = f.eta_exp.to_rf(&ring)?;
        let xi = RationalFunction::var_index(&ring, XI);
        let eta = RationalFunction::var_index(&ring, ETA);
        let mu_over_xi = &mu / &xi;
        let nu_over_eta = &nu / &eta;
        let mut cache: HashMap<(u32, u32), RationalFunction> = HashMap::new();
        cache.insert((0, 0), f.body.clone());
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms() {
            let d = shifted_derivative(&mut cache, i, j, &mu_over_xi, &nu_over_eta);
            parts.push(c * &d);
        }
        Ok(f.with_body(sum_all(&ring, parts)))
    }
}

fn shifted_derivative(
    cache: &mut HashMap<(u32, u32), RationalFunction>,
    i: u32,
    j: u32,
    mu_over_xi: &RationalFunction,
    nu_over_eta: &RationalFunction,
) -> RationalFunction {
    if let Some(v) = cache.get(&(i, j)) {
        return v.clone();
    }
    let v = if j > 0 {
        let b = shifted_derivative(cache, i, j - 1, mu_over_xi, nu_over_eta);
        &b.derivative(ETA) + &(nu_over_eta * &b)
    } else {
        let b = shifted_derivative(cache, i - 1, j, mu_over_xi, nu_over_eta);
        &b.derivative(XI) + &(mu_over_xi * &b)
    };
    cache.insert((i, j), v.clone());
    v
}

impl PartialEq for QuasiFunction {
    fn eq(&self, other: &Self) -> bool {
        self.qf_equal(other)
    }
}

impl From<RationalFunction> for QuasiFunction {
    fn from(f: RationalFunction) -> Self {
        QuasiFunction::rational(f)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, name: &str, e: &AffineExponent) -> fmt::Result {
    // internal exponent e on xi is exponent e/2 on x
    let half = e.scale(&Rational::new(1.into(), 2.into()));
    write!(f, "*{name}^({half})")
}

impl fmt::Display for QuasiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.body)?;
        if !self.xi_exp.is_zero() {
            write_power(f, "x", &self.xi_exp)?;
        }
        if !self.eta_exp.is_zero() {
            write_power(f, "y", &self.eta_exp)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuasiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiFunction({self})")
    }
}
