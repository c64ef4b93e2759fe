use crate::diffop::{DiffOp, GaugeData, ETA, XI};
use crate::error::Result;
use crate::ratfield::{q, RationalFunction};

use super::catalog::{system, SystemName};
use super::params::Params;

/// Logarithmic derivatives of
/// `G = exp((alpha/2)(y - 1)/x) x^((beta + gamma - 1)/2) y^(-(2 gamma + 1)/4)`.
pub fn gauge_data(p: &Params) -> Result<GaugeData> {
    let ring = p.ring();
    let xi = RationalFunction::var_index(ring, XI);
    let eta = RationalFunction::var_index(ring, ETA);
    let one = RationalFunction::one(ring);
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let eta2m1 = &(&eta * &eta) - &one;
    let dlog_xi = (&a * &eta2m1).checked_div(&xi.pow(3)?)?;
    let dlog_xi = &(&(&b + &g) - &one).checked_div(&xi)? - &dlog_xi;
    let dlog_eta = &(&a * &eta).checked_div(&(&xi * &xi))?
        - &(&g.scale(&q(2, 1)) + &one).checked_div(&eta.scale(&q(2, 1)))?;
    GaugeData::new(dlog_xi, dlog_eta)
}

/// How one raw operator relates to its gauged counterpart:
/// `G^-1 raw G = factor * gauged + shift`.
#[derive(Clone, Debug)]
pub struct GaugeLink {
    pub name: &'static str,
    pub conjugated: DiffOp,
    pub gauged: DiffOp,
    pub factor: RationalFunction,
    pub shift: DiffOp,
}

impl GaugeLink {
    /// The shift as a function, if it has order zero and is free of the
    /// coordinates.
    pub fn constant_shift(&self) -> Option<RationalFunction> {
        let f = self.shift.as_function()?;
        f.is_free_of(&[XI, ETA]).then_some(f)
    }
}

/// Conjugates the raw operators (with `c0`, `c1`, `c2` taken from `p`) and
/// reads off factor and shift against the gauged system. The factor is the
/// ratio of the leading coefficients.
pub fn gauge_links(p: &Params) -> Result<Vec<GaugeLink>> {
    let g = gauge_data(p)?;
    let raw = system(SystemName::ARaw, p);
    let gauged = system(SystemName::AGauged, p);
    let pairs = [("L", &raw.l, &gauged.l), ("I1", &raw.i1, &gauged.i1), ("I2", &raw.i2, &gauged.i2)];
    pairs
        .into_iter()
        .map(|(name, r, t)| {
            let conjugated = r.gauge_conjugate(&g);
            let lead = *t.terms().keys().next_back().expect("nonzero operator");
            let factor = conjugated.coefficient(lead).checked_div(&t.coefficient(lead))?;
            let shift = &conjugated - &t.mul_function(&factor);
            Ok(GaugeLink {
                name,
                conjugated,
                gauged: t.clone(),
                factor,
                shift,
            })
        })
        .collect()
}

/// The factors and shifts derived once from [`gauge_links`] and kept as
/// fixed values: `L -> 1, (2 beta - 1)(2 beta - 3)/16`, `I1 -> 4, -2 alpha gamma`,
/// `I2 -> 16, 4 (beta + gamma - 1)^2`.
pub fn locked_gauge_constants(p: &Params) -> [(&'static str, RationalFunction, RationalFunction); 3] {
    let one = RationalFunction::one(p.ring());
    let (a, b, g) = (p.get("alpha"), p.get("beta"), p.get("gamma"));
    let two_b = b.scale(&q(2, 1));
    let l_shift = (&(&two_b - &one) * &(&two_b - &one.scale(&q(3, 1)))).scale(&q(1, 16));
    let i1_shift = (&a * &g).scale(&q(-2, 1));
    let bg1 = &(&b + &g) - &one;
    let i2_shift = (&bg1 * &bg1).scale(&q(4, 1));
    [
        ("L", one.clone(), l_shift),
        ("I1", one.scale(&q(4, 1)), i1_shift),
        ("I2", one.scale(&q(16, 1)), i2_shift),
    ]
}
