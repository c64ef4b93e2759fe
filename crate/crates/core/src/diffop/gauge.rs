use super::op::{DiffOp, ETA, XI};
use crate::error::{Error, Result};
use crate::ratfield::RationalFunction;

/// A gauge factor `G`, known only through `d log G`.
#[derive(Clone, Debug)]
pub struct GaugeData {
    dlog_xi: RationalFunction,
    dlog_eta: RationalFunction,
}

impl GaugeData {
    /// Checks `d_eta(dlog_xi) = d_xi(dlog_eta)`.
    pub fn new(dlog_xi: RationalFunction, dlog_eta: RationalFunction) -> Result<GaugeData> {
        if !dlog_xi.derivative(ETA).rf_equal(&dlog_eta.derivative(XI)) {
            return Err(Error::InexactGauge);
        }
        Ok(GaugeData { dlog_xi, dlog_eta })
    }

    pub fn dlog_xi(&self) -> &RationalFunction {
        &self.dlog_xi
    }

    pub fn dlog_eta(&self) -> &RationalFunction {
        &self.dlog_eta
    }
}

impl DiffOp {
    /// `G^-1 ∘ self ∘ G`, obtained by substituting `d -> d + d log G` in
    /// every derivative.
    pub fn gauge_conjugate(&self, g: &GaugeData) -> DiffOp {
        let ring = self.ring().clone();
        let shifted_xi = &DiffOp::d_xi(&ring) + &DiffOp::function(g.dlog_xi.clone());
        let shifted_eta = &DiffOp::d_eta(&ring) + &DiffOp::function(g.dlog_eta.clone());
        let mut xi_pows = vec![DiffOp::identity(&ring)];
        let mut eta_pows = vec![DiffOp::identity(&ring)];
        let mut out = DiffOp::zero(&ring);
        for (&(i, j), c) in self.terms() {
            while xi_pows.len() <= i as usize {
                let next = xi_pows.last().unwrap().compose(&shifted_xi);
                xi_pows.push(next);
            }
            while eta_pows.len() <= j as usize {
                let next = eta_pows.last().unwrap().compose(&shifted_eta);
                eta_pows.push(next);
            }
            let t = xi_pows[i as usize].compose(&eta_pows[j as usize]);
            out = &out + &t.mul_function(c);
        }
        out
    }
}
