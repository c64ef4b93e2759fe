use super::op::{DiffOp, ETA, XI};
use super::quasi::QuasiFunction;
use crate::error::{Error, Result};
use crate::ratfield::RationalFunction;

/// A rational change of the internal coordinates,
/// `(xi, eta) -> (image_xi, image_eta)`.
#[derive(Clone, Debug)]
pub struct RationalMap {
    image_xi: RationalFunction,
    image_eta: RationalFunction,
    involutive: bool,
}

impl RationalMap {
    pub fn new(image_xi: RationalFunction, image_eta: RationalFunction, involutive: bool) -> Self {
        RationalMap {
            image_xi,
            image_eta,
            involutive,
        }
    }

    /// `x -> (y - 1)^2 / x`, `y -> y`, on the branch `xi -> (eta^2 - 1) / xi`.
    pub fn involution(ring: &std::sync::Arc<crate::ratfield::Ring>) -> Self {
        let xi = RationalFunction::var_index(ring, XI);
        let eta = RationalFunction::var_index(ring, ETA);
        let one = RationalFunction::one(ring);
        let image_xi = &(&(&eta * &eta) - &one) / &xi;
        RationalMap::new(image_xi, eta, true)
    }

    pub fn image_xi(&self) -> &RationalFunction {
        &self.image_xi
    }

    pub fn image_eta(&self) -> &RationalFunction {
        &self.image_eta
    }

    fn images(&self) -> [(usize, RationalFunction); 2] {
        [(XI, self.image_xi.clone()), (ETA, self.image_eta.clone())]
    }

    /// `f ∘ map`.
    pub fn compose_rf(&self, f: &RationalFunction) -> Result<RationalFunction> {
        f.substitute(&self.images())
    }

    /// True if the map is declared involutive and squares to the identity.
    pub fn is_verified_involution(&self) -> bool {
        if !self.involutive {
            return false;
        }
        let ring = self.image_xi.ring();
        let back_xi = self.compose_rf(&self.image_xi);
        let back_eta = self.compose_rf(&self.image_eta);
        matches!((back_xi, back_eta), (Ok(a), Ok(b))
            if a.rf_equal(&RationalFunction::var_index(ring, XI))
                && b.rf_equal(&RationalFunction::var_index(ring, ETA)))
    }

    /// Rewrites `d` so that `pullback(d)(f ∘ map) = (d f) ∘ map`.
    pub fn pullback(&self, d: &DiffOp) -> Result<DiffOp> {
        if !self.is_verified_involution() {
            return Err(Error::NotInvolution);
        }
        let ring = d.ring().clone();
        let (u, v) = (&self.image_xi, &self.image_eta);
        let (u_xi, u_eta) = (u.derivative(XI), u.derivative(ETA));
        let (v_xi, v_eta) = (v.derivative(XI), v.derivative(ETA));
        let det = &(&u_xi * &v_eta) - &(&v_xi * &u_eta);
        if det.is_zero() {
            return Err(Error::NotInvolution);
        }
        // [D1; D2] = (J^T)^-1 [d_xi; d_eta]
        let d_xi = DiffOp::d_xi(&ring);
        let d_eta = DiffOp::d_eta(&ring);
        let d1 = &d_xi.mul_function(&(&v_eta / &det)) - &d_eta.mul_function(&(&v_xi / &det));
        let d2 = &d_eta.mul_function(&(&u_xi / &det)) - &d_xi.mul_function(&(&u_eta / &det));
        let mut d1_pows = vec![DiffOp::identity(&ring)];
        let mut d2_pows = vec![DiffOp::identity(&ring)];
        let mut out = DiffOp::zero(&ring);
        for (&(i, j), c) in d.terms() {
            while d1_pows.len() <= i as usize {
                let next = d1_pows.last().unwrap().compose(&d1);
                d1_pows.push(next);
            }
            while d2_pows.len() <= j as usize {
                let next = d2_pows.last().unwrap().compose(&d2);
                d2_pows.push(next);
            }
            let moved = self.compose_rf(c)?;
            let t = d1_pows[i as usize].compose(&d2_pows[j as usize]);
            out = &out + &t.mul_function(&moved);
        }
        Ok(out)
    }

    /// `f ∘ map` for a quasi-function. A coordinate whose image is not the
    /// coordinate itself may only carry an integer power.
    pub fn substitute(&self, f: &QuasiFunction) -> Result<QuasiFunction> {
        let ring = f.ring().clone();
        let fixes_xi = self.image_xi.rf_equal(&RationalFunction::var_index(&ring, XI));
        let fixes_eta = self.image_eta.rf_equal(&RationalFunction::var_index(&ring, ETA));
        if (!fixes_xi && !f.xi_exp().is_zero()) || (!fixes_eta && !f.eta_exp().is_zero()) {
            return Err(Error::ExponentNotClosed);
        }
        QuasiFunction::new(
            self.compose_rf(f.body())?,
            f.xi_exp().clone(),
            f.eta_exp().clone(),
        )
    }
}
