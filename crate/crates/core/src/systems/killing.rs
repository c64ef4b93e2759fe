use std::sync::Arc;

use crate::diffop::{DiffOp, ETA, XI};
use crate::error::{Error, Result};
use crate::ratfield::{q, RationalFunction, Ring};

/// The Killing vectors `H`, `E`, `F` spanning `sl(2)`.
#[derive(Clone, Debug)]
pub struct Killing {
    pub h: DiffOp,
    pub e: DiffOp,
    pub f: DiffOp,
}

/// `H = 4x dx`, `E = 2 sqrt(xy) dy`, `F = 4 sqrt(xy) dx + 2(y-1) sqrt(y/x) dy`.
pub fn killing_basis(ring: &Arc<Ring>) -> Killing {
    let c = Coords::new(ring);
    let sqrt_xy = &c.xi * &c.eta;
    let sqrt_y_over_x = c.eta.checked_div(&c.xi).unwrap();
    let h = c.dx.mul_function(&c.x.scale(&q(4, 1)));
    let e = c.dy.mul_function(&sqrt_xy.scale(&q(2, 1)));
    let f = &c.dx.mul_function(&sqrt_xy.scale(&q(4, 1)))
        + &c.dy.mul_function(&(&(&c.y - &c.one) * &sqrt_y_over_x).scale(&q(2, 1)));
    Killing { h, e, f }
}

/// `(1/16)(H^2 + 2EF + 2FE)`.
pub fn casimir(k: &Killing) -> DiffOp {
    let ef = &k.e * &k.f;
    let fe = &k.f * &k.e;
    (&(&k.h * &k.h) + &(&ef + &fe).scale(&q(2, 1))).scale(&q(1, 16))
}

/// The explicit Laplace–Beltrami operator
/// `x^2 dx^2 + 2xy dx dy + (y^2 - y) dy^2 + (3/2) x dx + (1/2)(3y - 1) dy`.
pub fn laplace_beltrami(ring: &Arc<Ring>) -> DiffOp {
    let c = Coords::new(ring);
    c.second_order_lb()
        + c.dx.mul_function(&c.x.scale(&q(3, 2)))
        + c.dy.mul_function(&(&c.y.scale(&q(3, 1)) - &c.one).scale(&q(1, 2)))
}

/// The inverse metric `g^{ij}` in `x`, `y`.
pub fn metric_inverse(ring: &Arc<Ring>) -> [[RationalFunction; 2]; 2] {
    let c = Coords::new(ring);
    let xy = &c.x * &c.y;
    [
        [&c.x * &c.x, xy.clone()],
        [xy, &(&c.y * &c.y) - &c.y],
    ]
}

/// `(1/sqrt|g|) d_j (sqrt|g| g^{ij} d_i)` for an inverse metric given in the
/// coordinates `x`, `y`.
///
/// The density enters only through `d log |det g^{-1}|`, so no square root is
/// ever formed and the sign of the determinant is irrelevant.
pub fn laplace_beltrami_from_metric(ginv: &[[RationalFunction; 2]; 2]) -> Result<DiffOp> {
    let ring = ginv[0][0].ring().clone();
    let c = Coords::new(&ring);
    let det = &(&ginv[0][0] * &ginv[1][1]) - &(&ginv[0][1] * &ginv[1][0]);
    if det.is_zero() {
        return Err(Error::SingularMetric);
    }
    let d = [&c.dx, &c.dy];
    let partial = |f: &RationalFunction, j: usize| d[j].apply_rf(f);
    let dlog_det = [0, 1].map(|j| partial(&det, j).checked_div(&det).unwrap());
    let mut out = DiffOp::zero(&ring);
    for i in 0..2 {
        let mut first = RationalFunction::zero(&ring);
        for j in 0..2 {
            out = &out + &(d[i] * d[j]).mul_function(&ginv[i][j]);
            // d_j(sqrt|g|) / sqrt|g| = -(1/2) d_j log |det g^{-1}|
            first = &first + &partial(&ginv[i][j], j);
            first = &first - &(&ginv[i][j] * &dlog_det[j]).scale(&q(1, 2));
        }
        out = &out + &d[i].mul_function(&first);
    }
    Ok(out)
}

/// Coordinate functions and derivatives in the `x`, `y` presentation.
pub(crate) struct Coords {
    pub one: RationalFunction,
    pub xi: RationalFunction,
    pub eta: RationalFunction,
    pub x: RationalFunction,
    pub y: RationalFunction,
    pub dx: DiffOp,
    pub dy: DiffOp,
}

impl Coords {
    pub fn new(ring: &Arc<Ring>) -> Coords {
        Coords {
            one: RationalFunction::one(ring),
            xi: RationalFunction::var_index(ring, XI),
            eta: RationalFunction::var_index(ring, ETA),
            x: crate::diffop::x(ring),
            y: crate::diffop::y(ring),
            dx: DiffOp::dx(ring),
            dy: DiffOp::dy(ring),
        }
    }

    pub fn int(&self, n: i64) -> RationalFunction {
        self.one.scale(&q(n, 1))
    }

    pub fn dxx(&self) -> DiffOp {
        &self.dx * &self.dx
    }

    pub fn dxy(&self) -> DiffOp {
        &self.dx * &self.dy
    }

    pub fn dyy(&self) -> DiffOp {
        &self.dy * &self.dy
    }

    /// `x^2 dx^2 + 2xy dx dy + (y^2 - y) dy^2`.
    pub fn second_order_lb(&self) -> DiffOp {
        let xy = &self.x * &self.y;
        self.dxx().mul_function(&(&self.x * &self.x))
            + self.dxy().mul_function(&xy.scale(&q(2, 1)))
            + self.dyy().mul_function(&(&(&self.y * &self.y) - &self.y))
    }

    /// `y - 1`.
    pub fn ym1(&self) -> RationalFunction {
        &self.y - &self.one
    }

    pub fn div(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_div(b).expect("nonzero denominator")
    }
}
