use std::fmt;
use std::str::FromStr;

use crate::diffop::DiffOp;
use crate::error::{Error, Result};
use crate::ratfield::{q, RationalFunction};

use super::killing::{killing_basis, laplace_beltrami, Coords};
use super::params::{gauge_constraints, Params};

/// The catalogued super-integrable systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemName {
    /// `L_b` plus potentials, with integrals built on `E^2` and `H^2`.
    ARaw,
    /// The Krall–Sheffer form of `ARaw` after the gauge change.
    AGauged,
    /// The involution image of `ARaw`, built on `F^2` and `H^2`.
    BRaw,
    /// The involution image of `AGauged`.
    B,
    /// `L_b + c1/y` with integrals built on `E^2` and `F^2`.
    C,
}

impl SystemName {
    pub const ALL: [SystemName; 5] = [
        SystemName::ARaw,
        SystemName::AGauged,
        SystemName::BRaw,
        SystemName::B,
        SystemName::C,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SystemName::ARaw => "A_raw",
            SystemName::AGauged => "A_gauged",
            SystemName::BRaw => "B_raw",
            SystemName::B => "B",
            SystemName::C => "C",
        }
    }
}

impl fmt::Display for SystemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SystemName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SystemName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSystem(s.to_string()))
    }
}

/// A Hamiltonian with its two second-order integrals.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub name: SystemName,
    pub l: DiffOp,
    pub i1: DiffOp,
    pub i2: DiffOp,
    /// Parameters the operators depend on.
    pub parameters: Vec<&'static str>,
    /// Relations `name = value` tying the potential constants to the
    /// Krall–Sheffer parameters. Empty for `C`.
    pub constraints: Vec<(&'static str, RationalFunction)>,
}

impl SystemSpec {
    /// `I3 = [I1, I2]`.
    pub fn i3(&self) -> DiffOp {
        self.i1.commutator(&self.i2)
    }
}

/// Looks a system up by name.
pub fn system_by_name(name: &str, params: &Params) -> Result<SystemSpec> {
    Ok(system(name.parse()?, params))
}

/// Builds the operators of `name` with parameter values from `params`.
pub fn system(name: SystemName, params: &Params) -> SystemSpec {
    let ring = params.ring();
    let c = Coords::new(ring);
    let k = killing_basis(ring);
    let lb = laplace_beltrami(ring);
    let (alpha, beta, gamma) = (params.get("alpha"), params.get("beta"), params.get("gamma"));
    let (c0, c1, c2) = (params.get("c0"), params.get("c1"), params.get("c2"));
    let fun = DiffOp::function;
    let [k0, k1, k2] = gauge_constraints(params);
    let a_constraints = vec![("c0", k0), ("c1", k1), ("c2", k2)];
    let ym1 = c.ym1();
    let xy = &c.x * &c.y;

    match name {
        SystemName::ARaw => {
            let u = &(&c.div(&c0, &c.x) + &c.div(&c1, &c.y)) + &c.div(&(&c2 * &ym1), &(&c.x * &c.x));
            let v1 = &c.div(&(&c1 * &c.x), &c.y) + &c.div(&(&c2 * &c.y), &c.x);
            let t = c.div(&ym1, &c.x);
            let v2 = &(&c0 * &t) + &(&c2 * &(&t * &t));
            SystemSpec {
                name,
                l: &lb + &fun(u),
                i1: &(&k.e * &k.e) - &fun(v1.scale(&q(4, 1))),
                i2: &(&k.h * &k.h) - &fun(v2.scale(&q(16, 1))),
                parameters: vec!["c0", "c1", "c2"],
                constraints: a_constraints,
            }
        }
        SystemName::AGauged => {
            let l = c.second_order_lb()
                + c.dx.mul_function(&(&(&beta * &c.x) + &alpha))
                + c.dy.mul_function(&(&(&beta * &c.y) + &gamma));
            let i1 = c.dyy().mul_function(&xy) + c.dy.mul_function(&(&(&alpha * &c.y) - &(&gamma * &c.x)));
            let i2 = c.dxx().mul_function(&(&c.x * &c.x))
                + c.dx.mul_function(&(&(&(&beta + &gamma) * &c.x) + &(&alpha * &(&c.one - &c.y))));
            SystemSpec {
                name,
                l,
                i1,
                i2,
                parameters: vec!["alpha", "beta", "gamma"],
                constraints: a_constraints,
            }
        }
        SystemName::BRaw => {
            let ym1_2 = &ym1 * &ym1;
            let u = &(&c.div(&(&c0 * &c.x), &ym1_2) + &c.div(&c1, &c.y))
                + &c.div(&(&c2 * &(&c.x * &c.x)), &(&ym1_2 * &ym1));
            let v1 = &c.div(&(&c1 * &ym1_2), &xy) + &c.div(&(&c2 * &xy), &ym1_2);
            let t = c.div(&c.x, &ym1);
            let v2 = &(&c0 * &t) + &(&c2 * &(&t * &t));
            SystemSpec {
                name,
                l: &lb + &fun(u),
                i1: &(&k.f * &k.f) - &fun(v1.scale(&q(4, 1))),
                i2: &(&k.h * &k.h) - &fun(v2.scale(&q(16, 1))),
                parameters: vec!["c0", "c1", "c2"],
                constraints: a_constraints,
            }
        }
        SystemName::B => {
            let ym1_2 = &ym1 * &ym1;
            let x2 = &c.x * &c.x;
            let lx = &(&(&beta * &c.x) + &c.div(&(&(&(&beta + &gamma) - &c.one) * &c.x).scale(&q(2, 1)), &ym1))
                - &c.div(&(&alpha * &x2), &ym1_2);
            let l = c.second_order_lb() + c.dx.mul_function(&lx) + c.dy.mul_function(&(&(&beta * &c.y) + &gamma));
            let i1x = &(&(&(&c.one - &gamma) * &c.y) + &c.div(&(&alpha * &xy), &ym1)) + &gamma;
            let i1y = &(&alpha * &c.y) - &c.div(&(&gamma * &ym1_2), &c.x);
            let i1 = c.dxx().mul_function(&xy.scale(&q(4, 1)))
                + c.dxy().mul_function(&(&c.y * &ym1).scale(&q(4, 1)))
                + c.dyy().mul_function(&c.div(&(&c.y * &ym1_2), &c.x))
                + c.dx.mul_function(&i1x.scale(&q(2, 1)))
                + c.dy.mul_function(&i1y);
            let i2x = &(&(&(&c.int(2) - &beta) - &gamma) * &c.x) - &c.div(&(&alpha * &x2), &(&c.one - &c.y));
            let i2 = c.dxx().mul_function(&x2) + c.dx.mul_function(&i2x);
            SystemSpec {
                name,
                l,
                i1,
                i2,
                parameters: vec!["alpha", "beta", "gamma"],
                constraints: a_constraints,
            }
        }
        SystemName::C => {
            let i2v = c.div(&(&c1 * &(&ym1 * &ym1)), &xy);
            SystemSpec {
                name,
                l: &lb + &fun(c.div(&c1, &c.y)),
                i1: &(&k.e * &k.e) - &fun(c.div(&(&c1 * &c.x), &c.y).scale(&q(4, 1))),
                i2: &(&k.f * &k.f) - &fun(i2v.scale(&q(4, 1))),
                parameters: vec!["c1"],
                constraints: Vec::new(),
            }
        }
    }
}
