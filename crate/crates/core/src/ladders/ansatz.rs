use crate::diffop::{DiffOp, QuasiFunction};
use crate::error::Result;
use crate::ratfield::RationalFunction;
use crate::systems::{system, Params, SystemName};

use super::basis::coefficient_matrix;
use super::lattice::lambda_n;

/// The monomials `x^i y^j` with `i + j <= n`.
pub fn monomials_up_to(n: usize, params: &Params) -> Vec<QuasiFunction> {
    let ring = params.ring();
    let (x, y) = (crate::diffop::x(ring), crate::diffop::y(ring));
    let mut out = Vec::new();
    for d in 0..=n {
        for j in 0..=d {
            let m = &x.pow((d - j) as i32).unwrap() * &y.pow(j as i32).unwrap();
            out.push(QuasiFunction::rational(m));
        }
    }
    out
}

/// A basis of the polynomials `P` of degree at most `n` with `op P = lambda P`,
/// found by solving the linear system on the coefficients of a general
/// ansatz.
pub fn polynomial_eigenspace(n: usize, op: &DiffOp, lambda: &RationalFunction, params: &Params) -> Result<Vec<QuasiFunction>> {
    let monomials = monomials_up_to(n, params);
    let shifted = op - &DiffOp::function(lambda.clone());
    let images = monomials.iter().map(|m| shifted.apply(m)).collect::<Result<Vec<_>>>()?;
    let kernel = coefficient_matrix(&images)?.nullspace()?;
    Ok(kernel
        .into_iter()
        .map(|v| {
            let body = v
                .iter()
                .zip(&monomials)
                .filter(|(c, _)| !c.is_zero())
                .fold(RationalFunction::zero(params.ring()), |acc, (c, m)| &acc + &(c * m.body()));
            QuasiFunction::rational(body)
        })
        .collect())
}

/// The degree-`n` polynomial eigenfunctions of the gauged `A` operator `L`
/// for `lambda_n`; there are exactly `n + 1` of them when the operator is
/// admissible.
pub fn eigen_ansatz_solve(n: usize, params: &Params) -> Result<Vec<QuasiFunction>> {
    let l = system(SystemName::AGauged, params).l;
    polynomial_eigenspace(n, &l, &lambda_n(n, params), params)
}
