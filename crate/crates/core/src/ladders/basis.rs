use std::collections::BTreeMap;

use crate::diffop::{QuasiFunction, ETA, XI};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ratfield::{Polynomial, RationalFunction};

/// Coefficient vectors of `funcs` over the Laurent monomials in `xi`,
/// `eta`: row `r` of the returned matrix is the coefficient of the `r`-th
/// monomial, column `j` belongs to `funcs[j]`.
///
/// All functions must carry the same powers. Denominator factors that
/// involve the coordinates are cleared by a common multiplier first.
pub fn coefficient_matrix(funcs: &[QuasiFunction]) -> Result<Matrix> {
    let Some(first) = funcs.iter().find(|f| !f.is_zero()) else {
        let ring = funcs.first().map(|f| f.ring().clone()).ok_or(Error::InvalidArgument("empty basis".into()))?;
        return Ok(Matrix::zeros(&ring, 0, funcs.len()));
    };
    let ring = first.ring().clone();
    for f in funcs {
        if !f.is_zero() && (f.xi_exp() != first.xi_exp() || f.eta_exp() != first.eta_exp()) {
            return Err(Error::ExponentMismatch);
        }
    }
    let clear = RationalFunction::from(common_multiplier(funcs.iter().map(QuasiFunction::body)));
    let mut rows: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    let mut columns = Vec::with_capacity(funcs.len());
    for f in funcs {
        let split = (f.body() * &clear).laurent_split(&[XI, ETA])?;
        for (k, _) in &split {
            let next = rows.len();
            rows.entry(k.clone()).or_insert(next);
        }
        columns.push(split);
    }
    let mut m = Matrix::zeros(&ring, rows.len(), funcs.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (k, c) in col {
            m.set(rows[&k], j, c);
        }
    }
    Ok(m)
}

/// Product of the coordinate-dependent, non-monomial denominator factors,
/// each to its largest multiplicity.
fn common_multiplier<'a>(bodies: impl Iterator<Item = &'a RationalFunction>) -> Polynomial {
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    let mut ring = None;
    for b in bodies {
        ring.get_or_insert_with(|| b.ring().clone());
        for (f, e) in b.denominator_factors() {
            let coordinate = f.depends_on(XI) || f.depends_on(ETA);
            if !coordinate || f.len() == 1 {
                continue;
            }
            match factors.iter_mut().find(|(g, _)| g == f) {
                Some((_, m)) => *m = (*m).max(*e),
                None => factors.push((f.clone(), *e)),
            }
        }
    }
    let ring = ring.unwrap_or_else(crate::ratfield::Ring::standard);
    factors
        .iter()
        .fold(Polynomial::one(&ring), |acc, (f, e)| &acc * &f.pow(*e))
}

/// Coordinates of `target` in `basis`, or `None` when it is outside the
/// span. The basis must be linearly independent.
pub fn express_in_basis(basis: &[QuasiFunction], target: &QuasiFunction) -> Result<Option<Vec<RationalFunction>>> {
    let mut all = basis.to_vec();
    all.push(target.clone());
    let m = coefficient_matrix(&all)?;
    let n = basis.len();
    let a = Matrix::from_columns(m.ring(), &(0..n).map(|j| m.column(j)).collect::<Vec<_>>())?;
    if a.rows() == 0 {
        // every function vanished
        return Ok(Some(vec![RationalFunction::zero(m.ring()); n]));
    }
    a.solve(&m.column(n))
}

/// Rank of the span of `funcs` over the parameter field.
pub fn span_rank(funcs: &[QuasiFunction]) -> Result<usize> {
    coefficient_matrix(funcs)?.rank()
}
