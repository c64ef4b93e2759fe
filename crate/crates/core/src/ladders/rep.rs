use crate::diffop::{DiffOp, QuasiFunction};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::systems::{system, Params, SystemName};

use super::basis::express_in_basis;
use super::lattice::{build_lattice, PolyLattice};

/// Matrices of `L`, `I1`, `I2`, `I3` on the ordered lattice basis
/// `(P_{n,0}, ..., P_{0,n})`; column `j` holds the image of the `j`-th
/// basis vector.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    pub n: usize,
    pub l: Matrix,
    pub i1: Matrix,
    pub i2: Matrix,
    pub i3: Matrix,
}

impl RepMatrices {
    pub fn dimension(&self) -> usize {
        self.n + 1
    }

    pub fn named(&self) -> [(&'static str, &Matrix); 4] {
        [("L", &self.l), ("I1", &self.i1), ("I2", &self.i2), ("I3", &self.i3)]
    }
}

/// The matrix of `op` on `basis`.
pub fn action_matrix(op: &DiffOp, basis: &[QuasiFunction]) -> Result<Matrix> {
    let ring = op.ring().clone();
    let columns = basis
        .iter()
        .enumerate()
        .map(|(j, b)| {
            let image = op.apply(b)?;
            express_in_basis(basis, &image)?
                .ok_or_else(|| Error::BasisNotInvariant(format!("image of basis vector {j} leaves the span")))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(&ring, &columns)
}

pub fn rep_matrices(n: usize, params: &Params) -> Result<RepMatrices> {
    rep_matrices_on(&build_lattice(n, params)?, params)
}

pub fn rep_matrices_on(lattice: &PolyLattice, params: &Params) -> Result<RepMatrices> {
    let s = system(SystemName::AGauged, params);
    let basis = &lattice.entries;
    Ok(RepMatrices {
        n: lattice.n,
        l: action_matrix(&s.l, basis)?,
        i1: action_matrix(&s.i1, basis)?,
        i2: action_matrix(&s.i2, basis)?,
        i3: action_matrix(&s.i3(), basis)?,
    })
}

/// Rank of a list of equally sized matrices viewed as vectors.
pub fn matrix_span_rank(ms: &[&Matrix]) -> Result<usize> {
    let Some(first) = ms.first() else {
        return Ok(0);
    };
    let rows = ms.iter().map(|m| m.entries().to_vec()).collect();
    Matrix::from_rows(first.ring(), rows)?.rank()
}
