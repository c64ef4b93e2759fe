//! Dense matrices over the rational-function field.
//!
//! Elimination pivots on the leftmost nonzero entry; an entry is zero only
//! if it vanishes identically, so ranks are generic over the parameters.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ratfield::{RationalFunction, Ring};

#[derive(Clone)]
pub struct Matrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![RationalFunction::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, RationalFunction::one(ring));
        }
        m
    }

    pub fn scalar(n: usize, c: &RationalFunction) -> Matrix {
        let mut m = Matrix::zeros(c.ring(), n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<RationalFunction>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            ring: ring.clone(),
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(ring: &Arc<Ring>, columns: &[Vec<RationalFunction>]) -> Result<Matrix> {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::InvalidArgument("ragged matrix columns".into()));
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<RationalFunction> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if !Ring::compatible(&self.ring, &other.ring) {
            return Err(Error::IncompatibleRings);
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidArgument("matrix shapes differ".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.try_sub(b)).collect::<Result<_>>()?;
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument("matrix shapes do not compose".into()));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RationalFunction::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.try_mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Multiplies every entry by `c`.
    pub fn scale_by(&self, c: &RationalFunction) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn mat_equal(&self, other: &Matrix) -> bool {
        self.first_difference(other).is_none() && (self.rows, self.cols) == (other.rows, other.cols)
    }

    /// First entry, in row-major order, where the matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize, RationalFunction, RationalFunction)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).rf_equal(other.get(i, j)))
            .map(|(i, j)| (i, j, self.get(i, j).clone(), other.get(i, j).clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFunction::is_zero)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip()?;
            for j in c..m.cols {
                let v = m.get(r, j).try_mul(&inv)?;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).try_sub(&f.try_mul(m.get(r, j))?)?;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// A basis of the right kernel, one vector per free column.
    pub fn nullspace(&self) -> Result<Vec<Vec<RationalFunction>>> {
        let (m, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![RationalFunction::zero(&self.ring); self.cols];
                v[f] = RationalFunction::one(&self.ring);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect())
    }

    /// The unique solution of `self * v = b`, if one exists.
    pub fn solve(&self, b: &[RationalFunction]) -> Result<Option<Vec<RationalFunction>>> {
        if b.len() != self.rows {
            return Err(Error::InvalidArgument("right-hand side has wrong length".into()));
        }
        let mut aug = Matrix::zeros(&self.ring, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (m, pivots) = aug.rref()?;
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return Ok(None);
        }
        Ok(Some((0..self.cols).map(|r| m.get(r, self.cols).clone()).collect()))
    }

    /// Entries as canonical strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect()
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Matrix) -> bool {
        self.mat_equal(other)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.to_strings().iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfield::q;
    use proptest::prelude::*;

    fn ring() -> Arc<Ring> {
        Ring::standard()
    }

    fn int(n: i64) -> RationalFunction {
        RationalFunction::from_int(&ring(), n)
    }

    fn var(name: &str) -> RationalFunction {
        RationalFunction::var(&ring(), name).unwrap()
    }

    #[test]
    fn symbolic_rank_and_kernel() {
        // rows (1, b) and (a, a b) are dependent for every a, b
        let (a, b) = (var("alpha"), var("beta"));
        let m = Matrix::from_rows(&ring(), vec![vec![int(1), b.clone()], vec![a.clone(), &a * &b]]).unwrap();
        assert_eq!(m.rank().unwrap(), 1);
        let ker = m.nullspace().unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![-&b, int(1)]);
    }

    #[test]
    fn solve_two_by_two() {
        let a = var("alpha");
        // [[a, 1], [1, 0]] v = [a + 2, 1]  ->  v = (1, 2)
        let m = Matrix::from_rows(&ring(), vec![vec![a.clone(), int(1)], vec![int(1), int(0)]]).unwrap();
        let v = m.solve(&[&a + &int(2), int(1)]).unwrap().unwrap();
        assert_eq!(v, vec![int(1), int(2)]);
        let singular = Matrix::from_rows(&ring(), vec![vec![int(1), int(1)], vec![int(2), int(2)]]).unwrap();
        assert!(singular.solve(&[int(1), int(3)]).unwrap().is_none());
    }

    #[test]
    fn commutator_of_elementary_matrices() {
        let mut e = Matrix::zeros(&ring(), 2, 2);
        e.set(0, 1, int(1));
        let f = e.transpose();
        let mut h = Matrix::identity(&ring(), 2);
        h.set(1, 1, int(-1));
        assert_eq!(e.commutator(&f).unwrap(), h);
        assert_eq!(h.commutator(&e).unwrap(), e.scale_by(&int(2)));
        assert_eq!(e.first_difference(&f).unwrap().0, 0);
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(entries in proptest::collection::vec(-3i64..4, 12)) {
            let a = var("alpha");
            let rows: Vec<Vec<RationalFunction>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&v| &int(v) + &a.scale(&q(v % 2, 1))).collect())
                .collect();
            let m = Matrix::from_rows(&ring(), rows).unwrap();
            let ker = m.nullspace().unwrap();
            prop_assert_eq!(ker.len() + m.rank().unwrap(), 4);
            for v in ker {
                let col = Matrix::from_columns(&ring(), &[v]).unwrap();
                prop_assert!(m.try_mul(&col).unwrap().is_zero());
            }
        }
    }
}
