//! Brute-force commutant: the null space of `X -> AX - XA` on column-stacked
//! `vec(X)`, assembled entry by entry so that it shares no code path with
//! the structured centralizer bases.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::matrix::Mat;

/// Default bound on `n`; the system has `n^2` unknowns.
pub const DEFAULT_MAX_N: usize = 40;

/// The `n^2 x n^2` matrix of `vec(X) -> vec(AX - XA)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterSystem<F: Field> {
    source: Mat<F>,
    coefficients: Mat<F>,
}

impl<F: Field> SylvesterSystem<F> {
    pub fn new(a: &Mat<F>, max_n: usize) -> Result<Self> {
        if !a.is_square() {
            return Err(AlgebraError::NotSquare(a.rows(), a.cols()));
        }
        let n = a.rows();
        if n > max_n {
            return Err(AlgebraError::TooLarge { n, cap: max_n });
        }
        let f = a.field().clone();
        let mut m = Mat::zeros(f.clone(), n * n, n * n);
        // Row (i, j) at j*n + i: sum_k A_ik X_kj - X_ik A_kj.
        for j in 0..n {
            for i in 0..n {
                let row = j * n + i;
                for k in 0..n {
                    let a_ik = a.get(i, k);
                    if !f.is_zero(a_ik) {
                        let col = j * n + k;
                        let v = f.add(m.get(row, col), a_ik);
                        m.set(row, col, v);
                    }
                    let a_kj = a.get(k, j);
                    if !f.is_zero(a_kj) {
                        let col = k * n + i;
                        let v = f.sub(m.get(row, col), a_kj);
                        m.set(row, col, v);
                    }
                }
            }
        }
        Ok(Self { source: a.clone(), coefficients: m })
    }

    pub fn source(&self) -> &Mat<F> {
        &self.source
    }
    pub fn coefficients(&self) -> &Mat<F> {
        &self.coefficients
    }

    pub fn nullity(&self) -> usize {
        self.coefficients.cols() - self.coefficients.rank()
    }
}

/// Basis of `Z(A)`, one matrix per free variable of the reduced system.
pub fn commutant_basis<F: Field>(a: &Mat<F>, max_n: usize) -> Result<Vec<Mat<F>>> {
    let sys = SylvesterSystem::new(a, max_n)?;
    let n = a.rows();
    sys.coefficients().kernel_basis().iter().map(|v| Mat::from_column_stack(a.field().clone(), n, n, v)).collect()
}

pub fn commutant_dim<F: Field>(a: &Mat<F>, max_n: usize) -> Result<usize> {
    Ok(SylvesterSystem::new(a, max_n)?.nullity())
}

/// Exact test `AX = XA`.
pub fn commutes<F: Field>(a: &Mat<F>, x: &Mat<F>) -> Result<bool> {
    if !a.is_square() || a.rows() != x.rows() || a.cols() != x.cols() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{}x{} against {}x{}",
            a.rows(),
            a.cols(),
            x.rows(),
            x.cols()
        )));
    }
    Ok(a.commutator(x)?.is_zero())
}
