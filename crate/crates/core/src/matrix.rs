//! Dense exact matrices: arithmetic, elimination, block assembly and
//! block-permutation conjugation.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::{check_same, Field};
use crate::poly::Poly;

/// A particular solution and a basis of the homogeneous solutions.
pub type AffineSolution<E> = (Vec<E>, Vec<Vec<E>>);

/// Row-major dense matrix over `F`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Self { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { field, rows, cols, data }
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::ShapeMismatch("ragged rows".into()));
        }
        if let Some(bad) = rows.iter().flatten().find(|e| !field.contains(e)) {
            return Err(AlgebraError::FieldMismatch(format!("{bad:?}"), field.selector()));
        }
        Ok(Self { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64s(field: F, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, rows)
    }

    /// Column matrix.
    pub fn column(field: F, v: &[F::Elem]) -> Self {
        Self { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(AlgebraError::NotSquare(self.rows, self.cols))
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        check_same(&self.field, &other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Self { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Ok(Self { data, ..self.clone_shape() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(AlgebraError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Self { data, ..self.clone_shape() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    fn clone_shape(&self) -> Self {
        Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data: Vec::new() }
    }

    /// Column-stacking vectorization.
    pub fn vectorize(&self) -> Vec<F::Elem> {
        (0..self.cols).flat_map(|c| (0..self.rows).map(move |r| (r, c))).map(|(r, c)| self.get(r, c).clone()).collect()
    }

    /// Inverse of [`Mat::vectorize`].
    pub fn from_column_stack(field: F, rows: usize, cols: usize, v: &[F::Elem]) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(AlgebraError::LengthMismatch { expected: rows * cols, got: v.len() });
        }
        Ok(Self::from_fn(field, rows, cols, |r, c| v[c * rows + r].clone()))
    }

    /// Reduces in place to reduced row echelon form, pivoting on the first
    /// nonzero entry scanning down each column. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !f.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = f.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            let support: Vec<usize> = (c..cols).filter(|&j| !f.is_zero(self.get(r, j))).collect();
            for i in 0..rows {
                if i == r || f.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for &j in &support {
                    let v = f.sub(self.get(i, j), &f.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right null space. Each vector has a 1 in its own free
    /// coordinate and 0 in every other free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(row, free));
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`; returns a particular solution and a kernel
    /// basis, or `None` if the system is inconsistent.
    pub fn solve_affine(&self, b: &[F::Elem]) -> Result<Option<AffineSolution<F::Elem>>> {
        if b.len() != self.rows {
            return Err(AlgebraError::LengthMismatch { expected: self.rows, got: b.len() });
        }
        let f = &self.field;
        let mut aug = Self::from_fn(f.clone(), self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols).clone();
        }
        Ok(Some((x, self.kernel_basis())))
    }

    /// Determinant by elimination with first-nonzero pivoting.
    pub fn determinant(&self) -> Result<F::Elem> {
        self.require_square()?;
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(m.get(i, c))) else {
                return Ok(f.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = f.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot)?;
            for i in c + 1..n {
                if f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = f.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse via Gauss-Jordan on `[A | I]`; singular input yields
    /// `DivisionByZero`.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = Self::from_fn(f.clone(), n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(aug.submatrix(0, n, n, n))
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<F>) -> Result<Self> {
        self.require_square()?;
        check_same(&self.field, p.field())?;
        let n = self.rows;
        let mut acc = Self::zeros(self.field.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self)?;
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Self::from_fn(self.field.clone(), h, w, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(field: F, blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Formats one row per line with entries separated by spaces.
    pub fn format_rows(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| self.field.format_elem(e)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "Mat {}x{} over {}", self.rows, self.cols, self.field.selector())?;
        write!(out, "{}", self.format_rows())
    }
}

/// Row and column cut positions of a block grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    row_cuts: Vec<usize>,
    col_cuts: Vec<usize>,
}

impl BlockLayout {
    pub fn new(row_cuts: Vec<usize>, col_cuts: Vec<usize>) -> Result<Self> {
        for cuts in [&row_cuts, &col_cuts] {
            if cuts.first() != Some(&0) || cuts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(AlgebraError::ShapeMismatch(format!("invalid cuts {cuts:?}")));
            }
        }
        Ok(Self { row_cuts, col_cuts })
    }

    /// Layout from block sizes, e.g. `[s*t1, s*t2, ...]` on both axes.
    pub fn from_sizes(row_sizes: &[usize], col_sizes: &[usize]) -> Result<Self> {
        let cuts = |sizes: &[usize]| {
            std::iter::once(0)
                .chain(sizes.iter().scan(0, |acc, &s| {
                    *acc += s;
                    Some(*acc)
                }))
                .collect::<Vec<_>>()
        };
        Self::new(cuts(row_sizes), cuts(col_sizes))
    }

    /// `count x count` grid of `size x size` blocks.
    pub fn uniform(size: usize, count: usize) -> Result<Self> {
        Self::from_sizes(&vec![size; count], &vec![size; count])
    }

    pub fn block_rows(&self) -> usize {
        self.row_cuts.len() - 1
    }
    pub fn block_cols(&self) -> usize {
        self.col_cuts.len() - 1
    }
    pub fn rows(&self) -> usize {
        *self.row_cuts.last().unwrap()
    }
    pub fn cols(&self) -> usize {
        *self.col_cuts.last().unwrap()
    }
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.row_cuts[i]..self.row_cuts[i + 1]
    }
    pub fn col_range(&self, j: usize) -> std::ops::Range<usize> {
        self.col_cuts[j]..self.col_cuts[j + 1]
    }
}

/// Concatenates a grid of blocks according to `layout`.
pub fn block_assemble<F: Field>(field: F, layout: &BlockLayout, blocks: &[Vec<Mat<F>>]) -> Result<Mat<F>> {
    if blocks.len() != layout.block_rows() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{} block rows for a layout with {}",
            blocks.len(),
            layout.block_rows()
        )));
    }
    let mut out = Mat::zeros(field.clone(), layout.rows(), layout.cols());
    for (i, row) in blocks.iter().enumerate() {
        if row.len() != layout.block_cols() {
            return Err(AlgebraError::ShapeMismatch(format!("block row {i} has {} blocks", row.len())));
        }
        for (j, b) in row.iter().enumerate() {
            check_same(&field, b.field())?;
            let (rr, cr) = (layout.row_range(i), layout.col_range(j));
            if b.rows() != rr.len() || b.cols() != cr.len() {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "block ({i},{j}) is {}x{}, layout expects {}x{}",
                    b.rows(),
                    b.cols(),
                    rr.len(),
                    cr.len()
                )));
            }
            out.set_block(rr.start, cr.start, b);
        }
    }
    Ok(out)
}

/// Block `(i, j)` of `m` under `layout`.
pub fn block_extract<F: Field>(m: &Mat<F>, layout: &BlockLayout, i: usize, j: usize) -> Result<Mat<F>> {
    if m.rows() != layout.rows() || m.cols() != layout.cols() {
        return Err(AlgebraError::ShapeMismatch("matrix does not match layout".into()));
    }
    let (rr, cr) = (layout.row_range(i), layout.col_range(j));
    Ok(m.submatrix(rr.start, cr.start, rr.len(), cr.len()))
}

/// A permutation of equally sized column groups: new group `t` is old group
/// `order[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPermutation {
    order: Vec<usize>,
}

impl BlockPermutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &k in &order {
            if k >= n || std::mem::replace(&mut seen[k], true) {
                return Err(AlgebraError::BadPermutation(n));
            }
        }
        Ok(Self { order })
    }

    pub fn identity(n: usize) -> Self {
        Self { order: (0..n).collect() }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.order.len()];
        for (t, &k) in self.order.iter().enumerate() {
            inv[k] = t;
        }
        Self { order: inv }
    }

    /// The permutation matrix `P` whose `t`-th group of `s` columns is the
    /// `order[t]`-th group of columns of the identity.
    pub fn matrix<F: Field>(&self, field: F, s: usize) -> Mat<F> {
        let n = s * self.order.len();
        let mut p = Mat::zeros(field, n, n);
        for (t, &k) in self.order.iter().enumerate() {
            for q in 0..s {
                let one = p.field().one();
                p.set(k * s + q, t * s + q, one);
            }
        }
        p
    }
}

/// `P^-1 A P` computed by index remapping.
pub fn conjugate_by_permutation<F: Field>(a: &Mat<F>, perm: &BlockPermutation, s: usize) -> Result<Mat<F>> {
    a.require_square()?;
    if s == 0 || a.rows() != s * perm.len() {
        return Err(AlgebraError::BadPermutation(perm.len()));
    }
    let src = |i: usize| perm.order[i / s] * s + i % s;
    Ok(Mat::from_fn(a.field().clone(), a.rows(), a.cols(), |r, c| a.get(src(r), src(c)).clone()))
}

/// Rank of the span of the vectorizations of `mats`.
pub fn span_rank<F: Field>(field: &F, mats: &[Mat<F>]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<F::Elem>> = mats.iter().map(Mat::vectorize).collect();
    Mat::from_rows(field.clone(), rows).expect("equal shapes").rank()
}

/// Whether two families of equally shaped matrices span the same subspace.
pub fn same_span<F: Field>(field: &F, a: &[Mat<F>], b: &[Mat<F>]) -> bool {
    let ra = span_rank(field, a);
    let rb = span_rank(field, b);
    let both: Vec<Mat<F>> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(field, &both) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let f = gf(7);
        let a = Mat::from_i64s(f, &[&[1, 2, 3], &[4, 5, 6], &[0, 1, 1]]).unwrap();
        assert_eq!(Mat::identity(f, 3).mul(&a).unwrap(), a);
    }

    #[test]
    fn shape_and_field_mismatch() {
        let a = Mat::identity(gf(3), 2);
        let b = Mat::identity(gf(3), 3);
        assert!(matches!(a.mul(&b), Err(AlgebraError::ShapeMismatch(_))));
        let c = Mat::identity(gf(5), 2);
        assert!(matches!(a.add(&c), Err(AlgebraError::FieldMismatch(..))));
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        assert!(Mat::identity(f, 4).kernel_basis().is_empty());
        let z = Mat::zeros(f, 3, 3).kernel_basis();
        assert_eq!(z, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let a = Mat::from_i64s(f, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(a.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn determinant_examples() {
        let q = Rationals;
        assert_eq!(Mat::identity(q, 4).determinant().unwrap(), q.one());
        let s = Mat::from_i64s(q, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(q.is_zero(&s.determinant().unwrap()));
        let a = Mat::from_i64s(q, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]).unwrap();
        assert_eq!(a.determinant().unwrap(), q.from_i64(-3));
        assert!(matches!(Mat::zeros(q, 2, 3).determinant(), Err(AlgebraError::NotSquare(2, 3))));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Rationals;
        let a = Mat::from_i64s(q, &[&[2, 1], &[7, 4]]).unwrap();
        assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), Mat::identity(q, 2));
        let s = Mat::from_i64s(q, &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(s.inverse(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn solve_affine_detects_inconsistency() {
        let f = gf(5);
        let a = Mat::from_i64s(f, &[&[1, 1], &[1, 1]]).unwrap();
        assert!(a.solve_affine(&[1, 2]).unwrap().is_none());
        let (x, k) = a.solve_affine(&[3, 3]).unwrap().unwrap();
        assert_eq!(x, vec![3, 0]);
        assert_eq!(k, vec![vec![4, 1]]);
    }

    #[test]
    fn eval_poly_trivia() {
        let f = gf(5);
        let a = Mat::from_i64s(f, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(a.eval_poly(&Poly::x(f)).unwrap(), a);
        assert_eq!(a.eval_poly(&Poly::one(f)).unwrap(), Mat::identity(f, 2));
        // Cayley-Hamilton: x^2 - 5x - 2 = x^2 + 3 over GF(5).
        assert!(a.eval_poly(&Poly::from_i64s(f, &[-2, -5, 1])).unwrap().is_zero());
    }

    #[test]
    fn block_assembly_round_trip_and_ragged_grid() {
        let f = gf(3);
        let layout = BlockLayout::from_sizes(&[1, 2], &[2, 1]).unwrap();
        let blocks = vec![
            vec![Mat::from_i64s(f, &[&[1, 2]]).unwrap(), Mat::from_i64s(f, &[&[0]]).unwrap()],
            vec![Mat::from_i64s(f, &[&[1, 1], &[2, 2]]).unwrap(), Mat::from_i64s(f, &[&[1], &[0]]).unwrap()],
        ];
        let m = block_assemble(f, &layout, &blocks).unwrap();
        for (i, row) in blocks.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                assert_eq!(&block_extract(&m, &layout, i, j).unwrap(), b);
            }
        }
        let mut ragged = blocks.clone();
        ragged[1].pop();
        assert!(matches!(block_assemble(f, &layout, &ragged), Err(AlgebraError::ShapeMismatch(_))));
        let mut wrong = blocks;
        wrong[0][0] = Mat::identity(f, 2);
        assert!(matches!(block_assemble(f, &layout, &wrong), Err(AlgebraError::ShapeMismatch(_))));
    }

    #[test]
    fn permutation_conjugation_matches_matrix_product() {
        let f = gf(5);
        let a = Mat::from_fn(f, 6, 6, |r, c| ((r * 7 + c * 3 + r * c) % 5) as u32);
        let perm = BlockPermutation::new(vec![2, 0, 1]).unwrap();
        let p = perm.matrix(f, 2);
        let direct = p.inverse().unwrap().mul(&a).unwrap().mul(&p).unwrap();
        assert_eq!(conjugate_by_permutation(&a, &perm, 2).unwrap(), direct);
        assert_eq!(p.mul(&p.transpose()).unwrap(), Mat::identity(f, 6));
        let back = conjugate_by_permutation(&direct, &perm.inverse(), 2).unwrap();
        assert_eq!(back, a);
        assert_eq!(conjugate_by_permutation(&a, &BlockPermutation::identity(3), 2).unwrap(), a);
        assert!(BlockPermutation::new(vec![0, 0, 1]).is_err());
        assert!(conjugate_by_permutation(&a, &perm, 4).is_err());
    }
}
