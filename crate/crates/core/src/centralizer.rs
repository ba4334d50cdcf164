//! Explicit bases of centralizers of canonical forms.
//!
//! The building block is `Z(C) = {[v, Cv, ..., C^(s-1) v]}` for a companion
//! matrix `C`. A centralizer element of a generalized Jordan form is a grid of
//! cells indexed by chain pairs `(i, j)`; each cell is block lower triangular
//! Toeplitz along a chain `T_0, T_1, ...` with
//!
//! * E-kind: `T_0 = X'_0`, `T_d = X'_d + tilde(T_{d-1})`,
//! * first kind: `T_d = X'_d`,
//!
//! every `X'_d` ranging independently over `Z(C)`. Cells with `alpha_i >
//! alpha_j` are bottom-aligned, cells with `alpha_i < alpha_j` left-aligned.
//!
//! The centralizer of the Weyr form is obtained two ways: by conjugating the
//! Jordan-side basis with the Weyr permutation, and by a level-by-level
//! recursion that never looks at the Jordan side. The two must span the same
//! space.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::forms::{gj_block, gj_form, weyr_form, weyr_permutation, CanonicalSpec, Kind};
use crate::matrix::{block_extract, conjugate_by_permutation, span_rank, Mat};
use crate::partition::{conjugate_partition, SegreData};
use crate::poly::Poly;

/// Where a basis element's single free parameter lives. All indices are
/// 1-based; `zc_index = k` selects the Z(C) generator `C^(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamSlot {
    /// Jordan-side parameter `X'_d` of cell `(row_chain, col_chain)`.
    Chain { row_chain: usize, col_chain: usize, diagonal: usize, zc_index: usize },
    /// Fresh block introduced by the Weyr recursion in level block
    /// `(row_level, col_level)` at chain position `(row_chain, col_chain)`.
    Level { row_level: usize, col_level: usize, row_chain: usize, col_chain: usize, zc_index: usize },
}

impl ParamSlot {
    fn encode(&self) -> String {
        match *self {
            Self::Chain { row_chain, col_chain, diagonal, zc_index } => {
                format!("c{row_chain}.{col_chain}.{diagonal}.{zc_index}")
            }
            Self::Level { row_level, col_level, row_chain, col_chain, zc_index } => {
                format!("l{row_level}.{col_level}.{row_chain}.{col_chain}.{zc_index}")
            }
        }
    }

    fn decode(s: &str) -> Result<Self> {
        let bad = || AlgebraError::Parse(format!("bad layout entry `{s}`"));
        let nums =
            |t: &str| -> Result<Vec<usize>> { t.split('.').map(|x| x.parse::<usize>().map_err(|_| bad())).collect() };
        if let Some(rest) = s.strip_prefix('c') {
            match nums(rest)?.as_slice() {
                &[row_chain, col_chain, diagonal, zc_index] => {
                    Ok(Self::Chain { row_chain, col_chain, diagonal, zc_index })
                }
                _ => Err(bad()),
            }
        } else if let Some(rest) = s.strip_prefix('l') {
            match nums(rest)?.as_slice() {
                &[row_level, col_level, row_chain, col_chain, zc_index] => {
                    Ok(Self::Level { row_level, col_level, row_chain, col_chain, zc_index })
                }
                _ => Err(bad()),
            }
        } else {
            Err(bad())
        }
    }
}

/// An ordered basis of `Z(generator)` and the parameter each element sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerBasis<F: Field> {
    generator: Mat<F>,
    basis: Vec<Mat<F>>,
    layout: Vec<ParamSlot>,
}

impl<F: Field> CentralizerBasis<F> {
    pub fn new(generator: Mat<F>, basis: Vec<Mat<F>>, layout: Vec<ParamSlot>) -> Result<Self> {
        if basis.len() != layout.len() {
            return Err(AlgebraError::LengthMismatch { expected: basis.len(), got: layout.len() });
        }
        Ok(Self { generator, basis, layout })
    }

    pub fn generator(&self) -> &Mat<F> {
        &self.generator
    }
    pub fn basis(&self) -> &[Mat<F>] {
        &self.basis
    }
    pub fn layout(&self) -> &[ParamSlot] {
        &self.layout
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Every element commutes exactly with the generator.
    pub fn all_commute(&self) -> bool {
        self.basis.iter().all(|b| self.generator.commutator(b).is_ok_and(|c| c.is_zero()))
    }

    /// Rank of the stacked vectorizations.
    pub fn span_rank(&self) -> usize {
        span_rank(self.generator.field(), &self.basis)
    }

    pub fn is_independent(&self) -> bool {
        self.span_rank() == self.dim()
    }

    /// `sum coeffs[i] * basis[i]`.
    pub fn sample_element(&self, coeffs: &[F::Elem]) -> Result<Mat<F>> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::LengthMismatch { expected: self.dim(), got: coeffs.len() });
        }
        let f = self.generator.field();
        let mut acc = Mat::zeros(f.clone(), self.generator.rows(), self.generator.cols());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !f.is_zero(c) {
                acc = acc.add(&b.scale(c))?;
            }
        }
        Ok(acc)
    }

    /// Coefficients drawn from a ChaCha stream seeded with `seed`.
    pub fn random_coeffs(&self, seed: u64) -> Vec<F::Elem> {
        let f = self.generator.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..self.dim()).map(|_| f.random_elem(&mut rng)).collect()
    }

    /// Deterministic pseudo-random element for a given seed.
    pub fn sample_seeded(&self, seed: u64) -> Mat<F> {
        self.sample_element(&self.random_coeffs(seed)).expect("coefficient count matches")
    }

    /// `dim=<d> layout=<slot,slot,...>`.
    pub fn header(&self) -> String {
        let slots: Vec<String> = self.layout.iter().map(ParamSlot::encode).collect();
        format!("dim={} layout={}", self.dim(), slots.join(","))
    }
}

/// Parses the layout part of a basis header.
pub fn parse_layout(encoded: &str) -> Result<Vec<ParamSlot>> {
    if encoded.is_empty() {
        return Ok(Vec::new());
    }
    encoded.split(',').map(ParamSlot::decode).collect()
}

/// Coefficients `c_0..c_{s-1}` read back from the last column of `C`.
fn companion_coeffs<F: Field>(c: &Mat<F>) -> Vec<F::Elem> {
    let s = c.rows();
    (0..s).map(|i| c.field().neg(c.get(i, s - 1))).collect()
}

/// `[v, Cv, ..., C^(s-1) v]`.
pub fn zc_element<F: Field>(c: &Mat<F>, v: &[F::Elem]) -> Result<Mat<F>> {
    if !c.is_square() {
        return Err(AlgebraError::NotSquare(c.rows(), c.cols()));
    }
    let s = c.rows();
    if v.len() != s {
        return Err(AlgebraError::ShapeMismatch(format!("parameter of length {} for s = {s}", v.len())));
    }
    let mut out = Mat::zeros(c.field().clone(), s, s);
    let mut col = Mat::column(c.field().clone(), v);
    for j in 0..s {
        for i in 0..s {
            out.set(i, j, col.get(i, 0).clone());
        }
        if j + 1 < s {
            col = c.mul(&col)?;
        }
    }
    Ok(out)
}

fn unit<F: Field>(f: &F, s: usize, k: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); s];
    v[k] = f.one();
    v
}

/// `{zc_element(C, e_k)} = {I, C, ..., C^(s-1)}`.
pub fn zc_basis<F: Field>(c: &Mat<F>) -> Result<CentralizerBasis<F>> {
    let s = c.rows();
    let basis = (0..s).map(|k| zc_element(c, &unit(c.field(), s, k))).collect::<Result<Vec<_>>>()?;
    let layout = (1..=s).map(|k| ParamSlot::Chain { row_chain: 1, col_chain: 1, diagonal: 1, zc_index: k }).collect();
    CentralizerBasis::new(c.clone(), basis, layout)
}

/// The element of `Z(C)` with the given last row: the first column is
/// rebuilt from `x_{s-i,1} = c_{s-i} x_{s,1} + ... + c_{s-1} x_{s,i} + x_{s,i+1}`.
pub fn last_row_reconstruct<F: Field>(c: &Mat<F>, last_row: &[F::Elem]) -> Result<Mat<F>> {
    let s = c.rows();
    if last_row.len() != s {
        return Err(AlgebraError::ShapeMismatch(format!("last row of length {} for s = {s}", last_row.len())));
    }
    let f = c.field();
    let coeffs = companion_coeffs(c);
    let mut first = vec![f.zero(); s];
    first[s - 1] = last_row[0].clone();
    for i in 1..s {
        let mut acc = last_row[i].clone();
        for k in 0..i {
            acc = f.add(&acc, &f.mul(&coeffs[s - i + k], &last_row[k]));
        }
        first[s - 1 - i] = acc;
    }
    zc_element(c, &first)
}

/// Strictly upper triangular Toeplitz matrix whose `k`-th superdiagonal is
/// the `k`-th entry of the last row of `X`.
pub fn tilde<F: Field>(x: &Mat<F>) -> Result<Mat<F>> {
    if !x.is_square() {
        return Err(AlgebraError::NotSquare(x.rows(), x.cols()));
    }
    let n = x.rows();
    Ok(Mat::from_fn(
        x.field().clone(),
        n,
        n,
        |i, j| {
            if j > i {
                x.get(n - 1, j - i - 1).clone()
            } else {
                x.field().zero()
            }
        },
    ))
}

/// Solution set of `E X + C T = T C + Y E` for a given `X = X' + tilde(A)`.
#[derive(Debug, Clone)]
pub struct CoupledSolution<F: Field> {
    /// The forced value of `Y`, which equals `X`.
    pub y: Mat<F>,
    /// Particular solution `tilde(X)`.
    pub particular: Mat<F>,
    /// Basis of the homogeneous solutions; spans `Z(C)`.
    pub homogeneous: Vec<Mat<F>>,
}

/// Solves the coupled cell equation as a linear system in the unknowns `T`
/// and `Y - X in Z(C)`, then checks that the solutions are exactly
/// `Y = X`, `T in tilde(X) + Z(C)`.
pub fn solve_coupled_cell<F: Field>(c: &Mat<F>, e: &Mat<F>, x: &Mat<F>) -> Result<CoupledSolution<F>> {
    let s = c.rows();
    let f = c.field().clone();
    if !c.is_square() || e.rows() != s || e.cols() != s || x.rows() != s || x.cols() != s {
        return Err(AlgebraError::ShapeMismatch("coupled cell needs s x s inputs".into()));
    }
    // Unknowns: vec(T) (s*s entries) then delta (s entries), Y = X + zc(delta).
    let unknowns = s * s + s;
    let apply = |t: &Mat<F>, delta: &[F::Elem]| -> Result<Vec<F::Elem>> {
        let y_part = zc_element(c, delta)?.mul(e)?;
        Ok(c.mul(t)?.sub(&t.mul(c)?)?.sub(&y_part)?.vectorize())
    };
    let mut columns = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut t = Mat::zeros(f.clone(), s, s);
        let mut delta = vec![f.zero(); s];
        if u < s * s {
            t.set(u % s, u / s, f.one());
        } else {
            delta[u - s * s] = f.one();
        }
        columns.push(apply(&t, &delta)?);
    }
    let system = Mat::from_fn(f.clone(), s * s, unknowns, |r, col| columns[col][r].clone());
    let rhs = x.mul(e)?.sub(&e.mul(x)?)?.vectorize();
    let (sol, kernel) = system.solve_affine(&rhs)?.ok_or(AlgebraError::NoSolution)?;
    let delta_is_zero = |v: &[F::Elem]| v[s * s..].iter().all(|d| f.is_zero(d));
    if !delta_is_zero(&sol) || !kernel.iter().all(|k| delta_is_zero(k)) {
        return Err(AlgebraError::NoSolution);
    }
    let particular = tilde(x)?;
    let found = Mat::from_column_stack(f.clone(), s, s, &sol[..s * s])?;
    if !c.commutator(&found.sub(&particular)?)?.is_zero() {
        return Err(AlgebraError::NoSolution);
    }
    let homogeneous =
        kernel.iter().map(|k| Mat::from_column_stack(f.clone(), s, s, &k[..s * s])).collect::<Result<Vec<_>>>()?;
    Ok(CoupledSolution { y: x.clone(), particular, homogeneous })
}

/// Toeplitz chain `T_0..T_{len-1}` generated by the parameters `params[d]`.
fn toeplitz_chain<F: Field>(kind: Kind, params: &[Mat<F>]) -> Result<Vec<Mat<F>>> {
    let mut chain: Vec<Mat<F>> = Vec::with_capacity(params.len());
    for (d, x) in params.iter().enumerate() {
        let t = match (kind, d) {
            (Kind::E, d) if d > 0 => x.add(&tilde(&chain[d - 1])?)?,
            _ => x.clone(),
        };
        chain.push(t);
    }
    Ok(chain)
}

/// Writes cell `(i, j)` into `out` (Jordan coordinates) from its chain.
fn place_cell<F: Field>(out: &mut Mat<F>, segre: &SegreData, s: usize, i: usize, j: usize, chain: &[Mat<F>]) {
    let (ai, aj) = (segre.alpha()[i], segre.alpha()[j]);
    let shift = ai.saturating_sub(aj);
    for a in 0..ai {
        for b in 0..aj {
            let Some(d) = a.checked_sub(b + shift) else { continue };
            if let Some(t) = chain.get(d) {
                let r = segre.jordan_index(i, a) * s;
                let col = segre.jordan_index(j, b) * s;
                out.set_block(r, col, t);
            }
        }
    }
}

/// Jordan-side basis with cells in lexicographic `(i, j)` order, then
/// diagonal, then Z(C) index.
fn jordan_basis<F: Field>(generator: Mat<F>, c: &Mat<F>, kind: Kind, segre: &SegreData) -> Result<CentralizerBasis<F>> {
    let s = c.rows();
    let f = c.field().clone();
    let n = s * segre.r();
    let zc = zc_basis(c)?;
    let zero = Mat::zeros(f.clone(), s, s);
    let mut basis = Vec::new();
    let mut layout = Vec::new();
    for i in 0..segre.m() {
        for j in 0..segre.m() {
            let len = segre.alpha()[i].min(segre.alpha()[j]);
            for d in 0..len {
                for (k, gen) in zc.basis().iter().enumerate() {
                    let mut params = vec![zero.clone(); len];
                    params[d] = gen.clone();
                    let chain = toeplitz_chain(kind, &params)?;
                    let mut m = Mat::zeros(f.clone(), n, n);
                    place_cell(&mut m, segre, s, i, j, &chain);
                    basis.push(m);
                    layout.push(ParamSlot::Chain {
                        row_chain: i + 1,
                        col_chain: j + 1,
                        diagonal: d + 1,
                        zc_index: k + 1,
                    });
                }
            }
        }
    }
    CentralizerBasis::new(generator, basis, layout)
}

/// Basis of the centralizer of a single generalized Jordan block; `ell * s`
/// elements.
pub fn zg_block_basis<F: Field>(p: &Poly<F>, ell: usize, kind: Kind) -> Result<CentralizerBasis<F>> {
    let g = gj_block(p, ell, kind)?;
    let s = p.degree().expect("validated by gj_block");
    let c = g.submatrix(0, 0, s, s);
    jordan_basis(g, &c, kind, &SegreData::new(&[ell])?)
}

/// Basis of the centralizer of the full generalized Jordan form;
/// `s * sum (2i-1) alpha_i` elements.
pub fn zg_basis<F: Field>(spec: &CanonicalSpec<F>) -> Result<CentralizerBasis<F>> {
    jordan_basis(gj_form(spec), &spec.companion(), spec.kind(), spec.segre())
}

/// Centralizer of the Weyr form, transported from [`zg_basis`] by the Weyr
/// permutation.
pub fn zw_basis<F: Field>(spec: &CanonicalSpec<F>) -> Result<CentralizerBasis<F>> {
    let zg = zg_basis(spec)?;
    let perm = weyr_permutation(spec);
    let s = spec.s();
    let basis = zg.basis().iter().map(|b| conjugate_by_permutation(b, &perm, s)).collect::<Result<Vec<_>>>()?;
    CentralizerBasis::new(weyr_form(spec), basis, zg.layout().to_vec())
}

/// Centralizer of the Weyr form built level by level without reference to
/// the Jordan side.
///
/// With levels `1..=H` (`H = alpha_1`) and `tau_{H+1} = 0`, the level block
/// `K_{k,l}` (`k <= l`) splits its rows into the first `tau_{k+1}` chains and
/// the rest, its columns into the first `tau_{l+1}` chains and the rest:
///
/// ```text
/// K_{k,l} = [ K_{k+1,l+1}  Y_{k,l} ]
///           [      0       X_{k,l} ]
/// ```
///
/// `X_{k,l}` has independent Z(C) blocks; `Y_{k,l} = Y'_{k,l} + tilde` of the
/// matching blocks of `K_{k+1,l}` (E-kind, `k < l`), with `Y'` independent.
pub fn zw_basis_recursive<F: Field>(spec: &CanonicalSpec<F>) -> Result<CentralizerBasis<F>> {
    let layout = recursive_layout(spec.segre(), spec.s());
    let f = spec.field().clone();
    let mut basis = Vec::with_capacity(layout.len());
    for idx in 0..layout.len() {
        let mut coeffs = vec![f.zero(); layout.len()];
        coeffs[idx] = f.one();
        basis.push(build_recursive(spec, &coeffs)?);
    }
    CentralizerBasis::new(weyr_form(spec), basis, layout)
}

/// Order in which the recursion consumes fresh Z(C) blocks: levels `k`
/// descending, `l` ascending from `k`, the `X` part before `Y'`, chain
/// pairs row-major. One slot per Z(C) coordinate.
fn recursive_fresh_blocks(segre: &SegreData) -> Vec<(usize, usize, usize, usize)> {
    let h = segre.height();
    let tau = |k: usize| if k > h { 0 } else { segre.tau()[k - 1] };
    let mut out = Vec::new();
    for k in (1..=h).rev() {
        for l in k..=h {
            // X_{k,l}: rows tau_{k+1}..tau_k, cols tau_{l+1}..tau_l.
            for q in tau(k + 1)..tau(k) {
                for u in tau(l + 1)..tau(l) {
                    out.push((k, l, q, u));
                }
            }
            // Y'_{k,l}: rows 0..tau_{k+1}, cols tau_{l+1}..tau_l.
            for q in 0..tau(k + 1) {
                for u in tau(l + 1)..tau(l) {
                    out.push((k, l, q, u));
                }
            }
        }
    }
    out
}

fn recursive_layout(segre: &SegreData, s: usize) -> Vec<ParamSlot> {
    recursive_fresh_blocks(segre)
        .into_iter()
        .flat_map(|(k, l, q, u)| {
            (1..=s).map(move |z| ParamSlot::Level {
                row_level: k,
                col_level: l,
                row_chain: q + 1,
                col_chain: u + 1,
                zc_index: z,
            })
        })
        .collect()
}

/// A level block stored as rows of `s x s` blocks.
type BlockGrid<F> = Vec<Vec<Mat<F>>>;

/// Runs the level recursion with the fresh Z(C) parameters taken from
/// `coeffs` (`s` scalars per fresh block, in [`recursive_fresh_blocks`]
/// order).
fn build_recursive<F: Field>(spec: &CanonicalSpec<F>, coeffs: &[F::Elem]) -> Result<Mat<F>> {
    let segre = spec.segre();
    let s = spec.s();
    let h = segre.height();
    let c = spec.companion();
    let f = spec.field().clone();
    let tau = |k: usize| if k > h { 0 } else { segre.tau()[k - 1] };
    let zero = Mat::zeros(f.clone(), s, s);

    let fresh = recursive_fresh_blocks(segre);
    if coeffs.len() != fresh.len() * s {
        return Err(AlgebraError::LengthMismatch { expected: fresh.len() * s, got: coeffs.len() });
    }
    let mut fresh_values = std::collections::HashMap::new();
    for (idx, key) in fresh.iter().enumerate() {
        fresh_values.insert(*key, zc_element(&c, &coeffs[idx * s..(idx + 1) * s])?);
    }

    // grid[k][l] holds K_{k,l} as tau_k x tau_l blocks, for 1 <= k <= l <= H.
    let mut grid: Vec<Vec<Option<BlockGrid<F>>>> = vec![vec![None; h + 2]; h + 2];
    for k in (1..=h).rev() {
        for l in k..=h {
            let mut blocks = vec![vec![zero.clone(); tau(l)]; tau(k)];
            for (q, row) in blocks.iter_mut().enumerate() {
                for (u, cell) in row.iter_mut().enumerate() {
                    let upper = q < tau(k + 1);
                    let left = u < tau(l + 1);
                    *cell = match (upper, left) {
                        (true, true) => grid[k + 1][l + 1].as_ref().expect("built earlier")[q][u].clone(),
                        (false, true) => zero.clone(),
                        (false, false) => fresh_values[&(k, l, q, u)].clone(),
                        (true, false) => {
                            let own = &fresh_values[&(k, l, q, u)];
                            match spec.kind() {
                                Kind::E if k < l => {
                                    let below = &grid[k + 1][l].as_ref().expect("built earlier")[q][u];
                                    own.add(&tilde(below)?)?
                                }
                                _ => own.clone(),
                            }
                        }
                    };
                }
            }
            grid[k][l] = Some(blocks);
        }
    }

    let n = spec.n();
    let mut out = Mat::zeros(f, n, n);
    for (k, grid_row) in grid.iter().enumerate().take(h + 1).skip(1) {
        for (l, cell) in grid_row.iter().enumerate().take(h + 1).skip(k) {
            for (q, row) in cell.as_ref().unwrap().iter().enumerate() {
                for (u, b) in row.iter().enumerate() {
                    out.set_block(segre.weyr_index(k, q) * s, segre.weyr_index(l, u) * s, b);
                }
            }
        }
    }
    Ok(out)
}

/// Both closed forms, `s * sum (2i-1) alpha_i` and `s * sum tau_j^2`.
pub fn centralizer_dim_formulas(alpha: &[usize], s: usize) -> Result<(usize, usize)> {
    let tau = conjugate_partition(alpha)?;
    let segre = s * alpha.iter().enumerate().map(|(i, a)| (2 * i + 1) * a).sum::<usize>();
    let weyr = s * tau.iter().map(|t| t * t).sum::<usize>();
    Ok((segre, weyr))
}

/// Dimension of the centralizer of one primary component.
pub fn centralizer_dim(alpha: &[usize], s: usize) -> Result<usize> {
    let (a, b) = centralizer_dim_formulas(alpha, s)?;
    if a != b {
        return Err(AlgebraError::FormulaMismatch(a, b));
    }
    Ok(a)
}

/// Checks that `k` has the Weyr-form size and is block upper triangular
/// with respect to the `s * tau_k` level cuts.
fn check_weyr_shape<F: Field>(k: &Mat<F>, spec: &CanonicalSpec<F>) -> Result<()> {
    let n = spec.n();
    if k.rows() != n || k.cols() != n {
        return Err(AlgebraError::ShapeMismatch(format!("expected {n}x{n}, got {}x{}", k.rows(), k.cols())));
    }
    let layout = spec.weyr_layout();
    for i in 0..layout.block_rows() {
        for j in 0..i {
            if !block_extract(k, &layout, i, j)?.is_zero() {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "level block ({}, {}) below the diagonal is nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// `det K` as the product of the determinants of the diagonal level blocks.
pub fn zw_determinant<F: Field>(k: &Mat<F>, spec: &CanonicalSpec<F>) -> Result<F::Elem> {
    check_weyr_shape(k, spec)?;
    let layout = spec.weyr_layout();
    let f = spec.field();
    let mut det = f.one();
    for i in 0..layout.block_rows() {
        det = f.mul(&det, &block_extract(k, &layout, i, i)?.determinant()?);
        if f.is_zero(&det) {
            break;
        }
    }
    Ok(det)
}

/// For each distinct part `beta`, the matrix formed by the Z(C) blocks that
/// couple the chains of length `beta` at level `beta`.
pub fn diagonal_groups<F: Field>(k: &Mat<F>, spec: &CanonicalSpec<F>) -> Result<Vec<(usize, Mat<F>)>> {
    check_weyr_shape(k, spec)?;
    let segre = spec.segre();
    let s = spec.s();
    let mut start = 0;
    let mut out = Vec::new();
    for (&beta, &end) in segre.beta().iter().zip(segre.cumfreq()) {
        let lo = segre.weyr_index(beta, start) * s;
        let size = (end - start) * s;
        out.push((beta, k.submatrix(lo, lo, size, size)));
        start = end;
    }
    Ok(out)
}

/// `prod_beta det(M_beta)^beta` for `K` in the centralizer of the Weyr form.
pub fn zw_determinant_grouped<F: Field>(k: &Mat<F>, spec: &CanonicalSpec<F>) -> Result<F::Elem> {
    if !weyr_form(spec).commutator(k)?.is_zero() {
        return Err(AlgebraError::NotInCentralizer);
    }
    let f = spec.field();
    let mut det = f.one();
    for (beta, m) in diagonal_groups(k, spec)? {
        let d = m.determinant()?;
        for _ in 0..beta {
            det = f.mul(&det, &d);
        }
    }
    Ok(det)
}

/// Whether `K`, an element of the centralizer of the Weyr form, is invertible.
pub fn is_automorphism<F: Field>(k: &Mat<F>, spec: &CanonicalSpec<F>) -> Result<bool> {
    let w = weyr_form(spec);
    if k.rows() != w.rows() || k.cols() != w.cols() || !w.commutator(k)?.is_zero() {
        return Err(AlgebraError::NotInCentralizer);
    }
    Ok(!spec.field().is_zero(&zw_determinant(k, spec)?))
}

/// Centralizer dimension of a direct sum of primary components with
/// pairwise coprime irreducibles.
pub fn direct_sum_dim<F: Field>(primaries: &[(Poly<F>, Vec<usize>)]) -> Result<usize> {
    for (i, (p, _)) in primaries.iter().enumerate() {
        for (q, _) in &primaries[i + 1..] {
            if p.gcd(q)?.degree() != Some(0) {
                return Err(AlgebraError::NotCoprime);
            }
        }
    }
    primaries
        .iter()
        .map(|(p, alpha)| {
            let s = p.degree().filter(|&d| d > 0).ok_or(AlgebraError::DegreeZero)?;
            centralizer_dim(alpha, s)
        })
        .sum()
}
