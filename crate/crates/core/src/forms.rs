//! Canonical forms built from elementary-divisor data: companion matrices,
//! generalized Jordan blocks and forms (E-kind and first-kind), the
//! semisimple/nilpotent split, and the generalized Weyr form.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::matrix::{BlockLayout, BlockPermutation, Mat};
use crate::partition::SegreData;
use crate::poly::{Irreducibility, Poly};

/// Which coupling block sits below each companion block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// The single-corner matrix `E`; valid for every irreducible `p`.
    E,
    /// The identity; valid only for separable `p`.
    First,
}

impl std::str::FromStr for Kind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "E" => Ok(Self::E),
            "first" | "i" | "I" => Ok(Self::First),
            _ => Err(AlgebraError::Parse(format!("unknown kind `{s}` (expected e or first)"))),
        }
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::E => "e",
            Self::First => "first",
        })
    }
}

/// An irreducible `p`, a kind and a Segre partition: everything needed to
/// write down one primary component in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSpec<F: Field> {
    p: Poly<F>,
    kind: Kind,
    segre: SegreData,
    separable: bool,
}

impl<F: Field> CanonicalSpec<F> {
    /// Validates `p` (monic, irreducible, separable when `kind` is first)
    /// and `alpha`. Over Q and GF(p)(t) irreducibility must be vouched for
    /// with `assume_irreducible`.
    pub fn new(p: Poly<F>, alpha: &[usize], kind: Kind, assume_irreducible: bool) -> Result<Self> {
        if p.is_irreducible(assume_irreducible)? == Irreducibility::Reducible {
            return Err(AlgebraError::Reducible);
        }
        let separable = p.is_separable()?;
        if kind == Kind::First && !separable {
            return Err(AlgebraError::NonSeparableFirstKind);
        }
        Ok(Self { p, kind, segre: SegreData::new(alpha)?, separable })
    }

    pub fn p(&self) -> &Poly<F> {
        &self.p
    }
    pub fn field(&self) -> &F {
        self.p.field()
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn segre(&self) -> &SegreData {
        &self.segre
    }
    pub fn alpha(&self) -> &[usize] {
        self.segre.alpha()
    }
    pub fn is_separable(&self) -> bool {
        self.separable
    }

    /// `deg p`.
    pub fn s(&self) -> usize {
        self.p.degree().expect("validated degree")
    }

    /// Matrix size `s * sum(alpha)`.
    pub fn n(&self) -> usize {
        self.s() * self.segre.r()
    }

    /// Same data with the other kind.
    pub fn with_kind(&self, kind: Kind) -> Result<Self> {
        if kind == Kind::First && !self.separable {
            return Err(AlgebraError::NonSeparableFirstKind);
        }
        Ok(Self { kind, ..self.clone() })
    }

    pub fn companion(&self) -> Mat<F> {
        companion(&self.p).expect("validated monic")
    }

    /// `E` or `I`, according to the kind.
    pub fn coupling(&self) -> Mat<F> {
        coupling(self.field().clone(), self.s(), self.kind)
    }

    /// Uniform `s x s` grid over the whole matrix.
    pub fn chain_layout(&self) -> BlockLayout {
        BlockLayout::uniform(self.s(), self.segre.r()).expect("positive sizes")
    }

    /// Level blocks of size `s * tau_k` on both axes.
    pub fn weyr_layout(&self) -> BlockLayout {
        let sizes: Vec<usize> = self.segre.tau().iter().map(|t| t * self.s()).collect();
        BlockLayout::from_sizes(&sizes, &sizes).expect("positive sizes")
    }
}

/// Companion matrix: ones on the subdiagonal, last column `-c_0..-c_{s-1}`.
pub fn companion<F: Field>(p: &Poly<F>) -> Result<Mat<F>> {
    let s = p.degree().filter(|&d| d > 0).ok_or(AlgebraError::DegreeZero)?;
    if !p.is_monic() {
        return Err(AlgebraError::NotMonic);
    }
    let f = p.field().clone();
    let mut c = Mat::zeros(f.clone(), s, s);
    for i in 1..s {
        c.set(i, i - 1, f.one());
    }
    for i in 0..s {
        c.set(i, s - 1, f.neg(&p.coeff(i)));
    }
    Ok(c)
}

/// The `s x s` matrix with a single 1 in the top-right corner.
pub fn e_matrix<F: Field>(field: F, s: usize) -> Mat<F> {
    let mut e = Mat::zeros(field, s, s);
    let one = e.field().one();
    e.set(0, s - 1, one);
    e
}

fn coupling<F: Field>(field: F, s: usize, kind: Kind) -> Mat<F> {
    match kind {
        Kind::E => e_matrix(field, s),
        Kind::First => Mat::identity(field, s),
    }
}

/// Lower block-bidiagonal `ell x ell` block matrix with `C` on the diagonal
/// and `E` (or `I`) below it.
pub fn gj_block<F: Field>(p: &Poly<F>, ell: usize, kind: Kind) -> Result<Mat<F>> {
    let c = companion(p)?;
    if kind == Kind::First && !p.is_separable()? {
        return Err(AlgebraError::NonSeparableFirstKind);
    }
    Ok(gj_block_from(&c, &coupling(p.field().clone(), c.rows(), kind), ell))
}

fn gj_block_from<F: Field>(c: &Mat<F>, e: &Mat<F>, ell: usize) -> Mat<F> {
    let s = c.rows();
    let mut g = Mat::zeros(c.field().clone(), s * ell, s * ell);
    for i in 0..ell {
        g.set_block(i * s, i * s, c);
        if i > 0 {
            g.set_block(i * s, (i - 1) * s, e);
        }
    }
    g
}

/// `diag(G_1, ..., G_m)` with `G_i` the block of multiplicity `alpha_i`.
pub fn gj_form<F: Field>(spec: &CanonicalSpec<F>) -> Mat<F> {
    let (c, e) = (spec.companion(), spec.coupling());
    let blocks: Vec<Mat<F>> = spec.alpha().iter().map(|&a| gj_block_from(&c, &e, a)).collect();
    Mat::block_diag(spec.field().clone(), &blocks)
}

/// `G = D + N` with `D` the companion blocks and `N` the coupling blocks.
pub fn dn_split<F: Field>(spec: &CanonicalSpec<F>) -> (Mat<F>, Mat<F>) {
    let g = gj_form(spec);
    let c = spec.companion();
    let copies = vec![c; spec.segre().r()];
    let d = Mat::block_diag(spec.field().clone(), &copies);
    let n = g.sub(&d).expect("same shape");
    (d, n)
}

/// The block permutation sending the Jordan basis to the Weyr basis.
pub fn weyr_permutation<F: Field>(spec: &CanonicalSpec<F>) -> BlockPermutation {
    BlockPermutation::new(spec.segre().weyr_order()).expect("weyr order is a permutation")
}

/// Upper block-bidiagonal Weyr matrix, built directly from `tau`.
pub fn weyr_form<F: Field>(spec: &CanonicalSpec<F>) -> Mat<F> {
    let segre = spec.segre();
    let s = spec.s();
    let (c, e) = (spec.companion(), spec.coupling());
    let mut w = Mat::zeros(spec.field().clone(), spec.n(), spec.n());
    for level in 1..=segre.height() {
        for chain in segre.chains_at_level(level) {
            let at = segre.weyr_index(level, chain) * s;
            w.set_block(at, at, &c);
            if level < segre.height() && chain < segre.tau()[level] {
                let below = segre.weyr_index(level + 1, chain) * s;
                w.set_block(at, below, &e);
            }
        }
    }
    w
}

/// Recovers `tau` from kernel dimensions of powers of `p(W)`.
pub fn weyr_characteristic<F: Field>(w: &Mat<F>, p: &Poly<F>) -> Result<Vec<usize>> {
    let s = p.degree().filter(|&d| d > 0).ok_or(AlgebraError::DegreeZero)?;
    let n = w.rows();
    let pw = w.eval_poly(p)?;
    let mut power = pw.clone();
    let mut prev = 0usize;
    let mut tau = Vec::new();
    loop {
        let dim = n - power.rank();
        if !dim.is_multiple_of(s) {
            return Err(AlgebraError::NotMultipleOfS(dim, s));
        }
        if dim == prev {
            break;
        }
        tau.push((dim - prev) / s);
        prev = dim;
        if dim == n {
            break;
        }
        power = power.mul(&pw)?;
    }
    Ok(tau)
}

/// Smallest `k` with `p^k(A) = 0`, searching up to `limit`.
pub fn nilpotency_index<F: Field>(a: &Mat<F>, p: &Poly<F>, limit: usize) -> Result<Option<usize>> {
    let pa = a.eval_poly(p)?;
    let mut power = Mat::identity(a.field().clone(), a.rows());
    for k in 0..=limit {
        if power.is_zero() {
            return Ok(Some(k));
        }
        power = power.mul(&pa)?;
    }
    Ok(None)
}

/// `rank(p^k(A))` for `k = 0..=up_to`.
pub fn rank_sequence<F: Field>(a: &Mat<F>, p: &Poly<F>, up_to: usize) -> Result<Vec<usize>> {
    let pa = a.eval_poly(p)?;
    let mut power = Mat::identity(a.field().clone(), a.rows());
    let mut out = Vec::with_capacity(up_to + 1);
    for _ in 0..=up_to {
        out.push(power.rank());
        power = power.mul(&pa)?;
    }
    Ok(out)
}
