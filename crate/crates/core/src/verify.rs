//! The invariant suite for one canonical spec, as run by `centra verify`.

use crate::centralizer::{
    centralizer_dim_formulas, zg_basis, zw_basis, zw_basis_recursive, zw_determinant, zw_determinant_grouped,
};
use crate::error::Result;
use crate::field::Field;
use crate::forms::{
    dn_split, gj_form, rank_sequence, weyr_characteristic, weyr_form, weyr_permutation, CanonicalSpec, Kind,
};
use crate::matrix::{conjugate_by_permutation, same_span};
use crate::oracle::commutant_dim;

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// `None` when the property was skipped.
    pub passed: Option<bool>,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name, passed: Some(passed), detail: detail.into() }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Self { name, passed: None, detail: detail.into() }
    }

    pub fn status(&self) -> &'static str {
        match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        }
    }
}

/// Runs every property for `spec`. Random centralizer elements are drawn
/// with seeds `seed..seed + samples`; the oracle is skipped above `max_n`.
pub fn verify_spec<F: Field>(spec: &CanonicalSpec<F>, seed: u64, samples: u64, max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let s = spec.s();
    let (by_segre, by_weyr) = centralizer_dim_formulas(spec.alpha(), s)?;
    out.push(Check::new("dim_formulas", by_segre == by_weyr, format!("{by_segre} {by_weyr}")));

    let g = gj_form(spec);
    let zg = zg_basis(spec)?;
    out.push(Check::new("zg_commutes", zg.all_commute(), format!("{} elements", zg.dim())));
    let rank = zg.span_rank();
    out.push(Check::new("zg_independent", rank == zg.dim() && rank == by_segre, format!("rank {rank}")));

    if spec.n() <= max_n {
        let oracle = commutant_dim(&g, max_n)?;
        out.push(Check::new("oracle_dim", oracle == zg.dim(), format!("oracle {oracle}")));
    } else {
        out.push(Check::skipped("oracle_dim", format!("n = {} exceeds cap {max_n}", spec.n())));
    }

    let w = weyr_form(spec);
    let conj = conjugate_by_permutation(&g, &weyr_permutation(spec), s)?;
    out.push(Check::new("weyr_conjugation", conj == w, "P^-1 G P = W"));

    let tau = weyr_characteristic(&w, spec.p())?;
    out.push(Check::new("weyr_characteristic", tau == spec.segre().tau(), format!("{tau:?}")));

    let zw = zw_basis(spec)?;
    let rec = zw_basis_recursive(spec)?;
    out.push(Check::new("zw_commutes", zw.all_commute() && rec.all_commute(), format!("{} elements", rec.dim())));
    out.push(Check::new("zw_same_span", same_span(spec.field(), zw.basis(), rec.basis()), "conjugated vs recursive"));

    let mut det_ok = true;
    let mut first_bad = String::new();
    for k_seed in seed..seed + samples {
        let k = rec.sample_seeded(k_seed);
        let direct = k.determinant()?;
        let ok = zw_determinant(&k, spec)? == direct && zw_determinant_grouped(&k, spec)? == direct;
        if !ok && det_ok {
            first_bad = format!("seed {k_seed}");
        }
        det_ok &= ok;
    }
    out.push(Check::new("zw_determinant", det_ok, if det_ok { format!("{samples} samples") } else { first_bad }));

    if spec.is_separable() {
        let first = spec.with_kind(Kind::First)?;
        let e = spec.with_kind(Kind::E)?;
        let (d, n) = dn_split(&first);
        out.push(Check::new("first_kind_dn_commute", d.mul(&n)? == n.mul(&d)?, "DN = ND"));
        let height = spec.segre().height();
        let rf = rank_sequence(&gj_form(&first), spec.p(), height)?;
        let re = rank_sequence(&gj_form(&e), spec.p(), height)?;
        out.push(Check::new("rank_sequences", rf == re, format!("{rf:?}")));
    } else {
        let (d, n) = dn_split(spec);
        let commute = d.mul(&n)? == n.mul(&d)?;
        out.push(Check::skipped("first_kind_dn_commute", "p is not separable"));
        out.push(Check::skipped("rank_sequences", format!("p is not separable; E-kind DN = ND is {commute}")));
    }
    Ok(out)
}
