//! End-to-end acceptance criteria. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line with its timing.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use centra::centralizer::{
    centralizer_dim, centralizer_dim_formulas, direct_sum_dim, is_automorphism, zg_basis, zg_block_basis, zw_basis,
    zw_basis_recursive, zw_determinant, zw_determinant_grouped,
};
use centra::forms::{
    companion, dn_split, gj_block, gj_form, rank_sequence, weyr_characteristic, weyr_form, weyr_permutation,
};
use centra::matrix::{conjugate_by_permutation, same_span};
use centra::oracle::commutant_dim;
use centra::partition::{conjugate_partition, partitions_of};
use centra::{CanonicalSpec, Field, Irreducibility, Kind, Mat, ParamSlot, Poly, PrimeField, RationalFunctions};

use common::*;

const CAP: usize = 40;

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// One irreducible of each degree 1..=3 over GF(2) and GF(3).
fn corpus_polys() -> Vec<Poly<PrimeField>> {
    let mut out = Vec::new();
    for p in [2, 3] {
        for s in 1..=3 {
            out.push(irreducibles(gf(p), s).into_iter().last().unwrap());
        }
    }
    out
}

/// Every partition of r <= 6 paired with every corpus polynomial.
fn corpus_specs(kind: Kind) -> Vec<CanonicalSpec<PrimeField>> {
    let mut out = Vec::new();
    for p in corpus_polys() {
        for r in 1..=6 {
            for alpha in partitions_of(r) {
                out.push(CanonicalSpec::new(p.clone(), &alpha, kind, false).unwrap());
            }
        }
    }
    out
}

fn describe<F: Field>(sp: &CanonicalSpec<F>) -> String {
    format!("p={} over {} alpha={:?} kind={}", sp.p(), sp.field().selector(), sp.alpha(), sp.kind())
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for (p, expected) in [(2u64, [2usize, 1, 2, 3]), (3, [3, 3, 8, 18]), (5, [5, 10, 40, 150])] {
        let f = gf(p);
        for d in 1..=4 {
            let mut count = 0;
            for q in monic_polys(f, d) {
                let brute = irreducible_by_trial_division(&q);
                let fast = q.is_irreducible(false).unwrap() == Irreducibility::Irreducible;
                ensure(brute == fast, || format!("irreducibility of {q} over gf:{p}: trial {brute}, library {fast}"))?;
                if !brute {
                    continue;
                }
                count += 1;
                let dim = commutant_dim(&companion(&q).unwrap(), CAP).unwrap();
                ensure(dim == d, || format!("Z(C) for {q} over gf:{p} has dimension {dim}"))?;
                checked += 1;
            }
            ensure(count == expected[d - 1], || format!("{count} irreducibles of degree {d} over gf:{p}"))?;
        }
    }
    Ok(format!("{checked} companion matrices"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for p in [2, 3] {
        for s in 1..=3 {
            for q in irreducibles(gf(p), s) {
                for ell in 1..=4 {
                    for kind in [Kind::E, Kind::First] {
                        let b = zg_block_basis(&q, ell, kind).unwrap();
                        let what = || format!("p={q} over gf:{p} ell={ell} kind={kind}");
                        ensure(b.dim() == ell * s, || format!("{}: {} elements", what(), b.dim()))?;
                        ensure(b.all_commute(), || format!("{}: element does not commute", what()))?;
                        ensure(b.is_independent(), || format!("{}: dependent basis", what()))?;
                        let oracle = commutant_dim(&gj_block(&q, ell, kind).unwrap(), CAP).unwrap();
                        ensure(oracle == ell * s, || format!("{}: oracle {oracle}", what()))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} blocks"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for sp in corpus_specs(Kind::E) {
        let (a, b) = centralizer_dim_formulas(sp.alpha(), sp.s()).unwrap();
        let oracle = commutant_dim(&gj_form(&sp), CAP).unwrap();
        let zg = zg_basis(&sp).unwrap();
        ensure(a == b && b == oracle, || format!("{}: formulas {a} {b}, oracle {oracle}", describe(&sp)))?;
        ensure(zg.span_rank() == oracle && zg.dim() == oracle, || {
            format!("{}: basis of {} with rank {}", describe(&sp), zg.dim(), zg.span_rank())
        })?;
        checked += 1;
    }
    for s in 1..=3 {
        ensure(centralizer_dim(&[3, 2], s).unwrap() == 9 * s, || format!("alpha=(3,2) s={s}"))?;
    }
    for (poly, s, expected) in [("x+1", 1, 48), ("x^2+x+1", 2, 96)] {
        let sp = CanonicalSpec::new(Poly::parse(gf(2), poly).unwrap(), &[5, 4, 3, 1, 1], Kind::E, false).unwrap();
        let (a, b) = centralizer_dim_formulas(sp.alpha(), s).unwrap();
        let oracle = commutant_dim(&gj_form(&sp), CAP).unwrap();
        ensure(a == expected && b == expected && oracle == expected, || {
            format!("alpha=(5,4,3,1,1) s={s}: formulas {a} {b}, oracle {oracle}")
        })?;
        checked += 1;
    }
    Ok(format!("{checked} specs against the oracle"))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for kind in [Kind::E, Kind::First] {
        for sp in corpus_specs(kind) {
            let conj = conjugate_by_permutation(&gj_form(&sp), &weyr_permutation(&sp), sp.s()).unwrap();
            ensure(conj == weyr_form(&sp), || format!("{}: P^-1 G P != W", describe(&sp)))?;
            // Same identity with P as an explicit matrix.
            let p = weyr_permutation(&sp).matrix(*sp.field(), sp.s());
            let lhs = p.inverse().unwrap().mul(&gj_form(&sp)).unwrap().mul(&p).unwrap();
            ensure(lhs == conj, || format!("{}: explicit P disagrees", describe(&sp)))?;
            checked += 1;
        }
    }
    let q = Poly::parse(gf(3), "x^2+1").unwrap();
    let sp = CanonicalSpec::new(q, &[3, 2, 2], Kind::E, false).unwrap();
    let order: Vec<usize> = weyr_permutation(&sp).order().iter().map(|k| k + 1).collect();
    ensure(order == [3, 5, 7, 2, 4, 6, 1], || format!("ordering {order:?}"))?;
    // W as printed: C on the diagonal, E at (1,4), (2,5), (3,6), (4,7).
    let (c, e) = (sp.companion(), sp.coupling());
    let mut w = Mat::zeros(gf(3), 14, 14);
    for i in 0..7 {
        w.set_block(2 * i, 2 * i, &c);
    }
    for (i, j) in [(0, 3), (1, 4), (2, 5), (3, 6)] {
        w.set_block(2 * i, 2 * j, &e);
    }
    ensure(weyr_form(&sp) == w, || "alpha=(3,2,2) Weyr form differs from the printed one".into())?;
    Ok(format!("{} conjugations, (3,2,2) ordering 3 5 7 | 2 4 6 | 1", checked + 1))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for sp in corpus_specs(Kind::E) {
        let tau = weyr_characteristic(&weyr_form(&sp), sp.p()).unwrap();
        let expected = conjugate_partition(sp.alpha()).unwrap();
        ensure(tau == expected, || format!("{}: tau {tau:?}, expected {expected:?}", describe(&sp)))?;
        checked += 1;
    }
    Ok(format!("{checked} Weyr characteristics"))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for kind in [Kind::E, Kind::First] {
        for sp in corpus_specs(kind) {
            let zw = zw_basis(&sp).unwrap();
            let rec = zw_basis_recursive(&sp).unwrap();
            ensure(rec.all_commute(), || format!("{}: recursive element does not commute", describe(&sp)))?;
            ensure(rec.is_independent() && rec.dim() == zw.dim(), || {
                format!("{}: recursive basis size", describe(&sp))
            })?;
            ensure(same_span(sp.field(), zw.basis(), rec.basis()), || format!("{}: spans differ", describe(&sp)))?;
            checked += 1;
        }
    }
    let q = Poly::parse(gf(3), "x^2+1").unwrap();
    let sp = CanonicalSpec::new(q, &[5, 4, 3, 1, 1], Kind::E, false).unwrap();
    let zg = zg_basis(&sp).unwrap();
    let zw = zw_basis(&sp).unwrap();
    let rec = zw_basis_recursive(&sp).unwrap();
    ensure(distinct_labels(&WEYR_PATTERN) * sp.s() == rec.dim(), || "label count".into())?;
    ensure(same_span(sp.field(), zw.basis(), rec.basis()), || "(5,4,3,1,1): spans differ".into())?;
    for b in zg.basis() {
        respects_pattern(b, 2, &JORDAN_PATTERN)?;
    }
    for b in zw.basis().iter().chain(rec.basis()) {
        respects_pattern(b, 2, &WEYR_PATTERN)?;
    }
    covers_pattern(zg.basis(), 2, &JORDAN_PATTERN)?;
    covers_pattern(rec.basis(), 2, &WEYR_PATTERN)?;
    for seed in 0..20 {
        respects_pattern(&rec.sample_seeded(seed), 2, &WEYR_PATTERN)?;
        respects_pattern(&zg.sample_seeded(seed), 2, &JORDAN_PATTERN)?;
    }
    Ok(format!("{} span comparisons, (5,4,3,1,1) pattern exact", checked + 1))
}

fn criterion_7() -> Outcome {
    let mut samples = 0;
    for sp in corpus_specs(Kind::E).into_iter().filter(|sp| sp.n() >= 4) {
        let rec = zw_basis_recursive(&sp).unwrap();
        for seed in 0..100 {
            let k = rec.sample_seeded(seed);
            let det = k.determinant().unwrap();
            ensure(zw_determinant(&k, &sp).unwrap() == det, || format!("{} seed {seed}", describe(&sp)))?;
            samples += 1;
        }
    }
    let q = Poly::parse(gf(3), "x^2+1").unwrap();
    let sp = CanonicalSpec::new(q, &[5, 4, 3, 1, 1], Kind::E, false).unwrap();
    let f = gf(3);
    let rec = zw_basis_recursive(&sp).unwrap();
    let mut invertible = 0;
    for seed in 0..100 {
        let k = rec.sample_seeded(seed);
        let det = k.determinant().unwrap();
        let blk = |l: &str| labelled_block(&k, 2, &WEYR_PATTERN, l);
        let mut dg = Mat::zeros(f, 4, 4);
        dg.set_block(0, 0, &blk("D1"));
        dg.set_block(0, 2, &blk("G1"));
        dg.set_block(2, 0, &blk("F1"));
        dg.set_block(2, 2, &blk("E1"));
        let pow = |x: u32, e: u32| (0..e).fold(1u32, |acc, _| f.mul(&acc, &x));
        let closed = [
            pow(blk("A1").determinant().unwrap(), 5),
            pow(blk("B1").determinant().unwrap(), 4),
            pow(blk("C1").determinant().unwrap(), 3),
            dg.determinant().unwrap(),
        ]
        .iter()
        .fold(1, |acc, x| f.mul(&acc, x));
        ensure(closed == det, || format!("closed form {closed} vs det {det} at seed {seed}"))?;
        ensure(zw_determinant(&k, &sp).unwrap() == det, || format!("level product at seed {seed}"))?;
        ensure(zw_determinant_grouped(&k, &sp).unwrap() == det, || format!("grouped product at seed {seed}"))?;
        ensure(is_automorphism(&k, &sp).unwrap() == (det != 0), || format!("automorphism test at seed {seed}"))?;
        invertible += usize::from(det != 0);
        samples += 1;
    }
    ensure(invertible > 0, || "no invertible sample drawn".into())?;
    // Zeroing the A1 parameters leaves every other block generic but kills det.
    let zw = zw_basis(&sp).unwrap();
    let mut coeffs = zw.random_coeffs(11);
    for (c, slot) in coeffs.iter_mut().zip(zw.layout()) {
        if matches!(slot, ParamSlot::Chain { row_chain: 1, col_chain: 1, diagonal: 1, .. }) {
            *c = 0;
        }
    }
    let k = zw.sample_element(&coeffs).unwrap();
    ensure(labelled_block(&k, 2, &WEYR_PATTERN, "A1").is_zero(), || "A1 not cleared".into())?;
    ensure(!is_automorphism(&k, &sp).unwrap(), || "K with A1 = 0 reported invertible".into())?;
    Ok(format!("{samples} samples, closed form reproduced"))
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    let f = gf(3);
    for s in 1..=3 {
        for q in irreducibles(f, s).into_iter().take(3) {
            ensure(q.is_separable().unwrap(), || format!("{q} not separable"))?;
            for r in 1..=5 {
                for alpha in partitions_of(r) {
                    let first = CanonicalSpec::new(q.clone(), &alpha, Kind::First, false).unwrap();
                    let e = first.with_kind(Kind::E).unwrap();
                    let what = || describe(&first);
                    let zg = zg_basis(&first).unwrap();
                    let dim = centralizer_dim(&alpha, s).unwrap();
                    let tau_sq: usize = s * conjugate_partition(&alpha).unwrap().iter().map(|t| t * t).sum::<usize>();
                    ensure(zg.dim() == tau_sq && dim == tau_sq, || format!("{}: dim {}", what(), zg.dim()))?;
                    ensure(zg.all_commute() && zg.is_independent(), || format!("{}: basis", what()))?;
                    if first.n() <= 15 {
                        let oracle = commutant_dim(&gj_form(&first), CAP).unwrap();
                        ensure(oracle == tau_sq, || format!("{}: oracle {oracle}", what()))?;
                    }
                    let (d, n) = dn_split(&first);
                    ensure(d.mul(&n).unwrap() == n.mul(&d).unwrap(), || format!("{}: DN != ND", what()))?;
                    let h = alpha[0];
                    let rf = rank_sequence(&gj_form(&first), &q, h).unwrap();
                    let re = rank_sequence(&gj_form(&e), &q, h).unwrap();
                    ensure(rf == re, || format!("{}: rank sequences {rf:?} vs {re:?}", what()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} first-kind specs"))
}

fn criterion_9() -> Outcome {
    let k = RationalFunctions::new(2).unwrap();
    let q = Poly::parse(k, "x^2+t").unwrap();
    ensure(q.is_irreducible(true).unwrap() == Irreducibility::Asserted, || "irreducibility not asserted".into())?;
    ensure(!q.is_separable().unwrap(), || "x^2+t reported separable".into())?;
    ensure(CanonicalSpec::new(q.clone(), &[2, 1], Kind::First, true).is_err(), || "first kind accepted".into())?;
    let sp = CanonicalSpec::new(q, &[2, 1], Kind::E, true).unwrap();
    let zg = zg_basis(&sp).unwrap();
    ensure(zg.dim() == 10, || format!("dimension {}", zg.dim()))?;
    ensure(zg.all_commute() && zg.is_independent(), || "basis does not commute or is dependent".into())?;
    let oracle = commutant_dim(&gj_form(&sp), CAP).unwrap();
    ensure(oracle == 10, || format!("oracle {oracle}"))?;
    let (d, n) = dn_split(&sp);
    ensure(d.mul(&n).unwrap() != n.mul(&d).unwrap(), || "DN = ND".into())?;
    Ok("dim 10, oracle 10, DN != ND".into())
}

fn criterion_10() -> Outcome {
    let f = gf(5);
    let polys: Vec<_> = irreducibles(f, 1).into_iter().chain(irreducibles(f, 2)).collect();
    let alphas: [&[usize]; 5] = [&[1], &[2], &[1, 1], &[2, 1], &[3]];
    let mut checked = 0;
    for (i, a) in polys.iter().enumerate() {
        for (j, b) in polys.iter().enumerate().skip(i + 1) {
            if (i + j) % 3 != 0 {
                continue;
            }
            let (alpha_a, alpha_b) = (alphas[i % 5], alphas[j % 5]);
            let ga = gj_form(&CanonicalSpec::new(a.clone(), alpha_a, Kind::E, false).unwrap());
            let gb = gj_form(&CanonicalSpec::new(b.clone(), alpha_b, Kind::E, false).unwrap());
            let sum = Mat::block_diag(f, &[ga, gb]);
            let oracle = commutant_dim(&sum, CAP).unwrap();
            let per_summand = centralizer_dim(alpha_a, a.degree().unwrap()).unwrap()
                + centralizer_dim(alpha_b, b.degree().unwrap()).unwrap();
            let via_lib = direct_sum_dim(&[(a.clone(), alpha_a.to_vec()), (b.clone(), alpha_b.to_vec())]).unwrap();
            ensure(oracle == per_summand && via_lib == per_summand, || {
                format!("{a} {alpha_a:?} + {b} {alpha_b:?}: oracle {oracle}, formulas {per_summand}")
            })?;
            checked += 1;
        }
    }
    ensure(checked >= 20, || format!("only {checked} pairs"))?;
    Ok(format!("{checked} pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Z(C) dimension over GF(2), GF(3), GF(5), deg <= 4", criterion_1, Duration::from_secs(10)),
        ("block centralizer, s <= 3, ell <= 4", criterion_2, Duration::from_secs(30)),
        ("full centralizer dimension, r <= 6, s <= 3", criterion_3, Duration::from_secs(300)),
        ("Weyr conjugation", criterion_4, Duration::from_secs(10)),
        ("Weyr characteristic from kernels", criterion_5, Duration::from_secs(60)),
        ("Weyr centralizer structure", criterion_6, Duration::from_secs(600)),
        ("determinant of Weyr centralizer elements", criterion_7, Duration::from_secs(600)),
        ("separable first-kind path", criterion_8, Duration::from_secs(600)),
        ("nonseparable path x^2+t over GF(2)(t)", criterion_9, Duration::from_secs(30)),
        ("direct sums over GF(5)", criterion_10, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (idx, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS criterion {:>2}: {name} ({detail}) [{elapsed:.2?}]", idx + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why} [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
