#![allow(dead_code)]

use std::collections::HashMap;

use centra::{Field, Mat, Poly, PrimeField};

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Every monic polynomial of degree `d` over GF(p).
pub fn monic_polys(f: PrimeField, d: usize) -> Vec<Poly<PrimeField>> {
    let p = f.modulus();
    let count = (p as usize).pow(d as u32);
    (0..count)
        .map(|mut code| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push((code % p as usize) as u32);
                code /= p as usize;
            }
            coeffs.push(1);
            Poly::new(f, coeffs)
        })
        .collect()
}

/// Trial division by every monic polynomial of degree `1..=d/2`.
pub fn irreducible_by_trial_division(q: &Poly<PrimeField>) -> bool {
    let d = q.degree().unwrap();
    (1..=d / 2).all(|k| monic_polys(*q.field(), k).iter().all(|g| !q.div_rem(g).unwrap().1.is_zero()))
}

pub fn irreducibles(f: PrimeField, d: usize) -> Vec<Poly<PrimeField>> {
    monic_polys(f, d).into_iter().filter(irreducible_by_trial_division).collect()
}

/// Support pattern of a centralizer element for alpha = (5,4,3,1,1) in
/// generalized Jordan coordinates; `.` marks a zero block.
pub const JORDAN_PATTERN: [&str; 14] = [
    "A1 .  .  .  .  .  .  .  .  .  .  .  .  .",
    "A2 A1 .  .  .  I1 .  .  .  .  .  .  .  .",
    "A3 A2 A1 .  .  I2 I1 .  .  L1 .  .  .  .",
    "A4 A3 A2 A1 .  I3 I2 I1 .  L2 L1 .  .  .",
    "A5 A4 A3 A2 A1 I4 I3 I2 I1 L3 L2 L1 Q1 W1",
    "H1 .  .  .  .  B1 .  .  .  .  .  .  .  .",
    "H2 H1 .  .  .  B2 B1 .  .  M1 .  .  .  .",
    "H3 H2 H1 .  .  B3 B2 B1 .  M2 M1 .  .  .",
    "H4 H3 H2 H1 .  B4 B3 B2 B1 M3 M2 M1 R1 X1",
    "J1 .  .  .  .  K1 .  .  .  C1 .  .  .  .",
    "J2 J1 .  .  .  K2 K1 .  .  C2 C1 .  .  .",
    "J3 J2 J1 .  .  K3 K2 K1 .  C3 C2 C1 S1 Y1",
    "N1 .  .  .  .  O1 .  .  .  P1 .  .  D1 G1",
    "T1 .  .  .  .  U1 .  .  .  V1 .  .  F1 E1",
];

/// The same element after the Weyr reordering; level cuts 5 | 3 | 3 | 2 | 1.
pub const WEYR_PATTERN: [&str; 14] = [
    "A1 I1 L1 Q1 W1 A2 I2 L2 A3 I3 L3 A4 I4 A5",
    ".  B1 M1 R1 X1 H1 B2 M2 H2 B3 M3 H3 B4 H4",
    ".  .  C1 S1 Y1 .  K1 C2 J1 K2 C3 J2 K3 J3",
    ".  .  .  D1 G1 .  .  .  .  .  P1 .  O1 N1",
    ".  .  .  F1 E1 .  .  .  .  .  V1 .  U1 T1",
    ".  .  .  .  .  A1 I1 L1 A2 I2 L2 A3 I3 A4",
    ".  .  .  .  .  .  B1 M1 H1 B2 M2 H2 B3 H3",
    ".  .  .  .  .  .  .  C1 .  K1 C2 J1 K2 J2",
    ".  .  .  .  .  .  .  .  A1 I1 L1 A2 I2 A3",
    ".  .  .  .  .  .  .  .  .  B1 M1 H1 B2 H2",
    ".  .  .  .  .  .  .  .  .  .  C1 .  K1 J1",
    ".  .  .  .  .  .  .  .  .  .  .  A1 I1 A2",
    ".  .  .  .  .  .  .  .  .  .  .  .  B1 H1",
    ".  .  .  .  .  .  .  .  .  .  .  .  .  A1",
];

pub fn pattern_cells(pattern: &[&str]) -> Vec<Vec<Option<String>>> {
    pattern.iter().map(|row| row.split_whitespace().map(|t| (t != ".").then(|| t.to_string())).collect()).collect()
}

pub fn distinct_labels(pattern: &[&str]) -> usize {
    let mut labels: Vec<String> = pattern_cells(pattern).into_iter().flatten().flatten().collect();
    labels.sort();
    labels.dedup();
    labels.len()
}

fn block<F: Field>(m: &Mat<F>, s: usize, i: usize, j: usize) -> Mat<F> {
    m.submatrix(i * s, j * s, s, s)
}

/// Blocks marked `.` vanish and blocks sharing a label coincide.
pub fn respects_pattern<F: Field>(m: &Mat<F>, s: usize, pattern: &[&str]) -> Result<(), String> {
    let mut seen: HashMap<String, Mat<F>> = HashMap::new();
    for (i, row) in pattern_cells(pattern).into_iter().enumerate() {
        for (j, cell) in row.into_iter().enumerate() {
            let b = block(m, s, i, j);
            match cell {
                None if !b.is_zero() => return Err(format!("block ({}, {}) should vanish", i + 1, j + 1)),
                None => {}
                Some(label) => {
                    if let Some(prev) = seen.get(&label) {
                        if *prev != b {
                            return Err(format!("block ({}, {}) differs from earlier {label}", i + 1, j + 1));
                        }
                    } else {
                        seen.insert(label, b);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Every labelled block is nonzero in at least one of `mats`.
pub fn covers_pattern<F: Field>(mats: &[Mat<F>], s: usize, pattern: &[&str]) -> Result<(), String> {
    for (i, row) in pattern_cells(pattern).into_iter().enumerate() {
        for (j, cell) in row.into_iter().enumerate() {
            if let Some(label) = cell {
                if mats.iter().all(|m| block(m, s, i, j).is_zero()) {
                    return Err(format!("{label} at ({}, {}) is never populated", i + 1, j + 1));
                }
            }
        }
    }
    Ok(())
}

/// The block labelled `label` in a matrix following `pattern`.
pub fn labelled_block<F: Field>(m: &Mat<F>, s: usize, pattern: &[&str], label: &str) -> Mat<F> {
    for (i, row) in pattern_cells(pattern).into_iter().enumerate() {
        for (j, cell) in row.into_iter().enumerate() {
            if cell.as_deref() == Some(label) {
                return block(m, s, i, j);
            }
        }
    }
    panic!("no block labelled {label}");
}
