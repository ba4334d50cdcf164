//! Matrix text and JSON formats, and the basis export stream.
//!
//! Text: a header line `rows cols field` followed by `rows` lines of
//! whitespace-separated entries. JSON:
//! `{"rows":r,"cols":c,"field":"gf:3","entries":[["1","0"],...]}`; entries
//! may also be given as JSON numbers when reading.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::centralizer::{parse_layout, CentralizerBasis, ParamSlot};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, FieldSelector};
use crate::matrix::Mat;

fn parse_err(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

/// Field selector named in the header of a text or JSON matrix.
pub fn peek_field(text: &str) -> Result<FieldSelector> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let raw: MatrixJson = serde_json::from_str(trimmed).map_err(|e| parse_err(e.to_string()))?;
        return raw.field.parse();
    }
    let header = trimmed.lines().next().ok_or_else(|| parse_err("empty matrix input"))?;
    let field = header.split_whitespace().nth(2).ok_or_else(|| parse_err("header must be `rows cols field`"))?;
    field.parse()
}

pub fn write_matrix_text<F: Field>(m: &Mat<F>) -> String {
    format!("{} {} {}\n{}", m.rows(), m.cols(), m.field().selector(), m.format_rows())
}

/// Reads one matrix in text form; its header must name `field`.
pub fn read_matrix_text<F: Field>(field: &F, text: &str) -> Result<Mat<F>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let m = read_matrix_lines(field, &mut lines)?;
    if lines.next().is_some() {
        return Err(parse_err("trailing lines after matrix"));
    }
    Ok(m)
}

fn read_matrix_lines<'a, F: Field>(field: &F, lines: &mut impl Iterator<Item = &'a str>) -> Result<Mat<F>> {
    let header = lines.next().ok_or_else(|| parse_err("missing matrix header"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols, sel] = parts.as_slice() else {
        return Err(parse_err(format!("bad matrix header `{header}`")));
    };
    let rows: usize = rows.parse().map_err(|_| parse_err(format!("bad row count `{rows}`")))?;
    let cols: usize = cols.parse().map_err(|_| parse_err(format!("bad column count `{cols}`")))?;
    if *sel != field.selector() {
        return Err(AlgebraError::FieldMismatch(sel.to_string(), field.selector()));
    }
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = lines.next().ok_or_else(|| parse_err(format!("expected {rows} rows, got {r}")))?;
        let row = line.split_whitespace().map(|t| field.parse_elem(t)).collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(AlgebraError::LengthMismatch { expected: cols, got: row.len() });
        }
        data.push(row);
    }
    if rows == 0 {
        return Ok(Mat::zeros(field.clone(), 0, cols));
    }
    Mat::from_rows(field.clone(), data)
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    field: String,
    entries: Vec<Vec<Value>>,
}

fn to_json_value<F: Field>(m: &Mat<F>) -> MatrixJson {
    let f = m.field();
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        field: f.selector(),
        entries: (0..m.rows()).map(|r| m.row(r).iter().map(|e| Value::String(f.format_elem(e))).collect()).collect(),
    }
}

fn from_json_value<F: Field>(field: &F, raw: MatrixJson) -> Result<Mat<F>> {
    if raw.field != field.selector() {
        return Err(AlgebraError::FieldMismatch(raw.field, field.selector()));
    }
    if raw.entries.len() != raw.rows {
        return Err(AlgebraError::LengthMismatch { expected: raw.rows, got: raw.entries.len() });
    }
    let mut data = Vec::with_capacity(raw.rows);
    for row in raw.entries {
        if row.len() != raw.cols {
            return Err(AlgebraError::LengthMismatch { expected: raw.cols, got: row.len() });
        }
        let parsed = row
            .iter()
            .map(|v| match v {
                Value::String(s) => field.parse_elem(s),
                Value::Number(n) => field.parse_elem(&n.to_string()),
                other => Err(parse_err(format!("bad matrix entry {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        data.push(parsed);
    }
    if raw.rows == 0 {
        return Ok(Mat::zeros(field.clone(), 0, raw.cols));
    }
    Mat::from_rows(field.clone(), data)
}

pub fn write_matrix_json<F: Field>(m: &Mat<F>) -> String {
    serde_json::to_string(&to_json_value(m)).expect("plain data serializes")
}

pub fn read_matrix_json<F: Field>(field: &F, text: &str) -> Result<Mat<F>> {
    let raw: MatrixJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    from_json_value(field, raw)
}

/// Reads either format, deciding by the first non-blank character.
pub fn read_matrix<F: Field>(field: &F, text: &str) -> Result<Mat<F>> {
    if text.trim_start().starts_with('{') {
        read_matrix_json(field, text)
    } else {
        read_matrix_text(field, text)
    }
}

/// Header line, then each basis element in text form.
pub fn write_basis_text<F: Field>(b: &CentralizerBasis<F>) -> String {
    let mut out = b.header();
    out.push('\n');
    for m in b.basis() {
        out.push_str(&write_matrix_text(m));
    }
    out
}

/// Parses a basis stream back into its layout and matrices.
pub fn read_basis_text<F: Field>(field: &F, text: &str) -> Result<(Vec<ParamSlot>, Vec<Mat<F>>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| parse_err("missing basis header"))?;
    let (dim, layout) = parse_header(header)?;
    let mut mats = Vec::with_capacity(dim);
    for _ in 0..dim {
        mats.push(read_matrix_lines(field, &mut lines)?);
    }
    if lines.next().is_some() {
        return Err(parse_err("trailing lines after basis"));
    }
    Ok((layout, mats))
}

fn parse_header(header: &str) -> Result<(usize, Vec<ParamSlot>)> {
    let bad = || parse_err(format!("bad basis header `{header}`"));
    let rest = header.strip_prefix("dim=").ok_or_else(bad)?;
    let (dim, layout) = rest.split_once(" layout=").ok_or_else(bad)?;
    let dim: usize = dim.parse().map_err(|_| bad())?;
    let layout = parse_layout(layout)?;
    if layout.len() != dim {
        return Err(AlgebraError::LengthMismatch { expected: dim, got: layout.len() });
    }
    Ok((dim, layout))
}

#[derive(Debug, Serialize, Deserialize)]
struct BasisJson {
    dim: usize,
    layout: String,
    basis: Vec<MatrixJson>,
}

pub fn write_basis_json<F: Field>(b: &CentralizerBasis<F>) -> String {
    let header = b.header();
    let layout = header.split_once(" layout=").map(|(_, l)| l.to_string()).unwrap_or_default();
    let doc = BasisJson { dim: b.dim(), layout, basis: b.basis().iter().map(to_json_value).collect() };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn read_basis_json<F: Field>(field: &F, text: &str) -> Result<(Vec<ParamSlot>, Vec<Mat<F>>)> {
    let raw: BasisJson = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    let layout = parse_layout(&raw.layout)?;
    if layout.len() != raw.dim || raw.basis.len() != raw.dim {
        return Err(AlgebraError::LengthMismatch { expected: raw.dim, got: raw.basis.len() });
    }
    let mats = raw.basis.into_iter().map(|m| from_json_value(field, m)).collect::<Result<Vec<_>>>()?;
    Ok((layout, mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::zg_basis;
    use crate::field::{PrimeField, RationalFunctions, Rationals};
    use crate::forms::{CanonicalSpec, Kind};
    use crate::poly::Poly;

    #[test]
    fn text_round_trip() {
        let f = PrimeField::new(3).unwrap();
        let m = Mat::from_i64s(f, &[&[1, 2], &[0, 1], &[2, 2]]).unwrap();
        let text = write_matrix_text(&m);
        assert_eq!(text, "3 2 gf:3\n1 2\n0 1\n2 2\n");
        assert_eq!(read_matrix(&f, &text).unwrap(), m);
        assert!(matches!(peek_field(&text).unwrap(), FieldSelector::Prime(_)));
    }

    #[test]
    fn json_round_trip_and_numbers() {
        let q = Rationals;
        let m = Mat::from_rows(q, vec![vec![q.parse_elem("1/2").unwrap(), q.parse_elem("-3").unwrap()]]).unwrap();
        let json = write_matrix_json(&m);
        assert_eq!(json, r#"{"rows":1,"cols":2,"field":"q","entries":[["1/2","-3"]]}"#);
        assert_eq!(read_matrix(&q, &json).unwrap(), m);
        let f = PrimeField::new(5).unwrap();
        let m = read_matrix(&f, r#"{"rows":1,"cols":2,"field":"gf:5","entries":[[7,"2"]]}"#).unwrap();
        assert_eq!(m, Mat::from_i64s(f, &[&[2, 2]]).unwrap());
    }

    #[test]
    fn rational_function_entries() {
        let k = RationalFunctions::new(2).unwrap();
        let text = "1 2 gft:2\n(t+1)/(t^2+1) t\n";
        let m = read_matrix(&k, text).unwrap();
        assert_eq!(m.get(0, 0), &k.parse_elem("1/(t+1)").unwrap());
        assert_eq!(read_matrix(&k, &write_matrix_text(&m)).unwrap(), m);
    }

    #[test]
    fn malformed_inputs() {
        let f = PrimeField::new(3).unwrap();
        assert!(read_matrix(&f, "2 2 gf:3\n1 0\n").is_err());
        assert!(read_matrix(&f, "1 2 gf:3\n1 0 1\n").is_err());
        assert!(matches!(read_matrix(&f, "1 1 gf:5\n1\n"), Err(AlgebraError::FieldMismatch(..))));
        assert!(read_matrix(&f, "{\"rows\":1}").is_err());
        assert!(read_matrix(&f, "").is_err());
    }

    #[test]
    fn basis_round_trip() {
        let f = PrimeField::new(2).unwrap();
        let sp = CanonicalSpec::new(Poly::parse(f, "x^2+x+1").unwrap(), &[2, 1], Kind::E, false).unwrap();
        let b = zg_basis(&sp).unwrap();
        let text = write_basis_text(&b);
        assert!(text.starts_with("dim=10 layout=c1.1.1.1,"));
        let (layout, mats) = read_basis_text(&f, &text).unwrap();
        assert_eq!(layout, b.layout());
        assert_eq!(mats, b.basis());
        let (layout, mats) = read_basis_json(&f, &write_basis_json(&b)).unwrap();
        assert_eq!(layout, b.layout());
        assert_eq!(mats, b.basis());
    }
}
