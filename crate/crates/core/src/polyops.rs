//! Dense univariate polynomial kernels over any [`Field`], operating on
//! ascending coefficient vectors. The zero polynomial is the empty vector.
//!
//! These are shared by [`crate::poly::Poly`] and by the rational function
//! field, whose elements are fractions of such vectors over GF(p).

use crate::error::{AlgebraError, Result};
use crate::field::Field;

pub(crate) fn trim<F: Field>(f: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    v
}

pub(crate) fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub(crate) fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub(crate) fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    add(f, a, &neg(f, b))
}

pub(crate) fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub(crate) fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    trim(f, out)
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`.
#[allow(clippy::type_complexity)]
pub(crate) fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<(Vec<F::Elem>, Vec<F::Elem>)> {
    let lead = b.last().ok_or(AlgebraError::DivisionByZero)?;
    let lead_inv = f.inv(lead)?;
    let mut r: Vec<F::Elem> = a.to_vec();
    if r.len() < b.len() {
        return Ok((Vec::new(), trim(f, r)));
    }
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = f.mul(&r[k + b.len() - 1], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(&c, y);
            r[k + j] = f.sub(&r[k + j], &t);
        }
        q[k] = c;
    }
    r.truncate(b.len() - 1);
    Ok((trim(f, q), trim(f, r)))
}

pub(crate) fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
    Ok(divrem(f, a, b)?.1)
}

pub(crate) fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = f.inv(l).expect("leading coefficient of a trimmed polynomial is nonzero");
            scale(f, a, &inv)
        }
    }
}

/// Monic gcd; returns the empty vector only when both inputs are zero.
pub(crate) fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let r = rem(f, &x, &y).expect("divisor is nonzero");
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub(crate) fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect();
    trim(f, out)
}

pub(crate) fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Result<Vec<F::Elem>> {
    rem(f, &mul(f, a, b), m)
}

/// `base^exp mod m` by square and multiply.
pub(crate) fn powmod<F: Field>(f: &F, base: &[F::Elem], mut exp: u64, m: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let mut result = rem(f, &[f.one()], m)?;
    let mut b = rem(f, base, m)?;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(f, &result, &b, m)?;
        }
        b = mulmod(f, &b, &b, m)?;
        exp >>= 1;
    }
    Ok(result)
}

/// Renders `coeffs` in descending order, e.g. `x^3+2*x+1`.
pub(crate) fn format<F: Field>(f: &F, coeffs: &[F::Elem], var: &str) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let raw = f.format_elem(c);
        let (negative, body) = match raw.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, raw),
        };
        let body = if has_top_level_sum(&body) { format!("({body})") } else { body };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let monomial = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if e == 0 {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&monomial);
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(&monomial);
        }
    }
    out
}

fn has_top_level_sum(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return true,
            _ => {}
        }
    }
    false
}

/// Removes one or more layers of parentheses that enclose the whole string.
pub(crate) fn strip_outer_parens(mut s: &str) -> &str {
    loop {
        s = s.trim();
        if !(s.starts_with('(') && s.ends_with(')')) {
            return s;
        }
        let mut depth = 0i32;
        let mut encloses = true;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i != s.len() - 1 {
                        encloses = false;
                        break;
                    }
                }
                _ => {}
            }
        }
        if !encloses {
            return s;
        }
        s = &s[1..s.len() - 1];
    }
}

/// Splits at every occurrence of `sep` outside parentheses.
pub(crate) fn split_top_level(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(AlgebraError::Parse(format!("unbalanced parentheses in `{s}`")));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(AlgebraError::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

/// Parses the textual syntax `x^3+2*x+1` in the variable `var`; every
/// factor that is not a power of `var` is handed to the field's scalar parser.
pub(crate) fn parse<F: Field>(f: &F, text: &str, var: &str) -> Result<Vec<F::Elem>> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = strip_outer_parens(&text);
    if body.is_empty() {
        return Err(AlgebraError::Parse("empty polynomial".into()));
    }
    // Split into signed terms at top-level + and -.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in body.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 && !matches!(prev, Some('^') | Some('/') | Some('*')) => {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = false;
                }
                if ch == '-' {
                    negative = !negative;
                }
            }
            _ => current.push(ch),
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(AlgebraError::Parse(format!("trailing operator in `{body}`")));
    }
    terms.push((negative, current));

    let mut acc: Vec<F::Elem> = Vec::new();
    for (negative, term) in terms {
        let mut coeff = f.one();
        let mut exp = 0usize;
        for factor in split_top_level(&term, '*')? {
            if factor.is_empty() {
                return Err(AlgebraError::Parse(format!("empty factor in `{term}`")));
            }
            if let Some(e) = parse_var_power(factor, var)? {
                exp += e;
                continue;
            }
            // Implicit product such as `2x^3`.
            if let Some(pos) = factor.find(var) {
                let (num, rest) = factor.split_at(pos);
                if !num.is_empty() && num.chars().all(|c| c.is_ascii_digit()) {
                    if let Some(e) = parse_var_power(rest, var)? {
                        coeff = f.mul(&coeff, &f.parse_elem(num)?);
                        exp += e;
                        continue;
                    }
                }
            }
            coeff = f.mul(&coeff, &f.parse_elem(factor)?);
        }
        if negative {
            coeff = f.neg(&coeff);
        }
        let mut mono = vec![f.zero(); exp + 1];
        mono[exp] = coeff;
        acc = add(f, &acc, &mono);
    }
    Ok(acc)
}

fn parse_var_power(factor: &str, var: &str) -> Result<Option<usize>> {
    let Some(rest) = factor.strip_prefix(var) else {
        return Ok(None);
    };
    if rest.is_empty() {
        return Ok(Some(1));
    }
    match rest.strip_prefix('^') {
        Some(e) => e.parse::<usize>().map(Some).map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`"))),
        None => Ok(None),
    }
}
