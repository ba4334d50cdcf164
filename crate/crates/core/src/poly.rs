//! Univariate polynomials over a [`Field`], plus the irreducibility and
//! separability checks that guard canonical-form construction.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::field::{check_same, Field};
use crate::polyops;

/// A polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// Outcome of [`Poly::is_irreducible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    /// Accepted on the caller's word; only the gcd sanity check was run.
    Asserted,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let coeffs = polyops::trim(&field, coeffs);
        Self { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    /// The monomial `x`.
    pub fn x(field: F) -> Self {
        let (zero, one) = (field.zero(), field.one());
        Self::new(field, vec![zero, one])
    }

    /// Builds a polynomial from small integer coefficients, ascending.
    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::new(field, coeffs)
    }

    pub fn parse(field: F, text: &str) -> Result<Self> {
        let coeffs = polyops::parse(&field, text, "x")?;
        Ok(Self { field, coeffs })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    fn with(&self, coeffs: Vec<F::Elem>) -> Self {
        Self { field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(polyops::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(polyops::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        Ok(self.with(polyops::mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.field.clone());
        for _ in 0..k {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        check_same(&self.field, &other.field)?;
        let (q, r) = polyops::divrem(&self.field, &self.coeffs, &other.coeffs)?;
        Ok((self.with(q), self.with(r)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        check_same(&self.field, &other.field)?;
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        Ok(self.with(polyops::gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Formal derivative; coefficients are multiplied in the field, so the
    /// characteristic can annihilate terms.
    pub fn derivative(&self) -> Self {
        self.with(polyops::derivative(&self.field, &self.coeffs))
    }

    /// Irreducibility of a monic polynomial of positive degree.
    ///
    /// Over GF(p) the answer is exact: `f` of degree `d` is irreducible iff
    /// `gcd(x^(p^k) - x, f) = 1` for every `k <= d/2`. Over the infinite
    /// fields the caller must vouch for irreducibility with `assume`; the
    /// polynomial is still reported `Reducible` when `gcd(f, f')` exposes a
    /// proper factor.
    pub fn is_irreducible(&self, assume: bool) -> Result<Irreducibility> {
        let deg = self.degree().filter(|&d| d > 0).ok_or(AlgebraError::DegreeZero)?;
        if !self.is_monic() {
            return Err(AlgebraError::NotMonic);
        }
        if deg == 1 {
            return Ok(Irreducibility::Irreducible);
        }
        let f = &self.field;
        match f.order() {
            Some(q) => {
                let x = vec![f.zero(), f.one()];
                let mut frob = x.clone();
                for _ in 1..=deg / 2 {
                    frob = polyops::powmod(f, &frob, q, &self.coeffs)?;
                    let g = polyops::gcd(f, &polyops::sub(f, &frob, &x), &self.coeffs);
                    if g.len() > 1 {
                        return Ok(Irreducibility::Reducible);
                    }
                }
                Ok(Irreducibility::Irreducible)
            }
            None => {
                if !assume {
                    return Err(AlgebraError::IrreducibilityUnsupported(f.selector()));
                }
                let d = self.derivative();
                if !d.is_zero() {
                    let g = self.gcd(&d)?;
                    if g.degree().is_some_and(|gd| gd > 0 && gd < deg) {
                        return Ok(Irreducibility::Reducible);
                    }
                }
                Ok(Irreducibility::Asserted)
            }
        }
    }

    /// `gcd(p, p') = 1`.
    pub fn is_separable(&self) -> Result<bool> {
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(&polyops::format(&self.field, &self.coeffs, "x"))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Poly[{}]({self})", self.field.selector())
    }
}
