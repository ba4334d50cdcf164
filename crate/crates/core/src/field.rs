//! Exact coefficient fields: GF(p) for word-sized primes, the rationals, and
//! the rational function field GF(p)(t).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::polyops;

/// A field together with its element representation.
///
/// Field values are small descriptors (`PrimeField { p }`, `Rationals`, ...)
/// so matrices and polynomials carry their field and mismatches are caught
/// at runtime instead of silently mixing moduli.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the canonical ring map Z -> F.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Number of elements for finite fields.
    fn order(&self) -> Option<u64>;

    /// Whether `a` is a canonical representative of an element of this field.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// Selector string accepted by [`FieldSelector::from_str`].
    fn selector(&self) -> String;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// A pseudo-random element; finite fields sample uniformly, infinite
    /// fields sample small representatives.
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
}

/// Binary and unary field operations, dispatched by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
}

/// Checked scalar arithmetic. Unary operations ignore `b`.
pub fn field_arith<F: Field>(f: &F, op: ArithOp, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
    for x in [a, b] {
        if !f.contains(x) {
            return Err(AlgebraError::FieldMismatch(format!("{x:?}"), f.selector()));
        }
    }
    match op {
        ArithOp::Add => Ok(f.add(a, b)),
        ArithOp::Sub => Ok(f.sub(a, b)),
        ArithOp::Mul => Ok(f.mul(a, b)),
        ArithOp::Div => f.div(a, b),
        ArithOp::Inv => f.inv(a),
        ArithOp::Neg => Ok(f.neg(a)),
    }
}

pub(crate) fn check_same<F: Field>(a: &F, b: &F) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(AlgebraError::FieldMismatch(a.selector(), b.selector()))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field GF(p), `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(AlgebraError::Parse(format!("{p} is not a prime below 2^32")));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.elem(t0))
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.elem(n)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn contains(&self, a: &u32) -> bool {
        *a < self.p
    }
    fn selector(&self) -> String {
        format!("gf:{}", self.p)
    }
    fn parse_elem(&self, s: &str) -> Result<u32> {
        let s = polyops::strip_outer_parens(s);
        let parts = polyops::split_top_level(s, '/')?;
        let parse_int = |t: &str| -> Result<u32> {
            let t = polyops::strip_outer_parens(t);
            let v = BigInt::from_str(t).map_err(|_| AlgebraError::Parse(format!("`{t}` is not an integer")))?;
            let r = ((v % BigInt::from(self.p)) + BigInt::from(self.p)) % BigInt::from(self.p);
            Ok(u32::try_from(r).expect("residue fits in u32"))
        };
        match parts.as_slice() {
            [n] => parse_int(n),
            [n, d] => self.div(&parse_int(n)?, &parse_int(d)?),
            _ => Err(AlgebraError::Parse(format!("bad GF({}) scalar `{s}`", self.p))),
        }
    }
    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
}

/// The field of rational numbers with arbitrary-precision components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn contains(&self, a: &BigRational) -> bool {
        // BigRational keeps itself reduced with a positive denominator.
        a.denom().is_positive()
    }
    fn selector(&self) -> String {
        "q".to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let s = polyops::strip_outer_parens(s);
        let parts = polyops::split_top_level(s, '/')?;
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = polyops::strip_outer_parens(t);
            BigInt::from_str(t).map_err(|_| AlgebraError::Parse(format!("`{t}` is not an integer")))
        };
        match parts.as_slice() {
            [n] => Ok(BigRational::from_integer(parse_int(n)?)),
            [n, d] => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(BigRational::new(parse_int(n)?, d))
            }
            _ => Err(AlgebraError::Parse(format!("bad rational `{s}`"))),
        }
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=4);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

/// An element of GF(p)(t): a reduced fraction with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Vec<u32>,
    den: Vec<u32>,
}

impl RatFn {
    pub fn numerator(&self) -> &[u32] {
        &self.num
    }
    pub fn denominator(&self) -> &[u32] {
        &self.den
    }
}

/// The rational function field GF(p)(t), an imperfect field in which
/// `x^p - t` style polynomials are irreducible but inseparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalFunctions {
    base: PrimeField,
}

impl RationalFunctions {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self { base: PrimeField::new(p)? })
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    /// The transcendental generator `t`.
    pub fn t(&self) -> RatFn {
        RatFn { num: vec![0, 1], den: vec![1] }
    }

    /// Builds `num/den` from ascending GF(p) coefficient lists.
    pub fn fraction(&self, num: &[u32], den: &[u32]) -> Result<RatFn> {
        let f = &self.base;
        let num: Vec<u32> = num.iter().map(|&c| c % f.modulus()).collect();
        let den: Vec<u32> = den.iter().map(|&c| c % f.modulus()).collect();
        self.reduce(polyops::trim(f, num), polyops::trim(f, den))
    }

    fn reduce(&self, num: Vec<u32>, den: Vec<u32>) -> Result<RatFn> {
        let f = &self.base;
        if den.is_empty() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(self.zero());
        }
        let g = polyops::gcd(f, &num, &den);
        let (num, _) = polyops::divrem(f, &num, &g)?;
        let (den, _) = polyops::divrem(f, &den, &g)?;
        let lead_inv = f.inv(den.last().expect("nonzero denominator"))?;
        Ok(RatFn { num: polyops::scale(f, &num, &lead_inv), den: polyops::scale(f, &den, &lead_inv) })
    }

    fn format_part(&self, v: &[u32]) -> String {
        polyops::format(&self.base, v, "t")
    }
}

impl Field for RationalFunctions {
    type Elem = RatFn;

    fn zero(&self) -> RatFn {
        RatFn { num: Vec::new(), den: vec![1] }
    }
    fn one(&self) -> RatFn {
        RatFn { num: vec![1], den: vec![1] }
    }
    fn is_zero(&self, a: &RatFn) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        let f = &self.base;
        if a.den == b.den {
            return self.reduce(polyops::add(f, &a.num, &b.num), a.den.clone()).expect("nonzero den");
        }
        let num = polyops::add(f, &polyops::mul(f, &a.num, &b.den), &polyops::mul(f, &b.num, &a.den));
        self.reduce(num, polyops::mul(f, &a.den, &b.den)).expect("nonzero den")
    }
    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        let f = &self.base;
        self.reduce(polyops::mul(f, &a.num, &b.num), polyops::mul(f, &a.den, &b.den)).expect("nonzero den")
    }
    fn neg(&self, a: &RatFn) -> RatFn {
        RatFn { num: polyops::neg(&self.base, &a.num), den: a.den.clone() }
    }
    fn inv(&self, a: &RatFn) -> Result<RatFn> {
        if a.num.is_empty() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.reduce(a.den.clone(), a.num.clone())
    }
    fn from_i64(&self, n: i64) -> RatFn {
        let c = self.base.elem(n);
        if c == 0 {
            self.zero()
        } else {
            RatFn { num: vec![c], den: vec![1] }
        }
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn contains(&self, a: &RatFn) -> bool {
        let f = &self.base;
        let canonical = |v: &[u32]| v.iter().all(|&c| c < f.modulus()) && v.last() != Some(&0);
        canonical(&a.num)
            && canonical(&a.den)
            && a.den.last() == Some(&1)
            && (a.num.is_empty() && a.den == [1] || polyops::gcd(f, &a.num, &a.den) == [1])
    }
    fn selector(&self) -> String {
        format!("gft:{}", self.base.modulus())
    }
    fn parse_elem(&self, s: &str) -> Result<RatFn> {
        let s = polyops::strip_outer_parens(s);
        let parts = polyops::split_top_level(s, '/')?;
        let poly = |t: &str| polyops::parse(&self.base, t, "t");
        match parts.as_slice() {
            [n] => self.reduce(poly(n)?, vec![1]),
            [n, d] => self.reduce(poly(n)?, poly(d)?),
            _ => Err(AlgebraError::Parse(format!("bad rational function `{s}`"))),
        }
    }
    fn format_elem(&self, a: &RatFn) -> String {
        let num = self.format_part(&a.num);
        if a.den == [1] {
            return num;
        }
        let wrap = |s: String| {
            if s.chars().all(|c| c.is_ascii_alphanumeric() || c == '^') {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(num), wrap(self.format_part(&a.den)))
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> RatFn {
        let p = self.base.modulus();
        let num: Vec<u32> = (0..3).map(|_| rng.gen_range(0..p)).collect();
        let den: Vec<u32> = if rng.gen_bool(0.5) { vec![1] } else { vec![rng.gen_range(0..p), 1] };
        self.fraction(&num, &den).expect("monic denominator is nonzero")
    }
}

/// Runtime field choice, parsed from `gf:5`, `q` or `gft:2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSelector {
    Prime(PrimeField),
    Rationals,
    RationalFunctions(RationalFunctions),
}

impl FromStr for FieldSelector {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let prime =
            |rest: &str| rest.parse::<u64>().map_err(|_| AlgebraError::Parse(format!("bad field selector `{s}`")));
        if s == "q" || s == "Q" {
            Ok(Self::Rationals)
        } else if let Some(rest) = s.strip_prefix("gft:") {
            Ok(Self::RationalFunctions(RationalFunctions::new(prime(rest)?)?))
        } else if let Some(rest) = s.strip_prefix("gf:") {
            Ok(Self::Prime(PrimeField::new(prime(rest)?)?))
        } else {
            Err(AlgebraError::Parse(format!("bad field selector `{s}`")))
        }
    }
}

impl fmt::Display for FieldSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Prime(k) => write!(f, "{}", k.selector()),
            Self::Rationals => write!(f, "q"),
            Self::RationalFunctions(k) => write!(f, "{}", k.selector()),
        }
    }
}
