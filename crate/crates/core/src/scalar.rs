//! Scalar domains.
//!
//! Algorithms are generic over [`Ring`], with [`IntegralDomain`] adding exact
//! division and [`Field`] adding inversion. Three concrete domains are
//! provided: [`ExactInteger`], [`ExactRational`] and [`ApproxReal`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::instrument::{tick_add, tick_mul};

/// Algebraic capability tier of a scalar domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    CommutativeRing,
    IntegralDomain,
    Field,
}

/// Tag naming one of the concrete scalar domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Int,
    Rational,
    Float,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Int => "int",
            Domain::Rational => "rational",
            Domain::Float => "float",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "int" => Ok(Domain::Int),
            "rational" => Ok(Domain::Rational),
            "float" => Ok(Domain::Float),
            other => Err(format!(
                "unknown scalar domain {other:?} (expected int, rational or float)"
            )),
        }
    }
}

/// A commutative ring with identity.
///
/// Implementations report each operation to [`crate::instrument`].
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TIER: Tier;
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn is_zero(&self) -> bool;

    /// Parses `text` under this domain's literal grammar.
    fn parse(text: &str) -> Result<Self>;

    /// Equality used by tests and verification. Exact domains compare
    /// exactly; approximate domains use a tolerance.
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    /// Magnitude used for partial pivoting, or `None` when any nonzero
    /// pivot is as good as any other.
    fn pivot_weight(&self) -> Option<f64> {
        None
    }

    /// Multiplies by a sign in {-1, 0, +1} without charging a multiplication.
    fn scale_sign(&self, sign: i32) -> Self {
        match sign {
            0 => Self::zero(),
            s if s > 0 => self.clone(),
            _ => self.neg(),
        }
    }
}

/// A ring without zero divisors, with exact division.
pub trait IntegralDomain: Ring {
    /// Returns `q` with `q * divisor == self`.
    ///
    /// Fails on a zero divisor, and (outside fields) when `divisor` does not
    /// divide `self`.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
}

/// A field.
pub trait Field: IntegralDomain {
    fn inv(&self) -> Result<Self>;
}

fn parse_error(text: &str, domain: Domain, reason: &'static str) -> Error {
    Error::Parse {
        text: text.to_owned(),
        domain: domain.name(),
        reason,
    }
}

fn is_integer_literal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn is_denominator_literal(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b'1'..=b'9')) && bytes.all(|b| b.is_ascii_digit())
}

/// Decimal or scientific literal: `[+-]? digits [. digits] [(e|E) [+-]? digits]`,
/// where the mantissa may be `.5` or `5.` but not a bare `.`.
fn is_float_literal(s: &str) -> bool {
    let s = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], Some(&s[pos + 1..])),
        None => (s, None),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() && frac_part.is_empty() {
        return false;
    }
    if !all_digits(int_part) || !all_digits(frac_part) {
        return false;
    }
    match exponent {
        None => true,
        Some(e) => {
            let e = e.strip_prefix(['+', '-']).unwrap_or(e);
            !e.is_empty() && all_digits(e)
        }
    }
}

/// Arbitrary-precision integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInteger(pub BigInt);

impl ExactInteger {
    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }
}

impl From<BigInt> for ExactInteger {
    fn from(v: BigInt) -> Self {
        ExactInteger(v)
    }
}

impl From<i64> for ExactInteger {
    fn from(v: i64) -> Self {
        ExactInteger(BigInt::from(v))
    }
}

impl fmt::Display for ExactInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Ring for ExactInteger {
    const TIER: Tier = Tier::IntegralDomain;
    const DOMAIN: Domain = Domain::Int;

    fn zero() -> Self {
        ExactInteger(BigInt::zero())
    }
    fn one() -> Self {
        ExactInteger(BigInt::one())
    }
    fn from_i64(value: i64) -> Self {
        ExactInteger(BigInt::from(value))
    }

    fn add(&self, rhs: &Self) -> Self {
        tick_add();
        ExactInteger(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        tick_add();
        ExactInteger(&self.0 - &rhs.0)
    }
    fn neg(&self) -> Self {
        tick_add();
        ExactInteger(-&self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        tick_mul();
        ExactInteger(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.contains('/') {
            return Err(parse_error(
                text,
                Domain::Int,
                "fraction syntax in integer domain",
            ));
        }
        if !is_integer_literal(t) {
            return Err(parse_error(text, Domain::Int, "malformed integer"));
        }
        BigInt::from_str(t)
            .map(ExactInteger)
            .map_err(|_| parse_error(text, Domain::Int, "malformed integer"))
    }
}

impl IntegralDomain for ExactInteger {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tick_mul();
        let (q, r) = self.0.div_rem(&divisor.0);
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(ExactInteger(q))
    }
}

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ExactRational(BigRational::new(numer.into(), denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<ExactInteger> for ExactRational {
    fn from(v: ExactInteger) -> Self {
        ExactRational(BigRational::from_integer(v.0))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Ring for ExactRational {
    const TIER: Tier = Tier::Field;
    const DOMAIN: Domain = Domain::Rational;

    fn zero() -> Self {
        ExactRational(BigRational::zero())
    }
    fn one() -> Self {
        ExactRational(BigRational::one())
    }
    fn from_i64(value: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(value)))
    }

    fn add(&self, rhs: &Self) -> Self {
        tick_add();
        ExactRational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        tick_add();
        ExactRational(&self.0 - &rhs.0)
    }
    fn neg(&self) -> Self {
        tick_add();
        ExactRational(-&self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        tick_mul();
        ExactRational(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (t, None),
        };
        if !is_integer_literal(num) {
            return Err(parse_error(text, Domain::Rational, "malformed numerator"));
        }
        let numer = BigInt::from_str(num)
            .map_err(|_| parse_error(text, Domain::Rational, "malformed numerator"))?;
        let denom = match den {
            None => BigInt::one(),
            Some(d) if !d.is_empty() && d.bytes().all(|b| b == b'0') => {
                return Err(parse_error(text, Domain::Rational, "zero denominator"));
            }
            Some(d) if is_denominator_literal(d) => BigInt::from_str(d)
                .map_err(|_| parse_error(text, Domain::Rational, "malformed denominator"))?,
            Some(_) => {
                return Err(parse_error(text, Domain::Rational, "malformed denominator"));
            }
        };
        ExactRational::new(numer, denom)
    }
}

impl IntegralDomain for ExactRational {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tick_mul();
        Ok(ExactRational(&self.0 / &divisor.0))
    }
}

impl Field for ExactRational {
    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        tick_mul();
        Ok(ExactRational(self.0.recip()))
    }
}

/// Binary64 floating-point value. Equality through [`Ring::approx_eq`] uses
/// a relative tolerance of `1e-9` and an absolute floor of `1e-12`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ApproxReal(pub f64);

impl ApproxReal {
    pub const REL_TOL: f64 = 1e-9;
    pub const ABS_TOL: f64 = 1e-12;

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Ring for ApproxReal {
    const TIER: Tier = Tier::Field;
    const DOMAIN: Domain = Domain::Float;

    fn zero() -> Self {
        ApproxReal(0.0)
    }
    fn one() -> Self {
        ApproxReal(1.0)
    }
    fn from_i64(value: i64) -> Self {
        ApproxReal(value as f64)
    }

    fn add(&self, rhs: &Self) -> Self {
        tick_add();
        ApproxReal(self.0 + rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        tick_add();
        ApproxReal(self.0 - rhs.0)
    }
    fn neg(&self) -> Self {
        tick_add();
        ApproxReal(-self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        tick_mul();
        ApproxReal(self.0 * rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }

    fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if !is_float_literal(t) {
            return Err(parse_error(text, Domain::Float, "malformed float"));
        }
        let v: f64 = t
            .parse()
            .map_err(|_| parse_error(text, Domain::Float, "malformed float"))?;
        if !v.is_finite() {
            return Err(parse_error(text, Domain::Float, "value out of range"));
        }
        Ok(ApproxReal(v))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        let (a, b) = (self.0, other.0);
        let scale = a.abs().max(b.abs());
        (a - b).abs() <= (Self::REL_TOL * scale).max(Self::ABS_TOL)
    }

    fn pivot_weight(&self) -> Option<f64> {
        Some(self.0.abs())
    }
}

impl IntegralDomain for ApproxReal {
    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.0 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        tick_mul();
        Ok(ApproxReal(self.0 / divisor.0))
    }
}

impl Field for ApproxReal {
    fn inv(&self) -> Result<Self> {
        if self.0 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        tick_mul();
        Ok(ApproxReal(1.0 / self.0))
    }
}

/// A scalar of a domain chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Int(ExactInteger),
    Rational(ExactRational),
    Float(ApproxReal),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Int(_) => Domain::Int,
            Scalar::Rational(_) => Domain::Rational,
            Scalar::Float(_) => Domain::Float,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => v.fmt(f),
            Scalar::Rational(v) => v.fmt(f),
            Scalar::Float(v) => v.fmt(f),
        }
    }
}

/// Parses `text` under the literal grammar of `domain`.
///
/// ```
/// use cullis_core::{parse_scalar, Domain, Scalar, ExactRational};
/// let v = parse_scalar("6/4", Domain::Rational).unwrap();
/// assert_eq!(v, Scalar::Rational(ExactRational::new(3, 2).unwrap()));
/// assert!(parse_scalar("1/0", Domain::Rational).is_err());
/// ```
pub fn parse_scalar(text: &str, domain: Domain) -> Result<Scalar> {
    Ok(match domain {
        Domain::Int => Scalar::Int(ExactInteger::parse(text)?),
        Domain::Rational => Scalar::Rational(ExactRational::parse(text)?),
        Domain::Float => Scalar::Float(ApproxReal::parse(text)?),
    })
}
