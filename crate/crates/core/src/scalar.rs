//! Exact coefficient domains and their scalars.
//!
//! Every value is carried as a reduced [`BigRational`]; the [`Domain`] decides
//! which rationals are admissible and how arithmetic wraps (residues for
//! `Zn`, hard errors for leaving a cone).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// A coefficient domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Domain {
    /// The integers.
    Int,
    /// The rationals, also standing in for the reals.
    Rat,
    /// Integers modulo `n`, `n >= 2`.
    Mod(u64),
    /// The cone of nonnegative integers.
    NonNegInt,
    /// The cone of nonnegative rationals.
    NonNegRat,
}

impl Domain {
    pub fn modular(n: u64) -> Result<Domain> {
        if n < 2 {
            return Err(AlgebraError::InvalidModulus(n));
        }
        Ok(Domain::Mod(n))
    }

    pub fn is_cone(self) -> bool {
        matches!(self, Domain::NonNegInt | Domain::NonNegRat)
    }

    /// Only integer values are admissible.
    pub fn is_discrete(self) -> bool {
        matches!(self, Domain::Int | Domain::NonNegInt | Domain::Mod(_))
    }

    /// No zero divisors among the scalars.
    pub fn is_integral(self) -> bool {
        match self {
            Domain::Mod(n) => is_prime(n),
            _ => true,
        }
    }

    pub fn is_field(self) -> bool {
        match self {
            Domain::Rat => true,
            Domain::Mod(n) => is_prime(n),
            _ => false,
        }
    }

    pub fn zero(self) -> BigRational {
        BigRational::zero()
    }

    pub fn one(self) -> BigRational {
        BigRational::one()
    }

    /// Bring `v` into canonical form for this domain, or reject it.
    pub fn normalize(self, v: BigRational) -> Result<BigRational> {
        match self {
            Domain::Rat => Ok(v),
            Domain::Int => {
                if v.is_integer() {
                    Ok(v)
                } else {
                    Err(AlgebraError::NotInDomain(render_rational(&v), self))
                }
            }
            Domain::Mod(n) => {
                if !v.is_integer() {
                    return Err(AlgebraError::NotInDomain(render_rational(&v), self));
                }
                let r = v.to_integer().mod_floor(&BigInt::from(n));
                Ok(BigRational::from_integer(r))
            }
            Domain::NonNegInt => {
                if !v.is_integer() {
                    Err(AlgebraError::NotInDomain(render_rational(&v), self))
                } else if v.is_negative() {
                    Err(AlgebraError::LeavesCone(render_rational(&v), self))
                } else {
                    Ok(v)
                }
            }
            Domain::NonNegRat => {
                if v.is_negative() {
                    Err(AlgebraError::LeavesCone(render_rational(&v), self))
                } else {
                    Ok(v)
                }
            }
        }
    }

    pub fn from_i64(self, v: i64) -> Result<BigRational> {
        self.normalize(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        // Closed in every domain, including the cones.
        match self {
            Domain::Mod(_) => self.normalize(a + b).expect("residues are integral"),
            _ => a + b,
        }
    }

    pub fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        match self {
            Domain::Mod(_) => self.normalize(a * b).expect("residues are integral"),
            _ => a * b,
        }
    }

    pub fn neg(self, a: &BigRational) -> Result<BigRational> {
        if self.is_cone() && !a.is_zero() {
            return Err(AlgebraError::LeavesCone(render_rational(&-a), self));
        }
        self.normalize(-a)
    }

    pub fn sub(self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        self.normalize(a - b)
    }

    /// Multiply by a nonnegative integer `k` (repeated addition).
    pub fn scale(self, a: &BigRational, k: u64) -> BigRational {
        self.mul(a, &BigRational::from_integer(BigInt::from(k)))
    }

    pub fn is_unit(self, a: &BigRational) -> bool {
        match self {
            Domain::Rat | Domain::NonNegRat => !a.is_zero(),
            Domain::Int => a.abs().is_one(),
            Domain::NonNegInt => a.is_one(),
            Domain::Mod(n) => a.to_integer().gcd(&BigInt::from(n)).is_one(),
        }
    }

    pub fn inv(self, a: &BigRational) -> Result<BigRational> {
        if !self.is_unit(a) {
            return Err(AlgebraError::NotAUnit(render_rational(a), self));
        }
        match self {
            Domain::Mod(n) => {
                let m = BigInt::from(n);
                let e = a.to_integer().extended_gcd(&m);
                Ok(BigRational::from_integer(e.x.mod_floor(&m)))
            }
            _ => Ok(a.recip()),
        }
    }

    pub fn is_idempotent(self, a: &BigRational) -> bool {
        &self.mul(a, a) == a
    }

    /// Some power of `a` vanishes.
    pub fn is_nilpotent(self, a: &BigRational) -> bool {
        match self {
            Domain::Mod(n) => {
                let rad = radical(n);
                a.to_integer().mod_floor(&BigInt::from(rad)).is_zero()
            }
            _ => a.is_zero(),
        }
    }

    /// Parse the textual scalar syntax into this domain.
    pub fn parse_value(self, text: &str) -> Result<BigRational> {
        let v = parse_rational(text).ok_or_else(|| AlgebraError::Parse {
            line: 1,
            col: 1,
            msg: format!("invalid scalar `{text}`"),
        })?;
        self.normalize(v)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Int => f.write_str("Z"),
            Domain::Rat => f.write_str("Q"),
            Domain::Mod(n) => write!(f, "Zn:{n}"),
            Domain::NonNegInt => f.write_str("Z+"),
            Domain::NonNegRat => f.write_str("Q+"),
        }
    }
}

impl FromStr for Domain {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Domain> {
        match s.trim() {
            "Z" => Ok(Domain::Int),
            "Q" => Ok(Domain::Rat),
            "Z+" => Ok(Domain::NonNegInt),
            "Q+" => Ok(Domain::NonNegRat),
            other => {
                let n = other
                    .strip_prefix("Zn:")
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| AlgebraError::Parse {
                        line: 1,
                        col: 1,
                        msg: format!("unknown domain `{other}` (expected Z, Q, Zn:<n>, Z+ or Q+)"),
                    })?;
                Domain::modular(n)
            }
        }
    }
}

impl From<Domain> for String {
    fn from(d: Domain) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for Domain {
    type Error = AlgebraError;

    fn try_from(s: String) -> Result<Domain> {
        s.parse()
    }
}

/// An exact value tagged with its domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    domain: Domain,
    value: BigRational,
}

impl Scalar {
    pub fn new(domain: Domain, value: BigRational) -> Result<Scalar> {
        Ok(Scalar { value: domain.normalize(value)?, domain })
    }

    pub fn from_i64(domain: Domain, v: i64) -> Result<Scalar> {
        Scalar::new(domain, BigRational::from_integer(v.into()))
    }

    pub fn ratio(domain: Domain, num: i64, den: i64) -> Result<Scalar> {
        Scalar::new(domain, BigRational::new(num.into(), den.into()))
    }

    pub fn parse(domain: Domain, text: &str) -> Result<Scalar> {
        Ok(Scalar { value: domain.parse_value(text)?, domain })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn into_value(self) -> BigRational {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn same_domain(&self, other: &Scalar) -> Result<Domain> {
        if self.domain != other.domain {
            return Err(AlgebraError::DomainMismatch(self.domain, other.domain));
        }
        Ok(self.domain)
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.same_domain(other)?;
        Ok(Scalar { value: d.add(&self.value, &other.value), domain: d })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.same_domain(other)?;
        Ok(Scalar { value: d.mul(&self.value, &other.value), domain: d })
    }

    pub fn inv(&self) -> Result<Scalar> {
        Ok(Scalar { value: self.domain.inv(&self.value)?, domain: self.domain })
    }

    pub fn is_unit(&self) -> bool {
        self.domain.is_unit(&self.value)
    }

    /// Exact k-th root, if one exists in the same domain.
    ///
    /// Negative radicands only have (negative) roots for odd `k`.
    pub fn kth_root(&self, k: u32) -> Result<Option<Scalar>> {
        if let Domain::Mod(_) = self.domain {
            return Err(AlgebraError::UnsupportedDomain(self.domain, "k-th root".into()));
        }
        if k == 0 {
            return Err(AlgebraError::UnsupportedDomain(self.domain, "0-th root".into()));
        }
        Ok(exact_root(&self.value, k).map(|value| Scalar { value, domain: self.domain }))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational(&self.value))
    }
}

/// Exact rational k-th root of `v`; negative values only for odd `k`.
pub fn exact_root(v: &BigRational, k: u32) -> Option<BigRational> {
    if k == 0 {
        return None;
    }
    if v.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-v, k).map(|r| -r);
    }
    let num = v.numer();
    let den = v.denom();
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if num_traits::pow(rn.clone(), k as usize) == *num && num_traits::pow(rd.clone(), k as usize) == *den {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Canonical text: `n` for integers, `p/q` otherwise.
pub fn render_rational(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Optional sign, then an integer or a `p/q` fraction.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let valid_int = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    match den {
        None => Some(BigRational::from_integer(n)),
        Some(d) => {
            if !valid_int(d, false) {
                return None;
            }
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Product of the distinct primes dividing `n`.
fn radical(mut n: u64) -> u64 {
    let mut rad = 1;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            rad *= d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

/// Positive prime test on an exact value (non-integers are never prime).
pub fn is_prime_value(v: &BigRational) -> bool {
    v.is_integer() && v.to_integer().to_u64().is_some_and(is_prime)
}
