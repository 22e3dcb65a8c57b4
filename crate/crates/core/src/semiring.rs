//! Scalars of the min-plus semiring `(ℝ ∪ {ε}, min, +)`.
//!
//! Finite values are exact rationals. `ε` stands for `+∞`: it is the
//! identity of `⊕` (minimum) and absorbing for `⊗` (addition). The unit of
//! `⊗` is `e = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational used for every finite quantity in the crate.
pub type Rational = BigRational;

/// An element of `ℝ_min`.
///
/// The derived ordering puts every `Finite` value below `Epsilon`, which is
/// exactly the order under which `⊕` is the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinPlus {
    Finite(Rational),
    Epsilon,
}

impl MinPlus {
    /// The `⊗`-unit `e = 0`.
    pub fn unit() -> Self {
        MinPlus::Finite(Rational::zero())
    }

    pub fn epsilon() -> Self {
        MinPlus::Epsilon
    }

    pub fn from_int(v: i64) -> Self {
        MinPlus::Finite(Rational::from_integer(v.into()))
    }

    /// `numer / denom` reduced; panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        MinPlus::Finite(Rational::new(numer.into(), denom.into()))
    }

    pub fn is_epsilon(&self) -> bool {
        matches!(self, MinPlus::Epsilon)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_epsilon()
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            MinPlus::Finite(q) => Some(q),
            MinPlus::Epsilon => None,
        }
    }

    pub fn into_finite(self) -> Option<Rational> {
        match self {
            MinPlus::Finite(q) => Some(q),
            MinPlus::Epsilon => None,
        }
    }

    /// `a ⊕ b = min{a, b}`.
    pub fn oplus(&self, other: &MinPlus) -> MinPlus {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `a ⊗ b = a + b`, with `ε` absorbing.
    pub fn otimes(&self, other: &MinPlus) -> MinPlus {
        match (self, other) {
            (MinPlus::Finite(a), MinPlus::Finite(b)) => MinPlus::Finite(a + b),
            _ => MinPlus::Epsilon,
        }
    }

    /// The `⊗`-inverse `-a`.
    pub fn otimes_inverse(&self) -> Result<MinPlus> {
        match self {
            MinPlus::Finite(a) => Ok(MinPlus::Finite(-a)),
            MinPlus::Epsilon => Err(Error::EpsilonInverse),
        }
    }

    /// `a^k = k·a`; `a^0 = e` even for `a = ε`.
    pub fn power(&self, k: usize) -> MinPlus {
        if k == 0 {
            return MinPlus::unit();
        }
        match self {
            MinPlus::Finite(a) => MinPlus::Finite(a * Rational::from_integer(BigInt::from(k))),
            MinPlus::Epsilon => MinPlus::Epsilon,
        }
    }
}

impl From<Rational> for MinPlus {
    fn from(q: Rational) -> Self {
        MinPlus::Finite(q)
    }
}

impl From<i64> for MinPlus {
    fn from(v: i64) -> Self {
        MinPlus::from_int(v)
    }
}

/// Formats a rational as an integer when its denominator is one, otherwise
/// as `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for MinPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinPlus::Finite(q) => f.write_str(&format_rational(q)),
            MinPlus::Epsilon => f.write_str("inf"),
        }
    }
}

/// Parses an exact rational from an integer (`-3`), a decimal literal
/// (`2.75`, `1e-3`) or a fraction (`7/2`).
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("invalid numerator in {s:?}"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("invalid denominator in {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    parse_decimal(s).ok_or_else(|| format!("invalid number {s:?}"))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

fn is_epsilon_token(s: &str) -> bool {
    matches!(
        s.to_ascii_lowercase().as_str(),
        "inf" | "+inf" | "infinity" | "eps" | "epsilon"
    ) || s == "ε"
}

impl FromStr for MinPlus {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if is_epsilon_token(s) {
            Ok(MinPlus::Epsilon)
        } else {
            parse_rational(s).map(MinPlus::Finite)
        }
    }
}

impl Serialize for MinPlus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinPlus::Finite(q) if q.is_integer() => {
                if let Ok(v) = i64::try_from(q.numer().clone()) {
                    return serializer.serialize_i64(v);
                }
                serializer.serialize_str(&format_rational(q))
            }
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

struct MinPlusVisitor;

impl Visitor<'_> for MinPlusVisitor {
    type Value = MinPlus;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a number, a string \"p/q\", or \"inf\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<MinPlus, E> {
        Ok(MinPlus::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<MinPlus, E> {
        Ok(MinPlus::Finite(Rational::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<MinPlus, E> {
        if v == f64::INFINITY {
            return Ok(MinPlus::Epsilon);
        }
        if !v.is_finite() {
            return Err(E::custom(format!("{v} is not a min-plus value")));
        }
        // Shortest round-trip formatting recovers the literal the user wrote.
        parse_rational(&format!("{v:e}"))
            .map(MinPlus::Finite)
            .map_err(E::custom)
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<MinPlus, E> {
        v.parse().map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for MinPlus {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(MinPlusVisitor)
    }
}

/// Serializes a bare rational the same way as a finite [`MinPlus`].
pub(crate) fn serialize_rational<S: Serializer>(
    q: &Rational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    MinPlus::Finite(q.clone()).serialize(serializer)
}

pub(crate) fn rational_from_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
