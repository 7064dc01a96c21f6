//! Exact rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `p/q` as an exact rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// The sparseness threshold 1/50.
pub fn fiftieth() -> Rational {
    rat(1, 50)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Rational approximation of `x` with denominator `den`, rounded to nearest.
pub fn from_f64_with_denominator(x: f64, den: i64) -> Rational {
    let p = (x * den as f64).round() as i64;
    rat(p, den)
}

/// Renders `p/q`, or just `p` for integers.
pub fn fmt(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q`, `p`, or a finite decimal such as `0.02`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = ip.trim_start().starts_with('-');
        let ip: BigInt = if ip.is_empty() || ip == "-" { BigInt::zero() } else { ip.parse().ok()? };
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let frac: BigInt = fp.parse().ok()?;
        let mag = ip.abs() * &den + frac;
        let num = if negative { -mag } else { mag };
        return Some(Rational::new(num, den));
    }
    let p: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(p))
}

/// `a^2 <= b` style comparisons against square roots are done by squaring;
/// this returns `x * x`.
pub fn sq(x: &Rational) -> Rational {
    x * x
}

/// Serde adapters rendering rationals as `"p/q"` strings.
pub mod serde_str {
    use super::{fmt, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt(r))
    }

    pub fn option<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&fmt(r)),
            None => s.serialize_none(),
        }
    }

    pub fn vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt))
    }
}
