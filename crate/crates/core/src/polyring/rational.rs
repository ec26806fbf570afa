use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `p`, `p/q`, or an exact decimal such as `-0.4`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("invalid rational literal `{t}`"),
    };
    if t.is_empty() {
        return Err(bad());
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let value = if let Some((p, q)) = body.split_once('/') {
        let p = decimal(p).ok_or_else(bad)?;
        let q = decimal(q).ok_or_else(bad)?;
        if q.is_zero() {
            return Err(bad());
        }
        p / q
    } else {
        decimal(body).ok_or_else(bad)?
    };
    Ok(if neg { -value } else { value })
}

fn decimal(s: &str) -> Option<Rational> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    Some(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest double; falls back to dividing the parts for huge values.
pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("-0.4").unwrap(), Rational::new((-2).into(), 5.into()));
        assert_eq!(parse_rational("0.1").unwrap(), Rational::new(1.into(), 10.into()));
        assert_eq!(parse_rational("17/2").unwrap(), Rational::new(17.into(), 2.into()));
        assert_eq!(parse_rational("8.5").unwrap(), Rational::new(17.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&Rational::new((-6).into(), 4.into())), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }
}
