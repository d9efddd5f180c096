//! Exact rational arithmetic helpers.
//!
//! Every certificate field in this crate is an exact rational, serialized as
//! a `"p/q"` string (or `"p"` when the denominator is 1). Floats appear only
//! in informational annotations, never in anything a verifier replays.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Renders `p/q` with the denominator omitted when it is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("bad rational numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad rational denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Informational float view of a rational, for report annotations only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    let approx = |x: &BigInt| -> f64 {
        let s = x.to_string();
        s.parse::<f64>().unwrap_or(if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        })
    };
    approx(num) / approx(den)
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for (n, d) in [(1i64, 3i64), (-7, 2), (0, 1), (5, 1)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(parse_rat("10/4").unwrap(), rat(5, 2));
        assert_eq!(parse_rat(" 3 ").unwrap(), rat_int(3));
        assert!(parse_rat("1/0").is_err());
    }
}
