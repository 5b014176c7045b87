//! Exact rational numbers and their `"p/q"` string form.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// Builds `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

pub fn zero() -> Rat {
    BigRational::zero()
}

pub fn one() -> Rat {
    BigRational::one()
}

/// Renders a rational as `p` or `p/q` in lowest terms.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a decimal such as `0.5`.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|e| e.to_string())?;
        let q = BigInt::from_str(q.trim()).map_err(|e| e.to_string())?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = BigInt::from_str(int).map_err(|e| e.to_string())?;
        let digits = frac.len() as u32;
        let frac_n = BigInt::from_str(frac).map_err(|e| e.to_string())?;
        let denom = BigInt::from(10u32).pow(digits);
        let numer = &int * &denom + if int.is_negative() { -frac_n } else { frac_n };
        return Ok(BigRational::new(numer, denom));
    }
    let p = BigInt::from_str(s).map_err(|e| e.to_string())?;
    Ok(BigRational::from_integer(p))
}

/// Serde adapter so `Rat` fields round-trip as `"p/q"` strings.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        rat_from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Same adapter for `Vec<Rat>`.
pub mod serde_rat_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&rat_to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| rat_from_str(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
