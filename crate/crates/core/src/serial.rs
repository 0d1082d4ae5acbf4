//! JSON encodings shared by the library and the command line.
//!
//! Rationals are written as `["numerator", "denominator"]` string pairs so no
//! precision is lost on the way through other tools.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ehrhart::{to_hstar, EhrhartPolynomial, HStarVector};
use crate::error::Result;

pub fn rational_pair(x: &BigRational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

pub fn parse_rational_pair(p: &[String; 2]) -> std::result::Result<BigRational, String> {
    let n: BigInt = p[0].trim().parse().map_err(|_| format!("bad numerator {:?}", p[0]))?;
    let d: BigInt = p[1].trim().parse().map_err(|_| format!("bad denominator {:?}", p[1]))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(n, d))
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational_pair(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let p = <[String; 2]>::deserialize(d)?;
        parse_rational_pair(&p).map_err(D::Error::custom)
    }
}

pub mod opt_rational {
    use super::*;

    pub fn serialize<S: Serializer>(
        x: &Option<BigRational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        x.as_ref().map(rational_pair).serialize(s)
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
        x.iter().map(rational_pair).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigRational>, D::Error> {
        let v = Vec::<[String; 2]>::deserialize(d)?;
        v.iter()
            .map(|p| parse_rational_pair(p).map_err(D::Error::custom))
            .collect()
    }
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        x.to_string().serialize(s)
    }
}

/// `{"label": .., "G": [[num, den], ..], "hstar": [..]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartJson {
    #[serde(default)]
    pub label: String,
    #[serde(rename = "G", with = "rational_vec")]
    pub coeffs: Vec<BigRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hstar: Option<Vec<i64>>,
}

impl EhrhartJson {
    pub fn new(label: &str, e: &EhrhartPolynomial) -> Result<Self> {
        Ok(EhrhartJson {
            label: label.to_string(),
            coeffs: e.coeffs().to_vec(),
            hstar: Some(to_hstar(e)?.entries().to_vec()),
        })
    }

    pub fn polynomial(&self) -> EhrhartPolynomial {
        match &self.hstar {
            Some(h) if self.coeffs.is_empty() => crate::ehrhart::from_hstar(&HStarVector::new(h.clone())),
            _ => EhrhartPolynomial::from_coeffs(self.coeffs.clone()),
        }
    }
}
