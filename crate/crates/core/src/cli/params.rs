//! Typed parameter schemas; unknown fields are rejected.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, QVector, Rational};
use crate::Series;

pub(super) fn parse<T: DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::input(format!("invalid parameters: {e}")))
}

#[derive(Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct TypeParams {
    pub series: String,
    pub rank: usize,
}

impl TypeParams {
    pub fn series(&self) -> Result<Series> {
        self.series.parse()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct SubalgebraParams {
    pub series: String,
    pub rank: usize,
    #[serde(default)]
    pub subalgebra: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct PrimalParams {
    pub series: String,
    pub rank: usize,
    #[serde(default)]
    pub subalgebra: Vec<usize>,
    pub toral: Option<Vec<RationalList>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct MathieuParams {
    pub series: Option<String>,
    pub lambda: RationalList,
    pub eta: Option<RationalList>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct KTypeParams {
    pub series: String,
    pub rank: usize,
    pub lambda: Option<RationalList>,
    pub lambda_h: Option<RationalValue>,
    pub max_m: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub(super) struct CensusParams {
    pub series: String,
    pub rank: usize,
    pub dedup: Option<bool>,
}

/// A rational given as a string (`"3/2"`) or a JSON integer.
#[derive(Deserialize)]
#[serde(untagged)]
pub(super) enum RationalValue {
    Int(i64),
    Text(String),
}

impl RationalValue {
    pub fn into_rational(self) -> Result<Rational> {
        match self {
            RationalValue::Int(n) => Ok(Rational::from_integer(n.into())),
            RationalValue::Text(s) => parse_rational(&s),
        }
    }
}

/// A vector given as a list of rationals or as one comma-separated string.
#[derive(Deserialize)]
#[serde(untagged)]
pub(super) enum RationalList {
    List(Vec<RationalValue>),
    Text(String),
}

impl RationalList {
    pub fn into_vector(self) -> Result<QVector> {
        let coords = match self {
            RationalList::List(items) => items.into_iter().map(RationalValue::into_rational).collect::<Result<Vec<_>>>()?,
            RationalList::Text(s) => s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<Vec<_>>>()?,
        };
        if coords.is_empty() {
            return Err(Error::input("empty vector"));
        }
        Ok(QVector::new(coords))
    }
}

macro_rules! typed {
    ($($t:ty),*) => {$(
        impl $t {
            pub fn ty(&self) -> TypeParams {
                TypeParams {
                    series: self.series.clone(),
                    rank: self.rank,
                }
            }
        }
    )*};
}

typed!(SubalgebraParams, PrimalParams, KTypeParams, CensusParams);
