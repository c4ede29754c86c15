//! TOML input documents.
//!
//! ```toml
//! n = 1
//!
//! [[points]]
//! id = "min"
//! weights = [1]
//! moment = "-1/2"
//!
//! [[points]]
//! id = "max"
//! weights = [-1]
//! moment = "1/2"
//!
//! # optional, read by `solve`: a_1|_F, ..., a_n|_F as coefficients of x
//! [table]
//! min = [0]
//! max = [1]
//! ```

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;

use semifree::{FixedPoint, FixedPointData, Rational};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: usize,
    pub points: Vec<PointInput>,
    #[serde(default)]
    pub table: Option<BTreeMap<String, Vec<i64>>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    pub id: String,
    pub weights: Vec<i64>,
    #[serde(default)]
    pub moment: Option<RationalInput>,
}

/// A rational written either as an integer or as a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RationalInput::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalInput::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim())
        .map_err(|_| CliError::Parse(format!("`{s}` is not a rational number")))
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn data(&self) -> Result<FixedPointData, CliError> {
        let points = self
            .points
            .iter()
            .map(|p| {
                let fp = FixedPoint::new(p.id.clone(), p.weights.clone());
                Ok(match &p.moment {
                    Some(m) => fp.with_moment(m.value()?),
                    None => fp,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(FixedPointData::new(self.n, points)?)
    }

    pub fn table_rows(&self) -> Option<BTreeMap<String, Vec<BigInt>>> {
        self.table.as_ref().map(|t| {
            t.iter()
                .map(|(id, row)| (id.clone(), row.iter().map(|&v| BigInt::from(v)).collect()))
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_moments_in_both_forms() {
        let doc = InputDocument::parse(
            r#"
            n = 1
            [[points]]
            id = "a"
            weights = [1]
            moment = "-1/2"
            [[points]]
            id = "b"
            weights = [-1]
            moment = 2
            "#,
        )
        .unwrap();
        let data = doc.data().unwrap();
        assert_eq!(
            data.point("a").unwrap().moment,
            Some(Rational::new((-1).into(), 2.into()))
        );
        assert_eq!(
            data.point("b").unwrap().moment,
            Some(Rational::from_integer(2.into()))
        );
    }

    #[test]
    fn rejects_unknown_keys_and_bad_rationals() {
        assert!(InputDocument::parse("n = 1\npoints = []\nextra = 3").is_err());
        let doc = InputDocument::parse(
            "n = 1\n[[points]]\nid = \"a\"\nweights = [1]\nmoment = \"one half\"",
        )
        .unwrap();
        assert!(doc.data().is_err());
    }
}
