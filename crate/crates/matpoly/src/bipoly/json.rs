//! JSON form: `{"m": 2, "n": 2, "coeffs": [["5", "-3"], ["-3", "2"]]}` where
//! `coeffs[k1][k2]` multiplies `x^k1 y^k2`. Coefficients are rational
//! literals; plain JSON integers are accepted on input.

use serde::{Deserialize, Serialize};

use crate::bipoly::{BiPoly, Shape};
use crate::error::{Error, Position, Result};
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<Vec<Literal>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Text(String),
    Int(i64),
}

impl From<&BiPoly> for PolyJson {
    fn from(p: &BiPoly) -> Self {
        PolyJson {
            m: p.shape().m,
            n: p.shape().n,
            coeffs: p
                .grid()
                .into_iter()
                .map(|row| row.iter().map(|c| Literal::Text(c.to_string())).collect())
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for BiPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<BiPoly> {
        let shape = Shape::new(j.m, j.n)?;
        if j.coeffs.len() != j.m || j.coeffs.iter().any(|row| row.len() != j.n) {
            return Err(Error::InvalidShape(format!(
                "coefficient grid does not match declared shape {shape}"
            )));
        }
        let mut coeffs = Vec::with_capacity(shape.len());
        for row in j.coeffs {
            for lit in row {
                coeffs.push(match lit {
                    Literal::Int(v) => Rat::from(v),
                    Literal::Text(s) => s.parse::<Rat>()?,
                });
            }
        }
        BiPoly::new(shape, coeffs)
    }
}

impl BiPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("plain data serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&PolyJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<BiPoly> {
        let j: PolyJson = serde_json::from_str(text).map_err(|e| {
            let line = e.line().max(1);
            let column = e.column().max(1);
            let offset =
                text.split_inclusive('\n').take(line - 1).map(str::len).sum::<usize>() + column.saturating_sub(1);
            Error::Parse {
                position: Position {
                    offset: offset.min(text.len()),
                    line,
                    column,
                },
                message: e.to_string(),
            }
        })?;
        BiPoly::try_from(j)
    }
}
