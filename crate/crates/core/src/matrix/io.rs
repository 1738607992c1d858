use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

use super::algebra::{BlockAlgebra, BlockMatrix};
use super::dense::Matrix;
use super::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

/// `{"mode": "exact" | "float", "blocks": [[[..]]]}`; a bare array of
/// blocks is read as exact.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(default)]
    pub mode: Mode,
    pub blocks: Vec<Vec<Vec<Value>>>,
}

impl ElementJson {
    pub fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::Array(_) => Ok(ElementJson {
                mode: Mode::Exact,
                blocks: serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?,
            }),
            _ => serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string())),
        }
    }

    pub fn to_matrix<T: Scalar>(&self, alg: &BlockAlgebra) -> Result<BlockMatrix<T>> {
        let blocks = self
            .blocks
            .iter()
            .map(|rows| {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(T::parse_json).collect::<Result<Vec<T>>>())
                    .collect::<Result<Vec<_>>>()?;
                Matrix::from_rows(rows)
            })
            .collect::<Result<Vec<_>>>()?;
        BlockMatrix::new(alg, blocks)
    }

    pub fn from_matrix<T: Scalar>(m: &BlockMatrix<T>) -> Self {
        let blocks = m
            .blocks()
            .iter()
            .map(|b| b.to_rows().iter().map(|r| r.iter().map(Scalar::to_json).collect()).collect())
            .collect();
        ElementJson { mode: if T::EXACT { Mode::Exact } else { Mode::Float }, blocks }
    }
}

pub fn parse_element<T: Scalar>(alg: &BlockAlgebra, v: &Value) -> Result<BlockMatrix<T>> {
    ElementJson::from_value(v)?.to_matrix(alg)
}

pub fn element_to_json<T: Scalar>(m: &BlockMatrix<T>) -> Value {
    serde_json::to_value(ElementJson::from_matrix(m)).expect("serializable")
}

pub fn parse_algebra(v: &Value) -> Result<BlockAlgebra> {
    #[derive(Deserialize)]
    struct Spec {
        blocks: Vec<usize>,
    }
    let spec: Spec = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    BlockAlgebra::new(spec.blocks)
}
