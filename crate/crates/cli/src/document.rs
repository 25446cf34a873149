//! JSON documents for truncated series, with exact rational coefficients.

use mahler_core::algebra::{parse_rat, TruncatedSeries};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub order: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("order is {order} but {count} coefficients are given")]
    CountMismatch { order: usize, count: usize },
    #[error("coefficient {index} ({text:?}) is not an exact rational")]
    BadCoefficient { index: usize, text: String },
}

impl SeriesDocument {
    pub fn from_series(f: &TruncatedSeries, k: Option<usize>) -> Self {
        SeriesDocument {
            k,
            order: f.order(),
            coeffs: f.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_series(&self) -> Result<TruncatedSeries, DocumentError> {
        if self.coeffs.len() != self.order {
            return Err(DocumentError::CountMismatch {
                order: self.order,
                count: self.coeffs.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(index, text)| {
                parse_rat(text.trim()).ok_or_else(|| DocumentError::BadCoefficient {
                    index,
                    text: text.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries::new(coeffs))
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: SeriesDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
        doc.to_series()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}
