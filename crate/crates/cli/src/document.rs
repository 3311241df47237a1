//! The `gamma-rep/1` representation document.
//!
//! Numbers are written in the shortest decimal form that round-trips to the
//! same binary64 value, and complex entries are `[re, im]` pairs, so parsing
//! a document and writing it back reproduces it byte for byte.

use gamma2d::{build_representation, so3_validate, Complex64, GammaRep, Mat2, SO3Params};
use serde::{Deserialize, Serialize};

use crate::output::CliError;

pub const SCHEMA_VERSION: &str = "gamma-rep/1";

/// Largest entrywise gap tolerated between stored gammas and a rebuild.
pub const REBUILD_TOL: f64 = 1e-12;

pub type JsonComplex = [f64; 2];
pub type JsonMat2 = [[JsonComplex; 2]; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Provenance {
    Preset { name: String },
    Euler { angles: [f64; 3] },
    Quaternion { components: [f64; 4] },
    Explicit { reprojected: bool },
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDocument {
    #[serde(rename = "schema-version")]
    pub schema_version: String,
    pub provenance: Provenance,
    /// Rows `c`, `b`, `a`.
    pub so3: [[f64; 3]; 3],
    pub gammas: [JsonMat2; 3],
}

pub fn complex_to_json(z: Complex64) -> JsonComplex {
    [z.re, z.im]
}

pub fn mat_to_json(m: &Mat2) -> JsonMat2 {
    m.0.map(|row| row.map(complex_to_json))
}

pub fn mat_from_json(m: &JsonMat2) -> Mat2 {
    Mat2(m.map(|row| row.map(|[re, im]| Complex64::new(re, im))))
}

impl RepDocument {
    pub fn from_rep(rep: &GammaRep, provenance: Provenance) -> Self {
        RepDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            provenance,
            so3: rep.params().matrix(),
            gammas: rep.gammas().map(|g| mat_to_json(&g)),
        }
    }

    pub fn params(&self) -> SO3Params {
        let [c, b, a] = self.so3;
        SO3Params::from_rows_unchecked(c, b, a)
    }

    /// The stored matrices, exactly as written.
    pub fn raw_rep(&self) -> GammaRep {
        GammaRep::from_parts_unchecked(self.params(), self.gammas.map(|g| mat_from_json(&g)))
    }

    /// Largest gap between stored gammas and a rebuild from `so3`, or `None`
    /// when `so3` cannot be built at all.
    pub fn rebuild_residual(&self) -> Option<f64> {
        let rebuilt = build_representation(&self.params()).ok()?;
        let stored = self.raw_rep();
        Some(
            (0..3)
                .map(|mu| rebuilt.gamma(mu).max_abs_diff(stored.gamma(mu)))
                .fold(0.0, f64::max),
        )
    }

    /// Validated representation for the computational commands: `so3` must
    /// pass validation and the stored gammas must match the rebuild.
    pub fn validated_rep(&self) -> Result<GammaRep, CliError> {
        let params = self.params();
        let rebuilt = build_representation(&params).map_err(|_| {
            CliError::input("document-invalid", "so3 block is not a proper rotation").with_details(
                serde_json::to_value(so3_validate(&params, gamma2d::so3::ACCEPT_TOL)).ok(),
            )
        })?;
        let residual = self.rebuild_residual().unwrap_or(f64::INFINITY);
        if !(residual <= REBUILD_TOL) {
            return Err(CliError::input(
                "document-invalid",
                format!("stored gammas differ from the so3 rebuild by {residual:e}"),
            ));
        }
        Ok(rebuilt)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| CliError::input("parse-error", e.to_string()))?;
        match value.get("schema-version").and_then(|v| v.as_str()) {
            Some(SCHEMA_VERSION) => {}
            Some(other) => {
                return Err(CliError::input(
                    "schema-unsupported",
                    format!("unsupported schema version {other:?}"),
                ))
            }
            None => return Err(CliError::input("parse-error", "missing schema-version")),
        }
        serde_json::from_value(value).map_err(|e| CliError::input("parse-error", e.to_string()))
    }

    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
