use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One comparison of a computed value against a reference.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub id: String,
    #[serde(with = "nullable")]
    pub lhs: f64,
    #[serde(with = "nullable")]
    pub rhs: f64,
    #[serde(with = "nullable")]
    pub abs_residual: f64,
    #[serde(with = "nullable")]
    pub rel_residual: f64,
    pub tol: f64,
    pub status: Status,
    pub runtime_ms: u64,
    /// Why the left side could not be computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Independent comparisons that tell where a failure comes from.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub localization: Vec<VerificationRecord>,
}

impl VerificationRecord {
    /// PASS iff rel_residual ≤ tol, or abs_residual ≤ tol when rhs = 0.
    pub fn compare(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let abs_residual = (lhs - rhs).abs();
        let rel_residual = if rhs == 0.0 { abs_residual } else { abs_residual / rhs.abs() };
        let status = if rel_residual <= tol { Status::Pass } else { Status::Fail };
        Self {
            id: id.into(),
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            tol,
            status,
            runtime_ms: 0,
            error: None,
            localization: Vec::new(),
        }
    }

    /// A FAIL record for a computation that raised an error.
    pub fn failed(id: impl Into<String>, rhs: f64, tol: f64, error: impl std::fmt::Display) -> Self {
        Self { error: Some(error.to_string()), status: Status::Fail, ..Self::compare(id, f64::NAN, rhs, tol) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Copy with every runtime field zeroed, for reproducibility checks.
    pub fn without_runtime(&self) -> Self {
        Self {
            runtime_ms: 0,
            localization: self.localization.iter().map(Self::without_runtime).collect(),
            ..self.clone()
        }
    }
}

/// Non-finite values travel as JSON null and come back as NaN.
mod nullable {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}
