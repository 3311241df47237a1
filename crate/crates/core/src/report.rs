use serde::Serialize;

/// One named check inside a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Structured pass/fail record. Failures are data, not errors.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a residual. A NaN residual always fails.
    pub fn record(&mut self, name: impl Into<String>, max_residual: f64, tolerance: f64) {
        self.checks.push(Check {
            name: name.into(),
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
        });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0, f64::max)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
