use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Error reported as a JSON object on standard error.
#[derive(Debug, Clone)]
pub struct CliError {
    pub exit: i32,
    pub code: String,
    pub message: String,
    pub details: Option<Value>,
}

impl CliError {
    fn new(exit: i32, code: &str, message: impl Into<String>) -> Self {
        CliError {
            exit,
            code: code.to_string(),
            message: message.into(),
            details: None,
        }
    }

    pub fn input(code: &str, message: impl Into<String>) -> Self {
        Self::new(EXIT_INPUT, code, message)
    }

    pub fn negative(code: &str, message: impl Into<String>) -> Self {
        Self::new(EXIT_NEGATIVE, code, message)
    }

    pub fn internal(code: &str, message: impl Into<String>) -> Self {
        Self::new(EXIT_INTERNAL, code, message)
    }

    pub fn with_details(mut self, details: Option<Value>) -> Self {
        self.details = details;
        self
    }

    pub fn to_json(&self) -> String {
        let mut obj = json!({ "error": self.code, "message": self.message });
        if let Some(d) = &self.details {
            obj["details"] = d.clone();
        }
        let mut s = serde_json::to_string(&obj).expect("error object serializes");
        s.push('\n');
        s
    }
}

impl From<gamma2d::Error> for CliError {
    fn from(e: gamma2d::Error) -> Self {
        use gamma2d::Error as E;
        let message = e.to_string();
        match e {
            E::So3Invalid(report) => CliError::input("so3-invalid", message)
                .with_details(serde_json::to_value(report).ok()),
            E::RapidityOverflow(_) => CliError::input("rapidity-overflow", message),
            E::InvalidArgument(_) => CliError::input("invalid-argument", message),
            E::Domain(_) => CliError::input("domain-error", message),
            E::Inconsistent(_) => CliError::internal("internal-inconsistency", message),
            E::Degenerate(_) => CliError::internal("degenerate-solution", message),
        }
    }
}

/// What a command produced: bytes for each stream and the exit status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            exit: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    pub fn from_error(e: &CliError) -> Self {
        Outcome {
            exit: e.exit,
            stdout: String::new(),
            stderr: e.to_json(),
        }
    }
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

/// Shortest round-trip decimal, matching the JSON output; non-finite values
/// are spelled `NaN`, `inf`, `-inf`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite float")
    } else {
        x.to_string()
    }
}

pub fn write_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 csv")
}
