use std::fmt;

/// A failure that ends the process with a specific exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_CAP: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

impl CliError {
    pub fn invalid(kind: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            kind,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            kind: "internal-contradiction",
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<ccr::Error> for CliError {
    fn from(e: ccr::Error) -> Self {
        use ccr::Error::*;
        let kind = match &e {
            InvalidInput(_) => "invalid-input",
            InvalidInstance(_) => "invalid-instance",
            WrongGraphClass(_) => "wrong-graph-class",
            WrongInstanceShape(_) => "wrong-instance-shape",
            NotACograph(_) => "not-a-cograph",
            Parse { .. } => "parse",
            SpaceTooLarge { .. } => {
                return CliError {
                    code: EXIT_CAP,
                    kind: "space-too-large",
                    message: e.to_string(),
                }
            }
            InternalContradiction(_) => return CliError::internal(e.to_string()),
        };
        CliError::invalid(kind, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::invalid("io", e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::invalid("parse", e.to_string())
    }
}
