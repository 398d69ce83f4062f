//! Library side of the `bigeo` command line: table generation, the geometric
//! `ops` evaluator, exit codes and report formatting.

mod ops;
mod table;

use std::fmt;

use crate::error::GError;
use crate::garith::GReal;

pub use ops::eval_geometric;
pub use table::{
    audit_table, generate_table, write_csv, AuditLine, TableRow, TableSpec, REFERENCE_TABLE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Environment variable overriding [`DEFAULT_COMPARISON_TOL`].
pub const TOL_ENV: &str = "BIGEO_TOL";
pub const DEFAULT_COMPARISON_TOL: f64 = 1e-6;

/// Comparison tolerance, from `BIGEO_TOL` when it holds a positive number.
pub fn comparison_tolerance() -> f64 {
    std::env::var(TOL_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|t| *t > 0.0 && t.is_finite())
        .unwrap_or(DEFAULT_COMPARISON_TOL)
}

#[derive(Debug)]
pub enum CliError {
    Math(GError),
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(e) if e.is_parse() => EXIT_PARSE,
            CliError::Math(_) => EXIT_DOMAIN,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "cannot write {path}: {source}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GError> for CliError {
    fn from(e: GError) -> Self {
        CliError::Math(e)
    }
}

/// `2.828427 (e^1.039721)`, or only the log form once the raw value is huge.
pub fn describe(v: GReal) -> String {
    if v.log_value().abs() > 20.0 {
        v.log_form()
    } else {
        format!("{:.6} ({})", v.value(), v.log_form())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let parse = CliError::Math(crate::parse("ln(").unwrap_err());
        assert_eq!(parse.exit_code(), EXIT_PARSE);
        assert_eq!(
            CliError::Math(GError::Sign("x".into())).exit_code(),
            EXIT_DOMAIN
        );
        let io = CliError::Io {
            path: "/nope".into(),
            source: std::io::Error::other("denied"),
        };
        assert_eq!(io.exit_code(), EXIT_IO);
    }

    #[test]
    fn describe_forms() {
        let v = GReal::from_value(8f64.sqrt()).unwrap();
        assert_eq!(describe(v), "2.828427 (e^1.039721)");
        assert_eq!(describe(GReal::from_log(120.0).unwrap()), "e^120");
    }
}
