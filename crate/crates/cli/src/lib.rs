//! Front-end plumbing for the `dwell` binary: configuration files, width
//! sweeps with CSV output, and static SVG charts.
//!
//! Errors carry the exit code policy: 2 for validation, regime and parse
//! problems, 3 when a numerical routine fails to converge, 4 for I/O.

pub mod config;
pub mod svg;
pub mod sweep;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dwell_core::Error),
    #[error("sweep failed at u = {u}: {source}")]
    AtWidth {
        u: f64,
        #[source]
        source: dwell_core::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("cannot encode output: {0}")]
    Encode(#[from] serde_json::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) | CliError::AtWidth { source: e, .. } => match e {
                dwell_core::Error::Convergence { .. } => 3,
                _ => 2,
            },
            CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Encode(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_policy() {
        let validation = CliError::Core(dwell_core::Error::Domain("x".into()));
        assert_eq!(validation.exit_code(), 2);
        let convergence = CliError::Core(dwell_core::Error::Convergence {
            context: "quadrature".into(),
            best: 1.0,
            error: 1.0,
            tol: 0.5,
        });
        assert_eq!(convergence.exit_code(), 3);
        let annotated = CliError::AtWidth {
            u: 3.0,
            source: dwell_core::Error::Convergence {
                context: "quadrature".into(),
                best: 1.0,
                error: 1.0,
                tol: 0.5,
            },
        };
        assert_eq!(annotated.exit_code(), 3);
        let io = CliError::Io {
            path: "out.csv".into(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "gone"),
        };
        assert_eq!(io.exit_code(), 4);
        assert_eq!(CliError::Usage("no rows".into()).exit_code(), 2);
    }
}
