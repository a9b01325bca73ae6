//! Implementation of the `homring` command line tool.
//!
//! All command logic lives in this library so it can be tested and fuzzed
//! directly; the binary is a thin clap wrapper.  Each command produces a
//! [`document::JsonDoc`], a format-independent result that renders to a
//! tab-separated table, CSV, or JSON.
//!
//! Exit codes: 0 success, 1 usage or parse errors, 2 a verification that
//! ran to completion and found a violation, 3 a numerical guard trip in
//! the floating-point character routes.

pub mod commands;
pub mod document;
pub mod range;

use std::fmt;

use homring::LambdaRational;

/// What `--lambda` was set to: absent keeps weights symbolic in units of
/// λ, a bound value scales them to plain rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSetting {
    Symbolic,
    Bound(LambdaRational),
}

impl LambdaSetting {
    pub fn parse(arg: Option<&str>) -> Result<LambdaSetting, CliError> {
        match arg {
            None => Ok(LambdaSetting::Symbolic),
            Some(text) => {
                let value: LambdaRational = text
                    .parse()
                    .map_err(|e| CliError::Usage(format!("invalid --lambda: {e}")))?;
                if value.is_negative() {
                    return Err(CliError::Usage(format!(
                        "invalid --lambda: {value} is negative"
                    )));
                }
                Ok(LambdaSetting::Bound(value))
            }
        }
    }

    /// The λ weights are computed with: the bound value, or 1 so that
    /// coefficients stay in units of λ.
    pub fn effective(&self) -> LambdaRational {
        match self {
            LambdaSetting::Symbolic => LambdaRational::one(),
            LambdaSetting::Bound(v) => v.clone(),
        }
    }

    pub fn bound(&self) -> Option<&LambdaRational> {
        match self {
            LambdaSetting::Symbolic => None,
            LambdaSetting::Bound(v) => Some(v),
        }
    }

    /// Renders a weight the way this setting reads: symbolic multiples of
    /// λ, or a plain rational.
    pub fn render(&self, weight: &LambdaRational) -> String {
        match self {
            LambdaSetting::Symbolic => weight.to_string(),
            LambdaSetting::Bound(_) => weight.coefficient_string(),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unparseable input (exit 1).
    Usage(String),
    /// A completed verification found a violation (exit 2).
    Verification,
    /// A floating-point character sum drifted past its guard (exit 3).
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Verification => write!(f, "verification failed"),
            CliError::Numerical(msg) => write!(f, "numerical guard tripped: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
