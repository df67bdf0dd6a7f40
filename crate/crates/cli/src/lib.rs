//! Command-line surface for the `parkres-core` library: file ingestion,
//! JSON and pretty emission, and reproducibility plumbing.
//!
//! Exit-code contract: `0` all checks pass, `1` input error, `2`
//! verification failure — so the binary can serve as a CI conjecture
//! checker.

pub mod commands;
pub mod input;
pub mod manifest;
pub mod output;

/// Outcome of a command run: rendered output plus the process exit code.
pub struct RunOutcome {
    pub rendered: String,
    pub exit_code: u8,
}

/// An input-side failure (parse error, invalid graph, size bound).
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}
