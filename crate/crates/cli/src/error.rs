use thiserror::Error;

pub const EXIT_VERIFICATION: u8 = 2;
pub const EXIT_HYPOTHESES: u8 = 3;
pub const EXIT_CONFIG: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Core(#[from] cayspec::Error),

    /// No applicable spectral route; carries the reason.
    #[error("no applicable method: {0}")]
    NoMethod(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use cayspec::Error as E;
        match self {
            CliError::Core(
                E::HypothesesViolated(_)
                | E::NotClassFunction { .. }
                | E::LayerNotInvariant { .. }
                | E::RepresentativeDependence { .. },
            )
            | CliError::NoMethod(_) => EXIT_HYPOTHESES,
            _ => EXIT_CONFIG,
        }
    }
}
