use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("computation error: {0}")]
    Computation(#[from] lfactor_core::Error),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl LabError {
    /// Process exit code: 1 for configuration, 2 for computation and output failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            LabError::Config(_) => 1,
            LabError::Computation(_) | LabError::Io(_) => 2,
        }
    }
}
