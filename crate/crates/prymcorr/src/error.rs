use std::path::PathBuf;

use prymcorr_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl RunError {
    /// 0 pass, 1 verification failure, 2 invalid input or unwritable path,
    /// 3 resource limit.
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Verification(_) => 1,
            RunError::Invalid(_) | RunError::Write { .. } => 2,
            RunError::Core(e) => match e {
                CoreError::ResourceLimit { .. } | CoreError::Overflow => 3,
                CoreError::IdentityFailed(_) | CoreError::NonIntegralExponent(_) | CoreError::NonIntegralShift => 1,
                _ => 2,
            },
        }
    }
}

pub type RunResult<T> = Result<T, RunError>;
