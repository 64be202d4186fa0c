use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("universe size {n} exceeds the enumeration cap {max}")]
    SizeCap { n: usize, max: usize },
    #[error("unknown sweep id `{0}`")]
    UnknownSweep(String),
    #[error(transparent)]
    Core(#[from] setfam::Error),
}
