use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph is not cubic: {0}")]
    NotCubic(String),
    #[error("graph is not {need}-edge-connected: {detail}")]
    NotEdgeConnected { need: u32, detail: String },
    #[error("point violates LP constraint: {0}")]
    NotInLp(String),
    #[error("not a valid point of the required shape: {0}")]
    BadPoint(String),
    #[error("half-edge pairing infeasible: {0}")]
    PairingInfeasible(String),
    #[error("coloring infeasible: {0}")]
    ColoringInfeasible(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("gluing failed: {0}")]
    GluingFailed(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
