use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generators have incompatible degree or dimension")]
    MixedDegree,
    #[error("generator is not a valid element: {0}")]
    InvalidGenerator(String),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("central elements have different orders or are not central")]
    CentralElementMismatch,
    #[error("unsupported field GF({p}^{f})")]
    UnsupportedField { p: u32, f: u32 },
    #[error("unknown group: {0}")]
    UnknownSpec(String),
    #[error("{name}: constructed order {got} differs from expected {expected}")]
    OrderMismatch { name: String, expected: usize, got: usize },
    #[error("unsupported q = {0}")]
    UnsupportedQ(u32),
    #[error("data file {0}: {1}")]
    DataFile(String, String),
    #[error("graph on {vertices} vertices exceeds the dense cap of {cap}")]
    GraphTooLarge { vertices: usize, cap: usize },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
