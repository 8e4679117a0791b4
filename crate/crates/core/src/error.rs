use thiserror::Error;

/// Errors raised by spec construction, basis lookup and operator assembly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("number of modes must be at least 1")]
    NoModes,
    #[error("occupation cap p must be at least 1")]
    ZeroCap,
    #[error("mode index {index} out of range for {n} modes")]
    ModeOutOfRange { index: usize, n: usize },
    #[error("occupation vector {entries:?} is not admissible: {reason}")]
    Inadmissible { entries: Vec<u32>, reason: String },
    #[error("rank {rank} out of bounds for dimension {dimension}")]
    RankOutOfBounds { rank: usize, dimension: usize },
    #[error("basis tag mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },
    #[error("window cap {window} must be below every p in the list (min {min_p})")]
    WindowTooLarge { window: u32, min_p: u32 },
    #[error("empty p list")]
    EmptyCapList,
    #[error("coefficient table is {rows}x{cols}, expected {n}x{n}")]
    TableShape { rows: usize, cols: usize, n: usize },
    #[error("coefficient table is not symmetric at ({row}, {col})")]
    AsymmetricTable { row: usize, col: usize },
    #[error("assembled Hamiltonian is not symmetric (deviation {deviation:e})")]
    AsymmetricHamiltonian { deviation: f64 },
    #[error("operator is not diagonal: entry at ({row}, {col})")]
    NotDiagonal { row: usize, col: usize },
    #[error("inverse temperature must be positive, got {0}")]
    NonPositiveBeta(f64),
    #[error("expected {expected} energies, got {found}")]
    EnergyCount { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
