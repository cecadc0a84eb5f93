use lieindex::{AlgebraError, CatalogError, ClassifyError, DseqError, GroupError, LieError};
use thiserror::Error;

/// Process exit codes.
pub mod code {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const NOT_LIE_NILPOTENT: u8 = 3;
    pub const MISMATCH: u8 = 4;
    pub const CAP_EXCEEDED: u8 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Dseq(#[from] DseqError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("could not start worker threads: {0}")]
    Threads(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Dseq(_) | CliError::Threads(_) => code::USAGE,
            CliError::Catalog(e) => catalog_code(e),
            CliError::Lie(_) => code::NOT_LIE_NILPOTENT,
            CliError::Algebra(AlgebraError::CapExceeded { .. }) => code::CAP_EXCEEDED,
            CliError::Algebra(AlgebraError::Lie(_)) => code::NOT_LIE_NILPOTENT,
            CliError::Algebra(_) => code::USAGE,
            CliError::Classify(ClassifyError::Lie(_)) => code::NOT_LIE_NILPOTENT,
            CliError::Classify(ClassifyError::Unidentified { .. }) => code::MISMATCH,
            CliError::Classify(_) => code::USAGE,
        }
    }
}

fn catalog_code(e: &CatalogError) -> u8 {
    match e {
        CatalogError::Group { source: GroupError::ClosureExceedsCap { .. }, .. } => code::CAP_EXCEEDED,
        CatalogError::MissingEntries(_) | CatalogError::NotInCatalog | CatalogError::Ambiguous(_) => code::MISMATCH,
        _ => code::USAGE,
    }
}
