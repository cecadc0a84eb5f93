use thiserror::Error;

use crate::catalog::GroupId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeds the configured order cap of {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("generators act on different degrees ({expected} and {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image list is not a bijection")]
    NotABijection,
    #[error("malformed cycle notation: {0:?}")]
    BadCycleSyntax(String),
    #[error("subgroup is not abelian")]
    NotAbelian,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{id}: generators close to a group of order {found}")]
    OrderMismatch { id: GroupId, found: usize },
    #[error("{id}: {source}")]
    Group { id: GroupId, source: GroupError },
    #[error("group is not in the catalog")]
    NotInCatalog,
    #[error("group matches several catalog entries: {0:?}")]
    Ambiguous(Vec<GroupId>),
    #[error("catalog is missing {} Table-1 entries", .0.len())]
    MissingEntries(Vec<GroupId>),
    #[error("golden file {path}: {message}")]
    Golden { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("group algebra is not Lie nilpotent in characteristic {p} (G not nilpotent or |G'| not a power of {p})")]
    NotLieNilpotent { p: u64 },
    #[error("index |D({m}) : D({next})| = {index} is not a power of {p}", next = .m + 1)]
    NonPPowerIndex { p: u64, m: usize, index: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DseqError {
    #[error("target - 2 = {numerator} is not divisible by p - 1 = {p_minus_1}")]
    TargetNotRepresentable { numerator: i128, p_minus_1: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{p}^{n} does not fit in 128 bits")]
    Overflow { p: u64, n: u32 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("group order {order} exceeds the algebra cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("power series did not settle within {0} levels")]
    NoConvergence(usize),
    #[error("algebra coefficients must lie in F_p for a prime p < 256, got p = {0}")]
    UnsupportedPrime(u64),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("derived subgroup is nonabelian of order {order} and could not be identified: {source}")]
    Unidentified { order: usize, source: CatalogError },
    #[error("no case table for k = {0}; expected 14 or 15")]
    UnsupportedK(i64),
}
