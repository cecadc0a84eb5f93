//! Lie dimension subgroups and Lie nilpotency indices of modular group algebras.

pub mod algebra;
pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod dseq;
pub mod error;
pub mod group;
pub mod iso;
pub mod lie;
pub mod linalg;
pub mod perm;

pub use error::{AlgebraError, CatalogError, ClassifyError, DseqError, GroupError, LieError};
pub use group::{AbelianType, Group, LowerCentralSeries, Subgroup};
pub use perm::Permutation;
pub use lie::{jennings_data, lie_dimension_subgroup, JenningsData};
pub use dseq::{feasible_set, prune, DSeq, DSeqProblem, Verdict};
pub use algebra::{AlgebraElement, AlgebraSubspace, GroupAlgebra};
pub use classify::{verify_biconditional, CaseMatch, StructuralProfile};
