use thiserror::Error;

use crate::context::Condition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element has {found} generators but the context has {expected}")]
    ContextMismatch { expected: usize, found: usize },
    #[error("at most {max} generators are supported")]
    TooManyGenerators { max: usize },
    #[error("table entry for ({i}, {j}) must be strictly increasing inside the open range: {entry:?}")]
    BadEntry { i: usize, j: usize, entry: Vec<usize> },
    #[error("extension fails {condition:?} at (i, j) = ({i}, {j}): {lhs} != {rhs}")]
    ExtensionInconsistent { condition: Condition, i: usize, j: usize, lhs: String, rhs: String },
    #[error("subgroup exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
}
