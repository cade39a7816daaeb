use thiserror::Error;

use crate::Gen;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("Coxeter matrix entry m({s},{t}) = {value} is not in {{2, 3, 4, inf}}")]
    UnsupportedEntry { s: usize, t: usize, value: u32 },
    #[error("Coxeter matrix is not symmetric at ({s},{t})")]
    Asymmetric { s: usize, t: usize },
    #[error("Coxeter matrix must have rank at least 1 and at most {max}, got {rank}")]
    BadRank { rank: usize, max: usize },
    #[error("matrix has {found} entries, expected {expected}")]
    BadShape { expected: usize, found: usize },
    #[error("generator {gen} out of range for rank {rank}")]
    BadGenerator { gen: Gen, rank: usize },
    #[error("gallery of length {claimed} is not minimal: its endpoints are at distance {actual}")]
    NonMinimalGallery { claimed: usize, actual: usize },
    #[error("reflections of the two roots generate an infinite dihedral group")]
    InfiniteOrderPair,
    #[error("generator subset {0:?} does not generate a finite subgroup")]
    NonSpherical(Vec<Gen>),
}
