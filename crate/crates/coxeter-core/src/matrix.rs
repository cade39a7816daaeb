use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::scalar::{cosine_entry, doubled_cosine, AlgNumber, QuadBase, QuadSqrt2};
use crate::Gen;

/// Largest supported rank; generators are stored as `u8` and bit sets as `u64`.
pub const MAX_RANK: usize = 16;

/// Symmetric Coxeter matrix with off-diagonal entries in {2, 3, 4, inf}.
///
/// `None` stands for an infinite entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Option<u32>>,
}

impl CoxeterMatrix {
    /// Builds a matrix from its full row-major table. Diagonal entries must be `Some(1)`.
    pub fn new(rank: usize, entries: Vec<Option<u32>>) -> Result<Self, CoreError> {
        if rank == 0 || rank > MAX_RANK {
            return Err(CoreError::BadRank { rank, max: MAX_RANK });
        }
        if entries.len() != rank * rank {
            return Err(CoreError::BadShape { expected: rank * rank, found: entries.len() });
        }
        for s in 0..rank {
            for t in 0..rank {
                let v = entries[s * rank + t];
                if v != entries[t * rank + s] {
                    return Err(CoreError::Asymmetric { s, t });
                }
                match (s == t, v) {
                    (true, Some(1)) => {}
                    (false, None) | (false, Some(2..=4)) => {}
                    (_, Some(value)) => return Err(CoreError::UnsupportedEntry { s, t, value }),
                    (true, None) => return Err(CoreError::UnsupportedEntry { s, t, value: 0 }),
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Builds a matrix from its strictly upper triangle, listed row by row.
    pub fn from_upper(rank: usize, upper: &[Option<u32>]) -> Result<Self, CoreError> {
        let expected = rank * rank.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(CoreError::BadShape { expected, found: upper.len() });
        }
        let mut entries = vec![Some(1); rank * rank];
        let mut it = upper.iter();
        for s in 0..rank {
            for t in s + 1..rank {
                let v = *it.next().expect("length checked");
                entries[s * rank + t] = v;
                entries[t * rank + s] = v;
            }
        }
        Self::new(rank, entries)
    }

    /// All off-diagonal entries infinite.
    pub fn universal(rank: usize) -> Result<Self, CoreError> {
        Self::from_upper(rank, &vec![None; rank * rank.saturating_sub(1) / 2])
    }

    /// Rank 3 with every off-diagonal entry equal to 4.
    pub fn quad444() -> Self {
        Self::from_upper(3, &[Some(4), Some(4), Some(4)]).expect("valid matrix")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.rank as Gen).collect::<Vec<_>>().into_iter()
    }

    /// Order of `st`; `None` means infinite.
    pub fn m(&self, s: Gen, t: Gen) -> Option<u32> {
        self.entries[s as usize * self.rank + t as usize]
    }

    pub fn is_universal(&self) -> bool {
        (0..self.rank).all(|s| (0..self.rank).all(|t| s == t || self.entries[s * self.rank + t].is_none()))
    }

    pub fn is_quad444(&self) -> bool {
        self.rank == 3 && (0..3).all(|s| (0..3).all(|t| s == t || self.entries[s * 3 + t] == Some(4)))
    }

    pub fn check_word(&self, word: &[Gen]) -> Result<(), CoreError> {
        match word.iter().find(|&&g| g as usize >= self.rank) {
            Some(&gen) => Err(CoreError::BadGenerator { gen, rank: self.rank }),
            None => Ok(()),
        }
    }

    /// `2 B(e_s, e_t)` in `Z[sqrt 2]`.
    pub fn doubled_form<T: QuadBase>(&self, s: Gen, t: Gen) -> QuadSqrt2<T> {
        doubled_cosine(self.m(s, t))
    }

    /// `B(e_s, e_t) = -cos(pi / m_st)`.
    pub fn form(&self, s: Gen, t: Gen) -> AlgNumber {
        cosine_entry(self.m(s, t))
    }
}
