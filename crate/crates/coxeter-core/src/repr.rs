//! The canonical linear representation `sigma` on `V = span{e_s}` and its
//! invariant bilinear form `B(e_s, e_t) = -cos(pi / m_st)`.

use serde::Serialize;

use crate::matrix::CoxeterMatrix;
use crate::scalar::{AlgNumber, RingNumber};
use crate::Gen;

/// Coordinates in the basis `(e_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootVector {
    pub coords: Vec<AlgNumber>,
}

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector { coords: vec![AlgNumber::zero(); rank] }
    }

    pub fn basis(rank: usize, s: Gen) -> Self {
        let mut v = Self::zero(rank);
        v.coords[s as usize] = AlgNumber::one();
        v
    }

    pub fn neg(&self) -> Self {
        RootVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        RootVector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: &AlgNumber) -> Self {
        RootVector { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.coords.iter().all(|c| !c.is_positive())
    }
}

impl CoxeterMatrix {
    /// `B(u, v)`.
    pub fn bilinear(&self, u: &RootVector, v: &RootVector) -> AlgNumber {
        let rank = self.rank();
        let mut acc = AlgNumber::zero();
        for s in 0..rank {
            if u.coords[s].is_zero() {
                continue;
            }
            for t in 0..rank {
                if v.coords[t].is_zero() {
                    continue;
                }
                let b = self.form(s as Gen, t as Gen);
                acc = &acc + &(&(&u.coords[s] * &v.coords[t]) * &b);
            }
        }
        acc
    }

    /// `sigma(s) v = v - 2 B(e_s, v) e_s`.
    pub fn reflect(&self, s: Gen, v: &RootVector) -> RootVector {
        let es = RootVector::basis(self.rank(), s);
        let b = self.bilinear(&es, v);
        let mut out = v.clone();
        out.coords[s as usize] = &out.coords[s as usize] - &(&b + &b);
        out
    }

    /// `sigma(s_1 ... s_k) v`, applying the rightmost letter first.
    pub fn act(&self, word: &[Gen], v: &RootVector) -> RootVector {
        word.iter().rev().fold(v.clone(), |acc, &s| self.reflect(s, &acc))
    }

    /// Row-major matrix of `sigma(word)`.
    pub fn sigma_matrix(&self, word: &[Gen]) -> Vec<AlgNumber> {
        let rank = self.rank();
        let cols: Vec<RootVector> =
            (0..rank).map(|t| self.act(word, &RootVector::basis(rank, t as Gen))).collect();
        (0..rank)
            .flat_map(|row| cols.iter().map(move |c| c.coords[row].clone()))
            .collect()
    }
}

/// `sigma(w)` over `Z[sqrt 2]` with `i128` coefficients, updated one letter at
/// a time. The doubled form `2B` is integral, so every `sigma(w)` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSigma {
    rank: usize,
    entries: Vec<RingNumber>,
}

/// Sign of a root vector: `Some(true)` if nonnegative, `Some(false)` if
/// nonpositive, `None` for mixed signs or zero.
pub fn vector_sign(v: &[RingNumber]) -> Option<bool> {
    if v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| !x.is_zero()) {
        Some(true)
    } else if v.iter().all(|x| !x.is_positive()) && v.iter().any(|x| !x.is_zero()) {
        Some(false)
    } else {
        None
    }
}

impl IntegralSigma {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![RingNumber::zero(); rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = RingNumber::one();
        }
        IntegralSigma { rank, entries }
    }

    pub fn of_word(matrix: &CoxeterMatrix, word: &[Gen]) -> Self {
        let mut out = Self::identity(matrix.rank());
        for &g in word {
            out.push_right(matrix, g);
        }
        out
    }

    /// `sigma(w) -> sigma(w s)`: column `t` loses `2B(s, t)` times column `s`.
    pub fn push_right(&mut self, matrix: &CoxeterMatrix, s: Gen) {
        let (rank, s) = (self.rank, s as usize);
        let col_s: Vec<RingNumber> = (0..rank).map(|row| self.entries[row * rank + s].clone()).collect();
        for t in 0..rank {
            let coeff: RingNumber = matrix.doubled_form(s as Gen, t as Gen);
            if coeff.is_zero() {
                continue;
            }
            for (row, cs) in col_s.iter().enumerate() {
                self.entries[row * rank + t] = &self.entries[row * rank + t] - &(&coeff * cs);
            }
        }
    }

    /// `sigma(w) -> sigma(s w)`: row `s` loses `sum_t 2B(s, t) row_t`.
    pub fn push_left(&mut self, matrix: &CoxeterMatrix, s: Gen) {
        let (rank, s) = (self.rank, s as usize);
        let mut delta = vec![RingNumber::zero(); rank];
        for t in 0..rank {
            let coeff: RingNumber = matrix.doubled_form(s as Gen, t as Gen);
            if coeff.is_zero() {
                continue;
            }
            for (c, d) in delta.iter_mut().enumerate() {
                *d = &*d + &(&coeff * &self.entries[t * rank + c]);
            }
        }
        for (c, d) in delta.into_iter().enumerate() {
            self.entries[s * rank + c] = &self.entries[s * rank + c] - &d;
        }
    }

    pub fn column(&self, t: Gen) -> Vec<RingNumber> {
        (0..self.rank).map(|row| self.entries[row * self.rank + t as usize].clone()).collect()
    }

    pub fn apply(&self, v: &[RingNumber]) -> Vec<RingNumber> {
        (0..self.rank)
            .map(|row| (0..self.rank).fold(RingNumber::zero(), |acc, c| &acc + &(&self.entries[row * self.rank + c] * &v[c])))
            .collect()
    }
}
