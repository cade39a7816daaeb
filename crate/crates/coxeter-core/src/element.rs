//! Group elements and the word problem.
//!
//! In universal type every square-free word is reduced, so free cancellation of
//! adjacent equal letters suffices. Otherwise the canonical word is read off
//! the reflection representation: `s` is a left descent of `w` exactly when
//! column `s` of `sigma(w^-1)` is a negative root vector, and repeatedly
//! stripping the least left descent yields the ShortLex-least reduced word.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::CoxeterMatrix;
use crate::scalar::RingNumber;
use crate::Gen;

/// A group element, stored as its ShortLex-least reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element {
    word: Vec<Gen>,
}

impl Element {
    pub fn identity() -> Self {
        Element { word: Vec::new() }
    }

    /// Wraps a word that is already canonical. Callers outside this crate
    /// should go through [`CoxeterMatrix::reduce`].
    pub(crate) fn from_canonical(word: Vec<Gen>) -> Self {
        Element { word }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn into_word(self) -> Vec<Gen> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.word, &other.word)
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({})", format_word(&self.word))
    }
}

/// Compares words by length, then lexicographically.
pub fn shortlex(a: &[Gen], b: &[Gen]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Renders a word with letters `r, s, t, ...` for ranks up to 3 and `g0, g1, ...` beyond.
pub fn format_word(word: &[Gen]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    if word.iter().all(|&g| g < 3) {
        word.iter().map(|&g| ['r', 's', 't'][g as usize]).collect()
    } else {
        word.iter().map(|g| format!("g{g}")).collect::<Vec<_>>().join(".")
    }
}

type Mat = Vec<RingNumber>;

fn negative_column(n: &Mat, rank: usize, col: usize) -> bool {
    (0..rank)
        .map(|row| &n[row * rank + col])
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
}

impl CoxeterMatrix {
    /// Canonical (ShortLex-least reduced) form of `word`.
    ///
    /// Panics if a letter is not a generator index.
    pub fn reduce(&self, word: &[Gen]) -> Element {
        self.check_word(word).unwrap_or_else(|e| panic!("{e}"));
        if self.is_universal() {
            let mut out: Vec<Gen> = Vec::with_capacity(word.len());
            for &g in word {
                if out.last() == Some(&g) {
                    out.pop();
                } else {
                    out.push(g);
                }
            }
            return Element::from_canonical(out);
        }
        self.reduce_by_descent(word)
    }

    fn reduce_by_descent(&self, word: &[Gen]) -> Element {
        let rank = self.rank();
        let two_b: Vec<RingNumber> = (0..rank)
            .flat_map(|s| (0..rank).map(move |t| (s, t)))
            .map(|(s, t)| self.doubled_form(s as Gen, t as Gen))
            .collect();
        // n = sigma(w^-1) = sigma(s_k) ... sigma(s_1): left-multiply by each letter.
        let mut n: Mat = vec![RingNumber::zero(); rank * rank];
        for i in 0..rank {
            n[i * rank + i] = RingNumber::one();
        }
        for &g in word {
            let s = g as usize;
            let mut row = vec![RingNumber::zero(); rank];
            for t in 0..rank {
                let coeff = &two_b[s * rank + t];
                if coeff.is_zero() {
                    continue;
                }
                for (c, r) in row.iter_mut().enumerate() {
                    *r = &*r + &(coeff * &n[t * rank + c]);
                }
            }
            for (c, r) in row.into_iter().enumerate() {
                n[s * rank + c] = &n[s * rank + c] - &r;
            }
        }
        let mut out = Vec::with_capacity(word.len());
        while let Some(s) = (0..rank).find(|&s| negative_column(&n, rank, s)) {
            out.push(s as Gen);
            // n <- n * sigma(s): column t loses 2B(s,t) times column s.
            let col_s: Vec<RingNumber> = (0..rank).map(|row| n[row * rank + s].clone()).collect();
            for t in 0..rank {
                let coeff = &two_b[s * rank + t];
                if coeff.is_zero() {
                    continue;
                }
                for (row, cs) in col_s.iter().enumerate() {
                    n[row * rank + t] = &n[row * rank + t] - &(coeff * cs);
                }
            }
            assert!(out.len() <= word.len(), "descent loop exceeded the input length");
        }
        Element::from_canonical(out)
    }

    pub fn length(&self, x: &Element) -> usize {
        x.len()
    }

    pub fn element(&self, word: &[Gen]) -> Element {
        self.reduce(word)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut w = x.word.clone();
        w.extend_from_slice(&y.word);
        self.reduce(&w)
    }

    pub fn mul_gen(&self, x: &Element, s: Gen) -> Element {
        let mut w = x.word.clone();
        w.push(s);
        self.reduce(&w)
    }

    pub fn gen_mul(&self, s: Gen, x: &Element) -> Element {
        let mut w = Vec::with_capacity(x.len() + 1);
        w.push(s);
        w.extend_from_slice(&x.word);
        self.reduce(&w)
    }

    pub fn inverse(&self, x: &Element) -> Element {
        let w: Vec<Gen> = x.word.iter().rev().copied().collect();
        self.reduce(&w)
    }

    /// `x y x^-1`.
    pub fn conjugate(&self, x: &Element, y: &Element) -> Element {
        let mut w = x.word.clone();
        w.extend_from_slice(&y.word);
        w.extend(x.word.iter().rev());
        self.reduce(&w)
    }

    pub fn is_reduced(&self, word: &[Gen]) -> bool {
        self.reduce(word).len() == word.len()
    }

    /// `l(xs) < l(x)`.
    pub fn is_right_descent(&self, x: &Element, s: Gen) -> bool {
        self.mul_gen(x, s).len() < x.len()
    }

    /// `l(sx) < l(x)`.
    pub fn is_left_descent(&self, s: Gen, x: &Element) -> bool {
        self.gen_mul(s, x).len() < x.len()
    }
}
