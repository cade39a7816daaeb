//! Braid-move rewriting on words.
//!
//! Any two reduced words for the same element are connected by braid moves,
//! and a non-reduced word can be brought by braid moves into a form with two
//! equal adjacent letters. [`tits_reduce`] runs that procedure literally and is
//! kept as an independent check on [`CoxeterMatrix::reduce`]; it is
//! exponential and only meant for short words.

use std::collections::{BTreeSet, VecDeque};

use crate::element::{shortlex, Element};
use crate::matrix::CoxeterMatrix;
use crate::Gen;

/// Words obtained from `word` by replacing one alternating block `sts...`
/// of length `m(s,t)` by `tst...`.
pub fn braid_neighbours(matrix: &CoxeterMatrix, word: &[Gen]) -> Vec<Vec<Gen>> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (s, t) = (word[i], word[i + 1]);
        if s == t {
            continue;
        }
        let Some(m) = matrix.m(s, t) else { continue };
        let m = m as usize;
        if i + m > word.len() {
            continue;
        }
        let alternating = (0..m).all(|k| word[i + k] == if k % 2 == 0 { s } else { t });
        if alternating {
            let mut next = word.to_vec();
            for k in 0..m {
                next[i + k] = if k % 2 == 0 { t } else { s };
            }
            out.push(next);
        }
    }
    out
}

/// All words reachable from `word` by braid moves, sorted ShortLex.
pub fn braid_orbit(matrix: &CoxeterMatrix, word: &[Gen]) -> Vec<Vec<Gen>> {
    let mut seen: BTreeSet<Vec<Gen>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        for n in braid_neighbours(matrix, &w) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().collect()
}

/// All reduced words of `x`.
pub fn reduced_words(matrix: &CoxeterMatrix, x: &Element) -> Vec<Vec<Gen>> {
    braid_orbit(matrix, x.word())
}

/// Reduces `word` by alternating braid-orbit closure with deletion of a
/// repeated adjacent letter.
pub fn tits_reduce(matrix: &CoxeterMatrix, word: &[Gen]) -> Element {
    let mut current = word.to_vec();
    'outer: loop {
        let orbit = braid_orbit(matrix, &current);
        for w in &orbit {
            if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                let mut shorter = w.clone();
                shorter.drain(i..i + 2);
                current = shorter;
                continue 'outer;
            }
        }
        let best = orbit
            .into_iter()
            .min_by(|a, b| shortlex(a, b))
            .expect("orbit contains the word itself");
        return Element::from_canonical(best);
    }
}
