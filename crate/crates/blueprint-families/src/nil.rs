//! Column patterns modelled on upper unitriangular matrices.
//!
//! With `k_i = t s t s ...` of length `i` and `r_{a,b} = (r, k_a, r, k_b, r)`,
//! an `(i1, j1, i2, j2)`-pattern is the concatenation of columns
//!
//! * `j1`: `s r_{i1,j1} s r_{i1+1,j1} ... s r_{j1-1,j1}`,
//! * `b` for `j1 < b < j2`: `s r_{1,b} ... s r_{b-1,b}`,
//! * `j2`: `s r_{1,j2} ... s r_{i2-1,j2} s`.
//!
//! The letter `s` in front of `r_{a,b}` crosses the root labelled `(a, b)`;
//! the final `s` crosses `(i2, j2)`.

use coxeter_core::Gen;
use serde::Serialize;

use crate::family::FamilyError;

/// Generators playing the roles `r`, `s`, `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NilLetters {
    pub r: Gen,
    pub s: Gen,
    pub t: Gen,
}

fn k_run(i: usize, l: NilLetters) -> impl Iterator<Item = Gen> {
    (0..i).map(move |p| if p % 2 == 0 { l.t } else { l.s })
}

fn push_block(out: &mut Vec<Gen>, labels: &mut Vec<(usize, usize, usize)>, a: usize, b: usize, l: NilLetters) {
    labels.push((a, b, out.len() + 1));
    out.push(l.s);
    out.push(l.r);
    out.extend(k_run(a, l));
    out.push(l.r);
    out.extend(k_run(b, l));
    out.push(l.r);
}

/// A parsed pattern together with the crossing index (1-based) of each labelled letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilPattern {
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
    pub word: Vec<Gen>,
    /// `(a, b, position)` for every labelled `s`, in order.
    pub labels: Vec<(usize, usize, usize)>,
}

impl NilPattern {
    pub fn position_of(&self, a: usize, b: usize) -> Option<usize> {
        self.labels.iter().find(|&&(x, y, _)| x == a && y == b).map(|&(_, _, p)| p)
    }
}

pub fn nil_pattern(i1: usize, j1: usize, i2: usize, j2: usize, letters: NilLetters) -> Result<NilPattern, FamilyError> {
    if !(1 <= i1 && i1 < j1 && 1 <= i2 && i2 < j2 && j1 < j2) {
        return Err(FamilyError::BadParameters(format!("({i1},{j1},{i2},{j2}) violates 1 <= i1 < j1 < j2, 1 <= i2 < j2")));
    }
    let l = letters;
    if l.r == l.s || l.s == l.t || l.r == l.t {
        return Err(FamilyError::BadParameters("r, s, t must be distinct".into()));
    }
    let mut word = Vec::new();
    let mut labels = Vec::new();
    for a in i1..j1 {
        push_block(&mut word, &mut labels, a, j1, l);
    }
    for b in j1 + 1..j2 {
        for a in 1..b {
            push_block(&mut word, &mut labels, a, b, l);
        }
    }
    for a in 1..i2 {
        push_block(&mut word, &mut labels, a, j2, l);
    }
    labels.push((i2, j2, word.len() + 1));
    word.push(l.s);
    Ok(NilPattern { i1, j1, i2, j2, word, labels })
}

/// Reads `word` as a sequence of `s r_{a,b}` blocks closed by a single `s`,
/// then checks it against the pattern those blocks determine.
pub fn parse_nil(word: &[Gen], l: NilLetters) -> Option<NilPattern> {
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut pos = 0;
    let run = |pos: &mut usize| -> Option<usize> {
        let start = *pos;
        while *pos < word.len() && word[*pos] != l.r {
            let expected = if (*pos - start).is_multiple_of(2) { l.t } else { l.s };
            if word[*pos] != expected {
                return None;
            }
            *pos += 1;
        }
        (*pos > start).then_some(*pos - start)
    };
    loop {
        if word.get(pos) != Some(&l.s) {
            return None;
        }
        pos += 1;
        if pos == word.len() {
            break;
        }
        if word[pos] != l.r {
            return None;
        }
        pos += 1;
        let a = run(&mut pos)?;
        if word.get(pos) != Some(&l.r) {
            return None;
        }
        pos += 1;
        let b = run(&mut pos)?;
        if word.get(pos) != Some(&l.r) {
            return None;
        }
        pos += 1;
        blocks.push((a, b));
    }
    let &(i1, j1) = blocks.first()?;
    let &(a_last, b_last) = blocks.last()?;
    let (i2, j2) = if a_last + 1 == b_last { (1, b_last + 1) } else { (a_last + 1, b_last) };
    let candidate = nil_pattern(i1, j1, i2, j2, l).ok()?;
    (candidate.word == word).then_some(candidate)
}
