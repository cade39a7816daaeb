//! Detection in universal type, where every wall is a single panel and the
//! chamber graph is a tree: the minimal gallery crossing `alpha` first and
//! `beta` last, if it exists, is unique and is read off the two panels.

use coxeter_core::{CoxeterMatrix, Gallery, Gen, Root};
use serde::Serialize;

/// The minimal gallery that starts in `alpha` next to its wall, crosses it,
/// and ends by crossing out of `beta`; `None` when no minimal gallery crosses
/// the two walls in that order.
pub fn geodesic_between(matrix: &CoxeterMatrix, alpha: &Root, beta: &Root) -> Option<Gallery> {
    assert!(matrix.is_universal(), "walls are single panels only in universal type");
    if alpha == beta {
        return None;
    }
    let (a, x) = alpha.inner_panel(matrix);
    let (b, y) = beta.inner_panel(matrix);
    let a_out = matrix.mul_gen(&a, x);
    let b_out = matrix.mul_gen(&b, y);
    let middle = matrix.mul(&matrix.inverse(&a_out), &b);
    let whole = matrix.mul(&matrix.inverse(&a), &b_out);
    if whole.len() != middle.len() + 2 {
        return None;
    }
    let mut type_word = Vec::with_capacity(whole.len());
    type_word.push(x);
    type_word.extend_from_slice(middle.word());
    type_word.push(y);
    let gallery = Gallery::new(matrix, a, type_word).expect("length check makes the gallery minimal");
    debug_assert_eq!(gallery.crossed_roots(matrix).first(), Some(alpha));
    debug_assert_eq!(gallery.crossed_roots(matrix).last(), Some(beta));
    Some(gallery)
}

/// Type of a root: the generator labelling its unique wall panel.
pub fn root_type(matrix: &CoxeterMatrix, alpha: &Root) -> Gen {
    alpha.inner_panel(matrix).1
}

fn alternates(word: &[Gen], first: Gen, second: Gen) -> bool {
    word.iter().enumerate().all(|(i, &g)| g == if i % 2 == 0 { first } else { second })
}

/// A gallery of type `(s, t, ..., t, s)` with `k + 1` letters `s` between the roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingMatch {
    pub k: usize,
    /// The geodesic from `alpha` to `beta`.
    pub gallery: Gallery,
    /// Roots crossed by the geodesic; the first is `alpha`, the last `beta`.
    pub crossed: Vec<Root>,
}

impl AlternatingMatch {
    /// `alpha_{2j}` of the geodesic, for `1 <= j <= k`.
    pub fn even_root(&self, j: usize) -> &Root {
        &self.crossed[2 * j - 1]
    }
}

pub fn detect_alternating(matrix: &CoxeterMatrix, alpha: &Root, beta: &Root, s: Gen, t: Gen) -> Option<AlternatingMatch> {
    let gallery = geodesic_between(matrix, alpha, beta)?;
    let w = gallery.type_word();
    if w.len() % 2 == 0 || !alternates(w, s, t) {
        return None;
    }
    let crossed = gallery.crossed_roots(matrix);
    Some(AlternatingMatch { k: (w.len() - 1) / 2, gallery, crossed })
}

/// One of the four alternating shapes of length 4, 5 or 6 in `{s0, s1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExoticMatch {
    pub k: usize,
    pub first: Gen,
    /// 1-based positions along the geodesic of the designated roots.
    pub positions: [usize; 2],
    pub crossed: Vec<Root>,
}

pub fn detect_exotic(matrix: &CoxeterMatrix, alpha: &Root, beta: &Root, s0: Gen, s1: Gen) -> Option<ExoticMatch> {
    let gallery = geodesic_between(matrix, alpha, beta)?;
    let w = gallery.type_word();
    let first = *w.first()?;
    let second = if first == s0 { s1 } else if first == s1 { s0 } else { return None };
    if !alternates(w, first, second) {
        return None;
    }
    let positions = match (w.len(), first == s0) {
        (4, true) | (5, true) => [2, 3],
        (5, false) | (6, false) => [3, 4],
        _ => return None,
    };
    Some(ExoticMatch { k: w.len(), first, positions, crossed: gallery.crossed_roots(matrix) })
}
