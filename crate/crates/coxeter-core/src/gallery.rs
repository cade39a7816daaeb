use serde::Serialize;

use crate::element::{format_word, Element};
use crate::error::CoreError;
use crate::matrix::CoxeterMatrix;
use crate::rewrite::reduced_words;
use crate::root::Root;
use crate::Gen;

/// A minimal gallery `(c_0, ..., c_k)` with `c_i = c_0 s_1 ... s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Gallery {
    start: Element,
    type_word: Vec<Gen>,
}

impl Gallery {
    pub fn new(matrix: &CoxeterMatrix, start: Element, type_word: Vec<Gen>) -> Result<Self, CoreError> {
        matrix.check_word(&type_word)?;
        let actual = matrix.reduce(&type_word).len();
        if actual != type_word.len() {
            return Err(CoreError::NonMinimalGallery { claimed: type_word.len(), actual });
        }
        Ok(Gallery { start, type_word })
    }

    pub fn from_identity(matrix: &CoxeterMatrix, type_word: Vec<Gen>) -> Result<Self, CoreError> {
        Self::new(matrix, Element::identity(), type_word)
    }

    pub fn start(&self) -> &Element {
        &self.start
    }

    pub fn type_word(&self) -> &[Gen] {
        &self.type_word
    }

    pub fn len(&self) -> usize {
        self.type_word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.type_word.is_empty()
    }

    pub fn starts_at_identity(&self) -> bool {
        self.start.is_identity()
    }

    /// The gallery `(c_0, ..., c_k)` truncated to its first `k` steps.
    pub fn prefix(&self, k: usize) -> Gallery {
        Gallery { start: self.start.clone(), type_word: self.type_word[..k].to_vec() }
    }

    pub fn chamber(&self, matrix: &CoxeterMatrix, i: usize) -> Element {
        matrix.reduce(&[self.start.word(), &self.type_word[..i]].concat())
    }

    pub fn end(&self, matrix: &CoxeterMatrix) -> Element {
        self.chamber(matrix, self.len())
    }

    pub fn chambers(&self, matrix: &CoxeterMatrix) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut current = self.start.clone();
        out.push(current.clone());
        for &s in &self.type_word {
            current = matrix.mul_gen(&current, s);
            out.push(current.clone());
        }
        out
    }

    /// Roots crossed in order: the `i`-th contains `c_{i-1}` and not `c_i`.
    pub fn crossed_roots(&self, matrix: &CoxeterMatrix) -> Vec<Root> {
        let chambers = self.chambers(matrix);
        self.type_word
            .iter()
            .zip(chambers)
            .map(|(&s, c)| matrix.root_from_witness(c, s, false))
            .collect()
    }

    /// `sG`: strips a leading `s` from a gallery at the identity whose type starts
    /// with `s`, and otherwise prepends the step `1 -> s`.
    pub fn left_translate(&self, s: Gen) -> Gallery {
        assert!(self.starts_at_identity(), "sG is defined for galleries starting at 1");
        let type_word = if self.type_word.first() == Some(&s) {
            self.type_word[1..].to_vec()
        } else {
            [&[s][..], &self.type_word].concat()
        };
        Gallery { start: Element::identity(), type_word }
    }

    pub fn describe(&self) -> String {
        if self.starts_at_identity() {
            format_word(&self.type_word)
        } else {
            format!("{}:{}", format_word(self.start.word()), format_word(&self.type_word))
        }
    }
}

impl CoxeterMatrix {
    /// Every minimal gallery from the identity whose type is a reduced word for `w`,
    /// sorted by type.
    pub fn min_galleries(&self, w: &Element) -> Vec<Gallery> {
        reduced_words(self, w)
            .into_iter()
            .map(|type_word| Gallery { start: Element::identity(), type_word })
            .collect()
    }

    /// Galleries in `Min(w)` whose type starts with `s` when `s` is a left
    /// descent of `w`; all of `Min(w)` otherwise.
    pub fn min_s(&self, w: &Element, s: Gen) -> Vec<Gallery> {
        let all = self.min_galleries(w);
        if self.is_left_descent(s, w) {
            all.into_iter().filter(|g| g.type_word.first() == Some(&s)).collect()
        } else {
            all
        }
    }

    pub fn crossed_roots(&self, gallery: &Gallery) -> Vec<Root> {
        gallery.crossed_roots(self)
    }
}
