use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::element::{format_word, Element};
use crate::matrix::CoxeterMatrix;
use crate::repr::{IntegralSigma, RootVector};
use crate::scalar::RingNumber;
use crate::Gen;

/// A root (half-space of the chamber system), identified by its reflection and
/// by which side it is.
///
/// Internally a root also remembers a witness `chamber * (+-alpha_gen)`, which
/// is what translation and the root vector are computed from. Equality and
/// hashing ignore the witness.
#[derive(Clone)]
pub struct Root {
    reflection: Element,
    positive: bool,
    chamber: Element,
    gen: Gen,
    negate: bool,
    vector: OnceLock<RootVector>,
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        self.positive == other.positive && self.reflection == other.reflection
    }
}
impl Eq for Root {}

impl Hash for Root {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.reflection.hash(state);
        self.positive.hash(state);
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reflection.cmp(&other.reflection).then(other.positive.cmp(&self.positive))
    }
}
impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}root[{}]", if self.positive { "+" } else { "-" }, format_word(self.reflection.word()))
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Root", 2)?;
        st.serialize_field("reflection", self.reflection.word())?;
        st.serialize_field("positive", &self.positive)?;
        st.end()
    }
}

impl Root {
    pub fn reflection(&self) -> &Element {
        &self.reflection
    }

    /// True iff the identity chamber lies in the root.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// A chamber `c` and generator `s` with `{c, cs}` a panel on the wall;
    /// `c` lies in the root.
    pub fn inner_panel(&self, matrix: &CoxeterMatrix) -> (Element, Gen) {
        if self.negate {
            (matrix.mul_gen(&self.chamber, self.gen), self.gen)
        } else {
            (self.chamber.clone(), self.gen)
        }
    }

    /// Root vector `+-sigma(c) e_s`; nonnegative exactly for positive roots.
    pub fn vector(&self, matrix: &CoxeterMatrix) -> &RootVector {
        self.vector.get_or_init(|| {
            let v = matrix.act(self.chamber.word(), &RootVector::basis(matrix.rank(), self.gen));
            if self.negate {
                v.neg()
            } else {
                v
            }
        })
    }

    /// The root vector with `i128` coefficients in `Z[sqrt 2]`; exact, and
    /// much cheaper than [`Root::vector`] for long witnesses.
    pub fn integral_vector(&self, matrix: &CoxeterMatrix) -> Vec<RingNumber> {
        let v = IntegralSigma::of_word(matrix, self.chamber.word()).column(self.gen);
        if self.negate {
            v.iter().map(|x| -x).collect()
        } else {
            v
        }
    }

    pub fn opposite(&self) -> Root {
        Root {
            reflection: self.reflection.clone(),
            positive: !self.positive,
            chamber: self.chamber.clone(),
            gen: self.gen,
            negate: !self.negate,
            vector: match self.vector.get() {
                Some(v) => OnceLock::from(v.neg()),
                None => OnceLock::new(),
            },
        }
    }
}

impl CoxeterMatrix {
    /// The root `chamber * alpha_gen` (negated if `negate`), which contains
    /// `chamber` unless negated.
    pub fn root_from_witness(&self, chamber: Element, gen: Gen, negate: bool) -> Root {
        let reflection = self.conjugate(&chamber, &Element::from_canonical(vec![gen]));
        let base_positive = self.mul_gen(&chamber, gen).len() > chamber.len();
        Root { reflection, positive: base_positive != negate, chamber, gen, negate, vector: OnceLock::new() }
    }

    /// `alpha_s = { w : l(sw) > l(w) }`.
    pub fn simple_root(&self, s: Gen) -> Root {
        self.root_from_witness(Element::identity(), s, false)
    }

    /// The root with the given reflection that contains the identity iff `positive`.
    ///
    /// Panics if `reflection` is not a reflection.
    pub fn root_from_reflection(&self, reflection: &Element, positive: bool) -> Root {
        let mut r = reflection.clone();
        let mut prefix: Vec<Gen> = Vec::new();
        while r.len() > 1 {
            let g = r.word()[0];
            let shorter = self.reduce(&[&[g][..], r.word(), &[g][..]].concat());
            assert!(shorter.len() + 2 == r.len(), "{reflection:?} is not a reflection");
            prefix.push(g);
            r = shorter;
        }
        assert_eq!(r.len(), 1, "{reflection:?} is not a reflection");
        let chamber = self.reduce(&prefix);
        let base = self.root_from_witness(chamber.clone(), r.word()[0], false);
        if base.positive == positive {
            base
        } else {
            base.opposite()
        }
    }

    /// Whether the chamber `x` lies in `alpha`, via `x` on the identity side
    /// of the wall iff `l(r_alpha x) > l(x)`.
    pub fn member(&self, alpha: &Root, x: &Element) -> bool {
        let same_side_as_identity = self.mul(&alpha.reflection, x).len() > x.len();
        same_side_as_identity == alpha.positive
    }

    /// `g alpha`.
    pub fn translate(&self, g: &Element, alpha: &Root) -> Root {
        self.root_from_witness(self.mul(g, &alpha.chamber), alpha.gen, alpha.negate)
    }

    pub fn translate_gen(&self, s: Gen, alpha: &Root) -> Root {
        self.translate(&Element::from_canonical(vec![s]), alpha)
    }

    /// The reflection of `alpha` applied to `beta`.
    pub fn reflect_root(&self, alpha: &Root, beta: &Root) -> Root {
        self.translate(&alpha.reflection, beta)
    }
}
