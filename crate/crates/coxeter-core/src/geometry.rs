use std::collections::HashSet;

use serde::Serialize;

use crate::element::Element;
use crate::error::CoreError;
use crate::matrix::CoxeterMatrix;
use crate::root::Root;
use crate::scalar::AlgNumber;
use crate::Gen;

/// Relative position of two roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairClass {
    Equal,
    Opposite,
    /// The walls cross; `r_alpha r_beta` has order `m`.
    Finite(u32),
    /// Disjoint walls and one root inside the other: `alpha ⊊ beta` when
    /// `first_inside`, `beta ⊊ alpha` otherwise.
    Nested { first_inside: bool },
    /// Disjoint walls and `-alpha` nested with `beta`: `-alpha ⊊ beta` (so the
    /// two roots cover everything) when `covers`, `beta ⊊ -alpha` otherwise.
    CoNested { covers: bool },
}

impl PairClass {
    pub fn is_finite(&self) -> bool {
        matches!(self, PairClass::Finite(_))
    }
}

const ORDER_PROBE: u32 = 8;

impl CoxeterMatrix {
    pub fn pair_class(&self, alpha: &Root, beta: &Root) -> PairClass {
        if alpha == beta {
            return PairClass::Equal;
        }
        if alpha.reflection() == beta.reflection() {
            return PairClass::Opposite;
        }
        let b = self.bilinear(alpha.vector(self), beta.vector(self));
        let one = AlgNumber::one();
        if b.abs() < one {
            let step = self.mul(alpha.reflection(), beta.reflection());
            let mut power = step.clone();
            for m in 1..=ORDER_PROBE {
                if power.is_identity() {
                    return PairClass::Finite(m);
                }
                power = self.mul(&power, &step);
            }
            panic!("|B| < 1 but r_alpha r_beta has no order up to {ORDER_PROBE}: {alpha:?}, {beta:?}");
        }
        let (inside, gen) = alpha.inner_panel(self);
        if b.is_positive() {
            PairClass::Nested { first_inside: self.member(beta, &inside) }
        } else {
            let outside = self.mul_gen(&inside, gen);
            PairClass::CoNested { covers: self.member(beta, &outside) }
        }
    }

    /// `alpha ⊆ gamma`.
    pub fn subset(&self, alpha: &Root, gamma: &Root) -> bool {
        matches!(self.pair_class(alpha, gamma), PairClass::Equal | PairClass::Nested { first_inside: true })
    }

    /// `alpha ⊊ gamma`.
    pub fn proper_subset(&self, alpha: &Root, gamma: &Root) -> bool {
        matches!(self.pair_class(alpha, gamma), PairClass::Nested { first_inside: true })
    }

    /// A rank-2 residue `c W_{x,y}` met by both walls of a crossing pair,
    /// found by walking along the wall of `alpha` panel by panel.
    pub fn common_residue(&self, alpha: &Root, beta: &Root) -> Result<(Element, [Gen; 2]), CoreError> {
        if !self.pair_class(alpha, beta).is_finite() {
            return Err(CoreError::InfiniteOrderPair);
        }
        let normal = |c: Element, x: Gen| {
            let cx = self.mul_gen(&c, x);
            (if cx < c { cx } else { c }, x)
        };
        let (c0, x0) = alpha.inner_panel(self);
        let first = normal(c0, x0);
        let mut seen: HashSet<(Element, Gen)> = HashSet::from([first.clone()]);
        let mut queue = std::collections::VecDeque::from([first]);
        while let Some((c, x)) = queue.pop_front() {
            for y in self.generators().filter(|&y| y != x && self.m(x, y).is_some()) {
                let inner = self.conjugate(&self.inverse(&c), beta.reflection());
                if inner.word().iter().all(|&g| g == x || g == y) {
                    return Ok((c, [x.min(y), x.max(y)]));
                }
                for v in self.parabolic_elements(x, y) {
                    let cv = self.mul(&c, &v);
                    for z in [x, y] {
                        let refl = self.conjugate(&cv, &self.reduce(&[z]));
                        if &refl == alpha.reflection() {
                            let panel = normal(cv.clone(), z);
                            if seen.insert(panel.clone()) {
                                queue.push_back(panel);
                            }
                        }
                    }
                }
            }
            assert!(seen.len() < 100_000, "wall walk for {alpha:?}, {beta:?} did not meet the second wall");
        }
        unreachable!("crossing walls always share a rank-2 residue")
    }

    /// Elements of the finite dihedral group `W_{x,y}`.
    pub fn parabolic_elements(&self, x: Gen, y: Gen) -> Vec<Element> {
        let m = self.m(x, y).expect("finite dihedral subgroup") as usize;
        let mut out = vec![Element::identity()];
        for len in 1..=m {
            for first in [x, y] {
                let word: Vec<Gen> = (0..len).map(|k| if k % 2 == 0 { first } else { x ^ y ^ first }).collect();
                let e = self.reduce(&word);
                if e.len() == len && !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }

    /// Closed interval `[alpha, beta]` of a pair with crossing walls: the roots
    /// of their common rank-2 residue whose vectors are nonnegative combinations
    /// of the two root vectors. Sorted by [`Root`]'s order.
    pub fn interval(&self, alpha: &Root, beta: &Root) -> Result<Vec<Root>, CoreError> {
        if alpha == beta {
            return Ok(vec![alpha.clone()]);
        }
        let (c, [x, y]) = self.common_residue(alpha, beta)?;
        let mut residue_roots: Vec<Root> = Vec::new();
        for v in self.parabolic_elements(x, y) {
            let cv = self.mul(&c, &v);
            for z in [x, y] {
                let r = self.root_from_witness(cv.clone(), z, false);
                if !residue_roots.contains(&r) {
                    residue_roots.push(r);
                }
            }
        }
        let m = self.m(x, y).expect("finite residue");
        assert_eq!(residue_roots.len() as u32, 2 * m, "residue root system has the wrong size");
        let (va, vb) = (alpha.vector(self), beta.vector(self));
        let c = self.bilinear(va, vb);
        let mut out: Vec<Root> = residue_roots
            .into_iter()
            .filter(|g| {
                let v = g.vector(self);
                let g1 = self.bilinear(v, va);
                let g2 = self.bilinear(v, vb);
                !(&g1 - &(&c * &g2)).is_negative() && !(&g2 - &(&c * &g1)).is_negative()
            })
            .collect();
        assert!(out.contains(alpha) && out.contains(beta), "interval misses an endpoint");
        out.sort();
        Ok(out)
    }

    /// `(alpha, beta) = [alpha, beta] \ {alpha, beta}`.
    pub fn open_interval(&self, alpha: &Root, beta: &Root) -> Result<Vec<Root>, CoreError> {
        Ok(self.interval(alpha, beta)?.into_iter().filter(|g| g != alpha && g != beta).collect())
    }

    /// Longest element of the subgroup generated by `j`.
    pub fn longest_element(&self, j: &[Gen]) -> Result<Element, CoreError> {
        self.check_word(j)?;
        let infinite_pair = j.iter().any(|&s| j.iter().any(|&t| s != t && self.m(s, t).is_none()));
        if infinite_pair {
            return Err(CoreError::NonSpherical(j.to_vec()));
        }
        if !self.is_positive_definite(j) {
            return Err(CoreError::NonSpherical(j.to_vec()));
        }
        let mut w = Element::identity();
        while let Some(longer) = j.iter().map(|&s| self.mul_gen(&w, s)).find(|x| x.len() > w.len()) {
            w = longer;
        }
        Ok(w)
    }

    /// Whether the form restricted to `span{e_s : s in j}` is positive definite,
    /// which is the case exactly when `j` generates a finite subgroup.
    pub fn is_positive_definite(&self, j: &[Gen]) -> bool {
        let n = j.len();
        let mut a: Vec<Vec<AlgNumber>> =
            j.iter().map(|&s| j.iter().map(|&t| self.form(s, t)).collect()).collect();
        // Gaussian elimination without pivoting: every pivot is a ratio of
        // consecutive leading minors, so all must be positive.
        for k in 0..n {
            if !a[k][k].is_positive() {
                return false;
            }
            let inv = a[k][k].inverse().expect("positive pivot");
            for i in k + 1..n {
                let f = &a[i][k] * &inv;
                let (upper, lower) = a.split_at_mut(i);
                for (x, y) in lower[0][k..n].iter_mut().zip(&upper[k][k..n]) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        true
    }

    /// All elements of length at most `radius`, sorted ShortLex.
    pub fn ball(&self, radius: usize) -> Vec<Element> {
        self.spheres(radius).into_iter().flatten().collect()
    }

    /// Elements grouped by length `0..=radius`, each group sorted ShortLex.
    pub fn spheres(&self, radius: usize) -> Vec<Vec<Element>> {
        let mut layers = vec![vec![Element::identity()]];
        for _ in 0..radius {
            let mut next: HashSet<Element> = HashSet::new();
            let last = layers.last().expect("nonempty");
            for w in last {
                for s in self.generators() {
                    let x = self.mul_gen(w, s);
                    if x.len() > w.len() {
                        next.insert(x);
                    }
                }
            }
            let mut next: Vec<Element> = next.into_iter().collect();
            next.sort();
            layers.push(next);
        }
        layers
    }
}
