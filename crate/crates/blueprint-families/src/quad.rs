//! Galleries of type `(n, r)` in the (4, 4, 4) system:
//! `(u, r, B_1, r, B_2, ..., r, B_n, r, v)` where `{s, t} = S \ {r}`, each
//! `B_i` is one of the two reduced words `stst`, `tsts` of the longest element
//! of `<s, t>`, and `u`, `v` are empty or a single letter from `{s, t}`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use coxeter_core::{vector_sign, CoxeterMatrix, Element, Gallery, Gen, IntegralSigma, PairClass, RingNumber, Root};
use serde::Serialize;

use crate::family::FamilyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeNrMatch {
    pub n: usize,
    pub r: Gen,
    pub u: Option<Gen>,
    pub v: Option<Gen>,
    pub gallery: Gallery,
    pub crossed: Vec<Root>,
}

impl TypeNrMatch {
    /// 1-based crossing indices of `omega_i` and `omega_i'` along the match,
    /// `k_i + 2` and `k_i + 3` with `k_i = l(u r (B r)^(i-1))`.
    pub fn omega_positions(&self, i: usize) -> (usize, usize) {
        assert!((1..=self.n).contains(&i), "block index {i} outside 1..={}", self.n);
        let k = usize::from(self.u.is_some()) + 1 + 5 * (i - 1);
        (k + 2, k + 3)
    }

    pub fn omegas(&self, i: usize) -> (&Root, &Root) {
        let (a, b) = self.omega_positions(i);
        (&self.crossed[a - 1], &self.crossed[b - 1])
    }

    /// The unordered pairs `{omega_i, omega_i'}` for `i = 1..=n`.
    pub fn omega_sets(&self) -> Vec<BTreeSet<Root>> {
        (1..=self.n)
            .map(|i| {
                let (a, b) = self.omegas(i);
                BTreeSet::from([a.clone(), b.clone()])
            })
            .collect()
    }

    /// What every witness between the same two roots shares: `(n, r)` and
    /// the omega roots of the middle blocks.
    fn key(&self) -> (usize, Gen, Vec<BTreeSet<Root>>) {
        let mut middle = self.omega_sets();
        middle.truncate(self.n.saturating_sub(1));
        if !middle.is_empty() {
            middle.remove(0);
        }
        (self.n, self.r, middle)
    }
}

type Vector = Vec<RingNumber>;

struct Search<'a> {
    matrix: &'a CoxeterMatrix,
    alpha: &'a Root,
    beta: &'a Root,
    alpha_vec: Vector,
    beta_vec: Vector,
    /// Vectors of the roots that blocks other than the first and last must cross.
    pool: Option<HashSet<Vector>>,
    min_n: usize,
    max_n: usize,
    found: Vec<TypeNrMatch>,
}

/// A partial gallery tracked through the linear representation: crossed
/// roots, sides and minimality are all read off integral matrices, so a step
/// costs the same however long the walk gets.
#[derive(Clone)]
struct Walk {
    start: Element,
    word: Vec<Gen>,
    /// `sigma(chamber)`, whose column `g` is the root crossed by the next step `g`.
    sigma: IntegralSigma,
    /// `sigma(chamber^-1)`, which decides the side of a root the chamber is on.
    sigma_inv: IntegralSigma,
    /// `sigma(start^-1 chamber)`; a step `g` is length-increasing iff its column `g` is positive.
    sigma_offset: IntegralSigma,
    last: Vector,
}

impl Walk {
    fn new(m: &CoxeterMatrix, start: Element) -> Self {
        let sigma = IntegralSigma::of_word(m, start.word());
        let mut sigma_inv = IntegralSigma::identity(m.rank());
        for &g in start.word() {
            sigma_inv.push_left(m, g);
        }
        Walk { start, word: Vec::new(), sigma, sigma_inv, sigma_offset: IntegralSigma::identity(m.rank()), last: Vec::new() }
    }

    fn step(&self, m: &CoxeterMatrix, g: Gen) -> Option<Walk> {
        if vector_sign(&self.sigma_offset.column(g)) != Some(true) {
            return None;
        }
        let mut next = self.clone();
        next.last = self.sigma.column(g);
        next.sigma.push_right(m, g);
        next.sigma_inv.push_left(m, g);
        next.sigma_offset.push_right(m, g);
        next.word.push(g);
        Some(next)
    }

    fn inside(&self, root: &Vector) -> bool {
        vector_sign(&self.sigma_inv.apply(root)) == Some(true)
    }
}

impl Search<'_> {
    fn new<'a>(matrix: &'a CoxeterMatrix, alpha: &'a Root, beta: &'a Root, pool: Option<HashSet<Vector>>, min_n: usize, max_n: usize) -> Search<'a> {
        let (alpha_vec, beta_vec) = (alpha.integral_vector(matrix), beta.integral_vector(matrix));
        Search { matrix, alpha, beta, alpha_vec, beta_vec, pool, min_n, max_n, found: Vec::new() }
    }

    fn intermediate(&self, v: &Vector) -> bool {
        *v != self.alpha_vec && *v != self.beta_vec
    }

    /// Steps through `letters`, requiring every crossed root to lie strictly
    /// between `alpha` and `beta` in crossing order. A minimal gallery crossing
    /// `beta` last keeps every earlier chamber inside `beta`, which bounds the
    /// search. Also reports whether all crossed roots are in the pool.
    fn through(&self, walk: &Walk, letters: &[Gen]) -> Option<(Walk, bool)> {
        let mut w = walk.clone();
        let mut pooled = true;
        for &g in letters {
            w = w.step(self.matrix, g)?;
            if !self.intermediate(&w.last) || !w.inside(&self.beta_vec) {
                return None;
            }
            pooled &= self.pool.as_ref().is_none_or(|p| p.contains(&w.last));
        }
        Some((w, pooled))
    }

    fn record(&mut self, walk: Walk, n: usize, r: Gen, u: Option<Gen>, v: Option<Gen>) {
        if n < self.min_n {
            return;
        }
        let gallery = Gallery::new(self.matrix, walk.start.clone(), walk.word.clone()).expect("walk steps are length-increasing");
        let crossed = gallery.crossed_roots(self.matrix);
        assert!(crossed.first() == Some(self.alpha) && crossed.last() == Some(self.beta), "linear and combinatorial crossings disagree");
        self.found.push(TypeNrMatch { n, r, u, v, gallery, crossed });
    }

    /// All continuations from a start chamber whose first step crosses `alpha`.
    fn search_from(&mut self, start: Element, first: Gen) {
        let m = self.matrix;
        let head = match Walk::new(m, start).step(m, first) {
            Some(w) if w.last == self.alpha_vec && w.inside(&self.beta_vec) => w,
            _ => return,
        };
        let mut openings: Vec<(Option<Gen>, Gen, Walk)> = vec![(None, first, head.clone())];
        for r in m.generators().filter(|&g| g != first) {
            if let Some((w, _)) = self.through(&head, &[r]) {
                openings.push((Some(first), r, w));
            }
        }
        for (u, r, walk) in openings {
            let others: Vec<Gen> = m.generators().filter(|&g| g != r).collect();
            let (x, y) = (others[0], others[1]);
            self.blocks(walk, 0, r, x, y, u);
        }
    }

    fn blocks(&mut self, walk: Walk, done: usize, r: Gen, x: Gen, y: Gen, u: Option<Gen>) {
        if done >= self.max_n {
            return;
        }
        let n = done + 1;
        for block in [[x, y, x, y], [y, x, y, x]] {
            let Some((inside, pooled)) = self.through(&walk, &block) else { continue };
            let Some(closed) = inside.step(self.matrix, r) else { continue };
            if closed.last == self.beta_vec {
                self.record(closed, n, r, u, None);
                continue;
            }
            if !self.intermediate(&closed.last) || !closed.inside(&self.beta_vec) {
                continue;
            }
            for v in [x, y] {
                if let Some(end) = closed.step(self.matrix, v) {
                    if end.last == self.beta_vec {
                        self.record(end, n, r, u, Some(v));
                    }
                }
            }
            // Only the first and last blocks may leave the pool.
            if pooled || done == 0 {
                self.blocks(closed, n, r, x, y, u);
            }
        }
    }

    fn finish(mut self) -> Option<TypeNrMatch> {
        self.found.sort_by(|a, b| (a.gallery.start(), a.gallery.type_word()).cmp(&(b.gallery.start(), b.gallery.type_word())));
        self.found.dedup();
        let first = self.found.first()?;
        for other in &self.found[1..] {
            assert_eq!(first.key(), other.key(), "two type-(n, r) witnesses disagree between {:?} and {:?}", self.alpha, self.beta);
        }
        self.found.into_iter().next()
    }
}

fn require_quad(matrix: &CoxeterMatrix) {
    assert!(matrix.is_quad444(), "type-(n, r) galleries live in the (4, 4, 4) system");
}

/// Detection of witnesses with `n >= 3` for two roots of a gallery from the
/// identity, where `pool` is the gallery's sequence of crossed roots.
///
/// The residues of the middle blocks of a witness have all their roots in
/// the pool, so anchoring the second block at every residue spanned by two
/// pool roots at angle `pi/4` and walking outward reaches every such witness;
/// only the first and last blocks are allowed to cross roots outside the pool.
/// Witnesses with `n <= 2` are not reported.
pub fn detect_type_nr_in_pool(matrix: &CoxeterMatrix, alpha: &Root, beta: &Root, pool: &[Root]) -> Option<TypeNrMatch> {
    require_quad(matrix);
    if !pool.contains(alpha) || !pool.contains(beta) {
        return None;
    }
    let vectors: HashSet<Vector> = pool.iter().map(|r| r.integral_vector(matrix)).collect();
    let mut search = Search::new(matrix, alpha, beta, Some(vectors), 3, pool.len() / 4 + 2);
    let mut starts: BTreeSet<(Element, Gen)> = BTreeSet::new();
    for (a, gamma) in pool.iter().enumerate() {
        for delta in &pool[a + 1..] {
            if gamma == alpha || gamma == beta || delta == alpha || delta == beta {
                continue;
            }
            if matrix.pair_class(gamma, delta) != PairClass::Finite(4) {
                continue;
            }
            let (corner, [x, y]) = matrix.common_residue(gamma, delta).expect("finite pair shares a residue");
            let r = matrix.generators().find(|&g| g != x && g != y).expect("rank 3");
            for e in matrix.parabolic_elements(x, y) {
                // `e` enters the second block: back out through `r`, the first block and `r`.
                let entry = matrix.mul(&matrix.mul(&corner, &e), &matrix.reduce(&[r, x, y, x, y, r]));
                starts.insert((entry.clone(), r));
                for g in [x, y] {
                    starts.insert((matrix.mul_gen(&entry, g), g));
                }
            }
        }
    }
    for (start, first) in starts {
        search.search_from(start, first);
    }
    search.finish()
}

/// Panels of the wall of `alpha` reachable by walking along the wall through
/// rank-2 residues, as `(chamber inside alpha, generator)`, restricted to
/// chambers of length at most `radius`. The flag reports whether the walk was
/// cut off by the radius.
pub fn wall_panels(matrix: &CoxeterMatrix, alpha: &Root, radius: usize) -> (Vec<(Element, Gen)>, bool) {
    let inside = |c: Element, g: Gen| -> (Element, Gen) {
        if matrix.member(alpha, &c) {
            (c, g)
        } else {
            (matrix.mul_gen(&c, g), g)
        }
    };
    let first = alpha.inner_panel(matrix);
    let mut truncated = false;
    let mut seen: BTreeSet<(Element, Gen)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    if first.0.len() <= radius {
        seen.insert(first.clone());
        queue.push_back(first);
    } else {
        truncated = true;
    }
    while let Some((c, x)) = queue.pop_front() {
        for y in matrix.generators().filter(|&y| y != x && matrix.m(x, y).is_some()) {
            for e in matrix.parabolic_elements(x, y) {
                let cv = matrix.mul(&c, &e);
                for z in [x, y] {
                    let reflection = matrix.conjugate(&cv, &matrix.reduce(&[z]));
                    if &reflection != alpha.reflection() {
                        continue;
                    }
                    let panel = inside(cv.clone(), z);
                    if panel.0.len() > radius {
                        truncated = true;
                    } else if seen.insert(panel.clone()) {
                        queue.push_back(panel);
                    }
                }
            }
        }
    }
    (seen.into_iter().collect(), truncated)
}

/// Radius-bounded detection: tries every start panel on the wall of `alpha`
/// within `search_radius` and every `n <= search_radius / 5 + 1`. A miss with
/// a truncated wall walk is reported as `RadiusExhausted`.
pub fn detect_type_nr(matrix: &CoxeterMatrix, alpha: &Root, beta: &Root, search_radius: usize) -> Result<Option<TypeNrMatch>, FamilyError> {
    require_quad(matrix);
    let mut search = Search::new(matrix, alpha, beta, None, 1, search_radius / 5 + 1);
    let (panels, truncated) = wall_panels(matrix, alpha, search_radius);
    for (start, first) in panels {
        search.search_from(start, first);
    }
    match search.finish() {
        Some(found) => Ok(Some(found)),
        None if truncated => Err(FamilyError::RadiusExhausted { radius: search_radius }),
        None => Ok(None),
    }
}

/// The type word `(u, r, B_1, r, ..., B_n, r, v)` with the given block choices
/// (`true` selects the block starting with the smaller of the other two generators).
pub fn type_nr_word(n: usize, r: Gen, u: Option<Gen>, v: Option<Gen>, blocks: &[bool]) -> Vec<Gen> {
    assert_eq!(blocks.len(), n);
    let others: Vec<Gen> = (0..3).filter(|&g| g != r).collect();
    let (x, y) = (others[0], others[1]);
    let mut word: Vec<Gen> = u.into_iter().collect();
    word.push(r);
    for &low_first in blocks {
        let (a, b) = if low_first { (x, y) } else { (y, x) };
        word.extend([a, b, a, b, r]);
    }
    word.extend(v);
    word
}
