use std::collections::HashSet;

use serde::Serialize;

use crate::context::{GroupElement, PresentationContext};
use crate::error::GroupError;

/// Lower central series summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    /// Least `c` with `gamma_{c+1} = 1`.
    pub class: usize,
    /// `log2 |gamma_i|` for `i = 2, 3, ...` up to the first trivial term.
    pub term_exponents: Vec<u32>,
}

/// A subgroup kept as an element set, grown one generator at a time.
struct Subgroup {
    elements: Vec<u128>,
    members: HashSet<u128>,
    gens: Vec<u128>,
    cap: usize,
}

impl Subgroup {
    fn trivial(cap: usize) -> Self {
        Subgroup { elements: vec![0], members: HashSet::from([0]), gens: Vec::new(), cap }
    }

    fn contains(&self, x: u128) -> bool {
        self.members.contains(&x)
    }

    /// Replaces the subgroup by the one generated together with `g`.
    fn adjoin<L>(&mut self, ctx: &PresentationContext<L>, g: u128) -> Result<(), GroupError> {
        if self.contains(g) {
            return Ok(());
        }
        self.gens.push(g);
        // Old elements only need the new generator; new ones need all of them.
        let old = self.elements.len();
        let mut idx = 0;
        while idx < self.elements.len() {
            let x = self.elements[idx];
            let gens: &[u128] = if idx < old { std::slice::from_ref(&g) } else { &self.gens };
            let products: Vec<u128> = gens.iter().map(|&h| ctx.mul_raw(x, h)).collect();
            for y in products {
                if self.members.insert(y) {
                    if self.members.len() > self.cap {
                        return Err(GroupError::CapExceeded { cap: self.cap });
                    }
                    self.elements.push(y);
                }
            }
            idx += 1;
        }
        Ok(())
    }
}

impl<L> PresentationContext<L> {
    /// The subgroup generated by `gens`, by breadth-first product closure.
    pub fn subgroup_closure(&self, gens: &[GroupElement], cap: usize) -> Result<Vec<GroupElement>, GroupError> {
        let mut h = Subgroup::trivial(cap);
        for g in gens {
            if g.k() != self.k() {
                return Err(GroupError::ContextMismatch { expected: self.k(), found: g.k() });
            }
            h.adjoin(self, g.bits())?;
        }
        let mut out: Vec<GroupElement> = h.elements.into_iter().map(|b| GroupElement::from_bits(self.k(), b)).collect();
        out.sort();
        Ok(out)
    }

    /// Smallest normal subgroup containing `seeds`: keeps adjoining conjugates
    /// of the current generators by the group generators until stable.
    fn normal_closure(&self, seeds: impl IntoIterator<Item = u128>, cap: usize) -> Result<Subgroup, GroupError> {
        let mut h = Subgroup::trivial(cap);
        let mut pending: Vec<u128> = seeds.into_iter().filter(|&x| x != 0).collect();
        while let Some(x) = pending.pop() {
            if h.contains(x) {
                continue;
            }
            h.adjoin(self, x)?;
            for i in 0..self.k() {
                let u = 1u128 << i;
                let conj = self.mul_raw(self.mul_raw(u, x), u);
                if !h.contains(conj) {
                    pending.push(conj);
                }
            }
        }
        // Conjugates of the generators of the final subgroup must lie inside it.
        for &g in &h.gens.clone() {
            for i in 0..self.k() {
                let u = 1u128 << i;
                debug_assert!(h.contains(self.mul_raw(self.mul_raw(u, g), u)));
            }
        }
        Ok(h)
    }

    /// Lower central series `gamma_2 = [G, G]`, `gamma_{i+1} = [gamma_i, G]`,
    /// each term materialized under `cap` elements.
    ///
    /// `gamma_2` is the normal closure of the generator commutators and
    /// `gamma_{i+1}` the normal closure of `[y, u_x]` over `y` in `gamma_i`.
    pub fn lower_central_series(&self, cap: usize) -> Result<Vec<Vec<GroupElement>>, GroupError> {
        let k = self.k();
        let mut seeds = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                seeds.push(self.commutator_raw(1 << i, 1 << j));
            }
        }
        let mut terms = Vec::new();
        let mut current = self.normal_closure(seeds, cap)?;
        loop {
            let done = current.elements.len() == 1;
            let mut sorted: Vec<GroupElement> =
                current.elements.iter().map(|&b| GroupElement::from_bits(k, b)).collect();
            sorted.sort();
            terms.push(sorted);
            if done {
                return Ok(terms);
            }
            let seeds: Vec<u128> = current
                .elements
                .iter()
                .flat_map(|&y| (0..k).map(move |x| (y, x)))
                .map(|(y, x)| self.commutator_raw(y, 1 << x))
                .collect();
            let next = self.normal_closure(seeds, cap)?;
            assert!(next.elements.len() < current.elements.len(), "lower central series failed to descend");
            current = next;
        }
    }

    /// Nilpotency class; the trivial group has class 0.
    pub fn nilpotency_class(&self, cap: usize) -> Result<NilpotencyReport, GroupError> {
        if self.k() == 0 {
            return Ok(NilpotencyReport { class: 0, term_exponents: Vec::new() });
        }
        let terms = self.lower_central_series(cap)?;
        let term_exponents = terms.iter().map(|t| t.len().trailing_zeros()).collect();
        Ok(NilpotencyReport { class: terms.len(), term_exponents })
    }

    /// 0-based indices `i` with `u_i` central.
    pub fn central_generators(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.non_commuting(&self.generator(i)).is_empty()).collect()
    }
}
