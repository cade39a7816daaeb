//! The axiom checks. Each walks its units in `(length(w), ShortLex(w), type)`
//! order in parallel and keeps the first failure in that order.

use blueprint_families::{BlueprintFamily, FamilyError, OrderedMSet, Variant};
use coxeter_core::{Element, Gallery, Gen, PairClass, Root};
use group_engine::{GroupElement, GroupError, PresentationContext};
use rayon::prelude::*;

use crate::atlas::{Atlas, GalleryData};
use crate::report::{Counterexample, Outcome, Verdict};

pub(crate) struct Checker<'a> {
    pub family: &'a BlueprintFamily,
    pub atlas: &'a Atlas,
}

type UnitResult = Result<usize, Box<Counterexample>>;

/// Sums the examined counts and keeps the earliest failure.
fn collect(results: Vec<UnitResult>) -> Outcome {
    let mut examined = 0;
    for r in results {
        match r {
            Ok(n) => examined += n,
            Err(c) => return Outcome { verdict: Verdict::Fail(*c), examined, note: None },
        }
    }
    Outcome::pass(examined)
}

fn set_text(set: &OrderedMSet) -> String {
    let items: Vec<String> = set.positions.iter().map(|p| format!("alpha_{p}")).collect();
    format!("{{{}}}", items.join(", "))
}

impl<'a> Checker<'a> {
    fn word(&self, w: &[Gen]) -> String {
        self.family.spell(w)
    }

    fn gallery_text(&self, g: &Gallery) -> String {
        format!("({})", g.type_word().iter().map(|&s| self.family.names()[s as usize].as_str()).collect::<Vec<_>>().join(","))
    }

    fn root_text(&self, roots: &[Root], pos: usize) -> String {
        let r = &roots[pos - 1];
        let sign = if r.is_positive() { "" } else { "-" };
        format!("alpha_{pos} ({sign}root of reflection {})", self.word(r.reflection().word()))
    }

    fn counterexample(&self, w: &Element, data: &GalleryData, alpha: Option<usize>, beta: Option<usize>, detail: String) -> Box<Counterexample> {
        Box::new(Counterexample {
            w: self.word(w.word()),
            gallery: self.gallery_text(&data.gallery),
            alpha: alpha.map(|p| self.root_text(&data.roots, p)),
            beta: beta.map(|p| self.root_text(&data.roots, p)),
            detail,
        })
    }

    fn data_for(&self, gallery: Gallery) -> Result<GalleryData, FamilyError> {
        match self.atlas.lookup(gallery.type_word()) {
            Some(d) => Ok(d.clone()),
            None => GalleryData::compute(self.family, gallery),
        }
    }

    /// Prefix consistency: `M^H = M^G` for every prefix `H` of `G`.
    pub fn cb1(&self) -> Outcome {
        let units = self.atlas.galleries();
        let results = units
            .par_iter()
            .map(|&(w, g)| {
                let mut examined = 0;
                for p in 2..g.len() {
                    let h = self.data_for(g.gallery.prefix(p)).expect("prefixes share the family's matrix");
                    for j in 2..=p {
                        for i in 1..j {
                            let (mh, mg) = (h.table.get(i, j), g.table.get(i, j));
                            if mh.positions != mg.positions {
                                let detail = format!("prefix H = {} has M^H = {} but M^G = {}", self.gallery_text(&h.gallery), set_text(mh), set_text(mg));
                                return Err(self.counterexample(w, g, Some(i), Some(j), detail));
                            }
                        }
                    }
                    examined += 1;
                }
                Ok(examined)
            })
            .collect();
        collect(results).with_note("units: (G, proper prefix H) pairs")
    }

    /// Dihedral normalization on `Min(r_{s,t})` for every finite `m_st`.
    pub fn cb2(&self) -> Outcome {
        let m = self.family.matrix();
        let pairs: Vec<(Gen, Gen)> = m.generators().flat_map(|s| m.generators().filter(move |&t| s < t).map(move |t| (s, t))).filter(|&(s, t)| m.m(s, t).is_some()).collect();
        if pairs.is_empty() {
            return Outcome::pass(0).with_note("no finite m_st: vacuous");
        }
        let mut results = Vec::new();
        for (s, t) in pairs {
            let w = m.longest_element(&[s, t]).expect("finite pair");
            let (alpha_s, alpha_t) = (m.simple_root(s), m.simple_root(t));
            for gallery in m.min_galleries(&w) {
                let data = self.data_for(gallery).expect("gallery over the family's matrix");
                results.push(self.cb2_gallery(&w, &data, &alpha_s, &alpha_t));
            }
        }
        collect(results).with_note("units: galleries of the longest dihedral elements")
    }

    fn cb2_gallery(&self, w: &Element, data: &GalleryData, alpha_s: &Root, alpha_t: &Root) -> UnitResult {
        let m = self.family.matrix();
        for j in 2..=data.len() {
            for i in 1..j {
                let (a, b) = (&data.roots[i - 1], &data.roots[j - 1]);
                let simple_pair = (a == alpha_s && b == alpha_t) || (a == alpha_t && b == alpha_s);
                let expected: Vec<Root> = if simple_pair { m.open_interval(a, b).expect("finite pair") } else { Vec::new() };
                let got = &data.table.get(i, j).roots;
                let same = got.len() == expected.len() && got.iter().all(|r| expected.contains(r));
                if !same {
                    let want = if simple_pair { "the open interval" } else { "the empty set" };
                    let detail = format!("M^G = {} but (CB2) requires {want} ({} roots)", set_text(data.table.get(i, j)), expected.len());
                    return Err(self.counterexample(w, data, Some(i), Some(j), detail));
                }
            }
        }
        Ok(1)
    }

    /// Order certification by iterated extension along the ShortLex-least
    /// gallery, then every relation of the other galleries in `Min(w)`.
    pub fn cb3_pcb(&self) -> Outcome {
        let results = self
            .atlas
            .cells
            .par_iter()
            .map(|cell| {
                let g = &cell.galleries[0];
                let (chain, failure) = g.extension_chain();
                if let Some((k, err)) = failure {
                    let (alpha, detail) = match &err {
                        GroupError::ExtensionInconsistent { i, .. } => (Some(*i), format!("adding u_{k}: {err}")),
                        other => (None, format!("adding u_{k}: {other}")),
                    };
                    return Err(self.counterexample(&cell.w, g, alpha, Some(k), detail));
                }
                let ctx = chain.last().expect("nonempty chain");
                let mut examined = 1;
                for f in &cell.galleries[1..] {
                    self.pcb_relations(&cell.w, g, f, ctx)?;
                    examined += 1;
                }
                Ok(examined)
            })
            .collect();
        collect(results).with_note("units: certified groups U_G plus cross-gallery relation sets")
    }

    fn pcb_relations(&self, w: &Element, g: &GalleryData, f: &GalleryData, ctx: &PresentationContext<usize>) -> Result<(), Box<Counterexample>> {
        let to_g: Vec<usize> = f.roots.iter().map(|r| g.roots.iter().position(|x| x == r).expect("Phi(w) does not depend on the gallery")).collect();
        for j in 2..=f.len() {
            for i in 1..j {
                let lhs = ctx.commutator(&ctx.generator(to_g[i - 1]), &ctx.generator(to_g[j - 1])).expect("same context");
                let word: Vec<usize> = f.table.word(i, j).into_iter().map(|p| to_g[p]).collect();
                let rhs = ctx.word(&word);
                if lhs != rhs {
                    let detail = format!(
                        "relation [u_{i}, u_{j}] = prod {} of {} evaluates to {:?} in U_G for G = {}, but the product is {:?}",
                        set_text(f.table.get(i, j)),
                        self.gallery_text(&f.gallery),
                        lhs,
                        self.gallery_text(&g.gallery),
                        rhs
                    );
                    return Err(self.counterexample(w, f, Some(i), Some(j), detail));
                }
            }
        }
        Ok(())
    }

    /// `M^{sG}_{s alpha, s beta} = s M^G_{alpha, beta}` over `Min_s(w)`.
    pub fn weyl(&self) -> Outcome {
        let m = self.family.matrix();
        let gens: Vec<Gen> = m.generators().collect();
        let units: Vec<(&Element, &GalleryData, Gen)> = self.atlas.galleries().into_iter().flat_map(|(w, g)| gens.iter().map(move |&s| (w, g, s))).collect();
        let results = units
            .par_iter()
            .map(|&(w, g, s)| {
                let strips = g.gallery.type_word().first() == Some(&s);
                if m.is_left_descent(s, w) && !strips {
                    return Ok(0);
                }
                let sg = self.data_for(g.gallery.left_translate(s)).expect("translate stays in the matrix");
                let moved = |p: usize| if strips { p - 1 } else { p + 1 };
                let first = if strips { 2 } else { 1 };
                for j in first + 1..=g.len() {
                    for i in first..j {
                        let expected: Vec<Root> = g.table.get(i, j).roots.iter().map(|r| m.translate_gen(s, r)).collect();
                        let got = sg.table.get(moved(i), moved(j));
                        if got.roots != expected {
                            let detail = format!(
                                "translating by {}: M^{{sG}} for sG = {} is {} but s M^G = s {}",
                                self.family.names()[s as usize],
                                self.gallery_text(&sg.gallery),
                                set_text(got),
                                set_text(g.table.get(i, j))
                            );
                            return Err(self.counterexample(w, g, Some(i), Some(j), detail));
                        }
                    }
                }
                Ok(1)
            })
            .collect();
        collect(results).with_note("units: (G, s) with G in Min_s(w)")
    }

    /// The three identities `(2-n1)`, `(2-n2)`, `(2-n3)` inside `U_H`.
    pub fn two_n(&self) -> Outcome {
        let units: Vec<_> = self.atlas.galleries().into_iter().filter(|(_, g)| g.len() >= 2).collect();
        let results: Vec<Result<(usize, usize), Box<Counterexample>>> = units
            .par_iter()
            .map(|&(w, g)| {
                let k = g.len();
                let (chain, _) = g.extension_chain();
                let Some(ctx) = chain.get(k - 1) else { return Ok((0, 1)) };
                self.two_n_gallery(w, g, ctx).map(|()| (1, 0))
            })
            .collect();
        let skipped: usize = results.iter().filter_map(|r| r.as_ref().ok()).map(|r| r.1).sum();
        let mut outcome = collect(results.into_iter().map(|r| r.map(|x| x.0)).collect());
        let mut note = "units: galleries G = (H, last step) with U_H certified".to_string();
        if skipped > 0 {
            note.push_str(&format!("; {skipped} galleries skipped because U_H could not be built (see cb3_pcb)"));
        }
        outcome.note = Some(note);
        outcome
    }

    fn two_n_gallery(&self, w: &Element, g: &GalleryData, ctx: &PresentationContext<usize>) -> Result<(), Box<Counterexample>> {
        let k = g.len();
        let t = &g.table;
        for i in 1..k {
            let p = ctx.word(&t.word(i, k));
            if !ctx.is_central(&p).expect("same context") {
                let detail = format!("(2-n1): prod {} = {:?} is not central in U_H", set_text(t.get(i, k)), p);
                return Err(self.counterexample(w, g, Some(i), Some(k), detail));
            }
            if !ctx.multiply(&p, &p).expect("same context").is_identity() {
                let detail = format!("(2-n2): prod {} = {:?} does not square to 1 in U_H", set_text(t.get(i, k)), p);
                return Err(self.counterexample(w, g, Some(i), Some(k), detail));
            }
        }
        for j in 2..=k {
            for i in 1..j {
                let mut seq = Vec::new();
                for &c in &t.get(i, j).positions {
                    seq.push(c - 1);
                    seq.extend(t.word(c, k));
                }
                let lhs = ctx.word(&seq);
                let rhs = ctx.word(&t.word(i, j));
                if lhs != rhs {
                    let detail = format!("(2-n3): twisting M^G = {} by the last root gives {:?} instead of {:?} in U_H", set_text(t.get(i, j)), lhs, rhs);
                    return Err(self.counterexample(w, g, Some(i), Some(j), detail));
                }
            }
        }
        Ok(())
    }

    /// Hypotheses (a)(i), (a)(ii), (b)(i), (b)(ii) at the last root of every gallery.
    pub fn prop52(&self) -> Outcome {
        if !matches!(self.family.variant(), Variant::Quad { .. }) {
            return Outcome::pass(0).with_note("defined for quad families only: vacuous");
        }
        let units: Vec<_> = self.atlas.galleries().into_iter().filter(|(_, g)| g.len() >= 2).collect();
        let results = units
            .par_iter()
            .map(|&(w, g)| {
                let (chain, _) = g.extension_chain();
                self.prop52_gallery(w, g, chain.get(g.len() - 1))?;
                Ok(1)
            })
            .collect();
        collect(results).with_note("units: galleries, conditions taken at their last root")
    }

    fn prop52_gallery(&self, w: &Element, g: &GalleryData, ctx: Option<&PresentationContext<usize>>) -> Result<(), Box<Counterexample>> {
        let m = self.family.matrix();
        let k = g.len();
        let t = &g.table;
        let beta = &g.roots[k - 1];
        let root = |p: usize| &g.roots[p - 1];
        let same = |a: &OrderedMSet, b: &OrderedMSet| {
            let mut x = a.roots.clone();
            let mut y = b.roots.clone();
            x.sort();
            y.sort();
            x == y
        };
        for i in 1..k {
            match m.pair_class(root(i), beta) {
                PairClass::Finite(_) => {
                    let set = t.get(i, k);
                    let [gamma, delta] = set.positions[..] else { continue };
                    for e in 1..=k {
                        if e == gamma || e == delta {
                            continue;
                        }
                        let eps = root(e);
                        if e < gamma && m.proper_subset(eps, root(gamma)) && m.proper_subset(eps, root(delta)) && !same(t.get(e, gamma), t.get(e, delta)) {
                            let detail = format!(
                                "(a)(i) with M = {}, epsilon = alpha_{e}: M_(epsilon, gamma) = {} but M_(epsilon, delta) = {}",
                                set_text(set),
                                set_text(t.get(e, gamma)),
                                set_text(t.get(e, delta))
                            );
                            return Err(self.counterexample(w, g, Some(i), Some(k), detail));
                        }
                        if e > delta && m.proper_subset(root(gamma), eps) && m.proper_subset(root(delta), eps) && !same(t.get(gamma, e), t.get(delta, e)) {
                            let detail = format!(
                                "(a)(ii) with M = {}, epsilon = alpha_{e}: M_(gamma, epsilon) = {} but M_(delta, epsilon) = {}",
                                set_text(set),
                                set_text(t.get(gamma, e)),
                                set_text(t.get(delta, e))
                            );
                            return Err(self.counterexample(w, g, Some(i), Some(k), detail));
                        }
                    }
                }
                PairClass::Equal | PairClass::Opposite => {}
                _ => {
                    let Some(ctx) = ctx else { continue };
                    let p: GroupElement = ctx.word(&t.word(i, k));
                    if !ctx.is_central(&p).expect("same context") {
                        let detail = format!("(b)(i): prod {} = {:?} is not central in U_H", set_text(t.get(i, k)), p);
                        return Err(self.counterexample(w, g, Some(i), Some(k), detail));
                    }
                    if !ctx.multiply(&p, &p).expect("same context").is_identity() {
                        let detail = format!("(b)(ii): prod {} = {:?} does not square to 1 in U_H", set_text(t.get(i, k)), p);
                        return Err(self.counterexample(w, g, Some(i), Some(k), detail));
                    }
                }
            }
        }
        Ok(())
    }
}
