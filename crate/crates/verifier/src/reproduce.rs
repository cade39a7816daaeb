//! Drivers for the nilpotency-class statements of the four families.

use blueprint_families::{nil_pattern, universal::root_type, BlueprintFamily, Variant};
use coxeter_core::Gallery;
use group_engine::{GroupError, NilpotencyReport, PresentationContext};
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::{Atlas, GalleryData};
use crate::report::{Counterexample, Outcome, Verdict};
use crate::VerifyError;

/// Default bound on the size of each lower-central-series term.
pub const DEFAULT_CAP: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "statement", rename_all = "snake_case")]
pub enum Reproduction {
    /// Tits family: every `U_w` in the ball has class at most 2.
    TitsClassTwo { depth: usize },
    /// Exotic family: class at most 2, and `u_i u_{i+1}` is central whenever
    /// `alpha_i` has type `s1` and `alpha_{i+1}` has type `s0`.
    ExoticClassTwo { depth: usize },
    /// Nil family with bound `n`: the `(1, 2, n-1, n)` gallery has class exactly `n - 1`.
    NilSharp { n: usize },
    /// Unbounded nil family: the `(1, 2, m+1, m+2)` gallery has class above `m`.
    NilUnbounded { m: usize },
}

impl Reproduction {
    pub fn name(&self) -> String {
        match self {
            Reproduction::TitsClassTwo { depth } => format!("tits_class_two(depth {depth})"),
            Reproduction::ExoticClassTwo { depth } => format!("exotic_class_two(depth {depth})"),
            Reproduction::NilSharp { n } => format!("nil_sharp(n = {n})"),
            Reproduction::NilUnbounded { m } => format!("nil_unbounded(m = {m})"),
        }
    }
}

/// Invariants of one certified group `U_G`.
#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub word: String,
    pub order_exponent: usize,
    /// `None` when a lower-central-series term exceeded the cap.
    pub class: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub term_exponents: Option<Vec<u32>>,
    /// 1-based positions of the generators that are central.
    pub center_generators: Vec<usize>,
    pub class_at_most_2: bool,
    pub table: PresentationContext<usize>,
}

/// Builds `U_G` for the gallery of type `word` and computes its invariants.
pub fn group_summary(family: &BlueprintFamily, word: &[u8], cap: usize) -> Result<GroupSummary, VerifyError> {
    let gallery = Gallery::from_identity(family.matrix(), word.to_vec()).map_err(|e| VerifyError::Config(e.to_string()))?;
    let data = GalleryData::compute(family, gallery)?;
    let (chain, failure) = data.extension_chain();
    if let Some((k, err)) = failure {
        return Err(VerifyError::Extension { step: k, source: err });
    }
    let ctx = chain.into_iter().last().expect("nonempty chain");
    let (class, term_exponents) = match ctx.nilpotency_class(cap) {
        Ok(NilpotencyReport { class, term_exponents }) => (Some(class), Some(term_exponents)),
        Err(GroupError::CapExceeded { .. }) => (None, None),
        Err(e) => return Err(VerifyError::Extension { step: 0, source: e }),
    };
    Ok(GroupSummary {
        word: family.spell(word),
        order_exponent: ctx.k(),
        class,
        term_exponents,
        center_generators: ctx.central_generators().into_iter().map(|i| i + 1).collect(),
        class_at_most_2: ctx.class_at_most_2(),
        table: ctx,
    })
}

pub(crate) fn run(family: &BlueprintFamily, what: Reproduction, cap: usize) -> Result<Outcome, VerifyError> {
    match (what, family.variant()) {
        (Reproduction::TitsClassTwo { depth }, Variant::Tits { .. }) => class_two(family, depth, None),
        (Reproduction::ExoticClassTwo { depth }, Variant::Exotic { s0, s1 }) => class_two(family, depth, Some((*s0, *s1))),
        (Reproduction::NilSharp { n }, Variant::Nil { n: bound, letters }) => {
            if n < 3 || !bound.admits(n) || bound.admits(n + 1) {
                return Err(VerifyError::Config(format!("the sharpness statement needs a family with bound n = {n} >= 3, not {bound}")));
            }
            let pattern = nil_pattern(1, 2, n - 1, n, *letters)?;
            nil_class(family, &pattern.word, cap, |c| c == n - 1, format!("class exactly {}", n - 1))
        }
        (Reproduction::NilUnbounded { m }, Variant::Nil { n: bound, letters }) => {
            if m < 1 || !bound.admits(m + 2) {
                return Err(VerifyError::Config(format!("the unboundedness statement needs a family admitting {}", m + 2)));
            }
            let pattern = nil_pattern(1, 2, m + 1, m + 2, *letters)?;
            nil_class(family, &pattern.word, cap, |c| c > m, format!("class above {m}"))
        }
        (what, variant) => Err(VerifyError::Config(format!("{} does not apply to a {} family", what.name(), variant.name()))),
    }
}

fn class_two(family: &BlueprintFamily, depth: usize, exotic: Option<(u8, u8)>) -> Result<Outcome, VerifyError> {
    let atlas = Atlas::build(family, depth)?;
    let m = family.matrix();
    let word = |w: &[u8]| family.spell(w);
    let gtext = |g: &Gallery| format!("({})", g.type_word().iter().map(|&s| family.names()[s as usize].as_str()).collect::<Vec<_>>().join(","));
    let results: Vec<Result<usize, Box<Counterexample>>> = atlas
        .galleries()
        .par_iter()
        .map(|&(w, g)| {
            let fail = |detail: String| Box::new(Counterexample { w: word(w.word()), gallery: gtext(&g.gallery), alpha: None, beta: None, detail });
            let (chain, failure) = g.extension_chain();
            if let Some((k, err)) = failure {
                return Err(fail(format!("U_G cannot be built at step {k}: {err}")));
            }
            let ctx = chain.last().expect("nonempty chain");
            if !ctx.class_at_most_2() {
                return Err(fail("U_G has nilpotency class above 2".into()));
            }
            if let Some((s0, s1)) = exotic {
                for i in 1..g.len() {
                    if root_type(m, &g.roots[i - 1]) == s1 && root_type(m, &g.roots[i]) == s0 {
                        let p = ctx.word(&[i - 1, i]);
                        if !ctx.is_central(&p).expect("same context") {
                            return Err(fail(format!("u_{} u_{} is not central in U_G", i, i + 1)));
                        }
                    }
                }
            }
            Ok(1)
        })
        .collect();
    let mut examined = 0;
    for r in results {
        match r {
            Ok(n) => examined += n,
            Err(c) => return Ok(Outcome { verdict: Verdict::Fail(*c), examined, note: None }),
        }
    }
    let note = if exotic.is_some() { "every U_G has class at most 2 and every eligible adjacent product is central" } else { "every U_G has class at most 2" };
    Ok(Outcome::pass(examined).with_note(format!("{note}; ball of radius {depth}")))
}

fn nil_class(family: &BlueprintFamily, word: &[u8], cap: usize, accept: impl Fn(usize) -> bool, claim: String) -> Result<Outcome, VerifyError> {
    let summary = group_summary(family, word, cap)?;
    let gallery = format!("type of length {}", word.len());
    let Some(class) = summary.class else {
        return Ok(Outcome { verdict: Verdict::Truncated(format!("lower central series exceeded the cap of {cap} elements")), examined: 1, note: None });
    };
    let detail = format!("|U_G| = 2^{}, class {class}, lower central exponents {:?}", summary.order_exponent, summary.term_exponents.unwrap_or_default());
    if accept(class) {
        Ok(Outcome::pass(1).with_note(format!("{claim}: {detail}")))
    } else {
        let c = Counterexample { w: summary.word, gallery, alpha: None, beta: None, detail: format!("expected {claim}; {detail}") };
        Ok(Outcome { verdict: Verdict::Fail(c), examined: 1, note: None })
    }
}
