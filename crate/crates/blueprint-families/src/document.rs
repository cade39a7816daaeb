//! The JSON form of a family. Unknown fields are rejected by serde, fields
//! that do not belong to the chosen variant are rejected by [`FamilyDocument::build`].

use std::collections::{BTreeMap, BTreeSet};

use coxeter_core::{CoxeterMatrix, Gen};
use serde::{Deserialize, Serialize};

use crate::family::{default_names, BlueprintFamily, Defect, FamilyError, NilBound, Variant};
use crate::nil::NilLetters;

/// A generator given by index or by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenRef {
    Index(u64),
    Name(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    /// `tits`, `exotic`, `nil` or `quad`.
    pub variant: String,
    /// Free-form provenance text, ignored by the tools.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Full Coxeter matrix, `null` for an infinite entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Option<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<GenRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<GenRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<GenRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s0: Option<GenRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s1: Option<GenRef>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "K")]
    pub k: Option<Vec<usize>>,
    /// Tits: `k -> J_k` as integers; quad: `k -> J_k` as generators.
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "J")]
    pub j: Option<BTreeMap<usize, Vec<GenRef>>>,
    /// Quad: `k -> generator -> L_k^j`.
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "L")]
    pub l: Option<BTreeMap<usize, BTreeMap<String, Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<NilBound>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<Defect>,
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParameters(msg.into())
}

impl FamilyDocument {
    fn present_fields(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let flags = [
            ("r", self.r.is_some()),
            ("s", self.s.is_some()),
            ("t", self.t.is_some()),
            ("s0", self.s0.is_some()),
            ("s1", self.s1.is_some()),
            ("K", self.k.is_some()),
            ("J", self.j.is_some()),
            ("L", self.l.is_some()),
            ("n", self.n.is_some()),
        ];
        for (name, present) in flags {
            if present {
                out.push(name);
            }
        }
        out
    }

    pub fn build(&self) -> Result<BlueprintFamily, FamilyError> {
        let (allowed, default_rank): (&[&str], usize) = match self.variant.as_str() {
            "tits" => (&["s", "t", "K", "J"], 2),
            "exotic" => (&["s0", "s1"], 2),
            "nil" => (&["r", "s", "t", "n"], 3),
            "quad" => (&["K", "J", "L"], 3),
            other => return Err(bad(format!("unknown variant {other:?}; expected tits, exotic, nil or quad"))),
        };
        if let Some(f) = self.present_fields().into_iter().find(|f| !allowed.contains(f)) {
            return Err(bad(format!("field {f:?} does not apply to the {} family", self.variant)));
        }
        let rank = self.rank.unwrap_or(default_rank);
        let expected = if self.variant == "quad" {
            CoxeterMatrix::quad444()
        } else {
            CoxeterMatrix::universal(rank).map_err(|e| FamilyError::MatrixMismatch(e.to_string()))?
        };
        if self.variant == "quad" && rank != 3 {
            return Err(FamilyError::MatrixMismatch(format!("the quad family has rank 3, not {rank}")));
        }
        if let Some(rows) = &self.matrix {
            if rows.len() != expected.rank() || rows.iter().any(|row| row.len() != rows.len()) {
                return Err(FamilyError::MatrixMismatch(format!("matrix must be {0} x {0}", expected.rank())));
            }
            let given = CoxeterMatrix::new(rows.len(), rows.concat()).map_err(|e| FamilyError::MatrixMismatch(e.to_string()))?;
            if given != expected {
                return Err(FamilyError::MatrixMismatch(format!("the {} family does not live on the given matrix", self.variant)));
            }
        }
        let names = self.generators.clone().unwrap_or_else(|| default_names(rank));
        if names.len() != rank {
            return Err(bad(format!("{} generator names for rank {rank}", names.len())));
        }
        let resolve = |g: &GenRef, what: &str| -> Result<Gen, FamilyError> {
            match g {
                GenRef::Index(i) if (*i as usize) < rank => Ok(*i as Gen),
                GenRef::Index(i) => Err(bad(format!("{what} = {i} is not a generator of rank {rank}"))),
                GenRef::Name(n) => names.iter().position(|x| x == n).map(|p| p as Gen).ok_or_else(|| bad(format!("{what} = {n:?} is not a generator name"))),
            }
        };
        let need = |g: &Option<GenRef>, what: &str| -> Result<Gen, FamilyError> {
            resolve(g.as_ref().ok_or_else(|| bad(format!("missing field {what:?}")))?, what)
        };
        let variant = match self.variant.as_str() {
            "tits" => {
                let ks = self.k.as_ref().ok_or_else(|| bad("missing field \"K\""))?;
                let js = self.j.clone().unwrap_or_default();
                if let Some(k) = js.keys().find(|k| !ks.contains(k)) {
                    return Err(bad(format!("J has an entry for {k}, which is not in K")));
                }
                let mut levels = BTreeMap::new();
                for &k in ks {
                    let mut set = BTreeSet::new();
                    for g in js.get(&k).into_iter().flatten() {
                        match g {
                            GenRef::Index(i) => set.insert(*i as usize),
                            GenRef::Name(n) => return Err(bad(format!("J_{k} lists {n:?}; the Tits family takes integers"))),
                        };
                    }
                    levels.insert(k, set);
                }
                Variant::Tits { s: need(&self.s, "s")?, t: need(&self.t, "t")?, levels }
            }
            "exotic" => Variant::Exotic { s0: need(&self.s0, "s0")?, s1: need(&self.s1, "s1")? },
            "nil" => Variant::Nil {
                n: self.n.ok_or_else(|| bad("missing field \"n\""))?,
                letters: NilLetters { r: need(&self.r, "r")?, s: need(&self.s, "s")?, t: need(&self.t, "t")? },
            },
            _ => {
                let ks = self.k.as_ref().ok_or_else(|| bad("missing field \"K\""))?;
                let js = self.j.as_ref().ok_or_else(|| bad("missing field \"J\""))?;
                let ls = self.l.clone().unwrap_or_default();
                for k in js.keys().chain(ls.keys()) {
                    if !ks.contains(k) {
                        return Err(bad(format!("J or L has an entry for {k}, which is not in K")));
                    }
                }
                let mut levels = BTreeMap::new();
                for &k in ks {
                    let mut by_r = BTreeMap::new();
                    for g in js.get(&k).into_iter().flatten() {
                        by_r.insert(resolve(g, &format!("element of J_{k}"))?, BTreeSet::new());
                    }
                    for (name, set) in ls.get(&k).into_iter().flatten() {
                        let r = resolve(&GenRef::Name(name.clone()), &format!("key of L_{k}"))?;
                        let slot = by_r.get_mut(&r).ok_or_else(|| bad(format!("L_{k} has an entry for {name:?}, which is not in J_{k}")))?;
                        slot.extend(set.iter().copied());
                    }
                    levels.insert(k, by_r);
                }
                Variant::Quad { levels }
            }
        };
        BlueprintFamily::new(expected, variant, self.defect)?.with_names(names)
    }
}

impl BlueprintFamily {
    /// The document that [`FamilyDocument::build`] turns back into this family.
    pub fn document(&self) -> FamilyDocument {
        let names = self.names();
        let name = |g: Gen| Some(GenRef::Name(names[g as usize].clone()));
        let mut doc = FamilyDocument {
            variant: self.variant().name().into(),
            rank: Some(self.matrix().rank()),
            generators: Some(names.to_vec()),
            defect: self.defect(),
            ..FamilyDocument::default()
        };
        match self.variant() {
            Variant::Tits { s, t, levels } => {
                doc.s = name(*s);
                doc.t = name(*t);
                doc.k = Some(levels.keys().copied().collect());
                doc.j = Some(levels.iter().map(|(&k, js)| (k, js.iter().map(|&j| GenRef::Index(j as u64)).collect())).collect());
            }
            Variant::Exotic { s0, s1 } => {
                doc.s0 = name(*s0);
                doc.s1 = name(*s1);
            }
            Variant::Nil { n, letters } => {
                doc.n = Some(*n);
                doc.r = name(letters.r);
                doc.s = name(letters.s);
                doc.t = name(letters.t);
            }
            Variant::Quad { levels } => {
                doc.k = Some(levels.keys().copied().collect());
                doc.j = Some(levels.iter().map(|(&k, by_r)| (k, by_r.keys().map(|&r| name(r).expect("name")).collect())).collect());
                let l: BTreeMap<usize, BTreeMap<String, Vec<usize>>> = levels
                    .iter()
                    .map(|(&k, by_r)| (k, by_r.iter().filter(|(_, ls)| !ls.is_empty()).map(|(&r, ls)| (names[r as usize].clone(), ls.iter().copied().collect())).collect::<BTreeMap<_, _>>()))
                    .filter(|(_, m)| !m.is_empty())
                    .collect();
                doc.l = (!l.is_empty()).then_some(l);
            }
        }
        doc
    }
}
