use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

use coxeter_core::{CoxeterMatrix, Gallery, Gen, PairClass, Root};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nil::{parse_nil, NilLetters};
use crate::quad::detect_type_nr_in_pool;
use crate::universal::{detect_alternating, detect_exotic, geodesic_between};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("matrix mismatch: {0}")]
    MatrixMismatch(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("root {0} is not crossed by the gallery")]
    NotInGallery(String),
    #[error("query positions {i}, {j} are not 1 <= i <= j <= {len}")]
    BadPositions { i: usize, j: usize, len: usize },
    #[error("type-(n, r) search exhausted radius {radius} without a witness")]
    RadiusExhausted { radius: usize },
}

/// Upper bound `n` of the nil family; `Unbounded` accepts every pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NilBound {
    Finite(usize),
    Unbounded,
}

impl NilBound {
    pub fn admits(self, j: usize) -> bool {
        match self {
            NilBound::Finite(n) => j <= n,
            NilBound::Unbounded => true,
        }
    }
}

impl fmt::Display for NilBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilBound::Finite(n) => write!(f, "{n}"),
            NilBound::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for NilBound {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            NilBound::Finite(n) => serializer.serialize_u64(*n as u64),
            NilBound::Unbounded => serializer.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for NilBound {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Finite(usize),
            Marker(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Finite(n) => Ok(NilBound::Finite(n)),
            Raw::Marker(m) if m == "unbounded" => Ok(NilBound::Unbounded),
            Raw::Marker(m) => Err(serde::de::Error::custom(format!("expected a number or \"unbounded\", got {m:?}"))),
        }
    }
}

/// Which construction, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum Variant {
    /// Alternating `(s, t, ..., s)` geodesics of `2k + 1` letters with `k`
    /// in the key set; the value at `k` selects the `alpha_{2j}`.
    Tits { s: Gen, t: Gen, levels: BTreeMap<usize, BTreeSet<usize>> },
    Exotic { s0: Gen, s1: Gen },
    Nil { n: NilBound, letters: NilLetters },
    /// `levels[n][r]` is the set of block indices whose omega roots are kept
    /// for type-`(n, r)` galleries; `n` ranges over the keys and `r` over the
    /// keys of `levels[n]`.
    Quad { levels: BTreeMap<usize, BTreeMap<Gen, BTreeSet<usize>>> },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Tits { .. } => "tits",
            Variant::Exotic { .. } => "exotic",
            Variant::Nil { .. } => "nil",
            Variant::Quad { .. } => "quad",
        }
    }
}

/// Deliberate mutations used to exercise the failure paths of the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Defect {
    /// Tits: keep the M-set only when the querying gallery ends with `s`.
    FinalLetterGate,
    /// Quad: send every finite-order pair to the empty set.
    CommutingDihedral,
    /// Tits: also accept geodesics alternating `(t, s, ..., t)`.
    MirroredPattern,
    /// Any: keep the M-set only when `alpha` is a simple root.
    OriginGate,
    /// Quad: for a nested pair `alpha ⊊ beta` with `beta` of type `s` and an
    /// empty M-set, use every root strictly between the two instead.
    AsymmetricNested,
}

impl Defect {
    pub fn applies_to(self, variant: &Variant) -> bool {
        match self {
            Defect::FinalLetterGate | Defect::MirroredPattern => matches!(variant, Variant::Tits { .. }),
            Defect::CommutingDihedral | Defect::AsymmetricNested => matches!(variant, Variant::Quad { .. }),
            Defect::OriginGate => true,
        }
    }
}

/// An ordered M-set: roots with their 1-based positions in `Phi(G)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderedMSet {
    pub positions: Vec<usize>,
    pub roots: Vec<Root>,
}

impl OrderedMSet {
    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }
}

/// Outcome of the type-(n, r) search for one infinite pair, keeping what the
/// M-set depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QuadHit {
    n: usize,
    r: Gen,
    omegas: Vec<BTreeSet<Root>>,
}

pub struct BlueprintFamily {
    matrix: CoxeterMatrix,
    variant: Variant,
    defect: Option<Defect>,
    names: Vec<String>,
    quad_cache: RwLock<HashMap<(Root, Root), Option<QuadHit>>>,
}

impl fmt::Debug for BlueprintFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlueprintFamily").field("variant", &self.variant).field("defect", &self.defect).field("names", &self.names).finish()
    }
}

impl Clone for BlueprintFamily {
    fn clone(&self) -> Self {
        BlueprintFamily {
            matrix: self.matrix.clone(),
            variant: self.variant.clone(),
            defect: self.defect,
            names: self.names.clone(),
            quad_cache: RwLock::new(HashMap::new()),
        }
    }
}

/// Default generator names: `s, t` in rank 2, `r, s, t` in rank 3, `g0, g1, ...` beyond.
pub fn default_names(rank: usize) -> Vec<String> {
    match rank {
        2 => vec!["s".into(), "t".into()],
        3 => vec!["r".into(), "s".into(), "t".into()],
        _ => (0..rank).map(|i| format!("g{i}")).collect(),
    }
}

fn check_gen(rank: usize, g: Gen, what: &str) -> Result<(), FamilyError> {
    if (g as usize) < rank {
        Ok(())
    } else {
        Err(FamilyError::BadParameters(format!("{what} = {g} is not a generator of rank {rank}")))
    }
}

impl BlueprintFamily {
    /// Validates the parameter domains and that `matrix` is the one the
    /// variant lives on: universal for Tits, Exotic and Nil, (4, 4, 4) for Quad.
    pub fn new(matrix: CoxeterMatrix, variant: Variant, defect: Option<Defect>) -> Result<Self, FamilyError> {
        let rank = matrix.rank();
        match &variant {
            Variant::Tits { s, t, levels } => {
                Self::need_universal(&matrix, 2)?;
                check_gen(rank, *s, "s")?;
                check_gen(rank, *t, "t")?;
                if s == t {
                    return Err(FamilyError::BadParameters("s and t must differ".into()));
                }
                if levels.is_empty() {
                    return Err(FamilyError::BadParameters("K must be nonempty".into()));
                }
                for (&k, js) in levels {
                    if k == 0 {
                        return Err(FamilyError::BadParameters("K contains 0".into()));
                    }
                    if let Some(j) = js.iter().find(|&&j| j == 0 || j > k) {
                        return Err(FamilyError::BadParameters(format!("J_{k} contains {j}, outside 1..={k}")));
                    }
                }
            }
            Variant::Exotic { s0, s1 } => {
                Self::need_universal(&matrix, 2)?;
                check_gen(rank, *s0, "s0")?;
                check_gen(rank, *s1, "s1")?;
                if s0 == s1 {
                    return Err(FamilyError::BadParameters("s0 and s1 must differ".into()));
                }
            }
            Variant::Nil { n, letters } => {
                Self::need_universal(&matrix, 3)?;
                for (g, what) in [(letters.r, "r"), (letters.s, "s"), (letters.t, "t")] {
                    check_gen(rank, g, what)?;
                }
                if letters.r == letters.s || letters.s == letters.t || letters.r == letters.t {
                    return Err(FamilyError::BadParameters("r, s, t must be distinct".into()));
                }
                if let NilBound::Finite(k) = n {
                    if *k < 2 {
                        return Err(FamilyError::BadParameters(format!("n = {k} admits no pattern")));
                    }
                }
            }
            Variant::Quad { levels } => {
                if !matrix.is_quad444() {
                    return Err(FamilyError::MatrixMismatch("the quad family needs m_st = 4 for all s != t in rank 3".into()));
                }
                if levels.is_empty() {
                    return Err(FamilyError::BadParameters("K must be nonempty".into()));
                }
                for (&k, by_r) in levels {
                    if k < 3 {
                        return Err(FamilyError::BadParameters(format!("K contains {k}; entries must be at least 3")));
                    }
                    if by_r.is_empty() {
                        return Err(FamilyError::BadParameters(format!("J_{k} must be nonempty")));
                    }
                    for (&r, ls) in by_r {
                        check_gen(rank, r, "element of J")?;
                        if let Some(l) = ls.iter().find(|&&l| l < 2 || l + 1 > k) {
                            return Err(FamilyError::BadParameters(format!("L_{k}^{r} contains {l}, outside 2..={}", k - 1)));
                        }
                    }
                }
            }
        }
        if let Some(d) = defect {
            if !d.applies_to(&variant) {
                return Err(FamilyError::BadParameters(format!("defect {d:?} does not apply to the {} family", variant.name())));
            }
        }
        Ok(BlueprintFamily { names: default_names(rank), matrix, variant, defect, quad_cache: RwLock::new(HashMap::new()) })
    }

    fn need_universal(matrix: &CoxeterMatrix, min_rank: usize) -> Result<(), FamilyError> {
        if !matrix.is_universal() {
            return Err(FamilyError::MatrixMismatch("this family needs the universal matrix (all m_st = inf)".into()));
        }
        if matrix.rank() < min_rank {
            return Err(FamilyError::MatrixMismatch(format!("rank {} is below the required {min_rank}", matrix.rank())));
        }
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, FamilyError> {
        if names.len() != self.matrix.rank() {
            return Err(FamilyError::BadParameters(format!("{} generator names for rank {}", names.len(), self.matrix.rank())));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() || names.iter().any(|n| n.is_empty()) {
            return Err(FamilyError::BadParameters("generator names must be distinct and nonempty".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn defect(&self) -> Option<Defect> {
        self.defect
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// A word spelled with this family's generator names, separated by dots
    /// unless every name is a single character.
    pub fn spell(&self, word: &[Gen]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) { "" } else { "." };
        word.iter().map(|&g| self.names[g as usize].as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Parses a word written with the generator names (optionally dot
    /// separated); `1` or the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>, FamilyError> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Vec::new());
        }
        let lookup = |token: &str| {
            self.names
                .iter()
                .position(|n| n == token)
                .map(|i| i as Gen)
                .ok_or_else(|| FamilyError::BadParameters(format!("unknown generator {token:?}; expected one of {:?}", self.names)))
        };
        if text.contains('.') {
            text.split('.').map(lookup).collect()
        } else if self.names.iter().all(|n| n.chars().count() == 1) {
            text.chars().map(|c| lookup(&c.to_string())).collect()
        } else {
            Err(FamilyError::BadParameters("multi-character generator names need dot separators".into()))
        }
    }

    /// `M^G_{alpha, beta}` for roots given by value.
    pub fn m_set(&self, gallery: &Gallery, alpha: &Root, beta: &Root) -> Result<OrderedMSet, FamilyError> {
        let roots = self.gallery_roots(gallery)?;
        let find = |x: &Root| roots.iter().position(|r| r == x).map(|p| p + 1).ok_or_else(|| FamilyError::NotInGallery(format!("{x:?}")));
        let (i, j) = (find(alpha)?, find(beta)?);
        self.m_set_at(gallery, &roots, i, j)
    }

    /// Crossed roots of `gallery` after checking it fits this family's matrix.
    pub fn gallery_roots(&self, gallery: &Gallery) -> Result<Vec<Root>, FamilyError> {
        if let Some(&g) = gallery.type_word().iter().find(|&&g| g as usize >= self.matrix.rank()) {
            return Err(FamilyError::MatrixMismatch(format!("gallery letter {g} outside rank {}", self.matrix.rank())));
        }
        Ok(gallery.crossed_roots(&self.matrix))
    }

    /// `M^G_{alpha_i, alpha_j}` with 1-based positions into `roots`, which
    /// must be the crossed roots of `gallery`.
    pub fn m_set_at(&self, gallery: &Gallery, roots: &[Root], i: usize, j: usize) -> Result<OrderedMSet, FamilyError> {
        if i == 0 || i > j || j > roots.len() {
            return Err(FamilyError::BadPositions { i, j, len: roots.len() });
        }
        if i == j {
            return Ok(OrderedMSet::default());
        }
        let (alpha, beta) = (&roots[i - 1], &roots[j - 1]);
        let mut content = self.content(roots, alpha, beta);
        content = self.apply_defect(gallery, roots, i, j, content);
        let mut positions = Vec::with_capacity(content.len());
        for root in &content {
            let p = roots.iter().position(|r| r == root).ok_or_else(|| FamilyError::NotInGallery(format!("{root:?}")))?;
            positions.push(p + 1);
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(OrderedMSet { roots: positions.iter().map(|&p| roots[p - 1].clone()).collect(), positions })
    }

    fn content(&self, roots: &[Root], alpha: &Root, beta: &Root) -> Vec<Root> {
        let m = &self.matrix;
        match &self.variant {
            Variant::Tits { s, t, levels } => {
                let mut hit = detect_alternating(m, alpha, beta, *s, *t);
                if hit.is_none() && self.defect == Some(Defect::MirroredPattern) {
                    hit = detect_alternating(m, alpha, beta, *t, *s);
                }
                hit.and_then(|h| levels.get(&h.k).map(|js| js.iter().map(|&j| h.even_root(j).clone()).collect())).unwrap_or_default()
            }
            Variant::Exotic { s0, s1 } => match detect_exotic(m, alpha, beta, *s0, *s1) {
                Some(h) => h.positions.iter().map(|&p| h.crossed[p - 1].clone()).collect(),
                None => Vec::new(),
            },
            Variant::Nil { n, letters } => {
                let Some(geodesic) = geodesic_between(m, alpha, beta) else { return Vec::new() };
                match parse_nil(geodesic.type_word(), *letters) {
                    Some(p) if p.j1 == p.i2 && n.admits(p.j2) => {
                        let at = p.position_of(p.i1, p.j2).expect("i1 < i2 puts (i1, j2) in the last column");
                        vec![geodesic.crossed_roots(m)[at - 1].clone()]
                    }
                    _ => Vec::new(),
                }
            }
            Variant::Quad { levels } => match m.pair_class(alpha, beta) {
                PairClass::Finite(_) => {
                    if self.defect == Some(Defect::CommutingDihedral) {
                        return Vec::new();
                    }
                    let open = m.open_interval(alpha, beta).expect("finite pair");
                    if open.len() == 2 {
                        open
                    } else {
                        Vec::new()
                    }
                }
                PairClass::Equal | PairClass::Opposite => Vec::new(),
                _ => match self.quad_hit(alpha, beta, roots) {
                    Some(hit) => match levels.get(&hit.n).and_then(|by_r| by_r.get(&hit.r)) {
                        Some(ls) => ls.iter().flat_map(|&l| hit.omegas[l - 1].iter().cloned()).collect(),
                        None => Vec::new(),
                    },
                    None => Vec::new(),
                },
            },
        }
    }

    fn quad_hit(&self, alpha: &Root, beta: &Root, pool: &[Root]) -> Option<QuadHit> {
        let key = (alpha.clone(), beta.clone());
        if let Some(hit) = self.quad_cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let hit = detect_type_nr_in_pool(&self.matrix, alpha, beta, pool).map(|h| QuadHit { n: h.n, r: h.r, omegas: h.omega_sets() });
        self.quad_cache.write().expect("cache lock").insert(key, hit.clone());
        hit
    }

    fn apply_defect(&self, gallery: &Gallery, roots: &[Root], i: usize, j: usize, content: Vec<Root>) -> Vec<Root> {
        let m = &self.matrix;
        match (self.defect, &self.variant) {
            (Some(Defect::FinalLetterGate), Variant::Tits { s, .. }) => {
                if gallery.type_word().last() == Some(s) {
                    content
                } else {
                    Vec::new()
                }
            }
            (Some(Defect::OriginGate), _) => {
                let alpha = &roots[i - 1];
                if alpha.reflection().len() == 1 && alpha.is_positive() {
                    content
                } else {
                    Vec::new()
                }
            }
            (Some(Defect::AsymmetricNested), Variant::Quad { .. }) => {
                let (alpha, beta) = (&roots[i - 1], &roots[j - 1]);
                if !content.is_empty() || beta.inner_panel(m).1 != 1 || !m.proper_subset(alpha, beta) {
                    return content;
                }
                roots[i..j - 1].iter().filter(|g| m.proper_subset(alpha, g) && m.proper_subset(g, beta)).cloned().collect()
            }
            _ => content,
        }
    }
}
