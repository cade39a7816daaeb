//! Every minimal gallery of the ball together with its full table of M-sets.

use std::collections::HashMap;

use blueprint_families::{BlueprintFamily, FamilyError, OrderedMSet};
use coxeter_core::{Element, Gallery, Root};
use group_engine::{GroupError, PresentationContext};
use rayon::prelude::*;

/// `M^G_{alpha_i, alpha_j}` for all `1 <= i < j <= k`.
#[derive(Clone, Debug)]
pub struct MTable {
    k: usize,
    sets: Vec<OrderedMSet>,
}

impl MTable {
    pub fn compute(family: &BlueprintFamily, gallery: &Gallery, roots: &[Root]) -> Result<Self, FamilyError> {
        let k = roots.len();
        let mut sets = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for j in 2..=k {
            for i in 1..j {
                sets.push(family.m_set_at(gallery, roots, i, j)?);
            }
        }
        Ok(MTable { k, sets })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// 1-based, `i < j`.
    pub fn get(&self, i: usize, j: usize) -> &OrderedMSet {
        assert!(0 < i && i < j && j <= self.k, "({i}, {j}) outside the table of size {}", self.k);
        &self.sets[(j - 1) * (j - 2) / 2 + (i - 1)]
    }

    /// 0-based positions of `M_{i, j}`, ready for a group word.
    pub fn word(&self, i: usize, j: usize) -> Vec<usize> {
        self.get(i, j).positions.iter().map(|p| p - 1).collect()
    }
}

#[derive(Clone, Debug)]
pub struct GalleryData {
    pub gallery: Gallery,
    pub roots: Vec<Root>,
    pub table: MTable,
}

impl GalleryData {
    pub fn compute(family: &BlueprintFamily, gallery: Gallery) -> Result<Self, FamilyError> {
        let roots = family.gallery_roots(&gallery)?;
        let table = MTable::compute(family, &gallery, &roots)?;
        Ok(GalleryData { gallery, roots, table })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The chain `U_{G_1} < U_{G_2} < ... < U_G` built by extension, each step
    /// using the commutator words of `G` itself. Stops at the first failure,
    /// returning the contexts built so far and the failing step (1-based).
    pub fn extension_chain(&self) -> (Vec<PresentationContext<usize>>, Option<(usize, GroupError)>) {
        let mut chain = vec![PresentationContext::empty()];
        for k in 1..=self.len() {
            let column = (1..k).map(|i| self.table.word(i, k)).collect();
            match chain.last().expect("nonempty").extend(k, column) {
                Ok(next) => chain.push(next),
                Err(e) => return (chain, Some((k, e))),
            }
        }
        (chain, None)
    }
}

/// One element of the ball with all of its minimal galleries.
#[derive(Clone, Debug)]
pub struct Cell {
    pub w: Element,
    pub galleries: Vec<GalleryData>,
}

/// The ball of radius `depth` in `(length, ShortLex)` order.
pub struct Atlas {
    pub depth: usize,
    pub sphere_sizes: Vec<usize>,
    pub cells: Vec<Cell>,
    index: HashMap<Vec<u8>, (usize, usize)>,
}

impl Atlas {
    pub fn build(family: &BlueprintFamily, depth: usize) -> Result<Self, FamilyError> {
        let spheres = family.matrix().spheres(depth);
        let sphere_sizes = spheres.iter().map(Vec::len).collect();
        let mut atlas = Self::from_elements(family, spheres.into_iter().flatten().collect())?;
        atlas.depth = depth;
        atlas.sphere_sizes = sphere_sizes;
        Ok(atlas)
    }

    /// The given elements only, sorted and deduplicated; `sphere_sizes` stays empty.
    pub fn from_elements(family: &BlueprintFamily, mut words: Vec<Element>) -> Result<Self, FamilyError> {
        let m = family.matrix();
        words.sort();
        words.dedup();
        let depth = words.last().map_or(0, Element::len);
        let cells = words
            .into_par_iter()
            .map(|w| {
                let galleries = m.min_galleries(&w).into_iter().map(|g| GalleryData::compute(family, g)).collect::<Result<Vec<_>, _>>()?;
                Ok(Cell { w, galleries })
            })
            .collect::<Result<Vec<_>, FamilyError>>()?;
        let mut index = HashMap::new();
        for (c, cell) in cells.iter().enumerate() {
            for (g, data) in cell.galleries.iter().enumerate() {
                index.insert(data.gallery.type_word().to_vec(), (c, g));
            }
        }
        Ok(Atlas { depth, sphere_sizes: Vec::new(), cells, index })
    }

    pub fn ball_size(&self) -> usize {
        self.cells.len()
    }

    pub fn gallery_count(&self) -> usize {
        self.cells.iter().map(|c| c.galleries.len()).sum()
    }

    /// Galleries in order, each with the element it reaches.
    pub fn galleries(&self) -> Vec<(&Element, &GalleryData)> {
        self.cells.iter().flat_map(|c| c.galleries.iter().map(move |g| (&c.w, g))).collect()
    }

    pub fn lookup(&self, type_word: &[u8]) -> Option<&GalleryData> {
        self.index.get(type_word).map(|&(c, g)| &self.cells[c].galleries[g])
    }
}
