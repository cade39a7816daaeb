use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::GroupError;

pub const MAX_GENERATORS: usize = 128;

/// Normal form `u_1^{e_1} ... u_k^{e_k}`; bit `i` (from the least significant
/// end) holds `e_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    bits: u128,
    k: u8,
}

impl GroupElement {
    pub fn identity(k: usize) -> Self {
        GroupElement { bits: 0, k: k as u8 }
    }

    pub fn from_bits(k: usize, bits: u128) -> Self {
        assert!(k == MAX_GENERATORS || bits >> k == 0, "bits beyond the generator count");
        GroupElement { bits, k: k as u8 }
    }

    /// From 0-based generator indices present in the normal form.
    pub fn from_indices(k: usize, indices: &[usize]) -> Self {
        let bits = indices.iter().fold(0u128, |acc, &i| {
            assert!(i < k, "index {i} out of range");
            acc | 1 << i
        });
        GroupElement { bits, k: k as u8 }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn is_identity(&self) -> bool {
        self.bits == 0
    }

    /// 0-based indices with exponent 1, increasing.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.bits >> i & 1 == 1).collect()
    }

    /// Exponent string with index 1 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.k()).map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("u{}", i + 1)).collect();
        write!(f, "{}", parts.join("·"))
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_bit_string())
    }
}

/// Which condition of the extension test failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    /// The candidate automorphism squares to the identity on `u_i`.
    C1,
    /// The image of `u_i` is an involution.
    C2,
    /// Images of `u_i`, `u_j` satisfy the commutator relation of `(i, j)`.
    C3,
}

/// Commutator table of `U_G`, with one label per generator.
#[derive(Clone, Debug)]
pub struct PresentationContext<L> {
    labels: Vec<L>,
    /// `columns[j][i]` (for `i < j`) is the commutator word of `(i, j)`, 0-based.
    columns: Vec<Vec<Vec<u8>>>,
}

impl<L> Default for PresentationContext<L> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<L> PresentationContext<L> {
    pub fn empty() -> Self {
        PresentationContext { labels: Vec::new(), columns: Vec::new() }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    /// Commutator word of `(i, j)`, `i < j`, as 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &[u8] {
        &self.columns[j][i]
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.k())
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        GroupElement::from_indices(self.k(), &[i])
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.k()).map(|i| self.generator(i)).collect()
    }

    fn check(&self, a: &GroupElement) -> Result<(), GroupError> {
        if a.k() == self.k() {
            Ok(())
        } else {
            Err(GroupError::ContextMismatch { expected: self.k(), found: a.k() })
        }
    }

    /// `x * u_j`, by moving `u_j` left across the larger generators of `x`.
    ///
    /// `u_y u_j = u_j u_y [u_y, u_j]` and `[u_y, u_j]` is the reversed table
    /// word of `(j, y)`; every index inserted lies strictly between `j` and
    /// `y`, so the recursion only ever descends to larger indices.
    fn mul_gen(&self, x: u128, j: usize) -> u128 {
        let low_mask = (1u128 << j) - 1;
        let mut out = (x & low_mask) ^ (x & (1u128 << j)) ^ (1u128 << j);
        let mut high = if j + 1 >= 128 { 0 } else { x >> (j + 1) << (j + 1) };
        while high != 0 {
            let y = high.trailing_zeros() as usize;
            high &= high - 1;
            out = self.mul_gen(out, y);
            for &p in self.columns[y][j].iter().rev() {
                out = self.mul_gen(out, p as usize);
            }
        }
        out
    }

    fn mul_bits(&self, a: u128, b: u128) -> u128 {
        let mut out = a;
        let mut rest = b;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out = self.mul_gen(out, j);
        }
        out
    }

    fn wrap(&self, bits: u128) -> GroupElement {
        GroupElement { bits, k: self.k() as u8 }
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_bits(a.bits, b.bits)))
    }

    /// Product of generators in the given order (0-based indices).
    pub fn word(&self, indices: &[usize]) -> GroupElement {
        self.wrap(indices.iter().fold(0u128, |acc, &i| self.mul_gen(acc, i)))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        let mut rev = a.indices();
        rev.reverse();
        Ok(self.word(&rev))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        let ai = self.inverse(a)?;
        let bi = self.inverse(b)?;
        let mut x = self.mul_bits(ai.bits, bi.bits);
        x = self.mul_bits(x, a.bits);
        x = self.mul_bits(x, b.bits);
        Ok(self.wrap(x))
    }

    pub(crate) fn mul_raw(&self, a: u128, b: u128) -> u128 {
        self.mul_bits(a, b)
    }

    pub(crate) fn inverse_raw(&self, a: u128) -> u128 {
        let mut out = 0u128;
        let mut rest = a;
        while rest != 0 {
            let j = 127 - rest.leading_zeros() as usize;
            rest &= !(1u128 << j);
            out = self.mul_gen(out, j);
        }
        out
    }

    pub(crate) fn commutator_raw(&self, a: u128, b: u128) -> u128 {
        let x = self.mul_bits(self.inverse_raw(a), self.inverse_raw(b));
        self.mul_bits(self.mul_bits(x, a), b)
    }

    /// Whether `a` commutes with every generator.
    pub fn is_central(&self, a: &GroupElement) -> Result<bool, GroupError> {
        self.check(a)?;
        Ok((0..self.k()).all(|i| {
            let g = 1u128 << i;
            self.mul_bits(a.bits, g) == self.mul_bits(g, a.bits)
        }))
    }

    /// Whether `[u_i, [u_j, u_l]] = 1` for all generator triples, which
    /// forces nilpotency class at most 2.
    pub fn class_at_most_2(&self) -> bool {
        let k = self.k();
        (0..k).all(|j| {
            (j + 1..k).all(|l| {
                let c = self.commutator_raw(1 << j, 1 << l);
                c == 0 || (0..k).all(|i| self.commutator_raw(1 << i, c) == 0)
            })
        })
    }

    /// Whether the table satisfies its own relations.
    pub fn relation_holds(&self, i: usize, j: usize, word: &[usize]) -> bool {
        let lhs = self.commutator_raw(1 << i, 1 << j);
        lhs == self.word(word).bits
    }

    fn format(&self, bits: u128) -> String {
        format!("{:?}", self.wrap(bits))
    }

    /// Adds generator `u_{k+1}` whose commutators with `u_i` are `column[i]`.
    ///
    /// Conjugation by the new generator is the map `phi(u_i) = u_i * prod(column[i])`.
    /// The extension exists exactly when `phi` extends to an involutive
    /// automorphism of the current group, which is checked through three
    /// conditions for every `0 <= i <= j < k`:
    ///
    /// * C1: `prod(column[i]) * phi(prod(column[i])) = 1`,
    /// * C2: `phi(u_i)^2 = 1`,
    /// * C3: `[phi(u_i), phi(u_j)] = phi(table word of (i, j))`.
    ///
    /// Error positions are 1-based.
    pub fn extend(&self, label: L, column: Vec<Vec<usize>>) -> Result<Self, GroupError>
    where
        L: Clone,
    {
        let k = self.k();
        if k >= MAX_GENERATORS {
            return Err(GroupError::TooManyGenerators { max: MAX_GENERATORS });
        }
        assert_eq!(column.len(), k, "one entry per existing generator");
        for (i, entry) in column.iter().enumerate() {
            let ok = entry.windows(2).all(|w| w[0] < w[1]) && entry.iter().all(|&p| p > i && p < k);
            if !ok {
                return Err(GroupError::BadEntry { i: i + 1, j: k + 1, entry: entry.iter().map(|p| p + 1).collect() });
            }
        }
        let prods: Vec<u128> = column.iter().map(|e| self.word(e).bits).collect();
        let image = |i: usize| self.mul_bits(1u128 << i, prods[i]);
        let phi_word = |w: &[usize]| w.iter().fold(0u128, |acc, &g| self.mul_bits(acc, image(g)));
        let fail = |condition, i: usize, j: usize, lhs: u128, rhs: u128| GroupError::ExtensionInconsistent {
            condition,
            i: i + 1,
            j: j + 1,
            lhs: self.format(lhs),
            rhs: self.format(rhs),
        };
        for i in 0..k {
            let c1 = self.mul_bits(prods[i], phi_word(&column[i]));
            if c1 != 0 {
                return Err(fail(Condition::C1, i, i, c1, 0));
            }
            let im = image(i);
            let c2 = self.mul_bits(im, im);
            if c2 != 0 {
                return Err(fail(Condition::C2, i, i, c2, 0));
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let lhs = self.commutator_raw(image(i), image(j));
                let word: Vec<usize> = self.columns[j][i].iter().map(|&p| p as usize).collect();
                let rhs = phi_word(&word);
                if lhs != rhs {
                    return Err(fail(Condition::C3, i, j, lhs, rhs));
                }
            }
        }
        let mut next = self.clone();
        next.labels.push(label);
        next.columns.push(column.into_iter().map(|e| e.into_iter().map(|p| p as u8).collect()).collect());
        Ok(next)
    }

    /// Builds a context without the extension checks. Only for constructing
    /// deliberately broken or externally certified tables.
    pub fn from_table_unchecked(labels: Vec<L>, table: impl Fn(usize, usize) -> Vec<usize>) -> Self {
        let k = labels.len();
        assert!(k <= MAX_GENERATORS);
        let columns = (0..k).map(|j| (0..j).map(|i| table(i, j).into_iter().map(|p| p as u8).collect()).collect()).collect();
        PresentationContext { labels, columns }
    }

    /// Generators whose commutator with `a` is not trivial, 0-based.
    pub fn non_commuting(&self, a: &GroupElement) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.commutator_raw(a.bits, 1 << i) != 0).collect()
    }
}

impl<L: Serialize> Serialize for PresentationContext<L> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            word: Vec<usize>,
        }
        let mut entries = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, w) in col.iter().enumerate() {
                if !w.is_empty() {
                    entries.push(Entry { i: i + 1, j: j + 1, word: w.iter().map(|&p| p as usize + 1).collect() });
                }
            }
        }
        entries.sort_by_key(|e| (e.i, e.j));
        let mut st = serializer.serialize_struct("PresentationContext", 3)?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("table", &entries)?;
        st.end()
    }
}
