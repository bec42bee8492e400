use crate::perm::{EdgeIndexing, Permutation};

use super::objects::{LabelledObject, ObjectKind};

/// A permutation together with its action on pair bitstrings.
#[derive(Debug, Clone)]
pub struct PairAction {
    perm: Permutation,
    edge_images: Vec<u8>,
    inversions: u64,
}

impl PairAction {
    pub fn new(perm: Permutation) -> Self {
        let idx = EdgeIndexing::new(perm.degree());
        let mut edge_images = Vec::with_capacity(idx.len());
        let mut inversions = 0u64;
        for (i, (u, v)) in idx.pairs().enumerate() {
            edge_images.push(idx.index(perm.image(u), perm.image(v)) as u8);
            if perm.is_inversion(u, v) {
                inversions |= 1 << i;
            }
        }
        Self {
            perm,
            edge_images,
            inversions,
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Mask of the pairs `{u, v}`, `u < v`, with `u^p > v^p`.
    pub fn inversions(&self) -> u64 {
        self.inversions
    }

    #[inline]
    pub fn edge_image(&self, e: usize) -> usize {
        self.edge_images[e] as usize
    }

    /// Moves bit `e` to bit `e^p`.
    #[inline]
    pub fn map_pairs(&self, mut bits: u64) -> u64 {
        let mut out = 0u64;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            out |= 1 << self.edge_images[e];
            bits &= bits - 1;
        }
        out
    }

    /// Relabels a raw bitstring of the given kind. For tournaments the
    /// orientation bit of an inverted pair flips.
    #[inline]
    pub fn act_bits(&self, kind: ObjectKind, bits: u64) -> u64 {
        match kind {
            ObjectKind::Graph => self.map_pairs(bits),
            ObjectKind::Tournament => self.map_pairs(bits ^ self.inversions),
        }
    }

    pub fn act<T: LabelledObject>(&self, x: &T) -> T {
        debug_assert_eq!(x.degree(), self.perm.degree());
        T::from_raw(x.degree(), self.act_bits(T::KIND, x.bits()))
    }

    #[inline]
    pub fn fixes(&self, kind: ObjectKind, bits: u64) -> bool {
        self.act_bits(kind, bits) == bits
    }
}

/// Every element of `Sym(n)` with its pair action, in lexicographic order.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    actions: Vec<PairAction>,
}

impl SymmetricGroup {
    /// Holds `n!` tables; intended for `n <= 8`.
    pub fn new(n: usize) -> Self {
        assert!((1..=9).contains(&n), "symmetric group table limited to n <= 9");
        Self {
            n,
            actions: Permutation::all(n).map(PairAction::new).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.actions.len()
    }

    pub fn actions(&self) -> &[PairAction] {
        &self.actions
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PairAction> {
        self.actions.iter()
    }

    /// The elements fixing `bits`.
    pub fn stabiliser(&self, kind: ObjectKind, bits: u64) -> impl Iterator<Item = &PairAction> {
        self.actions.iter().filter(move |a| a.fixes(kind, bits))
    }
}
