use std::fmt;

use crate::perm::{EdgeIndexing, Edges, Domain};

use super::OracleError;

/// Largest vertex count whose `C(n, 2)` pair bits fit in a `u64`.
pub const MAX_VERTICES: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Graph,
    Tournament,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Graph => "graphs",
            ObjectKind::Tournament => "tournaments",
        })
    }
}

/// A labelled structure on `[n]` stored as one bit per unordered pair, bit
/// `i` belonging to the pair with edge index `i`.
pub trait LabelledObject: Copy + Eq + fmt::Debug {
    const KIND: ObjectKind;

    fn degree(&self) -> usize;

    fn bits(&self) -> u64;

    /// Caller guarantees `n <= MAX_VERTICES` and `bits < 2^C(n,2)`.
    fn from_raw(n: usize, bits: u64) -> Self;

    fn bitstring(&self) -> Bitstring {
        Bitstring::new(Edges::size(self.degree()), self.bits())
    }
}

fn check_raw(n: usize, bits: u64) -> Result<(), OracleError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(OracleError::InvalidObject(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    if bits >> Edges::size(n) != 0 {
        return Err(OracleError::InvalidObject(format!(
            "bitstring wider than {} pairs",
            Edges::size(n)
        )));
    }
    Ok(())
}

/// A graph on `[n]`: bit `i` set iff edge `i` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    n: usize,
    edges: u64,
}

impl LabelledGraph {
    pub fn new(n: usize, edges: u64) -> Result<Self, OracleError> {
        check_raw(n, edges)?;
        Ok(Self { n, edges })
    }

    pub fn empty(n: usize) -> Result<Self, OracleError> {
        Self::new(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self, OracleError> {
        check_raw(n, 0)?;
        Ok(Self {
            n,
            edges: low_mask(Edges::size(n)),
        })
    }

    /// From 1-based edges `(u, v)` in either order. Duplicates are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, OracleError> {
        check_raw(n, 0)?;
        let idx = EdgeIndexing::new(n);
        let mut bits = 0u64;
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n || u == v {
                return Err(OracleError::InvalidObject(format!(
                    "edge ({u}, {v}) is not a pair of distinct vertices of 1..={n}"
                )));
            }
            bits |= 1 << idx.index(u - 1, v - 1);
        }
        Ok(Self { n, edges: bits })
    }

    /// 0-based endpoints.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges >> EdgeIndexing::new(self.n).index(u, v) & 1 == 1
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.count_ones()
    }

    /// 0-based endpoint pairs `(u, v)`, `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let idx = EdgeIndexing::new(self.n);
        idx.pairs()
            .enumerate()
            .filter(|&(i, _)| self.edges >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect()
    }
}

impl LabelledObject for LabelledGraph {
    const KIND: ObjectKind = ObjectKind::Graph;

    fn degree(&self) -> usize {
        self.n
    }

    fn bits(&self) -> u64 {
        self.edges
    }

    fn from_raw(n: usize, bits: u64) -> Self {
        Self { n, edges: bits }
    }
}

/// A tournament on `[n]`: for the pair `{u, v}`, `u < v`, bit set iff the
/// arc is `(u, v)`, clear iff it is `(v, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelledTournament {
    n: usize,
    orientations: u64,
}

impl LabelledTournament {
    pub fn new(n: usize, orientations: u64) -> Result<Self, OracleError> {
        check_raw(n, orientations)?;
        Ok(Self { n, orientations })
    }

    /// Every arc points from the lower to the higher vertex.
    pub fn transitive(n: usize) -> Result<Self, OracleError> {
        check_raw(n, 0)?;
        Ok(Self {
            n,
            orientations: low_mask(Edges::size(n)),
        })
    }

    /// 0-based endpoints.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        let forward = self.orientations >> EdgeIndexing::new(self.n).index(u, v) & 1 == 1;
        forward == (u < v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| v != u && self.has_arc(u, v)).count()
    }
}

impl LabelledObject for LabelledTournament {
    const KIND: ObjectKind = ObjectKind::Tournament;

    fn degree(&self) -> usize {
        self.n
    }

    fn bits(&self) -> u64 {
        self.orientations
    }

    fn from_raw(n: usize, bits: u64) -> Self {
        Self {
            n,
            orientations: bits,
        }
    }
}

/// A pair bitstring. Ordered by integer value with pair `i` weighted `2^i`;
/// printed as `'0'`/`'1'` characters in pair-index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring {
    len: usize,
    bits: u64,
}

impl Bitstring {
    pub fn new(len: usize, bits: u64) -> Self {
        debug_assert!(len <= 64 && (len == 64 || bits >> len == 0));
        Self { len, bits }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}
