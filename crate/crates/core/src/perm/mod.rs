//! Permutations of `[n]`, their cycle types, and the actions they induce on
//! unordered pairs (edges) and ordered pairs (arcs) of vertices.
//!
//! Vertices are 0-based in every accessor. The constructors that mirror
//! mathematical notation ([`Permutation::from_images`] and
//! [`Permutation::from_cycles`]) take 1-based labels, and [`fmt::Display`]
//! prints 1-based disjoint-cycle notation.

mod cycle_type;
mod induced;

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

pub use cycle_type::CycleType;
pub use cycle_type::factorial;
pub use induced::{
    induced_arc_action, induced_edge_action, ArcIndexing, Arcs, Cycle, Domain, EdgeIndexing, Edges,
    InducedAction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("a permutation needs at least one point")]
    Empty,
    #[error("image {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
    #[error("not a bijection: {duplicated} appears twice and {missing} never appears")]
    NotBijective { duplicated: usize, missing: usize },
    #[error("the pair domain on {n} vertex(es) is empty")]
    EmptyDomain { n: usize },
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
}

/// A bijection of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "Sym(0) is not supported");
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i]` is the image of
    /// point `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        if let Some(&value) = images.iter().find(|&&v| v == 0 || v > n) {
            return Err(PermError::OutOfRange { value, n });
        }
        Self::from_zero_based(images.iter().map(|v| v - 1).collect())
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; n];
        let mut duplicated = None;
        for &v in &images {
            if v >= n {
                return Err(PermError::OutOfRange { value: v + 1, n });
            }
            if seen[v] && duplicated.is_none() {
                duplicated = Some(v);
            }
            seen[v] = true;
        }
        if let Some(d) = duplicated {
            let missing = seen.iter().position(|s| !s).expect("a duplicate implies a gap");
            return Err(PermError::NotBijective {
                duplicated: d + 1,
                missing: missing + 1,
            });
        }
        Ok(Self { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles written with
    /// 1-based labels, e.g. `from_cycles(5, &[&[1, 2], &[3, 4, 5]])`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::Empty);
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(PermError::OutOfRange { value: v, n });
                }
                if touched[v - 1] {
                    let missing = touched.iter().position(|t| !t).map_or(0, |m| m + 1);
                    return Err(PermError::NotBijective {
                        duplicated: v,
                        missing,
                    });
                }
                touched[v - 1] = true;
                images[v - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `v`.
    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The product `self · other` under the right action: apply `self`
    /// first, then `other`, so `v^(pq) = (v^p)^q`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycles on vertices, each starting at its smallest point,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k >= 1` with `p^k = 1`, as the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in a `u128` (degrees in the hundreds).
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| {
            let len = c.len() as u128;
            (acc / acc.gcd(&len))
                .checked_mul(len)
                .expect("permutation order overflows u128")
        })
    }

    pub fn cycle_type(&self) -> CycleType {
        let lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_lengths(&lengths).expect("cycle lengths always sum to the degree")
    }

    /// `true` when `{u, v}` with `u < v` is sent to a pair in the opposite
    /// order, i.e. `u^p > v^p`.
    #[inline]
    pub fn is_inversion(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < v);
        self.images[u] > self.images[v]
    }

    /// Every permutation of degree `n`, in lexicographic order of the image
    /// sequence (identity first).
    pub fn all(n: usize) -> AllPermutations {
        assert!(n >= 1, "Sym(0) is not supported");
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v + 1)?;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Iterator over `Sym(n)` in lexicographic order.
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
