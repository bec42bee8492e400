use std::fmt;
use std::marker::PhantomData;

use super::{PermError, Permutation};

/// A set of vertex pairs that `Sym(n)` acts on.
pub trait Domain: Copy + fmt::Debug + Eq + std::hash::Hash {
    fn size(n: usize) -> usize;
}

/// Unordered pairs `{u, v}`, `u < v`, indexed lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edges;

/// Ordered pairs `(u, v)`, `u != v`, indexed lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arcs;

impl Domain for Edges {
    fn size(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }
}

impl Domain for Arcs {
    fn size(n: usize) -> usize {
        n * n.saturating_sub(1)
    }
}

/// Bijection between `0..C(n,2)` and unordered pairs in lexicographic order:
/// `{0,1} -> 0, {0,2} -> 1, .., {n-2,n-1} -> C(n,2)-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeIndexing {
    n: usize,
}

impl EdgeIndexing {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn len(&self) -> usize {
        Edges::size(self.n)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of `{u, v}`; the endpoints may be given in either order.
    #[inline]
    pub fn index(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        debug_assert!(u != v && v < self.n);
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    /// The pair `(u, v)` with `u < v` at index `i`.
    pub fn pair(&self, mut i: usize) -> (usize, usize) {
        debug_assert!(i < self.len());
        let mut u = 0;
        while i >= self.n - u - 1 {
            i -= self.n - u - 1;
            u += 1;
        }
        (u, u + 1 + i)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }
}

/// Bijection between `0..n(n-1)` and ordered pairs in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcIndexing {
    n: usize,
}

impl ArcIndexing {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn len(&self) -> usize {
        Arcs::size(self.n)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v && u < self.n && v < self.n);
        u * (self.n - 1) + if v < u { v } else { v - 1 }
    }

    #[inline]
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let u = i / (self.n - 1);
        let r = i % (self.n - 1);
        (u, if r < u { r } else { r + 1 })
    }

    /// Index of the reversed arc.
    #[inline]
    pub fn reverse(&self, i: usize) -> usize {
        let (u, v) = self.arc(i);
        self.index(v, u)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
    }
}

/// The permutation `g_E` or `g_A` induced by some `g ∈ Sym(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedAction<D: Domain> {
    n: usize,
    images: Vec<usize>,
    _domain: PhantomData<D>,
}

pub fn induced_edge_action(p: &Permutation) -> Result<InducedAction<Edges>, PermError> {
    let n = p.degree();
    if n < 2 {
        return Err(PermError::EmptyDomain { n });
    }
    let idx = EdgeIndexing::new(n);
    let images = idx
        .pairs()
        .map(|(u, v)| idx.index(p.image(u), p.image(v)))
        .collect();
    Ok(InducedAction {
        n,
        images,
        _domain: PhantomData,
    })
}

pub fn induced_arc_action(p: &Permutation) -> Result<InducedAction<Arcs>, PermError> {
    let n = p.degree();
    if n < 2 {
        return Err(PermError::EmptyDomain { n });
    }
    let idx = ArcIndexing::new(n);
    let images = idx
        .arcs()
        .map(|(u, v)| idx.index(p.image(u), p.image(v)))
        .collect();
    Ok(InducedAction {
        n,
        images,
        _domain: PhantomData,
    })
}

impl<D: Domain> InducedAction<D> {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The cycles, fixed points included, each starting at its smallest
    /// index and listed in order of that index.
    pub fn cycles(&self) -> Vec<Cycle<D>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut elements = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                elements.push(i);
                i = self.images[i];
            }
            out.push(Cycle {
                n: self.n,
                elements,
                _domain: PhantomData,
            });
        }
        out
    }
}

/// One cycle of an induced action, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle<D: Domain> {
    n: usize,
    elements: Vec<usize>,
    _domain: PhantomData<D>,
}

impl<D: Domain> Cycle<D> {
    /// A cycle given in traversal order; it is rotated to start at its
    /// smallest index.
    pub fn new(n: usize, mut elements: Vec<usize>) -> Self {
        assert!(!elements.is_empty(), "a cycle has at least one element");
        let start = elements
            .iter()
            .enumerate()
            .min_by_key(|&(_, e)| *e)
            .map(|(i, _)| i)
            .unwrap();
        elements.rotate_left(start);
        Self {
            n,
            elements,
            _domain: PhantomData,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(&i)
    }
}

impl Cycle<Edges> {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let idx = EdgeIndexing::new(self.n);
        self.elements.iter().map(|&e| idx.pair(e)).collect()
    }

    /// Number of edges `{u, v}` (`u < v`) in this cycle with `u^p > v^p`.
    pub fn inversion_count(&self, p: &Permutation) -> usize {
        self.pairs()
            .into_iter()
            .filter(|&(u, v)| p.is_inversion(u, v))
            .count()
    }
}

impl Cycle<Arcs> {
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let idx = ArcIndexing::new(self.n);
        self.elements.iter().map(|&a| idx.arc(a)).collect()
    }

    /// `C = C̄`: the reversed arcs of the cycle are the cycle's own arcs.
    pub fn is_self_paired(&self) -> bool {
        let idx = ArcIndexing::new(self.n);
        let mut own = self.elements.clone();
        own.sort_unstable();
        let mut reversed: Vec<usize> = self.elements.iter().map(|&a| idx.reverse(a)).collect();
        reversed.sort_unstable();
        own == reversed
    }

    /// Forget orientation. A self-paired cycle `(a_1..a_k, ā_1..ā_k)` maps to
    /// the edge cycle `(e(a_1)..e(a_k))` of half its length.
    pub fn undirected_image(&self) -> Cycle<Edges> {
        let arcs = ArcIndexing::new(self.n);
        let edges = EdgeIndexing::new(self.n);
        let take = if self.is_self_paired() {
            self.elements.len() / 2
        } else {
            self.elements.len()
        };
        let elements = self.elements[..take]
            .iter()
            .map(|&a| {
                let (u, v) = arcs.arc(a);
                edges.index(u, v)
            })
            .collect();
        Cycle::new(self.n, elements)
    }
}

impl fmt::Display for Cycle<Edges> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (u, v)) in self.pairs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{},{}}}", u + 1, v + 1)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Cycle<Arcs> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (u, v)) in self.arcs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", u + 1, v + 1)?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> Permutation {
        Permutation::from_images(&[2, 3, 4, 1]).unwrap()
    }

    #[test]
    fn edge_indexing_is_lexicographic() {
        let idx = EdgeIndexing::new(5);
        assert_eq!(idx.len(), 10);
        assert_eq!(idx.index(0, 1), 0);
        for (i, (u, v)) in idx.pairs().enumerate() {
            assert_eq!(idx.index(u, v), i);
            assert_eq!(idx.index(v, u), i);
            assert_eq!(idx.pair(i), (u, v));
        }
    }

    #[test]
    fn arc_indexing_round_trips() {
        let idx = ArcIndexing::new(4);
        assert_eq!(idx.len(), 12);
        for (i, (u, v)) in idx.arcs().enumerate() {
            assert_eq!(idx.index(u, v), i);
            assert_eq!(idx.arc(i), (u, v));
            assert_ne!(idx.reverse(i), i);
            assert_eq!(idx.reverse(idx.reverse(i)), i);
        }
    }

    #[test]
    fn edge_action_of_four_cycle() {
        let ge = induced_edge_action(&four_cycle()).unwrap();
        let cycles = ge.cycles();
        let shown: Vec<String> = cycles.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["({1,2},{2,3},{3,4},{1,4})", "({1,3},{2,4})"]);
        assert_eq!(cycles.iter().map(Cycle::len).collect::<Vec<_>>(), [4, 2]);
    }

    #[test]
    fn edge_action_of_transposition() {
        let g = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ge = induced_edge_action(&g).unwrap();
        let idx = EdgeIndexing::new(3);
        assert_eq!(ge.image(idx.index(0, 1)), idx.index(0, 1));
        assert_eq!(ge.image(idx.index(0, 2)), idx.index(1, 2));
        assert_eq!(ge.image(idx.index(1, 2)), idx.index(0, 2));
    }

    #[test]
    fn identity_actions() {
        let id = Permutation::identity(4);
        let ge = induced_edge_action(&id).unwrap();
        assert!(ge.is_identity());
        assert_eq!(ge.cycles().len(), 6);
        let ga = induced_arc_action(&id).unwrap();
        assert!(ga.is_identity());
        assert_eq!(ga.len(), 12);
    }

    #[test]
    fn empty_domain_rejected() {
        let id = Permutation::identity(1);
        assert_eq!(
            induced_edge_action(&id),
            Err(PermError::EmptyDomain { n: 1 })
        );
        assert!(induced_arc_action(&id).is_err());
    }

    #[test]
    fn arc_action_of_four_cycle() {
        let ga = induced_arc_action(&four_cycle()).unwrap();
        let cycles = ga.cycles();
        let shown: Vec<String> = cycles.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            [
                "((1,2),(2,3),(3,4),(4,1))",
                "((1,3),(2,4),(3,1),(4,2))",
                "((1,4),(2,1),(3,2),(4,3))",
            ]
        );
        let self_paired: Vec<bool> = cycles.iter().map(Cycle::is_self_paired).collect();
        assert_eq!(self_paired, [false, true, false]);
    }

    #[test]
    fn swap_on_two_points() {
        let g = Permutation::from_images(&[2, 1]).unwrap();
        let cycles = induced_arc_action(&g).unwrap().cycles();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].to_string(), "((1,2),(2,1))");
        assert!(cycles[0].is_self_paired());
    }

    #[test]
    fn undirected_images_of_four_cycle() {
        let ga = induced_arc_action(&four_cycle()).unwrap().cycles();
        assert_eq!(ga[0].undirected_image().to_string(), "({1,2},{2,3},{3,4},{1,4})");
        assert_eq!(ga[1].undirected_image().to_string(), "({1,3},{2,4})");
        assert_eq!(ga[2].undirected_image(), ga[0].undirected_image());

        let fixed = induced_arc_action(&Permutation::identity(3)).unwrap().cycles();
        let image = fixed[0].undirected_image();
        assert_eq!(image.len(), 1);
    }

    #[test]
    fn inversions_in_edge_cycles() {
        let g = four_cycle();
        let ge = induced_edge_action(&g).unwrap().cycles();
        assert_eq!(ge[0].inversion_count(&g), 2);
        assert_eq!(ge[1].inversion_count(&g), 1);
        let id = Permutation::identity(4);
        for c in induced_edge_action(&id).unwrap().cycles() {
            assert_eq!(c.inversion_count(&id), 0);
        }
    }

    #[test]
    fn odd_length_cycles_are_never_self_paired() {
        let g = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        for c in induced_arc_action(&g).unwrap().cycles() {
            if c.len() % 2 == 1 {
                assert!(!c.is_self_paired());
            }
        }
    }
}
