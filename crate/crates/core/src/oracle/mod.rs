//! Brute-force ground truth on small vertex counts.
//!
//! Everything here is computed by exhaustion over labelled objects and
//! `Sym(n)`: isomorphism classes by orbit partition, automorphism groups by
//! filtering, parity by inspecting signs. Nothing calls into
//! [`crate::count`]'s formulas, so the two can be compared.
//!
//! Edges are oriented from the lower to the higher vertex, so an edge has its
//! sense reversed by `g` exactly when it is an inversion of `g`.

mod group;
mod objects;
mod union_find;

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::count::CountReport;
use crate::perm::{induced_arc_action, induced_edge_action, Domain, Edges, Permutation};

pub use group::{PairAction, SymmetricGroup};
pub use objects::{
    Bitstring, LabelledGraph, LabelledObject, LabelledTournament, ObjectKind, MAX_VERTICES,
};
pub use union_find::UnionFind;

pub const DEFAULT_SEED: u64 = 0x5eed_2022;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid labelled object: {0}")]
    InvalidObject(String),
    #[error("permutation has degree {found}, object has {expected} vertices")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what} is limited to n <= {cap}, got n = {n}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("{perm} is not an automorphism")]
    NotAutomorphism { perm: String },
}

/// Vertex-count limits for each kind of exhaustive computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Canonical forms, automorphism groups and parity of a single graph.
    pub graph_canonical: usize,
    pub tournament_canonical: usize,
    /// Orbit partition of all `2^C(n,2)` labelled objects.
    pub classes: usize,
    /// Fixed-point and double-count scans over every labelled object for
    /// every group element.
    pub fixed_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            graph_canonical: 8,
            tournament_canonical: 7,
            classes: 7,
            fixed_points: 5,
        }
    }
}

impl Limits {
    /// Every limit set to `cap`, clamped to what the bit representation holds.
    pub fn uniform(cap: usize) -> Self {
        let cap = cap.min(MAX_VERTICES);
        Self {
            graph_canonical: cap,
            tournament_canonical: cap,
            classes: cap,
            fixed_points: cap,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity((self == Sign::Minus) != (rhs == Sign::Minus))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Even, or odd together with an automorphism of sign −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityVerdict {
    pub parity: Parity,
    pub witness: Option<Permutation>,
}

/// Both sides of the odd-graph double count at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCount {
    pub n: usize,
    /// `|{(X, g) : g an odd automorphism of X}|` by enumeration.
    pub enumerated_pairs: u64,
    /// `Σ_{|g| even} 2^{c(g_E) - 1}`.
    pub formula_pairs: u64,
    /// Odd isomorphism classes found by orbit partition.
    pub odd_classes: u64,
    /// `odd_classes · n! / 2`.
    pub class_pairs: u64,
    /// First element whose own pair count differs from its formula term.
    pub per_element_mismatch: Option<Permutation>,
}

impl DoubleCount {
    pub fn holds(&self) -> bool {
        self.enumerated_pairs == self.formula_pairs
            && self.formula_pairs == self.class_pairs
            && self.per_element_mismatch.is_none()
    }
}

/// Parity of the number of edges of `graph` whose sense `action` reverses
/// under `orientation` (bit set: pair oriented low to high).
pub fn reversal_parity(graph: u64, action: &PairAction, orientation: u64) -> bool {
    let mut reversed = 0u32;
    let mut bits = graph;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        let image_forward = (orientation >> e & 1 == 1) != (action.inversions() >> e & 1 == 1);
        let target_forward = orientation >> action.edge_image(e) & 1 == 1;
        if image_forward != target_forward {
            reversed += 1;
        }
        bits &= bits - 1;
    }
    reversed % 2 == 1
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    limits: Limits,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Self { limits }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    fn canonical_cap(&self, kind: ObjectKind) -> usize {
        match kind {
            ObjectKind::Graph => self.limits.graph_canonical,
            ObjectKind::Tournament => self.limits.tournament_canonical,
        }
    }

    fn check(&self, what: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
        if n > cap {
            return Err(OracleError::ResourceLimit { what, n, cap });
        }
        Ok(())
    }

    /// Relabels `x` by `p`.
    pub fn apply<T: LabelledObject>(&self, p: &Permutation, x: &T) -> Result<T, OracleError> {
        if p.degree() != x.degree() {
            return Err(OracleError::DegreeMismatch {
                expected: x.degree(),
                found: p.degree(),
            });
        }
        Ok(PairAction::new(p.clone()).act(x))
    }

    /// The minimal bitstring over all `n!` relabellings.
    pub fn canonical_form<T: LabelledObject>(&self, x: &T) -> Result<Bitstring, OracleError> {
        let n = x.degree();
        self.check("canonical form", n, self.canonical_cap(T::KIND))?;
        let best = Permutation::all(n)
            .map(|p| PairAction::new(p).act_bits(T::KIND, x.bits()))
            .min()
            .expect("Sym(n) is nonempty");
        Ok(Bitstring::new(Edges::size(n), best))
    }

    /// Orbit partition of every labelled object on `[n]` under the
    /// generators `(1,2)` and `(1,2,..,n)` of `Sym(n)`.
    pub fn orbits(&self, n: usize, kind: ObjectKind) -> Result<UnionFind, OracleError> {
        self.check("orbit enumeration", n, self.limits.classes)?;
        if n == 0 {
            return Err(OracleError::InvalidObject("n = 0".into()));
        }
        let m = Edges::size(n);
        let mut uf = UnionFind::new(1usize << m);
        if n >= 2 {
            let swap = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
            let rotation: Vec<usize> = (1..=n).collect();
            let rotation = Permutation::from_cycles(n, &[&rotation]).unwrap();
            let generators = [PairAction::new(swap), PairAction::new(rotation)];
            for x in 0..1u64 << m {
                for g in &generators {
                    uf.union(x as usize, g.act_bits(kind, x) as usize);
                }
            }
        }
        Ok(uf)
    }

    /// One canonical representative per isomorphism class, ascending.
    pub fn isomorphism_classes(
        &self,
        n: usize,
        kind: ObjectKind,
    ) -> Result<Vec<Bitstring>, OracleError> {
        let mut uf = self.orbits(n, kind)?;
        let group = SymmetricGroup::new(n);
        let mut reps: Vec<Bitstring> = uf
            .roots()
            .into_iter()
            .map(|x| {
                let best = group
                    .iter()
                    .map(|a| a.act_bits(kind, x as u64))
                    .min()
                    .unwrap();
                Bitstring::new(Edges::size(n), best)
            })
            .collect();
        reps.sort_unstable();
        reps.dedup();
        Ok(reps)
    }

    /// Every permutation fixing `x`, in lexicographic order.
    pub fn automorphism_group<T: LabelledObject>(
        &self,
        x: &T,
    ) -> Result<Vec<Permutation>, OracleError> {
        let n = x.degree();
        self.check("automorphism group", n, self.canonical_cap(T::KIND))?;
        Ok(Permutation::all(n)
            .filter_map(|p| {
                let a = PairAction::new(p);
                a.fixes(T::KIND, x.bits()).then(|| a.perm().clone())
            })
            .collect())
    }

    /// `sgn_X(p)`: −1 to the number of edges of `x` that are inversions of `p`.
    pub fn sign_of_automorphism(
        &self,
        x: &LabelledGraph,
        p: &Permutation,
    ) -> Result<Sign, OracleError> {
        let action = self.automorphism_action(x, p)?;
        Ok(Sign::from_parity(
            (x.bits() & action.inversions()).count_ones() % 2 == 1,
        ))
    }

    fn automorphism_action(
        &self,
        x: &LabelledGraph,
        p: &Permutation,
    ) -> Result<PairAction, OracleError> {
        if p.degree() != x.degree() {
            return Err(OracleError::DegreeMismatch {
                expected: x.degree(),
                found: p.degree(),
            });
        }
        let action = PairAction::new(p.clone());
        if !action.fixes(ObjectKind::Graph, x.bits()) {
            return Err(OracleError::NotAutomorphism {
                perm: p.to_string(),
            });
        }
        Ok(action)
    }

    /// Odd with the first (lexicographic) automorphism of sign −1, or even.
    pub fn classify_parity(&self, x: &LabelledGraph) -> Result<ParityVerdict, OracleError> {
        self.check("parity classification", x.degree(), self.limits.graph_canonical)?;
        let witness = Permutation::all(x.degree()).map(PairAction::new).find(|a| {
            a.fixes(ObjectKind::Graph, x.bits())
                && (x.bits() & a.inversions()).count_ones() % 2 == 1
        });
        Ok(match witness {
            Some(a) => ParityVerdict {
                parity: Parity::Odd,
                witness: Some(a.perm().clone()),
            },
            None => ParityVerdict {
                parity: Parity::Even,
                witness: None,
            },
        })
    }

    /// `(enumerated, formula)` numbers of labelled objects fixed by `p`. The
    /// formula is `2^{c(g_E)}` for graphs, and for tournaments `0` when `|p|`
    /// is even, `2^{c(g_A)/2}` otherwise.
    pub fn fixed_count_check(
        &self,
        p: &Permutation,
        kind: ObjectKind,
    ) -> Result<(BigUint, BigUint), OracleError> {
        let n = p.degree();
        self.check("fixed-point enumeration", n, self.limits.fixed_points)?;
        let action = PairAction::new(p.clone());
        let enumerated = (0..1u64 << Edges::size(n))
            .filter(|&x| action.fixes(kind, x))
            .count();
        let one = BigUint::from(1u32);
        let formula = match kind {
            ObjectKind::Graph => {
                let c = if n < 2 {
                    0
                } else {
                    induced_edge_action(p).unwrap().cycles().len()
                };
                one << c
            }
            ObjectKind::Tournament if p.order() % 2 == 0 => BigUint::from(0u32),
            ObjectKind::Tournament => {
                let c = if n < 2 {
                    0
                } else {
                    induced_arc_action(p).unwrap().cycles().len()
                };
                one << (c / 2)
            }
        };
        Ok((BigUint::from(enumerated), formula))
    }

    /// `true` iff every one of `trials` random orientations of `x` gives the
    /// same reversal parity under `p` as the low-to-high orientation.
    pub fn orientation_parity_check(
        &self,
        x: &LabelledGraph,
        p: &Permutation,
        trials: usize,
        seed: u64,
    ) -> Result<bool, OracleError> {
        let action = self.automorphism_action(x, p)?;
        let all_pairs = objects::low_mask(Edges::size(x.degree()));
        let reference = reversal_parity(x.bits(), &action, all_pairs);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok((0..trials).all(|_| {
            let orientation = rng.gen::<u64>() & all_pairs;
            reversal_parity(x.bits(), &action, orientation) == reference
        }))
    }

    /// The four class counts computed by orbit partition and per-class parity
    /// classification.
    pub fn brute_counts(&self, n: usize) -> Result<CountReport, OracleError> {
        let (graph_roots, odd) = self.graph_classes_by_parity(n)?;
        let graphs = graph_roots.len() as u64;
        let tournaments = self.orbits(n, ObjectKind::Tournament)?.roots().len() as u64;
        Ok(CountReport::new(
            n,
            graphs.into(),
            tournaments.into(),
            odd.into(),
            (graphs - odd).into(),
        ))
    }

    /// Class representatives (orbit roots) of graphs on `[n]`, and how many
    /// of them are odd.
    fn graph_classes_by_parity(&self, n: usize) -> Result<(Vec<usize>, u64), OracleError> {
        let roots = self.orbits(n, ObjectKind::Graph)?.roots();
        let group = SymmetricGroup::new(n);
        let odd = roots
            .iter()
            .filter(|&&x| is_odd_graph(&group, x as u64))
            .count() as u64;
        Ok((roots, odd))
    }

    /// Parity of every graph class representative (as raw bits) on `[n]`.
    pub fn graph_classes_with_parity(
        &self,
        n: usize,
    ) -> Result<Vec<(Bitstring, Parity)>, OracleError> {
        let group = SymmetricGroup::new(n.max(1));
        Ok(self
            .isomorphism_classes(n, ObjectKind::Graph)?
            .into_iter()
            .map(|b| {
                let parity = if is_odd_graph(&group, b.bits()) {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                (b, parity)
            })
            .collect())
    }

    /// Both sides of `K·n!/2 = Σ_{|g| even} 2^{c(g_E)-1}`, where `K` is the
    /// number of odd classes, plus the enumerated pair count.
    pub fn double_count(&self, n: usize) -> Result<DoubleCount, OracleError> {
        self.check("double count", n, self.limits.fixed_points)?;
        let group = SymmetricGroup::new(n);
        let m = Edges::size(n);
        let mut enumerated_pairs = 0u64;
        let mut formula_pairs = 0u64;
        let mut per_element_mismatch = None;
        for action in group.iter() {
            let pairs = (0..1u64 << m)
                .filter(|&x| {
                    action.fixes(ObjectKind::Graph, x)
                        && (x & action.inversions()).count_ones() % 2 == 1
                })
                .count() as u64;
            enumerated_pairs += pairs;
            let g = action.perm();
            let expected = if g.order() % 2 == 0 {
                let c = induced_edge_action(g).unwrap().cycles().len();
                1u64 << (c - 1)
            } else {
                0
            };
            formula_pairs += expected;
            if pairs != expected && per_element_mismatch.is_none() {
                per_element_mismatch = Some(g.clone());
            }
        }
        let (_, odd_classes) = self.graph_classes_by_parity(n)?;
        let n_factorial = group.order() as u64;
        Ok(DoubleCount {
            n,
            enumerated_pairs,
            formula_pairs,
            odd_classes,
            class_pairs: odd_classes * n_factorial / 2,
            per_element_mismatch,
        })
    }
}

/// `true` if some element of `group` is an automorphism of the graph with
/// sign −1.
pub fn is_odd_graph(group: &SymmetricGroup, graph: u64) -> bool {
    group.iter().any(|a| {
        a.fixes(ObjectKind::Graph, graph) && (graph & a.inversions()).count_ones() % 2 == 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle() -> Oracle {
        Oracle::default()
    }

    fn perm(cycles: &[&[usize]], n: usize) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn four_cycle_graph() -> LabelledGraph {
        LabelledGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let o = oracle();
        let x = four_cycle_graph();
        assert_eq!(o.apply(&Permutation::identity(4), &x).unwrap(), x);
        let k2 = LabelledGraph::complete(2).unwrap();
        assert_eq!(o.apply(&perm(&[&[1, 2]], 2), &k2).unwrap(), k2);
        let path = LabelledGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let moved = o.apply(&perm(&[&[1, 2, 3, 4]], 4), &path).unwrap();
        assert_eq!(moved, LabelledGraph::from_edges(4, &[(2, 3), (3, 4), (1, 4)]).unwrap());
        assert_eq!(
            o.apply(&Permutation::identity(3), &path),
            Err(OracleError::DegreeMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn apply_is_a_right_action() {
        let o = oracle();
        let x = LabelledGraph::from_edges(4, &[(1, 2), (2, 4)]).unwrap();
        let p = perm(&[&[1, 2, 3]], 4);
        let q = perm(&[&[2, 4]], 4);
        let lhs = o.apply(&p.then(&q), &x).unwrap();
        let rhs = o.apply(&q, &o.apply(&p, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_examples() {
        let o = oracle();
        for n in 1..=5 {
            let c = o.canonical_form(&LabelledGraph::empty(n).unwrap()).unwrap();
            assert_eq!(c.bits(), 0);
        }
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            let x = LabelledGraph::from_edges(3, &[(u, v)]).unwrap();
            assert_eq!(o.canonical_form(&x).unwrap().to_string(), "100");
        }
        // 1->2->3->1 and 1->3->2->1
        let a = LabelledTournament::new(3, 0b101).unwrap();
        let b = LabelledTournament::new(3, 0b010).unwrap();
        assert_eq!(o.canonical_form(&a).unwrap(), o.canonical_form(&b).unwrap());
        let t = LabelledTournament::transitive(3).unwrap();
        assert_ne!(o.canonical_form(&a).unwrap(), o.canonical_form(&t).unwrap());
    }

    #[test]
    fn canonical_form_respects_caps() {
        let o = oracle();
        let x = LabelledGraph::empty(9).unwrap();
        assert!(matches!(
            o.canonical_form(&x),
            Err(OracleError::ResourceLimit { n: 9, cap: 8, .. })
        ));
        let t = LabelledTournament::transitive(8).unwrap();
        assert!(o.canonical_form(&t).is_err());
    }

    #[test]
    fn class_lists() {
        let o = oracle();
        assert_eq!(o.isomorphism_classes(4, ObjectKind::Graph).unwrap().len(), 11);
        assert_eq!(o.isomorphism_classes(4, ObjectKind::Tournament).unwrap().len(), 4);
        assert_eq!(o.isomorphism_classes(1, ObjectKind::Graph).unwrap().len(), 1);
        let reps = o.isomorphism_classes(3, ObjectKind::Graph).unwrap();
        assert!(reps.windows(2).all(|w| w[0] < w[1]));
        for r in &reps {
            let x = LabelledGraph::new(3, r.bits()).unwrap();
            assert_eq!(o.canonical_form(&x).unwrap(), *r);
        }
    }

    #[test]
    fn automorphism_examples() {
        let o = oracle();
        assert_eq!(
            o.automorphism_group(&LabelledGraph::empty(4).unwrap()).unwrap().len(),
            24
        );
        let path = LabelledGraph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let aut = o.automorphism_group(&path).unwrap();
        assert_eq!(aut, vec![Permutation::identity(3), perm(&[&[1, 3]], 3)]);
        let cyclic = LabelledTournament::new(3, 0b101).unwrap();
        assert_eq!(o.automorphism_group(&cyclic).unwrap().len(), 3);
    }

    #[test]
    fn signs() {
        let o = oracle();
        let x = four_cycle_graph();
        assert_eq!(
            o.sign_of_automorphism(&x, &Permutation::identity(4)).unwrap(),
            Sign::Plus
        );
        let k2 = LabelledGraph::complete(2).unwrap();
        assert_eq!(
            o.sign_of_automorphism(&k2, &perm(&[&[1, 2]], 2)).unwrap(),
            Sign::Minus
        );
        // the 4-cycle's edges that (1,2,3,4) inverts are {3,4} and {1,4}
        let g = perm(&[&[1, 2, 3, 4]], 4);
        let inversions = x
            .edges()
            .into_iter()
            .filter(|&(u, v)| g.is_inversion(u, v))
            .count();
        assert_eq!(inversions, 2);
        assert_eq!(o.sign_of_automorphism(&x, &g).unwrap(), Sign::Plus);
        // a single edge swapped onto itself
        let edge = LabelledGraph::from_edges(4, &[(1, 2)]).unwrap();
        assert_eq!(
            o.sign_of_automorphism(&edge, &perm(&[&[1, 2]], 4)).unwrap(),
            Sign::Minus
        );
        assert!(matches!(
            o.sign_of_automorphism(&x, &perm(&[&[1, 2]], 4)),
            Err(OracleError::NotAutomorphism { .. })
        ));
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
    }

    #[test]
    fn parity_examples() {
        let o = oracle();
        let empty = o.classify_parity(&LabelledGraph::empty(4).unwrap()).unwrap();
        assert_eq!(empty.parity, Parity::Even);
        assert!(empty.witness.is_none());
        let k2 = o.classify_parity(&LabelledGraph::complete(2).unwrap()).unwrap();
        assert_eq!(k2.parity, Parity::Odd);
        assert_eq!(k2.witness, Some(perm(&[&[1, 2]], 2)));
        let four = o.graph_classes_with_parity(4).unwrap();
        assert_eq!(four.len(), 11);
        assert_eq!(four.iter().filter(|(_, p)| *p == Parity::Even).count(), 4);
    }

    #[test]
    fn witnesses_have_sign_minus() {
        let o = oracle();
        for bits in 0..1u64 << 6 {
            let x = LabelledGraph::new(4, bits).unwrap();
            let v = o.classify_parity(&x).unwrap();
            match (v.parity, v.witness) {
                (Parity::Odd, Some(w)) => {
                    assert_eq!(o.sign_of_automorphism(&x, &w).unwrap(), Sign::Minus)
                }
                (Parity::Even, None) => {}
                other => panic!("inconsistent verdict {other:?}"),
            }
        }
    }

    #[test]
    fn fixed_count_examples() {
        let o = oracle();
        let (e, f) = o
            .fixed_count_check(&Permutation::identity(3), ObjectKind::Graph)
            .unwrap();
        assert_eq!((e, f), (8u32.into(), 8u32.into()));
        let g = perm(&[&[1, 2, 3, 4]], 4);
        assert_eq!(
            o.fixed_count_check(&g, ObjectKind::Graph).unwrap(),
            (4u32.into(), 4u32.into())
        );
        assert_eq!(
            o.fixed_count_check(&g, ObjectKind::Tournament).unwrap(),
            (0u32.into(), 0u32.into())
        );
        assert!(o
            .fixed_count_check(&Permutation::identity(6), ObjectKind::Graph)
            .is_err());
    }

    #[test]
    fn orientation_examples() {
        let o = oracle();
        let k2 = LabelledGraph::complete(2).unwrap();
        assert!(o
            .orientation_parity_check(&k2, &perm(&[&[1, 2]], 2), 10, 1)
            .unwrap());
        let x = four_cycle_graph();
        assert!(o
            .orientation_parity_check(&x, &Permutation::identity(4), 10, 2)
            .unwrap());
        assert!(o
            .orientation_parity_check(&x, &perm(&[&[1, 2, 3, 4]], 4), 100, DEFAULT_SEED)
            .unwrap());
        assert!(o
            .orientation_parity_check(&x, &perm(&[&[1, 2]], 4), 1, 0)
            .is_err());
    }

    #[test]
    fn brute_counts_small() {
        let o = oracle();
        let counts = |n| {
            let r = o.brute_counts(n).unwrap();
            [r.graphs, r.tournaments, r.odd_graphs, r.even_graphs]
                .map(|v| u64::try_from(v).unwrap())
        };
        assert_eq!(counts(1), [1, 1, 0, 1]);
        assert_eq!(counts(2), [2, 1, 1, 1]);
        assert_eq!(counts(4), [11, 4, 7, 4]);
        assert!(o.brute_counts(8).is_err());
    }

    #[test]
    fn double_count_small() {
        let o = oracle();
        for n in 1..=4 {
            let d = o.double_count(n).unwrap();
            assert!(d.holds(), "{d:?}");
        }
    }
}
