//! Exhaustive verification suites. Each suite checks one family of claims
//! for every permutation (and, where relevant, every labelled object) up to
//! its own vertex limit, and returns the number of cases checked or the
//! first counterexample found.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::count::{partitions, CountEngine};
use crate::oracle::{
    is_odd_graph, reversal_parity, LabelledGraph, LabelledObject, ObjectKind, Oracle, PairAction, SymmetricGroup,
};
use crate::perm::{
    factorial, induced_arc_action, induced_edge_action, ArcIndexing, Arcs, Cycle, Domain,
    EdgeIndexing, Edges, Permutation,
};

/// `selfcheck` accepts `max_n` up to this.
pub const MAX_SELFCHECK_N: usize = 7;

/// Largest `n` used by suites that scan every labelled object for every group
/// element.
pub const FIXED_POINT_N: usize = 5;
/// Largest `n` for the automorphism-group suites.
pub const AUTOMORPHISM_N: usize = 6;
/// Largest `n` for the per-permutation suites.
pub const PERMUTATION_N: usize = 7;
/// Cycle types are checked for every `n` up to this.
pub const CYCLE_TYPE_N: usize = 20;
pub const ORIENTATION_TRIPLES: usize = 200;

pub type SuiteResult = Result<u64, String>;

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub result: SuiteResult,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type Suite = fn(usize, u64) -> SuiteResult;

pub const SUITES: &[(&str, Suite)] = &[
    ("closed-form cycle counts", |n, _| closed_forms(n)),
    ("arc count = 2 edge count - self-paired", |_, _| cycle_type_relation(CYCLE_TYPE_N)),
    ("class sizes sum to n!", |_, _| class_sizes(CYCLE_TYPE_N)),
    ("self-paired cycle iff even order", |n, _| self_paired_iff_even(n)),
    ("odd inversions iff self-paired image", |n, _| inversion_parity(n)),
    ("undirected images are the edge cycles", |n, _| undirected_images(n)),
    ("fixed graphs = 2^c(g_E)", |n, _| fixed_graphs(n)),
    ("fixed tournaments = 0 or 2^(c(g_A)/2)", |n, _| fixed_tournaments(n)),
    ("fixed graphs are unions of edge cycles", |n, _| fixed_graph_structure(n)),
    ("fixed tournaments take one cycle per pair", |n, _| fixed_tournament_structure(n)),
    ("odd automorphism iff odd inversions in cycles", |n, _| odd_automorphism_criterion(n)),
    ("parity is an isomorphism invariant", |n, _| parity_invariance(n)),
    ("tournament automorphism groups have odd order", |n, _| tournament_groups_odd(n)),
    ("sign is a homomorphism; odd automorphisms are 0 or half", |n, _| sign_homomorphism(n)),
    ("double count of odd automorphisms", |n, _| double_count(n)),
    ("brute force agrees with class sums", |n, _| oracle_agreement(n)),
    ("reversal parity is orientation-independent", orientation_independence),
];

/// Runs every suite with the given bound, in a fixed order.
pub fn run_all(max_n: usize, seed: u64) -> Vec<SuiteOutcome> {
    SUITES
        .iter()
        .map(|&(name, suite)| SuiteOutcome {
            name,
            result: suite(max_n, seed),
        })
        .collect()
}

fn edge_cycles(p: &Permutation) -> Vec<Cycle<Edges>> {
    induced_edge_action(p).map(|a| a.cycles()).unwrap_or_default()
}

fn arc_cycles(p: &Permutation) -> Vec<Cycle<Arcs>> {
    induced_arc_action(p).map(|a| a.cycles()).unwrap_or_default()
}

/// Runs `check` on every element of `Sym(n)` for `1 <= n <= max_n`.
fn for_all_permutations(
    max_n: usize,
    check: impl Fn(&Permutation) -> Result<(), String> + Sync,
) -> SuiteResult {
    let mut cases = 0;
    for n in 1..=max_n {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let failure = perms.par_iter().find_map_first(|p| {
            check(p).err().map(|msg| format!("n={n} g={p}: {msg}"))
        });
        if let Some(f) = failure {
            return Err(f);
        }
        cases += perms.len() as u64;
    }
    Ok(cases)
}

pub fn closed_forms(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(PERMUTATION_N), |p| {
        let t = p.cycle_type();
        let edges = edge_cycles(p).len() as u64;
        let arcs = arc_cycles(p);
        let self_paired = arcs.iter().filter(|c| c.is_self_paired()).count() as u64;
        if t.edge_cycle_count() != edges {
            return Err(format!("c(g_E) closed form {} vs {edges}", t.edge_cycle_count()));
        }
        if t.arc_cycle_count() != arcs.len() as u64 {
            return Err(format!("c(g_A) closed form {} vs {}", t.arc_cycle_count(), arcs.len()));
        }
        if t.self_paired_cycle_count() != self_paired {
            return Err(format!(
                "self-paired closed form {} vs {self_paired}",
                t.self_paired_cycle_count()
            ));
        }
        Ok(())
    })
}

pub fn cycle_type_relation(max_n: usize) -> SuiteResult {
    let mut cases = 0;
    for n in 1..=max_n {
        for t in partitions(n) {
            if t.arc_cycle_count() != 2 * t.edge_cycle_count() - t.self_paired_cycle_count() {
                return Err(format!("type {t}"));
            }
            if (t.self_paired_cycle_count() > 0) != t.has_even_part() {
                return Err(format!("type {t}: self-paired count vs even part"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn class_sizes(max_n: usize) -> SuiteResult {
    for n in 1..=max_n {
        let total: num_bigint::BigUint = partitions(n).map(|t| t.permutations_of_type()).sum();
        if total != factorial(n) {
            return Err(format!("n={n}: class sizes sum to {total}"));
        }
    }
    Ok(max_n as u64)
}

pub fn self_paired_iff_even(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(PERMUTATION_N), |p| {
        let has = arc_cycles(p).iter().any(Cycle::is_self_paired);
        if has != (p.order() % 2 == 0) {
            return Err(format!("order {} but self-paired = {has}", p.order()));
        }
        Ok(())
    })
}

pub fn inversion_parity(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(PERMUTATION_N), |p| {
        let arcs = arc_cycles(p);
        for c in &arcs {
            let odd = c.undirected_image().inversion_count(p) % 2 == 1;
            if odd != c.is_self_paired() {
                return Err(format!("arc cycle {c}"));
            }
        }
        let self_paired_images: Vec<Cycle<Edges>> = arcs
            .iter()
            .filter(|c| c.is_self_paired())
            .map(Cycle::undirected_image)
            .collect();
        for e in edge_cycles(p) {
            let odd = e.inversion_count(p) % 2 == 1;
            if odd != self_paired_images.contains(&e) {
                return Err(format!("edge cycle {e}"));
            }
        }
        Ok(())
    })
}

pub fn undirected_images(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(PERMUTATION_N), |p| {
        let mut images: HashMap<Cycle<Edges>, (usize, bool)> = HashMap::new();
        for c in arc_cycles(p) {
            let entry = images.entry(c.undirected_image()).or_insert((0, false));
            entry.0 += 1;
            entry.1 |= c.is_self_paired();
        }
        let edges = edge_cycles(p);
        if images.len() != edges.len() {
            return Err(format!("{} distinct images, {} edge cycles", images.len(), edges.len()));
        }
        for e in &edges {
            match images.get(e) {
                Some(&(1, true)) | Some(&(2, false)) => {}
                other => return Err(format!("edge cycle {e} imaged as {other:?}")),
            }
        }
        Ok(())
    })
}

pub fn fixed_graphs(max_n: usize) -> SuiteResult {
    let oracle = Oracle::default();
    for_all_permutations(max_n.min(FIXED_POINT_N), |p| {
        let (enumerated, formula) = oracle
            .fixed_count_check(p, ObjectKind::Graph)
            .map_err(|e| e.to_string())?;
        if enumerated != formula {
            return Err(format!("{enumerated} fixed graphs, formula {formula}"));
        }
        Ok(())
    })
}

pub fn fixed_tournaments(max_n: usize) -> SuiteResult {
    let oracle = Oracle::default();
    for_all_permutations(max_n.min(FIXED_POINT_N), |p| {
        let (enumerated, formula) = oracle
            .fixed_count_check(p, ObjectKind::Tournament)
            .map_err(|e| e.to_string())?;
        if enumerated != formula {
            return Err(format!("{enumerated} fixed tournaments, formula {formula}"));
        }
        Ok(())
    })
}

fn cycle_mask<D: Domain>(c: &Cycle<D>) -> u128 {
    c.elements().iter().fold(0u128, |m, &i| m | 1 << i)
}

pub fn fixed_graph_structure(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(FIXED_POINT_N), |p| {
        let n = p.degree();
        let action = PairAction::new(p.clone());
        let masks: Vec<u64> = edge_cycles(p).iter().map(|c| cycle_mask(c) as u64).collect();
        for x in 0..1u64 << Edges::size(n) {
            let union = masks.iter().all(|&m| x & m == 0 || x & m == m);
            if union != action.fixes(ObjectKind::Graph, x) {
                return Err(format!("graph bits {x:#b}"));
            }
        }
        Ok(())
    })
}

pub fn fixed_tournament_structure(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(FIXED_POINT_N), |p| {
        let n = p.degree();
        if p.order() % 2 == 0 {
            return Ok(());
        }
        let action = PairAction::new(p.clone());
        let arcs = ArcIndexing::new(n);
        let edges = EdgeIndexing::new(n);
        let cycles = arc_cycles(p);
        let masks: Vec<u128> = cycles.iter().map(cycle_mask).collect();
        // partner[i]: index of the cycle made of the reversed arcs of cycle i
        let partner: Vec<usize> = cycles
            .iter()
            .map(|c| {
                let r = arcs.reverse(c.elements()[0]);
                cycles.iter().position(|d| d.contains(r)).unwrap()
            })
            .collect();
        for t in 0..1u64 << Edges::size(n) {
            let arc_set = edges.pairs().enumerate().fold(0u128, |m, (e, (u, v))| {
                let (a, b) = if t >> e & 1 == 1 { (u, v) } else { (v, u) };
                m | 1 << arcs.index(a, b)
            });
            let unions = masks.iter().all(|&m| arc_set & m == 0 || arc_set & m == m);
            let one_per_pair = (0..cycles.len()).all(|i| {
                let has = |j: usize| arc_set & masks[j] == masks[j];
                partner[i] != i && (has(i) != has(partner[i]))
            });
            if (unions && one_per_pair) != action.fixes(ObjectKind::Tournament, t) {
                return Err(format!("tournament bits {t:#b}"));
            }
        }
        Ok(())
    })
}

pub fn odd_automorphism_criterion(max_n: usize) -> SuiteResult {
    for_all_permutations(max_n.min(FIXED_POINT_N), |p| {
        let n = p.degree();
        let action = PairAction::new(p.clone());
        let cycles: Vec<(u64, usize)> = edge_cycles(p)
            .iter()
            .map(|c| (cycle_mask(c) as u64, c.inversion_count(p)))
            .collect();
        for x in 0..1u64 << Edges::size(n) {
            if !action.fixes(ObjectKind::Graph, x) {
                continue;
            }
            let odd_sign = (x & action.inversions()).count_ones() % 2 == 1;
            let inversions: usize = cycles
                .iter()
                .filter(|&&(m, _)| x & m == m)
                .map(|&(_, k)| k)
                .sum();
            if odd_sign != (inversions % 2 == 1) {
                return Err(format!("graph bits {x:#b}"));
            }
        }
        Ok(())
    })
}

pub fn parity_invariance(max_n: usize) -> SuiteResult {
    let mut cases = 0;
    for n in 2..=max_n.min(FIXED_POINT_N) {
        let group = SymmetricGroup::new(n);
        let rotation: Vec<usize> = (1..=n).collect();
        let generators = [
            PairAction::new(Permutation::from_cycles(n, &[&[1, 2]]).unwrap()),
            PairAction::new(Permutation::from_cycles(n, &[&rotation]).unwrap()),
        ];
        for x in 0..1u64 << Edges::size(n) {
            let odd = is_odd_graph(&group, x);
            for g in &generators {
                if is_odd_graph(&group, g.map_pairs(x)) != odd {
                    return Err(format!("n={n} X={x:#b} g={}", g.perm()));
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn tournament_groups_odd(max_n: usize) -> SuiteResult {
    let mut cases = 0;
    for n in 1..=max_n.min(AUTOMORPHISM_N) {
        let group = SymmetricGroup::new(n);
        let total = 1u64 << Edges::size(n);
        let failure = (0..total).into_par_iter().find_map_first(|t| {
            let order = group.stabiliser(ObjectKind::Tournament, t).count();
            (order % 2 == 0).then(|| format!("n={n} tournament {t:#b} has |Aut| = {order}"))
        });
        if let Some(f) = failure {
            return Err(f);
        }
        cases += total;
    }
    Ok(cases)
}

/// Lexicographic rank of a permutation of `0..n`, matching the order of
/// [`SymmetricGroup`].
fn lex_rank(images: &[usize]) -> usize {
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_later = images[i + 1..].iter().filter(|&&v| v < images[i]).count();
        rank = rank * (n - i) + smaller_later;
    }
    rank
}

pub fn sign_homomorphism(max_n: usize) -> SuiteResult {
    let mut cases = 0;
    for n in 1..=max_n.min(AUTOMORPHISM_N) {
        let group = SymmetricGroup::new(n);
        let total = 1u64 << Edges::size(n);
        let checked: Result<Vec<u64>, String> = (0..total)
            .into_par_iter()
            .map(|x| {
                let aut: Vec<&PairAction> = group.stabiliser(ObjectKind::Graph, x).collect();
                let sign = |a: &PairAction| (x & a.inversions()).count_ones() % 2 == 1;
                let minus = aut.iter().filter(|a| sign(a)).count();
                if minus != 0 && 2 * minus != aut.len() {
                    return Err(format!(
                        "n={n} X={x:#b}: {minus} odd automorphisms of {}",
                        aut.len()
                    ));
                }
                let mut composed = vec![0usize; n];
                for p in &aut {
                    for q in &aut {
                        for (v, slot) in composed.iter_mut().enumerate() {
                            *slot = q.perm().image(p.perm().image(v));
                        }
                        let pq = &group.actions()[lex_rank(&composed)];
                        if !pq.fixes(ObjectKind::Graph, x) {
                            return Err(format!("n={n} X={x:#b}: Aut not closed"));
                        }
                        if sign(pq) != (sign(p) != sign(q)) {
                            return Err(format!(
                                "n={n} X={x:#b}: sign({}·{}) not multiplicative",
                                p.perm(),
                                q.perm()
                            ));
                        }
                    }
                }
                Ok((aut.len() * aut.len()) as u64)
            })
            .collect();
        cases += checked?.iter().sum::<u64>();
    }
    Ok(cases)
}

pub fn double_count(max_n: usize) -> SuiteResult {
    let oracle = Oracle::default();
    let mut cases = 0;
    for n in 1..=max_n.min(FIXED_POINT_N) {
        let d = oracle.double_count(n).map_err(|e| e.to_string())?;
        if !d.holds() {
            return Err(format!("n={n}: {d:?}"));
        }
        cases += d.enumerated_pairs;
    }
    Ok(cases)
}

pub fn oracle_agreement(max_n: usize) -> SuiteResult {
    let oracle = Oracle::default();
    let engine = CountEngine::default();
    for n in 1..=max_n.min(PERMUTATION_N) {
        let brute = oracle.brute_counts(n).map_err(|e| e.to_string())?;
        let exact = engine.verify_identity(n).map_err(|e| e.to_string())?;
        if brute != exact {
            return Err(format!("n={n}: brute {brute:?} vs class sums {exact:?}"));
        }
    }
    Ok(max_n.min(PERMUTATION_N) as u64)
}

/// Random `(graph, automorphism, orientation)` triples with `2 <= n <=
/// min(max_n, 6)`. The graph is a union of random edge cycles of a random
/// permutation, so that permutation is an automorphism.
pub fn orientation_independence(max_n: usize, seed: u64) -> SuiteResult {
    let top = max_n.min(AUTOMORPHISM_N);
    if top < 2 {
        return Ok(0);
    }
    let oracle = Oracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..ORIENTATION_TRIPLES {
        let n = rng.gen_range(2..=top);
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(&mut rng);
        let p = Permutation::from_zero_based(images).unwrap();
        let bits = edge_cycles(&p)
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .fold(0u64, |m, c| m | cycle_mask(c) as u64);
        let x = LabelledGraph::new(n, bits).unwrap();
        let ok = oracle
            .orientation_parity_check(&x, &p, 1, rng.gen())
            .map_err(|e| e.to_string())?;
        if !ok {
            return Err(format!("trial {trial}: n={n} g={p} X={}", x.bitstring()));
        }
    }
    Ok(ORIENTATION_TRIPLES as u64)
}

/// Exposed for callers that want the reversal parity of a specific triple.
pub fn reversal_parity_of(x: &LabelledGraph, p: &Permutation, orientation: u64) -> bool {
    reversal_parity(x.bits(), &PairAction::new(p.clone()), orientation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_rank_matches_enumeration_order() {
        for (i, p) in Permutation::all(5).enumerate() {
            assert_eq!(lex_rank(p.images()), i);
        }
    }

    #[test]
    fn degenerate_bound_passes() {
        assert!(run_all(1, 0).iter().all(SuiteOutcome::passed));
    }

    #[test]
    fn small_bound_passes() {
        for outcome in run_all(4, 7) {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.result);
        }
    }

    #[test]
    fn orientation_changes_count_but_not_parity() {
        // K2 under the swap: both orientations have their one edge reversed
        let k2 = LabelledGraph::complete(2).unwrap();
        let swap = Permutation::from_images(&[2, 1]).unwrap();
        assert!(reversal_parity_of(&k2, &swap, 0));
        assert!(reversal_parity_of(&k2, &swap, 1));
    }
}
