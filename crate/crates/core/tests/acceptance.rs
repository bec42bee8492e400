//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//! Every criterion must also finish within its stated time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use even_graphs::cli;
use even_graphs::count::CountEngine;
use even_graphs::oracle::{Oracle, DEFAULT_SEED};
use even_graphs::selfcheck;

type Check = fn() -> Result<String, String>;

fn run_cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["even-graphs"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!(
            "{args:?} exited {code}: {}",
            String::from_utf8_lossy(&err)
        ));
    }
    Ok(String::from_utf8(out).unwrap())
}

fn figures() -> Result<String, String> {
    for kind in ["tournaments", "even"] {
        let count = run_cli(&["count", "--kind", kind, "--n", "4"])?;
        if count != "4\n" {
            return Err(format!("count {kind} n=4 printed {count:?}"));
        }
        let lines = run_cli(&["enumerate", "--kind", kind, "--n", "4"])?;
        if lines.lines().count() != 4 {
            return Err(format!("enumerate {kind} n=4 printed {lines:?}"));
        }
    }
    Ok("4 tournaments and 4 even graphs on 4 vertices".into())
}

fn theorem_at_scale() -> Result<String, String> {
    let engine = CountEngine::default();
    for n in 2..=50 {
        let r = engine.verify_identity(n).map_err(|e| e.to_string())?;
        if r.graphs != &r.tournaments + &r.odd_graphs {
            return Err(format!("n={n}: graphs != tournaments + odd"));
        }
        if r.even_graphs != r.tournaments {
            return Err(format!("n={n}: even != tournaments"));
        }
    }
    Ok("n = 2..=50".into())
}

fn oracle_equivalence() -> Result<String, String> {
    const GRAPHS: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];
    const TOURNAMENTS: [u64; 7] = [1, 1, 2, 4, 12, 56, 456];
    let oracle = Oracle::default();
    let engine = CountEngine::default();
    for n in 1..=7 {
        let brute = oracle.brute_counts(n).map_err(|e| e.to_string())?;
        let exact = engine.verify_identity(n).map_err(|e| e.to_string())?;
        if brute != exact {
            return Err(format!("n={n}: brute {brute:?} vs engine {exact:?}"));
        }
        if brute.graphs != GRAPHS[n - 1].into() || brute.tournaments != TOURNAMENTS[n - 1].into() {
            return Err(format!(
                "n={n}: brute force found {} graphs, {} tournaments",
                brute.graphs, brute.tournaments
            ));
        }
    }
    Ok("n = 1..=7".into())
}

fn fixed_points() -> Result<String, String> {
    let g = selfcheck::fixed_graphs(5)?;
    let t = selfcheck::fixed_tournaments(5)?;
    Ok(format!("{g} + {t} permutations, n <= 5"))
}

fn lemmas() -> Result<String, String> {
    let a = selfcheck::self_paired_iff_even(6)?;
    let b = selfcheck::inversion_parity(6)?;
    let c = selfcheck::closed_forms(6)?;
    Ok(format!("{a} + {b} + {c} permutations, n <= 6"))
}

fn corollaries() -> Result<String, String> {
    let t = selfcheck::tournament_groups_odd(6)?;
    let s = selfcheck::sign_homomorphism(6)?;
    Ok(format!("{t} tournaments, {s} automorphism pairs, n <= 6"))
}

fn double_count() -> Result<String, String> {
    let pairs = selfcheck::double_count(5)?;
    Ok(format!("{pairs} (graph, odd automorphism) pairs, n <= 5"))
}

fn orientation() -> Result<String, String> {
    let triples = selfcheck::orientation_independence(6, DEFAULT_SEED)?;
    Ok(format!("{triples} triples, seed {DEFAULT_SEED:#x}"))
}

const CRITERIA: &[(&str, Check, Duration)] = &[
    ("figure-level reproduction at n = 4", figures, Duration::from_secs(1)),
    ("even = tournaments and graphs = tournaments + odd, 2 <= n <= 50", theorem_at_scale, Duration::from_secs(10)),
    ("brute force equals class sums for n <= 7", oracle_equivalence, Duration::from_secs(300)),
    ("fixed-point formulas for every g, n <= 5", fixed_points, Duration::from_secs(60)),
    ("lemma suite for every g, n <= 6", lemmas, Duration::from_secs(60)),
    ("corollary suites, n <= 6", corollaries, Duration::from_secs(300)),
    ("double count of odd automorphisms, n <= 5", double_count, Duration::from_secs(60)),
    ("orientation-independent reversal parity", orientation, Duration::from_secs(10)),
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (i, (name, check, budget)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(detail) if elapsed <= *budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            Err(counterexample) => ("FAIL", counterexample),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} criterion {}: {name} [{detail}] ({elapsed:.2?})",
            i + 1
        );
    }
    if failures == 0 {
        println!("acceptance: all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of {} criteria failed", CRITERIA.len());
        ExitCode::FAILURE
    }
}
