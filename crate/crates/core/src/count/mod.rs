//! Exact orbit counts of unlabelled graphs, tournaments and odd graphs on `n`
//! vertices.
//!
//! Each count is `(1/n!) Σ 2^{c(g_E)}` over a subset of `Sym(n)`: all of it
//! for graphs, the elements of odd order for tournaments, and the elements of
//! even order for odd graphs. The sums are taken over cycle types weighted by
//! class size, so the work is `p(n)` big-integer terms instead of `n!`.

mod cache;
mod partition;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::iter::{ParallelBridge, ParallelIterator};
use thiserror::Error;

use crate::perm::CycleType;

pub use cache::{CacheError, CountCache};
pub use partition::{partitions, Partitions};

/// Largest `n` accepted without raising the cap; `p(60) = 966467` classes.
pub const DEFAULT_CAP: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum CountKind {
    Graphs,
    Tournaments,
    Odd,
    Even,
}

impl CountKind {
    pub const ALL: [CountKind; 4] = [
        CountKind::Graphs,
        CountKind::Tournaments,
        CountKind::Odd,
        CountKind::Even,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CountKind::Graphs => "graphs",
            CountKind::Tournaments => "tournaments",
            CountKind::Odd => "odd",
            CountKind::Even => "even",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CountKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n = {n} is outside the supported range 1..={cap}")]
    OutOfRange { n: usize, cap: usize },
    #[error("class sum for {kind} at n = {n} is not divisible by n!")]
    InexactDivision { n: usize, kind: CountKind },
    #[error("even graphs ({even}) and tournaments ({tournaments}) disagree at n = {n}")]
    TheoremViolation {
        n: usize,
        even: BigUint,
        tournaments: BigUint,
    },
}

/// The four counts for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub graphs: BigUint,
    pub tournaments: BigUint,
    pub odd_graphs: BigUint,
    pub even_graphs: BigUint,
    /// `graphs = tournaments + odd_graphs` and `even_graphs = graphs - odd_graphs`.
    pub identity_holds: bool,
}

impl CountReport {
    pub fn new(
        n: usize,
        graphs: BigUint,
        tournaments: BigUint,
        odd_graphs: BigUint,
        even_graphs: BigUint,
    ) -> Self {
        let identity_holds = graphs == &tournaments + &odd_graphs
            && graphs >= odd_graphs
            && even_graphs == &graphs - &odd_graphs;
        Self {
            n,
            graphs,
            tournaments,
            odd_graphs,
            even_graphs,
            identity_holds,
        }
    }

    /// `even_graphs = tournaments`.
    pub fn even_matches_tournaments(&self) -> bool {
        self.even_graphs == self.tournaments
    }

    pub fn get(&self, kind: CountKind) -> &BigUint {
        match kind {
            CountKind::Graphs => &self.graphs,
            CountKind::Tournaments => &self.tournaments,
            CountKind::Odd => &self.odd_graphs,
            CountKind::Even => &self.even_graphs,
        }
    }
}

/// `Σ |class| · 2^{c(g_E)}` over cycle types of `n`, before division by `n!`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassSums {
    pub all: BigUint,
    pub odd_order: BigUint,
    pub even_order: BigUint,
}

impl ClassSums {
    fn merge(mut self, other: ClassSums) -> ClassSums {
        self.all += other.all;
        self.odd_order += other.odd_order;
        self.even_order += other.even_order;
        self
    }
}

/// The number of permutations of type `t` times the `2^{c(g_E)}` labelled
/// graphs each of them fixes.
pub fn class_term(t: &CycleType, n_factorial: &BigUint) -> BigUint {
    (n_factorial / t.centralizer_order()) << t.edge_cycle_count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountEngine {
    cap: usize,
}

impl Default for CountEngine {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl CountEngine {
    /// Any cap is accepted; beyond [`DEFAULT_CAP`] the number of classes
    /// grows like `exp(π√(2n/3))`, so callers should warn.
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_range(&self, n: usize) -> Result<(), CountError> {
        if n == 0 || n > self.cap {
            return Err(CountError::OutOfRange { n, cap: self.cap });
        }
        Ok(())
    }

    /// Class sums for `n`, evaluated in parallel. Exact addition makes the
    /// result independent of scheduling.
    pub fn class_sums(&self, n: usize) -> Result<ClassSums, CountError> {
        self.check_range(n)?;
        let n_factorial = crate::perm::factorial(n);
        Ok(partitions(n)
            .par_bridge()
            .map(|t| {
                let term = class_term(&t, &n_factorial);
                let (odd_order, even_order) = if t.is_odd_order() {
                    (term.clone(), BigUint::zero())
                } else {
                    (BigUint::zero(), term.clone())
                };
                ClassSums {
                    all: term,
                    odd_order,
                    even_order,
                }
            })
            .reduce(ClassSums::default, ClassSums::merge))
    }

    pub fn count_graphs(&self, n: usize) -> Result<BigUint, CountError> {
        let sums = self.class_sums(n)?;
        exact_div(&sums.all, n, CountKind::Graphs)
    }

    pub fn count_tournaments(&self, n: usize) -> Result<BigUint, CountError> {
        let sums = self.class_sums(n)?;
        exact_div(&sums.odd_order, n, CountKind::Tournaments)
    }

    pub fn count_odd_graphs(&self, n: usize) -> Result<BigUint, CountError> {
        let sums = self.class_sums(n)?;
        exact_div(&sums.even_order, n, CountKind::Odd)
    }

    /// Graphs minus odd graphs, cross-checked against the tournament count
    /// for `n >= 2`.
    pub fn count_even_graphs(&self, n: usize) -> Result<BigUint, CountError> {
        let report = self.verify_identity(n)?;
        if n >= 2 && !report.even_matches_tournaments() {
            return Err(CountError::TheoremViolation {
                n,
                even: report.even_graphs,
                tournaments: report.tournaments,
            });
        }
        Ok(report.even_graphs)
    }

    pub fn count(&self, kind: CountKind, n: usize) -> Result<BigUint, CountError> {
        match kind {
            CountKind::Graphs => self.count_graphs(n),
            CountKind::Tournaments => self.count_tournaments(n),
            CountKind::Odd => self.count_odd_graphs(n),
            CountKind::Even => self.count_even_graphs(n),
        }
    }

    /// All four counts from one pass over the cycle types. A failed identity
    /// is reported in the result rather than as an error.
    pub fn verify_identity(&self, n: usize) -> Result<CountReport, CountError> {
        let sums = self.class_sums(n)?;
        let graphs = exact_div(&sums.all, n, CountKind::Graphs)?;
        let tournaments = exact_div(&sums.odd_order, n, CountKind::Tournaments)?;
        let odd = exact_div(&sums.even_order, n, CountKind::Odd)?;
        // graphs < odd can only come from a broken sum; keep the report total
        let even = if graphs >= odd {
            &graphs - &odd
        } else {
            BigUint::zero()
        };
        Ok(CountReport::new(n, graphs, tournaments, odd, even))
    }
}

fn exact_div(sum: &BigUint, n: usize, kind: CountKind) -> Result<BigUint, CountError> {
    let (q, r) = sum.div_rem(&crate::perm::factorial(n));
    if !r.is_zero() {
        return Err(CountError::InexactDivision { n, kind });
    }
    Ok(q)
}
