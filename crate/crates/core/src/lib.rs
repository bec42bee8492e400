//! Exact counts of unlabelled graphs, tournaments, and odd graphs on `n`
//! vertices, with a brute-force oracle to check them against.
//!
//! A graph is *odd* when some automorphism reverses the sense of an odd
//! number of its edges (for any fixed orientation), and *even* otherwise.
//! Counting orbits by averaging fixed points over `Sym(n)` splits the graph
//! count into a sum over permutations of odd order, which counts the
//! tournaments, and a sum over permutations of even order, which counts the
//! odd graphs. The number of even graphs therefore equals the number of
//! tournaments for every `n >= 2`.
//!
//! - [`perm`]: permutations, cycle types, the induced actions on edges and arcs.
//! - [`count`]: the class-sum engine over integer partitions.
//! - [`oracle`]: exhaustive enumeration of labelled objects at small `n`.
//! - [`selfcheck`]: verification suites tying the two together.
//! - [`cli`]: the `even-graphs` command line.

pub mod cli;
pub mod count;
pub mod oracle;
pub mod perm;
pub mod selfcheck;
