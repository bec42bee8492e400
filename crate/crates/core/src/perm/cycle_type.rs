use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::PermError;

/// The cycle type of a permutation of `[n]`: an integer partition of `n`,
/// stored as `(length, multiplicity)` pairs with strictly decreasing lengths.
///
/// Everything the counting formulas need from a permutation (the number of
/// cycles it induces on edges and arcs, the parity of its order, the size of
/// its conjugacy class) depends only on this.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: usize,
    parts: Vec<(usize, usize)>,
}

impl CycleType {
    /// From `(length, multiplicity)` pairs in any order; repeated lengths are
    /// merged.
    pub fn new(parts: &[(usize, usize)]) -> Result<Self, PermError> {
        let mut merged: Vec<(usize, usize)> = Vec::with_capacity(parts.len());
        for &(len, mult) in parts {
            if len == 0 || mult == 0 {
                return Err(PermError::InvalidCycleType(format!(
                    "part ({len}, {mult}) must have positive length and multiplicity"
                )));
            }
            merged.push((len, mult));
        }
        merged.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        merged.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        let n = merged.iter().map(|&(l, m)| l * m).sum();
        if n == 0 {
            return Err(PermError::InvalidCycleType("no parts".into()));
        }
        Ok(Self { n, parts: merged })
    }

    /// From a list of cycle lengths, one entry per cycle.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self, PermError> {
        let pairs: Vec<_> = lengths.iter().map(|&l| (l, 1)).collect();
        Self::new(&pairs)
    }

    pub(crate) fn from_sorted_parts_unchecked(n: usize, parts: Vec<(usize, usize)>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert_eq!(parts.iter().map(|&(l, m)| l * m).sum::<usize>(), n);
        Self { n, parts }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    /// Cycle lengths with multiplicity, longest first.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts
            .iter()
            .flat_map(|&(len, mult)| std::iter::repeat(len).take(mult))
    }

    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|&(len, _)| len % 2 == 0)
    }

    /// A permutation has odd order exactly when all its cycles are odd.
    pub fn is_odd_order(&self) -> bool {
        !self.has_even_part()
    }

    /// `c(g_E)`: the number of cycles induced on the `C(n, 2)` edges.
    ///
    /// A cycle of length `a` contributes `⌊a/2⌋` orbits on the pairs inside
    /// it; two cycles of lengths `a`, `b` contribute `gcd(a, b)` orbits on the
    /// `ab` pairs between them.
    pub fn edge_cycle_count(&self) -> u64 {
        let mut total = 0u64;
        for (i, &(a, ma)) in self.parts.iter().enumerate() {
            let (a, ma) = (a as u64, ma as u64);
            total += ma * (a / 2);
            total += ma * (ma - 1) / 2 * a;
            for &(b, mb) in &self.parts[i + 1..] {
                total += ma * mb as u64 * a.gcd(&(b as u64));
            }
        }
        total
    }

    /// `c(g_A)`: the number of cycles induced on the `n(n-1)` arcs.
    pub fn arc_cycle_count(&self) -> u64 {
        let mut total = 0u64;
        for (i, &(a, ma)) in self.parts.iter().enumerate() {
            let (a, ma) = (a as u64, ma as u64);
            total += ma * (a - 1);
            total += ma * (ma - 1) * a;
            for &(b, mb) in &self.parts[i + 1..] {
                total += 2 * ma * mb as u64 * a.gcd(&(b as u64));
            }
        }
        total
    }

    /// Number of self-paired cycles of `g_A`: one per even cycle of `g`.
    pub fn self_paired_cycle_count(&self) -> u64 {
        self.parts
            .iter()
            .filter(|&&(len, _)| len % 2 == 0)
            .map(|&(_, mult)| mult as u64)
            .sum()
    }

    /// `Π k^{m_k} · m_k!`, the order of the centralizer of any permutation of
    /// this type.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for &(len, mult) in &self.parts {
            z *= BigUint::from(len).pow(mult as u32);
            for i in 2..=mult {
                z *= i;
            }
        }
        z
    }

    /// Size of the conjugacy class: `n! / Π k^{m_k} · m_k!`.
    pub fn permutations_of_type(&self) -> BigUint {
        factorial(self.n) / self.centralizer_order()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, len) in self.lengths().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{len}")?;
        }
        f.write_str(")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}
