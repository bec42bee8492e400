use crate::perm::CycleType;

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// from `(n)` down to `(1, .., 1)`. Yields nothing for `n = 0`.
#[derive(Debug, Clone)]
pub struct Partitions {
    n: usize,
    // parts in non-increasing order; `None` once exhausted
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        n,
        current: (n > 0).then(|| vec![n]),
    }
}

impl Partitions {
    fn advance(parts: &mut Vec<usize>) -> bool {
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let k = *last;
        let mut rest = ones + 1;
        while rest > k {
            parts.push(k);
            rest -= k;
        }
        if rest > 0 {
            parts.push(rest);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let parts = self.current.as_mut()?;
        let mut grouped: Vec<(usize, usize)> = Vec::new();
        for &p in parts.iter() {
            match grouped.last_mut() {
                Some((len, mult)) if *len == p => *mult += 1,
                _ => grouped.push((p, 1)),
            }
        }
        let item = CycleType::from_sorted_parts_unchecked(self.n, grouped);
        if !Self::advance(parts) {
            self.current = None;
        }
        Some(item)
    }
}
