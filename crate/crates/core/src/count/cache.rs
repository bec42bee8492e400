use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigUint;
use thiserror::Error;

use super::CountKind;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("cache I/O: {0}")]
    Io(#[from] io::Error),
}

/// Previously computed counts, stored as `n<TAB>kind<TAB>value` lines sorted
/// by `(n, kind)` with kinds in the order graphs, tournaments, odd, even.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountCache {
    entries: BTreeMap<(usize, CountKind), BigUint>,
}

impl CountCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, CacheError> {
        let mut cache = Self::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let malformed = |message: String| CacheError::Malformed { line, message };
            if raw.is_empty() {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            let [n, kind, value] = fields[..] else {
                return Err(malformed(format!(
                    "expected 3 tab-separated fields, found {}",
                    fields.len()
                )));
            };
            let n: usize = n
                .parse()
                .map_err(|_| malformed(format!("invalid n `{n}`")))?;
            let kind: CountKind = kind.parse().map_err(malformed)?;
            if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed(format!("invalid decimal value `{value}`")));
            }
            let value: BigUint = value.parse().expect("digits only");
            if let Some(old) = cache.entries.get(&(n, kind)) {
                if *old != value {
                    return Err(malformed(format!("conflicting values for ({n}, {kind})")));
                }
            }
            cache.entries.insert((n, kind), value);
        }
        Ok(cache)
    }

    /// Loads `path`, treating a missing file as an empty cache.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        match fs::read_to_string(path) {
            Ok(text) => Self::parse(&text),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(e.into()),
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        fs::write(path, self.to_string())?;
        Ok(())
    }

    pub fn get(&self, n: usize, kind: CountKind) -> Option<&BigUint> {
        self.entries.get(&(n, kind))
    }

    pub fn insert(&mut self, n: usize, kind: CountKind, value: BigUint) {
        self.entries.insert((n, kind), value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for CountCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((n, kind), value) in &self.entries {
            writeln!(f, "{n}\t{kind}\t{value}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writes_sorted_records() {
        let mut cache = CountCache::new();
        cache.insert(4, CountKind::Even, 4u32.into());
        cache.insert(3, CountKind::Graphs, 4u32.into());
        cache.insert(4, CountKind::Graphs, 11u32.into());
        cache.insert(4, CountKind::Tournaments, 4u32.into());
        assert_eq!(
            cache.to_string(),
            "3\tgraphs\t4\n4\tgraphs\t11\n4\ttournaments\t4\n4\teven\t4\n"
        );
    }

    #[test]
    fn rejects_unknown_kind() {
        let err = CountCache::parse("4\tgraphs\t11\n4\tdigraphs\t218\n").unwrap_err();
        assert!(matches!(err, CacheError::Malformed { line: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_malformed_lines() {
        for bad in ["4 graphs 11", "x\tgraphs\t1", "4\tgraphs\t-1", "4\tgraphs\t", "4\tgraphs\t1\t2"] {
            assert!(CountCache::parse(bad).is_err(), "{bad:?}");
        }
        assert!(CountCache::parse("4\tgraphs\t11\n4\tgraphs\t12\n").is_err());
    }

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.tsv");
        assert!(CountCache::load(&path).unwrap().is_empty());
        let mut cache = CountCache::new();
        cache.insert(5, CountKind::Odd, 22u32.into());
        cache.save(&path).unwrap();
        assert_eq!(CountCache::load(&path).unwrap(), cache);
    }

    proptest! {
        #[test]
        fn text_round_trip(records in proptest::collection::vec((1usize..200, 0usize..4, any::<u128>()), 0..40)) {
            let mut cache = CountCache::new();
            for (n, k, v) in records {
                cache.insert(n, CountKind::ALL[k], BigUint::from(v));
            }
            let text = cache.to_string();
            prop_assert_eq!(CountCache::parse(&text).unwrap(), cache);
        }
    }
}
