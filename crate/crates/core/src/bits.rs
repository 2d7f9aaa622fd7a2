//! Dense bit rows and small-universe set utilities.
//!
//! Posets store their order relation as one `BitRow` per element, so closure,
//! reduction, and interval queries run a word at a time. Hypergraph transversal
//! enumeration (used for facets, minimal non-faces, and associated primes)
//! works on plain `u64` masks and is therefore capped at 64 ground elements.

/// Fixed-length bit vector backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn or_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        BitRow {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn minus(&self, other: &BitRow) -> BitRow {
        BitRow {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &BitRow) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Node budget for transversal enumeration; exceeding it is a resource error.
pub const TRANSVERSAL_NODE_CAP: u64 = 2_000_000;

/// All inclusion-minimal hitting sets of `sets` over the universe `0..n`.
///
/// Branches on the ways to hit the first unhit set, then prunes to the
/// inclusion-minimal results. `n <= 64`; the branch count is capped.
pub fn minimal_transversals(sets: &[u64], n: usize) -> crate::error::Result<Vec<u64>> {
    assert!(n <= 64);
    if sets.iter().any(|&s| s == 0) {
        return Ok(Vec::new()); // an empty set can never be hit
    }
    let mut found: Vec<u64> = Vec::new();
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    let mut nodes = 0u64;
    while let Some((partial, from)) = stack.pop() {
        nodes += 1;
        if nodes > TRANSVERSAL_NODE_CAP {
            return Err(crate::error::Error::ResourceLimit(
                "transversal enumeration budget exhausted".into(),
            ));
        }
        match sets[from..].iter().position(|&s| s & partial == 0) {
            None => found.push(partial),
            Some(off) => {
                let mut rest = sets[from + off];
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    stack.push((partial | v, from + off));
                }
            }
        }
    }
    // keep only inclusion-minimal hitting sets, deduplicated
    found.sort_by_key(|m| (m.count_ones(), *m));
    found.dedup();
    let mut minimal: Vec<u64> = Vec::new();
    'outer: for &m in &found {
        for &kept in &minimal {
            if kept & !m == 0 {
                continue 'outer;
            }
        }
        minimal.push(m);
    }
    Ok(minimal)
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1 << i))
}

pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitrow_basics() {
        let mut r = BitRow::new(130);
        r.set(0, true);
        r.set(64, true);
        r.set(129, true);
        assert_eq!(r.count(), 3);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        r.set(64, false);
        assert!(!r.get(64));
        assert_eq!(r.count(), 2);
    }

    #[test]
    fn subset_and_disjoint() {
        let mut a = BitRow::new(10);
        let mut b = BitRow::new(10);
        a.set(1, true);
        b.set(1, true);
        b.set(3, true);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert!(a.and(&b).get(1));
        assert!(b.minus(&a).get(3));
    }

    #[test]
    fn transversals_of_two_disjoint_edges() {
        // {a,b} and {c,d}: minimal transversals are the four mixed pairs
        let sets = [0b0011, 0b1100];
        let got = minimal_transversals(&sets, 4).unwrap();
        assert_eq!(got.len(), 4);
        for m in got {
            assert_eq!(m.count_ones(), 2);
            assert_ne!(m & 0b0011, 0);
            assert_ne!(m & 0b1100, 0);
        }
    }

    #[test]
    fn transversals_drop_non_minimal() {
        // {a,b}, {b,c}: minimal transversals are {b}, {a,c}
        let got = minimal_transversals(&[0b011, 0b110], 3).unwrap();
        assert_eq!(got, vec![0b010, 0b101]);
    }
}
