//! Corpus machinery: exhaustive enumeration of finite atomic lattices on few
//! atoms, random sampling for larger atom counts, and seeded random ideals
//! and complexes for property suites.
//!
//! The enumeration works through the canonical support embedding: an atomic
//! lattice on r labeled atoms is the same thing as an intersection-closed
//! family of subsets of {1..r} containing the empty set, the full set, and
//! every singleton (elements map to the sets of atoms below them, meets map
//! to intersections). Isomorphism classes are families up to a permutation
//! of the atoms.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::{FiniteLattice, FinitePoset};
use crate::simplicial::SimplicialComplex;

/// The boolean lattice 2^n with readable ids. For n = 3 the atoms are a,b,c
/// and the coatoms d = a|b, e = a|c, f = b|c; other ranks use set notation.
pub fn boolean_lattice_named(n: usize) -> FiniteLattice {
    assert!(n <= 6);
    let letters: Vec<String> = (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let id_of = |mask: u32| -> String {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return "0".into();
        }
        if k == n {
            return "1".into();
        }
        if k == 1 {
            return letters[mask.trailing_zeros() as usize].clone();
        }
        if n == 3 && k == 2 {
            return match mask {
                0b011 => "d".into(),
                0b101 => "e".into(),
                0b110 => "f".into(),
                _ => unreachable!(),
            };
        }
        let members: Vec<&str> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| letters[i].as_str())
            .collect();
        format!("{{{}}}", members.join(""))
    };
    let ids: Vec<String> = (0..1u32 << n).map(id_of).collect();
    let poset = FinitePoset::from_order(ids, |a, b| a as u32 & b as u32 == a as u32).unwrap();
    FiniteLattice::from_poset(poset).unwrap()
}

/// Convert a canonical support family into a lattice. The family must be
/// intersection-closed and contain the empty set, all singletons, and the
/// full set on `r` atoms.
pub fn family_to_lattice(family: &[u64], r: usize) -> Result<FiniteLattice> {
    let mut sets = family.to_vec();
    sets.sort_unstable_by_key(|&m| (m.count_ones(), m));
    sets.dedup();
    let id_of = |mask: u64| -> String {
        let members: Vec<String> = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        format!("{{{}}}", members.join(","))
    };
    let ids: Vec<String> = sets.iter().map(|&m| id_of(m)).collect();
    let poset = FinitePoset::from_order(ids, |a, b| sets[a] & sets[b] == sets[a])?;
    let lattice = FiniteLattice::from_poset(poset)?;
    if !lattice.is_atomic() {
        return Err(Error::NotAtomic(format!("family {sets:?}")));
    }
    Ok(lattice)
}

fn base_family(r: usize) -> Vec<u64> {
    let full = (1u64 << r) - 1;
    let mut fam = vec![0, full];
    fam.extend((0..r).map(|i| 1u64 << i));
    fam.sort_unstable();
    fam.dedup();
    fam
}

fn is_intersection_closed(family: &[u64]) -> bool {
    let set: std::collections::BTreeSet<u64> = family.iter().copied().collect();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !set.contains(&(a & b)) {
                return false;
            }
        }
    }
    true
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            acc.push(v);
            rec(rest, acc, out);
            acc.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..r).collect(), &mut Vec::new(), &mut out);
    out
}

fn apply_permutation(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for (i, &p) in perm.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << p;
        }
    }
    out
}

/// Canonical form of a family under atom permutations.
fn canonical_family(family: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for perm in perms {
        let mut mapped: Vec<u64> = family.iter().map(|&m| apply_permutation(m, perm)).collect();
        mapped.sort_unstable();
        if best.as_ref().map_or(true, |b| &mapped < b) {
            best = Some(mapped);
        }
    }
    best.unwrap()
}

/// All atomic lattices with exactly `r` atoms, up to isomorphism.
/// Exhaustive; r is capped at 4 (the candidate space is 2^(2^r - r - 2)).
pub fn atomic_lattices(r: usize) -> Result<Vec<FiniteLattice>> {
    if r == 0 || r > 4 {
        return Err(Error::TooManyAtoms { got: r, cap: 4 });
    }
    let base = base_family(r);
    let middles: Vec<u64> = (1..(1u64 << r) - 1)
        .filter(|m| m.count_ones() >= 2)
        .collect();
    let perms = permutations(r);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for choice in 0u64..(1 << middles.len()) {
        let mut family = base.clone();
        family.extend(
            middles
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &m)| m),
        );
        if !is_intersection_closed(&family) {
            continue;
        }
        if seen.insert(canonical_family(&family, &perms)) {
            out.push(family_to_lattice(&family, r)?);
        }
    }
    Ok(out)
}

/// Frozen census of isomorphism classes by atom count (regression values).
pub const ATOMIC_LATTICE_CENSUS: [usize; 4] = [1, 1, 4, 50];

/// Random atomic lattices on `r` atoms: close a random family under
/// intersection. Duplicates are possible; classes are not deduplicated.
pub fn sample_atomic_lattices(r: usize, count: usize, seed: u64) -> Result<Vec<FiniteLattice>> {
    if r == 0 || r > 6 {
        return Err(Error::TooManyAtoms { got: r, cap: 6 });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let middles: Vec<u64> = (1..(1u64 << r) - 1)
        .filter(|m| m.count_ones() >= 2)
        .collect();
    for _ in 0..count {
        let mut family = base_family(r);
        for &m in &middles {
            if rng.gen_bool(0.25) {
                family.push(m);
            }
        }
        // close under intersection
        loop {
            let set: std::collections::BTreeSet<u64> = family.iter().copied().collect();
            let mut grew = false;
            let items: Vec<u64> = set.iter().copied().collect();
            let mut next = set;
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    if next.insert(a & b) {
                        grew = true;
                    }
                }
            }
            family = next.into_iter().collect();
            if !grew {
                break;
            }
        }
        out.push(family_to_lattice(&family, r)?);
    }
    Ok(out)
}

/// Every facet antichain of nonempty subsets of {0..n-1}, the empty family
/// included. Complexes on n vertices correspond to these families.
pub fn antichains_on(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 5, "antichain enumeration is desk scale");
    let full = (1u64 << n) - 1;
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut acc: Vec<u64> = Vec::new();
    fn rec(from: u64, full: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(acc.clone());
        for m in from..=full {
            if acc.iter().all(|&a| a & m != a && a & m != m) {
                acc.push(m);
                rec(m + 1, full, acc, out);
                acc.pop();
            }
        }
    }
    rec(1, full, &mut acc, &mut out);
    out
}

const LETTERS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// A random squarefree ideal on at most `n_vars` variables with at most
/// `max_gens` generators. `None` when the sample degenerates.
pub fn random_squarefree_ideal(
    rng: &mut StdRng,
    n_vars: usize,
    max_gens: usize,
) -> Option<MonomialIdeal> {
    assert!(n_vars <= LETTERS.len());
    let g = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..g)
        .map(|_| {
            Monomial::from_exponents(
                (0..n_vars).filter_map(|i| rng.gen_bool(0.5).then(|| (LETTERS[i].to_string(), 1))),
            )
        })
        .filter(|m| !m.is_one())
        .collect();
    MonomialIdeal::new(gens).ok()
}

/// A random monomial ideal with exponents up to `max_exp`.
pub fn random_monomial_ideal(
    rng: &mut StdRng,
    n_vars: usize,
    max_gens: usize,
    max_exp: u32,
) -> Option<MonomialIdeal> {
    assert!(n_vars <= LETTERS.len());
    let g = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..g)
        .map(|_| {
            Monomial::from_exponents((0..n_vars).filter_map(|i| {
                let e = rng.gen_range(0..=max_exp);
                (e > 0).then(|| (LETTERS[i].to_string(), e))
            }))
        })
        .filter(|m| !m.is_one())
        .collect();
    MonomialIdeal::new(gens).ok()
}

/// A random complex on `n` named vertices with at most `max_facets` facets.
pub fn random_complex(rng: &mut StdRng, n: usize, max_facets: usize) -> SimplicialComplex {
    let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let count = rng.gen_range(1..=max_facets);
    let facets: Vec<Vec<usize>> = (0..count)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    SimplicialComplex::from_index_facets(verts, facets, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcm::minimal_ideal_roundtrip;

    #[test]
    fn census_matches_frozen_counts() {
        for r in 1..=4 {
            let lattices = atomic_lattices(r).unwrap();
            assert_eq!(
                lattices.len(),
                ATOMIC_LATTICE_CENSUS[r - 1],
                "census mismatch at r = {r}"
            );
            for l in &lattices {
                assert!(l.is_atomic());
                assert_eq!(l.atoms().len(), r);
            }
        }
    }

    #[test]
    fn three_atom_classes_have_the_right_sizes() {
        // middles from {12,13,23}: 0,1,2,3 of them -> 5,6,7,8 elements
        let mut sizes: Vec<usize> = atomic_lattices(3)
            .unwrap()
            .iter()
            .map(|l| l.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![5, 6, 7, 8]);
    }

    #[test]
    fn boolean_names() {
        let l = boolean_lattice_named(3);
        assert_eq!(l.len(), 8);
        let ids: Vec<&str> = (0..8).map(|e| l.id(e)).collect();
        for name in ["0", "a", "b", "c", "d", "e", "f", "1"] {
            assert!(ids.contains(&name));
        }
    }

    #[test]
    fn enumerated_lattices_roundtrip() {
        for r in 2..=3 {
            for l in atomic_lattices(r).unwrap() {
                assert!(minimal_ideal_roundtrip(&l).unwrap());
            }
        }
    }

    #[test]
    fn sampling_produces_atomic_lattices() {
        for l in sample_atomic_lattices(5, 10, 42).unwrap() {
            assert!(l.is_atomic());
            assert_eq!(l.atoms().len(), 5);
        }
        for l in sample_atomic_lattices(6, 3, 42).unwrap() {
            assert!(l.is_atomic());
            assert_eq!(l.atoms().len(), 6);
        }
        assert!(sample_atomic_lattices(7, 1, 0).is_err());
    }

    #[test]
    fn antichain_counts() {
        // antichains of nonempty subsets: the Dedekind number minus the
        // one antichain that contains the empty set
        assert_eq!(antichains_on(1).len(), 2); // {} and {{1}}
        assert_eq!(antichains_on(2).len(), 5);
        assert_eq!(antichains_on(3).len(), 19);
        assert_eq!(antichains_on(4).len(), 167);
    }
}
