//! The distributive completion: the lattice of order filters of mi(L), the
//! embedding of the lattice into it, covering and associated primes through
//! variable filters, fiber extrema, and series-parallel detection.

use std::collections::BTreeMap;

use crate::bits::{mask_indices, minimal_transversals};
use crate::error::{Error, Result};
use crate::lcm::minimal_ideal;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::{FiniteLattice, FinitePoset};

/// Cap on the base poset size for filter enumeration (filters are u64 masks).
pub const FILTER_BASE_CAP: usize = 24;

/// Cap on the number of filters materialized.
pub const FILTER_COUNT_CAP: usize = 4096;

/// The lattice of all order filters of a poset, ordered by reverse inclusion:
/// the full set is the bottom, the empty filter the top. Joins intersect,
/// meets unite; the result is distributive.
#[derive(Clone, Debug)]
pub struct FilterLattice {
    pub base: FinitePoset,
    /// filters as bitmasks over base elements, aligned with lattice elements
    pub filters: Vec<u64>,
    pub lattice: FiniteLattice,
    /// triple check a v (b ^ c) = (a v b) ^ (a v c); exhaustive at desk scale
    pub distributive_verified: bool,
}

impl FilterLattice {
    pub fn element_of_filter(&self, mask: u64) -> Option<usize> {
        self.filters.iter().position(|&f| f == mask)
    }

    /// Minimal generators of a filter mask in the base poset.
    pub fn min_generators(&self, mask: u64) -> Vec<usize> {
        min_generators(&self.base, mask)
    }
}

fn min_generators(base: &FinitePoset, mask: u64) -> Vec<usize> {
    mask_indices(mask)
        .into_iter()
        .filter(|&v| {
            mask_indices(mask)
                .into_iter()
                .all(|w| w == v || !base.lt(w, v))
        })
        .collect()
}

fn filter_name(base: &FinitePoset, mask: u64) -> String {
    let gens: Vec<&str> = min_generators(base, mask)
        .into_iter()
        .map(|v| base.id(v))
        .collect();
    format!("{{{}}}", gens.join(","))
}

/// Enumerate every order filter of `base` as a bitmask.
pub fn order_filters(base: &FinitePoset) -> Result<Vec<u64>> {
    let n = base.len();
    if n > FILTER_BASE_CAP {
        return Err(Error::ResourceLimit(format!(
            "filter enumeration needs at most {FILTER_BASE_CAP} elements"
        )));
    }
    // decide membership top-down along a reverse linear extension: an element
    // may enter only if everything above it is in
    let order: Vec<usize> = base.linear_extension().iter().rev().copied().collect();
    let mut out: Vec<u64> = Vec::new();
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((pos, mask)) = stack.pop() {
        if pos == order.len() {
            out.push(mask);
            continue;
        }
        let v = order[pos];
        stack.push((pos + 1, mask)); // v stays out
        let above_in = base.up_set(v).ones().all(|w| w == v || mask >> w & 1 == 1);
        if above_in {
            stack.push((pos + 1, mask | 1 << v));
        }
        if out.len() > FILTER_COUNT_CAP {
            return Err(Error::ResourceLimit(format!(
                "more than {FILTER_COUNT_CAP} filters"
            )));
        }
    }
    out.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    Ok(out)
}

/// Build J(P): all order filters ordered by reverse inclusion.
pub fn filter_lattice(base: &FinitePoset) -> Result<FilterLattice> {
    let filters = order_filters(base)?;
    let ids: Vec<String> = filters.iter().map(|&m| filter_name(base, m)).collect();
    let poset = FinitePoset::from_order(ids, |a, b| {
        filters[a] & filters[b] == filters[b] // F_a >= F_b as sets
    })?;
    let lattice = FiniteLattice::from_poset(poset)?;
    let n = lattice.len();
    let mut distributive_verified = true;
    if n <= 24 {
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = lattice.join(a, lattice.meet(b, c));
                    let rhs = lattice.meet(lattice.join(a, b), lattice.join(a, c));
                    if lhs != rhs {
                        distributive_verified = false;
                        break 'outer;
                    }
                }
            }
        }
    } else {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0);
        for _ in 0..2000 {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            let lhs = lattice.join(a, lattice.meet(b, c));
            let rhs = lattice.meet(lattice.join(a, b), lattice.join(a, c));
            if lhs != rhs {
                distributive_verified = false;
                break;
            }
        }
    }
    Ok(FilterLattice {
        base: base.clone(),
        filters,
        lattice,
        distributive_verified,
    })
}

/// The embedding of L (bottom removed) into the distributive completion
/// J(mi L) through atom filters.
#[derive(Clone, Debug)]
pub struct PhiXcReport {
    pub completion: FilterLattice,
    /// for every element above the bottom: (element, mi filter mask)
    pub xc: Vec<(usize, u64)>,
    /// image of the composition inside the completion (element indices of J)
    pub image: Vec<usize>,
    pub injective: bool,
    pub joins_to_intersections: bool,
    pub image_join_closed: bool,
}

pub fn phi_xc_embedding(lattice: &FiniteLattice) -> Result<PhiXcReport> {
    crate::lcm::minimal_ideal(lattice)?; // validates atomic, nontrivial
    let mi = lattice.meet_irreducibles();
    let mi_poset = lattice.mi_poset();
    let completion = filter_lattice(&mi_poset)?;

    let xc_of = |e: usize| -> u64 {
        mi.iter()
            .enumerate()
            .filter(|(_, &k)| lattice.leq(e, k))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    };
    let phi = |mask: u64| -> u64 {
        // the filter generated in the mi poset
        let mut out = 0u64;
        for v in mask_indices(mask) {
            for w in mi_poset.up_set(v).ones() {
                out |= 1 << w;
            }
        }
        out
    };

    let domain: Vec<usize> = (0..lattice.len())
        .filter(|&e| e != lattice.bottom())
        .collect();
    let xc: Vec<(usize, u64)> = domain.iter().map(|&e| (e, xc_of(e))).collect();

    let mut injective = true;
    let mut joins_to_intersections = true;
    for (i, &(a, ma)) in xc.iter().enumerate() {
        for &(b, mb) in &xc[i + 1..] {
            if ma == mb {
                injective = false;
            }
            let join = lattice.join(a, b);
            if xc_of(join) != ma & mb {
                joins_to_intersections = false;
            }
        }
    }

    let mut image = Vec::new();
    let mut image_join_closed = true;
    for &(_, mask) in &xc {
        let f = phi(mask);
        if f != mask {
            // x^c values are already filters of the mi poset
            joins_to_intersections = false;
        }
        match completion.element_of_filter(f) {
            Some(j) => image.push(j),
            None => image_join_closed = false,
        }
    }
    image.sort_unstable();
    image.dedup();
    if injective && image.len() != xc.len() {
        injective = false;
    }
    // closure of the image under the join of J (filter intersection)
    for (i, &a) in image.iter().enumerate() {
        for &b in &image[i + 1..] {
            let inter = completion.filters[a] & completion.filters[b];
            let j = completion
                .element_of_filter(inter)
                .expect("filters are intersection closed");
            if !image.contains(&j) {
                image_join_closed = false;
            }
        }
    }
    Ok(PhiXcReport {
        completion,
        xc,
        image,
        injective,
        joins_to_intersections,
        image_join_closed,
    })
}

/// Associated primes of a squarefree ideal as minimal covering variable sets:
/// a set of variables covers when every generator meets it.
#[derive(Clone, Debug)]
pub struct PrimeDecomposition {
    pub vars: Vec<String>,
    /// generator supports as masks over `vars`
    pub supports: Vec<u64>,
    /// minimal transversals, sorted by (size, lexicographic variables)
    pub associated: Vec<Vec<String>>,
    pub associated_masks: Vec<u64>,
}

impl PrimeDecomposition {
    /// A variable set contains the ideal iff it is a transversal.
    pub fn is_covering(&self, mask: u64) -> bool {
        self.supports.iter().all(|&s| s & mask != 0)
    }

    /// Membership in the intersection of the associated primes.
    pub fn in_every_associated_prime(&self, m: &Monomial) -> bool {
        let mask = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| m.exponent(v) > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        self.associated_masks.iter().all(|&p| p & mask != 0)
    }
}

pub fn covering_primes(ideal: &MonomialIdeal) -> Result<PrimeDecomposition> {
    if !ideal.is_squarefree() {
        let bad = ideal
            .generators()
            .iter()
            .find(|g| !g.is_squarefree())
            .unwrap();
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    let vars = ideal.support_variables();
    if vars.len() > 64 {
        return Err(Error::ResourceLimit("more than 64 variables".into()));
    }
    let supports: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .map(|v| vars.iter().position(|w| w == v).unwrap())
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect();
    let associated_masks = minimal_transversals(&supports, vars.len())?;
    let mut associated: Vec<Vec<String>> = associated_masks
        .iter()
        .map(|&m| {
            mask_indices(m)
                .into_iter()
                .map(|i| vars[i].clone())
                .collect()
        })
        .collect();
    let mut paired: Vec<(Vec<String>, u64)> = associated
        .drain(..)
        .zip(associated_masks.iter().copied())
        .collect();
    paired.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let (associated, associated_masks): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    Ok(PrimeDecomposition {
        vars,
        supports,
        associated,
        associated_masks,
    })
}

/// Fiber structure of phi over the subsets of mi(L): every fiber is an
/// interval, lattice elements give the maxima, associated primes of the
/// minimal ideal give minima, and the covering subsets map to an order ideal.
#[derive(Clone, Debug)]
pub struct FiberReport {
    pub mi_count: usize,
    pub subset_count: usize,
    pub fiber_count: usize,
    pub fibers_are_intervals: bool,
    pub elements_are_maxima: bool,
    pub associated_are_minima: bool,
    pub covering_image_is_order_ideal: bool,
}

impl FiberReport {
    pub fn all_checks(&self) -> bool {
        self.fibers_are_intervals
            && self.elements_are_maxima
            && self.associated_are_minima
            && self.covering_image_is_order_ideal
    }
}

pub fn fiber_extrema(lattice: &FiniteLattice) -> Result<FiberReport> {
    let m_data = minimal_ideal(lattice)?;
    let mi = &m_data.mi_elements;
    if mi.len() > 20 {
        return Err(Error::ResourceLimit(format!(
            "2^{} subsets is past the fiber cap",
            mi.len()
        )));
    }
    let mi_poset = lattice.mi_poset();
    let phi = |mask: u64| -> u64 {
        let mut out = 0u64;
        for v in mask_indices(mask) {
            for w in mi_poset.up_set(v).ones() {
                out |= 1 << w;
            }
        }
        out
    };

    let full = (1u64 << mi.len()) - 1;
    let mut fibers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for mask in 0..=full {
        fibers.entry(phi(mask)).or_default().push(mask);
    }

    let mut fibers_are_intervals = true;
    for (&filter, members) in &fibers {
        let gens = crate::bits::mask_of(&min_generators(&mi_poset, filter));
        for &m in members {
            if m & gens != gens || m & !filter != 0 {
                fibers_are_intervals = false;
            }
        }
        if !members.contains(&filter) || !members.contains(&gens) {
            fibers_are_intervals = false;
        }
    }

    // x^c of every element above the bottom is the maximum of its fiber
    let mut elements_are_maxima = true;
    for e in 0..lattice.len() {
        if e == lattice.bottom() {
            continue;
        }
        let xc: u64 = mi
            .iter()
            .enumerate()
            .filter(|(_, &k)| lattice.leq(e, k))
            .fold(0, |m, (i, _)| m | 1 << i);
        if phi(xc) != xc {
            elements_are_maxima = false;
        }
    }

    // associated primes of M(L) are fiber minima (antichains generating
    // their filter)
    let primes = covering_primes(&m_data.ideal)?;
    let var_position: BTreeMap<&str, usize> = m_data
        .var_names
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut associated_are_minima = true;
    for prime in &primes.associated {
        let mask: u64 = prime
            .iter()
            .map(|v| var_position[v.as_str()])
            .fold(0, |m, i| m | 1 << i);
        let filter = phi(mask);
        let gens = crate::bits::mask_of(&min_generators(&mi_poset, filter));
        if gens != mask {
            associated_are_minima = false;
        }
    }

    // covering subsets map onto a down-closed set of filters
    let covering_of_mask = |mask: u64| -> bool {
        lattice.atoms().iter().all(|&a| {
            mask_indices(mask)
                .into_iter()
                .any(|ki| !lattice.leq(a, mi[ki]))
        })
    };
    let mut covering_filters: Vec<u64> = Vec::new();
    for mask in 0..=full {
        if covering_of_mask(mask) {
            covering_filters.push(phi(mask));
        }
    }
    covering_filters.sort_unstable();
    covering_filters.dedup();
    let mut covering_image_is_order_ideal = true;
    for &f in &covering_filters {
        for g in fibers.keys() {
            // g below f in J (reverse inclusion) means g contains f
            if g & f == f && !covering_filters.contains(g) {
                covering_image_is_order_ideal = false;
            }
        }
    }

    Ok(FiberReport {
        mi_count: mi.len(),
        subset_count: (full + 1) as usize,
        fiber_count: fibers.len(),
        fibers_are_intervals,
        elements_are_maxima,
        associated_are_minima,
        covering_image_is_order_ideal,
    })
}

/// Search for an induced "N": elements a < c, b < c, b < d with no other
/// comparabilities among the four.
#[derive(Clone, Debug)]
pub struct NFreeReport {
    pub n_free: bool,
    /// (a, b, c, d) element indices when an induced N exists
    pub witness: Option<[usize; 4]>,
}

pub fn series_parallel_check(poset: &FinitePoset) -> NFreeReport {
    let n = poset.len();
    let inc = |x: usize, y: usize| !poset.leq(x, y) && !poset.leq(y, x);
    for a in 0..n {
        for b in 0..n {
            if b == a {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if poset.lt(a, c)
                        && poset.lt(b, c)
                        && poset.lt(b, d)
                        && inc(a, b)
                        && inc(a, d)
                        && inc(c, d)
                    {
                        return NFreeReport {
                            n_free: false,
                            witness: Some([a, b, c, d]),
                        };
                    }
                }
            }
        }
    }
    NFreeReport {
        n_free: true,
        witness: None,
    }
}

/// Outcome of the search for an atomic lattice whose mi poset is `P`.
#[derive(Clone, Debug)]
pub enum Realizability {
    Realizable(FiniteLattice),
    NotRealizable,
    /// the subset search exceeded the node budget
    Unknown,
}

/// Search all join-closed subsets of J(P) containing the top for one whose
/// adjoined-bottom lattice is atomic with mi poset isomorphic to P.
pub fn mi_realizability(poset: &FinitePoset, node_budget: u64) -> Result<Realizability> {
    let completion = filter_lattice(poset)?;
    let filters = &completion.filters;
    let j = filters.len();
    if j > 32 {
        return Ok(Realizability::Unknown);
    }
    // positions of the full filter (bottom of J) and empty filter (top of J)
    let bottom_pos = filters
        .iter()
        .position(|&f| f.count_ones() as usize == poset.len())
        .unwrap();
    let top_pos = filters.iter().position(|&f| f == 0).unwrap();
    let candidates: Vec<usize> = (0..j)
        .filter(|&i| i != bottom_pos && i != top_pos)
        .collect();
    if candidates.len() > 62 {
        return Ok(Realizability::Unknown);
    }
    let total = 1u64 << candidates.len();
    let mut nodes = 0u64;
    for choice in 0..total {
        nodes += 1;
        if nodes > node_budget {
            return Ok(Realizability::Unknown);
        }
        let mut members: Vec<u64> = vec![filters[top_pos]];
        members.extend(
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &pos)| filters[pos]),
        );
        // join closure: intersections stay inside
        let closed = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| members.contains(&(a & b))));
        if !closed {
            continue;
        }
        if let Some(lattice) = candidate_lattice(&members, poset.len()) {
            if lattice.is_atomic() {
                let mi_poset = lattice.mi_poset();
                if posets_isomorphic(&mi_poset, poset) {
                    return Ok(Realizability::Realizable(lattice));
                }
            }
        }
    }
    Ok(Realizability::NotRealizable)
}

/// Members (filters, reverse inclusion) plus a fresh bottom.
fn candidate_lattice(members: &[u64], base_len: usize) -> Option<FiniteLattice> {
    let mut sets = members.to_vec();
    sets.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    sets.dedup();
    let n = sets.len() + 1; // fresh bottom at index 0
    let ids: Vec<String> = std::iter::once("bot".to_string())
        .chain(sets.iter().map(|m| format!("f{m}")))
        .collect();
    let leq = |a: usize, b: usize| -> bool {
        if a == 0 {
            return true;
        }
        if b == 0 {
            return a == 0;
        }
        let (fa, fb) = (sets[a - 1], sets[b - 1]);
        fa & fb == fb // fa >= fb as sets means a <= b in reverse inclusion
    };
    let poset = FinitePoset::from_order(ids, leq).ok()?;
    let _ = base_len;
    let _ = n;
    FiniteLattice::from_poset(poset).ok()
}

/// Brute-force poset isomorphism for desk-scale posets.
pub fn posets_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let n = p.len();
    if n > 10 {
        // signature prefilter then backtracking would be needed; desk scale
        // callers stay below this
        panic!("poset isomorphism is desk scale (n <= 10)");
    }
    // quick degree-signature check
    let sig = |poset: &FinitePoset| -> Vec<(usize, usize)> {
        let mut s: Vec<(usize, usize)> = (0..poset.len())
            .map(|v| (poset.down_set(v).count(), poset.up_set(v).count()))
            .collect();
        s.sort_unstable();
        s
    };
    if sig(p) != sig(q) {
        return false;
    }
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn backtrack(
        p: &FinitePoset,
        q: &FinitePoset,
        v: usize,
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == p.len() {
            return true;
        }
        for w in 0..q.len() {
            if used[w] {
                continue;
            }
            let ok = (0..v).all(|u| {
                let img = assignment[u].unwrap();
                p.leq(u, v) == q.leq(img, w) && p.leq(v, u) == q.leq(w, img)
            });
            if ok {
                assignment[v] = Some(w);
                used[w] = true;
                if backtrack(p, q, v + 1, assignment, used) {
                    return true;
                }
                assignment[v] = None;
                used[w] = false;
            }
        }
        false
    }
    backtrack(p, q, 0, &mut assignment, &mut used)
}
