//! Finite posets and lattices.
//!
//! Elements are opaque string ids; every algorithm runs on dense indices with
//! the order relation held as bit rows, one per element. The cover relation
//! (transitive reduction) is derived once and cached.

use std::collections::BTreeMap;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::simplicial::SimplicialComplex;

/// Hard cap on lattice/poset size; exceeding it is an explicit error.
pub const MAX_ELEMENTS: usize = 4096;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    /// up[i] = { j : i <= j }, reflexive
    up: Vec<BitRow>,
    /// dn[i] = { j : j <= i }, reflexive
    dn: Vec<BitRow>,
    covers_up: Vec<Vec<usize>>,
    covers_dn: Vec<Vec<usize>>,
    /// a linear extension: every element appears after everything below it
    topo: Vec<usize>,
}

impl FinitePoset {
    /// Build from ids and cover pairs `(lo, hi)`. The stored order is the
    /// transitive closure; the stored covers are its transitive reduction,
    /// which may be smaller than the input pairs.
    pub fn from_covers(ids: Vec<String>, pairs: &[(String, String)]) -> Result<FinitePoset> {
        if ids.len() > MAX_ELEMENTS {
            return Err(Error::ResourceLimit(format!(
                "{} elements exceeds cap {MAX_ELEMENTS}",
                ids.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let n = ids.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (lo, hi) in pairs {
            let &a = index.get(lo).ok_or_else(|| Error::UnknownId(lo.clone()))?;
            let &b = index.get(hi).ok_or_else(|| Error::UnknownId(hi.clone()))?;
            if a == b {
                return Err(Error::CycleDetected(lo.clone()));
            }
            adj[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm; lowest index first for a deterministic extension
        let mut topo = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        ready.sort_unstable_by(|a, b| b.cmp(a));
        while let Some(v) = ready.pop() {
            topo.push(v);
            for &w in &adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    let pos = ready.binary_search_by(|x| w.cmp(x)).unwrap_or_else(|p| p);
                    ready.insert(pos, w);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(Error::CycleDetected(ids[stuck].clone()));
        }
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for &v in topo.iter().rev() {
            let mut row = BitRow::new(n);
            row.set(v, true);
            for &w in &adj[v] {
                row.or_assign(&up[w]);
            }
            up[v] = row;
        }
        Ok(Self::from_up_rows(ids, index, up, topo))
    }

    fn from_up_rows(
        ids: Vec<String>,
        index: BTreeMap<String, usize>,
        up: Vec<BitRow>,
        topo: Vec<usize>,
    ) -> FinitePoset {
        let n = ids.len();
        let mut dn: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for i in 0..n {
            for j in up[i].ones() {
                dn[j].set(i, true);
            }
        }
        let mut covers_up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut covers_dn: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in up[i].ones() {
                if j == i {
                    continue;
                }
                // j covers i iff nothing sits strictly between
                let mut between = up[i].and(&dn[j]);
                between.set(i, false);
                between.set(j, false);
                if between.is_empty() {
                    covers_up[i].push(j);
                    covers_dn[j].push(i);
                }
            }
        }
        FinitePoset {
            ids,
            index,
            up,
            dn,
            covers_up,
            covers_dn,
            topo,
        }
    }

    /// Build from an order predicate. The relation is validated to be
    /// reflexive, antisymmetric, and transitive.
    pub fn from_order(ids: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FinitePoset> {
        if ids.len() > MAX_ELEMENTS {
            return Err(Error::ResourceLimit(format!(
                "{} elements exceeds cap {MAX_ELEMENTS}",
                ids.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let n = ids.len();
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].set(j, true);
                }
            }
        }
        for i in 0..n {
            if !up[i].get(i) {
                return Err(Error::Invalid(format!(
                    "order not reflexive at `{}`",
                    ids[i]
                )));
            }
            for j in up[i].ones() {
                if j != i && up[j].get(i) {
                    return Err(Error::CycleDetected(ids[i].clone()));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Invalid(format!(
                        "order not transitive at `{}`, `{}`",
                        ids[i], ids[j]
                    )));
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        let down_counts: Vec<usize> = (0..n)
            .map(|j| (0..n).filter(|&i| up[i].get(j)).count())
            .collect();
        order.sort_by_key(|&v| (down_counts[v], v));
        Ok(Self::from_up_rows(ids, index, up, order))
    }

    /// Induced subposet on the given element indices (order preserved).
    pub fn induced(&self, keep: &[usize]) -> FinitePoset {
        let ids: Vec<String> = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let index: BTreeMap<String, usize> = ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let n = keep.len();
        let mut up: Vec<BitRow> = (0..n).map(|_| BitRow::new(n)).collect();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.up[i].get(j) {
                    up[a].set(b, true);
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (self.dn[keep[a]].count(), a));
        Self::from_up_rows(ids, index, up, order)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].get(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn up_set(&self, a: usize) -> &BitRow {
        &self.up[a]
    }

    pub fn down_set(&self, a: usize) -> &BitRow {
        &self.dn[a]
    }

    pub fn upper_covers(&self, a: usize) -> &[usize] {
        &self.covers_up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[usize] {
        &self.covers_dn[a]
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, ups) in self.covers_up.iter().enumerate() {
            for &j in ups {
                out.push((i, j));
            }
        }
        out
    }

    /// A linear extension, bottom elements first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.covers_dn[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.covers_up[i].is_empty())
            .collect()
    }

    /// Length (number of covers) of a longest chain; 0 for the empty poset.
    pub fn height(&self) -> usize {
        self.rank_by_longest_chain().into_iter().max().unwrap_or(0)
    }

    /// rank[v] = length of a longest chain from a minimal element up to v.
    pub fn rank_by_longest_chain(&self) -> Vec<usize> {
        let mut rank = vec![0usize; self.len()];
        for &v in &self.topo {
            for &w in &self.covers_up[v] {
                rank[w] = rank[w].max(rank[v] + 1);
            }
        }
        rank
    }

    /// Width, a minimum chain partition realizing it, and the height.
    ///
    /// The partition comes from a maximum matching on the strict-order
    /// bipartite graph (Dilworth via Koenig); augmenting paths are explored in
    /// index order, so the partition is deterministic.
    pub fn chain_stats(&self) -> ChainStats {
        let n = self.len();
        // match_next[i]: successor of i in its chain
        let mut match_next: Vec<Option<usize>> = vec![None; n];
        let mut match_prev: Vec<Option<usize>> = vec![None; n];

        fn try_augment(
            p: &FinitePoset,
            v: usize,
            seen: &mut [bool],
            match_next: &mut [Option<usize>],
            match_prev: &mut [Option<usize>],
        ) -> bool {
            for w in 0..p.len() {
                if v != w && p.leq(v, w) && !seen[w] {
                    seen[w] = true;
                    let free = match match_prev[w] {
                        None => true,
                        Some(u) => try_augment(p, u, seen, match_next, match_prev),
                    };
                    if free {
                        match_next[v] = Some(w);
                        match_prev[w] = Some(v);
                        return true;
                    }
                }
            }
            false
        }

        for v in 0..n {
            let mut seen = vec![false; n];
            try_augment(self, v, &mut seen, &mut match_next, &mut match_prev);
        }

        let mut chains = Vec::new();
        for start in 0..n {
            if match_prev[start].is_none() {
                let mut chain = vec![start];
                let mut cur = start;
                while let Some(next) = match_next[cur] {
                    chain.push(next);
                    cur = next;
                }
                chains.push(chain);
            }
        }
        ChainStats {
            width: chains.len(),
            height: self.height(),
            chains,
        }
    }

    /// Largest antichain size by brute force; oracle for `chain_stats`.
    pub fn max_antichain_brute(&self) -> usize {
        let n = self.len();
        assert!(
            n <= 24,
            "brute-force antichain search is capped at 24 elements"
        );
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            if (mask.count_ones() as usize) <= best {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let ok = members
                .iter()
                .all(|&a| members.iter().all(|&b| a == b || !self.leq(a, b)));
            if ok {
                best = members.len();
            }
        }
        best
    }

    /// All maximal chains, as ascending index lists.
    pub fn maximal_chains(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = self
            .minimal_elements()
            .into_iter()
            .map(|v| vec![v])
            .collect();
        stack.reverse();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if self.covers_up[last].is_empty() {
                out.push(chain);
                if out.len() > cap {
                    return Err(Error::ResourceLimit(format!(
                        "more than {cap} maximal chains"
                    )));
                }
            } else {
                for &w in self.covers_up[last].iter().rev() {
                    let mut next = chain.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
        }
        Ok(out)
    }

    /// Order complex: vertices are the elements, faces are the chains.
    /// The empty poset yields the `{∅}` complex.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        let facets = self.maximal_chains(1_000_000)?;
        let named: Vec<Vec<String>> = facets
            .iter()
            .map(|c| c.iter().map(|&i| self.ids[i].clone()).collect())
            .collect();
        SimplicialComplex::from_facets(self.ids.clone(), named, true)
    }
}

#[derive(Clone, Debug)]
pub struct ChainStats {
    pub width: usize,
    pub height: usize,
    pub chains: Vec<Vec<usize>>,
}

/// A finite lattice: a poset with unique bottom/top and total join/meet
/// tables, plus atom/coatom lists, gradedness/atomicity flags, and optional
/// monomial labels (an lcm-lattice is a labeled lattice).
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    poset: FinitePoset,
    bottom: usize,
    top: usize,
    join: Vec<u32>,
    meet: Vec<u32>,
    atoms: Vec<usize>,
    coatoms: Vec<usize>,
    is_atomic: bool,
    is_graded: bool,
    labels: Option<Vec<Monomial>>,
}

impl FiniteLattice {
    /// Check lattice structure on the poset and build the tables.
    pub fn from_poset(poset: FinitePoset) -> Result<FiniteLattice> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::Invalid("a lattice cannot be empty".into()));
        }
        let minimals = poset.minimal_elements();
        let maximals = poset.maximal_elements();
        if minimals.len() != 1 || maximals.len() != 1 {
            let wit = if minimals.len() > 1 {
                &minimals
            } else {
                &maximals
            };
            return Err(Error::NotALattice {
                a: poset.id(wit[0]).to_string(),
                b: poset.id(wit[1 % wit.len()]).to_string(),
                kind: if minimals.len() > 1 { "meet" } else { "join" },
            });
        }
        let bottom = minimals[0];
        let top = maximals[0];

        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        // scan candidates in a linear extension; the first minimal element of
        // the common upper bounds must be the only one
        let topo = poset.linear_extension().to_vec();
        for a in 0..n {
            for b in a..n {
                let ub = poset.up_set(a).and(poset.up_set(b));
                let mut found: Option<usize> = None;
                for &c in &topo {
                    if ub.get(c) {
                        // c is minimal among the common upper bounds?
                        let below = ub.and(poset.down_set(c));
                        if below.count() == 1 {
                            if found.is_some() {
                                return Err(Error::NotALattice {
                                    a: poset.id(a).to_string(),
                                    b: poset.id(b).to_string(),
                                    kind: "join",
                                });
                            }
                            found = Some(c);
                        }
                    }
                }
                let j = found.expect("nonempty upper bounds: top exists");
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;

                let lb = poset.down_set(a).and(poset.down_set(b));
                let mut found: Option<usize> = None;
                for &c in topo.iter().rev() {
                    if lb.get(c) {
                        let above = lb.and(poset.up_set(c));
                        if above.count() == 1 {
                            if found.is_some() {
                                return Err(Error::NotALattice {
                                    a: poset.id(a).to_string(),
                                    b: poset.id(b).to_string(),
                                    kind: "meet",
                                });
                            }
                            found = Some(c);
                        }
                    }
                }
                let m = found.expect("nonempty lower bounds: bottom exists");
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
            }
        }

        let atoms = poset.upper_covers(bottom).to_vec();
        let coatoms = poset.lower_covers(top).to_vec();

        // atomic: every element is the join of the atoms below it
        let mut is_atomic = true;
        for e in 0..n {
            let mut acc = bottom;
            for &a in &atoms {
                if poset.leq(a, e) {
                    acc = join[acc * n + a] as usize;
                }
            }
            if acc != e {
                is_atomic = false;
                break;
            }
        }

        // graded: longest-chain rank increases by exactly one on covers
        let rank = poset.rank_by_longest_chain();
        let is_graded = (0..n).all(|v| {
            poset
                .upper_covers(v)
                .iter()
                .all(|&w| rank[w] == rank[v] + 1)
        });

        Ok(FiniteLattice {
            poset,
            bottom,
            top,
            join,
            meet,
            atoms,
            coatoms,
            is_atomic,
            is_graded,
            labels: None,
        })
    }

    /// Attach monomial labels; enforces the separation discipline
    /// `a <= b  iff  label(a) | label(b)`.
    pub fn with_labels(mut self, labels: Vec<Monomial>) -> Result<FiniteLattice> {
        let n = self.poset.len();
        if labels.len() != n {
            return Err(Error::Invalid("one label per element required".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if self.poset.leq(a, b) != labels[a].divides(&labels[b]) {
                    return Err(Error::Invalid(format!(
                        "labels break divisibility at `{}`, `{}`",
                        self.poset.id(a),
                        self.poset.id(b)
                    )));
                }
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, elems: I) -> usize {
        elems
            .into_iter()
            .fold(self.bottom, |acc, e| self.join(acc, e))
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn coatoms(&self) -> &[usize] {
        &self.coatoms
    }

    pub fn is_atomic(&self) -> bool {
        self.is_atomic
    }

    pub fn is_graded(&self) -> bool {
        self.is_graded
    }

    pub fn labels(&self) -> Option<&[Monomial]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<&Monomial> {
        self.labels.as_ref().map(|l| &l[i])
    }

    pub fn id(&self, i: usize) -> &str {
        self.poset.id(i)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// Indices of the proper part, in element order.
    pub fn proper_part(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| i != self.bottom && i != self.top)
            .collect()
    }

    pub fn proper_poset(&self) -> FinitePoset {
        self.poset.induced(&self.proper_part())
    }

    /// Meet-irreducible elements: proper-part elements with exactly one upper
    /// cover in the full lattice.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        self.proper_part()
            .into_iter()
            .filter(|&i| self.poset.upper_covers(i).len() == 1)
            .collect()
    }

    pub fn mi_poset(&self) -> FinitePoset {
        self.poset.induced(&self.meet_irreducibles())
    }

    /// The open interval (a, b) as an induced subposet; `a < b` required.
    pub fn open_interval(&self, a: usize, b: usize) -> Result<FinitePoset> {
        if !self.poset.lt(a, b) {
            return Err(Error::NotComparable {
                a: self.id(a).to_string(),
                b: self.id(b).to_string(),
            });
        }
        let keep: Vec<usize> = (0..self.len())
            .filter(|&c| c != a && c != b && self.poset.lt(a, c) && self.poset.lt(c, b))
            .collect();
        Ok(self.poset.induced(&keep))
    }

    /// Support of an element: the set of atom positions below it.
    pub fn atom_support(&self, e: usize) -> u64 {
        assert!(self.atoms.len() <= 64);
        let mut mask = 0u64;
        for (i, &a) in self.atoms.iter().enumerate() {
            if self.poset.leq(a, e) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// The canonical meet-closed family of atom supports. Two atomic lattices
    /// are isomorphic iff these families agree up to an atom permutation; used
    /// by the roundtrip checks with the identity correspondence.
    pub fn support_family(&self) -> Vec<u64> {
        let mut fam: Vec<u64> = (0..self.len()).map(|e| self.atom_support(e)).collect();
        fam.sort_unstable();
        fam
    }

    /// True when [bottom, b] is a boolean interval. Valid for atomic lattices,
    /// where it reduces to a size count against the atoms below `b`.
    pub fn interval_is_boolean(&self, b: usize) -> bool {
        let atoms_below = self.atom_support(b).count_ones();
        if atoms_below >= 63 {
            return false;
        }
        let size = self.poset.down_set(b).count();
        size == 1usize << atoms_below
    }
}
