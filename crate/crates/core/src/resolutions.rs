//! Multigraded Betti tables and the resolution-theoretic checks: the
//! interval-homology formula with an independent restriction-based oracle,
//! Taylor/Scarf complexes, projective dimension and regularity, linearity
//! tests, and the inequality suite.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::homology::{is_cohen_macaulay, reduced_homology, CmWitness, FieldSpec};
use crate::lcm::{lcm_lattice, minimal_ideal, LcmLattice, MinimalityCheck};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::FiniteLattice;
use crate::simplicial::{stanley_reisner_complex, SimplicialComplex};

/// Multigraded Betti numbers of the quotient S/I: entries at homological
/// index i >= 1 and a multidegree from the lcm lattice. Zero entries are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    pub field: FieldSpec,
    entries: BTreeMap<(u32, Monomial), u64>,
}

impl BettiTable {
    pub fn new(field: FieldSpec) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, i: u32, degree: Monomial, value: u64) {
        if value > 0 {
            self.entries.insert((i, degree), value);
        }
    }

    pub fn entry(&self, i: u32, degree: &Monomial) -> u64 {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Monomial, u64)> {
        self.entries.iter().map(|((i, m), &v)| (*i, m, v))
    }

    /// Total Betti number at homological index i.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Projective dimension of the quotient: the largest homological index.
    pub fn pd(&self) -> u32 {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Regularity of the ideal: max over entries of totaldegree - (i - 1).
    pub fn reg_ideal(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, m)| m.degree() as i64 - (*i as i64 - 1))
            .max()
            .unwrap_or(0)
    }

    /// Multidegrees appearing at index i.
    pub fn degrees_at(&self, i: u32) -> Vec<&Monomial> {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|((_, m), _)| m)
            .collect()
    }

    /// All Betti degrees (multidegrees with a nonzero entry).
    pub fn betti_degrees(&self) -> BTreeSet<&Monomial> {
        self.entries.keys().map(|(_, m)| m).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Staircase text: rows totaldegree - i, columns i, for the quotient
    /// (column 0 carries the free rank 1) and the ideal convention.
    pub fn staircase(&self) -> String {
        let pd = self.pd();
        let mut rows: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
        rows.entry(0).or_insert_with(|| vec![0; pd as usize + 1])[0] = 1;
        for ((i, m), &v) in &self.entries {
            let row = m.degree() as i64 - *i as i64;
            let slot = rows.entry(row).or_insert_with(|| vec![0; pd as usize + 1]);
            slot[*i as usize] += v;
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "  quotient: rows are totaldegree - i, columns i = 0..{pd}"
        );
        let mut header = String::from("       ");
        for i in 0..=pd {
            let _ = write!(header, "{i:>6}");
        }
        let _ = writeln!(out, "{header}");
        for (row, cells) in &rows {
            let _ = write!(out, "  {row:>4}:");
            for c in cells {
                if *c == 0 {
                    let _ = write!(out, "{:>6}", ".");
                } else {
                    let _ = write!(out, "{c:>6}");
                }
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "  ideal convention: beta_j(I) = beta_(j+1)(S/I)");
        out
    }
}

/// Betti numbers from the lcm lattice: the entry at (i, b) is the reduced
/// homology of the open interval (bottom, b) in degree i - 2.
pub fn betti_intervals(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    let x = lcm_lattice(ideal)?;
    betti_from_lattice(&x, field)
}

pub fn betti_from_lattice(x: &LcmLattice, field: FieldSpec) -> Result<BettiTable> {
    let lattice = x.lattice();
    let mut table = BettiTable::new(field);
    for e in 0..lattice.len() {
        if e == lattice.bottom() {
            continue;
        }
        let interval = lattice.open_interval(lattice.bottom(), e)?;
        let complex = interval.order_complex()?;
        let profile = reduced_homology(&complex, field)?;
        for (d, v) in profile.nonzero() {
            let i = (d + 2) as u32;
            table.insert(i, x.label(e).clone(), v);
        }
    }
    Ok(table)
}

/// Independent oracle for squarefree ideals: restriction homology of the
/// Stanley-Reisner complex. The entry at (i, sigma) is the reduced homology
/// of SR(I) restricted to sigma, in degree |sigma| - i - 1.
pub fn betti_hochster(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        let bad = ideal
            .generators()
            .iter()
            .find(|g| !g.is_squarefree())
            .unwrap();
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    let complex = stanley_reisner_complex(ideal)?;
    let n = complex.vertices().len();
    if n > 14 {
        return Err(Error::ResourceLimit(format!(
            "{n} variables is past the 2^n restriction loop cap"
        )));
    }
    let mut table = BettiTable::new(field);
    for mask in 1u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let restricted = complex.restriction(&keep);
        let profile = reduced_homology(&restricted, field)?;
        let sigma =
            Monomial::from_exponents(keep.iter().map(|&v| (complex.vertices()[v].clone(), 1)));
        for (d, v) in profile.nonzero() {
            let i = keep.len() as i64 - d - 1;
            if i >= 1 {
                table.insert(i as u32, sigma.clone(), v);
            }
        }
    }
    Ok(table)
}

/// Cap on the generator count for Taylor label enumeration (2^r subsets).
pub const TAYLOR_CAP: usize = 20;

/// The Taylor simplex on the generators; labels are computed on demand.
#[derive(Clone, Debug)]
pub struct TaylorComplex {
    gens: Vec<Monomial>,
}

impl TaylorComplex {
    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    /// Label of a face given as a generator bitmask.
    pub fn label(&self, mask: u32) -> Monomial {
        let mut m = Monomial::one();
        for (i, g) in self.gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m = m.lcm(g);
            }
        }
        m
    }

    pub fn faces(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.gens.len())
    }

    /// Labels are monotone: a face divides the label of any superface.
    pub fn labels_monotone(&self) -> bool {
        let r = self.gens.len();
        (0..(1u32 << r)).all(|mask| {
            (0..r).all(|i| {
                if mask >> i & 1 == 1 {
                    self.label(mask & !(1 << i)).divides(&self.label(mask))
                } else {
                    true
                }
            })
        })
    }
}

/// The Taylor simplex and the Scarf subcomplex of faces with a unique label.
/// Scarf vertices are named by 1-based generator index.
pub fn taylor_scarf(ideal: &MonomialIdeal) -> Result<(TaylorComplex, SimplicialComplex)> {
    let r = ideal.num_generators();
    if r > TAYLOR_CAP {
        return Err(Error::ResourceLimit(format!(
            "{r} generators is past the Taylor cap {TAYLOR_CAP}"
        )));
    }
    let taylor = TaylorComplex {
        gens: ideal.generators().to_vec(),
    };
    let mut counts: HashMap<Monomial, u32> = HashMap::new();
    for mask in taylor.faces() {
        *counts.entry(taylor.label(mask)).or_insert(0) += 1;
    }
    let mut scarf_masks: Vec<u32> = taylor
        .faces()
        .filter(|&m| counts[&taylor.label(m)] == 1)
        .collect();
    // the Scarf faces form a complex; verify downward closure
    let mask_set: HashSet<u32> = scarf_masks.iter().copied().collect();
    for &m in &scarf_masks {
        for i in 0..r {
            if m >> i & 1 == 1 && !mask_set.contains(&(m & !(1 << i))) {
                return Err(Error::Internal(
                    "Scarf faces failed downward closure".into(),
                ));
            }
        }
    }
    scarf_masks.sort_unstable();
    let vertices: Vec<String> = (1..=r).map(|i| i.to_string()).collect();
    let sets: Vec<Vec<usize>> = scarf_masks
        .iter()
        .map(|&m| (0..r).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    let scarf = SimplicialComplex::from_index_facets(vertices, sets, true);
    Ok((taylor, scarf))
}

/// Per-element diagnosis for whether the Scarf complex supports the minimal
/// resolution: each lattice element must have a boolean closed interval or an
/// acyclic open interval.
#[derive(Clone, Debug)]
pub struct ScarfElementDiagnosis {
    pub id: String,
    pub boolean_interval: bool,
    pub acyclic_interval: bool,
    pub is_betti_degree: bool,
    pub is_scarf_label: bool,
}

#[derive(Clone, Debug)]
pub struct ScarfSupportReport {
    pub supports: bool,
    pub elements: Vec<ScarfElementDiagnosis>,
}

pub fn scarf_supports(ideal: &MonomialIdeal, field: FieldSpec) -> Result<ScarfSupportReport> {
    let x = lcm_lattice(ideal)?;
    let lattice = x.lattice();
    let (taylor, _) = taylor_scarf(ideal)?;
    let mut label_counts: HashMap<Monomial, u32> = HashMap::new();
    for mask in taylor.faces() {
        *label_counts.entry(taylor.label(mask)).or_insert(0) += 1;
    }
    let mut elements = Vec::new();
    let mut supports = true;
    for e in 0..lattice.len() {
        if e == lattice.bottom() {
            continue;
        }
        let label = x.label(e).clone();
        let boolean_interval = lattice.interval_is_boolean(e);
        let interval = lattice.open_interval(lattice.bottom(), e)?;
        let profile = reduced_homology(&interval.order_complex()?, field)?;
        let acyclic_interval = profile.is_acyclic();
        let is_betti_degree = !acyclic_interval; // some interval homology survives
        let is_scarf_label = label_counts.get(&label).copied() == Some(1);
        if !(boolean_interval || acyclic_interval) {
            supports = false;
        }
        // a Betti degree outside the Scarf labels also breaks support
        if is_betti_degree && !is_scarf_label {
            supports = false;
        }
        elements.push(ScarfElementDiagnosis {
            id: lattice.id(e).to_string(),
            boolean_interval,
            acyclic_interval,
            is_betti_degree,
            is_scarf_label,
        });
    }
    Ok(ScarfSupportReport { supports, elements })
}

/// Projective dimension of the quotient and regularity of the ideal.
pub fn pd_and_reg(table: &BettiTable) -> (u32, i64) {
    (table.pd(), table.reg_ideal())
}

/// Linear resolution: generators in a single degree d and every entry at
/// (i, b) with totaldegree(b) = d + i - 1.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let degrees: BTreeSet<u64> = ideal.generators().iter().map(|g| g.degree()).collect();
    if degrees.len() != 1 {
        return Ok(false);
    }
    let d = *degrees.iter().next().unwrap() as i64;
    let table = betti_intervals(ideal, field)?;
    let linear = table
        .iter()
        .all(|(i, m, _)| m.degree() as i64 == d + i as i64 - 1);
    Ok(linear)
}

/// Cap on the generator count for the linear-quotients ordering search.
pub const LINEAR_QUOTIENTS_CAP: usize = 12;

/// Search for a linear-quotients ordering: each colon ideal by the previous
/// generators must be generated by variables. Lexicographic-first
/// backtracking; the ordering found is returned as generator indices.
pub fn linear_quotients(ideal: &MonomialIdeal) -> Result<Option<Vec<usize>>> {
    let r = ideal.num_generators();
    if r > LINEAR_QUOTIENTS_CAP {
        return Err(Error::ResourceLimit(format!(
            "{r} generators is past the ordering-search cap {LINEAR_QUOTIENTS_CAP}"
        )));
    }
    let gens = ideal.generators();
    // the colon condition depends only on the set of earlier generators
    let colon_is_linear = |chosen: u32, next: usize| -> bool {
        let quotients: Vec<Monomial> = (0..r)
            .filter(|&j| chosen >> j & 1 == 1)
            .map(|j| gens[j].checked_div(&gens[j].gcd(&gens[next])).unwrap())
            .collect();
        quotients
            .iter()
            .all(|c| quotients.iter().any(|c2| c2.degree() == 1 && c2.divides(c)))
    };
    let mut failed: HashSet<u32> = HashSet::new();
    fn search(
        r: usize,
        chosen: u32,
        order: &mut Vec<usize>,
        colon_is_linear: &impl Fn(u32, usize) -> bool,
        failed: &mut HashSet<u32>,
    ) -> bool {
        if order.len() == r {
            return true;
        }
        if failed.contains(&chosen) {
            return false;
        }
        for next in 0..r {
            if chosen >> next & 1 == 1 {
                continue;
            }
            if order.is_empty() || colon_is_linear(chosen, next) {
                order.push(next);
                if search(r, chosen | 1 << next, order, colon_is_linear, failed) {
                    return true;
                }
                order.pop();
            }
        }
        failed.insert(chosen);
        false
    }
    let mut order = Vec::new();
    if search(r, 0, &mut order, &colon_is_linear, &mut failed) {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}

/// Basis-exchange test: the generators are the bases of a matroid. Requires
/// squarefree generators of one degree; for every ordered pair and every
/// variable in the difference there must be a swap staying in the ideal.
#[derive(Clone, Debug)]
pub struct MatroidalCheck {
    pub matroidal: bool,
    /// (i, j, variable) with no valid exchange
    pub witness: Option<(usize, usize, String)>,
}

pub fn matroidal(ideal: &MonomialIdeal) -> Result<MatroidalCheck> {
    if !ideal.is_squarefree() {
        let bad = ideal
            .generators()
            .iter()
            .find(|g| !g.is_squarefree())
            .unwrap();
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    let gens = ideal.generators();
    let degrees: BTreeSet<u64> = gens.iter().map(|g| g.degree()).collect();
    if degrees.len() > 1 {
        return Ok(MatroidalCheck {
            matroidal: false,
            witness: None,
        });
    }
    for (i, mi) in gens.iter().enumerate() {
        for (j, mj) in gens.iter().enumerate() {
            if i == j {
                continue;
            }
            for (v, _) in mi.exponents() {
                if mj.exponent(v) > 0 {
                    continue;
                }
                let found = mj.exponents().any(|(w, _)| {
                    if mi.exponent(w) > 0 {
                        return false;
                    }
                    let swapped = mi
                        .checked_div(&Monomial::variable(v))
                        .unwrap()
                        .checked_mul(&Monomial::variable(w))
                        .unwrap();
                    gens.contains(&swapped)
                });
                if !found {
                    return Ok(MatroidalCheck {
                        matroidal: false,
                        witness: Some((i, j, v.to_string())),
                    });
                }
            }
        }
    }
    Ok(MatroidalCheck {
        matroidal: true,
        witness: None,
    })
}

/// The ideal generated by the multidegrees of the first syzygies (index 2 of
/// the quotient table); `None` when there are none.
pub fn first_syzygy_ideal(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<Option<MonomialIdeal>> {
    let table = betti_intervals(ideal, field)?;
    let degrees: Vec<Monomial> = table.degrees_at(2).into_iter().cloned().collect();
    if degrees.is_empty() {
        return Ok(None);
    }
    Ok(Some(MonomialIdeal::new(degrees)?))
}

/// I restricted below a lattice element: the generators dividing `bound`.
pub fn restriction_ideal(ideal: &MonomialIdeal, bound: &Monomial) -> Result<MonomialIdeal> {
    let x = lcm_lattice(ideal)?;
    if x.element_of(bound).is_none() {
        return Err(Error::NotALatticeElement(bound.to_string()));
    }
    let gens: Vec<Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.divides(bound))
        .cloned()
        .collect();
    MonomialIdeal::new(gens)
}

/// The lcm lattice of the restriction equals the closed interval [bottom, b].
pub fn restriction_interval_check(ideal: &MonomialIdeal, bound: &Monomial) -> Result<bool> {
    let x = lcm_lattice(ideal)?;
    let Some(b) = x.element_of(bound) else {
        return Err(Error::NotALatticeElement(bound.to_string()));
    };
    let restricted = restriction_ideal(ideal, bound)?;
    let y = lcm_lattice(&restricted)?;
    // compare support families over the sub-atom list
    let lattice = x.lattice();
    let sub_atoms: Vec<usize> = lattice
        .atoms()
        .iter()
        .copied()
        .filter(|&a| lattice.leq(a, b))
        .collect();
    let mut family: Vec<u64> = (0..lattice.len())
        .filter(|&e| lattice.leq(e, b))
        .map(|e| {
            sub_atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| lattice.leq(a, e))
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    family.sort_unstable();
    // atom i of y corresponds to sub_atoms position with the same label
    let mut remap: Vec<usize> = Vec::new();
    for pos in 0..y.lattice().atoms().len() {
        let atom = y.lattice().atoms()[pos];
        let label = y.label(atom);
        let Some(sub_pos) = sub_atoms.iter().position(|&a| x.label(a) == label) else {
            return Ok(false);
        };
        remap.push(sub_pos);
    }
    let mut other: Vec<u64> = (0..y.lattice().len())
        .map(|e| {
            let mask = y.lattice().atom_support(e);
            (0..remap.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u64, |m, i| m | 1 << remap[i])
        })
        .collect();
    other.sort_unstable();
    Ok(family == other)
}

/// The two conditions characterizing when the minimal ideal of a lattice has
/// a linear resolution: the proper part is Cohen-Macaulay and the minimal
/// labels gain exactly one degree on covers above the bottom.
#[derive(Clone, Debug)]
pub struct LinearCharacterization {
    pub poset_cm: bool,
    pub cm_witness: Option<CmWitness>,
    pub cover_degrees: bool,
    pub degree_witness: Option<(String, String)>,
    pub holds: bool,
}

pub fn lattice_linear_characterization(
    lattice: &FiniteLattice,
    field: FieldSpec,
) -> Result<LinearCharacterization> {
    let m = minimal_ideal(lattice)?;
    let proper = lattice.proper_poset();
    let complex = proper.order_complex()?;
    let (poset_cm, cm_witness) = is_cohen_macaulay(&complex, field)?;
    let mut cover_degrees = true;
    let mut degree_witness = None;
    'outer: for a in 0..lattice.len() {
        if a == lattice.bottom() {
            continue;
        }
        for &b in lattice.poset().upper_covers(a) {
            if m.element_labels[b].degree() != m.element_labels[a].degree() + 1 {
                cover_degrees = false;
                degree_witness = Some((lattice.id(a).to_string(), lattice.id(b).to_string()));
                break 'outer;
            }
        }
    }
    Ok(LinearCharacterization {
        poset_cm,
        cm_witness,
        cover_degrees,
        degree_witness,
        holds: poset_cm && cover_degrees,
    })
}

/// Structure of a squarefree ideal with a linear resolution: after dividing
/// out the gcd of the generators it is the minimal ideal of its lcm lattice.
#[derive(Clone, Debug)]
pub struct MinimalityFromLinearity {
    pub common_factor: Monomial,
    pub check: MinimalityCheck,
}

pub fn minimality_from_linearity(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<MinimalityFromLinearity> {
    if !ideal.is_squarefree() {
        let bad = ideal
            .generators()
            .iter()
            .find(|g| !g.is_squarefree())
            .unwrap();
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    if !has_linear_resolution(ideal, field)? {
        return Err(Error::NoLinearResolution);
    }
    let g = ideal.gcd_of_generators();
    let reduced = if g.is_one() {
        ideal.clone()
    } else {
        ideal.divide_by(&g)?
    };
    let check = crate::lcm::is_minimal_ideal(&reduced)?;
    Ok(MinimalityFromLinearity {
        common_factor: g,
        check,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClauseStatus {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct Clause {
    pub id: &'static str,
    pub detail: String,
    pub status: ClauseStatus,
    /// an inequality that holds with equality
    pub tight: bool,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub clauses: Vec<Clause>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| !matches!(c.status, ClauseStatus::Fail))
    }

    pub fn failures(&self) -> Vec<&Clause> {
        self.clauses
            .iter()
            .filter(|c| matches!(c.status, ClauseStatus::Fail))
            .collect()
    }
}

/// Resource limits become clause skips; every other error propagates.
fn guard<T>(result: Result<T>) -> Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::ResourceLimit(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn skipped(id: &'static str, reason: &str) -> Clause {
    Clause {
        id,
        detail: String::new(),
        status: ClauseStatus::Skipped(reason.to_string()),
        tight: false,
    }
}

fn codim(ideal: &MonomialIdeal) -> Result<usize> {
    // height = smallest associated prime of the polarization
    let (pol, _) = ideal.polarize()?;
    let primes = crate::distributive::covering_primes(&pol)?;
    primes
        .associated
        .iter()
        .map(|p| p.len())
        .min()
        .ok_or_else(|| Error::Internal("no associated primes".into()))
}

fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let (pol, _) = ideal.polarize()?;
    let primes = crate::distributive::covering_primes(&pol)?;
    let sizes: BTreeSet<usize> = primes.associated.iter().map(|p| p.len()).collect();
    Ok(sizes.len() <= 1)
}

fn is_cm_ideal(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let (pol, _) = ideal.polarize()?;
    let complex = stanley_reisner_complex(&pol)?;
    Ok(is_cohen_macaulay(&complex, field)?.0)
}

const ALL_CLAUSES: [&str; 14] = [
    "pd-le-width-height",
    "dual-regularity-equality",
    "dual-reg-le-width-height",
    "dual-homology-vanishing",
    "codim-le-minimal",
    "pure-descends",
    "cm-iff-codim-and-minimal-cm",
    "linear-quotients-descend",
    "matroidal-descends",
    "reg-minimal-le-reg",
    "graded-lattice",
    "cover-degrees",
    "betti-rank",
    "interval-length-is-link-dim",
];

/// Evaluate every inequality and inheritance clause on one ideal. Clauses
/// whose hypothesis fails are reported as skipped, never dropped. A single
/// generator gives a two-element lcm lattice with no meet-irreducibles, so
/// every clause that compares against the minimal ideal is skipped.
pub fn bound_checks(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BoundReport> {
    let mut clauses = Vec::new();
    let x = lcm_lattice(ideal)?;
    let lattice = x.lattice();
    if lattice.meet_irreducibles().is_empty() {
        for id in ALL_CLAUSES
            .into_iter()
            .chain(["uniform-generation", "linear-descends"])
        {
            clauses.push(Clause {
                id,
                detail: String::new(),
                status: ClauseStatus::Skipped("trivial lcm lattice (single generator)".into()),
                tight: false,
            });
        }
        return Ok(BoundReport { clauses });
    }
    let Some(table) = guard(betti_from_lattice(&x, field))? else {
        for id in ALL_CLAUSES
            .into_iter()
            .chain(["uniform-generation", "linear-descends"])
        {
            clauses.push(skipped(id, "resource limit"));
        }
        return Ok(BoundReport { clauses });
    };
    let (pd, reg) = pd_and_reg(&table);
    let mi_stats = lattice.mi_poset().chain_stats();
    let height = lattice.poset().height();
    let bound = mi_stats.width.min(height);
    let m_data = minimal_ideal(lattice)?;
    let squarefree = ideal.is_squarefree();
    // linearity straight off the table: one generator degree, every entry on
    // the expected diagonal
    let gen_degrees: BTreeSet<u64> = ideal.generators().iter().map(|g| g.degree()).collect();
    let linear = gen_degrees.len() == 1 && {
        let d = *gen_degrees.iter().next().unwrap() as i64;
        table
            .iter()
            .all(|(i, m, _)| m.degree() as i64 == d + i as i64 - 1)
    };

    clauses.push(Clause {
        id: "pd-le-width-height",
        detail: format!(
            "pd {pd} <= min(width {w}, height {h}) = {bound}",
            w = mi_stats.width,
            h = height
        ),
        status: if (pd as usize) <= bound {
            ClauseStatus::Pass
        } else {
            ClauseStatus::Fail
        },
        tight: pd as usize == bound,
    });

    if squarefree {
        let sr = stanley_reisner_complex(ideal)?;
        let dual_ideal = sr.alexander_dual()?.stanley_reisner_ideal()?;
        let dual_table = betti_intervals(&dual_ideal, field)?;
        let dual_reg = dual_table.reg_ideal();
        clauses.push(Clause {
            id: "dual-regularity-equality",
            detail: format!("pd {pd} = reg of the dual {dual_reg}"),
            status: if pd as i64 == dual_reg {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: true,
        });
        clauses.push(Clause {
            id: "dual-reg-le-width-height",
            detail: format!("reg of the dual {dual_reg} <= {bound}"),
            status: if dual_reg <= bound as i64 {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: dual_reg == bound as i64,
        });
        // homology of SR(I) vanishes below n - #mi - 1
        let profile = reduced_homology(&sr, field)?;
        let n = ideal.support_variables().len() as i64;
        let mi_count = lattice.meet_irreducibles().len() as i64;
        let floor = n - mi_count - 1;
        let ok = profile.nonzero().all(|(d, _)| d >= floor);
        clauses.push(Clause {
            id: "dual-homology-vanishing",
            detail: format!("reduced homology of SR vanishes below degree {floor}"),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
    } else {
        for id in [
            "dual-regularity-equality",
            "dual-reg-le-width-height",
            "dual-homology-vanishing",
        ] {
            clauses.push(Clause {
                id,
                detail: String::new(),
                status: ClauseStatus::Skipped("ideal is not squarefree".into()),
                tight: false,
            });
        }
    }

    let codims = match (guard(codim(ideal))?, guard(codim(&m_data.ideal))?) {
        (Some(i), Some(m)) => {
            clauses.push(Clause {
                id: "codim-le-minimal",
                detail: format!("codim {i} <= codim of the minimal ideal {m}"),
                status: if i <= m {
                    ClauseStatus::Pass
                } else {
                    ClauseStatus::Fail
                },
                tight: i == m,
            });
            Some((i, m))
        }
        _ => {
            clauses.push(skipped("codim-le-minimal", "resource limit"));
            None
        }
    };

    match (guard(is_unmixed(ideal))?, guard(is_unmixed(&m_data.ideal))?) {
        (Some(true), Some(ok)) => clauses.push(Clause {
            id: "pure-descends",
            detail: "unmixed ideal gives an unmixed minimal ideal".into(),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        }),
        (Some(false), _) => clauses.push(skipped("pure-descends", "ideal is not unmixed")),
        _ => clauses.push(skipped("pure-descends", "resource limit")),
    }

    match (
        guard(is_cm_ideal(ideal, field))?,
        guard(is_cm_ideal(&m_data.ideal, field))?,
        codims,
    ) {
        (Some(cm_i), Some(cm_m), Some((ci, cm))) => {
            let rhs = ci == cm && cm_m;
            clauses.push(Clause {
                id: "cm-iff-codim-and-minimal-cm",
                detail: format!(
                    "CM({cm_i}) iff codim equal ({}) and minimal ideal CM ({cm_m})",
                    ci == cm
                ),
                status: if cm_i == rhs {
                    ClauseStatus::Pass
                } else {
                    ClauseStatus::Fail
                },
                tight: false,
            });
        }
        _ => clauses.push(skipped("cm-iff-codim-and-minimal-cm", "resource limit")),
    }

    if squarefree && ideal.num_generators() <= LINEAR_QUOTIENTS_CAP {
        match linear_quotients(ideal)? {
            Some(_) => {
                let ok = linear_quotients(&m_data.ideal)?.is_some();
                clauses.push(Clause {
                    id: "linear-quotients-descend",
                    detail: "linear quotients pass to the minimal ideal".into(),
                    status: if ok {
                        ClauseStatus::Pass
                    } else {
                        ClauseStatus::Fail
                    },
                    tight: false,
                });
            }
            None => clauses.push(Clause {
                id: "linear-quotients-descend",
                detail: String::new(),
                status: ClauseStatus::Skipped("no linear quotients".into()),
                tight: false,
            }),
        }
        let mat = matroidal(ideal)?;
        if mat.matroidal {
            let ok = matroidal(&m_data.ideal)?.matroidal;
            clauses.push(Clause {
                id: "matroidal-descends",
                detail: "matroidal ideal gives a matroidal minimal ideal".into(),
                status: if ok {
                    ClauseStatus::Pass
                } else {
                    ClauseStatus::Fail
                },
                tight: false,
            });
        } else {
            clauses.push(Clause {
                id: "matroidal-descends",
                detail: String::new(),
                status: ClauseStatus::Skipped("ideal is not matroidal".into()),
                tight: false,
            });
        }
    } else {
        for id in ["linear-quotients-descend", "matroidal-descends"] {
            clauses.push(Clause {
                id,
                detail: String::new(),
                status: ClauseStatus::Skipped(if squarefree {
                    "generator count past the search cap".into()
                } else {
                    "ideal is not squarefree".into()
                }),
                tight: false,
            });
        }
    }

    match guard(betti_intervals(&m_data.ideal, field))? {
        Some(m_table) => {
            let m_reg = m_table.reg_ideal();
            clauses.push(Clause {
                id: "reg-minimal-le-reg",
                detail: format!("reg of the minimal ideal {m_reg} <= reg {reg}"),
                status: if m_reg <= reg {
                    ClauseStatus::Pass
                } else {
                    ClauseStatus::Fail
                },
                tight: m_reg == reg,
            });
        }
        None => clauses.push(skipped("reg-minimal-le-reg", "resource limit")),
    }

    if linear {
        clauses.push(Clause {
            id: "graded-lattice",
            detail: "the lcm lattice is graded".into(),
            status: if lattice.is_graded() {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
        // covers above the bottom raise the label degree by one
        let mut ok = true;
        for a in 0..lattice.len() {
            if a == lattice.bottom() {
                continue;
            }
            for &b in lattice.poset().upper_covers(a) {
                if x.label(b).degree() != x.label(a).degree() + 1 {
                    ok = false;
                }
            }
        }
        clauses.push(Clause {
            id: "cover-degrees",
            detail: "label degrees rise by one on covers above the bottom".into(),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
        // Betti degrees sit at their rank
        let rank = lattice.poset().rank_by_longest_chain();
        let mut ok = true;
        for (i, m, _) in table.iter() {
            let e = x.element_of(m).expect("betti degrees are lattice elements");
            if rank[e] as u32 != i {
                ok = false;
            }
        }
        clauses.push(Clause {
            id: "betti-rank",
            detail: "every Betti degree at index i has rank i".into(),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
        if squarefree {
            let sr = stanley_reisner_complex(ideal)?;
            let dual = sr.alexander_dual()?;
            let mut ok = true;
            for e in 0..lattice.len() {
                if e == lattice.bottom() {
                    continue;
                }
                let interval = lattice.open_interval(lattice.bottom(), e)?;
                let length = if interval.is_empty() {
                    -1
                } else {
                    interval.height() as i64
                };
                let support: BTreeSet<&str> = x.label(e).support().collect();
                let face: Vec<usize> = dual
                    .vertices()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !support.contains(v.as_str()))
                    .map(|(i, _)| i)
                    .collect();
                if !dual.contains_face(&face) {
                    ok = false;
                    continue;
                }
                let link = dual.link(&face)?;
                if link.dim().unwrap_or(-2) != length {
                    ok = false;
                }
            }
            clauses.push(Clause {
                id: "interval-length-is-link-dim",
                detail: "open-interval length equals the dual link dimension".into(),
                status: if ok {
                    ClauseStatus::Pass
                } else {
                    ClauseStatus::Fail
                },
                tight: false,
            });
        } else {
            clauses.push(Clause {
                id: "interval-length-is-link-dim",
                detail: String::new(),
                status: ClauseStatus::Skipped("ideal is not squarefree".into()),
                tight: false,
            });
        }
        // the minimal ideal is uniformly generated with unit cover steps
        let degrees: BTreeSet<u64> = m_data
            .ideal
            .generators()
            .iter()
            .map(|g| g.degree())
            .collect();
        let mut ok = degrees.len() == 1;
        for a in 0..lattice.len() {
            if a == lattice.bottom() {
                continue;
            }
            for &b in lattice.poset().upper_covers(a) {
                if m_data.element_labels[b].degree() != m_data.element_labels[a].degree() + 1 {
                    ok = false;
                }
            }
        }
        clauses.push(Clause {
            id: "uniform-generation",
            detail: "minimal ideal equigenerated with unit cover steps".into(),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
        let ok = has_linear_resolution(&m_data.ideal, field)?;
        clauses.push(Clause {
            id: "linear-descends",
            detail: "linear resolution passes to the minimal ideal".into(),
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
            tight: false,
        });
    } else {
        for id in [
            "graded-lattice",
            "cover-degrees",
            "betti-rank",
            "interval-length-is-link-dim",
            "uniform-generation",
            "linear-descends",
        ] {
            clauses.push(Clause {
                id,
                detail: String::new(),
                status: ClauseStatus::Skipped("no linear resolution".into()),
                tight: false,
            });
        }
    }

    Ok(BoundReport { clauses })
}
