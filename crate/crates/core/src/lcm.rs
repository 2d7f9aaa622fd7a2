//! Lattice/ideal constructions: lcm-lattices, the minimal ideal of a finite
//! atomic lattice, the nonminimal companion over the whole proper part and its
//! boolean specialization, essential pairs and variable filters, the universal
//! embedding, chain depolarization, and the minimality test.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::monomial::{is_variable_name, Monomial, MonomialIdeal};
use crate::poset::{FiniteLattice, FinitePoset, MAX_ELEMENTS};
use crate::simplicial::SimplicialComplex;

/// The lcm-lattice of a monomial ideal: the labeled lattice of all least
/// common multiples of the generators, divisibility order, 1 adjoined at the
/// bottom. Atoms are exactly the minimal generators.
#[derive(Clone, Debug)]
pub struct LcmLattice {
    lattice: FiniteLattice,
    ideal: MonomialIdeal,
    element_index: BTreeMap<Monomial, usize>,
    /// atom position -> index of its generator in `ideal.generators()`
    atom_to_generator: Vec<usize>,
}

impl LcmLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn label(&self, e: usize) -> &Monomial {
        &self.lattice.labels().expect("lcm lattices are labeled")[e]
    }

    pub fn element_of(&self, m: &Monomial) -> Option<usize> {
        self.element_index.get(m).copied()
    }

    pub fn atom_to_generator(&self) -> &[usize] {
        &self.atom_to_generator
    }

    /// Generator index -> atom position.
    pub fn generator_to_atom(&self) -> Vec<usize> {
        let mut out = vec![0; self.atom_to_generator.len()];
        for (atom, &gen) in self.atom_to_generator.iter().enumerate() {
            out[gen] = atom;
        }
        out
    }
}

pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice> {
    lcm_lattice_capped(ideal, MAX_ELEMENTS)
}

pub fn lcm_lattice_capped(ideal: &MonomialIdeal, cap: usize) -> Result<LcmLattice> {
    // close the generators under lcm
    let mut elements: BTreeSet<Monomial> = BTreeSet::new();
    let mut frontier: Vec<Monomial> = ideal.generators().to_vec();
    while let Some(m) = frontier.pop() {
        if elements.contains(&m) {
            continue;
        }
        for g in ideal.generators() {
            let l = m.lcm(g);
            if l != m && !elements.contains(&l) {
                frontier.push(l);
            }
        }
        elements.insert(m);
        if elements.len() > cap {
            return Err(Error::ResourceLimit(format!(
                "lcm closure exceeds {cap} elements"
            )));
        }
    }
    elements.insert(Monomial::one());

    let mut ordered: Vec<Monomial> = elements.into_iter().collect();
    ordered.sort_by_key(|m| (m.degree(), m.to_string()));
    let ids: Vec<String> = ordered.iter().map(|m| m.to_string()).collect();
    let poset = FinitePoset::from_order(ids, |a, b| ordered[a].divides(&ordered[b]))?;
    let lattice = FiniteLattice::from_poset(poset)?.with_labels(ordered.clone())?;
    if !lattice.is_atomic() {
        return Err(Error::Internal("lcm lattice must be atomic".into()));
    }
    let element_index: BTreeMap<Monomial, usize> = ordered
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let atoms = lattice.atoms().to_vec();
    let mut atom_to_generator = Vec::with_capacity(atoms.len());
    for &a in &atoms {
        let m = &ordered[a];
        let gen = ideal
            .generators()
            .iter()
            .position(|g| g == m)
            .ok_or_else(|| Error::Internal(format!("atom `{m}` is not a generator")))?;
        atom_to_generator.push(gen);
    }
    if atom_to_generator.len() != ideal.num_generators() {
        return Err(Error::Internal(
            "atoms and minimal generators must agree".into(),
        ));
    }
    Ok(LcmLattice {
        lattice,
        ideal: ideal.clone(),
        element_index,
        atom_to_generator,
    })
}

/// Usable variable names for a list of element ids: the ids themselves when
/// they are distinct identifiers, otherwise `x0, x1, ...` in element order.
fn names_for(ids: &[&str]) -> Vec<String> {
    let ok = ids.iter().all(|id| is_variable_name(id))
        && ids.iter().collect::<BTreeSet<_>>().len() == ids.len();
    if ok {
        ids.iter().map(|s| s.to_string()).collect()
    } else {
        (0..ids.len()).map(|i| format!("x{i}")).collect()
    }
}

fn check_atomic(lattice: &FiniteLattice) -> Result<()> {
    if lattice.is_atomic() {
        return Ok(());
    }
    for e in 0..lattice.len() {
        let join = lattice.join_all(
            lattice
                .atoms()
                .iter()
                .copied()
                .filter(|&a| lattice.leq(a, e)),
        );
        if join != e {
            return Err(Error::NotAtomic(lattice.id(e).to_string()));
        }
    }
    unreachable!("non-atomic lattice must have a witness")
}

/// The minimal squarefree ideal of an atomic lattice: one variable per
/// meet-irreducible element, one generator per atom.
#[derive(Clone, Debug)]
pub struct MinimalIdealData {
    pub ideal: MonomialIdeal,
    /// meet-irreducible elements, in element order
    pub mi_elements: Vec<usize>,
    /// variable for each mi element, aligned with `mi_elements`
    pub var_names: Vec<String>,
    /// the generator of each atom, aligned with `lattice.atoms()`
    pub atom_generators: Vec<Monomial>,
    /// the label monomial of every lattice element
    pub element_labels: Vec<Monomial>,
}

impl MinimalIdealData {
    pub fn var_of(&self, mi_element: usize) -> Option<&str> {
        self.mi_elements
            .iter()
            .position(|&m| m == mi_element)
            .map(|i| self.var_names[i].as_str())
    }

    /// Generator index (in the sorted generating set) of each atom position.
    pub fn atom_to_generator(&self) -> Vec<usize> {
        self.atom_generators
            .iter()
            .map(|g| {
                self.ideal
                    .generators()
                    .iter()
                    .position(|h| h == g)
                    .expect("atom generators are generators")
            })
            .collect()
    }
}

pub fn minimal_ideal(lattice: &FiniteLattice) -> Result<MinimalIdealData> {
    check_atomic(lattice)?;
    let mi = lattice.meet_irreducibles();
    if mi.is_empty() {
        return Err(Error::TrivialLattice);
    }
    let ids: Vec<&str> = mi.iter().map(|&m| lattice.id(m)).collect();
    let var_names = names_for(&ids);
    let label_of = |e: usize| -> Monomial {
        Monomial::from_exponents(
            mi.iter()
                .zip(&var_names)
                .filter(|(&l, _)| !lattice.leq(e, l))
                .map(|(_, v)| (v.clone(), 1)),
        )
    };
    let element_labels: Vec<Monomial> = (0..lattice.len()).map(label_of).collect();
    let atom_generators: Vec<Monomial> = lattice
        .atoms()
        .iter()
        .map(|&a| element_labels[a].clone())
        .collect();
    if atom_generators.iter().any(|g| g.is_one()) {
        return Err(Error::Internal(
            "an atom produced the unit generator".into(),
        ));
    }
    let ideal = MonomialIdeal::new(atom_generators.clone())?;
    if ideal.num_generators() != lattice.atoms().len() {
        return Err(Error::Internal(
            "atom generators must already be minimal".into(),
        ));
    }
    Ok(MinimalIdealData {
        ideal,
        mi_elements: mi,
        var_names,
        atom_generators,
        element_labels,
    })
}

/// Same construction with the whole proper part in place of mi(L).
#[derive(Clone, Debug)]
pub struct NonminimalIdealData {
    pub ideal: MonomialIdeal,
    pub proper_elements: Vec<usize>,
    pub var_names: Vec<String>,
    pub atom_generators: Vec<Monomial>,
}

pub fn nonminimal_ideal(lattice: &FiniteLattice) -> Result<NonminimalIdealData> {
    check_atomic(lattice)?;
    let proper = lattice.proper_part();
    if proper.is_empty() {
        return Err(Error::TrivialLattice);
    }
    let ids: Vec<&str> = proper.iter().map(|&m| lattice.id(m)).collect();
    let var_names = names_for(&ids);
    let atom_generators: Vec<Monomial> = lattice
        .atoms()
        .iter()
        .map(|&a| {
            Monomial::from_exponents(
                proper
                    .iter()
                    .zip(&var_names)
                    .filter(|(&l, _)| !lattice.leq(a, l))
                    .map(|(_, v)| (v.clone(), 1)),
            )
        })
        .collect();
    if atom_generators.iter().any(|g| g.is_one()) {
        return Err(Error::Internal(
            "an atom produced the unit generator".into(),
        ));
    }
    let ideal = MonomialIdeal::new(atom_generators.clone())?;
    Ok(NonminimalIdealData {
        ideal,
        proper_elements: proper,
        var_names,
        atom_generators,
    })
}

/// Cap on the atom count for the boolean specialization (2^r subsets).
pub const SPECIALIZE_ATOM_CAP: usize = 12;

/// The specialization data tying N(2^r) to N(L): the join map on subsets,
/// the maximum of each fiber, the variables to collapse, and whether the
/// collapsed generators of N(2^r) equal the generators of N(L).
#[derive(Clone, Debug)]
pub struct SpecializationData {
    /// deg[mask] = lattice element equal to the join of the atoms in `mask`
    pub deg: Vec<usize>,
    /// element -> the largest subset in its fiber (the atoms below it)
    pub fiber_max: BTreeMap<usize, u32>,
    /// proper subsets that are not the maximum of their fiber
    pub kill_set: Vec<u32>,
    pub boolean_ideal: MonomialIdeal,
    pub specialized: MonomialIdeal,
    pub target: MonomialIdeal,
    pub identity_check: bool,
}

pub fn specialize_nonminimal(lattice: &FiniteLattice) -> Result<SpecializationData> {
    check_atomic(lattice)?;
    let r = lattice.atoms().len();
    if r > SPECIALIZE_ATOM_CAP {
        return Err(Error::TooManyAtoms {
            got: r,
            cap: SPECIALIZE_ATOM_CAP,
        });
    }
    let target_data = nonminimal_ideal(lattice)?;
    let atoms = lattice.atoms().to_vec();
    let full: u32 = if r == 32 { !0 } else { (1u32 << r) - 1 };

    let mut deg = vec![0usize; (full as usize) + 1];
    for mask in 0..=full {
        deg[mask as usize] =
            lattice.join_all((0..r).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i]));
    }
    let mut fiber_max: BTreeMap<usize, u32> = BTreeMap::new();
    for e in 0..lattice.len() {
        let mask = (0..r)
            .filter(|&i| lattice.leq(atoms[i], e))
            .fold(0u32, |m, i| m | 1 << i);
        if deg[mask as usize] == e {
            fiber_max.insert(e, mask);
        }
    }
    let kill_set: Vec<u32> = (1..full)
        .filter(|&m| fiber_max.get(&deg[m as usize]) != Some(&m))
        .collect();

    // N(2^r) over variables F<mask>, one per proper subset
    let subset_var = |mask: u32| format!("F{mask}");
    let boolean_gens: Vec<Monomial> = (0..r)
        .map(|i| {
            Monomial::from_exponents(
                (1..full)
                    .filter(|m| m >> i & 1 == 0)
                    .map(|m| (subset_var(m), 1)),
            )
        })
        .collect();
    let boolean_ideal = MonomialIdeal::new(boolean_gens.clone())?;

    // collapse: killed subsets -> 1, surviving subsets -> the N(L) variable
    // of their join
    let var_of_element: BTreeMap<usize, String> = target_data
        .proper_elements
        .iter()
        .zip(&target_data.var_names)
        .map(|(&e, v)| (e, v.clone()))
        .collect();
    let mut sigma: BTreeMap<String, Option<String>> = BTreeMap::new();
    for m in 1..full {
        let name = subset_var(m);
        if kill_set.contains(&m) {
            sigma.insert(name, None);
        } else {
            let e = deg[m as usize];
            sigma.insert(name, Some(var_of_element[&e].clone()));
        }
    }
    // compare per-atom images, not just the minimalized ideal
    let mut identity_check = true;
    let mut specialized_gens = Vec::new();
    for (i, g) in boolean_gens.iter().enumerate() {
        let image =
            Monomial::from_exponents(g.exponents().filter_map(|(v, e)| match sigma.get(v) {
                Some(None) => None,
                Some(Some(w)) => Some((w.clone(), e)),
                None => Some((v.to_string(), e)),
            }));
        if image != target_data.atom_generators[i] {
            identity_check = false;
        }
        specialized_gens.push(image);
    }
    let specialized = MonomialIdeal::new(specialized_gens)?;
    if specialized != target_data.ideal {
        identity_check = false;
    }
    Ok(SpecializationData {
        deg,
        fiber_max,
        kill_set,
        boolean_ideal,
        specialized,
        target: target_data.ideal,
        identity_check,
    })
}

/// A meet-irreducible element together with its unique upper cover.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EssentialPair {
    pub k: usize,
    pub l: usize,
}

/// Variable filters and essential-pair bookkeeping for a squarefree ideal.
#[derive(Clone, Debug)]
pub struct EssentialAnalysis {
    pub mi: Vec<usize>,
    pub pairs: Vec<EssentialPair>,
    /// support variables of the ideal, in sorted order
    pub vars: Vec<String>,
    /// L(y,1) per variable: the elements whose label the variable divides
    pub var_filters: Vec<BitRow>,
    /// L(x_k,1) per mi element: the elements not below k
    pub mi_filters: Vec<BitRow>,
    /// A(k): variables whose filter equals x_k's filter (indices into `vars`)
    pub a_sets: Vec<Vec<usize>>,
    /// pairs separated by each variable (indices into `pairs`)
    pub separated: Vec<Vec<usize>>,
    /// D(i) for variables separating no pair: mi elements with strictly
    /// smaller filter (indices into `mi`)
    pub d_sets: BTreeMap<usize, Vec<usize>>,
    /// every L(y,1) is an order filter
    pub filters_ok: bool,
    /// membership in A(k) coincides with separating (k, cover of k)
    pub separation_ok: bool,
    /// for non-separating variables, the D(i) filters cover L(y,1)
    pub cover_ok: bool,
}

impl EssentialAnalysis {
    pub fn a_set_vars(&self, mi_pos: usize) -> Vec<&str> {
        self.a_sets[mi_pos]
            .iter()
            .map(|&i| self.vars[i].as_str())
            .collect()
    }
}

pub fn essential_analysis(x: &LcmLattice) -> Result<EssentialAnalysis> {
    if !x.ideal().is_squarefree() {
        let bad = x
            .ideal()
            .generators()
            .iter()
            .find(|g| !g.is_squarefree())
            .unwrap();
        return Err(Error::NotSquarefree(bad.to_string()));
    }
    let lattice = x.lattice();
    let n = lattice.len();
    let mi = lattice.meet_irreducibles();
    let pairs: Vec<EssentialPair> = mi
        .iter()
        .map(|&k| EssentialPair {
            k,
            l: lattice.poset().upper_covers(k)[0],
        })
        .collect();
    let vars = x.ideal().support_variables();

    let var_filters: Vec<BitRow> = vars
        .iter()
        .map(|v| {
            let mut row = BitRow::new(n);
            for e in 0..n {
                if x.label(e).exponent(v) > 0 {
                    row.set(e, true);
                }
            }
            row
        })
        .collect();
    let mi_filters: Vec<BitRow> = mi
        .iter()
        .map(|&k| {
            let mut row = BitRow::new(n);
            for e in 0..n {
                if !lattice.leq(e, k) {
                    row.set(e, true);
                }
            }
            row
        })
        .collect();

    let is_filter = |row: &BitRow| {
        row.ones()
            .all(|e| (0..n).all(|f| !lattice.leq(e, f) || row.get(f)))
    };
    let filters_ok = var_filters.iter().all(is_filter);

    let a_sets: Vec<Vec<usize>> = mi_filters
        .iter()
        .map(|mf| {
            (0..vars.len())
                .filter(|&vi| var_filters[vi] == *mf)
                .collect()
        })
        .collect();

    let separated: Vec<Vec<usize>> = (0..vars.len())
        .map(|vi| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| {
                    let v = &vars[vi];
                    x.label(p.l).exponent(v) > 0 && x.label(p.k).exponent(v) == 0
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut separation_ok = true;
    for (ki, a) in a_sets.iter().enumerate() {
        for vi in 0..vars.len() {
            let in_a = a.contains(&vi);
            let seps = separated[vi].contains(&ki);
            if in_a != seps {
                separation_ok = false;
            }
        }
    }

    let mut d_sets = BTreeMap::new();
    let mut cover_ok = true;
    for vi in 0..vars.len() {
        if !separated[vi].is_empty() {
            continue;
        }
        let d: Vec<usize> = (0..mi.len())
            .filter(|&ki| {
                mi_filters[ki].is_subset(&var_filters[vi]) && mi_filters[ki] != var_filters[vi]
            })
            .collect();
        let mut union = BitRow::new(n);
        for &ki in &d {
            union.or_assign(&mi_filters[ki]);
        }
        if union != var_filters[vi] {
            cover_ok = false;
        }
        d_sets.insert(vi, d);
    }

    Ok(EssentialAnalysis {
        mi,
        pairs,
        vars,
        var_filters,
        mi_filters,
        a_sets,
        separated,
        d_sets,
        filters_ok,
        separation_ok,
        cover_ok,
    })
}

/// The universal comparison of a squarefree ideal with its minimal ideal:
/// the variable map phi, the cover sets behind the support embedding rho,
/// and the verification outcomes.
#[derive(Clone, Debug)]
pub struct EmbeddingData {
    /// mi variable (of M(L)) -> chosen ideal variable
    pub phi: BTreeMap<String, String>,
    /// C(i) per non-separating variable: covering mi positions
    pub covers: BTreeMap<String, Vec<usize>>,
    /// B(k) per mi position: variables whose chosen cover contains k
    pub b_sets: Vec<Vec<String>>,
    /// rho applied to the mi-support of every lattice element
    pub rho_images: Vec<BTreeSet<String>>,
    pub containment_ok: bool,
    pub image_ok: bool,
    pub injective_ok: bool,
}

pub fn minimal_embedding(ideal: &MonomialIdeal) -> Result<EmbeddingData> {
    let x = lcm_lattice(ideal)?;
    let analysis = essential_analysis(&x)?;
    let lattice = x.lattice();
    let m_data = minimal_ideal(lattice)?;
    let mi = &analysis.mi;

    let mut phi = BTreeMap::new();
    for (ki, a) in analysis.a_sets.iter().enumerate() {
        let &vi = a.first().ok_or_else(|| {
            Error::Internal(format!("A(k) empty at mi element `{}`", lattice.id(mi[ki])))
        })?;
        phi.insert(m_data.var_names[ki].clone(), analysis.vars[vi].clone());
    }

    // containment: phi(x(a)) divides y(a) for every atom
    let mut containment_ok = true;
    for (pos, &atom) in lattice.atoms().iter().enumerate() {
        let x_gen = &m_data.atom_generators[pos];
        let image = Monomial::from_exponents(x_gen.exponents().map(|(v, e)| (phi[v].clone(), e)));
        if !image.divides(x.label(atom)) {
            containment_ok = false;
        }
    }

    // greedy irredundant covers C(i) ⊆ D(i) for non-separating variables
    let mut covers: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (&vi, d) in &analysis.d_sets {
        let target = &analysis.var_filters[vi];
        let mut chosen: Vec<usize> = Vec::new();
        let mut acc = BitRow::new(lattice.len());
        for &ki in d {
            if !analysis.mi_filters[ki].is_subset(&acc) {
                acc.or_assign(&analysis.mi_filters[ki]);
                chosen.push(ki);
            }
        }
        if &acc != target {
            return Err(Error::Internal(format!(
                "filter of `{}` is not covered",
                analysis.vars[vi]
            )));
        }
        // drop redundant members, last added first
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let mut acc = BitRow::new(lattice.len());
            for (j, &kj) in chosen.iter().enumerate() {
                if j != i {
                    acc.or_assign(&analysis.mi_filters[kj]);
                }
            }
            if &acc == target {
                chosen.remove(i);
            }
        }
        covers.insert(analysis.vars[vi].clone(), chosen);
    }

    let b_sets: Vec<Vec<String>> = (0..mi.len())
        .map(|ki| {
            covers
                .iter()
                .filter(|(_, c)| c.contains(&ki))
                .map(|(v, _)| v.clone())
                .collect()
        })
        .collect();

    // rho on the mi-support of each lattice element
    let rho = |mi_positions: &[usize]| -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for &ki in mi_positions {
            for &vi in &analysis.a_sets[ki] {
                out.insert(analysis.vars[vi].clone());
            }
            for v in &b_sets[ki] {
                out.insert(v.clone());
            }
        }
        out
    };
    let mut rho_images = Vec::new();
    let mut image_ok = true;
    for e in 0..lattice.len() {
        let support: Vec<usize> = (0..mi.len())
            .filter(|&ki| !lattice.leq(e, mi[ki]))
            .collect();
        let image = rho(&support);
        let expected: BTreeSet<String> = x.label(e).support().map(|s| s.to_string()).collect();
        if image != expected {
            image_ok = false;
        }
        rho_images.push(image);
    }
    let distinct: BTreeSet<&BTreeSet<String>> = rho_images.iter().collect();
    let injective_ok = distinct.len() == rho_images.len();

    Ok(EmbeddingData {
        phi,
        covers,
        b_sets,
        rho_images,
        containment_ok,
        image_ok,
        injective_ok,
    })
}

/// Result of identifying the variables along each chain of a partition of
/// mi(L) with a chosen representative.
#[derive(Clone, Debug)]
pub struct DepolarizationData {
    pub ideal: MonomialIdeal,
    pub substitution: BTreeMap<String, String>,
    pub lattice_preserved: bool,
}

/// Identify the mi variables along each chain block with the block's
/// representative. Blocks and representatives are given by element id.
pub fn depolarize_by_chains(
    lattice: &FiniteLattice,
    partition: &[Vec<String>],
    reps: &[String],
) -> Result<DepolarizationData> {
    let m_data = minimal_ideal(lattice)?;
    let mi = &m_data.mi_elements;
    if reps.len() != partition.len() {
        return Err(Error::Invalid("one representative per block".into()));
    }
    let position = |id: &str| -> Result<usize> {
        let e = lattice
            .poset()
            .index_of(id)
            .ok_or_else(|| Error::UnknownId(id.to_string()))?;
        mi.iter()
            .position(|&m| m == e)
            .ok_or_else(|| Error::NotAPartition(format!("`{id}` is not meet-irreducible")))
    };
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (bi, block) in partition.iter().enumerate() {
        let members = block
            .iter()
            .map(|id| position(id))
            .collect::<Result<Vec<usize>>>()?;
        for &m in &members {
            if !seen.insert(m) {
                return Err(Error::NotAPartition(format!(
                    "`{}` appears twice",
                    lattice.id(mi[m])
                )));
            }
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let (ea, eb) = (mi[a], mi[b]);
                if !lattice.leq(ea, eb) && !lattice.leq(eb, ea) {
                    return Err(Error::NotAChain(bi));
                }
            }
        }
        blocks.push(members);
    }
    if seen.len() != mi.len() {
        return Err(Error::NotAPartition(
            "some mi elements are uncovered".into(),
        ));
    }

    let mut substitution: BTreeMap<String, String> = BTreeMap::new();
    for (bi, members) in blocks.iter().enumerate() {
        let rep_pos = position(&reps[bi])
            .map_err(|_| Error::Invalid(format!("representative `{}` is unknown", reps[bi])))?;
        if !members.contains(&rep_pos) {
            return Err(Error::Invalid(format!(
                "representative `{}` is outside its block",
                reps[bi]
            )));
        }
        for &m in members {
            substitution.insert(
                m_data.var_names[m].clone(),
                m_data.var_names[rep_pos].clone(),
            );
        }
    }
    let sigma: BTreeMap<String, Option<String>> = substitution
        .iter()
        .map(|(k, v)| (k.clone(), Some(v.clone())))
        .collect();
    let ideal = m_data.ideal.substitute(&sigma)?;

    // the lcm lattice must be unchanged up to the canonical atom supports
    let images: Vec<Monomial> = m_data
        .atom_generators
        .iter()
        .map(|g| {
            Monomial::from_exponents(g.exponents().map(|(v, e)| {
                (
                    substitution
                        .get(v)
                        .cloned()
                        .unwrap_or_else(|| v.to_string()),
                    e,
                )
            }))
        })
        .collect();
    let lattice_preserved = match lcm_lattice(&ideal) {
        Err(_) => false,
        Ok(x) => {
            let gen_to_atom: Option<Vec<usize>> = x
                .ideal()
                .generators()
                .iter()
                .map(|g| images.iter().position(|im| im == g))
                .collect();
            match gen_to_atom {
                None => false,
                Some(map) => {
                    images.len() == x.ideal().num_generators()
                        && support_families_match(lattice, &x, &map)
                }
            }
        }
    };
    Ok(DepolarizationData {
        ideal,
        substitution,
        lattice_preserved,
    })
}

/// Compare the canonical atom-support families of `lattice` and the lcm
/// lattice `x`, where generator `g` of x corresponds to atom `gen_to_atom[g]`
/// of `lattice`.
pub fn support_families_match(
    lattice: &FiniteLattice,
    x: &LcmLattice,
    gen_to_atom: &[usize],
) -> bool {
    if lattice.len() != x.lattice().len() || lattice.atoms().len() != x.lattice().atoms().len() {
        return false;
    }
    let g2a_positions: Vec<usize> = gen_to_atom.to_vec();
    let mut remapped: Vec<u64> = Vec::with_capacity(x.lattice().len());
    let atom_of_gen: Vec<usize> = x.atom_to_generator().to_vec();
    for e in 0..x.lattice().len() {
        let mask = x.lattice().atom_support(e);
        let mut out = 0u64;
        for (atom_pos, &gen) in atom_of_gen.iter().enumerate() {
            if mask >> atom_pos & 1 == 1 {
                out |= 1 << g2a_positions[gen];
            }
        }
        remapped.push(out);
    }
    remapped.sort_unstable();
    remapped == lattice.support_family()
}

/// Roundtrip law: the lcm lattice of the minimal ideal of `lattice` is
/// isomorphic to `lattice` under the canonical atom correspondence.
pub fn minimal_ideal_roundtrip(lattice: &FiniteLattice) -> Result<bool> {
    let m = minimal_ideal(lattice)?;
    let x = lcm_lattice(&m.ideal)?;
    let atom_to_gen = m.atom_to_generator();
    let mut gen_to_atom = vec![0usize; atom_to_gen.len()];
    for (atom, &gen) in atom_to_gen.iter().enumerate() {
        gen_to_atom[gen] = atom;
    }
    Ok(support_families_match(lattice, &x, &gen_to_atom))
}

/// Verdict of the minimality test, with the witness bijection when it holds.
#[derive(Clone, Debug)]
pub struct MinimalityCheck {
    pub minimal: bool,
    /// mi element id (in the lcm lattice of the polarization) -> variable of
    /// the polarized ideal
    pub bijection: Option<BTreeMap<String, String>>,
    pub detail: String,
}

/// An ideal is minimal when its polarization is the minimal ideal of its own
/// lcm lattice. Equivalent test: the number of support variables equals the
/// number of meet-irreducible elements; the A(k) sets then pick out the
/// variable bijection, which is verified against the generators.
pub fn is_minimal_ideal(ideal: &MonomialIdeal) -> Result<MinimalityCheck> {
    let (pol, _) = ideal.polarize()?;
    let x = lcm_lattice(&pol)?;
    let mi_count = x.lattice().meet_irreducibles().len();
    if mi_count == 0 {
        return Err(Error::TrivialLattice);
    }
    let n = pol.support_variables().len();
    if n != mi_count {
        return Ok(MinimalityCheck {
            minimal: false,
            bijection: None,
            detail: format!("{n} support variables, {mi_count} meet-irreducibles"),
        });
    }
    let analysis = essential_analysis(&x)?;
    let m_data = minimal_ideal(x.lattice())?;
    let mut bijection = BTreeMap::new();
    let mut sigma: BTreeMap<String, Option<String>> = BTreeMap::new();
    for (ki, a) in analysis.a_sets.iter().enumerate() {
        if a.len() != 1 {
            return Err(Error::Internal(format!(
                "A(k) is not a singleton at `{}`",
                x.lattice().id(analysis.mi[ki])
            )));
        }
        bijection.insert(
            x.lattice().id(analysis.mi[ki]).to_string(),
            analysis.vars[a[0]].clone(),
        );
        sigma.insert(
            m_data.var_names[ki].clone(),
            Some(analysis.vars[a[0]].clone()),
        );
    }
    let renamed = m_data.ideal.substitute(&sigma)?;
    if renamed != pol {
        return Err(Error::Internal(
            "variable bijection fails to carry the generators".into(),
        ));
    }
    Ok(MinimalityCheck {
        minimal: true,
        bijection: Some(bijection),
        detail: String::new(),
    })
}

/// The face lattice of a complex: all faces ordered by inclusion with a top
/// adjoined. Atomic exactly when the complex is not a simplex.
pub fn face_poset_lattice(complex: &SimplicialComplex) -> Result<FiniteLattice> {
    if complex.is_void() {
        return Err(Error::DegenerateComplex(
            "void complex has no face lattice".into(),
        ));
    }
    let faces = complex.all_faces();
    let name = |f: &[usize]| {
        let names: Vec<&str> = f.iter().map(|&v| complex.vertices()[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    };
    let mut ids: Vec<String> = faces.iter().map(|f| name(f)).collect();
    ids.push("top".to_string());
    let top_pos = ids.len() - 1;
    let index: BTreeMap<&Vec<usize>, usize> =
        faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        // covers: add one vertex
        for v in 0..complex.vertices().len() {
            if f.binary_search(&v).is_ok() {
                continue;
            }
            let mut g = f.clone();
            let pos = g.binary_search(&v).unwrap_err();
            g.insert(pos, v);
            if let Some(&j) = index.get(&g) {
                pairs.push((ids[i].clone(), ids[j].clone()));
            }
        }
    }
    for (i, f) in faces.iter().enumerate() {
        if complex.facets().contains(f) {
            pairs.push((ids[i].clone(), ids[top_pos].clone()));
        }
    }
    let poset = FinitePoset::from_covers(std::mem::take(&mut ids), &pairs)?;
    FiniteLattice::from_poset(poset)
}

/// The squarefree ideal whose Scarf complex realizes `complex`, with the map
/// from vertices to generator indices. Simplexes are realized by the ideal of
/// variables; everything else goes through the face lattice.
#[derive(Clone, Debug)]
pub struct ScarfWitness {
    pub ideal: MonomialIdeal,
    pub vertex_generator: BTreeMap<String, usize>,
}

pub fn scarf_witness_ideal(complex: &SimplicialComplex) -> Result<ScarfWitness> {
    if complex.is_void() || complex.is_empty_complex() {
        return Err(Error::DegenerateComplex(
            "need at least one vertex to realize".into(),
        ));
    }
    let used: Vec<String> = complex
        .facets()
        .iter()
        .flat_map(|f| f.iter().map(|&v| complex.vertices()[v].clone()))
        .collect::<BTreeSet<String>>()
        .into_iter()
        .collect();
    if complex.is_simplex() {
        let names = names_for(&used.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let gens: Vec<Monomial> = names.iter().map(|v| Monomial::variable(v)).collect();
        let ideal = MonomialIdeal::new(gens)?;
        let vertex_generator = used
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let gen = ideal
                    .generators()
                    .iter()
                    .position(|g| *g == Monomial::variable(&names[i]))
                    .unwrap();
                (v.clone(), gen)
            })
            .collect();
        return Ok(ScarfWitness {
            ideal,
            vertex_generator,
        });
    }
    let lattice = face_poset_lattice(complex)?;
    let m = minimal_ideal(&lattice)?;
    let atom_to_gen = m.atom_to_generator();
    let mut vertex_generator = BTreeMap::new();
    for v in &used {
        let id = format!("{{{v}}}");
        let e = lattice
            .poset()
            .index_of(&id)
            .ok_or_else(|| Error::Internal(format!("missing singleton face `{id}`")))?;
        let atom_pos = lattice
            .atoms()
            .iter()
            .position(|&a| a == e)
            .ok_or_else(|| Error::Internal(format!("`{id}` is not an atom")))?;
        vertex_generator.insert(v.clone(), atom_to_gen[atom_pos]);
    }
    Ok(ScarfWitness {
        ideal: m.ideal,
        vertex_generator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text, true).unwrap()
    }

    #[test]
    fn lcm_lattice_of_two_variables() {
        let x = lcm_lattice(&MonomialIdeal::parse("x, y", false).unwrap()).unwrap();
        assert_eq!(x.lattice().len(), 4);
        assert!(x.lattice().is_atomic());
        assert_eq!(x.lattice().atoms().len(), 2);
        let labels: Vec<String> = (0..4).map(|e| x.label(e).to_string()).collect();
        assert_eq!(labels, vec!["1", "x", "y", "x*y"]);
    }

    #[test]
    fn lcm_lattice_seven_elements() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let l = x.lattice();
        assert_eq!(l.len(), 7);
        let ids: BTreeSet<&str> = (0..7).map(|e| l.id(e)).collect();
        let expect: BTreeSet<&str> = ["1", "a*c", "b*d", "c*d", "a*c*d", "b*c*d", "a*b*c*d"].into();
        assert_eq!(ids, expect);
        // four meet-irreducibles forming two disjoint 2-chains
        let mi = l.meet_irreducibles();
        let names: BTreeSet<&str> = mi.iter().map(|&m| l.id(m)).collect();
        assert_eq!(names, ["a*c", "b*d", "a*c*d", "b*c*d"].into());
        let mi_poset = l.mi_poset();
        let stats = mi_poset.chain_stats();
        assert_eq!(stats.width, 2);
        assert_eq!(stats.height, 1);
        // open interval below the top: a 5-element path, hence contractible
        let top = l.top();
        let interval = l.open_interval(l.bottom(), top).unwrap();
        assert_eq!(interval.len(), 5);
        let oc = interval.order_complex().unwrap();
        assert_eq!(oc.f_vector(), vec![5, 4]);
        // 9 cover pairs in the full lattice
        assert_eq!(l.poset().cover_pairs().len(), 9);
    }

    #[test]
    fn lcm_lattice_atoms_match_generators() {
        let x = lcm_lattice(&ideal("bde, cde, ace, acd")).unwrap();
        assert!(x.lattice().is_atomic());
        assert_eq!(x.lattice().atoms().len(), 4);
        for (pos, &gen) in x.atom_to_generator().iter().enumerate() {
            let atom = x.lattice().atoms()[pos];
            assert_eq!(x.label(atom), &x.ideal().generators()[gen]);
        }
    }

    #[test]
    fn minimal_ideal_of_the_cube_is_three_variables() {
        let l = crate::enumerate::boolean_lattice_named(3);
        let m = minimal_ideal(&l).unwrap();
        assert_eq!(m.mi_elements.len(), 3);
        assert_eq!(m.ideal.num_generators(), 3);
        for g in m.ideal.generators() {
            assert_eq!(g.degree(), 1);
        }
    }

    #[test]
    fn minimal_ideal_roundtrip_small_cases() {
        for r in 2..=3 {
            let l = crate::enumerate::boolean_lattice_named(r);
            assert!(minimal_ideal_roundtrip(&l).unwrap());
        }
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        assert!(minimal_ideal_roundtrip(x.lattice()).unwrap());
    }

    #[test]
    fn that_ideal_is_its_own_minimal_ideal() {
        let check = is_minimal_ideal(&ideal("bd, cd, ac")).unwrap();
        assert!(check.minimal);
        let phi = check.bijection.unwrap();
        // forced correspondence: the filters of a,b,c,d match the mi filters
        assert_eq!(phi["a*c"], "d");
        assert_eq!(phi["b*d"], "c");
        assert_eq!(phi["a*c*d"], "b");
        assert_eq!(phi["b*c*d"], "a");
    }

    #[test]
    fn fattened_generator_breaks_minimality() {
        let check = is_minimal_ideal(&ideal("bde, cd, ac")).unwrap();
        assert!(!check.minimal);
    }

    #[test]
    fn minimal_ideals_are_minimal() {
        let x = lcm_lattice(&ideal("bde, cde, ace, acd")).unwrap();
        let m = minimal_ideal(x.lattice()).unwrap();
        let check = is_minimal_ideal(&m.ideal).unwrap();
        assert!(check.minimal, "{}", check.detail);
    }

    #[test]
    fn trivial_lattice_is_rejected() {
        // the 2-chain: one atom equal to the top
        let p = FinitePoset::from_covers(
            vec!["0".into(), "1".into()],
            &[("0".to_string(), "1".to_string())],
        )
        .unwrap();
        let l = FiniteLattice::from_poset(p).unwrap();
        assert!(l.is_atomic());
        assert!(matches!(minimal_ideal(&l), Err(Error::TrivialLattice)));
        assert!(matches!(nonminimal_ideal(&l), Err(Error::TrivialLattice)));
    }

    #[test]
    fn nonatomic_is_rejected() {
        // 0 < a < m < 1 plus 0 < b < 1: join of atoms is m? no: a,b atoms,
        // a v b = 1; but m is not a join of atoms
        let p = FinitePoset::from_covers(
            vec!["0".into(), "a".into(), "m".into(), "b".into(), "1".into()],
            &[
                ("0".to_string(), "a".to_string()),
                ("a".to_string(), "m".to_string()),
                ("m".to_string(), "1".to_string()),
                ("0".to_string(), "b".to_string()),
                ("b".to_string(), "1".to_string()),
            ],
        )
        .unwrap();
        let l = FiniteLattice::from_poset(p).unwrap();
        assert!(!l.is_atomic());
        assert!(matches!(minimal_ideal(&l), Err(Error::NotAtomic(_))));
    }

    #[test]
    fn nonminimal_ideal_of_the_cube() {
        let l = crate::enumerate::boolean_lattice_named(3);
        let n = nonminimal_ideal(&l).unwrap();
        let gens: BTreeSet<String> = n.ideal.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["b*c*f", "a*c*e", "a*b*d"].map(String::from).into());
    }

    #[test]
    fn nonminimal_ideal_of_the_square() {
        let l = crate::enumerate::boolean_lattice_named(2);
        let n = nonminimal_ideal(&l).unwrap();
        // proper part is the two atoms; each generator is the opposite variable
        assert_eq!(n.ideal.num_generators(), 2);
        for g in n.ideal.generators() {
            assert_eq!(g.degree(), 1);
        }
    }

    #[test]
    fn nonminimal_ideal_three_generators_over_five_variables() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let n = nonminimal_ideal(x.lattice()).unwrap();
        assert_eq!(n.ideal.num_generators(), 3);
        assert_eq!(n.ideal.variables().len(), 5);
        // the cd atom sits below both mid elements, so its generator has
        // degree 2; the other two avoid one mid element each
        let mut degrees: Vec<u64> = n.ideal.generators().iter().map(|g| g.degree()).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 3, 3]);
        // the lcm lattice is still the same seven-element lattice
        let y = lcm_lattice(&n.ideal).unwrap();
        assert_eq!(y.lattice().len(), 7);
    }

    #[test]
    fn specialization_on_the_cube_is_trivial() {
        let l = crate::enumerate::boolean_lattice_named(3);
        let s = specialize_nonminimal(&l).unwrap();
        assert!(s.kill_set.is_empty());
        assert!(s.identity_check);
    }

    #[test]
    fn specialization_of_the_seven_element_lattice() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let s = specialize_nonminimal(x.lattice()).unwrap();
        assert!(s.identity_check);
        // the two mid elements acd, bcd have fiber maxima {2,3} and {1,2}
        // (generators sorted: ac, bd, cd -> indices 1,2,3)
        let l = x.lattice();
        let acd = l.poset().index_of("a*c*d").unwrap();
        let bcd = l.poset().index_of("b*c*d").unwrap();
        let to_set = |m: u32| {
            (0..3)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| i + 1)
                .collect::<Vec<_>>()
        };
        assert_eq!(to_set(s.fiber_max[&acd]), vec![1, 3]); // ac v cd
        assert_eq!(to_set(s.fiber_max[&bcd]), vec![2, 3]); // bd v cd
    }

    #[test]
    fn specialization_kills_collapsed_subsets() {
        // three atoms with a1 v a2 = top: {1,2} is killed
        let x = lcm_lattice(&ideal("ab, bc, ca")).unwrap();
        let s = specialize_nonminimal(x.lattice()).unwrap();
        assert!(s.identity_check);
        assert!(!s.kill_set.is_empty());
    }

    #[test]
    fn essential_pairs_of_the_seven_element_lattice() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let a = essential_analysis(&x).unwrap();
        assert!(a.filters_ok);
        assert!(a.separation_ok);
        assert!(a.cover_ok);
        assert_eq!(a.pairs.len(), 4);
        let l = x.lattice();
        let pair_names: BTreeSet<(String, String)> = a
            .pairs
            .iter()
            .map(|p| (l.id(p.k).to_string(), l.id(p.l).to_string()))
            .collect();
        let expect: BTreeSet<(String, String)> = [
            ("a*c", "a*c*d"),
            ("b*d", "b*c*d"),
            ("a*c*d", "a*b*c*d"),
            ("b*c*d", "a*b*c*d"),
        ]
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .into();
        assert_eq!(pair_names, expect);
        // every variable separates exactly one pair here
        for seps in &a.separated {
            assert_eq!(seps.len(), 1);
        }
        // the forced A-assignment
        let by_id = |id: &str| a.mi.iter().position(|&m| l.id(m) == id).unwrap();
        assert_eq!(a.a_set_vars(by_id("a*c")), vec!["d"]);
        assert_eq!(a.a_set_vars(by_id("b*d")), vec!["c"]);
        assert_eq!(a.a_set_vars(by_id("a*c*d")), vec!["b"]);
        assert_eq!(a.a_set_vars(by_id("b*c*d")), vec!["a"]);
    }

    #[test]
    fn essential_pairs_with_a_shared_variable() {
        // y divides every generator: it separates nothing and D(y) covers
        let x = lcm_lattice(&MonomialIdeal::parse("x*y, y*z", false).unwrap()).unwrap();
        let a = essential_analysis(&x).unwrap();
        let yi = a.vars.iter().position(|v| v == "y").unwrap();
        assert!(a.separated[yi].is_empty());
        assert!(a.cover_ok);
        // L(y,1) is everything but the bottom
        assert_eq!(a.var_filters[yi].count(), x.lattice().len() - 1);
    }

    #[test]
    fn essential_analysis_rejects_non_squarefree() {
        let x = lcm_lattice(&MonomialIdeal::parse("x^2, y", false).unwrap()).unwrap();
        assert!(matches!(
            essential_analysis(&x),
            Err(Error::NotSquarefree(_))
        ));
    }

    #[test]
    fn embedding_of_a_minimal_ideal_is_the_identity_shape() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let m = minimal_ideal(x.lattice()).unwrap();
        let e = minimal_embedding(&m.ideal).unwrap();
        assert!(e.containment_ok);
        assert!(e.image_ok);
        assert!(e.injective_ok);
        assert!(e.covers.is_empty());
    }

    #[test]
    fn embedding_of_the_seven_element_ideal() {
        let e = minimal_embedding(&ideal("bd, cd, ac")).unwrap();
        assert!(e.containment_ok);
        assert!(e.image_ok);
        assert!(e.injective_ok);
    }

    #[test]
    fn embedding_absorbs_a_global_factor() {
        // y divides every generator; it is covered, not chosen by phi
        let i = MonomialIdeal::parse("y*a*c, y*b*d, y*c*d", false).unwrap();
        let e = minimal_embedding(&i).unwrap();
        assert!(e.containment_ok);
        assert!(e.image_ok);
        assert!(e.injective_ok);
        assert!(e.covers.contains_key("y"));
    }

    #[test]
    fn depolarization_by_singletons_is_identity() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let l = x.lattice();
        let m = minimal_ideal(l).unwrap();
        let partition: Vec<Vec<String>> = m
            .mi_elements
            .iter()
            .map(|&e| vec![l.id(e).to_string()])
            .collect();
        let reps: Vec<String> = partition.iter().map(|b| b[0].clone()).collect();
        let d = depolarize_by_chains(l, &partition, &reps).unwrap();
        assert!(d.lattice_preserved);
        assert_eq!(d.ideal, m.ideal);
    }

    #[test]
    fn depolarization_rejects_incomparable_blocks() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let l = x.lattice();
        // a*c and b*d are incomparable mi elements
        let partition = vec![
            vec!["a*c".to_string(), "b*d".to_string()],
            vec!["a*c*d".to_string()],
            vec!["b*c*d".to_string()],
        ];
        let reps = vec!["a*c".to_string(), "a*c*d".to_string(), "b*c*d".to_string()];
        assert!(matches!(
            depolarize_by_chains(l, &partition, &reps),
            Err(Error::NotAChain(0))
        ));
    }

    #[test]
    fn depolarization_along_chains_preserves_the_lattice() {
        let x = lcm_lattice(&ideal("bd, cd, ac")).unwrap();
        let l = x.lattice();
        let partition = vec![
            vec!["a*c".to_string(), "a*c*d".to_string()],
            vec!["b*d".to_string(), "b*c*d".to_string()],
        ];
        let reps = vec!["a*c".to_string(), "b*d".to_string()];
        let d = depolarize_by_chains(l, &partition, &reps).unwrap();
        assert!(d.lattice_preserved);
        assert_eq!(d.ideal.variables().len(), 2);
    }

    #[test]
    fn face_lattice_of_a_path() {
        // two edges sharing a vertex
        let k = SimplicialComplex::from_facets(
            vec!["1".into(), "2".into(), "3".into()],
            vec![vec!["1".into(), "2".into()], vec!["2".into(), "3".into()]],
            true,
        )
        .unwrap();
        let l = face_poset_lattice(&k).unwrap();
        // faces: {}, three vertices, two edges, plus the top
        assert_eq!(l.len(), 7);
        assert!(l.is_atomic());
        assert_eq!(l.atoms().len(), 3);
    }

    #[test]
    fn face_lattice_of_a_simplex_is_not_atomic() {
        let k = SimplicialComplex::from_facets(
            vec!["1".into(), "2".into()],
            vec![vec!["1".into(), "2".into()]],
            true,
        )
        .unwrap();
        let l = face_poset_lattice(&k).unwrap();
        assert!(!l.is_atomic());
    }
}
