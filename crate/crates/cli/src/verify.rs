//! The verification suite: every structural statement the library encodes is
//! replayed over enumerated lattices, seeded random ideals and complexes, and
//! the golden examples. Failures carry a serialized reproducer. All checks
//! are proven statements, so a failure always means an implementation bug.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use lcmlat::bits::mask_indices;
use lcmlat::distributive::{
    covering_primes, fiber_extrema, mi_realizability, phi_xc_embedding, series_parallel_check,
    Realizability,
};
use lcmlat::enumerate::{
    antichains_on, atomic_lattices, boolean_lattice_named, random_complex, random_monomial_ideal,
    random_squarefree_ideal, sample_atomic_lattices, ATOMIC_LATTICE_CENSUS,
};
use lcmlat::homology::{is_cohen_macaulay, reduced_homology, FieldSpec};
use lcmlat::io::lattice_to_json;
use lcmlat::lcm::{
    depolarize_by_chains, lcm_lattice, minimal_embedding, minimal_ideal, minimal_ideal_roundtrip,
    nonminimal_ideal, scarf_witness_ideal, specialize_nonminimal, support_families_match,
};
use lcmlat::monomial::{Monomial, MonomialIdeal};
use lcmlat::poset::FiniteLattice;
use lcmlat::resolutions::{
    betti_hochster, betti_intervals, bound_checks, first_syzygy_ideal, has_linear_resolution,
    lattice_linear_characterization, minimality_from_linearity, restriction_ideal,
    restriction_interval_check, scarf_supports, taylor_scarf, ClauseStatus,
};
use lcmlat::simplicial::{stanley_reisner_complex, SimplicialComplex};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// exhaustive lattice enumeration up to this atom count (2..=4)
    pub max_atoms: usize,
    /// number of random samples per randomized check
    pub samples: usize,
    pub seed: u64,
    pub field: FieldSpec,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_atoms: 3,
            samples: 120,
            seed: 2024,
            field: FieldSpec::Rationals,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub description: String,
    pub status: CheckStatus,
    pub instances: usize,
    pub detail: String,
    /// serialized smallest failing instance, when there is one
    pub reproducer: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match &c.status {
                CheckStatus::Pass => "PASS".to_string(),
                CheckStatus::Fail => "FAIL".to_string(),
                CheckStatus::Skipped(reason) => format!("SKIP ({reason})"),
            };
            let _ = writeln!(
                out,
                "{status:<8} {:<32} [{:>5} instances] {}",
                c.id, c.instances, c.description
            );
            if matches!(c.status, CheckStatus::Fail) {
                let _ = writeln!(out, "         detail: {}", c.detail);
                if let Some(r) = &c.reproducer {
                    let _ = writeln!(out, "         reproducer: {r}");
                }
            }
        }
        let verdict = if self.all_pass() {
            "all checks passed"
        } else {
            "FAILURES PRESENT"
        };
        let _ = writeln!(out, "{verdict}");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

struct Collector {
    id: &'static str,
    description: &'static str,
    instances: usize,
    failures: Vec<String>,
    reproducer: Option<String>,
    notes: Vec<String>,
}

impl Collector {
    fn new(id: &'static str, description: &'static str) -> Self {
        Collector {
            id,
            description,
            instances: 0,
            failures: Vec::new(),
            reproducer: None,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Fn() -> String, reproducer: impl Fn() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(detail());
            if self.reproducer.is_none() {
                self.reproducer = Some(reproducer());
            }
        }
    }

    fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    fn finish(self) -> CheckOutcome {
        let mut detail = self.failures.join("; ");
        if !self.notes.is_empty() {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(&self.notes.join("; "));
        }
        CheckOutcome {
            id: self.id.to_string(),
            description: self.description.to_string(),
            status: if self.failures.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            instances: self.instances,
            detail,
            reproducer: self.reproducer,
        }
    }
}

/// Enumerated lattices with a nonempty proper part (at least two atoms).
fn corpus_lattices(max_atoms: usize) -> Vec<FiniteLattice> {
    let mut out = Vec::new();
    for r in 2..=max_atoms.clamp(2, 4) {
        out.extend(atomic_lattices(r).expect("enumeration within caps"));
    }
    out
}

fn corpus_ideals(samples: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < samples {
        if let Some(i) = random_squarefree_ideal(&mut rng, 5, 5) {
            out.push(i);
        }
    }
    out
}

pub fn run_suite(opts: &SuiteOptions) -> VerificationReport {
    let field = opts.field;
    let lattices = corpus_lattices(opts.max_atoms);
    let ideals = corpus_ideals(opts.samples, opts.seed);
    let mut checks = Vec::new();

    // lattice census
    {
        let mut c = Collector::new("census", "atomic lattice counts match the frozen census");
        for r in 1..=opts.max_atoms.clamp(1, 4) {
            let got = atomic_lattices(r).map(|v| v.len()).unwrap_or(0);
            c.check(
                got == ATOMIC_LATTICE_CENSUS[r - 1],
                || {
                    format!(
                        "r={r}: got {got}, expected {}",
                        ATOMIC_LATTICE_CENSUS[r - 1]
                    )
                },
                || format!("atoms={r}"),
            );
        }
        checks.push(c.finish());
    }

    // separation: order iff divisibility of the minimal labels
    {
        let mut c = Collector::new(
            "separation",
            "order agrees with divisibility of the minimal-ideal labels",
        );
        for l in &lattices {
            let m = minimal_ideal(l).expect("nontrivial corpus");
            let mut ok = true;
            for a in 0..l.len() {
                for b in 0..l.len() {
                    if l.leq(a, b) != m.element_labels[a].divides(&m.element_labels[b]) {
                        ok = false;
                    }
                }
            }
            c.check(ok, || "divisibility mismatch".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // minimal ideal roundtrip
    {
        let mut c = Collector::new(
            "minimal-ideal-roundtrip",
            "the lcm lattice of the minimal ideal is the original lattice",
        );
        for l in &lattices {
            let ok = minimal_ideal_roundtrip(l).unwrap_or(false);
            c.check(ok, || "roundtrip failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // nonminimal companion roundtrip
    {
        let mut c = Collector::new(
            "nonminimal-roundtrip",
            "the lcm lattice of the proper-part ideal is the original lattice",
        );
        for l in &lattices {
            let n = nonminimal_ideal(l).expect("nontrivial corpus");
            let ok = match lcm_lattice(&n.ideal) {
                Err(_) => false,
                Ok(x) => {
                    let gen_to_atom: Option<Vec<usize>> = x
                        .ideal()
                        .generators()
                        .iter()
                        .map(|g| n.atom_generators.iter().position(|h| h == g))
                        .collect();
                    gen_to_atom
                        .map(|map| support_families_match(l, &x, &map))
                        .unwrap_or(false)
                }
            };
            c.check(ok, || "roundtrip failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // Betti oracle agreement over both fields
    {
        let mut c = Collector::new(
            "betti-oracle-agreement",
            "interval homology equals restriction homology on random ideals",
        );
        for i in &ideals {
            for f in [FieldSpec::Rationals, FieldSpec::GF2] {
                let a = betti_intervals(i, f);
                let b = betti_hochster(i, f);
                let ok = match (&a, &b) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                c.check(ok, || format!("disagreement over {f}"), || i.to_string());
            }
        }
        checks.push(c.finish());
    }

    // Scarf realization of small complexes
    {
        let mut c = Collector::new(
            "scarf-face-poset",
            "every small complex is the Scarf complex of its witness ideal",
        );
        for n in 1..=4usize {
            let verts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            for family in antichains_on(n) {
                let k = SimplicialComplex::from_index_facets(
                    verts.clone(),
                    family.iter().map(|&m| mask_indices(m)).collect(),
                    !family.is_empty(),
                );
                if k.is_void() || k.is_empty_complex() || is_simplex_boundary(&k) {
                    continue;
                }
                let ok = scarf_realization_matches(&k, field);
                c.check(ok, || format!("complex {k}"), || format!("{k}"));
            }
        }
        checks.push(c.finish());
    }

    // universal embedding data
    {
        let mut c = Collector::new(
            "universal-embedding",
            "phi containment, rho image, and injectivity on random ideals",
        );
        for i in &ideals {
            if i.num_generators() < 2 {
                continue; // trivial lattice, no mi elements
            }
            let ok = (|| -> Option<bool> {
                let x = lcm_lattice(i).ok()?;
                let analysis = lcmlat::lcm::essential_analysis(&x).ok()?;
                let e = minimal_embedding(i).ok()?;
                let mi_count = x.lattice().meet_irreducibles().len();
                let n = i.support_variables().len();
                let disjoint = {
                    let mut seen = std::collections::BTreeSet::new();
                    analysis.a_sets.iter().flatten().all(|v| seen.insert(*v))
                };
                Some(
                    e.containment_ok
                        && e.image_ok
                        && e.injective_ok
                        && analysis.filters_ok
                        && analysis.separation_ok
                        && analysis.cover_ok
                        && analysis.a_sets.iter().all(|a| !a.is_empty())
                        && disjoint
                        && n >= mi_count,
                )
            })()
            .unwrap_or(false);
            c.check(ok, || "embedding check failed".into(), || i.to_string());
        }
        checks.push(c.finish());
    }

    // boolean specialization of the nonminimal ideal
    {
        let mut c = Collector::new(
            "nonminimal-specialization",
            "collapsing non-maximal fiber subsets maps N(2^r) onto N(L)",
        );
        for l in &lattices {
            let ok = specialize_nonminimal(l)
                .map(|s| s.identity_check)
                .unwrap_or(false);
            c.check(ok, || "identity failed".into(), || lattice_to_json(l));
        }
        for l in sample_atomic_lattices(5, 8, opts.seed).expect("within caps") {
            let ok = specialize_nonminimal(&l)
                .map(|s| s.identity_check)
                .unwrap_or(false);
            c.check(
                ok,
                || "identity failed (r=5)".into(),
                || lattice_to_json(&l),
            );
        }
        checks.push(c.finish());
    }

    // distributive completion embedding
    {
        let mut c = Collector::new(
            "distributive-embedding",
            "the lattice embeds in J(mi L) as a join subsemilattice",
        );
        for l in &lattices {
            let ok = phi_xc_embedding(l)
                .map(|r| {
                    r.injective
                        && r.joins_to_intersections
                        && r.image_join_closed
                        && r.completion.distributive_verified
                })
                .unwrap_or(false);
            c.check(ok, || "embedding failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // covering and associated primes
    {
        let mut c = Collector::new(
            "prime-covering",
            "membership equals membership in every associated prime",
        );
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 0x9e37);
        for _ in 0..opts.samples {
            let Some(i) = random_squarefree_ideal(&mut rng, 6, 5) else {
                continue;
            };
            let Ok(primes) = covering_primes(&i) else {
                c.check(
                    false,
                    || "prime computation failed".into(),
                    || i.to_string(),
                );
                continue;
            };
            let vars = i.support_variables();
            let mut ok = true;
            for mask in 0u64..(1 << vars.len()) {
                let m = Monomial::from_exponents(
                    (0..vars.len())
                        .filter(|b| mask >> b & 1 == 1)
                        .map(|b| (vars[b].clone(), 1)),
                );
                if i.contains(&m) != primes.in_every_associated_prime(&m) {
                    ok = false;
                }
            }
            // irredundancy: dropping any variable breaks the covering
            for p in &primes.associated_masks {
                if !primes.is_covering(*p) {
                    ok = false;
                }
                for v in mask_indices(*p) {
                    if primes.is_covering(p & !(1 << v)) {
                        ok = false;
                    }
                }
            }
            c.check(ok, || "decomposition failure".into(), || i.to_string());
        }
        checks.push(c.finish());
    }

    // fiber extrema
    {
        let mut c = Collector::new(
            "fiber-extrema",
            "fibers are intervals; elements are maxima, associated primes minima",
        );
        for l in &lattices {
            let ok = fiber_extrema(l).map(|r| r.all_checks()).unwrap_or(false);
            c.check(ok, || "fiber check failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // chain depolarization down to the width
    {
        let mut c = Collector::new(
            "chain-depolarization",
            "identifying mi chains preserves the lattice at width many variables",
        );
        for l in &lattices {
            let mi_poset = l.mi_poset();
            let stats = mi_poset.chain_stats();
            let partition: Vec<Vec<String>> = stats
                .chains
                .iter()
                .map(|chain| chain.iter().map(|&v| mi_poset.id(v).to_string()).collect())
                .collect();
            let reps: Vec<String> = partition.iter().map(|b| b[0].clone()).collect();
            let ok = depolarize_by_chains(l, &partition, &reps)
                .map(|d| d.lattice_preserved && d.ideal.variables().len() == stats.width)
                .unwrap_or(false);
            c.check(ok, || "depolarization failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // identifying two variables works exactly for comparable mi pairs
    {
        let mut c = Collector::new(
            "comparable-identification",
            "identifying one mi pair preserves the lattice iff comparable",
        );
        for l in &lattices {
            let m = minimal_ideal(l).expect("nontrivial corpus");
            let mi = &m.mi_elements;
            let mut comparable: Option<(usize, usize)> = None;
            let mut incomparable: Option<(usize, usize)> = None;
            for i in 0..mi.len() {
                for j in (i + 1)..mi.len() {
                    if l.leq(mi[i], mi[j]) || l.leq(mi[j], mi[i]) {
                        comparable.get_or_insert((i, j));
                    } else {
                        incomparable.get_or_insert((i, j));
                    }
                }
            }
            if let Some((i, j)) = comparable {
                let mut partition = vec![vec![l.id(mi[i]).to_string(), l.id(mi[j]).to_string()]];
                let mut reps = vec![l.id(mi[i]).to_string()];
                for (k, &e) in mi.iter().enumerate() {
                    if k != i && k != j {
                        partition.push(vec![l.id(e).to_string()]);
                        reps.push(l.id(e).to_string());
                    }
                }
                let ok = depolarize_by_chains(l, &partition, &reps)
                    .map(|d| d.lattice_preserved)
                    .unwrap_or(false);
                c.check(
                    ok,
                    || "comparable pair broke the lattice".into(),
                    || lattice_to_json(l),
                );
            }
            if let Some((i, j)) = incomparable {
                // identify by hand; the lattice must change
                let sigma: BTreeMap<String, Option<String>> =
                    [(m.var_names[j].clone(), Some(m.var_names[i].clone()))].into();
                let ok = match m.ideal.substitute(&sigma) {
                    Err(_) => true,
                    Ok(identified) => match lcm_lattice(&identified) {
                        Err(_) => true,
                        Ok(x) => {
                            x.lattice().len() != l.len()
                                || x.lattice().support_family() != l.support_family()
                        }
                    },
                };
                c.check(
                    ok,
                    || "incomparable pair kept the lattice".into(),
                    || lattice_to_json(l),
                );
            }
        }
        checks.push(c.finish());
    }

    // coatomic lattices admit no depolarization below #mi
    {
        let mut c = Collector::new(
            "coatomic-floor",
            "an antichain mi poset pins the variable count at #mi",
        );
        for l in &lattices {
            let mi_poset = l.mi_poset();
            let antichain = mi_poset.cover_pairs().is_empty();
            if !antichain {
                continue;
            }
            let stats = mi_poset.chain_stats();
            c.check(
                stats.width == mi_poset.len(),
                || "width below #mi on an antichain".into(),
                || lattice_to_json(l),
            );
        }
        checks.push(c.finish());
    }

    // pd bound by width and height
    {
        let mut c = Collector::new(
            "pd-bounds",
            "pd of the quotient is at most min(width mi, height)",
        );
        let mut tight = 0usize;
        let eval = |i: &MonomialIdeal, c: &mut Collector, tight: &mut usize| {
            if i.num_generators() < 2 {
                return; // the width bound needs a nonempty mi poset
            }
            let ok = (|| -> Option<bool> {
                let x = lcm_lattice(i).ok()?;
                let table = betti_intervals(i, field).ok()?;
                let stats = x.lattice().mi_poset().chain_stats();
                let height = x.lattice().poset().height();
                let bound = stats.width.min(height);
                if table.pd() as usize == bound {
                    *tight += 1;
                }
                Some(table.pd() as usize <= bound)
            })()
            .unwrap_or(false);
            c.check(ok, || "bound violated".into(), || i.to_string());
        };
        for i in &ideals {
            eval(i, &mut c, &mut tight);
        }
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 0x51ce);
        for _ in 0..opts.samples / 2 {
            if let Some(i) = random_monomial_ideal(&mut rng, 4, 4, 3) {
                eval(&i, &mut c, &mut tight);
            }
        }
        let koszul = MonomialIdeal::parse("x, y, z", false).unwrap();
        eval(&koszul, &mut c, &mut tight);
        c.note(format!("tight instances: {tight}"));
        checks.push(c.finish());
    }

    // duality: pd equals the regularity of the Alexander dual
    {
        let mut c = Collector::new(
            "dual-regularity-equality",
            "pd of the quotient equals reg of the Alexander dual ideal",
        );
        for i in &ideals {
            let ok = (|| -> Option<bool> {
                let table = betti_intervals(i, field).ok()?;
                let sr = stanley_reisner_complex(i).ok()?;
                let dual = sr.alexander_dual().ok()?.stanley_reisner_ideal().ok()?;
                let dual_table = betti_intervals(&dual, field).ok()?;
                Some(table.pd() as i64 == dual_table.reg_ideal())
            })()
            .unwrap_or(false);
            c.check(ok, || "duality equality failed".into(), || i.to_string());
        }
        checks.push(c.finish());
    }

    // dual homology vanishing floor
    {
        let mut c = Collector::new(
            "dual-vanishing",
            "reduced homology of SR(I) vanishes below n - #mi - 1",
        );
        for i in &ideals {
            if i.num_generators() < 2 {
                continue; // the floor needs a nonempty mi poset
            }
            let ok = (|| -> Option<bool> {
                let x = lcm_lattice(i).ok()?;
                let sr = stanley_reisner_complex(i).ok()?;
                let profile = reduced_homology(&sr, field).ok()?;
                let n = i.support_variables().len() as i64;
                let mi = x.lattice().meet_irreducibles().len() as i64;
                let ok = profile.nonzero().all(|(d, _)| d >= n - mi - 1);
                Some(ok)
            })()
            .unwrap_or(false);
            c.check(ok, || "vanishing floor violated".into(), || i.to_string());
        }
        checks.push(c.finish());
    }

    // inherited basics: codimension, purity, CM, regularity
    {
        let mut c = Collector::new(
            "inherited-basics",
            "codim/purity/CM/regularity comparisons with the minimal ideal",
        );
        let wanted = [
            "codim-le-minimal",
            "pure-descends",
            "cm-iff-codim-and-minimal-cm",
            "reg-minimal-le-reg",
        ];
        for i in ideals.iter().take(opts.samples.min(80)) {
            let ok = bound_checks(i, field)
                .map(|r| {
                    r.clauses
                        .iter()
                        .filter(|cl| wanted.contains(&cl.id))
                        .all(|cl| !matches!(cl.status, ClauseStatus::Fail))
                })
                .unwrap_or(false);
            c.check(ok, || "a basic clause failed".into(), || i.to_string());
        }
        checks.push(c.finish());
    }

    // inherited combinatorics: linear quotients and matroidal
    {
        let mut c = Collector::new(
            "inherited-combinatorics",
            "linear quotients and matroidal structure pass to the minimal ideal",
        );
        let mut held = 0usize;
        for i in &ideals {
            let report = bound_checks(i, field);
            let ok = report
                .as_ref()
                .map(|r| {
                    r.clauses
                        .iter()
                        .filter(|cl| {
                            cl.id == "linear-quotients-descend" || cl.id == "matroidal-descends"
                        })
                        .all(|cl| !matches!(cl.status, ClauseStatus::Fail))
                })
                .unwrap_or(false);
            if let Ok(r) = &report {
                if r.clauses.iter().any(|cl| {
                    (cl.id == "linear-quotients-descend" || cl.id == "matroidal-descends")
                        && matches!(cl.status, ClauseStatus::Pass)
                }) {
                    held += 1;
                }
            }
            c.check(
                ok,
                || "a combinatorial clause failed".into(),
                || i.to_string(),
            );
        }
        c.note(format!("hypothesis held on {held} ideals"));
        checks.push(c.finish());
    }

    // linear resolution consequences
    {
        let mut c = Collector::new(
            "linear-descends",
            "gradedness, cover degrees, rank placement, and descent under linearity",
        );
        let engineered: Vec<MonomialIdeal> = vec![
            MonomialIdeal::parse("ab, bc, cd", true).unwrap(),
            MonomialIdeal::parse("ab, ac, ad, bc, bd, cd", true).unwrap(),
            MonomialIdeal::parse("x, y, z", false).unwrap(),
            MonomialIdeal::parse("abe, bce, cde", true).unwrap(),
        ];
        let mut linear_count = 0usize;
        let targets = [
            "graded-lattice",
            "cover-degrees",
            "betti-rank",
            "interval-length-is-link-dim",
            "uniform-generation",
            "linear-descends",
        ];
        for i in ideals.iter().chain(engineered.iter()) {
            if i.num_generators() < 2 {
                continue;
            }
            let Ok(linear) = has_linear_resolution(i, field) else {
                c.check(false, || "linearity test failed".into(), || i.to_string());
                continue;
            };
            if !linear {
                continue;
            }
            linear_count += 1;
            let ok = bound_checks(i, field)
                .map(|r| {
                    r.clauses
                        .iter()
                        .filter(|cl| targets.contains(&cl.id))
                        .all(|cl| {
                            matches!(cl.status, ClauseStatus::Pass | ClauseStatus::Skipped(_))
                        })
                })
                .unwrap_or(false);
            c.check(ok, || "a linearity clause failed".into(), || i.to_string());
        }
        c.note(format!("linear instances: {linear_count}"));
        checks.push(c.finish());
    }

    // the codimension-one subcomplex of a CM complex
    {
        let mut c = Collector::new(
            "codim-one-subcomplex",
            "facet-intersection subcomplex of a CM complex is CM of codim 1",
        );
        let mut rng = StdRng::seed_from_u64(opts.seed ^ 0xd1);
        let mut cm_count = 0usize;
        let engineered = engineered_cm_complexes();
        let sampled = (0..opts.samples).map(|_| {
            let n = 3 + (rand::Rng::gen_range(&mut rng, 0..4usize));
            random_complex(&mut rng, n, 4)
        });
        for k in engineered.into_iter().chain(sampled) {
            if k.is_void() || k.is_simplex() {
                continue;
            }
            let Ok((cm, _)) = is_cohen_macaulay(&k, field) else {
                continue;
            };
            if !cm {
                continue;
            }
            cm_count += 1;
            let d1 = k.delta_one();
            let ok = (|| -> Option<bool> {
                let dim_ok = d1.dim()? == k.dim()? - 1;
                let cm_ok = is_cohen_macaulay(&d1, field).ok()?.0;
                // cross-validation through the dual syzygy ideal
                let cross = (|| -> Option<bool> {
                    let dual = k.alexander_dual().ok()?;
                    let ideal = dual.stanley_reisner_ideal().ok()?;
                    if !has_linear_resolution(&ideal, field).ok()? {
                        return None;
                    }
                    let syz = first_syzygy_ideal(&ideal, field).ok()??;
                    let full = MonomialIdeal::with_variables(
                        k.vertices().to_vec(),
                        syz.generators().to_vec(),
                    )
                    .ok()?;
                    let expected = stanley_reisner_complex(&full).ok()?.alexander_dual().ok()?;
                    Some(expected == d1)
                })()
                .unwrap_or(true);
                Some(dim_ok && cm_ok && cross)
            })()
            .unwrap_or(false);
            c.check(ok, || format!("complex {k}"), || format!("{k}"));
        }
        c.note(format!("CM non-simplex instances: {cm_count}"));
        checks.push(c.finish());
    }

    // restriction below a lattice element
    {
        let mut c = Collector::new(
            "restriction-interval",
            "the restricted ideal has the closed interval as its lcm lattice",
        );
        for i in ideals.iter().take(opts.samples.min(60)) {
            let Ok(x) = lcm_lattice(i) else { continue };
            let linear = has_linear_resolution(i, field).unwrap_or(false);
            for e in 0..x.lattice().len() {
                if e == x.lattice().bottom() {
                    continue;
                }
                let b = x.label(e).clone();
                let ok = restriction_interval_check(i, &b).unwrap_or(false);
                c.check(ok, || format!("interval failed at {b}"), || i.to_string());
                if linear {
                    let ok = restriction_ideal(i, &b)
                        .and_then(|r| has_linear_resolution(&r, field))
                        .unwrap_or(false);
                    c.check(
                        ok,
                        || format!("restriction lost linearity at {b}"),
                        || i.to_string(),
                    );
                }
            }
        }
        checks.push(c.finish());
    }

    // characterization of linear resolutions by the lattice
    {
        let mut c = Collector::new(
            "linear-characterization",
            "poset CM plus unit cover degrees iff the minimal ideal is linear",
        );
        for l in &lattices {
            let ok = (|| -> Option<bool> {
                let characterization = lattice_linear_characterization(l, field).ok()?;
                let m = minimal_ideal(l).ok()?;
                let linear = has_linear_resolution(&m.ideal, field).ok()?;
                Some(characterization.holds == linear)
            })()
            .unwrap_or(false);
            c.check(ok, || "biconditional failed".into(), || lattice_to_json(l));
        }
        checks.push(c.finish());
    }

    // linear resolutions are minimal up to the generator gcd
    {
        let mut c = Collector::new(
            "linear-implies-minimal",
            "squarefree linear ideals are minimal after removing the gcd",
        );
        let engineered = [
            MonomialIdeal::parse("ab, bc, cd", true).unwrap(),
            MonomialIdeal::parse("abe, bce, cde", true).unwrap(),
            MonomialIdeal::parse("ab, ac, ad, bc, bd, cd", true).unwrap(),
            MonomialIdeal::parse("x, y", false).unwrap(),
        ];
        let mut linear_count = 0usize;
        for i in ideals.iter().chain(engineered.iter()) {
            if i.num_generators() < 2 || !has_linear_resolution(i, field).unwrap_or(false) {
                continue;
            }
            linear_count += 1;
            let ok = minimality_from_linearity(i, field)
                .map(|r| r.check.minimal)
                .unwrap_or(false);
            c.check(ok, || "structure test failed".into(), || i.to_string());
        }
        c.note(format!("linear instances: {linear_count}"));
        checks.push(c.finish());
    }

    // mi posets: N is forbidden as the whole poset but can occur inside
    {
        let mut c = Collector::new(
            "series-parallel",
            "the N poset is unrealizable as mi(L) yet occurs inside one",
        );
        let n_poset = lcmlat::poset::FinitePoset::from_covers(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[
                ("a".to_string(), "c".to_string()),
                ("b".to_string(), "c".to_string()),
                ("b".to_string(), "d".to_string()),
            ],
        )
        .unwrap();
        let report = series_parallel_check(&n_poset);
        c.check(
            !report.n_free,
            || "N reported as N-free".into(),
            || "N".into(),
        );
        let realizable = matches!(
            mi_realizability(&n_poset, 1 << 20),
            Ok(Realizability::NotRealizable)
        );
        c.check(realizable, || "N reported realizable".into(), || "N".into());
        let i = MonomialIdeal::parse("b^2*c*d, a*b*d, a*b*c, a^2*c*d", false).unwrap();
        let x = lcm_lattice(&i).unwrap();
        let inner = series_parallel_check(&x.lattice().mi_poset());
        c.check(
            !inner.n_free,
            || "inner N not found".into(),
            || i.to_string(),
        );
        checks.push(c.finish());
    }

    // golden example: primary decomposition
    {
        let mut c = Collector::new(
            "golden-primary-decomposition",
            "(bde,cde,ace,acd) decomposes into the six listed primes",
        );
        let i = MonomialIdeal::parse("bde,cde,ace,acd", true).unwrap();
        let got: Vec<String> = covering_primes(&i)
            .map(|p| p.associated.iter().map(|q| q.join(",")).collect())
            .unwrap_or_default();
        let expect: Vec<String> = ["a,d", "a,e", "b,c", "c,d", "c,e", "d,e"]
            .map(String::from)
            .to_vec();
        c.check(got == expect, || format!("got {got:?}"), || i.to_string());
        checks.push(c.finish());
    }

    // golden example: polarization pair
    {
        let mut c = Collector::new(
            "golden-depolarization",
            "the power ideal polarizes onto its squarefree partner",
        );
        let i =
            MonomialIdeal::parse("c*d*e^2, b*d*e^2, a*e^2, a^2*b*c*e, a^2*b*c*d", false).unwrap();
        let (pol, map) = i.polarize().unwrap();
        let rename: BTreeMap<String, Option<String>> = [
            ("a'".to_string(), Some("g".to_string())),
            ("e'".to_string(), Some("f".to_string())),
        ]
        .into();
        let renamed = pol.substitute(&rename).unwrap();
        let expect = MonomialIdeal::parse("cdef,bdef,aef,abceg,abcdg", true).unwrap();
        c.check(
            renamed == expect,
            || format!("got {renamed}"),
            || i.to_string(),
        );
        let back: BTreeMap<String, Option<String>> = map
            .iter()
            .map(|(fresh, (src, _))| (fresh.clone(), Some(src.clone())))
            .collect();
        c.check(
            pol.substitute(&back).unwrap() == i,
            || "depolarization failed".into(),
            || i.to_string(),
        );
        checks.push(c.finish());
    }

    // golden example: the five-generator minimal lattice
    {
        let mut c = Collector::new(
            "golden-minimal-lattice",
            "the five-generator witness ideal is reproduced by its lattice",
        );
        let i = MonomialIdeal::parse("befg, dfg, ceg, acd, bdef", true).unwrap();
        let ok = (|| -> Option<bool> {
            let x = lcm_lattice(&i).ok()?;
            let check = lcmlat::lcm::is_minimal_ideal(&i).ok()?;
            if !check.minimal {
                return Some(false);
            }
            // renaming the mi elements by their essential variables and
            // rebuilding reproduces the generators verbatim
            let m = minimal_ideal(x.lattice()).ok()?;
            let bij = check.bijection?;
            let sigma: BTreeMap<String, Option<String>> = m
                .mi_elements
                .iter()
                .zip(&m.var_names)
                .map(|(&e, v)| (v.clone(), Some(bij[x.lattice().id(e)].clone())))
                .collect();
            let renamed = m.ideal.substitute(&sigma).ok()?;
            Some(renamed == i)
        })()
        .unwrap_or(false);
        c.check(ok, || "reproduction failed".into(), || i.to_string());
        let x = lcm_lattice(&MonomialIdeal::parse("bd,cd,ac", true).unwrap()).unwrap();
        c.check(
            x.lattice().len() == 7 && x.lattice().meet_irreducibles().len() == 4,
            || "seven-element lattice shape wrong".into(),
            || "bd,cd,ac".into(),
        );
        checks.push(c.finish());
    }

    // golden example: nonminimal ideal of the cube
    {
        let mut c = Collector::new(
            "golden-nonminimal-boolean",
            "the cube's proper-part ideal is (bcf, ace, abd)",
        );
        let l = boolean_lattice_named(3);
        let n = nonminimal_ideal(&l).unwrap();
        let got: std::collections::BTreeSet<String> =
            n.ideal.generators().iter().map(|g| g.to_string()).collect();
        let expect: std::collections::BTreeSet<String> =
            ["a*b*d", "a*c*e", "b*c*f"].map(String::from).into();
        c.check(got == expect, || format!("got {got:?}"), || "cube".into());
        checks.push(c.finish());
    }

    // golden example: the five-generator Scarf complex closes its loop
    {
        let mut c = Collector::new(
            "golden-scarf-loop",
            "the Scarf complex of the depolarization witness rebuilds its lattice",
        );
        let i = MonomialIdeal::parse("cdef,bdef,aef,abceg,abcdg", true).unwrap();
        let ok = (|| -> Option<bool> {
            let (_, scarf) = taylor_scarf(&i).ok()?;
            if !scarf_realization_matches(&scarf, field) {
                return Some(false);
            }
            let report = scarf_supports(&i, field).ok()?;
            // the complex is acyclic here, so the Scarf complex supports the
            // minimal resolution
            Some(report.supports)
        })()
        .unwrap_or(false);
        c.check(ok, || "loop failed".into(), || i.to_string());
        checks.push(c.finish());
    }

    VerificationReport { checks }
}

/// Known Cohen-Macaulay non-simplex complexes used to guarantee coverage of
/// the codimension-one check.
pub fn engineered_cm_complexes() -> Vec<SimplicialComplex> {
    let cx = |n: usize, facets: &[&[usize]]| {
        let verts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        SimplicialComplex::from_index_facets(
            verts,
            facets.iter().map(|f| f.to_vec()).collect(),
            true,
        )
    };
    vec![
        // two points
        cx(2, &[&[0], &[1]]),
        // a path and a longer path
        cx(3, &[&[0, 1], &[1, 2]]),
        cx(4, &[&[0, 1], &[1, 2], &[2, 3]]),
        // cycles
        cx(3, &[&[0, 1], &[1, 2], &[0, 2]]),
        cx(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
        // two triangles along an edge, and a three-page book
        cx(4, &[&[0, 1, 2], &[1, 2, 3]]),
        cx(5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]),
        // the boundary of the tetrahedron
        cx(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
        // an octahedron boundary (2-sphere on 6 vertices)
        cx(
            6,
            &[
                &[0, 2, 4],
                &[0, 2, 5],
                &[0, 3, 4],
                &[0, 3, 5],
                &[1, 2, 4],
                &[1, 2, 5],
                &[1, 3, 4],
                &[1, 3, 5],
            ],
        ),
    ]
}

/// True when the complex equals the boundary of a simplex on its used
/// vertices.
pub fn is_simplex_boundary(k: &SimplicialComplex) -> bool {
    let used: std::collections::BTreeSet<usize> = k.facets().iter().flatten().copied().collect();
    let m = used.len();
    if m == 0 || k.facets().len() != m {
        return false;
    }
    k.facets().iter().all(|f| f.len() == m - 1)
}

/// The Scarf complex of the witness ideal equals the input complex under the
/// vertex-to-generator correspondence.
pub fn scarf_realization_matches(k: &SimplicialComplex, field: FieldSpec) -> bool {
    let Ok(witness) = scarf_witness_ideal(k) else {
        return false;
    };
    let Ok((_, scarf)) = taylor_scarf(&witness.ideal) else {
        return false;
    };
    // faces of k as generator-index sets
    let mut expected: Vec<Vec<usize>> = k
        .facets()
        .iter()
        .map(|f| {
            let mut gens: Vec<usize> = f
                .iter()
                .map(|&v| witness.vertex_generator[&k.vertices()[v]])
                .collect();
            gens.sort_unstable();
            gens
        })
        .collect();
    expected.sort();
    // scarf vertices are named by 1-based generator index
    let mut got: Vec<Vec<usize>> = scarf
        .facets()
        .iter()
        .map(|f| {
            let mut gens: Vec<usize> = f
                .iter()
                .map(|&v| scarf.vertices()[v].parse::<usize>().unwrap() - 1)
                .collect();
            gens.sort_unstable();
            gens
        })
        .collect();
    got.sort();
    if expected != got {
        return false;
    }
    // acyclic complexes must support the minimal resolution of the witness
    match reduced_homology(k, field) {
        Ok(profile) if profile.is_acyclic() => scarf_supports(&witness.ideal, field)
            .map(|r| r.supports)
            .unwrap_or(false),
        Ok(_) => true,
        Err(_) => false,
    }
}
