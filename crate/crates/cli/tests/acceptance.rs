//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test -p lcmlat-cli --test acceptance -- --nocapture`).
//! Tolerances, corpus sizes, and time budgets are pinned here.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lcmlat::bits::mask_indices;
use lcmlat::distributive::covering_primes;
use lcmlat::enumerate::{antichains_on, atomic_lattices, random_squarefree_ideal};
use lcmlat::homology::{is_cohen_macaulay, reduced_homology, FieldSpec};
use lcmlat::lcm::{lcm_lattice, minimal_ideal, minimal_ideal_roundtrip};
use lcmlat::monomial::MonomialIdeal;
use lcmlat::resolutions::{
    betti_hochster, betti_intervals, has_linear_resolution, lattice_linear_characterization,
    minimality_from_linearity, pd_and_reg,
};
use lcmlat::simplicial::{stanley_reisner_complex, SimplicialComplex};
use lcmlat_cli::run_from;
use lcmlat_cli::verify::{is_simplex_boundary, scarf_realization_matches};

const Q: FieldSpec = FieldSpec::Rationals;

fn cli(args: &[&str]) -> (i32, String) {
    let mut full = vec!["lcmlat"];
    full.extend(args);
    let (code, out, err) = run_from(full);
    assert!(err.is_empty(), "stderr: {err}");
    (code, out)
}

fn report(criterion: &str, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!(
        "criterion {criterion} ({name}): PASS in {:.2}s (budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// The shared random corpus for criteria 6, 7, and 9.
fn corpus() -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(0xACCE97);
    let mut out = Vec::new();
    while out.len() < 1000 {
        if let Some(i) = random_squarefree_ideal(&mut rng, 5, 5) {
            out.push(i);
        }
    }
    out
}

#[test]
fn criterion_01_primary_decomposition_golden() {
    let start = Instant::now();
    let (code, out) = cli(&["primes", "--ideal", "bde,cde,ace,acd", "--compact"]);
    assert_eq!(code, 0);
    let body = out.split(" = ").nth(1).expect("decomposition output");
    let got: BTreeSet<String> = body
        .trim()
        .split('∩')
        .map(|p| p.trim().trim_matches(|c| c == '(' || c == ')').to_string())
        .collect();
    let expect: BTreeSet<String> = ["b,c", "a,d", "a,e", "d,e", "c,d", "c,e"]
        .map(String::from)
        .into();
    assert_eq!(got, expect);
    report(
        "01",
        "primary decomposition golden",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_minimal_lattice_golden() {
    let start = Instant::now();
    let path = fixture("minimal_witness_lattice.json");
    let (code, out) = cli(&["minimal", "--lattice", &path, "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let got: BTreeSet<String> = value["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap().replace('*', ""))
        .collect();
    let expect: BTreeSet<String> = ["befg", "dfg", "ceg", "acd", "bdef"]
        .map(String::from)
        .into();
    assert_eq!(got, expect);

    let (code, out) = cli(&["lcm", "--ideal", "bd,cd,ac", "--compact"]);
    assert_eq!(code, 0);
    assert!(out.contains("elements: 7"));
    assert!(out.contains("meet-irreducible: 4"));
    report("02", "minimal ideal golden", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_polarization_golden() {
    let start = Instant::now();
    let ideal =
        MonomialIdeal::parse("c*d*e^2, b*d*e^2, a*e^2, a^2*b*c*e, a^2*b*c*d", false).unwrap();
    let (pol, map) = ideal.polarize().unwrap();
    let rename: BTreeMap<String, Option<String>> = [
        ("e'".to_string(), Some("f".to_string())),
        ("a'".to_string(), Some("g".to_string())),
    ]
    .into();
    let renamed = pol.substitute(&rename).unwrap();
    let expect = MonomialIdeal::parse("cdef,bdef,aef,abceg,abcdg", true).unwrap();
    assert_eq!(renamed, expect);
    // the inverse substitution recovers the input
    let back: BTreeMap<String, Option<String>> = map
        .iter()
        .map(|(fresh, (src, _))| (fresh.clone(), Some(src.clone())))
        .collect();
    assert_eq!(pol.substitute(&back).unwrap(), ideal);
    report("03", "polarization golden", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_nonminimal_boolean_golden() {
    let start = Instant::now();
    let path = fixture("boolean_cube.json");
    let (code, out) = cli(&["nlattice", "--lattice", &path]);
    assert_eq!(code, 0);
    let line = out.lines().next().unwrap();
    let got: BTreeSet<String> = line
        .trim_start_matches("nonminimal ideal: (")
        .trim_end_matches(')')
        .split(',')
        .map(|g| g.trim().replace('*', ""))
        .collect();
    let expect: BTreeSet<String> = ["bcf", "ace", "abd"].map(String::from).into();
    assert_eq!(got, expect);
    report(
        "04",
        "proper-part ideal golden",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_roundtrip_census() {
    let start = Instant::now();
    let mut checked = 0usize;
    for r in 1..=4usize {
        for lattice in atomic_lattices(r).unwrap() {
            assert!(lattice.len() <= 64);
            if lattice.meet_irreducibles().is_empty() {
                // the two-element lattice has no minimal ideal
                continue;
            }
            assert!(
                minimal_ideal_roundtrip(&lattice).unwrap(),
                "roundtrip failed on a {r}-atom lattice"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 4 + 50); // census minus the trivial lattice
    report(
        "05",
        "minimal ideal roundtrip census",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    let start = Instant::now();
    let ideals = corpus();
    assert!(ideals.len() >= 1000);
    for ideal in &ideals {
        for field in [FieldSpec::Rationals, FieldSpec::GF2] {
            let a = betti_intervals(ideal, field).unwrap();
            let b = betti_hochster(ideal, field).unwrap();
            assert_eq!(a, b, "oracle disagreement on {ideal} over {field}");
        }
    }
    report(
        "06",
        "Betti oracle equivalence x1000",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_07_inequality_suite() {
    let start = Instant::now();
    let ideals = corpus();
    let mut tight: Vec<String> = Vec::new();
    let mut checked = 0usize;
    let mut run = |ideal: &MonomialIdeal, tight: &mut Vec<String>| {
        let x = lcm_lattice(ideal).unwrap();
        if x.lattice().meet_irreducibles().is_empty() {
            return; // width/mi clauses are vacuous for a single generator
        }
        checked += 1;
        let table = betti_intervals(ideal, Q).unwrap();
        let (pd, reg) = pd_and_reg(&table);
        let stats = x.lattice().mi_poset().chain_stats();
        let height = x.lattice().poset().height();
        let bound = stats.width.min(height);
        assert!(
            (pd as usize) <= bound,
            "pd bound violated on {ideal}: pd {pd} > {bound}"
        );
        if pd as usize == bound {
            tight.push(format!("{ideal}: pd {pd} = bound {bound}"));
        }
        // duality: pd S/I equals the regularity of the dual ideal
        let sr = stanley_reisner_complex(ideal).unwrap();
        let dual = sr
            .alexander_dual()
            .unwrap()
            .stanley_reisner_ideal()
            .unwrap();
        let dual_reg = betti_intervals(&dual, Q).unwrap().reg_ideal();
        assert_eq!(pd as i64, dual_reg, "duality equality failed on {ideal}");
        assert!(dual_reg <= bound as i64, "dual reg bound failed on {ideal}");
        // homology vanishing floor for the Stanley-Reisner complex
        let profile = reduced_homology(&sr, Q).unwrap();
        let n = ideal.support_variables().len() as i64;
        let mi = x.lattice().meet_irreducibles().len() as i64;
        for (d, v) in profile.nonzero() {
            assert!(
                d >= n - mi - 1,
                "vanishing floor violated on {ideal}: H_{d} = {v}"
            );
        }
        // codimension and regularity comparisons with the minimal ideal
        let m = minimal_ideal(x.lattice()).unwrap();
        let codim_i = covering_primes(ideal)
            .unwrap()
            .associated
            .iter()
            .map(|p| p.len())
            .min()
            .unwrap();
        let codim_m = covering_primes(&m.ideal)
            .unwrap()
            .associated
            .iter()
            .map(|p| p.len())
            .min()
            .unwrap();
        assert!(codim_i <= codim_m, "codim comparison failed on {ideal}");
        let m_reg = betti_intervals(&m.ideal, Q).unwrap().reg_ideal();
        assert!(m_reg <= reg, "regularity comparison failed on {ideal}");
    };
    for ideal in &ideals {
        run(ideal, &mut tight);
    }
    let koszul = MonomialIdeal::parse("x, y, z", false).unwrap();
    run(&koszul, &mut tight);
    assert!(
        tight.iter().any(|t| t.starts_with("(x, y, z)")),
        "the Koszul example must be tight"
    );
    println!(
        "criterion 07: {checked} ideals checked, {} tight; e.g. {}",
        tight.len(),
        tight.last().unwrap()
    );
    report("07", "inequality suite", start, Duration::from_secs(300));
}

#[test]
fn criterion_08_linear_characterization_biconditional() {
    let start = Instant::now();
    let mut checked = 0usize;
    for r in 2..=4usize {
        for lattice in atomic_lattices(r).unwrap() {
            let characterization = lattice_linear_characterization(&lattice, Q).unwrap();
            let m = minimal_ideal(&lattice).unwrap();
            let linear = has_linear_resolution(&m.ideal, Q).unwrap();
            assert_eq!(
                characterization.holds, linear,
                "biconditional failed on a {r}-atom lattice"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 55);
    report(
        "08",
        "linear characterization x55",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_linear_implies_minimal() {
    let start = Instant::now();
    let mut ideals = corpus();
    ideals.extend([
        MonomialIdeal::parse("ab, bc, cd", true).unwrap(),
        MonomialIdeal::parse("abe, bce, cde", true).unwrap(),
        MonomialIdeal::parse("ab, ac, ad, bc, bd, cd", true).unwrap(),
    ]);
    let mut gcd_one = 0usize;
    let mut gcd_proper = 0usize;
    for ideal in &ideals {
        if ideal.num_generators() < 2 || !has_linear_resolution(ideal, Q).unwrap() {
            continue;
        }
        let result = minimality_from_linearity(ideal, Q).unwrap();
        assert!(
            result.check.minimal,
            "structure test failed on {ideal} (gcd {})",
            result.common_factor
        );
        assert!(result.check.bijection.is_some());
        if result.common_factor.is_one() {
            gcd_one += 1;
        } else {
            gcd_proper += 1;
        }
    }
    assert!(gcd_one > 0, "corpus needs gcd-1 linear instances");
    assert!(gcd_proper > 0, "corpus needs proper-gcd linear instances");
    println!("criterion 09: {gcd_one} gcd-1 and {gcd_proper} factored instances");
    report(
        "09",
        "linear ideals are minimal",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_10_scarf_realization() {
    let start = Instant::now();
    let mut checked = 0usize;
    for n in 1..=5usize {
        let verts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let full = (1u64 << n) - 1;
        for family in antichains_on(n) {
            // complexes on exactly n vertices
            if family.iter().fold(0u64, |m, &f| m | f) != full {
                continue;
            }
            let k = SimplicialComplex::from_index_facets(
                verts.clone(),
                family.iter().map(|&m| mask_indices(m)).collect(),
                true,
            );
            if is_simplex_boundary(&k) {
                continue;
            }
            assert!(
                scarf_realization_matches(&k, Q),
                "Scarf realization failed on {k}"
            );
            checked += 1;
        }
    }
    println!("criterion 10: {checked} complexes realized");
    assert!(checked > 5000);
    report(
        "10",
        "Scarf realization census",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_11_codim_one_subcomplex() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xC0D1);
    let mut cm_count = 0usize;
    let mut complexes = lcmlat_cli::verify::engineered_cm_complexes();
    for _ in 0..400 {
        let n = rng.gen_range(3..=6usize);
        let count = rng.gen_range(1..=4usize);
        let facets: Vec<Vec<usize>> = (0..count)
            .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        complexes.push(SimplicialComplex::from_index_facets(verts, facets, true));
    }
    for k in complexes {
        if k.is_void() || k.is_simplex() {
            continue;
        }
        if !is_cohen_macaulay(&k, Q).unwrap().0 {
            continue;
        }
        cm_count += 1;
        let d1 = k.delta_one();
        assert_eq!(
            d1.dim().unwrap(),
            k.dim().unwrap() - 1,
            "codimension failed on {k}"
        );
        assert!(
            is_cohen_macaulay(&d1, Q).unwrap().0,
            "subcomplex not CM on {k}"
        );
    }
    println!("criterion 11: {cm_count} CM non-simplex complexes checked");
    assert!(cm_count >= 20);
    report(
        "11",
        "codim-one subcomplex",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_12_homology_unit_suite() {
    let start = Instant::now();
    let cx = |n: usize, facets: &[&[usize]]| {
        let verts: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        SimplicialComplex::from_index_facets(
            verts,
            facets.iter().map(|f| f.to_vec()).collect(),
            true,
        )
    };
    for field in [FieldSpec::Rationals, FieldSpec::GF2] {
        // circle
        let circle = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let p = reduced_homology(&circle, field).unwrap();
        assert_eq!(p.dim(1), 1);
        assert_eq!(p.dim(0), 0);
        // 2-sphere
        let sphere = cx(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let p = reduced_homology(&sphere, field).unwrap();
        assert_eq!(p.dim(2), 1);
        assert_eq!(p.dim(1), 0);
        // disk and point are acyclic
        assert!(reduced_homology(&cx(3, &[&[0, 1, 2]]), field)
            .unwrap()
            .is_acyclic());
        assert!(reduced_homology(&cx(1, &[&[0]]), field)
            .unwrap()
            .is_acyclic());
        // the empty complex and the void complex
        let empty = SimplicialComplex::empty_complex(vec!["a".into()]);
        let p = reduced_homology(&empty, field).unwrap();
        assert_eq!(p.dim(-1), 1);
        assert_eq!(p.nonzero().count(), 1);
        let void = SimplicialComplex::void(vec!["a".into()]);
        assert!(reduced_homology(&void, field).unwrap().is_acyclic());
    }
    // Euler characteristic cross-check on 1000 random complexes
    let mut rng = StdRng::seed_from_u64(0xE01E);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6usize);
        let count = rng.gen_range(1..=5usize);
        let facets: Vec<Vec<usize>> = (0..count)
            .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let k = SimplicialComplex::from_index_facets(verts, facets, true);
        let p = reduced_homology(&k, Q).unwrap();
        assert_eq!(p.reduced_euler(), k.reduced_euler(), "complex {k}");
    }
    report("12", "homology unit suite", start, Duration::from_secs(60));
}
