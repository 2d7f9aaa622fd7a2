//! Subcommand definitions and dispatch. Every command produces deterministic
//! text (or JSON with `--json`); domain errors surface verbatim with exit 1,
//! usage errors exit 2.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lcmlat::distributive::{covering_primes, fiber_extrema, filter_lattice, phi_xc_embedding};
use lcmlat::error::{Error, Result};
use lcmlat::homology::is_cohen_macaulay;
use lcmlat::io;
use lcmlat::lcm::{
    depolarize_by_chains, is_minimal_ideal, lcm_lattice_capped, minimal_ideal, nonminimal_ideal,
    specialize_nonminimal, LcmLattice,
};
use lcmlat::poset::{FiniteLattice, MAX_ELEMENTS};
use lcmlat::resolutions::{betti_from_lattice, pd_and_reg, scarf_supports, taylor_scarf};
use lcmlat::simplicial::stanley_reisner_complex;
use lcmlat::{FieldSpec, MonomialIdeal};

use crate::dot;
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "lcmlat",
    version,
    about = "monomial ideals through their lcm-lattices"
)]
pub struct Cli {
    /// machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,
    /// coefficient field: q, f2, or f<p>
    #[arg(long, global = true, default_value = "q")]
    pub field: String,
    /// cap on lattice size during lcm closure
    #[arg(long, global = true, default_value_t = MAX_ELEMENTS)]
    pub max_elements: usize,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug)]
pub struct IdealInput {
    /// inline generators, comma separated (e.g. "b*d, c*d, a*c")
    #[arg(long)]
    pub ideal: Option<String>,
    /// file containing the generators, one per line or comma separated
    #[arg(long)]
    pub ideal_file: Option<PathBuf>,
    /// parse single-letter juxtaposition (e.g. "bd,cd,ac")
    #[arg(long)]
    pub compact: bool,
}

impl IdealInput {
    pub fn load(&self) -> Result<MonomialIdeal> {
        let text = match (&self.ideal, &self.ideal_file) {
            (Some(t), None) => t.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", p.display())))?,
            _ => {
                return Err(Error::Invalid(
                    "provide exactly one of --ideal or --ideal-file".into(),
                ))
            }
        };
        MonomialIdeal::parse(&text, self.compact)
    }
}

#[derive(Args, Debug)]
pub struct LatticeInput {
    /// lattice JSON file ({"elements": [...], "covers": [[lo, hi], ...]})
    #[arg(long)]
    pub lattice: Option<PathBuf>,
    #[command(flatten)]
    pub ideal: IdealInput,
}

enum LatticeSource {
    File(FiniteLattice),
    FromIdeal(LcmLattice),
}

impl LatticeSource {
    fn lattice(&self) -> &FiniteLattice {
        match self {
            LatticeSource::File(l) => l,
            LatticeSource::FromIdeal(x) => x.lattice(),
        }
    }
}

impl LatticeInput {
    fn load(&self, cap: usize) -> Result<LatticeSource> {
        if let Some(path) = &self.lattice {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
            return Ok(LatticeSource::File(io::lattice_from_json(&text)?));
        }
        let ideal = self.ideal.load()?;
        Ok(LatticeSource::FromIdeal(lcm_lattice_capped(&ideal, cap)?))
    }
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build the lcm-lattice of an ideal
    Lcm {
        #[command(flatten)]
        input: IdealInput,
        /// also write a DOT rendering to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// The minimal squarefree ideal of an atomic lattice
    Minimal {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// The nonminimal ideal over the whole proper part, with its boolean
    /// specialization data
    Nlattice {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// Multigraded Betti numbers of S/I via interval homology
    Betti {
        #[command(flatten)]
        input: IdealInput,
        /// cross-check against the restriction-homology oracle (squarefree)
        #[arg(long)]
        oracle: bool,
    },
    /// Taylor/Scarf data and whether the Scarf complex supports the
    /// minimal resolution
    Scarf {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Associated primes (minimal primary decomposition) of a squarefree
    /// ideal
    Primes {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Alexander dual ideal of a squarefree ideal
    Dual {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Cohen-Macaulay test (Reisner criterion) for the Stanley-Reisner
    /// complex of an ideal or a complex JSON file
    Cm {
        #[command(flatten)]
        input: IdealInput,
        /// complex JSON file ({"vertices": [...], "facets": [[...]]})
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Identify mi variables along chains and depolarize the minimal ideal
    Depolarize {
        #[command(flatten)]
        input: LatticeInput,
        /// chain partition of the mi elements, e.g. "a<b<c; d; e<f"
        #[arg(long)]
        chains: String,
        /// representative per block (defaults to the first listed element)
        #[arg(long)]
        reps: Option<String>,
    },
    /// The distributive completion J(mi L) and the embedding checks
    Distributive {
        #[command(flatten)]
        input: LatticeInput,
    },
    /// Decide whether an ideal is minimal (its polarization is the minimal
    /// ideal of its lcm-lattice)
    CheckMinimal {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Run the verification suite over enumerated lattices, random ideals,
    /// and the golden examples
    Verify {
        /// exhaustive atom count for lattice enumeration (2..=4)
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        /// random ideal/complex samples per check
        #[arg(long, default_value_t = 120)]
        samples: usize,
        /// RNG seed
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// DOT rendering of a lattice or poset (mi elements shaded)
    Dot {
        #[command(flatten)]
        input: LatticeInput,
        /// output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(cli: Cli) -> Result<String> {
    let field: FieldSpec = cli.field.parse()?;
    let cap = cli.max_elements;
    match cli.cmd {
        Cmd::Lcm {
            input,
            dot: dot_path,
        } => {
            let ideal = input.load()?;
            let x = lcm_lattice_capped(&ideal, cap)?;
            if let Some(path) = dot_path {
                std::fs::write(&path, dot::lattice_dot(x.lattice()))
                    .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            if cli.json {
                return Ok(io::lattice_to_json(x.lattice()) + "\n");
            }
            let l = x.lattice();
            let mi = l.meet_irreducibles();
            let mut out = String::new();
            let _ = writeln!(out, "lcm-lattice of {ideal}");
            let _ = writeln!(
                out,
                "elements: {}  atoms: {}  meet-irreducible: {}  covers: {}",
                l.len(),
                l.atoms().len(),
                mi.len(),
                l.poset().cover_pairs().len()
            );
            let _ = writeln!(out, "atomic: {}  graded: {}", l.is_atomic(), l.is_graded());
            let mi_names: Vec<&str> = mi.iter().map(|&m| l.id(m)).collect();
            let _ = writeln!(out, "mi elements: {}", mi_names.join(", "));
            Ok(out)
        }
        Cmd::Minimal { input } => {
            let source = input.load(cap)?;
            let m = minimal_ideal(source.lattice())?;
            if cli.json {
                let vars: BTreeMap<&str, &str> = m
                    .mi_elements
                    .iter()
                    .zip(&m.var_names)
                    .map(|(&e, v)| (source.lattice().id(e), v.as_str()))
                    .collect();
                let value = serde_json::json!({
                    "generators": m.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "variables": vars,
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(out, "minimal ideal: {}", m.ideal);
            let _ = writeln!(out, "variables (one per mi element):");
            for (e, v) in m.mi_elements.iter().zip(&m.var_names) {
                let _ = writeln!(out, "  {} -> {}", v, source.lattice().id(*e));
            }
            Ok(out)
        }
        Cmd::Nlattice { input } => {
            let source = input.load(cap)?;
            let n = nonminimal_ideal(source.lattice())?;
            let mut out = String::new();
            let _ = writeln!(out, "nonminimal ideal: {}", n.ideal);
            let _ = writeln!(
                out,
                "variables: {} (one per proper-part element)",
                n.ideal.variables().len()
            );
            match specialize_nonminimal(source.lattice()) {
                Ok(s) => {
                    let _ = writeln!(
                        out,
                        "boolean specialization: {} subsets collapsed, identity check {}",
                        s.kill_set.len(),
                        if s.identity_check { "passed" } else { "FAILED" }
                    );
                }
                Err(Error::TooManyAtoms { got, cap }) => {
                    let _ = writeln!(
                        out,
                        "boolean specialization skipped: {got} atoms exceeds cap {cap}"
                    );
                }
                Err(e) => return Err(e),
            }
            if cli.json {
                let value = serde_json::json!({
                    "generators": n.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            Ok(out)
        }
        Cmd::Betti { input, oracle } => {
            let ideal = input.load()?;
            let x = lcm_lattice_capped(&ideal, cap)?;
            let table = betti_from_lattice(&x, field)?;
            if oracle {
                let check = lcmlat::resolutions::betti_hochster(&ideal, field)?;
                if check != table {
                    return Err(Error::Internal(
                        "interval homology and restriction oracle disagree".into(),
                    ));
                }
            }
            if cli.json {
                let entries: Vec<serde_json::Value> = table
                    .iter()
                    .map(|(i, m, v)| {
                        serde_json::json!({"i": i, "degree": m.to_string(), "value": v})
                    })
                    .collect();
                return Ok(serde_json::to_string_pretty(&entries).unwrap() + "\n");
            }
            let (pd, reg) = pd_and_reg(&table);
            let mut out = String::new();
            let _ = writeln!(out, "Betti table of S/I for I = {ideal} over {field}");
            for (i, m, v) in table.iter() {
                let _ = writeln!(out, "  beta_{i} at {m} = {v}");
            }
            out.push_str(&table.staircase());
            let _ = writeln!(out, "pd(S/I) = {pd}   reg(I) = {reg}");
            if oracle {
                let _ = writeln!(out, "oracle agreement: passed");
            }
            Ok(out)
        }
        Cmd::Scarf { input } => {
            let ideal = input.load()?;
            let (_, scarf) = taylor_scarf(&ideal)?;
            let report = scarf_supports(&ideal, field)?;
            if cli.json {
                let value = serde_json::json!({
                    "facets": scarf.facet_names(),
                    "supports_minimal_resolution": report.supports,
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(out, "Scarf complex of {ideal} (vertex i = generator i)");
            let _ = writeln!(out, "facets: {scarf}");
            let _ = writeln!(out, "supports the minimal resolution: {}", report.supports);
            for e in &report.elements {
                if !e.boolean_interval && !e.acyclic_interval {
                    let _ = writeln!(
                        out,
                        "  support fails at {} (interval neither boolean nor acyclic)",
                        e.id
                    );
                }
            }
            Ok(out)
        }
        Cmd::Primes { input } => {
            let ideal = input.load()?;
            let primes = covering_primes(&ideal)?;
            if cli.json {
                return Ok(serde_json::to_string_pretty(&primes.associated).unwrap() + "\n");
            }
            let parts: Vec<String> = primes
                .associated
                .iter()
                .map(|p| format!("({})", p.join(",")))
                .collect();
            Ok(format!("{} = {}\n", ideal, parts.join(" ∩ ")))
        }
        Cmd::Dual { input } => {
            let ideal = input.load()?;
            let sr = stanley_reisner_complex(&ideal)?;
            let dual = sr.alexander_dual()?.stanley_reisner_ideal()?;
            if cli.json {
                let gens: Vec<String> = dual.generators().iter().map(|g| g.to_string()).collect();
                return Ok(serde_json::to_string_pretty(&gens).unwrap() + "\n");
            }
            Ok(format!("{dual}\n"))
        }
        Cmd::Cm { input, complex } => {
            let k = match complex {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Invalid(format!("cannot read {}: {e}", path.display()))
                    })?;
                    io::complex_from_json(&text)?
                }
                None => stanley_reisner_complex(&input.load()?)?,
            };
            let (cm, witness) = is_cohen_macaulay(&k, field)?;
            if cli.json {
                let value = serde_json::json!({
                    "cohen_macaulay": cm,
                    "witness": witness.as_ref().map(|w| {
                        serde_json::json!({"face": w.face, "degree": w.degree})
                    }),
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(out, "Cohen-Macaulay over {field}: {cm}");
            if let Some(w) = witness {
                let _ = writeln!(
                    out,
                    "witness: link of {{{}}} has homology {} in degree {}",
                    w.face.join(","),
                    w.homology_dim,
                    w.degree
                );
            }
            Ok(out)
        }
        Cmd::Depolarize {
            input,
            chains,
            reps,
        } => {
            let source = input.load(cap)?;
            let lattice = source.lattice();
            let partition: Vec<Vec<String>> = chains
                .split(';')
                .map(|block| {
                    block
                        .split('<')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect()
                })
                .filter(|b: &Vec<String>| !b.is_empty())
                .collect();
            let reps: Vec<String> = match reps {
                Some(r) => r
                    .split([';', ','])
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect(),
                None => partition.iter().map(|b| b[0].clone()).collect(),
            };
            let d = depolarize_by_chains(lattice, &partition, &reps)?;
            let stats = lattice.mi_poset().chain_stats();
            if cli.json {
                let value = serde_json::json!({
                    "ideal": d.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "substitution": d.substitution,
                    "lattice_preserved": d.lattice_preserved,
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(out, "depolarized ideal: {}", d.ideal);
            let _ = writeln!(out, "lattice preserved: {}", d.lattice_preserved);
            let _ = writeln!(
                out,
                "mi width (max antichain): {}; alternative one-less convention: {}",
                stats.width,
                stats.width.saturating_sub(1)
            );
            Ok(out)
        }
        Cmd::Distributive { input } => {
            let source = input.load(cap)?;
            let lattice = source.lattice();
            let fl = filter_lattice(&lattice.mi_poset())?;
            let embed = phi_xc_embedding(lattice)?;
            let fibers = fiber_extrema(lattice)?;
            if cli.json {
                let value = serde_json::json!({
                    "filters": fl.lattice.len(),
                    "distributive": fl.distributive_verified,
                    "embedding_injective": embed.injective,
                    "joins_to_intersections": embed.joins_to_intersections,
                    "image_join_closed": embed.image_join_closed,
                    "image_size": embed.image.len(),
                    "fibers": fibers.fiber_count,
                    "fiber_checks": fibers.all_checks(),
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(
                out,
                "distributive completion J(mi L): {} filters (distributivity {})",
                fl.lattice.len(),
                if fl.distributive_verified {
                    "verified"
                } else {
                    "FAILED"
                }
            );
            let _ = writeln!(
                out,
                "embedding: injective {}, joins map to intersections {}, image join-closed {}, image size {}",
                embed.injective,
                embed.joins_to_intersections,
                embed.image_join_closed,
                embed.image.len()
            );
            let _ = writeln!(
                out,
                "fibers: {} over {} subsets; interval/extrema checks {}",
                fibers.fiber_count,
                fibers.subset_count,
                if fibers.all_checks() {
                    "passed"
                } else {
                    "FAILED"
                }
            );
            Ok(out)
        }
        Cmd::CheckMinimal { input } => {
            let ideal = input.load()?;
            let check = is_minimal_ideal(&ideal)?;
            if cli.json {
                let value = serde_json::json!({
                    "minimal": check.minimal,
                    "bijection": check.bijection,
                    "detail": check.detail,
                });
                return Ok(serde_json::to_string_pretty(&value).unwrap() + "\n");
            }
            let mut out = String::new();
            let _ = writeln!(out, "minimal: {}", check.minimal);
            if let Some(b) = &check.bijection {
                let _ = writeln!(out, "bijection (mi element -> variable):");
                for (k, v) in b {
                    let _ = writeln!(out, "  {k} -> {v}");
                }
            } else {
                let _ = writeln!(out, "reason: {}", check.detail);
            }
            Ok(out)
        }
        Cmd::Verify {
            atoms,
            samples,
            seed,
        } => {
            let report = verify::run_suite(&verify::SuiteOptions {
                max_atoms: atoms,
                samples,
                seed,
                field,
            });
            if cli.json {
                return Ok(report.to_json() + "\n");
            }
            Ok(report.to_text())
        }
        Cmd::Dot { input, out } => {
            let source = input.load(cap)?;
            let text = dot::lattice_dot(source.lattice());
            match out {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| {
                        Error::Invalid(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Ok(format!("wrote {}\n", path.display()))
                }
                None => Ok(text),
            }
        }
    }
}
