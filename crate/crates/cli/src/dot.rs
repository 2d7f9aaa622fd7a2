//! DOT rendering of lattices and posets: one node per element (labels shown
//! when present), one edge per cover drawn bottom-up, meet-irreducible
//! elements shaded.

use std::fmt::Write as _;

use lcmlat::poset::{FiniteLattice, FinitePoset};

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

pub fn lattice_dot(lattice: &FiniteLattice) -> String {
    let poset = lattice.poset();
    let mi: Vec<usize> = lattice.meet_irreducibles();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for e in 0..lattice.len() {
        let id = escape(poset.id(e));
        let label = match lattice.label(e) {
            Some(m) if m.to_string() != poset.id(e) => {
                format!("{id}\\n{}", escape(&m.to_string()))
            }
            _ => id.clone(),
        };
        let style = if mi.contains(&e) {
            ", style=filled, fillcolor=lightgrey"
        } else {
            ""
        };
        let _ = writeln!(out, "  \"{id}\" [label=\"{label}\"{style}];");
    }
    for (a, b) in poset.cover_pairs() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            escape(poset.id(a)),
            escape(poset.id(b))
        );
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(poset: &FinitePoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for e in 0..poset.len() {
        let id = escape(poset.id(e));
        let _ = writeln!(out, "  \"{id}\";");
    }
    for (a, b) in poset.cover_pairs() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            escape(poset.id(a)),
            escape(poset.id(b))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcmlat::lcm::lcm_lattice;
    use lcmlat::MonomialIdeal;

    #[test]
    fn two_chain_dot() {
        let p = FinitePoset::from_covers(
            vec!["a".into(), "b".into()],
            &[("a".to_string(), "b".to_string())],
        )
        .unwrap();
        let text = poset_dot(&p);
        assert_eq!(text.matches("->").count(), 1);
        assert!(text.contains("\"a\""));
    }

    #[test]
    fn seven_element_lattice_has_nine_edges_and_four_grey_nodes() {
        let x = lcm_lattice(&MonomialIdeal::parse("bd,cd,ac", true).unwrap()).unwrap();
        let text = lattice_dot(x.lattice());
        assert_eq!(text.matches("->").count(), 9);
        assert_eq!(text.matches("lightgrey").count(), 4);
    }
}
