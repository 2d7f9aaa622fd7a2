//! JSON wire formats for posets/lattices and simplicial complexes.
//!
//! Lattice JSON: {"elements": [ids], "covers": [[lo, hi], ...],
//! "labels": {id: monomial}} with labels optional; element order is the
//! order of the input list. Complex JSON: {"vertices": [...],
//! "facets": [[...], ...], "empty_face": bool}.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poset::{FiniteLattice, FinitePoset};
use crate::simplicial::SimplicialComplex;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<std::collections::BTreeMap<String, String>>,
}

pub fn poset_from_json(text: &str) -> Result<FinitePoset> {
    let data: LatticeJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad lattice JSON: {e}")))?;
    FinitePoset::from_covers(data.elements, &data.covers)
}

pub fn lattice_from_json(text: &str) -> Result<FiniteLattice> {
    let data: LatticeJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad lattice JSON: {e}")))?;
    let poset = FinitePoset::from_covers(data.elements.clone(), &data.covers)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    match data.labels {
        None => Ok(lattice),
        Some(map) => {
            let labels = data
                .elements
                .iter()
                .map(|id| {
                    let text = map
                        .get(id)
                        .ok_or_else(|| Error::Invalid(format!("no label for `{id}`")))?;
                    Monomial::parse(text, false)
                })
                .collect::<Result<Vec<Monomial>>>()?;
            lattice.with_labels(labels)
        }
    }
}

pub fn poset_to_json(poset: &FinitePoset) -> String {
    let data = LatticeJson {
        elements: poset.ids().to_vec(),
        covers: poset
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| (poset.id(a).to_string(), poset.id(b).to_string()))
            .collect(),
        labels: None,
    };
    serde_json::to_string_pretty(&data).expect("serializable")
}

pub fn lattice_to_json(lattice: &FiniteLattice) -> String {
    let poset = lattice.poset();
    let data = LatticeJson {
        elements: poset.ids().to_vec(),
        covers: poset
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| (poset.id(a).to_string(), poset.id(b).to_string()))
            .collect(),
        labels: lattice.labels().map(|labels| {
            labels
                .iter()
                .enumerate()
                .map(|(i, m)| (poset.id(i).to_string(), m.to_string()))
                .collect()
        }),
    };
    serde_json::to_string_pretty(&data).expect("serializable")
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default)]
    pub empty_face: bool,
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let data: ComplexJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad complex JSON: {e}")))?;
    let include_empty = data.empty_face || !data.facets.is_empty();
    SimplicialComplex::from_facets(data.vertices, data.facets, include_empty)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let data = ComplexJson {
        vertices: complex.vertices().to_vec(),
        facets: complex.facet_names(),
        empty_face: !complex.is_void(),
    };
    serde_json::to_string_pretty(&data).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_roundtrip() {
        let text = r#"{
            "elements": ["0", "x", "y", "1"],
            "covers": [["0","x"], ["0","y"], ["x","1"], ["y","1"]],
            "labels": {"0": "1", "x": "x", "y": "y", "1": "x*y"}
        }"#;
        let l = lattice_from_json(text).unwrap();
        assert_eq!(l.len(), 4);
        assert!(l.is_atomic());
        let back = lattice_to_json(&l);
        let l2 = lattice_from_json(&back).unwrap();
        assert_eq!(l2.len(), 4);
        assert_eq!(l2.labels().unwrap(), l.labels().unwrap());
    }

    #[test]
    fn bad_labels_are_rejected() {
        let text = r#"{
            "elements": ["0", "x"],
            "covers": [["0","x"]],
            "labels": {"0": "x", "x": "1"}
        }"#;
        assert!(lattice_from_json(text).is_err());
    }

    #[test]
    fn complex_roundtrip() {
        let text = r#"{"vertices": ["1","2","3"], "facets": [["1","2"],["2","3"]]}"#;
        let k = complex_from_json(text).unwrap();
        assert_eq!(k.facets().len(), 2);
        let k2 = complex_from_json(&complex_to_json(&k)).unwrap();
        assert_eq!(k, k2);

        let void = complex_from_json(r#"{"vertices": ["1"], "facets": []}"#).unwrap();
        assert!(void.is_void());
        let empty =
            complex_from_json(r#"{"vertices": ["1"], "facets": [], "empty_face": true}"#).unwrap();
        assert!(empty.is_empty_complex());
    }
}
