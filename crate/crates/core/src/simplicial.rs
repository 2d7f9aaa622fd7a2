//! Simplicial complexes stored by facets, Stanley-Reisner translation,
//! Alexander duality, links, and the codimension-one subcomplex generated by
//! facet intersections.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{mask_indices, mask_of, minimal_transversals};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// A simplicial complex on a named ground set.
///
/// Facets are inclusion-maximal faces, stored as sorted vertex-index lists.
/// The void complex (no faces at all) has an empty facet list; the empty
/// complex `{∅}` (exactly one face, the empty one) stores a single empty
/// facet. These are different objects and reduced homology tells them apart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Build from named facets. Non-maximal entries are absorbed. With an
    /// empty facet list, `include_empty` picks `{∅}` over the void complex.
    pub fn from_facets(
        vertices: Vec<String>,
        facets: Vec<Vec<String>>,
        include_empty: bool,
    ) -> Result<SimplicialComplex> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            let mut s = f
                .iter()
                .map(|name| index(name))
                .collect::<Result<Vec<usize>>>()?;
            s.sort_unstable();
            s.dedup();
            sets.push(s);
        }
        Ok(Self::from_index_facets(vertices, sets, include_empty))
    }

    /// Same, with facets already given as vertex indices.
    pub fn from_index_facets(
        vertices: Vec<String>,
        mut sets: Vec<Vec<usize>>,
        include_empty: bool,
    ) -> SimplicialComplex {
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        sets.sort();
        sets.dedup();
        // drop non-maximal faces
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in &sets {
            let maximal = !sets
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|v| t.binary_search(v).is_ok()));
            if maximal {
                facets.push(s.clone());
            }
        }
        if facets.is_empty() && include_empty {
            facets.push(Vec::new());
        }
        facets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: Vec<String>) -> SimplicialComplex {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    pub fn empty_complex(vertices: Vec<String>) -> SimplicialComplex {
        SimplicialComplex {
            vertices,
            facets: vec![Vec::new()],
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn facet_names(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension: `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    /// True when the complex consists of all subsets of a single facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// True when the unique facet is the whole ground set.
    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.vertices.len()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        if self.is_void() {
            return false;
        }
        self.facets
            .iter()
            .any(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// All faces of dimension `d` (so of size `d+1`), sorted. `d = -1` yields
    /// the empty face when the complex is nonvoid.
    pub fn faces_of_dim(&self, d: i64) -> Vec<Vec<usize>> {
        if self.is_void() || d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return vec![Vec::new()];
        }
        let size = (d + 1) as usize;
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            if f.len() < size {
                continue;
            }
            subsets_of_size(f, size, &mut |s| {
                out.insert(s.to_vec());
            });
        }
        out.into_iter().collect()
    }

    /// Every face, the empty one included.
    pub fn all_faces(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.is_void() {
            return out;
        }
        let top = self.dim().unwrap();
        for d in -1..=top {
            out.extend(self.faces_of_dim(d));
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.all_faces().len()
    }

    /// Number of faces per dimension, starting at dimension 0.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(top) = self.dim() else {
            return Vec::new();
        };
        (0..=top).map(|d| self.faces_of_dim(d).len()).collect()
    }

    /// Restriction to a vertex subset: the faces contained in `keep`,
    /// as a complex on `keep` (order preserved).
    pub fn restriction(&self, keep: &[usize]) -> SimplicialComplex {
        let vertices: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let reindex: std::collections::BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let sets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .filter_map(|v| reindex.get(v).copied())
                    .collect::<Vec<usize>>()
            })
            .collect();
        let nonvoid = !self.is_void();
        SimplicialComplex::from_index_facets(vertices, sets, nonvoid)
    }

    /// link(F) = { G : G ∩ F = ∅, G ∪ F a face }, on the ground set minus F.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mut face = face.to_vec();
        face.sort_unstable();
        face.dedup();
        if !self.contains_face(&face) {
            let names: Vec<&str> = face.iter().map(|&v| self.vertices[v].as_str()).collect();
            return Err(Error::NotAFace(names.join(",")));
        }
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|v| face.binary_search(v).is_err())
            .collect();
        let vertices: Vec<String> = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let reindex: std::collections::BTreeMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let sets: Vec<Vec<usize>> = self
            .facets
            .iter()
            .filter(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
            .map(|f| {
                f.iter()
                    .filter_map(|v| reindex.get(v).copied())
                    .collect::<Vec<usize>>()
            })
            .collect();
        Ok(SimplicialComplex::from_index_facets(vertices, sets, true))
    }

    /// Alexander dual on the same ground set: faces are the complements of
    /// non-faces. Facets of the dual are complements of minimal non-faces.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::DegenerateComplex(
                "the void complex has no Alexander dual here".into(),
            ));
        }
        if self.is_full_simplex() {
            return Err(Error::DegenerateComplex(
                "the full simplex has no Alexander dual here".into(),
            ));
        }
        let n = self.vertices.len();
        if n > 64 {
            return Err(Error::ResourceLimit("more than 64 vertices".into()));
        }
        let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
        let sets: Vec<Vec<usize>> = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|nf| mask_indices(full & !mask_of(&nf)))
            .collect();
        Ok(SimplicialComplex::from_index_facets(
            self.vertices.clone(),
            sets,
            true,
        ))
    }

    /// Minimal non-faces = minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.vertices.len();
        assert!(n <= 64);
        let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
        if self.is_void() {
            return Ok(vec![Vec::new()]);
        }
        let complements: Vec<u64> = self.facets.iter().map(|f| full & !mask_of(f)).collect();
        Ok(minimal_transversals(&complements, n)?
            .into_iter()
            .map(mask_indices)
            .collect())
    }

    /// Stanley-Reisner ideal: generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::DegenerateComplex(
                "the void complex corresponds to the unit ideal".into(),
            ));
        }
        let nonfaces = self.minimal_nonfaces()?;
        if nonfaces.is_empty() {
            return Err(Error::FullSimplex);
        }
        let gens: Vec<Monomial> = nonfaces
            .iter()
            .map(|nf| Monomial::from_exponents(nf.iter().map(|&v| (self.vertices[v].clone(), 1))))
            .collect();
        MonomialIdeal::with_variables(self.vertices.clone(), gens)
    }

    /// The subcomplex generated by faces that lie in at least two facets and
    /// equal the intersection of all facets containing them. For a simplex
    /// this is the void complex.
    pub fn delta_one(&self) -> SimplicialComplex {
        if self.is_void() || self.is_simplex() {
            return SimplicialComplex::void(self.vertices.clone());
        }
        let mut gens: Vec<Vec<usize>> = Vec::new();
        for face in self.all_faces() {
            let containing: Vec<&Vec<usize>> = self
                .facets
                .iter()
                .filter(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
                .collect();
            if containing.len() < 2 {
                continue;
            }
            let mut inter: Vec<usize> = containing[0].clone();
            for f in &containing[1..] {
                inter.retain(|v| f.binary_search(v).is_ok());
            }
            if inter == face {
                gens.push(face);
            }
        }
        let nonvoid = !gens.is_empty();
        SimplicialComplex::from_index_facets(self.vertices.clone(), gens, nonvoid)
    }

    /// Reduced Euler characteristic: alternating face count including the
    /// empty face. 0 for the void complex.
    pub fn reduced_euler(&self) -> i64 {
        if self.is_void() {
            return 0;
        }
        let mut chi: i64 = -1; // the empty face, dimension -1
        for (d, count) in self.f_vector().iter().enumerate() {
            chi += if d % 2 == 0 {
                *count as i64
            } else {
                -(*count as i64)
            };
        }
        chi
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        if self.is_empty_complex() {
            return write!(f, "{{∅}}");
        }
        let names = self.facet_names();
        let parts: Vec<String> = names
            .iter()
            .map(|v| format!("{{{}}}", v.join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The complex on the ideal's variables whose Stanley-Reisner ideal is `ideal`:
/// faces are the squarefree monomials outside the ideal.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
    }
    let vars = ideal.variables().to_vec();
    let n = vars.len();
    if n > 64 {
        return Err(Error::ResourceLimit("more than 64 variables".into()));
    }
    let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let supports: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| {
            mask_of(
                &g.support()
                    .map(|v| vars.iter().position(|w| w == v).unwrap())
                    .collect::<Vec<usize>>(),
            )
        })
        .collect();
    // facets = complements of the minimal transversals of the supports
    let sets: Vec<Vec<usize>> = minimal_transversals(&supports, n)?
        .into_iter()
        .map(|m| mask_indices(full & !m))
        .collect();
    Ok(SimplicialComplex::from_index_facets(vars, sets, true))
}

fn subsets_of_size(set: &[usize], size: usize, emit: &mut impl FnMut(&[usize])) {
    fn rec(
        set: &[usize],
        size: usize,
        start: usize,
        acc: &mut Vec<usize>,
        emit: &mut impl FnMut(&[usize]),
    ) {
        if acc.len() == size {
            emit(acc);
            return;
        }
        let need = size - acc.len();
        for i in start..=set.len().saturating_sub(need) {
            acc.push(set[i]);
            rec(set, size, i + 1, acc, emit);
            acc.pop();
        }
    }
    if size <= set.len() {
        rec(set, size, 0, &mut Vec::new(), emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(verts: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            verts.iter().map(|s| s.to_string()).collect(),
            facets
                .iter()
                .map(|f| f.iter().map(|s| s.to_string()).collect())
                .collect(),
            true,
        )
        .unwrap()
    }

    #[test]
    fn construction_and_absorption() {
        let full = cx(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert!(full.is_full_simplex());
        assert_eq!(full.dim(), Some(2));

        let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        assert_eq!(hollow.facets().len(), 3);
        assert_eq!(hollow.dim(), Some(1));

        let absorbed = cx(&["1", "2", "3"], &[&["1", "2", "3"], &["2", "3"]]);
        assert_eq!(absorbed.facets().len(), 1);

        assert!(matches!(
            SimplicialComplex::from_facets(vec!["1".into()], vec![vec!["9".into()]], true),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn void_vs_empty() {
        let void = SimplicialComplex::void(vec!["a".into()]);
        let empty = SimplicialComplex::empty_complex(vec!["a".into()]);
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert!(empty.is_empty_complex());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(void.face_count(), 0);
        assert_eq!(empty.face_count(), 1);
    }

    #[test]
    fn faces_and_euler() {
        let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        assert_eq!(hollow.f_vector(), vec![3, 3]);
        assert_eq!(hollow.reduced_euler(), -1 + 3 - 3);
        assert_eq!(hollow.faces_of_dim(-1), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn sr_translation_roundtrip() {
        let i = MonomialIdeal::parse("x*y", false).unwrap();
        let k = stanley_reisner_complex(&i).unwrap();
        assert_eq!(k.facets().len(), 2); // {x} and {y}
        assert_eq!(k.stanley_reisner_ideal().unwrap(), i);

        // four generators on five variables: the minimal non-faces are the supports
        let i = MonomialIdeal::parse("bde,cde,ace,acd", true).unwrap();
        let k = stanley_reisner_complex(&i).unwrap();
        let nonfaces: Vec<Vec<String>> = k
            .minimal_nonfaces()
            .unwrap()
            .into_iter()
            .map(|nf| nf.into_iter().map(|v| k.vertices()[v].clone()).collect())
            .collect();
        assert_eq!(
            nonfaces,
            vec![
                vec!["a".to_string(), "c".into(), "d".into()],
                vec!["a".to_string(), "c".into(), "e".into()],
                vec!["b".to_string(), "d".into(), "e".into()],
                vec!["c".to_string(), "d".into(), "e".into()],
            ]
        );
        assert_eq!(k.stanley_reisner_ideal().unwrap(), i);
    }

    #[test]
    fn sr_rejects_non_squarefree_and_full_simplex() {
        let i = MonomialIdeal::parse("x^2", false).unwrap();
        assert!(matches!(
            stanley_reisner_complex(&i),
            Err(Error::NotSquarefree(_))
        ));
        let full = cx(&["1", "2"], &[&["1", "2"]]);
        assert!(matches!(
            full.stanley_reisner_ideal(),
            Err(Error::FullSimplex)
        ));
    }

    #[test]
    fn alexander_dual_examples() {
        // two isolated vertices on ground {1,2}: dual is {∅}
        let two = cx(&["1", "2"], &[&["1"], &["2"]]);
        let dual = two.alexander_dual().unwrap();
        assert!(dual.is_empty_complex());

        // hollow triangle: minimal non-face {1,2,3}, dual facet = ∅ -> {∅}?
        // no: complement of {1,2,3} in {1,2,3} is ∅, so the dual is {∅}
        let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let dual = hollow.alexander_dual().unwrap();
        assert!(dual.is_empty_complex());

        // {∅} on {1,2,3}: minimal non-faces are the singletons, dual = hollow triangle
        let empty = SimplicialComplex::empty_complex(vec!["1".into(), "2".into(), "3".into()]);
        let dual = empty.alexander_dual().unwrap();
        assert_eq!(dual.facets().len(), 3);
        assert!(dual.facets().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn alexander_dual_is_an_involution() {
        // all complexes on up to 5 vertices (facet antichains), minus degenerates
        for n in 1..=5usize {
            let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            for family in crate::enumerate::antichains_on(n) {
                let k = SimplicialComplex::from_index_facets(
                    verts.clone(),
                    family.iter().map(|&m| mask_indices(m)).collect(),
                    !family.is_empty(),
                );
                if k.is_void() || k.is_full_simplex() {
                    continue;
                }
                let dual = k.alexander_dual().unwrap();
                if dual.is_void() || dual.is_full_simplex() {
                    continue;
                }
                assert_eq!(dual.alexander_dual().unwrap(), k, "complex {k}");
            }
        }
    }

    #[test]
    fn links() {
        let k = cx(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        // link of the shared edge {2,3}: vertices 1 and 4
        let e = vec![k.vertex_index("2").unwrap(), k.vertex_index("3").unwrap()];
        let link = k.link(&e).unwrap();
        let mut names: Vec<String> = link.facet_names().into_iter().map(|f| f.join("")).collect();
        names.sort();
        assert_eq!(names, vec!["1".to_string(), "4".into()]);

        // link of the empty face is the complex itself (up to ground set)
        let l = k.link(&[]).unwrap();
        assert_eq!(l.facets().len(), 2);

        // link of a vertex in the hollow triangle: the two opposite vertices
        let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let l = hollow.link(&[0]).unwrap();
        assert_eq!(l.facets().len(), 2);
        assert!(l.facets().iter().all(|f| f.len() == 1));

        assert!(matches!(k.link(&[0, 3]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn delta_one_examples() {
        // two triangles glued along an edge: delta_one is that edge
        let k = cx(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        let d1 = k.delta_one();
        assert_eq!(d1.facets().len(), 1);
        assert_eq!(d1.facet_names()[0], vec!["2".to_string(), "3".to_string()]);

        // a simplex has void delta_one
        let simplex = cx(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert!(simplex.delta_one().is_void());

        // hollow triangle: three vertices
        let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let d1 = hollow.delta_one();
        assert_eq!(d1.facets().len(), 3);
        assert!(d1.facets().iter().all(|f| f.len() == 1));

        // two disjoint points: delta_one is {∅}
        let two = cx(&["1", "2"], &[&["1"], &["2"]]);
        assert!(two.delta_one().is_empty_complex());
    }

    #[test]
    fn restriction() {
        let k = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        let r = k.restriction(&[0, 1]);
        assert_eq!(r.facets().len(), 1);
        assert_eq!(r.facet_names()[0], vec!["1".to_string(), "2".to_string()]);
    }
}
