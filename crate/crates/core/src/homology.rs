//! Reduced simplicial homology over an exact field: the rationals (integer
//! boundary matrices, fraction-free rank) or a prime field GF(p).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Coefficient field for homology.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "f{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `q` for the rationals, `f<p>` for GF(p).
    fn from_str(s: &str) -> Result<FieldSpec> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" || s == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix('f') {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad field `{s}`")))?;
            if p < 2 || p >= 1 << 31 || !is_prime(p) {
                return Err(Error::Invalid(format!("`{p}` is not a small prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Invalid(format!("bad field `{s}` (use q, f2, f<p>)")))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduced homology dimensions by degree, from -1 up to the complex dimension.
/// Absent degrees are zero. The void complex has every degree zero; the empty
/// complex `{∅}` has exactly dim -1 equal to one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    dims: BTreeMap<i64, u64>,
}

impl HomologyProfile {
    pub fn dim(&self, d: i64) -> u64 {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.dims
            .iter()
            .filter(|(_, &v)| v > 0)
            .map(|(&d, &v)| (d, v))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&v| v == 0)
    }

    /// Alternating sum over all degrees, empty face included.
    pub fn reduced_euler(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&d, &v)| {
                if d.rem_euclid(2) == 0 {
                    v as i64
                } else {
                    -(v as i64)
                }
            })
            .sum()
    }
}

/// Default cap on the number of faces a single homology call will enumerate.
pub const FACE_CAP: usize = 500_000;

/// Budget on elimination work (rows x cols x pivots) for one boundary matrix.
pub const RANK_WORK_CAP: u128 = 200_000_000;

/// Reduced homology of `complex` over `field`.
///
/// Boundary matrices are built one dimension at a time so only two face
/// indices are alive at once; ranks are exact (Bareiss over i128 with a
/// big-integer fallback for the rationals, modular elimination for GF(p)).
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> Result<HomologyProfile> {
    reduced_homology_capped(complex, field, FACE_CAP)
}

pub fn reduced_homology_capped(
    complex: &SimplicialComplex,
    field: FieldSpec,
    face_cap: usize,
) -> Result<HomologyProfile> {
    let mut dims = BTreeMap::new();
    if complex.is_void() {
        return Ok(HomologyProfile { field, dims });
    }
    let top = complex.dim().unwrap();
    // f_d, rank(∂_d) for d = -1..=top; rank(∂_{-1}) = 0 by convention
    let mut prev_faces: Vec<Vec<usize>> = complex.faces_of_dim(-1);
    let mut f_prev = 1usize;
    let mut rank_prev = 0usize; // rank of ∂ at the previous dimension
    let mut budget = face_cap as i64 - 1;
    for d in 0..=top {
        let faces = complex.faces_of_dim(d);
        budget -= faces.len() as i64;
        if budget < 0 {
            return Err(Error::ResourceLimit(format!(
                "face enumeration exceeds cap {face_cap}"
            )));
        }
        let index: BTreeMap<&[usize], usize> = prev_faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        // boundary matrix: rows = (d-1)-faces, columns = d-faces
        let rows = prev_faces.len();
        let cols = faces.len();
        let work = rows as u128 * cols as u128 * rows.min(cols).max(1) as u128;
        if work > RANK_WORK_CAP {
            return Err(Error::ResourceLimit(format!(
                "boundary matrix at dimension {d} needs {work} elimination steps"
            )));
        }
        let mut matrix = vec![vec![0i64; cols]; rows];
        for (c, face) in faces.iter().enumerate() {
            let mut sub = face.clone();
            for (k, &v) in face.iter().enumerate() {
                sub.remove(k);
                let r = index[sub.as_slice()];
                matrix[r][c] = if k % 2 == 0 { 1 } else { -1 };
                sub.insert(k, v);
            }
        }
        let rank = match field {
            FieldSpec::Rationals => rank_rational(&matrix),
            FieldSpec::Prime(p) => rank_mod_p(&matrix, p),
        };
        // dim H_{d-1} = f_{d-1} - rank ∂_{d-1} - rank ∂_d
        let h = f_prev - rank_prev - rank;
        dims.insert(d - 1, h as u64);
        rank_prev = rank;
        f_prev = faces.len();
        prev_faces = faces;
    }
    let h_top = f_prev - rank_prev;
    dims.insert(top, h_top as u64);
    Ok(HomologyProfile { field, dims })
}

/// Exact rank of an integer matrix (rank over the rationals).
pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    match rank_bareiss_i128(matrix) {
        Some(r) => r,
        None => rank_bareiss_bigint(matrix),
    }
}

/// Fraction-free Bareiss elimination over i128; `None` on overflow.
fn rank_bareiss_i128(matrix: &[Vec<i64>]) -> Option<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| a[r][col] != 0);
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let t1 = a[row][col].checked_mul(a[r][c])?;
                let t2 = a[r][col].checked_mul(a[row][c])?;
                a[r][c] = t1.checked_sub(t2)? / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    Some(rank)
}

/// Same elimination over arbitrary-precision integers.
fn rank_bareiss_bigint(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let zero = BigInt::from(0);
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| a[r][col] != zero);
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let t = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = t / &prev;
            }
            a[r][col] = zero.clone();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Rank over GF(p) by modular Gaussian elimination.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let pi = p as i128;
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| ((x as i128).rem_euclid(pi)) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| a[r][col] % p != 0);
        let Some(piv) = pivot else { continue };
        a.swap(row, piv);
        let inv = mod_inverse(a[row][col], p);
        for c in col..cols {
            a[row][c] = mulmod(a[row][c], inv, p);
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..cols {
                    let sub = mulmod(factor, a[row][c], p);
                    a[r][c] = (a[r][c] + p - sub) % p;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    result
}

/// Witness for a Cohen-Macaulay failure: a face whose link has homology
/// strictly below its top dimension.
#[derive(Clone, Debug)]
pub struct CmWitness {
    pub face: Vec<String>,
    pub degree: i64,
    pub homology_dim: u64,
}

/// Reisner's criterion over the chosen field: the complex is Cohen-Macaulay
/// iff every link (including the link of the empty face) has reduced homology
/// concentrated in its top dimension.
pub fn is_cohen_macaulay(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<(bool, Option<CmWitness>)> {
    if complex.is_void() {
        return Err(Error::DegenerateComplex(
            "the void complex has no Cohen-Macaulay type".into(),
        ));
    }
    // gate the face loop before enumerating anything
    let budget: u128 = 200_000;
    let bound: u128 = complex
        .facets()
        .iter()
        .map(|f| 1u128 << f.len().min(100))
        .sum();
    if bound > budget {
        return Err(Error::ResourceLimit(format!(
            "Cohen-Macaulay check would visit up to {bound} faces"
        )));
    }
    for face in complex.all_faces() {
        let link = complex.link(&face)?;
        let top = link.dim().expect("links of faces are nonvoid");
        let profile = reduced_homology(&link, field)?;
        for d in -1..top {
            let h = profile.dim(d);
            if h > 0 {
                let names = face
                    .iter()
                    .map(|&v| complex.vertices()[v].clone())
                    .collect();
                return Ok((
                    false,
                    Some(CmWitness {
                        face: names,
                        degree: d,
                        homology_dim: h,
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

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

    fn profile(k: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
        reduced_homology(k, field).unwrap()
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("f2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("f101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert!("f4".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn profiles_of_standard_spaces() {
        for field in [FieldSpec::Rationals, FieldSpec::GF2] {
            // circle: H1 = 1
            let hollow = cx(&["1", "2", "3"], &[&["1", "2"], &["2", "3"], &["1", "3"]]);
            let p = profile(&hollow, field);
            assert_eq!(p.dim(0), 0);
            assert_eq!(p.dim(1), 1);
            assert_eq!(p.dim(-1), 0);

            // two isolated vertices: H0 = 1
            let two = cx(&["1", "2"], &[&["1"], &["2"]]);
            let p = profile(&two, field);
            assert_eq!(p.dim(0), 1);
            assert_eq!(p.dim(-1), 0);

            // the empty complex {∅}: H_{-1} = 1
            let empty = SimplicialComplex::empty_complex(vec!["a".into()]);
            let p = profile(&empty, field);
            assert_eq!(p.dim(-1), 1);
            assert!(p.nonzero().count() == 1);

            // the void complex: everything zero
            let void = SimplicialComplex::void(vec!["a".into()]);
            let p = profile(&void, field);
            assert!(p.is_acyclic());

            // a point and a filled triangle are acyclic
            let point = cx(&["1"], &[&["1"]]);
            assert!(profile(&point, field).is_acyclic());
            let disk = cx(&["1", "2", "3"], &[&["1", "2", "3"]]);
            assert!(profile(&disk, field).is_acyclic());

            // the 2-sphere as the boundary of a tetrahedron
            let sphere = cx(
                &["1", "2", "3", "4"],
                &[
                    &["1", "2", "3"],
                    &["1", "2", "4"],
                    &["1", "3", "4"],
                    &["2", "3", "4"],
                ],
            );
            let p = profile(&sphere, field);
            assert_eq!(p.dim(2), 1);
            assert_eq!(p.dim(1), 0);
            assert_eq!(p.dim(0), 0);
        }
    }

    #[test]
    fn torsion_separates_fields() {
        // minimal 6-vertex triangulation of the real projective plane
        let rp2 = cx(
            &["1", "2", "3", "4", "5", "6"],
            &[
                &["1", "2", "3"],
                &["1", "2", "4"],
                &["1", "3", "5"],
                &["1", "4", "6"],
                &["1", "5", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "5", "6"],
                &["3", "4", "5"],
                &["3", "4", "6"],
            ],
        );
        let q = profile(&rp2, FieldSpec::Rationals);
        assert!(q.is_acyclic());
        let f2 = profile(&rp2, FieldSpec::GF2);
        assert_eq!(f2.dim(1), 1);
        assert_eq!(f2.dim(2), 1);
    }

    #[test]
    fn euler_characteristic_matches_face_counts() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6usize);
            let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let n_facets = rng.gen_range(1..=5usize);
            let facets: Vec<Vec<usize>> = (0..n_facets)
                .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
                .collect();
            let k = SimplicialComplex::from_index_facets(verts, facets, true);
            for field in [FieldSpec::Rationals, FieldSpec::GF2] {
                let p = reduced_homology(&k, field).unwrap();
                assert_eq!(p.reduced_euler(), k.reduced_euler(), "complex {k}");
            }
        }
    }

    #[test]
    fn cm_examples() {
        let full = cx(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert!(is_cohen_macaulay(&full, FieldSpec::Rationals).unwrap().0);

        // two disjoint edges: 1-dimensional but disconnected
        let disjoint = cx(&["1", "2", "3", "4"], &[&["1", "2"], &["3", "4"]]);
        let (cm, witness) = is_cohen_macaulay(&disjoint, FieldSpec::Rationals).unwrap();
        assert!(!cm);
        let w = witness.unwrap();
        assert!(w.face.is_empty());
        assert_eq!(w.degree, 0);

        // two triangles sharing an edge
        let glued = cx(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["2", "3", "4"]]);
        assert!(is_cohen_macaulay(&glued, FieldSpec::Rationals).unwrap().0);

        // a pure non-CM example: RP^2 over GF(2) is not CM in dim < top? it is CM over Q?
        // (RP^2 is CM over Q and not over GF(2): H_1 vanishes rationally only.)
        let rp2 = cx(
            &["1", "2", "3", "4", "5", "6"],
            &[
                &["1", "2", "3"],
                &["1", "2", "4"],
                &["1", "3", "5"],
                &["1", "4", "6"],
                &["1", "5", "6"],
                &["2", "3", "6"],
                &["2", "4", "5"],
                &["2", "5", "6"],
                &["3", "4", "5"],
                &["3", "4", "6"],
            ],
        );
        assert!(is_cohen_macaulay(&rp2, FieldSpec::Rationals).unwrap().0);
        assert!(!is_cohen_macaulay(&rp2, FieldSpec::GF2).unwrap().0);
    }

    #[test]
    fn cm_implies_pure_on_small_complexes() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(1..=5usize);
            let verts: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let n_facets = rng.gen_range(1..=4usize);
            let facets: Vec<Vec<usize>> = (0..n_facets)
                .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
                .collect();
            let k = SimplicialComplex::from_index_facets(verts, facets, true);
            if k.is_void() {
                continue;
            }
            let (cm, _) = is_cohen_macaulay(&k, FieldSpec::Rationals).unwrap();
            if cm {
                let lens: Vec<usize> = k.facets().iter().map(|f| f.len()).collect();
                assert!(lens.iter().all(|&l| l == lens[0]), "CM but not pure: {k}");
            }
        }
    }

    #[test]
    fn big_rank_fallback_agrees() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..30 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=8);
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            assert_eq!(rank_bareiss_i128(&m).unwrap(), rank_bareiss_bigint(&m));
        }
    }
}
