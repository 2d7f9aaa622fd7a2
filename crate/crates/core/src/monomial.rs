//! Monomials and monomial ideals: divisibility arithmetic, minimal generating
//! sets, polarization, and variable substitution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Total degree cap; parsing and arithmetic refuse to go past it.
pub const MAX_DEGREE: u64 = 1_000_000;

/// A monomial as a canonical exponent map. Zero exponents are never stored,
/// so the unit monomial is the empty map.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(name: &str) -> Self {
        let mut exps = BTreeMap::new();
        exps.insert(name.to_string(), 1);
        Monomial { exps }
    }

    pub fn from_exponents<I: IntoIterator<Item = (String, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(v, &e)| (v.as_str(), e))
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.exps.keys().map(|s| s.as_str())
    }

    pub fn support_set(&self) -> BTreeSet<String> {
        self.exps.keys().cloned().collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.values().all(|&e| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(v) >= e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            let slot = exps.entry(v.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .filter_map(|(v, &e)| {
                let f = other.exponent(v).min(e);
                (f > 0).then(|| (v.clone(), f))
            })
            .collect();
        Monomial { exps }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            let slot = exps.entry(v.clone()).or_insert(0);
            *slot = slot
                .checked_add(e)
                .ok_or_else(|| Error::DegreeOverflow(v.clone()))?;
        }
        let m = Monomial { exps };
        if m.degree() > MAX_DEGREE {
            return Err(Error::DegreeOverflow(m.to_string()));
        }
        Ok(m)
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|(v, &e)| {
                let f = e - other.exponent(v);
                (f > 0).then(|| (v.clone(), f))
            })
            .collect();
        Some(Monomial { exps })
    }

    /// Parse `a^2*b*c` (or, with `compact`, single-letter juxtaposition `aabc`).
    /// `1` is the unit monomial in either grammar.
    pub fn parse(text: &str, compact: bool) -> Result<Monomial> {
        let text = text.trim();
        let err = |reason: &str| Error::Syntax {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(err("empty monomial"));
        }
        if text == "1" {
            return Ok(Monomial::one());
        }
        if text.contains('-') {
            return Err(Error::NegativeExponent(text.to_string()));
        }
        let mut exps: BTreeMap<String, u32> = BTreeMap::new();
        if compact {
            for ch in text.chars() {
                if !ch.is_ascii_alphabetic() {
                    return Err(err("compact monomials are juxtaposed letters"));
                }
                *exps.entry(ch.to_string()).or_insert(0) += 1;
            }
        } else {
            for factor in text.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                let (name, exp) = match factor.split_once('^') {
                    None => (factor, 1u32),
                    Some((name, pow)) => {
                        let pow = pow.trim();
                        if pow.starts_with('-') {
                            return Err(Error::NegativeExponent(text.to_string()));
                        }
                        let e: u32 = pow
                            .parse()
                            .map_err(|_| err("exponent is not a nonnegative integer"))?;
                        (name.trim(), e)
                    }
                };
                if !is_variable_name(name) {
                    return Err(err("bad variable name"));
                }
                if exp > 0 {
                    let slot = exps.entry(name.to_string()).or_insert(0);
                    *slot = slot
                        .checked_add(exp)
                        .ok_or_else(|| Error::DegreeOverflow(text.to_string()))?;
                }
            }
        }
        let m = Monomial { exps };
        if m.degree() > MAX_DEGREE {
            return Err(Error::DegreeOverflow(text.to_string()));
        }
        Ok(m)
    }
}

/// Identifier, optionally with trailing primes (polarization names like `a'`).
pub fn is_variable_name(s: &str) -> bool {
    let base = s.trim_end_matches('\'');
    !base.is_empty()
        && base.chars().next().unwrap().is_ascii_alphabetic()
        && base.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A proper monomial ideal given by its minimal generating set.
///
/// Generators are minimalized (no generator divides another) and stored in
/// (degree, text) order; the ambient variable list is sorted. The zero and
/// unit ideals are rejected at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `gens` and infer the variable list from their supports.
    pub fn new(gens: Vec<Monomial>) -> Result<Self> {
        let gens = minimalize(gens)?;
        let vars: BTreeSet<String> = gens.iter().flat_map(|g| g.support_set()).collect();
        Ok(MonomialIdeal {
            vars: vars.into_iter().collect(),
            gens,
        })
    }

    /// As `new`, but over an explicit ambient variable list (sorted, deduped).
    pub fn with_variables(vars: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        let gens = minimalize(gens)?;
        let mut vars: Vec<String> = vars;
        vars.sort();
        vars.dedup();
        for g in &gens {
            for v in g.support() {
                if !vars.iter().any(|w| w == v) {
                    return Err(Error::UnknownId(v.to_string()));
                }
            }
        }
        Ok(MonomialIdeal { vars, gens })
    }

    /// Parse a comma- or newline-separated generator list.
    pub fn parse(text: &str, compact: bool) -> Result<Self> {
        let mut gens = Vec::new();
        for chunk in text.split(|c| c == ',' || c == '\n' || c == ';') {
            let chunk = chunk.trim().trim_matches(|c| c == '(' || c == ')');
            if chunk.is_empty() {
                continue;
            }
            gens.push(Monomial::parse(chunk, compact)?);
        }
        MonomialIdeal::new(gens)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Variables that divide at least one generator.
    pub fn support_variables(&self) -> Vec<String> {
        self.vars
            .iter()
            .filter(|v| self.gens.iter().any(|g| g.exponent(v) > 0))
            .cloned()
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn gcd_of_generators(&self) -> Monomial {
        let mut it = self.gens.iter();
        let first = it.next().expect("nonempty").clone();
        it.fold(first, |acc, g| acc.gcd(g))
    }

    /// Divide every generator by a common factor `g`.
    pub fn divide_by(&self, g: &Monomial) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|m| {
                m.checked_div(g)
                    .ok_or_else(|| Error::Invalid(format!("`{g}` does not divide `{m}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(gens)
    }

    /// Iterated simple polarization. Variables are processed in sorted order;
    /// for each one the highest power is split off first, so the result and
    /// the provenance map are deterministic. The map sends each new variable
    /// to `(source variable, power slot)`: slot `k` stands for the k-th power.
    pub fn polarize(&self) -> Result<(MonomialIdeal, BTreeMap<String, (String, u32)>)> {
        let mut gens = self.gens.clone();
        let mut var_map = BTreeMap::new();
        let mut taken: BTreeSet<String> = self.vars.iter().cloned().collect();
        for v in &self.vars {
            let mut primes = 0usize;
            loop {
                let top = gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0);
                if top < 2 {
                    break;
                }
                primes += 1;
                let mut fresh = format!("{v}{}", "'".repeat(primes));
                while taken.contains(&fresh) {
                    fresh.push('\'');
                }
                taken.insert(fresh.clone());
                var_map.insert(fresh.clone(), (v.clone(), top));
                for g in &mut gens {
                    if g.exponent(v) == top {
                        let mut pairs: Vec<(String, u32)> =
                            g.exponents().map(|(n, e)| (n.to_string(), e)).collect();
                        for p in &mut pairs {
                            if p.0 == *v {
                                p.1 = top - 1;
                            }
                        }
                        pairs.push((fresh.clone(), 1));
                        *g = Monomial::from_exponents(pairs);
                    }
                }
            }
        }
        let ideal = MonomialIdeal::new(gens)?;
        debug_assert!(ideal.is_squarefree());
        Ok((ideal, var_map))
    }

    /// Apply a variable substitution (target `None` erases the variable) and
    /// minimalize. Unmapped variables are kept as themselves.
    pub fn substitute(&self, sigma: &BTreeMap<String, Option<String>>) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut m = Monomial::one();
            for (v, e) in g.exponents() {
                let target = match sigma.get(v) {
                    Some(None) => continue,
                    Some(Some(w)) => w.clone(),
                    None => v.to_string(),
                };
                m = m.checked_mul(&Monomial::from_exponents([(target, e)]))?;
            }
            gens.push(m);
        }
        MonomialIdeal::new(gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Result<Vec<Monomial>> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    gens.sort_by_key(|g| (g.degree(), g.to_string()));
    gens.dedup();
    if gens[0].is_one() {
        return Err(Error::UnitIdeal);
    }
    let mut keep: Vec<Monomial> = Vec::new();
    for g in gens {
        if !keep.iter().any(|k| k.divides(&g)) {
            keep.push(g);
        }
    }
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        Monomial::parse(s, false).unwrap()
    }

    #[test]
    fn parse_canonical_and_compact() {
        assert_eq!(m("b*d").to_string(), "b*d");
        assert_eq!(m("c*d*e^2").to_string(), "c*d*e^2");
        assert_eq!(Monomial::parse("bd", true).unwrap(), m("b*d"));
        assert_eq!(Monomial::parse("aabc", true).unwrap(), m("a^2*b*c"));
        assert_eq!(m("1"), Monomial::one());
        assert_eq!(m("x^0"), Monomial::one());
        assert!(matches!(
            Monomial::parse("x^-2", false),
            Err(Error::NegativeExponent(_))
        ));
        assert!(Monomial::parse("2x", false).is_err());
        assert!(Monomial::parse("a2", true).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(m("b*d").lcm(&m("c*d")), m("b*c*d"));
        assert_eq!(m("a*b").gcd(&m("c*d")), Monomial::one());
        assert!(m("a").divides(&m("a^2*b*c*e")));
        assert!(!m("a^3").divides(&m("a^2")));
        assert_eq!(m("a^2*b").degree(), 3);
        assert_eq!(m("a*b").checked_mul(&m("a")).unwrap(), m("a^2*b"));
        assert_eq!(m("a^2*b").checked_div(&m("a*b")), Some(m("a")));
        assert_eq!(m("a").checked_div(&m("b")), None);
    }

    #[test]
    fn lcm_gcd_product_identity() {
        // lcm * gcd = product, componentwise
        let pairs = [("a^2*b", "a*b^3"), ("x*y", "z"), ("a*c", "b*d")];
        for (s, t) in pairs {
            let (x, y) = (m(s), m(t));
            assert_eq!(
                x.lcm(&y).checked_mul(&x.gcd(&y)).unwrap(),
                x.checked_mul(&y).unwrap()
            );
        }
    }

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::parse("b*d, c*d, a*c, a*b*c*d", false).unwrap();
        assert_eq!(i.to_string(), "(a*c, b*d, c*d)");
        let j = MonomialIdeal::parse("x, x^2", false).unwrap();
        assert_eq!(j.to_string(), "(x)");
        // pairwise non-dividing set is untouched
        let k = MonomialIdeal::parse("bde,cde,ace,acd", true).unwrap();
        assert_eq!(k.num_generators(), 4);
        assert!(matches!(
            MonomialIdeal::parse("", false),
            Err(Error::EmptyGeneratorSet)
        ));
        assert!(matches!(
            MonomialIdeal::parse("1, x", false),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn minimalize_is_order_independent() {
        let a = MonomialIdeal::parse("a*c, b*d, c*d", false).unwrap();
        let b = MonomialIdeal::parse("c*d, a*c, b*d", false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn polarization_golden_pair() {
        // (cde^2, bde^2, ae^2, a^2bce, a^2bcd) -> (cdef, bdef, aef, abceg, abcdg)
        // with a^2 -> a a' and e^2 -> e e'; renaming a' -> g, e' -> f.
        let i =
            MonomialIdeal::parse("c*d*e^2, b*d*e^2, a*e^2, a^2*b*c*e, a^2*b*c*d", false).unwrap();
        let (pol, map) = i.polarize().unwrap();
        assert_eq!(map.len(), 2);
        assert_eq!(map["a'"], ("a".to_string(), 2));
        assert_eq!(map["e'"], ("e".to_string(), 2));
        let rename: BTreeMap<String, Option<String>> = [
            ("a'".to_string(), Some("g".to_string())),
            ("e'".to_string(), Some("f".to_string())),
        ]
        .into();
        let renamed = pol.substitute(&rename).unwrap();
        let expect = MonomialIdeal::parse("cdef,bdef,aef,abceg,abcdg", true).unwrap();
        assert_eq!(renamed, expect);
        // inverse substitution recovers the input
        let back: BTreeMap<String, Option<String>> = map
            .iter()
            .map(|(fresh, (src, _))| (fresh.clone(), Some(src.clone())))
            .collect();
        assert_eq!(pol.substitute(&back).unwrap(), i);
    }

    #[test]
    fn polarization_edge_cases() {
        let sf = MonomialIdeal::parse("a*b, c", false).unwrap();
        let (pol, map) = sf.polarize().unwrap();
        assert_eq!(pol, sf);
        assert!(map.is_empty());

        let cube = MonomialIdeal::parse("x^3", false).unwrap();
        let (pol, map) = cube.polarize().unwrap();
        assert_eq!(pol.to_string(), "(x*x'*x'')");
        assert_eq!(map["x'"], ("x".to_string(), 3));
        assert_eq!(map["x''"], ("x".to_string(), 2));
    }

    #[test]
    fn polarize_then_depolarize_roundtrip_random() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let vars = ["a", "b", "c", "d"];
        for _ in 0..200 {
            let n_gens = rng.gen_range(1..=4);
            let gens: Vec<Monomial> = (0..n_gens)
                .map(|_| {
                    Monomial::from_exponents(vars.iter().filter_map(|v| {
                        let e = rng.gen_range(0..=3u32);
                        (e > 0).then(|| (v.to_string(), e))
                    }))
                })
                .filter(|g| !g.is_one())
                .collect();
            let Ok(i) = MonomialIdeal::new(gens) else {
                continue;
            };
            let (pol, map) = i.polarize().unwrap();
            assert!(pol.is_squarefree());
            let back: BTreeMap<String, Option<String>> = map
                .iter()
                .map(|(fresh, (src, _))| (fresh.clone(), Some(src.clone())))
                .collect();
            assert_eq!(pol.substitute(&back).unwrap(), i);
        }
    }

    #[test]
    fn substitution() {
        let i = MonomialIdeal::parse("x*y, y*z", false).unwrap();
        let sigma: BTreeMap<String, Option<String>> = [("y".to_string(), None)].into();
        assert_eq!(i.substitute(&sigma).unwrap().to_string(), "(x, z)");
        let id: BTreeMap<String, Option<String>> = BTreeMap::new();
        assert_eq!(i.substitute(&id).unwrap(), i);
    }
}
