//! Monomial ideals over an explicit, ordered list of variables.
//!
//! An ideal is stored by its minimal generators in canonical order (degree
//! ascending, then exponent vectors descending lexicographically), so two
//! ideals over the same variables are equal iff their generator lists are.
//! Deleting variables is modelled by shrinking the ambient variable list.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::IdealError;
use crate::graph::{Graph, VertexSet};

/// Ordered variable names of a polynomial ring.
pub type Ambient = Arc<[String]>;

pub fn ambient<S: AsRef<str>>(names: &[S]) -> Ambient {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// Exponent vector aligned to an ambient variable list; all zeros is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree monomial with the given support.
    pub fn from_set(n: usize, set: VertexSet) -> Self {
        let mut e = vec![0; n];
        for v in set.iter() {
            e[v] = 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Support as a bit mask; only meaningful for at most 64 variables.
    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1u64 << i)
    }

    /// Degree first, then larger exponent vectors first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, names }
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Monomial ideal given by its minimal generators.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ambient: Ambient,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    /// Minimalizes an arbitrary generating set.
    pub fn new(ambient: Ambient, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.len() != ambient.len() {
                return Err(IdealError::Arity {
                    expected: ambient.len(),
                    got: g.len(),
                });
            }
        }
        Ok(Self::minimalize(ambient, gens))
    }

    /// Divisibility antichain of `gens`, canonically sorted.
    pub fn minimalize(ambient: Ambient, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(Monomial::canonical_cmp);
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // a proper divisor has strictly smaller degree, so it is already in `kept`
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { ambient, gens: kept }
    }

    pub fn zero(ambient: Ambient) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: Ambient) -> Self {
        let n = ambient.len();
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(ambient: Ambient, m: Monomial) -> Result<Self, IdealError> {
        Self::new(ambient, vec![m])
    }

    /// Ideal generated by the variables with indices in `set`.
    pub fn variables(ambient: Ambient, set: VertexSet) -> Self {
        let n = ambient.len();
        Self::minimalize(ambient, set.iter().map(|v| Monomial::var(n, v)).collect())
    }

    /// Edge ideal over the vertex labels of `g` (isolated vertices included).
    pub fn edge_ideal(g: &Graph) -> Self {
        let n = g.n();
        let gens = g
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::from_set(n, VertexSet::from_indices([u, v])))
            .collect();
        Self::minimalize(ambient(g.labels()), gens)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient
    }

    fn check_ambient(&self, other: &Self) -> Result<(), IdealError> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(IdealError::AmbientMismatch)
        }
    }

    fn check_arity(&self, m: &Monomial) -> Result<(), IdealError> {
        if m.len() == self.nvars() {
            Ok(())
        } else {
            Err(IdealError::Arity {
                expected: self.nvars(),
                got: m.len(),
            })
        }
    }

    pub fn monomial(&self, exponents: &[(&str, u32)]) -> Result<Monomial, IdealError> {
        let mut e = vec![0; self.nvars()];
        for &(name, k) in exponents {
            let i = self
                .ambient
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| IdealError::UnknownVariable(name.to_string()))?;
            e[i] += k;
        }
        Ok(Monomial(e))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalize(self.ambient.clone(), gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| u.mul(v)))
            .collect();
        Ok(Self::minimalize(self.ambient.clone(), gens))
    }

    pub fn power(&self, k: u32) -> Result<Self, IdealError> {
        if k == 0 {
            return Err(IdealError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : m)`, generated by `u / gcd(u, m)` over the generators `u`.
    pub fn colon(&self, m: &Monomial) -> Result<Self, IdealError> {
        self.check_arity(m)?;
        let gens = self.gens.iter().map(|u| u.quotient(m)).collect();
        Ok(Self::minimalize(self.ambient.clone(), gens))
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_ambient(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| u.lcm(v)))
            .collect();
        Ok(Self::minimalize(self.ambient.clone(), gens))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ⊆ J`.
    pub fn is_subideal_of(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.gens.iter().all(|g| other.contains(g))
    }

    /// Indices of the variables that are themselves minimal generators.
    pub fn variable_generators(&self) -> VertexSet {
        self.gens
            .iter()
            .filter(|g| g.degree() == 1)
            .map(|g| g.0.iter().position(|&e| e == 1).expect("degree one"))
            .collect()
    }

    /// Same generators over a larger variable list. Every current variable must
    /// appear in `target`.
    pub fn embed(&self, target: &Ambient) -> Result<Self, IdealError> {
        let map: Vec<usize> = self
            .ambient
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .ok_or_else(|| IdealError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; target.len()];
                for (i, &k) in g.0.iter().enumerate() {
                    e[map[i]] = k;
                }
                Monomial(e)
            })
            .collect();
        Ok(Self::minimalize(target.clone(), gens))
    }

    /// Machine-readable dump: one whitespace-separated exponent row per generator.
    pub fn to_rows(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            let row: Vec<String> = g.0.iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses `"(x*y, z^2)"`-style text over the given variables; `(0)` is the
    /// zero ideal and `(1)` the unit ideal.
    pub fn parse(ambient: Ambient, text: &str) -> Result<Self, IdealError> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let n = ambient.len();
        let mut gens = Vec::new();
        if inner.is_empty() || inner == "0" {
            return Ok(Self::zero(ambient));
        }
        for term in inner.split(',') {
            let mut e = vec![0; n];
            for factor in term.split('*').map(str::trim) {
                if factor == "1" {
                    continue;
                }
                let (name, k) = match factor.split_once('^') {
                    Some((v, k)) => (
                        v.trim(),
                        k.trim()
                            .parse::<u32>()
                            .map_err(|_| IdealError::UnknownVariable(factor.to_string()))?,
                    ),
                    None => (factor, 1),
                };
                let i = ambient
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| IdealError::UnknownVariable(name.to_string()))?;
                e[i] += k;
            }
            gens.push(Monomial(e));
        }
        Ok(Self::minimalize(ambient, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ambient))?;
        }
        f.write_str(")")
    }
}

/// Minimal vertex covers of `g`, as vertex sets in increasing mask order.
/// Isolated vertices never occur in a minimal cover; the edgeless graph has
/// the single cover `∅`.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let edges = g.edges();
    let mut covers = Vec::new();
    let mut active = g.vertices();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            active.remove(v);
        }
    }
    // enumerate subsets of the non-isolated vertices
    let verts: Vec<usize> = active.iter().collect();
    for bits in 0u64..1u64 << verts.len() {
        let set: VertexSet = crate::graph::Bits(bits).map(|k| verts[k]).collect();
        let covers_all = |s: VertexSet| edges.iter().all(|&(a, b)| s.contains(a) || s.contains(b));
        if !covers_all(set) {
            continue;
        }
        let minimal = set.iter().all(|v| {
            let mut smaller = set;
            smaller.remove(v);
            !covers_all(smaller)
        });
        if minimal {
            covers.push(set);
        }
    }
    covers.sort();
    covers
}

/// `I(G)^(2)`: the intersection of `P^2` over the minimal primes `P` of
/// `I(G)`, i.e. over the minimal vertex covers of `G`.
pub fn symbolic_square_edge_ideal(g: &Graph) -> MonomialIdeal {
    let amb = ambient(g.labels());
    let mut acc = MonomialIdeal::unit(amb.clone());
    for cover in minimal_vertex_covers(g) {
        let prime = MonomialIdeal::variables(amb.clone(), cover);
        let sq = prime.power(2).expect("positive power");
        acc = acc.intersect(&sq).expect("shared ambient");
    }
    acc
}

/// Squarefree ideal obtained by splitting each exponent into distinct variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationResult {
    pub ideal: MonomialIdeal,
    /// Number of variables added: the new ring has `old + extra` variables.
    pub extra: usize,
    /// For each new variable, the original variable index and copy number `k >= 1`.
    pub origin: Vec<(usize, u32)>,
}

impl PolarizationResult {
    /// Substitutes every copy `x_{i,k}` by `x_i` and minimalizes.
    pub fn depolarize(&self, original: &Ambient) -> MonomialIdeal {
        let gens = self
            .ideal
            .gens()
            .iter()
            .map(|g| {
                let mut e = vec![0; original.len()];
                for (new, &k) in g.exponents().iter().enumerate() {
                    e[self.origin[new].0] += k;
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::minimalize(original.clone(), gens)
    }
}

/// Polarization of `I`.
///
/// Variable `x` whose largest exponent in `G(I)` is `a >= 1` is replaced by
/// copies named `x_1, ..., x_a`; variables that do not occur keep their name.
pub fn polarize(ideal: &MonomialIdeal) -> PolarizationResult {
    let n = ideal.nvars();
    let mut maxexp = vec![0u32; n];
    for g in ideal.gens() {
        for (i, &e) in g.exponents().iter().enumerate() {
            maxexp[i] = maxexp[i].max(e);
        }
    }
    let mut names = Vec::new();
    let mut origin = Vec::new();
    let mut first = vec![0usize; n];
    for (i, name) in ideal.ambient().iter().enumerate() {
        first[i] = names.len();
        if maxexp[i] == 0 {
            names.push(name.clone());
            origin.push((i, 1));
        } else {
            for k in 1..=maxexp[i] {
                names.push(format!("{name}_{k}"));
                origin.push((i, k));
            }
        }
    }
    let total = names.len();
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0; total];
            for (i, &a) in g.exponents().iter().enumerate() {
                for k in 0..a as usize {
                    e[first[i] + k] = 1;
                }
            }
            Monomial(e)
        })
        .collect();
    PolarizationResult {
        ideal: MonomialIdeal::minimalize(names.into(), gens),
        extra: total - n,
        origin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn xyz() -> Ambient {
        ambient(&["x", "y", "z"])
    }

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(xyz(), text).unwrap()
    }

    fn k3() -> Graph {
        complete(3).relabel(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn edge_ideals() {
        let k2 = complete(2).relabel(["x", "y"]).unwrap();
        assert_eq!(MonomialIdeal::edge_ideal(&k2).to_string(), "(x*y)");
        assert_eq!(MonomialIdeal::edge_ideal(&k3()), ideal("(x*y, x*z, y*z)"));
        let e = MonomialIdeal::edge_ideal(&Graph::empty(3).unwrap());
        assert!(e.is_zero());
        assert_eq!(e.nvars(), 3);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal("(y, y*z, x*y)"), ideal("(y)"));
        assert_eq!(ideal("(x^2, x)").to_string(), "(x)");
        assert_eq!(
            ideal("(x*y, x*z, y*z, x*z^2, z^2, y*z^2)").to_string(),
            "(x*y, x*z, y*z, z^2)"
        );
    }

    #[test]
    fn powers() {
        let xy = ideal("(x*y)");
        assert_eq!(xy.power(2).unwrap().to_string(), "(x^2*y^2)");
        let i = MonomialIdeal::edge_ideal(&k3());
        assert_eq!(
            i.power(2).unwrap().to_string(),
            "(x^2*y^2, x^2*y*z, x^2*z^2, x*y^2*z, x*y*z^2, y^2*z^2)"
        );
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0), Err(IdealError::ZeroPower));
    }

    #[test]
    fn colons() {
        let xy = ideal("(x*y)");
        let x = xy.monomial(&[("x", 1)]).unwrap();
        assert_eq!(xy.colon(&x).unwrap(), ideal("(y)"));
        let i = MonomialIdeal::edge_ideal(&k3());
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
        let sq = i.power(2).unwrap();
        let m = sq.monomial(&[("x", 1), ("y", 1)]).unwrap();
        assert_eq!(sq.colon(&m).unwrap(), ideal("(x*y, x*z, y*z, z^2)"));
        assert!(xy.colon(&Monomial::one(2)).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal("(x)").intersect(&ideal("(y)")).unwrap(), ideal("(x*y)"));
        let i = ideal("(x*y, z^2)");
        assert_eq!(i.intersect(&i).unwrap(), i);
        assert_eq!(ideal("(y, z)").intersect(&ideal("(x, z)")).unwrap(), ideal("(z, x*y)"));
        let other = MonomialIdeal::zero(ambient(&["a"]));
        assert_eq!(i.intersect(&other), Err(IdealError::AmbientMismatch));
    }

    #[test]
    fn membership() {
        let xy = ideal("(x*y)");
        assert!(xy.contains(&xy.monomial(&[("x", 2), ("y", 1)]).unwrap()));
        let z = MonomialIdeal::zero(xyz());
        assert!(!z.contains(&Monomial::var(3, 0)));
        let sq = MonomialIdeal::edge_ideal(&k3()).power(2).unwrap();
        assert!(!sq.contains(&Monomial::new(vec![1, 1, 1])));
    }

    #[test]
    fn symbolic_squares() {
        let k2 = complete(2);
        let i = MonomialIdeal::edge_ideal(&k2);
        assert_eq!(symbolic_square_edge_ideal(&k2), i.power(2).unwrap());

        let i = MonomialIdeal::edge_ideal(&k3());
        let expected = i.power(2).unwrap().sum(&ideal("(x*y*z)")).unwrap();
        assert_eq!(symbolic_square_edge_ideal(&k3()), expected);

        let p4 = path(4);
        let i = MonomialIdeal::edge_ideal(&p4);
        assert_eq!(symbolic_square_edge_ideal(&p4), i.power(2).unwrap());

        let e = Graph::empty(2).unwrap();
        assert!(symbolic_square_edge_ideal(&e).is_zero());
    }

    #[test]
    fn vertex_covers() {
        let covers = minimal_vertex_covers(&path(4));
        assert_eq!(
            covers,
            vec![
                VertexSet::from_indices([0, 2]),
                VertexSet::from_indices([1, 2]),
                VertexSet::from_indices([1, 3]),
            ]
        );
        assert_eq!(minimal_vertex_covers(&Graph::empty(3).unwrap()), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn polarization_examples() {
        let amb = ambient(&["x", "y"]);
        let p = polarize(&MonomialIdeal::parse(amb.clone(), "(x^2*y^2)").unwrap());
        assert_eq!(p.extra, 2);
        assert_eq!(p.ideal.to_string(), "(x_1*x_2*y_1*y_2)");
        let p = polarize(&MonomialIdeal::parse(amb.clone(), "(x^2, x*y)").unwrap());
        assert_eq!(p.extra, 1);
        assert_eq!(p.ideal.to_string(), "(x_1*x_2, x_1*y_1)");
        assert_eq!(
            p.depolarize(&amb),
            MonomialIdeal::parse(amb.clone(), "(x^2, x*y)").unwrap()
        );

        let z = polarize(&MonomialIdeal::zero(amb.clone()));
        assert_eq!((z.extra, z.ideal.nvars()), (0, 2));
        let u = polarize(&MonomialIdeal::unit(amb.clone()));
        assert_eq!(u.extra, 0);
        assert!(u.ideal.is_unit());
    }

    #[test]
    fn polarized_colon_is_whiskered_graph() {
        // (I(K3)^2 : xy) polarizes to the edge ideal of K3 with a whisker at z
        let i = MonomialIdeal::edge_ideal(&k3());
        let m = i.monomial(&[("x", 1), ("y", 1)]).unwrap();
        let colon = i.power(2).unwrap().colon(&m).unwrap();
        let p = polarize(&colon);
        assert_eq!(p.extra, 1);
        let h = parse_h();
        let expected = MonomialIdeal::edge_ideal(&h).embed(p.ideal.ambient()).unwrap();
        assert_eq!(p.ideal, expected);
    }

    fn parse_h() -> Graph {
        crate::graph::parse_edge_list("x_1 y_1\nx_1 z_1\ny_1 z_1\nz_1 z_2").unwrap()
    }

    #[test]
    fn embedding_and_dump() {
        let i = MonomialIdeal::parse(ambient(&["y"]), "(y^2)").unwrap();
        let e = i.embed(&xyz()).unwrap();
        assert_eq!(e, ideal("(y^2)"));
        assert_eq!(e.to_rows(), "0 2 0\n");
        assert!(ideal("(x)").embed(&ambient(&["y"])).is_err());
        assert_eq!(MonomialIdeal::unit(xyz()).to_string(), "(1)");
        assert_eq!(MonomialIdeal::zero(xyz()).to_string(), "(0)");
    }
}
