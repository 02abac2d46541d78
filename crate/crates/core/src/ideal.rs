//! Monomial ideals in `k[x_1, ..., x_n]`, kept as their antichain of minimal
//! generators. Exponent entries are arbitrary precision.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::wgraph::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("empty generator set")]
    Empty,
    #[error("exponent length {got} does not match ambient dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("zero ideal is not supported here")]
    ZeroIdeal,
    #[error("edgeless graph has the zero edge ideal")]
    EdgelessGraph,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// Exponent vector `a` of the monomial `x^a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<BigUint>);

impl Exponent {
    pub fn new(coords: Vec<BigUint>) -> Self {
        Exponent(coords)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![BigUint::zero(); n])
    }

    /// The standard basis vector `e_i` (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[i - 1] = BigUint::from(1u32);
        e
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        Exponent(coords.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.0
    }

    /// Coordinate `i` (1-based).
    pub fn get(&self, i: usize) -> &BigUint {
        &self.0[i - 1]
    }

    /// `None` if some entry does not fit into a `u64`.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|c| c.to_u64()).collect()
    }

    /// Indices (1-based) with a positive entry.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn total_degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u64) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    /// Renders as `x1^2*x2`, or `1` for the zero vector.
    pub fn monomial(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if *c == BigUint::from(1u32) {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, c)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A monomial ideal given by its minimal generators in lexicographic order.
/// An empty generator list is the zero ideal, produced only by restriction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// The ideal generated by `exps`, reduced to its minimal generators.
    pub fn minimalize<I>(exps: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Exponent>,
    {
        let exps: Vec<Exponent> = exps.into_iter().collect();
        let ambient = exps.first().ok_or(IdealError::Empty)?.len();
        if let Some(bad) = exps.iter().find(|e| e.len() != ambient) {
            return Err(IdealError::LengthMismatch { expected: ambient, got: bad.len() });
        }
        Ok(Self { ambient, gens: antichain(exps) })
    }

    pub fn zero(ambient: usize) -> Self {
        Self { ambient, gens: Vec::new() }
    }

    /// `I(G, w)`: one generator `w(e) (e_i + e_j)` per edge.
    pub fn edge_ideal(g: &WeightedGraph) -> Result<Self, IdealError> {
        if g.edge_count() == 0 {
            return Err(IdealError::EdgelessGraph);
        }
        let n = g.vertex_count();
        let gens = g.edges().iter().map(|e| {
            let mut c = vec![BigUint::zero(); n];
            c[e.u - 1] = BigUint::from(e.weight);
            c[e.v - 1] = BigUint::from(e.weight);
            Exponent(c)
        });
        let ideal = Self::minimalize(gens)?;
        debug_assert_eq!(ideal.gens.len(), g.edge_count(), "edge generators form an antichain");
        Ok(ideal)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_len(&self, a: &Exponent) -> Result<(), IdealError> {
        if a.len() != self.ambient {
            Err(IdealError::LengthMismatch { expected: self.ambient, got: a.len() })
        } else {
            Ok(())
        }
    }

    /// Minimal generators of `I^t`, built as `I^t = I^(t-1) * I` with the
    /// antichain reduction after every step.
    pub fn power(&self, t: u32) -> Result<Self, IdealError> {
        if t == 0 {
            return Err(IdealError::ZeroPower);
        }
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut acc = self.gens.clone();
        for _ in 1..t {
            let sums = acc.iter().flat_map(|p| self.gens.iter().map(move |g| p.add(g)));
            acc = antichain(sums.collect());
        }
        Ok(Self { ambient: self.ambient, gens: acc })
    }

    /// `x^a ∈ I`.
    pub fn contains(&self, a: &Exponent) -> Result<bool, IdealError> {
        self.check_len(a)?;
        Ok(self.gens.iter().any(|g| g.divides(a)))
    }

    /// `x^a ∈ I^t`: some multiset of `t` generators sums to at most `a`.
    /// Depth-first search over generator multiplicities; `I^t` is never
    /// expanded.
    pub fn contains_power(&self, a: &Exponent, t: u32) -> Result<bool, IdealError> {
        self.check_len(a)?;
        if t == 0 {
            return Err(IdealError::ZeroPower);
        }
        let candidates: Vec<&Exponent> = self.gens.iter().filter(|g| g.divides(a)).collect();
        if candidates.is_empty() {
            return Ok(false);
        }
        if t == 1 {
            return Ok(true);
        }
        let mut residual = a.0.clone();
        Ok(multiplicity_search(&candidates, &mut residual, t as u64))
    }

    /// `I_V`: the minimal generators supported inside `V` (1-based indices).
    pub fn restrict(&self, v: &[usize]) -> Result<Self, IdealError> {
        let mut inside = vec![false; self.ambient];
        for &i in v {
            if i == 0 || i > self.ambient {
                return Err(IdealError::IndexOutOfRange { index: i, n: self.ambient });
            }
            inside[i - 1] = true;
        }
        let gens = self
            .gens
            .iter()
            .filter(|g| g.support().iter().all(|&i| inside[i - 1]))
            .cloned()
            .collect();
        Ok(Self { ambient: self.ambient, gens })
    }

    /// Column maxima `M_i = max_j b_{j,i}`.
    pub fn column_maxima(&self) -> Vec<BigUint> {
        (0..self.ambient)
            .map(|i| self.gens.iter().map(|g| g.0[i].clone()).max().unwrap_or_default())
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.monomial()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Indices (1-based) of the variables dividing `x^a`.
pub fn support(a: &Exponent) -> Vec<usize> {
    a.support()
}

// Minimal elements under divisibility, deduplicated, lexicographically sorted.
fn antichain(mut exps: Vec<Exponent>) -> Vec<Exponent> {
    exps.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    exps.dedup();
    let mut kept: Vec<Exponent> = Vec::new();
    for e in exps {
        if !kept.iter().any(|k| k.divides(&e)) {
            kept.push(e);
        }
    }
    kept.sort();
    kept
}

fn max_copies(g: &Exponent, residual: &[BigUint]) -> u64 {
    let mut best: Option<BigUint> = None;
    for (b, r) in g.0.iter().zip(residual) {
        if b.is_zero() {
            continue;
        }
        let q = r / b;
        if best.as_ref().is_none_or(|m| q < *m) {
            best = Some(q);
        }
    }
    // generators are nonzero; saturate huge quotients
    best.map(|q| q.to_u64().unwrap_or(u64::MAX)).unwrap_or(u64::MAX)
}

fn multiplicity_search(gens: &[&Exponent], residual: &mut [BigUint], need: u64) -> bool {
    if need == 0 {
        return true;
    }
    let Some((first, rest)) = gens.split_first() else {
        return false;
    };
    // Prune when even the individually largest multiplicities cannot reach `need`.
    let mut capacity: u64 = 0;
    for g in gens {
        capacity = capacity.saturating_add(max_copies(g, residual));
        if capacity >= need {
            break;
        }
    }
    if capacity < need {
        return false;
    }
    let hi = max_copies(first, residual).min(need);
    for m in (0..=hi).rev() {
        for (r, b) in residual.iter_mut().zip(&first.0) {
            *r -= b * m;
        }
        let ok = multiplicity_search(rest, residual, need - m);
        for (r, b) in residual.iter_mut().zip(&first.0) {
            *r += b * m;
        }
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: &[u64]) -> Exponent {
        Exponent::from_u64s(c)
    }

    fn ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| e(g))).unwrap()
    }

    fn graph(n: usize, edges: &[(usize, usize, u64)]) -> WeightedGraph {
        WeightedGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        let i = MonomialIdeal::edge_ideal(&graph(2, &[(1, 2, 2)])).unwrap();
        assert_eq!(i.generators(), &[e(&[2, 2])]);
        let tri = MonomialIdeal::edge_ideal(&graph(3, &[(1, 2, 1), (2, 3, 1), (1, 3, 1)])).unwrap();
        assert_eq!(tri.generators(), &[e(&[0, 1, 1]), e(&[1, 0, 1]), e(&[1, 1, 0])]);
        let path = MonomialIdeal::edge_ideal(&graph(3, &[(1, 2, 2), (2, 3, 3)])).unwrap();
        assert_eq!(path.generators(), &[e(&[0, 3, 3]), e(&[2, 2, 0])]);
        assert_eq!(MonomialIdeal::edge_ideal(&graph(3, &[])), Err(IdealError::EdgelessGraph));
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&[&[1, 1], &[2, 2]]).generators(), &[e(&[1, 1])]);
        let anti = ideal(&[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(anti.generators().len(), 3);
        assert_eq!(MonomialIdeal::minimalize(Vec::new()), Err(IdealError::Empty));
        assert!(matches!(
            MonomialIdeal::minimalize(vec![e(&[1]), e(&[1, 2])]),
            Err(IdealError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn power_examples() {
        assert_eq!(ideal(&[&[1, 1]]).power(2).unwrap().generators(), &[e(&[2, 2])]);
        let tri = ideal(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let sq = tri.power(2).unwrap();
        let mut want = vec![
            e(&[2, 2, 0]),
            e(&[0, 2, 2]),
            e(&[2, 0, 2]),
            e(&[1, 2, 1]),
            e(&[2, 1, 1]),
            e(&[1, 1, 2]),
        ];
        want.sort();
        assert_eq!(sq.generators(), want.as_slice());
        assert_eq!(tri.power(1).unwrap(), tri);
        assert_eq!(tri.power(0), Err(IdealError::ZeroPower));
    }

    #[test]
    fn contains_examples() {
        let i = ideal(&[&[2, 2, 0], &[0, 3, 3]]);
        assert!(i.contains(&e(&[2, 3, 0])).unwrap());
        assert!(!i.contains(&e(&[1, 2, 1])).unwrap());
        assert!(i.contains(&e(&[0, 3, 3])).unwrap());
        assert!(i.contains(&e(&[1, 1])).is_err());
    }

    #[test]
    fn contains_power_examples() {
        let f4 = MonomialIdeal::edge_ideal(&graph(5, &[(1, 2, 1), (2, 3, 1), (1, 3, 1), (4, 5, 2)])).unwrap();
        assert!(!f4.contains_power(&e(&[1, 1, 1, 1, 1]), 2).unwrap());
        assert!(f4.contains_power(&e(&[2, 2, 1, 0, 0]), 2).unwrap());
        assert!(f4.contains_power(&e(&[1, 1, 0, 2, 2]), 2).unwrap());
        assert!(!f4.contains_power(&e(&[1, 1, 0, 2, 2]), 3).unwrap());
        for a in [e(&[1, 1, 0, 0, 0]), e(&[0, 0, 0, 1, 1]), e(&[0, 1, 1, 0, 0])] {
            assert_eq!(f4.contains_power(&a, 1).unwrap(), f4.contains(&a).unwrap());
        }
    }

    #[test]
    fn restrict_examples() {
        let i = ideal(&[&[2, 2, 0], &[0, 3, 3]]);
        assert_eq!(i.restrict(&[1, 2]).unwrap().generators(), &[e(&[2, 2, 0])]);
        assert_eq!(i.restrict(&[1, 2, 3]).unwrap(), i);
        assert!(i.restrict(&[]).unwrap().is_zero());
        assert!(i.restrict(&[4]).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&e(&[2, 0, 1])), vec![1, 3]);
        assert!(support(&e(&[0, 0])).is_empty());
        assert_eq!(support(&e(&[1, 1, 1, 1])), vec![1, 2, 3, 4]);
    }

    #[test]
    fn monomial_rendering() {
        assert_eq!(e(&[1, 2, 0]).monomial(), "x1*x2^2");
        assert_eq!(e(&[0, 0]).monomial(), "1");
    }
}
