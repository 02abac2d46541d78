//! The algebraic oracle. Membership of `x^a` in the integral closure of `I^k`
//! is decided by an exact linear program over the minimal generators of `I`:
//! `x^a` lies in the closure of `I^k` iff `max Σ c_j` subject to `c >= 0` and
//! `Σ c_j b_j <= a` is at least `k`.

mod lp;
pub mod rebalance;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::ideal::{Exponent, IdealError, MonomialIdeal};

pub use rebalance::{cycle_generators, rebalance_even_cycle, EvenCycleKind, RebalanceError};

pub type Rational = BigRational;

pub const DEFAULT_BOX_BUDGET: u64 = 10_000_000;
pub const DEFAULT_PIVOT_LIMIT: usize = 100_000;
pub const DEFAULT_T_MAX: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("box volume {volume} for power {k} exceeds the box budget {budget}")]
    BoxBudgetExceeded { k: u32, volume: BigUint, budget: u64 },
    #[error("simplex exceeded the pivot limit {0}")]
    PivotLimit(usize),
    #[error("linear program reported unbounded; generators must be nonzero")]
    Unbounded,
    #[error("at power {t}: {source}")]
    AtPower { t: u32, source: Box<ClosureError> },
}

/// Resource limits. Both fail loudly when exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of lattice points `Π (k M_i + 1)` in the search box.
    pub box_budget: u64,
    pub pivot_limit: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { box_budget: DEFAULT_BOX_BUDGET, pivot_limit: DEFAULT_PIVOT_LIMIT }
    }
}

/// Whether the maximum weight reaches a given level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelStatus {
    Feasible,
    InfeasibleAtLevel,
}

/// Optimum of the max-weight program together with an optimal coefficient
/// vector, one entry per minimal generator of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPResult {
    pub optimum: Rational,
    pub coeffs: Vec<Rational>,
}

impl LPResult {
    pub fn status(&self, k: u32) -> LevelStatus {
        if self.optimum >= Rational::from_integer(k.into()) {
            LevelStatus::Feasible
        } else {
            LevelStatus::InfeasibleAtLevel
        }
    }

    /// Re-substitutes the coefficients: nonnegative, summing to the optimum,
    /// with `Σ c_j b_j <= a`.
    pub fn certifies(&self, ideal: &MonomialIdeal, a: &Exponent) -> bool {
        let gens = ideal.generators();
        if self.coeffs.len() != gens.len() || a.len() != ideal.ambient() {
            return false;
        }
        if self.coeffs.iter().any(|c| c < &Rational::zero()) {
            return false;
        }
        if self.coeffs.iter().sum::<Rational>() != self.optimum {
            return false;
        }
        (0..ideal.ambient()).all(|i| {
            let lhs: Rational = self
                .coeffs
                .iter()
                .zip(gens)
                .map(|(c, g)| c * Rational::from_integer(BigInt::from(g.coords()[i].clone())))
                .sum();
            lhs <= Rational::from_integer(BigInt::from(a.coords()[i].clone()))
        })
    }
}

fn check_input(ideal: &MonomialIdeal, a: &Exponent) -> Result<(), ClosureError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal.into());
    }
    if a.len() != ideal.ambient() {
        return Err(IdealError::LengthMismatch { expected: ideal.ambient(), got: a.len() }.into());
    }
    Ok(())
}

/// Maximises `Σ c_j` over `c >= 0` with `Σ c_j b_j <= a` by exact simplex.
pub fn lp_max_weight(ideal: &MonomialIdeal, a: &Exponent) -> Result<LPResult, ClosureError> {
    lp_max_weight_with(ideal, a, DEFAULT_PIVOT_LIMIT)
}

pub fn lp_max_weight_with(ideal: &MonomialIdeal, a: &Exponent, pivot_limit: usize) -> Result<LPResult, ClosureError> {
    check_input(ideal, a)?;
    let support = a.support();
    let mut in_support = vec![false; ideal.ambient()];
    for &i in &support {
        in_support[i - 1] = true;
    }
    // A generator reaching outside supp(a) is forced to coefficient zero.
    let active: Vec<usize> = ideal
        .generators()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.support().iter().all(|&i| in_support[i - 1]))
        .map(|(j, _)| j)
        .collect();
    let mut coeffs = vec![Rational::zero(); ideal.generators().len()];
    if active.is_empty() {
        return Ok(LPResult { optimum: Rational::zero(), coeffs });
    }
    let columns: Vec<Vec<BigUint>> = active
        .iter()
        .map(|&j| {
            let g = &ideal.generators()[j];
            support.iter().map(|&i| g.get(i).clone()).collect()
        })
        .collect();
    let rhs: Vec<BigUint> = support.iter().map(|&i| a.get(i).clone()).collect();
    let sol = lp::maximize_weight(&columns, &rhs, pivot_limit).map_err(|e| match e {
        lp::SimplexError::PivotLimit(n) => ClosureError::PivotLimit(n),
        lp::SimplexError::Unbounded => ClosureError::Unbounded,
    })?;
    for (slot, c) in active.iter().zip(sol.coeffs) {
        coeffs[*slot] = c;
    }
    // the simplex re-substitutes its own solution before returning it
    Ok(LPResult { optimum: sol.optimum, coeffs })
}

/// `x^a ∈ closure(I^k)`.
pub fn in_closure_power(ideal: &MonomialIdeal, a: &Exponent, k: u32) -> Result<bool, ClosureError> {
    if k == 0 {
        return Err(IdealError::ZeroPower.into());
    }
    Ok(lp_max_weight(ideal, a)?.status(k) == LevelStatus::Feasible)
}

/// Minimal generators of `closure(I^k)`.
pub fn closure_power_generators(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal, ClosureError> {
    ClosureOracle::new(ideal, OracleLimits::default())?.closure_generators(k)
}

/// Outcome of [`is_power_integrally_closed`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerClosure {
    Closed,
    /// The first generator of `closure(I^k)` (lexicographic) outside `I^k`.
    NotClosed(Exponent),
}

impl PowerClosure {
    pub fn is_closed(&self) -> bool {
        matches!(self, PowerClosure::Closed)
    }
}

pub fn is_power_integrally_closed(ideal: &MonomialIdeal, k: u32) -> Result<PowerClosure, ClosureError> {
    ClosureOracle::new(ideal, OracleLimits::default())?.power_closure(k)
}

/// One-sided normality evidence. `NormalUpTo` is not a proof of normality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalityVerdict {
    NormalUpTo { t_max: u32 },
    CounterexampleAt { t: u32, witness: Exponent },
}

impl NormalityVerdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, NormalityVerdict::CounterexampleAt { .. })
    }
}

pub fn normality_scan(ideal: &MonomialIdeal, t_max: u32) -> Result<NormalityVerdict, ClosureError> {
    ClosureOracle::new(ideal, OracleLimits::default())?.normality_scan(t_max)
}

/// Lattice-point search over the box `a_i <= k M_i`, caching LP optima so a
/// scan over several powers solves each point once.
pub struct ClosureOracle<'a> {
    ideal: &'a MonomialIdeal,
    limits: OracleLimits,
    maxima: Vec<BigUint>,
    min_degree: BigUint,
    cache: HashMap<Vec<u64>, Rational>,
}

impl<'a> ClosureOracle<'a> {
    pub fn new(ideal: &'a MonomialIdeal, limits: OracleLimits) -> Result<Self, ClosureError> {
        if ideal.is_zero() {
            return Err(IdealError::ZeroIdeal.into());
        }
        let min_degree = ideal.generators().iter().map(Exponent::total_degree).min().unwrap_or_default();
        Ok(Self { ideal, limits, maxima: ideal.column_maxima(), min_degree, cache: HashMap::new() })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        self.ideal
    }

    /// Per-coordinate box bounds `k M_i`, after checking the budget.
    pub fn box_bounds(&self, k: u32) -> Result<Vec<u64>, ClosureError> {
        let mut volume = BigUint::from(1u32);
        let bounds: Vec<BigUint> = self.maxima.iter().map(|m| m * k).collect();
        for b in &bounds {
            volume *= b + 1u32;
        }
        if volume > BigUint::from(self.limits.box_budget) {
            return Err(ClosureError::BoxBudgetExceeded { k, volume, budget: self.limits.box_budget });
        }
        // the budget fits in u64, so every bound does too
        Ok(bounds.iter().map(|b| b.to_u64().expect("bounded by the budget")).collect())
    }

    /// `Ok(None)` when the point already lies in `I^k`, which settles
    /// membership without solving the program.
    fn optimum(&self, point: &[u64], k: u32) -> Result<Option<Rational>, ClosureError> {
        if let Some(v) = self.cache.get(point) {
            return Ok(Some(v.clone()));
        }
        let a = Exponent::from_u64s(point);
        if self.ideal.contains_power(&a, k)? {
            return Ok(None);
        }
        Ok(Some(lp_max_weight_with(self.ideal, &a, self.limits.pivot_limit)?.optimum))
    }

    /// Minimal generators of `closure(I^k)`, found in ascending total degree
    /// with lexicographic tie-breaking; points above a found generator are
    /// skipped, so each accepted point is minimal.
    pub fn closure_generators(&mut self, k: u32) -> Result<MonomialIdeal, ClosureError> {
        if k == 0 {
            return Err(IdealError::ZeroPower.into());
        }
        let bounds = self.box_bounds(k)?;
        let level = Rational::from_integer(k.into());
        // Σ c_j deg(b_j) <= deg(a), so the optimum is at most deg(a) / min deg.
        let min_total = (&self.min_degree * k).to_u64().unwrap_or(u64::MAX);
        let max_total: u64 = bounds.iter().sum();
        let mut found: Vec<Vec<u64>> = Vec::new();
        for degree in min_total..=max_total {
            let layer: Vec<Vec<u64>> = points_of_degree(&bounds, degree)
                .into_iter()
                .filter(|p| !found.iter().any(|g| dominates(p, g)))
                .collect();
            if layer.is_empty() {
                continue;
            }
            let evaluated: Vec<Result<Option<Rational>, ClosureError>> = if layer.len() >= 64 {
                layer.par_iter().map(|p| self.optimum(p, k)).collect()
            } else {
                layer.iter().map(|p| self.optimum(p, k)).collect()
            };
            for (p, opt) in layer.into_iter().zip(evaluated) {
                match opt? {
                    None => found.push(p),
                    Some(opt) => {
                        if opt >= level {
                            found.push(p.clone());
                        }
                        self.cache.insert(p, opt);
                    }
                }
            }
        }
        let gens: Vec<Exponent> = found.iter().map(|p| Exponent::from_u64s(p)).collect();
        if gens.is_empty() {
            // only possible when I has a zero generator, which edge ideals never do
            return Ok(MonomialIdeal::zero(self.ideal.ambient()));
        }
        Ok(MonomialIdeal::minimalize(gens)?)
    }

    pub fn power_closure(&mut self, k: u32) -> Result<PowerClosure, ClosureError> {
        let closure = self.closure_generators(k)?;
        for g in closure.generators() {
            if !self.ideal.contains_power(g, k)? {
                return Ok(PowerClosure::NotClosed(g.clone()));
            }
        }
        Ok(PowerClosure::Closed)
    }

    /// Checks `t = 1..=t_max` in order and stops at the first power whose
    /// closure is strictly larger.
    pub fn normality_scan(&mut self, t_max: u32) -> Result<NormalityVerdict, ClosureError> {
        if t_max == 0 {
            return Err(IdealError::ZeroPower.into());
        }
        for t in 1..=t_max {
            match self.power_closure(t) {
                Ok(PowerClosure::Closed) => {}
                Ok(PowerClosure::NotClosed(witness)) => return Ok(NormalityVerdict::CounterexampleAt { t, witness }),
                Err(e) => return Err(ClosureError::AtPower { t, source: Box::new(e) }),
            }
        }
        Ok(NormalityVerdict::NormalUpTo { t_max })
    }
}

fn dominates(p: &[u64], g: &[u64]) -> bool {
    p.iter().zip(g).all(|(x, y)| x >= y)
}

/// Points `p` with `0 <= p_i <= bounds[i]` and `Σ p_i = degree`, in
/// lexicographic order.
fn points_of_degree(bounds: &[u64], degree: u64) -> Vec<Vec<u64>> {
    let n = bounds.len();
    // suffix capacity: most that coordinates i.. can absorb
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1].saturating_add(bounds[i]);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; n];
    fill(0, degree, bounds, &suffix, &mut cur, &mut out);
    out
}

fn fill(i: usize, left: u64, bounds: &[u64], suffix: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if i == bounds.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if suffix[i] < left {
        return;
    }
    let lo = left.saturating_sub(suffix[i + 1]);
    let hi = bounds[i].min(left);
    for x in lo..=hi {
        cur[i] = x;
        fill(i + 1, left - x, bounds, suffix, cur, out);
    }
    cur[i] = 0;
}
