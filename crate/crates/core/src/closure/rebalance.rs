//! Coefficient rebalancing along an even cycle.
//!
//! Label the cycle edges `b_1, ..., b_{2k}` in order, `b_j` joining vertices
//! `j` and `j + 1` (mod `2k`). The odd-indexed and even-indexed edges each
//! cover every vertex once, so shifting weight from one parity class to the
//! other keeps `Σ γ_j = Σ β_j` while driving some `γ_j` to zero.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::ideal::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RebalanceError {
    #[error("coefficient {index} is not positive")]
    NonPositive { index: usize },
    #[error("cycle length {0} is not an even number >= 4")]
    BadLength(usize),
    #[error("nontrivial edge weight must exceed 1, got {0}")]
    TrivialWeight(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenCycleKind {
    /// All edges have weight 1.
    Trivial,
    /// Edge 1 is the only nontrivial edge and carries this weight.
    OneNontrivial { weight: u64 },
}

/// Exponents of the cycle-edge generators, in edge order.
pub fn cycle_generators(len: usize, kind: EvenCycleKind) -> Vec<Exponent> {
    (0..len)
        .map(|j| {
            let w = match kind {
                EvenCycleKind::OneNontrivial { weight } if j == 0 => weight,
                _ => 1,
            };
            let mut c = vec![BigUint::zero(); len];
            c[j] = BigUint::from(w);
            c[(j + 1) % len] = BigUint::from(w);
            Exponent::new(c)
        })
        .collect()
}

/// Trivial cycle: with `m` the least even-indexed `β`, move `m` from every
/// even position to every odd one, leaving the weighted sum unchanged.
///
/// One nontrivial edge `b_1 = a(e_1 + e_2)`: with `m` the least odd-indexed
/// `β`, move `m` from every odd position to every even one; the weighted sum
/// drops by `m (1 - 1/a) b_1`.
pub fn rebalance_even_cycle(beta: &[BigRational], kind: EvenCycleKind) -> Result<Vec<BigRational>, RebalanceError> {
    let len = beta.len();
    if len < 4 || len % 2 != 0 {
        return Err(RebalanceError::BadLength(len));
    }
    if let Some(index) = beta.iter().position(|b| !b.is_positive()) {
        return Err(RebalanceError::NonPositive { index: index + 1 });
    }
    if let EvenCycleKind::OneNontrivial { weight } = kind {
        if weight <= 1 {
            return Err(RebalanceError::TrivialWeight(weight));
        }
    }
    // 1-based index j is even iff the 0-based index is odd.
    let (donor_parity, m) = match kind {
        EvenCycleKind::Trivial => (1, min_on_parity(beta, 1)),
        EvenCycleKind::OneNontrivial { .. } => (0, min_on_parity(beta, 0)),
    };
    Ok(beta
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == donor_parity { b - &m } else { b + &m })
        .collect())
}

fn min_on_parity(beta: &[BigRational], parity: usize) -> BigRational {
    beta.iter()
        .skip(parity)
        .step_by(2)
        .min()
        .cloned()
        .expect("length checked")
}
