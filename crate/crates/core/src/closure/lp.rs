//! Exact primal simplex for `max 1·c  s.t.  B c <= a,  c >= 0` with
//! nonnegative integer data, using Bland's rule.
//!
//! The solver runs first over `Ratio<i128>` with checked arithmetic and
//! restarts over `BigRational` on the first overflow, so results are exact
//! either way.

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SimplexError {
    PivotLimit(usize),
    Unbounded,
}

pub(crate) trait Field: Clone + Ord + Sized {
    fn from_biguint(x: &BigUint) -> Option<Self>;
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn to_big(&self) -> BigRational;
}

type Small = Ratio<i128>;

impl Field for Small {
    fn from_biguint(x: &BigUint) -> Option<Self> {
        x.to_i128().map(Ratio::from_integer)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

impl Field for BigRational {
    fn from_biguint(x: &BigUint) -> Option<Self> {
        Some(BigRational::from_integer(BigInt::from(x.clone())))
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

/// Optimal value and one optimal `c`.
#[derive(Debug, Clone)]
pub(crate) struct Solution {
    pub optimum: BigRational,
    pub coeffs: Vec<BigRational>,
}

/// `columns[j]` is generator `j` restricted to the constraint rows; `rhs`
/// holds the matching entries of `a`.
pub(crate) fn maximize_weight(
    columns: &[Vec<BigUint>],
    rhs: &[BigUint],
    pivot_limit: usize,
) -> Result<Solution, SimplexError> {
    if let Some(sol) = run::<Small>(columns, rhs, pivot_limit)? {
        return Ok(sol);
    }
    Ok(run::<BigRational>(columns, rhs, pivot_limit)?.expect("big rationals never overflow"))
}

// Ok(None) signals arithmetic overflow in `F`.
fn run<F: Field>(columns: &[Vec<BigUint>], rhs: &[BigUint], pivot_limit: usize) -> Result<Option<Solution>, SimplexError> {
    let m = rhs.len();
    let s = columns.len();
    let width = s + m;
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(m);
    let mut b: Vec<F> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(width);
        for col in columns {
            match F::from_biguint(&col[i]) {
                Some(x) => row.push(x),
                None => return Ok(None),
            }
        }
        for k in 0..m {
            row.push(if k == i { F::one() } else { F::zero() });
        }
        rows.push(row);
        match F::from_biguint(&rhs[i]) {
            Some(x) => b.push(x),
            None => return Ok(None),
        }
    }
    let mut basis: Vec<usize> = (s..width).collect();
    // Reduced costs of the maximisation; negative entries may enter.
    let mut cost: Vec<F> = (0..width)
        .map(|j| if j < s { F::zero().sub(&F::one()).unwrap() } else { F::zero() })
        .collect();
    let mut value = F::zero();
    let mut pivots = 0usize;

    macro_rules! tri {
        ($e:expr) => {
            match $e {
                Some(x) => x,
                None => return Ok(None),
            }
        };
    }

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, F)> = None;
        for r in 0..m {
            if !rows[r][enter].is_positive() {
                continue;
            }
            let ratio = tri!(b[r].div(&rows[r][enter]));
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            return Err(SimplexError::Unbounded);
        };
        pivots += 1;
        if pivots > pivot_limit {
            return Err(SimplexError::PivotLimit(pivot_limit));
        }

        let piv = rows[pr][enter].clone();
        for x in rows[pr].iter_mut() {
            *x = tri!(x.div(&piv));
        }
        b[pr] = tri!(b[pr].div(&piv));
        let pivot_row = rows[pr].clone();
        let pivot_rhs = b[pr].clone();
        for r in 0..m {
            if r == pr || rows[r][enter].is_zero() {
                continue;
            }
            let f = rows[r][enter].clone();
            for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = tri!(x.sub(&tri!(f.mul(p))));
                }
            }
            b[r] = tri!(b[r].sub(&tri!(f.mul(&pivot_rhs))));
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x = tri!(x.sub(&tri!(f.mul(p))));
            }
        }
        value = tri!(value.sub(&tri!(f.mul(&pivot_rhs))));
        basis[pr] = enter;
    }

    let mut c = vec![F::zero(); s];
    for (r, &var) in basis.iter().enumerate() {
        if var < s {
            c[var] = b[r].clone();
        }
    }
    // Exact re-substitution against the original data, in the same field.
    let mut total = F::zero();
    for x in &c {
        assert!(!x.is_negative(), "simplex produced a negative coefficient");
        total = tri!(total.add(x));
    }
    assert!(total == value, "simplex optimum differs from the coefficient sum");
    for i in 0..m {
        let mut used = F::zero();
        for (col, x) in columns.iter().zip(&c) {
            if !x.is_zero() {
                let entry = tri!(F::from_biguint(&col[i]));
                used = tri!(used.add(&tri!(entry.mul(x))));
            }
        }
        assert!(used <= tri!(F::from_biguint(&rhs[i])), "simplex solution violates row {i}");
    }
    Ok(Some(Solution { optimum: value.to_big(), coeffs: c.iter().map(F::to_big).collect() }))
}
