use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use nil_core::closure::{closure_power_generators, in_closure_power, lp_max_weight, ClosureOracle, OracleLimits};
use nil_core::ideal::{Exponent, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize, gens: usize, max_entry: u64) -> MonomialIdeal {
    loop {
        let exps: Vec<Exponent> = (0..gens)
            .map(|_| Exponent::from_u64s(&(0..n).map(|_| rng.gen_range(0..=max_entry)).collect::<Vec<_>>()))
            .filter(|e| !e.total_degree().is_zero())
            .collect();
        if !exps.is_empty() {
            return MonomialIdeal::minimalize(exps).unwrap();
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, max_entry: u64) -> Exponent {
    Exponent::from_u64s(&(0..n).map(|_| rng.gen_range(0..=max_entry)).collect::<Vec<_>>())
}

/// Maximum of `z` subject to `z <= Σ c_j`, `c >= 0`, `B c <= a`, by
/// eliminating every `c_j` and reading off the tightest bound on `z`.
/// Rows are `(coefficients over c_1..c_m, coefficient of z, rhs)` meaning
/// `Σ coef_j c_j + zc z <= rhs`.
fn fourier_motzkin_max(gens: &[Vec<u64>], a: &[u64]) -> BigRational {
    let m = gens.len();
    type Row = (Vec<BigRational>, BigRational, BigRational);
    let mut rows: Vec<Row> = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        rows.push((gens.iter().map(|g| q(g[i])).collect(), BigRational::zero(), q(ai)));
    }
    for j in 0..m {
        let mut coef = vec![BigRational::zero(); m];
        coef[j] = -q(1);
        rows.push((coef, BigRational::zero(), BigRational::zero()));
    }
    rows.push((vec![-q(1); m], q(1), BigRational::zero()));
    for j in 0..m {
        let (pos, rest): (Vec<Row>, Vec<Row>) = rows.into_iter().partition(|r| r.0[j].is_positive());
        let (neg, zero): (Vec<Row>, Vec<Row>) = rest.into_iter().partition(|r| r.0[j].is_negative());
        rows = zero;
        for p in &pos {
            for n in &neg {
                let (sp, sn) = (-n.0[j].clone(), p.0[j].clone());
                let coef: Vec<BigRational> = (0..m).map(|x| &p.0[x] * &sp + &n.0[x] * &sn).collect();
                rows.push((coef, &p.1 * &sp + &n.1 * &sn, &p.2 * &sp + &n.2 * &sn));
            }
        }
    }
    rows.iter()
        .filter(|r| r.1.is_positive())
        .map(|r| &r.2 / &r.1)
        .min()
        .expect("the objective is bounded")
}

#[test]
fn simplex_matches_fourier_motzkin() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..1500 {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let ideal = random_ideal(&mut rng, n, m, 4);
        let a = random_point(&mut rng, n, 9);
        let gens: Vec<Vec<u64>> = ideal.generators().iter().map(|g| g.to_u64s().unwrap()).collect();
        let lp = lp_max_weight(&ideal, &a).unwrap();
        assert_eq!(lp.optimum, fourier_motzkin_max(&gens, &a.to_u64s().unwrap()), "{ideal} at {a}");
    }
}

#[test]
fn zero_point_has_zero_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let ideal = random_ideal(&mut rng, n, 3, 3);
        let lp = lp_max_weight(&ideal, &Exponent::zero(n)).unwrap();
        assert!(lp.optimum.is_zero() && lp.coeffs.iter().all(Zero::is_zero));
    }
}

/// Minimal elements among all points of the box `0..=bounds` passing the
/// closure test, ignoring the oracle's own enumeration.
fn minimal_closure_points(ideal: &MonomialIdeal, k: u32, bounds: &[u64]) -> Vec<Exponent> {
    let n = bounds.len();
    let mut points = vec![vec![]];
    for &b in bounds {
        points = points.into_iter().flat_map(|p: Vec<u64>| (0..=b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    let inside: Vec<Exponent> = points
        .iter()
        .filter(|p| in_closure_power(ideal, &Exponent::from_u64s(p), k).unwrap())
        .map(|p| Exponent::from_u64s(p))
        .collect();
    let mut minimal: Vec<Exponent> =
        inside.iter().filter(|p| !inside.iter().any(|o| o != *p && o.divides(p))).cloned().collect();
    minimal.sort();
    assert!(minimal.iter().all(|m| m.len() == n));
    minimal
}

#[test]
fn one_layer_beyond_the_box_adds_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let ideal = random_ideal(&mut rng, n, m, 2);
        for k in 1..=2 {
            let oracle = ClosureOracle::new(&ideal, OracleLimits::default()).unwrap();
            let bounds = oracle.box_bounds(k).unwrap();
            let closure = closure_power_generators(&ideal, k).unwrap();
            for g in closure.generators() {
                assert!(g.to_u64s().unwrap().iter().zip(&bounds).all(|(x, b)| x <= b));
            }
            let wider: Vec<u64> = bounds.iter().map(|b| b + 1).collect();
            assert_eq!(closure.generators(), minimal_closure_points(&ideal, k, &wider).as_slice(), "{ideal}, k = {k}");
        }
    }
}

#[test]
fn contains_power_matches_expanded_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=4);
        let ideal = random_ideal(&mut rng, n, m, 3);
        for t in 1..=3 {
            let power = ideal.power(t).unwrap();
            let mut probes: Vec<Exponent> = (0..60).map(|_| random_point(&mut rng, n, 6)).collect();
            for g in power.generators().iter().take(10) {
                probes.push(g.clone());
                let mut c = g.to_u64s().unwrap();
                if let Some(x) = c.iter_mut().find(|x| **x > 0) {
                    *x -= 1;
                }
                probes.push(Exponent::from_u64s(&c));
            }
            for a in probes {
                assert_eq!(ideal.contains_power(&a, t).unwrap(), power.contains(&a).unwrap(), "{ideal}, t = {t}, {a}");
            }
        }
    }
}
