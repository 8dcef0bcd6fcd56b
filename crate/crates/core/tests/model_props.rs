//! Property tests for states, criteria, weighting and the scenario sweeps.

use proptest::prelude::*;

use qselect::evaluation::{criterion_classical, criterion_nonclassical, decide, Direction, ThetaSpec};
use qselect::qcore::{check_density, hermitian_eigenvalues};
use qselect::scenarios::{
    cash_equivalent, ellsberg_s12, ellsberg_s43, CEParams, EllsbergParams, Pattern, PreferencePattern,
};
use qselect::states::{classical_state, nonclassical_state, Lottery, PhaseSpec, StateKind};
use qselect::weighting::{subjective_probs, w_xi, ProbabilityVector};

fn probs(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0..1.0f64, n).prop_filter_map("all zero", |raw| {
        let total: f64 = raw.iter().sum();
        if total < 1e-3 {
            return None;
        }
        let mut p: Vec<f64> = raw.iter().map(|r| r / total).collect();
        let head: f64 = p[..p.len() - 1].iter().sum();
        *p.last_mut().unwrap() = (1.0 - head).max(0.0);
        Some(p)
    })
}

/// Two lotteries over `n` shared outcomes plus a full set of cos values.
fn case() -> impl Strategy<Value = (Lottery, Lottery, ThetaSpec)> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs = n * (2 * n - 1);
        (
            probs(n),
            probs(n),
            prop::collection::vec(-5.0..5.0f64, n),
            prop::collection::vec(-1.0..=1.0f64, pairs),
        )
            .prop_map(move |(p, q, u, cos)| {
                let names: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                let a = Lottery::from_parts("A", &names, &p, &u).unwrap();
                let b = Lottery::from_parts("B", &names, &q, &u).unwrap();
                let mut theta = ThetaSpec::new();
                let mut it = cos.into_iter();
                for i in 1..=2 * n {
                    for j in (i + 1)..=2 * n {
                        theta.set(i, j, it.next().unwrap()).unwrap();
                    }
                }
                (a, b, theta)
            })
    })
}

fn scaled(lot: &Lottery, c: f64) -> Lottery {
    let names: Vec<&str> = lot.entries().iter().map(|e| e.outcome.as_str()).collect();
    let u: Vec<f64> = lot.utilities().iter().map(|u| u * c).collect();
    Lottery::from_parts(lot.label(), &names, &lot.probabilities(), &u).unwrap()
}

proptest! {
    #[test]
    fn comparison_states_are_valid((a, b, _) in case(), seed in any::<u64>()) {
        let dim = 2 * a.len();
        let phases = PhaseSpec::new((0..dim).map(|k| ((seed >> (k % 60)) % 628) as f64 / 100.0).collect()).unwrap();
        let c = classical_state(&a, &b, &phases).unwrap();
        let nc = nonclassical_state(&a, &b, &phases).unwrap();
        prop_assert!(check_density(c.rho().matrix()).is_ok());
        prop_assert!(check_density(nc.rho().matrix()).is_ok());
        prop_assert_eq!(nc.kind(), StateKind::Nonclassical);

        let diag = nc.rho().matrix().diag();
        let p = a.probabilities();
        let q = b.probabilities();
        for i in 0..a.len() {
            prop_assert!((diag[i].re - p[i] / 2.0).abs() < 1e-12);
            prop_assert!((diag[a.len() + i].re - q[i] / 2.0).abs() < 1e-12);
        }
        let mut ev = hermitian_eigenvalues(nc.rho().matrix()).unwrap();
        ev.sort_by(|x, y| y.total_cmp(x));
        prop_assert!((ev[0] - 1.0).abs() < 1e-9);
        prop_assert!(ev[1..].iter().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn single_outcome_states_coincide(u in -5.0..5.0f64) {
        let a = Lottery::from_parts("A", &["x"], &[1.0], &[u]).unwrap();
        let b = Lottery::from_parts("B", &["x"], &[1.0], &[u]).unwrap();
        let zero = PhaseSpec::zeros(2);
        let c = classical_state(&a, &b, &zero).unwrap();
        let nc = nonclassical_state(&a, &b, &zero).unwrap();
        prop_assert!(c.rho().matrix().max_abs_diff(nc.rho().matrix()) < 1e-15);
    }

    #[test]
    fn swapping_lots_is_antisymmetric((a, b, theta) in case()) {
        let n = a.len();
        let fwd = criterion_nonclassical(&a, &b, &theta).unwrap();
        let rev = criterion_nonclassical(&b, &a, &theta.swap_sides(n)).unwrap();
        prop_assert!((fwd.comparison + rev.comparison).abs() < 1e-12);
        prop_assert!((fwd.risk_a - rev.risk_b).abs() < 1e-12);
        prop_assert!((fwd.risk_b - rev.risk_a).abs() < 1e-12);

        let fwd = criterion_classical(&a, &b, &theta).unwrap();
        let rev = criterion_classical(&b, &a, &theta.swap_sides(n)).unwrap();
        prop_assert!((fwd + rev).abs() < 1e-12);
    }

    #[test]
    fn utilities_scale_linearly((a, b, theta) in case(), c in 0.01..100.0f64) {
        let base = criterion_nonclassical(&a, &b, &theta).unwrap();
        let big = criterion_nonclassical(&scaled(&a, c), &scaled(&b, c), &theta).unwrap();
        let tol = 1e-10 * c.max(1.0) * 100.0;
        prop_assert!((big.risk_a - c * base.risk_a).abs() < tol);
        prop_assert!((big.risk_b - c * base.risk_b).abs() < tol);
        prop_assert!((big.comparison - c * base.comparison).abs() < tol);
        prop_assert!((big.total - c * base.total).abs() < tol);
        if base.total.abs() > 1e-6 {
            prop_assert_eq!(
                decide(base.total, Direction::Forward, 1e-12).verdict,
                decide(big.total, Direction::Forward, 1e-12).verdict
            );
        }
    }

    #[test]
    fn equal_utility_pairs_do_not_count(
        (a, b, theta) in case().prop_filter("needs two outcomes", |(a, _, _)| a.len() >= 2),
        bump in -1.0..=1.0f64,
    ) {
        // give outcomes 0 and 1 the same utility, then move every cos on that pair
        let names: Vec<&str> = a.entries().iter().map(|e| e.outcome.as_str()).collect();
        let mut u = a.utilities();
        u[1] = u[0];
        let a = Lottery::from_parts("A", &names, &a.probabilities(), &u).unwrap();
        let b = Lottery::from_parts("B", &names, &b.probabilities(), &u).unwrap();
        let n = a.len();
        let moved = theta
            .clone()
            .with(1, 2, bump).unwrap()
            .with(n + 1, n + 2, bump).unwrap()
            .with(1, n + 2, bump).unwrap()
            .with(2, n + 1, bump).unwrap()
            .with(1, n + 1, bump).unwrap();
        let before = criterion_nonclassical(&a, &b, &theta).unwrap().total;
        let after = criterion_nonclassical(&a, &b, &moved).unwrap().total;
        prop_assert!((before - after).abs() < 1e-12);
        let before = criterion_classical(&a, &b, &theta).unwrap();
        let after = criterion_classical(&a, &b, &moved).unwrap();
        prop_assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn subjective_probabilities_sum_to_one(p in (1usize..=10).prop_flat_map(probs)) {
        let s = subjective_probs(&ProbabilityVector::new(p).unwrap()).unwrap();
        prop_assert!((s.values().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn weighting_has_one_interior_fixed_point(xi in 1.0001..4.0f64) {
        // fixed point of sqrt(x) / (sqrt(x) + xi sqrt(1 - x)) solves x = 1 / (1 + xi^2)
        let star = 1.0 / (1.0 + xi * xi);
        let mut prev = 0.0;
        for k in 1..1000 {
            let x = k as f64 / 1000.0;
            let w = w_xi(x, xi);
            prop_assert!(w > prev);
            prev = w;
            if (x - star).abs() > 1e-9 {
                prop_assert_eq!(w > x, x < star, "x = {}, w = {}", x, w);
            }
        }
    }

    #[test]
    fn cash_equivalent_decreases_in_lambda(p in 0.001..0.999f64, l1 in 0.0..1.0f64, l2 in 0.0..1.0f64) {
        prop_assume!((l1 - l2).abs() > 1e-9);
        let (lo, hi) = if l1 < l2 { (l1, l2) } else { (l2, l1) };
        let ce = |l| cash_equivalent(&CEParams::new(p, l, 1.0).unwrap());
        prop_assert!(ce(lo) > ce(hi));
        prop_assert!(ce(lo) <= 1.0);
    }

    #[test]
    fn ellsberg_pattern_near_half_for_positive_lambda(
        alpha in 0.49..0.51f64,
        lambda in 0.05..1.0f64,
    ) {
        let p = EllsbergParams::new(alpha, lambda, 1.0).unwrap();
        let pattern = PreferencePattern::from_criteria(ellsberg_s12(&p), ellsberg_s43(&p), 1e-12).pattern();
        prop_assert_eq!(pattern, Pattern::OneOverTwoFourOverThree);
    }
}
