mod common;

use braidorb::connect::{
    conjugation_check, det_g_formula, exp_rank_one_residue, flatness_check, g_matrix, lauricella_e, local_monodromy_matches,
    residues_b, residues_c, to_numeric, CMat, ConnectionSpec, LauricellaParams, ResidueFamily,
};
use braidorb::Rational;
use common::config;
use num_complex::Complex64;
use proptest::prelude::*;

/// Exponents sharing one denominator, so the λ_i stay in a small cyclotomic field.
fn spec(points: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = ConnectionSpec> {
    (points, 2i64..=12)
        .prop_flat_map(|(n, q)| (prop::collection::vec(prop_oneof![-11i64..=-1, 1i64..=11], n - 1), Just(q)))
        .prop_map(|(ps, q)| ConnectionSpec::new(ps.into_iter().map(|p| Rational::new(p, q)).collect()).unwrap())
}

fn positions(count: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), count).prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
}

fn separated(t: &[Complex64]) -> bool {
    t.iter().enumerate().all(|(i, a)| t[i + 1..].iter().all(|b| (a - b).norm() > 0.2))
}

/// Largest entry of `[Ω_p, Ω_q]` over moving points, with `Ω_p = Σ_j R(p,j)/(t_p − t_j)`.
fn curvature(f: &ResidueFamily, t: &[Complex64]) -> f64 {
    let omega = |p: usize| {
        let mut acc = CMat::zeros(f.dim, f.dim);
        for j in 1..=f.points {
            if let Some(r) = (j != p).then(|| f.get(p, j)).flatten() {
                acc += to_numeric(r) / (t[p - 1] - t[j - 1]);
            }
        }
        acc
    };
    let moving: Vec<usize> = (1..=f.points).filter(|p| !f.fixed.contains(p)).collect();
    let mut worst = 0.0f64;
    for (a, &p) in moving.iter().enumerate() {
        for &q in &moving[a + 1..] {
            let (op, oq) = (omega(p), omega(q));
            let c = &op * &oq - &oq * &op;
            worst = worst.max(c.iter().map(|x| x.norm()).fold(0.0, f64::max));
        }
    }
    worst
}

fn pair_sums_nonzero(s: &ConnectionSpec) -> bool {
    let t = &s.theta;
    (0..t.len()).all(|i| (i + 1..t.len()).all(|j| !(&t[i] + &t[j]).is_zero()))
}

proptest! {
    #![proptest_config(config(48, 0x5eed_000a))]

    #[test]
    fn b_and_c_residues_are_flat(s in spec(4..=7), t in positions(7)) {
        prop_assume!(separated(&t));
        let b = residues_b(&s);
        prop_assert!(flatness_check(&b));
        prop_assert!(curvature(&b, &t) < 1e-9);
        let c = residues_c(&s).unwrap();
        prop_assert!(flatness_check(&c));
        prop_assert!(curvature(&c, &t) < 1e-9);
    }

    #[test]
    fn lauricella_residues_are_flat(s in spec(4..=7), t in positions(4)) {
        let e = lauricella_e(&LauricellaParams::from_theta(&s).unwrap());
        prop_assert!(flatness_check(&e));
        // the two fixed points sit at 0 and 1
        let nn = e.points - 2;
        let mut pos: Vec<Complex64> = t[..nn].to_vec();
        pos.push(Complex64::new(0.0, 0.0));
        pos.push(Complex64::new(1.0, 0.0));
        prop_assume!(separated(&pos));
        prop_assert!(curvature(&e, &pos) < 1e-9);
    }

    #[test]
    fn lauricella_system_is_conjugate_to_the_quotient(s in spec(4..=6)) {
        let Ok(g) = g_matrix(&s) else { return Ok(()) };
        prop_assert!(conjugation_check(&s).unwrap());
        prop_assert!(!g.det().is_zero());
        prop_assert_eq!(g.det().as_rational(), Some(det_g_formula(&s).unwrap()));
    }

    #[test]
    fn local_monodromy_is_the_braid_reflection(s in spec(4..=6)) {
        prop_assume!(pair_sums_nonzero(&s));
        let lin = s.linear_part().unwrap();
        // the section τ_1 = 0 needs λ_1 ≠ 1
        prop_assume!(!lin.get(1).is_one());
        let c = residues_c(&s).unwrap();
        for j in 1..s.n() - 1 {
            for k in j + 1..s.n() {
                prop_assert!(local_monodromy_matches(&s, j, k).unwrap());
                let e = exp_rank_one_residue(c.get(j, k).unwrap()).unwrap();
                let eig = lin.get(j) * lin.get(k);
                prop_assert_eq!(e.reflection_eigenvalue().unwrap_or_else(braidorb::Cyclotomic::one), eig);
            }
        }
    }
}
