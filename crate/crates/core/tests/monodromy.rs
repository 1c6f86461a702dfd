use braidorb::connect::{
    eigenvalues, monodromy_numeric, numeric_closure, restricted_residues, same_spectrum, to_numeric, CMat, ConnectionSpec,
    LoopOptions,
};
use braidorb::Rational;
use num_complex::Complex64;
use std::f64::consts::PI;

fn rank_three_loops(sign: i64) -> Vec<CMat> {
    let spec = ConnectionSpec::new(vec![Rational::new(sign, 6); 4]).unwrap();
    let poles = [Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    // dZ + Σ A_p dx/(x−p) Z = 0
    let data: Vec<(Complex64, CMat)> =
        restricted_residues(&spec).unwrap().iter().zip(poles).map(|(a, p)| (p, -to_numeric(a))).collect();
    monodromy_numeric(&data, Complex64::new(0.0, -2.0), &LoopOptions::default()).unwrap().into_iter().map(|l| l.matrix).collect()
}

#[test]
fn rank_three_monodromy_is_the_hessian_group() {
    let loops = rank_three_loops(1);
    let want = [Complex64::from_polar(1.0, -2.0 * PI / 3.0), 1.0.into(), 1.0.into()];
    for m in &loops {
        assert!(same_spectrum(&eigenvalues(m), &want, 1e-8), "{:?}", eigenvalues(m));
        let cube = m * m * m;
        assert!((cube - CMat::identity(3, 3)).iter().all(|x| x.norm() < 1e-8));
    }
    assert_eq!(numeric_closure(&loops, 1e-6, 5000).unwrap(), 648);
}

#[test]
fn opposite_sign_gives_conjugate_reflections() {
    let want = [Complex64::from_polar(1.0, 2.0 * PI / 3.0), 1.0.into(), 1.0.into()];
    for m in rank_three_loops(-1) {
        assert!(same_spectrum(&eigenvalues(&m), &want, 1e-8));
    }
}

#[test]
fn product_of_loops_is_the_loop_at_infinity() {
    let loops = rank_three_loops(1);
    let spec = ConnectionSpec::new(vec![Rational::new(1, 6); 4]).unwrap();
    let sum = restricted_residues(&spec).unwrap().iter().fold(CMat::zeros(3, 3), |acc, a| acc - to_numeric(a));
    let want: Vec<Complex64> = eigenvalues(&sum).iter().map(|e| (e * Complex64::new(0.0, 2.0 * PI)).exp()).collect();
    // a loop run first acts first, so the composite is the later loop times the earlier one
    let total = loops.iter().fold(CMat::identity(3, 3), |acc, m| m * acc);
    assert!(same_spectrum(&eigenvalues(&total), &want, 1e-8));
}
