mod common;

use braidorb::connect::to_numeric;
use braidorb::linalg::{dot, Mat};
use braidorb::reflgrp::{ReflGroup, Which};
use braidorb::Cyclotomic;
use common::{close, config, cyclo_in};
use proptest::prelude::*;

fn square(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(prop::sample::select(vec![3u32, 4, 12]).prop_flat_map(cyclo_in), n * n)
        .prop_map(move |e| Mat::from_fn(n, n, |i, j| e[i * n + j].clone()))
}

fn sparse(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    // many zeros, so rank deficiency is common
    prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], rows * cols)
        .prop_map(move |e| Mat::from_fn(rows, cols, |i, j| Cyclotomic::from_int(e[i * cols + j])))
}

fn numeric_rank(m: &Mat) -> usize {
    to_numeric(m).singular_values().iter().filter(|s| **s > 1e-9).count()
}

proptest! {
    #![proptest_config(config(48, 0x5eed_0002))]

    #[test]
    fn inverse_is_two_sided(m in prop_oneof![square(3), square(4)]) {
        prop_assume!(!m.det().is_zero());
        let inv = m.inverse().unwrap();
        prop_assert!((&inv * &m).is_identity());
        prop_assert!((&m * &inv).is_identity());
    }

    #[test]
    fn det_matches_floating_point(m in prop_oneof![square(2), square(3), square(4)]) {
        let want = to_numeric(&m).determinant();
        prop_assert!(close(m.det().to_complex(), want, 1e-8));
    }

    #[test]
    fn det_is_multiplicative(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
    }

    #[test]
    fn rank_nullity(m in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| sparse(r, c))) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        prop_assert_eq!(m.rank(), numeric_rank(&m));
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn transpose_reverses_products(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
        let v: Vec<Cyclotomic> = (0..3).map(|i| a.at(i, 0).clone()).collect();
        let bv = b.mul_vec(&v);
        prop_assert_eq!(dot(&b.row(1), &v), bv[1].clone());
    }
}

#[test]
fn g25_reflections_are_exactly_the_rank_one_elements() {
    let g = ReflGroup::standard(Which::G25).unwrap();
    let id = Mat::identity(3);
    let mut count = 0;
    for i in 0..g.order() {
        let m = g.element(i);
        let d = m.sub(&id);
        let expected = !d.is_zero() && numeric_rank(&d) == 1;
        assert_eq!(m.is_complex_reflection(), expected, "element {}", i);
        if expected {
            assert!(m.order(3).is_some());
            count += 1;
        }
    }
    assert_eq!(count, 24);
    assert_eq!(g.reflections().len(), 24);
}
