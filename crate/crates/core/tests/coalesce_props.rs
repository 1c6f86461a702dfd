mod common;

use braidorb::braid::{PureLetter, PureWord};
use braidorb::charvar::{orbit_of_rep, same_class, AffineRep, LinearPart};
use braidorb::coalesce::{equivariance_check, r_kl, CoalesceSpec};
use braidorb::cyclo::z;
use braidorb::Cyclotomic;
use common::{config, linear_part, random_ints, rng, small_ints};
use proptest::prelude::*;
use rand::Rng;

fn pure_word(k: usize, max_len: usize) -> impl Strategy<Value = PureWord> {
    let letter = (1..k).prop_flat_map(move |i| (Just(i), i + 1..=k, prop_oneof![-2i32..=-1, 1i32..=2]));
    prop::collection::vec(letter, 0..=max_len)
        .prop_map(move |v| PureWord::new(k, v.into_iter().map(|(i, j, exp)| PureLetter { i, j, exp }).collect()).unwrap())
}

fn instance() -> impl Strategy<Value = (AffineRep, CoalesceSpec, PureWord)> {
    linear_part(4..=6, 2..=12).prop_flat_map(|lin| {
        let n = lin.n();
        (Just(lin), small_ints(n - 1), (3..n).prop_flat_map(|k| (Just(k), 1..=k)))
            .prop_flat_map(move |(lin, tau, (k, l))| {
                let rep = AffineRep::new(lin, tau).unwrap();
                (Just(rep), Just(CoalesceSpec::new(n, k, l).unwrap()), pure_word(k, 4))
            })
    })
}

proptest! {
    #![proptest_config(config(64, 0x5eed_0008))]

    #[test]
    fn coalescence_is_equivariant((rep, spec, b) in instance()) {
        prop_assert!(equivariance_check(&rep, &spec, &b).unwrap());
    }

    #[test]
    fn coalescence_respects_conjugation((rep, spec, _) in instance(), a in 1i64..12, b in -3i64..=3) {
        let a = z(12, a);
        let b = Cyclotomic::from_int(b);
        let lhs = r_kl(&rep.conjugate(&a, &b).unwrap(), &spec).unwrap();
        prop_assert!(same_class(&lhs, &r_kl(&rep, &spec).unwrap()).unwrap());
        prop_assert_eq!(r_kl(&rep, &spec).unwrap().linear().n(), spec.k);
    }
}

fn orbit_size(rep: &AffineRep, bound: usize) -> Option<usize> {
    if rep.linear().iota() == 0 {
        return Some(1);
    }
    let o = orbit_of_rep(rep, bound).unwrap();
    (!o.exceeded_bound).then_some(o.size)
}

fn two_puncture_rep(r: &mut impl Rng, n: usize) -> AffineRep {
    let a = z(12, r.gen_range(1..12));
    let mut lam = vec![Cyclotomic::one(); n];
    let p = r.gen_range(0..n);
    let q = (p + r.gen_range(1..n)) % n;
    lam[p] = a.clone();
    lam[q] = a.inv();
    let lin = LinearPart::new(lam).unwrap();
    AffineRep::new(lin, random_ints_in(r, n - 1)).unwrap()
}

fn random_ints_in(r: &mut impl Rng, len: usize) -> Vec<Cyclotomic> {
    (0..len).map(|_| Cyclotomic::from_int(r.gen_range(-2..=2))).collect()
}

#[test]
fn coalescence_does_not_grow_finite_orbits() {
    let mut r = rng(0x5eed_0009);
    let bound = 4000;
    let hessian = LinearPart::new(vec![z(6, 1), z(6, 1), z(6, 1), z(6, 1), z(6, 2)]).unwrap();
    let mut checked = 0;
    for s in 0..40 {
        let rep = if s % 2 == 0 {
            two_puncture_rep(&mut r, 4 + s % 3)
        } else {
            AffineRep::new(hessian.clone(), random_ints(&mut r, 4)).unwrap()
        };
        let n = rep.n();
        let Some(big) = orbit_size(&rep, bound) else { continue };
        for k in 3..n {
            for l in 1..=k {
                let small = r_kl(&rep, &CoalesceSpec::new(n, k, l).unwrap()).unwrap();
                let size = orbit_size(&small, bound).expect("image of a finite orbit is finite");
                assert!(size <= big, "{} {:?} k={} l={}: {} > {}", rep.linear().render(), rep.tau(), k, l, size, big);
                checked += 1;
            }
        }
    }
    assert!(checked >= 50, "only {} checks", checked);
}
