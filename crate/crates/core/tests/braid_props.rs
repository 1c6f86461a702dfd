mod common;

use braidorb::braid::{free_tuple, hurwitz_act, pure_sigma_ij, tuple_product, BraidWord, FreeWord, GroupElem};
use braidorb::charvar::{action_matrix_full, orbit_of_rep, word_matrix_full, Affine, AffineRep, LinearPart};
use braidorb::cyclo::z;
use braidorb::linalg::Mat;
use braidorb::Cyclotomic;
use common::{config, cyclo_in, linear_part, small_ints};
use proptest::prelude::*;

fn braid_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let m = n as i32 - 1;
    prop::collection::vec((1..=m, any::<bool>()), 0..=max_len)
        .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(l, s)| if s { l } else { -l }).collect()).unwrap())
}

fn words(max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (3usize..=6).prop_flat_map(move |n| (braid_word(n, max_len), braid_word(n, max_len)))
}

fn rep_and_pair() -> impl Strategy<Value = (AffineRep, usize, usize)> {
    linear_part(3..=6, 2..=12).prop_flat_map(|lin| {
        let n = lin.n();
        (Just(lin), small_ints(n - 1), (1..n - 1).prop_flat_map(move |i| (Just(i), i + 1..n)))
            .prop_map(|(lin, tau, (i, j))| (AffineRep::new(lin, tau).unwrap(), i, j))
    })
}

fn affine_gens(rep: &AffineRep) -> Vec<Affine> {
    rep.affine_tuple()
}

proptest! {
    #![proptest_config(config(64, 0x5eed_0003))]

    #[test]
    fn hurwitz_preserves_the_product((w, _) in words(10)) {
        let t = free_tuple(w.strands());
        prop_assert_eq!(tuple_product(&hurwitz_act(&w, &t)), tuple_product(&t));
    }

    #[test]
    fn hurwitz_is_an_action((a, b) in words(8)) {
        let t = free_tuple(a.strands());
        prop_assert_eq!(hurwitz_act(&a.then(&b), &t), hurwitz_act(&a, &hurwitz_act(&b, &t)));
        prop_assert_eq!(hurwitz_act(&a.inverse(), &hurwitz_act(&a, &t)), t);
    }

    #[test]
    fn hurwitz_images_are_conjugates_of_a_permutation((w, _) in words(8)) {
        // each image is a conjugate of a generator, and they are permuted like the strands
        let t = free_tuple(w.strands());
        let img = hurwitz_act(&w, &t);
        let perm = w.permutation();
        for (k, x) in img.iter().enumerate() {
            let letters = x.letters();
            let mid = letters.len() / 2;
            prop_assert_eq!(letters.len() % 2, 1);
            prop_assert_eq!(perm[letters[mid] as usize - 1], k);
            let (head, tail) = (FreeWord::from_letters(&letters[..mid]), FreeWord::from_letters(&letters[mid + 1..]));
            prop_assert_eq!(head.inverse(), tail);
        }
    }

    #[test]
    fn free_action_evaluates_to_the_matrix_action((rep, i, j) in rep_and_pair()) {
        let n = rep.n();
        let w = pure_sigma_ij(n, i, j).unwrap();
        let gens = affine_gens(&rep);
        let image: Vec<Affine> =
            hurwitz_act(&w, &free_tuple(n)).iter().map(|x| x.eval(&gens, Affine::identity())).collect();
        let via_free = AffineRep::from_affine_tuple(&image).unwrap();
        let m = action_matrix_full(rep.linear(), i, j).unwrap();
        prop_assert_eq!(via_free.tau().to_vec(), m.mul_vec(rep.tau()));
        prop_assert_eq!(&rep.act(&w).unwrap(), &via_free);
    }

    #[test]
    fn reflection_facts((rep, i, j) in rep_and_pair()) {
        let lin = rep.linear();
        let n = lin.n();
        let l = action_matrix_full(lin, i, j).unwrap();
        let lij = lin.get(i) * lin.get(j);
        prop_assert_eq!(l.trace(), &lij + &Cyclotomic::from_int(n as i64 - 2));
        prop_assert!(l.sub(&Mat::identity(n - 1)).rank() <= 1);
        let d = lin.delta();
        prop_assert_eq!(l.mul_vec(&d), d);
        // λ_iλ_j = 1 alone gives a transvection; the identity needs both loops trivial
        prop_assert_eq!(l.is_identity(), lin.get(i).is_one() && lin.get(j).is_one());
        let id = Mat::identity(n - 1);
        let u = l.sub(&id);
        prop_assert!((&u * &l.sub(&id.scale(&lij))).is_zero());
        if !u.is_zero() && !lij.is_one() {
            prop_assert_eq!(l.reflection_eigenvalue(), Some(lij));
        }
    }

    #[test]
    fn conjugation_commutes_with_the_action((rep, i, j) in rep_and_pair(), a in cyclo_in(4), b in cyclo_in(3)) {
        prop_assume!(!a.is_zero());
        let w = pure_sigma_ij(rep.n(), i, j).unwrap();
        let lhs = rep.conjugate(&a, &b).unwrap().act(&w).unwrap();
        let rhs = rep.act(&w).unwrap().conjugate(&a, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(config(24, 0x5eed_0004))]

    #[test]
    fn orbit_does_not_depend_on_the_representative(
        lin in linear_part(4..=5, 2..=6),
        seed in small_ints(4),
        a in cyclo_in(3),
        b in cyclo_in(4),
        (i, j, e) in (1usize..3, 0i32..3).prop_flat_map(|(i, e)| (Just(i), i + 1..4, Just(e))),
    ) {
        prop_assume!(!a.is_zero() && lin.iota() >= 2);
        let rep = AffineRep::new(lin.clone(), seed[..lin.n() - 1].to_vec()).unwrap();
        let base = orbit_of_rep(&rep, 5000).unwrap();
        prop_assume!(!base.exceeded_bound);
        let w = pure_sigma_ij(lin.n(), i, j).unwrap().pow(e);
        for other in [rep.conjugate(&a, &b).unwrap(), rep.act(&w).unwrap()] {
            let o = orbit_of_rep(&other, 5000).unwrap();
            prop_assert_eq!(o.size, base.size);
            prop_assert_eq!(o.sorted_points(), base.sorted_points());
        }
    }
}

#[test]
fn braid_relations_hold_on_equal_eigenvalues() {
    for n in [5usize, 6] {
        for k in [1i64, 2] {
            let lin = LinearPart::new(vec![z(n as u32, k); n]).unwrap();
            let gens: Vec<Mat> =
                (1..n).map(|i| word_matrix_full(&lin, &BraidWord::sigma(n, i).unwrap()).unwrap()).collect();
            assert!(braidorb::braid::check_braid_relations(&gens, false), "n={} k={}", n, k);
        }
        let t = free_tuple(n);
        for i in 1..n - 1 {
            let l = i as i32;
            let lhs = BraidWord::new(n, vec![l, l + 1, l]).unwrap();
            let rhs = BraidWord::new(n, vec![l + 1, l, l + 1]).unwrap();
            assert_eq!(hurwitz_act(&lhs, &t), hurwitz_act(&rhs, &t));
            for m in i + 2..n {
                let a = BraidWord::new(n, vec![l, m as i32]).unwrap();
                let b = BraidWord::new(n, vec![m as i32, l]).unwrap();
                assert_eq!(hurwitz_act(&a, &t), hurwitz_act(&b, &t));
            }
        }
    }
}
