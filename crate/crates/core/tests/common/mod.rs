#![allow(dead_code)]

use braidorb::charvar::{AffineRep, LinearPart};
use braidorb::cyclo::{totient, z};
use braidorb::{Cyclotomic, Rational};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

pub const CONDUCTORS: [u32; 9] = [1, 3, 4, 5, 7, 8, 9, 12, 15];

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn cyclo_in(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), totient(n)).prop_map(move |c| Cyclotomic::from_coeffs(n, c))
}

pub fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(cyclo_in)
}

/// Linear parts with all `λ_i` in `μ_m` for one `m`.
pub fn linear_part(ns: std::ops::RangeInclusive<usize>, ms: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = LinearPart> {
    (ns, ms).prop_flat_map(|(n, m)| {
        prop::collection::vec(0..m as i64, n - 1)
            .prop_map(move |e| LinearPart::from_first(e.iter().map(|&k| z(m, k)).collect()).unwrap())
    })
}

pub fn small_ints(len: usize) -> impl Strategy<Value = Vec<Cyclotomic>> {
    prop::collection::vec(-4i64..=4, len).prop_map(|v| v.into_iter().map(Cyclotomic::from_int).collect())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_linear_part(rng: &mut ChaCha8Rng, n: usize, m: u32) -> LinearPart {
    LinearPart::from_first((0..n - 1).map(|_| z(m, rng.gen_range(0..m as i64))).collect()).unwrap()
}

pub fn random_ints(rng: &mut ChaCha8Rng, len: usize) -> Vec<Cyclotomic> {
    (0..len).map(|_| Cyclotomic::from_int(rng.gen_range(-4..=4))).collect()
}

pub fn random_rep(rng: &mut ChaCha8Rng, n: usize, m: u32) -> AffineRep {
    let lin = random_linear_part(rng, n, m);
    AffineRep::new(lin, random_ints(rng, n - 1)).unwrap()
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}
