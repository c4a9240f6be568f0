//! Fixed inputs shared by the benchmarks.

use std::sync::Arc;

use torzar::verifier::{RandomSpec, Sampler};
use torzar::{lattice, Fan, ToricClass};

/// The plane blown up at a point, with `H` and `E`.
pub fn blowup() -> (ToricClass, ToricClass) {
    let fan = Fan::new(
        2,
        vec![lattice(&[1, 0]), lattice(&[0, 1]), lattice(&[-1, -1]), lattice(&[1, 1])],
        vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![2, 0]],
    )
    .expect("blow-up fan");
    let fan = Arc::new(fan);
    let h = ToricClass::from_ints(fan.clone(), &[1, 0, 0, 1]).expect("H");
    let e = ToricClass::from_ints(fan, &[0, 0, 0, 1]).expect("E");
    (h, e)
}

/// A big class and an arbitrary class on a once-subdivided random fan.
pub fn random_pair(seed: u64, dim: usize) -> (ToricClass, ToricClass) {
    let mut s = Sampler::new(&RandomSpec::new(seed, dim).with_subdivisions(1));
    (s.big(), s.class())
}

/// Two big nef classes on a random fan.
pub fn random_nef_pair(seed: u64, dim: usize) -> (ToricClass, ToricClass) {
    let mut s = Sampler::new(&RandomSpec::new(seed, dim).with_subdivisions(1));
    (s.big_nef(), s.big_nef())
}
