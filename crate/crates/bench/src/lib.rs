//! Seeded fixtures shared by the benchmarks.

use qroot_core::envalg::{self, EnvElement};
use qroot_core::funalg::{self, FunElement};
use qroot_core::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 7;

/// `n` random finite elements of A with `terms` terms each.
pub fn fun_fixture(f: Field, n: usize, terms: usize) -> Vec<FunElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..n).map(|_| funalg::random_finite(&mut rng, f, terms)).collect()
}

/// `n` random elements of U with `terms` terms each.
pub fn env_fixture(f: Field, n: usize, terms: usize) -> Vec<EnvElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    (0..n).map(|_| envalg::random_element(&mut rng, f, terms)).collect()
}
