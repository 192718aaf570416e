//! Seeded randomness.
//!
//! Every random choice in the crate goes through [`LabRng`] (ChaCha8, whose
//! output stream is fixed across platforms and releases) and the two helpers
//! below, so a seed fully determines an instance or a learner run.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type LabRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> LabRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from `0..bound` by the multiply-high reduction of one 64-bit
/// word. Never rejects; the bias is below `bound / 2^64`.
#[inline]
pub fn below<R: RngCore + ?Sized>(rng: &mut R, bound: usize) -> usize {
    assert!(bound > 0, "below() needs a positive bound");
    ((u128::from(rng.next_u64()) * bound as u128) >> 64) as usize
}

/// Fisher-Yates, drawing `below(i + 1)` for `i` from the top down.
pub fn shuffle<T, R: RngCore + ?Sized>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i + 1);
        items.swap(i, j);
    }
}

/// Uniform permutation of `1..=n`.
pub fn random_permutation<R: RngCore + ?Sized>(rng: &mut R, n: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    shuffle(rng, &mut v);
    v
}

/// SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed: `mix64(mix64(mix64(base) ^ n) ^ trial)`.
pub fn trial_seed(base: u64, n: usize, trial: usize) -> u64 {
    mix64(mix64(mix64(base) ^ n as u64) ^ trial as u64)
}
