//! Seeded sampling for randomized sweeps.
//!
//! The generator is SplitMix64 with its state initialised to the seed
//! (Steele, Lea & Flood's constants: increment `0x9e3779b97f4a7c15`, then
//! the `0xbf58476d1ce4e5b9` / `0x94d049bb133111eb` finaliser). Every draw
//! below is defined in terms of `next_u64` alone so other implementations
//! can reproduce the same samples:
//!
//! * `below(b)` is `next_u64() % b`.
//! * A graph on `n` vertices takes `ceil(C(n,2)/64)` words; pair `k` (in
//!   row-major upper-triangle order) is an edge iff bit `k % 64` of word
//!   `k / 64` is set.
//! * Subsets take one word per 64 vertices the same way.
//! * Permutations are Fisher–Yates from the top: for `i = n-1` down to `1`,
//!   swap `i` with `below(i+1)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{pair_count, Graph};

pub type SweepRng = SplitMix64;

pub fn rng(seed: u64) -> SweepRng {
    SplitMix64::seed_from_u64(seed)
}

pub fn below(rng: &mut SweepRng, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    rng.next_u64() % bound
}

/// Uniform in `lo..=hi`.
pub fn order_between(rng: &mut SweepRng, lo: usize, hi: usize) -> usize {
    assert!(lo <= hi, "empty range");
    lo + below(rng, (hi - lo + 1) as u64) as usize
}

fn bits(rng: &mut SweepRng, count: usize) -> Vec<bool> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let word = rng.next_u64();
        let take = (count - out.len()).min(64);
        out.extend((0..take).map(|b| word >> b & 1 == 1));
    }
    out
}

/// Uniform labeled graph on `n` vertices.
pub fn graph(rng: &mut SweepRng, n: usize) -> Graph {
    let on = bits(rng, pair_count(n));
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if on[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Uniform subset of `0..n`, ascending.
pub fn subset(rng: &mut SweepRng, n: usize) -> Vec<usize> {
    bits(rng, n).into_iter().enumerate().filter_map(|(v, on)| on.then_some(v)).collect()
}

pub fn permutation(rng: &mut SweepRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        p.swap(i, j);
    }
    p
}

/// Random circulant graph on `n ≥ 1` vertices: each distance in
/// `1..=n/2` is a connection with probability one half (one `subset` draw).
pub fn circulant(rng: &mut SweepRng, n: usize) -> Graph {
    let dists: Vec<usize> = subset(rng, n / 2).into_iter().map(|d| d + 1).collect();
    Graph::circulant(n, &dists)
}
