//! Fixture generators shared by the integration tests.
#![allow(dead_code)]

use cobordize::cobordism::CobordismFan;
use cobordize::construct::{self, Block, Polytope, WeightSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_spec<R: Rng>(rng: &mut R, n: usize) -> WeightSpec {
    loop {
        let l = rng.gen_range(1..=(n - 1).min(3));
        let m = rng.gen_range(1..=(n - l).min(3));
        let w = |rng: &mut R| rng.gen_range(1..=3u64);
        let a = (0..l).map(|_| w(rng)).collect();
        let b = (0..m).map(|_| w(rng)).collect();
        if let Ok(s) = WeightSpec::new(a, b, n - l - m) {
            return s;
        }
    }
}

/// Chains of two to four glued blocks in ranks 3 and 4, each with as many
/// fixed components as blocks.
pub fn chain_fixtures(count: usize, seed: u64) -> Vec<CobordismFan> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(3..=4);
        let k = rng.gen_range(2..=4);
        let blocks: Vec<Block> = (0..k)
            .map(|i| Block { weights: random_spec(&mut rng, n), reversed: i > 0 && rng.gen_bool(0.3) })
            .collect();
        if let Ok(b) = construct::from_weight_sequence(&blocks) {
            out.push(b);
        }
    }
    out
}

/// Linear actions on P^2, P^3 and P^4 with at least four weight blocks.
pub fn linear_fixtures() -> Vec<CobordismFan> {
    let weights: &[&[i64]] = &[
        &[0, 1, 2, 3],
        &[0, 1, 2, 3, 4],
        &[0, 1, 1, 2, 3],
        &[0, 2, 1, 3, 3],
        &[0, 1, 3, 4],
        &[0, 2, 3, 5],
        &[-1, 0, 1, 2],
        &[0, 1, 2, 2, 4],
    ];
    weights.iter().map(|w| construct::linear_action(w).expect("linear action")).collect()
}

/// Random pairs of simple polytopes: polygons in rank 2, truncated boxes
/// in rank 3.
pub fn polytope_pairs(rank: usize, count: usize, seed: u64) -> Vec<(Polytope, Polytope)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| match rank {
            2 => (construct::random_polygon(&mut rng), construct::random_polygon(&mut rng)),
            3 => (construct::random_simple_polytope3(&mut rng), construct::random_simple_polytope3(&mut rng)),
            _ => panic!("no generator for rank {rank}"),
        })
        .collect()
}
