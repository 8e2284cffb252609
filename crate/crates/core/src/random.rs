//! Seeded random dicots: random subgraphs of complete dicots with random
//! orientations and rational weights in `[1/3, 3]`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dicot::{Dicot, DicotBuilder};
use crate::rational::{ratio, Rational};

pub type DicotRng = ChaCha8Rng;

pub fn rng(seed: u64) -> DicotRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `1 <= q <= 6` and `1/3 <= p/q <= 3`.
pub fn random_weight<R: Rng>(rng: &mut R) -> Rational {
    let q: i64 = rng.gen_range(1..=6);
    let p: i64 = rng.gen_range((q + 2) / 3..=3 * q);
    ratio(p, q)
}

/// Keeps each edge of the complete dicot on `n` vertices with probability
/// `p`, orients solid edges by a fair coin.
pub fn random_dicot<R: Rng>(rng: &mut R, n: u32, p: f64) -> Dicot {
    let mut b = DicotBuilder::from_weights((0..n).map(|_| random_weight(rng)).collect());
    for u in (1..=n).step_by(2) {
        for w in (2..=n).step_by(2) {
            if rng.gen_bool(p) {
                let a = random_weight(rng);
                if rng.gen_bool(0.5) {
                    b.solid(u, w, a);
                } else {
                    b.solid(w, u, a);
                }
            }
            if rng.gen_bool(p) {
                b.dashed(u, w, random_weight(rng));
            }
        }
    }
    b.build().expect("subgraphs of a complete dicot are dicots")
}

/// Vertex count uniform in `1..=max_n`, edge probability uniform in
/// `[0.2, 0.9]`.
pub fn random_small_dicot<R: Rng>(rng: &mut R, max_n: u32) -> Dicot {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.9);
    random_dicot(rng, n, p)
}
