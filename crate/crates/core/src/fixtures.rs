use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{Curve, DistanceMatrix};

pub fn matrix(a: &[[f64; 2]], b: &[[f64; 2]]) -> DistanceMatrix {
    DistanceMatrix::between(&Curve::new(a).unwrap(), &Curve::new(b).unwrap()).unwrap()
}

/// A = B shifted up by one, with a_3 pulled up to y = 9.
pub fn outlier() -> DistanceMatrix {
    matrix(
        &[[0.0, 1.0], [1.0, 1.0], [2.0, 9.0], [3.0, 1.0]],
        &[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]],
    )
}

/// Random curves with coordinates on a coarse lattice, so distance ties occur.
pub fn random_matrix(rng: &mut ChaCha8Rng, max_len: usize) -> DistanceMatrix {
    let curve = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=max_len);
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|_| [rng.gen_range(0..6) as f64, rng.gen_range(0..6) as f64])
            .collect();
        Curve::new(&pts).unwrap()
    };
    let a = curve(rng);
    let b = curve(rng);
    DistanceMatrix::between(&a, &b).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
