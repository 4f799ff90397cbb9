//! Seeded synthetic curve pairs.

use frechet_gap_core::Curve;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    /// A walk and a shifted copy of it with a few displaced points.
    OffsetOutlier,
    /// Two independent planar random walks.
    RandomWalk,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: Kind,
    pub n: usize,
    pub offset: [f64; 2],
    pub outliers: usize,
    pub magnitude: f64,
    /// Sideways step size of the offset-outlier walk; 0 gives a straight lattice line.
    pub jitter: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            kind: Kind::OffsetOutlier,
            n: 64,
            offset: [0.0, 1.0],
            outliers: 1,
            magnitude: 8.0,
            jitter: 0.5,
            seed: 0,
        }
    }
}

/// Returns `(A, B)`.
pub fn generate(p: &GenParams) -> Result<(Curve, Curve)> {
    if p.n < 2 {
        return Err(CliError::Input(format!(
            "n must be at least 2, got {}",
            p.n
        )));
    }
    if p.outliers >= p.n {
        return Err(CliError::Input(format!(
            "outliers must be below n = {}, got {}",
            p.n, p.outliers
        )));
    }
    let finite = p
        .offset
        .iter()
        .chain([&p.magnitude, &p.jitter])
        .all(|v| v.is_finite());
    if !finite || p.jitter < 0.0 {
        return Err(CliError::Input(
            "offset, magnitude and jitter must be finite, jitter non-negative".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let (a, b) = match p.kind {
        Kind::OffsetOutlier => {
            let b = walk(&mut rng, p.n, [0.0, 0.0], |r| {
                [1.0, p.jitter * r.gen_range(-1.0..=1.0)]
            });
            let mut a: Vec<[f64; 2]> = b
                .iter()
                .map(|q| [q[0] + p.offset[0], q[1] + p.offset[1]])
                .collect();
            for k in sample(&mut rng, p.n, p.outliers) {
                a[k][1] += p.magnitude;
            }
            (a, b)
        }
        Kind::RandomWalk => {
            let step = |r: &mut ChaCha8Rng| [r.gen_range(-1.0..=1.0), r.gen_range(-1.0..=1.0)];
            let a = walk(&mut rng, p.n, [0.0, 0.0], step);
            let b = walk(&mut rng, p.n, p.offset, step);
            (a, b)
        }
    };
    Ok((Curve::new(&a)?, Curve::new(&b)?))
}

fn walk(
    rng: &mut ChaCha8Rng,
    n: usize,
    from: [f64; 2],
    mut step: impl FnMut(&mut ChaCha8Rng) -> [f64; 2],
) -> Vec<[f64; 2]> {
    let mut at = from;
    let mut out = Vec::with_capacity(n);
    out.push(at);
    for _ in 1..n {
        let s = step(rng);
        at = [at[0] + s[0], at[1] + s[1]];
        out.push(at);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical() -> GenParams {
        GenParams {
            n: 4,
            jitter: 0.0,
            seed: 10,
            ..GenParams::default()
        }
    }

    #[test]
    fn canonical_outlier_instance() {
        let (a, b) = generate(&canonical()).unwrap();
        assert_eq!(
            a,
            Curve::new(&[[0.0, 1.0], [1.0, 1.0], [2.0, 9.0], [3.0, 1.0]]).unwrap()
        );
        assert_eq!(
            b,
            Curve::new(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]]).unwrap()
        );
    }

    #[test]
    fn no_outliers_is_a_translate() {
        let p = GenParams {
            n: 30,
            outliers: 0,
            offset: [0.5, -2.0],
            seed: 4,
            ..GenParams::default()
        };
        let (a, b) = generate(&p).unwrap();
        for (pa, pb) in a.points().zip(b.points()) {
            assert_eq!([pa[0] - pb[0], pa[1] - pb[1]], [0.5, -2.0]);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        for kind in [Kind::OffsetOutlier, Kind::RandomWalk] {
            let p = GenParams {
                kind,
                n: 50,
                seed: 9,
                ..GenParams::default()
            };
            assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
            let q = GenParams {
                seed: 10,
                ..p.clone()
            };
            assert_ne!(generate(&p).unwrap(), generate(&q).unwrap());
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(&GenParams {
            n: 1,
            outliers: 0,
            ..GenParams::default()
        })
        .is_err());
        assert!(generate(&GenParams {
            n: 4,
            outliers: 4,
            ..GenParams::default()
        })
        .is_err());
        assert!(generate(&GenParams {
            magnitude: f64::NAN,
            ..GenParams::default()
        })
        .is_err());
    }
}
