#![allow(dead_code)]

use frechet_gap_core::salg::{RangeMatrixView, ViewBounds};
use frechet_gap_core::{
    Curve, DistanceLadder, DistanceMatrix, DistanceRange, Position, Variant, Walk,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Lattice points, so equal distances are common.
pub fn lattice_curve(rng: &mut ChaCha8Rng, lens: std::ops::RangeInclusive<usize>) -> Curve {
    let n = rng.gen_range(lens);
    let pts: Vec<[f64; 2]> = (0..n)
        .map(|_| [rng.gen_range(0..7) as f64, rng.gen_range(0..7) as f64])
        .collect();
    Curve::new(&pts).unwrap()
}

pub fn instance(rng: &mut ChaCha8Rng, lens: std::ops::RangeInclusive<usize>) -> DistanceMatrix {
    let a = lattice_curve(rng, lens.clone());
    let b = lattice_curve(rng, lens);
    DistanceMatrix::between(&a, &b).unwrap()
}

/// A random range whose limits are matrix entries.
pub fn random_range(rng: &mut ChaCha8Rng, d: &DistanceMatrix) -> DistanceRange {
    let v = d.values();
    let a = v[rng.gen_range(0..v.len())];
    let b = v[rng.gen_range(0..v.len())];
    DistanceRange::new(a.min(b), a.max(b)).unwrap()
}

fn sub_range(rng: &mut ChaCha8Rng, r: std::ops::Range<usize>) -> std::ops::Range<usize> {
    let a = rng.gen_range(r.start..r.end);
    let b = rng.gen_range(a..r.end);
    a..b + 1
}

/// A chain of non-empty views, each inside the previous one, starting at the full view.
pub fn nested_views(
    rng: &mut ChaCha8Rng,
    ladder: &DistanceLadder,
    depth: usize,
) -> Vec<RangeMatrixView> {
    let mut views = vec![RangeMatrixView::full(ladder)];
    for _ in 1..depth {
        let last = views.last().unwrap();
        let v = RangeMatrixView {
            rows: sub_range(rng, last.rows.clone()),
            cols: sub_range(rng, last.cols.clone()),
        };
        views.push(v);
    }
    views
}

pub fn chain_bounds(ladder: &DistanceLadder, views: &[RangeMatrixView]) -> Vec<ViewBounds> {
    views.iter().map(|v| v.bounds(ladder)).collect()
}

/// Checks a witness against the path rules of its variant.
pub fn valid_witness(d: &DistanceMatrix, r: &DistanceRange, variant: Variant, w: &Walk) -> bool {
    let s = &w.steps;
    let (last_i, last_j) = (d.rows() - 1, d.cols() - 1);
    let ok = |p: &Position| r.contains(d.get(p.i, p.j));
    if s.first() != Some(&Position::new(0, 0)) || s.last() != Some(&Position::new(last_i, last_j)) {
        return false;
    }
    match variant {
        Variant::Strong => {
            s.iter().all(ok)
                && s.windows(2).all(|p| {
                    let (di, dj) = (
                        p[1].i as isize - p[0].i as isize,
                        p[1].j as isize - p[0].j as isize,
                    );
                    matches!((di, dj), (1, 0) | (0, 1) | (1, 1))
                })
        }
        Variant::Weak => {
            s.iter().all(ok)
                && s.windows(2)
                    .all(|p| p[0].i.abs_diff(p[1].i) + p[0].j.abs_diff(p[1].j) == 1)
        }
        Variant::Shortcut => {
            let monotone = s.windows(2).all(|p| p[1].i >= p[0].i && p[1].j >= p[0].j);
            let covered = (0..=last_j).all(|j| s.iter().any(|p| p.j == j && ok(p)));
            monotone && covered && ok(&s[0]) && ok(s.last().unwrap())
        }
    }
}
