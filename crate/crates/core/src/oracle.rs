//! Slow reference implementations used to check the real algorithms.
//!
//! Nothing here shares code with [`crate::decisions`], [`crate::ladder`] or
//! the searches; each function works straight from the definitions of
//! reachable, s-reachable and w-reachable positions.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::ranges::{DistanceRange, MonotoneScore};
use crate::Variant;

/// Is the last position reachable from the first w.r.t. `r`?
pub fn reach_bfs(d: &DistanceMatrix, r: &DistanceRange, variant: Variant) -> bool {
    match variant {
        Variant::Strong => bfs(d, r, &[(1, 0), (0, 1), (1, 1)]),
        Variant::Weak => bfs(d, r, &[(1, 0), (0, 1), (-1, 0), (0, -1)]),
        Variant::Shortcut => coverage(d, r),
    }
}

fn bfs(d: &DistanceMatrix, r: &DistanceRange, moves: &[(isize, isize)]) -> bool {
    let (rows, cols) = (d.rows() as isize, d.cols() as isize);
    let ok = |i: isize, j: isize| {
        (0..rows).contains(&i)
            && (0..cols).contains(&j)
            && r.contains(d.get(i as usize, j as usize))
    };
    if !ok(0, 0) {
        return false;
    }
    let mut seen = vec![false; (rows * cols) as usize];
    seen[0] = true;
    let mut queue = VecDeque::from([(0isize, 0isize)]);
    while let Some((i, j)) = queue.pop_front() {
        if (i, j) == (rows - 1, cols - 1) {
            return true;
        }
        for &(di, dj) in moves {
            let (ni, nj) = (i + di, j + dj);
            if ok(ni, nj) && !seen[(ni * cols + nj) as usize] {
                seen[(ni * cols + nj) as usize] = true;
                queue.push_back((ni, nj));
            }
        }
    }
    false
}

/// s-reachability as a column-by-column DP.
///
/// `(i, j)` is s-reachable iff it is valid and some s-reachable position of
/// column `j - 1` has row `<= i` (column 0: iff `(0, 0)` is valid). A path in
/// the position graph between the two can climb through invalid positions,
/// which the definition permits.
fn coverage(d: &DistanceMatrix, r: &DistanceRange) -> bool {
    let (rows, cols) = (d.rows(), d.cols());
    let valid = |i: usize, j: usize| r.contains(d.get(i, j));
    if !valid(0, 0) {
        return false;
    }
    let mut prev: Vec<bool> = (0..rows).map(|i| valid(i, 0)).collect();
    for j in 1..cols {
        let mut any_below = false;
        let mut cur = vec![false; rows];
        for i in 0..rows {
            any_below |= prev[i];
            cur[i] = any_below && valid(i, j);
        }
        prev = cur;
    }
    prev[rows - 1]
}

/// Smallest score over feasible ranges whose limits are pairwise distances,
/// by exhaustive enumeration.
///
/// Lower limits are restricted to distances not above both endpoint
/// distances (any larger `s` makes an endpoint invalid). Ties go to the
/// smaller `t`, then the larger `s`.
pub fn brute_force_smallest_range(
    d: &DistanceMatrix,
    variant: Variant,
    g: &impl MonotoneScore,
) -> Option<(f64, DistanceRange)> {
    let values = distinct(d);
    let cap = d.start_distance().min(d.goal_distance());
    let lows = values.iter().copied().filter(|&v| v <= cap);
    best_over(d, variant, g, lows, &values)
}

/// Like [`brute_force_smallest_range`] but with no restriction at all on
/// the lower limit.
pub fn brute_force_all_pairs(
    d: &DistanceMatrix,
    variant: Variant,
    g: &impl MonotoneScore,
) -> Option<(f64, DistanceRange)> {
    let values = distinct(d);
    best_over(d, variant, g, values.iter().copied(), &values)
}

/// Best score over arbitrary candidate limits (need not be distances).
pub fn best_over_candidates(
    d: &DistanceMatrix,
    variant: Variant,
    g: &impl MonotoneScore,
    candidates: &[f64],
) -> Option<(f64, DistanceRange)> {
    let mut c = candidates.to_vec();
    c.sort_by(f64::total_cmp);
    c.dedup();
    best_over(d, variant, g, c.iter().copied(), &c)
}

fn best_over(
    d: &DistanceMatrix,
    variant: Variant,
    g: &impl MonotoneScore,
    lows: impl Iterator<Item = f64>,
    highs: &[f64],
) -> Option<(f64, DistanceRange)> {
    let mut best: Option<(f64, DistanceRange)> = None;
    for s in lows {
        for &t in highs.iter().filter(|&&t| t >= s) {
            let Ok(r) = DistanceRange::new(s, t) else {
                continue;
            };
            if !reach_bfs(d, &r, variant) {
                continue;
            }
            let v = g.score(s, t);
            let better = match &best {
                None => true,
                Some((bv, br)) => {
                    v < *bv || (v == *bv && (t < br.upper() || (t == br.upper() && s > br.lower())))
                }
            };
            if better {
                best = Some((v, r));
            }
            // Larger t for the same s only scores worse.
            break;
        }
    }
    best
}

fn distinct(d: &DistanceMatrix) -> Vec<f64> {
    let mut v = d.values().to_vec();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Curve;
    use crate::ranges::RangeScore;

    const SQRT2: f64 = core::f64::consts::SQRT_2;

    fn matrix(a: &[[f64; 2]], b: &[[f64; 2]]) -> DistanceMatrix {
        DistanceMatrix::between(&Curve::new(a).unwrap(), &Curve::new(b).unwrap()).unwrap()
    }

    fn outlier() -> DistanceMatrix {
        matrix(
            &[[0.0, 1.0], [1.0, 1.0], [2.0, 9.0], [3.0, 1.0]],
            &[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]],
        )
    }

    #[test]
    fn identity_curves_at_zero() {
        let zigzag = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]];
        let d = matrix(&zigzag, &zigzag);
        let r = DistanceRange::new(0.0, 0.0).unwrap();
        assert!(reach_bfs(&d, &r, Variant::Strong));
        assert!(reach_bfs(&d, &r, Variant::Shortcut));
        // Without diagonal moves the weak frogs must stand apart for a moment.
        assert!(!reach_bfs(&d, &r, Variant::Weak));

        let single = [[2.0, 3.0]];
        let d = matrix(&single, &single);
        assert!(reach_bfs(&d, &r, Variant::Weak));
    }

    #[test]
    fn small_examples() {
        let d = matrix(&[[0.0, 0.0], [1.0, 0.0]], &[[0.0, 1.0], [1.0, 1.0]]);
        assert!(reach_bfs(
            &d,
            &DistanceRange::new(1.0, 1.0).unwrap(),
            Variant::Strong
        ));
        let line = [[0.0, 0.0], [1.0, 0.0]];
        let d = matrix(&line, &line);
        assert!(!reach_bfs(
            &d,
            &DistanceRange::new(0.0, 0.0).unwrap(),
            Variant::Weak
        ));
    }

    #[test]
    fn outlier_shortcut_gap() {
        let d = outlier();
        let (v, r) = brute_force_smallest_range(&d, Variant::Shortcut, &RangeScore::Gap).unwrap();
        assert_eq!(v, SQRT2 - 1.0);
        assert_eq!((r.lower(), r.upper()), (1.0, SQRT2));
        let (v2, _) = brute_force_all_pairs(&d, Variant::Shortcut, &RangeScore::Gap).unwrap();
        assert_eq!(v2, v);

        let (v, r) = brute_force_smallest_range(&d, Variant::Strong, &RangeScore::Gap).unwrap();
        assert_eq!((v, r.lower(), r.upper()), (8.0, 1.0, 9.0));
    }

    #[test]
    fn identity_and_single_point() {
        let a = [[0.0, 0.0], [1.0, 2.0], [4.0, 1.0]];
        let d = matrix(&a, &a);
        for v in [Variant::Strong, Variant::Shortcut] {
            let (g, r) = brute_force_smallest_range(&d, v, &RangeScore::Gap).unwrap();
            assert_eq!((g, r.lower(), r.upper()), (0.0, 0.0, 0.0));
        }
        let d = DistanceMatrix::from_rows(&[[2.5]]).unwrap();
        for v in Variant::ALL {
            let (g, r) = brute_force_smallest_range(&d, v, &RangeScore::Ratio).unwrap();
            assert_eq!((g, r.lower(), r.upper()), (1.0, 2.5, 2.5));
        }
    }
}
