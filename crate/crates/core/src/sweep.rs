//! Two-pointer sweep for the plain (strong) variant.
//!
//! Lower limits are visited in increasing order. The smallest feasible upper
//! limit can only grow as the lower limit grows, so a single column pointer
//! walks the max side once. Every step is one reachability test, for
//! `O((m + k) * p * q)` work overall.
//!
//! Between consecutive tests only the validity of positions whose distance
//! equals the new limit changes. An incremental reachability structure that
//! handles single-position flips can replace [`strong_decide`] here without
//! touching the sweep itself.

use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::decisions::strong_decide;
use crate::error::{Error, Result};
use crate::ladder::DistanceLadder;
use crate::ranges::MonotoneScore;
use crate::salg::{SearchOutcome, SearchStats};
use crate::Variant;

/// Smallest score over feasible plain ranges.
pub fn plain_range_search(d: &DistanceMatrix, g: &impl MonotoneScore) -> Result<SearchOutcome> {
    let ladder = DistanceLadder::build(d, Variant::Strong)?;
    let (m, k) = (ladder.m(), ladder.k());
    let mut stats = SearchStats {
        level_sizes: Vec::new(),
        ..SearchStats::default()
    };
    let mut best: Option<(f64, usize, usize)> = None;
    let mut col = 0;
    for row in (0..m).rev() {
        while col < k {
            let feasible = match ladder.cell(row, col) {
                Some(r) => {
                    stats.decisions += 1;
                    strong_decide(d, &r).feasible
                }
                None => false,
            };
            if feasible {
                break;
            }
            col += 1;
        }
        if col == k {
            break;
        }
        let v = g.score(ladder.row_value(row), ladder.col_value(col));
        if best.is_none_or(|(b, _, _)| v < b) {
            best = Some((v, row, col));
        }
    }
    let (value, row, col) = best.ok_or(Error::Internal("no feasible plain range"))?;
    let range = ladder
        .cell(row, col)
        .ok_or(Error::Internal("best cell is an empty range"))?;
    let witness = strong_decide(d, &range)
        .witness
        .ok_or(Error::Internal("best range failed its witness decision"))?;
    Ok(SearchOutcome {
        value,
        range,
        witness,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{matrix, outlier, random_matrix, rng};
    use crate::oracle::brute_force_smallest_range;
    use crate::ranges::{DistanceRange, RangeScore};

    #[test]
    fn outlier_gap() {
        let out = plain_range_search(&outlier(), &RangeScore::Gap).unwrap();
        assert_eq!(out.value, 8.0);
        assert_eq!(out.range, DistanceRange::new(1.0, 9.0).unwrap());
    }

    #[test]
    fn unit_offset_and_identical() {
        let a = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]];
        let b = [[0.0, 1.0], [1.0, 1.0], [2.0, 1.0]];
        let out = plain_range_search(&matrix(&a, &b), &RangeScore::Gap).unwrap();
        assert_eq!(
            (out.value, out.range),
            (0.0, DistanceRange::new(1.0, 1.0).unwrap())
        );
        let out = plain_range_search(&matrix(&a, &a), &RangeScore::Gap).unwrap();
        assert_eq!(
            (out.value, out.range),
            (0.0, DistanceRange::new(0.0, 0.0).unwrap())
        );
        assert_eq!(out.witness.steps.len(), 3);
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut r = rng(21);
        for _ in 0..300 {
            let d = random_matrix(&mut r, 7);
            for g in [RangeScore::Gap, RangeScore::Ratio] {
                let out = plain_range_search(&d, &g).unwrap();
                let (v, _) = brute_force_smallest_range(&d, Variant::Strong, &g).unwrap();
                assert_eq!(out.value, v);
                assert!(strong_decide(&d, &out.range).feasible);
            }
        }
    }

    #[test]
    fn symmetric_and_bounded() {
        let mut r = rng(22);
        for _ in 0..200 {
            let d = random_matrix(&mut r, 7);
            let out = plain_range_search(&d, &RangeScore::Gap).unwrap();
            let back = plain_range_search(&d.transpose(), &RangeScore::Gap).unwrap();
            assert_eq!(out.value, back.value);
            let ladder = DistanceLadder::build(&d, Variant::Strong).unwrap();
            assert!(out.value <= ladder.threshold());
        }
    }

    #[test]
    fn tests_at_most_one_pass() {
        let mut r = rng(23);
        for _ in 0..100 {
            let d = random_matrix(&mut r, 9);
            let ladder = DistanceLadder::build(&d, Variant::Strong).unwrap();
            let out = plain_range_search(&d, &RangeScore::Gap).unwrap();
            assert!(out.stats.decisions <= ladder.m() + ladder.k());
        }
    }
}
