//! The sorted distance ladder and the variant thresholds that split it.
//!
//! Lower limits of a feasible range never exceed the smaller endpoint
//! distance, and upper limits never fall below the variant's Fréchet
//! distance. The ladder keeps the candidates on each side:
//!
//! * rows (`min side`): distances up to the smaller endpoint distance,
//!   descending, so row 0 is that endpoint distance;
//! * columns (`max side`): distances from the threshold upwards, ascending,
//!   so column 0 is the threshold.

use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::decisions::decide;
use crate::error::{Error, Result};
use crate::ranges::DistanceRange;
use crate::Variant;

/// Sorted, deduplicated distances of `d`.
pub fn sorted_distinct(d: &DistanceMatrix) -> Vec<f64> {
    let mut bits: Vec<u64> = d.values().iter().map(|v| v.to_bits()).collect();
    bits.sort_unstable();
    bits.dedup();
    bits.into_iter().map(f64::from_bits).collect()
}

/// The smallest distance `t` for which `[0, t]` is feasible for `variant`,
/// i.e. the plain, shortcut or weak Fréchet distance.
pub fn compute_threshold(d: &DistanceMatrix, variant: Variant) -> Result<f64> {
    let values = sorted_distinct(d);
    threshold_index(d, variant, &values).map(|idx| values[idx])
}

fn threshold_index(d: &DistanceMatrix, variant: Variant, values: &[f64]) -> Result<usize> {
    let feasible = |idx: usize| -> Result<bool> {
        Ok(decide(variant, d, &DistanceRange::up_to(values[idx])?).feasible)
    };
    let (mut lo, mut hi) = (0, values.len() - 1);
    if !feasible(hi)? {
        return Err(Error::Internal("largest distance is not feasible"));
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceLadder {
    values: Vec<f64>,
    m: usize,
    threshold_idx: usize,
    variant: Variant,
}

impl DistanceLadder {
    pub fn build(d: &DistanceMatrix, variant: Variant) -> Result<Self> {
        let values = sorted_distinct(d);
        let threshold_idx = threshold_index(d, variant, &values)?;
        let cap = d.start_distance().min(d.goal_distance());
        let m = values.partition_point(|&v| v <= cap);
        Ok(DistanceLadder {
            values,
            m,
            threshold_idx,
            variant,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// All distinct distances, ascending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of rows (candidate lower limits).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of columns (candidate upper limits).
    pub fn k(&self) -> usize {
        self.values.len() - self.threshold_idx
    }

    pub fn threshold(&self) -> f64 {
        self.values[self.threshold_idx]
    }

    /// The smaller endpoint distance, the value of row 0.
    pub fn min_cap(&self) -> f64 {
        self.values[self.m - 1]
    }

    /// Rows descend in value.
    #[inline]
    pub fn row_value(&self, row: usize) -> f64 {
        self.values[self.m - 1 - row]
    }

    /// Columns ascend in value.
    #[inline]
    pub fn col_value(&self, col: usize) -> f64 {
        self.values[self.threshold_idx + col]
    }

    /// Row values, largest first.
    pub fn min_side(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.values[..self.m].iter().rev().copied()
    }

    /// Column values, the threshold first.
    pub fn max_side(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.values[self.threshold_idx..].iter().copied()
    }

    pub fn row_of(&self, v: f64) -> Option<usize> {
        let idx = self.index_of(v)?;
        (idx < self.m).then(|| self.m - 1 - idx)
    }

    pub fn col_of(&self, v: f64) -> Option<usize> {
        let idx = self.index_of(v)?;
        (idx >= self.threshold_idx).then(|| idx - self.threshold_idx)
    }

    pub fn contains_value(&self, v: f64) -> bool {
        self.index_of(v).is_some()
    }

    fn index_of(&self, v: f64) -> Option<usize> {
        self.values.binary_search_by(|x| x.total_cmp(&v)).ok()
    }

    /// The range of cell `(row, col)`, or `None` when `s > t`.
    pub fn cell(&self, row: usize, col: usize) -> Option<DistanceRange> {
        DistanceRange::new(self.row_value(row), self.col_value(col)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::Curve;
    use crate::fixtures::outlier;

    const SQRT2: f64 = core::f64::consts::SQRT_2;

    fn unit_offset() -> DistanceMatrix {
        let a = Curve::new(&[[0.0, 0.0], [1.0, 0.0]]).unwrap();
        let b = Curve::new(&[[0.0, 1.0], [1.0, 1.0]]).unwrap();
        DistanceMatrix::between(&a, &b).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(
            compute_threshold(&unit_offset(), Variant::Strong).unwrap(),
            1.0
        );
        let d = outlier();
        assert_eq!(compute_threshold(&d, Variant::Shortcut).unwrap(), SQRT2);
        assert_eq!(compute_threshold(&d, Variant::Strong).unwrap(), 9.0);
    }

    #[test]
    fn ladder_examples() {
        let l = DistanceLadder::build(&unit_offset(), Variant::Strong).unwrap();
        assert_eq!(l.values(), &[1.0, SQRT2]);
        assert_eq!(l.min_side().collect::<Vec<_>>(), [1.0]);
        assert_eq!(l.max_side().collect::<Vec<_>>(), [1.0, SQRT2]);
        assert_eq!((l.m(), l.k()), (1, 2));
        assert_eq!((l.row_of(1.0), l.col_of(1.0)), (Some(0), Some(0)));

        let d = DistanceMatrix::from_rows(&[[5.0]]).unwrap();
        let l = DistanceLadder::build(&d, Variant::Weak).unwrap();
        assert_eq!((l.m(), l.k(), l.threshold()), (1, 1, 5.0));

        let l = DistanceLadder::build(&outlier(), Variant::Shortcut).unwrap();
        assert_eq!((l.row_value(0), l.col_value(0)), (1.0, SQRT2));
        assert_eq!(l.min_cap(), 1.0);
    }

    #[test]
    fn sides_are_ordered() {
        let l = DistanceLadder::build(&outlier(), Variant::Strong).unwrap();
        let rows: Vec<_> = l.min_side().collect();
        assert!(rows.windows(2).all(|w| w[0] > w[1]));
        let cols: Vec<_> = l.max_side().collect();
        assert!(cols.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(cols[0], 9.0);
        assert_eq!(
            l.cell(0, 0).map(|r| (r.lower(), r.upper())),
            Some((1.0, 9.0))
        );
        assert!(l
            .values()
            .iter()
            .filter(|&&v| v > 1.0 && v < 9.0)
            .all(|&v| { l.row_of(v).is_none() && l.col_of(v).is_none() }));
    }
}
