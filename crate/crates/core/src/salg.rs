//! Recursive search for the best feasible cell of the range matrix.
//!
//! The matrix has one row per candidate lower limit and one column per
//! candidate upper limit (see [`DistanceLadder`]). Cell `(r, c)` is the range
//! `[row_value(r), col_value(c)]`, and it contains every cell up-left of it,
//! so feasibility is monotone along rows and columns.
//!
//! Each call binary-searches the middle row of its view for the first
//! feasible column `j`, then recurses on the block above-right of `(i, j)`
//! and the block below-left of it. Everything else is either infeasible or
//! scores no better than `(i, j)`. Deciders are contracted to each sub-view
//! before recursing, so a range test costs time linear in the view size.

use alloc::vec::Vec;
use core::ops::Range;

use crate::curves::DistanceMatrix;
use crate::decisions::{decide, Decision, Walk};
use crate::error::{Error, Result};
use crate::ladder::DistanceLadder;
use crate::ranges::{DistanceRange, MonotoneScore};
use crate::Variant;

/// Half-open row and column index ranges over the ladder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeMatrixView {
    pub rows: Range<usize>,
    pub cols: Range<usize>,
}

impl RangeMatrixView {
    pub fn full(ladder: &DistanceLadder) -> Self {
        RangeMatrixView {
            rows: 0..ladder.m(),
            cols: 0..ladder.k(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() || self.cols.is_empty()
    }

    /// Rows plus columns.
    pub fn size(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn contains_view(&self, other: &RangeMatrixView) -> bool {
        self.rows.start <= other.rows.start
            && other.rows.end <= self.rows.end
            && self.cols.start <= other.cols.start
            && other.cols.end <= self.cols.end
    }

    /// Boundary values of a non-empty view.
    pub fn bounds(&self, ladder: &DistanceLadder) -> ViewBounds {
        debug_assert!(!self.is_empty());
        ViewBounds {
            s_lo: ladder.row_value(self.rows.end - 1),
            s_hi: ladder.row_value(self.rows.start),
            t_lo: ladder.col_value(self.cols.start),
            t_hi: ladder.col_value(self.cols.end - 1),
        }
    }
}

/// How a distance behaves for every range of a view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedClass {
    /// A row or column value of the view: valid for some ranges only.
    NonFixed,
    /// Inside every range of the view.
    FixedValid,
    /// Inside no range of the view.
    FixedInvalid,
}

/// The four limit values that pin down a view: lower limits span
/// `[s_lo, s_hi]`, upper limits span `[t_lo, t_hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewBounds {
    pub s_lo: f64,
    pub s_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl ViewBounds {
    /// Classifies a distance. Row and column values are contiguous runs of
    /// the ladder, so four comparisons suffice.
    #[inline]
    pub fn classify(&self, v: f64) -> FixedClass {
        if (self.s_lo <= v && v <= self.s_hi) || (self.t_lo <= v && v <= self.t_hi) {
            FixedClass::NonFixed
        } else if self.s_hi < v && v < self.t_lo {
            FixedClass::FixedValid
        } else {
            FixedClass::FixedInvalid
        }
    }

    /// True when `r` has its limits inside the view's limit spans.
    #[inline]
    pub fn admits(&self, r: &DistanceRange) -> bool {
        self.s_lo <= r.lower()
            && r.lower() <= self.s_hi
            && self.t_lo <= r.upper()
            && r.upper() <= self.t_hi
    }
}

/// Classifies a ladder value against a view.
pub fn classify(ladder: &DistanceLadder, view: &RangeMatrixView, v: f64) -> Result<FixedClass> {
    if !ladder.contains_value(v) {
        return Err(Error::UnknownValue);
    }
    if view.is_empty() {
        return Err(Error::Internal("classify on an empty view"));
    }
    Ok(view.bounds(ladder).classify(v))
}

/// A decision structure that can be shrunk to a sub-view of the range
/// matrix without changing any answer for ranges of that view.
pub trait ContractibleDecider: Sized {
    /// Feasibility of `range`, in time linear in [`size`](Self::size).
    fn feasible(&self, range: &DistanceRange) -> Result<bool>;

    /// Feasibility plus a witness walk over the structure's positions.
    fn decide(&self, range: &DistanceRange) -> Result<Decision>;

    /// A decider valid for every range admitted by `bounds`, built in time
    /// linear in [`size`](Self::size).
    fn contract(&self, bounds: &ViewBounds) -> Self;

    fn size(&self) -> usize;
}

/// Uses the plain decision procedure on the full matrix; contraction is
/// the identity.
#[derive(Debug, Clone, Copy)]
pub struct RawDecider<'a> {
    pub matrix: &'a DistanceMatrix,
    pub variant: Variant,
}

impl ContractibleDecider for RawDecider<'_> {
    fn feasible(&self, range: &DistanceRange) -> Result<bool> {
        Ok(decide(self.variant, self.matrix, range).feasible)
    }

    fn decide(&self, range: &DistanceRange) -> Result<Decision> {
        Ok(decide(self.variant, self.matrix, range))
    }

    fn contract(&self, _bounds: &ViewBounds) -> Self {
        *self
    }

    fn size(&self) -> usize {
        self.matrix.values().len()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SearchStats {
    /// Number of feasibility tests.
    pub decisions: usize,
    /// Summed size of the views handled at each recursion level.
    pub level_sizes: Vec<usize>,
    /// Every tested cell in order, when requested.
    pub cells: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub value: f64,
    pub range: DistanceRange,
    pub witness: Walk,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    pub trace_cells: bool,
}

struct Search<'a, G> {
    ladder: &'a DistanceLadder,
    score: &'a G,
    best: Option<(f64, usize, usize)>,
    stats: SearchStats,
}

impl<G: MonotoneScore> Search<'_, G> {
    fn test<D: ContractibleDecider>(
        &mut self,
        decider: &D,
        row: usize,
        col: usize,
    ) -> Result<bool> {
        let Some(range) = self.ladder.cell(row, col) else {
            // s > t: an empty range.
            return Ok(false);
        };
        self.stats.decisions += 1;
        if let Some(cells) = &mut self.stats.cells {
            cells.push((row, col));
        }
        decider.feasible(&range)
    }

    fn offer(&mut self, row: usize, col: usize) {
        let v = self
            .score
            .score(self.ladder.row_value(row), self.ladder.col_value(col));
        if self.best.is_none_or(|(b, _, _)| v < b) {
            self.best = Some((v, row, col));
        }
    }

    fn middle_row<D: ContractibleDecider>(
        &mut self,
        view: &RangeMatrixView,
        decider: &D,
        row: usize,
    ) -> Result<Option<usize>> {
        let (mut lo, mut hi) = (view.cols.start, view.cols.end - 1);
        if !self.test(decider, row, hi)? {
            return Ok(None);
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.test(decider, row, mid)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Ok(Some(lo))
    }

    fn recurse<D: ContractibleDecider>(
        &mut self,
        view: RangeMatrixView,
        decider: D,
        level: usize,
    ) -> Result<()> {
        if view.is_empty() {
            return Ok(());
        }
        if self.stats.level_sizes.len() <= level {
            self.stats.level_sizes.push(0);
        }
        self.stats.level_sizes[level] += view.size();

        let row = view.rows.start + (view.rows.len() - 1) / 2;
        match self.middle_row(&view, &decider, row)? {
            Some(col) => {
                self.offer(row, col);
                let upper = RangeMatrixView {
                    rows: view.rows.start..row,
                    cols: col..view.cols.end,
                };
                let lower = RangeMatrixView {
                    rows: row + 1..view.rows.end,
                    cols: view.cols.start..col,
                };
                let upper_g =
                    (!upper.is_empty()).then(|| decider.contract(&upper.bounds(self.ladder)));
                let lower_g =
                    (!lower.is_empty()).then(|| decider.contract(&lower.bounds(self.ladder)));
                drop(decider);
                if let Some(g) = upper_g {
                    self.recurse(upper, g, level + 1)?;
                }
                if let Some(g) = lower_g {
                    self.recurse(lower, g, level + 1)?;
                }
            }
            None => {
                // Rows at or above the middle one are infeasible in every column.
                let rest = RangeMatrixView {
                    rows: row + 1..view.rows.end,
                    cols: view.cols.clone(),
                };
                if !rest.is_empty() {
                    let g = decider.contract(&rest.bounds(self.ladder));
                    drop(decider);
                    self.recurse(rest, g, level + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Smallest score over feasible cells of the ladder's matrix.
///
/// `root` must decide every range correctly (the uncontracted structure);
/// it is contracted to the full view first and also produces the witness
/// for the winning range.
pub fn search_smallest_range<D, G>(
    ladder: &DistanceLadder,
    root: &D,
    score: &G,
    options: SearchOptions,
) -> Result<SearchOutcome>
where
    D: ContractibleDecider,
    G: MonotoneScore,
{
    let full = RangeMatrixView::full(ladder);
    let top = root.contract(&full.bounds(ladder));
    let mut search = Search {
        ladder,
        score,
        best: None,
        stats: SearchStats {
            cells: options.trace_cells.then(Vec::new),
            ..SearchStats::default()
        },
    };
    search.recurse(full, top, 0)?;
    finish(ladder, root, search.best, search.stats)
}

/// Binary search in every row with an uncontracted decider. Slower by a
/// factor of about `n / log n`; used to cross-check the recursive search.
pub fn rowwise_search<D, G>(ladder: &DistanceLadder, root: &D, score: &G) -> Result<SearchOutcome>
where
    D: ContractibleDecider,
    G: MonotoneScore,
{
    let mut search = Search {
        ladder,
        score,
        best: None,
        stats: SearchStats::default(),
    };
    let full = RangeMatrixView::full(ladder);
    for row in full.rows.clone() {
        if let Some(col) = search.middle_row(&full, root, row)? {
            search.offer(row, col);
        }
    }
    finish(ladder, root, search.best, search.stats)
}

fn finish<D: ContractibleDecider>(
    ladder: &DistanceLadder,
    root: &D,
    best: Option<(f64, usize, usize)>,
    stats: SearchStats,
) -> Result<SearchOutcome> {
    let (value, row, col) = best.ok_or(Error::Internal("no feasible cell in the range matrix"))?;
    let range = ladder
        .cell(row, col)
        .ok_or(Error::Internal("best cell is an empty range"))?;
    let witness = root
        .decide(&range)?
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
    use crate::fixtures::{outlier, random_matrix, rng};
    use crate::oracle::brute_force_smallest_range;
    use crate::ranges::RangeScore;

    const SQRT2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn classify_examples() {
        let d = outlier();
        let l = DistanceLadder::build(&d, Variant::Strong).unwrap();
        let full = RangeMatrixView::full(&l);
        // Strictly between the top row value 1 and the last column value 9.
        assert_eq!(classify(&l, &full, SQRT2).unwrap(), FixedClass::FixedValid);
        assert_eq!(classify(&l, &full, 1.0).unwrap(), FixedClass::NonFixed);
        assert_eq!(classify(&l, &full, 0.5), Err(Error::UnknownValue));

        // A view of the upper rows only: the smallest row value is out of every range.
        let l = DistanceLadder::build(&random_matrix(&mut rng(3), 8), Variant::Shortcut).unwrap();
        let m = l.m();
        if m >= 3 {
            let view = RangeMatrixView {
                rows: 0..m / 2 - 1,
                cols: 1..l.k(),
            };
            if !view.is_empty() {
                let smallest = l.row_value(m - 1);
                assert_eq!(
                    classify(&l, &view, smallest).unwrap(),
                    FixedClass::FixedInvalid
                );
                assert_eq!(
                    classify(&l, &view, l.row_value(0)).unwrap(),
                    FixedClass::NonFixed
                );
            }
        }
    }

    #[test]
    fn middle_row_cases() {
        let d = outlier();
        let l = DistanceLadder::build(&d, Variant::Shortcut).unwrap();
        let raw = RawDecider {
            matrix: &d,
            variant: Variant::Shortcut,
        };
        let mut s = Search {
            ladder: &l,
            score: &RangeScore::Gap,
            best: None,
            stats: SearchStats::default(),
        };
        // Single cell [1, √2] is feasible.
        let one = RangeMatrixView {
            rows: 0..1,
            cols: 0..1,
        };
        assert_eq!(s.middle_row(&one, &raw, 0).unwrap(), Some(0));

        // Search random instances for rows whose answer is the last column or none.
        let (mut last_seen, mut none_seen) = (false, false);
        let mut r = rng(99);
        for _ in 0..300 {
            let d = random_matrix(&mut r, 6);
            let l = DistanceLadder::build(&d, Variant::Shortcut).unwrap();
            let raw = RawDecider {
                matrix: &d,
                variant: Variant::Shortcut,
            };
            let full = RangeMatrixView::full(&l);
            let mut s = Search {
                ladder: &l,
                score: &RangeScore::Gap,
                best: None,
                stats: SearchStats::default(),
            };
            for row in full.rows.clone() {
                let expect = full.cols.clone().find(|&c| {
                    l.cell(row, c)
                        .is_some_and(|rg| crate::oracle::reach_bfs(&d, &rg, Variant::Shortcut))
                });
                let got = s.middle_row(&full, &raw, row).unwrap();
                assert_eq!(got, expect);
                last_seen |= l.k() > 1 && got == Some(l.k() - 1);
                none_seen |= got.is_none();
            }
        }
        assert!(last_seen && none_seen);
    }

    #[test]
    fn raw_search_matches_oracle() {
        let mut r = rng(5);
        for _ in 0..150 {
            let d = random_matrix(&mut r, 6);
            for variant in [Variant::Shortcut, Variant::Weak, Variant::Strong] {
                let l = DistanceLadder::build(&d, variant).unwrap();
                let raw = RawDecider {
                    matrix: &d,
                    variant,
                };
                for g in [RangeScore::Gap, RangeScore::Ratio] {
                    let (want, _) = brute_force_smallest_range(&d, variant, &g).unwrap();
                    let got =
                        search_smallest_range(&l, &raw, &g, SearchOptions::default()).unwrap();
                    assert_eq!(got.value, want, "{variant:?} {g:?}");
                    assert_eq!(rowwise_search(&l, &raw, &g).unwrap().value, want);
                    for (lvl, size) in got.stats.level_sizes.iter().enumerate() {
                        assert!(*size <= l.m() + l.k(), "level {lvl}");
                    }
                }
            }
        }
    }
}
