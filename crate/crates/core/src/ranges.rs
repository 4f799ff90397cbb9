//! Distance ranges and the monotone scores minimized over feasible ranges.

use crate::error::{Error, Result};

/// A closed interval `[s, t]` of distances with `0 <= s <= t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceRange {
    s: f64,
    t: f64,
}

impl DistanceRange {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        if s >= 0.0 && s <= t {
            Ok(DistanceRange { s, t })
        } else {
            Err(Error::InvalidRange)
        }
    }

    /// The range `[0, t]`.
    pub fn up_to(delta: f64) -> Result<Self> {
        Self::new(0.0, delta)
    }

    pub fn lower(&self) -> f64 {
        self.s
    }

    pub fn upper(&self) -> f64 {
        self.t
    }

    #[inline]
    pub fn contains(&self, v: f64) -> bool {
        self.s <= v && v <= self.t
    }

    /// True when `other` lies inside `self`.
    pub fn includes(&self, other: &DistanceRange) -> bool {
        self.s <= other.s && other.t <= self.t
    }
}

/// A score `g(s, t)` with `g(a, b) <= g(c, d)` whenever `c <= a <= b <= d`.
///
/// The searches never look inside the score; they only compare values it
/// returns for feasible ranges. `f64::INFINITY` is a legal score.
pub trait MonotoneScore {
    fn score(&self, s: f64, t: f64) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RangeScore {
    /// `t - s`
    Gap,
    /// `t / s`, with `0/0 = 1` and `t/0 = +∞`.
    Ratio,
}

impl RangeScore {
    pub fn name(self) -> &'static str {
        match self {
            RangeScore::Gap => "gap",
            RangeScore::Ratio => "ratio",
        }
    }

    pub fn of(self, range: &DistanceRange) -> f64 {
        self.score(range.s, range.t)
    }
}

impl MonotoneScore for RangeScore {
    fn score(&self, s: f64, t: f64) -> f64 {
        match self {
            RangeScore::Gap => t - s,
            RangeScore::Ratio if s == 0.0 => {
                if t == 0.0 {
                    1.0
                } else {
                    f64::INFINITY
                }
            }
            RangeScore::Ratio => t / s,
        }
    }
}
