//! Request dispatch from measure, variant and algorithm to the core searches.

use std::time::Instant;

use frechet_gap_core::decisions::decide;
use frechet_gap_core::ladder::sorted_distinct;
use frechet_gap_core::salg::{rowwise_search, search_smallest_range, RawDecider, SearchOptions};
use frechet_gap_core::shortcut_graph::ShortcutGraph;
use frechet_gap_core::sweep::plain_range_search;
use frechet_gap_core::weak_maze::WeakMaze;
use frechet_gap_core::{
    Curve, DistanceLadder, DistanceMatrix, DistanceRange, RangeScore, SearchOutcome, Variant, Walk,
};
use serde::{Serialize, Serializer};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Measure {
    Frechet,
    Gap,
    Ratio,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::Frechet => "frechet",
            Measure::Gap => "gap",
            Measure::Ratio => "ratio",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VariantArg {
    Plain,
    Shortcut,
    Weak,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Plain => Variant::Strong,
            VariantArg::Shortcut => Variant::Shortcut,
            VariantArg::Weak => Variant::Weak,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Auto,
    Naive,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Resolved {
    /// Binary search over the distances, or the recursive range search.
    Fast,
    /// Linear scan over the distances, or binary search in every row.
    Naive,
    /// Two-pointer sweep for plain ranges.
    Sweep,
}

impl Resolved {
    fn name(self) -> &'static str {
        match self {
            Resolved::Fast => "fast",
            Resolved::Naive => "naive",
            Resolved::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ComputeRequest {
    pub measure: Measure,
    pub variant: Variant,
    pub algorithm: Algorithm,
    pub a: Curve,
    pub b: Curve,
    pub emit_walk: bool,
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RangeOut {
    pub s: f64,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Stats {
    pub n_a: usize,
    pub n_b: usize,
    pub ladder_m: usize,
    pub ladder_k: usize,
    pub decisions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComputeResult {
    pub measure: &'static str,
    pub variant: &'static str,
    pub algorithm: &'static str,
    #[serde(serialize_with = "extended_real")]
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub range: Option<RangeOut>,
    /// 1-based `[i, j]` positions.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<[usize; 2]>>,
    pub stats: Stats,
}

/// Finite values as numbers, infinity as the string `"inf"`.
fn extended_real<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
    }
}

struct Found {
    value: f64,
    range: Option<DistanceRange>,
    witness: Walk,
    decisions: usize,
    m: usize,
    k: usize,
}

pub fn compute(req: &ComputeRequest) -> Result<ComputeResult> {
    let d = DistanceMatrix::between(&req.a, &req.b)?;
    let resolved = resolve(req.measure, req.variant, req.algorithm)?;
    let clock = Instant::now();
    let found = match req.measure {
        Measure::Frechet => frechet(&d, req.variant, resolved)?,
        Measure::Gap => best_range(&d, req.variant, resolved, RangeScore::Gap)?,
        Measure::Ratio => best_range(&d, req.variant, resolved, RangeScore::Ratio)?,
    };
    let elapsed = clock.elapsed();
    Ok(ComputeResult {
        measure: req.measure.name(),
        variant: req.variant.name(),
        algorithm: resolved.name(),
        value: found.value,
        range: found.range.map(|r| RangeOut {
            s: r.lower(),
            t: r.upper(),
        }),
        walk: req.emit_walk.then(|| {
            found
                .witness
                .steps
                .iter()
                .map(|p| [p.i + 1, p.j + 1])
                .collect()
        }),
        stats: Stats {
            n_a: d.rows(),
            n_b: d.cols(),
            ladder_m: found.m,
            ladder_k: found.k,
            decisions: found.decisions,
            elapsed_micros: req.timing.then_some(elapsed.as_micros() as u64),
        },
    })
}

fn resolve(measure: Measure, variant: Variant, algorithm: Algorithm) -> Result<Resolved> {
    Ok(match (measure, variant, algorithm) {
        (Measure::Frechet, _, Algorithm::Naive) => Resolved::Naive,
        (Measure::Frechet, _, _) => Resolved::Fast,
        (_, Variant::Strong, Algorithm::Fast) => {
            return Err(CliError::Unsupported("plain", measure.name()))
        }
        (_, Variant::Strong, _) => Resolved::Sweep,
        (_, _, Algorithm::Naive) => Resolved::Naive,
        _ => Resolved::Fast,
    })
}

fn frechet(d: &DistanceMatrix, variant: Variant, how: Resolved) -> Result<Found> {
    let values = sorted_distinct(d);
    let mut decisions = 0;
    let mut feasible = |idx: usize| -> Result<bool> {
        decisions += 1;
        Ok(decide(variant, d, &DistanceRange::up_to(values[idx])?).feasible)
    };
    let idx = if how == Resolved::Naive {
        let mut found = None;
        for idx in 0..values.len() {
            if feasible(idx)? {
                found = Some(idx);
                break;
            }
        }
        found.ok_or_else(|| CliError::Internal("largest distance is not feasible".into()))?
    } else {
        let (mut lo, mut hi) = (0, values.len() - 1);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if feasible(mid)? {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    };
    let value = values[idx];
    let witness = decide(variant, d, &DistanceRange::up_to(value)?)
        .witness
        .ok_or_else(|| CliError::Internal("the Frechet distance is not feasible".into()))?;
    let cap = d.start_distance().min(d.goal_distance());
    let m = values.partition_point(|&v| v <= cap);
    Ok(Found {
        value,
        range: None,
        witness,
        decisions,
        m,
        k: values.len() - idx,
    })
}

fn best_range(d: &DistanceMatrix, variant: Variant, how: Resolved, g: RangeScore) -> Result<Found> {
    let ladder = DistanceLadder::build(d, variant)?;
    let options = SearchOptions::default();
    let out: SearchOutcome = match (variant, how) {
        (Variant::Strong, _) => plain_range_search(d, &g)?,
        (_, Resolved::Naive) => rowwise_search(&ladder, &RawDecider { matrix: d, variant }, &g)?,
        (Variant::Shortcut, _) => {
            search_smallest_range(&ladder, &ShortcutGraph::build(d), &g, options)?
        }
        (Variant::Weak, _) => search_smallest_range(&ladder, &WeakMaze::build(d), &g, options)?,
    };
    Ok(Found {
        value: out.value,
        range: Some(out.range),
        witness: out.witness,
        decisions: out.stats.decisions,
        m: ladder.m(),
        k: ladder.k(),
    })
}

/// One-line human summary, optionally with ANSI colour.
pub fn summary(r: &ComputeResult, color: bool) -> String {
    let (bold, reset) = if color {
        ("\x1b[1m", "\x1b[0m")
    } else {
        ("", "")
    };
    let range = r
        .range
        .map_or(String::new(), |g| format!(" on [{}, {}]", g.s, g.t));
    format!(
        "{} ({}, {}): {bold}{}{reset}{range}, {} decisions over {}x{} positions",
        r.measure, r.variant, r.algorithm, r.value, r.stats.decisions, r.stats.n_a, r.stats.n_b
    )
}
