//! Timing of the fast and naive algorithms on random-walk instances.

use std::time::Instant;

use frechet_gap_core::Variant;
use serde::Serialize;

use crate::compute::{compute, Algorithm, ComputeRequest, Measure};
use crate::error::{CliError, Result};
use crate::generate::{generate, GenParams, Kind};

#[derive(Debug, Clone)]
pub struct BenchParams {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub variant: Variant,
    pub measure: Measure,
    pub seed: u64,
    /// Largest `n` for which the naive algorithm also runs.
    pub naive_cutoff: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchRow {
    pub n: usize,
    pub fast_median_micros: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub naive_median_micros: Option<f64>,
    /// Fast median over the previous row's fast median.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    /// Whether fast and naive gave the same value on every trial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchReport {
    pub variant: &'static str,
    pub measure: &'static str,
    pub trials: usize,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    pub all_agree: bool,
}

pub fn bench(p: &BenchParams) -> Result<BenchReport> {
    if p.trials == 0 {
        return Err(CliError::Input("trials must be positive".into()));
    }
    if p.sizes.is_empty() || p.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Input(
            "sizes must be a non-empty ascending list".into(),
        ));
    }
    let k = p.sizes.len();
    let mut fast: Vec<Vec<f64>> = vec![Vec::with_capacity(p.trials); k];
    let mut naive: Vec<Vec<f64>> = vec![Vec::new(); k];
    let mut agree = vec![true; k];
    for trial in 0..p.trials {
        for (s, &n) in p.sizes.iter().enumerate() {
            let params = GenParams {
                kind: Kind::RandomWalk,
                n,
                outliers: 0,
                seed: p.seed.wrapping_add(trial as u64),
                ..GenParams::default()
            };
            let (a, b) = generate(&params)?;
            let req = ComputeRequest {
                measure: p.measure,
                variant: p.variant,
                algorithm: Algorithm::Auto,
                a,
                b,
                emit_walk: false,
                timing: false,
            };
            let (value, micros) = timed(&req)?;
            fast[s].push(micros);
            if n <= p.naive_cutoff {
                let (slow, micros) = timed(&ComputeRequest {
                    algorithm: Algorithm::Naive,
                    ..req
                })?;
                naive[s].push(micros);
                agree[s] &= slow.to_bits() == value.to_bits();
            }
        }
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(k);
    for (s, &n) in p.sizes.iter().enumerate() {
        let fast_median = median(&mut fast[s]);
        let ran_naive = !naive[s].is_empty();
        rows.push(BenchRow {
            n,
            fast_median_micros: fast_median,
            naive_median_micros: ran_naive.then(|| median(&mut naive[s])),
            ratio: rows.last().map(|r| fast_median / r.fast_median_micros),
            agree: ran_naive.then_some(agree[s]),
        });
    }
    Ok(BenchReport {
        variant: p.variant.name(),
        measure: p.measure.name(),
        trials: p.trials,
        seed: p.seed,
        all_agree: rows.iter().all(|r| r.agree != Some(false)),
        rows,
    })
}

fn timed(req: &ComputeRequest) -> Result<(f64, f64)> {
    let clock = Instant::now();
    let value = compute(req)?.value;
    Ok((value, clock.elapsed().as_secs_f64() * 1e6))
}

fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Plain-text table of a report.
pub fn table(r: &BenchReport) -> String {
    let mut out = format!("{} {} over {} trials\n", r.measure, r.variant, r.trials);
    out.push_str("       n    fast (us)   naive (us)   ratio  agree\n");
    for row in &r.rows {
        let opt =
            |v: Option<f64>, prec: usize| v.map_or("-".to_string(), |v| format!("{v:.prec$}"));
        out.push_str(&format!(
            "{:>8} {:>12.1} {:>12} {:>7} {:>6}\n",
            row.n,
            row.fast_median_micros,
            opt(row.naive_median_micros, 1),
            opt(row.ratio, 2),
            row.agree.map_or("-", |a| if a { "yes" } else { "NO" }),
        ));
    }
    out
}
