use std::fmt;

use crate::workload::{BenchRecord, WorkloadError};

pub const DEFAULT_SLOPE_BAND: f64 = 0.35;

/// The single parameter varied across a set of records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalingAxis {
    K,
    Mu,
    N,
}

impl ScalingAxis {
    fn value(self, r: &BenchRecord) -> usize {
        match self {
            ScalingAxis::K => r.k,
            ScalingAxis::Mu => r.mu,
            ScalingAxis::N => r.n,
        }
    }
}

impl fmt::Display for ScalingAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalingAxis::K => "k",
            ScalingAxis::Mu => "mu",
            ScalingAxis::N => "n",
        })
    }
}

/// Growth classes, as functions of `n`, used to place an instance against
/// the asymptotic regimes of the density comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthOrder {
    LogN,
    SqrtN,
    N,
    NLogN,
    NSqrtN,
    NSquared,
}

impl GrowthOrder {
    /// Classes used for `μ` and `m`.
    pub const DENSITY: [GrowthOrder; 6] = [
        GrowthOrder::LogN,
        GrowthOrder::SqrtN,
        GrowthOrder::N,
        GrowthOrder::NLogN,
        GrowthOrder::NSqrtN,
        GrowthOrder::NSquared,
    ];
    /// Classes used for `k`.
    pub const LENGTH: [GrowthOrder; 4] = [
        GrowthOrder::LogN,
        GrowthOrder::SqrtN,
        GrowthOrder::N,
        GrowthOrder::NSquared,
    ];

    fn ln_at(self, n: f64) -> f64 {
        let ln = n.ln();
        match self {
            GrowthOrder::LogN => ln.ln(),
            GrowthOrder::SqrtN => 0.5 * ln,
            GrowthOrder::N => ln,
            GrowthOrder::NLogN => ln + ln.ln(),
            GrowthOrder::NSqrtN => 1.5 * ln,
            GrowthOrder::NSquared => 2.0 * ln,
        }
    }

    /// The candidate closest to `value` on a log scale at this `n`.
    pub fn classify(value: usize, n: usize, candidates: &[GrowthOrder]) -> GrowthOrder {
        let n = (n as f64).max(3.0);
        let target = (value as f64).max(1.0).ln();
        *candidates
            .iter()
            .min_by(|a, b| {
                let da = (a.ln_at(n) - target).abs();
                let db = (b.ln_at(n) - target).abs();
                da.total_cmp(&db)
            })
            .expect("candidate list is non-empty")
    }
}

impl fmt::Display for GrowthOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthOrder::LogN => "log n",
            GrowthOrder::SqrtN => "sqrt n",
            GrowthOrder::N => "n",
            GrowthOrder::NLogN => "n log n",
            GrowthOrder::NSqrtN => "n sqrt n",
            GrowthOrder::NSquared => "n^2",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegimeRow {
    pub n: usize,
    pub k: usize,
    pub mu: usize,
    pub m: usize,
    pub wall_time_ns: u128,
    pub mu_order: GrowthOrder,
    pub m_order: GrowthOrder,
    pub k_order: GrowthOrder,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingReport {
    pub axis: ScalingAxis,
    /// Least-squares slope of `ln(time)` against `ln(axis value)`.
    pub slope: f64,
    pub band: f64,
    /// Set when `|slope - 1| > band`.
    pub flagged: bool,
    pub rows: Vec<RegimeRow>,
}

pub fn scaling_report(records: &[BenchRecord]) -> Result<ScalingReport, WorkloadError> {
    scaling_report_with_band(records, DEFAULT_SLOPE_BAND)
}

pub fn scaling_report_with_band(
    records: &[BenchRecord],
    band: f64,
) -> Result<ScalingReport, WorkloadError> {
    let varied: Vec<ScalingAxis> = [ScalingAxis::K, ScalingAxis::Mu, ScalingAxis::N]
        .into_iter()
        .filter(|&axis| {
            records
                .iter()
                .any(|r| axis.value(r) != axis.value(&records[0]))
        })
        .collect();
    let axis = match varied.as_slice() {
        [axis] => *axis,
        [] => ScalingAxis::K,
        _ => {
            return Err(WorkloadError::MixedAxes(
                varied.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
            ))
        }
    };
    let mut distinct: Vec<usize> = records.iter().map(|r| axis.value(r)).collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(WorkloadError::InsufficientData {
            axis: axis.to_string(),
            distinct: distinct.len(),
        });
    }
    if distinct[0] == 0 {
        return Err(WorkloadError::InvalidSpec(format!(
            "cannot fit a log-log slope with {axis} = 0"
        )));
    }

    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|r| {
            let x = (axis.value(r) as f64).ln();
            let y = (r.wall_time.as_nanos().max(1) as f64).ln();
            (x, y)
        })
        .collect();
    let slope = least_squares_slope(&points);

    let rows = records
        .iter()
        .map(|r| RegimeRow {
            n: r.n,
            k: r.k,
            mu: r.mu,
            m: r.m,
            wall_time_ns: r.wall_time.as_nanos(),
            mu_order: GrowthOrder::classify(r.mu, r.n, &GrowthOrder::DENSITY),
            m_order: GrowthOrder::classify(r.m, r.n, &GrowthOrder::DENSITY),
            k_order: GrowthOrder::classify(r.k, r.n, &GrowthOrder::LENGTH),
        })
        .collect();
    Ok(ScalingReport {
        axis,
        slope,
        band,
        flagged: (slope - 1.0).abs() > band,
        rows,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

impl fmt::Display for ScalingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "axis={} slope={:.3} band=±{:.2} {}",
            self.axis,
            self.slope,
            self.band,
            if self.flagged { "FLAGGED" } else { "ok" }
        )?;
        writeln!(
            f,
            "{:>8} {:>8} {:>6} {:>10} {:>14}  {:<10} {:<10} {:<8}",
            "n", "k", "mu", "m", "wall_ns", "mu~", "m~", "k~"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>8} {:>8} {:>6} {:>10} {:>14}  {:<10} {:<10} {:<8}",
                r.n,
                r.k,
                r.mu,
                r.m,
                r.wall_time_ns,
                r.mu_order.to_string(),
                r.m_order.to_string(),
                r.k_order.to_string()
            )?;
        }
        Ok(())
    }
}
