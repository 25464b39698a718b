//! Random evolving-graph generators and the scaling benchmark harness.

mod bench;
mod generate;
mod report;

use std::io::BufRead;

use thiserror::Error;

pub use self::bench::{bench_graph, bench_grid, bench_grid_with, write_csv, BenchOptions, BenchRecord, CSV_HEADER};
pub use self::generate::{generate, ArcModel, GeneratorSpec};
pub use self::report::{
    scaling_report, scaling_report_with_band, GrowthOrder, RegimeRow, ScalingAxis, ScalingReport,
    DEFAULT_SLOPE_BAND,
};

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum WorkloadError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("need at least 3 distinct values of {axis}, got {distinct}")]
    InsufficientData { axis: String, distinct: usize },
    #[error("records vary more than one axis ({0})")]
    MixedAxes(String),
    #[error("line {line}: {message}")]
    GridSyntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub const GRID_HEADER: &str = "n,k,model,value,seed";

/// Reads a grid of generator specs.
///
/// ```text
/// n,k,model,value,seed
/// 2000,64,mu,8,1
/// 20,10,p,0.2,7
/// ```
///
/// `model` is `mu` (fixed arcs per step) or `p` (per-step arc probability).
pub fn read_grid<R: BufRead>(reader: R) -> Result<Vec<GeneratorSpec>, WorkloadError> {
    let mut specs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') || (line_no == 1 && text == GRID_HEADER) {
            continue;
        }
        let err = |message: String| WorkloadError::GridSyntax {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        let [n, k, model, value, seed] = fields.as_slice() else {
            return Err(err(format!("expected 5 fields `{GRID_HEADER}`, got `{text}`")));
        };
        let int = |s: &str, what: &str| {
            s.parse::<u64>()
                .map_err(|_| err(format!("{what} `{s}` is not a non-negative integer")))
        };
        let n = int(n, "n")? as usize;
        let k = int(k, "k")? as usize;
        let seed = int(seed, "seed")?;
        let model = match *model {
            "mu" => ArcModel::FixedMu {
                mu: int(value, "mu")? as usize,
            },
            "p" => ArcModel::PerStepBernoulli {
                p: value
                    .parse()
                    .map_err(|_| err(format!("p `{value}` is not a number")))?,
            },
            other => return Err(err(format!("unknown model `{other}`, expected `mu` or `p`"))),
        };
        let spec = GeneratorSpec { n, k, model, seed };
        spec.validate().map_err(|e| err(e.to_string()))?;
        specs.push(spec);
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let text = "n,k,model,value,seed\n2000,64,mu,8,1\n# note\n20,10,p,0.2,7\n";
        let specs = read_grid(text.as_bytes()).unwrap();
        assert_eq!(
            specs,
            vec![
                GeneratorSpec::fixed_mu(2000, 64, 8, 1),
                GeneratorSpec::bernoulli(20, 10, 0.2, 7)
            ]
        );
    }

    #[test]
    fn grid_errors_name_lines() {
        for (text, line) in [
            ("n,k,model,value,seed\n1,2,3\n", 2),
            ("5,2,q,1,1\n", 1),
            ("5,2,p,2.0,1\n", 1),
            ("5,x,mu,1,1\n", 1),
        ] {
            match read_grid(text.as_bytes()) {
                Err(WorkloadError::GridSyntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
