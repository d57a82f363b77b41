//! Parameter sweeps over seeded instances, summarized by quartiles.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::core::CostFunction;
use crate::datasets::{
    generate_geometric_instance, generate_partition_instance, GeometricDatasetParams,
    PartitionDatasetParams,
};
use crate::engine::{preprocess, PreprocessConfig, RunReport};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Partition,
    Geometric,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partition" => Ok(Family::Partition),
            "geometric" => Ok(Family::Geometric),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}

/// The swept parameter. For the geometric family `N` is the number of points
/// per vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    Alpha,
    Beta,
    Sigma,
    N,
}

impl SweepParam {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::Sigma => "sigma",
            SweepParam::N => "n",
        }
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(SweepParam::Alpha),
            "beta" => Ok(SweepParam::Beta),
            "sigma" => Ok(SweepParam::Sigma),
            "n" => Ok(SweepParam::N),
            _ => Err(Error::InvalidArgument(format!("unknown parameter `{s}`"))),
        }
    }
}

/// A sweep: one parameter over a list of values, the rest fixed.
#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub family: Family,
    pub param: SweepParam,
    pub values: Vec<f64>,
    /// Block scale of the partition family.
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub sigma: f64,
    pub points_per_vertex: usize,
    /// Seeds `base_seed, base_seed + 1, …`.
    pub seeds: usize,
    pub base_seed: u64,
    pub config: PreprocessConfig,
}

impl ExperimentSpec {
    pub fn new(family: Family, param: SweepParam, values: Vec<f64>) -> Self {
        ExperimentSpec {
            family,
            param,
            values,
            n: 1,
            alpha: 0.5,
            beta: 0.5,
            sigma: 0.05,
            points_per_vertex: 5,
            seeds: 30,
            base_seed: 0,
            config: PreprocessConfig::default(),
        }
    }

    fn check(&self) -> Result<()> {
        let ok = matches!(
            (self.family, self.param),
            (Family::Partition, SweepParam::Alpha | SweepParam::Beta | SweepParam::N)
                | (Family::Geometric, SweepParam::Sigma | SweepParam::N)
        );
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "{} cannot be swept for this family",
                self.param.as_str()
            )));
        }
        if self.param == SweepParam::N {
            if let Some(v) = self.values.iter().find(|v| v.fract() != 0.0 || **v < 1.0) {
                return Err(Error::InvalidParameter(format!("n = {v} is not a positive integer")));
            }
        }
        Ok(())
    }

    /// The instance for one swept value and seed.
    pub fn instance(&self, value: f64, seed: u64) -> Result<CostFunction> {
        match self.family {
            Family::Partition => {
                let mut p = PartitionDatasetParams {
                    n: self.n,
                    alpha: self.alpha,
                    beta: self.beta,
                    seed,
                };
                match self.param {
                    SweepParam::Alpha => p.alpha = value,
                    SweepParam::Beta => p.beta = value,
                    SweepParam::N => p.n = value as usize,
                    SweepParam::Sigma => unreachable!("checked"),
                }
                generate_partition_instance(&p)
            }
            Family::Geometric => {
                let mut p = GeometricDatasetParams::new(self.sigma, seed);
                p.points_per_vertex = self.points_per_vertex;
                match self.param {
                    SweepParam::Sigma => p.sigma = value,
                    SweepParam::N => p.points_per_vertex = value as usize,
                    _ => unreachable!("checked"),
                }
                Ok(generate_geometric_instance(&p)?.0)
            }
        }
    }
}

/// Median and quartiles.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quartiles {
    pub median: f64,
    pub q25: f64,
    pub q75: f64,
}

/// Quantile `p` of sorted data by linear interpolation between order
/// statistics at position `p (N - 1)`.
fn quantile_sorted(xs: &[f64], p: f64) -> f64 {
    let h = p * (xs.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    xs[lo] + (h - lo as f64) * (xs[hi] - xs[lo])
}

/// `None` for empty input.
pub fn quartiles(values: &[f64]) -> Option<Quartiles> {
    if values.is_empty() {
        return None;
    }
    let mut xs = values.to_vec();
    xs.sort_by(f64::total_cmp);
    Some(Quartiles {
        median: quantile_sorted(&xs, 0.5),
        q25: quantile_sorted(&xs, 0.25),
        q75: quantile_sorted(&xs, 0.75),
    })
}

/// Summary for one swept value.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub pairs_pct: Quartiles,
    pub triples_pct: Quartiles,
    pub runtime_ms: Quartiles,
    /// Per-seed reports in seed order.
    pub reports: Vec<RunReport>,
}

/// Runs every (value, seed) combination; seeds of one value run in parallel
/// on the current rayon pool and are gathered in seed order.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<SweepRow>> {
    spec.check()?;
    if spec.seeds == 0 {
        return Err(Error::InvalidParameter("at least one seed is required".into()));
    }
    spec.values
        .iter()
        .map(|&value| {
            let reports = (0..spec.seeds as u64)
                .into_par_iter()
                .map(|k| {
                    let c = spec.instance(value, spec.base_seed.wrapping_add(k))?;
                    Ok(preprocess(&c, &spec.config)?.report)
                })
                .collect::<Result<Vec<RunReport>>>()?;
            let stat = |f: fn(&RunReport) -> f64| {
                quartiles(&reports.iter().map(f).collect::<Vec<_>>()).expect("nonempty")
            };
            Ok(SweepRow {
                value,
                pairs_pct: stat(|r| r.pairs_fixed_pct),
                triples_pct: stat(|r| r.triples_fixed_pct),
                runtime_ms: stat(|r| r.elapsed_ms),
                reports,
            })
        })
        .collect()
}

/// Tracked statistics, one CSV each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Pairs,
    Triples,
    Runtime,
}

impl Stat {
    pub const ALL: [Stat; 3] = [Stat::Pairs, Stat::Triples, Stat::Runtime];

    pub fn as_str(self) -> &'static str {
        match self {
            Stat::Pairs => "pairs",
            Stat::Triples => "triples",
            Stat::Runtime => "runtime",
        }
    }

    fn of(self, row: &SweepRow) -> Quartiles {
        match self {
            Stat::Pairs => row.pairs_pct,
            Stat::Triples => row.triples_pct,
            Stat::Runtime => row.runtime_ms,
        }
    }
}

/// Writes `<param>,median,q25,q75` rows for one statistic.
pub fn write_stat_csv<W: Write>(rows: &[SweepRow], param: SweepParam, stat: Stat, out: W) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidArgument(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record([param.as_str(), "median", "q25", "q75"]).map_err(io)?;
    for row in rows {
        let q = stat.of(row);
        w.write_record([
            row.value.to_string(),
            q.median.to_string(),
            q.q25.to_string(),
            q.q75.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(())
}

/// Writes `<prefix>_pairs.csv`, `<prefix>_triples.csv` and `<prefix>_runtime.csv`
/// into `dir` and returns their paths.
pub fn write_csvs(dir: &Path, prefix: &str, rows: &[SweepRow], param: SweepParam) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Stat::ALL
        .iter()
        .map(|&stat| {
            let path = dir.join(format!("{prefix}_{}.csv", stat.as_str()));
            let file = std::fs::File::create(&path).map_err(|e| Error::InvalidArgument(e.to_string()))?;
            write_stat_csv(rows, param, stat, file)?;
            Ok(path)
        })
        .collect()
}
