use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cubic_partial::core::{solve_exact_bounded, DEFAULT_ORACLE_BOUND};
use cubic_partial::datasets::{
    generate_geometric_instance, generate_partition_instance, write_points_csv,
    GeometricDatasetParams, PartitionDatasetParams,
};
use cubic_partial::engine::{parse_conditions, preprocess, PreprocessConfig};
use cubic_partial::experiment::{run_experiment, write_csvs, ExperimentSpec, Family, SweepParam};
use cubic_partial::CostFunction;

#[derive(Parser)]
#[command(name = "cubic-partial", version, about = "Partial optimality preprocessing for cubic set partition")]
struct Cli {
    /// Worker threads for experiment sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest instance solved by exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BOUND)]
    oracle_bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded instance of one of the synthetic families.
    Generate(GenerateArgs),
    /// Solve a small instance exactly by enumerating partitions.
    SolveExact {
        instance: PathBuf,
    },
    /// Fix variables, print the run report and optionally write the residual instances.
    Preprocess(PreprocessArgs),
    /// Sweep one parameter and write median/quartile CSVs.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct ConditionArgs {
    /// Comma-separated conditions to enable (default: all).
    #[arg(long, visible_alias = "only")]
    conditions: Option<String>,
    /// Skip triplet join and triangle edge join on instances larger than this.
    #[arg(long)]
    expensive_threshold: Option<usize>,
}

impl ConditionArgs {
    fn config(&self) -> Result<PreprocessConfig> {
        let mut config = match &self.conditions {
            Some(list) => PreprocessConfig::only(&parse_conditions(list)?),
            None => PreprocessConfig::default(),
        };
        config.expensive_threshold = self.expensive_threshold;
        Ok(config)
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    /// Block scale of the partition family (8n elements).
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, required_if_eq("family", "partition"))]
    alpha: Option<f64>,
    #[arg(long, required_if_eq("family", "partition"))]
    beta: Option<f64>,
    #[arg(long, required_if_eq("family", "geometric"))]
    sigma: Option<f64>,
    #[arg(long, default_value_t = 5)]
    points_per_vertex: usize,
    #[arg(long, env = "CUBIC_PARTIAL_SEED", default_value_t = 0)]
    seed: u64,
    /// Instance JSON path; geometric points go next to it with extension `.points.csv`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PreprocessArgs {
    instance: PathBuf,
    #[command(flatten)]
    conditions: ConditionArgs,
    /// Directory for the residual instances and the report.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    family: Family,
    /// Swept parameter: alpha, beta or n (partition); sigma or n (geometric).
    #[arg(long)]
    param: SweepParam,
    /// Comma-separated values of the swept parameter.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    values: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, default_value_t = 0.05)]
    sigma: f64,
    #[arg(long, default_value_t = 5)]
    points_per_vertex: usize,
    #[arg(long, default_value_t = 30)]
    seeds: usize,
    /// First seed; seed k of a sweep value is this plus k.
    #[arg(long, env = "CUBIC_PARTIAL_SEED", default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    conditions: ConditionArgs,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// File name prefix (default: the swept parameter).
    #[arg(long)]
    prefix: Option<String>,
}

fn read_instance(path: &Path) -> Result<CostFunction> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    CostFunction::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn generate(a: &GenerateArgs) -> Result<()> {
    match a.family {
        Family::Partition => {
            let p = PartitionDatasetParams {
                n: a.n,
                alpha: a.alpha.expect("required by clap"),
                beta: a.beta.expect("required by clap"),
                seed: a.seed,
            };
            write(&a.out, &generate_partition_instance(&p)?.to_json())?;
        }
        Family::Geometric => {
            let mut p = GeometricDatasetParams::new(a.sigma.expect("required by clap"), a.seed);
            p.points_per_vertex = a.points_per_vertex;
            let (c, points) = generate_geometric_instance(&p)?;
            write(&a.out, &c.to_json())?;
            let csv_path = a.out.with_extension("points.csv");
            let file = fs::File::create(&csv_path)
                .with_context(|| format!("writing {}", csv_path.display()))?;
            write_points_csv(&points, file)?;
        }
    }
    Ok(())
}

fn solve(path: &Path, bound: usize) -> Result<()> {
    let c = read_instance(path)?;
    let (x, value) = solve_exact_bounded(&c, bound)?;
    let out = serde_json::json!({
        "n": c.n(),
        "value": value,
        "blocks": x.to_partition()?.blocks(),
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn run_preprocess(a: &PreprocessArgs) -> Result<()> {
    let c = read_instance(&a.instance)?;
    let out = preprocess(&c, &a.conditions.config()?)?;
    let report = serde_json::to_string_pretty(&out.report)?;
    if let Some(dir) = &a.out_dir {
        for (k, inst) in out.instances.iter().enumerate() {
            write(&dir.join(format!("reduced_{k}.json")), &inst.to_json())?;
        }
        write(&dir.join("report.json"), &report)?;
    }
    println!("{report}");
    Ok(())
}

fn experiment(a: &ExperimentArgs) -> Result<()> {
    let mut spec = ExperimentSpec::new(a.family, a.param, a.values.clone());
    spec.n = a.n;
    spec.alpha = a.alpha;
    spec.beta = a.beta;
    spec.sigma = a.sigma;
    spec.points_per_vertex = a.points_per_vertex;
    spec.seeds = a.seeds;
    spec.base_seed = a.seed;
    spec.config = a.conditions.config()?;
    let rows = run_experiment(&spec)?;
    let prefix = a.prefix.clone().unwrap_or_else(|| a.param.as_str().to_string());
    for path in write_csvs(&a.out_dir, &prefix, &rows, a.param)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::SolveExact { instance } => solve(instance, cli.oracle_bound),
        Command::Preprocess(a) => run_preprocess(a),
        Command::Experiment(a) => experiment(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use cubic_partial::criteria::ConditionId;

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }

    #[test]
    fn partition_requires_alpha() {
        let r = Cli::try_parse_from(["cubic-partial", "generate", "--family", "partition", "--beta", "0.5", "--out", "x.json"]);
        assert!(r.is_err());
    }

    #[test]
    fn only_alias() {
        let cli = Cli::try_parse_from(["cubic-partial", "preprocess", "i.json", "--only", "subset-separation"]).unwrap();
        let Command::Preprocess(a) = cli.command else { panic!() };
        assert_eq!(a.conditions.config().unwrap().enabled, vec![ConditionId::SubsetSeparation]);
    }
}
