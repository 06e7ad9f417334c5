//! `young`: command-line front end for the `young-monotone` library.
//!
//! Exit codes: 0 when the run completed and every checked statement holds,
//! 2 when a counterexample was found, 1 on usage or internal errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use young_monotone::dimension;
use young_monotone::measure::{self, Thm12Outcome};
use young_monotone::partition::enumerate_partitions;
use young_monotone::poset::DEFAULT_UPPER_SET_LIMIT;
use young_monotone::scalar::Scalar;
use young_monotone::symfunc;
use young_monotone::thoma::{self, LlnKind};
use young_monotone::{fmt_rat, parse_rat, MeasureOnLevel, Partition, Rat, ThomaParams, VerdictReport};

#[derive(Parser, Debug)]
#[command(
    name = "young",
    version,
    about = "Exact combinatorics of the Young graph: dimensions, projections, stochastic \
             dominance, Schur and Hall-Littlewood checks, Thoma-simplex experiments"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write tabular output as CSV to this file.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,
    /// Emit JSON where plain text is the default; with a path, write it there.
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    json: Option<Option<PathBuf>>,
    /// Base seed for random experiments; trial t uses seed + t.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Override the enumeration guard of the command (level, matrix size).
    #[arg(long, global = true)]
    limit: Option<usize>,
}

impl Global {
    fn json_path(&self) -> Option<&PathBuf> {
        self.out.as_ref().or(self.json.as_ref().and_then(|p| p.as_ref()))
    }

    fn wants_json(&self) -> bool {
        self.json.is_some() || self.out.is_some()
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of n in decreasing lexicographic order (the level Y_n of the Young graph).
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Dimension of a diagram: number of paths from the empty diagram in the Young graph
    /// (hook length formula), or of a skew shape with --mu, or the F_p-unipotent count dim_t with --p.
    Dim {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Inner shape; prints the number of paths from mu to lambda.
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
        /// Count upper unitriangular matrices over F_p with Jordan type lambda.
        #[arg(long)]
        p: Option<u64>,
        /// Count paths by explicit recursion instead of the hook length formula.
        #[arg(long)]
        paths: bool,
    },
    /// Project a measure on Y_n down to Y_k along the Young graph with the
    /// cotransition probabilities dim(mu)/dim(lambda).
    Project {
        /// Project the atom at this diagram.
        #[arg(long, value_parser = parse_partition, conflicts_with = "measure")]
        lambda: Option<Partition>,
        /// Project the measure stored in this JSON file.
        #[arg(long)]
        measure: Option<PathBuf>,
        #[arg(long)]
        to: usize,
    },
    /// Decide stochastic dominance rho >= rho_hat in the dominance order (max-flow
    /// coupling, cross-checked on upper sets). With --k, also check that the
    /// projections to level k stay in dominance (monotonicity of the projections).
    Dominates {
        #[arg(long)]
        rho: PathBuf,
        #[arg(long)]
        rho_hat: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Sweep a proved inequality or a conjecture over all box-move configurations.
    #[command(subcommand)]
    Verify(Verify),
    /// Sample lambda(n) from the extreme coherent measure with Thoma parameters
    /// (alpha, beta) by the growth chain and report lambda_i/n and lambda'_j/n
    /// (law of large numbers for the rows and columns).
    SampleLln {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Use double precision; fast but loses accuracy for large n.
        #[arg(long)]
        float: bool,
    },
    /// Total variation distance between the level-r projection of a staircase
    /// diagram lambda(k) and the extreme measure M_r (approximation of Thoma
    /// measures by atoms far up the graph).
    ThomaConverge {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
        k: Vec<usize>,
    },
    /// Check that the extreme measures M_n of Thoma parameters (alpha, beta) are
    /// probability measures forming a coherent system: M_n projects onto M_(n-1).
    Coherence {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Comma-separated rationals, weakly decreasing.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    beta: String,
}

impl ParamArgs {
    fn parse(&self) -> Result<ThomaParams> {
        Ok(ThomaParams::parse(&self.alpha, &self.beta)?)
    }
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// s_lambda(1^N) s_mu_hat(1^N) against s_lambda_hat(1^N) s_mu(1^N) through the
    /// Weyl dimension formula, with the reduced-form comparison x^2(y^2-1) vs (x^2-1)y^2.
    Prop22 {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Largest number of variables N.
        #[arg(long = "N", default_value_t = 10)]
        n_vars: usize,
    },
    /// dim(mu_hat)/dim(lambda_hat) against dim(mu)/dim(lambda) (the N -> infinity
    /// limit of the Schur comparison).
    Cor23 {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Monomial positivity of s_lambda s_mu_hat - s_lambda_hat s_mu (sign by case),
    /// via Littlewood-Richardson products and Kostka numbers.
    ConjMonomial {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Hall-Littlewood analogue: (1 - t^(lambda'_c - lambda'_(c+1))) Q_mu/Q_lambda
    /// compared across the move, evaluated at 1^N for each t.
    ConjHl {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long = "N", default_value_t = 4)]
        n_vars: usize,
        #[arg(long, value_delimiter = ',', default_value = "0,1/4,1/2,3/4,1")]
        t: Vec<String>,
    },
    /// Unipotent analogue over F_p: ratios of Jordan-type counts dim_t(mu -> lambda)/dim_t(lambda)
    /// by enumeration of upper unitriangular n x n matrices.
    ConjJordan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Outcome of a command that completed.
enum Status {
    Holds,
    Counterexample,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let g = cli.global;
    if let Some(n) = g.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Enumerate { n } => {
            let limit = g.limit.unwrap_or(40);
            if n > limit {
                bail!("n = {n} exceeds the enumeration limit {limit}; raise it with --limit");
            }
            let parts = enumerate_partitions(n);
            if g.wants_json() {
                emit_json(&g, &parts)?;
            } else {
                let text: String = parts.iter().map(|p| format!("{p}\n")).collect();
                print!("{text}");
            }
        }
        Command::Dim {
            lambda,
            mu,
            p,
            paths,
        } => {
            let value = match (mu, p) {
                (Some(_), Some(_)) => bail!("--mu and --p cannot be combined"),
                (Some(mu), None) => dimension::skew_dim(&lambda, &mu)?,
                (None, Some(p)) => dimension::dim_t_enum(
                    &lambda,
                    p,
                    g.limit.unwrap_or(dimension::DEFAULT_DIM_T_LIMIT),
                    dimension::DEFAULT_DIM_T_MAX_P,
                )?,
                (None, None) if paths => {
                    dimension::dim_paths(&lambda, g.limit.unwrap_or(dimension::DEFAULT_PATH_LIMIT))?
                }
                (None, None) => dimension::dim_hook(&lambda),
            };
            if g.wants_json() {
                emit_json(&g, &serde_json::json!({ "lambda": lambda, "dim": value.to_string() }))?;
            } else {
                println!("{value}");
            }
        }
        Command::Project {
            lambda,
            measure,
            to,
        } => {
            let projected = match (lambda, measure) {
                (Some(l), None) => MeasureOnLevel::delta(&l).project_to(to)?,
                (None, Some(path)) => read_measure(&path)?.project_to(to)?,
                _ => bail!("give exactly one of --lambda or --measure"),
            };
            emit_json(&g, &projected)?;
        }
        Command::Dominates { rho, rho_hat, k } => {
            let rho = read_measure(&rho)?;
            let rho_hat = read_measure(&rho_hat)?;
            return dominates(&g, &rho, &rho_hat, k);
        }
        Command::Verify(v) => return verify(&g, v),
        Command::SampleLln {
            params,
            n,
            trials,
            float,
        } => {
            let ps = params.parse()?;
            let rows = if float {
                thoma::lln_experiment::<f64>(&ps, n, trials, g.seed)?
            } else {
                thoma::lln_experiment::<Rat>(&ps, n, trials, g.seed)?
            };
            let kinds = [(LlnKind::Row, "row", ps.alpha()), (LlnKind::Col, "col", ps.beta())];
            for (kind, label, targets) in kinds {
                for (i, target) in targets.iter().enumerate() {
                    let d = thoma::mean_abs_deviation(&rows, kind, i + 1, target.to_f64_lossy());
                    eprintln!("{label} {}: mean |value - {}| = {d:.5}", i + 1, fmt_rat(target));
                }
            }
            emit_csv(&g, &rows)?;
        }
        Command::ThomaConverge { params, r, k } => {
            let ps = params.parse()?;
            let rows: Vec<ConvergenceCsv> = thoma::convergence_experiment(&ps, r, &k)?
                .into_iter()
                .map(|row| ConvergenceCsv {
                    k: row.k,
                    r: row.r,
                    tv_decimal: row.tv.to_f64_lossy(),
                    tv: fmt_rat(&row.tv),
                })
                .collect();
            emit_csv(&g, &rows)?;
        }
        Command::Coherence { params, n } => {
            let ps = params.parse()?;
            return coherence(&g, &ps, n);
        }
    }
    Ok(Status::Holds)
}

#[derive(Serialize)]
struct ConvergenceCsv {
    k: usize,
    r: usize,
    tv: String,
    tv_decimal: f64,
}

fn verify(g: &Global, v: Verify) -> Result<Status> {
    let report: VerdictReport = match v {
        Verify::Prop22 { n_max, n_vars } => symfunc::sweep_prop22(n_max, n_vars),
        Verify::Cor23 { n_max } => dimension::sweep_cor23(n_max),
        Verify::ConjMonomial { n_max } => symfunc::sweep_conj22(n_max),
        Verify::ConjHl { n_max, n_vars, t } => {
            let ts = t
                .iter()
                .map(|s| parse_rat(s))
                .collect::<young_monotone::Result<Vec<Rat>>>()?;
            symfunc::sweep_conj24(n_max, n_vars, &ts)?
        }
        Verify::ConjJordan { n, p } => dimension::check_conj14(
            n,
            p,
            g.limit.unwrap_or(dimension::DEFAULT_DIM_T_LIMIT),
            dimension::DEFAULT_DIM_T_MAX_P,
        )?,
    };
    let s = &report.summary;
    eprintln!(
        "{}: {} instances, {} hold, {} fail, {} not asserted, {} equalities",
        report.command, s.total, s.holds, s.fails, s.not_applicable, s.equalities
    );
    emit_json(g, &report)?;
    Ok(if report.all_hold() {
        Status::Holds
    } else {
        Status::Counterexample
    })
}

fn dominates(
    g: &Global,
    rho: &MeasureOnLevel,
    rho_hat: &MeasureOnLevel,
    k: Option<usize>,
) -> Result<Status> {
    let (holds, coupling) = measure::dominates_flow(rho, rho_hat)?;
    let limit = g.limit.unwrap_or(DEFAULT_UPPER_SET_LIMIT);
    if rho.level() <= limit {
        let by_upper_sets = measure::dominates_upperset(rho, rho_hat, limit)?;
        if by_upper_sets != holds {
            bail!("internal error: max-flow and upper-set deciders disagree");
        }
    }
    let mut out = serde_json::json!({
        "level": rho.level(),
        "dominates": holds,
        "coupling": coupling.map(|c| {
            c.entries
                .iter()
                .map(|e| serde_json::json!({
                    "source": e.source,
                    "target": e.target,
                    "mass": fmt_rat(&e.mass),
                }))
                .collect::<Vec<_>>()
        }),
    });
    let mut status = Status::Holds;
    if let Some(k) = k {
        let projected = match measure::check_thm12(rho, rho_hat, k)? {
            Thm12Outcome::Holds(_) => serde_json::json!({ "k": k, "projections_dominate": true }),
            Thm12Outcome::Fails {
                projected,
                projected_hat,
            } => {
                status = Status::Counterexample;
                serde_json::json!({
                    "k": k,
                    "projections_dominate": false,
                    "projected": projected,
                    "projected_hat": projected_hat,
                })
            }
        };
        out["projection"] = projected;
    }
    emit_json(g, &out)?;
    Ok(status)
}

fn coherence(g: &Global, ps: &ThomaParams, n: usize) -> Result<Status> {
    let mut levels = Vec::new();
    let mut status = Status::Holds;
    let mut upper = thoma::extreme_measure(n, ps);
    for level in (1..=n).rev() {
        let lower = thoma::extreme_measure(level - 1, ps);
        let mass = upper.total_mass();
        let projects = upper.project_one()? == lower;
        let ok = projects && mass == Rat::from_integer(1.into());
        if !ok {
            status = Status::Counterexample;
        }
        eprintln!(
            "level {level}: total mass {}, projects onto level {}: {projects}",
            fmt_rat(&mass),
            level - 1
        );
        levels.push(serde_json::json!({
            "level": level,
            "total_mass": fmt_rat(&mass),
            "projects_to_previous": projects,
        }));
        upper = lower;
    }
    levels.reverse();
    emit_json(
        g,
        &serde_json::json!({
            "command": "coherence",
            "params": ps.to_string(),
            "n": n,
            "levels": levels,
            "measure": thoma::extreme_measure(n, ps),
        }),
    )?;
    Ok(status)
}

fn read_measure(path: &Path) -> Result<MeasureOnLevel> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing measure in {}", path.display()))
}

fn emit_json<T: Serialize + ?Sized>(g: &Global, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match g.json_path() {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn emit_csv<T: Serialize>(g: &Global, rows: &[T]) -> Result<()> {
    let sink: Box<dyn Write> = match g.csv.as_ref().or(g.out.as_ref()) {
        Some(path) => Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ),
        None => Box::new(io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
