use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use zigzag::elr::{self, PiecewisePolynomial};
use zigzag::graph::{self, count_fillings, FillingSampler};
use zigzag::harness::{emit, run_experiment, ExperimentConfig, Format};
use zigzag::paintbox::{
    composition_paintbox, estimate_paintbox_law, run_paintbox, sigma_u, IntervalSystem,
};
use zigzag::rational::format_rational;
use zigzag::rsk::{self, link_count, project_path, projected_marginal};
use zigzag::walk::{clt_experiment, lln_experiment};
use zigzag::{rng, Composition, Permutation};

/// Counting, kernels, paintboxes, and limit experiments on zigzag diagrams.
#[derive(Parser)]
#[command(name = "zz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Mc {
    /// Number of Monte Carlo samples.
    #[arg(short = 'n', long = "samples")]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct System {
    /// Up intervals, e.g. "0,1/2;3/4,1".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    up: String,
    /// Down intervals.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    down: String,
}

impl System {
    fn parse(&self) -> Result<IntervalSystem> {
        Ok(IntervalSystem::parse(&self.up, &self.down)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of standard fillings d(λ).
    Count { lambda: Composition },
    /// Martin kernel K_μ(λ), exact or estimated.
    Kernel {
        mu: Composition,
        lambda: Composition,
        #[arg(long, conflicts_with = "mc")]
        exact: bool,
        /// Estimate from this many uniform fillings.
        #[arg(long)]
        mc: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Uniform random fillings of λ.
    Sample {
        lambda: Composition,
        #[command(flatten)]
        mc: Mc,
    },
    /// Interval systems attached to compositions.
    Paintbox {
        #[command(subcommand)]
        command: PaintboxCommand,
    },
    /// The paintbox permutation of given points.
    SigmaU {
        #[command(flatten)]
        system: System,
        /// Comma-separated points of (0,1).
        #[arg(long)]
        xs: String,
    },
    /// Estimate P(des(σ_U(k)) = D_μ).
    PU {
        #[command(flatten)]
        system: System,
        #[arg(long)]
        mu: Composition,
        #[command(flatten)]
        mc: Mc,
    },
    /// Exact endpoint laws and volumes.
    Elr {
        #[command(subcommand)]
        command: ElrCommand,
    },
    /// Insertion and recording tableaux of a word.
    Rsk { word: Permutation },
    /// Young path of the insertion tableaux of the prefixes σ↓k.
    Project { word: Permutation },
    /// Both sides of the filling / tableau counting identity.
    Linkyz { lambda: Composition },
    /// Law of the shape of P(σ_λ↓k) against the mixture prediction.
    YoungMarginal {
        lambda: Composition,
        k: usize,
        #[command(flatten)]
        mc: Mc,
    },
    /// Descent count fluctuations of uniform permutations.
    Clt {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write (replicate, statistic) rows to this CSV file.
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// Distance of rescaled paintbox walks to the limit profile.
    Lln {
        #[command(flatten)]
        system: System,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an experiment described by a TOML file.
    Run {
        config: PathBuf,
        /// Report path; `.csv` selects CSV, anything else JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PaintboxCommand {
    /// U_λ, or the run paintbox Ũ_λ with --run.
    Of {
        lambda: Composition,
        #[arg(long)]
        run: bool,
    },
}

#[derive(Subcommand)]
enum ElrCommand {
    /// Densities and CDFs of the first and last cell.
    Cdf {
        lambda: Composition,
        /// Write t, F_X(t), F_Y(t) on a 101-point grid.
        #[arg(long)]
        emit_csv: Option<PathBuf>,
    },
    /// V_λ = d(λ)/n!.
    Volume { lambda: Composition },
    /// Probability that 1 sits in valley v, by integration and by counting.
    Valley { lambda: Composition, v: usize },
}

fn print(v: &Value) {
    write_stdout(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json")
    ));
}

/// Writes to stdout, treating a closed pipe as a normal end of output.
fn write_stdout(s: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(s.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn write_file(path: &PathBuf, body: &str) -> Result<()> {
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

/// Runs the command and reports whether every check it makes passed.
fn execute(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Count { lambda } => {
            print(&json!({"lambda": lambda, "value": count_fillings(&lambda).to_string()}));
        }
        Command::Kernel {
            mu,
            lambda,
            exact: _,
            mc,
            seed,
        } => match mc {
            None => {
                let k = graph::martin_kernel(&mu, &lambda)?;
                print(&json!({
                    "lambda": lambda, "mu": mu,
                    "value_num": k.num.to_string(), "value_den": k.den.to_string(),
                    "estimate": k.to_f64(), "stderr": 0.0, "seed": Value::Null,
                }));
            }
            Some(samples) => {
                let e = graph::estimate_kernel(&mu, &lambda, samples, seed)?;
                print(&json!({
                    "lambda": lambda, "mu": mu,
                    "value_num": Value::Null, "value_den": Value::Null,
                    "estimate": e.estimate, "stderr": e.stderr, "seed": seed,
                }));
            }
        },
        Command::Sample { lambda, mc } => {
            if lambda.is_empty() {
                bail!("cannot sample fillings of the empty composition");
            }
            let sampler = FillingSampler::new(&lambda);
            let words = rng::par_collect(mc.samples, mc.seed, |r| sampler.sample(r).to_string());
            print(&json!({"lambda": lambda, "seed": mc.seed, "samples": words}));
        }
        Command::Paintbox {
            command: PaintboxCommand::Of { lambda, run },
        } => {
            let u = if run {
                run_paintbox(&lambda)?
            } else {
                composition_paintbox(&lambda)?
            };
            print(&json!({
                "lambda": lambda, "kind": if run { "run" } else { "composition" },
                "up": u.up_string(), "down": u.down_string(),
            }));
        }
        Command::SigmaU { system, xs } => {
            let u = system.parse()?;
            let xs: Vec<f64> = xs
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<f64>()
                        .with_context(|| format!("point {x:?}"))
                })
                .collect::<Result<_>>()?;
            let s = sigma_u(&u, &xs)?;
            print(&json!({"up": u.up_string(), "down": u.down_string(), "word": s}));
        }
        Command::PU { system, mu, mc } => {
            let u = system.parse()?;
            let e = estimate_paintbox_law(&u, &mu, mc.samples, mc.seed)?;
            print(&json!({
                "up": u.up_string(), "down": u.down_string(), "mu": mu,
                "estimate": e.estimate, "stderr": e.stderr, "samples": e.samples, "seed": mc.seed,
            }));
        }
        Command::Elr { command } => return elr_command(command),
        Command::Rsk { word } => {
            let (p, q) = rsk::rsk(&word);
            print(&json!({"word": word, "p": p, "q": q, "shape": p.shape()}));
        }
        Command::Project { word } => {
            print(&json!({"word": word, "shapes": project_path(&word)}));
        }
        Command::Linkyz { lambda } => {
            let lc = link_count(&lambda)?;
            let holds = lc.holds();
            let mut v = serde_json::to_value(&lc)?;
            v["lambda"] = json!(lambda);
            v["holds"] = json!(holds);
            print(&v);
            return Ok(holds);
        }
        Command::YoungMarginal { lambda, k, mc } => {
            let m = projected_marginal(&lambda, k, mc.samples, mc.seed)?;
            let mut v = serde_json::to_value(&m)?;
            v["lambda"] = json!(lambda);
            v["seed"] = json!(mc.seed);
            v["max_sigma"] = json!(m.max_sigma());
            print(&v);
        }
        Command::Clt {
            n,
            samples,
            seed,
            emit_csv,
        } => {
            let r = clt_experiment(n, samples, seed)?;
            if let Some(path) = emit_csv {
                let mut body = String::from("replicate,statistic\n");
                for (i, s) in r.statistics.iter().enumerate() {
                    writeln!(body, "{i},{s}").expect("string write");
                }
                write_file(&path, &body)?;
            }
            let mut v = serde_json::to_value(&r)?;
            v["seed"] = json!(seed);
            print(&v);
        }
        Command::Lln {
            system,
            n,
            samples,
            seed,
        } => {
            let u = system.parse()?;
            let r = lln_experiment(&u, n, samples, seed)?;
            let mut v = serde_json::to_value(&r)?;
            v["seed"] = json!(seed);
            print(&v);
        }
        Command::Run { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let report = run_experiment(&cfg)?;
            match out.or(cfg.output.clone()) {
                Some(path) => emit(&report, &path, Format::from_path(&path))?,
                None => write_stdout(&report.to_json()),
            }
            let failed = report.records.iter().filter(|r| !r.pass).count();
            eprintln!(
                "{}: {} records, {} failed",
                report.experiment,
                report.records.len(),
                failed
            );
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn elr_command(cmd: ElrCommand) -> Result<bool> {
    match cmd {
        ElrCommand::Cdf { lambda, emit_csv } => {
            let laws = elr::marginal_cdfs(&lambda)?;
            if let Some(path) = emit_csv {
                let mut body = String::from("t,cdf_x,cdf_y\n");
                for i in 0..=100 {
                    let t = i as f64 / 100.0;
                    writeln!(
                        body,
                        "{t},{},{}",
                        laws.cdf_x.eval_f64(t),
                        laws.cdf_y.eval_f64(t)
                    )
                    .expect("string write");
                }
                write_file(&path, &body)?;
            }
            print(&json!({
                "lambda": lambda,
                "volume": format_rational(&laws.volume),
                "density_x": PiecewisePolynomial::single(laws.density_x.clone()),
                "density_y": PiecewisePolynomial::single(laws.density_y.clone()),
                "cdf_x": laws.cdf_x,
                "cdf_y": laws.cdf_y,
            }));
        }
        ElrCommand::Volume { lambda } => {
            let v = elr::volume(&lambda)?;
            print(&json!({
                "lambda": lambda,
                "volume": format_rational(&v),
                "fillings": count_fillings(&lambda).to_string(),
            }));
        }
        ElrCommand::Valley { lambda, v } => {
            let a = elr::prob_one_in_valley(&lambda, v)?;
            let b = elr::prob_one_in_valley_counting(&lambda, v)?;
            let agree = a == b;
            print(&json!({
                "lambda": lambda, "valley": v,
                "integral": format_rational(&a), "counting": format_rational(&b),
                "agree": agree,
            }));
            return Ok(agree);
        }
    }
    Ok(true)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("ZZ_THREADS") {
        let n: usize = v.parse().with_context(|| format!("ZZ_THREADS={v:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| execute(cli.command));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
