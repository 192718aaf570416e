use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use edgeq::bounds::{bounds_table, one_certificate, verify_unique, zero_certificate, VERIFY_CAP};
use edgeq::harness::{
    fit_growth, parse_config, parse_sizes, read_csv, run_experiment, run_learner, run_learner_on,
    write_csv, ExperimentConfig, FitModel, LearnerKind, Metric,
};
use edgeq::instances::gen_instance;
use edgeq::oracles::TranscriptFormat;
use edgeq::{CostModel, Family, HiddenInstance};

#[derive(Parser)]
#[command(
    name = "edgeq",
    version,
    about = "Edge-query learning of hidden bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a random instance in the text fixture form.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one learner once and print a summary.
    Learn(LearnArgs),
    /// Run a seeded sweep and write the CSV.
    Sweep(SweepArgs),
    /// Fit growth from a sweep CSV and print JSON.
    Fit {
        /// Sweep CSV; stdin when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// POLY, NLOGN or NLOG2N; every model when omitted.
        #[arg(long)]
        model: Option<FitModel>,
        /// queries or charge.
        #[arg(long, default_value = "queries")]
        metric: Metric,
    },
    /// Brute-force lower-bound table against the closed forms.
    Bounds {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Build the linear-size certificate of L_n and check it is unique.
    Certify {
        #[arg(long = "n")]
        n: usize,
        /// Certify with 1-entries instead of 0-entries.
        #[arg(long)]
        ones: bool,
    },
}

#[derive(Args)]
struct LearnArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    learner: Option<LearnerKind>,
    #[arg(long = "n")]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    cost_model: Option<CostModel>,
    /// Replay a fixture written by `gen` instead of generating from the seed.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Write the full query transcript here.
    #[arg(long)]
    transcript: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    transcript_format: TranscriptFormat,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat key = value file; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    learner: Option<LearnerKind>,
    #[arg(long)]
    cost_model: Option<CostModel>,
    /// Comma-separated, strictly increasing.
    #[arg(long)]
    sizes: Option<String>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Record wall-clock microseconds (makes the CSV non-reproducible).
    #[arg(long)]
    timing: bool,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn default_model(learner: LearnerKind) -> CostModel {
    if learner == LearnerKind::Quicksort {
        CostModel::Sampling
    } else {
        CostModel::Unit
    }
}

fn resolve(family: Option<Family>, learner: Option<LearnerKind>) -> Result<(Family, LearnerKind)> {
    match (family, learner) {
        (Some(f), Some(l)) => Ok((f, l)),
        (Some(f), None) => Ok((f, LearnerKind::default_for(f))),
        (None, Some(l)) => Ok((l.family(), l)),
        (None, None) => bail!("give --family or --learner"),
    }
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn learn(args: LearnArgs) -> Result<()> {
    let fixture = match &args.instance {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Some(text.trim().parse::<HiddenInstance>()?)
        }
        None => None,
    };
    let (family, learner) = resolve(
        args.family.or(fixture.as_ref().map(|h| h.family())),
        args.learner,
    )?;
    let model = args.cost_model.unwrap_or_else(|| default_model(learner));
    let cfg = ExperimentConfig::new(family, learner, model, vec![1], 1);
    cfg.validate()?;

    let out = match fixture {
        Some(h) => run_learner_on(learner, model, h, args.seed, true)?,
        None => {
            let n = args.n.context("give --n or --instance")?;
            run_learner(learner, model, n, args.seed, true)?
        }
    };
    if let Some(p) = &args.transcript {
        let w = output(Some(p))?;
        out.transcript.export(w, args.transcript_format)?;
    }
    let t = &out.transcript;
    println!(
        "family={family} learner={learner} cost_model={model} n={}",
        out.hidden.n()
    );
    println!(
        "total_queries={} total_charge={}",
        t.total_queries(),
        t.total_charge()
    );
    println!("correct={}", u8::from(out.correct));
    println!("learned: {}", out.learned);
    if !out.correct {
        bail!("learner output differs from the hidden instance");
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let (mut cfg, mut out) = match &args.config {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let file = parse_config(&text)?;
            (Some(file.config), file.output)
        }
        None => (None, None),
    };
    if let Some(c) = cfg.as_mut() {
        if args.family.is_some() || args.learner.is_some() {
            let (f, l) = resolve(args.family, args.learner)?;
            c.family = f;
            c.learner = l;
        }
    }
    let mut cfg = match cfg {
        Some(c) => c,
        None => {
            let (family, learner) = resolve(args.family, args.learner)?;
            let sizes = args.sizes.as_deref().context("give --sizes or --config")?;
            ExperimentConfig::new(
                family,
                learner,
                default_model(learner),
                parse_sizes(sizes)?,
                1,
            )
        }
    };
    if let Some(m) = args.cost_model {
        cfg.cost_model = m;
    }
    if let Some(s) = &args.sizes {
        cfg.sizes = parse_sizes(s)?;
    }
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    if let Some(s) = args.seed {
        cfg.base_seed = s;
    }
    cfg.timing |= args.timing;
    if args.out.is_some() {
        out = args.out;
    }
    let records = run_experiment(&cfg)?;
    write_csv(&records, output(out.as_deref())?)?;
    Ok(())
}

fn fit(input: Option<PathBuf>, model: Option<FitModel>, metric: Metric) -> Result<()> {
    let records = match &input {
        Some(p) => read_csv(File::open(p).with_context(|| format!("opening {}", p.display()))?)?,
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            read_csv(buf.as_slice())?
        }
    };
    let models = model.map_or(FitModel::ALL.to_vec(), |m| vec![m]);
    for m in models {
        println!(
            "{}",
            serde_json::to_string(&fit_growth(&records, m, metric)?)?
        );
    }
    Ok(())
}

fn bounds(max_n: usize) -> Result<()> {
    let rows = bounds_table(max_n)?;
    println!(
        "{:<28} {:>3}  {:<22} {:<22} match",
        "quantity", "n", "computed", "predicted"
    );
    for r in &rows {
        println!(
            "{:<28} {:>3}  {:<22} {:<22} {}",
            r.quantity, r.n, r.computed, r.predicted, r.matched
        );
    }
    if rows.iter().any(|r| !r.matched) {
        bail!("some computed values differ from the closed form");
    }
    Ok(())
}

fn certify(n: usize, ones: bool) -> Result<()> {
    if n > VERIFY_CAP {
        bail!("verification enumerates (n!)^2 pairs; n must be at most {VERIFY_CAP}");
    }
    let cert = if ones {
        one_certificate(n)?
    } else {
        zero_certificate(n)?
    };
    let unique = verify_unique(&cert)?;
    print!("{cert}");
    println!("SIZE={}", cert.len());
    println!("UNIQUE={unique}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            family,
            n,
            seed,
            out,
        } => {
            let inst = gen_instance(family, n, seed)?;
            writeln!(output(out.as_deref())?, "{inst}")?;
            Ok(())
        }
        Command::Learn(args) => learn(args),
        Command::Sweep(args) => sweep(args),
        Command::Fit {
            input,
            model,
            metric,
        } => fit(input, model, metric),
        Command::Bounds { max_n } => bounds(max_n),
        Command::Certify { n, ones } => certify(n, ones),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
