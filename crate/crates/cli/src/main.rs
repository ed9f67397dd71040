use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use symmorse::braid::ColoredGenerator;
use symmorse::{Case, Partition};
use symmorse_cli::{
    cmd_dim, cmd_geometry, cmd_rep, cmd_track, parse_complex, parse_complex_list, parse_partition, parse_q_list,
    parse_varsigma, GeometryRequest, TrackInput, TrackRequest,
};

/// Morse groups of nearby cycles for sl_n, sl_n/so_n and sl_2n/sp_2n.
///
/// Every command prints a JSON document; the exit code is 0 exactly when all
/// checks in it pass, 1 when a check fails and 2 on invalid input.
#[derive(Parser)]
#[command(name = "symmorse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Rank of the Morse group, n! / (n_1! ... n_k!).
    Dim {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// Family and microlocal monodromy matrices with their verification.
    Rep(RepArgs),
    /// Numerical monodromy of the critical values along a braid.
    Track(TrackArgs),
    /// Sample a generic conormal pair, check its normal form and optionally
    /// compute the critical points on the normal slice (case I).
    Geometry(GeometryArgs),
}

#[derive(Args)]
struct RepArgs {
    #[arg(long, value_parser = parse_case)]
    case: Case,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    /// Same-color generator kappa_a (repeatable).
    #[arg(long)]
    kappa: Vec<usize>,
    /// Generator varsigma_{i,j} given as "i,j" (repeatable).
    #[arg(long, value_parser = parse_varsigma)]
    varsigma: Vec<ColoredGenerator>,
    /// Also print the microlocal matrix of this colored braid, e.g. "1 -2".
    #[arg(long)]
    colored_braid: Option<String>,
}

#[derive(Args)]
struct TrackArgs {
    /// JSON file with {partition, lambdas, us, tau, braid, colored, case};
    /// complex numbers as [re, im]. Flags override its fields.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_parser = parse_partition)]
    partition: Option<Partition>,
    /// Comma separated complex numbers such as "-1,0.5+2i".
    #[arg(long, allow_hyphen_values = true)]
    lambdas: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    us: Option<String>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    tau: Option<num_complex::Complex64>,
    /// Braid word of the lambdas, signed generator indices: "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Colored braid word of the us.
    #[arg(long, allow_hyphen_values = true)]
    colored_braid: Option<String>,
    /// Case whose microlocal action is compared against.
    #[arg(long, value_parser = parse_case)]
    case: Option<Case>,
    /// Subdivisions of each half-turn.
    #[arg(long)]
    steps: Option<usize>,
    /// Smallest admissible distance between critical values.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct GeometryArgs {
    #[arg(long, value_parser = parse_case)]
    case: Case,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Eigenvalues of B on the blocks, comma separated rationals with
    /// sum n_i u_i = 0; sampled when absent.
    #[arg(long, allow_hyphen_values = true)]
    us: Option<String>,
    /// Check the normal form (always done).
    #[arg(long)]
    verify: bool,
    /// Compute the critical points of tr(B ·) on the Milnor fiber.
    #[arg(long)]
    critical_points: bool,
    /// Spectrum of the Milnor fiber before scaling by tau; must sum to zero.
    #[arg(long, allow_hyphen_values = true)]
    lambdas: Option<String>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    tau: Option<num_complex::Complex64>,
    /// Largest admissible relative residual of the normal form.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

fn parse_case(s: &str) -> Result<Case> {
    s.parse().map_err(|e| anyhow::anyhow!("{e}"))
}

fn run(cli: &Cli) -> Result<(Value, bool)> {
    match &cli.command {
        Command::Dim { partition } => Ok(cmd_dim(partition)),
        Command::Rep(a) => {
            let mut gens: Vec<ColoredGenerator> = a.kappa.iter().map(|&k| ColoredGenerator::Kappa(k)).collect();
            gens.extend(a.varsigma.iter().cloned());
            cmd_rep(a.case, &a.partition, &gens, a.colored_braid.as_deref())
        }
        Command::Track(a) => {
            let input = match &a.input {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    Some(serde_json::from_str::<TrackInput>(&text).context("parsing tracker input")?)
                }
                None => None,
            };
            let mut req = match (&input, &a.partition) {
                (Some(i), _) => TrackRequest::from_input(i)?,
                (None, Some(p)) => {
                    TrackRequest::from_input(&TrackInput { partition: p.to_text(), ..Default::default() })?
                }
                (None, None) => anyhow::bail!("--partition or --input is required"),
            };
            if let Some(p) = &a.partition {
                req.partition = p.clone();
            }
            if let Some(l) = &a.lambdas {
                req.lambdas = Some(parse_complex_list(l)?);
            }
            if let Some(u) = &a.us {
                req.us = Some(parse_complex_list(u)?);
            }
            if a.tau.is_some() {
                req.tau = a.tau;
            }
            if a.braid.is_some() {
                req.braid = a.braid.clone();
            }
            if a.colored_braid.is_some() {
                req.colored = a.colored_braid.clone();
            }
            if let Some(c) = a.case {
                req.case = c;
            }
            req.steps = a.steps;
            req.min_separation = a.tol;
            cmd_track(&req)
        }
        Command::Geometry(a) => cmd_geometry(&GeometryRequest {
            case: a.case,
            partition: a.partition.clone(),
            seed: a.seed,
            u: a.us.as_deref().map(parse_q_list).transpose()?,
            critical_points: a.critical_points,
            lambdas: a.lambdas.as_deref().map(parse_complex_list).transpose()?,
            tau: a.tau,
            tol: a.tol,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, passed) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
