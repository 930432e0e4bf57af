use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use singwf_core::analysis::{analyze, verify_record, VerifyOutcome, VerifyStatus};
use singwf_core::dataset::{load_dir, load_records, TableRecord};
use singwf_core::different::StdBoundary;
use singwf_core::parser::{parse_polynomial, render};
use singwf_core::weights::infer_weights;
use singwf_core::{Polynomial, VarList};

#[derive(Parser)]
#[command(name = "singwf", version, about = "Well-formedness and differents of weighted blow-ups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: weights, transformed E, cone, differents, discrepancy.
    Analyze {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        json: bool,
    },
    /// Infer the primitive weight vector and degree.
    Weights {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Show the well-forming substitution and failing pairs.
    Wellform {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Differents for a standard boundary, e.g. `--boundary z=3/5,y=4/5`.
    Diff {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, default_value = "")]
        boundary: String,
    },
    /// Check record files (or directories of `*.rec`) against recomputation.
    Verify {
        /// Files or directories; defaults to $SINGWF_TABLES or ./tables.
        paths: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        fail_fast: bool,
    },
}

#[derive(Args)]
struct PolyInput {
    poly: String,
    /// `t,z,x,y`, `x1..xn`, or a comma list; guessed from the input if absent.
    #[arg(long)]
    vars: Option<String>,
    /// Explicit weights `p1,p2,...` instead of inference.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
}

impl PolyInput {
    fn parse(&self) -> anyhow::Result<Polynomial> {
        let vars = match &self.vars {
            Some(spec) => VarList::parse_spec(spec)?,
            None => guess_vars(&self.poly)?,
        };
        Ok(parse_polynomial(&self.poly, &vars)?)
    }
}

/// Indexed variables when the text mentions `x<digits>`, otherwise `t,z,x,y`.
fn guess_vars(text: &str) -> anyhow::Result<VarList> {
    let bytes = text.as_bytes();
    let mut max = 0usize;
    for (i, &c) in bytes.iter().enumerate() {
        if c == b'x' {
            let digits: String = text[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                max = max.max(k);
            }
        }
    }
    Ok(if max > 0 { VarList::indexed(max)? } else { VarList::tzxy() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Analyze { input, json } => {
            let report = analyze(&input.parse()?, input.weights.as_deref())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json())?);
            } else {
                print!("{}", report.render_text());
            }
        }
        Command::Weights { input } => {
            let poly = input.parse()?;
            let w = infer_weights(&poly)?;
            println!("{w}");
        }
        Command::Wellform { input } => {
            let poly = input.parse()?;
            let report = analyze(&poly, input.weights.as_deref())?;
            let vars = poly.vars();
            let p = &report.profile;
            let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            println!("f = {}", render(&poly));
            println!("{}", report.weights);
            println!("q = ({}), Q = {}, passes = {}", list(&p.q), p.q_product, p.iterations);
            println!("g~ = {}", render(&report.tilde));
            println!("p~ = ({}), d~ = {}", list(&p.p_tilde), p.d_tilde);
            if p.failing_pairs.is_empty() {
                println!("well-formed");
            }
            for fp in &p.failing_pairs {
                println!(
                    "failing pair {{{},{}}}: q = {} does not divide {}",
                    vars.name(fp.i),
                    vars.name(fp.j),
                    fp.q,
                    p.d_tilde
                );
            }
        }
        Command::Diff { input, boundary } => {
            let poly = input.parse()?;
            let report = analyze(&poly, input.weights.as_deref())?;
            let b = StdBoundary::parse(&boundary, poly.vars())?;
            let show = |d: singwf_core::different::BoundaryDivisor| {
                if d.is_zero() {
                    "0".to_string()
                } else {
                    d.display(poly.vars())
                }
            };
            println!("Diff_E(B) = {}", show(report.diff_e_with(&b)?));
            println!("Diff_E/P(B) = {}", show(report.diff_over_wps_with(&b)?));
        }
        Command::Verify {
            paths,
            jobs,
            json,
            fail_fast,
        } => return verify(paths, jobs, json, fail_fast),
    }
    Ok(ExitCode::SUCCESS)
}

fn load(path: &Path) -> anyhow::Result<Vec<TableRecord>> {
    let recs = if path.is_dir() {
        load_dir(path)
    } else {
        load_records(path)
    };
    recs.with_context(|| format!("loading {}", path.display()))
}

fn verify(paths: Vec<PathBuf>, jobs: usize, json: bool, fail_fast: bool) -> anyhow::Result<ExitCode> {
    let paths = if paths.is_empty() {
        vec![std::env::var_os("SINGWF_TABLES").map_or_else(|| PathBuf::from("tables"), PathBuf::from)]
    } else {
        paths
    };
    let mut records = Vec::new();
    for p in &paths {
        records.extend(load(p)?);
    }
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }

    let outcomes: Vec<VerifyOutcome> = if fail_fast {
        let mut out = Vec::new();
        for r in &records {
            let o = verify_record(r);
            let failed = o.status == VerifyStatus::Fail;
            out.push(o);
            if failed {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        pool.install(|| records.par_iter().map(verify_record).collect())
    };

    let count = |s: VerifyStatus| outcomes.iter().filter(|o| o.status == s).count();
    let (pass, fail, skip) = (
        count(VerifyStatus::Pass),
        count(VerifyStatus::Fail),
        count(VerifyStatus::Skip),
    );
    if json {
        println!("{}", serde_json::to_string_pretty(&outcomes)?);
    } else {
        for o in &outcomes {
            match o.status {
                VerifyStatus::Pass => println!("PASS {}", o.id),
                VerifyStatus::Skip => {
                    println!("SKIP {} ({})", o.id, o.reason.as_deref().unwrap_or(""))
                }
                VerifyStatus::Fail => {
                    println!("FAIL {}", o.id);
                    for d in &o.diffs {
                        println!("    {}: expected {}, computed {}", d.field, d.expected, d.computed);
                    }
                }
            }
        }
        println!("{pass} passed, {fail} failed, {skip} skipped");
    }
    Ok(if fail > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
