use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use setfam::multifamilies::{inn_hull, out_core};
use setfam::natep::{cogap_diagnostic, in_g, in_h, out_cogap, seq_limit, NamedFamily};
use setfam::topology::multiset_limit;
use setfam::{EpSequence, EpSet, Family, FiniteTopology, MultiFamily, MultiSet};
use setfam_verifier::sweeps::DEFAULT_SEED;
use setfam_verifier::{census, run_all, run_sweep, CensusTable, ScopeConfig, SweepReport, VerifierError};

#[derive(Parser)]
#[command(name = "setfam", version, about = "Set-family species, multi-family hulls and verification sweeps")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Species report for a family.
    Classify { family: String },
    /// Associate family `{S : S^c not in F}`.
    Aso { family: String },
    /// Largest outer multi-family below an increasing one.
    OutCore { multifamily: String },
    /// Smallest inner multi-family above an increasing one.
    InnHull { multifamily: String },
    /// Multi-set limit of an increasing multi-family in a topology.
    Limit { multifamily: String, topology: String },
    /// Limit of an eventually periodic sequence measured by a named family on the naturals.
    SeqLimit {
        sequence: String,
        #[arg(long, default_value = "G")]
        family: String,
        /// Topology on the sequence's universe; discrete if omitted.
        #[arg(long)]
        topology: Option<String>,
    },
    /// Gap statistics of an eventually periodic set, e.g. `0110(10)`.
    Cogap { set: String },
    /// Species counts over all families on an N-point universe.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Run one sweep or all of them.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        sweep: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Input problems map to exit code 2, failed checks to 1.
enum Outcome {
    Pass,
    Fail,
}

/// A path, or the JSON itself when the argument starts with `{`.
fn load<T: DeserializeOwned>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {arg}"))
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn multiset_table(l: &MultiSet) -> String {
    let u = l.universe();
    (0..u.len()).map(|x| format!("{:>8}  {}\n", u.label(x), l.get(x))).collect()
}

fn census_table(t: &CensusTable) -> String {
    let mut out = format!("families on {} points: {}\n", t.n, t.total);
    for (k, v) in &t.counts {
        out += &format!("  {k:<28}{v:>8}\n");
    }
    out += "self-aso x filter\n";
    for (k, v) in &t.cross_tab {
        out += &format!("  {k:<28}{v:>8}\n");
    }
    for (k, v) in &t.assertions {
        out += &format!("  [{}] {k}\n", if *v { "ok" } else { "FAILED" });
    }
    out
}

fn report_line(r: &SweepReport) -> String {
    format!(
        "{:<20} {:<4} {:>9}/{:<9} {:>7} ms",
        r.id,
        if r.ok() { "PASS" } else { "FAIL" },
        r.passed,
        r.instances,
        r.elapsed_ms
    )
}

fn run(cli: Cli) -> Result<Outcome> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Classify { family } => {
            let f: Family = load(&family)?;
            let report = f.classify();
            if pretty {
                println!("{}\n{report:#?}", f.display());
            } else {
                emit(&report)?;
            }
        }
        Command::Aso { family } => {
            let f: Family = load(&family)?;
            if pretty {
                println!("{}", f.aso().display());
            } else {
                emit(&f.aso())?;
            }
        }
        Command::OutCore { multifamily } => {
            let m: MultiFamily = load(&multifamily)?;
            let out = out_core(&m)?;
            if pretty {
                println!("{}", out.display());
            } else {
                emit(&out)?;
            }
        }
        Command::InnHull { multifamily } => {
            let m: MultiFamily = load(&multifamily)?;
            let inn = inn_hull(&m)?;
            if pretty {
                println!("{}", inn.display());
            } else {
                emit(&inn)?;
            }
        }
        Command::Limit { multifamily, topology } => {
            let m: MultiFamily = load(&multifamily)?;
            let t: FiniteTopology = load(&topology)?;
            let lim = multiset_limit(&m, &t)?;
            if pretty {
                print!("{}", multiset_table(&lim));
            } else {
                emit(&lim)?;
            }
        }
        Command::SeqLimit { sequence, family, topology } => {
            let x: EpSequence = load(&sequence)?;
            let fam: NamedFamily = family.parse()?;
            let t = match topology {
                Some(t) => load(&t)?,
                None => FiniteTopology::discrete(x.universe()),
            };
            let lim = seq_limit(&x, &t, fam)?;
            if pretty {
                print!("{}", multiset_table(&lim));
            } else {
                emit(&lim)?;
            }
        }
        Command::Cogap { set } => {
            let s: EpSet = set.parse()?;
            let d = cogap_diagnostic(&s);
            let value = json!({
                "set": s,
                "finite": s.is_finite(),
                "cofinite": s.is_cofinite(),
                "in_G": in_g(&s),
                "in_H": in_h(&s),
                "gap": s.gap(),
                "cogap": d.cogap,
                "out_cogap": out_cogap(&s),
                "max_gap_anywhere": d.max_gap_anywhere,
                "agree": d.agree,
            });
            if pretty {
                println!("{s}: gap {} cogap {} out-cogap {}", s.gap(), d.cogap, out_cogap(&s));
            } else {
                emit(&value)?;
            }
        }
        Command::Census { n } => {
            let t = census(n)?;
            if pretty {
                print!("{}", census_table(&t));
            } else {
                emit(&t)?;
            }
            if !t.all_assertions_hold() {
                return Ok(Outcome::Fail);
            }
        }
        Command::Verify { sweep, all, n, samples, seed } => {
            let reports = if all {
                if n.is_some() || samples.is_some() {
                    bail!(VerifierError::UnknownSweep("--n and --samples apply to a single --sweep".into()));
                }
                run_all(seed)?
            } else {
                let id = sweep.expect("clap requires --sweep without --all");
                vec![run_sweep(&id, &ScopeConfig { n, samples, seed })?]
            };
            let passed = reports.iter().all(SweepReport::ok);
            if pretty {
                for r in &reports {
                    println!("{}", report_line(r));
                    if let Some(cx) = &r.counterexample {
                        println!("  counterexample: {cx}");
                    }
                }
            } else {
                emit(&json!({ "passed": passed, "reports": reports }))?;
            }
            if !passed {
                return Ok(Outcome::Fail);
            }
        }
    }
    Ok(Outcome::Pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
