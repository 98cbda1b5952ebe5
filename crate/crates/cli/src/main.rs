//! Command-line front end: every library operation on files and flags.
//!
//! Exit codes are disjoint by cause: 0 when the checked property holds,
//! 1 when a violation or verification failure was found (with a witness
//! file sufficient to replay it), 2 for malformed input or usage errors.
//! Given identical arguments, files and seeds, stdout is byte-identical
//! across reruns; timings go to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::json;
use ulcgeo::counterexample::{family_point, limit_scan, FamilyPoint};
use ulcgeo::liggett::{fuzz, theorem_check, FuzzOptions};
use ulcgeo::{realize, volume_poly, Body, Error, Rat, Seq};

#[derive(Parser)]
#[command(name = "ulcgeo", version, about = "Exact ULC sequence and Minkowski volume toolkit")]
struct Cli {
    /// Append a machine-readable JSON summary as the final stdout line
    #[arg(long, global = true)]
    machine: bool,

    /// Where a witness file is written when a violation is found
    #[arg(long, global = true, default_value = "witness.json")]
    witness: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a sequence file for ultra-logconcavity of the given order
    Check {
        /// ULC / Newton order d (must be at least length - 1)
        #[arg(long)]
        order: u64,
        /// Allow signed entries: check the Newton inequalities only
        #[arg(long)]
        signed: bool,
        /// Sequence file, a JSON array of rationals like ["1", "1/2", 3]
        file: PathBuf,
    },
    /// Convolve two sequence files
    Convolve {
        a: PathBuf,
        b: PathBuf,
        /// Write the result here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Realize a strictly positive ULC sequence as a simplex body pair
    Realize {
        file: PathBuf,
        /// Directory for p.json, q.json and realization.json
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Volume polynomial Vol(tP + Q) of two polytope files
    Volpoly { p: PathBuf, q: PathBuf },
    /// Convolution theorem check on two sequence files
    Theorem {
        a: PathBuf,
        /// Declared ULC order of the first sequence
        #[arg(long)]
        la: u64,
        b: PathBuf,
        /// Declared ULC order of the second sequence
        #[arg(long)]
        lb: u64,
        /// Also run the geometric route through realized bodies
        #[arg(long)]
        geometric: bool,
    },
    /// Drive the theorem check with seeded random ULC pairs
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 8)]
        max_order: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Run the geometric route every k-th trial (0 disables)
        #[arg(long, default_value_t = 0)]
        geometric_every: u64,
    },
    /// Evaluate the signed family (1, a, 0, -b, 1) against the order-8
    /// Newton threshold
    Counterexample {
        /// Family parameter a as a rational p/q
        #[arg(long)]
        a: Option<String>,
        /// Family parameter b as a rational p/q
        #[arg(long)]
        b: Option<String>,
        /// Scan the path a = eps^2, b = eps over these epsilons
        #[arg(long, value_delimiter = ',')]
        scan: Option<Vec<String>>,
    },
}

enum Outcome {
    Holds,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s).with_context(|| format!("parsing rational `{s}`"))
}

fn write_witness(path: &Path, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("witness serializes");
    fs::write(path, text).with_context(|| format!("writing witness {}", path.display()))?;
    println!("witness: {}", path.display());
    Ok(())
}

fn machine_line(cli: &Cli, value: &serde_json::Value) {
    if cli.machine {
        println!("{value}");
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Check {
            order,
            signed,
            file,
        } => {
            let seq: Seq = read_json(file)?;
            let report = if *signed {
                seq.newton_check(*order)?
            } else {
                seq.is_ulc(*order)?
            };
            println!("check: {seq} at order {order}: {report}");
            let holds = report.holds();
            if !holds {
                write_witness(
                    &cli.witness,
                    &json!({
                        "command": "check",
                        "file": file.display().to_string(),
                        "order": order,
                        "signed": signed,
                        "seq": seq,
                        "report": report,
                    }),
                )?;
            }
            machine_line(
                cli,
                &json!({"command": "check", "order": order, "signed": signed, "report": report}),
            );
            Ok(if holds { Outcome::Holds } else { Outcome::Violation })
        }

        Command::Convolve { a, b, output } => {
            let a: Seq = read_json(a)?;
            let b: Seq = read_json(b)?;
            let c = a.convolve(&b);
            let rendered = serde_json::to_string(&c).expect("sequence serializes");
            match output {
                Some(path) => {
                    fs::write(path, &rendered)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!("convolution written to {}", path.display());
                }
                None => println!("{rendered}"),
            }
            machine_line(cli, &json!({"command": "convolve", "result": c}));
            Ok(Outcome::Holds)
        }

        Command::Realize { file, output } => {
            let seq: Seq = read_json(file)?;
            match realize(&seq) {
                Ok(r) => {
                    let lambda = serde_json::to_string(&r.lambda()).expect("serializes");
                    println!("lambda: {lambda}");
                    println!("proportionality: {}", r.proportionality());
                    if let Some(dir) = output {
                        fs::create_dir_all(dir)
                            .with_context(|| format!("creating {}", dir.display()))?;
                        let (p, q) = r.bodies();
                        write_pretty(&dir.join("p.json"), &json!(p))?;
                        write_pretty(&dir.join("q.json"), &json!(q))?;
                        write_pretty(&dir.join("realization.json"), &json!(r))?;
                        println!("bodies written to {}", dir.display());
                    }
                    machine_line(
                        cli,
                        &json!({
                            "command": "realize",
                            "lambda": r.lambda(),
                            "proportionality": r.proportionality(),
                        }),
                    );
                    Ok(Outcome::Holds)
                }
                Err(
                    e @ (Error::NotUlc { .. }
                    | Error::NotPositive { .. }
                    | Error::RealizationMismatch { .. }),
                ) => {
                    println!("not realizable: {e}");
                    write_witness(
                        &cli.witness,
                        &json!({
                            "command": "realize",
                            "file": file.display().to_string(),
                            "seq": seq,
                            "reason": e.to_string(),
                        }),
                    )?;
                    machine_line(cli, &json!({"command": "realize", "error": e.to_string()}));
                    Ok(Outcome::Violation)
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Volpoly { p, q } => {
            let p: Body = read_json(p)?;
            let q: Body = read_json(q)?;
            let poly = volume_poly(&p, &q)?;
            println!(
                "volume polynomial (dim {}): {}",
                poly.dim,
                serde_json::to_string(&poly.coeffs).expect("serializes")
            );
            machine_line(
                cli,
                &json!({"command": "volpoly", "dim": poly.dim, "coeffs": poly.coeffs}),
            );
            Ok(Outcome::Holds)
        }

        Command::Theorem {
            a,
            la,
            b,
            lb,
            geometric,
        } => {
            let a: Seq = read_json(a)?;
            let b: Seq = read_json(b)?;
            let verdict = theorem_check(&a, *la, &b, *lb, *geometric)?;
            println!("convolution: {}", verdict.c);
            println!("ulc order {}: {}", verdict.l + verdict.d, verdict.ulc_report);
            match verdict.geometric_match {
                Some(true) => println!("geometric route: exact match"),
                Some(false) => println!("geometric route: MISMATCH"),
                None => {}
            }
            let holds = verdict.holds();
            if !holds {
                write_witness(&cli.witness, &json!({"command": "theorem", "verdict": verdict}))?;
            }
            machine_line(
                cli,
                &json!({
                    "command": "theorem",
                    "holds": holds,
                    "report": verdict.ulc_report,
                    "geometric_match": verdict.geometric_match,
                }),
            );
            Ok(if holds { Outcome::Holds } else { Outcome::Violation })
        }

        Command::Fuzz {
            trials,
            max_order,
            seed,
            geometric_every,
        } => {
            let options = FuzzOptions {
                trials: *trials,
                max_order: *max_order,
                seed: *seed,
                geometric_every: *geometric_every,
            };
            let summary = fuzz(&options);
            println!("{summary}");
            eprintln!("elapsed: {:?}", summary.elapsed);
            let clean = summary.violations.is_empty();
            if !clean {
                write_witness(&cli.witness, &json!({"command": "fuzz", "summary": summary}))?;
            }
            machine_line(cli, &json!({"command": "fuzz", "summary": summary}));
            Ok(if clean { Outcome::Holds } else { Outcome::Violation })
        }

        Command::Counterexample { a, b, scan } => {
            let points: Vec<FamilyPoint> = match (a, b, scan) {
                (Some(a), Some(b), None) => vec![family_point(&parse_rat(a)?, &parse_rat(b)?)?],
                (None, None, Some(scan)) => {
                    let eps: Vec<Rat> =
                        scan.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
                    limit_scan(&eps)?
                }
                _ => bail!("pass either --a and --b, or --scan"),
            };
            let mut violated_any = false;
            for p in &points {
                println!(
                    "a={} b={} ratio={} threshold={} violated={}",
                    p.a_param, p.b_param, p.ratio, p.threshold, p.violated
                );
                if p.violated {
                    violated_any = true;
                    let report = p.conv.newton_check(8).expect("convolution has length 9");
                    println!("  self-convolution {report}");
                }
            }
            if violated_any {
                write_witness(&cli.witness, &json!({"command": "counterexample", "points": points}))?;
            }
            machine_line(
                cli,
                &json!({"command": "counterexample", "points": points}),
            );
            Ok(if violated_any {
                Outcome::Violation
            } else {
                Outcome::Holds
            })
        }
    }
}

fn write_pretty(path: &Path, value: &serde_json::Value) -> Result<()> {
    fs::write(
        path,
        serde_json::to_string_pretty(value).expect("serializes"),
    )
    .with_context(|| format!("writing {}", path.display()))
}
