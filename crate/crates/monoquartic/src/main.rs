//! `monoquartic` command line interface.
//!
//! Exit codes: 0 on success, 1 on configuration/domain errors, 2 when a scan
//! finds a closed-form vs oracle mismatch (a finding, not a crash).

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use monoquartic::polyint::IntPoly;
use monoquartic::reciprocal::ReciprocalQuartic;
use monoquartic::survey::{self, AuditSelector, CampaignConfig, OutputFormat};
use monoquartic::Error;

#[derive(Parser)]
#[command(
    name = "monoquartic",
    version,
    about = "Classify reciprocal quartics x^4 + A*x^3 + B*x^2 + A*x + 1: irreducibility, monogenicity, Galois group"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single (A, B) pair.
    Classify {
        #[arg(long = "A", allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long = "B", allow_negative_numbers = true)]
        b: Option<i64>,
        /// Polynomial text instead of coefficients, e.g. "x^4 + 9*x^3 + 19*x^2 + 9*x + 1".
        #[arg(long, conflicts_with_all = ["a", "b"])]
        poly: Option<String>,
        /// Attach per-prime index-criterion reports and the resolvent cubic.
        #[arg(long)]
        explain: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Also run the generic oracles and report them.
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustively classify a coefficient rectangle.
    Scan {
        #[arg(long = "A-min", allow_negative_numbers = true)]
        a_min: i64,
        #[arg(long = "A-max", allow_negative_numbers = true)]
        a_max: i64,
        #[arg(long = "B-min", allow_negative_numbers = true)]
        b_min: i64,
        #[arg(long = "B-max", allow_negative_numbers = true)]
        b_max: i64,
        /// Cross-validate every cell against the generic oracles.
        #[arg(long)]
        oracle: bool,
        /// Also audit Frobenius factorization patterns per irreducible cell.
        #[arg(long)]
        frobenius: bool,
        #[arg(long, default_value_t = 50)]
        frobenius_samples: usize,
        /// Output file for the records.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "csv")]
        format: String,
        /// Worker threads for the row shards.
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search the box |A|, |B| <= bound for monogenic members with odd A*B
    /// and square W (the cyclic-Galois set).
    FindF5 {
        #[arg(long)]
        bound: i64,
    },
    /// Pairwise discriminant-distinctness audit over a member family.
    Audit {
        /// B0 (the B = 0, A >= 2 branch) or F1..F4.
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        k_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        k_max: i64,
    },
    /// Generate the k-th parametric witness of family 1..4, if admissible.
    Witness {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        k: i64,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

fn run() -> Result<ExitCode, Error> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap usage problems are configuration errors (exit 1), except
            // for --help/--version which print and succeed.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return Ok(ExitCode::SUCCESS);
            }
            eprint!("{e}");
            return Ok(ExitCode::from(1));
        }
    };
    match cli.command {
        Command::Classify {
            a,
            b,
            poly,
            explain,
            json,
            oracle,
        } => classify_cmd(a, b, poly, explain, json, oracle),
        Command::Scan {
            a_min,
            a_max,
            b_min,
            b_max,
            oracle,
            frobenius,
            frobenius_samples,
            out,
            format,
            workers,
            seed,
        } => {
            let config = CampaignConfig {
                a_min,
                a_max,
                b_min,
                b_max,
                run_oracle: oracle || frobenius,
                run_frobenius: frobenius,
                frobenius_samples,
                out,
                format: OutputFormat::from_str(&format)?,
                workers,
                seed,
            };
            let (_, summary) = survey::scan(&config)?;
            print!("{}", summary.render());
            if summary.mismatches.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::FindF5 { bound } => {
            let hits = survey::find_f5(bound)?;
            for q in &hits {
                println!("{} {}", q, q.expand());
            }
            println!("total: {}", hits.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            family,
            k_min,
            k_max,
        } => {
            let selector = AuditSelector::from_str(&family)?;
            let report = survey::distinctness_audit(selector, k_min, k_max)?;
            println!(
                "members: {}  pairs checked: {}  inconclusive (non-mirror): {}",
                report.members.len(),
                report.pairs_checked,
                report.inconclusive.len()
            );
            for (k, q, disc) in &report.members {
                println!("k={k}: {q} disc={disc}");
            }
            for (q1, q2) in &report.inconclusive {
                println!("INCONCLUSIVE PAIR: {q1} vs {q2}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { family, k } => {
            match monoquartic::reciprocal::family_witness(family, k)? {
                Some(q) => println!("admissible: {} {}", q, q.expand()),
                None => println!("inadmissible: certificate for k = {k} is not squarefree"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn classify_cmd(
    a: Option<i64>,
    b: Option<i64>,
    poly: Option<String>,
    explain: bool,
    json: bool,
    oracle: bool,
) -> Result<ExitCode, Error> {
    let q = match (a, b, poly) {
        (Some(a), Some(b), None) => ReciprocalQuartic::new(a, b)?,
        (None, None, Some(text)) => reciprocal_from_poly(&text)?,
        _ => {
            return Err(Error::Config(
                "provide either --A and --B, or --poly".to_string(),
            ))
        }
    };
    let record = survey::classify_one(&q, oracle)?;
    if json {
        let mut body = record.to_json();
        if explain {
            let ex = survey::explain_one(&q)?;
            let reports: Vec<String> = ex.reports.iter().map(|r| r.to_json()).collect();
            let resolvent = match &ex.resolvent {
                Some(r) => format!("\"{r}\""),
                None => "null".to_string(),
            };
            body.pop(); // strip the closing brace
            body.push_str(&format!(
                ",\"explain\":{{\"resolvent_cubic\":{},\"dedekind\":[{}]}}}}",
                resolvent,
                reports.join(",")
            ));
        }
        println!("{body}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("f(x) = {}", q.expand());
    let ws = record.wset;
    println!(
        "W1 = {}, W2 = {}, W3 = {}, W = {}, disc = {}",
        ws.w1, ws.w2, ws.w3, ws.w, ws.disc
    );
    println!("irreducible: {}", record.irreducible);
    match record.monogenic.witness() {
        Some(p) => println!("monogenic: no (index divisible by {p})"),
        None => println!("monogenic: {}", {
            use monoquartic::survey::MonogenicStatus::*;
            match record.monogenic {
                Yes => "yes",
                Reducible => "reducible",
                Unsupported => "unsupported (A = 0, B != 0)",
                No { .. } => unreachable!(),
            }
        }),
    }
    if let Some(g) = record.galois {
        println!("galois: {g}");
    }
    println!("family: {}", record.family);
    if let Some(om) = record.oracle_monogenic {
        println!("oracle monogenic: {om:?}");
    }
    if let Some(og) = record.oracle_galois {
        println!("oracle galois: {og}");
    }
    if explain {
        let ex = survey::explain_one(&q)?;
        if let Some(r) = &ex.resolvent {
            println!("resolvent cubic: {r}");
        }
        for rep in &ex.reports {
            println!(
                "p = {}: T = {} (mod p), h1 = {}, h2 = {}, F = {}, gcd = {}, divides index: {}",
                rep.prime,
                rep.factors
                    .iter()
                    .map(|(f, e)| format!("({f})^{e}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                rep.h1,
                rep.h2,
                rep.f_poly,
                rep.gcd_poly,
                rep.p_divides_index
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reciprocal_from_poly(text: &str) -> Result<ReciprocalQuartic, Error> {
    let poly = IntPoly::from_str(text)?;
    let bad = |msg: &str| Error::Config(format!("--poly: {msg}"));
    if poly.degree() != Some(4) || !poly.is_monic() {
        return Err(bad("expected a monic quartic"));
    }
    if poly.coeff(0) != 1.into() || poly.coeff(1) != poly.coeff(3) {
        return Err(bad(
            "expected a reciprocal quartic x^4 + A*x^3 + B*x^2 + A*x + 1",
        ));
    }
    let to_i64 = |v: num_bigint::BigInt| i64::try_from(v).map_err(|_| Error::ValueTooLarge);
    ReciprocalQuartic::new(to_i64(poly.coeff(3))?, to_i64(poly.coeff(2))?)
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (e.g. `monoquartic scan ... | head`)
    // instead of panicking in println!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
