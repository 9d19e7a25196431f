//! Command-line front end.
//!
//! Graphs travel as graph6, one per line, on stdin or via `--in`. Exit
//! codes: 0 success (and PASS), 1 usage or parameter error, 2 a claim
//! finished FAIL or COUNTEREXAMPLE, 3 I/O or format error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use randic_core::family::{construct_member, enumerate_members, FamilyName, FamilySpec};
use randic_core::graph::Graph;
use randic_core::randic::randic_exact;
use randic_core::transform::{apply_transform, delta_randic, find_sites, TransformKind};
use randic_core::verify::{
    claim_ids, extremal_search, verify_claim, ClaimParams, ClaimStatus, SearchOptions,
    DECIMAL_DIGITS,
};

#[derive(Parser)]
#[command(
    name = "randic",
    about = "Exact Randic index computation and extremal verification for k-cyclic graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Read graph6 lines from this file instead of standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact and decimal Randic index of each input graph.
    Randic {
        #[command(flatten)]
        input: InputArg,
        /// Decimal digits to print.
        #[arg(long, default_value_t = DECIMAL_DIGITS)]
        digits: usize,
    },
    /// Print the degree profile and edge-type signature of each input graph.
    Signature {
        #[command(flatten)]
        input: InputArg,
    },
    /// Emit one member of an extremal family (or all members up to
    /// isomorphism with --all).
    Construct {
        /// Family name: lambda1, gamma1, lambda2, gamma2, omega1..omega8,
        /// upsilon1..upsilon6, regular3.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Enumerate every member up to isomorphism instead.
        #[arg(long)]
        all: bool,
    },
    /// List or apply transformation sites on each input graph.
    Transform {
        /// One of t1, t2, t3, t4, t5.
        #[arg(long)]
        kind: String,
        /// Apply the site with this index (as printed by --list).
        #[arg(long, conflicts_with = "list")]
        site: Option<usize>,
        /// List sites with their exact Randic deltas (the default).
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Stream one graph6 line per isomorphism class with the given order
    /// and size.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "max-degree")]
        max_degree: Option<usize>,
        /// Restrict to connected graphs.
        #[arg(long)]
        connected: bool,
    },
    /// Exact ranking of the top Randic values over all connected graphs
    /// with n vertices and cyclomatic number k.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// How many distinct values to rank.
        #[arg(long, default_value_t = 1)]
        top: usize,
        #[arg(long = "max-degree")]
        max_degree: Option<usize>,
    },
    /// Run one registered claim and report PASS, FAIL, or COUNTEREXAMPLE.
    Verify {
        /// Claim id, or "list" to print the registry.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Emit the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer closes the pipe (e.g. `| head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn usage_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: msg.into(),
    }
}

fn io_error(msg: impl Into<String>) -> CliError {
    CliError {
        code: 3,
        message: msg.into(),
    }
}

/// Read graph6 lines from the file or stdin; blank lines are skipped.
fn read_graphs(input: &InputArg) -> Result<Vec<Graph>, CliError> {
    let text = match &input.input {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| io_error(format!("cannot read {path}: {e}")))?
        }
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| io_error(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let mut graphs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g =
            Graph::from_graph6(line).map_err(|e| io_error(format!("line {}: {e}", lineno + 1)))?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(io_error("no graphs in input"));
    }
    Ok(graphs)
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Randic { input, digits } => {
            if digits == 0 {
                return Err(usage_error("--digits must be at least 1"));
            }
            for g in read_graphs(&input)? {
                let v = randic_exact(&g);
                println!("{}\t{}", v, v.to_decimal(digits));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Signature { input } => {
            for g in read_graphs(&input)? {
                println!(
                    "n={} m={}\tprofile: {}\tsignature: {}",
                    g.n(),
                    g.edge_count(),
                    g.degree_profile(),
                    g.edge_type_signature()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, n, k, all } => {
            let name: FamilyName = family.parse().map_err(|e| usage_error(format!("{e}")))?;
            let spec = FamilySpec::new(name, n, k).map_err(|e| usage_error(format!("{e}")))?;
            if all {
                let members = enumerate_members(&spec).map_err(|e| usage_error(format!("{e}")))?;
                for g in members {
                    println!("{}", g.to_graph6());
                }
            } else {
                let g = construct_member(&spec).map_err(|e| usage_error(format!("{e}")))?;
                println!("{}", g.to_graph6());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            kind,
            site,
            list: _,
            input,
        } => {
            let kind = TransformKind::parse(&kind)
                .ok_or_else(|| usage_error(format!("unknown transformation kind: {kind}")))?;
            for g in read_graphs(&input)? {
                let sites = find_sites(&g, kind);
                match site {
                    Some(index) => {
                        let s = sites.get(index).ok_or_else(|| {
                            usage_error(format!(
                                "site index {index} out of range ({} sites found)",
                                sites.len()
                            ))
                        })?;
                        let out =
                            apply_transform(&g, s).map_err(|e| usage_error(format!("{e}")))?;
                        println!("{}", out.to_graph6());
                    }
                    None => {
                        for (i, s) in sites.iter().enumerate() {
                            let delta =
                                delta_randic(&g, s).map_err(|e| usage_error(format!("{e}")))?;
                            println!(
                                "{}\t{}\tdelta = {} = {}",
                                i,
                                s,
                                delta,
                                delta.to_decimal(DECIMAL_DIGITS)
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            m,
            max_degree,
            connected,
        } => {
            let spec = randic_core::enumerate::EnumSpec {
                n,
                m,
                max_degree,
                connected_only: connected,
            };
            randic_core::enumerate::for_each(&spec, |g| println!("{}", g.to_graph6()))
                .map_err(|e| usage_error(format!("{e}")))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal {
            n,
            k,
            top,
            max_degree,
        } => {
            let report = extremal_search(
                n,
                k,
                &SearchOptions {
                    top,
                    max_degree,
                    workers: 1,
                },
            )
            .map_err(|e| usage_error(format!("{e}")))?;
            print!("{report}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            n,
            k,
            workers,
            json,
        } => {
            if workers == 0 {
                return Err(usage_error("--workers must be at least 1"));
            }
            if claim == "list" {
                for id in claim_ids() {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let result = verify_claim(&claim, &ClaimParams { n, k, workers })
                .map_err(|e| usage_error(format!("{e}")))?;
            if json {
                println!("{}", result.to_json());
            } else {
                print!("{result}");
            }
            match result.status {
                ClaimStatus::Pass => Ok(ExitCode::SUCCESS),
                ClaimStatus::Fail | ClaimStatus::Counterexample => Ok(ExitCode::from(2)),
            }
        }
    }
}
