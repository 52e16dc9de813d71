use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kideal::groups::DEFAULT_GROUP_GUARD;
use kideal::verify::{VerifyOptions, DEFAULT_VERIFY_SEED};
use kideal_cli::render::render;
use kideal_cli::report::{algebra_report, pgl2_report, verify_report, Report};
use kideal_cli::{exit_code, EXIT_USAGE};

/// Kuelshammer ideals, blocks and the dihedral scalar for PGL2(q) and for algebra tables.
#[derive(Parser)]
#[command(name = "kideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classes, layer dims, block ledger and scalar decision for PGL2(q).
    Pgl2 {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        json: bool,
        /// Largest n in the reported T_n^perp chain.
        #[arg(long, default_value_t = 1)]
        depth: u32,
        /// Refuse groups with more elements than this.
        #[arg(long, default_value_t = DEFAULT_GROUP_GUARD)]
        guard: usize,
    },
    /// Validation and Kuelshammer dims of an algebra table in JSON.
    Algebra {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Largest n in the T_n^perp chain (default: until stable).
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Runs the acceptance criteria for all suite q up to qmax.
    VerifyPaper {
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_VERIFY_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Largest accepted `--depth`.
const MAX_DEPTH: u32 = 64;

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit(report: &Report, json: bool) -> ExitCode {
    if json {
        match serde_json::to_string_pretty(report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: cannot serialize report: {e}");
                return ExitCode::FAILURE;
            }
        }
    } else {
        print!("{}", render(report));
    }
    if report.failed() {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> ExitCode {
    let (result, json) = match cli.command {
        Command::Pgl2 { q, json, depth, guard } => {
            if q % 2 == 0 {
                return usage(&format!("q = {q} must be odd"));
            }
            if depth > MAX_DEPTH {
                return usage(&format!("--depth {depth} exceeds {MAX_DEPTH}"));
            }
            (pgl2_report(q, depth, guard), json)
        }
        Command::Algebra { file, json, depth } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return usage(&format!("cannot read {}: {e}", file.display())),
            };
            (algebra_report(&file.display().to_string(), &text, depth), json)
        }
        Command::VerifyPaper { qmax, threads, seed, json } => {
            if qmax < 9 {
                return usage(&format!("--qmax {qmax} must be at least 9"));
            }
            if let Some(n) = threads {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    return usage(&format!("cannot use {n} threads: {e}"));
                }
            }
            (verify_report(VerifyOptions { qmax, seed }, threads), json)
        }
    };
    match result {
        Ok(r) => emit(&r, json),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
