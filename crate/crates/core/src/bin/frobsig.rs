use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use frobsig::cli::{run_text, Command, Flags};
use frobsig::finvariants::Engine;

/// Frobenius-splitting invariants of F_p[x_1..x_n]/I.
#[derive(Parser, Debug)]
#[command(name = "frobsig", version)]
struct Args {
    /// One of fpure, aq, prime, sdim, hk, witness, report.
    command: Command,
    /// Problem file.
    file: PathBuf,
    /// Largest Frobenius exponent e to compute (default 3).
    #[arg(long)]
    emax: Option<u32>,
    /// Emit key-sorted JSON instead of text.
    #[arg(long)]
    json: bool,
    /// auto, monomial or groebner.
    #[arg(long, default_value = "auto")]
    engine: Engine,
    /// Test element c for the strong F-regularity witness.
    #[arg(long)]
    witness: Option<String>,
    /// Exit with status 1 when R is not F-pure.
    #[arg(long)]
    strict: bool,
    /// Add wall_time_ms to JSON output.
    #[arg(long)]
    timing: bool,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("frobsig: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let emax_cap = match std::env::var("FROBSIG_EMAX_CAP") {
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(c) if c >= 1 => Some(c),
            _ => return fail(format!("FROBSIG_EMAX_CAP must be a positive integer, got `{v}`")),
        },
        Err(_) => None,
    };
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", args.file.display())),
    };
    let flags = Flags {
        e_max: args.emax,
        engine: Some(args.engine),
        witness: args.witness,
        strict: args.strict,
        timing: args.timing,
        emax_cap,
    };
    match run_text(args.command, &text, &flags) {
        Ok(rep) => {
            if args.json {
                print!("{}", rep.to_json());
            } else {
                print!("{}", rep.text);
            }
            ExitCode::from(rep.exit_code as u8)
        }
        Err(e) => fail(format!("{}: {e}", args.file.display())),
    }
}
