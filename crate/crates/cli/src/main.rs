//! `flagpoly`: command-line access to root data, Ehrhart polynomials, string polytopes,
//! reflexivity checks and the verification suites.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input, 3 unsupported
//! construction, 4 resource cap reached.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use flagpoly_core::stringcones::DEFAULT_CRYSTAL_CAP;
use flagpoly_core::Error;
use serde_json::json;

use args::Cli;
use commands::Context;

const CAP_VAR: &str = "FLAGPOLY_CRYSTAL_CAP";

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) => 3,
        Error::CrystalTooLarge { .. } | Error::DenominatorBound(_) => 4,
        _ => 2,
    }
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid-input",
        Error::Unsupported(_) => "unsupported",
        Error::CrystalTooLarge { .. } => "crystal-too-large",
        Error::DenominatorBound(_) => "denominator-bound",
        Error::Unbounded => "unbounded",
        Error::Empty => "empty",
        Error::DualUndefined(_) => "dual-undefined",
        Error::Parse(_) => "parse",
    }
}

fn crystal_cap() -> Result<usize, Error> {
    match std::env::var(CAP_VAR) {
        Ok(v) => {
            v.trim().parse().map_err(|_| Error::InvalidInput(format!("{CAP_VAR}={v:?} is not a positive integer")))
        }
        Err(_) => Ok(DEFAULT_CRYSTAL_CAP),
    }
}

fn fail(e: &Error, json_out: bool) -> ExitCode {
    eprintln!("error: {e}");
    if json_out {
        println!("{}", json!({"error": error_code(e), "message": e.to_string()}));
    }
    ExitCode::from(exit_code(e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match crystal_cap() {
        Ok(crystal_cap) => Context { crystal_cap },
        Err(e) => return fail(&e, cli.json),
    };
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k.into()).build_global() {
            eprintln!("warning: could not configure threads: {e}");
        }
    }
    match commands::run(cli.command, &ctx) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serialisable"));
            } else {
                print!("{}", out.text);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail(&e, cli.json),
    }
}
