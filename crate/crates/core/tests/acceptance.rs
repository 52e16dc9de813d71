//! One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;

use kideal::verify::{run, Status, VerifyOptions};

fn main() -> ExitCode {
    let report = match run(VerifyOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    for c in &report.criteria {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!("{tag} criterion {:>2}: {} ({:.0} ms)", c.id, c.title, c.elapsed_ms);
        for f in c.failures.iter().take(8) {
            println!("       - {f}");
        }
        if c.failures.len() > 8 {
            println!("       - ... {} more", c.failures.len() - 8);
        }
        for n in &c.notes {
            println!("       . {n}");
        }
    }
    let failed = report.criteria.iter().filter(|c| c.status == Status::Fail).count();
    println!("{} of {} criteria pass", report.criteria.len() - failed, report.criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
