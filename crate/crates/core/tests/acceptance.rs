//! Acceptance criteria 1–7. Prints one `criterion N PASS|FAIL …` line per
//! criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use numsg_hilbert::verification::{self, CriterionOutcome};

fn report(outcome: &CriterionOutcome) -> bool {
    println!("{}", outcome.line());
    for note in &outcome.notes {
        println!("    {note}");
    }
    for failure in outcome.failures.iter().take(20) {
        println!("    failure: {failure}");
    }
    outcome.passed
}

fn verify_paper_command() -> CriterionOutcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_numsg"))
        .arg("verify-paper")
        .output()
        .expect("spawn numsg");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout
        .lines()
        .filter(|l| l.starts_with("criterion "))
        .collect();
    let passing = lines.iter().filter(|l| l.contains(" PASS ")).count();
    let mut failures = Vec::new();
    if !out.status.success() {
        failures.push(format!("exit status {:?}", out.status.code()));
    }
    if lines.len() != 6 || passing != 6 {
        failures.push(format!(
            "{passing} of {} criteria passed:\n{stdout}",
            lines.len()
        ));
    }
    CriterionOutcome {
        id: 7,
        title: "verify-paper runs criteria 1-6 and exits 0".into(),
        passed: failures.is_empty(),
        failures,
        notes: vec![format!(
            "exit status {:?}, {passing} criteria passed",
            out.status.code()
        )],
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn main() -> ExitCode {
    let mut outcomes = verification::run_all();
    if let Some(six) = outcomes.iter_mut().find(|o| o.id == 6) {
        if six.elapsed_ms >= verification::CORPUS_TIME_LIMIT.as_millis() {
            six.passed = false;
            six.failures
                .push(format!("runtime {} ms over the limit", six.elapsed_ms));
        }
    }
    if let Some(four) = outcomes.iter_mut().find(|o| o.id == 4) {
        if four.notes.iter().any(|n| n.contains("capped")) {
            four.passed = false;
            four.failures.push("sweep hit the tuple cap".into());
        }
    }
    outcomes.push(verify_paper_command());
    let all = outcomes
        .iter()
        .map(report)
        .collect::<Vec<_>>()
        .into_iter()
        .all(|b| b);
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILED" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
