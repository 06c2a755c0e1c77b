//! The ten acceptance criteria, run exactly. Prints one line per criterion
//! and exits nonzero if any criterion fails or overruns a budget below.

use std::process::ExitCode;
use std::time::Duration;

use arcseries::verify::{run_suite, CriterionReport, Suite, PROPERTY_CASES};

/// Per-n budget for the Gröbner route of criterion 1.
const GROEBNER_PER_N: Duration = Duration::from_secs(60);
/// Budget for all five combinatorial series at N = 300.
const COMBINATORIAL_TOTAL: Duration = Duration::from_secs(5);
/// Budget for gordon_check over k = 2..8 at M = 500.
const GORDON_TOTAL: Duration = Duration::from_secs(10);
/// Budget for each geometry comparison.
const GEOMETRY_EACH: Duration = Duration::from_secs(120);

fn budgets(id: u8) -> Vec<(String, Duration)> {
    match id {
        1 => (2..=6)
            .map(|n| (format!("groebner n={n}"), GROEBNER_PER_N))
            .chain([("combinatorial".to_string(), COMBINATORIAL_TOTAL)])
            .collect(),
        2 => vec![("gordon_check k=2..8 M=500".to_string(), GORDON_TOTAL)],
        8 => [
            "rational double point",
            "normal crossings",
            "smooth A^1",
            "smooth A^2",
            "smooth A^3",
            "multiplicity x^3 + y^4",
        ]
        .into_iter()
        .map(|l| (l.to_string(), GEOMETRY_EACH))
        .collect(),
        _ => Vec::new(),
    }
}

/// Problems beyond the report's own verdict: missing or overrun timings,
/// and too few randomized cases.
fn extra_problems(r: &CriterionReport) -> Vec<String> {
    let mut out = Vec::new();
    for (label, budget) in budgets(r.id) {
        match r.timing(&label) {
            None => out.push(format!("no timing recorded for {label}")),
            Some(t) if t.elapsed >= budget => out.push(format!("{label} took {:?}, budget {:?}", t.elapsed, budget)),
            Some(_) => {}
        }
    }
    if r.id == 10 && (PROPERTY_CASES < 200 || r.checks < 4 * 200) {
        out.push(format!("only {} property checks", r.checks));
    }
    out
}

fn main() -> ExitCode {
    let reports = run_suite(Suite::All);
    let mut all_ok = reports.len() == 10;
    for r in &reports {
        let problems = extra_problems(r);
        let ok = r.passed && problems.is_empty();
        all_ok &= ok;
        println!(
            "criterion {:>2} ({}): {} [{:.1} ms]",
            r.id,
            r.suite,
            if ok { "pass" } else { "FAIL" },
            r.elapsed_ms
        );
        if !r.passed {
            println!("{r}");
        }
        for p in problems {
            println!("    {p}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some criteria failed");
        ExitCode::FAILURE
    }
}
