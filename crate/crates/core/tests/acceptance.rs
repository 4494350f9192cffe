//! Runs every acceptance criterion with zero tolerance and prints one line per
//! criterion. The stretch claim is reported too; it may be inconclusive.

use std::collections::BTreeMap;
use std::process::ExitCode;

use idealfact::verify::{run_suite, Status, Suite, VerifyConfig};

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let core = run_suite(Suite::Core, &config);

    let mut by_criterion: BTreeMap<u8, Vec<_>> = BTreeMap::new();
    for r in &core.results {
        by_criterion.entry(r.criterion).or_default().push(r);
    }
    let mut failed = false;
    for criterion in 1..=10u8 {
        let rows = by_criterion.get(&criterion).map(Vec::as_slice).unwrap_or_default();
        let ok = !rows.is_empty() && rows.iter().all(|r| r.status == Status::Pass);
        let ids: Vec<&str> = rows.iter().map(|r| r.id).collect();
        let ms: u64 = rows.iter().map(|r| r.elapsed_ms).sum();
        println!(
            "criterion {criterion:>2} {:<4} {} ({ms} ms)",
            if ok { "pass" } else { "FAIL" },
            ids.join(", ")
        );
        if !ok {
            failed = true;
            for r in rows.iter().filter(|r| r.status != Status::Pass) {
                println!("    {} {}: {}", r.id, r.status, r.witness);
            }
        }
    }

    let stretch = run_suite(Suite::Stretch, &config);
    for r in &stretch.results {
        println!("stretch {} {} ({} ms)", r.id, r.status, r.elapsed_ms);
        if r.status == Status::Fail {
            println!("    {}", r.witness);
            failed = true;
        }
    }

    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
