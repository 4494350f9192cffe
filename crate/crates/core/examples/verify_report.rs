//! Runs the built-in claim suite and prints the report as a table.
//!
//! `cargo run --release --example verify_report -- stretch` runs the slower suite.

use idealfact::verify::{run_suite, Suite, VerifyConfig};

fn main() {
    let suite = match std::env::args().nth(1).as_deref() {
        Some("stretch") => Suite::Stretch,
        _ => Suite::Core,
    };
    let report = run_suite(suite, &VerifyConfig::default());
    print!("{}", report.to_table());
    std::process::exit(report.exit_code());
}
