//! Runs the fast verification checks and prints one line per check.

use polycyclic::verify::{verify_all, VerifyOptions};

fn main() {
    let opts = VerifyOptions { bits: 256, only: vec![1, 2, 3, 4, 6, 7, 11, 12], records: None };
    let report = verify_all(&opts);
    for c in &report.checks {
        println!("{:?} {:>2} {}: {}", c.verdict, c.id, c.title, c.detail);
    }
    std::process::exit(report.exit_code());
}
