//! The census of Z_3 Levi graphs with the solver outcome of each class.
//!
//! Pass parameter vectors on the command line to solve those instead of the
//! class representatives.

use polycyclic::realize::SolveOptions;
use polycyclic::report::census_report;
use polycyclic::voltage::{enumerate_z3, EnumerationFilters, ParameterVector};

fn main() -> polycyclic::Result<()> {
    let records = enumerate_z3(EnumerationFilters::default());
    let vectors = std::env::args().skip(1).map(|a| ParameterVector::parse(3, &a)).collect::<polycyclic::Result<Vec<_>>>()?;
    let report = census_report(&records, &vectors, Some(&SolveOptions::new(256)?))?;
    print!("{}", report.to_text());
    Ok(())
}
