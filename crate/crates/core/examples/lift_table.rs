//! Lifts the reduced Levi graph of B(21_4) and prints its incidence table.

use polycyclic::incidence::{incidence_table, validate_nk};
use polycyclic::voltage::{lift, rlg_b_template, ParameterVector, B_LINE_CLASSES};

fn main() -> polycyclic::Result<()> {
    let params = ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0")?;
    let (g, s) = lift(&rlg_b_template(3, &params))?;
    let report = validate_nk(&g, 21, 4);
    println!("(21_4): {}, girth {}", report.valid, report.girth);
    print!("{}", incidence_table(&s, &B_LINE_CLASSES)?);
    Ok(())
}
