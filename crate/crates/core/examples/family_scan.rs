//! Solves the F1 family members for moduli 3 to 6.

use polycyclic::families::{scan_family, Family, FamilySpec};
use polycyclic::realize::SolveOptions;

fn main() -> polycyclic::Result<()> {
    let specs = FamilySpec::all(Family::F1, 3..=6);
    for row in scan_family(&specs, &SolveOptions::new(192)?) {
        let sep = row.min_separation_f64().map_or("-".to_string(), |s| format!("{s:.4}"));
        println!(
            "{:<10} lift valid {:<5} full {} partial {} degenerate {:>2} separation {sep}",
            row.spec.to_string(),
            row.combinatorially_valid(),
            row.full,
            row.partial,
            row.degenerate
        );
    }
    Ok(())
}
