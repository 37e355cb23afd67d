//! Celestial symbols with seven-fold symmetry and the GR coordinates.

use polycyclic::celestial::{admissible_symbols, celestial_construct, gr_coordinates, CelestialSymbol};
use polycyclic::real::{Precision, Real};
use polycyclic::synthetic::{geometric_symmetries, self_reciprocity_check};

fn main() -> polycyclic::Result<()> {
    let p = Precision::new(128)?;
    for m in 7..=9 {
        let syms: Vec<String> = admissible_symbols(m, p).iter().map(ToString::to_string).collect();
        println!("m = {m}: {}", syms.join(" "));
    }

    let gr = gr_coordinates(p)?;
    let radii: Vec<String> = CelestialSymbol::gr().radii(p)[..3].iter().map(|r| format!("{:.6}", r.to_f64())).collect();
    println!("GR radii {}", radii.join(", "));
    let sym = geometric_symmetries(&gr);
    println!("{} rotations, {} reflections; {}", sym.rotations, sym.reflections, self_reciprocity_check(&gr).summary());

    let other: CelestialSymbol = "7#(3,1;2,3;1,2)".parse()?;
    let cfg = celestial_construct(&other, p)?;
    println!("{other}: {} incidences, min separation {:.4}", cfg.incidences.len(), cfg.min_point_separation.to_f64());
    Ok(())
}
