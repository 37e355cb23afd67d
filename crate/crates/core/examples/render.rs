//! Writes B(21_4) and GR(21_4) as JSON catalogs and SVG drawings.
//!
//! Usage: render [output directory]

use std::path::PathBuf;

use polycyclic::celestial::gr_coordinates;
use polycyclic::io::{parse_config_catalog, Catalog, ConfigRecord, Provenance};
use polycyclic::real::Precision;
use polycyclic::realize::{realize, SolveOptions};
use polycyclic::render::{render_svg, Style};
use polycyclic::synthetic::{self_reciprocity_check, ReciprocityKind};
use polycyclic::voltage::ParameterVector;

fn main() -> polycyclic::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let params = ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0")?;
    let b = realize(3, &params, &SolveOptions::new(256)?)?.remove(0);
    let gr = gr_coordinates(Precision::new(256)?)?;

    for (name, cfg) in [("b21", &b), ("gr21", &gr)] {
        let r = self_reciprocity_check(cfg);
        let mut rec = ConfigRecord::from_config(name, cfg);
        if let Some(o) = &r.omega {
            rec = rec.with_omega(o);
        }
        if let Some(m) = r.maps.iter().find(|m| m.kind == ReciprocityKind::Reflexive) {
            rec = rec.with_mirror(&m.isometry);
        }
        let json = Catalog::new("configurations", Provenance::default(), vec![rec]).to_json()?;
        let back = parse_config_catalog(&json)?;
        std::fs::write(dir.join(format!("{name}.json")), &json)?;
        std::fs::write(dir.join(format!("{name}.svg")), render_svg(&back.records[0], &Style::default())?)?;
        println!("{name}: {} points, {} lines written", cfg.points.len(), cfg.lines.len());
    }
    Ok(())
}
