//! Ruler-and-compass construction of B(21_4) by bisection on Y_2.

use polycyclic::real::{Precision, Real};
use polycyclic::synthetic::{
    b_mirror_duality, bisect_realize, build_qc, geometric_symmetries, probe_positions, self_reciprocity_check, Frame,
};

fn main() -> polycyclic::Result<()> {
    let frame = Frame::standard(Precision::new(256)?);
    for x in probe_positions(&frame, 4) {
        let qc = build_qc(&x, &frame)?;
        println!("xpos {:+.6}: QC census {}", x.to_f64(), qc.qc_census());
    }

    let sol = bisect_realize(&frame)?;
    println!("Y_2 x = {}", sol.xpos.to_decimal());
    println!("gap {:.2e}, {} incidences, strong: {}", sol.gap.to_f64(), sol.config.incidences.len(), sol.config.is_strong());

    let sym = geometric_symmetries(&sol.config);
    println!("{} rotations, {} reflections", sym.rotations, sym.reflections);
    let r = self_reciprocity_check(&sol.config);
    println!("{}", r.summary());
    let pairs = b_mirror_duality();
    for m in &r.maps {
        println!("  {:?} map, mirror at {:?} rad, pairs R0 with r1: {}", m.kind, m.mirror_angle(), m.realizes(&pairs));
    }
    Ok(())
}
