//! Solves the reduced system of B(21_4) and certifies the determinants.

use polycyclic::real::Real;
use polycyclic::realize::{known_root_check, solve_system, SolveOptions};
use polycyclic::voltage::ParameterVector;

fn main() -> polycyclic::Result<()> {
    let params = ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0")?;
    let opts = SolveOptions::new(256)?;
    for s in solve_system(3, &params, &opts)? {
        println!("{:?} at x = {:+.10}, z = {:+.10}", s.status, s.xf(), s.zf());
        if let Some((x, z)) = &s.exact {
            println!("  exactly ({x}, {z}): {}", s.witnesses.join("; "));
        }
        for c in &s.certifications {
            let ladder: Vec<String> = c.ladder.iter().map(|r| format!("{}:{:.0}", r.bits, r.value.log2_abs())).collect();
            println!("  {} {:?}  log2 residual by bits [{}]", c.name, c.outcome, ladder.join(" "));
        }
        if s.certifications.iter().any(|c| !c.ladder.is_empty()) {
            let k = known_root_check(&s.x, &s.z);
            println!("  alpha(x) = {:.2e}, beta(z) = {:.2e}", k.alpha_at_x.to_f64(), k.beta_at_z.to_f64());
        }
    }
    Ok(())
}
