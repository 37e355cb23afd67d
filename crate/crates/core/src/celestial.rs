//! Celestial configurations: three concentric rings of points with line
//! classes given by spans and crossings, and the GR (21_4).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::config::GeometricConfiguration;
use crate::error::{Error, Result};
use crate::geom::HomTriple;
use crate::incidence::Label;
use crate::real::{MpFloat, Precision, Real};

pub const POINT_RINGS: [&str; 3] = ["u", "v", "w"];
pub const LINE_CLASSES: [&str; 3] = ["L", "M", "N"];

/// `m#(s1,t1;s2,t2;s3,t3)`. Line class `k` joins points of ring `k` that
/// are `s_k` apart; two of its lines `t_k` apart meet in ring `k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CelestialSymbol {
    pub m: u32,
    pub spans: [u32; 3],
    pub crossings: [u32; 3],
}

impl fmt::Display for CelestialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t) = (self.spans, self.crossings);
        write!(f, "{}#({},{};{},{};{},{})", self.m, s[0], t[0], s[1], t[1], s[2], t[2])
    }
}

impl FromStr for CelestialSymbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a symbol like 7#(2,1;3,2;1,3), got {s:?}"));
        let (m, rest) = s.trim().split_once('#').ok_or_else(bad)?;
        let body = rest.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let nums: Vec<u32> = body
            .split([',', ';'])
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if nums.len() != 6 {
            return Err(bad());
        }
        let m = m.trim().parse().map_err(|_| bad())?;
        CelestialSymbol::new(m, [nums[0], nums[2], nums[4]], [nums[1], nums[3], nums[5]])
    }
}

impl CelestialSymbol {
    pub fn new(m: u32, spans: [u32; 3], crossings: [u32; 3]) -> Result<Self> {
        if m < 3 {
            return Err(Error::Validation(format!("modulus {m} too small for a celestial symbol")));
        }
        if spans.iter().chain(&crossings).any(|&v| v < 1 || 2 * v > m) {
            return Err(Error::Validation(format!("symbol entries must lie in [1, {}]", m / 2)));
        }
        Ok(CelestialSymbol { m, spans, crossings })
    }

    pub fn gr() -> Self {
        CelestialSymbol { m: 7, spans: [2, 3, 1], crossings: [1, 2, 3] }
    }

    /// Rotates the ring order by one.
    pub fn shifted(&self) -> Self {
        let (s, t) = (self.spans, self.crossings);
        CelestialSymbol { m: self.m, spans: [s[1], s[2], s[0]], crossings: [t[1], t[2], t[0]] }
    }

    pub fn cyclic_class(&self) -> [CelestialSymbol; 3] {
        [*self, self.shifted(), self.shifted().shifted()]
    }

    /// No line class crosses at its own span, and no crossing equals the
    /// span of the next class.
    pub fn index_conditions(&self) -> bool {
        (0..3).all(|k| self.spans[k] != self.crossings[k] && self.crossings[k] != self.spans[(k + 1) % 3])
    }

    fn cos_pi(&self, k: u32, p: Precision) -> MpFloat {
        (MpFloat::pi(p) * MpFloat::ratio(k as i64, self.m as i64, p)).cos()
    }

    /// Ring radii starting from 1, followed by the radius the third line
    /// class would close onto.
    pub fn radii(&self, p: Precision) -> [MpFloat; 4] {
        let mut r = [MpFloat::one(p), MpFloat::zero(p), MpFloat::zero(p), MpFloat::zero(p)];
        for k in 0..3 {
            r[k + 1] = r[k].clone() * self.cos_pi(self.spans[k], p) / self.cos_pi(self.crossings[k], p);
        }
        r
    }
}

/// `∏ cos(π s_k / m) = ∏ cos(π t_k / m)` to within `2^-(bits/2)`.
pub fn cosine_condition(sym: &CelestialSymbol, p: Precision) -> bool {
    let [_, _, _, closing] = sym.radii(p);
    (closing - MpFloat::one(p)).abs() < MpFloat::half_tolerance(p)
}

fn ring_point(r: &MpFloat, angle: MpFloat) -> HomTriple<MpFloat> {
    HomTriple::affine_point(r.clone() * angle.cos(), r.clone() * angle.sin())
}

/// Coordinates and incidences of the celestial configuration. Ring 0 has
/// radius 1 with `u_0` on the positive x-axis.
pub fn celestial_construct(sym: &CelestialSymbol, p: Precision) -> Result<GeometricConfiguration> {
    let m = sym.m;
    let tol = MpFloat::half_tolerance(p);
    if !cosine_condition(sym, p) {
        return Err(Error::Degenerate(format!("{sym} fails the cosine condition, rings do not close")));
    }
    let drift: u32 = (0..3).map(|k| sym.spans[k] + 2 * m - sym.crossings[k]).sum::<u32>() % (2 * m);
    if drift % 2 != 0 {
        return Err(Error::Degenerate(format!("{sym} closes onto a ring rotated by an odd multiple of pi/{m}")));
    }
    let shift = drift / 2;
    let radii = sym.radii(p);
    for a in 0..3 {
        if radii[a] < tol {
            return Err(Error::Degenerate(format!("{sym}: ring {} collapses to the center", POINT_RINGS[a])));
        }
        for b in a + 1..3 {
            if (radii[a].clone() - radii[b].clone()).abs() < tol {
                return Err(Error::Degenerate(format!(
                    "{sym}: rings {} and {} have equal radii",
                    POINT_RINGS[a], POINT_RINGS[b]
                )));
            }
        }
    }
    let pi = MpFloat::pi(p);
    let step = |num: i64| pi.clone() * MpFloat::ratio(num, m as i64, p);
    let mut points = Vec::new();
    let mut lines = Vec::new();
    let mut incidences = Vec::new();
    // Ring k is rotated by offset[k]·π/m.
    let mut offset = 0i64;
    for k in 0..3 {
        for j in 0..m {
            points.push((Label::new(POINT_RINGS[k], j), ring_point(&radii[k], step(2 * j as i64 + offset))));
        }
        let (s, t) = (sym.spans[k], sym.crossings[k]);
        let d = radii[k].clone() * sym.cos_pi(s, p);
        let next = (k + 1) % 3;
        for j in 0..m {
            let psi = step(2 * j as i64 + offset + s as i64);
            let coords = [psi.cos(), psi.sin(), -d.clone()];
            let name = Label::new(LINE_CLASSES[k], j);
            lines.push((name.clone(), HomTriple::line(coords)?));
            incidences.push((Label::new(POINT_RINGS[k], j), name.clone()));
            incidences.push((Label::new(POINT_RINGS[k], (j + s) % m), name.clone()));
            let base = if next == 0 { j + shift } else { j };
            incidences.push((Label::new(POINT_RINGS[next], base % m), name.clone()));
            incidences.push((Label::new(POINT_RINGS[next], (base + t) % m), name));
        }
        offset += s as i64 - t as i64;
    }
    let cfg = GeometricConfiguration::new(m, points, lines, incidences)?;
    cfg.verify_strong().map_err(|e| Error::Degenerate(format!("{sym}: {e}")))?;
    Ok(cfg)
}

/// Symbols with entries in `[1, m/2]` meeting the index conditions and the
/// cosine condition whose construction is a strong realization.
pub fn admissible_symbols(m: u32, p: Precision) -> Vec<CelestialSymbol> {
    let h = m / 2;
    let mut out = Vec::new();
    let mut e = [1u32; 6];
    loop {
        if let Ok(sym) = CelestialSymbol::new(m, [e[0], e[2], e[4]], [e[1], e[3], e[5]]) {
            if sym.index_conditions() && cosine_condition(&sym, p) && celestial_construct(&sym, p).is_ok() {
                out.push(sym);
            }
        }
        let mut k = 5;
        loop {
            if e[k] < h {
                e[k] += 1;
                break;
            }
            e[k] = 1;
            if k == 0 {
                return out;
            }
            k -= 1;
        }
    }
}

/// The GR configuration `7#(2,1;3,2;1,3)`: rings of radii 1,
/// cos(2π/7)/cos(π/7) and cos(3π/7)/cos(π/7), the middle ring turned by π/7.
pub fn gr_coordinates(p: Precision) -> Result<GeometricConfiguration> {
    celestial_construct(&CelestialSymbol::gr(), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: CelestialSymbol = "7#(2,1;3,2;1,3)".parse().unwrap();
        assert_eq!(s, CelestialSymbol::gr());
        assert_eq!(s.to_string(), "7#(2,1;3,2;1,3)");
        assert!("7#(2,1;3,2)".parse::<CelestialSymbol>().is_err());
        assert!("7#(4,1;3,2;1,3)".parse::<CelestialSymbol>().is_err());
    }

    #[test]
    fn trivial_symbol_passes_cosine_only() {
        let p = Precision::new(128).unwrap();
        let s = CelestialSymbol::new(7, [2, 3, 1], [2, 3, 1]).unwrap();
        assert!(cosine_condition(&s, p));
        assert!(!s.index_conditions());
        assert!(!cosine_condition(&CelestialSymbol::new(7, [1, 1, 1], [2, 2, 2]).unwrap(), p));
    }

    #[test]
    fn gr_radii() {
        let p = Precision::new(128).unwrap();
        let cfg = gr_coordinates(p).unwrap();
        assert_eq!(cfg.points.len(), 21);
        assert_eq!(cfg.incidences.len(), 84);
        let c = |k: f64| (k * std::f64::consts::PI / 7.0).cos();
        let r = CelestialSymbol::gr().radii(p);
        assert!((r[1].to_f64() - c(2.0) / c(1.0)).abs() < 1e-15);
        assert!((r[2].to_f64() - c(3.0) / c(1.0)).abs() < 1e-15);
        let v0 = cfg.points[7].1.affine().unwrap();
        let ang = v0[1].to_f64().atan2(v0[0].to_f64());
        assert!((ang - std::f64::consts::PI / 7.0).abs() < 1e-15);
    }
}
