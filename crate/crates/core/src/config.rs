//! Certified geometric configurations: coordinates, incidences, and the
//! checks that make a realization strong.

use crate::error::{Error, Result};
use crate::geom::HomTriple;
use crate::incidence::{levi_from_incidences, IncidenceStructure, Kind, Label, LeviGraph};
use crate::real::{MpFloat, Precision, Real};
use crate::scene::Scene;

#[derive(Clone, Debug)]
pub struct GeometricConfiguration {
    pub m: u32,
    pub precision: Precision,
    pub points: Vec<(Label, HomTriple<MpFloat>)>,
    pub lines: Vec<(Label, HomTriple<MpFloat>)>,
    pub incidences: Vec<(Label, Label)>,
    pub max_incidence_residual: MpFloat,
    pub min_point_separation: MpFloat,
    pub min_line_separation: MpFloat,
    /// Order of the group of rotations about the origin fixing the configuration.
    pub symmetry_order: u32,
}

/// A rotation or reflection about the origin, as the first row `(c, s)` of
/// its matrix: rotation `[[c, -s], [s, c]]`, reflection `[[c, s], [s, -c]]`.
#[derive(Clone, Debug)]
pub struct Isometry {
    pub reflection: bool,
    pub c: MpFloat,
    pub s: MpFloat,
}

impl Isometry {
    pub fn apply(&self, h: &HomTriple<MpFloat>) -> HomTriple<MpFloat> {
        // Orthogonal, so lines transform like points.
        let [x, y, w] = h.coords.clone();
        let (c, s) = (self.c.clone(), self.s.clone());
        let coords = if self.reflection {
            [c.clone() * x.clone() + s.clone() * y.clone(), s * x - c * y, w]
        } else {
            [c.clone() * x.clone() - s.clone() * y.clone(), s * x + c * y, w]
        };
        HomTriple { coords, kind: h.kind }
    }
}

fn min_separation(els: &[(Label, HomTriple<MpFloat>)], p: Precision) -> MpFloat {
    let mut best: Option<MpFloat> = None;
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let d = els[i].1.projective_distance(&els[j].1);
            best = Some(match best {
                Some(b) => b.min_of(d),
                None => d,
            });
        }
    }
    best.unwrap_or_else(|| MpFloat::one(p))
}

fn setwise_fixed(els: &[(Label, HomTriple<MpFloat>)], g: &Isometry, tol: &MpFloat) -> bool {
    els.iter().all(|(_, h)| {
        let im = g.apply(h);
        els.iter().any(|(_, k)| im.proj_eq(k, tol))
    })
}

/// Label-level image of an isometry on a configuration, if it permutes
/// points among points and lines among lines.
pub fn induced_permutation(cfg: &GeometricConfiguration, g: &Isometry, tol: &MpFloat) -> Option<Vec<(Label, Label)>> {
    let mut out = Vec::new();
    for (l, h) in cfg.points.iter().chain(cfg.lines.iter()) {
        let im = g.apply(h);
        let pool = if h.kind == Kind::Point { &cfg.points } else { &cfg.lines };
        let (t, _) = pool.iter().find(|(_, k)| im.proj_eq(k, tol))?;
        out.push((l.clone(), t.clone()));
    }
    Some(out)
}

impl GeometricConfiguration {
    /// Assembles a configuration and measures it. Incidences are taken as
    /// given; use [`extract_incidences`] to read them off coordinates.
    pub fn new(
        m: u32,
        points: Vec<(Label, HomTriple<MpFloat>)>,
        lines: Vec<(Label, HomTriple<MpFloat>)>,
        incidences: Vec<(Label, Label)>,
    ) -> Result<Self> {
        let p = points.first().or(lines.first()).map_or(Precision::DOUBLE, |e| e.1.precision());
        let find = |pool: &[(Label, HomTriple<MpFloat>)], l: &Label| -> Result<HomTriple<MpFloat>> {
            pool.iter()
                .find(|(k, _)| k == l)
                .map(|e| e.1.clone())
                .ok_or_else(|| Error::Validation(format!("incidence names unknown element {l}")))
        };
        let mut max_res = MpFloat::zero(p);
        for (pl, ll) in &incidences {
            let r = find(&points, pl)?.incidence_residual(&find(&lines, ll)?);
            max_res = max_res.max_of(r);
        }
        let mut cfg = GeometricConfiguration {
            m,
            precision: p,
            min_point_separation: min_separation(&points, p),
            min_line_separation: min_separation(&lines, p),
            points,
            lines,
            incidences,
            max_incidence_residual: max_res,
            symmetry_order: 1,
        };
        cfg.symmetry_order = cfg.isometries().iter().filter(|g| !g.reflection).count() as u32;
        Ok(cfg)
    }

    pub fn from_scene(s: &Scene<MpFloat>) -> Result<Self> {
        let mut points = Vec::new();
        let mut lines = Vec::new();
        for (c, i, e) in s.elements.iter() {
            let h = HomTriple { coords: e.clone(), kind: c.kind() };
            let l = Label::new(c.name(), i);
            match c.kind() {
                Kind::Point => points.push((l, h)),
                Kind::Line => lines.push((l, h)),
            }
        }
        let inc = s.incidences().into_iter().map(|(p, l, _)| (p, l)).collect();
        GeometricConfiguration::new(s.m, points, lines, inc)
    }

    pub fn tolerance(&self) -> MpFloat {
        MpFloat::half_tolerance(self.precision)
    }

    /// All points pairwise distinct, all lines pairwise distinct, every
    /// listed incidence within tolerance.
    pub fn is_strong(&self) -> bool {
        let t = self.tolerance();
        self.min_point_separation > t && self.min_line_separation > t && self.max_incidence_residual < t
    }

    pub fn verify_strong(&self) -> Result<()> {
        if self.is_strong() {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "not a strong realization: min point separation {:.3e}, min line separation {:.3e}, max residual {:.3e}",
                self.min_point_separation.to_f64(),
                self.min_line_separation.to_f64(),
                self.max_incidence_residual.to_f64()
            )))
        }
    }

    pub fn incidence_structure(&self) -> Result<IncidenceStructure> {
        IncidenceStructure::new(
            self.points.iter().map(|e| e.0.clone()).collect(),
            self.lines.iter().map(|e| e.0.clone()).collect(),
            self.incidences.clone(),
        )
    }

    pub fn levi_graph(&self) -> Result<LeviGraph> {
        levi_from_incidences(&self.incidence_structure()?)
    }

    /// Rotations and reflections about the origin mapping points to points
    /// and lines to lines, found from where they can send the outermost point.
    pub fn isometries(&self) -> Vec<Isometry> {
        let tol = self.tolerance();
        let aff: Vec<[MpFloat; 2]> = self.points.iter().filter_map(|(_, h)| h.affine().ok()).collect();
        let Some(p0) = aff
            .iter()
            .max_by(|a, b| {
                let ra = a[0].square() + a[1].square();
                let rb = b[0].square() + b[1].square();
                ra.partial_cmp(&rb).unwrap_or(std::cmp::Ordering::Equal)
            })
            .cloned()
        else {
            return Vec::new();
        };
        let rho2 = p0[0].square() + p0[1].square();
        if rho2.sqrt() < tol {
            return Vec::new();
        }
        let mut out = Vec::new();
        for q in &aff {
            let rq = q[0].square() + q[1].square();
            if (rq - rho2.clone()).abs() > tol.clone() * rho2.clone() {
                continue;
            }
            let rot = Isometry {
                reflection: false,
                c: (p0[0].clone() * q[0].clone() + p0[1].clone() * q[1].clone()) / rho2.clone(),
                s: (p0[0].clone() * q[1].clone() - p0[1].clone() * q[0].clone()) / rho2.clone(),
            };
            let refl = Isometry {
                reflection: true,
                c: (p0[0].clone() * q[0].clone() - p0[1].clone() * q[1].clone()) / rho2.clone(),
                s: (p0[1].clone() * q[0].clone() + p0[0].clone() * q[1].clone()) / rho2.clone(),
            };
            for g in [rot, refl] {
                if setwise_fixed(&self.points, &g, &tol) && setwise_fixed(&self.lines, &g, &tol) {
                    out.push(g);
                }
            }
        }
        out
    }
}

/// Reads incidences off coordinates: all point/line pairs with normalized
/// residual below `tol`.
pub fn extract_incidences(
    points: &[(Label, HomTriple<MpFloat>)],
    lines: &[(Label, HomTriple<MpFloat>)],
    tol: &MpFloat,
) -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for (ll, l) in lines {
        for (pl, p) in points {
            if p.incidence_residual(l) < *tol {
                out.push((pl.clone(), ll.clone()));
            }
        }
    }
    out
}
