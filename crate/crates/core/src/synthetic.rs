//! Ruler-and-compass construction of B(21_4): the movable quasi-configuration
//! QC(B), its extension, and the search for the closing position of Y_2.
//! Also reciprocity and symmetry checks for centered configurations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::config::{extract_incidences, GeometricConfiguration, Isometry};
use crate::error::{Error, Result};
use crate::geom::{
    circumcircle, incircle, invert_circle, join, meet, midcircle_concentric, pole, polar, rotate, signed_distance,
    tangents_from, CircleData, CircleOrLine, HomTriple, Tangent,
};
use crate::incidence::{degree_census, IncidenceStructure, Kind, Label, TypeCensus};
use crate::real::{MpFloat, Precision, Real};

type Pt = [MpFloat; 2];

/// Position of the red triangle. `R_i` is `R_0` turned by `i * 120°` about
/// the origin.
#[derive(Clone, Debug)]
pub struct Frame {
    pub r0: Pt,
}

impl Frame {
    /// `R_0 = (sin 120°, 1/2)`, so `R_1 = (-sin 120°, 1/2)`, `R_2 = (0, -1)`.
    pub fn standard(p: Precision) -> Self {
        Frame { r0: [MpFloat::from_i64(3, p).sqrt() / MpFloat::from_i64(2, p), MpFloat::ratio(1, 2, p)] }
    }

    pub fn precision(&self) -> Precision {
        self.r0[0].precision()
    }

    pub fn red(&self) -> [HomTriple<MpFloat>; 3] {
        let r0 = HomTriple::affine_point(self.r0[0].clone(), self.r0[1].clone());
        orbit(&r0, 0)
    }

    /// Midpoint `M_01` of `R_0 R_1`.
    pub fn m01(&self) -> Pt {
        let [r0, r1, _] = self.red().map(|h| h.affine().expect("frame points are finite"));
        let two = MpFloat::from_i64(2, self.precision());
        [(r0[0].clone() + r1[0].clone()) / two.clone(), (r0[1].clone() + r1[1].clone()) / two]
    }

    /// Open range of x-coordinates of `Y_2` strictly between `R_1` and `M_01`.
    pub fn interval(&self) -> (MpFloat, MpFloat) {
        let r1 = self.red()[1].affine().expect("frame points are finite");
        let m = self.m01();
        if r1[0] < m[0] {
            (r1[0].clone(), m[0].clone())
        } else {
            (m[0].clone(), r1[0].clone())
        }
    }
}

/// `[X_0, X_1, X_2]` from `X_i`.
fn orbit(h: &HomTriple<MpFloat>, i: usize) -> [HomTriple<MpFloat>; 3] {
    std::array::from_fn(|k| rotate(h, k as i64 - i as i64, 3))
}

#[derive(Clone, Debug)]
pub struct Auxiliary {
    pub o: Pt,
    pub m01: Pt,
    pub a: Pt,
    /// Circle through `R_1`, `O`, `R_2`.
    pub circle_r1or2: CircleData<MpFloat>,
    /// Circle through `Y_0`, `O`, `R_1`.
    pub gamma_a: CircleData<MpFloat>,
    /// Vertices of the green triangle, `U_i = g_i ∩ g_{i+1}`.
    pub u: [Pt; 3],
}

#[derive(Clone, Debug)]
pub struct SyntheticScene {
    pub frame: Frame,
    pub xpos: MpFloat,
    pub points: Vec<(Label, HomTriple<MpFloat>)>,
    pub lines: Vec<(Label, HomTriple<MpFloat>)>,
    pub omega: CircleData<MpFloat>,
    pub aux: Auxiliary,
    pub y2_prime: Option<HomTriple<MpFloat>>,
}

pub const QC_POINT_CLASSES: [&str; 5] = ["R", "Y", "P", "G", "M"];
pub const QC_LINE_CLASSES: [&str; 5] = ["m", "p", "g", "r", "y"];

/// Point/line colour pairs whose incidences QC(B) carries.
pub const QC_INCIDENCE_TYPES: [(&str, &str); 14] = [
    ("R", "m"),
    ("Y", "m"),
    ("R", "p"),
    ("Y", "p"),
    ("R", "g"),
    ("P", "g"),
    ("P", "m"),
    ("P", "r"),
    ("G", "p"),
    ("G", "r"),
    ("P", "y"),
    ("M", "p"),
    ("M", "r"),
    ("M", "y"),
];

impl SyntheticScene {
    pub fn precision(&self) -> Precision {
        self.xpos.precision()
    }

    pub fn get(&self, class: &str, i: u32) -> Option<&HomTriple<MpFloat>> {
        let l = Label::new(class, i);
        self.points.iter().chain(&self.lines).find(|e| e.0 == l).map(|e| &e.1)
    }

    fn orbit_of(&self, class: &str) -> Result<[HomTriple<MpFloat>; 3]> {
        let mut out = Vec::with_capacity(3);
        for i in 0..3 {
            out.push(self.get(class, i).cloned().ok_or_else(|| Error::Internal(format!("scene lacks {class}{i}")))?);
        }
        Ok([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    fn push(&mut self, class: &str, els: [HomTriple<MpFloat>; 3]) {
        for (i, h) in els.into_iter().enumerate() {
            let e = (Label::new(class, i as u32), h);
            match e.1.kind {
                Kind::Point => self.points.push(e),
                Kind::Line => self.lines.push(e),
            }
        }
    }

    /// Incidences among the elements of the given classes, read off the
    /// coordinates at `2^-(bits/2)`.
    pub fn incidences_among(&self, point_classes: &[&str], line_classes: &[&str]) -> IncidenceStructure {
        let pts: Vec<_> = self.points.iter().filter(|e| point_classes.contains(&e.0.class.as_str())).cloned().collect();
        let lns: Vec<_> = self.lines.iter().filter(|e| line_classes.contains(&e.0.class.as_str())).cloned().collect();
        let inc = extract_incidences(&pts, &lns, &MpFloat::half_tolerance(self.precision()));
        IncidenceStructure::new(pts.into_iter().map(|e| e.0).collect(), lns.into_iter().map(|e| e.0).collect(), inc)
            .expect("labels are unique")
    }

    pub fn qc_structure(&self) -> IncidenceStructure {
        self.incidences_among(&QC_POINT_CLASSES, &QC_LINE_CLASSES)
    }

    pub fn qc_census(&self) -> TypeCensus {
        degree_census(&self.qc_structure())
    }

    /// Colour pairs realized by at least one incidence of QC(B).
    pub fn qc_incidence_types(&self) -> BTreeSet<(String, String)> {
        self.qc_structure().incidences.into_iter().map(|(p, l)| (p.class, l.class)).collect()
    }

    /// Signed distance from `Y_2` to `Y'_2` along `m_0`, positive towards `M_01`.
    pub fn gap(&self) -> Result<MpFloat> {
        let yp = self.y2_prime.as_ref().ok_or_else(|| Error::Internal("scene is not extended".into()))?.affine()?;
        let y2 = self.get("Y", 2).expect("Y is built first").affine()?;
        let r1 = self.frame.red()[1].affine()?;
        let m = &self.aux.m01;
        let (ux, uy) = (m[0].clone() - r1[0].clone(), m[1].clone() - r1[1].clone());
        let n = (ux.square() + uy.square()).sqrt();
        Ok(((yp[0].clone() - y2[0].clone()) * ux + (yp[1].clone() - y2[1].clone()) * uy) / n)
    }

    /// The full configuration on the 21 points and 21 lines of an extended
    /// scene, with incidences read off the coordinates.
    pub fn configuration(&self) -> Result<GeometricConfiguration> {
        if self.y2_prime.is_none() {
            return Err(Error::Internal("scene is not extended".into()));
        }
        let keep = |v: &[(Label, HomTriple<MpFloat>)], cls: &[&str]| -> Vec<(Label, HomTriple<MpFloat>)> {
            v.iter().filter(|e| cls.contains(&e.0.class.as_str())).cloned().collect()
        };
        let pts = keep(&self.points, &["R", "Y", "G", "C", "B", "M", "P"]);
        let lns = keep(&self.lines, &["r", "y", "g", "m", "b", "c", "p"]);
        let inc = extract_incidences(&pts, &lns, &MpFloat::half_tolerance(self.precision()));
        GeometricConfiguration::new(3, pts, lns, inc)
    }
}

/// Acute angle comparison key: larger means a smaller angle with `g`.
fn alignment(l: &HomTriple<MpFloat>, g: &HomTriple<MpFloat>) -> MpFloat {
    let n = |h: &HomTriple<MpFloat>| (h.coords[0].square() + h.coords[1].square()).sqrt();
    (l.coords[0].clone() * g.coords[0].clone() + l.coords[1].clone() * g.coords[1].clone()).abs() / (n(l) * n(g))
}

fn inverted(omega: &CircleData<MpFloat>, c: &CircleData<MpFloat>, what: &str) -> Result<CircleData<MpFloat>> {
    match invert_circle(omega, c)? {
        CircleOrLine::Circle(k) => Ok(k),
        CircleOrLine::Line(_) => Err(Error::Degenerate(format!("inverse of {what} is a line"))),
    }
}

fn pick_by_angle(ts: [Tangent<MpFloat>; 2], g: &HomTriple<MpFloat>, smaller: bool, step: &str) -> Result<HomTriple<MpFloat>> {
    let [t0, t1] = ts;
    let (a0, a1) = (alignment(&t0.line, g), alignment(&t1.line, g));
    if (a0.clone() - a1.clone()).abs() < MpFloat::half_tolerance(a0.precision()) {
        return Err(Error::Degenerate(format!("{step}: both tangents make the same angle with g_1")));
    }
    Ok(if (a0 > a1) == smaller { t0.line } else { t1.line })
}

fn pt(h: &HomTriple<MpFloat>) -> Result<Pt> {
    h.affine()
}

fn circle3(a: &HomTriple<MpFloat>, b: &HomTriple<MpFloat>, c: &HomTriple<MpFloat>) -> Result<CircleData<MpFloat>> {
    circumcircle(&pt(a)?, &pt(b)?, &pt(c)?)
}

/// Steps 1 to 11: QC(B) with `Y_2` on `m_0` at x-coordinate `xpos`.
pub fn build_qc(xpos: &MpFloat, frame: &Frame) -> Result<SyntheticScene> {
    let p = frame.precision();
    let xpos = xpos.with_precision(p);
    let (lo, hi) = frame.interval();
    if !(xpos > lo && xpos < hi) {
        return Err(Error::Domain(format!(
            "xpos {} outside the open interval ({}, {})",
            xpos.to_f64(),
            lo.to_f64(),
            hi.to_f64()
        )));
    }
    let o: Pt = [MpFloat::zero(p), MpFloat::zero(p)];
    let oh = HomTriple::affine_point(o[0].clone(), o[1].clone());
    // (1)
    let r = frame.red();
    let m: [HomTriple<MpFloat>; 3] = [join(&r[0], &r[1])?, join(&r[1], &r[2])?, join(&r[2], &r[0])?];
    let m01 = frame.m01();
    // (2)
    let r1 = pt(&r[1])?;
    let slope_t = (xpos.clone() - r1[0].clone()) / (m01[0].clone() - r1[0].clone());
    let y2 = HomTriple::affine_point(xpos.clone(), r1[1].clone() + slope_t * (m01[1].clone() - r1[1].clone()));
    let y = orbit(&y2, 2);
    // (3)
    let pl = orbit(&join(&y[2], &r[2])?, 2);
    // (4)
    let circle_r1or2 = circle3(&r[1], &oh, &r[2])?;
    let a = segment_circle(&pt(&y[0])?, &pt(&y[1])?, &circle_r1or2)?;
    // (5)
    let g = orbit(&join(&r[2], &HomTriple::affine_point(a[0].clone(), a[1].clone()))?, 1);
    // (6)
    let pp = orbit(&meet(&g[0], &m[2])?, 0);
    // (7)
    let omega = midcircle_concentric(&circle3(&pp[0], &pp[1], &pp[2])?, &incircle(&pl[0], &pl[1], &pl[2])?)?;
    // (8)
    let gamma_r = inverted(&omega, &circle3(&r[0], &r[1], &r[2])?, "the red circumcircle")?;
    let r_line = orbit(&pick_by_angle(tangents_from(&pt(&pp[1])?, &gamma_r)?, &g[1], true, "step 8")?, 1);
    // (9)
    let gg = orbit(&meet(&pl[0], &r_line[2])?, 0);
    // (10)
    let gamma_y = inverted(&omega, &circle3(&y[0], &y[1], &y[2])?, "the yellow circumcircle")?;
    let y_line = orbit(&pick_by_angle(tangents_from(&pt(&pp[1])?, &gamma_y)?, &g[1], false, "step 10")?, 1);
    // (11)
    let mm = orbit(&meet(&pl[2], &r_line[2])?, 0);

    let u = [pt(&meet(&g[0], &g[1])?)?, pt(&meet(&g[1], &g[2])?)?, pt(&meet(&g[2], &g[0])?)?];
    let gamma_a = circumcircle(&pt(&y[0])?, &o, &r1)?;
    let mut s = SyntheticScene {
        frame: frame.clone(),
        xpos,
        points: Vec::new(),
        lines: Vec::new(),
        omega,
        aux: Auxiliary { o, m01, a, circle_r1or2, gamma_a, u },
        y2_prime: None,
    };
    s.push("R", r);
    s.push("m", m);
    s.push("Y", y);
    s.push("p", pl);
    s.push("g", g);
    s.push("P", pp);
    s.push("r", r_line);
    s.push("G", gg);
    s.push("y", y_line);
    s.push("M", mm);
    Ok(s)
}

/// The unique point of the open segment `ab` on circle `c`.
fn segment_circle(a: &Pt, b: &Pt, c: &CircleData<MpFloat>) -> Result<Pt> {
    let p = c.precision();
    let (dx, dy) = (b[0].clone() - a[0].clone(), b[1].clone() - a[1].clone());
    let (fx, fy) = (a[0].clone() - c.center[0].clone(), a[1].clone() - c.center[1].clone());
    let qa = dx.square() + dy.square();
    let qb = MpFloat::from_i64(2, p) * (fx.clone() * dx.clone() + fy.clone() * dy.clone());
    let qc = fx.square() + fy.square() - c.radius.square();
    let disc = qb.square() - MpFloat::from_i64(4, p) * qa.clone() * qc;
    if disc.is_negative() {
        return Err(Error::Degenerate("step 4: segment Y_0Y_1 misses the circle R_1OR_2".into()));
    }
    let sq = disc.sqrt();
    let two_a = MpFloat::from_i64(2, p) * qa;
    let (zero, one) = (MpFloat::zero(p), MpFloat::one(p));
    let hits: Vec<MpFloat> = [(-qb.clone() - sq.clone()) / two_a.clone(), (-qb + sq) / two_a]
        .into_iter()
        .filter(|t| *t > zero && *t < one)
        .collect();
    match hits.as_slice() {
        [t] => Ok([a[0].clone() + t.clone() * dx, a[1].clone() + t.clone() * dy]),
        [] => Err(Error::Degenerate("step 4: segment Y_0Y_1 misses the circle R_1OR_2".into())),
        _ => Err(Error::Degenerate("step 4: segment Y_0Y_1 meets the circle R_1OR_2 twice".into())),
    }
}

/// Steps 12 to 16.
pub fn extend_scene(s: &SyntheticScene) -> Result<SyntheticScene> {
    let mut s = s.clone();
    let g = s.orbit_of("g")?;
    let y_line = s.orbit_of("y")?;
    let pl = s.orbit_of("p")?;
    let m = s.orbit_of("m")?;
    let y2 = s.get("Y", 2).cloned().expect("Y is built in step 2");
    // (12)
    let b = orbit(&meet(&g[0], &y_line[2])?, 0);
    // (13)
    let c_line = orbit(&join(&b[0], &b[2])?, 0);
    // (14)
    let gamma_b = inverted(&s.omega, &circle3(&b[0], &b[1], &b[2])?, "the blue circumcircle")?;
    let side_o = signed_distance(&pl[2], &s.aux.o);
    let opposite: Vec<HomTriple<MpFloat>> = tangents_from(&pt(&y2)?, &gamma_b)?
        .into_iter()
        .filter(|t| {
            let d = signed_distance(&pl[2], &t.touch);
            !d.is_zero() && d.is_negative() != side_o.is_negative()
        })
        .map(|t| t.line)
        .collect();
    let b1 = match opposite.as_slice() {
        [l] => l.clone(),
        [] => return Err(Error::Degenerate("step 14: no tangent lies beyond p_2".into())),
        _ => return Err(Error::Degenerate("step 14: both tangents lie beyond p_2".into())),
    };
    let b_line = orbit(&b1, 1);
    // (15)
    let c = orbit(&meet(&b_line[0], &b_line[1])?, 0);
    // (16) c_2 is the cyan line through B_1 and B_2, the one that must carry Y_2.
    let y2p = meet(&c_line[2], &m[0])?;
    s.push("B", b);
    s.push("c", c_line);
    s.push("b", b_line);
    s.push("C", c);
    s.y2_prime = Some(y2p);
    Ok(s)
}

pub fn gap_at(xpos: &MpFloat, frame: &Frame) -> Result<MpFloat> {
    extend_scene(&build_qc(xpos, frame)?)?.gap()
}

pub const PROBES: usize = 64;

/// Probe positions, evenly spaced inside the open interval.
pub fn probe_positions(frame: &Frame, n: usize) -> Vec<MpFloat> {
    let p = frame.precision();
    let (lo, hi) = frame.interval();
    (0..n)
        .map(|k| lo.clone() + (hi.clone() - lo.clone()) * MpFloat::ratio(2 * k as i64 + 1, 2 * n as i64, p))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SyntheticSolution {
    pub xpos: MpFloat,
    pub gap: MpFloat,
    pub scene: SyntheticScene,
    pub config: GeometricConfiguration,
}

/// Step 17: finds the position where `Y'_2 = Y_2`. A probe scan brackets
/// sign changes of the gap; each bracket is narrowed by bisection and a
/// safeguarded secant polish. Brackets around a pole of the gap (where `c_2`
/// is parallel to `m_0`) do not converge and are skipped.
pub fn bisect_realize(frame: &Frame) -> Result<SyntheticSolution> {
    let probes = probe_positions(frame, PROBES);
    let vals: Vec<Option<MpFloat>> = probes.iter().map(|x| gap_at(x, frame).ok()).collect();
    let mut brackets = 0;
    for k in 0..PROBES - 1 {
        let (Some(a), Some(b)) = (&vals[k], &vals[k + 1]) else { continue };
        if a.is_negative() == b.is_negative() {
            continue;
        }
        brackets += 1;
        if let Some((xpos, gap)) = narrow(frame, (probes[k].clone(), a.clone()), (probes[k + 1].clone(), b.clone())) {
            let scene = extend_scene(&build_qc(&xpos, frame)?)?;
            let config = scene.configuration()?;
            config.verify_strong()?;
            if config.incidences.len() != 84 {
                return Err(Error::Internal(format!(
                    "closed construction carries {} incidences instead of 84",
                    config.incidences.len()
                )));
            }
            return Ok(SyntheticSolution { xpos, gap, scene, config });
        }
    }
    Err(Error::Domain(if brackets == 0 {
        format!("no coincidence bracketed by {PROBES} probes")
    } else {
        format!("no coincidence bracketed by {PROBES} probes ({brackets} sign changes, all at poles)")
    }))
}

fn narrow(frame: &Frame, a: (MpFloat, MpFloat), b: (MpFloat, MpFloat)) -> Option<(MpFloat, MpFloat)> {
    let p = frame.precision();
    let bits = p.bits() as i32;
    let ((mut lo, mut flo), (mut hi, mut fhi)) = (a, b);
    let target = MpFloat::pow2(-(bits * 3 / 4), p);
    let width = MpFloat::pow2(-(bits - 8), p);
    let two = MpFloat::from_i64(2, p);
    let mut best = if flo.abs() < fhi.abs() { (lo.clone(), flo.clone()) } else { (hi.clone(), fhi.clone()) };
    for it in 0..4 * bits {
        let mid = (lo.clone() + hi.clone()) / two.clone();
        let sec = hi.clone() - fhi.clone() * (hi.clone() - lo.clone()) / (fhi.clone() - flo.clone());
        let x = if it >= 40 && sec > lo && sec < hi { sec } else { mid };
        let fx = gap_at(&x, frame).ok()?;
        if fx.abs() < best.1.abs() {
            best = (x.clone(), fx.clone());
        }
        if fx.abs() < target || fx.is_zero() {
            return Some(best);
        }
        if fx.is_negative() == flo.is_negative() {
            (lo, flo) = (x, fx);
        } else {
            (hi, fhi) = (x, fx);
        }
        if hi.clone() - lo.clone() < width {
            break;
        }
    }
    (best.1.abs() < MpFloat::half_tolerance(p)).then_some(best)
}

/// Root-mean-square distance between corresponding points after the best
/// similarity (rotation or reflection, scale, translation) taking `a` onto
/// `b`, relative to the size of `b`. Points correspond by label.
pub fn procrustes_residual(a: &GeometricConfiguration, b: &GeometricConfiguration) -> Result<MpFloat> {
    let p = a.precision;
    let mut pa = Vec::new();
    let mut pb = Vec::new();
    for (l, h) in &a.points {
        let k = b
            .points
            .iter()
            .find(|e| &e.0 == l)
            .ok_or_else(|| Error::Validation(format!("{l} has no counterpart")))?;
        pa.push(h.affine()?);
        pb.push(k.1.with_precision_affine(p)?);
    }
    if pa.len() != b.points.len() || pa.is_empty() {
        return Err(Error::Validation("configurations have different point sets".into()));
    }
    let n = MpFloat::from_i64(pa.len() as i64, p);
    let centered = |v: &mut Vec<Pt>| {
        let cx = v.iter().fold(MpFloat::zero(p), |s, q| s + q[0].clone()) / n.clone();
        let cy = v.iter().fold(MpFloat::zero(p), |s, q| s + q[1].clone()) / n.clone();
        for q in v.iter_mut() {
            *q = [q[0].clone() - cx.clone(), q[1].clone() - cy.clone()];
        }
    };
    centered(&mut pa);
    centered(&mut pb);
    let norm2 = |v: &[Pt]| v.iter().fold(MpFloat::zero(p), |s, q| s + q[0].square() + q[1].square());
    let (na, nb) = (norm2(&pa), norm2(&pb));
    let mut best: Option<MpFloat> = None;
    for flip in [false, true] {
        // Complex least squares: b ≈ w a (or w conj(a)).
        let src: Vec<Pt> = pa.iter().map(|q| if flip { [q[0].clone(), -q[1].clone()] } else { q.clone() }).collect();
        let mut re = MpFloat::zero(p);
        let mut im = MpFloat::zero(p);
        for (s, t) in src.iter().zip(&pb) {
            re = re + s[0].clone() * t[0].clone() + s[1].clone() * t[1].clone();
            im = im + s[0].clone() * t[1].clone() - s[1].clone() * t[0].clone();
        }
        let (wr, wi) = (re / na.clone(), im / na.clone());
        let mut err = MpFloat::zero(p);
        for (s, t) in src.iter().zip(&pb) {
            let x = wr.clone() * s[0].clone() - wi.clone() * s[1].clone();
            let y = wr.clone() * s[1].clone() + wi.clone() * s[0].clone();
            err = err + (x - t[0].clone()).square() + (y - t[1].clone()).square();
        }
        let r = (err / nb.clone()).sqrt();
        best = Some(match best {
            Some(b) => b.min_of(r),
            None => r,
        });
    }
    Ok(best.expect("two candidates"))
}

trait AffineAt {
    fn with_precision_affine(&self, p: Precision) -> Result<Pt>;
}

impl AffineAt for HomTriple<MpFloat> {
    fn with_precision_affine(&self, p: Precision) -> Result<Pt> {
        let [x, y] = self.affine()?;
        Ok([x.with_precision(p), y.with_precision(p)])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ReciprocityKind {
    /// The reciprocal image is the configuration itself.
    Perfect,
    /// Coincidence after a nontrivial rotation.
    Rotational,
    /// Coincidence after a reflection.
    Reflexive,
}

#[derive(Clone, Debug)]
pub struct SelfReciprocation {
    pub kind: ReciprocityKind,
    pub isometry: Isometry,
    /// Point to line, then line to point.
    pub pairing: Vec<(Label, Label)>,
}

impl SelfReciprocation {
    /// Direction of the mirror line in radians, for reflexive maps.
    pub fn mirror_angle(&self) -> Option<f64> {
        self.isometry.reflection.then(|| self.isometry.s.to_f64().atan2(self.isometry.c.to_f64()) / 2.0)
    }

    /// Whether this map pairs elements exactly as the given transpositions.
    pub fn realizes(&self, pairs: &[(Label, Label)]) -> bool {
        let mine: BTreeSet<(Label, Label)> = self.pairing.iter().cloned().collect();
        pairs.iter().all(|(a, b)| mine.contains(&(a.clone(), b.clone())) && mine.contains(&(b.clone(), a.clone())))
            && mine.len() == 2 * pairs.len()
    }
}

#[derive(Clone, Debug)]
pub struct ReciprocityReport {
    pub omega: Option<CircleData<MpFloat>>,
    pub maps: Vec<SelfReciprocation>,
}

impl ReciprocityReport {
    pub fn is_self_reciprocal(&self) -> bool {
        !self.maps.is_empty()
    }

    pub fn has(&self, kind: ReciprocityKind) -> bool {
        self.maps.iter().any(|m| m.kind == kind)
    }

    pub fn summary(&self) -> String {
        if self.maps.is_empty() {
            return "not self-reciprocal".into();
        }
        let kinds: BTreeSet<ReciprocityKind> = self.maps.iter().map(|m| m.kind).collect();
        let names: Vec<&str> = kinds
            .iter()
            .map(|k| match k {
                ReciprocityKind::Perfect => "perfectly",
                ReciprocityKind::Rotational => "rotationally",
                ReciprocityKind::Reflexive => "reflexibly",
            })
            .collect();
        format!(
            "{} self-reciprocal, omega radius {:.12}",
            names.join(", "),
            self.omega.as_ref().map_or(f64::NAN, |o| o.radius.to_f64())
        )
    }
}

fn line_distance(l: &HomTriple<MpFloat>) -> MpFloat {
    let [a, b, c] = l.coords.clone();
    c.abs() / (a.square() + b.square()).sqrt()
}

/// Searches for a circle about the origin whose reciprocity, followed by a
/// rotation or reflection about the origin, maps the configuration onto itself.
pub fn self_reciprocity_check(cfg: &GeometricConfiguration) -> ReciprocityReport {
    let p = cfg.precision;
    let tol = cfg.tolerance();
    let first_of = |els: &[(Label, HomTriple<MpFloat>)]| -> Vec<HomTriple<MpFloat>> {
        let mut seen = BTreeSet::new();
        els.iter().filter(|e| seen.insert(e.0.class.clone())).map(|e| e.1.clone()).collect()
    };
    let radii: Vec<MpFloat> = first_of(&cfg.points)
        .iter()
        .filter_map(|h| h.affine().ok())
        .map(|q| (q[0].square() + q[1].square()).sqrt())
        .collect();
    let dists: Vec<MpFloat> = first_of(&cfg.lines).iter().map(line_distance).collect();
    let mut candidates: Vec<MpFloat> = Vec::new();
    for r in &radii {
        for d in &dists {
            let w = (r.clone() * d.clone()).sqrt();
            if !w.is_zero() && !candidates.iter().any(|c| (c.clone() - w.clone()).abs() < tol.clone() * w.clone()) {
                candidates.push(w);
            }
        }
    }
    let zero = || [MpFloat::zero(p), MpFloat::zero(p)];
    for w in candidates {
        let Ok(omega) = CircleData::new(zero(), w) else { continue };
        let polars: Option<Vec<(Label, HomTriple<MpFloat>)>> = cfg
            .points
            .iter()
            .map(|(l, h)| Some((l.clone(), polar(&omega, &h.affine().ok()?).ok()?)))
            .collect();
        let poles: Option<Vec<(Label, HomTriple<MpFloat>)>> = cfg
            .lines
            .iter()
            .map(|(l, h)| {
                let q = pole(&omega, h).ok()?;
                Some((l.clone(), HomTriple::affine_point(q[0].clone(), q[1].clone())))
            })
            .collect();
        let (Some(polars), Some(poles)) = (polars, poles) else { continue };
        let mut maps = Vec::new();
        for g in candidate_isometries(&poles, &cfg.points, &tol) {
            let mut pairing = Vec::new();
            let mut ok = true;
            for (src, pool) in [(&polars, &cfg.lines), (&poles, &cfg.points)] {
                for (l, h) in src {
                    let im = g.apply(h);
                    match pool.iter().find(|(_, k)| im.proj_eq(k, &tol)) {
                        Some((t, _)) => pairing.push((l.clone(), t.clone())),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                let one = MpFloat::one(p);
                let kind = if g.reflection {
                    ReciprocityKind::Reflexive
                } else if (g.c.clone() - one).abs() < tol && g.s.abs() < tol {
                    ReciprocityKind::Perfect
                } else {
                    ReciprocityKind::Rotational
                };
                maps.push(SelfReciprocation { kind, isometry: g, pairing });
            }
        }
        if !maps.is_empty() {
            maps.sort_by_key(|m| m.kind);
            return ReciprocityReport { omega: Some(omega), maps };
        }
    }
    ReciprocityReport { omega: None, maps: Vec::new() }
}

/// Rotations and reflections about the origin taking the outermost point of
/// `from` to a point of `to` at the same distance.
fn candidate_isometries(
    from: &[(Label, HomTriple<MpFloat>)],
    to: &[(Label, HomTriple<MpFloat>)],
    tol: &MpFloat,
) -> Vec<Isometry> {
    let aff = |v: &[(Label, HomTriple<MpFloat>)]| -> Vec<Pt> { v.iter().filter_map(|e| e.1.affine().ok()).collect() };
    let r2 = |q: &Pt| q[0].square() + q[1].square();
    let Some(p0) = aff(from).into_iter().max_by(|a, b| r2(a).partial_cmp(&r2(b)).unwrap_or(std::cmp::Ordering::Equal))
    else {
        return Vec::new();
    };
    let rho2 = r2(&p0);
    let mut out = Vec::new();
    for q in aff(to) {
        if (r2(&q) - rho2.clone()).abs() > tol.clone() * rho2.clone() {
            continue;
        }
        out.push(Isometry {
            reflection: false,
            c: (p0[0].clone() * q[0].clone() + p0[1].clone() * q[1].clone()) / rho2.clone(),
            s: (p0[0].clone() * q[1].clone() - p0[1].clone() * q[0].clone()) / rho2.clone(),
        });
        out.push(Isometry {
            reflection: true,
            c: (p0[0].clone() * q[0].clone() - p0[1].clone() * q[1].clone()) / rho2.clone(),
            s: (p0[1].clone() * q[0].clone() + p0[0].clone() * q[1].clone()) / rho2.clone(),
        });
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryCount {
    pub rotations: usize,
    pub reflections: usize,
}

impl SymmetryCount {
    pub fn order(&self) -> usize {
        self.rotations + self.reflections
    }
}

/// Rotations and reflections about the origin fixing the configuration setwise.
pub fn geometric_symmetries(cfg: &GeometricConfiguration) -> SymmetryCount {
    let isos = cfg.isometries();
    let reflections = isos.iter().filter(|g| g.reflection).count();
    SymmetryCount { rotations: isos.len() - reflections, reflections }
}

/// The reflexive self-reciprocation of B(21_4) pairing `R_0` with `r_1`,
/// `R_1` with `r_0` and `R_2` with `r_2`, and likewise for every colour.
pub fn b_mirror_duality() -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for c in ["R", "Y", "P", "G", "B", "C", "M"] {
        let l = c.to_ascii_lowercase();
        out.push((Label::new(c, 0), Label::new(l.clone(), 1)));
        out.push((Label::new(c, 1), Label::new(l.clone(), 0)));
        out.push((Label::new(c, 2), Label::new(l, 2)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::new(192).unwrap()
    }

    #[test]
    fn standard_frame() {
        let f = Frame::standard(prec());
        let r = f.red().map(|h| h.affine().unwrap().map(|v| v.to_f64()));
        assert!((r[1][0] + 0.75f64.sqrt()).abs() < 1e-15 && (r[1][1] - 0.5).abs() < 1e-15);
        assert!(r[2][0].abs() < 1e-15 && (r[2][1] + 1.0).abs() < 1e-15);
        let (lo, hi) = f.interval();
        assert!((lo.to_f64() + 0.75f64.sqrt()).abs() < 1e-15 && hi.to_f64().abs() < 1e-15);
    }

    #[test]
    fn qc_is_movable() {
        let f = Frame::standard(prec());
        for x in [-0.7, -0.4, -0.1] {
            let s = build_qc(&MpFloat::from_f64(x, prec()), &f).unwrap();
            assert_eq!(s.qc_census().to_string(), "((6_2)(9_4))");
        }
        assert!(build_qc(&MpFloat::from_f64(0.1, prec()), &f).is_err());
    }

    #[test]
    fn mirror_duality_is_involutive_pairing() {
        let d = b_mirror_duality();
        assert_eq!(d.len(), 21);
        let pts: BTreeSet<_> = d.iter().map(|e| e.0.clone()).collect();
        assert_eq!(pts.len(), 21);
    }
}
