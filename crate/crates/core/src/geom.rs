//! Homogeneous points and lines, circles, inversion and polarity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::Kind;
use crate::real::{Precision, Real};

/// Cross product of homogeneous triples.
pub fn cross<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn dot<R: Real>(a: &[R; 3], b: &[R; 3]) -> R {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn norm<R: Real>(a: &[R; 3]) -> R {
    dot(a, a).sqrt()
}

pub fn det3<R: Real>(u: &[R; 3], v: &[R; 3], w: &[R; 3]) -> R {
    dot(u, &cross(v, w))
}

/// `|det| / (|u| |v| |w|)`, in [0, 1].
pub fn det3_normalized<R: Real>(u: &[R; 3], v: &[R; 3], w: &[R; 3]) -> R {
    let d = norm(u) * norm(v) * norm(w);
    if d.is_zero() {
        return d;
    }
    det3(u, v, w).abs() / d
}

/// Point or line in homogeneous coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct HomTriple<R: Real> {
    pub coords: [R; 3],
    pub kind: Kind,
}

impl<R: Real> HomTriple<R> {
    pub fn new(coords: [R; 3], kind: Kind) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("homogeneous triple is zero".into()));
        }
        Ok(HomTriple { coords, kind })
    }

    pub fn point(coords: [R; 3]) -> Result<Self> {
        HomTriple::new(coords, Kind::Point)
    }

    pub fn line(coords: [R; 3]) -> Result<Self> {
        HomTriple::new(coords, Kind::Line)
    }

    pub fn affine_point(x: R, y: R) -> Self {
        let one = R::one(x.precision());
        HomTriple { coords: [x, y, one], kind: Kind::Point }
    }

    pub fn precision(&self) -> Precision {
        self.coords[0].precision()
    }

    /// Scaled so the largest-magnitude coordinate is exactly 1.
    pub fn normalized(&self) -> [R; 3] {
        let mut k = 0;
        for i in 1..3 {
            if self.coords[i].abs() > self.coords[k].abs() {
                k = i;
            }
        }
        let s = self.coords[k].clone();
        self.coords.clone().map(|c| c / s.clone())
    }

    /// Distance between normalized representatives (max norm).
    pub fn projective_distance(&self, other: &HomTriple<R>) -> R {
        let a = self.normalized();
        let b = other.normalized();
        // Sign-free comparison: the normalized representative fixes the sign
        // only through the largest coordinate, which may differ between near
        // equal triples; compare against both signs.
        let d1 = (0..3).map(|i| (a[i].clone() - b[i].clone()).abs()).fold(R::zero(self.precision()), R::max_of);
        let d2 = (0..3).map(|i| (a[i].clone() + b[i].clone()).abs()).fold(R::zero(self.precision()), R::max_of);
        d1.min_of(d2)
    }

    pub fn proj_eq(&self, other: &HomTriple<R>, tol: &R) -> bool {
        self.kind == other.kind && self.projective_distance(other) < *tol
    }

    pub fn affine(&self) -> Result<[R; 2]> {
        let w = &self.coords[2];
        if w.abs() < R::half_tolerance(self.precision()) * norm(&self.coords) {
            return Err(Error::Degenerate("point at infinity has no affine coordinates".into()));
        }
        Ok([self.coords[0].clone() / w.clone(), self.coords[1].clone() / w.clone()])
    }

    /// Incidence residual `|p.l| / (|p| |l|)` against a triple of the other kind.
    pub fn incidence_residual(&self, other: &HomTriple<R>) -> R {
        let d = norm(&self.coords) * norm(&other.coords);
        dot(&self.coords, &other.coords).abs() / d
    }
}

fn meet_or_join<R: Real>(a: &HomTriple<R>, b: &HomTriple<R>, want: Kind, name: &str) -> Result<HomTriple<R>> {
    let c = cross(&a.coords, &b.coords);
    let scale = norm(&a.coords) * norm(&b.coords);
    if norm(&c) <= R::half_tolerance(a.precision()) * scale {
        return Err(Error::Degenerate(format!("degenerate {name}: arguments coincide")));
    }
    Ok(HomTriple { coords: c, kind: want })
}

pub fn join<R: Real>(p: &HomTriple<R>, q: &HomTriple<R>) -> Result<HomTriple<R>> {
    if p.kind != Kind::Point || q.kind != Kind::Point {
        return Err(Error::Validation("join takes two points".into()));
    }
    meet_or_join(p, q, Kind::Line, "join")
}

pub fn meet<R: Real>(l: &HomTriple<R>, k: &HomTriple<R>) -> Result<HomTriple<R>> {
    if l.kind != Kind::Line || k.kind != Kind::Line {
        return Err(Error::Validation("meet takes two lines".into()));
    }
    meet_or_join(l, k, Kind::Point, "meet")
}

/// Signed determinant and its scale-normalized magnitude.
pub fn det3x3<R: Real>(u: &HomTriple<R>, v: &HomTriple<R>, w: &HomTriple<R>) -> Result<(R, R)> {
    if u.kind != v.kind || v.kind != w.kind {
        return Err(Error::Validation("det3x3 needs three triples of one kind".into()));
    }
    Ok((det3(&u.coords, &v.coords, &w.coords), det3_normalized(&u.coords, &v.coords, &w.coords)))
}

/// `(1-x) p + x q` on affine-normalized points.
pub fn combo<R: Real>(p: &HomTriple<R>, q: &HomTriple<R>, x: &R) -> Result<HomTriple<R>> {
    let [px, py] = p.affine()?;
    let [qx, qy] = q.affine()?;
    let one = R::one(x.precision());
    let s = one.clone() - x.clone();
    Ok(HomTriple {
        coords: [s.clone() * px + x.clone() * qx, s * py + x.clone() * qy, one],
        kind: Kind::Point,
    })
}

/// Rotation about the origin by `2 pi k / m`. Rotations are orthogonal, so
/// points and lines transform by the same matrix.
pub fn rotate<R: Real>(h: &HomTriple<R>, k: i64, m: u32) -> HomTriple<R> {
    let p = h.precision();
    let th = R::pi(p) * R::from_i64(2 * k, p) / R::from_i64(m as i64, p);
    rotate_by(h, &th)
}

pub fn rotate_by<R: Real>(h: &HomTriple<R>, th: &R) -> HomTriple<R> {
    let (c, s) = (th.cos(), th.sin());
    let [x, y, w] = h.coords.clone();
    HomTriple { coords: [c.clone() * x.clone() - s.clone() * y.clone(), s * x + c * y, w], kind: h.kind }
}

/// Reflection in the line through the origin at angle `th`.
pub fn reflect_by<R: Real>(h: &HomTriple<R>, th: &R) -> HomTriple<R> {
    let two = R::from_i64(2, th.precision());
    let (c, s) = ((two.clone() * th.clone()).cos(), (two * th.clone()).sin());
    let [x, y, w] = h.coords.clone();
    HomTriple { coords: [c.clone() * x.clone() + s.clone() * y.clone(), s * x - c * y, w], kind: h.kind }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircleData<R: Real> {
    pub center: [R; 2],
    pub radius: R,
}

impl<R: Real> CircleData<R> {
    pub fn new(center: [R; 2], radius: R) -> Result<Self> {
        if radius.is_negative() || radius.is_zero() {
            return Err(Error::Domain("circle radius must be positive".into()));
        }
        Ok(CircleData { center, radius })
    }

    pub fn precision(&self) -> Precision {
        self.radius.precision()
    }
}

pub fn dist2<R: Real>(a: &[R; 2], b: &[R; 2]) -> R {
    (a[0].clone() - b[0].clone()).square() + (a[1].clone() - b[1].clone()).square()
}

pub fn dist<R: Real>(a: &[R; 2], b: &[R; 2]) -> R {
    dist2(a, b).sqrt()
}

pub fn invert_point<R: Real>(c: &CircleData<R>, p: &[R; 2]) -> Result<[R; 2]> {
    let d2 = dist2(p, &c.center);
    if d2.sqrt() < R::half_tolerance(c.precision()) * c.radius.clone() {
        return Err(Error::Domain("center has no inverse".into()));
    }
    let k = c.radius.square() / d2;
    Ok([
        c.center[0].clone() + k.clone() * (p[0].clone() - c.center[0].clone()),
        c.center[1].clone() + k * (p[1].clone() - c.center[1].clone()),
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub enum CircleOrLine<R: Real> {
    Circle(CircleData<R>),
    Line(HomTriple<R>),
}

pub fn invert_circle<R: Real>(c: &CircleData<R>, g: &CircleData<R>) -> Result<CircleOrLine<R>> {
    let p = c.precision();
    let d2 = dist2(&g.center, &c.center);
    let den = d2.clone() - g.radius.square();
    let r2 = c.radius.square();
    if den.abs() <= R::half_tolerance(p) * (d2.clone() + g.radius.square()) {
        // Circle through the center: image is the line perpendicular to the
        // center line, through the inverse of the far point.
        let d = d2.sqrt();
        let ux = (g.center[0].clone() - c.center[0].clone()) / d.clone();
        let uy = (g.center[1].clone() - c.center[1].clone()) / d.clone();
        let two = R::from_i64(2, p);
        let far = two * g.radius.clone();
        let k = r2 / far;
        let fx = c.center[0].clone() + k.clone() * ux.clone();
        let fy = c.center[1].clone() + k * uy.clone();
        let off = -(ux.clone() * fx + uy.clone() * fy);
        return Ok(CircleOrLine::Line(HomTriple::line([ux, uy, off])?));
    }
    let k = r2.clone() / den.clone();
    let center = [
        c.center[0].clone() + k.clone() * (g.center[0].clone() - c.center[0].clone()),
        c.center[1].clone() + k.clone() * (g.center[1].clone() - c.center[1].clone()),
    ];
    let radius = r2 * g.radius.clone() / den.abs();
    Ok(CircleOrLine::Circle(CircleData::new(center, radius)?))
}

pub fn midcircle_concentric<R: Real>(g1: &CircleData<R>, g2: &CircleData<R>) -> Result<CircleData<R>> {
    let tol = R::half_tolerance(g1.precision()) * (g1.radius.clone() + g2.radius.clone());
    if dist(&g1.center, &g2.center) > tol {
        return Err(Error::Domain("midcircle of non-concentric circles is not supported".into()));
    }
    CircleData::new(g1.center.clone(), (g1.radius.clone() * g2.radius.clone()).sqrt())
}

pub fn circumcircle<R: Real>(p: &[R; 2], q: &[R; 2], r: &[R; 2]) -> Result<CircleData<R>> {
    let prec = p[0].precision();
    let two = R::from_i64(2, prec);
    let (ax, ay) = (p[0].clone(), p[1].clone());
    let (bx, by) = (q[0].clone(), q[1].clone());
    let (cx, cy) = (r[0].clone(), r[1].clone());
    let d = two
        * (ax.clone() * (by.clone() - cy.clone()) + bx.clone() * (cy.clone() - ay.clone()) + cx.clone() * (ay.clone() - by.clone()));
    let scale = dist2(p, q) + dist2(q, r) + dist2(r, p);
    if d.abs() <= R::half_tolerance(prec) * scale {
        return Err(Error::Degenerate("circumcircle of collinear points".into()));
    }
    let a2 = ax.square() + ay.square();
    let b2 = bx.square() + by.square();
    let c2 = cx.square() + cy.square();
    let ux = (a2.clone() * (by.clone() - cy.clone()) + b2.clone() * (cy.clone() - ay.clone()) + c2.clone() * (ay - by)) / d.clone();
    let uy = (a2 * (cx.clone() - bx.clone()) + b2 * (ax.clone() - cx) + c2 * (bx - ax)) / d;
    let center = [ux, uy];
    let radius = dist(&center, p);
    CircleData::new(center, radius)
}

/// Signed distance of an affine point from a line (unit normal).
pub fn signed_distance<R: Real>(l: &HomTriple<R>, p: &[R; 2]) -> R {
    let [a, b, c] = l.coords.clone();
    let n = (a.square() + b.square()).sqrt();
    (a * p[0].clone() + b * p[1].clone() + c) / n
}

pub fn incircle<R: Real>(l: &HomTriple<R>, k: &HomTriple<R>, n: &HomTriple<R>) -> Result<CircleData<R>> {
    let a = meet(k, n).map_err(|_| Error::Degenerate("incircle: parallel or equal lines".into()))?.affine()?;
    let b = meet(n, l).map_err(|_| Error::Degenerate("incircle: parallel or equal lines".into()))?.affine()?;
    let c = meet(l, k).map_err(|_| Error::Degenerate("incircle: parallel or equal lines".into()))?.affine()?;
    let la = dist(&b, &c);
    let lb = dist(&c, &a);
    let lc = dist(&a, &b);
    let per = la.clone() + lb.clone() + lc.clone();
    if per.is_zero() || det3_normalized(&l.coords, &k.coords, &n.coords) < R::half_tolerance(l.precision()) {
        return Err(Error::Degenerate("incircle of concurrent lines".into()));
    }
    let center = [
        (la.clone() * a[0].clone() + lb.clone() * b[0].clone() + lc.clone() * c[0].clone()) / per.clone(),
        (la * a[1].clone() + lb * b[1].clone() + lc * c[1].clone()) / per,
    ];
    let radius = signed_distance(l, &center).abs();
    CircleData::new(center, radius)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tangent<R: Real> {
    pub line: HomTriple<R>,
    pub touch: [R; 2],
}

/// The two tangents from an outside point. The first touches the circle on
/// the left of the ray from `p` towards the center (positive signed angle).
pub fn tangents_from<R: Real>(p: &[R; 2], c: &CircleData<R>) -> Result<[Tangent<R>; 2]> {
    let prec = c.precision();
    let d2 = dist2(p, &c.center);
    let r2 = c.radius.square();
    if d2.clone() - r2.clone() <= R::half_tolerance(prec) * r2.clone() {
        return Err(Error::Degenerate("tangent from a point not outside the circle".into()));
    }
    // Touch points: center + (r^2/d^2)(p - center) +- (r sqrt(d^2 - r^2)/d^2) perp(p - center).
    let vx = p[0].clone() - c.center[0].clone();
    let vy = p[1].clone() - c.center[1].clone();
    let a = r2.clone() / d2.clone();
    let b = c.radius.clone() * (d2.clone() - r2).sqrt() / d2;
    let base = [c.center[0].clone() + a.clone() * vx.clone(), c.center[1].clone() + a * vy.clone()];
    // Facing the center from p, (vy, -vx) points to the left.
    let t_left = [base[0].clone() + b.clone() * vy.clone(), base[1].clone() - b.clone() * vx.clone()];
    let t_right = [base[0].clone() - b.clone() * vy, base[1].clone() + b * vx];
    let mk = |t: [R; 2]| -> Result<Tangent<R>> {
        let line = join(&HomTriple::affine_point(p[0].clone(), p[1].clone()), &HomTriple::affine_point(t[0].clone(), t[1].clone()))?;
        Ok(Tangent { line, touch: t })
    };
    Ok([mk(t_left)?, mk(t_right)?])
}

pub fn polar<R: Real>(c: &CircleData<R>, p: &[R; 2]) -> Result<HomTriple<R>> {
    let vx = p[0].clone() - c.center[0].clone();
    let vy = p[1].clone() - c.center[1].clone();
    if (vx.square() + vy.square()).sqrt() < R::half_tolerance(c.precision()) * c.radius.clone() {
        return Err(Error::Domain("the center has no polar".into()));
    }
    // (X - c).v = r^2
    let off = -(vx.clone() * c.center[0].clone() + vy.clone() * c.center[1].clone() + c.radius.square());
    HomTriple::line([vx, vy, off])
}

pub fn pole<R: Real>(c: &CircleData<R>, l: &HomTriple<R>) -> Result<[R; 2]> {
    let [a, b, cc] = l.coords.clone();
    let s = a.clone() * c.center[0].clone() + b.clone() * c.center[1].clone() + cc;
    let n = (a.square() + b.square()).sqrt();
    if s.abs() < R::half_tolerance(c.precision()) * n * c.radius.clone() {
        return Err(Error::Domain("a line through the center has no pole".into()));
    }
    let k = -c.radius.square() / s;
    Ok([c.center[0].clone() + k.clone() * a, c.center[1].clone() + k * b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::MpFloat;

    fn p256() -> Precision {
        Precision::new(256).unwrap()
    }

    fn mp(v: f64) -> MpFloat {
        MpFloat::from_f64(v, p256())
    }

    fn pt(x: f64, y: f64) -> HomTriple<MpFloat> {
        HomTriple::affine_point(mp(x), mp(y))
    }

    fn tol() -> MpFloat {
        MpFloat::half_tolerance(p256())
    }

    #[test]
    fn join_meet_basics() {
        let l = join(&HomTriple::point([0.0, 0.0, 1.0]).unwrap(), &HomTriple::point([1.0, 0.0, 1.0]).unwrap()).unwrap();
        assert_eq!(l.normalized(), [0.0, 1.0, 0.0]);
        assert!(join(&pt(1.0, 2.0), &pt(1.0, 2.0)).is_err());
        let (a, b, c, d) = (pt(0.3, 1.7), pt(-2.0, 0.1), pt(1.1, -0.4), pt(0.9, 2.2));
        let x = meet(&join(&a, &b).unwrap(), &join(&c, &d).unwrap()).unwrap();
        assert!(x.incidence_residual(&join(&a, &b).unwrap()) < tol());
        assert!(x.incidence_residual(&join(&c, &d).unwrap()) < tol());
        // meet(join(p,q), join(p,r)) = p
        let y = meet(&join(&a, &b).unwrap(), &join(&a, &c).unwrap()).unwrap();
        assert!(y.proj_eq(&a, &tol()));
    }

    #[test]
    fn dets_and_combo() {
        let (_, n) = det3x3(&pt(0.0, 0.0), &pt(1.0, 0.0), &pt(5.0, 0.0)).unwrap();
        assert!(n.is_zero());
        assert!(det3x3(&pt(0.0, 0.0), &pt(1.0, 0.0), &join(&pt(0.0, 1.0), &pt(1.0, 1.0)).unwrap()).is_err());
        let (p, q) = (pt(0.5, -1.25), pt(3.0, 2.0));
        assert!(combo(&p, &q, &mp(0.0)).unwrap().proj_eq(&p, &tol()));
        assert!(combo(&p, &q, &mp(1.0)).unwrap().proj_eq(&q, &tol()));
        for x in [-3.7, 0.123, 9.0] {
            let (_, n) = det3x3(&p, &q, &combo(&p, &q, &mp(x)).unwrap()).unwrap();
            assert!(n < tol());
        }
        let three_lines = [
            join(&pt(0.0, 0.0), &pt(1.0, 1.0)).unwrap(),
            join(&pt(0.0, 0.0), &pt(1.0, -2.0)).unwrap(),
            join(&pt(0.0, 0.0), &pt(0.0, 1.0)).unwrap(),
        ];
        let (_, n) = det3x3(&three_lines[0], &three_lines[1], &three_lines[2]).unwrap();
        assert!(n < tol());
    }

    #[test]
    fn rotation() {
        let r = rotate(&pt(1.0, 0.0), 1, 3);
        let want = HomTriple::affine_point(mp(-0.5), MpFloat::from_i64(3, p256()).sqrt() / MpFloat::from_i64(2, p256()));
        assert!(r.proj_eq(&want, &tol()));
        let p = pt(0.7, -1.3);
        let mut q = p.clone();
        for _ in 0..7 {
            q = rotate(&q, 1, 7);
        }
        assert!(q.proj_eq(&p, &tol()));
        // Incidence survives rotating both point and line.
        let l = join(&p, &pt(2.0, 5.0)).unwrap();
        assert!(rotate(&p, 2, 5).incidence_residual(&rotate(&l, 2, 5)) < tol());
    }

    #[test]
    fn inversion() {
        let unit = CircleData::new([mp(0.0), mp(0.0)], mp(1.0)).unwrap();
        let x = invert_point(&unit, &[mp(2.0), mp(0.0)]).unwrap();
        assert!((x[0].clone() - mp(0.5)).abs() < tol());
        assert!(invert_point(&unit, &[mp(0.0), mp(0.0)]).is_err());
        let on = [MpFloat::ratio(3, 5, p256()), MpFloat::ratio(4, 5, p256())];
        let y = invert_point(&unit, &on).unwrap();
        assert!(dist(&y, &on) < tol());
        // Orthogonal circle: center (2,0), radius sqrt(3).
        let orth = CircleData::new([mp(2.0), mp(0.0)], MpFloat::from_i64(3, p256()).sqrt()).unwrap();
        match invert_circle(&unit, &orth).unwrap() {
            CircleOrLine::Circle(c) => {
                assert!(dist(&c.center, &orth.center) < tol());
                assert!((c.radius - orth.radius.clone()).abs() < tol());
            }
            CircleOrLine::Line(_) => panic!("expected a circle"),
        }
        let through = CircleData::new([mp(1.0), mp(0.0)], mp(1.0)).unwrap();
        match invert_circle(&unit, &through).unwrap() {
            CircleOrLine::Line(l) => assert!(l.proj_eq(&HomTriple::line([mp(1.0), mp(0.0), mp(-0.5)]).unwrap(), &tol())),
            CircleOrLine::Circle(_) => panic!("expected a line"),
        }
    }

    #[test]
    fn midcircle_swaps() {
        let o = [mp(0.3), mp(-0.2)];
        let g1 = CircleData::new(o.clone(), mp(1.0)).unwrap();
        let g2 = CircleData::new(o.clone(), mp(4.0)).unwrap();
        let mc = midcircle_concentric(&g1, &g2).unwrap();
        assert!((mc.radius.clone() - mp(2.0)).abs() < tol());
        match invert_circle(&mc, &g1).unwrap() {
            CircleOrLine::Circle(c) => assert!((c.radius - mp(4.0)).abs() < tol()),
            _ => panic!(),
        }
        let same = midcircle_concentric(&g1, &g1).unwrap();
        assert!((same.radius - mp(1.0)).abs() < tol());
        assert!(midcircle_concentric(&g1, &CircleData::new([mp(1.0), mp(0.0)], mp(1.0)).unwrap()).is_err());
    }

    #[test]
    fn circles_and_tangents() {
        let c = circumcircle(&[mp(1.0), mp(0.0)], &[mp(0.0), mp(1.0)], &[mp(-1.0), mp(0.0)]).unwrap();
        assert!(dist(&c.center, &[mp(0.0), mp(0.0)]) < tol());
        assert!((c.radius.clone() - mp(1.0)).abs() < tol());
        assert!(circumcircle(&[mp(0.0), mp(0.0)], &[mp(1.0), mp(1.0)], &[mp(2.0), mp(2.0)]).is_err());
        // Equilateral triangle of lines y = -1 and its two rotations: inradius 1.
        let base = HomTriple::line([mp(0.0), mp(1.0), mp(1.0)]).unwrap();
        let (l1, l2) = (rotate(&base, 1, 3), rotate(&base, 2, 3));
        let ic = incircle(&base, &l1, &l2).unwrap();
        assert!((ic.radius.clone() - mp(1.0)).abs() < tol());
        for l in [&base, &l1, &l2] {
            assert!((signed_distance(l, &ic.center).abs() - ic.radius.clone()).abs() < tol());
        }
        let unit = CircleData::new([mp(0.0), mp(0.0)], mp(1.0)).unwrap();
        let [t1, t2] = tangents_from(&[mp(2.0), mp(0.0)], &unit).unwrap();
        let h = MpFloat::from_i64(3, p256()).sqrt() / MpFloat::from_i64(2, p256());
        assert!((t1.touch[0].clone() - mp(0.5)).abs() < tol());
        assert!((t1.touch[1].clone() + h.clone()).abs() < tol());
        assert!((t2.touch[1].clone() - h).abs() < tol());
        assert!(tangents_from(&[mp(0.5), mp(0.0)], &unit).is_err());
    }

    #[test]
    fn polarity() {
        let unit = CircleData::new([mp(0.0), mp(0.0)], mp(1.0)).unwrap();
        let l = polar(&unit, &[mp(2.0), mp(0.0)]).unwrap();
        assert!(l.proj_eq(&HomTriple::line([mp(1.0), mp(0.0), mp(-0.5)]).unwrap(), &tol()));
        let c = CircleData::new([mp(0.4), mp(-1.0)], mp(1.7)).unwrap();
        let p = [mp(3.1), mp(0.25)];
        let back = pole(&c, &polar(&c, &p).unwrap()).unwrap();
        assert!(dist(&back, &p) < tol());
        // Polars of points at radius rho touch the circle of radius r^2/rho.
        let q = [c.center[0].clone() + mp(1.5), c.center[1].clone() + mp(2.0)];
        let lq = polar(&c, &q).unwrap();
        let want = c.radius.square() / mp(2.5);
        assert!((signed_distance(&lq, &c.center).abs() - want).abs() < tol());
    }
}
