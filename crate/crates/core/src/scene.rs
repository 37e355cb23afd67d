//! The parametric meet/join construction of a template configuration.
//!
//! One recipe drives three backends: numeric reals (with optional
//! degeneracy checks), forward-mode dual numbers (Jacobians in x and z), and
//! exact integer polynomials in x and z with content removal.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{cross, det3, det3_normalized, dot, norm, HomTriple};
use crate::incidence::{Kind, Label};
use crate::poly::BPoly;
use crate::real::{Precision, Real};
use crate::voltage::{ParameterVector, B_ARCS};

/// The fourteen element classes, in construction order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Class {
    R,
    Lm,
    Y,
    Lp,
    G,
    Lb,
    Lc,
    C,
    B,
    Lg,
    Ly,
    M,
    Lr,
    P,
}

impl Class {
    pub const ALL: [Class; 14] = [
        Class::R,
        Class::Lm,
        Class::Y,
        Class::Lp,
        Class::G,
        Class::Lb,
        Class::Lc,
        Class::C,
        Class::B,
        Class::Lg,
        Class::Ly,
        Class::M,
        Class::Lr,
        Class::P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::R => "R",
            Class::Lm => "m",
            Class::Y => "Y",
            Class::Lp => "p",
            Class::G => "G",
            Class::Lb => "b",
            Class::Lc => "c",
            Class::C => "C",
            Class::B => "B",
            Class::Lg => "g",
            Class::Ly => "y",
            Class::M => "M",
            Class::Lr => "r",
            Class::P => "P",
        }
    }

    pub fn from_name(s: &str) -> Option<Class> {
        Class::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn kind(self) -> Kind {
        match self {
            Class::R | Class::Y | Class::G | Class::C | Class::B | Class::M | Class::P => Kind::Point,
            _ => Kind::Line,
        }
    }
}

/// Elements indexed by class and by `i mod m`.
#[derive(Clone, Debug)]
pub struct Elements<E> {
    pub m: u32,
    data: Vec<Vec<E>>,
}

impl<E> Elements<E> {
    pub fn get(&self, c: Class, i: i64) -> &E {
        &self.data[c as usize][i.rem_euclid(self.m as i64) as usize]
    }

    pub fn class(&self, c: Class) -> &[E] {
        &self.data[c as usize]
    }

    pub fn map<F, T>(&self, f: F) -> Elements<T>
    where
        F: Fn(Class, &E) -> T,
    {
        Elements {
            m: self.m,
            data: Class::ALL.iter().map(|&c| self.data[c as usize].iter().map(|e| f(c, e)).collect()).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Class, u32, &E)> {
        Class::ALL
            .into_iter()
            .flat_map(move |c| self.data[c as usize].iter().enumerate().map(move |(i, e)| (c, i as u32, e)))
    }
}

/// Arithmetic the recipe needs from an element backend.
pub trait Backend {
    type E: Clone;
    fn ring(&self, i: u32) -> Self::E;
    /// `(1 - x) p + x q`
    fn combo_x(&self, p: &Self::E, q: &Self::E) -> Result<Self::E>;
    /// `(1 - z) p + z q`
    fn combo_z(&self, p: &Self::E, q: &Self::E) -> Result<Self::E>;
    fn cross(&self, a: &Self::E, b: &Self::E, step: &str) -> Result<Self::E>;
}

/// Runs the construction: R, m, Y, p, G, b, c, C, B, g, y, M, r, then P.
pub fn construct<B: Backend>(be: &B, m: u32, params: &ParameterVector) -> Result<Elements<B::E>> {
    let v = |n: &str| params.get(n) as i64;
    let (a, c, d, e, f, g, _q) = (v("a"), v("c"), v("d"), v("e"), v("f"), v("g"), v("q"));
    let (_a2, c2, _d2, e2, f2, g2, q2, t) = (v("a'"), v("c'"), v("d'"), v("e'"), v("f'"), v("g'"), v("q'"), v("t"));
    let md = m as i64;
    let ix = |i: i64| i.rem_euclid(md) as usize;
    let range = 0..md;

    let r: Vec<B::E> = (0..m).map(|i| be.ring(i)).collect();
    let lm = range.clone().map(|i| be.cross(&r[ix(i)], &r[ix(i + a)], &format!("m{i}"))).collect::<Result<Vec<_>>>()?;
    let y = range.clone().map(|i| be.combo_x(&r[ix(i - c)], &r[ix(i - c + a)])).collect::<Result<Vec<_>>>()?;
    let lp = range.clone().map(|i| be.cross(&y[ix(i)], &r[ix(i)], &format!("p{i}"))).collect::<Result<Vec<_>>>()?;
    let gg = range.clone().map(|i| be.combo_z(&r[ix(i)], &y[ix(i)])).collect::<Result<Vec<_>>>()?;
    let lb = range.clone().map(|i| be.cross(&y[ix(i + e2)], &gg[ix(i)], &format!("b{i}"))).collect::<Result<Vec<_>>>()?;
    let lc = range.clone().map(|i| be.cross(&y[ix(i)], &gg[ix(i + f2)], &format!("c{i}"))).collect::<Result<Vec<_>>>()?;
    let cc = range.clone().map(|i| be.cross(&lb[ix(i - g)], &lb[ix(i - t)], &format!("C{i}"))).collect::<Result<Vec<_>>>()?;
    let bb = range.clone().map(|i| be.cross(&lc[ix(i - g2)], &lc[ix(i)], &format!("B{i}"))).collect::<Result<Vec<_>>>()?;
    let lg = range.clone().map(|i| be.cross(&cc[ix(i + f)], &bb[ix(i)], &format!("g{i}"))).collect::<Result<Vec<_>>>()?;
    let ly = range.clone().map(|i| be.cross(&cc[ix(i)], &bb[ix(i + e)], &format!("y{i}"))).collect::<Result<Vec<_>>>()?;
    let mm = range.clone().map(|i| be.cross(&ly[ix(i - c2)], &lp[ix(i - q2)], &format!("M{i}"))).collect::<Result<Vec<_>>>()?;
    let lr = range.clone().map(|i| be.cross(&gg[ix(i + d)], &mm[ix(i)], &format!("r{i}"))).collect::<Result<Vec<_>>>()?;
    let pp = range.map(|i| be.cross(&ly[ix(i)], &lg[ix(i)], &format!("P{i}"))).collect::<Result<Vec<_>>>()?;
    Ok(Elements { m, data: vec![r, lm, y, lp, gg, lb, lc, cc, bb, lg, ly, mm, lr, pp] })
}

/// Index pairs of the four determinants: (class, offset) triples.
pub const DET1: [(Class, &str); 3] = [(Class::R, "d'"), (Class::C, "f"), (Class::B, "")];
pub const DET5: [(Class, &str); 3] = [(Class::M, ""), (Class::M, "a'"), (Class::G, "d")];
pub const DET3: [(Class, &str); 3] = [(Class::Lm, "-q"), (Class::Lg, ""), (Class::Ly, "")];
pub const DET4: [(Class, &str); 3] = [(Class::Lr, ""), (Class::Lg, ""), (Class::Ly, "")];

fn det_index(params: &ParameterVector, s: &str) -> i64 {
    match s {
        "" => 0,
        s if s.starts_with('-') => -(params.get(&s[1..]) as i64),
        s => params.get(s) as i64,
    }
}

pub fn det_args<'a, E>(el: &'a Elements<E>, params: &ParameterVector, which: &[(Class, &str); 3]) -> [&'a E; 3] {
    which.map(|(c, s)| el.get(c, det_index(params, s)))
}

/// Ring operations shared by numeric element backends.
pub trait Ring: Clone + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn log2_mag(&self) -> f64;
}

impl<R: Real> Ring for R {
    fn log2_mag(&self) -> f64 {
        self.log2_abs()
    }
}

/// First-order dual number in two directions (x, z).
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<R> {
    pub v: R,
    pub dx: R,
    pub dz: R,
}

impl<R: Real> Add for Dual<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Dual { v: self.v + o.v, dx: self.dx + o.dx, dz: self.dz + o.dz }
    }
}

impl<R: Real> Sub for Dual<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Dual { v: self.v - o.v, dx: self.dx - o.dx, dz: self.dz - o.dz }
    }
}

impl<R: Real> Mul for Dual<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Dual {
            dx: self.v.clone() * o.dx + self.dx * o.v.clone(),
            dz: self.v.clone() * o.dz + self.dz * o.v.clone(),
            v: self.v * o.v,
        }
    }
}

impl<R: Real> Neg for Dual<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual { v: -self.v, dx: -self.dx, dz: -self.dz }
    }
}

impl<R: Real> Ring for Dual<R> {
    fn log2_mag(&self) -> f64 {
        self.v.log2_abs()
    }
}

impl<R: Real> Dual<R> {
    pub fn constant(v: R) -> Self {
        let p = v.precision();
        Dual { v, dx: R::zero(p), dz: R::zero(p) }
    }
}

fn cross_ring<S: Ring>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn log2_norm<S: Ring>(a: &[S; 3]) -> f64 {
    a.iter().map(Ring::log2_mag).fold(f64::NEG_INFINITY, f64::max)
}

/// Homogeneous coordinates of `R_i`: radius 2, angle 2 pi i / m.
pub fn ring_point<R: Real>(i: u32, m: u32, p: Precision) -> [R; 3] {
    let th = R::pi(p) * R::from_i64(2 * i as i64, p) / R::from_i64(m as i64, p);
    let two = R::from_i64(2, p);
    [two.clone() * th.cos(), two * th.sin(), R::one(p)]
}

pub struct NumBackend<S> {
    ring: Vec<[S; 3]>,
    x: S,
    z: S,
    one: S,
    /// log2 of the relative tolerance under which a cross product counts as
    /// degenerate; `None` disables the check.
    strict: Option<f64>,
}

impl<S: Ring> Backend for NumBackend<S> {
    type E = [S; 3];
    fn ring(&self, i: u32) -> [S; 3] {
        self.ring[i as usize].clone()
    }
    fn combo_x(&self, p: &[S; 3], q: &[S; 3]) -> Result<[S; 3]> {
        let s = self.one.clone() - self.x.clone();
        Ok([0, 1, 2].map(|k| s.clone() * p[k].clone() + self.x.clone() * q[k].clone()))
    }
    fn combo_z(&self, p: &[S; 3], q: &[S; 3]) -> Result<[S; 3]> {
        let s = self.one.clone() - self.z.clone();
        Ok([0, 1, 2].map(|k| s.clone() * p[k].clone() + self.z.clone() * q[k].clone()))
    }
    fn cross(&self, a: &[S; 3], b: &[S; 3], step: &str) -> Result<[S; 3]> {
        let c = cross_ring(a, b);
        if let Some(t) = self.strict {
            if log2_norm(&c) < t + log2_norm(a) + log2_norm(b) {
                return Err(Error::Degenerate(format!("step {step}: meet/join of coinciding elements")));
            }
        }
        Ok(c)
    }
}

pub fn real_backend<R: Real>(m: u32, x: R, z: R, strict: bool) -> NumBackend<R> {
    let p = x.precision();
    NumBackend {
        ring: (0..m).map(|i| ring_point(i, m, p)).collect(),
        one: R::one(p),
        strict: strict.then(|| -(p.half_exponent() as f64)),
        x,
        z,
    }
}

pub fn dual_backend<R: Real>(m: u32, x: R, z: R) -> NumBackend<Dual<R>> {
    let p = x.precision();
    let zero = R::zero(p);
    let one = R::one(p);
    NumBackend {
        ring: (0..m).map(|i| ring_point::<R>(i, m, p).map(Dual::constant)).collect(),
        x: Dual { v: x, dx: one.clone(), dz: zero.clone() },
        z: Dual { v: z, dx: zero.clone(), dz: one.clone() },
        one: Dual::constant(one),
        strict: None,
    }
}

/// Integer coordinates of a frame projectively equivalent to the ring of
/// radius 2 (the y axis rescaled by 1/sqrt 3 for m = 3, 6), if one exists.
pub fn rational_frame(m: u32) -> Option<Vec<[i64; 3]>> {
    match m {
        1 => Some(vec![[2, 0, 1]]),
        2 => Some(vec![[2, 0, 1], [-2, 0, 1]]),
        3 => Some(vec![[2, 0, 1], [-1, 1, 1], [-1, -1, 1]]),
        4 => Some(vec![[2, 0, 1], [0, 2, 1], [-2, 0, 1], [0, -2, 1]]),
        6 => Some(vec![[2, 0, 1], [1, 1, 1], [-1, 1, 1], [-2, 0, 1], [-1, -1, 1], [1, -1, 1]]),
        _ => None,
    }
}

pub struct ExactBackend {
    ring: Vec<[BPoly; 3]>,
}

impl ExactBackend {
    pub fn new(m: u32) -> Option<Self> {
        let frame = rational_frame(m)?;
        Some(ExactBackend { ring: frame.iter().map(|r| r.map(BPoly::constant)).collect() })
    }
}

fn combo_poly(t: &BPoly, p: &[BPoly; 3], q: &[BPoly; 3]) -> [BPoly; 3] {
    let s = BPoly::constant(1).sub(t);
    [0, 1, 2].map(|k| s.mul(&p[k]).add(&t.mul(&q[k])))
}

impl Backend for ExactBackend {
    type E = [BPoly; 3];
    fn ring(&self, i: u32) -> [BPoly; 3] {
        self.ring[i as usize].clone()
    }
    fn combo_x(&self, p: &[BPoly; 3], q: &[BPoly; 3]) -> Result<[BPoly; 3]> {
        Ok(combo_poly(&BPoly::x(), p, q))
    }
    fn combo_z(&self, p: &[BPoly; 3], q: &[BPoly; 3]) -> Result<[BPoly; 3]> {
        Ok(combo_poly(&BPoly::z(), p, q))
    }
    fn cross(&self, a: &[BPoly; 3], b: &[BPoly; 3], step: &str) -> Result<[BPoly; 3]> {
        let c = [
            a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
            a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
            a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
        ];
        if c.iter().all(BPoly::is_zero) {
            return Err(Error::Degenerate(format!("step {step}: elements coincide identically")));
        }
        let g = c[0].gcd(&c[1]).gcd(&c[2]);
        Ok(c.map(|p| p.div_exact(&g).expect("content divides")))
    }
}

/// det1 and det5 as exact polynomials, plus their gcd and the reduced pair.
#[derive(Clone, Debug)]
pub struct ExactSystem {
    pub det1: BPoly,
    pub det5: BPoly,
    pub gcd: BPoly,
    pub f1: BPoly,
    pub f5: BPoly,
}

pub fn exact_system(m: u32, params: &ParameterVector) -> Result<ExactSystem> {
    let be = ExactBackend::new(m).ok_or_else(|| Error::Domain(format!("no rational frame for m = {m}")))?;
    let el = construct(&be, m, params)?;
    let det = |w| {
        let [u, v, x] = det_args(&el, params, w);
        let cr = [
            v[1].mul(&x[2]).sub(&v[2].mul(&x[1])),
            v[2].mul(&x[0]).sub(&v[0].mul(&x[2])),
            v[0].mul(&x[1]).sub(&v[1].mul(&x[0])),
        ];
        u[0].mul(&cr[0]).add(&u[1].mul(&cr[1])).add(&u[2].mul(&cr[2]))
    };
    let det1 = det(&DET1);
    let det5 = det(&DET5);
    let gcd = det1.gcd(&det5);
    let f1 = det1.div_exact(&gcd).unwrap_or_else(|| det1.clone());
    let f5 = det5.div_exact(&gcd).unwrap_or_else(|| det5.clone());
    Ok(ExactSystem { det1, det5, gcd, f1, f5 })
}

/// The curve along which M coincides with Y for the reference parameters.
pub fn common_poly() -> BPoly {
    BPoly::from_terms(&[(2, 1, 2), (2, 0, 1), (1, 1, -2), (1, 0, -1), (0, 1, 1)])
}

pub fn common_value<R: Real>(x: &R, z: &R) -> R {
    common_poly().eval(x, z)
}

/// Numeric scene at a given (x, z).
#[derive(Clone, Debug)]
pub struct Scene<R: Real> {
    pub m: u32,
    pub params: ParameterVector,
    pub x: R,
    pub z: R,
    pub elements: Elements<[R; 3]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Residuals<R: Real> {
    pub det1: R,
    pub det3: R,
    pub det4: R,
    pub det5: R,
    pub common: R,
    pub det1_norm: R,
    pub det3_norm: R,
    pub det4_norm: R,
    pub det5_norm: R,
}

/// Builds the scene; with `strict`, any meet/join of coinciding elements
/// (at tolerance 2^-(bits/2)) is an error naming the step.
pub fn build_scene_strict<R: Real>(m: u32, params: &ParameterVector, x: R, z: R, strict: bool) -> Result<Scene<R>> {
    let be = real_backend(m, x.clone(), z.clone(), strict);
    let elements = construct(&be, m, params)?;
    Ok(Scene { m, params: *params, x, z, elements })
}

pub fn build_scene<R: Real>(m: u32, params: &ParameterVector, x: R, z: R) -> Result<Scene<R>> {
    build_scene_strict(m, params, x, z, true)
}

impl<R: Real> Scene<R> {
    pub fn precision(&self) -> Precision {
        self.x.precision()
    }

    pub fn element(&self, c: Class, i: i64) -> HomTriple<R> {
        HomTriple { coords: self.elements.get(c, i).clone(), kind: c.kind() }
    }

    fn det(&self, w: &[(Class, &str); 3]) -> (R, R) {
        let [u, v, x] = det_args(&self.elements, &self.params, w);
        (det3(u, v, x), det3_normalized(u, v, x))
    }

    pub fn residuals(&self) -> Residuals<R> {
        let (det1, det1_norm) = self.det(&DET1);
        let (det3, det3_norm) = self.det(&DET3);
        let (det4, det4_norm) = self.det(&DET4);
        let (det5, det5_norm) = self.det(&DET5);
        Residuals { det1, det3, det4, det5, common: common_value(&self.x, &self.z), det1_norm, det3_norm, det4_norm, det5_norm }
    }

    /// All 28m template incidences with their normalized residuals.
    pub fn incidences(&self) -> Vec<(Label, Label, R)> {
        let m = self.m as i64;
        let mut out = Vec::new();
        for &(lc, pc, k) in B_ARCS.iter() {
            let lcls = Class::from_name(lc).unwrap();
            let pcls = Class::from_name(pc).unwrap();
            let off = k.map_or(0, |k| self.params.0[k] as i64);
            for i in 0..m {
                let l = self.elements.get(lcls, i);
                let p = self.elements.get(pcls, i + off);
                let res = dot(p, l).abs() / (norm(p) * norm(l));
                out.push((Label::new(pc, (i + off).rem_euclid(m) as u32), Label::new(lc, i as u32), res));
            }
        }
        out
    }

    pub fn max_incidence_residual(&self) -> R {
        self.incidences().into_iter().map(|t| t.2).fold(R::zero(self.precision()), R::max_of)
    }

    /// Pairs of same-kind elements that coincide projectively at `tol`.
    pub fn coincidences(&self, tol: &R) -> Vec<(Label, Label)> {
        let mut all: Vec<(Label, HomTriple<R>)> = Vec::new();
        for (c, i, e) in self.elements.iter() {
            all.push((Label::new(c.name(), i), HomTriple { coords: e.clone(), kind: c.kind() }));
        }
        let mut out = Vec::new();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                if all[a].1.kind == all[b].1.kind && all[a].1.proj_eq(&all[b].1, tol) {
                    out.push((all[a].0.clone(), all[b].0.clone()));
                }
            }
        }
        out
    }
}

/// Raw det1 and det5 with their gradients in (x, z).
pub fn dets_with_jacobian<R: Real>(m: u32, params: &ParameterVector, x: &R, z: &R) -> Result<([R; 2], [[R; 2]; 2])> {
    let be = dual_backend(m, x.clone(), z.clone());
    let el = construct(&be, m, params)?;
    let det = |w| {
        let [u, v, x] = det_args(&el, params, w);
        let c = cross_ring(v, x);
        u[0].clone() * c[0].clone() + u[1].clone() * c[1].clone() + u[2].clone() * c[2].clone()
    };
    let d1 = det(&DET1);
    let d5 = det(&DET5);
    Ok(([d1.v, d5.v], [[d1.dx, d1.dz], [d5.dx, d5.dz]]))
}

#[allow(dead_code)]
fn _assert_cross_matches(a: &[f64; 3], b: &[f64; 3]) -> bool {
    cross(a, b) == cross_ring(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::MpFloat;

    fn b_params() -> ParameterVector {
        ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0").unwrap()
    }

    #[test]
    fn reference_point_satisfies_all_incidences() {
        let s = build_scene(3, &b_params(), 0.518152102234634769, 0.611256650666216291).unwrap();
        let r = s.residuals();
        assert!(r.det1_norm < 1e-12 && r.det5_norm < 1e-12, "{r:?}");
        assert!(r.det3_norm < 1e-12 && r.det4_norm < 1e-12);
        assert!(s.max_incidence_residual() < 1e-10);
        // Coarse values still hold every incidence approximately.
        let s = build_scene(3, &b_params(), 0.518152, 0.611257).unwrap();
        assert!(s.max_incidence_residual() < 1e-4);
    }

    #[test]
    fn equivariance() {
        let p = Precision::new(128).unwrap();
        let s = build_scene(3, &b_params(), MpFloat::from_f64(0.3, p), MpFloat::from_f64(-1.7, p)).unwrap();
        let tol = MpFloat::half_tolerance(p);
        for c in Class::ALL {
            for i in 0..3 {
                let rot = crate::geom::rotate(&s.element(c, i), 1, 3);
                assert!(rot.proj_eq(&s.element(c, i + 1), &tol), "{c:?}{i}");
            }
        }
    }

    #[test]
    fn x_zero_degenerates() {
        let r = build_scene(3, &b_params(), 0.0, 0.4);
        match r {
            Err(_) => {}
            Ok(s) => assert!(!s.coincidences(&1e-6).is_empty()),
        }
    }

    #[test]
    fn common_curve_forces_coincidence() {
        let (x, z) = (0.25, 0.3);
        assert_eq!(common_value(&x, &z), 0.0);
        let s = build_scene_strict(3, &b_params(), x, z, false).unwrap();
        let tol = 1e-9;
        let hits = s.coincidences(&tol);
        assert!(hits.iter().any(|(a, b)| (a.class == "Y" && b.class == "M") || (a.class == "M" && b.class == "Y")), "{hits:?}");
    }

    #[test]
    fn dual_jacobian_matches_finite_difference() {
        let (x, z) = (0.37, -0.81);
        let ([d1, d5], j) = dets_with_jacobian(3, &b_params(), &x, &z).unwrap();
        let h = 1e-6;
        let ([d1x, d5x], _) = dets_with_jacobian(3, &b_params(), &(x + h), &z).unwrap();
        let ([d1z, d5z], _) = dets_with_jacobian(3, &b_params(), &x, &(z + h)).unwrap();
        let rel = |a: f64, b: f64| (a - b).abs() / (1.0 + b.abs());
        assert!(rel((d1x - d1) / h, j[0][0]) < 1e-4);
        assert!(rel((d5x - d5) / h, j[1][0]) < 1e-4);
        assert!(rel((d1z - d1) / h, j[0][1]) < 1e-4);
        assert!(rel((d5z - d5) / h, j[1][1]) < 1e-4);
    }

    #[test]
    fn exact_gcd_is_the_common_factor() {
        let sys = exact_system(3, &b_params()).unwrap();
        let c = common_poly();
        assert!(sys.gcd.div_exact(&c).is_some_and(|q| q.is_constant()), "gcd = {}", sys.gcd);
    }
}
