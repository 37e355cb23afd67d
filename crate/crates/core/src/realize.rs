//! Solving `det1 = det5 = 0`, classifying the solutions, and certifying the
//! remaining concurrences by a precision ladder.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::GeometricConfiguration;
use crate::error::{Error, Result};
use crate::poly::{BPoly, UPoly};
use crate::real::{MpFloat, Precision, Real};
use crate::scene::{build_scene, build_scene_strict, common_value, dets_with_jacobian, exact_system, rational_frame, ExactSystem, Scene};
use crate::voltage::ParameterVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Degenerate,
    Partial,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    CertifiedZero,
    CertifiedNonzero,
    Undecided,
}

/// Normalized residual at one rung of the precision ladder.
#[derive(Clone, Debug, Serialize)]
pub struct Rung {
    pub bits: u32,
    pub value: MpFloat,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certification {
    pub name: String,
    pub outcome: Certificate,
    pub ladder: Vec<Rung>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SearchDomain {
    pub x_min: f64,
    pub x_max: f64,
    pub z_min: f64,
    pub z_max: f64,
}

impl SearchDomain {
    pub fn square(r: f64) -> Self {
        SearchDomain { x_min: -r, x_max: r, z_min: -r, z_max: r }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v: Vec<f64> = s
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad domain bound {t:?}"))))
            .collect::<Result<_>>()?;
        if v.len() != 4 || v[0] >= v[1] || v[2] >= v[3] || v.iter().any(|b| !b.is_finite()) {
            return Err(Error::Validation(format!("domain must be x_min,x_max,z_min,z_max with min < max, got {s:?}")));
        }
        Ok(SearchDomain { x_min: v[0], x_max: v[1], z_min: v[2], z_max: v[3] })
    }

    pub fn contains(&self, x: f64, z: f64, margin: f64) -> bool {
        x >= self.x_min - margin && x <= self.x_max + margin && z >= self.z_min - margin && z <= self.z_max + margin
    }
}

impl Default for SearchDomain {
    fn default() -> Self {
        SearchDomain::square(8.0)
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub domain: SearchDomain,
    /// Starts per axis on the multistart grid.
    pub grid: usize,
    /// Jitters the grid when set; the default grid is fixed.
    pub seed: Option<u64>,
    pub precision: Precision,
    /// Precisions used by [`certify_zero`].
    pub ladder: Vec<Precision>,
}

/// Ladder 128, 256, 512, 1024; a working precision below 128 bits leaves a
/// single rung, which can never certify.
pub fn default_ladder(bits: u32) -> Vec<Precision> {
    if bits < 128 {
        return vec![Precision::new(bits.max(53)).expect("at least 53 bits")];
    }
    [128, 256, 512, 1024].iter().map(|&b| Precision::new(b).unwrap()).collect()
}

impl SolveOptions {
    pub fn new(bits: u32) -> Result<Self> {
        Ok(SolveOptions {
            domain: SearchDomain::default(),
            grid: 41,
            seed: None,
            precision: Precision::new(bits)?,
            ladder: default_ladder(bits),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionCandidate {
    pub x: MpFloat,
    pub z: MpFloat,
    /// Set when the solution is rational and verified exactly.
    #[serde(serialize_with = "ser_exact")]
    pub exact: Option<(BigRational, BigRational)>,
    pub status: Status,
    /// Coinciding element pairs, the failing construction step, or the
    /// names of determinants not certified zero.
    pub witnesses: Vec<String>,
    pub singular: bool,
    pub certifications: Vec<Certification>,
}

fn ser_exact<S: serde::Serializer>(v: &Option<(BigRational, BigRational)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some((x, z)) => s.serialize_some(&[x.to_string(), z.to_string()]),
        None => s.serialize_none(),
    }
}

impl SolutionCandidate {
    pub fn xf(&self) -> f64 {
        self.x.to_f64()
    }
    pub fn zf(&self) -> f64 {
        self.z.to_f64()
    }
}

fn poly_grid(p: &BPoly) -> Vec<Vec<f64>> {
    p.coeffs().iter().map(|u| u.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()).collect()
}

fn eval_grid(g: &[Vec<f64>], x: f64, z: f64) -> f64 {
    g.iter().rev().fold(0.0, |acc, row| acc * z + row.iter().rev().fold(0.0, |a, c| a * x + c))
}

struct ExactData {
    f: [BPoly; 2],
    jac: [[BPoly; 2]; 2],
    f64_f: [Vec<Vec<f64>>; 2],
    f64_jac: [[Vec<Vec<f64>>; 2]; 2],
}

/// The reduced system: exact polynomials when the ring has a rational frame,
/// otherwise raw determinants from the numeric construction.
pub struct System {
    pub m: u32,
    pub params: ParameterVector,
    pub exact: Option<ExactSystem>,
    data: Option<ExactData>,
}

type Eval<R> = ([R; 2], [[R; 2]; 2]);

impl System {
    pub fn new(m: u32, params: &ParameterVector) -> Result<Self> {
        if rational_frame(m).is_none() {
            return Ok(System { m, params: *params, exact: None, data: None });
        }
        let sys = exact_system(m, params)?;
        if sys.f1.is_zero() || sys.f5.is_zero() {
            return Err(Error::Degenerate("a determinant vanishes identically".into()));
        }
        let f = [sys.f1.clone(), sys.f5.clone()];
        let jac = [[f[0].dx(), f[0].dz()], [f[1].dx(), f[1].dz()]];
        let data = ExactData {
            f64_f: [poly_grid(&f[0]), poly_grid(&f[1])],
            f64_jac: [[poly_grid(&jac[0][0]), poly_grid(&jac[0][1])], [poly_grid(&jac[1][0]), poly_grid(&jac[1][1])]],
            f,
            jac,
        };
        Ok(System { m, params: *params, exact: Some(sys), data: Some(data) })
    }

    pub fn is_exact(&self) -> bool {
        self.data.is_some()
    }

    fn eval_f64(&self, x: f64, z: f64) -> Option<Eval<f64>> {
        match &self.data {
            Some(d) => Some((
                [eval_grid(&d.f64_f[0], x, z), eval_grid(&d.f64_f[1], x, z)],
                [
                    [eval_grid(&d.f64_jac[0][0], x, z), eval_grid(&d.f64_jac[0][1], x, z)],
                    [eval_grid(&d.f64_jac[1][0], x, z), eval_grid(&d.f64_jac[1][1], x, z)],
                ],
            )),
            None => dets_with_jacobian(self.m, &self.params, &x, &z).ok(),
        }
    }

    fn eval_mp(&self, x: &MpFloat, z: &MpFloat) -> Option<Eval<MpFloat>> {
        match &self.data {
            Some(d) => Some((
                [d.f[0].eval(x, z), d.f[1].eval(x, z)],
                [[d.jac[0][0].eval(x, z), d.jac[0][1].eval(x, z)], [d.jac[1][0].eval(x, z), d.jac[1][1].eval(x, z)]],
            )),
            None => dets_with_jacobian(self.m, &self.params, x, z).ok(),
        }
    }

    /// Exact test of a rational point (exact systems only).
    pub fn vanishes_at(&self, x: &BigRational, z: &BigRational) -> bool {
        self.data.as_ref().is_some_and(|d| d.f.iter().all(|f| f.eval_rational(x, z).is_zero()))
    }
}

fn newton_f64(sys: &System, mut x: f64, mut z: f64) -> Option<(f64, f64, f64)> {
    let mut last = f64::INFINITY;
    for _ in 0..120 {
        let ([f1, f2], j) = sys.eval_f64(x, z)?;
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if !det.is_finite() || det == 0.0 {
            break;
        }
        let mut dx = -(j[1][1] * f1 - j[0][1] * f2) / det;
        let mut dz = -(-j[1][0] * f1 + j[0][0] * f2) / det;
        let len = dx.hypot(dz);
        let cap = 1.0 + 0.5 * x.hypot(z);
        if len > cap {
            dx *= cap / len;
            dz *= cap / len;
        }
        x += dx;
        z += dz;
        if !x.is_finite() || !z.is_finite() || x.hypot(z) > 1e4 {
            return None;
        }
        last = dx.hypot(dz);
        if last < 1e-15 * (1.0 + x.hypot(z)) {
            break;
        }
    }
    Some((x, z, last))
}

/// Refines at the precision of `x`; returns the point, whether the last step
/// fell below `2^-(bits/2)`, and whether the Jacobian looked singular.
fn newton_mp(sys: &System, x: &MpFloat, z: &MpFloat) -> Option<(MpFloat, MpFloat, bool, bool)> {
    let p = x.precision();
    let tol = MpFloat::half_tolerance(p);
    let fine = MpFloat::pow2(-(p.bits() as i32) + 16, p);
    let (mut x, mut z) = (x.clone(), z.clone());
    let mut converged = false;
    let mut singular = false;
    for _ in 0..80 {
        let ([f1, f2], j) = sys.eval_mp(&x, &z)?;
        let det = j[0][0].clone() * j[1][1].clone() - j[0][1].clone() * j[1][0].clone();
        let jn = j.iter().flatten().map(|v| v.abs()).fold(MpFloat::zero(p), MpFloat::max_of);
        if det.abs() <= MpFloat::pow2(-(p.bits() as i32) / 4, p) * jn.square() {
            singular = true;
        }
        if det.is_zero() {
            break;
        }
        let dx = -(j[1][1].clone() * f1.clone() - j[0][1].clone() * f2.clone()) / det.clone();
        let dz = -(-(j[1][0].clone() * f1) + j[0][0].clone() * f2) / det;
        x = x + dx.clone();
        z = z + dz.clone();
        if !x.is_finite() || !z.is_finite() {
            return None;
        }
        let step = dx.abs().max_of(dz.abs());
        let scale = MpFloat::one(p) + x.abs().max_of(z.abs());
        if step < tol.clone() * scale.clone() {
            converged = true;
        }
        if step <= fine.clone() * scale {
            break;
        }
    }
    Some((x, z, converged, singular))
}

/// Smallest-denominator rational within `tol` of `v`.
pub fn snap_rational(v: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    (1..=max_den).find_map(|q| {
        let p = (v * q as f64).round();
        ((v - p / q as f64).abs() < tol).then(|| BigRational::new(BigInt::from(p as i64), BigInt::from(q)))
    })
}

pub fn rational_to_mp(r: &BigRational, p: Precision) -> MpFloat {
    crate::poly::bigint_to_real::<MpFloat>(r.numer(), p) / crate::poly::bigint_to_real::<MpFloat>(r.denom(), p)
}

/// One certified determinant at a point, re-refined at each rung.
pub fn certify_zero(name: &str, sys: &System, x: &MpFloat, z: &MpFloat, exact: Option<&(BigRational, BigRational)>, ladder: &[Precision]) -> Certification {
    let mut rungs = Vec::new();
    let (mut cx, mut cz) = (x.clone(), z.clone());
    for &p in ladder {
        let (px, pz) = match exact {
            Some((ex, ez)) => (rational_to_mp(ex, p), rational_to_mp(ez, p)),
            None => {
                let (sx, sz) = (cx.with_precision(p), cz.with_precision(p));
                match newton_mp(sys, &sx, &sz) {
                    Some((nx, nz, _, _)) => (nx, nz),
                    None => (sx, sz),
                }
            }
        };
        let value = build_scene(sys.m, &sys.params, px.clone(), pz.clone()).ok().map(|s| {
            let r = s.residuals();
            match name {
                "det1" => r.det1_norm,
                "det3" => r.det3_norm,
                "det4" => r.det4_norm,
                _ => r.det5_norm,
            }
        });
        let Some(value) = value else {
            return Certification { name: name.into(), outcome: Certificate::Undecided, ladder: rungs };
        };
        rungs.push(Rung { bits: p.bits(), value });
        cx = px;
        cz = pz;
    }
    Certification { name: name.into(), outcome: judge(&rungs), ladder: rungs }
}

fn judge(rungs: &[Rung]) -> Certificate {
    if rungs.len() < 2 || rungs[0].bits < 128 {
        return Certificate::Undecided;
    }
    let below = |r: &Rung| r.value.log2_abs() <= -((r.bits / 2) as f64);
    if rungs.iter().all(below) {
        return Certificate::CertifiedZero;
    }
    // Floor: 10^6 times the tolerance at the first rung, and no drift.
    let floor = (rungs[0].bits / 2) as f64 - 6.0 * std::f64::consts::LOG2_10;
    let above = rungs.iter().all(|r| r.value.log2_abs() > -floor);
    let stable = rungs.windows(2).all(|w| {
        let d = (w[1].value.clone() - w[0].value.clone()).abs();
        d.log2_abs() <= w[1].value.log2_abs() - (w[0].bits / 4) as f64
    });
    if above && stable {
        Certificate::CertifiedNonzero
    } else {
        Certificate::Undecided
    }
}

/// DEGENERATE / PARTIAL / FULL for a point of the reduced system.
pub fn classify(sys: &System, x: &MpFloat, z: &MpFloat, exact: Option<&(BigRational, BigRational)>, ladder: &[Precision]) -> (Status, Vec<String>, Vec<Certification>) {
    let p = x.precision();
    let tol = MpFloat::half_tolerance(p);
    let scene = match build_scene(sys.m, &sys.params, x.clone(), z.clone()) {
        Ok(s) => s,
        Err(e) => return (Status::Degenerate, vec![e.to_string()], Vec::new()),
    };
    let hits = scene.coincidences(&tol);
    if !hits.is_empty() {
        return (Status::Degenerate, hits.iter().map(|(a, b)| format!("{a} = {b}")).collect(), Vec::new());
    }
    if sys.m == 3 && common_value(x, z).abs() < tol {
        return (Status::Degenerate, vec!["common".into()], Vec::new());
    }
    let certs: Vec<Certification> = ["det3", "det4"].iter().map(|n| certify_zero(n, sys, x, z, exact, ladder)).collect();
    let open: Vec<String> = certs.iter().filter(|c| c.outcome != Certificate::CertifiedZero).map(|c| c.name.clone()).collect();
    let status = if open.is_empty() { Status::Full } else { Status::Partial };
    (status, open, certs)
}

fn starts(opts: &SolveOptions) -> Vec<(f64, f64)> {
    let d = opts.domain;
    let n = opts.grid.max(2);
    let step_x = (d.x_max - d.x_min) / (n - 1) as f64;
    let step_z = (d.z_max - d.z_min) / (n - 1) as f64;
    let mut rng = opts.seed.map(rand_chacha::ChaCha8Rng::seed_from_u64);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            let (mut x, mut z) = (d.x_min + i as f64 * step_x, d.z_min + k as f64 * step_z);
            if let Some(r) = rng.as_mut() {
                x = (x + r.gen_range(-0.5..0.5) * step_x).clamp(d.x_min, d.x_max);
                z = (z + r.gen_range(-0.5..0.5) * step_z).clamp(d.z_min, d.z_max);
            }
            out.push((x, z));
        }
    }
    out
}

struct Found {
    x: MpFloat,
    z: MpFloat,
    exact: Option<(BigRational, BigRational)>,
    singular: bool,
}

fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    (a.0 - b.0).abs() <= tol * (1.0 + a.0.abs()) && (a.1 - b.1).abs() <= tol * (1.0 + a.1.abs())
}

/// Coincidences at a loose tolerance, for limits known only to a few digits.
fn loose_witnesses(sys: &System, x: f64, z: f64) -> Vec<String> {
    match build_scene_strict(sys.m, &sys.params, x, z, false) {
        Err(e) => vec![e.to_string()],
        Ok(s) => {
            let mut w: Vec<String> = s.coincidences(&1e-3).iter().map(|(a, b)| format!("{a} = {b}")).collect();
            w.sort();
            w
        }
    }
}

/// All real solutions of the reduced system in the domain, classified.
pub fn solve_system(m: u32, params: &ParameterVector, opts: &SolveOptions) -> Result<Vec<SolutionCandidate>> {
    let sys = System::new(m, params)?;
    solve_with(&sys, opts)
}

pub fn solve_with(sys: &System, opts: &SolveOptions) -> Result<Vec<SolutionCandidate>> {
    let p = opts.precision;
    let raw: Vec<(f64, f64, f64)> = starts(opts)
        .par_iter()
        .filter_map(|&(x, z)| newton_f64(sys, x, z))
        .filter(|&(x, z, step)| step < 1e-3 && opts.domain.contains(x, z, 1e-6))
        .collect();

    // Rational roots, verified exactly.
    let mut found: Vec<Found> = Vec::new();
    let mut sharp: Vec<(f64, f64)> = Vec::new();
    let mut blunt: Vec<(f64, f64)> = Vec::new();
    for (x, z, step) in raw {
        if sys.is_exact() {
            if let (Some(rx), Some(rz)) = (snap_rational(x, 12, 2e-3), snap_rational(z, 12, 2e-3)) {
                if sys.vanishes_at(&rx, &rz) {
                    if !found.iter().any(|f| f.exact.as_ref() == Some(&(rx.clone(), rz.clone()))) {
                        found.push(Found { x: rational_to_mp(&rx, p), z: rational_to_mp(&rz, p), exact: Some((rx, rz)), singular: false });
                    }
                    continue;
                }
            }
        }
        if step < 1e-12 * (1.0 + x.hypot(z)) {
            if !sharp.iter().any(|&q| close(q, (x, z), 1e-7)) {
                sharp.push((x, z));
            }
        } else {
            blunt.push((x, z));
        }
    }
    let exact_pts: Vec<(f64, f64)> = found.iter().map(|f| (f.x.to_f64(), f.z.to_f64())).collect();

    // Simple roots: one multiprecision refinement per distinct limit.
    let refined: Vec<(f64, f64, Option<(MpFloat, MpFloat, bool, bool)>)> = sharp
        .par_iter()
        .map(|&(x, z)| (x, z, newton_mp(sys, &MpFloat::from_f64(x, p), &MpFloat::from_f64(z, p))))
        .collect();
    for (x, z, r) in refined {
        match r {
            Some((nx, nz, true, false)) => {
                let key = (nx.to_f64(), nz.to_f64());
                if opts.domain.contains(key.0, key.1, 1e-6) && !found.iter().any(|f| close((f.x.to_f64(), f.z.to_f64()), key, 1e-9)) {
                    found.push(Found { x: nx, z: nz, exact: None, singular: false });
                }
            }
            _ => blunt.push((x, z)),
        }
    }

    // Singular limits: multiple roots and curves of solutions. Those near a
    // verified rational root are that root; the rest are merged by what
    // degenerates there.
    let mut singular: Vec<(f64, f64, Vec<String>)> = Vec::new();
    for (x, z) in blunt {
        if exact_pts.iter().any(|&e| close(e, (x, z), 1e-2)) {
            continue;
        }
        if singular.iter().any(|s| close((s.0, s.1), (x, z), 1e-3)) {
            continue;
        }
        let w = loose_witnesses(sys, x, z);
        if !w.is_empty() && singular.iter().any(|s| s.2 == w) {
            continue;
        }
        singular.push((x, z, w));
    }

    let mut out: Vec<SolutionCandidate> = found
        .into_par_iter()
        .map(|f| {
            let (status, witnesses, certifications) = classify(sys, &f.x, &f.z, f.exact.as_ref(), &opts.ladder);
            SolutionCandidate { x: f.x, z: f.z, exact: f.exact, status, witnesses, singular: f.singular, certifications }
        })
        .collect();
    for (x, z, w) in singular {
        let (status, witnesses) = if w.is_empty() {
            (Status::Partial, vec!["singular Jacobian".to_string()])
        } else {
            (Status::Degenerate, w)
        };
        out.push(SolutionCandidate {
            x: MpFloat::from_f64(x, p),
            z: MpFloat::from_f64(z, p),
            exact: None,
            status,
            witnesses,
            singular: true,
            certifications: Vec::new(),
        });
    }
    out.sort_by(|a, b| (a.xf(), a.zf()).partial_cmp(&(b.xf(), b.zf())).unwrap_or(std::cmp::Ordering::Equal));
    Ok(out)
}

/// Full coordinate sets for every FULL solution, each checked as a strong
/// realization at the working precision.
pub fn realize(m: u32, params: &ParameterVector, opts: &SolveOptions) -> Result<Vec<GeometricConfiguration>> {
    let sols = solve_system(m, params, opts)?;
    realize_from(m, params, &sols)
}

pub fn realize_from(m: u32, params: &ParameterVector, sols: &[SolutionCandidate]) -> Result<Vec<GeometricConfiguration>> {
    sols.iter()
        .filter(|s| s.status == Status::Full)
        .map(|s| {
            let scene = build_scene(m, params, s.x.clone(), s.z.clone())?;
            let cfg = GeometricConfiguration::from_scene(&scene)?;
            cfg.verify_strong()?;
            Ok(cfg)
        })
        .collect()
}

pub fn scene_at(m: u32, params: &ParameterVector, s: &SolutionCandidate) -> Result<Scene<MpFloat>> {
    build_scene(m, params, s.x.clone(), s.z.clone())
}

/// Degree-12 integer polynomial whose real roots carry one coordinate of the
/// two reference solutions.
#[derive(Clone, Debug, Serialize)]
pub struct KnownRootOracle {
    pub name: &'static str,
    /// Constant term first.
    pub coefficients: [i64; 13],
}

pub const ALPHA: KnownRootOracle = KnownRootOracle { name: "alpha", coefficients: [-1, 12, -66, 217, -468, 684, -668, 390, -57, -114, 108, -45, 9] };
pub const BETA: KnownRootOracle = KnownRootOracle { name: "beta", coefficients: [-1, 6, -24, 76, -162, 216, -193, 129, -33, -36, 15, 9, 1] };

impl KnownRootOracle {
    pub fn poly(&self) -> UPoly {
        UPoly::from_i64s(&self.coefficients)
    }

    /// `|p(s)| / sum |c_k| |s|^k`.
    pub fn normalized_value(&self, s: &MpFloat) -> MpFloat {
        let v = self.poly().eval(s);
        let abs = UPoly::from_i64s(&self.coefficients.map(|c| c.abs())).eval(&s.abs());
        v.abs() / abs
    }

    /// Real roots in `[-r, r]` at precision `p`, bracketed by sign changes
    /// on a grid and bisected.
    pub fn real_roots(&self, r: f64, p: Precision) -> Vec<MpFloat> {
        let poly = self.poly();
        let n = 4000;
        let mut out = Vec::new();
        let f = |t: f64| poly.eval(&t);
        let mut prev = f(-r);
        for i in 1..=n {
            let t1 = -r + 2.0 * r * i as f64 / n as f64;
            let v = f(t1);
            if prev.signum() != v.signum() && prev != 0.0 {
                let t0 = t1 - 2.0 * r / n as f64;
                let (mut lo, mut hi) = (MpFloat::from_f64(t0, p), MpFloat::from_f64(t1, p));
                let flo = poly.eval(&lo).is_negative();
                for _ in 0..p.bits() + 8 {
                    let mid = (lo.clone() + hi.clone()) / MpFloat::from_i64(2, p);
                    if poly.eval(&mid).is_negative() == flo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                out.push(lo);
            }
            prev = v;
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KnownRootReport {
    pub alpha_at_x: MpFloat,
    pub beta_at_z: MpFloat,
    pub threshold: MpFloat,
    pub pass: bool,
}

/// Evaluates the oracles at a candidate; passes when both normalized values
/// are below `2^-(bits/2)`.
pub fn known_root_check(x: &MpFloat, z: &MpFloat) -> KnownRootReport {
    let p = x.precision();
    let a = ALPHA.normalized_value(x);
    let b = BETA.normalized_value(z);
    let t = MpFloat::half_tolerance(p);
    KnownRootReport { pass: a < t && b < t, alpha_at_x: a, beta_at_z: b, threshold: t }
}

/// Counts of candidates by status.
pub fn tally(sols: &[SolutionCandidate]) -> (usize, usize, usize) {
    let n = |s| sols.iter().filter(|c| c.status == s).count();
    (n(Status::Full), n(Status::Partial), n(Status::Degenerate))
}

pub fn rational_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
