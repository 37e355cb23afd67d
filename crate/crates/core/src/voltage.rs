//! Reduced Levi graphs with cyclic voltages, their lifts, the two (21_4)
//! templates and the exhaustive sweep over Z_3.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::incidence::{levi_from_incidences, validate_nk, Girth, IncidenceStructure, Label, LeviGraph, NkReport};
use crate::symmetry::{automorphism_group, canonical_form};

/// Arc from a line class to a point class: `L_i` is incident with `v_{i+voltage}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub line: usize,
    pub point: usize,
    pub voltage: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedLeviGraph {
    pub m: u32,
    pub points: Vec<String>,
    pub lines: Vec<String>,
    pub arcs: Vec<Arc>,
}

impl ReducedLeviGraph {
    pub fn new(m: u32, points: Vec<String>, lines: Vec<String>, mut arcs: Vec<Arc>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Validation("voltage modulus must be positive".into()));
        }
        for a in &mut arcs {
            if a.line >= lines.len() || a.point >= points.len() {
                return Err(Error::Validation(format!("arc {a:?} refers to a missing class")));
            }
            a.voltage %= m;
        }
        Ok(ReducedLeviGraph { m, points, lines, arcs })
    }

    /// Number of arcs at each (point classes..., line classes...).
    pub fn valences(&self) -> Vec<usize> {
        let mut v = vec![0; self.points.len() + self.lines.len()];
        for a in &self.arcs {
            v[a.point] += 1;
            v[self.points.len() + a.line] += 1;
        }
        v
    }
}

/// Lifts `r`: `m` copies of each class, incidences listed line by line in
/// arc order.
pub fn lift(r: &ReducedLeviGraph) -> Result<(LeviGraph, IncidenceStructure)> {
    let m = r.m;
    for (k, a) in r.arcs.iter().enumerate() {
        for b in &r.arcs[..k] {
            if a.line == b.line && a.point == b.point && a.voltage == b.voltage {
                return Err(Error::Degenerate(format!(
                    "degenerate lift: parallel incidence {} -> {} with voltage {}",
                    r.lines[a.line], r.points[a.point], a.voltage
                )));
            }
        }
    }
    let points: Vec<Label> = r.points.iter().flat_map(|c| (0..m).map(move |i| Label::new(c.clone(), i))).collect();
    let lines: Vec<Label> = r.lines.iter().flat_map(|c| (0..m).map(move |i| Label::new(c.clone(), i))).collect();
    let mut incidences = Vec::with_capacity(r.arcs.len() * m as usize);
    for (lc, name) in r.lines.iter().enumerate() {
        for i in 0..m {
            for a in r.arcs.iter().filter(|a| a.line == lc) {
                incidences.push((Label::new(r.points[a.point].clone(), (i + a.voltage) % m), Label::new(name.clone(), i)));
            }
        }
    }
    let s = IncidenceStructure::new(points, lines, incidences)?;
    let g = levi_from_incidences(&s)?;
    Ok((g, s))
}

pub const PARAM_NAMES: [&str; 15] = ["a", "c", "d", "e", "f", "g", "q", "a'", "c'", "d'", "e'", "f'", "g'", "q'", "t"];

/// The 15 template voltages in the order a, c, d, e, f, g, q, a′, c′, d′, e′, f′, g′, q′, t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParameterVector(pub [u32; 15]);

impl ParameterVector {
    pub fn new(m: u32, entries: &[i64]) -> Result<Self> {
        if entries.len() != 15 {
            return Err(Error::Validation(format!("expected 15 parameters, got {}", entries.len())));
        }
        let mut out = [0u32; 15];
        for (o, &e) in out.iter_mut().zip(entries) {
            *o = e.rem_euclid(m as i64) as u32;
        }
        Ok(ParameterVector(out))
    }

    pub fn parse(m: u32, s: &str) -> Result<Self> {
        let v: Vec<i64> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad parameter {t:?}"))))
            .collect::<Result<_>>()?;
        ParameterVector::new(m, &v)
    }

    pub fn get(&self, name: &str) -> u32 {
        self.0[PARAM_NAMES.iter().position(|&n| n == name).expect("parameter name")]
    }
}

impl fmt::Display for ParameterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Point and line classes of the 15-parameter template, in construction order.
pub const B_POINT_CLASSES: [&str; 7] = ["R", "Y", "G", "C", "B", "M", "P"];
pub const B_LINE_CLASSES: [&str; 7] = ["r", "y", "g", "m", "b", "c", "p"];

/// Template arcs as (line class, point class, parameter index or `None` for 0).
/// Within each line class the order is the printed order of the incidence table.
pub(crate) const B_ARCS: [(&str, &str, Option<usize>); 28] = [
    ("r", "M", None),
    ("r", "M", Some(7)),
    ("r", "G", Some(2)),
    ("r", "P", None),
    ("y", "M", Some(8)),
    ("y", "B", Some(3)),
    ("y", "C", None),
    ("y", "P", None),
    ("g", "B", None),
    ("g", "C", Some(4)),
    ("g", "R", Some(9)),
    ("g", "P", None),
    ("m", "Y", Some(1)),
    ("m", "R", None),
    ("m", "R", Some(0)),
    ("m", "P", Some(6)),
    ("b", "C", Some(14)),
    ("b", "C", Some(5)),
    ("b", "Y", Some(10)),
    ("b", "G", None),
    ("c", "B", None),
    ("c", "B", Some(12)),
    ("c", "G", Some(11)),
    ("c", "Y", None),
    ("p", "R", None),
    ("p", "Y", None),
    ("p", "G", None),
    ("p", "M", Some(13)),
];

pub fn rlg_b_template(m: u32, p: &ParameterVector) -> ReducedLeviGraph {
    let pi = |c: &str| B_POINT_CLASSES.iter().position(|&x| x == c).unwrap();
    let li = |c: &str| B_LINE_CLASSES.iter().position(|&x| x == c).unwrap();
    let arcs = B_ARCS
        .iter()
        .map(|&(l, pt, k)| Arc { line: li(l), point: pi(pt), voltage: k.map_or(0, |k| p.0[k]) % m })
        .collect();
    ReducedLeviGraph::new(
        m,
        B_POINT_CLASSES.iter().map(|s| s.to_string()).collect(),
        B_LINE_CLASSES.iter().map(|s| s.to_string()).collect(),
        arcs,
    )
    .expect("template is well formed")
}

/// The three-class Z_7 template of the heptagonal configuration.
pub fn rlg_gr_template() -> ReducedLeviGraph {
    let arc = |line, point, voltage| Arc { line, point, voltage };
    ReducedLeviGraph::new(
        7,
        vec!["u".into(), "v".into(), "w".into()],
        vec!["L".into(), "M".into(), "N".into()],
        vec![
            arc(0, 0, 0),
            arc(0, 0, 2),
            arc(0, 1, 0),
            arc(0, 1, 1),
            arc(1, 1, 0),
            arc(1, 1, 3),
            arc(1, 2, 0),
            arc(1, 2, 2),
            arc(2, 2, 0),
            arc(2, 2, 1),
            arc(2, 0, 0),
            arc(2, 0, 3),
        ],
    )
    .expect("template is well formed")
}

/// A linear form over the 15 parameters that must be nonzero mod m.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Condition {
    coeffs: [i32; 15],
    last: usize,
}

/// Conditions for the lift of the template to be simple with girth >= 6:
/// parallel arcs differ, and no non-backtracking closed 4-walk has zero net
/// voltage.
fn girth_conditions() -> Vec<Condition> {
    let arcs: Vec<(usize, usize, Option<usize>)> = B_ARCS
        .iter()
        .map(|&(l, p, k)| {
            (
                B_LINE_CLASSES.iter().position(|&x| x == l).unwrap(),
                B_POINT_CLASSES.iter().position(|&x| x == p).unwrap(),
                k,
            )
        })
        .collect();
    let mut forms = Vec::new();
    let add = |c: &mut [i32; 15], k: Option<usize>, s: i32| {
        if let Some(k) = k {
            c[k] += s;
        }
    };
    for (i, a) in arcs.iter().enumerate() {
        for (j, b) in arcs.iter().enumerate() {
            if i < j && a.0 == b.0 && a.1 == b.1 {
                let mut c = [0; 15];
                add(&mut c, a.2, 1);
                add(&mut c, b.2, -1);
                forms.push(c);
            }
        }
    }
    for (i1, e1) in arcs.iter().enumerate() {
        for (i2, e2) in arcs.iter().enumerate() {
            if i2 == i1 || e2.1 != e1.1 {
                continue;
            }
            for (i3, e3) in arcs.iter().enumerate() {
                if i3 == i2 || e3.0 != e2.0 {
                    continue;
                }
                for (i4, e4) in arcs.iter().enumerate() {
                    if i4 == i3 || i4 == i1 || e4.1 != e3.1 || e4.0 != e1.0 {
                        continue;
                    }
                    let mut c = [0; 15];
                    add(&mut c, e1.2, 1);
                    add(&mut c, e2.2, -1);
                    add(&mut c, e3.2, 1);
                    add(&mut c, e4.2, -1);
                    forms.push(c);
                }
            }
        }
    }
    // Normalize sign so a form and its negation coincide.
    let mut out: Vec<Condition> = forms
        .into_iter()
        .map(|mut c| {
            if c.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                c.iter_mut().for_each(|x| *x = -*x);
            }
            let last = c.iter().rposition(|&x| x != 0).unwrap_or(0);
            Condition { coeffs: c, last }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn holds(c: &Condition, p: &[u32; 15], m: i64) -> bool {
    let s: i64 = c.coeffs.iter().zip(p).map(|(&a, &x)| a as i64 * x as i64).sum();
    s.rem_euclid(m) != 0
}

/// Every parameter vector over Z_m passing the girth conditions, with the
/// first `prefix.len()` entries fixed. Lexicographic order.
fn survivors(m: u32, prefix: &[u32], conds: &[Vec<Condition>]) -> Vec<ParameterVector> {
    fn rec(depth: usize, p: &mut [u32; 15], m: u32, conds: &[Vec<Condition>], out: &mut Vec<ParameterVector>) {
        if depth == 15 {
            out.push(ParameterVector(*p));
            return;
        }
        for v in 0..m {
            p[depth] = v;
            if conds[depth].iter().all(|c| holds(c, p, m as i64)) {
                rec(depth + 1, p, m, conds, out);
            }
        }
        p[depth] = 0;
    }
    let mut p = [0u32; 15];
    p[..prefix.len()].copy_from_slice(prefix);
    if !(0..prefix.len()).all(|d| conds[d].iter().all(|c| holds(c, &p, m as i64))) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(prefix.len(), &mut p, m, conds, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationFilters {
    pub require_connected: bool,
    /// Number of leading parameters used to split the sweep into work units.
    pub split_depth: usize,
}

impl Default for EnumerationFilters {
    fn default() -> Self {
        EnumerationFilters { require_connected: true, split_depth: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub params: ParameterVector,
    pub certificate: String,
    pub aut_order: usize,
    pub self_dual: bool,
    pub connected: bool,
    /// Parameter vectors in the sweep whose lift falls in this class.
    pub class_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationStats {
    pub total: u64,
    pub girth_survivors: usize,
    pub disconnected: usize,
    pub records: Vec<EnumerationRecord>,
}

/// Exhaustive sweep of the template over Z_m (m = 3 for the (21_4) census).
pub fn enumerate(m: u32, filters: EnumerationFilters) -> EnumerationStats {
    let conds = girth_conditions();
    let mut by_depth: Vec<Vec<Condition>> = vec![Vec::new(); 15];
    for c in conds {
        by_depth[c.last].push(c);
    }
    let depth = filters.split_depth.min(15);
    let prefixes: Vec<Vec<u32>> = (0..(m as usize).pow(depth as u32))
        .map(|mut k| {
            let mut p = vec![0u32; depth];
            for d in (0..depth).rev() {
                p[d] = (k % m as usize) as u32;
                k /= m as usize;
            }
            p
        })
        .collect();
    type Unit = (usize, usize, BTreeMap<Vec<u8>, (ParameterVector, bool, usize)>);
    let units: Vec<Unit> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut classes: BTreeMap<Vec<u8>, (ParameterVector, bool, usize)> = BTreeMap::new();
            let mut disconnected = 0;
            let surv = survivors(m, prefix, &by_depth);
            for p in &surv {
                let Ok((g, _)) = lift(&rlg_b_template(m, p)) else { continue };
                debug_assert!(g.girth() >= Girth::Finite(6));
                let connected = g.graph().is_connected();
                if !connected {
                    disconnected += 1;
                    if filters.require_connected {
                        continue;
                    }
                }
                let cert = canonical_form(&g, true).certificate;
                let e = classes.entry(cert).or_insert((*p, connected, 0));
                e.2 += 1;
                if *p < e.0 {
                    e.0 = *p;
                }
            }
            (surv.len(), disconnected, classes)
        })
        .collect();
    let mut merged: BTreeMap<Vec<u8>, (ParameterVector, bool, usize)> = BTreeMap::new();
    let mut girth_survivors = 0;
    let mut disconnected = 0;
    for (n, d, classes) in units {
        girth_survivors += n;
        disconnected += d;
        for (cert, (p, conn, count)) in classes {
            let e = merged.entry(cert).or_insert((p, conn, 0));
            e.2 += count;
            if p < e.0 {
                e.0 = p;
            }
        }
    }
    let mut records: Vec<EnumerationRecord> = merged
        .into_par_iter()
        .map(|(cert, (params, connected, class_size))| {
            let (g, _) = lift(&rlg_b_template(m, &params)).expect("survivor lifts");
            let grp = automorphism_group(&g);
            EnumerationRecord {
                params,
                certificate: cert.iter().map(|b| format!("{b:02x}")).collect(),
                aut_order: grp.order(),
                self_dual: !grp.reversing.is_empty(),
                connected,
                class_size,
            }
        })
        .collect();
    records.sort_by_key(|r| r.params);
    EnumerationStats { total: (m as u64).pow(15), girth_survivors, disconnected, records }
}

pub fn enumerate_z3(filters: EnumerationFilters) -> Vec<EnumerationRecord> {
    enumerate(3, filters).records
}

/// Configurations counted up to isomorphism rather than Levi graphs: a graph
/// that is not self-dual carries a dual pair.
pub fn configuration_count(records: &[EnumerationRecord]) -> usize {
    records.iter().map(|r| if r.self_dual { 1 } else { 2 }).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyLiftReport {
    pub m: u32,
    pub params: ParameterVector,
    pub lift_error: Option<String>,
    pub girth: Option<Girth>,
    pub connected: Option<bool>,
    pub nk: Option<NkReport>,
    pub certificate: Option<String>,
}

impl FamilyLiftReport {
    pub fn valid(&self) -> bool {
        self.nk.as_ref().is_some_and(|r| r.valid)
    }
}

pub fn family_lift_report(m: u32, p: &ParameterVector) -> FamilyLiftReport {
    match lift(&rlg_b_template(m, p)) {
        Err(e) => FamilyLiftReport {
            m,
            params: *p,
            lift_error: Some(e.to_string()),
            girth: None,
            connected: None,
            nk: None,
            certificate: None,
        },
        Ok((g, _)) => FamilyLiftReport {
            m,
            params: *p,
            lift_error: None,
            girth: Some(g.girth()),
            connected: Some(g.graph().is_connected()),
            nk: Some(validate_nk(&g, 7 * m as usize, 4)),
            certificate: Some(canonical_form(&g, true).hex()),
        },
    }
}

/// Counts survivors of the girth conditions by brute force lifting, for
/// cross-checking the pruned sweep on a slice of the space.
pub fn brute_force_survivors(m: u32, prefix: &[u32]) -> Vec<ParameterVector> {
    let free = 15 - prefix.len();
    let mut out = Vec::new();
    for mut k in 0..(m as usize).pow(free as u32) {
        let mut p = [0u32; 15];
        p[..prefix.len()].copy_from_slice(prefix);
        for d in (prefix.len()..15).rev() {
            p[d] = (k % m as usize) as u32;
            k /= m as usize;
        }
        let pv = ParameterVector(p);
        if let Ok((g, _)) = lift(&rlg_b_template(m, &pv)) {
            if g.girth() >= Girth::Finite(6) {
                out.push(pv);
            }
        }
    }
    out
}

/// Multiplicity of each class label among the template arcs, handy for
/// checking the four-arcs-per-class invariant.
pub fn class_valences(r: &ReducedLeviGraph) -> HashMap<String, usize> {
    let v = r.valences();
    r.points.iter().chain(&r.lines).cloned().zip(v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{are_isomorphic, is_automorphism, VertexPermutation};
    use crate::perm::Perm;

    pub(crate) fn b_params() -> ParameterVector {
        ParameterVector::parse(3, "1,2,1,1,1,2,1,1,2,1,1,1,2,1,0").unwrap()
    }

    #[test]
    fn single_arc_lift() {
        let r = ReducedLeviGraph::new(5, vec!["v".into()], vec!["L".into()], vec![Arc { line: 0, point: 0, voltage: 2 }]).unwrap();
        let (g, s) = lift(&r).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.graph().size(), 5);
        assert_eq!(s.incidences[0], (Label::new("v", 2), Label::new("L", 0)));
    }

    #[test]
    fn template_shape() {
        let r = rlg_b_template(3, &b_params());
        assert!(class_valences(&r).values().all(|&v| v == 4));
        let (g, _) = lift(&r).unwrap();
        assert_eq!((g.order(), g.graph().size()), (42, 84));
        let gr = rlg_gr_template();
        let (h, _) = lift(&gr).unwrap();
        assert_eq!(h.order(), 42);
        assert!(validate_nk(&h, 21, 4).valid);
    }

    #[test]
    fn deck_shift_is_automorphism() {
        for m in [3u32, 4, 5] {
            let p = ParameterVector::new(m, &[1, -1, 1, 1, 1, -1, -2, 1, -1, 1, 1, 1, -1, -2, 0]).unwrap();
            let (g, _) = lift(&rlg_b_template(m, &p)).unwrap();
            let img: Vec<usize> = g
                .labels()
                .iter()
                .map(|l| g.index_of(&Label::new(l.class.clone(), (l.index + 1) % m)).unwrap())
                .collect();
            let vp = VertexPermutation::new(&g, Perm::from_images(img));
            assert!(is_automorphism(&g, &vp).unwrap());
        }
    }

    #[test]
    fn zero_vector_is_degenerate() {
        let r = family_lift_report(3, &ParameterVector([0; 15]));
        assert!(r.lift_error.unwrap().contains("parallel incidence"));
    }

    #[test]
    fn conditions_agree_with_lifting() {
        let conds = girth_conditions();
        let mut by_depth: Vec<Vec<Condition>> = vec![Vec::new(); 15];
        for c in conds {
            by_depth[c.last].push(c);
        }
        for prefix in [[1u32, 2, 0, 1, 1, 1], [1, 2, 1, 1, 1, 2], [0, 1, 2, 0, 1, 2]] {
            assert_eq!(survivors(3, &prefix, &by_depth), brute_force_survivors(3, &prefix));
        }
    }

    #[test]
    fn row1_matches_b() {
        let row1 = ParameterVector::parse(3, "1,2,0,1,1,1,2,1,2,0,1,1,1,2,0").unwrap();
        let (a, _) = lift(&rlg_b_template(3, &b_params())).unwrap();
        let (b, _) = lift(&rlg_b_template(3, &row1)).unwrap();
        assert!(are_isomorphic(&a, &b, false));
    }
}
