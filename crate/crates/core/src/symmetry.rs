//! Isomorphism, automorphism groups, self-dualities, semiregular
//! automorphisms and quotients of Levi graphs; a few named graphs.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::canon::{all_automorphisms, canonical};
use crate::error::{Error, Result};
use crate::incidence::{Graph, Kind, Label, LeviGraph};
use crate::perm::{closure, greedy_generators, Perm};
use crate::voltage::{Arc, ReducedLeviGraph};

fn kind_colors(g: &LeviGraph) -> Vec<u32> {
    g.kinds().iter().map(|k| *k as u32).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ColorBehavior {
    Preserving,
    Reversing,
}

/// A vertex permutation of one particular Levi graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    pub perm: Perm,
    pub order: usize,
    pub behavior: ColorBehavior,
}

impl VertexPermutation {
    /// Wraps `perm`; behavior is read off the tags of vertex images.
    /// Mixed behavior is reported as `Reversing` only if every vertex swaps.
    pub fn new(g: &LeviGraph, perm: Perm) -> Self {
        let k = g.kinds();
        let reversing = g.order() > 0 && (0..g.order()).all(|v| k[v] != k[perm.apply(v)]);
        let behavior = if reversing { ColorBehavior::Reversing } else { ColorBehavior::Preserving };
        VertexPermutation { order: perm.order(), perm, behavior }
    }

    /// Builds a permutation from cycles of labels; unmentioned vertices are
    /// fixed. Labels must exist in `g`.
    pub fn from_label_cycles(g: &LeviGraph, cycles: &[Vec<Label>]) -> Result<Self> {
        let index: HashMap<&Label, usize> = g.labels().iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut img: Vec<usize> = (0..g.order()).collect();
        let mut touched = vec![false; g.order()];
        for c in cycles {
            for (k, l) in c.iter().enumerate() {
                let from = *index.get(l).ok_or_else(|| Error::Validation(format!("label {l} not in graph")))?;
                let to_l = &c[(k + 1) % c.len()];
                let to = *index.get(to_l).ok_or_else(|| Error::Validation(format!("label {to_l} not in graph")))?;
                if touched[from] {
                    return Err(Error::Validation(format!("label {l} appears twice")));
                }
                touched[from] = true;
                img[from] = to;
            }
        }
        let perm = Perm::try_from_images(img).ok_or_else(|| Error::Validation("cycles do not define a bijection".into()))?;
        Ok(VertexPermutation::new(g, perm))
    }

    /// Cycle notation using the graph's labels, fixed points omitted.
    pub fn cycle_notation(&self, g: &LeviGraph) -> String {
        let mut s = String::new();
        for c in self.perm.cycles() {
            if c.len() < 2 {
                continue;
            }
            let names: Vec<String> = c.iter().map(|&v| g.labels()[v].to_string()).collect();
            let _ = write!(s, "({})", names.join(","));
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

/// Canonical certificate plus the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub certificate: Vec<u8>,
    /// Vertex v is sent to canonical position `relabeling[v]`.
    pub relabeling: Vec<usize>,
    /// Whether the minimum was attained with POINT/LINE tags swapped.
    pub swapped: bool,
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.certificate.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn encode(cert: &[u32]) -> Vec<u8> {
    let mut out = Vec::with_capacity(cert.len() * 2);
    for &x in cert {
        // Vertex indices stay far below 2^16 for the graphs handled here.
        let x = if x == u32::MAX { 0xffff } else { x.min(0xfffe) as u16 };
        out.extend_from_slice(&x.to_be_bytes());
    }
    out
}

pub fn canonical_form(g: &LeviGraph, allow_color_swap: bool) -> CanonicalForm {
    let colors = kind_colors(g);
    let c = canonical(g.graph(), &colors);
    let mut best = CanonicalForm {
        certificate: encode(&c.certificate),
        relabeling: c.labeling.iter().map(|&i| i as usize).collect(),
        swapped: false,
    };
    if allow_color_swap {
        let swapped: Vec<u32> = colors.iter().map(|c| 1 - c).collect();
        let d = canonical(g.graph(), &swapped);
        let cert = encode(&d.certificate);
        if cert < best.certificate {
            best = CanonicalForm { certificate: cert, relabeling: d.labeling.iter().map(|&i| i as usize).collect(), swapped: true };
        }
    }
    best
}

pub fn are_isomorphic(g1: &LeviGraph, g2: &LeviGraph, allow_color_swap: bool) -> bool {
    g1.order() == g2.order()
        && g1.graph().size() == g2.graph().size()
        && canonical_form(g1, allow_color_swap).certificate == canonical_form(g2, allow_color_swap).certificate
}

/// An isomorphism from `g` onto its dual, as a vertex permutation of `g`.
fn duality_map(g: &LeviGraph) -> Option<Perm> {
    let colors = kind_colors(g);
    let swapped: Vec<u32> = colors.iter().map(|c| 1 - c).collect();
    let a = canonical(g.graph(), &colors);
    let b = canonical(g.graph(), &swapped);
    if a.certificate != b.certificate {
        return None;
    }
    // v -> canonical index under a -> vertex with that index under b.
    let mut inv_b = vec![0usize; g.order()];
    for (v, &i) in b.labeling.iter().enumerate() {
        inv_b[i as usize] = v;
    }
    Some(Perm::from_images(a.labeling.iter().map(|&i| inv_b[i as usize]).collect()))
}

/// The full automorphism group, preserving maps first.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub preserving: Vec<Perm>,
    pub reversing: Vec<Perm>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.preserving.len() + self.reversing.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.preserving.iter().chain(&self.reversing)
    }
}

pub fn automorphism_group(g: &LeviGraph) -> AutomorphismGroup {
    let colors = kind_colors(g);
    let mut preserving = all_automorphisms(g.graph(), &colors);
    preserving.sort();
    let mut reversing: Vec<Perm> = match duality_map(g) {
        Some(sigma) => preserving.iter().map(|a| sigma.after(a)).collect(),
        None => Vec::new(),
    };
    reversing.sort();
    AutomorphismGroup { preserving, reversing }
}

#[derive(Clone, Debug)]
pub struct GroupSummary {
    pub order: usize,
    pub generators: Vec<VertexPermutation>,
    pub preserving_count: usize,
    pub reversing_count: usize,
}

impl GroupSummary {
    pub fn to_json(&self, g: &LeviGraph) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "preserving": self.preserving_count,
            "reversing": self.reversing_count,
            "generators": self.generators.iter().map(|p| p.cycle_notation(g)).collect::<Vec<_>>(),
        })
    }
}

pub fn automorphisms(g: &LeviGraph) -> GroupSummary {
    let grp = automorphism_group(g);
    let elems: Vec<Perm> = grp.elements().cloned().collect();
    let gens = greedy_generators(g.order(), &elems);
    GroupSummary {
        order: grp.order(),
        generators: gens.into_iter().map(|p| VertexPermutation::new(g, p)).collect(),
        preserving_count: grp.preserving.len(),
        reversing_count: grp.reversing.len(),
    }
}

/// Size of the group generated by the summary's generators.
pub fn generated_order(g: &LeviGraph, s: &GroupSummary) -> usize {
    let gens: Vec<Perm> = s.generators.iter().map(|p| p.perm.clone()).collect();
    closure(g.order(), &gens).len()
}

pub fn is_automorphism(g: &LeviGraph, p: &VertexPermutation) -> Result<bool> {
    if p.perm.len() != g.order() {
        return Err(Error::Validation(format!("mapping covers {} of {} vertices", p.perm.len(), g.order())));
    }
    let k = g.kinds();
    let tags_ok = (0..g.order()).all(|v| match p.behavior {
        ColorBehavior::Preserving => k[v] == k[p.perm.apply(v)],
        ColorBehavior::Reversing => k[v] != k[p.perm.apply(v)],
    });
    let gr = g.graph();
    Ok(tags_ok && gr.edges().all(|(u, v)| gr.has_edge(p.perm.apply(u), p.perm.apply(v))))
}

pub fn self_dualities(g: &LeviGraph) -> Vec<VertexPermutation> {
    automorphism_group(g).reversing.into_iter().map(|p| VertexPermutation::new(g, p)).collect()
}

pub fn duality_rank(g: &LeviGraph) -> Option<usize> {
    self_dualities(g).iter().map(|p| p.order).min()
}

/// Semiregular automorphisms, identity excluded, in group order.
pub fn semiregular_automorphisms(g: &LeviGraph) -> Vec<VertexPermutation> {
    automorphism_group(g)
        .elements()
        .filter(|p| p.is_semiregular())
        .map(|p| VertexPermutation::new(g, p.clone()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeShape {
    /// Between two different orbits.
    Normal,
    /// Both ends in one orbit, edge orbit of full length.
    Loop,
    /// Edge reversed by a power of the map: half-length edge orbit.
    Semi,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientEdge {
    pub from: usize,
    pub to: usize,
    pub shape: EdgeShape,
    /// Index difference `j - i` for the representative edge from the `i`-th
    /// element of `from` to the `j`-th element of `to`.
    pub voltage: usize,
}

/// Orbit graph of a semiregular automorphism.
#[derive(Clone, Debug, Serialize)]
pub struct Quotient {
    pub m: usize,
    /// Representative vertex of each orbit in `g`.
    pub reps: Vec<usize>,
    /// Tag shared by the orbit, `None` if it mixes points and lines.
    pub tags: Vec<Option<Kind>>,
    pub edges: Vec<QuotientEdge>,
    pub bipartite: bool,
}

impl Quotient {
    /// Encoding as a colored simple graph: orbit vertices plus one vertex per
    /// edge (subdivision), loops and semi-edges as pendant colored vertices.
    /// Voltages and tags are ignored.
    pub fn shape_graph(&self) -> (Graph, Vec<u32>) {
        let n = self.reps.len();
        let mut g = Graph::new(n + self.edges.len());
        let mut colors = vec![0u32; n];
        for (k, e) in self.edges.iter().enumerate() {
            let x = n + k;
            match e.shape {
                EdgeShape::Normal => {
                    g.add_edge(e.from, x).unwrap();
                    g.add_edge(e.to, x).unwrap();
                    colors.push(1);
                }
                EdgeShape::Loop => {
                    g.add_edge(e.from, x).unwrap();
                    colors.push(2);
                }
                EdgeShape::Semi => {
                    g.add_edge(e.from, x).unwrap();
                    colors.push(3);
                }
            }
        }
        (g, colors)
    }

    pub fn shape_certificate(&self) -> Vec<u32> {
        let (g, c) = self.shape_graph();
        canonical(&g, &c).certificate
    }

    /// The reduced Levi graph with these voltages (bipartite quotients only).
    pub fn to_reduced(&self, g: &LeviGraph) -> Result<ReducedLeviGraph> {
        if !self.bipartite {
            return Err(Error::Validation("quotient is not bipartite".into()));
        }
        let mut point_ix = HashMap::new();
        let mut line_ix = HashMap::new();
        let mut points = Vec::new();
        let mut lines = Vec::new();
        for (o, &r) in self.reps.iter().enumerate() {
            let name = format!("{}{}", g.labels()[r].class, g.labels()[r].index);
            match self.tags[o] {
                Some(Kind::Point) => {
                    point_ix.insert(o, points.len());
                    points.push(name);
                }
                _ => {
                    line_ix.insert(o, lines.len());
                    lines.push(name);
                }
            }
        }
        let m = self.m;
        let arcs = self
            .edges
            .iter()
            .map(|e| {
                if let Some(&l) = line_ix.get(&e.from) {
                    Arc { line: l, point: point_ix[&e.to], voltage: e.voltage as u32 }
                } else {
                    Arc { line: line_ix[&e.to], point: point_ix[&e.from], voltage: ((m - e.voltage) % m) as u32 }
                }
            })
            .collect();
        ReducedLeviGraph::new(m as u32, points, lines, arcs)
    }
}

/// Quotient of `g` by semiregular `p`. Orbit representatives come from a
/// breadth-first spanning tree rooted at vertex 0's orbit, so tree edges
/// carry voltage 0.
pub fn quotient(g: &LeviGraph, p: &VertexPermutation) -> Result<Quotient> {
    let perm = &p.perm;
    if !perm.is_semiregular() {
        return Err(Error::Validation("automorphism is not semiregular".into()));
    }
    let gr = g.graph();
    let n = g.order();
    let m = perm.order();
    let mut orbit = vec![usize::MAX; n];
    let mut index = vec![0usize; n];
    let mut reps: Vec<usize> = Vec::new();
    let set_rep = |r: usize, orbit: &mut Vec<usize>, index: &mut Vec<usize>, reps: &mut Vec<usize>| {
        let o = reps.len();
        reps.push(r);
        let mut x = r;
        for i in 0..m {
            orbit[x] = o;
            index[x] = i;
            x = perm.apply(x);
        }
        o
    };
    for start in 0..n {
        if orbit[start] != usize::MAX {
            continue;
        }
        let o = set_rep(start, &mut orbit, &mut index, &mut reps);
        let mut queue = VecDeque::from([o]);
        while let Some(o) = queue.pop_front() {
            let r = reps[o];
            for &w in gr.neighbors(r) {
                if orbit[w] == usize::MAX {
                    let o2 = set_rep(w, &mut orbit, &mut index, &mut reps);
                    queue.push_back(o2);
                }
            }
        }
    }
    let kinds = g.kinds();
    let tags: Vec<Option<Kind>> = (0..reps.len())
        .map(|o| {
            let k = kinds[reps[o]];
            (0..n).filter(|&v| orbit[v] == o).all(|v| kinds[v] == k).then_some(k)
        })
        .collect();
    // One edge per edge orbit, represented at the orbit representative of its
    // smaller endpoint orbit.
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut edges = Vec::new();
    for (u, v) in gr.edges() {
        if seen.contains_key(&(u, v)) {
            continue;
        }
        let (mut a, mut b) = (u, v);
        let mut semi = false;
        loop {
            seen.insert((a.min(b), a.max(b)), ());
            a = perm.apply(a);
            b = perm.apply(b);
            if (a, b) == (u, v) {
                break;
            }
            if (a, b) == (v, u) {
                semi = true;
                break;
            }
        }
        let (ou, ov) = (orbit[u], orbit[v]);
        let (from, to, i, j) = if ou <= ov { (ou, ov, index[u], index[v]) } else { (ov, ou, index[v], index[u]) };
        let shape = if ou != ov {
            EdgeShape::Normal
        } else if semi {
            EdgeShape::Semi
        } else {
            EdgeShape::Loop
        };
        edges.push(QuotientEdge { from, to, shape, voltage: (j + m - i) % m });
    }
    edges.sort_by_key(|e| (e.from, e.to, e.voltage));
    let bipartite = tags.iter().all(|t| t.is_some())
        && edges.iter().all(|e| e.shape == EdgeShape::Normal && tags[e.from] != tags[e.to]);
    Ok(Quotient { m, reps, tags, edges, bipartite })
}

/// Quotients by all semiregular automorphisms, grouped by shape.
#[derive(Clone, Debug)]
pub struct QuotientCensus {
    pub semiregular_count: usize,
    pub preserving_semiregular: usize,
    /// Distinct quotient shapes: (vertex count, bipartite, representative quotient, multiplicity).
    pub classes: Vec<(usize, bool, Quotient, usize)>,
}

pub fn quotient_census(g: &LeviGraph) -> QuotientCensus {
    let semi = semiregular_automorphisms(g);
    let mut classes: BTreeMap<Vec<u32>, (usize, bool, Quotient, usize)> = BTreeMap::new();
    for p in &semi {
        let q = quotient(g, p).expect("semiregular by construction");
        let key = q.shape_certificate();
        classes.entry(key).or_insert_with(|| (q.reps.len(), q.bipartite, q.clone(), 0)).3 += 1;
    }
    let mut classes: Vec<_> = classes.into_values().collect();
    classes.sort_by_key(|c| (c.0, !c.1));
    QuotientCensus {
        semiregular_count: semi.len(),
        preserving_semiregular: semi.iter().filter(|p| p.behavior == ColorBehavior::Preserving).count(),
        classes,
    }
}

/// Point-line incidence graph of the Fano plane.
pub fn heawood() -> LeviGraph {
    let mut g = Graph::new(14);
    for l in 0..7 {
        for d in [0, 1, 3] {
            g.add_edge((l + d) % 7, 7 + l).unwrap();
        }
    }
    let kinds = (0..14).map(|v| if v < 7 { Kind::Point } else { Kind::Line }).collect();
    let labels = (0..14).map(|v| Label::new(if v < 7 { "p" } else { "l" }, (v % 7) as u32)).collect();
    LeviGraph::new(g, kinds, labels).unwrap()
}

/// Vertices are the edges of `g` in `g.edges()` order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut at: Vec<Vec<usize>> = vec![vec![]; g.order()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        at[u].push(k);
        at[v].push(k);
    }
    let mut lg = Graph::new(edges.len());
    for es in &at {
        for (i, &a) in es.iter().enumerate() {
            for &b in &es[i + 1..] {
                if !lg.has_edge(a, b) {
                    lg.add_edge(a, b).unwrap();
                }
            }
        }
    }
    lg
}

/// Bipartite double cover: `(v, 0)` are points, `(v, 1)` lines.
pub fn kronecker_cover(g: &Graph) -> LeviGraph {
    let n = g.order();
    let mut c = Graph::new(2 * n);
    for (u, v) in g.edges() {
        c.add_edge(u, n + v).unwrap();
        c.add_edge(v, n + u).unwrap();
    }
    let kinds = (0..2 * n).map(|v| if v < n { Kind::Point } else { Kind::Line }).collect();
    let labels = (0..2 * n).map(|v| Label::new(if v < n { "a" } else { "b" }, (v % n) as u32)).collect();
    LeviGraph::new(c, kinds, labels).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{levi_from_incidences, Girth, IncidenceStructure};

    fn hexagon() -> LeviGraph {
        let p = |i| Label::new("P", i);
        let l = |i| Label::new("l", i);
        levi_from_incidences(
            &IncidenceStructure::new(
                vec![p(0), p(1), p(2)],
                vec![l(0), l(1), l(2)],
                vec![(p(0), l(0)), (p(1), l(0)), (p(1), l(1)), (p(2), l(1)), (p(2), l(2)), (p(0), l(2))],
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn hexagon_symmetry() {
        let g = hexagon();
        let s = automorphisms(&g);
        assert_eq!((s.order, s.preserving_count, s.reversing_count), (12, 6, 6));
        assert_eq!(generated_order(&g, &s), 12);
        assert!(!self_dualities(&g).is_empty());
        assert_eq!(semiregular_automorphisms(&g).len(), 8);
    }

    #[test]
    fn heawood_properties() {
        let h = heawood();
        assert_eq!((h.order(), h.graph().size(), h.girth()), (14, 21, Girth::Finite(6)));
        let lg = line_graph(h.graph());
        assert_eq!(lg.order(), 21);
        assert!((0..21).all(|v| lg.degree(v) == 4));
        assert_eq!(automorphisms(&h).order, 336);
    }

    #[test]
    fn asymmetric_graph_has_no_semiregular_maps() {
        // Path P0 - l0 - P1 - l1 - P2 - l2 - P3 plus pendant l3 on P1: trivial group.
        let e = [(0, 4), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (1, 7)];
        let g = Graph::from_edges(8, e).unwrap();
        let kinds = (0..8).map(|v| if v < 4 { Kind::Point } else { Kind::Line }).collect();
        let labels = (0..8).map(|v| Label::new(if v < 4 { "P" } else { "l" }, v as u32 % 4)).collect();
        let g = LeviGraph::new(g, kinds, labels).unwrap();
        assert_eq!(automorphisms(&g).order, 1);
        assert!(semiregular_automorphisms(&g).is_empty());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let g = hexagon();
        let r = VertexPermutation::from_label_cycles(
            &g,
            &[
                vec![Label::new("P", 0), Label::new("P", 1), Label::new("P", 2)],
                vec![Label::new("l", 0), Label::new("l", 1), Label::new("l", 2)],
            ],
        )
        .unwrap();
        assert!(is_automorphism(&g, &r).unwrap());
        assert_eq!(r.order, 3);
        assert_eq!(r.cycle_notation(&g), "(P₀,P₁,P₂)(l₀,l₁,l₂)");
        assert!(VertexPermutation::from_label_cycles(&g, &[vec![Label::new("Q", 0)]]).is_err());
    }
}
