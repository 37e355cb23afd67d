//! Combinatorial configurations and their Levi graphs.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A structured element name: symmetry class plus index inside the class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(String, u32)", into = "(String, u32)")]
pub struct Label {
    pub class: String,
    pub index: u32,
}

impl Label {
    pub fn new(class: impl Into<String>, index: u32) -> Self {
        Label { class: class.into(), index }
    }
}

impl From<(String, u32)> for Label {
    fn from((class, index): (String, u32)) -> Self {
        Label { class, index }
    }
}

impl From<Label> for (String, u32) {
    fn from(l: Label) -> Self {
        (l.class, l.index)
    }
}

pub(crate) fn subscript(n: u32) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| SUB[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, subscript(self.index))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Point,
    Line,
}

impl Kind {
    pub fn dual(self) -> Kind {
        match self {
            Kind::Point => Kind::Line,
            Kind::Line => Kind::Point,
        }
    }
}

/// Points, lines and the incidence pairs between them.
///
/// Incidence order is preserved; it is the "construction order" used when
/// printing incidence tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceStructure {
    pub points: Vec<Label>,
    pub lines: Vec<Label>,
    pub incidences: Vec<(Label, Label)>,
}

impl IncidenceStructure {
    pub fn new(points: Vec<Label>, lines: Vec<Label>, incidences: Vec<(Label, Label)>) -> Result<Self> {
        let s = IncidenceStructure { points, lines, incidences };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for l in self.points.iter().chain(&self.lines) {
            if !seen.insert(l) {
                return Err(Error::Validation(format!("duplicate label {l}")));
            }
        }
        let pts: HashSet<_> = self.points.iter().collect();
        let lns: HashSet<_> = self.lines.iter().collect();
        let mut pairs = HashSet::new();
        for (p, l) in &self.incidences {
            if !pts.contains(p) || !lns.contains(l) {
                return Err(Error::Validation(format!("dangling incidence ({p}, {l})")));
            }
            if !pairs.insert((p, l)) {
                return Err(Error::Validation(format!("duplicate incidence ({p}, {l})")));
            }
        }
        Ok(())
    }

    /// Points of each line, in incidence order.
    pub fn line_points(&self) -> BTreeMap<&Label, Vec<&Label>> {
        let mut out: BTreeMap<&Label, Vec<&Label>> = self.lines.iter().map(|l| (l, vec![])).collect();
        for (p, l) in &self.incidences {
            out.entry(l).or_default().push(p);
        }
        out
    }
}

/// Finite or infinite girth. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![vec![]; n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Validation(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::Validation(format!("parallel edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Shortest cycle length via one BFS per vertex.
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn components(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }
}

/// Bipartite point/line incidence graph with class labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviGraph {
    graph: Graph,
    kinds: Vec<Kind>,
    labels: Vec<Label>,
}

impl LeviGraph {
    pub fn new(graph: Graph, kinds: Vec<Kind>, labels: Vec<Label>) -> Result<Self> {
        if kinds.len() != graph.order() || labels.len() != graph.order() {
            return Err(Error::Validation("tag/label count does not match vertex count".into()));
        }
        for (u, v) in graph.edges() {
            if kinds[u] == kinds[v] {
                return Err(Error::Validation(format!("edge {}-{} joins two {:?} vertices", labels[u], labels[v], kinds[u])));
            }
        }
        Ok(LeviGraph { graph, kinds, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }
    pub fn order(&self) -> usize {
        self.graph.order()
    }
    pub fn girth(&self) -> Girth {
        self.graph.girth()
    }
    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    pub fn count(&self, kind: Kind) -> usize {
        self.kinds.iter().filter(|&&k| k == kind).count()
    }

    /// Incidence pairs read back from the edges, point first.
    pub fn incidences(&self) -> Vec<(Label, Label)> {
        self.graph
            .edges()
            .map(|(u, v)| {
                let (p, l) = if self.kinds[u] == Kind::Point { (u, v) } else { (v, u) };
                (self.labels[p].clone(), self.labels[l].clone())
            })
            .collect()
    }

    /// The same graph with POINT and LINE tags exchanged.
    pub fn dual(&self) -> LeviGraph {
        LeviGraph {
            graph: self.graph.clone(),
            kinds: self.kinds.iter().map(|k| k.dual()).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_incidences(&self) -> IncidenceStructure {
        let pick = |k| {
            self.labels
                .iter()
                .zip(&self.kinds)
                .filter(|(_, &kk)| kk == k)
                .map(|(l, _)| l.clone())
                .collect()
        };
        IncidenceStructure { points: pick(Kind::Point), lines: pick(Kind::Line), incidences: self.incidences() }
    }
}

pub fn levi_from_incidences(s: &IncidenceStructure) -> Result<LeviGraph> {
    s.validate()?;
    let mut index = HashMap::new();
    let mut labels = Vec::new();
    let mut kinds = Vec::new();
    for p in &s.points {
        index.insert(p, labels.len());
        labels.push(p.clone());
        kinds.push(Kind::Point);
    }
    for l in &s.lines {
        index.insert(l, labels.len());
        labels.push(l.clone());
        kinds.push(Kind::Line);
    }
    let mut g = Graph::new(labels.len());
    for (p, l) in &s.incidences {
        g.add_edge(index[p], index[l])?;
    }
    LeviGraph::new(g, kinds, labels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NkReport {
    pub valid: bool,
    pub points: usize,
    pub lines: usize,
    pub girth: Girth,
    pub connected: bool,
    pub violations: Vec<String>,
}

/// Checks the (n_k) axioms: n points, n lines, k-regular, girth at least 6.
pub fn validate_nk(g: &LeviGraph, n: usize, k: usize) -> NkReport {
    let points = g.count(Kind::Point);
    let lines = g.count(Kind::Line);
    let girth = g.girth();
    let mut violations = Vec::new();
    if points != n {
        violations.push(format!("{points} points, expected {n}"));
    }
    if lines != n {
        violations.push(format!("{lines} lines, expected {n}"));
    }
    for v in 0..g.order() {
        let d = g.graph().degree(v);
        if d != k {
            violations.push(format!("{} has degree {d}, expected {k}", g.labels()[v]));
        }
    }
    if girth < Girth::Finite(6) {
        violations.push(format!("girth {girth} < 6"));
    }
    NkReport { valid: violations.is_empty(), points, lines, girth, connected: g.graph().is_connected(), violations }
}

/// Degree histograms of points and lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCensus {
    pub points: BTreeMap<usize, usize>,
    pub lines: BTreeMap<usize, usize>,
}

impl TypeCensus {
    pub fn balanced(&self) -> bool {
        self.points == self.lines
    }

    pub fn point_incidences(&self) -> usize {
        self.points.iter().map(|(d, c)| d * c).sum()
    }

    pub fn line_incidences(&self) -> usize {
        self.lines.iter().map(|(d, c)| d * c).sum()
    }
}

impl fmt::Display for TypeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |h: &BTreeMap<usize, usize>| {
            h.iter().map(|(d, c)| format!("({c}_{d})")).collect::<String>()
        };
        write!(f, "({})", side(&self.points))?;
        if !self.balanced() {
            write!(f, " / ({})", side(&self.lines))?;
        }
        Ok(())
    }
}

pub fn degree_census(s: &IncidenceStructure) -> TypeCensus {
    let mut pd: HashMap<&Label, usize> = s.points.iter().map(|p| (p, 0)).collect();
    let mut ld: HashMap<&Label, usize> = s.lines.iter().map(|l| (l, 0)).collect();
    for (p, l) in &s.incidences {
        *pd.entry(p).or_default() += 1;
        *ld.entry(l).or_default() += 1;
    }
    let hist = |m: HashMap<&Label, usize>| {
        let mut h = BTreeMap::new();
        for d in m.into_values() {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    };
    TypeCensus { points: hist(pd), lines: hist(ld) }
}

/// Table-style listing: one row per line, grouped by line class in
/// `class_order` (remaining classes alphabetically), points in incidence order.
pub fn incidence_table(s: &IncidenceStructure, class_order: &[&str]) -> Result<String> {
    let rows = s.line_points();
    let rank = |c: &str| class_order.iter().position(|&x| x == c).unwrap_or(class_order.len());
    let mut lines: Vec<&Label> = rows.keys().copied().collect();
    lines.sort_by(|a, b| (rank(&a.class), &a.class, a.index).cmp(&(rank(&b.class), &b.class, b.index)));
    for l in s.points.iter().chain(&s.lines) {
        if l.class.is_empty() {
            return Err(Error::Validation("unstructured label in incidence table".into()));
        }
    }
    let head_w = lines.iter().map(|l| l.to_string().chars().count()).max().unwrap_or(0);
    let cell_w = s.points.iter().map(|l| l.to_string().chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        let head = l.to_string();
        out.push_str(&head);
        out.extend(std::iter::repeat(' ').take(head_w - head.chars().count()));
        out.push_str(" |");
        for p in &rows[l] {
            let cell = p.to_string();
            out.push(' ');
            out.push_str(&cell);
            out.extend(std::iter::repeat(' ').take(cell_w - cell.chars().count()));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> IncidenceStructure {
        let p = |i| Label::new("P", i);
        let l = |i| Label::new("l", i);
        IncidenceStructure::new(
            vec![p(0), p(1), p(2)],
            vec![l(0), l(1), l(2)],
            vec![(p(0), l(0)), (p(1), l(0)), (p(1), l(1)), (p(2), l(1)), (p(2), l(2)), (p(0), l(2))],
        )
        .unwrap()
    }

    #[test]
    fn triangle_is_hexagon() {
        let g = levi_from_incidences(&triangle()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.girth(), Girth::Finite(6));
        assert!(validate_nk(&g, 3, 2).valid);
        let t = incidence_table(&triangle(), &["l"]).unwrap();
        assert_eq!(t, "l₀ | P₀ P₁\nl₁ | P₁ P₂\nl₂ | P₂ P₀\n");
    }

    #[test]
    fn empty_structure() {
        let g = levi_from_incidences(&IncidenceStructure::default()).unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(g.girth(), Girth::Infinite);
    }

    #[test]
    fn rejects_bad_pairs() {
        let mut s = triangle();
        s.incidences.push(s.incidences[0].clone());
        assert!(matches!(levi_from_incidences(&s), Err(Error::Validation(m)) if m.contains("duplicate")));
        let mut s = triangle();
        s.incidences.push((Label::new("Q", 0), Label::new("l", 0)));
        assert!(levi_from_incidences(&s).is_err());
    }

    #[test]
    fn path_and_k44() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), Girth::Infinite);
        let edges = (0..4).flat_map(|i| (4..8).map(move |j| (i, j)));
        let g = Graph::from_edges(8, edges).unwrap();
        let kinds = (0..8).map(|i| if i < 4 { Kind::Point } else { Kind::Line }).collect();
        let labels = (0..8).map(|i| Label::new(if i < 4 { "P" } else { "l" }, i % 4)).collect();
        let lg = LeviGraph::new(g, kinds, labels).unwrap();
        let r = validate_nk(&lg, 4, 4);
        assert!(!r.valid);
        assert_eq!(r.girth, Girth::Finite(4));
    }

    #[test]
    fn single_flag_census() {
        let s = IncidenceStructure::new(
            vec![Label::new("P", 0)],
            vec![Label::new("l", 0)],
            vec![(Label::new("P", 0), Label::new("l", 0))],
        )
        .unwrap();
        let c = degree_census(&s);
        assert_eq!(c.points, BTreeMap::from([(1, 1)]));
        assert!(c.balanced());
    }

    fn brute_girth(g: &Graph) -> Girth {
        // Shortest cycle through each edge = 1 + distance between its ends avoiding it.
        let mut best = Girth::Infinite;
        for (u, v) in g.edges() {
            let n = g.order();
            let mut dist = vec![usize::MAX; n];
            dist[u] = 0;
            let mut q = VecDeque::from([u]);
            while let Some(a) = q.pop_front() {
                for &b in g.neighbors(a) {
                    if (a == u && b == v) || (a == v && b == u) {
                        continue;
                    }
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        q.push_back(b);
                    }
                }
            }
            if dist[v] != usize::MAX {
                best = best.min(Girth::Finite(dist[v] + 1));
            }
        }
        best
    }

    proptest::proptest! {
        #[test]
        fn girth_matches_brute_force(n in 1usize..=12, bits in proptest::collection::vec(proptest::bool::weighted(0.25), 66)) {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            proptest::prop_assert_eq!(g.girth(), brute_girth(&g));
        }

        #[test]
        fn round_trip_incidences(mask in proptest::collection::vec(proptest::bool::ANY, 16)) {
            let p: Vec<_> = (0..4).map(|i| Label::new("P", i)).collect();
            let l: Vec<_> = (0..4).map(|i| Label::new("l", i)).collect();
            let inc: Vec<_> = (0..16).filter(|&k| mask[k]).map(|k| (p[k / 4].clone(), l[k % 4].clone())).collect();
            let s = IncidenceStructure::new(p, l, inc.clone()).unwrap();
            let g = levi_from_incidences(&s).unwrap();
            let mut back = g.incidences();
            let mut want = inc;
            back.sort();
            want.sort();
            proptest::prop_assert_eq!(back, want);
        }
    }
}
