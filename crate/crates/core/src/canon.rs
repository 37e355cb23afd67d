//! Canonical labeling of vertex-colored graphs by individualization and
//! refinement.
//!
//! Refinement is plain color refinement: a vertex's new color is the rank of
//! (old color, sorted multiset of neighbor colors). Target cells are the
//! smallest non-singleton cells, lowest color first. Leaves are ordered by
//! (trace of node invariants, certificate) and the minimum leaf wins.

use crate::incidence::Graph;
use crate::perm::Perm;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0100_0000_01b3;

fn fnv(h: u64, x: u64) -> u64 {
    let mut h = h;
    for b in x.to_le_bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

/// Ranks arbitrary colors into `0..k` preserving their order.
fn rank_colors(colors: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colors.iter().map(|c| distinct.binary_search(c).unwrap() as u32).collect()
}

/// Refines `colors` (ranks) to the coarsest equitable partition; returns an
/// isomorphism-invariant hash of the refinement history.
fn refine(g: &Graph, colors: &mut Vec<u32>) -> u64 {
    let n = colors.len();
    let mut cells = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut h = FNV_OFFSET;
    let mut sigs: Vec<(Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut s = Vec::with_capacity(g.degree(v) + 1);
            s.push(colors[v]);
            let start = s.len();
            s.extend(g.neighbors(v).iter().map(|&w| colors[w]));
            s[start..].sort_unstable();
            sigs.push((s, v));
        }
        sigs.sort_unstable();
        let mut rank = 0u32;
        for k in 0..n {
            if k > 0 && sigs[k].0 != sigs[k - 1].0 {
                rank += 1;
                for &x in &sigs[k - 1].0 {
                    h = fnv(h, x as u64);
                }
                h = fnv(h, u64::MAX);
            }
            colors[sigs[k].1] = rank;
        }
        let new_cells = if n == 0 { 0 } else { rank as usize + 1 };
        h = fnv(h, new_cells as u64);
        if new_cells == cells {
            return h;
        }
        cells = new_cells;
    }
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(w, &k)| if w == v { 2 * k } else if k == c { 2 * k + 1 } else { 2 * k })
        .collect::<Vec<_>>()
}

fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = colors.iter().copied().max()? as usize + 1;
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let (best, _) = sizes.iter().enumerate().filter(|(_, &s)| s > 1).min_by_key(|(c, &s)| (s, *c))?;
    Some((0..colors.len()).filter(|&v| colors[v] as usize == best).collect())
}

/// Certificate of a discrete coloring: vertex colors in canonical order
/// followed by the sorted relabeled edge list.
fn certificate(g: &Graph, init: &[u32], lab: &[u32]) -> Vec<u32> {
    let n = lab.len();
    let mut inv = vec![0usize; n];
    for (v, &i) in lab.iter().enumerate() {
        inv[i as usize] = v;
    }
    let mut cert: Vec<u32> = inv.iter().map(|&v| init[v]).collect();
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (lab[u], lab[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    cert.push(u32::MAX);
    for (a, b) in edges {
        cert.push(a);
        cert.push(b);
    }
    cert
}

#[derive(Clone, Debug)]
struct Leaf {
    trace: Vec<u64>,
    cert: Vec<u32>,
    lab: Vec<u32>,
}

impl Leaf {
    fn key(&self) -> (&[u64], &[u32]) {
        (&self.trace, &self.cert)
    }

    /// Automorphism sending this leaf's vertices onto `other`'s.
    fn map_to(&self, other: &Leaf) -> Perm {
        let n = self.lab.len();
        let mut inv = vec![0usize; n];
        for (v, &i) in other.lab.iter().enumerate() {
            inv[i as usize] = v;
        }
        Perm::from_images(self.lab.iter().map(|&i| inv[i as usize]).collect())
    }
}

/// Result of a canonical search.
#[derive(Clone, Debug)]
pub struct Canon {
    /// Canonical certificate (comparable across graphs).
    pub certificate: Vec<u32>,
    /// Vertex v gets canonical index `labeling[v]`.
    pub labeling: Vec<u32>,
    /// Automorphisms discovered along the way (not necessarily generators).
    pub found: Vec<Perm>,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    init: &'a [u32],
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Perm>,
}

impl<'a> CanonSearch<'a> {
    fn visit(&mut self, mut colors: Vec<u32>, trace: &mut Vec<u64>, path: &mut Vec<usize>) {
        let h = refine(self.g, &mut colors);
        trace.push(h);
        if let Some(best) = &self.best {
            let d = trace.len().min(best.trace.len());
            if trace[..d] > best.trace[..d] {
                trace.pop();
                return;
            }
        }
        match target_cell(&colors) {
            None => {
                let leaf = Leaf { trace: trace.clone(), cert: certificate(self.g, self.init, &colors), lab: colors };
                if let Some(first) = &self.first {
                    if leaf.key() == first.key() {
                        self.autos.push(leaf.map_to(first));
                    }
                } else {
                    self.first = Some(leaf.clone());
                }
                match &self.best {
                    Some(best) if leaf.key() > best.key() => {}
                    Some(best) if leaf.key() == best.key() => {
                        let a = leaf.map_to(best);
                        if !a.is_identity() {
                            self.autos.push(a);
                        }
                    }
                    _ => self.best = Some(leaf),
                }
            }
            Some(cell) => {
                let mut done: Vec<usize> = Vec::new();
                for &v in &cell {
                    if self.in_explored_orbit(v, &done, path) {
                        continue;
                    }
                    done.push(v);
                    path.push(v);
                    self.visit(individualize(&colors, v), trace, path);
                    path.pop();
                }
            }
        }
        trace.pop();
    }

    /// Is `v` the image of an explored sibling under an automorphism fixing
    /// the current path pointwise?
    fn in_explored_orbit(&self, v: usize, done: &[usize], path: &[usize]) -> bool {
        if done.is_empty() {
            return false;
        }
        let stab: Vec<&Perm> = self.autos.iter().filter(|a| path.iter().all(|&p| a.apply(p) == p)).collect();
        if stab.is_empty() {
            return false;
        }
        // Orbit of v under the pointwise stabilizer.
        let mut orbit = vec![v];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for a in &stab {
                for y in [a.apply(x), a.inverse().apply(x)] {
                    if !orbit.contains(&y) {
                        orbit.push(y);
                    }
                }
            }
            k += 1;
        }
        orbit.iter().any(|x| done.contains(x))
    }
}

/// Canonical form of `g` with vertex colors `colors` (any u32 values).
pub fn canonical(g: &Graph, colors: &[u32]) -> Canon {
    let init = rank_colors(colors);
    let mut s = CanonSearch { g, init: &init, best: None, first: None, autos: Vec::new() };
    s.visit(init.clone(), &mut Vec::new(), &mut Vec::new());
    let best = s.best.expect("search always reaches a leaf");
    // Certificate is stated in terms of the caller's color values.
    let mut certificate = best.cert;
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (v, &i) in best.lab.iter().enumerate() {
        inv[i as usize] = v;
    }
    for i in 0..n {
        certificate[i] = colors[inv[i]];
    }
    Canon { certificate, labeling: best.lab, found: s.autos }
}

struct AutSearch<'a> {
    g: &'a Graph,
    init: &'a [u32],
    first: Option<Leaf>,
    out: Vec<Perm>,
}

impl<'a> AutSearch<'a> {
    fn visit(&mut self, mut colors: Vec<u32>, trace: &mut Vec<u64>) {
        let h = refine(self.g, &mut colors);
        trace.push(h);
        if let Some(first) = &self.first {
            if first.trace.get(trace.len() - 1) != Some(&h) {
                trace.pop();
                return;
            }
        }
        match target_cell(&colors) {
            None => {
                let leaf = Leaf { trace: trace.clone(), cert: certificate(self.g, self.init, &colors), lab: colors };
                match &self.first {
                    None => {
                        self.out.push(Perm::identity(leaf.lab.len()));
                        self.first = Some(leaf);
                    }
                    Some(first) => {
                        if leaf.key() == first.key() {
                            self.out.push(leaf.map_to(first));
                        }
                    }
                }
            }
            Some(cell) => {
                for &v in &cell {
                    self.visit(individualize(&colors, v), trace);
                }
            }
        }
        trace.pop();
    }
}

/// Every color-preserving automorphism of `g` (identity first).
pub fn all_automorphisms(g: &Graph, colors: &[u32]) -> Vec<Perm> {
    let init = rank_colors(colors);
    let mut s = AutSearch { g, init: &init, first: None, out: Vec::new() };
    s.visit(init.clone(), &mut Vec::new());
    s.out
}

/// Whether `p` maps edges onto edges and keeps colors.
pub fn preserves(g: &Graph, colors: &[u32], p: &Perm) -> bool {
    p.len() == g.order()
        && (0..g.order()).all(|v| colors[v] == colors[p.apply(v)])
        && g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn relabel(g: &Graph, p: &[usize]) -> Graph {
        Graph::from_edges(g.order(), g.edges().map(|(u, v)| (p[u], p[v]))).unwrap()
    }

    fn brute_aut_count(g: &Graph, colors: &[u32]) -> usize {
        fn rec(g: &Graph, colors: &[u32], img: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
            let k = img.len();
            if k == g.order() {
                return 1;
            }
            let mut total = 0;
            for t in 0..g.order() {
                if used[t] || colors[t] != colors[k] || g.degree(t) != g.degree(k) {
                    continue;
                }
                if (0..k).all(|j| g.has_edge(k, j) == g.has_edge(t, img[j])) {
                    img.push(t);
                    used[t] = true;
                    total += rec(g, colors, img, used);
                    used[t] = false;
                    img.pop();
                }
            }
            total
        }
        rec(g, colors, &mut Vec::new(), &mut vec![false; g.order()])
    }

    #[test]
    fn hexagon_group() {
        let g = cycle(6);
        assert_eq!(all_automorphisms(&g, &[0; 6]).len(), 12);
        let colors = [0, 1, 0, 1, 0, 1];
        assert_eq!(all_automorphisms(&g, &colors).len(), 6);
    }

    #[test]
    fn hexagon_vs_two_triangles() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical(&cycle(6), &[0; 6]).certificate, canonical(&two, &[0; 6]).certificate);
    }

    #[test]
    fn petersen_invariance() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        let c = canonical(&g, &[0; 10]);
        assert_eq!(all_automorphisms(&g, &[0; 10]).len(), 120);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut p: Vec<usize> = (0..10).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical(&relabel(&g, &p), &[0; 10]).certificate, c.certificate);
        }
    }

    proptest::proptest! {
        #[test]
        fn small_graphs_match_brute_force(n in 1usize..=9, bits in proptest::collection::vec(proptest::bool::weighted(0.4), 36), cbits in proptest::collection::vec(0u32..2, 9), seed in 0u64..1000) {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { g.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let colors = &cbits[..n];
            let auts = all_automorphisms(&g, colors);
            proptest::prop_assert_eq!(auts.len(), brute_aut_count(&g, colors));
            proptest::prop_assert!(auts.iter().all(|a| preserves(&g, colors, a)));
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let h = relabel(&g, &p);
            let hc: Vec<u32> = { let mut c = vec![0; n]; for v in 0..n { c[p[v]] = colors[v]; } c };
            proptest::prop_assert_eq!(canonical(&g, colors).certificate, canonical(&h, &hc).certificate);
        }
    }
}
