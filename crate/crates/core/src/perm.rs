//! Permutations of `0..n` stored as image vectors.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Panics unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm(images)
    }

    pub fn try_from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` after `other`: i ↦ self(other(i)).
    pub fn after(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: usize) -> Perm {
        let mut acc = Perm::identity(self.len());
        for _ in 0..k {
            acc = self.after(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.0[s];
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.0[j];
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| acc.lcm(&c.len()))
    }

    /// Non-identity with all cycles of one length.
    pub fn is_semiregular(&self) -> bool {
        let cs = self.cycles();
        !self.is_identity() && cs.iter().all(|c| c.len() == cs[0].len())
    }
}

/// All elements of the group generated by `gens` (breadth-first closure).
pub fn closure(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id = Perm::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.after(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Greedy generating set: walk `elements` in order, keeping each one not yet
/// in the group generated so far.
pub fn greedy_generators(n: usize, elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut group = closure(n, &gens);
    for e in elements {
        if !group.contains(e) {
            gens.push(e.clone());
            group = closure(n, &gens);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_order() {
        let r = Perm::from_images(vec![1, 2, 0, 4, 3]);
        assert_eq!(r.order(), 6);
        assert!(r.pow(6).is_identity());
        assert!(r.after(&r.inverse()).is_identity());
        assert!(!r.is_semiregular());
        assert!(Perm::from_images(vec![1, 0, 3, 2]).is_semiregular());
    }

    #[test]
    fn dihedral_closure() {
        let rot = Perm::from_images(vec![1, 2, 3, 4, 5, 0]);
        let refl = Perm::from_images(vec![0, 5, 4, 3, 2, 1]);
        let g = closure(6, &[rot.clone(), refl.clone()]);
        assert_eq!(g.len(), 12);
        let elems: Vec<_> = {
            let mut v: Vec<_> = g.into_iter().collect();
            v.sort();
            v
        };
        let gens = greedy_generators(6, &elems);
        assert_eq!(closure(6, &gens).len(), 12);
    }
}
