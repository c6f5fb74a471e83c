//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, BFS formulation with blossom contraction through base labels).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise-disjoint edges, stored canonically and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Disjoint edges of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.pairs {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        self.is_valid_for(g) && 2 * self.pairs.len() == g.n()
    }

    fn from_mates(mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { pairs }
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches an augmenting path from the exposed vertex `root`; returns
    /// its other exposed endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_queue.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_queue[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Odd cycle: contract the blossom onto its base.
                    let cur = self.lowest_common_ancestor(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mates(&Blossom::new(g).run())
}

/// A perfect matching of `g`, if one exists.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    (2 * m.len() == g.n()).then_some(m)
}
