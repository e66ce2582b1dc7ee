//! Edge contraction and K5-minor search.
//!
//! The search works on *branch sets*: disjoint connected sets of original
//! vertices, each acting as one vertex of the current minor. Contracting an
//! edge merges two sets, deleting a vertex drops a set. A K5 minor is found
//! when five sets are pairwise joined by an edge. Every minor with fewer
//! vertices is reachable by such steps, so the search is exhaustive; failed
//! states are memoised by their branch sets.

use std::collections::HashSet;

use super::{bits, Graph};
use crate::error::Result;

/// Result of contracting one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// New label of every old vertex.
    pub vertex_map: Vec<usize>,
    /// New index of every old edge; `None` for the contracted edge itself.
    /// Edges that became parallel map to the surviving copy.
    pub edge_map: Vec<Option<usize>>,
}

impl Graph {
    /// Identifies the endpoints `u < v` of edge `i`. The merged vertex takes
    /// `u`'s place, vertices above `v` shift down by one, and parallel edges
    /// collapse onto the first one in index order.
    pub fn contract_edge(&self, i: usize) -> Result<Contraction> {
        self.check_edge(i)?;
        let (u, v) = self.edges[i];
        let vertex_map: Vec<usize> = (0..self.n)
            .map(|w| match w {
                w if w == v => u,
                w if w > v => w - 1,
                w => w,
            })
            .collect();
        let mut new_edges: Vec<(usize, usize)> = Vec::with_capacity(self.m());
        let mut edge_map = Vec::with_capacity(self.m());
        let n = self.n - 1;
        let mut seen = vec![usize::MAX; n * n];
        for &(a, b) in &self.edges {
            let (a, b) = (vertex_map[a], vertex_map[b]);
            if a == b {
                edge_map.push(None);
                continue;
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            let slot = &mut seen[a * n + b];
            if *slot == usize::MAX {
                *slot = new_edges.len();
                new_edges.push((a, b));
            }
            edge_map.push(Some(*slot));
        }
        Ok(Contraction {
            graph: Graph::new(n, new_edges)?,
            vertex_map,
            edge_map,
        })
    }
}

/// Five disjoint connected vertex sets, pairwise joined by an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K5Minor {
    branch_sets: [Vec<usize>; 5],
}

impl K5Minor {
    pub fn branch_sets(&self) -> &[Vec<usize>; 5] {
        &self.branch_sets
    }

    /// Re-checks the model against `g` from scratch.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut masks = [0u64; 5];
        for (mask, set) in masks.iter_mut().zip(&self.branch_sets) {
            for &v in set {
                if v >= g.n() {
                    return false;
                }
                *mask |= 1 << v;
            }
        }
        let disjoint = (0..5).all(|i| (i + 1..5).all(|j| masks[i] & masks[j] == 0));
        let connected = masks.iter().all(|&s| g.induces_connected(s));
        let touching = (0..5).all(|i| {
            let nb = bits(masks[i]).fold(0u64, |acc, v| acc | g.adjacency(v));
            (i + 1..5).all(|j| nb & masks[j] != 0)
        });
        disjoint && connected && touching
    }
}

impl Graph {
    pub fn has_k5_minor(&self) -> bool {
        self.k5_minor().is_some()
    }

    /// A K5 minor model, if one exists.
    pub fn k5_minor(&self) -> Option<K5Minor> {
        if self.n < 5 || self.m() < 10 {
            return None;
        }
        let sets: Vec<u64> = (0..self.n).map(|v| 1u64 << v).collect();
        let mut search = MinorSearch {
            g: self,
            failed: HashSet::new(),
        };
        let found = search.run(sets)?;
        let mut branch_sets: [Vec<usize>; 5] = Default::default();
        for (out, mask) in branch_sets.iter_mut().zip(found) {
            *out = bits(mask).collect();
        }
        let mut minor = K5Minor { branch_sets };
        minor.branch_sets.sort();
        debug_assert!(minor.is_valid_in(self));
        Some(minor)
    }
}

struct MinorSearch<'a> {
    g: &'a Graph,
    failed: HashSet<Vec<u64>>,
}

impl MinorSearch<'_> {
    /// Adjacency between branch sets, as masks over set positions.
    fn local_adjacency(&self, sets: &[u64]) -> Vec<u64> {
        let reach: Vec<u64> = sets
            .iter()
            .map(|&s| bits(s).fold(0u64, |acc, v| acc | self.g.adj[v]) & !s)
            .collect();
        (0..sets.len())
            .map(|i| {
                (0..sets.len())
                    .filter(|&j| j != i && reach[i] & sets[j] != 0)
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect()
    }

    /// Drops sets of degree at most one and merges sets of degree two into a
    /// neighbour. Neither step can destroy a K5 minor: a branch set that is a
    /// single such vertex would need degree four, and a larger one can give
    /// the vertex away or absorb it.
    fn reduce(&self, mut sets: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        loop {
            let adj = self.local_adjacency(&sets);
            let low = (0..sets.len()).find(|&i| adj[i].count_ones() <= 2);
            match low {
                None => return (sets, adj),
                Some(i) => {
                    if adj[i].count_ones() == 2 {
                        let j = adj[i].trailing_zeros() as usize;
                        sets[j] |= sets[i];
                    }
                    sets.swap_remove(i);
                }
            }
        }
    }

    fn run(&mut self, sets: Vec<u64>) -> Option<[u64; 5]> {
        let (mut sets, adj) = self.reduce(sets);
        let k = sets.len();
        if k < 5 {
            return None;
        }
        let edges: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;
        // neither operation adds edges
        if edges < 10 {
            return None;
        }
        if let Some(clique) = five_clique(&adj) {
            let mut out = [0u64; 5];
            for (o, i) in out.iter_mut().zip(bits(clique)) {
                *o = sets[i];
            }
            return Some(out);
        }
        if k == 5 {
            return None;
        }
        sets.sort_unstable();
        if self.failed.contains(&sets) {
            return None;
        }
        let adj = self.local_adjacency(&sets);

        // A model lives inside one component.
        let comps = local_components(&adj);
        if comps.len() > 1 {
            for comp in comps {
                let sub: Vec<u64> = bits(comp).map(|i| sets[i]).collect();
                if let Some(found) = self.run(sub) {
                    return Some(found);
                }
            }
            self.failed.insert(sets);
            return None;
        }

        for i in 0..k {
            for j in bits(adj[i] & super::above(i)) {
                let mut next = sets.clone();
                next[i] |= next[j];
                next.swap_remove(j);
                if let Some(found) = self.run(next) {
                    return Some(found);
                }
            }
        }
        for i in 0..k {
            let mut next = sets.clone();
            next.remove(i);
            if let Some(found) = self.run(next) {
                return Some(found);
            }
        }
        self.failed.insert(sets);
        None
    }
}

fn local_components(adj: &[u64]) -> Vec<u64> {
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut seen = 0u64;
    let mut out = Vec::new();
    while seen != all {
        let s = (!seen & all).trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |acc, v| acc | adj[v]) & !comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

/// Positions of some 5-clique in a local adjacency, as a mask.
fn five_clique(adj: &[u64]) -> Option<u64> {
    fn grow(adj: &[u64], chosen: u64, cand: u64, need: u32) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        if cand.count_ones() < need {
            return None;
        }
        for v in bits(cand) {
            let rest = cand & adj[v] & super::above(v);
            if let Some(c) = grow(adj, chosen | 1 << v, rest, need - 1) {
                return Some(c);
            }
        }
        None
    }
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let rich = (0..adj.len())
        .filter(|&i| adj[i].count_ones() >= 4)
        .fold(0u64, |acc, i| acc | 1 << i)
        & all;
    grow(adj, 0, rich, 5)
}
