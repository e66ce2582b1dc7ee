//! Decomposition of bridgeless chordal K5-minor-free graphs into K3 and K4
//! blocks glued along cliques (0-, 1- and 2-sums).

use std::collections::BTreeSet;

use super::{bits, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    K3,
    K4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub vertices: Vec<usize>,
}

/// Blocks `a` and `b` share the clique `shared` (1 to 3 vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub a: usize,
    pub b: usize,
    pub shared: Vec<usize>,
}

impl Gluing {
    /// `k` of the k-sum: one less than the number of shared vertices.
    pub fn sum_order(&self) -> usize {
        self.shared.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliqueSumTree {
    pub blocks: Vec<Block>,
    pub gluings: Vec<Gluing>,
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |acc, &v| acc | 1 << v)
}

impl CliqueSumTree {
    /// Union of the edge sets of all blocks, as sorted pairs.
    pub fn reassemble(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for block in &self.blocks {
            for (i, &u) in block.vertices.iter().enumerate() {
                for &v in &block.vertices[i + 1..] {
                    out.insert((u.min(v), u.max(v)));
                }
            }
        }
        out
    }

    /// Checks that the tree is a genuine clique-sum decomposition of `g`:
    /// block kinds match their sizes, gluings form a spanning tree, each
    /// shared set is exactly what the new block has in common with the part
    /// already assembled, and the reassembled edge set equals `g`'s.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.blocks.is_empty() {
            return g.m() == 0 && g.n() == 1 && self.gluings.is_empty();
        }
        let kinds_ok = self.blocks.iter().all(|b| {
            let expected = match b.kind {
                BlockKind::K3 => 3,
                BlockKind::K4 => 4,
            };
            let mut sorted = b.vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            b.vertices.len() == expected
                && sorted.len() == expected
                && b.vertices.iter().all(|&v| v < g.n())
        });
        if !kinds_ok || self.gluings.len() + 1 != self.blocks.len() {
            return false;
        }
        let masks: Vec<u64> = self.blocks.iter().map(|b| mask_of(&b.vertices)).collect();
        for gl in &self.gluings {
            if gl.a >= masks.len() || gl.b >= masks.len() || gl.a == gl.b {
                return false;
            }
            let shared = mask_of(&gl.shared);
            if !(1..=3).contains(&gl.shared.len()) || shared != masks[gl.a] & masks[gl.b] {
                return false;
            }
        }
        // Grow the assembled part along the gluings from block 0.
        let mut placed = vec![false; self.blocks.len()];
        placed[0] = true;
        let mut covered = masks[0];
        let mut progress = true;
        while progress {
            progress = false;
            for gl in &self.gluings {
                let new = match (placed[gl.a], placed[gl.b]) {
                    (true, false) => gl.b,
                    (false, true) => gl.a,
                    _ => continue,
                };
                if masks[new] & covered != mask_of(&gl.shared) {
                    return false;
                }
                placed[new] = true;
                covered |= masks[new];
                progress = true;
            }
        }
        if placed.iter().any(|p| !p) || covered != g.vertex_mask() {
            return false;
        }
        let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
        edges == self.reassemble()
    }
}

impl Graph {
    /// Clique sum with `other`, identifying `glue[k].0` of `self` with
    /// `glue[k].1` of `other`. The glued vertices must form a clique on both
    /// sides; an empty `glue` gives the disjoint union. Vertices of `self`
    /// keep their labels, the remaining vertices of `other` follow in order.
    /// Edges of `self` come first, then the new edges of `other`.
    pub fn clique_sum(&self, other: &Graph, glue: &[(usize, usize)]) -> Result<Graph> {
        let mut map = vec![usize::MAX; other.n];
        let (mut left, mut right) = (0u64, 0u64);
        for &(a, b) in glue {
            for (v, n) in [(a, self.n), (b, other.n)] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if left >> a & 1 == 1 || right >> b & 1 == 1 {
                return Err(Error::Precondition("glued vertex repeated".into()));
            }
            left |= 1 << a;
            right |= 1 << b;
            map[b] = a;
        }
        if !super::chordal::is_clique(self, left) || !super::chordal::is_clique(other, right) {
            return Err(Error::Precondition(
                "glued vertices are not a clique".into(),
            ));
        }
        let mut next = self.n;
        for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let mut edges = self.edges.clone();
        for &(u, v) in &other.edges {
            let (u, v) = (map[u], map[v]);
            if !(u < self.n && v < self.n) {
                edges.push((u, v));
            }
        }
        Graph::new(next, edges)
    }

    /// Maximal cliques of a chordal graph as vertex masks, sorted.
    pub(crate) fn maximal_cliques_chordal(&self, peo: &[usize]) -> Vec<u64> {
        let mut later = self.vertex_mask();
        let mut cands = Vec::with_capacity(self.n);
        for &v in peo {
            later &= !(1 << v);
            cands.push(1 << v | (self.adj[v] & later));
        }
        let mut out: Vec<u64> = cands
            .iter()
            .copied()
            .filter(|&c| !cands.iter().any(|&d| d != c && d & c == c))
            .collect();
        out.sort_unstable_by_key(|&c| bits(c).collect::<Vec<_>>());
        out.dedup();
        out
    }

    /// Writes a connected graph as a 0/1/2-sum of K3's and K4's.
    ///
    /// Returns `None` unless the graph is chordal, bridgeless and free of
    /// 5-cliques. Built from a clique tree (maximum-weight spanning tree of
    /// the clique intersection graph). The one-vertex graph yields an empty
    /// decomposition.
    pub fn clique_sum_decompose(&self) -> Result<Option<CliqueSumTree>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.m() == 0 {
            return Ok(Some(CliqueSumTree::default()));
        }
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        if !super::PerfectEliminationOrdering(peo.clone()).is_valid_for(self) {
            return Ok(None);
        }
        let cliques = self.maximal_cliques_chordal(&peo);
        // a maximal clique of size two is an edge in no triangle, i.e. a bridge
        if cliques.iter().any(|c| !(3..=4).contains(&c.count_ones())) {
            return Ok(None);
        }
        let blocks: Vec<Block> = cliques
            .iter()
            .map(|&c| Block {
                kind: if c.count_ones() == 3 {
                    BlockKind::K3
                } else {
                    BlockKind::K4
                },
                vertices: bits(c).collect(),
            })
            .collect();

        let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
        for i in 0..cliques.len() {
            for j in i + 1..cliques.len() {
                let w = (cliques[i] & cliques[j]).count_ones();
                if w > 0 {
                    pairs.push((w, i, j));
                }
            }
        }
        pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
        let mut root: Vec<usize> = (0..cliques.len()).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        let mut gluings = Vec::new();
        for (_, i, j) in pairs {
            let (ri, rj) = (find(&mut root, i), find(&mut root, j));
            if ri != rj {
                root[ri] = rj;
                gluings.push(Gluing {
                    a: i,
                    b: j,
                    shared: bits(cliques[i] & cliques[j]).collect(),
                });
            }
        }
        let tree = CliqueSumTree { blocks, gluings };
        if !tree.is_valid_for(self) {
            return Err(Error::Internal("clique tree failed reassembly".into()));
        }
        Ok(Some(tree))
    }
}
