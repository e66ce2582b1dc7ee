//! Finite simple graphs with stable edge indices.
//!
//! Vertices are `0..n` and edges keep the index they had in the input list.
//! Adjacency is held as one `u64` bitmask per vertex, which caps graphs at 64
//! vertices; every routine in this crate that enumerates anything runs far
//! below that.

mod chordal;
mod clique_sum;
mod cycles;
mod enumerate;
pub mod families;
mod io;
mod minor;

pub use chordal::{ChordalWitness, PerfectEliminationOrdering};
pub use clique_sum::{Block, BlockKind, CliqueSumTree, Gluing};
pub use cycles::Cycle;
pub use enumerate::{canonical_form, labeled_graphs, LabeledGraphs};
pub use io::ParseError;
pub use minor::{Contraction, K5Minor};

use crate::error::{Error, Result};

const NO_EDGE: u32 = u32::MAX;

/// Maximum number of vertices a [`Graph`] may have.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
    edge_ids: Vec<u32>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Each pair is stored as `(min, max)`;
    /// edge `i` is the `i`-th pair of `edges`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![0; n],
            edge_ids: vec![NO_EDGE; n * n],
        };
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if g.adj[a] >> b & 1 == 1 {
                return Err(Error::DuplicateEdge(a, b));
            }
            let id = g.edges.len() as u32;
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
            g.edge_ids[a * n + b] = id;
            g.edge_ids[b * n + a] = id;
            g.edges.push((a, b));
        }
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `i`, smaller first.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub(crate) fn check_edge(&self, i: usize) -> Result<()> {
        if i < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                index: i,
                m: self.m(),
            })
        }
    }

    /// Bitmask of the neighbours of `v`.
    #[inline]
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.edge_ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.reach(s, self.vertex_mask());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` using only vertices in `allowed`.
    pub(crate) fn reach(&self, s: usize, allowed: u64) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Whether the vertices in `mask` induce a connected subgraph.
    pub(crate) fn induces_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    /// Graph with edge `i` removed. Vertices are unchanged and later edges
    /// shift down by one index.
    pub fn delete_edge(&self, i: usize) -> Result<Graph> {
        self.check_edge(i)?;
        Graph::new(
            self.n,
            self.edges
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e),
        )
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in increasing
    /// order. Edges keep their relative order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, v) in bits(mask).enumerate() {
            relabel[v] = new;
        }
        Graph::new(
            mask.count_ones() as usize,
            self.edges
                .iter()
                .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
                .map(|&(u, v)| (relabel[u], relabel[v])),
        )
    }

    /// Edge indices with exactly one endpoint in `mask`.
    pub(crate) fn cut_edges(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |&(_, &(u, v))| (mask >> u & 1) != (mask >> v & 1))
            .map(|(i, _)| i)
    }
}

/// Mask of the vertices strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// A proper colouring of a graph by at most four classes.
///
/// Two-class partitions come from [`Graph::bipartition`], four-class ones from
/// [`Graph::chordal_four_coloring`]. Classes may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Validates disjointness, coverage of `0..g.n()` and properness.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self> {
        if classes.len() > 4 {
            return Err(Error::Precondition(format!(
                "{} classes, at most 4 allowed",
                classes.len()
            )));
        }
        let mut color = vec![usize::MAX; g.n()];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: g.n(),
                    });
                }
                if color[v] != usize::MAX {
                    return Err(Error::Precondition(format!("vertex {v} in two classes")));
                }
                color[v] = c;
            }
        }
        if let Some(v) = color.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Precondition(format!("vertex {v} in no class")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| color[u] == color[v]) {
            return Err(Error::Precondition(format!(
                "edge {{{u}, {v}}} inside one class"
            )));
        }
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(VertexPartition { classes })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_mask(&self, c: usize) -> u64 {
        self.classes[c].iter().fold(0, |acc, &v| acc | 1 << v)
    }

    /// Class index of every vertex.
    pub fn color_of(&self, n: usize) -> Vec<usize> {
        let mut color = vec![0; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                color[v] = c;
            }
        }
        color
    }
}

impl Graph {
    /// Proper two-colouring, or `None` when the graph has an odd cycle.
    ///
    /// In every component the smallest vertex goes to the first class.
    pub fn bipartition(&self) -> Option<VertexPartition> {
        match self.two_color() {
            Ok(side) => {
                let mut classes = vec![Vec::new(), Vec::new()];
                for v in 0..self.n {
                    classes[side[v] as usize].push(v);
                }
                Some(VertexPartition { classes })
            }
            Err(_) => None,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_color().is_ok()
    }

    /// Some odd cycle (as a closed vertex sequence) when one exists.
    pub fn odd_cycle(&self) -> Option<Cycle> {
        self.two_color().err()
    }

    fn two_color(&self) -> std::result::Result<Vec<u8>, Cycle> {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(self.tree_cycle(u, w, &parent, &depth));
                    }
                }
            }
        }
        Ok(side)
    }

    /// Closes the BFS tree paths from `u` and `w` to their common ancestor.
    fn tree_cycle(&self, u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Cycle {
        let (mut a, mut b) = (u, w);
        let mut left = vec![a];
        let mut right = vec![b];
        while depth[a] > depth[b] {
            a = parent[a];
            left.push(a);
        }
        while depth[b] > depth[a] {
            b = parent[b];
            right.push(b);
        }
        while a != b {
            a = parent[a];
            b = parent[b];
            left.push(a);
            right.push(b);
        }
        right.pop();
        right.reverse();
        left.extend(right);
        Cycle::from_vertices(self, left)
    }

    /// Edges lying on no cycle, in increasing index order.
    pub fn bridges(&self) -> Vec<usize> {
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut out = Vec::new();
        let mut time = 0;
        for s in 0..self.n {
            if disc[s] == usize::MAX {
                self.bridge_dfs(s, usize::MAX, &mut disc, &mut low, &mut time, &mut out);
            }
        }
        out.sort_unstable();
        out
    }

    fn bridge_dfs(
        &self,
        u: usize,
        parent_edge: usize,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        out: &mut Vec<usize>,
    ) {
        disc[u] = *time;
        low[u] = *time;
        *time += 1;
        for w in self.neighbors(u) {
            let e = self.edge_ids[u * self.n + w] as usize;
            if e == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                self.bridge_dfs(w, e, disc, low, time, out);
                low[u] = low[u].min(low[w]);
                if low[w] > disc[u] {
                    out.push(e);
                }
            } else {
                low[u] = low[u].min(disc[w]);
            }
        }
    }

    /// All triangles as edge-index triples. For vertices `a < b < c` the
    /// triple is `[ab, bc, ac]`; triangles are listed by their vertex triple.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let higher = |v: usize| self.adj[v] & above(v);
            for b in bits(higher(a)) {
                for c in bits(higher(b) & self.adj[a]) {
                    out.push([
                        self.edge_ids[a * self.n + b] as usize,
                        self.edge_ids[b * self.n + c] as usize,
                        self.edge_ids[a * self.n + c] as usize,
                    ]);
                }
            }
        }
        out
    }

    pub fn edge_in_triangle(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        self.adj[u] & self.adj[v] != 0
    }

    pub fn has_triangle(&self) -> bool {
        (0..self.m()).any(|i| self.edge_in_triangle(i))
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(4, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
    }

    #[test]
    fn build_keeps_input_order() {
        let g = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.edge_index(2, 0), Some(2));
        assert_eq!(g.edge_index(0, 0), None);
    }

    #[test]
    fn bipartition_examples() {
        let p = cycle(4).bipartition().unwrap();
        assert_eq!(p.classes(), &[vec![0, 2], vec![1, 3]]);
        assert!(cycle(3).bipartition().is_none());
        let p = path(2).bipartition().unwrap();
        assert_eq!(p.classes(), &[vec![0], vec![1]]);
    }

    #[test]
    fn odd_cycle_is_a_cycle() {
        for g in [
            cycle(5),
            complete(4),
            petersen(),
            clique_sum_of_complete(2, 3),
        ] {
            let c = g.odd_cycle().unwrap();
            assert_eq!(c.len() % 2, 1);
            assert!(c.is_valid_in(&g));
        }
        assert!(cycle(6).odd_cycle().is_none());
    }

    #[test]
    fn bridges_examples() {
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(tree.bridges(), vec![0, 1, 2]);
        assert!(cycle(3).bridges().is_empty());
        let g23 = clique_sum_of_complete(2, 3);
        assert_eq!(g23.bridges(), vec![0]);
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(complete(4).triangles().len(), 4);
        assert!(cycle(4).triangles().is_empty());
        let g23 = clique_sum_of_complete(2, 3);
        assert_eq!(g23.triangles().len(), 1);
        assert!(!g23.edge_in_triangle(0));
        assert!((1..4).all(|i| g23.edge_in_triangle(i)));
        let k3 = cycle(3);
        assert_eq!(k3.triangles(), vec![[0, 1, 2]]);
    }

    #[test]
    fn partition_validation() {
        let g = cycle(4);
        assert!(VertexPartition::new(&g, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(VertexPartition::new(&g, vec![vec![0, 2], vec![1]]).is_err());
        assert!(VertexPartition::new(&g, vec![vec![0, 2], vec![1, 3], vec![]]).is_ok());
    }

    #[test]
    fn delete_edge_counts() {
        let k4 = complete(4);
        let g = k4.delete_edge(1).unwrap();
        assert_eq!(g.m(), 5);
        assert!(!g.has_edge(0, 2));
        assert!(k4.delete_edge(6).is_err());
    }
}
