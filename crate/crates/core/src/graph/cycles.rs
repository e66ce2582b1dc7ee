use std::ops::ControlFlow;

use super::{above, bits, Graph};

/// A cycle given by its vertex sequence; `edges()[i]` joins `vertices()[i]`
/// and `vertices()[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    /// Panics if consecutive vertices are not adjacent.
    pub(crate) fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Cycle {
        let len = vertices.len();
        let edges = (0..len)
            .map(|i| {
                g.edge_index(vertices[i], vertices[(i + 1) % len])
                    .expect("cycle vertices must be consecutive neighbours")
            })
            .collect();
        Cycle { vertices, edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices, at least three, consecutive ones adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.len();
        let mut seen = 0u64;
        for &v in &self.vertices {
            if v >= g.n() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        len >= 3
            && (0..len).all(|i| {
                g.edge_index(self.vertices[i], self.vertices[(i + 1) % len]) == Some(self.edges[i])
            })
    }

    /// Valid and without chords.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if !self.is_valid_in(g) {
            return false;
        }
        let mask = self.vertices.iter().fold(0u64, |acc, &v| acc | 1 << v);
        self.vertices
            .iter()
            .all(|&v| (g.adjacency(v) & mask).count_ones() == 2)
    }
}

impl Graph {
    /// Visits every chordless cycle exactly once.
    ///
    /// Each cycle is reported starting at its smallest vertex and oriented so
    /// that the second vertex is smaller than the last.
    pub fn for_each_induced_cycle<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut path = Vec::with_capacity(self.n);
        for s in 0..self.n {
            path.clear();
            path.push(s);
            for v1 in bits(self.adj[s] & above(s)) {
                path.push(v1);
                self.extend_chordless(s, &mut path, 1 << s | 1 << v1, 0, &mut f)?;
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    /// `blocked` is the union of neighbourhoods of the interior path vertices.
    fn extend_chordless<F>(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        on_path: u64,
        blocked: u64,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let last = *path.last().unwrap();
        let cand = self.adj[last] & above(s) & !on_path & !blocked;
        for w in bits(cand) {
            if self.adj[w] >> s & 1 == 1 {
                if path[1] < w {
                    path.push(w);
                    let r = f(path);
                    path.pop();
                    r?;
                }
                continue;
            }
            path.push(w);
            let r = self.extend_chordless(s, path, on_path | 1 << w, blocked | self.adj[last], f);
            path.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    /// All chordless cycles in enumeration order.
    pub fn induced_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        let _ = self.for_each_induced_cycle(|c| {
            out.push(Cycle::from_vertices(self, c.to_vec()));
            ControlFlow::Continue(())
        });
        out
    }

    /// First chordless cycle of length at least `k` in enumeration order.
    pub fn induced_cycle_at_least(&self, k: usize) -> Option<Cycle> {
        let mut found = None;
        let _ = self.for_each_induced_cycle(|c| {
            if c.len() >= k {
                found = Some(c.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found.map(|v| Cycle::from_vertices(self, v))
    }

    /// Whether some chordless cycle has length at least `k` (`k >= 3`).
    pub fn max_induced_cycle_at_least(&self, k: usize) -> bool {
        self.for_each_induced_cycle(|c| {
            if c.len() >= k {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    /// Brute force: every vertex subset that induces a connected 2-regular
    /// subgraph is the vertex set of exactly one chordless cycle.
    fn induced_cycle_vertex_sets(g: &Graph) -> Vec<u64> {
        let mut out = Vec::new();
        for mask in 1u64..(1 << g.n()) {
            if mask.count_ones() < 3 {
                continue;
            }
            let two_regular = bits(mask).all(|v| (g.adjacency(v) & mask).count_ones() == 2);
            if two_regular && g.induces_connected(mask) {
                out.push(mask);
            }
        }
        out
    }

    fn enumerated_sets(g: &Graph) -> Vec<u64> {
        let mut sets: Vec<u64> = g
            .induced_cycles()
            .iter()
            .map(|c| {
                assert!(c.is_induced_in(g));
                c.vertices().iter().fold(0, |a, &v| a | 1 << v)
            })
            .collect();
        sets.sort_unstable();
        sets
    }

    #[test]
    fn matches_brute_force_on_fixtures() {
        let chord =
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        for g in [
            complete(5),
            cycle(6),
            petersen(),
            chord,
            complete_bipartite(3, 3),
        ] {
            assert_eq!(enumerated_sets(&g), induced_cycle_vertex_sets(&g), "{g:?}");
        }
    }

    #[test]
    fn long_cycle_examples() {
        assert!(cycle(6).max_induced_cycle_at_least(6));
        let chord =
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert!(!chord.max_induced_cycle_at_least(5));
        assert!(chord.max_induced_cycle_at_least(4));
        let lens: Vec<usize> = chord.induced_cycles().iter().map(Cycle::len).collect();
        assert_eq!(lens, vec![4, 4]);
        assert!(!complete(4).max_induced_cycle_at_least(4));
        let w = cycle(6).induced_cycle_at_least(6).unwrap();
        assert_eq!(w.vertices(), &[0, 1, 2, 3, 4, 5]);
        assert_eq!(w.edges(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn counts_on_complete_graphs() {
        // only triangles are chordless in K_n
        assert_eq!(complete(5).induced_cycles().len(), 10);
        assert!(complete(5).induced_cycles().iter().all(|c| c.len() == 3));
    }
}
