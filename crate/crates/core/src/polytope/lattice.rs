use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parity test for the lattice spanned by the cut vectors.
///
/// An integer vector lies in the lattice exactly when its coordinate sum
/// over every cycle is even. Cycle parity is linear, so checking the
/// fundamental cycles of one spanning forest suffices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMembershipBasis {
    m: usize,
    fundamental_cycles: Vec<Vec<usize>>,
}

impl LatticeMembershipBasis {
    /// Uses the BFS forest rooted at the smallest vertex of each component,
    /// neighbours visited in increasing order. One cycle per non-tree edge,
    /// listed in edge order; each cycle's edges are sorted.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut parent_edge = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut tree = vec![false; g.m()];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        let e = g.edge_index(u, w).unwrap();
                        parent_edge[w] = e;
                        tree[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut fundamental_cycles = Vec::new();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if tree[i] {
                continue;
            }
            let mut cycle = vec![i];
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] >= depth[b] {
                    cycle.push(parent_edge[a]);
                    a = parent[a];
                } else {
                    cycle.push(parent_edge[b]);
                    b = parent[b];
                }
            }
            cycle.sort_unstable();
            fundamental_cycles.push(cycle);
        }
        LatticeMembershipBasis {
            m: g.m(),
            fundamental_cycles,
        }
    }

    pub fn fundamental_cycles(&self) -> &[Vec<usize>] {
        &self.fundamental_cycles
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.m {
            return Err(Error::WrongLength {
                expected: self.m,
                got: x.len(),
            });
        }
        Ok(self
            .fundamental_cycles
            .iter()
            .all(|c| c.iter().map(|&i| x[i]).sum::<i64>().rem_euclid(2) == 0))
    }
}

impl Graph {
    /// Whether `x` lies in the lattice spanned by the cut vectors.
    pub fn lattice_contains(&self, x: &[i64]) -> Result<bool> {
        LatticeMembershipBasis::new(self).contains(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn membership_examples() {
        let k3 = cycle(3);
        assert!(k3.lattice_contains(&[1, 1, 0]).unwrap());
        assert!(!k3.lattice_contains(&[1, 0, 0]).unwrap());
        assert!(!k3.lattice_contains(&[-1, 0, 0]).unwrap());
        for g in [k3, petersen(), complete(5), path(4)] {
            assert!(g.lattice_contains(&vec![2; g.m()]).unwrap());
        }
        assert!(cycle(4).lattice_contains(&[1, 1]).is_err());
    }

    #[test]
    fn cycle_rank() {
        let p = petersen();
        let basis = LatticeMembershipBasis::new(&p);
        assert_eq!(basis.fundamental_cycles().len(), p.m() - p.n() + 1);
        assert!(path(5).lattice_contains(&[1, 0, 3, 7]).unwrap());
    }
}
