use super::{bits, Cycle, Graph, VertexPartition};
use crate::error::{Error, Result};

/// Vertex order in which every vertex's later neighbours form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectEliminationOrdering(pub(crate) Vec<usize>);

impl PerfectEliminationOrdering {
    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// Checks the defining property against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.0.len() != g.n() {
            return false;
        }
        let mut later = g.vertex_mask();
        for &v in &self.0 {
            if later >> v & 1 == 0 {
                return false;
            }
            later &= !(1 << v);
            let nb = g.adjacency(v) & later;
            if !is_clique(g, nb) {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalWitness {
    Chordal(PerfectEliminationOrdering),
    /// A chordless cycle of length at least four.
    NotChordal(Cycle),
}

impl ChordalWitness {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalWitness::Chordal(_))
    }
}

pub(crate) fn is_clique(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|u| mask & !(1 << u) & !g.adjacency(u) == 0)
}

impl Graph {
    /// Maximum cardinality search visit order, ties broken by lowest label.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut weight = vec![0usize; self.n];
        let mut visited = 0u64;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            visited |= 1 << v;
            order.push(v);
            for w in bits(self.adj[v] & !visited) {
                weight[w] += 1;
            }
        }
        order
    }

    /// A perfect elimination ordering with an MCS witness, or a chordless
    /// cycle of length at least four.
    pub fn chordality(&self) -> ChordalWitness {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        let peo = PerfectEliminationOrdering(peo);
        if peo.is_valid_for(self) {
            ChordalWitness::Chordal(peo)
        } else {
            let cycle = self
                .induced_cycle_at_least(4)
                .expect("a graph without perfect elimination ordering has a long hole");
            ChordalWitness::NotChordal(cycle)
        }
    }

    pub fn is_chordal(&self) -> bool {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        PerfectEliminationOrdering(peo).is_valid_for(self)
    }

    /// Greedy colouring along the reverse of the MCS perfect elimination
    /// ordering, always taking the least free colour. Returns exactly four
    /// classes, unused ones empty.
    ///
    /// Requires a chordal graph without K5 minor; for chordal graphs that is
    /// the same as having no 5-clique, and then four colours always suffice.
    pub fn chordal_four_coloring(&self) -> Result<VertexPartition> {
        let order = self.maximum_cardinality_search();
        let mut peo = order.clone();
        peo.reverse();
        if !PerfectEliminationOrdering(peo).is_valid_for(self) {
            return Err(Error::Precondition("graph is not chordal".into()));
        }
        let mut color = vec![usize::MAX; self.n];
        let mut classes = vec![Vec::new(); 4];
        for &v in &order {
            let used = bits(self.adj[v])
                .filter(|&w| color[w] != usize::MAX)
                .fold(0u32, |acc, w| acc | 1 << color[w]);
            let c = used.trailing_ones() as usize;
            if c >= 4 {
                return Err(Error::Precondition(
                    "graph contains K5 (and hence a K5 minor)".into(),
                ));
            }
            color[v] = c;
            classes[c].push(v);
        }
        VertexPartition::new(self, classes)
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn chordal_examples() {
        assert!(complete(4).is_chordal());
        match cycle(4).chordality() {
            ChordalWitness::NotChordal(c) => {
                assert_eq!(c.len(), 4);
                assert!(c.is_induced_in(&cycle(4)));
            }
            other => panic!("{other:?}"),
        }
        let g33 = clique_sum_of_complete(3, 3);
        match g33.chordality() {
            ChordalWitness::Chordal(peo) => assert!(peo.is_valid_for(&g33)),
            other => panic!("{other:?}"),
        }
        assert!(!petersen().is_chordal());
        assert!(path(5).is_chordal());
    }

    #[test]
    fn mcs_tie_break() {
        assert_eq!(complete(4).maximum_cardinality_search(), vec![0, 1, 2, 3]);
        assert_eq!(path(3).maximum_cardinality_search(), vec![0, 1, 2]);
    }

    #[test]
    fn coloring_examples() {
        let p = complete(4).chordal_four_coloring().unwrap();
        assert_eq!(p.classes(), &[vec![0], vec![1], vec![2], vec![3]]);
        let p = cycle(3).chordal_four_coloring().unwrap();
        assert_eq!(p.classes(), &[vec![0], vec![1], vec![2], vec![]]);
        let g33 = clique_sum_of_complete(3, 3);
        let p = g33.chordal_four_coloring().unwrap();
        let nonempty: Vec<_> = p.classes().iter().filter(|c| !c.is_empty()).collect();
        assert_eq!(nonempty.len(), 3);
        assert!(p.classes().iter().any(|c| c == &vec![2]));
        assert!(cycle(4).chordal_four_coloring().is_err());
        assert!(complete(5).chordal_four_coloring().is_err());
    }
}
