use super::points::PointEnumerator;
use super::{facets::barahona_facets_unchecked, LatticeMembershipBasis};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge count accepted by [`codegree`].
pub const MAX_CODEGREE_EDGES: usize = 10;

/// `(2,...,2)` is always interior to `4·P`, so the search never goes past 4.
const MAX_K: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codegree {
    pub k: u32,
    /// Lexicographically least lattice point of `int(k·P)`.
    pub witness: Vec<i64>,
}

/// Least `k` with a lattice point in the interior of `k·CUT(G)`.
///
/// The graph with no edges has codegree 1 by convention.
pub fn codegree(g: &Graph) -> Result<Codegree> {
    if g.m() > MAX_CODEGREE_EDGES {
        return Err(Error::bound(
            "edges for codegree",
            MAX_CODEGREE_EDGES,
            g.m(),
        ));
    }
    if g.m() == 0 {
        return Ok(Codegree {
            k: 1,
            witness: Vec::new(),
        });
    }
    if g.has_k5_minor() {
        return Err(Error::HasK5Minor);
    }
    let e = PointEnumerator::new(
        &barahona_facets_unchecked(g),
        &LatticeMembershipBasis::new(g),
    );
    for k in 1..=MAX_K {
        if let Some(witness) = e.first(k, true) {
            return Ok(Codegree {
                k: k as u32,
                witness,
            });
        }
    }
    Err(Error::Internal("no interior lattice point in 4P".into()))
}

/// 2 for bipartite graphs, 4 with a triangle, 3 otherwise (1 without edges).
/// Meaningful when `CUT(G)` is normal.
pub fn codegree_formula(g: &Graph) -> u32 {
    if g.m() == 0 {
        1
    } else if g.is_bipartite() {
        2
    } else if g.has_triangle() {
        4
    } else {
        3
    }
}
