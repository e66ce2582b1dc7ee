//! Cut vectors, the cut polytope, its lattice, and facet descriptions.

mod codegree;
mod facets;
mod hull;
mod lattice;
pub(crate) mod points;

pub use codegree::{codegree, codegree_formula, Codegree, MAX_CODEGREE_EDGES};
pub use facets::{barahona_facets, compressed_facets, FacetOrigin, FacetSystem, Inequality};
pub use hull::{hull_facet_oracle, MAX_HULL_DIMENSION};
pub use lattice::LatticeMembershipBasis;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;

/// Largest `n` for which all `2^(n-1)` cut vectors are enumerated.
pub const MAX_VERTEX_ENUMERATION: usize = 24;

/// The cut semimetric of a vertex set: coordinate `i` is 1 exactly when edge
/// `i` has one endpoint in the set.
///
/// The source set is stored in canonical form, i.e. as the side of the cut
/// that avoids vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutVector {
    source: Vec<usize>,
    coords: Vec<i64>,
}

impl CutVector {
    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn source_mask(&self) -> u64 {
        self.source.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    fn from_mask(g: &Graph, mask: u64) -> CutVector {
        let mask = if mask & 1 == 1 {
            !mask & g.vertex_mask()
        } else {
            mask
        };
        let mut coords = vec![0; g.m()];
        for i in g.cut_edges(mask) {
            coords[i] = 1;
        }
        CutVector {
            source: crate::graph::bits(mask).collect(),
            coords,
        }
    }
}

/// `δ_G(S)` for a vertex set `S`.
pub fn cut_vector(g: &Graph, s: &[usize]) -> Result<CutVector> {
    let mut mask = 0u64;
    for &v in s {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        mask |= 1 << v;
    }
    Ok(CutVector::from_mask(g, mask))
}

/// Source sets avoiding vertex 0, in lexicographic order of their sorted
/// vertex lists (`{}`, `{1}`, `{1,2}`, ..., `{2}`, ...).
pub(crate) fn canonical_source_masks(n: usize) -> Vec<u64> {
    fn walk(start: usize, n: usize, cur: u64, out: &mut Vec<u64>) {
        out.push(cur);
        for v in start..n {
            walk(v + 1, n, cur | 1 << v, out);
        }
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    walk(1, n, 0, &mut out);
    out
}

/// All `2^(n-1)` canonical cut vectors, in lexicographic source-set order.
/// For disconnected graphs different sets may give equal vectors.
pub fn cut_vertices(g: &Graph) -> Result<Vec<CutVector>> {
    if g.n() > MAX_VERTEX_ENUMERATION {
        return Err(Error::bound(
            "vertices for cut enumeration",
            MAX_VERTEX_ENUMERATION,
            g.n(),
        ));
    }
    Ok(canonical_source_masks(g.n())
        .into_iter()
        .map(|s| CutVector::from_mask(g, s))
        .collect())
}

/// `CUT(G)` given by its vertex list.
#[derive(Debug, Clone)]
pub struct CutPolytope {
    graph: Graph,
    vertices: Vec<CutVector>,
}

impl CutPolytope {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(CutPolytope {
            graph: g.clone(),
            vertices: cut_vertices(g)?,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[CutVector] {
        &self.vertices
    }

    pub fn ambient_dimension(&self) -> usize {
        self.graph.m()
    }

    pub fn vertex_coords(&self) -> Vec<Vec<i64>> {
        self.vertices.iter().map(|v| v.coords.clone()).collect()
    }

    /// Dimension of the affine hull of the vertices, computed exactly.
    pub fn dimension(&self) -> Result<usize> {
        Ok(linalg::affine_dimension(&self.vertex_coords())?.unwrap_or(0))
    }
}
