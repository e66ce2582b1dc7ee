//! Named graphs used as fixtures and accepted by the CLI's `--graph` flag.
//!
//! These constructors panic only on arguments that cannot describe a simple
//! graph (for example a cycle on two vertices).

use super::Graph;
use crate::error::{Error, Result};

/// `K_n` with edges in lexicographic order of their endpoints.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph")
}

/// `C_n` on `0..n` with edges `{i, i+1}` followed by the closing edge `{n-1, 0}`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges = (0..n).map(|i| (i, (i + 1) % n));
    Graph::new(n, edges).expect("cycle graph")
}

/// Path on `n` vertices with edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph")
}

/// Star with centre `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star graph")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("complete bipartite graph")
}

/// `K_a` and `K_b` glued at one vertex.
///
/// The first clique occupies `0..a`, the second `a-1..a+b-1`, so the shared
/// vertex is `a-1`. Edges of the first clique come first.
pub fn clique_sum_of_complete(a: usize, b: usize) -> Graph {
    assert!(a >= 1 && b >= 1);
    let first = (0..a).flat_map(|u| (u + 1..a).map(move |v| (u, v)));
    let off = a - 1;
    let second = (0..b).flat_map(move |u| (u + 1..b).map(move |v| (u + off, v + off)));
    Graph::new(a + b - 1, first.chain(second)).expect("clique sum")
}

/// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen graph")
}

/// Parses names such as `K4`, `C5`, `P3`, `S3`, `K2,3`, `G3,3`, `petersen`.
///
/// `Kn` complete, `Cn` cycle, `Pn` path on n vertices, `Sn` star with n
/// leaves, `Ka,b` complete bipartite, `Ga,b` two cliques glued at a vertex,
/// `En` n isolated vertices.
pub fn by_name(name: &str) -> Result<Graph> {
    let bad = || Error::Precondition(format!("unknown graph name `{name}`"));
    let name = name.trim();
    if name.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    let mut chars = name.chars();
    let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rest = chars.as_str();
    let nums: Vec<usize> = rest
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    let g = match (kind, nums.as_slice()) {
        ('K', &[n]) if n >= 1 => complete(n),
        ('C', &[n]) if n >= 3 => cycle(n),
        ('P', &[n]) if n >= 1 => path(n),
        ('S', &[n]) => star(n),
        ('E', &[n]) => Graph::empty(n)?,
        ('K', &[a, b]) if a + b >= 1 => complete_bipartite(a, b),
        ('G', &[a, b]) if a >= 1 && b >= 1 => clique_sum_of_complete(a, b),
        _ => return Err(bad()),
    };
    if g.n() > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(g.n()));
    }
    Ok(g)
}
