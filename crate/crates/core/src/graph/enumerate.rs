use super::Graph;
use crate::error::{Error, Result};

/// Every labelled graph on `n` vertices, in increasing order of the edge
/// subset read as a binary number over the lexicographically ordered pairs.
/// Edges of each graph are listed in that pair order.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

/// Iterator over all labelled graphs on `n` vertices (`1 <= n <= 11`).
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > 11 {
        return Err(Error::bound("vertices for labelled enumeration", 11, n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let code = self.next;
        self.next += 1;
        let edges = super::bits(code).map(|i| self.pairs[i]);
        Some(Graph::new(self.n, edges).expect("valid pair subset"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Isomorphism-invariant code: the minimum, over all vertex permutations,
/// of the edge set encoded over lexicographically ordered pairs. Together
/// with `n` it identifies the isomorphism class. Limited to `n <= 8`.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > 8 {
        return Err(Error::bound("vertices for canonical form", 8, n));
    }
    let mut pair_index = vec![0usize; n * n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            pair_index[u * n + v] = k;
            pair_index[v * n + u] = k;
            k += 1;
        }
    }
    let encode = |perm: &[usize]| {
        g.edges().iter().fold(0u64, |acc, &(u, v)| {
            acc | 1 << pair_index[perm[u] * n + perm[v]]
        })
    };
    // Heap's algorithm
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = encode(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(encode(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}
