//! Brute-force reference implementations, kept independent of the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cut_gorenstein::Graph;

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Neighbourhood bitmask of every vertex.
pub fn adj(g: &Graph) -> Vec<u64> {
    let mut a = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        a[u] |= 1 << v;
        a[v] |= 1 << u;
    }
    a
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    adj(g)[u] >> v & 1 == 1
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&v| mask >> v & 1 == 1)
}

/// Cut vector of an arbitrary vertex set given as a bitmask.
pub fn cut_of(g: &Graph, s: u64) -> Vec<i64> {
    g.edges()
        .iter()
        .map(|&(u, v)| ((s >> u ^ s >> v) & 1) as i64)
        .collect()
}

pub fn cuts(g: &Graph) -> BTreeSet<Vec<i64>> {
    (0u64..1 << g.n()).map(|s| cut_of(g, s)).collect()
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            let (a, b) = (rows[r][c], rows[i][c]);
            if b == 0 {
                continue;
            }
            let pivot = rows[r].clone();
            let mut g = 0i128;
            for (x, y) in rows[i].iter_mut().zip(&pivot) {
                *x = a * *x - b * y;
                g = num_gcd(g, *x);
            }
            if g > 1 {
                rows[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

fn num_gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dimension of the affine hull; `None` for the empty set.
pub fn affine_dim(points: &[Vec<i64>]) -> Option<usize> {
    let base = points.first()?;
    let rows = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(x, y)| (x - y) as i128).collect())
        .collect();
    Some(rank(rows))
}

/// Is the subgraph induced on `mask` connected?
fn connected_in(a: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut seen = 1u64 << mask.trailing_zeros();
    loop {
        let next = members(seen).fold(seen, |acc, v| acc | a[v] & mask);
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}

fn connected_mask(g: &Graph, mask: u64) -> bool {
    connected_in(&adj(g), mask)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_mask(g, (1u64 << g.n()) - 1)
}

fn components(a: &[u64]) -> usize {
    let mut left = (1u64 << a.len()) - 1;
    let mut count = 0;
    while left != 0 {
        let mut comp = 1u64 << left.trailing_zeros();
        loop {
            let next = members(comp).fold(comp, |acc, v| acc | a[v]);
            if next == comp {
                break;
            }
            comp = next;
        }
        left &= !comp;
        count += 1;
    }
    count
}

/// Edges whose removal disconnects their component.
pub fn bridges(g: &Graph) -> Vec<usize> {
    let mut a = adj(g);
    let base = components(&a);
    let mut out = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        a[u] &= !(1 << v);
        a[v] &= !(1 << u);
        if components(&a) > base {
            out.push(i);
        }
        a[u] |= 1 << v;
        a[v] |= 1 << u;
    }
    out
}

/// Does the vertex set induce a cycle (connected, 2-regular, >= 3 vertices)?
fn induces_cycle_in(a: &[u64], mask: u64) -> bool {
    mask.count_ones() >= 3
        && members(mask).all(|v| (a[v] & mask).count_ones() == 2)
        && connected_in(a, mask)
}

pub fn induces_cycle(g: &Graph, mask: u64) -> bool {
    induces_cycle_in(&adj(g), mask)
}

/// Sizes of all chordless cycles.
fn induced_cycle_sizes(g: &Graph) -> impl Iterator<Item = usize> {
    let a = adj(g);
    (0u64..1 << g.n())
        .filter(move |&s| induces_cycle_in(&a, s))
        .map(|s| s.count_ones() as usize)
}

/// Length of the longest chordless cycle, 0 for forests.
pub fn longest_induced_cycle(g: &Graph) -> usize {
    induced_cycle_sizes(g).max().unwrap_or(0)
}

pub fn is_chordal(g: &Graph) -> bool {
    induced_cycle_sizes(g).all(|k| k == 3)
}

pub fn has_induced_cycle_of_length(g: &Graph, k: usize) -> bool {
    induced_cycle_sizes(g).any(|l| l == k)
}

pub fn is_bipartite(g: &Graph) -> bool {
    (0u64..1 << g.n()).any(|s| g.edges().iter().all(|&(u, v)| (s >> u ^ s >> v) & 1 == 1))
}

pub fn has_triangle(g: &Graph) -> bool {
    has_induced_cycle_of_length(g, 3)
}

pub fn edge_in_triangle(g: &Graph, i: usize) -> bool {
    let (u, v) = g.edge(i);
    (0..g.n()).any(|w| adjacent(g, u, w) && adjacent(g, v, w))
}

/// K5 minor by trying every assignment of vertices to five branch sets or to
/// none.
pub fn has_k5_minor(g: &Graph) -> bool {
    let n = g.n();
    if n < 5 || g.m() < 10 {
        return false;
    }
    let a = adj(g);
    let mut label = vec![0usize; n];
    loop {
        let mut sets = [0u64; 5];
        for (v, &l) in label.iter().enumerate() {
            if l > 0 {
                sets[l - 1] |= 1 << v;
            }
        }
        if sets.iter().all(|&s| s != 0)
            && sets
                .windows(2)
                .all(|w| w[0].trailing_zeros() < w[1].trailing_zeros())
            && sets.iter().all(|&s| connected_in(&a, s))
            && (0..5).all(|i| {
                let reach = members(sets[i]).fold(0, |acc, v| acc | a[v]);
                (i + 1..5).all(|j| reach & sets[j] != 0)
            })
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= 5 {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// Integer span of the cut vectors: `x` is in it iff `x mod 2` is a cut
/// vector mod 2 (the cut space is the orthogonal complement of the cycle
/// space over GF(2)).
pub fn in_lattice(g: &Graph, x: &[i64]) -> bool {
    let parity: Vec<i64> = x.iter().map(|v| v.rem_euclid(2)).collect();
    cuts(g).contains(&parity)
}

/// Number of distinct sums of `r` cut vectors, for `r = 0..=r_max`.
pub fn hilbert_counts(g: &Graph, r_max: usize) -> Vec<u64> {
    let cuts: Vec<Vec<i64>> = cuts(g).into_iter().collect();
    let mut layer: BTreeSet<Vec<i64>> = BTreeSet::from([vec![0; g.m()]]);
    let mut out = vec![1];
    for _ in 0..r_max {
        layer = layer
            .iter()
            .flat_map(|p| {
                cuts.iter()
                    .map(move |c| p.iter().zip(c).map(|(a, b)| a + b).collect())
            })
            .collect();
        out.push(layer.len() as u64);
    }
    out
}

/// Coefficients of `(1 - t)^(m + 1) * sum counts[r] t^r` up to the last
/// supplied degree, trailing zeros removed.
pub fn h_from_counts(counts: &[u64], m: usize) -> Vec<i128> {
    let mut binom = vec![1i128];
    for _ in 0..=m {
        let mut next = vec![0i128; binom.len() + 1];
        for (i, &b) in binom.iter().enumerate() {
            next[i] += b;
            next[i + 1] -= b;
        }
        binom = next;
    }
    let mut h: Vec<i128> = (0..counts.len())
        .map(|k| {
            (0..=k)
                .filter(|&j| j < binom.len())
                .map(|j| binom[j] * counts[k - j] as i128)
                .sum()
        })
        .collect();
    while h.last() == Some(&0) {
        h.pop();
    }
    h
}
