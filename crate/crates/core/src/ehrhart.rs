//! Lattice-point counts of dilations against Hilbert function values, and
//! the h-vector obtained from either sequence.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polytope::points::PointEnumerator;
use crate::polytope::{barahona_facets, cut_vertices, LatticeMembershipBasis};

/// Largest edge count for lattice-point counting.
pub const MAX_EHRHART_EDGES: usize = 8;
/// Largest vertex count for semigroup counting.
pub const MAX_HILBERT_VERTICES: usize = 6;
/// Cap on the number of distinct sums held at one degree.
pub const MAX_HILBERT_SET: usize = 4_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    /// `|r·P ∩ L_P|`
    Ehrhart,
    /// Number of distinct sums of `r` cut vectors.
    Hilbert,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationCounts {
    pub values: Vec<u64>,
    pub kind: CountKind,
    pub m: usize,
}

fn check_degree(g: &Graph, r: usize) -> Result<()> {
    if r > g.m() + 2 {
        return Err(Error::bound("dilation degree", g.m() + 2, r));
    }
    Ok(())
}

/// `|r·P ∩ L_P|` for `r = 0..=r_max`.
pub fn ehrhart_counts(g: &Graph, r_max: usize) -> Result<DilationCounts> {
    if g.m() > MAX_EHRHART_EDGES {
        return Err(Error::bound(
            "edges for lattice-point counting",
            MAX_EHRHART_EDGES,
            g.m(),
        ));
    }
    check_degree(g, r_max)?;
    let fs = barahona_facets(g)?;
    let e = PointEnumerator::new(&fs, &LatticeMembershipBasis::new(g));
    Ok(DilationCounts {
        values: (0..=r_max).map(|r| e.count(r as i64, false)).collect(),
        kind: CountKind::Ehrhart,
        m: g.m(),
    })
}

pub fn ehrhart_count(g: &Graph, r: usize) -> Result<u64> {
    if g.m() > MAX_EHRHART_EDGES {
        return Err(Error::bound(
            "edges for lattice-point counting",
            MAX_EHRHART_EDGES,
            g.m(),
        ));
    }
    check_degree(g, r)?;
    let fs = barahona_facets(g)?;
    Ok(PointEnumerator::new(&fs, &LatticeMembershipBasis::new(g)).count(r as i64, false))
}

/// Packs a vector with entries below 256 into 8-bit lanes, so that sums of
/// packed vectors are packed sums as long as no lane overflows.
fn pack(x: &[i64]) -> u128 {
    x.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &v)| acc | (v as u128) << (8 * i))
}

/// Number of distinct sums of exactly `r` cut vectors, for `r = 0..=r_max`.
/// Each degree is built from the previous one by adding every vertex.
pub fn hilbert_counts(g: &Graph, r_max: usize) -> Result<DilationCounts> {
    if g.n() > MAX_HILBERT_VERTICES {
        return Err(Error::bound(
            "vertices for semigroup counting",
            MAX_HILBERT_VERTICES,
            g.n(),
        ));
    }
    check_degree(g, r_max)?;
    // n <= 6 gives m <= 15 lanes and r_max <= 17 < 256 per lane
    let vertices: Vec<u128> = cut_vertices(g)?
        .iter()
        .map(|v| pack(v.coords()))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    let mut values = vec![1u64];
    let mut layer: HashSet<u128> = HashSet::from([0]);
    for _ in 1..=r_max {
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for &s in &layer {
            for &v in &vertices {
                next.insert(s + v);
            }
            if next.len() > MAX_HILBERT_SET {
                return Err(Error::bound(
                    "distinct sums per degree",
                    MAX_HILBERT_SET,
                    next.len(),
                ));
            }
        }
        values.push(next.len() as u64);
        layer = next;
    }
    Ok(DilationCounts {
        values,
        kind: CountKind::Hilbert,
        m: g.m(),
    })
}

pub fn hilbert_count(g: &Graph, r: usize) -> Result<u64> {
    Ok(hilbert_counts(g, r)?.values[r])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalityVerdict {
    /// Hilbert and Ehrhart counts agree for every degree up to this one.
    NormalUpTo(usize),
    /// Least degree where they differ.
    NotNormal(usize),
}

impl NormalityVerdict {
    pub fn is_normal_up_to(&self) -> bool {
        matches!(self, NormalityVerdict::NormalUpTo(_))
    }
}

pub fn default_degree(g: &Graph) -> usize {
    g.m() + 2
}

/// Compares the two counting sequences up to `r_max` (default `m + 2`).
/// A difference proves non-normality; agreement only covers the degrees
/// checked.
pub fn is_normal_desk(g: &Graph, r_max: Option<usize>) -> Result<NormalityVerdict> {
    let (e, h) = both_counts(g, r_max)?;
    Ok(compare(&e, &h))
}

/// Ehrhart and Hilbert counts up to `r_max` (default `m + 2`).
pub fn both_counts(g: &Graph, r_max: Option<usize>) -> Result<(DilationCounts, DilationCounts)> {
    let r_max = r_max.unwrap_or_else(|| default_degree(g));
    let h = hilbert_counts(g, r_max)?;
    let e = ehrhart_counts(g, r_max)?;
    Ok((e, h))
}

pub fn compare(ehrhart: &DilationCounts, hilbert: &DilationCounts) -> NormalityVerdict {
    let r_max = ehrhart.values.len().min(hilbert.values.len()) - 1;
    match (0..=r_max).find(|&r| ehrhart.values[r] != hilbert.values[r]) {
        Some(r) => NormalityVerdict::NotNormal(r),
        None => NormalityVerdict::NormalUpTo(r_max),
    }
}

fn binomial(n: usize, k: usize) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as i128 + 1);
    }
    Ok(acc)
}

/// Numerator of `sum_r c_r λ^r = h(λ) / (1 - λ)^(m+1)`, trailing zeros
/// removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i128>,
}

impl HVector {
    pub fn new(mut entries: Vec<i128>) -> Self {
        while entries.len() > 1 && entries.last() == Some(&0) {
            entries.pop();
        }
        HVector { entries }
    }

    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    /// Index of the last nonzero entry.
    pub fn s(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().eq(self.entries.iter().rev())
    }

    /// `h_0 <= h_1 <= ... <= h_{floor(s/2)}`.
    pub fn is_unimodal(&self) -> bool {
        self.entries[..=self.s() / 2]
            .windows(2)
            .all(|w| w[0] <= w[1])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&h| h >= 0)
    }

    /// Coefficients `c_0..=c_r_max` of `h(λ) / (1 - λ)^(m+1)`.
    pub fn expand(&self, m: usize, r_max: usize) -> Result<Vec<i128>> {
        // 1/(1-λ)^(m+1) = sum_j C(m + j, m) λ^j
        (0..=r_max)
            .map(|r| {
                let mut c: i128 = 0;
                for (i, &h) in self.entries.iter().enumerate().take(r + 1) {
                    let term = h
                        .checked_mul(binomial(m + r - i, m)?)
                        .ok_or(Error::Overflow("h-vector expansion"))?;
                    c = c
                        .checked_add(term)
                        .ok_or(Error::Overflow("h-vector expansion"))?;
                }
                Ok(c)
            })
            .collect()
    }
}

/// `h_i = sum_{j<=i} (-1)^(i-j) C(m+1, i-j) c_j` for every supplied degree,
/// which must reach at least `m + 1`.
pub fn h_vector(counts: &DilationCounts) -> Result<HVector> {
    let m = counts.m;
    if counts.values.len() < m + 2 {
        return Err(Error::InsufficientCounts {
            needed: m + 2,
            got: counts.values.len(),
        });
    }
    let mut h = Vec::with_capacity(counts.values.len());
    for i in 0..counts.values.len() {
        let mut acc: i128 = 0;
        for j in 0..=i {
            let b = binomial(m + 1, i - j)?;
            let term = b
                .checked_mul(counts.values[j] as i128)
                .ok_or(Error::Overflow("h-vector"))?;
            acc = if (i - j) % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(Error::Overflow("h-vector"))?;
        }
        h.push(acc);
    }
    Ok(HVector::new(h))
}
