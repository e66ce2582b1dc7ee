//! Inequality descriptions of cut polytopes of K5-minor-free graphs.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Where an inequality comes from. Edge indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FacetOrigin {
    /// `0 <= x_i`
    BoxLower(usize),
    /// `x_i <= 1`
    BoxUpper(usize),
    /// `sum_F x - sum_{C\F} x <= |F| - 1` for a chordless cycle `C` and an
    /// odd subset `F`.
    CycleOdd { cycle: Vec<usize>, odd: Vec<usize> },
    /// `x_i - x_j - x_k <= 0` on a triangle, `positive` being `i`.
    TriangleHom {
        triangle: [usize; 3],
        positive: usize,
    },
    /// `x_i + x_j + x_k <= 2` on a triangle.
    TriangleSum { triangle: [usize; 3] },
    /// `0 <= x_i + x_j + x_k - x_l` (`upper == false`) or
    /// `x_i + x_j + x_k - x_l <= 2` (`upper == true`) on a chordless 4-cycle,
    /// `negative` being `l`.
    Square4 {
        cycle: [usize; 4],
        negative: usize,
        upper: bool,
    },
    /// Produced by the convex hull oracle.
    Hull,
}

/// `a · x <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub a: Vec<i64>,
    pub b: i64,
    pub origin: FacetOrigin,
}

impl Inequality {
    pub fn lhs(&self, x: &[i64]) -> i64 {
        self.a.iter().zip(x).map(|(a, x)| a * x).sum()
    }

    /// Whether `x` satisfies the inequality for the `r`-th dilation.
    pub fn holds(&self, x: &[i64], r: i64, strict: bool) -> bool {
        let lhs = self.lhs(x);
        if strict {
            lhs < r * self.b
        } else {
            lhs <= r * self.b
        }
    }

    pub fn is_tight(&self, x: &[i64]) -> bool {
        self.lhs(x) == self.b
    }

    /// `(a, b)` divided by the gcd of all entries. Since only positive
    /// scalings preserve `<=`, this is a canonical key for the half-space.
    pub fn normalized(&self) -> (Vec<i64>, i64) {
        let g = self.a.iter().fold(self.b.abs(), |acc, &x| acc.gcd(&x));
        if g <= 1 {
            (self.a.clone(), self.b)
        } else {
            (self.a.iter().map(|x| x / g).collect(), self.b / g)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSystem {
    m: usize,
    inequalities: Vec<Inequality>,
}

impl FacetSystem {
    pub fn new(m: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if let Some(bad) = inequalities.iter().find(|q| q.a.len() != m) {
            return Err(Error::WrongLength {
                expected: m,
                got: bad.a.len(),
            });
        }
        Ok(FacetSystem { m, inequalities })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    pub fn normalized_set(&self) -> BTreeSet<(Vec<i64>, i64)> {
        self.inequalities
            .iter()
            .map(Inequality::normalized)
            .collect()
    }

    /// Same half-spaces up to positive scaling, ignoring order and origin.
    pub fn same_facets(&self, other: &FacetSystem) -> bool {
        self.m == other.m && self.normalized_set() == other.normalized_set()
    }

    /// Membership of `x` in `r·P` (`strict` for the interior).
    ///
    /// Strictness on every listed inequality characterises the interior only
    /// because the system is a complete facet description of a
    /// full-dimensional polytope.
    pub fn contains(&self, x: &[i64], r: i64, strict: bool) -> Result<bool> {
        if x.len() != self.m {
            return Err(Error::WrongLength {
                expected: self.m,
                got: x.len(),
            });
        }
        Ok(self.inequalities.iter().all(|q| q.holds(x, r, strict)))
    }

    /// Index of the first inequality `x` violates in `r·P`.
    pub fn first_violation(&self, x: &[i64], r: i64, strict: bool) -> Option<usize> {
        self.inequalities
            .iter()
            .position(|q| !q.holds(x, r, strict))
    }
}

fn unit(m: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut a = vec![0; m];
    for &(i, c) in terms {
        a[i] += c;
    }
    a
}

fn box_inequalities(g: &Graph, out: &mut Vec<Inequality>) {
    let m = g.m();
    for i in (0..m).filter(|&i| !g.edge_in_triangle(i)) {
        out.push(Inequality {
            a: unit(m, &[(i, -1)]),
            b: 0,
            origin: FacetOrigin::BoxLower(i),
        });
        out.push(Inequality {
            a: unit(m, &[(i, 1)]),
            b: 1,
            origin: FacetOrigin::BoxUpper(i),
        });
    }
}

/// Facets of `CUT(G)` for K5-minor-free `G`: box constraints on edges in no
/// triangle, and for each chordless cycle `C` and odd `F ⊆ C`
/// `sum_F x - sum_{C\F} x <= |F| - 1`.
///
/// Order: box pairs by edge, then cycles in enumeration order with `F`
/// running over odd subsets in increasing bitmask order over the cycle's
/// edge sequence.
pub fn barahona_facets(g: &Graph) -> Result<FacetSystem> {
    if g.has_k5_minor() {
        return Err(Error::HasK5Minor);
    }
    Ok(barahona_facets_unchecked(g))
}

pub(crate) fn barahona_facets_unchecked(g: &Graph) -> FacetSystem {
    let m = g.m();
    let mut out = Vec::new();
    box_inequalities(g, &mut out);
    for cycle in g.induced_cycles() {
        let edges = cycle.edges();
        let len = edges.len();
        for f in 1u32..(1 << len) {
            if f.count_ones() % 2 == 0 {
                continue;
            }
            let mut a = vec![0; m];
            let mut odd = Vec::new();
            for (k, &e) in edges.iter().enumerate() {
                if f >> k & 1 == 1 {
                    a[e] = 1;
                    odd.push(e);
                } else {
                    a[e] = -1;
                }
            }
            out.push(Inequality {
                a,
                b: f.count_ones() as i64 - 1,
                origin: FacetOrigin::CycleOdd {
                    cycle: edges.to_vec(),
                    odd,
                },
            });
        }
    }
    FacetSystem {
        m,
        inequalities: out,
    }
}

/// The specialised facet list for compressed cut polytopes (no K5 minor and
/// no chordless cycle of length five or more): boxes, four inequalities per
/// triangle, eight per chordless 4-cycle.
pub fn compressed_facets(g: &Graph) -> Result<FacetSystem> {
    if !crate::gorenstein::is_compressed(g).is_compressed() {
        return Err(Error::Precondition("cut polytope is not compressed".into()));
    }
    let m = g.m();
    let mut out = Vec::new();
    box_inequalities(g, &mut out);
    for t in g.triangles() {
        for (pos, &i) in t.iter().enumerate() {
            let others: Vec<usize> = (0..3).filter(|&k| k != pos).map(|k| t[k]).collect();
            out.push(Inequality {
                a: unit(m, &[(i, 1), (others[0], -1), (others[1], -1)]),
                b: 0,
                origin: FacetOrigin::TriangleHom {
                    triangle: t,
                    positive: i,
                },
            });
        }
        out.push(Inequality {
            a: unit(m, &[(t[0], 1), (t[1], 1), (t[2], 1)]),
            b: 2,
            origin: FacetOrigin::TriangleSum { triangle: t },
        });
    }
    for c in g.induced_cycles().into_iter().filter(|c| c.len() == 4) {
        let e: [usize; 4] = c.edges().try_into().unwrap();
        for &neg in &e {
            let terms: Vec<(usize, i64)> = e
                .iter()
                .map(|&k| (k, if k == neg { -1 } else { 1 }))
                .collect();
            let a = unit(m, &terms);
            out.push(Inequality {
                a: a.iter().map(|x| -x).collect(),
                b: 0,
                origin: FacetOrigin::Square4 {
                    cycle: e,
                    negative: neg,
                    upper: false,
                },
            });
            out.push(Inequality {
                a,
                b: 2,
                origin: FacetOrigin::Square4 {
                    cycle: e,
                    negative: neg,
                    upper: true,
                },
            });
        }
    }
    Ok(FacetSystem {
        m,
        inequalities: out,
    })
}
