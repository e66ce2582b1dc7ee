//! Lattice points of dilations `r·P` (or their interiors) by depth-first
//! search over coordinates, using the facet system for interval pruning and
//! the fundamental cycles for parity.

use std::ops::ControlFlow;

use num_integer::Integer;

use super::{FacetSystem, LatticeMembershipBasis};

pub(crate) struct PointEnumerator {
    m: usize,
    b: Vec<i64>,
    /// Nonzero coefficients of each coordinate: `(inequality, a)`.
    cols: Vec<Vec<(usize, i64)>>,
    /// Cycles whose largest edge is this coordinate, minus that edge.
    closing: Vec<Vec<Vec<usize>>>,
}

struct Search<'a, F> {
    e: &'a PointEnumerator,
    bound: Vec<i64>,
    lo: i64,
    hi: i64,
    partial: Vec<i64>,
    /// Least possible contribution of the coordinates not yet fixed.
    rest_min: Vec<i64>,
    x: Vec<i64>,
    f: F,
}

impl PointEnumerator {
    pub(crate) fn new(fs: &FacetSystem, basis: &LatticeMembershipBasis) -> Self {
        let m = fs.m();
        let mut cols = vec![Vec::new(); m];
        for (q, ineq) in fs.inequalities().iter().enumerate() {
            for (i, &a) in ineq.a.iter().enumerate() {
                if a != 0 {
                    cols[i].push((q, a));
                }
            }
        }
        let mut closing = vec![Vec::new(); m];
        for c in basis.fundamental_cycles() {
            let (&last, rest) = c.split_last().expect("cycles are nonempty");
            closing[last].push(rest.to_vec());
        }
        PointEnumerator {
            m,
            b: fs.inequalities().iter().map(|q| q.b).collect(),
            cols,
            closing,
        }
    }

    /// Visits the lattice points of `r·P` (`strict`: of its interior) in
    /// lexicographic order.
    pub(crate) fn for_each<F>(&self, r: i64, strict: bool, f: F) -> ControlFlow<()>
    where
        F: FnMut(&[i64]) -> ControlFlow<()>,
    {
        let (lo, hi) = if strict { (1, r - 1) } else { (0, r) };
        if lo > hi && self.m > 0 {
            return ControlFlow::Continue(());
        }
        // integer a·x < r·b is a·x <= r·b - 1
        let bound = self.b.iter().map(|&b| r * b - i64::from(strict)).collect();
        let mut rest_min = vec![0i64; self.b.len()];
        for col in &self.cols {
            for &(q, a) in col {
                rest_min[q] += if a > 0 { a * lo } else { a * hi };
            }
        }
        let mut s = Search {
            e: self,
            bound,
            lo,
            hi,
            partial: vec![0; self.b.len()],
            rest_min,
            x: vec![0; self.m],
            f,
        };
        if s.rest_min.iter().zip(&s.bound).any(|(m, b)| m > b) {
            return ControlFlow::Continue(());
        }
        s.descend(0)
    }

    pub(crate) fn count(&self, r: i64, strict: bool) -> u64 {
        let mut n = 0u64;
        let _ = self.for_each(r, strict, |_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    pub(crate) fn first(&self, r: i64, strict: bool) -> Option<Vec<i64>> {
        let mut found = None;
        let _ = self.for_each(r, strict, |x| {
            found = Some(x.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    #[cfg(test)]
    pub(crate) fn points(&self, r: i64, strict: bool) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let _ = self.for_each(r, strict, |x| {
            out.push(x.to_vec());
            ControlFlow::Continue(())
        });
        out
    }
}

impl<F> Search<'_, F>
where
    F: FnMut(&[i64]) -> ControlFlow<()>,
{
    fn descend(&mut self, k: usize) -> ControlFlow<()> {
        if k == self.e.m {
            return (self.f)(&self.x);
        }
        let col = &self.e.cols[k];
        // remove this coordinate's share from the remaining minimum
        for &(q, a) in col {
            self.rest_min[q] -= if a > 0 { a * self.lo } else { a * self.hi };
        }
        let (mut lo, mut hi) = (self.lo, self.hi);
        for &(q, a) in col {
            let slack = self.bound[q] - self.partial[q] - self.rest_min[q];
            if a > 0 {
                hi = hi.min(Integer::div_floor(&slack, &a));
            } else {
                lo = lo.max(Integer::div_ceil(&slack, &a));
            }
        }
        let mut parity = None;
        for c in &self.e.closing[k] {
            let p = c.iter().map(|&i| self.x[i]).sum::<i64>().rem_euclid(2);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => {
                    lo = hi + 1;
                }
                _ => {}
            }
        }
        let step = if let Some(p) = parity {
            if lo.rem_euclid(2) != p {
                lo += 1;
            }
            2
        } else {
            1
        };
        let mut flow = ControlFlow::Continue(());
        let mut v = lo;
        while v <= hi {
            self.x[k] = v;
            for &(q, a) in col {
                self.partial[q] += a * v;
            }
            flow = self.descend(k + 1);
            for &(q, a) in col {
                self.partial[q] -= a * v;
            }
            if flow.is_break() {
                break;
            }
            v += step;
        }
        self.x[k] = 0;
        for &(q, a) in col {
            self.rest_min[q] += if a > 0 { a * self.lo } else { a * self.hi };
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Graph;
    use crate::polytope::barahona_facets;

    fn brute(g: &Graph, r: i64, strict: bool) -> Vec<Vec<i64>> {
        let fs = barahona_facets(g).unwrap();
        let m = g.m();
        let mut out = Vec::new();
        let total = (r as usize + 1).pow(m as u32);
        for mut code in 0..total {
            let mut x = vec![0i64; m];
            for i in (0..m).rev() {
                x[i] = (code % (r as usize + 1)) as i64;
                code /= r as usize + 1;
            }
            if fs.contains(&x, r, strict).unwrap() && g.lattice_contains(&x).unwrap() {
                out.push(x);
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for g in [
            cycle(3),
            cycle(4),
            cycle(5),
            clique_sum_of_complete(2, 3),
            path(3),
        ] {
            let e = PointEnumerator::new(
                &barahona_facets(&g).unwrap(),
                &LatticeMembershipBasis::new(&g),
            );
            for r in 0..=4 {
                for strict in [false, true] {
                    let got = e.points(r, strict);
                    assert_eq!(got, brute(&g, r, strict), "{g:?} r={r} strict={strict}");
                }
            }
        }
    }

    #[test]
    fn vertices_are_the_unit_points() {
        let g = complete(4);
        let e = PointEnumerator::new(
            &barahona_facets(&g).unwrap(),
            &LatticeMembershipBasis::new(&g),
        );
        assert_eq!(e.count(1, false), 8);
        assert_eq!(e.first(4, true), Some(vec![2; 6]));
        assert_eq!(e.count(3, true), 0);
    }
}
