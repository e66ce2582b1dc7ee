//! Brute-force facet enumeration for small full-dimensional polytopes.

use std::collections::BTreeSet;

use super::{FacetOrigin, FacetSystem, Inequality};
use crate::error::{Error, Result};
use crate::linalg;

pub const MAX_HULL_DIMENSION: usize = 7;

/// Reduces `v` against the stored rows and appends it if it is independent.
/// Rows are kept in echelon form keyed by pivot column.
fn try_extend(basis: &mut Vec<(usize, Vec<i128>)>, mut v: Vec<i128>) -> bool {
    for (p, row) in basis.iter() {
        if v[*p] != 0 {
            let (a, b) = (row[*p], v[*p]);
            for (x, &y) in v.iter_mut().zip(row) {
                *x = a * *x - b * y;
            }
            let g = v.iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            if g > 1 {
                v.iter_mut().for_each(|x| *x /= g);
            }
        }
    }
    match v.iter().position(|&x| x != 0) {
        Some(p) => {
            basis.push((p, v));
            true
        }
        None => false,
    }
}

struct HullSearch<'a> {
    points: &'a [Vec<i64>],
    m: usize,
    chosen: Vec<usize>,
    found: BTreeSet<(Vec<i64>, i64)>,
}

impl HullSearch<'_> {
    fn diff(&self, i: usize) -> Vec<i128> {
        let base = &self.points[self.chosen[0]];
        self.points[i]
            .iter()
            .zip(base)
            .map(|(&x, &y)| (x - y) as i128)
            .collect()
    }

    fn walk(&mut self, start: usize, basis: &mut Vec<(usize, Vec<i128>)>) -> Result<()> {
        if self.chosen.len() == self.m {
            return self.hyperplane();
        }
        for i in start..self.points.len() {
            if self.points.len() - i < self.m - self.chosen.len() {
                break;
            }
            if self.chosen.is_empty() {
                self.chosen.push(i);
                self.walk(i + 1, basis)?;
                self.chosen.pop();
                continue;
            }
            let d = self.diff(i);
            let saved = basis.len();
            if try_extend(basis, d) {
                self.chosen.push(i);
                self.walk(i + 1, basis)?;
                self.chosen.pop();
                basis.truncate(saved);
            }
        }
        Ok(())
    }

    fn hyperplane(&mut self) -> Result<()> {
        // (a, b) with a·x - b = 0 on the chosen points
        let rows: Vec<Vec<i64>> = self
            .chosen
            .iter()
            .map(|&i| {
                let mut r = self.points[i].clone();
                r.push(-1);
                r
            })
            .collect();
        let Some(mut k) = linalg::kernel_vector(&rows, self.m + 1)? else {
            return Err(Error::Internal(
                "independent points span no hyperplane".into(),
            ));
        };
        let b = k.pop().unwrap();
        let a = k;
        let (mut below, mut above) = (false, false);
        for p in self.points {
            let lhs: i64 = a.iter().zip(p).map(|(a, x)| a * x).sum();
            below |= lhs < b;
            above |= lhs > b;
            if below && above {
                return Ok(());
            }
        }
        if above {
            self.found.insert((a.iter().map(|x| -x).collect(), -b));
        } else {
            self.found.insert((a, b));
        }
        Ok(())
    }
}

/// Facets of the convex hull of `vertices` in `R^m`, found by testing every
/// hyperplane through `m` affinely independent vertices. Inequalities are
/// primitive and sorted.
pub fn hull_facet_oracle(vertices: &[Vec<i64>], m: usize) -> Result<FacetSystem> {
    if m > MAX_HULL_DIMENSION {
        return Err(Error::bound("hull oracle dimension", MAX_HULL_DIMENSION, m));
    }
    if let Some(v) = vertices.iter().find(|v| v.len() != m) {
        return Err(Error::WrongLength {
            expected: m,
            got: v.len(),
        });
    }
    let points: Vec<Vec<i64>> = vertices
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let dim = linalg::affine_dimension(&points)?;
    if dim != Some(m) {
        return Err(Error::NotFullDimensional {
            dim: dim.unwrap_or(0),
            ambient: m,
        });
    }
    if m == 0 {
        return FacetSystem::new(0, Vec::new());
    }
    let mut search = HullSearch {
        points: &points,
        m,
        chosen: Vec::new(),
        found: BTreeSet::new(),
    };
    search.walk(0, &mut Vec::new())?;
    FacetSystem::new(
        m,
        search
            .found
            .into_iter()
            .map(|(a, b)| Inequality {
                a,
                b,
                origin: FacetOrigin::Hull,
            })
            .collect(),
    )
}
