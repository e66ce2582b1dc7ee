//! Exact integer linear algebra for small dense matrices.
//!
//! Elimination is fraction-free: rows are combined with integer multipliers
//! and divided by their content afterwards, so entries stay small for the
//! 0/1 matrices this crate produces. Arithmetic is checked.

use num_integer::Integer;

use crate::error::{Error, Result};

fn row_content_reduce(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Reduced row echelon form over the integers: every pivot column is zero
/// outside its pivot row. Returns the nonzero rows and their pivot columns.
pub fn echelon(mut rows: Vec<Vec<i128>>) -> Result<(Vec<Vec<i128>>, Vec<usize>)> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(top, p);
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c] == 0 {
                continue;
            }
            let (a, b) = (pivot_row[c], row[c]);
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = a
                    .checked_mul(*x)
                    .and_then(|ax| b.checked_mul(p).and_then(|bp| ax.checked_sub(bp)))
                    .ok_or(Error::Overflow("row elimination"))?;
            }
            row_content_reduce(row);
        }
        pivots.push(c);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    Ok((rows, pivots))
}

pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    Ok(echelon(rows)?.1.len())
}

/// Dimension of the affine hull of `points` (`None` for no points).
pub fn affine_dimension(points: &[Vec<i64>]) -> Result<Option<usize>> {
    if points.is_empty() {
        return Ok(None);
    }
    let rows: Vec<Vec<i64>> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(1);
            r
        })
        .collect();
    Ok(Some(rank(&rows)? - 1))
}

pub fn affinely_independent(points: &[Vec<i64>]) -> Result<bool> {
    Ok(affine_dimension(points)?.is_none_or(|d| d + 1 == points.len()))
}

/// Primitive integer generator of the kernel when it is one-dimensional.
/// The first nonzero entry is positive.
pub fn kernel_vector(rows: &[Vec<i64>], cols: usize) -> Result<Option<Vec<i64>>> {
    let rows: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (rows, pivots) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        echelon(rows)?
    };
    if pivots.len() + 1 != cols {
        return Ok(None);
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).unwrap();
    // x_free = L, x_pivot(i) = -row_i[free] * L / row_i[pivot]
    let lcm = rows
        .iter()
        .zip(&pivots)
        .fold(1i128, |acc, (row, &p)| acc.lcm(&row[p].abs()));
    let mut x = vec![0i128; cols];
    x[free] = lcm;
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = -row[free]
            .checked_mul(lcm / row[p])
            .ok_or(Error::Overflow("kernel vector"))?;
    }
    row_content_reduce(&mut x);
    if x.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    x.into_iter()
        .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("kernel vector")))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}
