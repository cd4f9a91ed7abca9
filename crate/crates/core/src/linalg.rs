//! Exact linear algebra over the rationals: rank, affine dimension, the
//! general-position predicate and small dense solves.

use alloc::vec::Vec;

use crate::enumerate::Combinations;
use crate::point::{PointConfig, RatVector};
use crate::rat::Rat;

/// Reduces `m` in place to row echelon form; returns pivot columns.
fn echelon(m: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..ncols {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                if m[row][c].is_zero() {
                    continue;
                }
                let d = &f * &m[row][c];
                m[r][c] -= d;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Exact rank of a rectangular matrix given as rows.
pub fn rank(matrix: &[Vec<Rat>]) -> usize {
    let ncols = matrix.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rat>> = matrix.to_vec();
    for r in &mut m {
        r.resize(ncols, Rat::zero());
    }
    echelon(&mut m, ncols).len()
}

/// Dimension of the affine hull; `-1` for the empty set.
pub fn affine_dim(points: &[&RatVector]) -> isize {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    let diffs: Vec<Vec<Rat>> = rest.iter().map(|p| p.sub(first).into_coords()).collect();
    rank(&diffs) as isize
}

pub fn is_affinely_independent(points: &[&RatVector]) -> bool {
    affine_dim(points) == points.len() as isize - 1
}

/// Smallest violating subset (by size, then lexicographically) of the
/// rule "every subset of at most `dim + 1` points is affinely independent",
/// or `None` when the configuration is in general position.
pub fn general_position_violation(config: &PointConfig) -> Option<Vec<usize>> {
    let max = (config.dim() + 1).min(config.len());
    for k in 2..=max {
        for subset in Combinations::new(config.len(), k) {
            if !is_affinely_independent(&config.select(&subset)) {
                return Some(subset);
            }
        }
    }
    None
}

pub fn is_general_position(config: &PointConfig) -> bool {
    general_position_violation(config).is_none()
}

/// Some solution of `a x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = alloc::vec![Rat::zero(); ncols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][ncols].clone();
    }
    Some(x)
}

/// A nonzero `mu` with `sum mu_i v_i = 0`, if the vectors are dependent.
pub fn kernel_vector(vectors: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let n = vectors.len();
    let rows = vectors.first().map_or(0, Vec::len);
    // columns are the vectors
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| vectors.iter().map(|v| v[r].clone()).collect())
        .collect();
    let pivots = echelon(&mut m, n);
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut mu = alloc::vec![Rat::zero(); n];
    mu[free] = Rat::one();
    for (row, &col) in pivots.iter().enumerate() {
        mu[col] = -m[row][free].clone();
    }
    Some(mu)
}

/// Barycentric coordinates of `q` with respect to affinely independent
/// `points`, or `None` if `q` is outside their affine hull.
pub fn barycentric(q: &RatVector, points: &[&RatVector]) -> Option<Vec<Rat>> {
    let d = q.dim();
    let mut a: Vec<Vec<Rat>> = (0..d)
        .map(|r| points.iter().map(|p| p[r].clone()).collect())
        .collect();
    a.push(alloc::vec![Rat::one(); points.len()]);
    let mut b: Vec<Rat> = q.coords().to_vec();
    b.push(Rat::one());
    solve(&a, &b)
}

/// Determinant by exact elimination.
pub fn determinant(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

/// Inverse of a nonsingular square matrix.
pub fn inverse(matrix: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = matrix.len();
    let mut m: Vec<Vec<Rat>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = echelon(&mut m, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}
