//! Exact dense linear algebra: rank, determinant, solve and inverse over any
//! [`Scalar`], plus fraction-free integer fast paths used by the rank-heavy
//! orbit computations.

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank by Gaussian elimination over the scalar field.
pub fn rank<R: Scalar>(rows: &[Vec<R>]) -> usize {
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..nrows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / pivot.clone();
            for j in c..ncols {
                let sub = f.clone() * m[r][j].clone();
                m[i][j] = m[i][j].clone() - sub;
            }
        }
        r += 1;
    }
    r
}

/// Rank of an integer matrix by fraction-free Bareiss elimination.
///
/// Entry growth stays bounded by minor sizes, which is what makes the large
/// adjoint-action matrices tractable.
pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Smallest nonzero pivot keeps the Bareiss entries short.
        let Some(p) = (r..nrows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].magnitude().bits())
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &pivot * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Determinant over the scalar field.
pub fn det<R: Scalar>(a: &[Vec<R>]) -> R {
    let n = a.len();
    let mut m: Vec<Vec<R>> = a.to_vec();
    let mut sign = R::one();
    let mut result = R::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return R::zero();
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        let pivot = m[c][c].clone();
        result = result * pivot.clone();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone() / pivot.clone();
            for j in c..n {
                let sub = f.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - sub;
            }
        }
    }
    sign * result
}

/// Determinant of a small integer matrix, fraction-free over `i128`.
pub fn det_int(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    sign * if n == 0 { 1 } else { m[n - 1][n - 1] }
}

/// Solve the square system `a · x = b` exactly.
pub fn solve<R: Scalar>(a: &[Vec<R>], b: &[R]) -> Result<Vec<R>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Shape(format!("solve: non-square system of size {n}")));
    }
    let mut m: Vec<Vec<R>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Err(Error::Shape("solve: singular matrix".into()));
        };
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for j in c..=n {
            m[c][j] = m[c][j].clone() / pivot.clone();
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let sub = f.clone() * m[c][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Solve a general (possibly non-square) system `a · x = b` exactly.
/// Returns `None` when inconsistent; free variables are set to zero.
pub fn solve_general<R: Scalar>(a: &[Vec<R>], b: &[R]) -> Option<Vec<R>> {
    let nrows = a.len();
    if nrows != b.len() {
        return None;
    }
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<R>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for j in c..=ncols {
            m[r][j] = m[r][j].clone() / pivot.clone();
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=ncols {
                    let sub = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    for i in r..nrows {
        if !m[i][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![R::zero(); ncols];
    for (row, col) in pivots {
        x[col] = m[row][ncols].clone();
    }
    Some(x)
}

/// Exact inverse of a square matrix.
pub fn inverse<R: Scalar>(a: &[Vec<R>]) -> Result<Vec<Vec<R>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<R> = (0..n).map(|i| if i == k { R::one() } else { R::zero() }).collect();
        cols.push(solve(a, &e)?);
    }
    // cols[k] is the k-th column of the inverse.
    Ok((0..n)
        .map(|i| (0..n).map(|k| cols[k][i].clone()).collect())
        .collect())
}

/// Clear denominators row by row and hand off to the integer Bareiss rank.
pub fn rank_rational_rows<R: Scalar>(rows: &[Vec<R>], to_bigint_pair: impl Fn(&R) -> (BigInt, BigInt)) -> usize {
    let int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let pairs: Vec<(BigInt, BigInt)> = row.iter().map(&to_bigint_pair).collect();
            let mut lcm = BigInt::one();
            for (_, d) in &pairs {
                lcm = num_integer::lcm(lcm.clone(), d.clone());
            }
            pairs
                .iter()
                .map(|(n, d)| n * (&lcm / d))
                .collect()
        })
        .collect();
    rank_int(&int_rows)
}

/// Multiply matrix by vector.
pub fn mat_vec<R: Scalar>(a: &[Vec<R>], x: &[R]) -> Vec<R> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(R::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
        })
        .collect()
}

/// Identity embedding of an integer matrix into the scalar field.
pub fn from_int_matrix<R: Scalar>(a: &[Vec<i64>]) -> Vec<Vec<R>> {
    a.iter()
        .map(|row| row.iter().map(|&x| int::<R>(x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat64;
    use crate::scalar::ratio;

    #[test]
    fn rank_of_singular_matrix() {
        let m: Vec<Vec<Rat64>> = from_int_matrix(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn det_matches_int_det() {
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(det_int(&a), 4);
        let m: Vec<Vec<Rat64>> = from_int_matrix(&a);
        assert_eq!(det(&m), ratio(4, 1));
    }

    #[test]
    fn solve_and_inverse_round_trip() {
        let a: Vec<Vec<Rat64>> = from_int_matrix(&[vec![2, -1], vec![-1, 2]]);
        let b = vec![ratio(1, 1), ratio(0, 1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![ratio(2, 3), ratio(1, 3)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_vec(&inv, &b), x);
    }

    #[test]
    fn bareiss_rank_agrees_with_field_rank() {
        let rows = vec![vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![8, 10, 6, 7], vec![0, 0, 0, 0]];
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let rat: Vec<Vec<Rat64>> = from_int_matrix(&rows);
        assert_eq!(rank_int(&big), rank(&rat));
    }
}
