//! Exact dense linear algebra over the rationals: just enough Gaussian
//! elimination to solve the small systems that define the polynomials here.

use crate::rational::Q;
use num_traits::Zero;

/// Solve `A x = b` by fraction-free-ish Gaussian elimination with partial
/// pivoting on nonzero entries. Returns `None` when `A` is singular.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = std::mem::replace(&mut a[r][col], Q::zero());
                for j in col + 1..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                }
                let t = &b[col] * &f;
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Determinant of a square rational matrix (by elimination).
pub fn determinant(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::from_integer(1.into());
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Q::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for j in col..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                }
            }
        }
    }
    det
}

/// Coefficients of the unique degree `< points.len()` polynomial through the
/// given `(x, y)` pairs, ascending powers (exact Lagrange interpolation).
pub fn lagrange_coefficients(points: &[(Q, Q)]) -> Option<Vec<Q>> {
    let n = points.len();
    let a: Vec<Vec<Q>> = points
        .iter()
        .map(|(x, _)| {
            let mut row = Vec::with_capacity(n);
            let mut pw = Q::from_integer(1.into());
            for _ in 0..n {
                row.push(pw.clone());
                pw *= x;
            }
            row
        })
        .collect();
    let b: Vec<Q> = points.iter().map(|(_, y)| y.clone()).collect();
    solve(a, b)
}
