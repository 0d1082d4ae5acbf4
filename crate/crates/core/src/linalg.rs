//! Small exact linear algebra over `BigInt` / `BigRational`.
//!
//! Every matrix here is tiny (at most 7x7), so plain Gaussian elimination on
//! rationals is used wherever it keeps the code obvious.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn to_big_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_rat_matrix(rows: &IntMatrix) -> RatMatrix {
    rows.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Fraction-free determinant (Bareiss).
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Row-reduces in place and returns the rank.
fn row_reduce(a: &mut RatMatrix) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][c].clone();
        for j in c..cols {
            a[rank][j] = &a[rank][j] / &pivot;
        }
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = &f * &a[rank][j];
                    a[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(rows: &IntMatrix) -> usize {
    let mut a = to_rat_matrix(rows);
    row_reduce(&mut a)
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(&to_big_matrix(rows))
}

/// Affine rank of a point set: rank of the differences to the first point.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    rank_i64(&diffs)
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut aug: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let rk = row_reduce(&mut aug);
    if rk < n || (0..n).any(|i| aug[i][i].is_zero()) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Inverse of a square rational matrix.
pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut aug: RatMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let rk = row_reduce(&mut aug);
    if rk < n || (0..n).any(|i| aug[i][i].is_zero()) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `adj(a) = det(a) * a^{-1}`, an integer matrix.
pub fn adjugate(a: &IntMatrix) -> (IntMatrix, BigInt) {
    let det = determinant(a);
    let n = a.len();
    if det.is_zero() {
        // Only nonsingular input is ever passed; keep a total function anyway.
        return (vec![vec![BigInt::zero(); n]; n], det);
    }
    let inv = inverse(&to_rat_matrix(a)).expect("nonsingular");
    let d = BigRational::from_integer(det.clone());
    let adj = inv
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| {
                    let v = x * &d;
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    (adj, det)
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides a vector by the gcd of its entries (no-op on the zero vector).
pub fn primitive(v: &mut [BigInt]) {
    let g = gcd_all(v.iter());
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Returns a unimodular `w` with `a^T w = e_1^T`, for a primitive integer row `a`.
///
/// Columns `2..n` of `w` are then a lattice basis of `a^perp ∩ Z^n`.
pub fn unimodular_completion(a: &[i64]) -> Option<IntMatrix> {
    let n = a.len();
    let mut row: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    let mut w: IntMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // Euclid on the row entries via integer column operations mirrored on `w`.
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero
            .iter()
            .min_by(|&&i, &&j| row[i].abs().cmp(&row[j].abs()))
            .unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = row[j].div_floor(&row[p]);
            row[j] = &row[j] - &q * &row[p];
            for r in w.iter_mut() {
                let v = &q * &r[p];
                r[j] -= v;
            }
        }
    }
    let p = (0..n).find(|&j| !row[j].is_zero())?;
    if !row[p].abs().is_one() {
        return None;
    }
    if p != 0 {
        row.swap(0, p);
        for r in w.iter_mut() {
            r.swap(0, p);
        }
    }
    if row[0].is_negative() {
        for r in w.iter_mut() {
            r[0] = -&r[0];
        }
    }
    Some(w)
}

pub fn big_to_i64(x: &BigInt) -> Option<i64> {
    num_traits::ToPrimitive::to_i64(x)
}
