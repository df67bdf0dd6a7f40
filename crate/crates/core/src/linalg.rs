//! Exact integer linear algebra on dense matrices.
//!
//! Determinants use fraction-free Bareiss elimination, ranks use the same
//! elimination with column skipping, and invariant factors come from a
//! Smith normal form over the integers. Entries are arbitrary-precision, so
//! none of these operations can overflow.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Converts an `i64` matrix into an [`IntMatrix`].
pub fn from_i64(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant of a square matrix by fraction-free Bareiss elimination.
pub fn determinant(mut m: IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Rank over the rationals, via fraction-free elimination with column
/// skipping. Skipped columns are identically zero below the current row, so
/// the divisions stay exact.
pub fn rank(mut m: IntMatrix) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Invariant factors (the nonzero diagonal of the Smith normal form),
/// each dividing the next, all positive. Unit factors are included.
pub fn invariant_factors(mut m: IntMatrix) -> Vec<BigUint> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&m, k) else {
            break;
        };
        m.swap(k, pi);
        swap_cols(&mut m, k, pj);

        // Clear row and column k by Euclidean steps; restart whenever a
        // remainder strictly smaller than the pivot shows up.
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[i][k], &m[k][k]);
                for j in k..cols {
                    let t = &m[i][j] - &q * &m[k][j];
                    m[i][j] = t;
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[k][j], &m[k][k]);
                for i in k..rows {
                    let t = &m[i][j] - &q * &m[i][k];
                    m[i][j] = t;
                }
                if !m[k][j].is_zero() {
                    swap_cols(&mut m, k, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // Enforce divisibility of the trailing block by the pivot.
        let mut fixed = None;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    fixed = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fixed {
            for j in k..cols {
                let t = &m[k][j] + &m[i][j];
                m[k][j] = t;
            }
            continue; // redo column k with the fresh entries
        }

        if m[k][k].is_negative() {
            for j in k..cols {
                m[k][j] = -m[k][j].clone();
            }
        }
        factors.push(m[k][k].magnitude().clone());
        k += 1;
    }
    factors
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn smallest_nonzero(m: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.len() {
        for j in k..m[i].len() {
            if m[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= m[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

// Round-to-nearest quotient, so remainders shrink by at least half.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) ^ (b.is_negative()) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Multiplies two i64 matrices exactly (used for boundary composition
/// checks, where entries stay tiny).
pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if a.is_empty() || b.is_empty() {
        return vec![vec![]; a.len()];
    }
    let n = a.len();
    let m = b.len();
    let p = b[0].len();
    let mut out = vec![vec![0i64; p]; n];
    for i in 0..n {
        debug_assert_eq!(a[i].len(), m);
        for (k, bk) in b.iter().enumerate() {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..p {
                out[i][j] += aik * bk[j];
            }
        }
    }
    out
}
