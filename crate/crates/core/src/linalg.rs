//! Determinants over a scalar field and ranks over `F_p`.

use crate::scalar::Scalar;

/// Determinant by Gaussian elimination with partial pivoting on magnitude.
/// Exact for exact scalars.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(pivot) = pivot else {
            return T::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / p.clone();
            for c in col..n {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - sub;
            }
        }
    }
    det
}

/// Determinant with every row rescaled by a power of two first. Returns
/// `(mantissa, e)` with `det = mantissa · 2^e`; exact scalars get `e = 0`.
pub fn scaled_determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> (T, i64) {
    let mut total = 0i64;
    if !T::EXACT {
        for row in &mut m {
            let e = row.iter().map(T::exponent).max().unwrap_or(0);
            if e != 0 && row.iter().any(|x| !x.is_zero()) {
                for x in row.iter_mut() {
                    *x = x.clone().mul_pow2(-e);
                }
                total += e;
            }
        }
    }
    (determinant(m), total)
}

/// Rank of a matrix with entries in `0..p` over `F_p`, `p` prime.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(pivot, rank);
        let inv = inverse_mod(m[rank][col], p);
        for c in col..cols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in 0..rows {
            if r == rank || m[r][col] == 0 {
                continue;
            }
            let f = m[r][col];
            for c in col..cols {
                m[r][c] = (m[r][c] + p * p - f * m[rank][c] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn matmul_mod_p(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + a[i][l] * b[l][j]) % p;
            }
        }
    }
    out
}
