// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! LU solves and real least squares.

use ndarray::{Array1, Array2};
use thiserror::Error;

use crate::C64;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("matrix is singular to working precision (pivot {pivot:.3e} at step {step})")]
    Singular { pivot: f64, step: usize },
    #[error("dimension mismatch: lhs is {n}x{n}, rhs has {rhs_rows} rows")]
    DimensionMismatch { n: usize, rhs_rows: usize },
    #[error("least-squares design matrix is rank deficient (column {column})")]
    RankDeficient { column: usize },
    #[error("least squares needs at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
}

/// Solve `a · x = b` by LU with partial pivoting. `b` may hold multiple
/// right-hand sides as columns.
pub fn solve(a: &Array2<C64>, b: &Array2<C64>) -> Result<Array2<C64>, SolveError> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "solve requires a square matrix");
    if b.nrows() != n {
        return Err(SolveError::DimensionMismatch {
            n,
            rhs_rows: b.nrows(),
        });
    }
    let m = b.ncols();
    let mut lu = a.clone();
    let mut x = b.clone();
    let scale = super::max_abs(a).max(f64::MIN_POSITIVE);

    for col in 0..n {
        let mut piv_val = 0.0;
        let mut piv_row = col;
        for row in col..n {
            let v = lu[[row, col]].norm();
            if v > piv_val {
                piv_val = v;
                piv_row = row;
            }
        }
        if piv_val < 1e-14 * scale {
            return Err(SolveError::Singular {
                pivot: piv_val,
                step: col,
            });
        }
        if piv_row != col {
            for j in 0..n {
                lu.swap([col, j], [piv_row, j]);
            }
            for j in 0..m {
                x.swap([col, j], [piv_row, j]);
            }
        }
        let pivot = lu[[col, col]];
        for row in (col + 1)..n {
            let factor = lu[[row, col]] / pivot;
            if factor == C64::new(0.0, 0.0) {
                continue;
            }
            for j in (col + 1)..n {
                let sub = factor * lu[[col, j]];
                lu[[row, j]] -= sub;
            }
            for j in 0..m {
                let sub = factor * x[[col, j]];
                x[[row, j]] -= sub;
            }
        }
    }
    for col in (0..n).rev() {
        let pivot = lu[[col, col]];
        for j in 0..m {
            let mut acc = x[[col, j]];
            for k in (col + 1)..n {
                acc -= lu[[col, k]] * x[[k, j]];
            }
            x[[col, j]] = acc / pivot;
        }
    }
    Ok(x)
}

/// Matrix inverse via [`solve`] against the identity.
pub fn inverse(a: &Array2<C64>) -> Result<Array2<C64>, SolveError> {
    solve(a, &super::identity(a.nrows()))
}

/// Result of a linear least-squares fit.
#[derive(Debug, Clone)]
pub struct LstsqFit {
    pub coefficients: Vec<f64>,
    /// RMS of the residual vector.
    pub residual_rms: f64,
    /// Coefficient of determination against the sample mean.
    pub r_squared: f64,
}

/// Least squares `min ‖a·x − b‖₂` by Householder QR with a column rank check.
pub fn lstsq(a: &Array2<f64>, b: &[f64]) -> Result<LstsqFit, SolveError> {
    let (rows, cols) = a.dim();
    if rows < cols {
        return Err(SolveError::TooFewSamples {
            needed: cols,
            got: rows,
        });
    }
    assert_eq!(rows, b.len(), "rhs length must match row count");
    let mut r = a.clone();
    let mut y = Array1::from(b.to_vec());
    let scale = a.iter().fold(0.0f64, |acc, &v| acc.max(v.abs())).max(1e-300);

    for k in 0..cols {
        let mut norm2 = 0.0;
        for i in k..rows {
            norm2 += r[[i, k]] * r[[i, k]];
        }
        let norm = norm2.sqrt();
        if norm < 1e-12 * scale * (rows as f64).sqrt() {
            return Err(SolveError::RankDeficient { column: k });
        }
        let alpha = if r[[k, k]] >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|i| r[[i, k]]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 > 0.0 {
            let beta = 2.0 / vnorm2;
            for j in k..cols {
                let mut dot = 0.0;
                for (idx, i) in (k..rows).enumerate() {
                    dot += v[idx] * r[[i, j]];
                }
                dot *= beta;
                for (idx, i) in (k..rows).enumerate() {
                    r[[i, j]] -= dot * v[idx];
                }
            }
            let mut dot = 0.0;
            for (idx, i) in (k..rows).enumerate() {
                dot += v[idx] * y[i];
            }
            dot *= beta;
            for (idx, i) in (k..rows).enumerate() {
                y[i] -= dot * v[idx];
            }
        }
        r[[k, k]] = alpha;
        for i in (k + 1)..rows {
            r[[i, k]] = 0.0;
        }
    }

    let mut coefficients = vec![0.0; cols];
    for k in (0..cols).rev() {
        let mut acc = y[k];
        for j in (k + 1)..cols {
            acc -= r[[k, j]] * coefficients[j];
        }
        coefficients[k] = acc / r[[k, k]];
    }
    let mut ss_res = 0.0;
    for i in cols..rows {
        ss_res += y[i] * y[i];
    }
    let residual_rms = (ss_res / rows as f64).sqrt();
    let mean = b.iter().sum::<f64>() / rows as f64;
    let ss_tot: f64 = b.iter().map(|&v| (v - mean) * (v - mean)).sum();
    let r_squared = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else {
        1.0
    };
    Ok(LstsqFit {
        coefficients,
        residual_rms,
        r_squared,
    })
}
