// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense general complex eigenproblems.
//!
//! Householder reduction to upper Hessenberg form followed by an explicitly
//! shifted QR iteration with Wilkinson shifts and occasional exceptional
//! shifts. The full Schur form `A = Z T Z†` is accumulated so that right
//! eigenvectors can be recovered by back substitution on `T`.

use ndarray::Array2;
use thiserror::Error;

use crate::C64;

use super::{all_finite, fro_norm};

#[derive(Debug, Error)]
pub enum EigError {
    #[error("eigensolver input must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("eigensolver input contains non-finite entries")]
    NonFinite,
    #[error("QR iteration failed to converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
}

/// Schur decomposition `a = z · t · z†` with `t` upper triangular.
pub struct Schur {
    pub t: Array2<C64>,
    pub z: Array2<C64>,
}

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Complex Givens rotation: returns (c, s, r) with c real so that
/// [[c, s], [-s̄, c]] · [f, g]ᵀ = [r, 0]ᵀ.
fn givens(f: C64, g: C64) -> (f64, C64, C64) {
    if g == ZERO {
        return (1.0, ZERO, f);
    }
    if f == ZERO {
        let gn = g.norm();
        return (0.0, g.conj() / gn, C64::new(gn, 0.0));
    }
    let fn_ = f.norm();
    let d = (f.norm_sqr() + g.norm_sqr()).sqrt();
    let c = fn_ / d;
    let fsign = f / fn_;
    let s = fsign * g.conj() / d;
    let r = fsign * d;
    (c, s, r)
}

/// Reduce to upper Hessenberg form, accumulating the unitary `z`.
fn hessenberg(a: &mut Array2<C64>, z: &mut Array2<C64>) {
    let n = a.nrows();
    for k in 0..n.saturating_sub(2) {
        // Householder vector for column k below the diagonal.
        let mut norm2 = 0.0f64;
        for i in (k + 1)..n {
            norm2 += a[[i, k]].norm_sqr();
        }
        let norm = norm2.sqrt();
        if norm < 1e-300 {
            continue;
        }
        let x0 = a[[k + 1, k]];
        let alpha = if x0 == ZERO {
            C64::new(-norm, 0.0)
        } else {
            -(x0 / x0.norm()) * norm
        };
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[[i, k]]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 < 1e-300 {
            continue;
        }
        let beta = 2.0 / vnorm2;

        // A ← H A with H = I − β v v† acting on rows k+1..n.
        for j in k..n {
            let mut dot = ZERO;
            for (idx, i) in (k + 1..n).enumerate() {
                dot += v[idx].conj() * a[[i, j]];
            }
            dot *= beta;
            for (idx, i) in (k + 1..n).enumerate() {
                let update = dot * v[idx];
                a[[i, j]] -= update;
            }
        }
        // A ← A H acting on columns k+1..n.
        for i in 0..n {
            let mut dot = ZERO;
            for (idx, j) in (k + 1..n).enumerate() {
                dot += a[[i, j]] * v[idx];
            }
            dot *= beta;
            for (idx, j) in (k + 1..n).enumerate() {
                let update = dot * v[idx].conj();
                a[[i, j]] -= update;
            }
        }
        // Z ← Z H.
        for i in 0..n {
            let mut dot = ZERO;
            for (idx, j) in (k + 1..n).enumerate() {
                dot += z[[i, j]] * v[idx];
            }
            dot *= beta;
            for (idx, j) in (k + 1..n).enumerate() {
                let update = dot * v[idx].conj();
                z[[i, j]] -= update;
            }
        }
        for i in (k + 2)..n {
            a[[i, k]] = ZERO;
        }
        a[[k + 1, k]] = alpha;
    }
}

/// Eigenvalues of the trailing 2×2 block; returns the one closest to the
/// bottom-right entry (Wilkinson shift).
fn wilkinson_shift(t: &Array2<C64>, hi: usize) -> C64 {
    let a = t[[hi - 1, hi - 1]];
    let b = t[[hi - 1, hi]];
    let c = t[[hi, hi - 1]];
    let d = t[[hi, hi]];
    let tr_half = 0.5 * (a + d);
    let disc = (0.25 * (a - d) * (a - d) + b * c).sqrt();
    let r1 = tr_half + disc;
    let r2 = tr_half - disc;
    if (r1 - d).norm() <= (r2 - d).norm() {
        r1
    } else {
        r2
    }
}

/// Full Schur decomposition of a general complex matrix.
pub fn schur(a: &Array2<C64>) -> Result<Schur, EigError> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(EigError::NotSquare { rows, cols });
    }
    if !all_finite(a) {
        return Err(EigError::NonFinite);
    }
    let n = rows;
    let mut t = a.clone();
    let mut z = super::identity(n);
    if n <= 1 {
        return Ok(Schur { t, z });
    }
    hessenberg(&mut t, &mut z);

    let scale = fro_norm(&t).max(f64::MIN_POSITIVE);
    let eps = f64::EPSILON;
    let mut hi = n - 1;
    let mut iterations = 0usize;
    let mut since_deflation = 0usize;
    let max_iterations = 40 * n + 100;

    while hi > 0 {
        // Zero out negligible subdiagonals, then find the active window.
        let mut lo = hi;
        while lo > 0 {
            let sub = t[[lo, lo - 1]].norm();
            let local = t[[lo - 1, lo - 1]].norm() + t[[lo, lo]].norm();
            let thresh = if local > 0.0 {
                eps * local
            } else {
                eps * scale
            };
            if sub <= thresh {
                t[[lo, lo - 1]] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }

        iterations += 1;
        since_deflation += 1;
        if iterations > max_iterations {
            return Err(EigError::NoConvergence { iterations });
        }
        let sigma = if since_deflation % 12 == 0 {
            // Exceptional shift to break rare cycling.
            t[[hi, hi]] + C64::new(0.75 * t[[hi, hi - 1]].norm(), 0.0)
        } else {
            wilkinson_shift(&t, hi)
        };

        // Explicit QR step on the window [lo, hi]: triangularize T−σI with a
        // left sweep of Givens rotations, multiply them back on the right,
        // restore the shift. T' = R·Q + σI = Q†(T)Q.
        for i in lo..=hi {
            let d = t[[i, i]] - sigma;
            t[[i, i]] = d;
        }
        let mut rots: Vec<(f64, C64)> = Vec::with_capacity(hi - lo);
        for j in lo..hi {
            let (c, s, _r) = givens(t[[j, j]], t[[j + 1, j]]);
            rots.push((c, s));
            for col in j..n {
                let x = t[[j, col]];
                let y = t[[j + 1, col]];
                t[[j, col]] = C64::new(c, 0.0) * x + s * y;
                t[[j + 1, col]] = -s.conj() * x + C64::new(c, 0.0) * y;
            }
            t[[j + 1, j]] = ZERO;
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let j = lo + idx;
            // Apply G† on columns j, j+1 from the right; R is upper
            // triangular so only rows 0..=j+1 carry entries there.
            for row in 0..=(j + 1) {
                let x = t[[row, j]];
                let y = t[[row, j + 1]];
                t[[row, j]] = x * C64::new(c, 0.0) + y * s.conj();
                t[[row, j + 1]] = -x * s + y * C64::new(c, 0.0);
            }
            for row in 0..n {
                let x = z[[row, j]];
                let y = z[[row, j + 1]];
                z[[row, j]] = x * C64::new(c, 0.0) + y * s.conj();
                z[[row, j + 1]] = -x * s + y * C64::new(c, 0.0);
            }
        }
        for i in lo..=hi {
            let d = t[[i, i]] + sigma;
            t[[i, i]] = d;
        }
    }

    // Clean the strictly lower triangle.
    for i in 0..n {
        for j in 0..i {
            t[[i, j]] = ZERO;
        }
    }
    Ok(Schur { t, z })
}

/// Eigenvalues of a general complex matrix.
pub fn eigvals(a: &Array2<C64>) -> Result<Vec<C64>, EigError> {
    let s = schur(a)?;
    Ok((0..a.nrows()).map(|i| s.t[[i, i]]).collect())
}

/// Eigenvalues and right eigenvectors of a general complex matrix.
///
/// Returns `(w, v)` with `a · v[:,k] ≈ w[k] · v[:,k]` and unit-norm columns.
/// Eigenvectors of (nearly) defective clusters are returned as computed,
/// with small denominators perturbed at machine scale.
pub fn eig(a: &Array2<C64>) -> Result<(Vec<C64>, Array2<C64>), EigError> {
    let s = schur(a)?;
    let n = a.nrows();
    let t = &s.t;
    let scale = fro_norm(t).max(f64::MIN_POSITIVE);
    let unfl = f64::EPSILON * scale;
    let mut vectors = Array2::zeros((n, n));
    for k in 0..n {
        let lambda = t[[k, k]];
        let mut y = vec![ZERO; n];
        y[k] = ONE;
        for j in (0..k).rev() {
            let mut sum = ZERO;
            for m in (j + 1)..=k {
                sum += t[[j, m]] * y[m];
            }
            let mut denom = t[[j, j]] - lambda;
            if denom.norm() < unfl {
                denom = C64::new(unfl, 0.0);
            }
            y[j] = -sum / denom;
        }
        // v = Z y, normalized.
        let mut norm2 = 0.0f64;
        for yj in y.iter().take(k + 1) {
            norm2 += yj.norm_sqr();
        }
        let inv = 1.0 / norm2.sqrt();
        for i in 0..n {
            let mut acc = ZERO;
            for (j, yj) in y.iter().enumerate().take(k + 1) {
                acc += s.z[[i, j]] * *yj;
            }
            vectors[[i, k]] = acc * inv;
        }
    }
    let w = (0..n).map(|i| t[[i, i]]).collect();
    Ok((w, vectors))
}
