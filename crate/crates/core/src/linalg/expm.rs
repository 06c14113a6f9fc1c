// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Matrix exponential via scaling-and-squaring with a Padé(13) approximant,
//! following Higham, "The Scaling and Squaring Method for the Matrix
//! Exponential Revisited", SIAM J. Matrix Anal. Appl. 26(4).

use ndarray::Array2;
use thiserror::Error;

use crate::C64;

use super::{all_finite, eig, identity, inverse, one_norm, EigError, SolveError};

#[derive(Debug, Error)]
pub enum ExpmError {
    #[error("matrix exponential input must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix exponential overflowed or produced non-finite entries")]
    Overflow,
    #[error("Padé denominator solve failed: {0}")]
    Solve(#[from] SolveError),
    #[error("eigendecomposition path failed: {0}")]
    Eig(#[from] EigError),
    #[error("eigenvector matrix too ill-conditioned for the eigendecomposition path (cond ≈ {cond:.3e})")]
    IllConditioned { cond: f64 },
}

/// Padé(13,13) numerator coefficients (Higham, eq. (10.33)).
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const THETA13: f64 = 5.371920351148152;

/// exp(A) for a square complex matrix.
pub fn expm(a: &Array2<C64>) -> Result<Array2<C64>, ExpmError> {
    let (rows, cols) = a.dim();
    if rows != cols {
        return Err(ExpmError::NotSquare { rows, cols });
    }
    let n = rows;
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }
    if !all_finite(a) {
        return Err(ExpmError::Overflow);
    }
    if n == 1 {
        let mut out = Array2::zeros((1, 1));
        out[[0, 0]] = a[[0, 0]].exp();
        return Ok(out);
    }

    let norm = one_norm(a);
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = C64::new((0.5f64).powi(s as i32), 0.0);
    let a1 = a.mapv(|z| z * scale);

    let eye = identity(n);
    let a2 = a1.dot(&a1);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);

    let c = |k: usize| C64::new(PADE13[k], 0.0);
    let w1 = a6.mapv(|z| z * c(13)) + a4.mapv(|z| z * c(11)) + a2.mapv(|z| z * c(9));
    let w2 = w1.dot(&a6)
        + a6.mapv(|z| z * c(7))
        + a4.mapv(|z| z * c(5))
        + a2.mapv(|z| z * c(3))
        + eye.mapv(|z| z * c(1));
    let u = a1.dot(&w2);
    let v1 = a6.mapv(|z| z * c(12)) + a4.mapv(|z| z * c(10)) + a2.mapv(|z| z * c(8));
    let v = v1.dot(&a6)
        + a6.mapv(|z| z * c(6))
        + a4.mapv(|z| z * c(4))
        + a2.mapv(|z| z * c(2))
        + eye.mapv(|z| z * c(0));

    let num = &v + &u;
    let den = &v - &u;
    let mut result = super::solve(&den, &num)?;
    for _ in 0..s {
        result = result.dot(&result);
    }
    if !all_finite(&result) {
        return Err(ExpmError::Overflow);
    }
    Ok(result)
}

/// exp(A) through the eigendecomposition `A = V Λ V⁻¹`, refusing when the
/// eigenvector matrix is ill-conditioned (1-norm condition above `max_cond`).
///
/// Returns the exponential together with the condition estimate.
pub fn expm_via_eig(a: &Array2<C64>, max_cond: f64) -> Result<(Array2<C64>, f64), ExpmError> {
    let (w, vmat) = eig(a)?;
    let vinv = inverse(&vmat)?;
    let cond = one_norm(&vmat) * one_norm(&vinv);
    if !cond.is_finite() || cond > max_cond {
        return Err(ExpmError::IllConditioned { cond });
    }
    let n = a.nrows();
    let mut scaled = Array2::zeros((n, n));
    for (j, &lam) in w.iter().enumerate() {
        let e = lam.exp();
        for i in 0..n {
            scaled[[i, j]] = vmat[[i, j]] * e;
        }
    }
    let out = scaled.dot(&vinv);
    if !all_finite(&out) {
        return Err(ExpmError::Overflow);
    }
    Ok((out, cond))
}
