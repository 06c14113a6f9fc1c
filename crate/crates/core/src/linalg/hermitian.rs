// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Complex Hermitian eigenproblems via cyclic Jacobi rotations.

use ndarray::Array2;

use crate::C64;

/// Eigendecomposition of a Hermitian matrix: `a = v · diag(w) · v†` with the
/// eigenvalues `w` sorted ascending and `v` unitary.
///
/// Only the Hermitian part of the input is seen; small anti-Hermitian noise
/// from upstream arithmetic is projected out before the sweeps.
pub fn eigh(a: &Array2<C64>) -> (Vec<f64>, Array2<C64>) {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "eigh requires a square matrix");
    if n == 0 {
        return (Vec::new(), Array2::zeros((0, 0)));
    }

    // Flat row-major working copy of the Hermitian part.
    let mut m = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = 0.5 * (a[[i, j]] + a[[j, i]].conj());
        }
    }
    let mut v = vec![C64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = C64::new(1.0, 0.0);
    }

    let scale: f64 = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tol = 1e-15 * scale.max(f64::MIN_POSITIVE);

    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[p * n + q].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                let h = apq.norm();
                if h <= tol / (n as f64) {
                    continue;
                }
                let app = m[p * n + p].re;
                let aqq = m[q * n + q].re;
                // Phase that makes the pivot real, then a real Jacobi angle.
                let phase = apq / h;
                let tau = (aqq - app) / (2.0 * h);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Column update: U has U[p][p]=c, U[p][q]=s, U[q][p]=-s·conj(phase),
                // U[q][q]=c·conj(phase).
                let sp = s * phase.conj();
                let cp = c * phase.conj();
                for i in 0..n {
                    let mip = m[i * n + p];
                    let miq = m[i * n + q];
                    m[i * n + p] = c * mip - sp * miq;
                    m[i * n + q] = s * mip + cp * miq;
                }
                // Row update with U†.
                let sph = s * phase;
                let cph = c * phase;
                for j in 0..n {
                    let mpj = m[p * n + j];
                    let mqj = m[q * n + j];
                    m[p * n + j] = c * mpj - sph * mqj;
                    m[q * n + j] = s * mpj + cph * mqj;
                }
                m[p * n + q] = C64::new(0.0, 0.0);
                m[q * n + p] = C64::new(0.0, 0.0);
                m[p * n + p] = C64::new(m[p * n + p].re, 0.0);
                m[q * n + q] = C64::new(m[q * n + q].re, 0.0);
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - sp * viq;
                    v[i * n + q] = s * vip + cp * viq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].re.partial_cmp(&m[j * n + j].re).unwrap());
    let w: Vec<f64> = order.iter().map(|&i| m[i * n + i].re).collect();
    let mut vecs = Array2::zeros((n, n));
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            vecs[[i, col]] = v[i * n + src];
        }
    }
    (w, vecs)
}
