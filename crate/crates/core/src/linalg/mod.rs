// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex linear algebra kernels.
//!
//! Everything here is plain `Array2<Complex64>` with hand-rolled dense
//! algorithms: cyclic Jacobi for Hermitian eigenproblems, Householder
//! Hessenberg reduction plus shifted QR for general complex spectra,
//! scaling-and-squaring Padé for the matrix exponential, and LU / QR
//! factorizations for solves and least squares. Sizes in this crate stay in
//! the low hundreds (superoperators up to 256², chains up to ~500 sites), so
//! dense O(n³) kernels are the right tool.

mod eig;
mod expm;
mod hermitian;
mod solve;

pub use eig::{eig, eigvals, schur, EigError, Schur};
pub use expm::{expm, expm_via_eig, ExpmError};
pub use hermitian::eigh;
pub use solve::{inverse, lstsq, solve, LstsqFit, SolveError};

use ndarray::Array2;

use crate::C64;

/// Conjugate transpose.
pub fn adjoint(m: &Array2<C64>) -> Array2<C64> {
    m.t().mapv(|z| z.conj())
}

/// n×n identity.
pub fn identity(n: usize) -> Array2<C64> {
    Array2::from_diag_elem(n, C64::new(1.0, 0.0))
}

/// Kronecker product with the second factor as the fast index.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = Array2::zeros((ra * rb, ca * cb));
    for ia in 0..ra {
        for ja in 0..ca {
            let f = a[[ia, ja]];
            if f == C64::new(0.0, 0.0) {
                continue;
            }
            for ib in 0..rb {
                for jb in 0..cb {
                    out[[ia * rb + ib, ja * cb + jb]] = f * b[[ib, jb]];
                }
            }
        }
    }
    out
}

/// Largest entry magnitude.
pub fn max_abs(m: &Array2<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Maximum column sum of absolute values.
pub fn one_norm(m: &Array2<C64>) -> f64 {
    let mut best = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = m.column(j).iter().map(|z| z.norm()).sum();
        best = best.max(s);
    }
    best
}

/// Frobenius norm.
pub fn fro_norm(m: &Array2<C64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermiticity defect ‖M − M†‖_max.
pub fn hermiticity_defect(m: &Array2<C64>) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[[i, j]] - m[[j, i]].conj()).norm());
        }
    }
    worst
}

/// True when every entry is finite.
pub fn all_finite(m: &Array2<C64>) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Symmetric Hausdorff distance between two point sets in the complex plane.
pub fn hausdorff_distance(a: &[C64], b: &[C64]) -> f64 {
    fn directed(from: &[C64], to: &[C64]) -> f64 {
        from.iter()
            .map(|x| {
                to.iter()
                    .map(|y| (x - y).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
    directed(a, b).max(directed(b, a))
}

/// Greedy multiset match: pairs every element of `a` with a distinct element
/// of `b` (nearest first) and returns the largest paired distance. Returns
/// `None` when the lengths differ.
pub fn multiset_match_distance(a: &[C64], b: &[C64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    // Match in order of decreasing magnitude so large eigenvalues grab their
    // partners first; for well-separated spectra the order is immaterial.
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| b[j].norm().partial_cmp(&a[i].norm()).unwrap().reverse());
    let mut worst = 0.0f64;
    for &i in &order {
        let mut best = f64::INFINITY;
        let mut best_j = usize::MAX;
        for (j, &bj) in b.iter().enumerate() {
            if !used[j] {
                let d = (a[i] - bj).norm();
                if d < best {
                    best = d;
                    best_j = j;
                }
            }
        }
        used[best_j] = true;
        worst = worst.max(best);
    }
    Some(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = kron(&identity(3), &identity(2));
        assert_eq!(k, identity(6));
    }

    #[test]
    fn kron_entry_layout() {
        let a = ndarray::array![[c(1.0, 0.0), c(2.0, 0.0)], [c(0.0, 0.0), c(3.0, 0.0)]];
        let b = ndarray::array![[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        let k = kron(&a, &b);
        assert_eq!(k[[0, 0]], c(0.0, 1.0));
        assert_eq!(k[[0, 2]], c(0.0, 2.0));
        assert_eq!(k[[3, 3]], c(3.0, 0.0));
    }

    #[test]
    fn hausdorff_of_shifted_sets() {
        let a = [c(0.0, 0.0), c(1.0, 0.0)];
        let b = [c(0.0, 0.1), c(1.0, 0.0)];
        assert!((hausdorff_distance(&a, &b) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn multiset_match_requires_equal_lengths() {
        assert!(multiset_match_distance(&[c(1.0, 0.0)], &[]).is_none());
    }
}
