// Copyright 2026 Lindchain Contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact dynamics of a one-dimensional dimerized fermion chain with
//! correlated particle loss.
//!
//! The library is organized around the single-particle data of the chain:
//!
//! * [`model`] builds the hopping matrix, jump operators, dissipation kernel,
//!   effective Hamiltonian and damping operator from the two control
//!   parameters (λ, η) and the chain geometry.
//! * [`spectral`] provides the analytic Bloch dispersion, dense non-Hermitian
//!   eigensolves, phase classification, relaxation gaps and rapidities.
//! * [`dynamics`] evolves the two-point correlation matrix exactly through
//!   the damping operator and extracts real- and momentum-space densities.
//! * [`entanglement`] computes von Neumann entropies of spatial blocks from
//!   reduced correlation matrices, two-qubit measures, and the spatial and
//!   temporal scaling fits.
//! * [`oracle`] holds the ground-truth engines: the analytic two-site
//!   solution and a Jordan–Wigner brute-force Lindblad integrator with full
//!   superoperator spectra.
//! * [`luttinger`] covers the bosonized short-time dynamics of the lossy
//!   interacting liquid in momentum space.
//!
//! All numerics are dense complex `f64`; the kernels live in [`linalg`].

pub mod dynamics;
pub mod entanglement;
pub mod linalg;
pub mod luttinger;
pub mod model;
pub mod oracle;
pub mod spectral;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
