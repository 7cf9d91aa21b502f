//! Numeric tolerances shared across the crate.

/// Eigenvalue comparisons (cospectrality, closed-form agreement).
pub const NUM_TOL: f64 = 1e-9;

/// Inertia classification: |λ| <= ZERO_TOL counts as zero.
pub const ZERO_TOL: f64 = 1e-7;

/// Consecutive sorted eigenvalues closer than this share a multiplicity group.
pub const GROUP_TOL: f64 = 1e-8;

/// Relative tolerance for Seidel energy equality.
pub const ENERGY_TOL: f64 = 1e-8;

/// Jacobi stops once the off-diagonal Frobenius mass is below this fraction of the
/// matrix Frobenius norm.
pub const JACOBI_CONV_TOL: f64 = 1e-12;

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Default cap on the order of any constructed matrix or graph.
pub const DEFAULT_MAX_DIM: usize = 10_000;

/// The exact characteristic polynomial is only computed up to this order.
pub const EXACT_MAX_ORDER: usize = 200;
