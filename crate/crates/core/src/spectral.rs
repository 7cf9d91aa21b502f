//! Adjacency and Seidel matrices, Seidel spectrum, energy and inertia.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eigen::{sym_eigenvalues, RealSymMatrix, Spectrum};
use crate::error::Result;
use crate::graph::{adjacency_of, Graph};
use crate::matrix::IntSymMatrix;
use crate::tol::JACOBI_CONV_TOL;

/// `A(G)`, including loop flags on the diagonal.
pub fn adjacency_matrix(g: &Graph) -> IntSymMatrix {
    adjacency_of(g)
}

/// `S(G) = J - I - 2A(G)`: zero diagonal, `-1` for edges, `+1` for non-edges.
pub fn seidel_matrix(g: &Graph) -> Result<IntSymMatrix> {
    g.require_simple()?;
    Ok(IntSymMatrix::from_upper_fn(g.n(), |u, v| {
        if u == v {
            0
        } else if g.has_edge(u, v) {
            -1
        } else {
            1
        }
    }))
}

pub fn seidel_spectrum(g: &Graph) -> Result<Spectrum> {
    let s = seidel_matrix(g)?;
    sym_eigenvalues(&RealSymMatrix::from(&s), JACOBI_CONV_TOL)
}

/// Sum of the absolute Seidel eigenvalues.
pub fn seidel_energy(g: &Graph) -> Result<f64> {
    Ok(seidel_spectrum(g)?.energy())
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    /// Classifies `values` against `zero_tol`: `|λ| <= zero_tol` counts as zero.
    pub fn of_values(values: &[f64], zero_tol: f64) -> Self {
        let mut out = Inertia {
            n_pos: 0,
            n_zero: 0,
            n_neg: 0,
        };
        for &v in values {
            if v > zero_tol {
                out.n_pos += 1;
            } else if v < -zero_tol {
                out.n_neg += 1;
            } else {
                out.n_zero += 1;
            }
        }
        out
    }

    pub fn total(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }

    /// Equal positive and negative counts and no zero eigenvalue.
    pub fn is_balanced(&self) -> bool {
        self.n_zero == 0 && self.n_pos == self.n_neg
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_pos, self.n_zero, self.n_neg)
    }
}

pub fn seidel_inertia(g: &Graph, zero_tol: f64) -> Result<Inertia> {
    Ok(Inertia::of_values(&seidel_spectrum(g)?.values, zero_tol))
}
