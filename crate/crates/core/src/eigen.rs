//! Cyclic Jacobi eigensolver for dense real symmetric matrices, and the sorted
//! [`Spectrum`] it produces.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::matrix::IntSymMatrix;
use crate::tol::{GROUP_TOL, JACOBI_MAX_SWEEPS};

/// Dense real square matrix, row-major. Symmetry is checked by the eigensolver.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealSymMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

impl From<&IntSymMatrix> for RealSymMatrix {
    fn from(m: &IntSymMatrix) -> Self {
        Self {
            n: m.n(),
            data: m.as_slice().iter().map(|&x| x as f64).collect(),
        }
    }
}

/// One multiplicity group of a [`Spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumGroup {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalues sorted in descending order, with multiplicity groups.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub groups: Vec<SpectrumGroup>,
    /// Set when two adjacent groups are closer than `10 * group_tol`, i.e. the grouping
    /// may have split a numerically degenerate eigenvalue.
    pub near_degenerate: bool,
}

impl Spectrum {
    /// Sorts `values` descending and clusters them with [`GROUP_TOL`].
    pub fn from_values(values: Vec<f64>) -> Self {
        Self::from_values_with_tol(values, GROUP_TOL)
    }

    /// Values whose gap to their sorted neighbour is at most `group_tol` share a group;
    /// the group representative is the mean of its members.
    pub fn from_values_with_tol(mut values: Vec<f64>, group_tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<SpectrumGroup> = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[i - 1] - values[i] > group_tol {
                let members = &values[start..i];
                groups.push(SpectrumGroup {
                    value: members.iter().sum::<f64>() / members.len() as f64,
                    multiplicity: members.len(),
                });
                start = i;
            }
        }
        let near_degenerate = groups
            .windows(2)
            .any(|w| w[0].value - w[1].value < 10.0 * group_tol);
        Self {
            values,
            groups,
            near_degenerate,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn min_abs(&self) -> f64 {
        self.values
            .iter()
            .map(|x| x.abs())
            .fold(f64::INFINITY, f64::min)
    }

    /// Multiplicity of the group whose representative lies within `tol` of `value`.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.groups
            .iter()
            .filter(|g| (g.value - value).abs() <= tol)
            .map(|g| g.multiplicity)
            .sum()
    }

    /// True when both spectra have the same length and agree elementwise within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

/// Power notation, e.g. `{1^3, -3^1}`.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}^{}", fmt_num(g.value), g.multiplicity)?;
        }
        f.write_str("}")
    }
}

/// All eigenvalues of a symmetric matrix, sorted descending, using cyclic Jacobi with
/// the default sweep limit.
pub fn sym_eigenvalues(mat: &RealSymMatrix, conv_tol: f64) -> Result<Spectrum> {
    let values = jacobi_eigenvalues(mat, conv_tol, JACOBI_MAX_SWEEPS)?;
    Ok(Spectrum::from_values(values))
}

/// Unsorted eigenvalues by cyclic Jacobi rotations (row-by-row sweep order).
///
/// Converged when the off-diagonal Frobenius mass is at most `conv_tol` times the
/// Frobenius norm of the input. Returns [`Error::NoConvergence`] after `max_sweeps`.
pub fn jacobi_eigenvalues(
    mat: &RealSymMatrix,
    conv_tol: f64,
    max_sweeps: usize,
) -> Result<Vec<f64>> {
    let n = mat.n;
    let mut a = mat.data.clone();
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i * n + j] != a[j * n + i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = conv_tol * norm;
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i * n + j] * a[i * n + j];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Applies the Jacobi rotation that annihilates `a[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}
