//! Exact integer symmetric matrices and the Kronecker product.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::tol::DEFAULT_MAX_DIM;

/// Dense symmetric matrix with exact `i64` entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSymMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntSymMatrix {
    /// Builds a matrix from row-major entries, rejecting non-symmetric input.
    pub fn new(n: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from a function evaluated on the upper triangle (including the
    /// diagonal) and mirrored.
    pub fn from_upper_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_upper_fn(n, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        Self {
            n,
            data: vec![1; n * n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sq(&self) -> i128 {
        self.data
            .iter()
            .map(|&x| i128::from(x) * i128::from(x))
            .sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&x| x * k).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &IntSymMatrix {
    type Output = IntSymMatrix;
    fn add(self, rhs: Self) -> IntSymMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntSymMatrix {
    type Output = IntSymMatrix;
    fn sub(self, rhs: Self) -> IntSymMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &IntSymMatrix {
    type Output = IntSymMatrix;
    fn neg(self) -> IntSymMatrix {
        self.scale(-1)
    }
}

impl fmt::Debug for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntSymMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Kronecker product with the default dimension cap.
pub fn kronecker(a: &IntSymMatrix, b: &IntSymMatrix) -> Result<IntSymMatrix> {
    kronecker_with_cap(a, b, DEFAULT_MAX_DIM)
}

/// Block Kronecker product `a ⊗ b`. Row `(i, u)` of the result has index `i * b.n() + u`.
pub fn kronecker_with_cap(
    a: &IntSymMatrix,
    b: &IntSymMatrix,
    max_dim: usize,
) -> Result<IntSymMatrix> {
    let (na, nb) = (a.n, b.n);
    let n = na
        .checked_mul(nb)
        .filter(|&n| n <= max_dim)
        .ok_or(Error::DimensionOverflow {
            requested: na.saturating_mul(nb),
            max: max_dim,
        })?;
    let mut data = vec![0i64; n * n];
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            if aij == 0 {
                continue;
            }
            for u in 0..nb {
                let row = (i * nb + u) * n + j * nb;
                for (v, &buv) in b.row(u).iter().enumerate() {
                    data[row + v] = aij.checked_mul(buv).ok_or_else(|| {
                        Error::InvalidMatrix("entry overflow in Kronecker product".into())
                    })?;
                }
            }
        }
    }
    Ok(IntSymMatrix { n, data })
}
