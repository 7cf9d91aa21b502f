//! Exact characteristic polynomials over big integers (Faddeev–LeVerrier) and exact
//! integer-root multiplicities.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::IntSymMatrix;

/// Polynomial with exact integer coefficients, stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero high-order coefficients are trimmed; the zero polynomial is `[]`.
    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x - r`.
    pub fn linear(r: i64) -> Self {
        Self::from_ascending(vec![BigInt::from(-r), BigInt::one()])
    }

    /// `prod (x - r)^k` over the given `(r, k)` pairs.
    pub fn from_integer_roots(roots: &[(i64, usize)]) -> Self {
        roots.iter().fold(Self::one(), |acc, &(r, k)| {
            (0..k).fold(acc, |acc, _| &acc * &Self::linear(r))
        })
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation in `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact evaluation at an integer.
    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Synthetic division by `x - r`: returns `(quotient, remainder)`.
    pub fn div_linear(&self, r: i64) -> (IntPolynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (self.clone(), BigInt::zero());
        }
        let r = BigInt::from(r);
        let mut quotient = vec![BigInt::zero(); self.coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for k in (0..self.coeffs.len()).rev() {
            let next = &self.coeffs[k] + &carry * &r;
            if k == 0 {
                return (Self::from_ascending(quotient), next);
            }
            quotient[k - 1] = next.clone();
            carry = next;
        }
        unreachable!()
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_ascending(out)
    }
}

/// Renders as `x^3 - 3x - 2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// JSON form: coefficients as decimal strings, highest degree first.
#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    coefficients: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialRepr {
            coefficients: self.coeffs.iter().rev().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolynomialRepr::deserialize(d)?;
        let coeffs = repr
            .coefficients
            .iter()
            .rev()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_ascending(coeffs))
    }
}

/// Exact `det(xI - M)` by the Faddeev–LeVerrier recurrence.
///
/// With `N_1 = I`: `c_{n-k} = -tr(M N_k) / k` and `N_{k+1} = M N_k + c_{n-k} I`. Every
/// division is exact over the integers.
pub fn charpoly_exact(mat: &IntSymMatrix) -> IntPolynomial {
    let n = mat.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc: Vec<BigInt> = (0..n * n)
        .map(|k| BigInt::from(u8::from(k / n == k % n)))
        .collect();
    let mut product = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // product = M * acc
        for i in 0..n {
            let row = mat.row(i);
            for j in 0..n {
                let mut s = BigInt::zero();
                for (l, &m_il) in row.iter().enumerate() {
                    if m_il != 0 {
                        s += &acc[l * n + j] * m_il;
                    }
                }
                product[i * n + j] = s;
            }
        }
        let trace: BigInt = (0..n).map(|i| &product[i * n + i]).sum();
        let c = -trace / BigInt::from(k);
        for i in 0..n {
            product[i * n + i] += &c;
        }
        coeffs[n - k] = c;
        std::mem::swap(&mut acc, &mut product);
    }
    IntPolynomial::from_ascending(coeffs)
}

/// Largest `k` such that `(x - r)^k` divides `p` exactly. The zero polynomial returns 0.
pub fn integer_root_multiplicity(p: &IntPolynomial, r: i64) -> usize {
    let mut p = p.clone();
    let mut k = 0;
    while p.degree().is_some_and(|d| d > 0) {
        let (q, rem) = p.div_linear(r);
        if !rem.is_zero() {
            break;
        }
        p = q;
        k += 1;
    }
    k
}
