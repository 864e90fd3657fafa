//! Exact integer polynomials.
//!
//! [`Poly`] carries signed 128-bit coefficients (low degree first, trailing
//! zeros trimmed) so differences of clique polynomials stay representable.
//! Every arithmetic step is checked; overflow surfaces as
//! [`CliqueError::Overflow`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CliqueError, Result};

/// `C(n, k)` with checked arithmetic.
pub fn binomial(n: usize, k: usize) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc
            .checked_mul((n - i) as i128)
            .ok_or(CliqueError::Overflow("binomial"))?
            / (i as i128 + 1);
    }
    Ok(acc)
}

#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i128>", into = "Vec<i128>")]
pub struct Poly(Vec<i128>);

impl From<Vec<i128>> for Poly {
    fn from(v: Vec<i128>) -> Self {
        Poly::new(v)
    }
}

impl From<Poly> for Vec<i128> {
    fn from(p: Poly) -> Self {
        p.0
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<i128>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(c: i128) -> Poly {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: i128, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|k| {
                self.coeff(k)
                    .checked_add(other.coeff(k))
                    .ok_or(CliqueError::Overflow("polynomial addition"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|k| {
                self.coeff(k)
                    .checked_sub(other.coeff(k))
                    .ok_or(CliqueError::Overflow("polynomial subtraction"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                let t = a
                    .checked_mul(b)
                    .ok_or(CliqueError::Overflow("polynomial product"))?;
                out[i + j] = out[i + j]
                    .checked_add(t)
                    .ok_or(CliqueError::Overflow("polynomial product"))?;
            }
        }
        Ok(Poly::new(out))
    }

    pub fn checked_scale(&self, c: i128) -> Result<Poly> {
        self.0
            .iter()
            .map(|&a| {
                a.checked_mul(c)
                    .ok_or(CliqueError::Overflow("polynomial scaling"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    /// The `order`-th formal derivative.
    pub fn derivative(&self, order: usize) -> Result<Poly> {
        self.falling(order, false)
    }

    /// The `order`-th formal derivative divided by `order!`: coefficient
    /// `j` is `C(j + order, order) * a_{j + order}`. Computed without division.
    pub fn normalized_derivative(&self, order: usize) -> Result<Poly> {
        self.falling(order, true)
    }

    fn falling(&self, order: usize, normalized: bool) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(order));
        for (k, &a) in self.0.iter().enumerate().skip(order) {
            let factor = if normalized {
                binomial(k, order)?
            } else {
                falling_factorial(k, order)?
            };
            out.push(
                a.checked_mul(factor)
                    .ok_or(CliqueError::Overflow("derivative"))?,
            );
        }
        Ok(Poly::new(out))
    }

    /// Sum of an iterator of polynomials.
    pub fn checked_sum<'a, I: IntoIterator<Item = &'a Poly>>(items: I) -> Result<Poly> {
        items
            .into_iter()
            .try_fold(Poly::zero(), |acc, p| acc.checked_add(p))
    }

    /// Value at an integer point.
    pub fn eval(&self, x: i128) -> Result<i128> {
        self.0.iter().rev().try_fold(0i128, |acc, &a| {
            acc.checked_mul(x)
                .and_then(|t| t.checked_add(a))
                .ok_or(CliqueError::Overflow("evaluation"))
        })
    }

    /// Space-separated coefficients, low degree first; `0` for the zero polynomial.
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn falling_factorial(k: usize, order: usize) -> Result<i128> {
    (0..order).try_fold(1i128, |acc, i| {
        acc.checked_mul((k - i) as i128)
            .ok_or(CliqueError::Overflow("derivative"))
    })
}

/// Coefficient-vector equality after trimming trailing zeros.
pub fn poly_equal(a: &[i128], b: &[i128]) -> bool {
    let trim = |s: &[i128]| -> usize { s.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1) };
    let (la, lb) = (trim(a), trim(b));
    la == lb && a[..la] == b[..lb]
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Clique polynomial `1 + sum_k c_k x^k`; `coeffs()[0]` is always 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CliquePolynomial {
    coeffs: Vec<u128>,
}

impl CliquePolynomial {
    /// From `[c_1, c_2, ...]`; trailing zero counts are dropped.
    pub fn from_counts(counts: &[u128]) -> CliquePolynomial {
        let mut coeffs = Vec::with_capacity(counts.len() + 1);
        coeffs.push(1);
        coeffs.extend_from_slice(counts);
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CliquePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    /// `c_k`; `c_0 = 1`.
    pub fn count(&self, k: usize) -> u128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// The clique number when built from a graph.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_poly(&self) -> Result<Poly> {
        self.coeffs
            .iter()
            .map(|&c| i128::try_from(c).map_err(|_| CliqueError::Overflow("signed conversion")))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }

    pub fn derivative(&self, order: usize) -> Result<Poly> {
        self.to_poly()?.derivative(order)
    }

    /// `(1/order!) * d^order/dx^order`.
    pub fn normalized_derivative(&self, order: usize) -> Result<Poly> {
        self.to_poly()?.normalized_derivative(order)
    }

    /// `sum_{k=0}^{base} c_k x^(base - k)`, plus the constant 1 when
    /// `include_unit` is set.
    pub fn reverse(&self, base: usize, include_unit: bool) -> Result<Poly> {
        if base < self.degree() {
            return Err(CliqueError::DegreeExceedsBase {
                degree: self.degree(),
                base,
            });
        }
        let mut out = vec![0i128; base + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[base - k] =
                i128::try_from(c).map_err(|_| CliqueError::Overflow("signed conversion"))?;
        }
        if include_unit {
            out[0] = out[0]
                .checked_add(1)
                .ok_or(CliqueError::Overflow("reversal"))?;
        }
        Ok(Poly::new(out))
    }
}
