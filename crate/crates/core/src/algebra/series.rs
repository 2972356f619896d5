use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::scalar::Scalar;

/// Truncated power series `c_0 + c_1 t + ... + c_N t^N`; nothing is claimed past `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Scalar>,
}

impl PowerSeries {
    /// Series with coefficients `c_0..=c_N`; the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: alloc::vec![Scalar::zero(); order + 1] }
    }

    /// Truncation of a polynomial (negative exponents are rejected).
    pub fn from_polynomial(p: &LaurentPoly, order: usize) -> Self {
        assert!(p.is_polynomial());
        PowerSeries { coeffs: (0..=order as i64).map(|k| p.coeff(k)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        PowerSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(Scalar::zero(), |acc, j| acc + &self.coeffs[j] * &other.coeffs[k - j])
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Product with a polynomial; the result keeps this series' truncation order.
    pub fn mul_polynomial(&self, p: &LaurentPoly) -> PowerSeries {
        self.mul(&PowerSeries::from_polynomial(p, self.order()))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = LaurentPoly::from_coeffs(self.coeffs.iter().cloned());
        write!(f, "{p} + O(t^{})", self.order() + 1)
    }
}
