use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Laurent polynomial in `x_1..x_n`, keyed by exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiLaurent {
    terms: BTreeMap<Vec<i64>, Scalar>,
}

impl MultiLaurent {
    pub fn zero() -> Self {
        MultiLaurent { terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i64>, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &c);
        p
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(alloc::vec![0; nvars], c)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i64>, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiLaurent { terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        MultiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitute `x_i -> x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for (i, &p) in perm.iter().enumerate() {
                ne[p] = e[i];
            }
            out.add_term(ne, c);
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, k) in point.iter().zip(e) {
                if *k != 0 {
                    term *= &x.pow(*k);
                }
            }
            acc += &term;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &MultiLaurent) -> Option<MultiLaurent> {
        let (dlead, dc) = divisor.leading()?;
        let dlead = dlead.clone();
        let dc_inv = dc.inv().unwrap();
        let dmin = divisor.terms.keys().next().unwrap().clone();
        let floor: Vec<i64> = match self.terms.keys().next() {
            None => return Some(Self::zero()),
            Some(m) => m.iter().zip(&dmin).map(|(a, b)| a - b).collect(),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let qe: Vec<i64> = e.iter().zip(&dlead).map(|(a, b)| a - b).collect();
            if qe < floor {
                return None;
            }
            let qc = c * &dc_inv;
            let step = divisor.shift(&qe).scale(&qc);
            quot.add_term(qe, &qc);
            rem = &rem - &step;
        }
        Some(quot)
    }
}

impl<'a> Add<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Mul<&'a MultiLaurent> for &'a MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = MultiLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl MultiLaurent {
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn x(i: usize, n: usize) -> MultiLaurent {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiLaurent::monomial(e, Scalar::one())
    }

    #[test]
    fn exact_division_by_vandermonde() {
        let n = 3;
        let d = &(&(&x(0, n) - &x(1, n)) * &(&x(0, n) - &x(2, n))) * &(&x(1, n) - &x(2, n));
        let f = &(&x(0, n) + &x(2, n)) * &d;
        assert_eq!(f.exact_div(&d).unwrap(), &x(0, n) + &x(2, n));
        assert!(x(0, n).exact_div(&d).is_none());
    }

    #[test]
    fn permute_swaps_variables() {
        let p = &x(0, 2) * &x(0, 2);
        assert_eq!(p.permute(&[1, 0]), &x(1, 2) * &x(1, 2));
    }
}
