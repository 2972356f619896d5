use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// A Laurent polynomial in `t` with exact coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &c);
        p
    }

    /// Polynomial from coefficients `c_0, c_1, ...`.
    pub fn from_coeffs<I: IntoIterator<Item = Scalar>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as i64, &c);
        }
        p
    }

    /// `1 - a t^d`.
    pub fn one_minus(a: &Scalar, d: i64) -> Self {
        let mut p = Self::one();
        p.add_term(d, &-a);
        p
    }

    pub fn add_term(&mut self, exp: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    /// Highest exponent present.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent present.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn is_polynomial(&self) -> bool {
        self.low_degree().is_none_or(|d| d >= 0)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, (e, c)| acc + c * &t.pow(*e))
    }

    /// Coefficients `c_0..=c_deg` of a polynomial; panics on negative exponents.
    pub fn dense(&self) -> Vec<Scalar> {
        assert!(self.is_polynomial(), "dense form of a Laurent polynomial with negative exponents");
        let deg = self.degree().unwrap_or(-1);
        (0..=deg).map(|k| self.coeff(k)).collect()
    }

    /// Euclidean division of polynomials: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(self.is_polynomial() && divisor.is_polynomial());
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) * &lead_inv;
            let step = divisor.shift(rd - dd).scale(&c);
            quot.add_term(rd - dd, &c);
            rem = &rem - &step;
        }
        (quot, rem)
    }

    /// Monic greatest common divisor of two polynomials (zero when both are zero).
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn monic(&self) -> LaurentPoly {
        match self.leading_coeff() {
            None => LaurentPoly::zero(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// Split off the lowest power of `t`: `self = t^k * rest` with `rest(0) != 0`.
    pub fn split_t_power(&self) -> (i64, LaurentPoly) {
        match self.low_degree() {
            None => (0, LaurentPoly::zero()),
            Some(k) => (k, self.shift(-k)),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let text = alloc::format!("{c}");
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if c.is_rational() => (true, alloc::string::String::from(rest)),
                _ => (false, text),
            };
            let body = if !c.is_rational() { alloc::format!("({body})") } else { body };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = body == "1";
            match *e {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        write!(f, "{body}*")?;
                    }
                    if *e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c.iter().map(|&x| Scalar::from_integer(x)))
    }

    #[test]
    fn gcd_of_products() {
        let a = &p(&[1, -1]) * &p(&[1, -2]);
        let b = &p(&[1, -1]) * &p(&[3, 1]);
        let g = LaurentPoly::gcd(&a, &b);
        assert_eq!(g, p(&[1, -1]).monic());
    }

    #[test]
    fn division_is_exact_on_multiples() {
        let a = &p(&[2, 0, 1]) * &p(&[1, 5]);
        let (q, r) = a.div_rem(&p(&[1, 5]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[2, 0, 1]));
    }

    #[test]
    fn no_zero_terms_stored() {
        let a = &p(&[1, 1]) - &p(&[0, 1]);
        assert_eq!(a, LaurentPoly::one());
        assert_eq!(a.degree(), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", p(&[1, -2, 1])), "1 - 2*t + t^2");
        assert_eq!(format!("{}", LaurentPoly::monomial(Scalar::from_integer(-1), -1)), "-t^-1");
    }
}
