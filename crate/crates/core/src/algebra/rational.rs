//! Rational functions of `t = q^{-s}`, Padé recognition, and generators of
//! fractional ideals of `C[t, t^{-1}]`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::linalg::Matrix;
use super::scalar::Scalar;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// `numerator / denominator` in lowest terms.
///
/// The denominator is a polynomial with constant term `1`; all powers of `t`
/// live in the (Laurent) numerator. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (dk, den) = den.split_t_power();
        let (nk, num) = num.split_t_power();
        let g = LaurentPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let c = den.coeff(0).inv().expect("denominator constant term vanished after reduction");
        Ok(RationalFunction { num: num.scale(&c).shift(nk - dk), den: den.scale(&c) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).unwrap()
    }

    /// `1 / p`.
    pub fn reciprocal_of(p: LaurentPoly) -> Result<Self> {
        Self::new(LaurentPoly::one(), p)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        Self::new(&self.num * &other.num, &self.den * &other.den).unwrap()
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).unwrap()
    }

    pub fn scale(&self, c: &Scalar) -> RationalFunction {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    pub fn inverse(&self) -> Result<RationalFunction> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// True when the function is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, t: &Scalar) -> Result<Scalar> {
        self.num.eval(t).checked_div(&self.den.eval(t))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Taylor expansion of `r` at `t = 0` through `t^order`.
pub fn series_from_rational(r: &RationalFunction, order: usize) -> Result<PowerSeries> {
    if !r.num.is_polynomial() || r.den.coeff(0).is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let den = r.den.dense();
    let d0_inv = den[0].inv().ok_or(Error::PoleAtOrigin)?;
    let mut inv: Vec<Scalar> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = if k == 0 { Scalar::one() } else { Scalar::zero() };
        for (j, dj) in den.iter().enumerate().skip(1).take(k) {
            acc -= &(dj * &inv[k - j]);
        }
        inv.push(acc * &d0_inv);
    }
    Ok(PowerSeries::new(inv).mul_polynomial(&r.num))
}

/// Recover `P/Q` with `deg P <= num_deg`, `deg Q <= den_deg`, `Q(0) = 1` from a truncated series.
///
/// Tries denominator degrees `0..=den_deg` in turn, solving the Hankel
/// system for `Q` and accepting the first candidate that reproduces every
/// known coefficient.
pub fn recognize_rational(
    s: &PowerSeries,
    num_deg: usize,
    den_deg: usize,
) -> Result<RationalFunction> {
    let needed = num_deg + den_deg + 1;
    if s.order() < needed {
        return Err(Error::InsufficientOrder { needed, available: s.order() });
    }
    let c = |k: isize| if k < 0 { Scalar::zero() } else { s.coeff(k as usize).clone() };
    for m in 0..=den_deg {
        let mut q = Vec::with_capacity(m + 1);
        q.push(Scalar::one());
        if m > 0 {
            // sum_{j=1..m} q_j c_{k-j} = -c_k for k = num_deg+1 ..= num_deg+m
            let rows = (1..=m)
                .map(|i| {
                    let k = (num_deg + i) as isize;
                    (1..=m).map(|j| c(k - j as isize)).collect()
                })
                .collect();
            let rhs: Vec<Scalar> = (1..=m).map(|i| -c((num_deg + i) as isize)).collect();
            match Matrix::from_rows(rows).solve(&rhs) {
                Some(sol) => q.extend(sol),
                None => continue,
            }
        }
        let qpoly = LaurentPoly::from_coeffs(q);
        let prod = s.mul_polynomial(&qpoly);
        if prod.coeffs()[num_deg + 1..].iter().all(Zero::is_zero) {
            let p = LaurentPoly::from_coeffs(prod.coeffs()[..=num_deg].iter().cloned());
            return RationalFunction::new(p, qpoly);
        }
    }
    Err(Error::NotRational)
}

/// Normalized generator of the fractional ideal of `C[t, t^{-1}]` spanned by `fs`.
///
/// Over a common denominator `D` the ideal is generated by `gcd(numerators) / D`;
/// the unit `c t^k` is then fixed so the generator takes the value `1` at `t = 0`.
/// Zero inputs are ignored.
pub fn ideal_generator(fs: &[RationalFunction]) -> Result<RationalFunction> {
    let nonzero: Vec<&RationalFunction> = fs.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut common = LaurentPoly::one();
    for f in &nonzero {
        let g = LaurentPoly::gcd(&common, &f.den);
        common = (&common * &f.den).div_rem(&g).0;
    }
    let mut g = LaurentPoly::zero();
    for f in &nonzero {
        let scaled = &f.num * &common.div_rem(&f.den).0;
        let (_, poly) = scaled.split_t_power();
        g = LaurentPoly::gcd(&g, &poly);
    }
    let r = RationalFunction::new(g, common)?;
    let c = r.num.coeff(0).inv().expect("gcd of t-free polynomials has nonzero constant term");
    Ok(r.scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c.iter().map(|&x| Scalar::from_integer(x)))
    }

    fn ints(s: &PowerSeries) -> Vec<Scalar> {
        s.coeffs().to_vec()
    }

    fn series(c: &[i64]) -> PowerSeries {
        PowerSeries::new(c.iter().map(|&x| Scalar::from_integer(x)).collect())
    }

    #[test]
    fn geometric_series() {
        let r = RationalFunction::reciprocal_of(p(&[1, -1])).unwrap();
        assert_eq!(ints(&series_from_rational(&r, 3).unwrap()), ints(&series(&[1, 1, 1, 1])));
    }

    #[test]
    fn polynomial_series() {
        let r = RationalFunction::from_laurent(p(&[1, -1]));
        assert_eq!(ints(&series_from_rational(&r, 2).unwrap()), ints(&series(&[1, -1, 0])));
    }

    #[test]
    fn partial_fraction_example() {
        // 1/((1-2t)(1-3t)) = sum (3^{n+1} - 2^{n+1}) t^n
        let r = RationalFunction::reciprocal_of(&p(&[1, -2]) * &p(&[1, -3])).unwrap();
        assert_eq!(ints(&series_from_rational(&r, 2).unwrap()), ints(&series(&[1, 5, 19])));
    }

    #[test]
    fn pole_at_origin() {
        let r = RationalFunction::new(LaurentPoly::one(), p(&[0, 1])).unwrap();
        assert_eq!(series_from_rational(&r, 2), Err(Error::PoleAtOrigin));
    }

    #[test]
    fn reduced_form_has_unit_constant_denominator() {
        let r = RationalFunction::new(&p(&[2, -2]) * &p(&[0, 1]), &p(&[3, -3]) * &p(&[1, 4])).unwrap();
        assert_eq!(r.denominator(), &p(&[1, 4]));
        assert_eq!(r.numerator(), &LaurentPoly::monomial(Scalar::from_fraction(2, 3), 1));
    }

    #[test]
    fn recognize_geometric() {
        let r = RationalFunction::reciprocal_of(p(&[1, -2])).unwrap();
        let s = series_from_rational(&r, 4).unwrap();
        assert_eq!(recognize_rational(&s, 0, 1).unwrap(), r);
    }

    #[test]
    fn recognize_fibonacci() {
        let s = series(&[1, 1, 2, 3, 5, 8]);
        let r = recognize_rational(&s, 1, 2).unwrap();
        assert_eq!(r, RationalFunction::reciprocal_of(p(&[1, -1, -1])).unwrap());
        // re-expansion reproduces the input
        assert_eq!(series_from_rational(&r, 5).unwrap(), s);
    }

    #[test]
    fn recognize_rejects_inconsistent_hankel() {
        assert_eq!(recognize_rational(&series(&[1, 1, 1, 2]), 0, 1), Err(Error::NotRational));
    }

    #[test]
    fn recognize_needs_enough_terms() {
        assert!(matches!(
            recognize_rational(&series(&[1, 1]), 1, 1),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn recognize_zero_series() {
        assert!(recognize_rational(&series(&[0, 0, 0, 0]), 1, 1).unwrap().is_zero());
    }

    #[test]
    fn ideal_examples() {
        let l = RationalFunction::reciprocal_of(p(&[1, -1])).unwrap();
        let lt = RationalFunction::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        assert_eq!(ideal_generator(&[l.clone(), lt]).unwrap(), l);

        let f = RationalFunction::from_laurent(p(&[1, -1]));
        assert_eq!(ideal_generator(core::slice::from_ref(&f)).unwrap(), f);

        let a = RationalFunction::reciprocal_of(&p(&[1, -1]) * &p(&[1, -2])).unwrap();
        let b = RationalFunction::new(p(&[1, -1]), p(&[1, -2])).unwrap();
        assert_eq!(ideal_generator(&[a.clone(), b]).unwrap(), a);
    }

    #[test]
    fn ideal_of_zeros() {
        assert_eq!(ideal_generator(&[RationalFunction::zero()]), Err(Error::ZeroIdeal));
        assert_eq!(ideal_generator(&[]), Err(Error::ZeroIdeal));
    }

    #[test]
    fn ideal_ignores_unit_multiples() {
        let l = RationalFunction::reciprocal_of(&p(&[1, 2]) * &p(&[1, 3])).unwrap();
        let scaled = RationalFunction::new(
            LaurentPoly::monomial(Scalar::from_fraction(-7, 2), -3),
            l.denominator().clone(),
        )
        .unwrap();
        assert_eq!(ideal_generator(&[scaled]).unwrap(), l);
    }
}
