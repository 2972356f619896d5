//! Exact scalars in `Q(v)` with `v^2 = q`.
//!
//! When `q` is the square of a rational the symbol `v` is replaced by that
//! rational, so every scalar is then an ordinary rational number and the
//! coefficient ring stays a field.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The residue-field size `q`, together with a rational square root when one exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    q: Ratio<i64>,
    root: Option<Ratio<i64>>,
}

fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn big(r: Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Field {
    pub fn new(q: Ratio<i64>) -> Result<Self> {
        if q <= Ratio::zero() {
            return Err(Error::InvalidQ);
        }
        let root = match (exact_sqrt(*q.numer()), exact_sqrt(*q.denom())) {
            (Some(n), Some(d)) => Some(Ratio::new(n, d)),
            _ => None,
        };
        Ok(Field { q, root })
    }

    pub fn from_integer(q: i64) -> Result<Self> {
        Self::new(Ratio::from_integer(q))
    }

    pub fn q_ratio(&self) -> Ratio<i64> {
        self.q
    }

    /// True when `sqrt(q)` is irrational and carried as a formal symbol.
    pub fn is_symbolic(&self) -> bool {
        self.root.is_none()
    }

    pub fn q(&self) -> Scalar {
        Scalar::from_rational(big(self.q))
    }

    /// `v = sqrt(q)`.
    pub fn sqrt_q(&self) -> Scalar {
        match self.root {
            Some(r) => Scalar::from_rational(big(r)),
            None => Scalar {
                rational: BigRational::zero(),
                surd: BigRational::one(),
                radicand: Some(self.q),
            },
        }
    }

    /// `q^k`.
    pub fn q_power(&self, k: i64) -> Scalar {
        self.q().pow(k)
    }

    /// `q^{k/2}`.
    pub fn q_half_power(&self, k: i64) -> Scalar {
        let whole = self.q_power(k.div_euclid(2));
        if k.rem_euclid(2) == 0 {
            whole
        } else {
            whole * self.sqrt_q()
        }
    }
}

/// An element `rational + surd * v` of `Q(v)`.
#[derive(Clone, Debug)]
pub struct Scalar {
    rational: BigRational,
    surd: BigRational,
    radicand: Option<Ratio<i64>>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.rational == other.rational && self.surd == other.surd
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn from_rational(r: BigRational) -> Self {
        Scalar { rational: r, surd: BigRational::zero(), radicand: None }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_fraction(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rational)
    }

    fn normalize(mut self) -> Self {
        if self.surd.is_zero() {
            self.radicand = None;
        }
        self
    }

    fn join(a: Option<Ratio<i64>>, b: Option<Ratio<i64>>) -> Option<Ratio<i64>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "scalars over different radicands");
                Some(x)
            }
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self.radicand {
            None => Some(Scalar::from_rational(self.rational.recip())),
            Some(q) => {
                let norm = &self.rational * &self.rational - &self.surd * &self.surd * big(q);
                Some(
                    Scalar {
                        rational: &self.rational / &norm,
                        surd: -(&self.surd / &norm),
                        radicand: self.radicand,
                    }
                    .normalize(),
                )
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        other.inv().map(|i| self * &i).ok_or(Error::DivisionByZero)
    }

    /// Integer power; negative exponents of zero panic.
    pub fn pow(&self, k: i64) -> Scalar {
        let base = if k < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_rational(BigRational::one())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rational: &self.rational + &rhs.rational,
            surd: &self.surd + &rhs.surd,
            radicand: Scalar::join(self.radicand, rhs.radicand),
        }
        .normalize()
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rational: &self.rational - &rhs.rational,
            surd: &self.surd - &rhs.surd,
            radicand: Scalar::join(self.radicand, rhs.radicand),
        }
        .normalize()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let radicand = Scalar::join(self.radicand, rhs.radicand);
        let mut rational = &self.rational * &rhs.rational;
        if let Some(q) = radicand {
            if !self.surd.is_zero() && !rhs.surd.is_zero() {
                rational += &self.surd * &rhs.surd * big(q);
            }
        }
        Scalar {
            rational,
            surd: &self.rational * &rhs.surd + &self.surd * &rhs.rational,
            radicand,
        }
        .normalize()
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rational: -self.rational, surd: -self.surd, radicand: self.radicand }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

/// Exact text form: `3/2`, `-v`, `1/2 - 3/4*v`. The symbol `v` stands for `sqrt(q)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rational);
        }
        let mag = self.surd.abs();
        let surd = if mag.is_one() { String::from("v") } else { alloc::format!("{mag}*v") };
        if self.rational.is_zero() {
            if self.surd.is_negative() {
                write!(f, "-{surd}")
            } else {
                f.write_str(&surd)
            }
        } else {
            let sign = if self.surd.is_negative() { '-' } else { '+' };
            write!(f, "{} {sign} {surd}", self.rational)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_square_root_reduces() {
        let field = Field::from_integer(2).unwrap();
        let v = field.sqrt_q();
        assert!(field.is_symbolic());
        assert_eq!(&v * &v, Scalar::from_integer(2));
        assert_eq!(field.q_half_power(-1) * field.q_half_power(1), Scalar::one());
        assert_eq!(field.q_half_power(3), Scalar::from_integer(2) * v.clone());
    }

    #[test]
    fn square_q_collapses_to_rationals() {
        let field = Field::from_integer(9).unwrap();
        assert!(!field.is_symbolic());
        assert_eq!(field.q_half_power(-1), Scalar::from_fraction(1, 3));
        let field = Field::new(Ratio::new(4, 9)).unwrap();
        assert_eq!(field.sqrt_q(), Scalar::from_fraction(2, 3));
    }

    #[test]
    fn inverse_in_quadratic_field() {
        let field = Field::from_integer(3).unwrap();
        let x = Scalar::from_integer(1) + field.sqrt_q();
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn rejects_nonpositive_q() {
        assert_eq!(Field::from_integer(0), Err(Error::InvalidQ));
        assert_eq!(Field::from_integer(-4), Err(Error::InvalidQ));
    }

    #[test]
    fn display_forms() {
        let field = Field::from_integer(2).unwrap();
        let v = field.sqrt_q();
        assert_eq!(alloc::format!("{}", Scalar::from_fraction(3, 2)), "3/2");
        assert_eq!(alloc::format!("{}", -v.clone()), "-v");
        let x = Scalar::from_fraction(1, 2) - Scalar::from_fraction(3, 4) * v;
        assert_eq!(alloc::format!("{x}"), "1/2 - 3/4*v");
    }
}
