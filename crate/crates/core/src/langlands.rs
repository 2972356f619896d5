//! L-factors of tamely ramified unipotent Langlands parameters `(s, e)` via
//! the determinant of `s` on the invariants `V^e`.
//!
//! Frobenius is arithmetic here, so compatibility reads `Ad(s) e = q^{-1} e`.
//! The nilpotent `e` acts on the standard representation as the lower shift
//! inside each Jordan block: `e_j -> e_{j+1}`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{
    series_from_rational, Field, LaurentPoly, Matrix, PowerSeries, RationalFunction, Scalar,
};
use crate::error::{Error, Result};
use crate::repring::{Character, GradedRep};
use crate::rootdata::{Coweight, GroupData};
use crate::satake::SatakeParameter;

/// A representation of the dual group given by explicit matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Standard representation of the `GL(n)` block.
    Standard,
    /// `Sym^k` of the standard representation of the `GL(n)` block.
    Sym(usize),
    /// A representation known only through its weights; the nilpotent must be zero.
    Weights(Character),
    /// Tensor product with a character of the whole torus.
    Twist(Box<Realization>, Coweight),
    DirectSum(Vec<Realization>),
}

impl Realization {
    /// Basis weights, in the order used by [`Realization::nilpotent_matrix`].
    pub fn basis(&self, g: &GroupData) -> Result<Vec<Coweight>> {
        let n = g.gl_rank();
        let rank = g.rank();
        Ok(match self {
            Realization::Standard => (0..n)
                .map(|i| {
                    let mut v = vec![0; rank];
                    v[i] = 1;
                    Coweight(v)
                })
                .collect(),
            Realization::Sym(k) => monomials(n, *k)
                .into_iter()
                .map(|mut m| {
                    m.resize(rank, 0);
                    Coweight(m)
                })
                .collect(),
            Realization::Weights(c) => {
                let mut out = Vec::new();
                for (w, m) in c.weights() {
                    g.check_rank(w)?;
                    if m < 0 {
                        return Err(Error::VirtualCharacter);
                    }
                    out.extend(core::iter::repeat_n(w.clone(), m as usize));
                }
                out
            }
            Realization::Twist(base, chi) => {
                g.check_rank(chi)?;
                base.basis(g)?.iter().map(|w| w + chi).collect()
            }
            Realization::DirectSum(parts) => {
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.basis(g)?);
                }
                out
            }
        })
    }

    pub fn character(&self, g: &GroupData) -> Result<Character> {
        Ok(Character::from_weights(self.basis(g)?))
    }

    pub fn graded(&self, g: &GroupData) -> Result<GradedRep> {
        GradedRep::new(self.character(g)?, g)
    }

    /// Matrix of `rho(e)` in the basis of [`Realization::basis`].
    pub fn nilpotent_matrix(&self, jordan: &JordanType, g: &GroupData) -> Result<Matrix> {
        let n = g.gl_rank();
        let next = jordan.successor_map();
        Ok(match self {
            Realization::Standard => {
                let mut m = Matrix::zeros(n, n);
                for (j, nj) in next.iter().enumerate() {
                    if let Some(k) = nj {
                        m.set(*k, j, Scalar::one());
                    }
                }
                m
            }
            Realization::Sym(k) => {
                let basis = monomials(n, *k);
                let index: BTreeMap<&Vec<i64>, usize> =
                    basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
                let mut m = Matrix::zeros(basis.len(), basis.len());
                for (col, mono) in basis.iter().enumerate() {
                    for (j, nj) in next.iter().enumerate() {
                        let (Some(k), true) = (nj, mono[j] > 0) else { continue };
                        let mut image = mono.clone();
                        image[j] -= 1;
                        image[*k] += 1;
                        let row = index[&image];
                        let x = m.get(row, col) + &Scalar::from(mono[j]);
                        m.set(row, col, x);
                    }
                }
                m
            }
            Realization::Weights(c) => {
                if !jordan.is_zero() {
                    return Err(Error::Unsupported(
                        "a nonzero nilpotent needs an explicit matrix realization".into(),
                    ));
                }
                let d = c.dimension() as usize;
                Matrix::zeros(d, d)
            }
            Realization::Twist(base, _) => base.nilpotent_matrix(jordan, g)?,
            Realization::DirectSum(parts) => {
                let blocks: Vec<Matrix> =
                    parts.iter().map(|p| p.nilpotent_matrix(jordan, g)).collect::<Result<_>>()?;
                let total = blocks.iter().map(Matrix::rows).sum();
                let mut m = Matrix::zeros(total, total);
                let mut off = 0;
                for b in blocks {
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m.set(off + i, off + j, b.get(i, j).clone());
                        }
                    }
                    off += b.rows();
                }
                m
            }
        })
    }
}

fn monomials(n: usize, k: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in monomials(n - 1, k - first) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

/// Jordan type of the nilpotent on the standard representation of the `GL(n)` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanType(Vec<usize>);

impl JordanType {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::InvalidInput("Jordan blocks must have positive size".into()));
        }
        Ok(JordanType(blocks))
    }

    pub fn zero(n: usize) -> Self {
        JordanType(vec![1; n])
    }

    pub fn regular(n: usize) -> Self {
        JordanType(if n == 0 { Vec::new() } else { vec![n] })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 1)
    }

    /// `e(e_j) = e_{next[j]}`, or zero.
    fn successor_map(&self) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for &b in &self.0 {
            for i in 0..b {
                out.push(if i + 1 < b { Some(start + i + 1) } else { None });
            }
            start += b;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanglandsParameter {
    semisimple: SatakeParameter,
    nilpotent: JordanType,
    sgn_twisted: bool,
}

impl LanglandsParameter {
    pub fn new(
        semisimple: SatakeParameter,
        nilpotent: JordanType,
        sgn_twisted: bool,
        g: &GroupData,
        field: &Field,
    ) -> Result<Self> {
        if semisimple.entries().len() != g.rank() {
            return Err(Error::RankMismatch { expected: g.rank(), found: semisimple.entries().len() });
        }
        if nilpotent.size() != g.gl_rank() {
            return Err(Error::RankMismatch { expected: g.gl_rank(), found: nilpotent.size() });
        }
        let s = semisimple.entries();
        let q_inv = field.q_power(-1);
        for (j, nj) in nilpotent.successor_map().iter().enumerate() {
            if let Some(k) = nj {
                if s[*k] != &s[j] * &q_inv {
                    return Err(Error::IncompatibleParameter);
                }
            }
        }
        Ok(LanglandsParameter { semisimple, nilpotent, sgn_twisted })
    }

    pub fn unramified(s: SatakeParameter, g: &GroupData, field: &Field) -> Result<Self> {
        Self::new(s, JordanType::zero(g.gl_rank()), false, g, field)
    }

    /// Steinberg-type parameter of `GL(2)` with `s = (-c q^{1/2}, -c q^{-1/2})`.
    pub fn steinberg_gl2(central: &Scalar, field: &Field) -> Result<Self> {
        let g = GroupData::gl(2)?;
        let s = SatakeParameter::new(vec![
            -(central * &field.q_half_power(1)),
            -(central * &field.q_half_power(-1)),
        ])?;
        Self::new(s, JordanType::regular(2), false, &g, field)
    }

    pub fn with_sgn_twist(mut self, twisted: bool) -> Self {
        self.sgn_twisted = twisted;
        self
    }

    pub fn semisimple(&self) -> &SatakeParameter {
        &self.semisimple
    }

    pub fn nilpotent(&self) -> &JordanType {
        &self.nilpotent
    }

    pub fn sgn_twisted(&self) -> bool {
        self.sgn_twisted
    }

    /// `s`, multiplied by the central element `(-1)^{2 delta}` when twisted by `sgn`.
    pub fn effective_semisimple(&self, g: &GroupData) -> Vec<Scalar> {
        let rank = g.rank();
        self.semisimple
            .entries()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut unit = vec![0; rank];
                unit[i] = 1;
                if self.sgn_twisted && g.sgn_value(&Coweight(unit)) < 0 {
                    -a
                } else {
                    a.clone()
                }
            })
            .collect()
    }
}

/// An eigenvalue of `s` on `V^e` with its degree and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantEigenvalue {
    pub eigenvalue: Scalar,
    pub degree: i64,
    pub multiplicity: usize,
}

/// Eigenvalues of `s` on `ker rho(e)`, computed one `s`-eigenspace at a time.
pub fn nilpotent_invariants(
    p: &LanglandsParameter,
    rho: &Realization,
    g: &GroupData,
) -> Result<Vec<InvariantEigenvalue>> {
    let basis = rho.basis(g)?;
    let e = rho.nilpotent_matrix(&p.nilpotent, g)?;
    let s = p.effective_semisimple(g);
    let eigen = |mu: &Coweight| {
        s.iter().zip(mu.entries()).fold(Scalar::one(), |acc, (a, &k)| acc * a.pow(k))
    };
    let mut groups: Vec<(Scalar, i64, Vec<usize>)> = Vec::new();
    for (i, mu) in basis.iter().enumerate() {
        let (value, degree) = (eigen(mu), g.chi_degree(mu));
        match groups.iter_mut().find(|(v, d, _)| *v == value && *d == degree) {
            Some(entry) => entry.2.push(i),
            None => groups.push((value, degree, vec![i])),
        }
    }
    let mut out = Vec::new();
    for (value, degree, cols) in groups {
        if value.is_zero() {
            return Err(Error::SingularSemisimple);
        }
        let mut block = Matrix::zeros(e.rows(), cols.len());
        for (c, &j) in cols.iter().enumerate() {
            for r in 0..e.rows() {
                block.set(r, c, e.get(r, j).clone());
            }
        }
        let dim = cols.len() - block.rank();
        if dim > 0 {
            out.push(InvariantEigenvalue { eigenvalue: value, degree, multiplicity: dim });
        }
    }
    Ok(out)
}

/// `1 / P(t)` with `P(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LFactor {
    inverse_denominator: LaurentPoly,
    value: RationalFunction,
}

impl LFactor {
    pub fn from_polynomial(p: LaurentPoly) -> Result<Self> {
        let value = RationalFunction::reciprocal_of(p.clone())?;
        Ok(LFactor { inverse_denominator: p, value })
    }

    /// The polynomial `P` with `L = 1 / P`.
    pub fn polynomial(&self) -> &LaurentPoly {
        &self.inverse_denominator
    }

    pub fn as_rational(&self) -> &RationalFunction {
        &self.value
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        series_from_rational(&self.value, order)
    }

    pub fn mul(&self, other: &LFactor) -> LFactor {
        let p = &self.inverse_denominator * &other.inverse_denominator;
        LFactor { value: self.value.mul(&other.value), inverse_denominator: p }
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1 / ({})", self.inverse_denominator)
    }
}

/// `det(1 - t^d s | V^e)` over the invariant eigenvalues.
pub fn invariant_determinant(eigen: &[InvariantEigenvalue]) -> LaurentPoly {
    let mut p = LaurentPoly::one();
    for ev in eigen {
        let factor = LaurentPoly::one_minus(&ev.eigenvalue, ev.degree);
        for _ in 0..ev.multiplicity {
            p = &p * &factor;
        }
    }
    p
}

pub fn l_factor(p: &LanglandsParameter, rho: &Realization, g: &GroupData) -> Result<LFactor> {
    LFactor::from_polynomial(invariant_determinant(&nilpotent_invariants(p, rho, g)?))
}

/// Whether `series * det(1 - t^d s | V^e)` is a polynomial of degree at most
/// half the truncation order.
pub fn koszul_certificate(
    series: &PowerSeries,
    p: &LanglandsParameter,
    rho: &Realization,
    g: &GroupData,
) -> Result<bool> {
    let det = invariant_determinant(&nilpotent_invariants(p, rho, g)?);
    if !det.is_polynomial() {
        return Err(Error::GradingNotPositive);
    }
    let span = det.degree().unwrap_or(0) as usize;
    let needed = 2 * span + 2;
    if series.order() < needed {
        return Err(Error::InsufficientOrder { needed, available: series.order() });
    }
    let product = series.mul_polynomial(&det);
    let cutoff = series.order() / 2;
    Ok(product.coeffs()[cutoff + 1..].iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn poly(c: &[Scalar]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c.iter().cloned())
    }

    #[test]
    fn invariants_of_zero_and_regular() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(4).unwrap();
        let p = LanglandsParameter::unramified(SatakeParameter::new(vec![s(2), s(3)]).unwrap(), &g, &field)
            .unwrap();
        assert_eq!(nilpotent_invariants(&p, &Realization::Standard, &g).unwrap().len(), 2);
        let st = LanglandsParameter::steinberg_gl2(&s(1), &field).unwrap();
        let inv = nilpotent_invariants(&st, &Realization::Standard, &g).unwrap();
        assert_eq!(inv, vec![InvariantEigenvalue {
            eigenvalue: Scalar::from_fraction(-1, 2),
            degree: 1,
            multiplicity: 1
        }]);
        let inv = nilpotent_invariants(&st, &Realization::Sym(2), &g).unwrap();
        assert_eq!(inv.iter().map(|e| e.multiplicity).sum::<usize>(), 1);
    }

    #[test]
    fn l_factor_examples() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(4).unwrap();
        let p = LanglandsParameter::unramified(SatakeParameter::new(vec![s(2), s(3)]).unwrap(), &g, &field)
            .unwrap();
        let l = l_factor(&p, &Realization::Standard, &g).unwrap();
        assert_eq!(l.polynomial(), &poly(&[s(1), s(-5), s(6)]));
        let twisted = l_factor(&p.clone().with_sgn_twist(true), &Realization::Standard, &g).unwrap();
        assert_eq!(twisted.polynomial(), &poly(&[s(1), s(5), s(6)]));

        let t = GroupData::torus(1, vec![2]).unwrap();
        let a = SatakeParameter::new(vec![s(3)]).unwrap();
        let p = LanglandsParameter::unramified(a, &t, &field).unwrap();
        let rho = Realization::Weights(Character::weight(Coweight::from([1]), 1));
        let l = l_factor(&p, &rho, &t).unwrap();
        assert_eq!(l.polynomial(), &LaurentPoly::one_minus(&s(3), 2));
    }

    #[test]
    fn steinberg_l_factor() {
        let field = Field::from_integer(4).unwrap();
        let g = GroupData::gl(2).unwrap();
        let st = LanglandsParameter::steinberg_gl2(&s(3), &field).unwrap();
        let l = l_factor(&st, &Realization::Standard, &g).unwrap();
        assert_eq!(l.polynomial(), &LaurentPoly::one_minus(&Scalar::from_fraction(-3, 2), 1));
    }

    #[test]
    fn compatibility_is_enforced() {
        let field = Field::from_integer(4).unwrap();
        let g = GroupData::gl(2).unwrap();
        let bad = SatakeParameter::new(vec![s(1), s(1)]).unwrap();
        assert_eq!(
            LanglandsParameter::new(bad, JordanType::regular(2), false, &g, &field),
            Err(Error::IncompatibleParameter)
        );
    }

    #[test]
    fn koszul_examples() {
        let field = Field::from_integer(4).unwrap();
        let g = GroupData::gl(2).unwrap();
        let p = LanglandsParameter::unramified(SatakeParameter::new(vec![s(2), s(3)]).unwrap(), &g, &field)
            .unwrap();
        let l = l_factor(&p, &Realization::Standard, &g).unwrap();
        let series = l.series(8).unwrap();
        assert!(koszul_certificate(&series, &p, &Realization::Standard, &g).unwrap());
        let shifted = series.mul_polynomial(&poly(&[s(1), s(1)]));
        assert!(koszul_certificate(&shifted, &p, &Realization::Standard, &g).unwrap());
        let other = LFactor::from_polynomial(LaurentPoly::one_minus(&s(7), 1)).unwrap().series(8).unwrap();
        assert!(!koszul_certificate(&other, &p, &Realization::Standard, &g).unwrap());
        assert!(matches!(
            koszul_certificate(&series.truncate(4), &p, &Realization::Standard, &g),
            Err(Error::InsufficientOrder { .. })
        ));
    }
}
