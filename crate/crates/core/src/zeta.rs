//! Zeta series in `t = q^{-s}` at spherical and Iwahori level, and the
//! generator of the fractional ideal they span.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{
    ideal_generator, recognize_rational, Field, Matrix, PowerSeries, RationalFunction, Scalar,
};
use crate::error::Result;
use crate::hecke::{HeckeElement, HeckeModule, IwahoriMatrixCoefficient};
use crate::rootdata::GroupData;
use crate::satake::{satake_eigenvalue, BasicFunction, SatakeParameter, SphericalElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    pub series: PowerSeries,
    pub provenance: String,
}

impl ZetaSeries {
    pub fn new(series: PowerSeries, provenance: impl Into<String>) -> Self {
        ZetaSeries { series, provenance: provenance.into() }
    }
}

impl fmt::Display for ZetaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.provenance, self.series)
    }
}

/// `sum_d t^d * (eigenvalue of phi_d on the unramified representation alpha)`.
pub fn spherical_zeta(
    phi: impl Fn(i64) -> Result<SphericalElement>,
    alpha: &SatakeParameter,
    order: usize,
    g: &GroupData,
    field: &Field,
) -> Result<ZetaSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for d in 0..=order as i64 {
        coeffs.push(satake_eigenvalue(&phi(d)?, alpha, g, field)?);
    }
    Ok(ZetaSeries::new(PowerSeries::new(coeffs), "spherical"))
}

pub fn spherical_zeta_of_basic(
    f: &BasicFunction,
    alpha: &SatakeParameter,
    order: usize,
) -> Result<ZetaSeries> {
    let mut z = spherical_zeta(|d| f.degree(d), alpha, order, f.group(), f.field())?;
    z.provenance = String::from("spherical basic function");
    Ok(z)
}

/// `sum_d t^d M(phi_d)`, one matrix per degree.
pub fn iwahori_zeta_matrices(
    phi: impl Fn(i64) -> HeckeElement,
    module: &HeckeModule,
    order: usize,
) -> Result<Vec<Matrix>> {
    (0..=order as i64).map(|d| module.act_element(&phi(d))).collect()
}

/// `sum_d t^d sum_w phi_d(w) <M(T_w) m, m~>`.
///
/// The pairing `<M(T_w) m, m~>` already integrates the matrix coefficient
/// over `I w I`; it equals `q^{l(w)}` times the function value there.
pub fn iwahori_zeta(
    phi: impl Fn(i64) -> HeckeElement,
    c: &IwahoriMatrixCoefficient,
    order: usize,
) -> Result<ZetaSeries> {
    let coeffs = iwahori_zeta_matrices(phi, &c.module, order)?.iter().map(|m| c.pair(m)).collect();
    Ok(ZetaSeries::new(PowerSeries::new(coeffs), format!("Iwahori, {}", c.module.name())))
}

/// Every matrix entry of `sum_d t^d M(x phi_d y)` for `x, y` in the given translates.
pub fn iwahori_zeta_battery(
    phi: impl Fn(i64) -> HeckeElement,
    module: &HeckeModule,
    translates: &[HeckeElement],
    order: usize,
) -> Result<Vec<ZetaSeries>> {
    let base = iwahori_zeta_matrices(phi, module, order)?;
    let mut unit = Vec::from([HeckeElement::unit()]);
    unit.extend(translates.iter().cloned());
    let images: Vec<Matrix> = unit.iter().map(|h| module.act_element(h)).collect::<Result<_>>()?;
    let n = module.dimension();
    let mut out = Vec::new();
    for (xi, x) in images.iter().enumerate() {
        for (yi, y) in images.iter().enumerate() {
            let mats: Vec<Matrix> = base.iter().map(|m| &(x * m) * y).collect();
            for i in 0..n {
                for j in 0..n {
                    let coeffs: Vec<Scalar> = mats.iter().map(|m| m.get(i, j).clone()).collect();
                    if coeffs.iter().all(Zero::is_zero) {
                        continue;
                    }
                    out.push(ZetaSeries::new(
                        PowerSeries::new(coeffs),
                        format!("{}, translates ({xi}, {yi}), entry ({i}, {j})", module.name()),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Recognize every series as a rational function within the bounds, then take the ideal generator.
pub fn zeta_ideal(tests: &[ZetaSeries], num_deg: usize, den_deg: usize) -> Result<RationalFunction> {
    let rationals: Vec<RationalFunction> = tests
        .iter()
        .map(|z| recognize_rational(&z.series, num_deg, den_deg))
        .collect::<Result<_>>()?;
    ideal_generator(&rationals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{series_from_rational, LaurentPoly};
    use crate::hecke::{iwahori_order_basic_function, steinberg_module};
    use crate::repring::Character;
    use crate::rootdata::Coweight;
    use alloc::vec;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    #[test]
    fn unit_gives_constant_series() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(3).unwrap();
        let alpha = SatakeParameter::new(vec![s(2), s(5)]).unwrap();
        let z = spherical_zeta(
            |d| Ok(if d == 0 { SphericalElement::unit(2) } else { SphericalElement::zero() }),
            &alpha,
            3,
            &g,
            &field,
        )
        .unwrap();
        assert_eq!(z.series, PowerSeries::new(vec![s(1), s(0), s(0), s(0)]));
    }

    #[test]
    fn torus_geometric_series() {
        let g = GroupData::torus(1, vec![1]).unwrap();
        let field = Field::from_integer(3).unwrap();
        let rho = crate::repring::GradedRep::new(Character::weight(Coweight::from([1]), 1), &g).unwrap();
        let f = BasicFunction::new(rho, g, field).unwrap();
        let alpha = SatakeParameter::new(vec![s(4)]).unwrap();
        let z = spherical_zeta_of_basic(&f, &alpha, 3).unwrap();
        assert_eq!(z.series, PowerSeries::new(vec![s(1), s(4), s(16), s(64)]));
    }

    #[test]
    fn ideal_of_unit_multiples() {
        let l = RationalFunction::reciprocal_of(
            &LaurentPoly::one_minus(&s(2), 1) * &LaurentPoly::one_minus(&s(3), 1),
        )
        .unwrap();
        let t = RationalFunction::from_laurent(LaurentPoly::monomial(s(1), 1));
        let one_minus_t = RationalFunction::from_laurent(LaurentPoly::one_minus(&s(1), 1));
        let tests: Vec<ZetaSeries> = [RationalFunction::one(), t, one_minus_t]
            .iter()
            .map(|u| ZetaSeries::new(series_from_rational(&l.mul(u), 10).unwrap(), "test"))
            .collect();
        assert_eq!(zeta_ideal(&tests, 3, 3).unwrap(), l);
    }

    #[test]
    fn steinberg_with_iwahori_order() {
        let field = Field::from_integer(4).unwrap();
        let m = steinberg_module(&field, &s(3)).unwrap();
        let c = IwahoriMatrixCoefficient::new(m, vec![s(1)], vec![s(1)]).unwrap();
        let z = iwahori_zeta(|d| iwahori_order_basic_function(&field, d), &c, 4).unwrap();
        let expected = RationalFunction::reciprocal_of(LaurentPoly::one_minus(&Scalar::from_fraction(3, 2), 1))
            .unwrap();
        assert_eq!(z.series, series_from_rational(&expected, 4).unwrap());
    }
}
