//! Spherical Hecke algebra through the Satake isomorphism.
//!
//! The transform of the double-coset indicator `1_lambda` is
//! `q^{<rho, lambda>} P_lambda(x; q^{-1})` with `P` the Hall-Littlewood
//! polynomial; dually `S([V(lambda)])(mu) = q^{-<rho, mu>} K_{lambda mu}(q^{-1})`.

mod kostka;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Field, MultiLaurent, Scalar};
use crate::error::{Error, Result};
use crate::repring::{sym_algebra_piece, GradedRep};
use crate::rootdata::{Coweight, GroupData};

pub use kostka::{charge, kostka_foulkes, reading_word, semistandard_tableaux};

/// Integer combination of irreducible classes `[V(lambda)]`, keyed by highest weight.
pub type ClassExpansion = BTreeMap<Coweight, i64>;

/// Finitely supported bi-`K`-invariant function, keyed by dominant coweights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SphericalElement {
    values: BTreeMap<Coweight, Scalar>,
}

impl SphericalElement {
    pub fn zero() -> Self {
        SphericalElement { values: BTreeMap::new() }
    }

    pub fn unit(rank: usize) -> Self {
        Self::indicator(Coweight::zero(rank))
    }

    pub fn indicator(lambda: Coweight) -> Self {
        let mut f = Self::zero();
        f.add_term(lambda, &Scalar::one());
        f
    }

    pub fn add_term(&mut self, lambda: Coweight, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.values.entry(lambda).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.values.retain(|_, v| !v.is_zero());
        }
    }

    pub fn value(&self, lambda: &Coweight) -> Scalar {
        self.values.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Scalar)> {
        self.values.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Coweight> {
        self.values.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &SphericalElement) -> SphericalElement {
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SphericalElement {
        let mut out = Self::zero();
        for (k, v) in &self.values {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// Restriction to coweights of degree `d`.
    pub fn degree_part(&self, g: &GroupData, d: i64) -> SphericalElement {
        SphericalElement {
            values: self
                .values
                .iter()
                .filter(|(k, _)| g.chi_degree(k) == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    fn check(&self, g: &GroupData) -> Result<()> {
        for k in self.values.keys() {
            g.check_rank(k)?;
            if !g.is_dominant(k) {
                return Err(Error::NotDominant);
            }
        }
        Ok(())
    }
}

impl fmt::Display for SphericalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})*1{k}")?;
        }
        Ok(())
    }
}

/// Diagonal entries of a semisimple class in the dual torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParameter(Vec<Scalar>);

impl SatakeParameter {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::InvalidInput("Satake parameter entries must be nonzero".into()));
        }
        Ok(SatakeParameter(entries))
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    /// `alpha^mu`.
    pub fn eval_weight(&self, mu: &Coweight) -> Scalar {
        self.0.iter().zip(mu.entries()).fold(Scalar::one(), |acc, (a, &k)| acc * a.pow(k))
    }

    /// Trace on a representation with the given weights.
    pub fn trace(&self, c: &crate::repring::Character) -> Scalar {
        c.weights().fold(Scalar::zero(), |acc, (mu, m)| acc + self.eval_weight(mu) * Scalar::from(m))
    }
}

/// `v_lambda(t) = prod over equal-entry blocks of prod_{j=1..m} (1 - t^j) / (1 - t)`.
fn block_poincare(entries: &[i64], t: &Scalar) -> Scalar {
    let mut out = Scalar::one();
    let mut i = 0;
    while i < entries.len() {
        let mut m = 1;
        while i + m < entries.len() && entries[i + m] == entries[i] {
            m += 1;
        }
        for j in 1..=m as i64 {
            // (1 - t^j) / (1 - t) = 1 + t + ... + t^{j-1}
            let mut s = Scalar::zero();
            for k in 0..j {
                s += &t.pow(k);
            }
            out *= &s;
        }
        i += m;
    }
    out
}

fn gl_block(lambda: &Coweight, g: &GroupData) -> Vec<i64> {
    lambda.entries()[..g.gl_rank()].to_vec()
}

/// `q^{<rho, lambda>}` with `rho` the half sum of positive roots.
pub fn rho_power(lambda: &Coweight, g: &GroupData, field: &Field) -> Scalar {
    field.q_half_power(g.two_delta_pairing(lambda))
}

/// Hall-Littlewood `P_lambda(x; t)` on the `GL(n)` block, times `x^lambda` on the torus block.
pub fn hall_littlewood(lambda: &Coweight, g: &GroupData, t: &Scalar) -> Result<MultiLaurent> {
    g.check_rank(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let rank = g.rank();
    let n = g.gl_rank();
    let mut tail = alloc::vec![0; rank];
    tail[n..].copy_from_slice(&lambda.entries()[n..]);
    if n == 0 {
        return Ok(MultiLaurent::monomial(tail, Scalar::one()));
    }
    let block = gl_block(lambda, g);
    let shift = block[n - 1];
    for x in &mut tail[..n] {
        *x = shift;
    }
    let mut head = alloc::vec![0; rank];
    for i in 0..n {
        head[i] = block[i] - shift;
    }
    let var = |i: usize| {
        let mut e = alloc::vec![0; rank];
        e[i] = 1;
        MultiLaurent::monomial(e, Scalar::one())
    };
    let mut kernel = MultiLaurent::monomial(head, Scalar::one());
    let mut vandermonde = MultiLaurent::one(rank);
    for i in 0..n {
        for j in i + 1..n {
            kernel = &kernel * &(&var(i) - &var(j).scale(t));
            vandermonde = &vandermonde * &(&var(i) - &var(j));
        }
    }
    let mut alternant = MultiLaurent::zero();
    for perm in g.weyl_group() {
        let term = kernel.permute(&perm);
        alternant = if permutation_sign(&perm) > 0 { &alternant + &term } else { &alternant - &term };
    }
    let symmetric = alternant
        .exact_div(&vandermonde)
        .ok_or(Error::RelationViolated("alternant not divisible by the Vandermonde"))?;
    let norm = block_poincare(&block, t).inv().ok_or(Error::DivisionByZero)?;
    Ok(symmetric.scale(&norm).shift(&tail))
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Satake transform as a Weyl-symmetric Laurent polynomial on the dual torus.
pub fn satake_transform(f: &SphericalElement, g: &GroupData, field: &Field) -> Result<MultiLaurent> {
    f.check(g)?;
    let t = field.q_power(-1);
    let mut out = MultiLaurent::zero();
    for (lambda, c) in f.terms() {
        let p = hall_littlewood(lambda, g, &t)?;
        out = &out + &p.scale(&(c * &rho_power(lambda, g, field)));
    }
    Ok(out)
}

/// Inverse Satake transform: peel off the lexicographically largest exponent,
/// which is dominant and is the leading monomial of the matching `P_mu`.
pub fn inverse_satake(p: &MultiLaurent, g: &GroupData, field: &Field) -> Result<SphericalElement> {
    let t = field.q_power(-1);
    let mut rest = p.clone();
    let mut out = SphericalElement::zero();
    while let Some((e, c)) = rest.leading() {
        let mu = Coweight::new(e.clone());
        if !g.is_dominant(&mu) {
            return Err(Error::InvalidInput("polynomial is not Weyl-symmetric".into()));
        }
        let c = c.clone();
        let hl = hall_littlewood(&mu, g, &t)?;
        rest = &rest - &hl.scale(&c);
        let value = c * rho_power(&mu, g, field).inv().unwrap();
        out.add_term(mu, &value);
    }
    Ok(out)
}

/// Scale each `[V(lambda)]` by `sgn(lambda)`.
pub fn eps_twist(c: &ClassExpansion, g: &GroupData) -> ClassExpansion {
    c.iter().map(|(lambda, m)| (lambda.clone(), m * g.sgn_value(lambda))).collect()
}

/// `S(c)` for a combination of irreducible classes.
pub fn satake_of_class(c: &ClassExpansion, g: &GroupData, field: &Field) -> Result<SphericalElement> {
    let t = field.q_power(-1);
    let n = g.gl_rank();
    let mut out = SphericalElement::zero();
    for (lambda, &m) in c {
        g.check_rank(lambda)?;
        if !g.is_dominant(lambda) {
            return Err(Error::NotDominant);
        }
        let shift = if n > 0 { lambda[n - 1] } else { 0 };
        let partition = |v: &Coweight| -> Vec<usize> {
            v.entries()[..n].iter().map(|&x| (x - shift) as usize).collect()
        };
        let lam = partition(lambda);
        for mu in g.dominant_below(lambda) {
            let k = kostka_foulkes(&lam, &partition(&mu)).eval(&t);
            if k.is_zero() {
                continue;
            }
            let value = k * rho_power(&mu, g, field).inv().unwrap() * Scalar::from(m);
            out.add_term(mu, &value);
        }
    }
    Ok(out)
}

/// `|K varpi^lambda K / K| = q^{<2 rho, lambda>} W(q^{-1}) / W_lambda(q^{-1})`.
pub fn coset_volume(lambda: &Coweight, g: &GroupData, field: &Field) -> Result<Scalar> {
    g.check_rank(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let t = field.q_power(-1);
    let n = g.gl_rank();
    let whole = block_poincare(&alloc::vec![0; n], &t);
    let ratio = whole.checked_div(&block_poincare(&gl_block(lambda, g), &t))?;
    Ok(field.q_power(g.two_delta_pairing(lambda)) * ratio)
}

/// Zonal spherical function `omega_lambda(alpha)`, normalized by `omega_0 = 1`.
pub fn spherical_value(
    lambda: &Coweight,
    alpha: &SatakeParameter,
    g: &GroupData,
    field: &Field,
) -> Result<Scalar> {
    if alpha.entries().len() != g.rank() {
        return Err(Error::RankMismatch { expected: g.rank(), found: alpha.entries().len() });
    }
    let p = hall_littlewood(lambda, g, &field.q_power(-1))?;
    let vol = coset_volume(lambda, g, field)?;
    (p.eval(alpha.entries()) * rho_power(lambda, g, field)).checked_div(&vol)
}

/// `sum_lambda f(lambda) vol(lambda) omega_lambda(alpha)`.
pub fn satake_eigenvalue(
    f: &SphericalElement,
    alpha: &SatakeParameter,
    g: &GroupData,
    field: &Field,
) -> Result<Scalar> {
    f.check(g)?;
    let mut acc = Scalar::zero();
    for (lambda, c) in f.terms() {
        let vol = coset_volume(lambda, g, field)?;
        acc += &(c * &vol * spherical_value(lambda, alpha, g, field)?);
    }
    Ok(acc)
}

/// Convolution, computed by multiplying Satake transforms.
pub fn spherical_convolve(
    f: &SphericalElement,
    h: &SphericalElement,
    g: &GroupData,
    field: &Field,
) -> Result<SphericalElement> {
    let prod = &satake_transform(f, g, field)? * &satake_transform(h, g, field)?;
    inverse_satake(&prod, g, field)
}

/// `f_{rho, d} = S(eps [Sym(V)_d])`.
pub fn basic_function(rho: &GradedRep, d: i64, g: &GroupData, field: &Field) -> Result<SphericalElement> {
    let piece = sym_algebra_piece(rho, d)?;
    let classes = piece.decompose(g)?;
    satake_of_class(&eps_twist(&classes, g), g, field)
}

/// The graded family `d -> f_{rho, d}` attached to a positive representation.
#[derive(Clone, Debug)]
pub struct BasicFunction {
    rho: GradedRep,
    group: GroupData,
    field: Field,
}

impl BasicFunction {
    pub fn new(rho: GradedRep, group: GroupData, field: Field) -> Result<Self> {
        if !crate::repring::check_positivity(&rho) {
            return Err(Error::GradingNotPositive);
        }
        Ok(BasicFunction { rho, group, field })
    }

    pub fn rho(&self) -> &GradedRep {
        &self.rho
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self, d: i64) -> Result<SphericalElement> {
        basic_function(&self.rho, d, &self.group, &self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repring::{irreducible_character, Character};
    use alloc::vec;

    fn cw<const N: usize>(v: [i64; N]) -> Coweight {
        Coweight::from(v)
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn class(lambda: Coweight) -> ClassExpansion {
        BTreeMap::from([(lambda, 1)])
    }

    #[test]
    fn hall_littlewood_gl2() {
        let g = GroupData::gl(2).unwrap();
        let t = Scalar::from_fraction(1, 3);
        // P_{(1,0)} = x1 + x2 and P_{(1,1)} = x1 x2
        let p = hall_littlewood(&cw([1, 0]), &g, &t).unwrap();
        assert_eq!(p.eval(&[s(2), s(5)]), s(7));
        let p = hall_littlewood(&cw([1, 1]), &g, &t).unwrap();
        assert_eq!(p.eval(&[s(2), s(5)]), s(10));
        // P_{(2,0)} = x1^2 + x2^2 + (1 - t) x1 x2
        let p = hall_littlewood(&cw([2, 0]), &g, &t).unwrap();
        assert_eq!(p.eval(&[s(2), s(5)]), s(29) + s(10) * Scalar::from_fraction(2, 3));
    }

    #[test]
    fn torus_satake_is_identity() {
        let g = GroupData::torus(2, vec![1, 1]).unwrap();
        let field = Field::from_integer(3).unwrap();
        let f = satake_of_class(&class(cw([2, -1])), &g, &field).unwrap();
        assert_eq!(f, SphericalElement::indicator(cw([2, -1])));
    }

    #[test]
    fn gl2_satake_values() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(4).unwrap();
        let f = satake_of_class(&class(cw([1, 0])), &g, &field).unwrap();
        assert_eq!(f, SphericalElement::indicator(cw([1, 0])).scale(&Scalar::from_fraction(1, 2)));
        let f = satake_of_class(&class(cw([2, 0])), &g, &field).unwrap();
        assert_eq!(f.support().count(), 2);
        assert_eq!(f.value(&cw([1, 1])), Scalar::from_fraction(1, 4));
        assert_eq!(f.value(&cw([2, 0])), Scalar::from_fraction(1, 4));
    }

    #[test]
    fn eps_examples() {
        let g2 = GroupData::gl(2).unwrap();
        assert_eq!(eps_twist(&class(cw([1, 0])), &g2), BTreeMap::from([(cw([1, 0]), -1)]));
        assert_eq!(eps_twist(&class(cw([1, 1])), &g2), class(cw([1, 1])));
        let g3 = GroupData::gl(3).unwrap();
        assert_eq!(eps_twist(&class(cw([2, 0, 0])), &g3), class(cw([2, 0, 0])));
    }

    #[test]
    fn coset_volumes() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(3).unwrap();
        assert_eq!(coset_volume(&cw([0, 0]), &g, &field).unwrap(), s(1));
        assert_eq!(coset_volume(&cw([1, 0]), &g, &field).unwrap(), s(4));
        assert_eq!(coset_volume(&cw([2, 0]), &g, &field).unwrap(), s(12));
        let g3 = GroupData::gl(3).unwrap();
        // (q^3 - 1)/(q - 1) = 13 points of P^2(F_3)
        assert_eq!(coset_volume(&cw([1, 0, 0]), &g3, &field).unwrap(), s(13));
    }

    #[test]
    fn spherical_value_closed_form() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(2).unwrap();
        let (a, b) = (Scalar::from_fraction(3, 7), s(-5));
        let alpha = SatakeParameter::new(vec![a.clone(), b.clone()]).unwrap();
        let v = spherical_value(&cw([1, 0]), &alpha, &g, &field).unwrap();
        let expected = (&a + &b) * (field.sqrt_q() * (s(1) + Scalar::from_fraction(1, 2))).inv().unwrap();
        assert_eq!(v, expected);
        assert_eq!(spherical_value(&cw([0, 0]), &alpha, &g, &field).unwrap(), s(1));
    }

    #[test]
    fn eigenvalue_of_standard_class() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(5).unwrap();
        let alpha = SatakeParameter::new(vec![s(2), s(7)]).unwrap();
        let f = satake_of_class(&class(cw([1, 0])), &g, &field).unwrap();
        assert_eq!(satake_eigenvalue(&f, &alpha, &g, &field).unwrap(), s(9));
        let ff = spherical_convolve(&f, &f, &g, &field).unwrap();
        assert_eq!(satake_eigenvalue(&ff, &alpha, &g, &field).unwrap(), s(81));
        let sum = satake_of_class(&BTreeMap::from([(cw([2, 0]), 1), (cw([1, 1]), 1)]), &g, &field).unwrap();
        assert_eq!(ff, sum);
    }

    #[test]
    fn basic_function_gl2_standard() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(3).unwrap();
        let std = GradedRep::new(irreducible_character(&cw([1, 0]), &g).unwrap(), &g).unwrap();
        assert_eq!(basic_function(&std, 0, &g, &field).unwrap(), SphericalElement::unit(2));
        let f1 = basic_function(&std, 1, &g, &field).unwrap();
        assert_eq!(f1.value(&cw([1, 0])), -field.q_half_power(-1));
        let f2 = basic_function(&std, 2, &g, &field).unwrap();
        assert_eq!(f2.value(&cw([1, 1])), field.q_power(-1));
        assert_eq!(f2.value(&cw([2, 0])), field.q_power(-1));
        let bad = GradedRep::new(Character::trivial(2), &g).unwrap();
        assert_eq!(basic_function(&bad, 1, &g, &field), Err(Error::GradingNotPositive));
    }

    #[test]
    fn symbolic_root_of_q() {
        let g = GroupData::gl(2).unwrap();
        let field = Field::from_integer(2).unwrap();
        let f = satake_of_class(&class(cw([1, 0])), &g, &field).unwrap();
        assert!(!f.value(&cw([1, 0])).is_rational());
        let alpha = SatakeParameter::new(vec![s(1), s(3)]).unwrap();
        assert_eq!(satake_eigenvalue(&f, &alpha, &g, &field).unwrap(), s(4));
    }
}
