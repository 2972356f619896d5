//! Characters of the dual group, tensor and symmetric powers, and the grading
//! by the central cocharacter.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, GroupData};

/// Weight multiplicities; multiplicities may be negative for virtual characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Character {
    mults: BTreeMap<Coweight, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Character { mults: BTreeMap::new() }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::weight(Coweight::zero(rank), 1)
    }

    pub fn weight(mu: Coweight, m: i64) -> Self {
        let mut c = Self::zero();
        c.add_weight(mu, m);
        c
    }

    pub fn from_weights<I: IntoIterator<Item = Coweight>>(weights: I) -> Self {
        let mut c = Self::zero();
        for w in weights {
            c.add_weight(w, 1);
        }
        c
    }

    pub fn add_weight(&mut self, mu: Coweight, m: i64) {
        if m == 0 {
            return;
        }
        match self.mults.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(m);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn mult(&self, mu: &Coweight) -> i64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Coweight, i64)> {
        self.mults.iter().map(|(k, v)| (k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn dimension(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.mults.values().all(|&m| m > 0)
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (k, v) in &other.mults {
            out.add_weight(k.clone(), *v);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Character {
        if k == 0 {
            return Self::zero();
        }
        Character { mults: self.mults.iter().map(|(w, m)| (w.clone(), m * k)).collect() }
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Self::zero();
        for (a, m) in &self.mults {
            for (b, n) in &other.mults {
                out.add_weight(a + b, m * n);
            }
        }
        out
    }

    /// `Psi^k`: every weight multiplied by `k`.
    pub fn adams(&self, k: i64) -> Character {
        let mut out = Self::zero();
        for (w, m) in &self.mults {
            out.add_weight(w.scaled(k), *m);
        }
        out
    }

    pub fn is_weyl_invariant(&self, g: &GroupData) -> bool {
        self.mults
            .iter()
            .all(|(w, m)| g.weyl_orbit(w).iter().all(|v| self.mult(v) == *m))
    }

    /// Expansion in irreducible characters, as highest weight to integer coefficient.
    pub fn decompose(&self, g: &GroupData) -> Result<BTreeMap<Coweight, i64>> {
        if !self.is_weyl_invariant(g) {
            return Err(Error::InvalidInput("character is not Weyl-invariant".into()));
        }
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((top, m)) = rest.mults.iter().next_back().map(|(k, v)| (k.clone(), *v)) {
            let irr = irreducible_character(&top, g)?;
            rest = rest.add(&irr.scale(-m));
            out.insert(top, m);
        }
        Ok(out)
    }

    /// Recombine an expansion in irreducibles.
    pub fn from_irreducibles(parts: &BTreeMap<Coweight, i64>, g: &GroupData) -> Result<Character> {
        let mut out = Self::zero();
        for (lambda, m) in parts {
            out = out.add(&irreducible_character(lambda, g)?.scale(*m));
        }
        Ok(out)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, m)) in self.mults.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}:{m}")?;
        }
        f.write_str("}")
    }
}

/// Freudenthal multiplicity formula, in the form
/// `(lambda - mu, lambda + mu + 2 delta) m(mu) = 2 sum_{alpha > 0, k >= 1} (mu + k alpha, alpha) m(mu + k alpha)`.
pub fn irreducible_character(lambda: &Coweight, g: &GroupData) -> Result<Character> {
    g.check_rank(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let two_delta = g.two_delta();
    let mut dominant = g.dominant_below(lambda);
    dominant.sort_by_key(|mu| height(&(lambda - mu), g.gl_rank()));
    let mut mult: BTreeMap<Coweight, i64> = BTreeMap::new();
    let lookup = |mult: &BTreeMap<Coweight, i64>, nu: &Coweight| -> Option<i64> {
        let d = g.dominant_representative(nu);
        if g.root_cone_contains(&(lambda - &d)) {
            Some(mult.get(&d).copied().unwrap_or(0))
        } else {
            None
        }
    };
    for mu in dominant {
        if &mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let lhs = (lambda - &mu).dot(&(&(lambda + &mu) + &two_delta).0);
        let mut rhs = 0i64;
        for alpha in g.positive_roots() {
            let mut k = 1;
            loop {
                let nu = &mu + &alpha.scaled(k);
                match lookup(&mult, &nu) {
                    Some(m) => rhs += 2 * nu.dot(&alpha.0) * m,
                    None => break,
                }
                k += 1;
            }
        }
        if rhs % lhs != 0 {
            return Err(Error::RelationViolated("Freudenthal recursion"));
        }
        mult.insert(mu, rhs / lhs);
    }
    let mut out = Character::zero();
    for (mu, m) in mult {
        for w in g.weyl_orbit(&mu) {
            out.add_weight(w, m);
        }
    }
    Ok(out)
}

fn height(v: &Coweight, n: usize) -> i64 {
    let mut partial = 0;
    let mut h = 0;
    for x in &v.0[..n] {
        partial += x;
        h += partial;
    }
    h
}

/// Highest-weight decomposition of `a (x) b`.
pub fn tensor_decompose(
    a: &Character,
    b: &Character,
    g: &GroupData,
) -> Result<BTreeMap<Coweight, u64>> {
    if !a.is_genuine() || !b.is_genuine() {
        return Err(Error::VirtualCharacter);
    }
    a.mul(b)
        .decompose(g)?
        .into_iter()
        .map(|(k, m)| u64::try_from(m).map(|m| (k, m)).map_err(|_| Error::VirtualCharacter))
        .collect()
}

/// `Sym^n(V)` via `n Sym^n = sum_{k=1..n} Psi^k(V) Sym^{n-k}`.
pub fn sym_power(v: &Character, n: usize) -> Result<Character> {
    if !v.is_genuine() {
        return Err(Error::VirtualCharacter);
    }
    Ok(sym_powers(v, n).pop().unwrap())
}

/// `[Sym^0 V, ..., Sym^n V]`.
pub fn sym_powers(v: &Character, n: usize) -> Vec<Character> {
    let rank = v.weights().next().map_or(0, |(w, _)| w.rank());
    let mut out = alloc::vec![Character::trivial(rank)];
    let adams: Vec<Character> = (1..=n as i64).map(|k| v.adams(k)).collect();
    for m in 1..=n {
        let mut acc = Character::zero();
        for k in 1..=m {
            acc = acc.add(&adams[k - 1].mul(&out[m - k]));
        }
        let mults = acc.mults.into_iter().map(|(w, x)| (w, x / m as i64)).collect();
        out.push(Character { mults });
    }
    out
}

/// A character together with the grading `mu -> <mu, chi>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRep {
    character: Character,
    chi: Vec<i64>,
}

impl GradedRep {
    pub fn new(character: Character, g: &GroupData) -> Result<Self> {
        for (w, _) in character.weights() {
            g.check_rank(w)?;
        }
        Ok(GradedRep { character, chi: g.chi().to_vec() })
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn degree(&self, mu: &Coweight) -> i64 {
        mu.dot(&self.chi)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.character.weights().map(|(w, _)| self.degree(w)).min()
    }
}

pub fn graded_piece(v: &GradedRep, d: i64) -> Character {
    let mut out = Character::zero();
    for (w, m) in v.character.weights() {
        if v.degree(w) == d {
            out.add_weight(w.clone(), m);
        }
    }
    out
}

/// Every weight has strictly positive degree.
pub fn check_positivity(v: &GradedRep) -> bool {
    v.character.weights().all(|(w, _)| v.degree(w) > 0)
}

/// Degree-`d` part of the symmetric algebra `Sym(V)`.
pub fn sym_algebra_piece(v: &GradedRep, d: i64) -> Result<Character> {
    if !check_positivity(v) {
        return Err(Error::GradingNotPositive);
    }
    if d < 0 {
        return Ok(Character::zero());
    }
    let min = v.min_degree().unwrap_or(1);
    let top = (d / min) as usize;
    let mut out = Character::zero();
    for (n, s) in sym_powers(&v.character, top).into_iter().enumerate() {
        let piece = graded_piece(&GradedRep { character: s, chi: v.chi.clone() }, d);
        if n == 0 && d != 0 {
            continue;
        }
        out = out.add(&piece);
    }
    Ok(out)
}
