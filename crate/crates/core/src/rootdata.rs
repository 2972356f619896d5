//! Root data of `GL(n)` (n <= 3), split tori, and their products; finite and
//! extended affine Weyl groups.
//!
//! Coweights of `G` and weights of the dual group share one lattice `Z^rank`:
//! the first `gl_rank` coordinates belong to the `GL(n)` factor, the rest to
//! the torus factor. Dominance is "weakly decreasing on the `GL(n)` block".

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};

/// Integer vector in the (co)weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(v: Vec<i64>) -> Self {
        Coweight(v)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl From<&[i64]> for Coweight {
    fn from(v: &[i64]) -> Self {
        Coweight(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for Coweight {
    fn from(v: [i64; N]) -> Self {
        Coweight(v.to_vec())
    }
}

impl Index<usize> for Coweight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    GeneralLinear(usize),
    Torus(usize),
    GeneralLinearTimesTorus(usize, usize),
}

/// Root datum of a supported split group together with the character `chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    gl_rank: usize,
    torus_rank: usize,
    chi: Vec<i64>,
    simple_coroots: Vec<Coweight>,
    positive_roots: Vec<Coweight>,
}

impl GroupData {
    /// `GL(n)` with `chi = det`.
    pub fn gl(n: usize) -> Result<Self> {
        Self::gl_times_torus(n, 0, vec![1; n])
    }

    pub fn torus(rank: usize, chi: Vec<i64>) -> Result<Self> {
        Self::gl_times_torus(0, rank, chi)
    }

    pub fn gl_times_torus(n: usize, torus_rank: usize, chi: Vec<i64>) -> Result<Self> {
        if n > 3 {
            return Err(Error::Unsupported(format!("GL({n}); only n <= 3 is supported")));
        }
        let rank = n + torus_rank;
        if rank == 0 {
            return Err(Error::Unsupported("group of rank 0".into()));
        }
        if chi.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: chi.len() });
        }
        if chi.iter().all(|&c| c == 0) {
            return Err(Error::InvalidInput("the character chi must be nontrivial".into()));
        }
        let unit = |i: usize| {
            let mut v = vec![0; rank];
            v[i] = 1;
            v
        };
        let root = |i: usize, j: usize| {
            let mut v = unit(i);
            v[j] = -1;
            Coweight(v)
        };
        let simple_coroots = (0..n.saturating_sub(1)).map(|i| root(i, i + 1)).collect();
        let positive_roots =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| root(i, j)).collect();
        let g = GroupData { gl_rank: n, torus_rank, chi, simple_coroots, positive_roots };
        g.check_cartan()?;
        Ok(g)
    }

    fn check_cartan(&self) -> Result<()> {
        let c = self.cartan_matrix();
        for (i, row) in c.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j { a == 2 } else { a <= 0 && (a == 0) == (c[j][i] == 0) };
                if !ok {
                    return Err(Error::RelationViolated("Cartan matrix"));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> GroupKind {
        match (self.gl_rank, self.torus_rank) {
            (n, 0) => GroupKind::GeneralLinear(n),
            (0, r) => GroupKind::Torus(r),
            (n, r) => GroupKind::GeneralLinearTimesTorus(n, r),
        }
    }

    pub fn rank(&self) -> usize {
        self.gl_rank + self.torus_rank
    }

    pub fn gl_rank(&self) -> usize {
        self.gl_rank
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn chi(&self) -> &[i64] {
        &self.chi
    }

    pub fn simple_coroots(&self) -> &[Coweight] {
        &self.simple_coroots
    }

    /// Simple roots; the `GL(n)` root datum is self-dual in these coordinates.
    pub fn simple_roots(&self) -> &[Coweight] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[Coweight] {
        &self.positive_roots
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots()
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| a.dot(&c.0)).collect())
            .collect()
    }

    /// Sum of the positive roots.
    pub fn two_delta(&self) -> Coweight {
        self.positive_roots.iter().fold(Coweight::zero(self.rank()), |acc, a| &acc + a)
    }

    pub fn check_rank(&self, c: &Coweight) -> Result<()> {
        if c.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: c.rank() });
        }
        Ok(())
    }

    pub fn is_dominant(&self, c: &Coweight) -> bool {
        c.0[..self.gl_rank].windows(2).all(|w| w[0] >= w[1])
    }

    pub fn dominant_representative(&self, c: &Coweight) -> Coweight {
        let mut v = c.0.clone();
        v[..self.gl_rank].sort_unstable_by(|a, b| b.cmp(a));
        Coweight(v)
    }

    /// `<chi, lambda>`.
    pub fn chi_degree(&self, c: &Coweight) -> i64 {
        c.dot(&self.chi)
    }

    /// `<2 delta, lambda>`.
    pub fn two_delta_pairing(&self, c: &Coweight) -> i64 {
        c.dot(&self.two_delta().0)
    }

    /// `(-1)^{<2 delta, lambda>}`.
    pub fn sgn_value(&self, c: &Coweight) -> i64 {
        if self.two_delta_pairing(c).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// True iff `lambda - mu` is a nonnegative integer combination of simple coroots.
    pub fn dominance_leq(&self, mu: &Coweight, lambda: &Coweight) -> Result<bool> {
        self.check_rank(mu)?;
        self.check_rank(lambda)?;
        if !self.is_dominant(mu) || !self.is_dominant(lambda) {
            return Err(Error::NotDominant);
        }
        Ok(self.root_cone_contains(&(lambda - mu)))
    }

    /// Whether `v` lies in the nonnegative span of the simple coroots.
    pub fn root_cone_contains(&self, v: &Coweight) -> bool {
        let n = self.gl_rank;
        if v.0[n..].iter().any(|&x| x != 0) {
            return false;
        }
        let mut partial = 0;
        for (i, x) in v.0[..n].iter().enumerate() {
            partial += x;
            if partial < 0 || (i + 1 == n && partial != 0) {
                return false;
            }
        }
        true
    }

    /// All permutations of the `GL(n)` block, as permutations of the full lattice.
    pub fn weyl_group(&self) -> Vec<Vec<usize>> {
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..self.gl_rank).collect();
        permutations(&mut current, 0, &mut perms);
        perms
            .into_iter()
            .map(|mut p| {
                p.extend(self.gl_rank..self.rank());
                p
            })
            .collect()
    }

    pub fn weyl_orbit(&self, c: &Coweight) -> BTreeSet<Coweight> {
        self.weyl_group().iter().map(|p| act(p, c)).collect()
    }

    /// Dominant coweights `mu <= lambda` in the dominance order.
    pub fn dominant_below(&self, lambda: &Coweight) -> Vec<Coweight> {
        let n = self.gl_rank;
        if n == 0 {
            return vec![lambda.clone()];
        }
        let lo = lambda.0[n - 1];
        let hi = lambda.0[0];
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(n);
        fill_decreasing(n, lo, hi, &mut buf, &mut |head: &[i64]| {
            let mut v = head.to_vec();
            v.extend_from_slice(&lambda.0[n..]);
            let mu = Coweight(v);
            if self.root_cone_contains(&(lambda - &mu)) {
                out.push(mu);
            }
        });
        out
    }

    /// Weyl dimension of the irreducible dual-group representation with highest weight `lambda`.
    pub fn weyl_dimension(&self, lambda: &Coweight) -> i64 {
        let n = self.gl_rank;
        let mut num: i64 = 1;
        let mut den: i64 = 1;
        for i in 0..n {
            for j in i + 1..n {
                num *= lambda.0[i] - lambda.0[j] + (j - i) as i64;
                den *= (j - i) as i64;
            }
        }
        num / den
    }
}

fn fill_decreasing(n: usize, lo: i64, hi: i64, buf: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if buf.len() == n {
        emit(buf);
        return;
    }
    let top = buf.last().copied().unwrap_or(hi);
    let mut x = top;
    while x >= lo {
        buf.push(x);
        fill_decreasing(n, lo, hi, buf, emit);
        buf.pop();
        x -= 1;
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Apply the permutation `sigma` to a coweight: `(sigma mu)_{sigma(i)} = mu_i`.
pub fn act(sigma: &[usize], mu: &Coweight) -> Coweight {
    let mut out = vec![0; mu.rank()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s] = mu.0[i];
    }
    Coweight(out)
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn invert_perm(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// `t_lambda sigma` in the extended affine Weyl group `Lambda x| W`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtAffineWeylElement {
    translation: Coweight,
    perm: Vec<usize>,
}

impl ExtAffineWeylElement {
    pub fn new(translation: Coweight, perm: Vec<usize>) -> Self {
        assert_eq!(translation.rank(), perm.len());
        ExtAffineWeylElement { translation, perm }
    }

    pub fn identity(rank: usize) -> Self {
        Self::translation(Coweight::zero(rank))
    }

    pub fn translation(lambda: Coweight) -> Self {
        let perm = (0..lambda.rank()).collect();
        ExtAffineWeylElement { translation: lambda, perm }
    }

    pub fn finite(perm: Vec<usize>) -> Self {
        ExtAffineWeylElement { translation: Coweight::zero(perm.len()), perm }
    }

    pub fn translation_part(&self) -> &Coweight {
        &self.translation
    }

    pub fn finite_part(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_finite_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `(t_l s)(t_m u) = t_{l + s(m)} (s u)`.
    pub fn compose(&self, other: &Self) -> Self {
        ExtAffineWeylElement {
            translation: &self.translation + &act(&self.perm, &other.translation),
            perm: compose_perm(&self.perm, &other.perm),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = invert_perm(&self.perm);
        ExtAffineWeylElement { translation: -&act(&inv, &self.translation), perm: inv }
    }

    /// Iwahori-Matsumoto length.
    pub fn length(&self, g: &GroupData) -> u64 {
        let inv = invert_perm(&self.perm);
        let lam = &self.translation.0;
        let n = g.gl_rank();
        let mut total = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let pairing = lam[i] - lam[j];
                let positive_preimage = inv[i] < inv[j];
                total += if positive_preimage {
                    pairing.unsigned_abs()
                } else {
                    (pairing - 1).unsigned_abs()
                };
            }
        }
        total
    }
}

impl fmt::Display for ExtAffineWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.translation)?;
        if !self.is_finite_identity() {
            f.write_str("*[")?;
            for (i, p) in self.perm.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Length of `w`; see [`ExtAffineWeylElement::length`].
pub fn im_length(w: &ExtAffineWeylElement, g: &GroupData) -> u64 {
    w.length(g)
}
