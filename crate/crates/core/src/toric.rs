//! Pushforwards along `p: G_m^n -> T`, `(x_i) -> prod lambda_i(x_i)`, on the
//! unramified slice `T(F)/T(O) = Lambda`.
//!
//! With `vol(O^x) = 1` the pushforward of `1_{O^n}` is the vector partition
//! function of the weights.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::rootdata::{Coweight, GroupData};
use crate::satake::SphericalElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricData {
    rank: usize,
    weights: Vec<Coweight>,
    chi: Vec<i64>,
}

impl ToricData {
    pub fn new(rank: usize, weights: Vec<Coweight>, chi: Vec<i64>) -> Result<Self> {
        if chi.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: chi.len() });
        }
        if let Some(w) = weights.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch { expected: rank, found: w.rank() });
        }
        Ok(ToricData { rank, weights, chi })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Coweight] {
        &self.weights
    }

    pub fn chi(&self) -> &[i64] {
        &self.chi
    }

    pub fn group(&self) -> Result<GroupData> {
        GroupData::torus(self.rank, self.chi.clone())
    }

    /// `<chi, lambda_i>` for each weight.
    pub fn degrees(&self) -> Vec<i64> {
        self.weights.iter().map(|w| w.dot(&self.chi)).collect()
    }

    /// The `rank x n` integer matrix whose columns are the weights.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| self.weights.iter().map(|w| w[i]).collect()).collect()
    }
}

/// Smith normal form `U A V = D` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i])
            .take_while(|&x| x != 0)
            .collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithForm {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut d: Vec<Vec<i64>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);
    for k in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the remaining block becomes the pivot
            let pivot = (k..rows)
                .flat_map(|i| (k..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i][j] != 0)
                .min_by_key(|&(i, j)| d[i][j].abs());
            let Some((pi, pj)) = pivot else { return SmithForm { u, d, v } };
            d.swap(k, pi);
            u.swap(k, pi);
            for row in d.iter_mut() {
                row.swap(k, pj);
            }
            for row in v.iter_mut() {
                row.swap(k, pj);
            }
            let p = d[k][k];
            let mut clean = true;
            for i in k + 1..rows {
                let f = d[i][k] / p;
                for j in 0..cols {
                    d[i][j] -= f * d[k][j];
                }
                for j in 0..rows {
                    u[i][j] -= f * u[k][j];
                }
                clean &= d[i][k] == 0;
            }
            for j in k + 1..cols {
                let f = d[k][j] / p;
                for i in 0..rows {
                    d[i][j] -= f * d[i][k];
                }
                for i in 0..cols {
                    v[i][j] -= f * v[i][k];
                }
                clean &= d[k][j] == 0;
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the rest of the block by the pivot
            let bad = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..cols {
                        d[k][j] += d[i][j];
                    }
                    for j in 0..rows {
                        u[k][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if d[k][k] < 0 {
            for j in 0..cols {
                d[k][j] = -d[k][j];
            }
            for j in 0..rows {
                u[k][j] = -u[k][j];
            }
        }
    }
    SmithForm { u, d, v }
}

/// The weights span `Lambda` over `Z`: full rank with all invariant factors `1`.
pub fn is_nondegenerate(d: &ToricData) -> bool {
    let f = smith_normal_form(&d.matrix()).invariant_factors();
    f.len() == d.rank && f.iter().all(|&x| x == 1)
}

fn check_positive(d: &ToricData) -> Result<()> {
    if d.degrees().iter().any(|&x| x <= 0) {
        return Err(Error::GradingNotPositive);
    }
    Ok(())
}

/// All `v in Z_{>=0}^n` with `sum v_i deg_i = total`.
fn compositions(degrees: &[i64], total: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degrees.len());
    fn rec(degrees: &[i64], left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=left / degrees[i] {
            cur.push(k);
            rec(degrees, left - k * degrees[i], cur, out);
            cur.pop();
        }
    }
    if total >= 0 {
        rec(degrees, total, &mut cur, &mut out);
    }
    out
}

fn combine(d: &ToricData, v: &[i64]) -> Coweight {
    d.weights
        .iter()
        .zip(v)
        .fold(Coweight::zero(d.rank), |acc, (w, &k)| &acc + &w.scaled(k))
}

/// `#{v in Z_{>=0}^n : sum v_i lambda_i = mu}` without any surjectivity requirement.
pub fn fibered_pushforward(d: &ToricData, mu: &Coweight) -> Result<u64> {
    check_positive(d)?;
    if mu.rank() != d.rank {
        return Err(Error::RankMismatch { expected: d.rank, found: mu.rank() });
    }
    let total = mu.dot(&d.chi);
    Ok(compositions(&d.degrees(), total).iter().filter(|v| &combine(d, v) == mu).count() as u64)
}

/// Value at `mu` of the pushforward of `1_{O^n}`; requires a surjective `p`.
pub fn pushforward_basic(d: &ToricData, mu: &Coweight) -> Result<u64> {
    if !is_nondegenerate(d) {
        return Err(Error::Degeneracy("weights do not span the lattice; use the fibered description"));
    }
    fibered_pushforward(d, mu)
}

/// Degree-`k` part of the pushforward as a function on `Lambda`.
pub fn toric_basic_function(d: &ToricData, k: i64) -> Result<SphericalElement> {
    check_positive(d)?;
    let mut f = SphericalElement::zero();
    for v in compositions(&d.degrees(), k) {
        f.add_term(combine(d, &v), &Scalar::one());
    }
    Ok(f)
}

/// Image of `mu` in `Lambda / span(lambda_i)`, written as
/// (torsion residues, free coordinates) through the Smith form.
pub fn cokernel_image(form: &SmithForm, mu: &Coweight) -> Vec<i64> {
    let factors = form.invariant_factors();
    let y: Vec<i64> = form.u.iter().map(|row| mu.dot(row)).collect();
    y.iter()
        .enumerate()
        .map(|(i, &x)| if i < factors.len() { x.rem_euclid(factors[i]) } else { x })
        .collect()
}

/// For degenerate data: the support of the basic pushforward has finite image
/// in the cokernel `T''`. Tested by sampling `v` with entries up to `bound`
/// and `2 bound` and requiring the same finite image.
pub fn support_projection_compact(d: &ToricData, bound: u32) -> Result<bool> {
    if is_nondegenerate(d) {
        return Err(Error::InvalidInput("support projection applies only to degenerate data".into()));
    }
    let form = smith_normal_form(&d.matrix());
    let image = |b: i64| -> BTreeSet<Vec<i64>> {
        let n = d.weights.len();
        let mut out = BTreeSet::new();
        let mut v = vec![0i64; n];
        loop {
            out.insert(cokernel_image(&form, &combine(d, &v)));
            let mut i = 0;
            while i < n {
                v[i] += 1;
                if v[i] <= b {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        out
    };
    let b = i64::from(bound.max(1));
    Ok(image(b) == image(2 * b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(rank: usize, weights: &[&[i64]], chi: &[i64]) -> ToricData {
        ToricData::new(rank, weights.iter().map(|w| Coweight::from(*w)).collect(), chi.to_vec()).unwrap()
    }

    #[test]
    fn nondegeneracy() {
        assert!(is_nondegenerate(&data(1, &[&[1]], &[1])));
        assert!(!is_nondegenerate(&data(1, &[&[2]], &[1])));
        assert!(is_nondegenerate(&data(2, &[&[1, 0], &[0, 1], &[1, 1]], &[1, 1])));
        assert!(!is_nondegenerate(&data(2, &[&[1, 1]], &[1, 0])));
    }

    #[test]
    fn smith_form_examples() {
        let f = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(f.invariant_factors(), vec![2, 6, 12]);
        let f = smith_normal_form(&[vec![1], vec![1]]);
        assert_eq!(f.invariant_factors(), vec![1]);
    }

    #[test]
    fn partition_counts() {
        let d = data(1, &[&[1]], &[1]);
        assert_eq!(pushforward_basic(&d, &Coweight::from([3])).unwrap(), 1);
        let d = data(2, &[&[1, 0], &[0, 1], &[1, 1]], &[1, 1]);
        assert_eq!(pushforward_basic(&d, &Coweight::from([2, 1])).unwrap(), 2);
        assert_eq!(pushforward_basic(&d, &Coweight::from([-1, 0])).unwrap(), 0);
        let bad = data(2, &[&[1, 1]], &[1, 0]);
        assert!(matches!(pushforward_basic(&bad, &Coweight::from([1, 1])), Err(Error::Degeneracy(_))));
        assert_eq!(fibered_pushforward(&bad, &Coweight::from([2, 2])).unwrap(), 1);
    }

    #[test]
    fn support_projection() {
        assert!(support_projection_compact(&data(2, &[&[1, 1]], &[1, 0]), 4).unwrap());
        assert!(support_projection_compact(&data(1, &[&[2]], &[1]), 4).unwrap());
        assert!(support_projection_compact(&data(2, &[&[1, 0], &[0, 1]], &[1, 1]), 4).is_err());
        assert!(support_projection_compact(&data(2, &[&[1, 0], &[2, 0]], &[1, 0]), 3).unwrap());
    }
}
