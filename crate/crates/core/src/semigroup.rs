//! From a cone of coweights to a graded representation: dominant part,
//! indecomposables, dominance-maximal elements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::repring::{check_positivity, Character, GradedRep};
use crate::rootdata::{Coweight, GroupData};

/// A cone in `Lambda` cut out by homogeneous equations `a . x = 0` and
/// inequalities `a . x >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeData {
    group: GroupData,
    equations: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
}

impl ConeData {
    pub fn new(group: GroupData, equations: Vec<Vec<i64>>, inequalities: Vec<Vec<i64>>) -> Result<Self> {
        let rank = group.rank();
        if let Some(row) = equations.iter().chain(&inequalities).find(|r| r.len() != rank) {
            return Err(Error::RankMismatch { expected: rank, found: row.len() });
        }
        Ok(ConeData { group, equations, inequalities })
    }

    /// `{(a, b, c) : a + b = n c, a, b, c >= 0}` on `GL(2) x G_m` graded by `c`.
    pub fn symmetric_power_family(n: i64) -> Result<Self> {
        let g = GroupData::gl_times_torus(2, 1, vec![0, 0, 1])?;
        Self::new(
            g,
            vec![vec![1, 1, -n]],
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn contains(&self, x: &Coweight) -> bool {
        self.equations.iter().all(|a| x.dot(a) == 0) && self.inequalities.iter().all(|a| x.dot(a) >= 0)
    }

    /// Membership in the dominant part of the cone.
    pub fn contains_dominant(&self, x: &Coweight) -> bool {
        self.contains(x) && self.group.is_dominant(x)
    }

    /// Cone points with every entry in `[-bound, bound]`.
    pub fn points(&self, bound: i64) -> Vec<Coweight> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut x = vec![-bound; r];
        loop {
            let c = Coweight::new(x.clone());
            if self.contains(&c) {
                out.push(c);
            }
            let mut i = 0;
            while i < r {
                x[i] += 1;
                if x[i] <= bound {
                    break;
                }
                x[i] = -bound;
                i += 1;
            }
            if i == r {
                return out;
            }
        }
    }
}

fn l1(x: &Coweight) -> i64 {
    x.entries().iter().map(|v| v.abs()).sum()
}

/// Indecomposable elements of the cone within `bound`, certified by
/// decomposing every cone point within `2 bound` into them.
pub fn cone_indecomposables(c: &ConeData, bound: u32) -> Result<BTreeSet<Coweight>> {
    let b = i64::from(bound.max(1));
    let zero = Coweight::zero(c.rank());
    let near: BTreeSet<Coweight> = c.points(b).into_iter().filter(|x| *x != zero).collect();
    let gens: BTreeSet<Coweight> = near
        .iter()
        .filter(|x| !near.iter().any(|m| *m != **x && near.contains(&(*x - m))))
        .cloned()
        .collect();
    let mut far = c.points(2 * b);
    far.sort_by_key(l1);
    let mut built: BTreeSet<Coweight> = BTreeSet::from([zero]);
    for x in far {
        let ok = built.contains(&x)
            || gens.iter().any(|g| {
                let rest = &x - g;
                l1(&rest) < l1(&x) && built.contains(&rest)
            });
        if !ok {
            return Err(Error::BoundTooSmall);
        }
        built.insert(x);
    }
    Ok(gens)
}

/// The dominant indecomposables of the cone.
///
/// Indecomposability is tested in the whole cone: inside the dominant part
/// alone `(3, 3, 2)` would be indecomposable for `a + b = 3c`, since both
/// of its splittings into degree-one points use `(1, 2, 1)`.
pub fn indecomposables(c: &ConeData, bound: u32) -> Result<BTreeSet<Coweight>> {
    let g = c.group();
    Ok(cone_indecomposables(c, bound)?.into_iter().filter(|x| g.is_dominant(x)).collect())
}

/// Elements of `s` not strictly below another element in the dominance order.
pub fn s_max(s: &BTreeSet<Coweight>, g: &GroupData) -> Result<BTreeSet<Coweight>> {
    let mut out = BTreeSet::new();
    for x in s {
        let mut maximal = true;
        for y in s {
            if y != x && g.dominance_leq(x, y)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.insert(x.clone());
        }
    }
    Ok(out)
}

/// `sum over S_max of V(lambda)`, graded by `chi`.
pub fn rho_from_cone(c: &ConeData, bound: u32) -> Result<GradedRep> {
    let g = c.group();
    let top = s_max(&indecomposables(c, bound)?, g)?;
    let mut parts = BTreeMap::new();
    for lambda in top {
        parts.insert(lambda, 1);
    }
    let character = Character::from_irreducibles(&parts, g)?;
    let rho = GradedRep::new(character, g)?;
    if !check_positivity(&rho) {
        return Err(Error::GradingNotPositive);
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[[i64; 3]]) -> BTreeSet<Coweight> {
        points.iter().map(|p| Coweight::from(*p)).collect()
    }

    #[test]
    fn symmetric_power_indecomposables() {
        let c = ConeData::symmetric_power_family(3).unwrap();
        assert_eq!(indecomposables(&c, 4).unwrap(), set(&[[3, 0, 1], [2, 1, 1]]));
        let c = ConeData::symmetric_power_family(2).unwrap();
        assert_eq!(indecomposables(&c, 3).unwrap(), set(&[[2, 0, 1], [1, 1, 1]]));
    }

    #[test]
    fn bound_too_small() {
        let c = ConeData::symmetric_power_family(3).unwrap();
        assert_eq!(indecomposables(&c, 1).unwrap_err(), Error::BoundTooSmall);
    }

    #[test]
    fn maximal_elements_and_rho() {
        let c = ConeData::symmetric_power_family(3).unwrap();
        let g = c.group().clone();
        assert_eq!(s_max(&set(&[[3, 0, 1], [2, 1, 1]]), &g).unwrap(), set(&[[3, 0, 1]]));
        let rho = rho_from_cone(&c, 4).unwrap();
        assert_eq!(rho.character().dimension(), 4);
        let g2 = GroupData::gl(2).unwrap();
        let anti: BTreeSet<Coweight> = [Coweight::from([2, 0]), Coweight::from([1, 0])].into();
        assert_eq!(s_max(&anti, &g2).unwrap().len(), 2);
    }

    #[test]
    fn multiplicative_group() {
        let g = GroupData::torus(1, vec![1]).unwrap();
        let c = ConeData::new(g, vec![], vec![vec![1]]).unwrap();
        assert_eq!(indecomposables(&c, 3).unwrap(), [Coweight::from([1])].into());
        let rho = rho_from_cone(&c, 3).unwrap();
        assert_eq!(rho.character(), &Character::weight(Coweight::from([1]), 1));
    }
}
