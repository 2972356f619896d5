//! Brute-force enumeration over `Z/p^k` used to validate the closed-form
//! coset counts and containment rules.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootdata::{Coweight, ExtAffineWeylElement};

const MAX_ENUMERATION: u64 = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentRecord {
    pub element: ExtAffineWeylElement,
    pub in_mat_o: bool,
    pub in_iwahori_order: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetStatistics {
    pub lambda: Coweight,
    pub level: u32,
    pub prime: u64,
    /// Number of right `K`-cosets in `K varpi^lambda K`.
    pub cosets: u64,
    /// Elements with translation entries in `[-2, 2]`.
    pub containment: Vec<ContainmentRecord>,
}

fn valuation(mut x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Count lattices `p^k O^2 <= L <= O^2` with elementary divisors `(p^a, p^b)`
/// by listing every Hermite normal form `[[p^i, x], [0, p^j]]`, `0 <= x < p^i`.
fn count_lattices(a: u32, b: u32, p: u64, k: u32) -> u64 {
    let (lo, hi) = (a.min(b), a.max(b));
    let mut count = 0;
    for i in 0..=k {
        for j in 0..=k {
            if i + j != lo + hi {
                continue;
            }
            let pi = p.pow(i);
            for x in 0..pi {
                let d1 = i.min(j).min(valuation(x, p, u32::MAX));
                if d1 == lo {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Residues of the Iwahori subgroup mod `p^k`: `a, d` units, `b = 0 mod p`.
fn iwahori_residues(p: u64, k: u32) -> Result<Vec<[u64; 4]>> {
    let m = p.pow(k);
    let size = (m - m / p) * (m - m / p) * (m / p) * m;
    if size > MAX_ENUMERATION {
        return Err(Error::ResourceBound);
    }
    let units: Vec<u64> = (0..m).filter(|x| x % p != 0).collect();
    let mut out = Vec::with_capacity(size as usize);
    for &a in &units {
        for b in (0..m).step_by(p as usize) {
            for c in 0..m {
                for &d in &units {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    Ok(out)
}

/// Monomial matrix of `t_lambda sigma` as `(column of the row-i entry, exponent)`.
fn monomial(w: &ExtAffineWeylElement) -> [(usize, i64); 2] {
    let t = w.translation_part();
    if w.is_finite_identity() {
        [(0, t[0]), (1, t[1])]
    } else {
        [(1, t[0]), (0, t[1])]
    }
}

/// Whether `i w` and `w i` stay integral (and, for the order, keep the
/// upper-right entry in `p O`) for every residue `i` of the Iwahori subgroup.
#[allow(clippy::needless_range_loop)]
fn contained(w: &ExtAffineWeylElement, residues: &[[u64; 4]], p: u64, k: u32, order: bool) -> bool {
    let rows = monomial(w);
    let need = |r: usize, c: usize| if order && r == 0 && c == 1 { 1 } else { 0 };
    for i in residues {
        let m = [[i[0], i[1]], [i[2], i[3]]];
        for r in 0..2 {
            for (inner, &(col, e)) in rows.iter().enumerate() {
                // (i w)_{r, col} = i_{r, inner} p^e
                if valuation(m[r][inner], p, k) as i64 + e < need(r, col) {
                    return false;
                }
                // (w i)_{inner, c} = p^e i_{col, c}
                for c in 0..2 {
                    if valuation(m[col][c], p, k) as i64 + e < need(inner, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn check_prime_level(level: u32, prime: u64) -> Result<()> {
    if ![2, 3, 5, 7].contains(&prime) {
        return Err(Error::InvalidInput("prime must be one of 2, 3, 5, 7".into()));
    }
    if level == 0 || level > 4 {
        return Err(Error::InvalidInput("level must be between 1 and 4".into()));
    }
    Ok(())
}

/// Number of right `K`-cosets in `K varpi^lambda K`, counted as lattices mod `p^level`.
///
/// The level must be at least the spread `lambda_1 - lambda_2`.
pub fn coset_count_oracle(lambda: &Coweight, level: u32, prime: u64) -> Result<u64> {
    if lambda.rank() != 2 {
        return Err(Error::Unsupported("the residue-ring oracle handles GL(2) only".into()));
    }
    check_prime_level(level, prime)?;
    let shift = lambda[0].min(lambda[1]);
    let (a, b) = ((lambda[0] - shift) as u32, (lambda[1] - shift) as u32);
    if a.max(b) > level {
        return Err(Error::InvalidInput("level too small for this coweight".into()));
    }
    Ok(count_lattices(a, b, prime, level))
}

/// Containment of `I w I` in `Mat_2(O)` and in the Iwahori order for every
/// `w` with translation entries in `[-2, 2]`, tested on residues mod `p^level`.
pub fn containment_oracle(level: u32, prime: u64) -> Result<Vec<ContainmentRecord>> {
    check_prime_level(level, prime)?;
    let residues = iwahori_residues(prime, level)?;
    let mut containment = Vec::new();
    for x in -2..=2 {
        for y in -2..=2 {
            for perm in [vec![0, 1], vec![1, 0]] {
                let w = ExtAffineWeylElement::new(Coweight::from([x, y]), perm);
                containment.push(ContainmentRecord {
                    in_mat_o: contained(&w, &residues, prime, level, false),
                    in_iwahori_order: contained(&w, &residues, prime, level, true),
                    element: w,
                });
            }
        }
    }
    Ok(containment)
}

/// Both oracles at one level.
pub fn residue_ring_oracle(lambda: &Coweight, level: u32, prime: u64) -> Result<CosetStatistics> {
    let cosets = coset_count_oracle(lambda, level, prime)?;
    let containment = containment_oracle(level, prime)?;
    Ok(CosetStatistics { lambda: lambda.clone(), level, prime, cosets, containment })
}
