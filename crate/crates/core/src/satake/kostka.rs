//! Kostka-Foulkes polynomials by the charge statistic on semistandard tableaux.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::algebra::{LaurentPoly, Scalar};

/// Semistandard tableaux of shape `shape` and content `content`, as rows of letters `1..`.
pub fn semistandard_tableaux(shape: &[usize], content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let cells: usize = shape.iter().sum();
    if cells != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut left = content.to_vec();
    let mut out = Vec::new();
    fill(shape, &mut rows, &mut left, 0, &mut out);
    out
}

fn fill(
    shape: &[usize],
    rows: &mut Vec<Vec<usize>>,
    left: &mut Vec<usize>,
    row: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if row == shape.len() {
        out.push(rows.clone());
        return;
    }
    if rows[row].len() == shape[row] {
        fill(shape, rows, left, row + 1, out);
        return;
    }
    let col = rows[row].len();
    let min_row = rows[row].last().copied().unwrap_or(1);
    let min_col = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    for letter in min_row.max(min_col)..=left.len() {
        if left[letter - 1] == 0 {
            continue;
        }
        left[letter - 1] -= 1;
        rows[row].push(letter);
        fill(shape, rows, left, row, out);
        rows[row].pop();
        left[letter - 1] += 1;
    }
}

/// Reading word: rows from the bottom one up, each read left to right.
pub fn reading_word(tableau: &[Vec<usize>]) -> Vec<usize> {
    tableau.iter().rev().flatten().copied().collect()
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> u64 {
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0u64;
    while remaining > 0 {
        let mut pos = n;
        let mut index = 0u64;
        let mut letter = 1;
        loop {
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let found = match left {
                Some(i) => Some(i),
                None => {
                    let wrapped = (pos..n).rev().find(|&i| !used[i] && word[i] == letter);
                    if wrapped.is_some() && letter > 1 {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(i) = found else { break };
            used[i] = true;
            remaining -= 1;
            total += index;
            pos = i;
            letter += 1;
        }
    }
    total
}

/// `K_{lambda mu}(t)` for partitions of equal size (trailing zeros allowed).
pub fn kostka_foulkes(lambda: &[usize], mu: &[usize]) -> LaurentPoly {
    let shape: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
    let content: Vec<usize> = mu.iter().copied().filter(|&x| x > 0).collect();
    let mut out = LaurentPoly::zero();
    for t in semistandard_tableaux(&shape, &content) {
        out.add_term(charge(&reading_word(&t)) as i64, &Scalar::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c.iter().map(|&x| Scalar::from_integer(x)))
    }

    #[test]
    fn small_values() {
        assert_eq!(kostka_foulkes(&[2], &[1, 1]), poly(&[0, 1]));
        assert_eq!(kostka_foulkes(&[1, 1], &[1, 1]), poly(&[1]));
        assert_eq!(kostka_foulkes(&[2, 1], &[1, 1, 1]), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes(&[2, 2], &[1, 1, 1, 1]), poly(&[0, 0, 1, 0, 1]));
        assert_eq!(kostka_foulkes(&[3, 1], &[2, 2]), poly(&[0, 1]));
        assert!(kostka_foulkes(&[1, 1], &[2]).is_zero());
    }

    #[test]
    fn one_row_is_t_to_n_mu() {
        for mu in [[3usize, 1, 0], [2, 2, 0], [2, 1, 1], [4, 0, 0]] {
            let n_mu: usize = mu.iter().enumerate().map(|(i, m)| i * m).sum();
            assert_eq!(kostka_foulkes(&[4], &mu), LaurentPoly::monomial(Scalar::one(), n_mu as i64));
        }
    }

    #[test]
    fn tableau_count_is_kostka_number() {
        assert_eq!(semistandard_tableaux(&[2, 1], &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&[3, 2, 1], &[2, 2, 2]).len(), 2);
    }
}
