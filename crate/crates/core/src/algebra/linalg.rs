//! Dense exact linear algebra over [`Scalar`].

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Row-major square or rectangular matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Scalar::zero(), |acc, j| acc + self.get(i, j) * &v[j]))
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| (0..self.rows).fold(Scalar::zero(), |acc, i| acc + &v[i] * self.get(i, j)))
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a.get(col, col).inv().unwrap();
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &(&f * inv.get(col, j));
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(p, row);
            let inv = self.get(row, col).inv().unwrap();
            for j in 0..self.cols {
                let x = self.get(row, j) * &inv;
                self.set(row, j, x);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let f = self.get(r, col).clone();
                for j in 0..self.cols {
                    let x = self.get(r, j) - &(&f * self.get(row, j));
                    self.set(r, j, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = rhs`, free variables set to zero; `None` if inconsistent.
    #[allow(clippy::needless_range_loop)]
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let x = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, x);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_integer(x)).collect()).collect(),
        )
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kernel_of_jordan_block() {
        let e = m(&[&[0, 0], &[1, 0]]);
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], alloc::vec![Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[Scalar::from_integer(1), Scalar::from_integer(3)]).is_none());
        let x = a.solve(&[Scalar::from_integer(1), Scalar::from_integer(2)]).unwrap();
        assert_eq!(a.apply(&x), alloc::vec![Scalar::from_integer(1), Scalar::from_integer(2)]);
    }
}
