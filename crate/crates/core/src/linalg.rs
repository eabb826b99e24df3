//! Dense linear algebra over the rationals.
//!
//! Matrices here are small (weight spaces of a truncated Fock space), so a
//! plain `Vec<Vec<Rational>>` with Gauss–Jordan elimination is enough.

use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for k in c..self.cols {
                let v = self.get(r, k) * &inv;
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for k in c..self.cols {
                    let v = self.get(i, k) - &f * self.get(r, k);
                    self.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space `{x : A x = 0}`, one vector per free
    /// column, with a unit entry at that column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = -m.get(r, f).clone();
                }
                x
            })
            .collect()
    }

    /// Some solution of `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, br.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &pivot;
                for k in c..n {
                    let v = m.get(i, k) - &f * m.get(c, k);
                    m.set(i, k, v);
                }
            }
        }
        det
    }

    pub fn leading_principal_minors(&self) -> Vec<Rational> {
        (1..=self.rows)
            .map(|k| {
                let sub = Matrix::from_rows(
                    (0..k).map(|r| self.row(r)[..k].to_vec()).collect(),
                );
                sub.determinant()
            })
            .collect()
    }

    /// Exact positive-semidefiniteness test for a symmetric matrix, by
    /// symmetric Gaussian elimination: a zero pivot forces its whole row to
    /// vanish, a negative pivot is a witness of indefiniteness.
    pub fn is_positive_semidefinite(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            // Prefer a strictly positive diagonal pivot.
            let pick = active.iter().copied().find(|&i| m.get(i, i).is_positive());
            let Some(p) = pick else {
                // No positive pivot left: the remaining block must be zero.
                return active
                    .iter()
                    .all(|&i| active.iter().all(|&j| m.get(i, j).is_zero()));
            };
            let pivot = m.get(p, p).clone();
            let others: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
            for &i in &others {
                if m.get(i, p).is_zero() {
                    continue;
                }
                let f = m.get(i, p) / &pivot;
                for &j in &others {
                    let v = m.get(i, j) - &f * m.get(p, j);
                    m.set(i, j, v);
                }
            }
            active = others;
        }
        true
    }
}

/// Dot product of two coefficient vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for x in &ns {
            for r in 0..a.rows() {
                assert!(dot(a.row(r), x).is_zero());
            }
        }
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(a.determinant(), int(5));
        let x = a.solve(&[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[int(1), int(2)]).is_none());
    }

    #[test]
    fn psd_detection() {
        assert!(m(&[&[1, 1], &[1, 1]]).is_positive_semidefinite());
        assert!(m(&[&[0, 0], &[0, 2]]).is_positive_semidefinite());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_positive_semidefinite());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_semidefinite());
        // Leading minors are (0, 0) but the matrix is not PSD.
        assert!(!m(&[&[0, 0], &[0, -1]]).is_positive_semidefinite());
    }
}
