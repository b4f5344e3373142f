//! Small dense linear algebra over a concrete field, used for action
//! matrices, endomorphism computations, and the brute-force test oracles.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let _ = field;
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn mul(&self, field: &F, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if field.is_zero(&self[(i, k)]) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(&self[(i, k)], &other[(k, j)]);
                    out[(i, j)] = field.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.data.iter().all(|v| field.is_zero(v))
    }

    /// Row-reduced echelon form; returns (rref, pivot columns).
    pub fn rref(&self, field: &F) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| !field.is_zero(&m[(r, col)])) else {
                continue;
            };
            for j in 0..m.cols {
                let t = m[(p, j)].clone();
                m[(p, j)] = m[(row, j)].clone();
                m[(row, j)] = t;
            }
            let inv = field.inv(&m[(row, col)]).expect("pivot is nonzero");
            for j in 0..m.cols {
                m[(row, j)] = field.mul(&m[(row, j)], &inv);
            }
            for r in 0..m.rows {
                if r != row && !field.is_zero(&m[(r, col)]) {
                    let c = m[(r, col)].clone();
                    for j in 0..m.cols {
                        let t = field.mul(&c, &m[(row, j)]);
                        m[(r, j)] = field.sub(&m[(r, j)], &t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &F) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let (r, pivots) = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![field.zero(); self.cols];
                v[fc] = field.one();
                for (pr, &pc) in pivots.iter().enumerate() {
                    v[pc] = field.neg(&r[(pr, fc)]);
                }
                v
            })
            .collect()
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;
    fn index(&self, (i, j): (usize, usize)) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F::Elem {
        &mut self.data[i * self.cols + j]
    }
}
