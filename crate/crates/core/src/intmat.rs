//! Dense integer matrices with exact arbitrary-precision arithmetic:
//! Smith normal form, Hermite-style lattice reduction, and the linear
//! solvers (over Z and Z/m) that the multiplicative cochain calculus
//! reduces to.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.data.swap(a * c + j, b * c + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.data.swap(i * c + a, i * c + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, b)];
            self[(i, a)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[(i, k)].is_zero());
                match pivot {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// U * M * V = S with U, V unimodular and S diagonal with the divisor chain
/// s_1 | s_2 | ..., all diagonal entries nonnegative.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows.min(self.s.cols);
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Pivot rule: smallest nonzero absolute value, ties broken by row then
/// column index.
fn find_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows {
        for j in from..m.cols {
            if m[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    let cur = m[(i, j)].abs();
                    let b = m[(bi, bj)].abs();
                    if cur < b {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = find_pivot(&s, t) else { break };
        s.swap_rows(pi, t);
        u.swap_rows(pi, t);
        s.swap_cols(pj, t);
        v.swap_cols(pj, t);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..s.rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, t)] / &s[(t, t)]);
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..s.cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(t, j)] / &s[(t, t)]);
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // remainders survived; re-pick the smallest pivot and repeat
                let (pi, pj) = find_pivot(&s, t).expect("nonzero remainder");
                s.swap_rows(pi, t);
                u.swap_rows(pi, t);
                s.swap_cols(pj, t);
                v.swap_cols(pj, t);
                continue;
            }
            // divisibility: the pivot must divide every entry of the tail block
            let mut fixed = true;
            'scan: for i in t + 1..s.rows {
                for j in t + 1..s.cols {
                    if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                        s.add_row(t, i, &BigInt::one());
                        u.add_row(t, i, &BigInt::one());
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { u, s, v }
}

/// Solve m * x = b over the integers.
pub fn solve_int(snf: &Snf, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = snf.u.mul_vec(b);
    let n = snf.s.cols;
    let diag = snf.s.rows.min(snf.s.cols);
    let mut y = vec![BigInt::zero(); n];
    for (i, ci) in c.iter().enumerate() {
        if i < diag && !snf.s[(i, i)].is_zero() {
            let (q, r) = ci.div_rem(&snf.s[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Solve m * x = b modulo `modulus` (modulus >= 1).
pub fn solve_mod(snf: &Snf, b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    let c = snf.u.mul_vec(b);
    let n = snf.s.cols;
    let diag = snf.s.rows.min(snf.s.cols);
    let mut y = vec![BigInt::zero(); n];
    for (i, ci) in c.iter().enumerate() {
        let s_i = if i < diag { snf.s[(i, i)].clone() } else { BigInt::zero() };
        let ci_red = ci.mod_floor(modulus);
        if s_i.is_zero() {
            if !ci_red.is_zero() {
                return None;
            }
        } else {
            // s_i * y = ci (mod modulus) solvable iff gcd(s_i, modulus) | ci
            let g = s_i.gcd(modulus);
            if !(&ci_red % &g).is_zero() {
                return None;
            }
            let m_red = modulus / &g;
            let s_red = (&s_i / &g).mod_floor(&m_red);
            let c_red = (&ci_red / &g).mod_floor(&m_red);
            y[i] = if m_red.is_one() {
                BigInt::zero()
            } else {
                let inv = mod_inverse(&s_red, &m_red).expect("coprime by construction");
                (c_red * inv).mod_floor(&m_red)
            };
        }
    }
    let x = snf.v.mul_vec(&y);
    Some(x.into_iter().map(|xi| xi.mod_floor(modulus)).collect())
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Integer kernel basis: columns of V past the rank.
pub fn kernel_basis(snf: &Snf) -> Vec<Vec<BigInt>> {
    let rank = snf.rank();
    (rank..snf.s.cols)
        .map(|j| (0..snf.v.rows).map(|i| snf.v[(i, j)].clone()).collect())
        .collect()
}

/// A column-style Hermite form of a lattice's generating matrix, kept only as
/// the data needed to reduce vectors to a canonical coset representative.
#[derive(Debug, Clone)]
pub struct LatticeReducer {
    /// columns spanning the lattice, in echelon form
    basis: Vec<Vec<BigInt>>,
    /// (pivot_row, basis_column_index) pairs, pivot rows strictly increasing
    pivots: Vec<(usize, usize)>,
    dim: usize,
}

impl LatticeReducer {
    /// `generators`: columns spanning the lattice inside Z^dim.
    pub fn new(dim: usize, generators: &[Vec<BigInt>]) -> Self {
        let mut cols: Vec<Vec<BigInt>> = generators
            .iter()
            .filter(|g| g.iter().any(|v| !v.is_zero()))
            .cloned()
            .collect();
        for g in &cols {
            assert_eq!(g.len(), dim);
        }
        let mut pivots = Vec::new();
        let mut fixed = 0;
        for row in 0..dim {
            // gcd all columns with a nonzero entry in `row` into one
            loop {
                let mut idx: Vec<usize> =
                    (fixed..cols.len()).filter(|&j| !cols[j][row].is_zero()).collect();
                if idx.len() <= 1 {
                    break;
                }
                idx.sort_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()));
                let (small, other) = (idx[0], idx[1]);
                let q = -(&cols[other][row] / &cols[small][row]);
                for r in 0..dim {
                    let t = &q * &cols[small][r];
                    cols[other][r] += t;
                }
            }
            if let Some(j) = (fixed..cols.len()).find(|&j| !cols[j][row].is_zero()) {
                cols.swap(fixed, j);
                if cols[fixed][row].is_negative() {
                    for v in cols[fixed].iter_mut() {
                        *v = -v.clone();
                    }
                }
                pivots.push((row, fixed));
                fixed += 1;
            }
        }
        cols.truncate(fixed);
        LatticeReducer { basis: cols, pivots, dim }
    }

    /// The canonical representative of b + L: entries at pivot rows reduced
    /// into [0, pivot) from the top down. Deterministic and coset-unique.
    pub fn reduce(&self, b: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(b.len(), self.dim);
        let mut out = b.to_vec();
        for &(row, col) in &self.pivots {
            let p = &self.basis[col][row];
            let q = out[row].div_floor(p);
            if q.is_zero() {
                continue;
            }
            for r in 0..self.dim {
                let t = &q * &self.basis[col][r];
                out[r] -= t;
            }
        }
        out
    }
}
