//! Dense matrices over `Q(xi)` with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: u32,
    data: Vec<Cyclotomic>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(xi_{})", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (r, c): (usize, usize)) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Cyclotomic {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: u32) -> Self {
        let z = Cyclotomic::zero(field);
        Matrix {
            rows,
            cols,
            field,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(n: usize, field: u32) -> Self {
        let mut a = Self::zeros(n, n, field);
        let one = Cyclotomic::one(field);
        for i in 0..n {
            a[(i, i)] = one.clone();
        }
        a
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>, field: u32) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Cyclotomic>], rows: usize, field: u32) -> Self {
        let mut a = Self::zeros(rows, cols.len(), field);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                a[(i, j)] = x.clone();
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cyclotomic::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclotomic::zero(self.field);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Matrix, s: &Cyclotomic) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.field);
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Matrix) -> Cyclotomic {
        assert_eq!((self.rows, self.cols), (other.cols, other.rows));
        let mut acc = Cyclotomic::zero(self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(j, i)];
                if !b.is_zero() {
                    acc += &(a * b);
                }
            }
        }
        acc
    }

    /// Entries flattened row-major.
    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Submatrix with the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(rows.len(), cols.len(), self.field);
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                out[(a, b)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        RowEchelon::new(self.clone()).rank()
    }

    pub fn determinant(&self) -> Cyclotomic {
        assert_eq!(self.rows, self.cols);
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Cyclotomic::one(self.field);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Cyclotomic::zero(self.field);
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pv = a[(col, col)].clone();
            det = &det * &pv;
            let inv = pv.inv().expect("pivot is non-zero");
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for c in col..n {
                    if !a[(col, c)].is_zero() {
                        let t = &f * &a[(col, c)];
                        a[(r, c)] -= &t;
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclotomic::one(self.field);
        }
        let ech = RowEchelon::new(aug);
        if ech.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(Error::DivisionByZero);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(ech.matrix.select(&rows, &cols))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis of `{x : self * x = 0}` as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Cyclotomic>> {
        let ech = RowEchelon::new(self.clone());
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Cyclotomic::zero(self.field); self.cols];
            v[free] = Cyclotomic::one(self.field);
            for (r, &p) in ech.pivots.iter().enumerate() {
                v[p] = -&ech.matrix[(r, free)];
            }
            out.push(v);
        }
        out
    }
}

/// Reduced row echelon form with recorded pivot columns.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(mut a: Matrix) -> Self {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = a[(row, col)].inv().expect("pivot is non-zero");
            for c in col..a.cols {
                if !a[(row, c)].is_zero() {
                    a[(row, c)] = &a[(row, c)] * &inv;
                }
            }
            let pivot_row: Vec<(usize, Cyclotomic)> = (col..a.cols)
                .filter(|&c| !a[(row, c)].is_zero())
                .map(|c| (c, a[(row, c)].clone()))
                .collect();
            for r in 0..a.rows {
                if r == row || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for (c, v) in &pivot_row {
                    let t = &f * v;
                    a[(r, *c)] -= &t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        RowEchelon { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// An incrementally grown subspace of `K^dim`, kept in reduced echelon form.
///
/// Used for spans, quotients and coordinates with respect to a chosen basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    field: u32,
    /// Echelon rows (each normalised to 1 at its pivot, reduced against the others).
    rows: Vec<Vec<Cyclotomic>>,
    pivots: Vec<usize>,
    /// Original vectors that were accepted, in insertion order.
    basis: Vec<Vec<Cyclotomic>>,
    /// `rows[i] = sum_j combo[i][j] * basis[j]`.
    combo: Vec<Vec<Cyclotomic>>,
}

impl Subspace {
    pub fn new(dim: usize, field: u32) -> Self {
        Subspace {
            dim,
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
            basis: Vec::new(),
            combo: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Cyclotomic>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the echelon rows; returns the residual and the
    /// coefficients used on each echelon row.
    fn reduce(&self, v: &[Cyclotomic]) -> (Vec<Cyclotomic>, Vec<Cyclotomic>) {
        let mut r = v.to_vec();
        let mut used = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if !f.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            used.push(f);
        }
        (r, used)
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v).0.iter().all(Cyclotomic::is_zero)
    }

    /// Insert `v`; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: Vec<Cyclotomic>) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut r, used) = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let k = self.basis.len();
        // new echelon row = (v - sum used_i rows_i) / r[p]
        let inv = r[p].inv().expect("non-zero pivot");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let mut new_combo = vec![Cyclotomic::zero(self.field); k + 1];
        new_combo[k] = inv.clone();
        for (i, f) in used.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let s = f * &inv;
            for (j, c) in self.combo[i].iter().enumerate() {
                if !c.is_zero() {
                    new_combo[j] -= &(&s * c);
                }
            }
        }
        // eliminate the new pivot from the existing rows
        for i in 0..self.rows.len() {
            let f = self.rows[i][p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in self.rows[i].iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            self.combo[i].push(Cyclotomic::zero(self.field));
            for (x, y) in self.combo[i].iter_mut().zip(&new_combo) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        for c in self.combo.iter_mut() {
            c.resize(k + 1, Cyclotomic::zero(self.field));
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.combo.push(new_combo);
        self.basis.push(v);
        true
    }

    /// Coordinates of `v` in terms of [`Subspace::basis`], or `None` if `v`
    /// is outside the span.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
        let (res, used) = self.reduce(v);
        if !res.iter().all(Cyclotomic::is_zero) {
            return None;
        }
        let k = self.basis.len();
        let mut out = vec![Cyclotomic::zero(self.field); k];
        for (i, f) in used.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (x, c) in out.iter_mut().zip(&self.combo[i]) {
                if !c.is_zero() {
                    *x += &(f * c);
                }
            }
        }
        Some(out)
    }

    /// Residual of `v` modulo the subspace, restricted to the non-pivot
    /// coordinates. These are coordinates on the quotient space.
    pub fn quotient_coordinates(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let (res, _) = self.reduce(v);
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        res.into_iter()
            .enumerate()
            .filter(|(i, _)| !is_pivot[*i])
            .map(|(_, x)| x)
            .collect()
    }

    /// Indices of the standard basis vectors that complete the subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.dim).filter(|&i| !is_pivot[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> Cyclotomic {
        Cyclotomic::from_int(3, k)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| c(x)).collect()).collect(),
            3,
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Cyclotomic::is_zero));
    }

    #[test]
    fn inverse_and_determinant() {
        let x = Cyclotomic::xi(3);
        let a = Matrix::from_rows(vec![vec![x.clone(), c(1)], vec![c(1), x.clone()]], 3);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2, 3));
        assert_eq!(a.determinant(), &(&x * &x) - &c(1));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn subspace_coordinates() {
        let mut s = Subspace::new(3, 3);
        assert!(s.insert(vec![c(1), c(1), c(0)]));
        assert!(s.insert(vec![c(0), c(1), c(1)]));
        assert!(!s.insert(vec![c(1), c(2), c(1)]));
        let co = s.coordinates(&[c(2), c(5), c(3)]).unwrap();
        assert_eq!(co, vec![c(2), c(3)]);
        assert!(s.coordinates(&[c(1), c(0), c(0)]).is_none());
        assert_eq!(s.complement_indices().len(), 1);
    }

    #[test]
    fn kron_trace() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.trace(), &a.trace() * &b.trace());
        assert_eq!(a.trace_product(&b), a.mul(&b).trace());
    }
}
