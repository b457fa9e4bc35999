//! Dense matrices over an exact field, row reduction, and subspaces.
//!
//! Operators act on column vectors: column `j` of an operator matrix holds
//! the image of the `j`-th basis vector. Pivoting is deterministic (leftmost
//! column, first nonzero row), so every basis computed here is reproducible.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{axpy, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim("matrix entries", rows * cols, data.len()));
        }
        if let Some(s) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(format!(
                "entry over {} in a matrix over {field}",
                s.field()
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: field.zeros(rows * cols),
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::dim(format!("matrix row {i}"), cols, r.len()));
            }
            data.extend(r.iter().cloned());
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, s) in c.iter().enumerate() {
                m.data[i * m.cols + j] = s.clone();
            }
        }
        m
    }

    /// Square matrix from a row-major flattening.
    pub fn from_flat(field: Field, n: usize, flat: &[Scalar]) -> Self {
        assert_eq!(flat.len(), n * n);
        Matrix {
            field,
            rows: n,
            cols: n,
            data: flat.to_vec(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries; for square operators this is the coordinate
    /// vector in `End(V)` used by operator-algebra computations.
    pub fn flat(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = rhs.row(k).to_vec();
                axpy(&mut out.data[i * rhs.cols..(i + 1) * rhs.cols], a, &row);
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::dim("matrix product", self.cols, rhs.rows));
        }
        Ok(self.mul(rhs))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.data[(i * rhs.rows + k) * c + j * rhs.cols + l] = a * rhs.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = &inv * m.get(r, j);
                m.set(r, j, v);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let neg = -&f;
                axpy(&mut m.data[i * m.cols..(i + 1) * m.cols], &neg, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate_rows(r);
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn truncate_rows(&mut self, r: usize) {
        self.data.truncate(r * self.cols);
        self.rows = r;
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{x : Mx = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut free = vec![true; self.cols];
        for &p in &pivots {
            free[p] = false;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&j| free[j]) {
            let mut v = self.field.zeros(self.cols);
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, &basis)
    }

    /// One solution of `Mx = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::dim("right-hand side", self.rows, rhs.len()));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = self.field.zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|s| s.to_string()).collect())
            .collect()
    }
}

/// A subspace of `F^n`, stored as the unique reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| field.unit_vector(ambient, i)).collect();
        Subspace {
            field,
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, vectors).expect("span vectors have ambient length");
        let (r, pivots) = m.rref();
        Subspace {
            field,
            ambient,
            basis: r.row_vectors(),
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots: the coordinates of the canonical
    /// complement used to present quotients.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Normal form of `v` modulo this subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                axpy(&mut w, &-&c, row);
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates with respect to the echelon basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = self.field.zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        v
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &vs)
    }

    /// Intersection via the kernel of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        let (du, dv) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.field, self.ambient, du + dv);
        for (j, b) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, j, b[i].clone());
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m.set(i, du + j, -&b[i]);
            }
        }
        let k = m.kernel();
        let vs: Vec<_> = k.basis.iter().map(|c| self.combine(&c[..du])).collect();
        Subspace::span(self.field, self.ambient, &vs)
    }

    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        if self.contains_vector(v) {
            return false;
        }
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        *self = Subspace::span(self.field, self.ambient, &vs);
        true
    }

    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.basis).expect("basis rows")
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
    }

    pub fn checked_sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::dim("subspace sum", self.ambient, other.ambient));
        }
        Ok(self.sum(other))
    }

    pub fn checked_intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::dim("subspace intersection", self.ambient, other.ambient));
        }
        Ok(self.intersect(other))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    fn qm(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        let rs: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Matrix::from_rows(Field::Rational, cols, &rs).unwrap()
    }

    #[test]
    fn rref_of_identity() {
        let id = Matrix::identity(Field::Rational, 2);
        assert_eq!(id.rref().0, id);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = qm(&[&[1, 1], &[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(Field::Rational, 2, &[vec![q(1), q(-1)]]));
    }

    #[test]
    fn solve_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let m = Matrix::new(f3, 1, 1, vec![f3.from_i64(2)]).unwrap();
        let x = m.solve(&[f3.one()]).unwrap().unwrap();
        assert_eq!(x, vec![f3.from_i64(2)]);
        assert!(m.solve(&[f3.one(), f3.one()]).is_err());
    }

    #[test]
    fn inconsistent_system() {
        let m = qm(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[q(1), q(2)]).unwrap(), None);
    }

    #[test]
    fn subspace_ops_on_lines() {
        let f = Field::Rational;
        let e1 = Subspace::span(f, 2, &[vec![q(1), q(0)]]);
        let e2 = Subspace::span(f, 2, &[vec![q(0), q(1)]]);
        assert!(e1.sum(&e2).is_full());
        assert!(e1.intersect(&e2).is_zero());
        let diag = Subspace::span(f, 2, &[vec![q(1), q(1)]]);
        assert!(!diag.contains_vector(&[q(1), q(0)]));
        assert!(e1.checked_sum(&Subspace::zero(f, 3)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rational, 2));
        assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
