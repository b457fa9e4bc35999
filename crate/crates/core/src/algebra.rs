//! Finite-dimensional associative unital algebras given by structure
//! constants.

use crate::error::{Error, Result};
use crate::field::{axpy, Field, Scalar};
use crate::group::Group;
use crate::matrix::{Matrix, Subspace};
use crate::radical::{OperatorAlgebra, RadicalSolver};

/// Sparse structure constants: `mult[i][j]` lists the nonzero `(m, c)` with
/// `e_i e_j = Σ c e_m`.
pub type StructureConstants = Vec<Vec<Vec<(usize, Scalar)>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    names: Option<Vec<String>>,
    unit: Vec<Scalar>,
    mult: StructureConstants,
}

impl Algebra {
    /// Builds and verifies an algebra: index ranges, unit law and
    /// associativity on every basis triple.
    pub fn new(
        field: Field,
        names: Option<Vec<String>>,
        unit: Vec<Scalar>,
        mult: StructureConstants,
    ) -> Result<Self> {
        let a = Algebra::new_unchecked(field, names, unit, mult)?;
        a.verify()?;
        Ok(a)
    }

    /// Shape checks only; associativity and the unit law are not verified.
    pub(crate) fn new_unchecked(
        field: Field,
        names: Option<Vec<String>>,
        unit: Vec<Scalar>,
        mult: StructureConstants,
    ) -> Result<Self> {
        let dim = unit.len();
        if dim == 0 {
            return Err(Error::dim("algebra dimension (unit required)", 1, 0));
        }
        if let Some(n) = &names {
            if n.len() != dim {
                return Err(Error::dim("basis names", dim, n.len()));
            }
        }
        if mult.len() != dim {
            return Err(Error::dim("multiplication table rows", dim, mult.len()));
        }
        let mut clean = Vec::with_capacity(dim);
        for row in mult {
            if row.len() != dim {
                return Err(Error::dim("multiplication table columns", dim, row.len()));
            }
            let mut out_row = Vec::with_capacity(dim);
            for entry in row {
                let mut dense = field.zeros(dim);
                for (m, c) in entry {
                    if m >= dim {
                        return Err(Error::IndexOutOfRange { index: m, dim });
                    }
                    if c.field() != field {
                        return Err(Error::FieldMismatch(format!(
                            "structure constant over {}",
                            c.field()
                        )));
                    }
                    dense[m] = &dense[m] + &c;
                }
                out_row.push(sparse(&dense));
            }
            clean.push(out_row);
        }
        Ok(Algebra {
            field,
            dim,
            names,
            unit,
            mult: clean,
        })
    }

    /// Algebra from dense products `e_i e_j`, unverified.
    pub(crate) fn from_dense_products(
        field: Field,
        unit: Vec<Scalar>,
        products: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let dim = unit.len();
        let mult = (0..dim)
            .map(|i| (0..dim).map(|j| sparse(&products(i, j))).collect())
            .collect();
        Algebra::new_unchecked(field, None, unit, mult)
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.dim;
        for j in 0..n {
            let e = self.field.unit_vector(n, j);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitFailure { index: j });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul_vec_basis(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_basis_vec(i, &jk);
                    if left != right {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = Some(names);
        self
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.mult
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        for (m, c) in &self.mult[i][j] {
            v[*m] = c.clone();
        }
        v
    }

    fn mul_vec_basis(&self, a: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (m, c) in &self.mult[i][k] {
                out[*m] = &out[*m] + &(ai * c);
            }
        }
        out
    }

    fn mul_basis_vec(&self, i: usize, b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            for (m, c) in &self.mult[i][j] {
                out[*m] = &out[*m] + &(bj * c);
            }
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (m, s) in &self.mult[i][j] {
                    out[*m] = &out[*m] + &(&c * s);
                }
            }
        }
        out
    }

    pub fn power(&self, a: &[Scalar], k: u32) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn check_vector(&self, a: &[Scalar]) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::dim("algebra element", self.dim, a.len()));
        }
        Ok(())
    }

    /// Matrix of `L_a : x ↦ ax`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul_vec_basis(a, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `R_a : x ↦ xa`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<_> = (0..self.dim).map(|j| self.mul_basis_vec(j, a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `(L_a, R_a)` in the algebra basis.
    pub fn regular_reps(&self, a: &[Scalar]) -> Result<(Matrix, Matrix)> {
        self.check_vector(a)?;
        Ok((self.left_mult(a), self.right_mult(a)))
    }

    pub fn left_basis_ops(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.left_mult(&self.basis_vector(i)))
            .collect()
    }

    pub fn right_basis_ops(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.right_mult(&self.basis_vector(i)))
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// `{z : L_z = R_z}`, from the stacked commutator conditions `[z, e_j] = 0`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for m in 0..n {
                let row: Vec<Scalar> = (0..n)
                    .map(|i| {
                        coefficient(&self.mult[i][j], m, self.field)
                            - coefficient(&self.mult[j][i], m, self.field)
                    })
                    .collect();
                rows.push(row);
            }
        }
        Matrix::from_rows(self.field, n, &rows)
            .expect("square system")
            .kernel()
    }

    /// The regular representation `a ↦ L_a`, a faithful operator algebra
    /// whose basis order matches the algebra basis.
    pub fn regular_operator_algebra(&self) -> OperatorAlgebra {
        OperatorAlgebra::from_basis(self.field, self.dim, self.left_basis_ops())
            .expect("left regular representation is faithful")
    }

    pub fn radical(&self, solver: &RadicalSolver) -> Result<Subspace> {
        solver.radical(&self.regular_operator_algebra())
    }

    /// `span{uv : u ∈ U, v ∈ V}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for a in u.basis() {
            for b in v.basis() {
                out.push(self.mul(a, b));
            }
        }
        Subspace::span(self.field, self.dim, &out)
    }

    /// Smallest `k` with `I^k = 0`, if it exists within `dim + 1` steps.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Option<usize> {
        if ideal.is_zero() {
            return Some(0);
        }
        let mut power = ideal.clone();
        for k in 1..=self.dim + 1 {
            if power.is_zero() {
                return Some(k - 1);
            }
            power = self.product_space(&power, ideal);
            if k == self.dim + 1 && !power.is_zero() {
                return None;
            }
        }
        Some(self.dim + 1)
    }

    pub fn is_nilpotent_subspace(&self, ideal: &Subspace) -> bool {
        self.nilpotency_index(ideal).is_some()
    }

    pub fn is_two_sided_ideal(&self, ideal: &Subspace) -> bool {
        ideal.basis().iter().all(|v| {
            (0..self.dim).all(|i| {
                let e = self.basis_vector(i);
                ideal.contains_vector(&self.mul(&e, v)) && ideal.contains_vector(&self.mul(v, &e))
            })
        })
    }

    /// Two-sided ideal generated by the given elements.
    pub fn generated_ideal(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let ops: Vec<Matrix> = self
            .left_basis_ops()
            .into_iter()
            .chain(self.right_basis_ops())
            .collect();
        closure_under(self.field, self.dim, &ops, gens)
    }

    /// Quotient by a two-sided ideal on the canonical complement basis
    /// (the non-pivot coordinates of the ideal's echelon basis).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, QuotientMap)> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Internal("quotient by a non-ideal".into()));
        }
        if ideal.is_full() {
            return Err(Error::ImproperIdeal);
        }
        let map = QuotientMap::new(ideal.clone());
        let keep = map.kept.clone();
        let unit = map.project(&self.unit);
        let q = Algebra::from_dense_products(self.field, unit, |i, j| {
            map.project(&self.basis_product(keep[i], keep[j]))
        })?;
        let names = self
            .names
            .as_ref()
            .map(|ns| keep.iter().map(|&k| format!("[{}]", ns[k])).collect());
        let q = Algebra { names, ..q };
        q.verify()?;
        Ok((q, map))
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mult = (0..n)
            .map(|i| (0..n).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        Algebra {
            field: self.field,
            dim: n,
            names: self.names.clone(),
            unit: self.unit.clone(),
            mult,
        }
    }

    /// `A ⊗ B` with basis `e_i ⊗ f_j ↦ i * dim(B) + j`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim, other.dim);
        let mut mult = vec![vec![Vec::new(); n * m]; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    for l in 0..m {
                        let mut entry = Vec::new();
                        for (a, c) in &self.mult[i][k] {
                            for (b, d) in &other.mult[j][l] {
                                entry.push((a * m + b, c * d));
                            }
                        }
                        entry.sort_by_key(|e| e.0);
                        mult[i * m + j][k * m + l] = entry;
                    }
                }
            }
        }
        let unit = tensor_vectors(&self.unit, &other.unit);
        let names = match (&self.names, &other.names) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
                    .collect(),
            ),
            _ => None,
        };
        Algebra {
            field: self.field,
            dim: n * m,
            names,
            unit,
            mult,
        }
    }

    pub fn basis_name(&self, i: usize) -> String {
        match &self.names {
            Some(ns) => ns[i].clone(),
            None => format!("e{i}"),
        }
    }
}

/// Projection onto a quotient presented on the complement basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: Subspace,
    kept: Vec<usize>,
}

impl QuotientMap {
    pub fn new(ideal: Subspace) -> Self {
        let kept = ideal.complement_columns();
        QuotientMap { ideal, kept }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Original coordinates kept as the quotient basis.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn quotient_dim(&self) -> usize {
        self.kept.len()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.kept.iter().map(|&k| r[k].clone()).collect()
    }

    /// The canonical representative of a quotient vector.
    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        let field = self.ideal.field();
        let mut out = field.zeros(self.ideal.ambient());
        for (c, &k) in v.iter().zip(&self.kept) {
            out[k] = c.clone();
        }
        out
    }

    /// Operator induced on the quotient by an operator preserving the ideal.
    pub fn induced(&self, op: &Matrix) -> Matrix {
        let field = op.field();
        let cols: Vec<_> = self
            .kept
            .iter()
            .map(|&k| self.project(&op.apply(&field.unit_vector(op.cols(), k))))
            .collect();
        Matrix::from_columns(field, self.kept.len(), &cols)
    }
}

fn coefficient(entry: &[(usize, Scalar)], m: usize, field: Field) -> Scalar {
    entry
        .iter()
        .find(|(k, _)| *k == m)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| field.zero())
}

pub(crate) fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn tensor_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

/// Smallest subspace containing `seeds` and closed under every operator.
pub fn closure_under(field: Field, n: usize, ops: &[Matrix], seeds: &[Vec<Scalar>]) -> Subspace {
    let mut span = Subspace::span(field, n, seeds);
    let mut frontier: Vec<Vec<Scalar>> = span.basis().to_vec();
    while let Some(v) = frontier.pop() {
        for op in ops {
            let w = op.apply(&v);
            if !span.contains_vector(&w) {
                span.insert(&w);
                frontier.push(w);
            }
        }
    }
    span
}

/// Catalogue of algebras used as substrates for extensions.
pub mod builders {
    use super::*;

    /// Group algebra `k[G]`, basis indexed by group elements.
    pub fn group_algebra(field: Field, group: &Group) -> Result<Algebra> {
        let n = group.order();
        let unit = field.unit_vector(n, group.identity());
        let a = Algebra::from_dense_products(field, unit, |i, j| {
            field.unit_vector(n, group.mul(i, j))
        })?;
        a.verify()?;
        Ok(a)
    }

    /// Full matrix algebra `M_m(k)`, basis `E_ij ↦ i * m + j`.
    pub fn matrix_algebra(field: Field, m: usize) -> Result<Algebra> {
        let n = m * m;
        let mut unit = field.zeros(n);
        for i in 0..m {
            unit[i * m + i] = field.one();
        }
        let a = Algebra::from_dense_products(field, unit, |x, y| {
            let (i, j) = (x / m, x % m);
            let (k, l) = (y / m, y % m);
            if j == k {
                field.unit_vector(n, i * m + l)
            } else {
                field.zeros(n)
            }
        })?;
        let names = (0..n).map(|x| format!("E{}{}", x / m + 1, x % m + 1)).collect();
        Ok(a.with_names(names))
    }

    /// Upper-triangular `m × m` matrices, basis the matrix units `E_ij`
    /// with `i ≤ j` in row-major order.
    pub fn upper_triangular(field: Field, m: usize) -> Result<Algebra> {
        let units: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (i..m).map(move |j| (i, j)))
            .collect();
        let n = units.len();
        let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).unwrap();
        let mut unit = field.zeros(n);
        for i in 0..m {
            unit[index(i, i)] = field.one();
        }
        let a = Algebra::from_dense_products(field, unit, |x, y| {
            let (i, j) = units[x];
            let (k, l) = units[y];
            if j == k {
                field.unit_vector(n, index(i, l))
            } else {
                field.zeros(n)
            }
        })?;
        let names = units
            .iter()
            .map(|(i, j)| format!("E{}{}", i + 1, j + 1))
            .collect();
        let a = a.with_names(names);
        a.verify()?;
        Ok(a)
    }

    /// `k[x]/(x^n - Σ relation[i] x^i)`, basis `1, x, …, x^{n-1}`.
    pub fn truncated_polynomial(field: Field, relation: &[Scalar]) -> Result<Algebra> {
        let n = relation.len();
        if n == 0 {
            return Err(Error::dim("truncated polynomial degree", 1, 0));
        }
        // powers[k] = coordinates of x^k for k < 2n - 1
        let mut powers: Vec<Vec<Scalar>> = (0..n).map(|k| field.unit_vector(n, k)).collect();
        for k in n..2 * n - 1 {
            let prev = &powers[k - 1];
            let mut next = field.zeros(n);
            for i in 1..n {
                next[i] = prev[i - 1].clone();
            }
            let top = prev[n - 1].clone();
            axpy(&mut next, &top, relation);
            powers.push(next);
        }
        let a = Algebra::from_dense_products(field, field.unit_vector(n, 0), |i, j| {
            powers[i + j].clone()
        })?;
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            })
            .collect();
        let a = a.with_names(names);
        a.verify()?;
        Ok(a)
    }

    /// `A₁ × A₂`, basis of `A₁` first.
    pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch("direct product factors".into()));
        }
        let (n, m) = (a.dim(), b.dim());
        let field = a.field();
        let mut unit = a.unit().to_vec();
        unit.extend(b.unit().iter().cloned());
        let p = Algebra::from_dense_products(field, unit, |i, j| {
            let mut v = field.zeros(n + m);
            if i < n && j < n {
                v[..n].clone_from_slice(&a.basis_product(i, j));
            } else if i >= n && j >= n {
                v[n..].clone_from_slice(&b.basis_product(i - n, j - n));
            }
            v
        })?;
        p.verify()?;
        Ok(p)
    }

    pub fn opposite(a: &Algebra) -> Result<Algebra> {
        let op = a.opposite();
        op.verify()?;
        Ok(op)
    }

    /// Enveloping algebra `A ⊗ A^op`.
    pub fn enveloping(a: &Algebra) -> Result<Algebra> {
        let e = a.tensor(&a.opposite());
        e.verify()?;
        Ok(e)
    }

    /// `k^m` with componentwise product.
    pub fn split_product(field: Field, m: usize) -> Result<Algebra> {
        let mut unit = field.zeros(m);
        unit.iter_mut().for_each(|u| *u = field.one());
        let a = Algebra::from_dense_products(field, unit, |i, j| {
            if i == j {
                field.unit_vector(m, i)
            } else {
                field.zeros(m)
            }
        })?;
        a.verify()?;
        Ok(a)
    }
}
