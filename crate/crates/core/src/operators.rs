//! Subalgebras of `End(V)` given by a basis of matrices.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Subspace};

/// A unital subalgebra of `End(k^degree)`.
///
/// Matrices act on column vectors; as points of the operator space they are
/// flattened row-major into `degree²` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorAlgebra {
    field: Field,
    degree: usize,
    basis: Vec<Matrix>,
    span: Subspace,
    /// Sends echelon coordinates (pivot entries) to coordinates in `basis`.
    to_basis: Matrix,
}

impl OperatorAlgebra {
    /// Smallest unital subalgebra containing `gens`: `span ← span + span·G`
    /// until the dimension stabilizes. The basis is the echelon basis of the
    /// span.
    pub fn generate(field: Field, degree: usize, gens: &[Matrix]) -> Result<Self> {
        for g in gens {
            if g.rows() != degree || g.cols() != degree {
                return Err(Error::dim("generator size", degree, g.rows().max(g.cols())));
            }
        }
        let id = Matrix::identity(field, degree);
        let mut span = Subspace::span(field, degree * degree, &[id.flat().to_vec()]);
        let mut frontier = vec![id];
        while let Some(m) = frontier.pop() {
            for g in gens {
                let p = m.mul(g);
                if span.insert(p.flat()) {
                    frontier.push(p);
                }
            }
        }
        let basis = span
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(field, degree, v))
            .collect();
        OperatorAlgebra::from_basis(field, degree, basis)
    }

    /// Wraps a basis of matrices already closed under composition and
    /// containing the identity in its span. Closure is not re-checked here;
    /// see [`OperatorAlgebra::verify_closed`].
    pub fn from_basis(field: Field, degree: usize, basis: Vec<Matrix>) -> Result<Self> {
        let flats: Vec<Vec<Scalar>> = basis.iter().map(|m| m.flat().to_vec()).collect();
        let span = Subspace::span(field, degree * degree, &flats);
        if span.dim() != basis.len() {
            return Err(Error::Internal("operator basis is linearly dependent".into()));
        }
        let rows: Vec<Vec<Scalar>> = flats
            .iter()
            .map(|f| span.coordinates(f).expect("basis vector in its own span"))
            .collect();
        let n = basis.len();
        let t = Matrix::from_rows(field, n, &rows)?;
        let to_basis = t
            .transpose()
            .inverse()
            .ok_or_else(|| Error::Internal("operator basis change not invertible".into()))?;
        let a = OperatorAlgebra {
            field,
            degree,
            basis,
            span,
            to_basis,
        };
        if a.coordinates(&Matrix::identity(field, degree)).is_none() {
            return Err(Error::Internal("operator algebra without identity".into()));
        }
        Ok(a)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Size of the matrices (dimension of the module acted on).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// The span as a subspace of the flattened operator space.
    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains_vector(m.flat())
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let r = self.span.coordinates(m.flat())?;
        Some(self.to_basis.apply(&r))
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.degree, self.degree);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn verify_closed(&self) -> Result<()> {
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                if !self.contains(&a.mul(b)) {
                    return Err(Error::Internal(format!(
                        "operator basis not closed under composition at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The abstract algebra with the same basis and composition as product.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let unit = self
            .coordinates(&Matrix::identity(self.field, self.degree))
            .expect("identity checked at construction");
        let mut products = Vec::with_capacity(self.dim());
        for a in &self.basis {
            let row: Result<Vec<_>> = self
                .basis
                .iter()
                .map(|b| {
                    self.coordinates(&a.mul(b))
                        .ok_or_else(|| Error::Internal("operator basis not closed".into()))
                })
                .collect();
            products.push(row?);
        }
        Algebra::from_dense_products(self.field, unit, |i, j| products[i][j].clone())
    }

    /// Operators restricted to an invariant subspace `W`, in `W`'s echelon
    /// coordinates. Each operator must map `W` into itself.
    pub fn restrict(ops: &[Matrix], w: &Subspace) -> Result<Vec<Matrix>> {
        let field = w.field();
        ops.iter()
            .enumerate()
            .map(|(g, op)| {
                let cols: Option<Vec<_>> = w
                    .basis()
                    .iter()
                    .map(|v| w.coordinates(&op.apply(v)))
                    .collect();
                cols.map(|c| Matrix::from_columns(field, w.dim(), &c))
                    .ok_or(Error::NotStable { generator: g })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: Field, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(f, rows[0].len(), &rows).unwrap()
    }

    #[test]
    fn identity_generates_scalars() {
        let f = Field::Rational;
        let b = OperatorAlgebra::generate(f, 3, &[Matrix::identity(f, 3)]).unwrap();
        assert_eq!(b.dim(), 1);
    }

    #[test]
    fn two_nilpotents_generate_m2() {
        let f = Field::Rational;
        // L_x and d/dx on Q[x]/(x^2), basis {1, x}
        let lx = m(f, &[&[0, 0], &[1, 0]]);
        let d = m(f, &[&[0, 1], &[0, 0]]);
        let b = OperatorAlgebra::generate(f, 2, &[lx, d]).unwrap();
        assert_eq!(b.dim(), 4);
        b.verify_closed().unwrap();
    }

    #[test]
    fn diagonal_algebra() {
        let f = Field::Rational;
        let e1 = m(f, &[&[1, 0], &[0, 0]]);
        let b = OperatorAlgebra::generate(f, 2, std::slice::from_ref(&e1)).unwrap();
        assert_eq!(b.dim(), 2);
        let c = b.coordinates(&e1).unwrap();
        assert_eq!(b.element(&c), e1);
        assert!(b.coordinates(&m(f, &[&[0, 1], &[0, 0]])).is_none());
        let alg = b.to_algebra().unwrap();
        alg.verify().unwrap();
        assert!(alg.is_commutative());
    }

    #[test]
    fn regeneration_is_idempotent() {
        let f = Field::prime(3).unwrap();
        let g = m(f, &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let b = OperatorAlgebra::generate(f, 3, &[g]).unwrap();
        let again = OperatorAlgebra::generate(f, 3, b.basis()).unwrap();
        assert_eq!(b.span(), again.span());
    }
}
