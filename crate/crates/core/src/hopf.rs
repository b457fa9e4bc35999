//! Finite-dimensional Hopf algebras with exhaustively verified axioms.

use crate::algebra::{sparse, Algebra};
use crate::error::{Error, Result};
use crate::field::{axpy, vector_strings, Field, Scalar};
use crate::group::Group;
use crate::matrix::Matrix;

/// `Δ(e_i) = Σ c · e_j ⊗ e_k`, stored as `(j, k, c)` triples.
pub type Comultiplication = Vec<Vec<(usize, usize, Scalar)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    comult: Comultiplication,
    counit: Vec<Scalar>,
    antipode: Matrix,
    antipode_inverse: Option<Matrix>,
}

impl HopfAlgebra {
    pub fn new(
        algebra: Algebra,
        comult: Comultiplication,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        if comult.len() != n {
            return Err(Error::dim("comultiplication", n, comult.len()));
        }
        if counit.len() != n {
            return Err(Error::dim("counit", n, counit.len()));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::dim("antipode", n, antipode.rows()));
        }
        for row in &comult {
            for (j, k, _) in row {
                if *j >= n || *k >= n {
                    return Err(Error::IndexOutOfRange {
                        index: (*j).max(*k),
                        dim: n,
                    });
                }
            }
        }
        let antipode_inverse = antipode.inverse();
        let h = HopfAlgebra {
            algebra,
            comult,
            counit,
            antipode,
            antipode_inverse,
        };
        h.verify()?;
        Ok(h)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn comultiplication(&self) -> &Comultiplication {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.antipode_inverse.as_ref()
    }

    pub fn has_bijective_antipode(&self) -> bool {
        self.antipode_inverse.is_some()
    }

    /// `Δ(e_i)` as a vector of `H ⊗ H`.
    pub fn delta(&self, i: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut v = self.field().zeros(n * n);
        for (j, k, c) in &self.comult[i] {
            v[j * n + k] = &v[j * n + k] + c;
        }
        v
    }

    /// `Δ` applied to an arbitrary element.
    pub fn delta_vec(&self, h: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = self.field().zeros(n * n);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.delta(i));
            }
        }
        out
    }

    /// `Σ c · (j, k)` pairs of `Δ(e_i)`, merged and without zero terms.
    pub fn delta_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        sparse(&self.delta(i))
            .into_iter()
            .map(|(m, c)| (m / n, m % n, c))
            .collect()
    }

    /// `(Δ ⊗ id)Δ(e_i)` as `(j, k, l, c)` terms: `Σ h₁ ⊗ h₂ ⊗ h₃`.
    pub fn delta2_terms(&self, i: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut acc = self.field().zeros(n * n * n);
        for (j, l, c) in self.delta_terms(i) {
            for (a, b, d) in self.delta_terms(j) {
                let idx = (a * n + b) * n + l;
                acc[idx] = &acc[idx] + &(&c * &d);
            }
        }
        sparse(&acc)
            .into_iter()
            .map(|(m, c)| (m / (n * n), (m / n) % n, m % n, c))
            .collect()
    }

    pub fn counit_of(&self, h: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (c, e) in h.iter().zip(&self.counit) {
            acc = acc + c * e;
        }
        acc
    }

    pub fn verify(&self) -> Result<()> {
        let n = self.dim();
        let a = &self.algebra;
        let f = self.field();
        let name = |i: usize| a.basis_name(i);
        // coassociativity
        for i in 0..n {
            let left = self.delta2_dense(i);
            let mut right = f.zeros(n * n * n);
            for (j, k, c) in self.delta_terms(i) {
                for (b, l, d) in self.delta_terms(k) {
                    let idx = (j * n + b) * n + l;
                    right[idx] = &right[idx] + &(&c * &d);
                }
            }
            if left != right {
                return Err(hopf_err("coassociativity", name(i)));
            }
        }
        // counit
        for i in 0..n {
            let mut left = f.zeros(n);
            let mut right = f.zeros(n);
            for (j, k, c) in self.delta_terms(i) {
                left[k] = &left[k] + &(&c * &self.counit[j]);
                right[j] = &right[j] + &(&c * &self.counit[k]);
            }
            let e = f.unit_vector(n, i);
            if left != e || right != e {
                return Err(hopf_err("counit", name(i)));
            }
        }
        // Δ and ε are unital algebra maps
        let unit = a.unit();
        let tensor_unit = crate::algebra::tensor_vectors(unit, unit);
        if self.delta_vec(unit) != tensor_unit {
            return Err(hopf_err("comultiplication is unital", "1".into()));
        }
        if !self.counit_of(unit).is_one() {
            return Err(hopf_err("counit is unital", "1".into()));
        }
        let hh = a.tensor(a);
        for i in 0..n {
            for j in 0..n {
                let prod = a.basis_product(i, j);
                if self.delta_vec(&prod) != hh.mul(&self.delta(i), &self.delta(j)) {
                    return Err(hopf_err(
                        "comultiplication is multiplicative",
                        format!("({}, {})", name(i), name(j)),
                    ));
                }
                if self.counit_of(&prod) != &self.counit[i] * &self.counit[j] {
                    return Err(hopf_err(
                        "counit is multiplicative",
                        format!("({}, {})", name(i), name(j)),
                    ));
                }
            }
        }
        // antipode
        for i in 0..n {
            let mut left = f.zeros(n);
            let mut right = f.zeros(n);
            for (j, k, c) in self.delta_terms(i) {
                let sj = self.antipode.column(j);
                let sk = self.antipode.column(k);
                axpy(&mut left, &c, &a.mul(&sj, &a.basis_vector(k)));
                axpy(&mut right, &c, &a.mul(&a.basis_vector(j), &sk));
            }
            let expected: Vec<Scalar> = unit.iter().map(|u| u * &self.counit[i]).collect();
            if left != expected || right != expected {
                return Err(hopf_err("antipode", name(i)));
            }
        }
        Ok(())
    }

    fn delta2_dense(&self, i: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut v = self.field().zeros(n * n * n);
        for (a, b, c, s) in self.delta2_terms(i) {
            v[(a * n + b) * n + c] = s;
        }
        v
    }

    /// `τ ∘ Δ = Δ` on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.delta(i);
            (0..n).all(|j| (0..n).all(|k| d[j * n + k] == d[k * n + j]))
        })
    }

    pub fn antipode_of(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(h)
    }
}

fn hopf_err(axiom: &str, witness: String) -> Error {
    Error::HopfAxiom {
        axiom: axiom.into(),
        witness,
    }
}

/// Render a vector for witnesses.
pub(crate) fn show(v: &[Scalar]) -> String {
    format!("[{}]", vector_strings(v).join(", "))
}

/// Built-in Hopf algebras.
pub mod builders {
    use super::*;
    use crate::algebra::builders::group_algebra;

    /// `k` itself.
    pub fn trivial(field: Field) -> Result<HopfAlgebra> {
        let a = Algebra::new(field, Some(vec!["1".into()]), vec![field.one()], vec![vec![vec![(
            0,
            field.one(),
        )]]])?;
        HopfAlgebra::new(
            a,
            vec![vec![(0, 0, field.one())]],
            vec![field.one()],
            Matrix::identity(field, 1),
        )
    }

    /// `k[G]` with group-like basis.
    pub fn group_hopf(field: Field, group: &Group) -> Result<HopfAlgebra> {
        let n = group.order();
        let names = (0..n)
            .map(|g| if g == group.identity() { "e".into() } else { format!("g{g}") })
            .collect();
        let a = group_algebra(field, group)?.with_names(names);
        let comult = (0..n).map(|g| vec![(g, g, field.one())]).collect();
        let counit = vec![field.one(); n];
        let cols: Vec<_> = (0..n)
            .map(|g| field.unit_vector(n, group.inverse(g)))
            .collect();
        HopfAlgebra::new(a, comult, counit, Matrix::from_columns(field, n, &cols))
    }

    /// `(k[G])*` on the dual basis `p_g`.
    pub fn dual_group_hopf(field: Field, group: &Group) -> Result<HopfAlgebra> {
        let n = group.order();
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { vec![(i, field.one())] } else { vec![] })
                    .collect()
            })
            .collect();
        let names = (0..n).map(|g| format!("p{g}")).collect();
        let a = Algebra::new(field, Some(names), vec![field.one(); n], mult)?;
        let comult = (0..n)
            .map(|g| {
                let mut terms = Vec::new();
                for x in 0..n {
                    for y in 0..n {
                        if group.mul(x, y) == g {
                            terms.push((x, y, field.one()));
                        }
                    }
                }
                terms
            })
            .collect();
        let counit = field.unit_vector(n, group.identity());
        let cols: Vec<_> = (0..n)
            .map(|g| field.unit_vector(n, group.inverse(g)))
            .collect();
        HopfAlgebra::new(a, comult, counit, Matrix::from_columns(field, n, &cols))
    }

    /// Sweedler's four-dimensional algebra, basis `1, g, x, gx`.
    pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
        if field.characteristic() == 2 {
            return Err(Error::UnsupportedRegime(
                "Sweedler's algebra needs -1 != 1 (characteristic 2 rejected)".into(),
            ));
        }
        let one = field.one();
        let m1 = -field.one();
        let e = |m: usize, c: &Scalar| vec![(m, c.clone())];
        let z = Vec::new;
        // rows: 1, g, x, gx
        let mult = vec![
            vec![e(0, &one), e(1, &one), e(2, &one), e(3, &one)],
            vec![e(1, &one), e(0, &one), e(3, &one), e(2, &one)],
            vec![e(2, &one), e(3, &m1), z(), z()],
            vec![e(3, &one), e(2, &m1), z(), z()],
        ];
        let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
        let a = Algebra::new(field, Some(names), field.unit_vector(4, 0), mult)?;
        let comult = vec![
            vec![(0, 0, one.clone())],
            vec![(1, 1, one.clone())],
            vec![(2, 0, one.clone()), (1, 2, one.clone())],
            vec![(3, 1, one.clone()), (0, 3, one.clone())],
        ];
        let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];
        let s = Matrix::from_columns(
            field,
            4,
            &[
                field.unit_vector(4, 0),
                field.unit_vector(4, 1),
                vec![field.zero(), field.zero(), field.zero(), m1],
                field.unit_vector(4, 2),
            ],
        );
        HopfAlgebra::new(a, comult, counit, s)
    }
}

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    #[test]
    fn group_hopf_c2() {
        let h = group_hopf(Field::Rational, &Group::cyclic(2)).unwrap();
        assert!(h.is_cocommutative());
        assert_eq!(h.dim(), 2);
        let s2 = h.antipode().mul(h.antipode());
        assert_eq!(s2, Matrix::identity(Field::Rational, 2));
    }

    #[test]
    fn bad_comultiplication_fails_counit() {
        let f = Field::Rational;
        let g = group_hopf(f, &Group::cyclic(2)).unwrap();
        let comult = vec![vec![(0, 0, f.one())], vec![(1, 0, f.one())]];
        let err = HopfAlgebra::new(
            g.algebra().clone(),
            comult,
            vec![f.one(), f.one()],
            Matrix::identity(f, 2),
        )
        .unwrap_err();
        match err {
            Error::HopfAxiom { axiom, .. } => assert_eq!(axiom, "counit"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn dual_group() {
        let f = Field::Rational;
        let d = dual_group_hopf(f, &Group::cyclic(2)).unwrap();
        assert_eq!(d.algebra().unit(), &[f.one(), f.one()]);
        assert!(d.is_cocommutative());
        assert!(!dual_group_hopf(f, &Group::symmetric3()).unwrap().is_cocommutative());
    }

    #[test]
    fn sweedler() {
        let f = Field::Rational;
        let h = sweedler_h4(f).unwrap();
        assert!(!h.is_cocommutative());
        let x = h.algebra().basis_vector(2);
        let s2x = h.antipode_of(&h.antipode_of(&x));
        assert_eq!(s2x, x.iter().map(|c| -c).collect::<Vec<_>>());
        assert!(h.has_bijective_antipode());
        assert!(sweedler_h4(Field::prime(2).unwrap()).unwrap_err().is_regime());
        sweedler_h4(Field::prime(3).unwrap()).unwrap();
    }
}
