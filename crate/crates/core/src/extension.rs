//! Module-algebra actions and operator-generated extensions `A ⊆ B′ ⊆ End(A)`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfAlgebra;
use crate::matrix::{Matrix, Subspace};
use crate::operators::OperatorAlgebra;

/// A left `H`-module algebra structure on `A`, one matrix `λ_h` per basis
/// element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    hopf: HopfAlgebra,
    algebra: Algebra,
    lambda: Vec<Matrix>,
}

impl Action {
    /// Verifies measuring, then multiplicativity of `h ↦ λ_h`, then the unit
    /// condition `h·1 = ε(h)1`.
    pub fn new(hopf: HopfAlgebra, algebra: Algebra, lambda: Vec<Matrix>) -> Result<Self> {
        if hopf.field() != algebra.field() {
            return Err(Error::FieldMismatch("Hopf algebra and algebra".into()));
        }
        let (nh, n) = (hopf.dim(), algebra.dim());
        if lambda.len() != nh {
            return Err(Error::dim("action matrices", nh, lambda.len()));
        }
        for l in &lambda {
            if l.rows() != n || l.cols() != n {
                return Err(Error::dim("action matrix size", n, l.rows()));
            }
        }
        let act = Action {
            hopf,
            algebra,
            lambda,
        };
        act.verify()?;
        Ok(act)
    }

    fn verify(&self) -> Result<()> {
        let (h, a) = (&self.hopf, &self.algebra);
        let (nh, n) = (h.dim(), a.dim());
        let fail = |kind: &str, hi: usize, ai: usize| Error::Action {
            kind: kind.into(),
            h: hi,
            a: ai,
        };
        for hi in 0..nh {
            for ai in 0..n {
                let left = self.lambda[hi].mul(&a.left_mult(&a.basis_vector(ai)));
                let mut right = Matrix::zeros(a.field(), n, n);
                for (j, k, c) in h.delta_terms(hi) {
                    let moved = self.lambda[j].column(ai);
                    right = right.add(&a.left_mult(&moved).mul(&self.lambda[k]).scale(&c));
                }
                if left != right {
                    return Err(fail("measuring", hi, ai));
                }
            }
        }
        let id = Matrix::identity(a.field(), n);
        if self.lambda_of(h.algebra().unit()) != id {
            return Err(fail("unit acts as identity", 0, 0));
        }
        for i in 0..nh {
            for j in 0..nh {
                let prod = self.lambda_of(&h.algebra().basis_product(i, j));
                if prod != self.lambda[i].mul(&self.lambda[j]) {
                    return Err(fail("algebra map", i, j));
                }
            }
        }
        for hi in 0..nh {
            let expected: Vec<Scalar> = a.unit().iter().map(|u| u * &h.counit()[hi]).collect();
            if self.lambda[hi].apply(a.unit()) != expected {
                return Err(fail("unit condition", hi, 0));
            }
        }
        Ok(())
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &[Matrix] {
        &self.lambda
    }

    pub fn lambda_of(&self, h: &[Scalar]) -> Matrix {
        let n = self.algebra.dim();
        let mut acc = Matrix::zeros(self.algebra.field(), n, n);
        for (c, l) in h.iter().zip(&self.lambda) {
            if !c.is_zero() {
                acc = acc.add(&l.scale(c));
            }
        }
        acc
    }

    /// `e_h · a`.
    pub fn act(&self, h: usize, a: &[Scalar]) -> Vec<Scalar> {
        self.lambda[h].apply(a)
    }

    /// `A^H = {a : h·a = ε(h)a for all h}`.
    pub fn invariants(&self) -> Subspace {
        let n = self.algebra.dim();
        let f = self.algebra.field();
        let mut rows = Vec::new();
        for (hi, l) in self.lambda.iter().enumerate() {
            let shifted = l.sub(&Matrix::identity(f, n).scale(&self.hopf.counit()[hi]));
            rows.extend(shifted.row_vectors());
        }
        Matrix::from_rows(f, n, &rows).expect("square blocks").kernel()
    }
}

/// Which operators generate `B′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    /// Left multiplications only, plus any extra operators.
    Left,
    /// `M(A)`: left and right multiplications.
    Multiplication,
    /// `M_H(A)`: left and right multiplications and the action maps.
    Action,
}

impl GeneratorMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "left" => Some(GeneratorMode::Left),
            "multiplication" => Some(GeneratorMode::Multiplication),
            "action" | "both" => Some(GeneratorMode::Action),
            _ => None,
        }
    }
}

/// An extension `A ⊆ B` represented by `B′ = image of B in End(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    algebra: Algebra,
    generators: Vec<Matrix>,
    labels: Vec<String>,
    operators: OperatorAlgebra,
    has_multiplication_algebra: bool,
    alpha_kernel: Subspace,
    action: Option<Action>,
    /// Generators are exactly those of `M_H(A)`.
    hopf_derived: bool,
}

impl Extension {
    /// `B′` generated by the left multiplications and `extra`.
    pub fn from_generators(
        algebra: Algebra,
        extra: Vec<(String, Matrix)>,
        action: Option<Action>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut labels = Vec::new();
        let mut generators = Vec::new();
        for i in 0..n {
            labels.push(format!("L[{}]", algebra.basis_name(i)));
            generators.push(algebra.left_mult(&algebra.basis_vector(i)));
        }
        for (label, m) in extra {
            if m.rows() != n || m.cols() != n {
                return Err(Error::dim(format!("operator {label}"), n, m.rows()));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(format!("operator {label}")));
            }
            labels.push(label);
            generators.push(m);
        }
        let operators = OperatorAlgebra::generate(algebra.field(), n, &generators)?;
        let has_multiplication_algebra = algebra
            .right_basis_ops()
            .iter()
            .all(|r| operators.contains(r));
        let alpha_rows: Vec<Vec<Scalar>> = {
            let images: Vec<Vec<Scalar>> = operators
                .basis()
                .iter()
                .map(|b| b.apply(algebra.unit()))
                .collect();
            (0..n)
                .map(|k| images.iter().map(|v| v[k].clone()).collect())
                .collect()
        };
        let alpha_kernel = Matrix::from_rows(algebra.field(), operators.dim(), &alpha_rows)?.kernel();
        let e = Extension {
            algebra,
            generators,
            labels,
            operators,
            has_multiplication_algebra,
            alpha_kernel,
            action,
            hopf_derived: false,
        };
        if e.operators.dim() != e.algebra.dim() + e.alpha_kernel.dim() {
            return Err(Error::Internal("B' != A1 + Ker(alpha)".into()));
        }
        Ok(e)
    }

    /// Extension for the given mode; `extra` operators are always added.
    pub fn build(
        algebra: Algebra,
        mode: GeneratorMode,
        action: Option<Action>,
        extra: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut ops = Vec::new();
        if mode != GeneratorMode::Left {
            for i in 0..n {
                ops.push((
                    format!("R[{}]", algebra.basis_name(i)),
                    algebra.right_mult(&algebra.basis_vector(i)),
                ));
            }
        }
        if mode == GeneratorMode::Action {
            let act = action
                .as_ref()
                .ok_or_else(|| Error::Dependency("generators \"action\" needs an action".into()))?;
            if act.algebra() != &algebra {
                return Err(Error::Internal("action on a different algebra".into()));
            }
            for (i, l) in act.lambda().iter().enumerate() {
                ops.push((format!("λ[{}]", act.hopf().algebra().basis_name(i)), l.clone()));
            }
        }
        let hopf_derived = mode == GeneratorMode::Action && extra.is_empty();
        for (i, m) in extra.into_iter().enumerate() {
            ops.push((format!("extra[{i}]"), m));
        }
        let mut e = Extension::from_generators(algebra, ops, action)?;
        e.hopf_derived = hopf_derived;
        Ok(e)
    }

    pub fn multiplication(algebra: Algebra) -> Result<Self> {
        Extension::build(algebra, GeneratorMode::Multiplication, None, Vec::new())
    }

    pub fn from_action(action: Action) -> Result<Self> {
        let a = action.algebra().clone();
        Extension::build(a, GeneratorMode::Action, Some(action), Vec::new())
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

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn generator_label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn operators(&self) -> &OperatorAlgebra {
        &self.operators
    }

    pub fn has_multiplication_algebra(&self) -> bool {
        self.has_multiplication_algebra
    }

    pub fn require_multiplication_algebra(&self) -> Result<()> {
        if self.has_multiplication_algebra {
            Ok(())
        } else {
            Err(Error::MissingMultiplicationAlgebra)
        }
    }

    /// `Ker α` in coordinates of the `B′` basis.
    pub fn alpha_kernel(&self) -> &Subspace {
        &self.alpha_kernel
    }

    pub fn alpha_kernel_ops(&self) -> Vec<Matrix> {
        self.alpha_kernel
            .basis()
            .iter()
            .map(|c| self.operators.element(c))
            .collect()
    }

    /// Generators are exactly `M_H(A)` for the attached action.
    pub fn is_hopf_derived(&self) -> bool {
        self.hopf_derived
    }

    pub fn action(&self) -> Option<&Action> {
        self.action.as_ref()
    }

    /// `α(b) = b(1_A)`.
    pub fn alpha(&self, b: &Matrix) -> Vec<Scalar> {
        b.apply(self.algebra.unit())
    }

    /// First generator not mapping `s` into itself.
    pub fn unstable_generator(&self, s: &Subspace) -> Option<usize> {
        self.generators
            .iter()
            .position(|g| s.basis().iter().any(|v| !s.contains_vector(&g.apply(v))))
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        self.unstable_generator(s).is_none()
    }

    /// The tautological module `A`.
    pub fn regular_module(&self) -> BModule {
        BModule {
            dim: self.dim(),
            basis_action: self.operators.basis().to_vec(),
            generator_action: self.generators.clone(),
        }
    }

    /// `A^B`, computed definitionally and as `Ann_A(Ker α)`; the two must
    /// agree.
    pub fn invariants(&self) -> Result<Subspace> {
        let inv = self.module_invariants(&self.regular_module())?;
        if let (Some(act), true) = (&self.action, self.hopf_derived) {
            if self.algebra.center().intersect(&act.invariants()) != inv {
                return Err(Error::Internal("A^B differs from Z(A) ∩ A^H".into()));
            }
        }
        Ok(inv)
    }

    pub fn module_invariants(&self, m: &BModule) -> Result<Subspace> {
        let f = self.field();
        let d = m.dim;
        let mut def_rows = Vec::new();
        for (rho_b, b) in m.basis_action.iter().zip(self.operators.basis()) {
            let alpha_b = self.alpha(b);
            let l = self.algebra.left_mult(&alpha_b);
            let rho_l = m.act_operator(self, &l)?;
            def_rows.extend(rho_b.sub(&rho_l).row_vectors());
        }
        let definitional = Matrix::from_rows(f, d, &def_rows)?.kernel();
        let mut ann_rows = Vec::new();
        for k in self.alpha_kernel.basis() {
            ann_rows.extend(m.act_coords(k).row_vectors());
        }
        let annihilator = if ann_rows.is_empty() {
            Subspace::full(f, d)
        } else {
            Matrix::from_rows(f, d, &ann_rows)?.kernel()
        };
        if definitional != annihilator {
            return Err(Error::Internal(
                "invariants differ from the annihilator of Ker(alpha)".into(),
            ));
        }
        Ok(definitional)
    }

    /// Solves `t ∈ B′` with `Ker(α)·t = 0` and `t(1_A) = 1_A`.
    pub fn trace_element(&self) -> Result<Option<Matrix>> {
        let f = self.field();
        let b = self.operators.basis();
        let nb = b.len();
        let n = self.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for k in self.alpha_kernel_ops() {
            let prods: Vec<Matrix> = b.iter().map(|bi| k.mul(bi)).collect();
            for entry in 0..n * n {
                rows.push(prods.iter().map(|p| p.flat()[entry].clone()).collect());
                rhs.push(f.zero());
            }
        }
        let images: Vec<Vec<Scalar>> = b.iter().map(|bi| self.alpha(bi)).collect();
        for k in 0..n {
            rows.push(images.iter().map(|v| v[k].clone()).collect());
            rhs.push(self.algebra.unit()[k].clone());
        }
        let m = Matrix::from_rows(f, nb, &rows)?;
        Ok(m.solve(&rhs)?.map(|c| self.operators.element(&c)))
    }

    /// `End_B(A)`: matrices commuting with every generator.
    pub fn b_linear_endomorphisms(&self) -> Result<Vec<Matrix>> {
        let n = self.dim();
        let s = Subspace::full(self.field(), n);
        let sol = intertwiners(self.field(), &self.generators, &self.generators, &s, n)?;
        Ok(sol)
    }

    /// `f ↦ f(1_A)` is a bijection `End_B(A) → A^B` and multiplicative:
    /// `(g ∘ f)(1) = f(1) g(1)` with `f` applied first.
    pub fn check_endomorphism_correspondence(&self) -> Result<()> {
        let ends = self.b_linear_endomorphisms()?;
        let inv = self.invariants()?;
        let images: Vec<Vec<Scalar>> = ends.iter().map(|e| self.alpha(e)).collect();
        let span = Subspace::span(self.field(), self.dim(), &images);
        if span != inv || span.dim() != ends.len() {
            return Err(Error::Internal(
                "f -> f(1) is not a bijection End_B(A) -> A^B".into(),
            ));
        }
        let a = &self.algebra;
        for f in &ends {
            for g in &ends {
                if self.alpha(&g.mul(f)) != a.mul(&self.alpha(f), &self.alpha(g)) {
                    return Err(Error::Internal("f -> f(1) is not multiplicative".into()));
                }
            }
        }
        Ok(())
    }
}

/// A left `B′`-module given by the action of each generator; the action of
/// all of `B′` is derived and checked to be well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BModule {
    dim: usize,
    generator_action: Vec<Matrix>,
    /// `ρ(b_i)` for the basis `b_i` of `B′`.
    basis_action: Vec<Matrix>,
}

impl BModule {
    pub fn new(ext: &Extension, generator_action: Vec<Matrix>) -> Result<Self> {
        let gens = ext.generators();
        if generator_action.len() != gens.len() {
            return Err(Error::dim("module generator actions", gens.len(), generator_action.len()));
        }
        let d = generator_action[0].rows();
        let n = ext.dim();
        let f = ext.field();
        for m in &generator_action {
            if m.rows() != d || m.cols() != d {
                return Err(Error::dim("module operator size", d, m.rows()));
            }
        }
        // B′ acting on A ⊕ M by block-diagonal pairs
        let pairs: Vec<Matrix> = gens
            .iter()
            .zip(&generator_action)
            .map(|(g, m)| block_diag(f, g, m))
            .collect();
        let big = OperatorAlgebra::generate(f, n + d, &pairs)?;
        if big.dim() != ext.operators().dim() {
            return Err(Error::Internal(format!(
                "module action does not factor through B' ({} != {})",
                big.dim(),
                ext.operators().dim()
            )));
        }
        let firsts: Vec<Matrix> = big.basis().iter().map(|p| block(p, 0, n)).collect();
        let seconds: Vec<Matrix> = big.basis().iter().map(|p| block(p, n, d)).collect();
        let first_alg = OperatorAlgebra::from_basis(f, n, firsts)?;
        let basis_action = ext
            .operators()
            .basis()
            .iter()
            .map(|b| {
                let c = first_alg.coordinates(b).expect("projection is onto B'");
                let mut acc = Matrix::zeros(f, d, d);
                for (ci, s) in c.iter().zip(&seconds) {
                    if !ci.is_zero() {
                        acc = acc.add(&s.scale(ci));
                    }
                }
                acc
            })
            .collect();
        Ok(BModule {
            dim: d,
            generator_action,
            basis_action,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_action(&self) -> &[Matrix] {
        &self.generator_action
    }

    /// `ρ(b)` for `b` given in `B′` coordinates.
    pub fn act_coords(&self, coords: &[Scalar]) -> Matrix {
        let f = coords.first().map(|c| c.field()).unwrap_or(Field::Rational);
        let mut acc = Matrix::zeros(f, self.dim, self.dim);
        for (c, m) in coords.iter().zip(&self.basis_action) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    pub fn act_operator(&self, ext: &Extension, b: &Matrix) -> Result<Matrix> {
        let c = ext
            .operators()
            .coordinates(b)
            .ok_or_else(|| Error::Internal("operator outside B'".into()))?;
        Ok(self.act_coords(&c))
    }
}

/// Checks naturality of `f ↦ f(1)` along a `B`-linear `g: M → N`: for
/// every `f ∈ Hom_B(A, M)`, `g(f(1)) = (g ∘ f)(1)` with `g ∘ f ∈ Hom_B(A, N)`,
/// and `g` maps `M^B` into `N^B`.
pub fn check_naturality(ext: &Extension, m: &BModule, n: &BModule, g: &Matrix) -> Result<()> {
    let f = ext.field();
    for (gm, gn) in m.generator_action.iter().zip(&n.generator_action) {
        if gn.mul(g) != g.mul(gm) {
            return Err(Error::Internal("map is not B-linear".into()));
        }
    }
    let inv_m = ext.module_invariants(m)?;
    let inv_n = ext.module_invariants(n)?;
    for v in inv_m.basis() {
        if !inv_n.contains_vector(&g.apply(v)) {
            return Err(Error::Internal("g does not preserve invariants".into()));
        }
    }
    let a = ext.dim();
    let homs = intertwiners(
        f,
        ext.generators(),
        &m.generator_action,
        &Subspace::full(f, a),
        m.dim,
    )?;
    let unit = ext.algebra().unit();
    for h in &homs {
        let composed = g.mul(h);
        for (ga, gn) in ext.generators().iter().zip(&n.generator_action) {
            if composed.mul(ga) != gn.mul(&composed) {
                return Err(Error::Internal("g ∘ f is not B-linear".into()));
            }
        }
        if g.apply(&h.apply(unit)) != composed.apply(unit) {
            return Err(Error::Internal("naturality square fails".into()));
        }
    }
    Ok(())
}

/// Linear maps `f: S → k^d` (S given by its echelon basis) with
/// `f ∘ src_g|_S = dst_g ∘ f` for every generator, returned as `d × dim S`
/// matrices in `S`'s echelon coordinates. `S` must be stable under `src`.
pub fn intertwiners(
    field: Field,
    src: &[Matrix],
    dst: &[Matrix],
    s: &Subspace,
    d: usize,
) -> Result<Vec<Matrix>> {
    let restricted = OperatorAlgebra::restrict(src, s)?;
    let m = s.dim();
    // unknown f has entries f[r][c], index r * m + c
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (gs, gd) in restricted.iter().zip(dst) {
        // (f gs)[r][c] - (gd f)[r][c] = Σ_k f[r][k] gs[k][c] - Σ_k gd[r][k] f[k][c]
        for r in 0..d {
            for c in 0..m {
                let mut row = field.zeros(d * m);
                for k in 0..m {
                    row[r * m + k] = &row[r * m + k] + gs.get(k, c);
                }
                for k in 0..d {
                    row[k * m + c] = &row[k * m + c] - gd.get(r, k);
                }
                rows.push(row);
            }
        }
    }
    let sol = if rows.is_empty() {
        Subspace::full(field, d * m)
    } else {
        Matrix::from_rows(field, d * m, &rows)?.kernel()
    };
    Ok(sol
        .basis()
        .iter()
        .map(|v| Matrix::new(field, d, m, v.clone()).expect("shape"))
        .collect())
}

pub(crate) fn block_diag(f: Field, a: &Matrix, b: &Matrix) -> Matrix {
    let (n, d) = (a.rows(), b.rows());
    let mut m = Matrix::zeros(f, n + d, n + d);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..d {
        for j in 0..d {
            m.set(n + i, n + j, b.get(i, j).clone());
        }
    }
    m
}

pub(crate) fn block(m: &Matrix, start: usize, size: usize) -> Matrix {
    let f = m.field();
    let mut out = Matrix::zeros(f, size, size);
    for i in 0..size {
        for j in 0..size {
            out.set(i, j, m.get(start + i, start + j).clone());
        }
    }
    out
}
