//! Smash products as factorization structures on `A ⊗ B`, the maps `Ψ` and
//! `Φ`, and a registry of the constructions.

use crate::algebra::{sparse, Algebra};
use crate::error::{Error, Result};
use crate::extension::{Action, Extension};
use crate::field::{axpy, Field, Scalar};
use crate::hopf::{show, HopfAlgebra};
use crate::matrix::{Matrix, Subspace};
use crate::report::Check;

type Sparse = Vec<(usize, Scalar)>;

/// A linear map `ν: B₀ ⊗ A₀ → A₀ ⊗ B₀`; column `b * dim A₀ + a` holds
/// `ν(b ⊗ a)` in the basis `a' * dim B₀ + b'`.
#[derive(Clone, Debug)]
pub struct TwistMap {
    source: Algebra,
    target: Algebra,
    columns: Vec<Sparse>,
}

/// Outcome of [`check_factorization`].
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub checks: Vec<Check>,
    /// The algebra `A₀ ⊗ B₀` when every condition holds.
    pub algebra: Option<Algebra>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.algebra.is_some()
    }

    pub fn into_algebra(self) -> Result<Algebra> {
        if let Some(a) = self.algebra {
            return Ok(a);
        }
        let failed = self.checks.into_iter().find(|c| !c.pass).expect("a failing check");
        Err(Error::Factorization {
            condition: failed.name,
            witness: failed.witness.unwrap_or_default(),
        })
    }
}

impl TwistMap {
    /// `source` is `B₀`, `target` is `A₀`.
    pub fn new(source: Algebra, target: Algebra, columns: Vec<Vec<Scalar>>) -> Result<Self> {
        let (nb, na) = (source.dim(), target.dim());
        if columns.len() != nb * na {
            return Err(Error::dim("twist map columns", nb * na, columns.len()));
        }
        for c in &columns {
            if c.len() != na * nb {
                return Err(Error::dim("twist map column length", na * nb, c.len()));
            }
        }
        Ok(TwistMap {
            source,
            target,
            columns: columns.iter().map(|c| sparse(c)).collect(),
        })
    }

    pub fn from_matrix(source: Algebra, target: Algebra, m: &Matrix) -> Result<Self> {
        let cols = (0..m.cols()).map(|j| m.column(j)).collect();
        TwistMap::new(source, target, cols)
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    pub fn matrix(&self) -> Matrix {
        let f = self.target.field();
        let n = self.target.dim() * self.source.dim();
        let cols: Vec<Vec<Scalar>> = self.columns.iter().map(|c| densify(f, n, c)).collect();
        Matrix::from_columns(f, n, &cols)
    }

    fn nu(&self, b: usize, a: usize) -> &Sparse {
        &self.columns[b * self.target.dim() + a]
    }

    /// `ν` on `b ⊗ x` for an arbitrary `x ∈ A₀`.
    fn nu_basis_vec(&self, b: usize, x: &[Scalar]) -> Vec<Scalar> {
        let f = self.target.field();
        let n = self.target.dim() * self.source.dim();
        let mut out = f.zeros(n);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (m, d) in self.nu(b, a) {
                    out[*m] = &out[*m] + &(c * d);
                }
            }
        }
        out
    }

    /// `ν` on `y ⊗ a` for an arbitrary `y ∈ B₀`.
    fn nu_vec_basis(&self, y: &[Scalar], a: usize) -> Vec<Scalar> {
        let f = self.target.field();
        let n = self.target.dim() * self.source.dim();
        let mut out = f.zeros(n);
        for (b, c) in y.iter().enumerate() {
            if !c.is_zero() {
                for (m, d) in self.nu(b, a) {
                    out[*m] = &out[*m] + &(c * d);
                }
            }
        }
        out
    }
}

fn densify(f: Field, n: usize, s: &Sparse) -> Vec<Scalar> {
    let mut v = f.zeros(n);
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

/// Checks the two unit conditions and the two commuting diagrams on every
/// basis triple, then builds `A₀ ⊗ B₀` with `(μ_A ⊗ μ_B)(1 ⊗ ν ⊗ 1)`.
pub fn check_factorization(t: &TwistMap) -> Result<FactorizationReport> {
    let (a0, b0) = (&t.target, &t.source);
    if a0.field() != b0.field() {
        return Err(Error::FieldMismatch("twist map factors".into()));
    }
    let f = a0.field();
    let (na, nb) = (a0.dim(), b0.dim());
    let tensor = |a: &[Scalar], b: &[Scalar]| crate::algebra::tensor_vectors(a, b);
    let mut checks = Vec::new();

    // ν(b ⊗ 1_A) = 1_A ⊗ b
    let mut w = None;
    for b in 0..nb {
        if t.nu_basis_vec(b, a0.unit()) != tensor(a0.unit(), &b0.basis_vector(b)) {
            w = Some(format!("b = {}", b0.basis_name(b)));
            break;
        }
    }
    checks.push(verdict("unit: nu(b⊗1) = 1⊗b", w));

    // ν(1_B ⊗ a) = a ⊗ 1_B
    let mut w = None;
    for a in 0..na {
        if t.nu_vec_basis(b0.unit(), a) != tensor(&a0.basis_vector(a), b0.unit()) {
            w = Some(format!("a = {}", a0.basis_name(a)));
            break;
        }
    }
    checks.push(verdict("unit: nu(1⊗a) = a⊗1", w));

    // ν(μ_B ⊗ 1) = (1 ⊗ μ_B)(ν ⊗ 1)(1 ⊗ ν) on B ⊗ B ⊗ A
    let mut w = None;
    'outer: for b in 0..nb {
        for c in 0..nb {
            for a in 0..na {
                let left = t.nu_vec_basis(&b0.basis_product(b, c), a);
                let mut right = f.zeros(na * nb);
                for (m, d) in t.nu(c, a) {
                    let (a1, c1) = (m / nb, m % nb);
                    for (m2, e) in t.nu(b, a1) {
                        let (a2, b2) = (m2 / nb, m2 % nb);
                        let prod = b0.basis_product(b2, c1);
                        let coeff = d * e;
                        for (k, s) in prod.iter().enumerate() {
                            if !s.is_zero() {
                                let idx = a2 * nb + k;
                                right[idx] = &right[idx] + &(&coeff * s);
                            }
                        }
                    }
                }
                if left != right {
                    w = Some(format!(
                        "({}, {}, {})",
                        b0.basis_name(b),
                        b0.basis_name(c),
                        a0.basis_name(a)
                    ));
                    break 'outer;
                }
            }
        }
    }
    checks.push(verdict("diagram: nu(mu_B⊗1) = (1⊗mu_B)(nu⊗1)(1⊗nu)", w));

    // ν(1 ⊗ μ_A) = (μ_A ⊗ 1)(1 ⊗ ν)(ν ⊗ 1) on B ⊗ A ⊗ A
    let mut w = None;
    'outer2: for b in 0..nb {
        for a in 0..na {
            for c in 0..na {
                let left = t.nu_basis_vec(b, &a0.basis_product(a, c));
                let mut right = f.zeros(na * nb);
                for (m, d) in t.nu(b, a) {
                    let (a1, b1) = (m / nb, m % nb);
                    for (m2, e) in t.nu(b1, c) {
                        let (c2, b2) = (m2 / nb, m2 % nb);
                        let prod = a0.basis_product(a1, c2);
                        let coeff = d * e;
                        for (k, s) in prod.iter().enumerate() {
                            if !s.is_zero() {
                                let idx = k * nb + b2;
                                right[idx] = &right[idx] + &(&coeff * s);
                            }
                        }
                    }
                }
                if left != right {
                    w = Some(format!(
                        "({}, {}, {})",
                        b0.basis_name(b),
                        a0.basis_name(a),
                        a0.basis_name(c)
                    ));
                    break 'outer2;
                }
            }
        }
    }
    checks.push(verdict("diagram: nu(1⊗mu_A) = (mu_A⊗1)(1⊗nu)(nu⊗1)", w));

    if !checks.iter().all(|c| c.pass) {
        return Ok(FactorizationReport {
            checks,
            algebra: None,
        });
    }
    let algebra = twisted_tensor(t)?;
    let assoc = match algebra.verify() {
        Ok(()) => Check::pass("smash algebra associative and unital"),
        Err(e) => Check::fail("smash algebra associative and unital", e.to_string()),
    };
    let ok = assoc.pass;
    checks.push(assoc);
    Ok(FactorizationReport {
        checks,
        algebra: ok.then_some(algebra),
    })
}

fn verdict(name: &str, witness: Option<String>) -> Check {
    match witness {
        None => Check::pass(name),
        Some(w) => Check::fail(name, w),
    }
}

/// `(a ⊗ b)(a' ⊗ b') = Σ a a'' ⊗ b'' b'` where `ν(b ⊗ a') = Σ a'' ⊗ b''`.
fn twisted_tensor(t: &TwistMap) -> Result<Algebra> {
    let (a0, b0) = (&t.target, &t.source);
    let f = a0.field();
    let (na, nb) = (a0.dim(), b0.dim());
    let n = na * nb;
    let unit = crate::algebra::tensor_vectors(a0.unit(), b0.unit());
    let products = |x: usize, y: usize| {
        let (a, b) = (x / nb, x % nb);
        let (a2, b2) = (y / nb, y % nb);
        let mut out = f.zeros(n);
        for (m, c) in t.nu(b, a2) {
            let (a3, b3) = (m / nb, m % nb);
            let pa = a0.basis_product(a, a3);
            let pb = b0.basis_product(b3, b2);
            for (i, s) in pa.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                for (j, r) in pb.iter().enumerate() {
                    if !r.is_zero() {
                        let idx = i * nb + j;
                        out[idx] = &out[idx] + &(&(c * s) * r);
                    }
                }
            }
        }
        out
    };
    Algebra::from_dense_products(f, unit, products)
}

/// `ν(h ⊗ u) = Σ h₁·u ⊗ h₂` for a family of operators `λ` on `u`'s algebra.
/// With `λ` a module-algebra action this realizes the ordinary smash product.
pub fn action_twist(hopf: &HopfAlgebra, algebra: &Algebra, lambda: &[Matrix]) -> Result<TwistMap> {
    let (nh, n) = (hopf.dim(), algebra.dim());
    let f = algebra.field();
    let mut cols = Vec::with_capacity(nh * n);
    for h in 0..nh {
        for a in 0..n {
            let mut v = f.zeros(n * nh);
            for (j, k, c) in hopf.delta_terms(h) {
                let moved = lambda[j].column(a);
                for (m, s) in moved.iter().enumerate() {
                    if !s.is_zero() {
                        let idx = m * nh + k;
                        v[idx] = &v[idx] + &(&c * s);
                    }
                }
            }
            cols.push(v);
        }
    }
    TwistMap::new(hopf.algebra().clone(), algebra.clone(), cols)
}

/// Names `a#h` for an `A ⊗ H` basis.
fn pair_names(a: &Algebra, b: &Algebra, sep: &str) -> Vec<String> {
    (0..a.dim())
        .flat_map(|i| (0..b.dim()).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}{sep}{}", a.basis_name(i), b.basis_name(j)))
        .collect()
}

/// `A # H`: `(a # h)(b # g) = Σ a(h₁·b) # h₂g`, basis `a * dim H + h`.
pub fn smash_ah(act: &Action) -> Result<(Algebra, FactorizationReport)> {
    let t = action_twist(act.hopf(), act.algebra(), act.lambda())?;
    finish(t, pair_names(act.algebra(), act.hopf().algebra(), "#"))
}

fn finish(t: TwistMap, names: Vec<String>) -> Result<(Algebra, FactorizationReport)> {
    let report = check_factorization(&t)?;
    let alg = report.clone().into_algebra()?;
    Ok((alg.with_names(names), report))
}

/// The enveloping algebra `A ⊗ A^op` with names `a⊗b`.
pub fn enveloping(a: &Algebra) -> Algebra {
    let e = a.tensor(&a.opposite());
    let names = pair_names(a, a, "⊗");
    e.with_names(names)
}

/// `ν(h ⊗ a ⊗ b) = Σ (h₁·a) ⊗ (h₃·b) ⊗ h₂` on `H ⊗ A^e`.
pub fn nu_twist(act: &Action) -> Result<TwistMap> {
    let (h, a) = (act.hopf(), act.algebra());
    let (nh, n) = (h.dim(), a.dim());
    let f = a.field();
    let ae = enveloping(a);
    let mut cols = Vec::with_capacity(nh * n * n);
    for hi in 0..nh {
        let d2 = h.delta2_terms(hi);
        for x in 0..n {
            for y in 0..n {
                let mut v = f.zeros(n * n * nh);
                for (h1, h2, h3, c) in &d2 {
                    let ha = act.lambda()[*h1].column(x);
                    let hb = act.lambda()[*h3].column(y);
                    for (i, s) in ha.iter().enumerate() {
                        if s.is_zero() {
                            continue;
                        }
                        for (j, r) in hb.iter().enumerate() {
                            if !r.is_zero() {
                                let idx = (i * n + j) * nh + h2;
                                v[idx] = &v[idx] + &(&(c * s) * r);
                            }
                        }
                    }
                }
                cols.push(v);
            }
        }
    }
    TwistMap::new(h.algebra().clone(), ae, cols)
}

/// `A^e #_ν H`, basis `(a * n + b) * dim H + h`.
pub fn nu_smash(act: &Action) -> Result<(Algebra, FactorizationReport)> {
    let t = nu_twist(act)?;
    let names = pair_names(&enveloping(act.algebra()), act.hopf().algebra(), "#");
    finish(t, names)
}

/// `σ(b ⊗ a#h) = Σ a#h₁ ⊗ S(h₂)·b` on `A^op ⊗ (A#H)`.
pub fn sigma_twist(act: &Action, ah: &Algebra) -> Result<TwistMap> {
    let (h, a) = (act.hopf(), act.algebra());
    let (nh, n) = (h.dim(), a.dim());
    let f = a.field();
    let mut cols = Vec::with_capacity(n * n * nh);
    for b in 0..n {
        for x in 0..n {
            for hi in 0..nh {
                let mut v = f.zeros(n * nh * n);
                for (h1, h2, c) in h.delta_terms(hi) {
                    let s = h.antipode().column(h2);
                    let moved = act.lambda_of(&s).column(b);
                    for (k, r) in moved.iter().enumerate() {
                        if !r.is_zero() {
                            let idx = (x * nh + h1) * n + k;
                            v[idx] = &v[idx] + &(&c * r);
                        }
                    }
                }
                cols.push(v);
            }
        }
    }
    TwistMap::new(a.opposite(), ah.clone(), cols)
}

/// `(A#H) #_σ A^op`, basis `(a * dim H + h) * n + x`.
pub fn sigma_smash(act: &Action) -> Result<(Algebra, FactorizationReport)> {
    let (ah, _) = smash_ah(act)?;
    let t = sigma_twist(act, &ah)?;
    let names = pair_names(&ah, act.algebra(), "⊗");
    finish(t, names)
}

/// `Ψ(a#h ⊗ x) = Σ (a ⊗ h₂·x) # h₁` as a matrix from the σ-smash basis to
/// the ν-smash basis.
pub fn psi_matrix(act: &Action) -> Matrix {
    let (h, a) = (act.hopf(), act.algebra());
    let (nh, n) = (h.dim(), a.dim());
    let f = a.field();
    let dim = n * nh * n;
    let mut cols = Vec::with_capacity(dim);
    for ai in 0..n {
        for hi in 0..nh {
            for x in 0..n {
                let mut v = f.zeros(dim);
                for (h1, h2, c) in h.delta_terms(hi) {
                    let moved = act.lambda()[h2].column(x);
                    for (k, r) in moved.iter().enumerate() {
                        if !r.is_zero() {
                            let idx = (ai * n + k) * nh + h1;
                            v[idx] = &v[idx] + &(&c * r);
                        }
                    }
                }
                cols.push(v);
            }
        }
    }
    Matrix::from_columns(f, dim, &cols)
}

/// Linear map `source → target` given by a matrix is bijective and
/// multiplicative on all basis pairs.
pub fn check_isomorphism(source: &Algebra, target: &Algebra, m: &Matrix) -> Vec<Check> {
    let bij = if m.rows() == m.cols() && m.inverse().is_some() {
        Check::pass("psi bijective")
    } else {
        Check::fail("psi bijective", format!("rank {}", m.rank()))
    };
    let mut w = None;
    'outer: for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = m.apply(&source.basis_product(i, j));
            let rhs = target.mul(&m.column(i), &m.column(j));
            if lhs != rhs {
                w = Some(format!("({}, {})", source.basis_name(i), source.basis_name(j)));
                break 'outer;
            }
        }
    }
    let unit = if m.apply(source.unit()) == target.unit() {
        Check::pass("psi unital")
    } else {
        Check::fail("psi unital", show(&m.apply(source.unit())))
    };
    vec![bij, verdict("psi multiplicative", w), unit]
}

/// The ν-smash product, the σ-smash product, and `Ψ` between them.
#[derive(Clone, Debug)]
pub struct PsiResult {
    pub nu: Algebra,
    pub sigma: Algebra,
    pub psi: Matrix,
    pub checks: Vec<Check>,
}

pub fn sigma_smash_and_psi(act: &Action) -> Result<PsiResult> {
    let (nu, nu_report) = nu_smash(act)?;
    let (sigma, sigma_report) = sigma_smash(act)?;
    let psi = psi_matrix(act);
    let mut checks: Vec<Check> = nu_report
        .checks
        .into_iter()
        .map(|c| prefixed("nu", c))
        .chain(sigma_report.checks.into_iter().map(|c| prefixed("sigma", c)))
        .collect();
    let iso = check_isomorphism(&sigma, &nu, &psi);
    if let Some(bad) = iso.iter().find(|c| !c.pass) {
        return Err(Error::Internal(format!(
            "{} fails at {}",
            bad.name,
            bad.witness.clone().unwrap_or_default()
        )));
    }
    checks.extend(iso);
    Ok(PsiResult {
        nu,
        sigma,
        psi,
        checks,
    })
}

fn prefixed(p: &str, mut c: Check) -> Check {
    c.name = format!("{p} {}", c.name);
    c
}

/// `Φ((a ⊗ b) # h) = L_a R_b λ_h` and its kernel `Ann(A)`.
#[derive(Clone, Debug)]
pub struct PhiResult {
    pub smash: Algebra,
    /// Columns are the flattened operators `Φ(e_i)`.
    pub phi: Matrix,
    pub extension: Extension,
    pub kernel: Subspace,
    pub checks: Vec<Check>,
}

pub fn phi_operator(act: &Action, a: usize, b: usize, h: usize) -> Matrix {
    let alg = act.algebra();
    alg.left_mult(&alg.basis_vector(a))
        .mul(&alg.right_mult(&alg.basis_vector(b)))
        .mul(&act.lambda()[h])
}

pub fn phi_action(act: &Action) -> Result<PhiResult> {
    let (smash, _) = nu_smash(act)?;
    let (h, a) = (act.hopf(), act.algebra());
    let (nh, n) = (h.dim(), a.dim());
    let f = a.field();
    let mut ops = Vec::with_capacity(n * n * nh);
    for x in 0..n {
        for y in 0..n {
            for hi in 0..nh {
                ops.push(phi_operator(act, x, y, hi));
            }
        }
    }
    let cols: Vec<Vec<Scalar>> = ops.iter().map(|m| m.flat().to_vec()).collect();
    let phi = Matrix::from_columns(f, n * n, &cols);
    let mut checks = Vec::new();
    let mut w = None;
    'outer: for i in 0..smash.dim() {
        for j in 0..smash.dim() {
            let lhs = phi.apply(&smash.basis_product(i, j));
            let rhs = ops[i].mul(&ops[j]);
            if lhs != rhs.flat() {
                w = Some(format!("({}, {})", smash.basis_name(i), smash.basis_name(j)));
                break 'outer;
            }
        }
    }
    if let Some(w) = w {
        return Err(Error::Internal(format!("Phi is not multiplicative at {w}")));
    }
    checks.push(Check::pass("phi multiplicative"));
    let extension = Extension::from_action(act.clone())?;
    let image = Subspace::span(f, n * n, &cols);
    if &image != extension.operators().span() {
        return Err(Error::Internal("image of Phi differs from M_H(A)".into()));
    }
    checks.push(Check::note("phi image = M_H(A)", format!("dim {}", image.dim())));
    let kernel = phi.kernel();
    let ann_ok = kernel.basis().iter().all(|z| {
        (0..n).all(|k| {
            let op = Matrix::from_flat(f, n, &phi.apply(z));
            op.apply(&a.basis_vector(k)).iter().all(|c| c.is_zero())
        })
    });
    checks.push(if ann_ok {
        Check::note("phi kernel = Ann(A)", format!("dim {}", kernel.dim()))
    } else {
        Check::fail("phi kernel = Ann(A)", "kernel element acts nontrivially")
    });
    Ok(PhiResult {
        smash,
        phi,
        extension,
        kernel,
        checks,
    })
}

/// The ordinary smash product `A^e # H` for the diagonal action
/// `h·(a ⊗ b) = Σ h₁·a ⊗ h₂·b`. Associativity is verified, so this fails for
/// actions where `A^e` is not a module algebra.
pub fn ordinary_smash(act: &Action) -> Result<(Algebra, FactorizationReport)> {
    let (h, a) = (act.hopf(), act.algebra());
    let f = a.field();
    let n = a.dim();
    let lambda_e: Vec<Matrix> = (0..h.dim())
        .map(|hi| {
            let mut acc = Matrix::zeros(f, n * n, n * n);
            for (j, k, c) in h.delta_terms(hi) {
                acc = acc.add(&act.lambda()[j].kronecker(&act.lambda()[k]).scale(&c));
            }
            acc
        })
        .collect();
    let ae = enveloping(a);
    let t = action_twist(h, &ae, &lambda_e)?;
    finish(t, pair_names(&ae, h.algebra(), "#"))
}

/// Tables of `A^e #_ν H` and the ordinary smash product agree entry for
/// entry.
pub fn tables_equal(x: &Algebra, y: &Algebra) -> bool {
    x.dim() == y.dim() && x.structure_constants() == y.structure_constants() && x.unit() == y.unit()
}

/// `a ↦ a#1` into `A#H` and `a ↦ (a⊗1)#1` into `A^e #_ν H` are algebra
/// maps, and `Φ ∘ Ψ` on `(a#h) ⊗ 1` recovers `L_a λ_h`.
pub fn check_embeddings(act: &Action) -> Result<Vec<Check>> {
    let (h, a) = (act.hopf(), act.algebra());
    let (nh, n) = (h.dim(), a.dim());
    let f = a.field();
    let (ah, _) = smash_ah(act)?;
    let psi = sigma_smash_and_psi(act)?;
    let phi = phi_action(act)?;
    let hunit = h.algebra().unit();
    let into_ah = |v: &[Scalar]| crate::algebra::tensor_vectors(v, hunit);
    let into_nu = |v: &[Scalar]| {
        let ae = crate::algebra::tensor_vectors(v, a.unit());
        crate::algebra::tensor_vectors(&ae, hunit)
    };
    let mut checks = Vec::new();
    let mut bad_ah = None;
    let mut bad_nu = None;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let p = a.basis_product(i, j);
            if into_ah(&p) != ah.mul(&into_ah(&x), &into_ah(&y)) {
                bad_ah.get_or_insert(format!("({}, {})", a.basis_name(i), a.basis_name(j)));
            }
            if into_nu(&p) != psi.nu.mul(&into_nu(&x), &into_nu(&y)) {
                bad_nu.get_or_insert(format!("({}, {})", a.basis_name(i), a.basis_name(j)));
            }
        }
    }
    checks.push(verdict("A -> A#H is an algebra map", bad_ah));
    checks.push(verdict("A -> A^e#_nu H is an algebra map", bad_nu));
    // Φ((a⊗1)#1) = L_a
    let mut w = None;
    for i in 0..n {
        let op = Matrix::from_flat(f, n, &phi.phi.apply(&into_nu(&a.basis_vector(i))));
        if op != a.left_mult(&a.basis_vector(i)) {
            w = Some(a.basis_name(i));
            break;
        }
    }
    checks.push(verdict("Phi extends left multiplication", w));
    // Φ ∘ Ψ on (a#h) ⊗ 1 equals L_a λ_h
    let mut w = None;
    'outer: for ai in 0..n {
        for hi in 0..nh {
            let src = crate::algebra::tensor_vectors(&ah.basis_vector(ai * nh + hi), a.unit());
            let op = Matrix::from_flat(f, n, &phi.phi.apply(&psi.psi.apply(&src)));
            let expected = a.left_mult(&a.basis_vector(ai)).mul(&act.lambda()[hi]);
            if op != expected {
                w = Some(format!("{}#{}", a.basis_name(ai), h.algebra().basis_name(hi)));
                break 'outer;
            }
        }
    }
    checks.push(verdict("Phi∘Psi restricted to A#H = action map", w));
    Ok(checks)
}

/// A smash-product construction selectable by name.
pub trait SmashConstruction: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn build(&self, act: &Action) -> Result<SmashProduct>;
}

#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub name: &'static str,
    pub algebra: Algebra,
    pub checks: Vec<Check>,
}

struct Ah;
struct Nu;
struct Sigma;
struct Ordinary;

impl SmashConstruction for Ah {
    fn name(&self) -> &'static str {
        "ah"
    }
    fn description(&self) -> &'static str {
        "A # H"
    }
    fn build(&self, act: &Action) -> Result<SmashProduct> {
        let (algebra, r) = smash_ah(act)?;
        Ok(SmashProduct {
            name: self.name(),
            algebra,
            checks: r.checks,
        })
    }
}

impl SmashConstruction for Nu {
    fn name(&self) -> &'static str {
        "nu"
    }
    fn description(&self) -> &'static str {
        "A^e #_nu H"
    }
    fn build(&self, act: &Action) -> Result<SmashProduct> {
        let (algebra, r) = nu_smash(act)?;
        let mut checks = r.checks;
        checks.extend(phi_action(act)?.checks);
        Ok(SmashProduct {
            name: self.name(),
            algebra,
            checks,
        })
    }
}

impl SmashConstruction for Sigma {
    fn name(&self) -> &'static str {
        "sigma"
    }
    fn description(&self) -> &'static str {
        "(A # H) #_sigma A^op"
    }
    fn build(&self, act: &Action) -> Result<SmashProduct> {
        let r = sigma_smash_and_psi(act)?;
        Ok(SmashProduct {
            name: self.name(),
            algebra: r.sigma,
            checks: r.checks,
        })
    }
}

impl SmashConstruction for Ordinary {
    fn name(&self) -> &'static str {
        "ordinary"
    }
    fn description(&self) -> &'static str {
        "A^e # H for the diagonal action"
    }
    fn build(&self, act: &Action) -> Result<SmashProduct> {
        let (algebra, r) = ordinary_smash(act)?;
        let mut checks = r.checks;
        let (nu, _) = nu_smash(act)?;
        let equal = tables_equal(&algebra, &nu);
        let cocommutative = act.hopf().is_cocommutative();
        checks.push(if equal || !cocommutative {
            Check::note("equals nu table", equal.to_string())
        } else {
            Check::fail("equals nu table", "cocommutative H but tables differ")
        });
        Ok(SmashProduct {
            name: self.name(),
            algebra,
            checks,
        })
    }
}

pub struct SmashRegistry {
    entries: Vec<Box<dyn SmashConstruction>>,
}

impl Default for SmashRegistry {
    fn default() -> Self {
        SmashRegistry {
            entries: vec![Box::new(Ah), Box::new(Nu), Box::new(Sigma), Box::new(Ordinary)],
        }
    }
}

impl SmashRegistry {
    pub fn register(&mut self, c: Box<dyn SmashConstruction>) {
        self.entries.push(c);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn SmashConstruction> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| {
                Error::parse(
                    "/product",
                    format!("unknown smash product '{name}' (known: {})", self.names().join(", ")),
                )
            })
    }
}

/// Sum `Σ c_i v_i` helper for callers assembling smash elements.
pub fn element(field: Field, dim: usize, terms: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = field.zeros(dim);
    for (i, c) in terms {
        axpy(&mut v, c, &field.unit_vector(dim, *i));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::split_product;
    use crate::group::Group;
    use crate::hopf::builders::{group_hopf, sweedler_h4, trivial};

    fn swap_action() -> Action {
        let f = Field::Rational;
        let h = group_hopf(f, &Group::cyclic(2)).unwrap();
        let a = split_product(f, 2).unwrap();
        let swap = Matrix::from_columns(f, 2, &[f.unit_vector(2, 1), f.unit_vector(2, 0)]);
        Action::new(h, a, vec![Matrix::identity(f, 2), swap]).unwrap()
    }

    #[test]
    fn flip_map_gives_tensor_product() {
        let f = Field::Rational;
        let a = split_product(f, 2).unwrap();
        let b = split_product(f, 2).unwrap();
        let mut cols = Vec::new();
        for bi in 0..2 {
            for ai in 0..2 {
                cols.push(f.unit_vector(4, ai * 2 + bi));
            }
        }
        let t = TwistMap::new(b.clone(), a.clone(), cols).unwrap();
        let r = check_factorization(&t).unwrap();
        assert!(r.passed());
        assert!(tables_equal(r.algebra.as_ref().unwrap(), &a.tensor(&b)));
    }

    #[test]
    fn skew_group_ring_of_swap_is_m2() {
        let act = swap_action();
        let (ah, _) = smash_ah(&act).unwrap();
        assert_eq!(ah.dim(), 4);
        assert!(ah.center().dim() == 1);
        assert!(ah.radical(&crate::RadicalSolver::auto()).unwrap().is_zero());
    }

    #[test]
    fn nu_and_sigma_for_swap() {
        let act = swap_action();
        let r = sigma_smash_and_psi(&act).unwrap();
        assert_eq!(r.nu.dim(), 8);
        assert!(r.checks.iter().all(|c| c.pass));
        let phi = phi_action(&act).unwrap();
        assert_eq!(phi.kernel.dim(), 4);
        let (ord, _) = ordinary_smash(&act).unwrap();
        assert!(tables_equal(&ord, &r.nu));
        assert!(check_embeddings(&act).unwrap().iter().all(|c| c.pass));
    }

    #[test]
    fn trivial_hopf_psi_is_identity() {
        let f = Field::Rational;
        let a = split_product(f, 2).unwrap();
        let act = Action::new(trivial(f).unwrap(), a, vec![Matrix::identity(f, 2)]).unwrap();
        let r = sigma_smash_and_psi(&act).unwrap();
        assert_eq!(r.psi, Matrix::identity(f, 4));
    }

    #[test]
    fn broken_twist_fails_unit_condition() {
        let f = Field::Rational;
        let h = sweedler_h4(f).unwrap();
        let a = split_product(f, 1).unwrap();
        // ν(g⊗a) = a⊗g, ν(x⊗a) = 0, ν(1⊗a) = a⊗1, ν(gx⊗a) = 0
        let cols = vec![
            f.unit_vector(4, 0),
            f.unit_vector(4, 1),
            f.zeros(4),
            f.zeros(4),
        ];
        let t = TwistMap::new(h.algebra().clone(), a, cols).unwrap();
        let r = check_factorization(&t).unwrap();
        assert!(!r.passed());
        assert!(!r.checks[0].pass);
        assert!(matches!(r.into_algebra(), Err(Error::Factorization { .. })));
    }

    #[test]
    fn registry_lookup() {
        let reg = SmashRegistry::default();
        assert_eq!(reg.names(), vec!["ah", "nu", "sigma", "ordinary"]);
        assert!(reg.get("xyz").is_err());
        let p = reg.get("ordinary").unwrap().build(&swap_action()).unwrap();
        assert!(p.checks.iter().all(|c| c.pass));
    }
}
