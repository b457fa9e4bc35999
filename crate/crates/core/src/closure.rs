//! Extended centroid, the Martindale-type quotient `Q₀` and the central
//! closure, all evaluated at the socle `S`.
//!
//! Maps out of `S` are matrices in the echelon coordinates of `S`.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::enumerate::Oracle;
use crate::error::{Error, Result};
use crate::extension::{intertwiners, Extension};
use crate::field::{axpy, Field, Scalar};
use crate::hopf::show;
use crate::idempotents::{
    block_has_only_trivial_idempotents, frobenius_fixed_dim, primitive_idempotents, Decomposition,
};
use crate::ideals::{
    annihilators, check_socle_essential, generated_stable_ideal, is_b_semiprime, nilpotent_core,
    quotient_extension, socle,
};
use crate::matrix::{Matrix, Subspace};
use crate::operators::OperatorAlgebra;
use crate::radical::{all_vectors, composition_series, RadicalSolver, ENUMERATION_LIMIT};
use crate::report::Check;

/// `C = Hom_B(S, A)`, corestricted to `S`.
#[derive(Clone, Debug)]
pub struct Centroid {
    pub socle: Subspace,
    pub operators: OperatorAlgebra,
    pub algebra: Algebra,
    /// `R_x|_S` for `x` in a basis of `A^B`.
    pub invariant_image: Vec<Matrix>,
    pub checks: Vec<Check>,
}

impl Centroid {
    pub fn dim(&self) -> usize {
        self.operators.dim()
    }

    /// The operator on `S` for an element in coordinates of `C`.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        self.operators.element(coords)
    }
}

fn restrict(op: &Matrix, s: &Subspace) -> Result<Matrix> {
    Ok(OperatorAlgebra::restrict(std::slice::from_ref(op), s)?.remove(0))
}

/// Columns of `f: S → A` re-expressed in `S` coordinates.
fn corestrict(f: &Matrix, s: &Subspace) -> Option<Matrix> {
    let cols: Option<Vec<Vec<Scalar>>> = (0..f.cols()).map(|j| s.coordinates(&f.column(j))).collect();
    cols.map(|c| Matrix::from_columns(f.field(), s.dim(), &c))
}

fn require_semiprime(ext: &Extension, solver: &RadicalSolver) -> Result<()> {
    ext.require_multiplication_algebra()?;
    let core = nilpotent_core(ext, solver)?;
    if !core.is_zero() {
        return Err(Error::NotSemiprime { core_dim: core.dim() });
    }
    Ok(())
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

pub fn extended_centroid(ext: &Extension, solver: &RadicalSolver) -> Result<Centroid> {
    require_semiprime(ext, solver)?;
    let field = ext.field();
    let n = ext.dim();
    let a = ext.algebra();
    let s = socle(ext, solver)?;
    let gens = ext.generators();
    let maps = intertwiners(field, gens, gens, &s, n)?;
    let mut checks = Vec::new();
    let ops: Vec<Matrix> = maps
        .iter()
        .map(|f| corestrict(f, &s).ok_or_else(|| internal("B-linear map S → A leaves S")))
        .collect::<Result<_>>()?;
    checks.push(Check::pass("centroid corestricts to S"));
    let operators = OperatorAlgebra::from_basis(field, s.dim(), ops)?;
    operators.verify_closed()?;
    checks.push(Check::pass("centroid closed under composition"));
    for (i, x) in operators.basis().iter().enumerate() {
        for (j, y) in operators.basis().iter().enumerate().skip(i + 1) {
            if !x.commutes_with(y) {
                return Err(internal(format!("centroid basis elements {i} and {j} do not commute")));
            }
        }
    }
    checks.push(Check::pass("centroid commutative"));
    if !solver.radical(&operators)?.is_zero() {
        return Err(internal("centroid has a nonzero radical"));
    }
    checks.push(Check::pass("centroid radical zero"));
    let inv = ext.invariants()?;
    let mut invariant_image = Vec::new();
    for x in inv.basis() {
        let r = restrict(&a.right_mult(x), &s)?;
        if !operators.contains(&r) {
            return Err(internal(format!("R_x|_S not in the centroid for x = {}", show(x))));
        }
        invariant_image.push(r);
    }
    checks.push(Check::note("A^B maps into the centroid", format!("dim A^B = {}", inv.dim())));
    let unit = a.unit();
    if let Some(one) = s.coordinates(unit) {
        let ev = |m: &Matrix| s.combine(&m.apply(&one));
        for f in operators.basis() {
            for g in operators.basis() {
                if ev(&g.mul(f)) != a.mul(&ev(f), &ev(g)) {
                    return Err(internal("(g∘f)(1) != f(1)g(1) on the centroid"));
                }
            }
        }
        checks.push(Check::pass("evaluation at 1 multiplicative"));
    } else {
        checks.push(Check::note("evaluation at 1 multiplicative", "1 not in S"));
    }
    let algebra = operators.to_algebra()?;
    algebra.verify()?;
    Ok(Centroid {
        socle: s,
        operators,
        algebra,
        invariant_image,
        checks,
    })
}

pub fn centroid_idempotents(c: &Centroid) -> Result<Decomposition> {
    primitive_idempotents(&c.algebra)
}

#[derive(Clone, Debug)]
pub struct Martindale {
    pub socle: Subspace,
    /// Right-A-linear endomorphisms of `S`.
    pub q0: OperatorAlgebra,
    /// `L_{e_i}|_S` for the basis of `A`.
    pub embedding: Vec<Matrix>,
    pub centroid: Centroid,
    pub checks: Vec<Check>,
}

pub fn martindale_q0(ext: &Extension, solver: &RadicalSolver) -> Result<Martindale> {
    require_semiprime(ext, solver)?;
    let field = ext.field();
    let n = ext.dim();
    let a = ext.algebra();
    let s = socle(ext, solver)?;
    let mut checks = Vec::new();
    if a.product_space(&s, &s) != s {
        return Err(internal("S² != S on a semiprime instance"));
    }
    checks.push(Check::pass("S² = S"));
    let ann = annihilators(ext, solver, &s)?;
    if !ann.left_stable || !ann.right_stable {
        return Err(Error::StandingAssumption {
            ideal: format!("socle (dim {})", s.dim()),
        });
    }
    checks.push(Check::pass("annihilators of S stable"));
    let rights = a.right_basis_ops();
    let maps = intertwiners(field, &rights, &rights, &s, n)?;
    let ops: Vec<Matrix> = maps
        .iter()
        .map(|f| corestrict(f, &s).ok_or_else(|| internal("right-linear map S → A leaves S")))
        .collect::<Result<_>>()?;
    let q0 = OperatorAlgebra::from_basis(field, s.dim(), ops)?;
    q0.verify_closed()?;
    let embedding: Vec<Matrix> = a
        .left_basis_ops()
        .iter()
        .map(|l| restrict(l, &s))
        .collect::<Result<_>>()?;
    let flat: Vec<Vec<Scalar>> = embedding.iter().map(|m| m.flat().to_vec()).collect();
    if Subspace::span(field, s.dim() * s.dim(), &flat).dim() != n {
        return Err(internal("a ↦ L_a|_S is not injective"));
    }
    if !embedding.iter().all(|l| q0.contains(l)) {
        return Err(internal("L_a|_S is not right-A-linear"));
    }
    checks.push(Check::pass("A embeds in Q0"));
    let centroid = extended_centroid(ext, solver)?;
    for c in centroid.operators.basis() {
        if !q0.contains(c) {
            return Err(internal("centroid element outside Q0"));
        }
        if !q0.basis().iter().all(|q| q.commutes_with(c)) {
            return Err(internal("centroid element not central in Q0"));
        }
    }
    checks.push(Check::pass("centroid central in Q0"));
    let restricted = OperatorAlgebra::restrict(ext.generators(), &s)?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let comms: Vec<Vec<Matrix>> = q0
        .basis()
        .iter()
        .map(|q| restricted.iter().map(|g| q.mul(g).sub(&g.mul(q))).collect())
        .collect();
    for gi in 0..restricted.len() {
        for e in 0..s.dim() * s.dim() {
            rows.push(comms.iter().map(|c| c[gi].flat()[e].clone()).collect());
        }
    }
    let b_linear = if rows.is_empty() {
        q0.dim()
    } else {
        Matrix::from_rows(field, q0.dim(), &rows)?.kernel().dim()
    };
    if b_linear != centroid.dim() {
        return Err(internal(format!(
            "B-linear part of Q0 has dim {b_linear}, centroid has dim {}",
            centroid.dim()
        )));
    }
    checks.push(Check::pass("centroid = B-linear part of Q0"));
    Ok(Martindale {
        socle: s,
        q0,
        embedding,
        centroid,
        checks,
    })
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub martindale: Martindale,
    pub decomposition: Decomposition,
    /// Basis of `Â` as operators on `S`.
    pub basis: Vec<Matrix>,
    pub algebra: Algebra,
    /// `(Â, B̂)`.
    pub extension: Extension,
    /// `a ⊗ c ↦ L_a|_S ∘ c`, columns indexed `i * dim C + j`.
    pub assembly: Matrix,
    pub assembly_kernel: Subspace,
    pub checks: Vec<Check>,
}

impl Closure {
    pub fn centroid(&self) -> &Centroid {
        &self.martindale.centroid
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn udim(&self) -> usize {
        self.decomposition.count()
    }

    /// `Â` as a subspace of flattened operators on `S`.
    fn span(&self) -> Subspace {
        let s = self.martindale.socle.dim();
        let flat: Vec<Vec<Scalar>> = self.basis.iter().map(|m| m.flat().to_vec()).collect();
        Subspace::span(self.algebra.field(), s * s, &flat)
    }

    /// The operator `q ↦ Σ κ L_{g a_i} c_j` on `Â` induced by `g` on `A`.
    pub fn transport(&self, g: &Matrix) -> Result<Matrix> {
        let field = self.algebra.field();
        let dc = self.centroid().dim();
        let n = g.rows();
        let span = self.span();
        let cols: Result<Vec<Vec<Scalar>>> = self
            .basis
            .iter()
            .map(|q| {
                let kappa = self
                    .assembly
                    .solve(q.flat())?
                    .ok_or_else(|| internal("closure element outside the assembly image"))?;
                let moved = tensor_act(field, g, &kappa, n, dc);
                span.coordinates(&self.assembly.apply(&moved))
                    .ok_or_else(|| internal("transported operator leaves the closure"))
            })
            .collect();
        Ok(Matrix::from_columns(field, self.dim(), &cols?))
    }
}

/// `(g ⊗ 1) κ` for `κ ∈ A ⊗ C` indexed `i * dc + j`.
fn tensor_act(field: Field, g: &Matrix, kappa: &[Scalar], n: usize, dc: usize) -> Vec<Scalar> {
    let mut out = field.zeros(n * dc);
    for i in 0..n {
        for j in 0..dc {
            let c = &kappa[i * dc + j];
            if c.is_zero() {
                continue;
            }
            for r in 0..n {
                let gi = g.get(r, i);
                if !gi.is_zero() {
                    out[r * dc + j] = &out[r * dc + j] + &(gi * c);
                }
            }
        }
    }
    out
}

pub fn central_closure(ext: &Extension, solver: &RadicalSolver) -> Result<Closure> {
    let martindale = martindale_q0(ext, solver)?;
    let field = ext.field();
    let n = ext.dim();
    let s = martindale.socle.dim();
    let c = &martindale.centroid;
    let dc = c.dim();
    let mut checks = Vec::new();
    let mut cols = Vec::with_capacity(n * dc);
    for l in &martindale.embedding {
        for cj in c.operators.basis() {
            cols.push(l.mul(cj).flat().to_vec());
        }
    }
    let assembly = Matrix::from_columns(field, s * s, &cols);
    let kernel = assembly.kernel();
    for (gi, g) in ext.generators().iter().enumerate() {
        for k in kernel.basis() {
            let moved = tensor_act(field, g, k, n, dc);
            if !kernel.contains_vector(&moved) {
                return Err(Error::KernelNotStable {
                    generator: gi,
                    vector: show(k),
                });
            }
        }
    }
    checks.push(Check::note("assembly kernel stable", format!("kernel dim {}", kernel.dim())));
    let span = Subspace::span(field, s * s, &cols);
    let basis: Vec<Matrix> = span.basis().iter().map(|v| Matrix::from_flat(field, s, v)).collect();
    let ops = OperatorAlgebra::from_basis(field, s, basis.clone())?;
    ops.verify_closed()?;
    checks.push(Check::pass("closure closed under Q0 multiplication"));
    let algebra = ops.to_algebra()?;
    algebra.verify()?;
    let decomposition = centroid_idempotents(c)?;
    let mut closure = Closure {
        martindale,
        decomposition,
        basis,
        algebra: algebra.clone(),
        extension: Extension::multiplication(algebra.clone())?,
        assembly,
        assembly_kernel: kernel,
        checks: vec![],
    };
    let mut extra = Vec::new();
    for (gi, g) in ext.generators().iter().enumerate().skip(n) {
        extra.push((ext.generator_label(gi).to_string(), closure.transport(g)?));
    }
    for (j, cj) in closure.centroid().operators.basis().iter().enumerate() {
        let cols: Result<Vec<Vec<Scalar>>> = closure
            .basis
            .iter()
            .map(|q| {
                closure
                    .span()
                    .coordinates(q.mul(cj).flat())
                    .ok_or_else(|| internal("closure not a C-module"))
            })
            .collect();
        extra.push((format!("C[{j}]"), Matrix::from_columns(field, closure.dim(), &cols?)));
    }
    let hat = Extension::from_generators(algebra, extra, None)?;
    if !hat.has_multiplication_algebra() {
        return Err(internal("right multiplications of the closure are missing from B̂"));
    }
    closure.extension = hat;
    closure.checks = checks;
    Ok(closure)
}

/// `dim Â` without building `B̂`.
fn closure_dimension(ext: &Extension, solver: &RadicalSolver) -> Result<usize> {
    let m = martindale_q0(ext, solver)?;
    let s = m.socle.dim();
    let cols: Vec<Vec<Scalar>> = m
        .embedding
        .iter()
        .flat_map(|l| m.centroid.operators.basis().iter().map(move |c| l.mul(c).flat().to_vec()))
        .collect();
    Ok(Subspace::span(ext.field(), s * s, &cols).dim())
}

#[derive(Clone, Debug, Serialize)]
pub struct Uniform {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub udim: Option<usize>,
    pub prime: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Goldie dimension as the number of field factors of the centroid.
pub fn uniform_dimension_and_prime(ext: &Extension, solver: &RadicalSolver) -> Result<Uniform> {
    if !is_b_semiprime(ext, solver)? {
        return Ok(Uniform {
            udim: None,
            prime: false,
            reason: Some("not B-semiprime".into()),
        });
    }
    let c = extended_centroid(ext, solver)?;
    let udim = centroid_idempotents(&c)?.count();
    if let Some(len) = socle_length(ext, &c.socle)? {
        if len != udim {
            return Err(internal(format!(
                "socle length {len} differs from idempotent count {udim}"
            )));
        }
    }
    Ok(Uniform {
        udim: Some(udim),
        prime: udim == 1,
        reason: None,
    })
}

/// Composition length of `S` under `B′`, when enumeration is feasible.
fn socle_length(ext: &Extension, s: &Subspace) -> Result<Option<usize>> {
    if !ext.field().is_finite() {
        return Ok(None);
    }
    let restricted = OperatorAlgebra::restrict(ext.generators(), s)?;
    let alg = OperatorAlgebra::generate(ext.field(), s.dim(), &restricted)?;
    match composition_series(&alg) {
        Ok(series) => Ok(Some(series.len() - 1)),
        Err(e) if e.is_regime() => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedIdeal {
    /// Indices of the primitive idempotents summed into `e`.
    pub members: Vec<usize>,
    /// `A ∩ Â(1 − e)`.
    pub ideal: Subspace,
    /// Primality of `A/I`; `None` for `I = A`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_prime: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedIdeals {
    pub ideals: Vec<ClosedIdeal>,
    pub checks: Vec<Check>,
}

pub fn closed_ideal_bijection(
    ext: &Extension,
    solver: &RadicalSolver,
    res: &Closure,
) -> Result<ClosedIdeals> {
    let field = ext.field();
    let n = ext.dim();
    let s = res.martindale.socle.dim();
    let k = res.udim();
    if k > 16 {
        return Err(Error::UnsupportedRegime(format!("2^{k} closed ideals")));
    }
    let embed_cols: Vec<Vec<Scalar>> = res.martindale.embedding.iter().map(|m| m.flat().to_vec()).collect();
    let embed = Matrix::from_columns(field, s * s, &embed_cols);
    let a_inside = Subspace::span(field, s * s, &embed_cols);
    let idem_ops: Vec<Matrix> = res
        .decomposition
        .idempotents
        .iter()
        .map(|e| res.centroid().element(e))
        .collect();
    let id = Matrix::identity(field, s);
    let mut ideals = Vec::new();
    for mask in 0u32..(1 << k) {
        let members: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let mut e = Matrix::zeros(field, s, s);
        for &i in &members {
            e = e.add(&idem_ops[i]);
        }
        let comp = id.sub(&e);
        let part: Vec<Vec<Scalar>> = res.basis.iter().map(|q| q.mul(&comp).flat().to_vec()).collect();
        let meet = Subspace::span(field, s * s, &part).intersect(&a_inside);
        let pulled: Vec<Vec<Scalar>> = meet
            .basis()
            .iter()
            .map(|v| embed.solve(v).map(|x| x.expect("inside the image of A")))
            .collect::<Result<_>>()?;
        let ideal = Subspace::span(field, n, &pulled);
        if !ext.is_stable(&ideal) {
            return Err(internal("closed ideal is not stable"));
        }
        let quotient_prime = if ideal.is_full() {
            None
        } else {
            let (q, _) = quotient_extension(ext, &ideal)?;
            Some(uniform_dimension_and_prime(&q, solver)?.prime)
        };
        ideals.push(ClosedIdeal {
            members,
            ideal,
            quotient_prime,
        });
    }
    let mut checks = Vec::new();
    let primes: Vec<&ClosedIdeal> = ideals.iter().filter(|c| c.members.len() == 1).collect();
    let meet = primes
        .iter()
        .fold(Subspace::full(field, n), |acc, c| acc.intersect(&c.ideal));
    checks.push(if meet.is_zero() {
        Check::pass("minimal closed primes intersect to 0")
    } else {
        Check::fail("minimal closed primes intersect to 0", format!("intersection dim {}", meet.dim()))
    });
    checks.push(if primes.len() == k && primes.iter().all(|c| c.quotient_prime == Some(true)) {
        Check::note("closed primes counted by udim", format!("{k}"))
    } else {
        Check::fail("closed primes counted by udim", format!("{} primes for udim {k}", primes.len()))
    });
    Ok(ClosedIdeals { ideals, checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub semiprime: bool,
    pub prime: bool,
    pub udim: usize,
    pub centroid_dim: usize,
    pub idempotent_count: usize,
    pub closure_dim: usize,
    pub checks: Vec<Check>,
    pub not_checked: Vec<String>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        crate::report::all_pass(&self.checks)
    }
}

fn check(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Check {
    if ok {
        Check::pass(name)
    } else {
        Check::fail(name, witness())
    }
}

/// Runs the full battery on a B-semiprime extension.
pub fn verify_structure_theorems(ext: &Extension, solver: &RadicalSolver) -> Result<StructureReport> {
    require_semiprime(ext, solver)?;
    let field = ext.field();
    let a = ext.algebra();
    let mut checks = Vec::new();
    let mut not_checked = vec!["non-singularity of the closure over its invariants".to_string()];
    if !a.radical(solver)?.is_zero() {
        checks.push(Check::note("semiprime", "classically non-semiprime yet B-semiprime"));
    }
    checks.push(Check::from_result(
        "endomorphisms correspond to invariants",
        ext.check_endomorphism_correspondence().map_err(|e| e.to_string()),
    ));
    let closure = central_closure(ext, solver)?;
    let soc = &closure.martindale.socle;
    checks.push(Check::from_result("socle essential", check_socle_essential(ext, soc)));
    checks.extend(closure.centroid().checks.iter().cloned());
    checks.extend(closure.martindale.checks.iter().cloned());
    checks.extend(closure.checks.iter().cloned());

    let dec = &closure.decomposition;
    let udim = dec.count();
    checks.push(Check::note("idempotents orthogonal with sum 1", format!("{udim} primitive")));
    let c_alg = &closure.centroid().algebra;
    let mut trivial_blocks = Some(true);
    for e in &dec.idempotents {
        match block_has_only_trivial_idempotents(c_alg, e) {
            Some(false) => trivial_blocks = Some(false),
            None => trivial_blocks = None,
            Some(true) => {}
        }
    }
    checks.push(match trivial_blocks {
        Some(ok) => check("primitive blocks have no nontrivial idempotent", ok, || "block splits".into()),
        None => Check::note(
            "primitive blocks have no nontrivial idempotent",
            format!("certified by minimal polynomials of degrees {:?}", dec.block_dims),
        ),
    });
    if let Some(fixed) = frobenius_fixed_dim(c_alg) {
        checks.push(check("Frobenius-fixed dimension = idempotent count", fixed == udim, || {
            format!("{fixed} != {udim}")
        }));
    }
    let uniform = uniform_dimension_and_prime(ext, solver)?;
    checks.push(check("udim = idempotent count", uniform.udim == Some(udim), || {
        format!("{:?} != {udim}", uniform.udim)
    }));
    let is_field = udim == 1 && dec.block_dims[0] == closure.centroid().dim();
    checks.push(check("centroid field iff prime", is_field == uniform.prime, || {
        format!("field {is_field}, prime {}", uniform.prime)
    }));

    let hat = &closure.extension;
    let hat_semiprime = is_b_semiprime(hat, solver)?;
    checks.push(check("closure B̂-semiprime", hat_semiprime, || "nonzero nilpotent core".into()));
    if hat_semiprime {
        let again = closure_dimension(hat, solver)?;
        checks.push(check("closure centrally closed", again == closure.dim(), || {
            format!("closure of closure has dim {again}, closure {}", closure.dim())
        }));
        let hat_c = extended_centroid(hat, solver)?;
        checks.push(check("closure centroid equals centroid", hat_c.dim() == closure.centroid().dim(), || {
            format!("{} != {}", hat_c.dim(), closure.centroid().dim())
        }));
        let hat_prime = uniform_dimension_and_prime(hat, solver)?.prime;
        checks.push(check("prime iff closure prime", hat_prime == uniform.prime, || {
            format!("A prime {}, closure prime {hat_prime}", uniform.prime)
        }));
    }
    if let (Some(act), true) = (ext.action(), ext.is_hopf_derived()) {
        checks.push(Check::from_result("closure is an H-module algebra", module_algebra_law(&closure, act)));
    }
    checks.push(Check::from_result(
        "restriction to S injective and multiplicative",
        restriction_injective(ext, soc),
    ));
    let closed = closed_ideal_bijection(ext, solver, &closure)?;
    checks.extend(closed.checks);

    let inv = ext.invariants()?;
    match invariants_large(ext, soc, &inv) {
        Some(Ok(())) => checks.push(Check::note(
            "invariants large",
            format!("dim A^B = {}, dim C = {}", inv.dim(), closure.centroid().dim()),
        )),
        Some(Err(w)) => checks.push(Check::note("invariants large", format!("not large: {w}"))),
        None => not_checked.push("largeness of the invariants".into()),
    }
    if let Some(oracle) = Oracle::try_new(ext)? {
        checks.push(check("enumeration agrees: semiprime", oracle.is_semiprime(), || {
            "a stable ideal squares to zero".into()
        }));
        checks.push(check("enumeration agrees: prime", oracle.is_prime() == uniform.prime, || {
            format!("enumeration says {}", oracle.is_prime())
        }));
        checks.push(check("enumeration agrees: socle", oracle.socle() == *soc, || {
            format!("enumerated socle dim {}", oracle.socle().dim())
        }));
    } else if field.is_finite() {
        not_checked.push("subspace enumeration".into());
    }
    Ok(StructureReport {
        semiprime: true,
        prime: uniform.prime,
        udim,
        centroid_dim: closure.centroid().dim(),
        idempotent_count: udim,
        closure_dim: closure.dim(),
        checks,
        not_checked,
    })
}

/// `h·(xy) = Σ (h₁·x)(h₂·y)` for the transported action on `Â`.
fn module_algebra_law(closure: &Closure, act: &crate::extension::Action) -> std::result::Result<(), String> {
    let lambda: Vec<Matrix> = act
        .lambda()
        .iter()
        .map(|l| closure.transport(l))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let hat = &closure.algebra;
    let hopf = act.hopf();
    for h in 0..hopf.dim() {
        for i in 0..hat.dim() {
            let x = hat.basis_vector(i);
            for j in 0..hat.dim() {
                let y = hat.basis_vector(j);
                let lhs = lambda[h].apply(&hat.mul(&x, &y));
                let mut rhs = hat.zero_vector();
                for (h1, h2, c) in hopf.delta_terms(h) {
                    axpy(&mut rhs, &c, &hat.mul(&lambda[h1].apply(&x), &lambda[h2].apply(&y)));
                }
                if lhs != rhs {
                    return Err(format!("h = {h}, x = {i}, y = {j}"));
                }
            }
        }
    }
    Ok(())
}

/// For stable `I ⊇ S`, restriction `Hom_{-A}(I, A) → Hom_{-A}(S, A)` is
/// injective and composes as `(f ∘ g)|_S = f|_S ∘ g|_S`.
fn restriction_injective(ext: &Extension, soc: &Subspace) -> std::result::Result<(), String> {
    let run = || -> Result<std::result::Result<(), String>> {
        let field = ext.field();
        let n = ext.dim();
        let mut candidates = vec![soc.clone(), Subspace::full(field, n)];
        match Oracle::try_new(ext)? {
            Some(o) => candidates.extend(o.stable_ideals().iter().filter(|i| i.contains(soc)).cloned()),
            None => {
                for i in 0..n {
                    let g = generated_stable_ideal(ext, &ext.algebra().basis_vector(i))?;
                    candidates.push(g.sum(soc));
                }
            }
        }
        let rights = ext.algebra().right_basis_ops();
        for ideal in &candidates {
            let maps = intertwiners(field, &rights, &rights, ideal, n)?;
            let incl: Vec<Vec<Scalar>> = soc
                .basis()
                .iter()
                .map(|v| ideal.coordinates(v).expect("S ⊆ I"))
                .collect();
            let p = Matrix::from_columns(field, ideal.dim(), &incl);
            let restricted: Vec<Matrix> = maps.iter().map(|f| f.mul(&p)).collect();
            let flat: Vec<Vec<Scalar>> = restricted.iter().map(|m| m.flat().to_vec()).collect();
            if Subspace::span(field, n * soc.dim(), &flat).dim() != maps.len() {
                return Ok(Err(format!("restriction from ideal of dim {} not injective", ideal.dim())));
            }
            for (fi, f) in maps.iter().enumerate() {
                for (gi, g) in maps.iter().enumerate() {
                    for (k, sv) in soc.basis().iter().enumerate() {
                        let gs = g.mul(&p).column(k);
                        let Some(in_s) = soc.coordinates(&gs) else {
                            return Ok(Err(format!("map {gi} leaves S")));
                        };
                        let via_i = f.apply(&ideal.coordinates(&gs).expect("S ⊆ I"));
                        let via_s = f.mul(&p).apply(&in_s);
                        if via_i != via_s {
                            return Ok(Err(format!("composition ({fi}, {gi}) differs at {}", show(sv))));
                        }
                    }
                }
            }
        }
        Ok(Ok(()))
    };
    run().unwrap_or_else(|e| Err(e.to_string()))
}

/// Every `B·x` with `0 ≠ x ∈ S` meets `A^B`; `None` if `S` is too large to
/// enumerate or the field is infinite.
fn invariants_large(ext: &Extension, soc: &Subspace, inv: &Subspace) -> Option<std::result::Result<(), String>> {
    let p = ext.field().characteristic();
    if p == 0 || (p as f64).powi(soc.dim() as i32) > ENUMERATION_LIMIT as f64 {
        return None;
    }
    for coords in all_vectors(ext.field(), soc.dim()) {
        let x = soc.combine(&coords);
        if x.iter().all(|c| c.is_zero()) {
            continue;
        }
        let gen = generated_stable_ideal(ext, &x).ok()?;
        if gen.intersect(inv).is_zero() {
            return Some(Err(format!("B·{} misses A^B", show(&x))));
        }
    }
    Some(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders;
    use crate::extension::GeneratorMode;

    fn swap_ext() -> Extension {
        let f = Field::Rational;
        let a = builders::split_product(f, 2).unwrap();
        let swap = Matrix::from_rows(f, 2, &[vec![f.zero(), f.one()], vec![f.one(), f.zero()]]).unwrap();
        Extension::build(a, GeneratorMode::Multiplication, None, vec![swap]).unwrap()
    }

    #[test]
    fn centroid_dimensions() {
        let s = RadicalSolver::auto();
        let f = Field::Rational;
        assert_eq!(extended_centroid(&swap_ext(), &s).unwrap().dim(), 1);
        let qq = Extension::multiplication(builders::split_product(f, 2).unwrap()).unwrap();
        assert_eq!(extended_centroid(&qq, &s).unwrap().dim(), 2);
        let m2 = Extension::multiplication(builders::matrix_algebra(f, 2).unwrap()).unwrap();
        let q = martindale_q0(&m2, &s).unwrap();
        assert_eq!(q.q0.dim(), 4);
        assert_eq!(q.centroid.dim(), 1);
    }

    #[test]
    fn closure_of_split_product() {
        let s = RadicalSolver::auto();
        let f = Field::Rational;
        let qq = Extension::multiplication(builders::split_product(f, 2).unwrap()).unwrap();
        let c = central_closure(&qq, &s).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.udim(), 2);
        let closed = closed_ideal_bijection(&qq, &s, &c).unwrap();
        assert_eq!(closed.ideals.len(), 4);
        assert!(closed.checks.iter().all(|c| c.pass));
        let r = verify_structure_theorems(&qq, &s).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert!(!r.prime);
    }

    #[test]
    fn swap_is_prime() {
        let s = RadicalSolver::auto();
        let r = verify_structure_theorems(&swap_ext(), &s).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert!(r.prime);
        assert_eq!(r.closure_dim, 2);
    }

    #[test]
    fn cyclic_shift_on_three_factors() {
        let s = RadicalSolver::auto();
        let f = Field::Rational;
        let a = builders::split_product(f, 3).unwrap();
        let mut shift = Matrix::zeros(f, 3, 3);
        for i in 0..3 {
            shift.set((i + 1) % 3, i, f.one());
        }
        let e = Extension::build(a, GeneratorMode::Multiplication, None, vec![shift]).unwrap();
        let r = verify_structure_theorems(&e, &s).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert_eq!(r.udim, 1);
    }

    #[test]
    fn triangular_is_rejected() {
        let s = RadicalSolver::auto();
        let e = Extension::multiplication(builders::upper_triangular(Field::Rational, 2).unwrap()).unwrap();
        assert!(matches!(extended_centroid(&e, &s), Err(Error::NotSemiprime { core_dim: 1 })));
    }
}
