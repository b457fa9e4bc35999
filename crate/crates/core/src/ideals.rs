//! B-stable ideals: generation, socle, nilpotent core, essential and dense
//! tests, annihilators, quotients.

use serde::Serialize;

use crate::algebra::{closure_under, QuotientMap};
use crate::enumerate::Oracle;
use crate::error::{Error, Result};
use crate::extension::{Action, Extension, GeneratorMode};
use crate::field::Scalar;
use crate::hopf::show;
use crate::matrix::{Matrix, Subspace};
use crate::radical::RadicalSolver;
use crate::report::Check;

/// Smallest `B′`-stable subspace containing `x`.
pub fn generated_stable_ideal(ext: &Extension, x: &[Scalar]) -> Result<Subspace> {
    ext.algebra().check_vector(x)?;
    Ok(closure_under(ext.field(), ext.dim(), ext.generators(), &[x.to_vec()]))
}

pub fn check_stable(ext: &Extension, s: &Subspace) -> Result<()> {
    if s.ambient() != ext.dim() {
        return Err(Error::dim("ideal ambient dimension", ext.dim(), s.ambient()));
    }
    match ext.unstable_generator(s) {
        Some(g) => Err(Error::NotStable { generator: g }),
        None => Ok(()),
    }
}

/// `{x : rad(B′)·x = 0}`.
pub fn socle(ext: &Extension, solver: &RadicalSolver) -> Result<Subspace> {
    let ops = ext.operators();
    let rad = solver.radical(ops)?;
    let rows: Vec<Vec<Scalar>> = rad
        .basis()
        .iter()
        .flat_map(|c| ops.element(c).row_vectors())
        .collect();
    let soc = if rows.is_empty() {
        Subspace::full(ext.field(), ext.dim())
    } else {
        Matrix::from_rows(ext.field(), ext.dim(), &rows)?.kernel()
    };
    check_stable(ext, &soc).map_err(|_| Error::Internal("socle is not stable".into()))?;
    Ok(soc)
}

/// Largest stable subspace of `w`: `W ← W ∩ ⋂_g g⁻¹(W)` until it settles.
pub fn largest_stable_subspace(ext: &Extension, w: &Subspace) -> Subspace {
    let field = ext.field();
    let n = ext.dim();
    let mut cur = w.clone();
    loop {
        if cur.is_zero() {
            return cur;
        }
        let perp = Matrix::from_rows(field, n, cur.basis())
            .expect("shape")
            .kernel();
        // y ⟂ W for y ∈ perp, so g⁻¹(W) = {x : yᵀ g x = 0}
        let mut next = cur.clone();
        if !perp.is_zero() {
            let y = Matrix::from_rows(field, n, perp.basis()).expect("shape");
            for g in ext.generators() {
                next = next.intersect(&y.mul(g).kernel());
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The largest nilpotent stable ideal: the largest stable subspace of
/// `rad(A)`.
pub fn nilpotent_core(ext: &Extension, solver: &RadicalSolver) -> Result<Subspace> {
    let rad = ext.algebra().radical(solver)?;
    let core = largest_stable_subspace(ext, &rad);
    if !ext.algebra().is_nilpotent_subspace(&core) {
        return Err(Error::Internal("stable subspace of rad(A) is not nilpotent".into()));
    }
    Ok(core)
}

pub fn is_b_semiprime(ext: &Extension, solver: &RadicalSolver) -> Result<bool> {
    ext.require_multiplication_algebra()?;
    Ok(nilpotent_core(ext, solver)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialDense {
    pub essential: bool,
    /// `None` when neither semiprimeness nor enumeration decides it.
    pub dense: Option<bool>,
    pub annihilator_criterion: bool,
}

pub fn left_annihilator(ext: &Extension, i: &Subspace) -> Subspace {
    let a = ext.algebra();
    annihilator_of(ext, i.basis().iter().map(|v| a.right_mult(v)).collect())
}

pub fn right_annihilator(ext: &Extension, i: &Subspace) -> Subspace {
    let a = ext.algebra();
    annihilator_of(ext, i.basis().iter().map(|v| a.left_mult(v)).collect())
}

fn annihilator_of(ext: &Extension, ops: Vec<Matrix>) -> Subspace {
    let rows: Vec<Vec<Scalar>> = ops.iter().flat_map(|m| m.row_vectors()).collect();
    if rows.is_empty() {
        return Subspace::full(ext.field(), ext.dim());
    }
    Matrix::from_rows(ext.field(), ext.dim(), &rows)
        .expect("shape")
        .kernel()
}

pub fn essential_dense(
    ext: &Extension,
    solver: &RadicalSolver,
    i: &Subspace,
) -> Result<EssentialDense> {
    check_stable(ext, i)?;
    let soc = socle(ext, solver)?;
    let essential = i.contains(&soc);
    let annihilator_criterion = largest_stable_subspace(ext, &left_annihilator(ext, i)).is_zero()
        && largest_stable_subspace(ext, &right_annihilator(ext, i)).is_zero();
    let semiprime = ext.has_multiplication_algebra() && nilpotent_core(ext, solver)?.is_zero();
    let dense = if semiprime {
        Some(essential)
    } else {
        Oracle::try_new(ext)?.map(|o| o.is_dense(i)).transpose()?
    };
    if semiprime && essential != annihilator_criterion {
        return Err(Error::Internal(format!(
            "essential ({essential}) and annihilator criterion ({annihilator_criterion}) disagree"
        )));
    }
    Ok(EssentialDense {
        essential,
        dense,
        annihilator_criterion,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfConditions {
    pub commutative: bool,
    pub semiprime: bool,
    pub bijective_antipode: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Annihilators {
    pub left: Subspace,
    pub right: Subspace,
    pub left_stable: bool,
    pub right_stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<HopfConditions>,
    pub checks: Vec<Check>,
}

pub fn annihilators(ext: &Extension, solver: &RadicalSolver, i: &Subspace) -> Result<Annihilators> {
    let left = left_annihilator(ext, i);
    let right = right_annihilator(ext, i);
    let left_stable = ext.is_stable(&left);
    let right_stable = ext.is_stable(&right);
    let mut checks = Vec::new();
    let mut conditions = None;
    if let (Some(act), true, true) = (ext.action(), ext.is_hopf_derived(), ext.is_stable(i)) {
        let a = ext.algebra();
        let cond = HopfConditions {
            commutative: a.is_commutative(),
            semiprime: a.radical(solver)?.is_zero(),
            bijective_antipode: act.hopf().has_bijective_antipode(),
        };
        checks.push(Check::from_result("left-annihilator identity", left_identity(act)));
        if act.hopf().has_bijective_antipode() {
            checks.push(Check::from_result("right-annihilator identity", right_identity(act)));
        }
        checks.push(if left_stable {
            Check::pass("left annihilator stable")
        } else {
            Check::fail("left annihilator stable", format!("unstable under {}", label(ext, &left)))
        });
        let essential = i.contains(&socle(ext, solver)?);
        let forced = cond.commutative || cond.bijective_antipode || (cond.semiprime && essential);
        if forced {
            checks.push(if right_stable {
                Check::pass("right annihilator stable")
            } else {
                Check::fail("right annihilator stable", format!("unstable under {}", label(ext, &right)))
            });
        }
        conditions = Some(cond);
    }
    Ok(Annihilators {
        left,
        right,
        left_stable,
        right_stable,
        conditions,
        checks,
    })
}

fn label(ext: &Extension, s: &Subspace) -> String {
    ext.unstable_generator(s)
        .map(|g| ext.generator_label(g).to_string())
        .unwrap_or_default()
}

/// `(h·a)x = Σ h₁·(a (S(h₂)·x))` on basis elements.
fn left_identity(act: &Action) -> std::result::Result<(), String> {
    let hopf = act.hopf();
    let a = act.algebra();
    let field = a.field();
    for h in 0..hopf.dim() {
        for i in 0..a.dim() {
            let ai = a.basis_vector(i);
            for j in 0..a.dim() {
                let x = a.basis_vector(j);
                let lhs = a.mul(&act.act(h, &ai), &x);
                let mut rhs = a.zero_vector();
                for (h1, h2, c) in hopf.delta_terms(h) {
                    let s = hopf.antipode_of(&field.unit_vector(hopf.dim(), h2));
                    let inner = a.mul(&ai, &act.lambda_of(&s).apply(&x));
                    crate::field::axpy(&mut rhs, &c, &act.act(h1, &inner));
                }
                if lhs != rhs {
                    return Err(format!("h = {h}, a = e{i}, x = e{j}"));
                }
            }
        }
    }
    Ok(())
}

/// `x(h·a) = Σ h₂·((S⁻¹(h₁)·x) a)` on basis elements.
fn right_identity(act: &Action) -> std::result::Result<(), String> {
    let hopf = act.hopf();
    let a = act.algebra();
    let field = a.field();
    let sinv = hopf.antipode_inverse().ok_or("antipode is not bijective")?;
    for h in 0..hopf.dim() {
        for i in 0..a.dim() {
            let ai = a.basis_vector(i);
            for j in 0..a.dim() {
                let x = a.basis_vector(j);
                let lhs = a.mul(&x, &act.act(h, &ai));
                let mut rhs = a.zero_vector();
                for (h1, h2, c) in hopf.delta_terms(h) {
                    let s = sinv.apply(&field.unit_vector(hopf.dim(), h1));
                    let inner = a.mul(&act.lambda_of(&s).apply(&x), &ai);
                    crate::field::axpy(&mut rhs, &c, &act.act(h2, &inner));
                }
                if lhs != rhs {
                    return Err(format!("h = {h}, a = e{i}, x = e{j}"));
                }
            }
        }
    }
    Ok(())
}

/// `A/P` with the induced generators; an attached Hopf action descends.
pub fn quotient_extension(ext: &Extension, p: &Subspace) -> Result<(Extension, QuotientMap)> {
    check_stable(ext, p)?;
    if p.is_full() {
        return Err(Error::ImproperIdeal);
    }
    ext.require_multiplication_algebra()?;
    let (qa, map) = ext.algebra().quotient(p)?;
    if let (Some(act), true) = (ext.action(), ext.is_hopf_derived()) {
        let lambda = act.lambda().iter().map(|l| map.induced(l)).collect();
        let qact = Action::new(act.hopf().clone(), qa.clone(), lambda)?;
        let q = Extension::build(qa, GeneratorMode::Action, Some(qact), vec![])?;
        return Ok((q, map));
    }
    let n = ext.dim();
    let extra = (n..ext.generators().len())
        .map(|g| (ext.generator_label(g).to_string(), map.induced(&ext.generators()[g])))
        .collect();
    Ok((Extension::from_generators(qa, extra, None)?, map))
}

/// A nonzero stable ideal inside the nilpotent core, or `None` when
/// semiprime.
pub fn semiprime_witness(ext: &Extension, solver: &RadicalSolver) -> Result<Option<Subspace>> {
    let core = nilpotent_core(ext, solver)?;
    Ok((!core.is_zero()).then_some(core))
}

/// Every `x ∉ Soc` generates an ideal meeting `Soc`.
pub fn check_socle_essential(ext: &Extension, soc: &Subspace) -> std::result::Result<(), String> {
    for i in 0..ext.dim() {
        let x = ext.algebra().basis_vector(i);
        if soc.contains_vector(&x) {
            continue;
        }
        let gen = closure_under(ext.field(), ext.dim(), ext.generators(), &[x]);
        if gen.intersect(soc).is_zero() {
            return Err(format!("B·e{i} misses the socle: {}", show(gen.basis().first().map(|v| v.as_slice()).unwrap_or(&[]))));
        }
    }
    Ok(())
}
