//! Jacobson radical of an operator algebra, by interchangeable strategies.
//!
//! Strategies are registered by name in a [`RadicalSolver`]. In automatic
//! mode the first strategy whose regime covers the input is used; if none
//! does, the solver returns [`Error::UnsupportedRegime`] rather than guess.

use crate::algebra::closure_under;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Subspace};

pub use crate::operators::OperatorAlgebra;

/// Largest vector-space size any enumeration strategy will walk.
pub const ENUMERATION_LIMIT: u64 = 1 << 16;

/// A method for computing `rad(B)` of a unital operator algebra `B`.
///
/// The returned subspace lives in coordinates of `B`'s basis.
pub trait RadicalStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    /// Short description of the regime, used in error messages.
    fn regime(&self) -> &'static str;

    fn applies(&self, alg: &OperatorAlgebra) -> bool;

    fn radical(&self, alg: &OperatorAlgebra) -> Result<Subspace>;
}

/// Dickson's criterion: `rad = {x : tr(ρ(x)ρ(y)) = 0 for all y}`.
pub struct TraceForm;

impl RadicalStrategy for TraceForm {
    fn name(&self) -> &'static str {
        "trace-form"
    }

    fn regime(&self) -> &'static str {
        "characteristic 0 or p > degree of the faithful module"
    }

    fn applies(&self, alg: &OperatorAlgebra) -> bool {
        match alg.field() {
            Field::Rational => true,
            Field::Prime(p) => p as u128 > alg.degree() as u128,
        }
    }

    fn radical(&self, alg: &OperatorAlgebra) -> Result<Subspace> {
        let n = alg.dim();
        let b = alg.basis();
        let gram: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| b[i].mul(&b[j]).trace()).collect())
            .collect();
        Ok(Matrix::from_rows(alg.field(), n, &gram)?.kernel())
    }
}

/// Common kernel of the action on the factors of a composition series of the
/// module, the series found by searching for minimal cyclic submodules.
pub struct CompositionSeries;

impl RadicalStrategy for CompositionSeries {
    fn name(&self) -> &'static str {
        "composition-series"
    }

    fn regime(&self) -> &'static str {
        "finite field with p^(module dimension) <= 2^16"
    }

    fn applies(&self, alg: &OperatorAlgebra) -> bool {
        within_limit(alg.field(), alg.degree())
    }

    fn radical(&self, alg: &OperatorAlgebra) -> Result<Subspace> {
        let field = alg.field();
        let series = composition_series(alg)?;
        let n = alg.dim();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for pair in series.windows(2) {
            let (lower, upper) = (&pair[0], &pair[1]);
            for w in upper.basis() {
                if lower.contains_vector(w) {
                    continue;
                }
                // x·w ∈ lower, for x = Σ c_i b_i: each reduced coordinate
                // of Σ c_i (b_i w) must vanish
                let images: Vec<Vec<Scalar>> =
                    alg.basis().iter().map(|b| lower.reduce(&b.apply(w))).collect();
                for k in 0..alg.degree() {
                    rows.push((0..n).map(|i| images[i][k].clone()).collect());
                }
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(field, n));
        }
        Ok(Matrix::from_rows(field, n, &rows)?.kernel())
    }
}

/// Definitional oracle: collects every `x` whose generated two-sided ideal is
/// nilpotent.
pub struct ElementEnumeration;

impl RadicalStrategy for ElementEnumeration {
    fn name(&self) -> &'static str {
        "element-enumeration"
    }

    fn regime(&self) -> &'static str {
        "finite field with p^(algebra dimension) <= 2^16"
    }

    fn applies(&self, alg: &OperatorAlgebra) -> bool {
        within_limit(alg.field(), alg.dim())
    }

    fn radical(&self, alg: &OperatorAlgebra) -> Result<Subspace> {
        if !self.applies(alg) {
            return Err(Error::UnsupportedRegime(format!(
                "{} needs {}",
                self.name(),
                self.regime()
            )));
        }
        let field = alg.field();
        let n = alg.dim();
        let algebra = alg.to_algebra()?;
        let mut found = Subspace::zero(field, n);
        for x in all_vectors(field, n) {
            if found.contains_vector(&x) {
                continue;
            }
            if !is_nilpotent_matrix(&alg.element(&x)) {
                continue;
            }
            let ideal = algebra.generated_ideal(std::slice::from_ref(&x));
            if algebra.is_nilpotent_subspace(&ideal) {
                found = found.sum(&ideal);
            }
        }
        Ok(found)
    }
}

fn within_limit(field: Field, exponent: usize) -> bool {
    match field {
        Field::Rational => false,
        Field::Prime(p) => (p as f64).powi(exponent as i32) <= ENUMERATION_LIMIT as f64,
    }
}

/// Every vector of `F_p^n` in lexicographic order of residues.
pub fn all_vectors(field: Field, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let elems = field.elements().expect("finite field");
    let p = elems.len();
    let total = p.checked_pow(n as u32).expect("enumeration size");
    (0..total).map(move |mut k| {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(elems[k % p].clone());
            k /= p;
        }
        v.reverse();
        v
    })
}

pub fn is_nilpotent_matrix(m: &Matrix) -> bool {
    let mut p = m.clone();
    for _ in 0..m.rows() {
        if p.is_zero() {
            return true;
        }
        p = p.mul(m);
    }
    p.is_zero()
}

/// A maximal chain `0 = W_0 ⊂ … ⊂ W_r = V` of submodules.
pub fn composition_series(alg: &OperatorAlgebra) -> Result<Vec<Subspace>> {
    let field = alg.field();
    let d = alg.degree();
    if !within_limit(field, d) {
        return Err(Error::UnsupportedRegime(format!(
            "composition series over {field} in degree {d}"
        )));
    }
    let ops = alg.basis();
    let mut series = vec![Subspace::zero(field, d)];
    let full = Subspace::full(field, d);
    while !series.last().unwrap().is_full() {
        let lower = series.last().unwrap().clone();
        let next = minimal_cover(field, d, ops, &lower, &full);
        series.push(next);
    }
    Ok(series)
}

/// A submodule strictly containing `lower` whose quotient by `lower` is
/// simple: shrink a cyclic cover until no vector generates anything smaller.
fn minimal_cover(
    field: Field,
    d: usize,
    ops: &[Matrix],
    lower: &Subspace,
    upper: &Subspace,
) -> Subspace {
    let mut best = upper.clone();
    'shrink: loop {
        let basis = best.basis().to_vec();
        for coords in all_vectors(field, basis.len()) {
            let mut v = field.zeros(d);
            for (c, b) in coords.iter().zip(&basis) {
                crate::field::axpy(&mut v, c, b);
            }
            if lower.contains_vector(&v) {
                continue;
            }
            let mut seeds = lower.basis().to_vec();
            seeds.push(v);
            let cand = closure_under(field, d, ops, &seeds);
            if cand.dim() < best.dim() {
                best = cand;
                continue 'shrink;
            }
        }
        return best;
    }
}

/// Named strategies plus an optional forced choice.
pub struct RadicalSolver {
    strategies: Vec<Box<dyn RadicalStrategy>>,
    forced: Option<usize>,
}

impl Default for RadicalSolver {
    fn default() -> Self {
        RadicalSolver::auto()
    }
}

impl RadicalSolver {
    /// All built-in strategies in automatic order.
    pub fn auto() -> Self {
        RadicalSolver {
            strategies: vec![
                Box::new(TraceForm),
                Box::new(CompositionSeries),
                Box::new(ElementEnumeration),
            ],
            forced: None,
        }
    }

    pub fn register(&mut self, strategy: Box<dyn RadicalStrategy>) {
        self.strategies.push(strategy);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    /// Restricts the solver to one strategy; `"auto"` restores the default.
    pub fn select(mut self, name: &str) -> Result<Self> {
        if name == "auto" {
            self.forced = None;
            return Ok(self);
        }
        let idx = self
            .strategies
            .iter()
            .position(|s| s.name() == name)
            .ok_or_else(|| {
                Error::parse(
                    "/radical",
                    format!("unknown radical strategy '{name}' (known: {})", self.names().join(", ")),
                )
            })?;
        self.forced = Some(idx);
        Ok(self)
    }

    pub fn named(name: &str) -> Result<Self> {
        RadicalSolver::auto().select(name)
    }

    /// The strategy that would handle `alg`.
    pub fn choose(&self, alg: &OperatorAlgebra) -> Result<&dyn RadicalStrategy> {
        let candidates: Vec<&dyn RadicalStrategy> = match self.forced {
            Some(i) => vec![self.strategies[i].as_ref()],
            None => self.strategies.iter().map(|s| s.as_ref()).collect(),
        };
        candidates
            .iter()
            .copied()
            .find(|s| s.applies(alg))
            .ok_or_else(|| {
                let tried: Vec<String> = candidates
                    .iter()
                    .map(|s| format!("{} ({})", s.name(), s.regime()))
                    .collect();
                Error::UnsupportedRegime(format!(
                    "radical of a {}-dimensional operator algebra of degree {} over {}; tried {}",
                    alg.dim(),
                    alg.degree(),
                    alg.field(),
                    tried.join("; ")
                ))
            })
    }

    pub fn radical(&self, alg: &OperatorAlgebra) -> Result<Subspace> {
        self.choose(alg)?.radical(alg)
    }
}
