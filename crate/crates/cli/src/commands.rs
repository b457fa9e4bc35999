//! Command registry: each subcommand turns a job into a JSON report.

use serde_json::{json, Value};

use stable_closure::closure::{
    central_closure, centroid_idempotents, closed_ideal_bijection, extended_centroid,
    martindale_q0, uniform_dimension_and_prime, verify_structure_theorems,
};
use stable_closure::enumerate::Oracle;
use stable_closure::ideals::{
    annihilators, essential_dense, generated_stable_ideal, is_b_semiprime, nilpotent_core,
    quotient_extension, socle,
};
use stable_closure::report::{all_pass, Check};
use stable_closure::smash::SmashRegistry;
use stable_closure::{Algebra, Error, Extension, RadicalSolver, Result, Subspace};

use crate::descriptor::Job;

pub struct Context {
    pub solver: RadicalSolver,
    pub product: String,
}

/// A finished report; `passed` is false when some check failed.
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

impl Outcome {
    fn verdict(report: Value) -> Self {
        Outcome { report, passed: true }
    }

    fn with_checks(mut report: Value, checks: &[Check]) -> Self {
        report["checks"] = json!(checks);
        Outcome {
            report,
            passed: all_pass(checks),
        }
    }
}

pub trait Command: Send + Sync {
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome>;
}

pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Default for Registry {
    fn default() -> Self {
        Registry {
            commands: vec![
                Box::new(Verify),
                Box::new(Invariants),
                Box::new(Ideals),
                Box::new(Semiprime),
                Box::new(Prime),
                Box::new(Centroid),
                Box::new(Closure),
                Box::new(Martindale),
                Box::new(Smash),
                Box::new(CheckAll),
            ],
        }
    }
}

impl Registry {
    pub fn register(&mut self, c: Box<dyn Command>) {
        self.commands.push(c);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.commands.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn describe(&self) -> Vec<(&'static str, &'static str)> {
        self.commands.iter().map(|c| (c.name(), c.about())).collect()
    }
}

fn table(a: &Algebra) -> Value {
    let n = a.dim();
    let rows: Vec<Vec<Vec<(usize, String)>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    a.basis_product(i, j)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (m, c.to_string()))
                        .collect()
                })
                .collect()
        })
        .collect();
    json!(rows)
}

fn names(a: &Algebra) -> Vec<String> {
    (0..a.dim()).map(|i| a.basis_name(i)).collect()
}

fn witness(s: &Subspace) -> Value {
    json!(s)
}

struct Verify;

impl Command for Verify {
    fn name(&self) -> &'static str {
        "verify"
    }
    fn about(&self) -> &'static str {
        "validate the algebra, Hopf algebra, action and extension"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        let a = e.algebra();
        let mut checks = vec![
            Check::pass("algebra associative and unital"),
            Check::note("B′ = A + Ker α", format!("{} = {} + {}", e.operators().dim(), a.dim(), e.alpha_kernel().dim())),
        ];
        if job.hopf.is_some() {
            checks.push(Check::pass("Hopf axioms"));
        }
        if job.action.is_some() {
            checks.push(Check::pass("module algebra axioms"));
        }
        checks.push(Check::from_result(
            "endomorphisms correspond to invariants",
            e.check_endomorphism_correspondence().map_err(|x| x.to_string()),
        ));
        let mut report = json!({
            "field": job.field.to_string(),
            "algebra": {
                "dim": a.dim(),
                "names": names(a),
                "commutative": a.is_commutative(),
                "radical_dim": a.radical(&ctx.solver)?.dim(),
            },
            "extension": {
                "operator_dim": e.operators().dim(),
                "alpha_kernel_dim": e.alpha_kernel().dim(),
                "has_multiplication_algebra": e.has_multiplication_algebra(),
                "generators": (0..e.generators().len()).map(|g| e.generator_label(g).to_string()).collect::<Vec<_>>(),
            },
        });
        if let Some(h) = &job.hopf {
            report["hopf"] = json!({
                "dim": h.dim(),
                "cocommutative": h.is_cocommutative(),
                "bijective_antipode": h.has_bijective_antipode(),
            });
        }
        Ok(Outcome::with_checks(report, &checks))
    }
}

struct Invariants;

impl Command for Invariants {
    fn name(&self) -> &'static str {
        "invariants"
    }
    fn about(&self) -> &'static str {
        "A^B, the centre, A^H and the trace element"
    }
    fn run(&self, job: &Job, _ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        let inv = e.invariants()?;
        let trace = e.trace_element()?;
        let mut report = json!({
            "invariants": inv,
            "invariants_dim": inv.dim(),
            "center": e.algebra().center(),
            "trace_element": trace.is_some(),
        });
        if let Some(t) = trace {
            report["trace_operator"] = json!(t);
        }
        if let Some(act) = &job.action {
            report["hopf_invariants"] = json!(act.invariants());
        }
        let checks = vec![Check::from_result(
            "endomorphisms correspond to invariants",
            e.check_endomorphism_correspondence().map_err(|x| x.to_string()),
        )];
        Ok(Outcome::with_checks(report, &checks))
    }
}

struct Ideals;

impl Command for Ideals {
    fn name(&self) -> &'static str {
        "ideals"
    }
    fn about(&self) -> &'static str {
        "socle, nilpotent core, and stable ideals with essential/dense verdicts"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        let s = &ctx.solver;
        let soc = socle(e, s)?;
        let core = nilpotent_core(e, s)?;
        let mut checks = Vec::new();
        let mut report = json!({
            "socle": soc,
            "nilpotent_core": core,
        });
        if let Some(gens) = job.ideal_generators()? {
            let mut ideal = Subspace::zero(e.field(), e.dim());
            for g in &gens {
                ideal = ideal.sum(&generated_stable_ideal(e, g)?);
            }
            let ed = essential_dense(e, s, &ideal)?;
            let ann = annihilators(e, s, &ideal)?;
            checks.extend(ann.checks.iter().cloned());
            report["ideal"] = json!({
                "basis": ideal,
                "verdicts": ed,
                "annihilators": ann,
            });
        }
        match Oracle::try_new(e)? {
            Some(o) => {
                let semiprime = e.has_multiplication_algebra() && core.is_zero();
                let mut listed = Vec::new();
                for i in o.stable_ideals() {
                    let ed = essential_dense(e, s, i)?;
                    let brute = json!({
                        "essential": o.is_essential(i),
                        "annihilator_criterion": o.annihilator_criterion(i),
                        "dense": o.is_dense(i)?,
                    });
                    if ed.essential != o.is_essential(i)
                        || ed.annihilator_criterion != o.annihilator_criterion(i)
                        || ed.dense.is_some_and(|d| d != o.is_dense(i).unwrap_or(d))
                    {
                        checks.push(Check::fail("enumeration agrees", format!("ideal {:?}", i.to_strings())));
                    }
                    if semiprime && !(ed.essential == ed.annihilator_criterion && Some(ed.essential) == ed.dense) {
                        checks.push(Check::fail("essential, annihilator and dense agree", format!("{:?}", i.to_strings())));
                    }
                    listed.push(json!({"basis": i, "verdicts": ed, "enumerated": brute}));
                }
                checks.push(if o.socle() == soc {
                    Check::pass("enumerated socle")
                } else {
                    Check::fail("enumerated socle", format!("{:?}", o.socle().to_strings()))
                });
                checks.push(if o.nilpotent_core() == core {
                    Check::pass("enumerated nilpotent core")
                } else {
                    Check::fail("enumerated nilpotent core", format!("{:?}", o.nilpotent_core().to_strings()))
                });
                report["stable_ideals"] = json!(listed);
            }
            None => report["stable_ideals"] = json!("not enumerated"),
        }
        Ok(Outcome::with_checks(report, &checks))
    }
}

struct Semiprime;

impl Command for Semiprime {
    fn name(&self) -> &'static str {
        "semiprime"
    }
    fn about(&self) -> &'static str {
        "B-semiprime verdict with a nilpotent stable ideal as witness"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        let semiprime = is_b_semiprime(e, &ctx.solver)?;
        let mut report = json!({
            "semiprime": semiprime,
            "classically_semiprime": e.algebra().radical(&ctx.solver)?.is_zero(),
        });
        if !semiprime {
            let core = nilpotent_core(e, &ctx.solver)?;
            report["witness"] = witness(&core);
            let (q, _) = quotient_extension(e, &core)?;
            report["quotient"] = json!({
                "dim": q.dim(),
                "semiprime": is_b_semiprime(&q, &ctx.solver)?,
                "udim": uniform_dimension_and_prime(&q, &ctx.solver)?.udim,
            });
        }
        Ok(Outcome::verdict(report))
    }
}

struct Prime;

impl Command for Prime {
    fn name(&self) -> &'static str {
        "prime"
    }
    fn about(&self) -> &'static str {
        "uniform dimension and B-prime verdict"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let u = uniform_dimension_and_prime(&job.extension, &ctx.solver)?;
        Ok(Outcome::verdict(json!(u)))
    }
}

struct Centroid;

impl Command for Centroid {
    fn name(&self) -> &'static str {
        "centroid"
    }
    fn about(&self) -> &'static str {
        "extended centroid and its primitive idempotents"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let c = extended_centroid(&job.extension, &ctx.solver)?;
        let d = centroid_idempotents(&c)?;
        let report = json!({
            "socle": c.socle,
            "centroid_dim": c.dim(),
            "basis": c.operators.basis(),
            "idempotents": d.idempotents.iter().map(|e| c.element(e)).collect::<Vec<_>>(),
            "idempotent_count": d.count(),
            "block_dims": d.block_dims,
            "invariant_image_dim": c.invariant_image.len(),
            "field": d.count() == 1 && d.block_dims[0] == c.dim(),
        });
        Ok(Outcome::with_checks(report, &c.checks))
    }
}

struct Closure;

impl Command for Closure {
    fn name(&self) -> &'static str {
        "closure"
    }
    fn about(&self) -> &'static str {
        "central closure, its generators and the closed-ideal lattice"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        let c = central_closure(e, &ctx.solver)?;
        let closed = closed_ideal_bijection(e, &ctx.solver, &c)?;
        let mut checks = c.checks.clone();
        checks.extend(closed.checks.iter().cloned());
        let report = json!({
            "closure_dim": c.dim(),
            "equals_algebra": c.dim() == e.dim(),
            "assembly_kernel_dim": c.assembly_kernel.dim(),
            "table": table(&c.algebra),
            "generators": (0..c.extension.generators().len()).map(|g| c.extension.generator_label(g).to_string()).collect::<Vec<_>>(),
            "udim": c.udim(),
            "closed_ideals": closed.ideals,
        });
        Ok(Outcome::with_checks(report, &checks))
    }
}

struct Martindale;

impl Command for Martindale {
    fn name(&self) -> &'static str {
        "martindale"
    }
    fn about(&self) -> &'static str {
        "right-A-linear endomorphisms of the socle"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let m = martindale_q0(&job.extension, &ctx.solver)?;
        let report = json!({
            "socle": m.socle,
            "q0_dim": m.q0.dim(),
            "q0_basis": m.q0.basis(),
            "embedding_bijective": m.q0.dim() == job.extension.dim(),
            "centroid_dim": m.centroid.dim(),
        });
        Ok(Outcome::with_checks(report, &m.checks))
    }
}

struct Smash;

impl Command for Smash {
    fn name(&self) -> &'static str {
        "smash"
    }
    fn about(&self) -> &'static str {
        "smash product table (--product ah|nu|sigma|ordinary) and its factorization checks"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        if job.hopf.is_none() {
            return Err(Error::Dependency("smash requires a \"hopf\" section".into()));
        }
        let act = job
            .action
            .as_ref()
            .ok_or_else(|| Error::Dependency("smash requires an \"action\" section".into()))?;
        let registry = SmashRegistry::default();
        let product = registry.get(&ctx.product)?.build(act)?;
        let report = json!({
            "product": product.name,
            "dim": product.algebra.dim(),
            "names": names(&product.algebra),
            "table": table(&product.algebra),
        });
        Ok(Outcome::with_checks(report, &product.checks))
    }
}

struct CheckAll;

impl CheckAll {
    fn on(e: &Extension, ctx: &Context) -> Result<Outcome> {
        let r = verify_structure_theorems(e, &ctx.solver)?;
        let passed = r.all_pass();
        Ok(Outcome {
            report: json!(r),
            passed,
        })
    }
}

impl Command for CheckAll {
    fn name(&self) -> &'static str {
        "check-all"
    }
    fn about(&self) -> &'static str {
        "every structure check; non-semiprime input is reported on A/core"
    }
    fn run(&self, job: &Job, ctx: &Context) -> Result<Outcome> {
        let e = &job.extension;
        if is_b_semiprime(e, &ctx.solver)? {
            return CheckAll::on(e, ctx);
        }
        let core = nilpotent_core(e, &ctx.solver)?;
        let (q, _) = quotient_extension(e, &core)?;
        let mut out = CheckAll::on(&q, ctx)?;
        out.report["semiprime"] = json!(false);
        out.report["prime"] = json!(false);
        out.report["quotient_semiprime"] = json!(true);
        out.report["reported_on"] = json!("quotient by the nilpotent core");
        out.report["nilpotent_core"] = witness(&core);
        Ok(out)
    }
}
