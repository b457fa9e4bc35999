//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use stable_closure::closure::{
    central_closure, closed_ideal_bijection, extended_centroid, centroid_idempotents,
    martindale_q0, uniform_dimension_and_prime, verify_structure_theorems,
};
use stable_closure::enumerate::Oracle;
use stable_closure::field::is_zero_vector;
use stable_closure::ideals::{
    essential_dense, generated_stable_ideal, is_b_semiprime, nilpotent_core, quotient_extension,
    socle,
};
use stable_closure::radical::all_vectors;
use stable_closure::smash::{nu_smash, ordinary_smash, sigma_smash, sigma_smash_and_psi, tables_equal};
use stable_closure::{Extension, Field, RadicalSolver, Scalar, Subspace};
use stable_closure_cli::descriptor::{parse_input, Job};

enum Status {
    Pass(String),
    Unattainable(String),
}

type Verdict = Result<Status, String>;
type Outcome = Result<String, String>;

fn pass(o: Outcome) -> Verdict {
    o.map(Status::Pass)
}

const ENTRIES: [&str; 6] = [
    "qxq_swap",
    "qxq_mult",
    "f2c2_grading",
    "m2q_mult",
    "triangular2",
    "sweedler_h4_catalog",
];

fn path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("{name}.json"))
}

fn job(name: &str) -> Job {
    let text = std::fs::read_to_string(path(name)).unwrap();
    Job::build(&parse_input(&text).unwrap()).unwrap()
}

fn job_over(name: &str, f: Field) -> stable_closure::Result<Job> {
    let text = std::fs::read_to_string(path(name)).unwrap();
    Job::build_over(&parse_input(&text).unwrap(), f)
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(what.into()) }
}

fn solver() -> RadicalSolver {
    RadicalSolver::default()
}

fn e(err: stable_closure::Error) -> String {
    err.to_string()
}

/// Ideals of `k × k` are the four coordinate subspaces; keep those the
/// generators preserve.
fn coordinate_stable_ideals(ext: &Extension) -> Vec<Subspace> {
    let f = ext.field();
    let subsets: [&[usize]; 4] = [&[], &[0], &[1], &[0, 1]];
    subsets
        .iter()
        .map(|s| Subspace::span(f, 2, &s.iter().map(|i| f.unit_vector(2, *i)).collect::<Vec<_>>()))
        .filter(|s| ext.is_stable(s))
        .collect()
}

fn c1() -> Outcome {
    let j = job("qxq_swap");
    let x = &j.extension;
    let s = solver();
    let lattice = coordinate_stable_ideals(x);
    ensure(lattice.len() == 2, format!("expected only 0 and A stable, got {}", lattice.len()))?;
    let u = uniform_dimension_and_prime(x, &s).map_err(e)?;
    ensure(u.prime && u.udim == Some(1), format!("prime {} udim {:?}", u.prime, u.udim))?;
    let c = extended_centroid(x, &s).map_err(e)?;
    ensure(c.dim() == 1, format!("centroid dim {}", c.dim()))?;
    let cl = central_closure(x, &s).map_err(e)?;
    ensure(cl.dim() == 2, format!("closure dim {}", cl.dim()))?;
    let t = x.trace_element().map_err(e)?;
    ensure(t.is_some(), "no trace element")?;
    Ok("prime, centroid Q, udim 1, closure = A, trace element".into())
}

fn c2() -> Outcome {
    let j = job("qxq_mult");
    let x = &j.extension;
    let s = solver();
    ensure(coordinate_stable_ideals(x).len() == 4, "all four coordinate ideals are ideals")?;
    ensure(is_b_semiprime(x, &s).map_err(e)?, "not semiprime")?;
    let u = uniform_dimension_and_prime(x, &s).map_err(e)?;
    ensure(!u.prime && u.udim == Some(2), format!("prime {} udim {:?}", u.prime, u.udim))?;
    let c = extended_centroid(x, &s).map_err(e)?;
    let d = centroid_idempotents(&c).map_err(e)?;
    ensure(c.dim() == 2 && d.count() == 2, format!("centroid dim {} with {} idempotents", c.dim(), d.count()))?;
    let cl = central_closure(x, &s).map_err(e)?;
    let closed = closed_ideal_bijection(x, &s, &cl).map_err(e)?;
    ensure(closed.ideals.len() == 4, format!("{} closed ideals", closed.ideals.len()))?;
    ensure(closed.checks.iter().all(|c| c.pass), "closed-ideal checks")?;
    // I_T = A ∩ Â(1 - e_T) for T ⊆ {0, 1} is the coordinate ideal off T
    let mut members: Vec<_> = closed.ideals.iter().map(|i| (i.members.clone(), i.ideal.dim())).collect();
    members.sort();
    let want = vec![(vec![], 2), (vec![0], 1), (vec![0, 1], 0), (vec![1], 1)];
    ensure(members == want, format!("{members:?}"))?;
    Ok("semiprime, not prime, centroid Q×Q, 4 closed ideals".into())
}

fn c3() -> Outcome {
    let j = job("f2c2_grading");
    let x = &j.extension;
    let s = solver();
    let f = x.field();
    let rad = x.algebra().radical(&s).map_err(e)?;
    let one_plus_x = vec![f.one(), f.one()];
    ensure(rad == Subspace::span(f, 2, std::slice::from_ref(&one_plus_x)), "rad = span{1+x}")?;
    // p_g (1+x) is homogeneous and not nilpotent, so no nonzero graded ideal sits in rad
    for l in j.action.as_ref().unwrap().lambda() {
        ensure(!rad.contains_vector(&l.apply(&one_plus_x)), "p_g(1+x) in rad")?;
    }
    let core = nilpotent_core(x, &s).map_err(e)?;
    ensure(core.is_zero(), "core nonzero")?;
    let o = Oracle::new(x).map_err(e)?;
    ensure(o.is_semiprime() && o.nilpotent_core().is_zero(), "oracle disagrees")?;
    ensure(is_b_semiprime(x, &s).map_err(e)?, "not B-semiprime")?;
    let c = extended_centroid(x, &s).map_err(e)?;
    ensure(c.dim() == 1, format!("centroid dim {}", c.dim()))?;
    let cl = central_closure(x, &s).map_err(e)?;
    ensure(cl.dim() == 2, format!("closure dim {}", cl.dim()))?;
    Ok("rad ≠ 0, core = 0, centroid F_2, closure = A".into())
}

fn c4() -> Outcome {
    let j = job("m2q_mult");
    let x = &j.extension;
    let s = solver();
    let u = uniform_dimension_and_prime(x, &s).map_err(e)?;
    ensure(u.prime, "not prime")?;
    let m = martindale_q0(x, &s).map_err(e)?;
    ensure(m.centroid.dim() == 1, format!("centroid dim {}", m.centroid.dim()))?;
    ensure(m.q0.dim() == 4 && m.embedding.len() == 4, format!("Q0 dim {}", m.q0.dim()))?;
    let span = Subspace::span(x.field(), 16, &m.embedding.iter().map(|l| l.flat().to_vec()).collect::<Vec<_>>());
    ensure(span.dim() == 4 && &span == m.q0.span(), "embedding not onto Q0")?;
    ensure(m.checks.iter().all(|c| c.pass), "Q0 checks")?;
    Ok("prime, centroid Q, A -> Q0 bijective".into())
}

fn c5() -> Outcome {
    let j = job("triangular2");
    let x = &j.extension;
    let s = solver();
    let f = x.field();
    ensure(!is_b_semiprime(x, &s).map_err(e)?, "semiprime")?;
    let core = nilpotent_core(x, &s).map_err(e)?;
    let strict = Subspace::span(f, 3, &[f.unit_vector(3, 1)]);
    ensure(core == strict, format!("witness {:?}", core.to_strings()))?;
    // the strict-upper ideal squares to zero
    let e12 = f.unit_vector(3, 1);
    ensure(is_zero_vector(&x.algebra().mul(&e12, &e12)), "e12² ≠ 0")?;
    let (q, _) = quotient_extension(x, &core).map_err(e)?;
    ensure(is_b_semiprime(&q, &s).map_err(e)?, "quotient not semiprime")?;
    let u = uniform_dimension_and_prime(&q, &s).map_err(e)?;
    ensure(u.udim == Some(2), format!("quotient udim {:?}", u.udim))?;
    Ok("witness = strict upper, quotient udim 2".into())
}

fn c6() -> Outcome {
    let mut n = 0;
    for name in ["qxq_swap", "f2c2_grading", "sweedler_h4_catalog"] {
        let act = job(name).action.unwrap();
        let (_, nu) = nu_smash(&act).map_err(e)?;
        let (_, sigma) = sigma_smash(&act).map_err(e)?;
        for (label, r) in [("nu", &nu), ("sigma", &sigma)] {
            ensure(r.checks.len() >= 4 && r.passed(), format!("{name}: {label} {:?}", r.checks))?;
        }
        let psi = sigma_smash_and_psi(&act).map_err(e)?;
        ensure(psi.psi.inverse().is_some(), format!("{name}: Ψ singular"))?;
        ensure(psi.checks.iter().all(|c| c.pass), format!("{name}: Ψ checks"))?;
        n += 1;
    }
    Ok(format!("ν, σ factorizations and Ψ isomorphism on {n} actions"))
}

fn c7() -> Outcome {
    let act = job("qxq_swap").action.unwrap();
    let (nu, _) = nu_smash(&act).map_err(e)?;
    let (ord, _) = ordinary_smash(&act).map_err(e)?;
    ensure(tables_equal(&nu, &ord), "tables differ")?;
    Ok(format!("{}-dim tables agree entry for entry", nu.dim()))
}

/// Stable ideals rebuilt from principal ones: every stable ideal is the sum
/// of the ideals generated by its vectors.
fn principal_lattice(x: &Extension) -> stable_closure::Result<Vec<Subspace>> {
    let f = x.field();
    let mut out = vec![Subspace::zero(f, x.dim())];
    let principal: Vec<Subspace> = all_vectors(f, x.dim())
        .map(|v: Vec<Scalar>| generated_stable_ideal(x, &v))
        .collect::<stable_closure::Result<_>>()?;
    let mut i = 0;
    while i < out.len() {
        for p in &principal {
            let s = out[i].sum(p);
            if !out.contains(&s) {
                out.push(s);
            }
        }
        i += 1;
    }
    Ok(out)
}

fn c8() -> Outcome {
    let s = solver();
    let mut runs = 0;
    let mut skipped = Vec::new();
    for p in [2u64, 3] {
        let f = Field::Prime(p);
        for name in ENTRIES {
            let j = match job_over(name, f) {
                Ok(j) => j,
                Err(err) if err.is_regime() => {
                    skipped.push(format!("{name}/F_{p}"));
                    continue;
                }
                Err(err) => return Err(format!("{name}/F_{p}: {err}")),
            };
            let x = &j.extension;
            if x.dim() > 4 {
                continue;
            }
            let tag = format!("{name}/F_{p}");
            let o = Oracle::new(x).map_err(e)?;
            let mut lib = principal_lattice(x).map_err(e)?;
            let mut brute = o.stable_ideals().to_vec();
            let key = |v: &Subspace| v.to_strings();
            lib.sort_by_key(key);
            brute.sort_by_key(key);
            ensure(lib == brute, format!("{tag}: stable-ideal sets differ"))?;
            let semiprime = is_b_semiprime(x, &s).map_err(e)?;
            ensure(semiprime == o.is_semiprime(), format!("{tag}: semiprime"))?;
            if semiprime {
                let u = uniform_dimension_and_prime(x, &s).map_err(e)?;
                ensure(u.prime == o.is_prime(), format!("{tag}: prime"))?;
            } else {
                ensure(!o.is_prime(), format!("{tag}: prime without semiprime"))?;
            }
            ensure(socle(x, &s).map_err(e)? == o.socle(), format!("{tag}: socle"))?;
            for i in o.stable_ideals() {
                let v = essential_dense(x, &s, i).map_err(e)?;
                let dense = o.is_dense(i).map_err(e)?;
                ensure(v.essential == o.is_essential(i), format!("{tag}: essential"))?;
                ensure(v.annihilator_criterion == o.annihilator_criterion(i), format!("{tag}: annihilator"))?;
                if semiprime {
                    ensure(
                        v.essential == v.annihilator_criterion && v.essential == dense && v.dense == Some(dense),
                        format!("{tag}: essential/annihilator/dense disagree"),
                    )?;
                }
            }
            runs += 1;
        }
    }
    let note = if skipped.is_empty() { String::new() } else { format!(" (skipped: {})", skipped.join(", ")) };
    Ok(format!("{runs} instances agree with enumeration{note}"))
}

/// Every `t ∈ B′` with `Ker(α)·t = 0` and `t(1) = 1`, by listing all of
/// `End(A)` over a tiny field.
fn brute_trace_elements(x: &Extension) -> Vec<stable_closure::Matrix> {
    let f = x.field();
    let n = x.dim();
    let kernel = x.alpha_kernel_ops();
    all_vectors(f, n * n)
        .map(|v| stable_closure::Matrix::from_flat(f, n, &v))
        .filter(|t| x.operators().contains(t))
        .filter(|t| kernel.iter().all(|k| k.mul(t).is_zero()))
        .filter(|t| t.apply(x.algebra().unit()) == x.algebra().unit())
        .collect()
}

fn c9() -> Verdict {
    let q = job("qxq_swap");
    ensure(q.extension.trace_element().map_err(e)?.is_some(), "none over Q")?;
    let f2 = job_over("qxq_swap", Field::Prime(2)).map_err(e)?;
    let x = &f2.extension;
    let found = x.trace_element().map_err(e)?;
    let brute = brute_trace_elements(x);
    ensure(found.is_some() == !brute.is_empty(), "solver disagrees with enumeration")?;
    if let Some(t) = &found {
        ensure(brute.contains(t), "solver returned a non-trace element")?;
    }
    // e1 has trace e1 + e2 = 1 under the swap
    let act = f2.action.as_ref().unwrap();
    let f = x.field();
    let e1 = f.unit_vector(2, 0);
    let trace = stable_closure::field::add_vectors(&act.act(0, &e1), &act.act(1, &e1));
    ensure(trace == x.algebra().unit(), "trace(e1) != 1")?;
    Ok(Status::Unattainable(format!(
        "exists over Q as required; over F_2 the swap has trace(e1) = 1 and B′ = End(A), \
         so {} trace elements exist (enumeration agrees) and the claimed absence cannot hold",
        brute.len()
    )))
}

fn c10() -> Outcome {
    let s = solver();
    let required = [
        "centroid commutative",
        "centroid radical zero",
        "centroid field iff prime",
        "udim = idempotent count",
        "closure B̂-semiprime",
        "closure centrally closed",
        "restriction to S injective and multiplicative",
        "S² = S",
    ];
    let mut n = 0;
    for name in ENTRIES {
        let j = job(name);
        if !is_b_semiprime(&j.extension, &s).map_err(e)? {
            continue;
        }
        let r = verify_structure_theorems(&j.extension, &s).map_err(e)?;
        if let Some(bad) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("{name}: {} ({})", bad.name, bad.witness.clone().unwrap_or_default()));
        }
        for want in required {
            ensure(r.checks.iter().any(|c| c.name == want), format!("{name}: '{want}' not run"))?;
        }
        ensure(r.udim == r.idempotent_count, format!("{name}: udim"))?;
        n += 1;
    }
    Ok(format!("all structure checks pass on {n} semiprime instances"))
}

fn c11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_stable-closure");
    for name in ENTRIES {
        let run = || {
            Command::new(bin)
                .args(["check-all", "--input", path(name).to_str().unwrap()])
                .output()
                .map(|o| o.stdout)
                .map_err(|x| x.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a == b, format!("{name}: runs differ"))?;
        let golden = Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("corpus/golden")
            .join(format!("{name}.check-all.json"));
        let want = std::fs::read(&golden).map_err(|x| x.to_string())?;
        ensure(a == want, format!("{name}: differs from golden"))?;
    }
    Ok(format!("{} reports byte-identical and match golden", ENTRIES.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, u64); 11] = [
        ("qxq_swap structure", || pass(c1()), 1),
        ("qxq_mult structure", || pass(c2()), 1),
        ("f2c2_grading B-semiprime", || pass(c3()), 1),
        ("m2q_mult prime", || pass(c4()), 1),
        ("triangular2 witness", || pass(c5()), 1),
        ("factorization checker", || pass(c6()), 5),
        ("cocommutative coincidence", || pass(c7()), 1),
        ("oracle equivalence", || pass(c8()), 30),
        ("trace element pair", c9, 1),
        ("structure theorems", || pass(c10()), 10),
        ("determinism", || pass(c11()), 60),
    ];
    let mut failed = 0;
    let mut blocked = 0;
    let total = Instant::now();
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        let slow = el > Duration::from_secs(*budget);
        match r {
            Ok(Status::Pass(msg)) => println!(
                "criterion {:>2} PASS {name}: {msg} [{:.2?}{}]",
                i + 1,
                el,
                if slow { ", over time budget" } else { "" }
            ),
            Ok(Status::Unattainable(msg)) => {
                blocked += 1;
                println!("criterion {:>2} UNATTAINABLE {name}: {msg} [{:.2?}]", i + 1, el);
            }
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {msg} [{:.2?}]", i + 1, el);
            }
        }
    }
    println!(
        "acceptance: {} passed, {blocked} unattainable, {failed} failed in {:.2?}",
        11 - failed - blocked,
        total.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
