use proptest::prelude::*;
use stable_closure::algebra::builders::*;
use stable_closure::closure::{uniform_dimension_and_prime, verify_structure_theorems};
use stable_closure::enumerate::Oracle;
use stable_closure::ideals::{
    essential_dense, generated_stable_ideal, is_b_semiprime, nilpotent_core, socle,
};
use stable_closure::{Algebra, Error, Extension, Field, GeneratorMode, Group, Matrix, RadicalSolver, Subspace};

fn algebra(f: Field, kind: usize) -> Algebra {
    let s = |v: &[i64]| v.iter().map(|x| f.from_i64(*x)).collect::<Vec<_>>();
    match kind {
        0 => split_product(f, 2).unwrap(),
        1 => split_product(f, 3).unwrap(),
        2 => truncated_polynomial(f, &s(&[0, 0])).unwrap(),
        3 => truncated_polynomial(f, &s(&[1, 0])).unwrap(),
        4 => upper_triangular(f, 2).unwrap(),
        5 => matrix_algebra(f, 2).unwrap(),
        6 => group_algebra(f, &Group::cyclic(3)).unwrap(),
        7 => direct_product(&split_product(f, 1).unwrap(), &truncated_polynomial(f, &s(&[0, 0])).unwrap()).unwrap(),
        _ => truncated_polynomial(f, &s(&[1, 1, 0])).unwrap(),
    }
}

/// Cyclic permutation of the basis; an automorphism of `k^n` and `k[C_n]`.
fn shift(f: Field, n: usize) -> Matrix {
    let cols: Vec<_> = (0..n).map(|i| f.unit_vector(n, (i + 1) % n)).collect();
    Matrix::from_columns(f, n, &cols)
}

fn extension(p: u64, kind: usize, extra: usize, raw: &[i64]) -> Extension {
    let f = Field::Prime(p);
    let a = algebra(f, kind);
    let n = a.dim();
    let ops = match extra {
        0 => vec![],
        1 if kind <= 1 || kind == 6 => vec![shift(f, n)],
        _ => vec![Matrix::new(f, n, n, raw[..n * n].iter().map(|x| f.from_i64(*x)).collect()).unwrap()],
    };
    Extension::build(a, GeneratorMode::Multiplication, None, ops).unwrap()
}

fn case() -> impl Strategy<Value = Extension> {
    (
        prop_oneof![Just(2u64), Just(3)],
        0usize..9,
        0usize..3,
        prop::collection::vec(0i64..3, 16),
    )
        .prop_map(|(p, k, e, raw)| extension(p, k, e, &raw))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fixpoints_match_enumeration(e in case()) {
        let s = RadicalSolver::default();
        let o = Oracle::new(&e).unwrap();
        prop_assert_eq!(socle(&e, &s).unwrap(), o.socle());
        prop_assert_eq!(nilpotent_core(&e, &s).unwrap(), o.nilpotent_core());
        let semiprime = is_b_semiprime(&e, &s).unwrap();
        prop_assert_eq!(semiprime, o.is_semiprime());
        if semiprime {
            prop_assert_eq!(uniform_dimension_and_prime(&e, &s).unwrap().prime, o.is_prime());
        }
    }

    #[test]
    fn generated_ideal_is_smallest(e in case(), coords in prop::collection::vec(0i64..3, 4)) {
        let f = e.field();
        let x: Vec<_> = coords[..e.dim()].iter().map(|c| f.from_i64(*c)).collect();
        let g = generated_stable_ideal(&e, &x).unwrap();
        prop_assert!(e.is_stable(&g));
        prop_assert!(g.contains_vector(&x));
        let o = Oracle::new(&e).unwrap();
        let smallest = o
            .stable_ideals()
            .iter()
            .filter(|i| i.contains_vector(&x))
            .fold(Subspace::full(f, e.dim()), |acc, i| acc.intersect(i));
        prop_assert_eq!(g, smallest);
    }

    #[test]
    fn verdicts_match_enumeration(e in case()) {
        let s = RadicalSolver::default();
        let o = Oracle::new(&e).unwrap();
        let semiprime = o.is_semiprime();
        for i in o.stable_ideals() {
            let v = essential_dense(&e, &s, i).unwrap();
            prop_assert_eq!(v.essential, o.is_essential(i));
            prop_assert_eq!(v.annihilator_criterion, o.annihilator_criterion(i));
            let dense = o.is_dense(i).unwrap();
            if let Some(d) = v.dense {
                prop_assert_eq!(d, dense);
            }
            if semiprime {
                prop_assert_eq!(v.essential, v.annihilator_criterion);
                prop_assert_eq!(v.essential, dense);
            }
        }
    }

    #[test]
    fn structure_theorems_on_semiprime(e in case()) {
        let s = RadicalSolver::default();
        match verify_structure_theorems(&e, &s) {
            Ok(r) => {
                let failed: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
                prop_assert!(failed.is_empty(), "{:?}", failed);
                prop_assert_eq!(r.udim, r.idempotent_count);
                prop_assert_eq!(r.prime, r.idempotent_count == 1);
            }
            Err(Error::NotSemiprime { .. }) => prop_assert!(!is_b_semiprime(&e, &s).unwrap()),
            Err(Error::StandingAssumption { .. }) => {}
            Err(other) => prop_assert!(false, "{}", other),
        }
    }
}

#[test]
fn catalog_verdicts() {
    // (kind, p, semiprime, udim when semiprime)
    let expected = [
        (0, 2, true, 2),
        (1, 3, true, 3),
        (2, 2, false, 0),
        (3, 2, false, 0),
        (3, 3, true, 2),
        (4, 3, false, 0),
        (5, 2, true, 1),
        (5, 3, true, 1),
        (6, 2, true, 2),
        (6, 3, false, 0),
        (7, 2, false, 0),
        (8, 2, true, 1),
        (8, 3, true, 1),
    ];
    let s = RadicalSolver::default();
    for (kind, p, semiprime, udim) in expected {
        let e = extension(p, kind, 0, &[]);
        assert_eq!(is_b_semiprime(&e, &s).unwrap(), semiprime, "kind {kind} over F_{p}");
        if semiprime {
            let r = verify_structure_theorems(&e, &s).unwrap();
            assert!(r.all_pass(), "kind {kind} over F_{p}: {:?}", r.checks);
            assert_eq!(r.udim, udim, "kind {kind} over F_{p}");
            assert_eq!(r.closure_dim, e.dim());
        }
    }
    // the cyclic shift glues the three factors of k^3 together
    let e = extension(3, 1, 1, &[]);
    let r = verify_structure_theorems(&e, &s).unwrap();
    assert!(r.prime && r.all_pass());
}
