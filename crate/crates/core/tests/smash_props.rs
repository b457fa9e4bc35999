use proptest::prelude::*;
use stable_closure::algebra::builders::*;
use stable_closure::hopf::builders::{dual_group_hopf, group_hopf, sweedler_h4};
use stable_closure::smash::{
    check_embeddings, nu_smash, ordinary_smash, sigma_smash_and_psi, tables_equal, SmashRegistry,
};
use stable_closure::{Action, Field, Group, Matrix};

/// `k[C_n]` acting on `k^n` by powers of the cyclic shift.
fn shift_action(f: Field, n: usize) -> Action {
    let h = group_hopf(f, &Group::cyclic(n)).unwrap();
    let a = split_product(f, n).unwrap();
    let g = Group::cyclic(n);
    let lambda = (0..n)
        .map(|k| {
            let cols: Vec<_> = (0..n).map(|i| f.unit_vector(n, g.mul(k, i))).collect();
            Matrix::from_columns(f, n, &cols)
        })
        .collect();
    Action::new(h, a, lambda).unwrap()
}

/// `(k[C_n])*` grading `k[C_n]` by group element.
fn grading_action(f: Field, n: usize) -> Action {
    let g = Group::cyclic(n);
    let h = dual_group_hopf(f, &g).unwrap();
    let a = group_algebra(f, &g).unwrap();
    let lambda = (0..n)
        .map(|k| {
            let mut m = Matrix::zeros(f, n, n);
            m.set(k, k, f.one());
            m
        })
        .collect();
    Action::new(h, a, lambda).unwrap()
}

fn sweedler(f: Field) -> Action {
    let h = sweedler_h4(f).unwrap();
    let a = truncated_polynomial(f, &[f.zero(), f.zero()]).unwrap();
    let m = |v: [i64; 4]| Matrix::new(f, 2, 2, v.iter().map(|x| f.from_i64(*x)).collect()).unwrap();
    let lambda = vec![m([1, 0, 0, 1]), m([1, 0, 0, -1]), m([0, 1, 0, 0]), m([0, 1, 0, 0])];
    Action::new(h, a, lambda).unwrap()
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

fn check_all(act: &Action) {
    let r = SmashRegistry::default();
    for name in r.names() {
        if name == "ordinary" && !act.hopf().is_cocommutative() {
            continue;
        }
        let p = r.get(name).unwrap().build(act).unwrap();
        assert!(p.checks.iter().all(|c| c.pass), "{name}: {:?}", p.checks);
        assert_eq!(p.algebra.verify(), Ok(()));
    }
    let psi = sigma_smash_and_psi(act).unwrap();
    assert!(psi.checks.iter().all(|c| c.pass), "{:?}", psi.checks);
    assert!(psi.psi.inverse().is_some());
    let emb = check_embeddings(act).unwrap();
    assert!(emb.iter().all(|c| c.pass), "{emb:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_shift_actions(f in field(), n in 2usize..4) {
        let act = shift_action(f, n);
        check_all(&act);
        let (nu, _) = nu_smash(&act).unwrap();
        let (ord, _) = ordinary_smash(&act).unwrap();
        prop_assert!(tables_equal(&nu, &ord));
        prop_assert_eq!(nu.dim(), n * n * n);
    }

    #[test]
    fn grading_actions(f in field(), n in 2usize..4) {
        let act = grading_action(f, n);
        check_all(&act);
        let (nu, _) = nu_smash(&act).unwrap();
        let (ord, _) = ordinary_smash(&act).unwrap();
        prop_assert!(tables_equal(&nu, &ord));
    }
}

#[test]
fn sweedler_factorizations() {
    for f in [Field::Rational, Field::Prime(3), Field::Prime(5)] {
        let act = sweedler(f);
        check_all(&act);
        let err = ordinary_smash(&act).unwrap_err();
        assert!(matches!(err, stable_closure::Error::Factorization { .. }), "{err}");
    }
    assert!(sweedler_h4(Field::Prime(2)).unwrap_err().is_regime());
}
