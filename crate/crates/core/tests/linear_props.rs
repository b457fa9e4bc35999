use proptest::prelude::*;
use stable_closure::field::{is_zero_vector, Field};
use stable_closure::poly::{berlekamp, factor_squarefree, Poly};
use stable_closure::{Matrix, Subspace};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rational),
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(7)),
        Just(Field::Prime(101)),
    ]
}

fn entries(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

fn matrix(f: Field, r: usize, c: usize, v: &[i64]) -> Matrix {
    Matrix::new(f, r, c, v.iter().map(|x| f.from_i64(*x)).collect()).unwrap()
}

proptest! {
    #[test]
    fn rank_nullity(f in field(), r in 1usize..5, c in 1usize..5, seed in entries(16)) {
        let m = matrix(f, r, c, &seed[..r * c]);
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), c);
        for v in k.basis() {
            prop_assert!(is_zero_vector(&m.apply(v)));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn inverse_is_two_sided(f in field(), n in 1usize..4, seed in entries(9)) {
        let m = matrix(f, n, n, &seed[..n * n]);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(f, n));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(f, n));
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn subspace_dimension_formula(f in field(), a in entries(12), b in entries(12)) {
        let rows = |v: &[i64]| -> Vec<Vec<_>> {
            v.chunks(4).map(|r| r.iter().map(|x| f.from_i64(*x)).collect()).collect()
        };
        let u = Subspace::span(f, 4, &rows(&a));
        let w = Subspace::span(f, 4, &rows(&b));
        let s = u.sum(&w);
        let i = u.intersect(&w);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u) && s.contains(&w));
        prop_assert!(u.contains(&i) && w.contains(&i));
        for v in u.basis() {
            let c = s.coordinates(v).unwrap();
            prop_assert_eq!(&s.combine(&c), v);
        }
    }

    #[test]
    fn scalar_inverses(f in field(), x in -50i64..50) {
        let s = f.from_i64(x);
        match s.inv() {
            Some(t) => prop_assert!((&s * &t).is_one()),
            None => prop_assert!(s.is_zero()),
        }
        prop_assert_eq!(f.parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn factors_multiply_back(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(101), Just(65537)],
                             c in prop::collection::vec(0i64..1000, 2..7)) {
        let f = Field::Prime(p);
        let mut coeffs: Vec<_> = c.iter().map(|x| f.from_i64(*x)).collect();
        coeffs.push(f.one());
        let g = Poly::new(f, coeffs);
        prop_assume!(g.is_squarefree());
        let fs = factor_squarefree(&g).unwrap();
        let prod = fs.iter().fold(Poly::one(f), |a, b| a.mul(b));
        prop_assert_eq!(prod, g.monic());
        for h in &fs {
            prop_assert_eq!(berlekamp(h).len(), 1);
        }
    }

    #[test]
    fn rational_factors_multiply_back(c in prop::collection::vec(-6i64..6, 1..5)) {
        let f = Field::Rational;
        let mut coeffs: Vec<_> = c.iter().map(|x| f.from_i64(*x)).collect();
        coeffs.push(f.one());
        let g = Poly::new(f, coeffs);
        prop_assume!(g.is_squarefree());
        let fs = factor_squarefree(&g).unwrap();
        let prod = fs.iter().fold(Poly::one(f), |a, b| a.mul(b));
        prop_assert_eq!(prod, g.monic());
        for h in &fs {
            prop_assert_eq!(factor_squarefree(h).unwrap().len(), 1);
        }
    }
}

#[test]
fn known_factorizations() {
    let q = Field::Rational;
    let int = |v: &[i64]| Poly::new(q, v.iter().map(|x| q.from_i64(*x)).collect());
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    assert_eq!(factor_squarefree(&int(&[-1, 0, 0, 0, 1])).unwrap().len(), 3);
    // x^2 - 2 stays irreducible
    assert_eq!(factor_squarefree(&int(&[-2, 0, 1])).unwrap().len(), 1);
    // x^2 + 1 over F_5 splits, over F_3 does not
    let f5 = Field::Prime(5);
    let f3 = Field::Prime(3);
    let x2p1 = |f: Field| Poly::new(f, vec![f.one(), f.zero(), f.one()]);
    assert_eq!(berlekamp(&x2p1(f5)).len(), 2);
    assert_eq!(berlekamp(&x2p1(f3)).len(), 1);
}
