//! Primitive idempotents of a commutative semisimple algebra, found by
//! splitting minimal polynomials of block elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{axpy, is_zero_vector, Field, Scalar};
use crate::matrix::{Matrix, Subspace};
use crate::poly::{factor_squarefree, Poly};
use crate::radical::{all_vectors, ENUMERATION_LIMIT};

const SEED: u64 = 0x1de3_9075;
const RANDOM_TRIES: usize = 64;

/// Orthogonal primitive idempotents summing to the unit. Each block `eC` is
/// certified a field by an element whose minimal polynomial is irreducible
/// of degree `dim eC`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub idempotents: Vec<Vec<Scalar>>,
    pub block_dims: Vec<usize>,
    pub certificates: Vec<Poly>,
}

impl Decomposition {
    pub fn count(&self) -> usize {
        self.idempotents.len()
    }
}

/// Minimal polynomial of `y` inside the block with unit `e`.
pub fn block_minimal_polynomial(alg: &Algebra, e: &[Scalar], y: &[Scalar]) -> Poly {
    let field = alg.field();
    let n = alg.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = alg.mul(powers.last().unwrap(), y);
        let m = Matrix::from_columns(field, n, &powers);
        if let Some(c) = m.solve(&next).expect("shape") {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(next);
    }
}

/// `p(y)` with the block unit `e` standing in for `1`.
pub fn evaluate(alg: &Algebra, p: &Poly, e: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut acc = alg.zero_vector();
    for c in p.coeffs().iter().rev() {
        acc = alg.mul(&acc, y);
        axpy(&mut acc, c, e);
    }
    acc
}

fn block_dim(alg: &Algebra, e: &[Scalar]) -> usize {
    alg.left_mult(e).rank()
}

fn candidates(alg: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Vec<Scalar>> {
    let field = alg.field();
    let n = alg.dim();
    let mut out: Vec<Vec<Scalar>> = (0..n).map(|i| alg.basis_vector(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = alg.basis_vector(i);
            axpy(&mut v, &field.from_i64(j as i64 + 1), &alg.basis_vector(j));
            out.push(v);
        }
    }
    for _ in 0..RANDOM_TRIES {
        let v = (0..n)
            .map(|_| match field {
                Field::Rational => field.from_i64(rng.gen_range(-9..=9)),
                Field::Prime(p) => field.from_u64(rng.gen_range(0..p)),
            })
            .collect();
        out.push(v);
    }
    out
}

/// Splits `alg` (commutative, semisimple) into field blocks.
pub fn primitive_idempotents(alg: &Algebra) -> Result<Decomposition> {
    if !alg.is_commutative() {
        return Err(Error::Internal("idempotent splitting needs a commutative algebra".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let pool = candidates(alg, &mut rng);
    let mut work = vec![alg.unit().to_vec()];
    let mut done = Decomposition {
        idempotents: vec![],
        block_dims: vec![],
        certificates: vec![],
    };
    'blocks: while let Some(e) = work.pop() {
        let d = block_dim(alg, &e);
        if d == 1 {
            done.idempotents.push(e.clone());
            done.block_dims.push(1);
            done.certificates.push(Poly::x(alg.field()));
            continue;
        }
        for x in &pool {
            let y = alg.mul(&e, x);
            let m = block_minimal_polynomial(alg, &e, &y);
            if m.degree().unwrap_or(0) <= 1 {
                continue;
            }
            let factors = factor_squarefree(&m).map_err(|err| match err {
                Error::Internal(_) => Error::SplittingIncomplete { block_dim: d },
                other => other,
            })?;
            if factors.len() > 1 {
                for f in &factors {
                    let q = m.divrem(f).0;
                    let u = q.inv_mod(f).ok_or(Error::SplittingIncomplete { block_dim: d })?;
                    let crt = q.mul(&u).rem(&m);
                    work.push(evaluate(alg, &crt, &e, &y));
                }
                continue 'blocks;
            }
            if m.degree() == Some(d) {
                done.idempotents.push(e.clone());
                done.block_dims.push(d);
                done.certificates.push(m);
                continue 'blocks;
            }
        }
        return Err(Error::SplittingIncomplete { block_dim: d });
    }
    verify(alg, &done)?;
    Ok(done)
}

fn verify(alg: &Algebra, dec: &Decomposition) -> Result<()> {
    let mut sum = alg.zero_vector();
    for (i, e) in dec.idempotents.iter().enumerate() {
        if alg.mul(e, e) != *e || is_zero_vector(e) {
            return Err(Error::Internal("split produced a non-idempotent".into()));
        }
        for f in &dec.idempotents[i + 1..] {
            if !is_zero_vector(&alg.mul(e, f)) {
                return Err(Error::Internal("split idempotents are not orthogonal".into()));
            }
        }
        axpy(&mut sum, &alg.field().one(), e);
    }
    if sum != alg.unit() {
        return Err(Error::Internal("split idempotents do not sum to 1".into()));
    }
    Ok(())
}

/// Dimension of the fixed space of `x ↦ x^p` on a commutative algebra over
/// `F_p`; for a semisimple algebra this counts its field factors.
pub fn frobenius_fixed_dim(alg: &Algebra) -> Option<usize> {
    let Field::Prime(p) = alg.field() else {
        return None;
    };
    let n = alg.dim();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let b = alg.basis_vector(i);
            let mut acc = alg.unit().to_vec();
            let mut base = b.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = alg.mul(&acc, &base);
                }
                base = alg.mul(&base, &base);
                e >>= 1;
            }
            crate::field::sub_vectors(&acc, &b)
        })
        .collect();
    Some(Matrix::from_columns(alg.field(), n, &cols).kernel().dim())
}

/// Exhaustive check that `e` has no idempotents in `eC` besides `0` and `e`,
/// when the block is small enough to enumerate.
pub fn block_has_only_trivial_idempotents(alg: &Algebra, e: &[Scalar]) -> Option<bool> {
    let field = alg.field();
    let p = field.characteristic();
    if p == 0 {
        return None;
    }
    let block = Subspace::span(field, alg.dim(), &alg.left_mult(e).transpose().row_vectors());
    let d = block.dim();
    if (p as f64).powi(d as i32) > ENUMERATION_LIMIT as f64 {
        return None;
    }
    for coords in all_vectors(field, d) {
        let v = block.combine(&coords);
        if is_zero_vector(&v) || v == e {
            continue;
        }
        if alg.mul(&v, &v) == v {
            return Some(false);
        }
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders;

    #[test]
    fn split_product_splits_fully() {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(7)] {
            let a = builders::split_product(field, 3).unwrap();
            let d = primitive_idempotents(&a).unwrap();
            assert_eq!(d.count(), 3);
        }
    }

    #[test]
    fn gaussian_rationals_are_a_field() {
        let f = Field::Rational;
        let a = builders::truncated_polynomial(f, &[f.from_i64(-1), f.zero()]).unwrap();
        let d = primitive_idempotents(&a).unwrap();
        assert_eq!(d.count(), 1);
        assert_eq!(d.block_dims, vec![2]);
    }

    #[test]
    fn mixed_blocks_over_f3() {
        // F3[t]/(t^3 - t^2 + t - 1) = F3[t]/((t-1)(t^2+1)) ≅ F3 × F9
        let f = Field::Prime(3);
        let a = builders::truncated_polynomial(f, &[f.one(), f.from_i64(-1), f.one()]).unwrap();
        let d = primitive_idempotents(&a).unwrap();
        let mut dims = d.block_dims.clone();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
        assert_eq!(frobenius_fixed_dim(&a), Some(2));
        for e in &d.idempotents {
            assert_eq!(block_has_only_trivial_idempotents(&a, e), Some(true));
        }
    }
}
