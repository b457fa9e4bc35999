//! Brute-force oracle over tiny finite fields: every subspace of `A` is
//! listed and the ideal-theoretic notions are decided from their
//! definitions.

use crate::error::{Error, Result};
use crate::extension::{intertwiners, Extension};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Subspace};
use crate::radical::{all_vectors, ENUMERATION_LIMIT};

/// Number of subspaces of `F_p^n`, saturating.
pub fn subspace_count(p: u64, n: usize) -> u128 {
    // Σ_k Gaussian binomial [n k]_p via the recurrence on n
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for k in 1..m {
            let pk = (p as u128).saturating_pow(k as u32);
            next[k] = row[k - 1].saturating_add(pk.saturating_mul(row[k]));
        }
        row = next;
    }
    row.iter().fold(0u128, |a, b| a.saturating_add(*b))
}

/// Every subspace of `F_p^n`, one per reduced echelon form.
pub fn all_subspaces(field: Field, n: usize) -> Result<Vec<Subspace>> {
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => {
            return Err(Error::UnsupportedRegime("subspace enumeration over Q".into()))
        }
    };
    if subspace_count(p, n) > ENUMERATION_LIMIT as u128 {
        return Err(Error::UnsupportedRegime(format!(
            "{} subspaces of F_{p}^{n}",
            subspace_count(p, n)
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        // free slots: (row, column) right of the pivot in non-pivot columns
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| {
                (c + 1..n)
                    .filter(|j| mask >> j & 1 == 0)
                    .map(move |j| (r, j))
            })
            .collect();
        for vals in all_vectors(field, free.len()) {
            let mut rows: Vec<Vec<Scalar>> = pivots
                .iter()
                .map(|&c| field.unit_vector(n, c))
                .collect();
            for ((r, j), v) in free.iter().zip(vals) {
                rows[*r][*j] = v;
            }
            out.push(Subspace::span(field, n, &rows));
        }
    }
    Ok(out)
}

/// All stable subspaces of an extension over a tiny field.
pub struct Oracle<'a> {
    ext: &'a Extension,
    stable: Vec<Subspace>,
}

impl<'a> Oracle<'a> {
    pub fn new(ext: &'a Extension) -> Result<Self> {
        let stable = all_subspaces(ext.field(), ext.dim())?
            .into_iter()
            .filter(|s| ext.is_stable(s))
            .collect();
        Ok(Oracle { ext, stable })
    }

    /// `None` when the field is infinite or the enumeration too large.
    pub fn try_new(ext: &'a Extension) -> Result<Option<Self>> {
        match Oracle::new(ext) {
            Ok(o) => Ok(Some(o)),
            Err(e) if e.is_regime() => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn stable_ideals(&self) -> &[Subspace] {
        &self.stable
    }

    fn nonzero(&self) -> impl Iterator<Item = &Subspace> {
        self.stable.iter().filter(|s| !s.is_zero())
    }

    fn product(&self, k: &Subspace, l: &Subspace) -> Subspace {
        self.ext.algebra().product_space(k, l)
    }

    /// No nonzero stable `K` with `K² = 0`.
    pub fn is_semiprime(&self) -> bool {
        self.nonzero().all(|k| !self.product(k, k).is_zero())
    }

    /// No nonzero stable `K, L` with `KL = 0`.
    pub fn is_prime(&self) -> bool {
        self.nonzero()
            .all(|k| self.nonzero().all(|l| !self.product(k, l).is_zero()))
    }

    /// Sum of all nilpotent stable ideals.
    pub fn nilpotent_core(&self) -> Subspace {
        let a = self.ext.algebra();
        self.stable
            .iter()
            .filter(|s| a.is_nilpotent_subspace(s))
            .fold(Subspace::zero(self.ext.field(), self.ext.dim()), |acc, s| acc.sum(s))
    }

    pub fn minimal(&self) -> Vec<&Subspace> {
        self.nonzero()
            .filter(|s| self.nonzero().all(|t| t == *s || !s.contains(t)))
            .collect()
    }

    pub fn socle(&self) -> Subspace {
        self.minimal()
            .into_iter()
            .fold(Subspace::zero(self.ext.field(), self.ext.dim()), |acc, s| acc.sum(s))
    }

    pub fn is_essential(&self, i: &Subspace) -> bool {
        self.nonzero().all(|j| !j.intersect(i).is_zero())
    }

    /// `JI ≠ 0 ≠ IJ` for every nonzero stable `J`.
    pub fn annihilator_criterion(&self, i: &Subspace) -> bool {
        self.nonzero()
            .all(|j| !self.product(j, i).is_zero() && !self.product(i, j).is_zero())
    }

    /// `Hom_B(L/I, A) = 0` for every stable `L ⊇ I`.
    pub fn is_dense(&self, i: &Subspace) -> Result<bool> {
        let field = self.ext.field();
        let n = self.ext.dim();
        let gens = self.ext.generators();
        for l in self.stable.iter().filter(|l| l.contains(i) && *l != i) {
            let maps = intertwiners(field, gens, gens, l, n)?;
            if maps.is_empty() {
                continue;
            }
            // combinations Σ c_k f_k vanishing on I
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for v in i.basis() {
                let coords = l.coordinates(v).expect("I ⊆ L");
                let images: Vec<Vec<Scalar>> = maps.iter().map(|f| f.apply(&coords)).collect();
                for r in 0..n {
                    rows.push(images.iter().map(|im| im[r].clone()).collect());
                }
            }
            let vanishing = if rows.is_empty() {
                maps.len()
            } else {
                Matrix::from_rows(field, maps.len(), &rows)?.kernel().dim()
            };
            if vanishing > 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `A^B ∩ I ≠ 0` for every nonzero stable `I`.
    pub fn invariants_large(&self, inv: &Subspace) -> bool {
        self.nonzero().all(|i| !i.intersect(inv).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(2, 3), 16);
        assert_eq!(subspace_count(3, 2), 6);
        for (p, n) in [(2u64, 3usize), (3, 2), (2, 4)] {
            let all = all_subspaces(Field::Prime(p), n).unwrap();
            assert_eq!(all.len() as u128, subspace_count(p, n));
            for (i, a) in all.iter().enumerate() {
                assert!(all[i + 1..].iter().all(|b| b != a));
            }
        }
    }
}
