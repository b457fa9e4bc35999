//! Univariate polynomials over `Q` and `F_p`, with factorization of
//! squarefree polynomials: Berlekamp over `F_p` and a big-prime modular
//! method with subset recombination over `Q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar, MAX_PRIME};
use crate::matrix::Matrix;

const SEED: u64 = 0x5eed_c105;
/// Below this characteristic Berlekamp splits by trying every constant.
const SMALL_PRIME: u64 = 256;
const MAX_RECOMBINATION: usize = 20;

/// Coefficients low to high, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    pub fn one(field: Field) -> Self {
        Poly::constant(field.one())
    }

    pub fn x(field: Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = self.field.zeros(self.coeffs.len() + o.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.lead().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        let len = r.len().saturating_sub(dd);
        let mut q = self.field.zeros(len);
        for k in (0..len).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * di);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic gcd; zero only when both inputs are zero.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` modulo `m`, when the two are coprime.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let f = self.field;
        let (mut r0, mut r1) = (m.clone(), self.rem(m));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        Some(t0.scale(&r0.lead().inv()?).rem(m))
    }

    pub fn derivative(&self) -> Poly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| &self.field.from_u64(i as u64) * a)
            .collect();
        Poly::new(self.field, c)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Monic irreducible factors of a squarefree polynomial of positive degree.
pub fn factor_squarefree(f: &Poly) -> Result<Vec<Poly>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    if !f.is_squarefree() {
        return Err(Error::Internal(format!("{f} is not squarefree")));
    }
    let mut out = match f.field() {
        Field::Prime(_) => berlekamp(&f.monic()),
        Field::Rational => factor_rational(&f.monic())?,
    };
    out.sort_by_key(|g| g.degree());
    Ok(out)
}

/// Berlekamp: the fixed space of Frobenius on `F_p[t]/(f)` has dimension
/// equal to the number of irreducible factors, and its elements split `f`.
pub fn berlekamp(f: &Poly) -> Vec<Poly> {
    let field = f.field();
    let p = field.characteristic();
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    let xp = Poly::x(field).pow_mod(p, f);
    let mut cols = Vec::with_capacity(n);
    let mut cur = Poly::one(field);
    for _ in 0..n {
        let mut c: Vec<Scalar> = (0..n).map(|i| cur.coeff(i)).collect();
        c[cols.len()] = &c[cols.len()] - &field.one();
        cols.push(c);
        cur = cur.mul(&xp).rem(f);
    }
    let kernel = Matrix::from_columns(field, n, &cols).kernel();
    let r = kernel.dim();
    let fixed: Vec<Poly> = kernel
        .basis()
        .iter()
        .map(|v| Poly::new(field, v.clone()))
        .filter(|v| v.degree().unwrap_or(0) > 0)
        .collect();
    let mut factors = vec![f.clone()];
    if p <= SMALL_PRIME {
        for v in &fixed {
            if factors.len() == r {
                break;
            }
            let mut next = Vec::new();
            for g in factors {
                let mut rest = g;
                for s in 0..p {
                    if rest.degree() == Some(1) || rest.degree() == Some(0) {
                        break;
                    }
                    let h = rest.gcd(&v.sub(&Poly::constant(field.from_u64(s))));
                    let dh = h.degree().unwrap_or(0);
                    if dh > 0 && Some(dh) < rest.degree() {
                        rest = rest.divrem(&h).0;
                        next.push(h);
                    }
                }
                next.push(rest.monic());
            }
            factors = next;
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        while factors.len() < r {
            let mut w = Poly::constant(field.from_u64(rng.gen_range(0..p)));
            for v in &fixed {
                w = w.add(&v.scale(&field.from_u64(rng.gen_range(0..p))));
            }
            let mut next = Vec::new();
            for g in factors {
                if g.degree() == Some(1) {
                    next.push(g);
                    continue;
                }
                let s = w.pow_mod((p - 1) / 2, &g).sub(&Poly::one(field));
                let h = g.gcd(&s);
                let dh = h.degree().unwrap_or(0);
                if dh > 0 && Some(dh) < g.degree() {
                    next.push(g.divrem(&h).0.monic());
                    next.push(h);
                } else {
                    next.push(g);
                }
            }
            factors = next;
        }
    }
    factors
}

fn big(q: &Scalar) -> BigRational {
    q.as_rational().expect("rational scalar").clone()
}

/// Integer coefficients of a positive multiple of a rational polynomial,
/// with content removed.
fn primitive_integer(f: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(big(c).denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (big(c) * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    ints.into_iter().map(|c| c * sign / &g).collect()
}

fn from_integers(ints: &[BigInt]) -> Poly {
    Poly::new(
        Field::Rational,
        ints.iter()
            .map(|c| Scalar::Rat(BigRational::from_integer(c.clone())))
            .collect(),
    )
}

fn reduce_mod(ints: &[BigInt], p: u64) -> Poly {
    let pb = BigInt::from(p);
    let field = Field::Prime(p);
    Poly::new(
        field,
        ints.iter()
            .map(|c| field.from_u64(c.mod_floor(&pb).to_u64().expect("residue")))
            .collect(),
    )
}

/// Bound on twice any coefficient of `lc(f)·g` for an integer factor `g | f`.
fn mignotte(ints: &[BigInt]) -> BigInt {
    let n = ints.len() - 1;
    let sumsq: BigInt = ints.iter().map(|c| c * c).sum();
    let norm = sumsq.sqrt() + 1;
    let lc = ints.last().expect("nonzero").abs();
    BigInt::from(2) * lc * (BigInt::one() << n) * norm
}

fn factor_rational(f: &Poly) -> Result<Vec<Poly>> {
    let ints = primitive_integer(f);
    let bound = mignotte(&ints);
    if bound >= BigInt::from(MAX_PRIME / 2) {
        return Err(Error::UnsupportedRegime(format!(
            "coefficient bound {bound} for {f} exceeds the supported prime range"
        )));
    }
    let mut p = bound.to_u64().expect("bounded").max(1009) | 1;
    let lc = ints.last().expect("nonzero").clone();
    let modular = loop {
        if p >= MAX_PRIME {
            return Err(Error::UnsupportedRegime(format!("no usable prime for {f}")));
        }
        if is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = reduce_mod(&ints, p);
            if fp.is_squarefree() {
                break berlekamp(&fp.monic());
            }
        }
        p += 2;
    };
    if modular.len() > MAX_RECOMBINATION {
        return Err(Error::UnsupportedRegime(format!(
            "{} modular factors exceed the recombination limit",
            modular.len()
        )));
    }
    let pb = BigInt::from(p);
    let half = &pb / 2;
    let mut remaining = ints;
    let mut pool = modular;
    let mut found = Vec::new();
    let mut k = 1;
    'outer: while 2 * k <= pool.len() {
        for mask in 0u32..(1 << pool.len()) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let lcr = remaining.last().expect("nonzero").clone();
            let mut g = Poly::constant(Field::Prime(p).from_u64(lcr.mod_floor(&pb).to_u64().expect("residue")));
            for (i, gi) in pool.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g = g.mul(gi);
                }
            }
            let lifted: Vec<BigInt> = g
                .coeffs()
                .iter()
                .map(|c| {
                    let r = BigInt::from(c.residue().expect("residue"));
                    if r > half { r - &pb } else { r }
                })
                .collect();
            let cand = primitive_integer(&from_integers(&lifted));
            let (q, r) = from_integers(&remaining).divrem(&from_integers(&cand));
            if r.is_zero() && q.coeffs().iter().all(|c| c.is_integer()) {
                found.push(from_integers(&cand).monic());
                remaining = primitive_integer(&q);
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 0)
                    .map(|(_, g)| g)
                    .collect();
                continue 'outer;
            }
        }
        k += 1;
    }
    if remaining.len() > 1 {
        found.push(from_integers(&remaining).monic());
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(f: &[i64]) -> Poly {
        Poly::new(Field::Rational, f.iter().map(|&c| Field::Rational.from_i64(c)).collect())
    }

    fn fp(p: u64, f: &[i64]) -> Poly {
        let field = Field::Prime(p);
        Poly::new(field, f.iter().map(|&c| field.from_i64(c)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        let a = q(&[-1, 0, 1]);
        let b = q(&[1, 1]);
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq, q(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&q(&[-1, 1])), q(&[-1, 1]));
        let inv = q(&[0, 1]).inv_mod(&q(&[1, 0, 1])).unwrap();
        assert_eq!(inv, q(&[0, -1]));
    }

    #[test]
    fn berlekamp_small_and_large() {
        // t^4 - 1 over F5 splits completely
        let fs = factor_squarefree(&fp(5, &[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fs.len(), 4);
        // t^2 + 1 irreducible over F3
        assert_eq!(factor_squarefree(&fp(3, &[1, 0, 1])).unwrap().len(), 1);
        let p = 1_000_003;
        let f = fp(p, &[2, 0, 1]).mul(&fp(p, &[-3, 1])).mul(&fp(p, &[5, 1]));
        let fs = factor_squarefree(&f).unwrap();
        let prod = fs.iter().fold(Poly::one(Field::Prime(p)), |a, g| a.mul(g));
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn rational_factoring() {
        // (t^2 - 2)(t - 1)(t + 3)
        let f = q(&[-2, 0, 1]).mul(&q(&[-1, 1])).mul(&q(&[3, 1]));
        let fs = factor_squarefree(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&q(&[-2, 0, 1])));
        // t^4 + 1 is irreducible over Q though reducible mod every prime
        assert_eq!(factor_squarefree(&q(&[1, 0, 0, 0, 1])).unwrap().len(), 1);
        let half = Poly::new(
            Field::Rational,
            vec![Field::Rational.parse_scalar("-1/4").unwrap(), Field::Rational.zero(), Field::Rational.one()],
        );
        assert_eq!(factor_squarefree(&half).unwrap().len(), 2);
    }
}
