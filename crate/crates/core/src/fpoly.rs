//! Univariate polynomials over `GF(q)` and their complete factorisation.
//!
//! Factoring runs squarefree decomposition, distinct-degree splitting and
//! Cantor–Zassenhaus equal-degree splitting (the trace-map variant in
//! characteristic 2). Factor lists are sorted by degree and then by the
//! ascending coefficient vector, so the output never depends on the seed.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffield::{FieldSpec, FqElem};
use crate::ppd::factor::prime_divisors_u64;

/// Default seed for equal-degree splitting.
pub const DEFAULT_FACTOR_SEED: u64 = 0xC0FFEE;

/// A polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct DensePoly {
    field: FieldSpec,
    coeffs: Vec<u64>,
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly{:?}", self.coeffs)
    }
}

impl fmt::Display for DensePoly {
    /// Space-separated ascending coefficient encodings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl DensePoly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        trim(&mut coeffs);
        DensePoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Parse the space-separated text form.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self> {
        let coeffs = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .ok()
                    .filter(|&c| c < field.order())
                    .ok_or_else(|| Error::InvalidArgument(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, coeffs))
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::new(field, vec![1])
    }

    /// The indeterminate `t`.
    pub fn t(field: &FieldSpec) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// `t - c`.
    pub fn linear(field: &FieldSpec, c: u64) -> Self {
        Self::new(field, vec![field.neg(c), 1])
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(field: &FieldSpec, n: usize) -> Self {
        let mut c = vec![0u64; n + 1];
        c[0] = field.neg(1);
        c[n] = field.add(c[n], 1);
        Self::new(field, c)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn with(&self, coeffs: Vec<u64>) -> Self {
        Self::new(&self.field, coeffs)
    }

    fn check(&self, other: &DensePoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Quotient and remainder.
    pub fn divmod(&self, other: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.divmod_unchecked(other))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &DensePoly) -> Result<DensePoly> {
        self.check(other)?;
        Ok(self.gcd_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &DensePoly) -> DensePoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        self.with(c)
    }

    pub(crate) fn sub_unchecked(&self, other: &DensePoly) -> DensePoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        self.with(c)
    }

    pub(crate) fn mul_unchecked(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        self.with(out)
    }

    pub fn scale(&self, c: u64) -> DensePoly {
        let f = &self.field;
        self.with(self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn neg(&self) -> DensePoly {
        let f = &self.field;
        self.with(self.coeffs.iter().map(|&x| f.neg(x)).collect())
    }

    pub(crate) fn divmod_unchecked(&self, other: &DensePoly) -> (DensePoly, DensePoly) {
        let f = &self.field;
        let dl = other.deg();
        if self.coeffs.len() <= dl {
            return (DensePoly::zero(f), self.clone());
        }
        let lead_inv = f.inv(other.leading()).expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dl];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dl];
            if top == 0 {
                continue;
            }
            let c = f.mul(top, lead_inv);
            quot[k] = c;
            for (i, &d) in other.coeffs.iter().enumerate() {
                if d != 0 {
                    rem[k + i] = f.sub(rem[k + i], f.mul(c, d));
                }
            }
        }
        rem.truncate(dl);
        (self.with(quot), self.with(rem))
    }

    pub(crate) fn rem_unchecked(&self, other: &DensePoly) -> DensePoly {
        self.divmod_unchecked(other).1
    }

    /// Scale to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).unwrap();
        self.scale(inv)
    }

    pub(crate) fn gcd_unchecked(&self, other: &DensePoly) -> DensePoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem_unchecked(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> DensePoly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.characteristic()) as i64)))
            .collect();
        self.with(c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub(crate) fn mulmod(&self, other: &DensePoly, m: &DensePoly) -> DensePoly {
        self.mul_unchecked(other).rem_unchecked(m)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &DensePoly) -> DensePoly {
        let mut base = self.rem_unchecked(m);
        let mut acc = DensePoly::one(&self.field).rem_unchecked(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &DensePoly) -> DensePoly {
        let mut acc = DensePoly::one(&self.field).rem_unchecked(m);
        let base = self.rem_unchecked(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> DensePoly {
        let mut base = self.clone();
        let mut acc = DensePoly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical order: degree, then ascending coefficient vector.
    pub fn canonical_cmp(&self, other: &DensePoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Irreducibility by Rabin's test.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = self.deg();
        if n == 0 {
            return Ok(false);
        }
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.field.order();
        let t = DensePoly::t(&self.field);
        // frob[k] = t^(q^k) mod f
        let mut frob = vec![t.rem_unchecked(&f)];
        for k in 1..=n {
            let next = frob[k - 1].pow_mod(q, &f);
            frob.push(next);
        }
        if !frob[n].sub_unchecked(&t).rem_unchecked(&f).is_zero() {
            return Ok(false);
        }
        for l in prime_divisors_u64(n as u64) {
            let h = frob[n / l as usize].sub_unchecked(&t);
            if !f.gcd_unchecked(&h).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complete factorisation; the result does not depend on `seed`.
    pub fn factor(&self, seed: u64) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = FqElem::new(&self.field, self.leading());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors: Vec<(DensePoly, u32)> = Vec::new();
        for (sqf, mult) in squarefree_decomposition(&self.monic()) {
            for (part, deg) in distinct_degree(&sqf) {
                for irr in equal_degree(&part, deg, &mut rng) {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
        // Merge equal factors (a factor can come from different squarefree layers
        // only via p-th root recursion with distinct multiplicities; keep it robust).
        let mut merged: Vec<(DensePoly, u32)> = Vec::new();
        for (f, m) in factors {
            match merged.last_mut() {
                Some((g, k)) if *g == f => *k += m,
                _ => merged.push((f, m)),
            }
        }
        Ok(Factorization {
            unit,
            factors: merged,
        })
    }

    /// Distinct roots in the coefficient field, ascending by encoding.
    pub fn roots(&self) -> Vec<u64> {
        if self.deg() == 0 || self.is_zero() {
            return Vec::new();
        }
        let f = self.monic();
        let t = DensePoly::t(&self.field);
        let split = t
            .pow_mod(self.field.order(), &f)
            .sub_unchecked(&t)
            .gcd_unchecked(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_FACTOR_SEED);
        let mut roots: Vec<u64> = equal_degree(&split, 1, &mut rng)
            .into_iter()
            .map(|l| self.field.neg(l.coeff(0)))
            .collect();
        roots.sort_unstable();
        roots
    }
}

/// `(t^r - 1)/(t - 1)` for a prime `r` different from the characteristic.
pub fn cyclotomic_quotient(r: u64, field: &FieldSpec) -> Result<DensePoly> {
    if !crate::ppd::factor::is_prime_u64(r) {
        return Err(Error::NotPrime(r));
    }
    if r == field.characteristic() {
        return Err(Error::CharacteristicDividesR {
            p: field.characteristic(),
            r,
        });
    }
    Ok(DensePoly::new(field, vec![1; r as usize]))
}

/// Unit times monic irreducible factors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FqElem,
    pub factors: Vec<(DensePoly, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> DensePoly {
        let field = self.unit.field();
        self.factors.iter().fold(
            DensePoly::new(field, vec![self.unit.encode()]),
            |acc, (f, m)| acc.mul_unchecked(&f.pow(*m)),
        )
    }

    /// `(degree, multiplicity)` for each factor.
    pub fn shape(&self) -> Vec<(usize, u32)> {
        self.factors.iter().map(|(f, m)| (f.deg(), *m)).collect()
    }
}

/// p-th root of a polynomial whose exponents are all multiples of p.
fn pth_root(f: &DensePoly) -> DensePoly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let a = field.degree();
    let c = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| field.frobenius(c, a - 1))
        .collect();
    DensePoly::new(field, c)
}

/// Squarefree parts `(g, i)` with `f = Π g^i`, for monic `f`.
fn squarefree_decomposition(f: &DensePoly) -> Vec<(DensePoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = f.field().characteristic() as u32;
    let mut c = f.gcd_unchecked(&f.derivative());
    let mut w = f.divmod_unchecked(&c).0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd_unchecked(&c);
        let fac = w.divmod_unchecked(&y).0;
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.divmod_unchecked(&w).0;
        i += 1;
    }
    if !c.is_one() && c.deg() > 0 {
        for (g, k) in squarefree_decomposition(&pth_root(&c).monic()) {
            out.push((g, k * p));
        }
    }
    out
}

/// Split a squarefree monic polynomial into `(product of all degree-k factors, k)`.
fn distinct_degree(f: &DensePoly) -> Vec<(DensePoly, usize)> {
    let field = f.field();
    let q = field.order();
    let t = DensePoly::t(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.rem_unchecked(&rest);
    let mut k = 0usize;
    while rest.deg() >= 2 * (k + 1) {
        k += 1;
        h = h.pow_mod(q, &rest);
        let g = h.sub_unchecked(&t).gcd_unchecked(&rest);
        if !g.is_one() {
            rest = rest.divmod_unchecked(&g).0;
            h = h.rem_unchecked(&rest);
            out.push((g, k));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn random_poly(field: &FieldSpec, below_degree: usize, rng: &mut ChaCha8Rng) -> DensePoly {
    let q = field.order();
    DensePoly::new(
        field,
        (0..below_degree).map(|_| rng.random_range(0..q)).collect(),
    )
}

/// Split a squarefree monic product of degree-k irreducibles.
fn equal_degree(f: &DensePoly, k: usize, rng: &mut ChaCha8Rng) -> Vec<DensePoly> {
    let n = f.deg();
    if n == 0 {
        return Vec::new();
    }
    if n == k {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order();
    let p = field.characteristic();
    loop {
        let a = random_poly(field, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(m k - 1)), q = 2^m
            let steps = field.degree() as usize * k;
            let mut term = a.rem_unchecked(f);
            let mut acc = term.clone();
            for _ in 1..steps {
                term = term.mulmod(&term, f);
                acc = acc.add_unchecked(&term);
            }
            acc
        } else {
            // a^((q^k - 1)/2) = (a^(1 + q + ... + q^(k-1)))^((q-1)/2)
            let mut conj = a.rem_unchecked(f);
            let mut norm = conj.clone();
            for _ in 1..k {
                conj = conj.pow_mod(q, f);
                norm = norm.mulmod(&conj, f);
            }
            norm.pow_mod((q - 1) / 2, f)
                .sub_unchecked(&DensePoly::one(field))
        };
        let g = b.gcd_unchecked(f);
        if g.deg() > 0 && g.deg() < n {
            let h = f.divmod_unchecked(&g).0.monic();
            let mut out = equal_degree(&g, k, rng);
            out.extend(equal_degree(&h, k, rng));
            return out;
        }
    }
}

/// Order of `t` modulo an irreducible `f != t`, i.e. the multiplicative
/// order of any root of `f` in `GF(q^deg f)`.
pub fn root_order(f: &DensePoly) -> Result<BigUint> {
    let field = f.field();
    let n = f.deg() as u32;
    if f.coeff(0) == 0 {
        return Err(Error::Singular);
    }
    let f = f.monic();
    let t = DensePoly::t(field);
    if n == 1 {
        let root = field.neg(f.coeff(0));
        return Ok(BigUint::from(field.element_order(root)?));
    }
    let fac = crate::ppd::factor::factor_q_power_minus_one(field.order(), n);
    let mut order = BigUint::from(field.order()).pow(n) - 1u32;
    for (l, _) in &fac.factors {
        loop {
            if !(&order % l).is_zero() {
                break;
            }
            let cand = &order / l;
            if t.pow_mod_big(&cand, &f).is_one() {
                order = cand;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn poly(f: &FieldSpec, c: &[u64]) -> DensePoly {
        DensePoly::new(f, c.to_vec())
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = fp(5);
        let a = DensePoly::t_pow_minus_one(&f5, 2);
        let b = DensePoly::t_pow_minus_one(&f5, 3);
        assert_eq!(a.gcd(&b).unwrap(), poly(&f5, &[4, 1]));
        let f2 = fp(2);
        let s = poly(&f2, &[1, 1]);
        assert_eq!(s.mul(&s).unwrap(), poly(&f2, &[1, 0, 1]));
        for p in [2u64, 3, 7] {
            let f = fp(p);
            let (q, r) = DensePoly::t_pow_minus_one(&f, 5)
                .divmod(&DensePoly::linear(&f, 1))
                .unwrap();
            assert_eq!(q, poly(&f, &[1, 1, 1, 1, 1]));
            assert!(r.is_zero());
        }
        assert_eq!(
            a.divmod(&DensePoly::zero(&f5)).unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(a.add(&s).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = fp(2);
        let phi5 = poly(&f2, &[1, 1, 1, 1, 1]);
        // no roots in F_2, and not divisible by t^2 + t + 1
        assert_ne!(phi5.eval(0), 0);
        assert_ne!(phi5.eval(1), 0);
        assert!(!phi5.divmod(&poly(&f2, &[1, 1, 1])).unwrap().1.is_zero());
        assert!(phi5.is_irreducible().unwrap());
        assert!(!poly(&fp(5), &[1, 0, 1]).is_irreducible().unwrap());
        assert!(DensePoly::linear(&f2, 1).is_irreducible().unwrap());
        assert_eq!(
            DensePoly::zero(&f2).is_irreducible().unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn factor_examples() {
        let f2 = fp(2);
        let fac = DensePoly::t_pow_minus_one(&f2, 5).factor(1).unwrap();
        assert_eq!(
            fac.factors,
            vec![(poly(&f2, &[1, 1]), 1), (poly(&f2, &[1, 1, 1, 1, 1]), 1)]
        );
        let f11 = fp(11);
        let fac = DensePoly::t_pow_minus_one(&f11, 5).factor(7).unwrap();
        assert_eq!(fac.shape(), vec![(1, 1); 5]);
        let f3 = fp(3);
        let fac = poly(&f3, &[0, 0, 0, 0, 1]).factor(0).unwrap();
        assert_eq!(fac.factors, vec![(DensePoly::t(&f3), 4)]);
    }

    #[test]
    fn factor_is_seed_independent() {
        let f = FieldSpec::of_order(9).unwrap();
        let g = DensePoly::t_pow_minus_one(&f, 40);
        let a = g.factor(1).unwrap();
        let b = g.factor(99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.reconstruct(), g);
    }

    #[test]
    fn inseparable_factors() {
        let f4 = FieldSpec::of_order(4).unwrap();
        // (t^2 + x)^2 (t+1)^3 over GF(4)
        let g = poly(&f4, &[2, 0, 1])
            .pow(2)
            .mul(&poly(&f4, &[1, 1]).pow(3))
            .unwrap();
        let fac = g.factor(3).unwrap();
        assert_eq!(fac.reconstruct(), g);
        for (h, _) in &fac.factors {
            assert!(h.is_irreducible().unwrap());
        }
    }

    #[test]
    fn cyclotomic_quotients() {
        let f2 = fp(2);
        assert_eq!(cyclotomic_quotient(3, &f2).unwrap(), poly(&f2, &[1, 1, 1]));
        assert_eq!(
            cyclotomic_quotient(5, &f2).unwrap(),
            poly(&f2, &[1, 1, 1, 1, 1])
        );
        let f11 = fp(11);
        let c = cyclotomic_quotient(5, &f11).unwrap();
        assert_eq!(c.factor(0).unwrap().shape(), vec![(1, 1); 4]);
        assert!(matches!(
            cyclotomic_quotient(5, &fp(5)),
            Err(Error::CharacteristicDividesR { .. })
        ));
    }

    #[test]
    fn roots_of_unity_order() {
        let f2 = fp(2);
        let phi5 = poly(&f2, &[1, 1, 1, 1, 1]);
        assert_eq!(root_order(&phi5).unwrap(), BigUint::from(5u32));
        let f7 = fp(7);
        assert_eq!(
            root_order(&DensePoly::linear(&f7, 3)).unwrap(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn roots_found() {
        let f7 = fp(7);
        assert_eq!(DensePoly::t_pow_minus_one(&f7, 3).roots(), vec![1, 2, 4]);
        assert!(poly(&fp(2), &[1, 1, 1]).roots().is_empty());
    }
}
