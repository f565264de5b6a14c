//! Finite fields `GF(p^a)` for word-sized primes.
//!
//! Elements are stored as their integer encoding `Σ c_i p^i`, where
//! `Σ c_i x^i` is the residue modulo the field's defining polynomial. The
//! raw arithmetic lives on [`FieldSpec`] and takes encodings; [`FqElem`]
//! pairs an encoding with its field for checked element-level use.
//!
//! Fields of size at most 2^16 carry log/antilog tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ppd::factor::{is_prime_u64, prime_divisors_u64};

const TABLE_LIMIT: u64 = 1 << 16;
const PRIME_LIMIT: u64 = 1 << 31;

struct Tables {
    /// exp[i] = g^i for i in [0, q-1)
    exp: Vec<u64>,
    /// log[x] for x != 0
    log: Vec<u32>,
}

struct FieldInner {
    p: u64,
    a: u32,
    q: u64,
    /// Monic defining polynomial, ascending, length a + 1. `[0, 1]` for a = 1.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// The field `GF(p^a)`. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.a == other.0.a && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.a == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.0.p, self.0.a, self.0.modulus)
        }
    }
}

// Small polynomial helpers over F_p used only while validating a modulus.
fn fp_poly_rem(mut num: Vec<u64>, den: &[u64], p: u64) -> Vec<u64> {
    let dl = den.len() - 1;
    let lead_inv = crate::ppd::factor::pow_mod(den[dl], p - 2, p);
    while num.len() > dl {
        let top = *num.last().unwrap();
        if top != 0 {
            let f = (top as u128 * lead_inv as u128 % p as u128) as u64;
            let shift = num.len() - 1 - dl;
            for (i, &d) in den.iter().enumerate() {
                let sub = (f as u128 * d as u128 % p as u128) as u64;
                let slot = &mut num[shift + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        num.pop();
    }
    while num.last() == Some(&0) {
        num.pop();
    }
    num
}

fn fp_poly_mulmod(x: &[u64], y: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128) % p as u128) as u64;
        }
    }
    fp_poly_rem(out, m, p)
}

fn fp_poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    while b.last() == Some(&0) {
        b.pop();
    }
    while !b.is_empty() {
        let r = fp_poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// t^(p^k) mod m over F_p.
fn fp_frobenius_power_of_t(m: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut cur = fp_poly_rem(vec![0, 1], m, p);
    for _ in 0..k {
        // cur <- cur^p
        let mut base = cur.clone();
        let mut acc = vec![1u64];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_poly_mulmod(&acc, &base, m, p);
            }
            base = fp_poly_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Rabin irreducibility test for a monic polynomial over F_p.
pub(crate) fn fp_is_irreducible(m: &[u64], p: u64) -> bool {
    let n = m.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let sub_t = |mut v: Vec<u64>| {
        v.resize(v.len().max(2), 0);
        v[1] = (v[1] + p - 1) % p;
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    if !sub_t(fp_frobenius_power_of_t(m, p, n as u32)).is_empty() {
        return false;
    }
    for l in prime_divisors_u64(n as u64) {
        let h = sub_t(fp_frobenius_power_of_t(m, p, (n as u64 / l) as u32));
        if fp_poly_gcd(m.to_vec(), h, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `a` over F_p,
/// comparing ascending coefficient vectors `(c_0, c_1, ...)`.
fn smallest_irreducible(p: u64, a: u32) -> Vec<u64> {
    let a = a as usize;
    let mut digits = vec![0u64; a];
    loop {
        let mut cand = digits.clone();
        cand.push(1);
        if cand[0] != 0 && fp_is_irreducible(&cand, p) {
            return cand;
        }
        // increment, c_{a-1} least significant
        let mut i = a;
        loop {
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            assert!(i > 0, "irreducible polynomials of every degree exist");
        }
    }
}

impl FieldSpec {
    /// Build `GF(p^a)`, choosing the smallest irreducible modulus when none is given.
    pub fn new(p: u64, a: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if p >= PRIME_LIMIT || !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if a == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        let q = (p as u128).checked_pow(a).filter(|&q| q < (1u128 << 63));
        let q = q.ok_or_else(|| Error::FieldTooLarge(format!("{p}^{a}")))? as u64;
        let modulus = match modulus {
            Some(m) => {
                let mut m = m.to_vec();
                while m.last() == Some(&0) {
                    m.pop();
                }
                if m.len() != a as usize + 1 {
                    return Err(Error::DegreeMismatch {
                        expected: a as usize,
                        found: m.len().saturating_sub(1),
                    });
                }
                if m.iter().any(|&c| c >= p) || m[a as usize] != 1 {
                    return Err(Error::InvalidArgument(
                        "modulus must be monic with coefficients in [0, p)".into(),
                    ));
                }
                if !fp_is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None if a == 1 => vec![0, 1],
            None => smallest_irreducible(p, a),
        };
        let mut inner = FieldInner {
            p,
            a,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT && q > 2 {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// `GF(q)` for a prime power `q`, with the default modulus.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, a) = crate::ppd::prime_power(q)?;
        Self::new(p, a, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.a
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Defining polynomial, ascending; `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u64]> {
        (self.0.a > 1).then_some(self.0.modulus.as_slice())
    }

    pub fn same(&self, other: &FieldSpec) -> bool {
        self == other
    }

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        1
    }

    pub fn elem(&self, value: u64) -> FqElem {
        FqElem::new(self, value)
    }

    /// Coefficient vector of length `a`.
    pub fn digits(&self, mut x: u64) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.a)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        let p = self.0.p;
        digits.iter().rev().fold(0u64, |acc, &d| acc * p + d % p)
    }

    #[inline]
    pub fn add(&self, x: u64, y: u64) -> u64 {
        let p = self.0.p;
        if self.0.a == 1 {
            let s = x + y;
            return if s >= p { s - p } else { s };
        }
        if p == 2 {
            return x ^ y;
        }
        let (mut x, mut y) = (x, y);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.0.a {
            let s = (x % p + y % p) % p;
            out += s * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, x: u64) -> u64 {
        let p = self.0.p;
        if self.0.a == 1 {
            return if x == 0 { 0 } else { p - x };
        }
        if p == 2 {
            return x;
        }
        let mut x = x;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.0.a {
            let d = x % p;
            out += ((p - d) % p) * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: u64, y: u64) -> u64 {
        if x == 0 || y == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.q as usize - 1;
            let mut i = t.log[x as usize] as usize + t.log[y as usize] as usize;
            if i >= n {
                i -= n;
            }
            return t.exp[i];
        }
        self.mul_slow(x, y)
    }

    fn mul_slow(&self, x: u64, y: u64) -> u64 {
        let p = self.0.p;
        if self.0.a == 1 {
            return ((x as u128 * y as u128) % p as u128) as u64;
        }
        let prod = fp_poly_mulmod(&self.digits(x), &self.digits(y), &self.0.modulus, p);
        self.from_digits(&prod)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: u64) -> Option<u64> {
        if x == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.q as usize - 1;
            let l = t.log[x as usize] as usize;
            return Some(t.exp[(n - l) % n]);
        }
        Some(self.pow(x, self.0.q - 2))
    }

    pub fn div(&self, x: u64, y: u64) -> Result<u64> {
        Ok(self.mul(x, self.inv(y).ok_or(Error::DivisionByZero)?))
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.q - 1;
            let i = (t.log[x as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return t.exp[i];
        }
        let mut base = x;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, x: u64, e: &num_bigint::BigUint) -> u64 {
        use num_traits::{ToPrimitive, Zero};
        if x == 0 {
            return if e.is_zero() { 1 } else { 0 };
        }
        let reduced = e % (self.0.q - 1);
        self.pow(x, reduced.to_u64().unwrap())
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: u64, k: u32) -> u64 {
        let k = k % self.0.a;
        let mut y = x;
        for _ in 0..k {
            y = self.pow(y, self.0.p);
        }
        y
    }

    /// Image of a prime-field integer.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.0.p as i64) as u64
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: u64) -> Result<u64> {
        if x == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut order = self.0.q - 1;
        for l in prime_divisors_u64(order) {
            while order % l == 0 && self.pow(x, order / l) == 1 {
                order /= l;
            }
        }
        Ok(order)
    }

    /// Smallest-encoding generator of the multiplicative group.
    pub fn primitive_element(&self) -> u64 {
        if let Some(t) = &self.0.tables {
            let n = self.0.q - 1;
            return (1..self.0.q)
                .find(|&x| num_integer::Integer::gcd(&(t.log[x as usize] as u64), &n) == 1)
                .unwrap();
        }
        let n = self.0.q - 1;
        if n == 1 {
            return 1;
        }
        (2..self.0.q)
            .find(|&x| self.element_order(x).unwrap() == n)
            .unwrap()
    }

    /// Iterator over all encodings `0..q`.
    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.0.q
    }

    pub fn is_square(&self, x: u64) -> bool {
        x == 0 || self.0.p == 2 || self.pow(x, (self.0.q - 1) / 2) == 1
    }
}

fn build_tables(f: &FieldInner) -> Tables {
    let q = f.q;
    let p = f.p;
    let modulus = &f.modulus;
    let mul = |x: u64, y: u64| -> u64 {
        if f.a == 1 {
            return x * y % p;
        }
        let dig = |mut v: u64| -> Vec<u64> {
            (0..f.a)
                .map(|_| {
                    let d = v % p;
                    v /= p;
                    d
                })
                .collect()
        };
        let prod = fp_poly_mulmod(&dig(x), &dig(y), modulus, p);
        prod.iter().rev().fold(0u64, |acc, &d| acc * p + d)
    };
    let n = (q - 1) as usize;
    for g in 2..q {
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = 1u64;
        let mut ok = true;
        for i in 0..n {
            if log[cur as usize] != u32::MAX {
                ok = false;
                break;
            }
            log[cur as usize] = i as u32;
            exp.push(cur);
            cur = mul(cur, g);
        }
        if ok && cur == 1 {
            return Tables { exp, log };
        }
    }
    unreachable!("multiplicative group of a finite field is cyclic")
}

/// An element of a specific field.
#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: FieldSpec,
    value: u64,
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FqElem {
    /// Panics if `value >= q`.
    pub fn new(field: &FieldSpec, value: u64) -> Self {
        assert!(
            value < field.order(),
            "encoding {value} out of range for {field:?}"
        );
        FqElem {
            field: field.clone(),
            value,
        }
    }

    pub fn from_coeffs(field: &FieldSpec, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() > field.degree() as usize {
            return Err(Error::DegreeMismatch {
                expected: field.degree() as usize,
                found: coeffs.len(),
            });
        }
        Ok(FqElem::new(field, field.from_digits(coeffs)))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Integer encoding `Σ c_i p^i`.
    pub fn encode(&self) -> u64 {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FqElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u64) -> FqElem {
        FqElem {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FqElem {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FqElem> {
        Ok(self.with(self.field.inv(self.value).ok_or(Error::DivisionByZero)?))
    }

    pub fn pow(&self, e: u64) -> FqElem {
        self.with(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, k: u32) -> FqElem {
        self.with(self.field.frobenius(self.value, k))
    }

    pub fn order(&self) -> Result<u64> {
        self.field.element_order(self.value)
    }

    /// Image under the canonical embedding into `target`.
    pub fn embed(&self, target: &FieldSpec) -> Result<FqElem> {
        let emb = Embedding::new(&self.field, target)?;
        emb.apply_elem(self)
    }
}

/// A fixed embedding `GF(p^a) -> GF(p^b)` with `a | b`, sending the
/// generator `x` of the source to the smallest-encoding root of the source
/// modulus in the target.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: FieldSpec,
    target: FieldSpec,
    /// Powers of the chosen root: root^i for i < a.
    basis: Vec<u64>,
}

impl Embedding {
    pub fn new(source: &FieldSpec, target: &FieldSpec) -> Result<Self> {
        let (a, b) = (source.degree(), target.degree());
        if source.characteristic() != target.characteristic() || b % a != 0 {
            return Err(Error::NoEmbedding {
                source_degree: a,
                target_degree: b,
            });
        }
        let root = if a == 1 {
            0
        } else {
            find_smallest_root(&source.0.modulus, target)
        };
        let mut basis = Vec::with_capacity(a as usize);
        let mut cur = 1u64;
        for _ in 0..a {
            basis.push(cur);
            cur = target.mul(cur, root);
        }
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            basis,
        })
    }

    pub fn source(&self) -> &FieldSpec {
        &self.source
    }

    pub fn target(&self) -> &FieldSpec {
        &self.target
    }

    /// Map a raw source encoding to a raw target encoding.
    pub fn apply(&self, x: u64) -> u64 {
        if self.source.degree() == 1 {
            return x;
        }
        self.source
            .digits(x)
            .iter()
            .zip(&self.basis)
            .fold(0u64, |acc, (&c, &b)| {
                self.target.add(acc, self.target.mul(c, b))
            })
    }

    pub fn apply_elem(&self, x: &FqElem) -> Result<FqElem> {
        if x.field != self.source {
            return Err(Error::FieldMismatch);
        }
        Ok(FqElem::new(&self.target, self.apply(x.value)))
    }
}

/// Smallest-encoding root in `target` of a polynomial over the prime field.
fn find_smallest_root(poly: &[u64], target: &FieldSpec) -> u64 {
    let lifted = crate::fpoly::DensePoly::new(target, poly.to_vec());
    let roots = lifted.roots();
    *roots
        .iter()
        .min()
        .expect("source modulus splits in an extension of divisible degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let f2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.modulus().unwrap(), &[1, 1, 1]);
        let f9 = FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.order(), 9);
        assert_eq!(FieldSpec::new(3, 2, None).unwrap(), f9);
        for x in 0..3u64 {
            assert_ne!((x * x + 1) % 3, 0);
        }
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::new(5, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(
            FieldSpec::new(3, 3, Some(&[1, 0, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn basic_arithmetic() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.mul(3, 5), 1);
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        // x = 2, x + 1 = 3
        assert_eq!(f4.mul(2, 2), 3);
        let a = f7.elem(3);
        let b = FieldSpec::prime(5).unwrap().elem(3);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(f7.elem(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_examples() {
        let f9 = FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap();
        // x = 3, 2x = 6
        assert_eq!(f9.frobenius(3, 1), 6);
        let f7 = FieldSpec::prime(7).unwrap();
        for x in 0..7 {
            assert_eq!(f7.frobenius(x, 1), x);
        }
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.frobenius(2, 2), 2);
    }

    #[test]
    fn orders() {
        let f7 = FieldSpec::prime(7).unwrap();
        let mut powers = vec![];
        let mut c = 1;
        for _ in 0..6 {
            c = f7.mul(c, 3);
            powers.push(c);
        }
        assert_eq!(powers, vec![3, 2, 6, 4, 5, 1]);
        assert_eq!(f7.element_order(3).unwrap(), 6);
        assert_eq!(f7.element_order(1).unwrap(), 1);
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f4.element_order(2).unwrap(), 3);
        assert_eq!(f7.element_order(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn embeddings() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f4 = FieldSpec::of_order(4).unwrap();
        let f16 = FieldSpec::of_order(16).unwrap();
        assert_eq!(f2.elem(1).embed(&f4).unwrap().encode(), 1);
        let x = f4.elem(2).embed(&f16).unwrap();
        assert_eq!(x.order().unwrap(), 3);
        let f3 = FieldSpec::prime(3).unwrap();
        let f9 = FieldSpec::of_order(9).unwrap();
        assert_eq!(f3.elem(2).embed(&f9).unwrap().encode(), 2);
        let f8 = FieldSpec::of_order(8).unwrap();
        assert!(matches!(
            f4.elem(1).embed(&f8),
            Err(Error::NoEmbedding { .. })
        ));
        let emb = Embedding::new(&f4, &f16).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(emb.apply(f4.mul(x, y)), f16.mul(emb.apply(x), emb.apply(y)));
                assert_eq!(emb.apply(f4.add(x, y)), f16.add(emb.apply(x), emb.apply(y)));
            }
        }
    }

    #[test]
    fn slow_path_matches_tables() {
        // GF(3^11) has no tables; check a few identities through both paths.
        let big = FieldSpec::new(3, 11, None).unwrap();
        assert!(big.0.tables.is_none());
        let x = 12345u64;
        let inv = big.inv(x).unwrap();
        assert_eq!(big.mul(x, inv), 1);
        assert_eq!(big.frobenius(x, 11), x);
        let f81 = FieldSpec::new(3, 4, None).unwrap();
        for x in 1..81 {
            for y in [1u64, 7, 80] {
                assert_eq!(f81.mul(x, y), f81.mul_slow(x, y));
            }
        }
    }

    #[test]
    fn encoding_round_trip_exhaustive() {
        for q in [
            2u64, 3, 4, 5, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125, 243, 256, 1024, 4096, 65536,
        ] {
            let f = FieldSpec::of_order(q).unwrap();
            for x in f.elements() {
                let e = FqElem::from_coeffs(&f, &f.digits(x)).unwrap();
                assert_eq!(e.encode(), x);
            }
        }
    }
}
