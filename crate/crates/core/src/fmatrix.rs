//! Dense matrices over `GF(q)`.
//!
//! Vectors are rows and matrices act on the right, so the image of `g` is
//! the row space `{v g}` and its kernel is `{v : v g = 0}`. Subspaces are
//! kept as reduced row echelon bases, which makes equality a plain
//! comparison.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fpoly::{root_order, DensePoly, DEFAULT_FACTOR_SEED};

pub struct DenseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    invertible: OnceLock<bool>,
}

impl Clone for DenseMatrix {
    fn clone(&self) -> Self {
        DenseMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
            invertible: self.invertible.clone(),
        }
    }
}

impl PartialEq for DenseMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && self.field == other.field
    }
}

impl Eq for DenseMatrix {}

impl std::hash::Hash for DenseMatrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "DenseMatrix {}x{} over {:?}",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Display for DenseMatrix {
    /// One line per row, entries as space-separated encodings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl DenseMatrix {
    pub fn new(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| x >= field.order()) {
            return Err(Error::InvalidArgument(format!(
                "entry {bad} not in {field:?}"
            )));
        }
        Ok(Self::raw(field, rows, cols, data))
    }

    pub(crate) fn raw(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        DenseMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
            invertible: OnceLock::new(),
        }
    }

    pub fn from_rows(field: &FieldSpec, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Self::raw(field, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(field: &FieldSpec, d: usize) -> Self {
        Self::scalar(field, d, 1)
    }

    pub fn scalar(field: &FieldSpec, d: usize, c: u64) -> Self {
        let mut m = Self::zero(field, d, d);
        for i in 0..d {
            m.data[i * d + i] = c;
        }
        m
    }

    pub fn diagonal(field: &FieldSpec, diag: &[u64]) -> Self {
        let d = diag.len();
        let mut m = Self::zero(field, d, d);
        for (i, &c) in diag.iter().enumerate() {
            m.data[i * d + i] = c;
        }
        m
    }

    /// Companion matrix of a monic polynomial: `e_i -> e_{i+1}` and the
    /// last basis vector maps to minus the low coefficients.
    pub fn companion(f: &DensePoly) -> Self {
        let f = f.monic();
        let field = f.field();
        let n = f.degree().expect("nonzero polynomial");
        let mut m = Self::zero(field, n, n);
        for i in 0..n.saturating_sub(1) {
            m.data[i * n + i + 1] = 1;
        }
        for j in 0..n {
            m.data[(n - 1) * n + j] = field.neg(f.coeff(j));
        }
        m
    }

    pub fn block_diag(blocks: &[&DenseMatrix]) -> Result<Self> {
        let field = blocks
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no blocks".into()))?
            .field
            .clone();
        if blocks.iter().any(|b| b.field != field) {
            return Err(Error::FieldMismatch);
        }
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zero(&field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(r0 + i) * cols + c0 + j] = b.get(i, j);
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(m)
    }

    /// Kronecker product `a ⊗ b`.
    pub fn kronecker(a: &DenseMatrix, b: &DenseMatrix) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let f = &a.field;
        let (rows, cols) = (a.rows * b.rows, a.cols * b.cols);
        let mut m = Self::zero(f, rows, cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        m.data[(i * b.rows + k) * cols + j * b.cols + l] = f.mul(x, b.get(k, l));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        assert!(x < self.field.order());
        self.data[i * self.cols + j] = x;
        self.invertible = OnceLock::new();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Apply `f` to every entry, landing in `target`.
    pub fn map_entries(&self, target: &FieldSpec, f: impl Fn(u64) -> u64) -> DenseMatrix {
        Self::raw(
            target,
            self.rows,
            self.cols,
            self.data.iter().map(|&x| f(x)).collect(),
        )
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j));
            }
        }
        Self::raw(&self.field, self.cols, self.rows, out)
    }

    fn check_field(&self, other: &DenseMatrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &DenseMatrix) -> DenseMatrix {
        let f = &self.field;
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u64; n * m];
        for i in 0..n {
            let orow = &mut out[i * m..(i + 1) * m];
            for l in 0..k {
                let a = self.data[i * k + l];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[l * m..(l + 1) * m];
                if a == 1 {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        *o = f.add(*o, b);
                    }
                } else {
                    for (o, &b) in orow.iter_mut().zip(brow) {
                        if b != 0 {
                            *o = f.add(*o, f.mul(a, b));
                        }
                    }
                }
            }
        }
        Self::raw(f, n, m, out)
    }

    fn zip_with(&self, other: &DenseMatrix, op: impl Fn(u64, u64) -> u64) -> Result<DenseMatrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Self::raw(&self.field, self.rows, self.cols, data))
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        let f = self.field.clone();
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: u64) -> DenseMatrix {
        let f = &self.field;
        self.map_entries(f, |x| f.mul(x, c))
    }

    /// `self - c I`.
    pub fn minus_scalar(&self, c: u64) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let mut m = self.clone();
        m.invertible = OnceLock::new();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            m.data[idx] = self.field.sub(m.data[idx], c);
        }
        Ok(m)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0u64; self.cols];
        for (l, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(l)) {
                if b != 0 {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]).unwrap();
            for j in c..cols {
                m[r * cols + j] = f.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, m[r * cols + j]);
                    m[i * cols + j] = f.sub(m[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Self::raw(f, rows, cols, m), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        *self
            .invertible
            .get_or_init(|| self.is_square() && self.rank() == self.rows)
    }

    pub fn determinant(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = 1u64;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m[i * n + c] != 0) else {
                return Ok(0);
            };
            if pr != c {
                for j in 0..n {
                    m.swap(pr * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let piv = m[c * n + c];
            det = f.mul(det, piv);
            let inv = f.inv(piv).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m[i * n + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..n {
                    let sub = f.mul(factor, m[c * n + j]);
                    m[i * n + j] = f.sub(m[i * n + j], sub);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            aug.extend_from_slice(self.row(i));
            aug.extend((0..n).map(|j| u64::from(i == j)));
        }
        let (red, pivots) = Self::raw(f, n, 2 * n, aug).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            let _ = self.invertible.set(false);
            return Err(Error::Singular);
        }
        let _ = self.invertible.set(true);
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            out.extend_from_slice(&red.row(i)[n..]);
        }
        let inv = Self::raw(f, n, n, out);
        let _ = inv.invertible.set(true);
        Ok(inv)
    }

    pub fn pow(&self, e: u64) -> Result<DenseMatrix> {
        self.pow_big(&BigUint::from(e))
    }

    pub fn pow_big(&self, e: &BigUint) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let mut acc = DenseMatrix::identity(&self.field, self.rows);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_unchecked(&acc);
            if e.bit(i) {
                acc = acc.mul_unchecked(self);
            }
        }
        Ok(acc)
    }

    /// Signed integer power; negative exponents need an invertible matrix.
    pub fn pow_signed(&self, e: i64) -> Result<DenseMatrix> {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse()?.pow(e.unsigned_abs())
        }
    }

    pub fn trace(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok((0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i))))
    }

    /// `f(self)` by Horner's rule.
    pub fn eval_poly(&self, f: &DensePoly) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        if *f.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.rows;
        let mut acc = DenseMatrix::zero(&self.field, n, n);
        for &c in f.coeffs().iter().rev() {
            acc = acc.mul_unchecked(self);
            for i in 0..n {
                let idx = i * n + i;
                acc.data[idx] = self.field.add(acc.data[idx], c);
            }
        }
        Ok(acc)
    }

    /// Characteristic polynomial `det(tI - M)` via Hessenberg reduction.
    pub fn char_poly(&self) -> Result<DensePoly> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        let mut h = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else {
                continue;
            };
            if piv != m {
                for j in 0..n {
                    h.swap(at(piv, j), at(m, j));
                }
                for i in 0..n {
                    h.swap(at(i, piv), at(i, m));
                }
            }
            let tinv = f.inv(h[at(m, m - 1)]).unwrap();
            for i in m + 1..n {
                let u = f.mul(h[at(i, m - 1)], tinv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let s = f.mul(u, h[at(m, j)]);
                    h[at(i, j)] = f.sub(h[at(i, j)], s);
                }
                for r in 0..n {
                    let s = f.mul(u, h[at(r, i)]);
                    h[at(r, m)] = f.add(h[at(r, m)], s);
                }
            }
        }
        // p_k = char poly of the leading k x k block
        let mut polys: Vec<DensePoly> = vec![DensePoly::one(f)];
        for m in 1..=n {
            let lin = DensePoly::new(f, vec![f.neg(h[at(m - 1, m - 1)]), 1]);
            let mut pm = lin.mul_unchecked(&polys[m - 1]);
            let mut t = 1u64;
            for i in 1..m {
                t = f.mul(t, h[at(m - i, m - i - 1)]);
                let coef = f.mul(h[at(m - i - 1, m - 1)], t);
                if coef != 0 {
                    pm = pm.sub_unchecked(&polys[m - i - 1].scale(coef));
                }
            }
            polys.push(pm);
        }
        Ok(polys.pop().unwrap())
    }

    /// Minimal polynomial of the vector `v` under right multiplication.
    fn vector_min_poly(&self, v: &[u64]) -> DensePoly {
        let f = &self.field;
        let n = self.cols;
        // echelon rows with their combinations in terms of Krylov powers
        let mut basis: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
        let mut krylov = v.to_vec();
        let mut k = 0usize;
        loop {
            let mut cur = krylov.clone();
            let mut comb = vec![0u64; k + 1];
            comb[k] = 1;
            for (row, rcomb, piv) in &basis {
                let c = cur[*piv];
                if c == 0 {
                    continue;
                }
                for j in 0..n {
                    cur[j] = f.sub(cur[j], f.mul(c, row[j]));
                }
                for (j, &rc) in rcomb.iter().enumerate() {
                    comb[j] = f.sub(comb[j], f.mul(c, rc));
                }
            }
            match cur.iter().position(|&x| x != 0) {
                None => return DensePoly::new(f, comb),
                Some(piv) => {
                    let inv = f.inv(cur[piv]).unwrap();
                    cur.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                    comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                    basis.push((cur, comb, piv));
                }
            }
            krylov = self.apply(&krylov);
            k += 1;
        }
    }

    /// Minimal polynomial, as the lcm of the vector minimal polynomials of
    /// the standard basis.
    pub fn min_poly(&self) -> Result<DensePoly> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let f = &self.field;
        let n = self.rows;
        let mut acc = DensePoly::one(f);
        for i in 0..n {
            let mut e = vec![0u64; n];
            e[i] = 1;
            // skip vectors already annihilated by the running lcm
            if i > 0 && self.eval_poly_on_vector(&acc, &e).iter().all(|&x| x == 0) {
                continue;
            }
            let local = self.vector_min_poly(&e);
            let g = acc.gcd_unchecked(&local);
            acc = acc.mul_unchecked(&local).divmod_unchecked(&g).0.monic();
            if acc.degree() == Some(n) {
                break;
            }
        }
        Ok(acc)
    }

    fn eval_poly_on_vector(&self, p: &DensePoly, v: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut acc = vec![0u64; v.len()];
        for &c in p.coeffs().iter().rev() {
            acc = self.apply(&acc);
            for (a, &x) in acc.iter_mut().zip(v) {
                *a = f.add(*a, f.mul(c, x));
            }
        }
        acc
    }

    /// `{v : v M = 0}`.
    pub fn kernel(&self) -> Subspace {
        // v M = 0  <=>  M^T v^T = 0
        let (red, pivots) = self.transpose().rref();
        let f = &self.field;
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut vecs = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(red.get(r, fc));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, n, &vecs)
    }

    /// Row space `{v M}`.
    pub fn image(&self) -> Subspace {
        let (red, pivots) = self.rref();
        let rows: Vec<Vec<u64>> = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Subspace::from_echelon(&self.field, self.cols, rows)
    }

    /// Exact multiplicative order.
    ///
    /// `hint`, when given and satisfied (`M^hint = I`), is refined by
    /// descending through its prime divisors instead of factoring the
    /// minimal polynomial.
    pub fn order(&self, hint: Option<&BigUint>) -> Result<BigUint> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        if let Some(h) = hint {
            if !h.is_zero() && self.pow_big(h)?.is_identity() {
                return Ok(self.refine_order(h.clone())?);
            }
        }
        let mp = self.min_poly()?;
        let fac = mp.factor(DEFAULT_FACTOR_SEED)?;
        let mut order = BigUint::one();
        let mut max_mult = 1u32;
        for (g, m) in &fac.factors {
            order = order.lcm(&root_order(g)?);
            max_mult = max_mult.max(*m);
        }
        let p = self.field.characteristic();
        let mut pk = 1u64;
        while pk < max_mult as u64 {
            pk *= p;
        }
        Ok(order * pk)
    }

    fn refine_order(&self, mut n: BigUint) -> Result<BigUint> {
        let fac = crate::ppd::factor::factor_big(&n);
        for (l, _) in &fac.factors {
            while (&n % l).is_zero() {
                let cand = &n / l;
                if self.pow_big(&cand)?.is_identity() {
                    n = cand;
                } else {
                    break;
                }
            }
        }
        Ok(n)
    }

    /// The action on an invariant subspace, in the subspace's echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<DenseMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        if s.field != self.field {
            return Err(Error::FieldMismatch);
        }
        if s.ambient != self.rows {
            return Err(Error::DimensionMismatch(
                "subspace ambient dimension".into(),
            ));
        }
        let k = s.dim();
        let mut out = Vec::with_capacity(k * k);
        for b in &s.basis {
            let img = self.apply(b);
            out.extend(s.coordinates(&img).ok_or(Error::NotInvariant)?);
        }
        Ok(Self::raw(&self.field, k, k, out))
    }
}

/// A subspace of `GF(q)^d` held as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}; {:?})",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl Subspace {
    pub fn from_vectors(field: &FieldSpec, ambient: usize, vecs: &[Vec<u64>]) -> Self {
        if vecs.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = DenseMatrix::raw(field, vecs.len(), ambient, vecs.concat());
        m.image()
    }

    fn from_echelon(field: &FieldSpec, ambient: usize, basis: Vec<Vec<u64>>) -> Self {
        let pivots = basis
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).unwrap())
            .collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(field: &FieldSpec, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldSpec, ambient: usize) -> Self {
        DenseMatrix::identity(field, ambient).image()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> DenseMatrix {
        DenseMatrix::raw(&self.field, self.dim(), self.ambient, self.basis.concat())
    }

    /// Coordinates in the echelon basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let f = &self.field;
        let coords: Vec<u64> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut rest = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (r, &x) in rest.iter_mut().zip(b) {
                *r = f.sub(*r, f.mul(*c, x));
            }
        }
        rest.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(&self.field, self.ambient, &vecs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x A = y B  <=>  [x | y] [A; -B] = 0
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(&self.field, self.ambient);
        }
        let f = &self.field;
        let mut rows = self.basis.clone();
        for r in &other.basis {
            rows.push(r.iter().map(|&x| f.neg(x)).collect());
        }
        let stacked = DenseMatrix::raw(f, a + b, self.ambient, rows.concat());
        let ker = stacked.kernel();
        let vecs: Vec<Vec<u64>> = ker
            .basis
            .iter()
            .map(|coef| {
                let mut v = vec![0u64; self.ambient];
                for (c, row) in coef[..a].iter().zip(&self.basis) {
                    for (o, &x) in v.iter_mut().zip(row) {
                        *o = f.add(*o, f.mul(*c, x));
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(f, self.ambient, &vecs)
    }

    pub fn is_invariant(&self, m: &DenseMatrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }

    /// `{x : x·u = 0 for all u in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(&self.field, self.ambient);
        }
        self.basis_matrix().transpose().kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn phi5(f: &FieldSpec) -> DensePoly {
        DensePoly::new(f, vec![1, 1, 1, 1, 1])
    }

    /// block-diag(companion(Φ5), I_4) over F_2
    fn stingray_block() -> DenseMatrix {
        let f = f2();
        DenseMatrix::block_diag(&[
            &DenseMatrix::companion(&phi5(&f)),
            &DenseMatrix::identity(&f, 4),
        ])
        .unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = f2();
        let c = DenseMatrix::companion(&DensePoly::new(&f, vec![1, 1, 1]));
        let id = DenseMatrix::identity(&f, 2);
        assert_eq!(id.mul(&c).unwrap(), c);
        assert_eq!(c.inverse().unwrap(), c.pow(2).unwrap());
        assert_eq!(c.pow(3).unwrap(), id);
        assert_eq!(c.pow(0).unwrap(), id);
        let sing = DenseMatrix::zero(&f, 2, 2);
        assert_eq!(sing.inverse().unwrap_err(), Error::Singular);
        let rect = DenseMatrix::zero(&f, 2, 3);
        assert!(matches!(rect.mul(&rect), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn char_poly_examples() {
        let f = FieldSpec::of_order(9).unwrap();
        let g = DensePoly::new(&f, vec![5, 0, 7, 1, 3, 1]);
        assert_eq!(DenseMatrix::companion(&g).char_poly().unwrap(), g);
        let id = DenseMatrix::identity(&f, 5);
        assert_eq!(id.char_poly().unwrap(), DensePoly::linear(&f, 1).pow(5));
        let f2 = f2();
        let expect = phi5(&f2).mul(&DensePoly::linear(&f2, 1).pow(4)).unwrap();
        assert_eq!(stingray_block().char_poly().unwrap(), expect);
        assert_eq!(rect_err(), Error::NotSquare);
    }

    fn rect_err() -> Error {
        DenseMatrix::zero(&f2(), 2, 3).char_poly().unwrap_err()
    }

    #[test]
    fn min_poly_examples() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(
            DenseMatrix::identity(&f, 4).min_poly().unwrap(),
            DensePoly::linear(&f, 1)
        );
        let f2 = f2();
        let c = DenseMatrix::companion(&phi5(&f2));
        assert_eq!(c.min_poly().unwrap(), phi5(&f2));
        let cc = DenseMatrix::block_diag(&[&c, &c]).unwrap();
        assert_eq!(cc.min_poly().unwrap(), phi5(&f2));
    }

    #[test]
    fn kernel_image_examples() {
        let f = f2();
        let z = DenseMatrix::zero(&f, 4, 4);
        assert_eq!(z.kernel().dim(), 4);
        let g = stingray_block();
        let gm1 = g.minus_scalar(1).unwrap();
        assert_eq!(gm1.kernel().dim(), 4);
        assert_eq!(gm1.image().dim(), 4);
        let id = DenseMatrix::identity(&f, 3);
        assert_eq!(id.sub(&id).unwrap().image().dim(), 0);
    }

    #[test]
    fn order_examples() {
        let f = f2();
        assert_eq!(
            DenseMatrix::identity(&f, 3).order(None).unwrap(),
            BigUint::from(1u32)
        );
        let c = DenseMatrix::companion(&phi5(&f));
        assert_eq!(c.order(None).unwrap(), BigUint::from(5u32));
        // brute force: powers of the companion matrix
        let first = (1..=5u64)
            .find(|&k| c.pow(k).unwrap().is_identity())
            .unwrap();
        assert_eq!(first, 5);
        let f3 = FieldSpec::prime(3).unwrap();
        let j2 = DenseMatrix::from_rows(&f3, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(j2.order(None).unwrap(), BigUint::from(3u32));
        assert_eq!(
            j2.order(Some(&BigUint::from(9u32))).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            DenseMatrix::zero(&f3, 2, 2).order(None).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn restrict_examples() {
        let f = f2();
        let g = stingray_block();
        let full = Subspace::full(&f, 8);
        let r = g.restrict(&full).unwrap();
        assert_eq!(r.char_poly().unwrap(), g.char_poly().unwrap());
        let first = Subspace::from_vectors(
            &f,
            8,
            &(0..4)
                .map(|i| (0..8).map(|j| u64::from(i == j)).collect())
                .collect::<Vec<_>>(),
        );
        assert_eq!(
            g.restrict(&first).unwrap(),
            DenseMatrix::companion(&phi5(&f))
        );
        let w = g.minus_scalar(1).unwrap().image();
        assert_eq!(g.restrict(&w).unwrap().char_poly().unwrap(), phi5(&f));
        let line = Subspace::from_vectors(&f, 8, &[vec![1, 0, 0, 0, 0, 0, 0, 0]]);
        assert_eq!(g.restrict(&line).unwrap_err(), Error::NotInvariant);
    }

    #[test]
    fn subspace_ops() {
        let f = FieldSpec::prime(3).unwrap();
        let a = Subspace::from_vectors(&f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_vectors(&f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::from_vectors(&f, 3, &[vec![0, 2, 0]]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(
            a.annihilator(),
            Subspace::from_vectors(&f, 3, &[vec![0, 0, 1]])
        );
    }

    #[test]
    fn determinant_and_kronecker() {
        let f = FieldSpec::prime(7).unwrap();
        let a = DenseMatrix::from_rows(&f, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.determinant().unwrap(), f.from_int(-2));
        let k = DenseMatrix::kronecker(&a, &a).unwrap();
        assert_eq!(k.determinant().unwrap(), f.pow(f.from_int(-2), 4));
    }
}
