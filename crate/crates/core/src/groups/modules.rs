//! Permutation modules of `S_n`/`A_n` and small `SL_2(q)` modules.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fmatrix::DenseMatrix;
use crate::groups::classical::invariant_alternating_form;
use crate::groups::perm::Perm;
use crate::groups::MatrixGroup;

/// The natural permutation module `Y = F_p^n`, or its fully deleted
/// section `V = W / (W ∩ D)`.
///
/// `V` uses the basis `w_i = y_{i+1} - y_i` of the sum-zero submodule `W`.
/// When `p | n` the all-ones vector has last coordinate 1 in that basis,
/// so the last `w` is dropped in the quotient.
#[derive(Debug, Clone)]
pub struct PermModule {
    field: FieldSpec,
    n: usize,
    deleted: bool,
    quotient: bool,
}

pub fn deleted_perm_module(n: usize, p: u64) -> Result<PermModule> {
    if n < 5 {
        return Err(Error::DegreeTooSmall(n));
    }
    let field = FieldSpec::prime(p)?;
    Ok(PermModule {
        field,
        n,
        deleted: true,
        quotient: n as u64 % p == 0,
    })
}

pub fn full_perm_module(n: usize, p: u64) -> Result<PermModule> {
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    Ok(PermModule {
        field: FieldSpec::prime(p)?,
        n,
        deleted: false,
        quotient: false,
    })
}

impl PermModule {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_deleted(&self) -> bool {
        self.deleted
    }

    pub fn dim(&self) -> usize {
        match (self.deleted, self.quotient) {
            (false, _) => self.n,
            (true, false) => self.n - 1,
            (true, true) => self.n - 2,
        }
    }

    /// Coordinates of a sum-zero vector of `Y` in the basis of `V`.
    fn coords(&self, x: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut acc = 0u64;
        let mut a: Vec<u64> = x[..self.n - 1]
            .iter()
            .map(|&xi| {
                acc = f.add(acc, xi);
                f.neg(acc)
            })
            .collect();
        if self.quotient {
            let last = a.pop().unwrap();
            for (i, ai) in a.iter_mut().enumerate() {
                *ai = f.add(*ai, f.mul(last, f.from_int(i as i64 + 1)));
            }
        }
        a
    }

    /// The matrix of `σ` acting on the right.
    pub fn matrix(&self, sigma: &Perm) -> Result<DenseMatrix> {
        if sigma.degree() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of degree {} on a degree-{} module",
                sigma.degree(),
                self.n
            )));
        }
        let f = &self.field;
        let d = self.dim();
        let mut data = Vec::with_capacity(d * d);
        if !self.deleted {
            for i in 0..self.n {
                data.extend((0..self.n).map(|j| u64::from(sigma.apply(i) == j)));
            }
        } else {
            let mut y = vec![0u64; self.n];
            for i in 0..d {
                y.iter_mut().for_each(|x| *x = 0);
                y[sigma.apply(i + 1)] = 1;
                y[sigma.apply(i)] = f.neg(1);
                data.extend(self.coords(&y));
            }
        }
        DenseMatrix::new(f, d, d, data)
    }

    /// `A_n` on the deleted module, `S_n` on the full one.
    pub fn group_generators(&self) -> Vec<Perm> {
        let n = self.n;
        if self.deleted {
            let long = if n % 2 == 1 {
                Perm::cycle(n, n)
            } else {
                Perm::from_cycles(n, &[(2..=n).collect()]).unwrap()
            };
            vec![Perm::cycle(n, 3), long]
        } else {
            vec![Perm::cycle(n, 2), Perm::cycle(n, n)]
        }
    }

    pub fn group(&self) -> MatrixGroup {
        let gens = self
            .group_generators()
            .iter()
            .map(|s| self.matrix(s).unwrap())
            .collect();
        let label = if self.deleted {
            format!(
                "A{} deleted permutation module over GF({})",
                self.n,
                self.field.order()
            )
        } else {
            format!(
                "S{} permutation module over GF({})",
                self.n,
                self.field.order()
            )
        };
        MatrixGroup::new(&self.field, self.dim(), gens, &label).unwrap()
    }

    /// The all-ones vector of the full module.
    pub fn all_ones(&self) -> Vec<u64> {
        vec![1; self.n]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Spec {
    Natural,
    Symcube,
    Twist { s: u32, t: u32 },
}

impl fmt::Display for Sl2Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Spec::Natural => f.write_str("natural"),
            Sl2Spec::Symcube => f.write_str("symcube"),
            Sl2Spec::Twist { s, t } => write!(f, "twist:{s},{t}"),
        }
    }
}

impl FromStr for Sl2Spec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "natural" => Ok(Sl2Spec::Natural),
            "symcube" => Ok(Sl2Spec::Symcube),
            _ => {
                let rest = s
                    .strip_prefix("twist:")
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown module {s:?}")))?;
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidArgument("expected twist:S,T".into()))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidArgument(format!("bad twist index {x:?}")))
                };
                Ok(Sl2Spec::Twist {
                    s: parse(a)?,
                    t: parse(b)?,
                })
            }
        }
    }
}

/// A representation of `SL_2(q)`, given as a map on 2x2 matrices.
#[derive(Debug, Clone)]
pub struct Sl2Module {
    field: FieldSpec,
    spec: Sl2Spec,
    form: OnceLock<Option<DenseMatrix>>,
}

/// `[[1,1],[0,1]]` and `[[1,0],[ω,1]]` for the primitive element `ω`.
/// The two unitriangular generators, plus `diag(ω, ω^-1)` when `q` is not
/// prime (the unitriangular pair alone only generates a proper subgroup
/// there, e.g. a dihedral group of order 10 for `q = 4`).
pub fn sl2_generators(field: &FieldSpec) -> Vec<DenseMatrix> {
    let w = field.primitive_element();
    let mut gens = vec![
        DenseMatrix::new(field, 2, 2, vec![1, 1, 0, 1]).unwrap(),
        DenseMatrix::new(field, 2, 2, vec![1, 0, w, 1]).unwrap(),
    ];
    if field.degree() > 1 {
        let wi = field.inv(w).unwrap();
        gens.push(DenseMatrix::diagonal(field, &[w, wi]));
    }
    gens
}

pub fn sl2_module(q: u64, spec: Sl2Spec) -> Result<Sl2Module> {
    let field = FieldSpec::of_order(q)?;
    match spec {
        Sl2Spec::Natural => {}
        Sl2Spec::Symcube => {
            if field.characteristic() < 5 {
                return Err(Error::CharTooSmallForSymcube(field.characteristic()));
            }
        }
        Sl2Spec::Twist { s, t } => {
            let a = field.degree();
            if s >= t || t >= a {
                return Err(Error::BadTwist { s, t, a });
            }
        }
    }
    Ok(Sl2Module {
        field,
        spec,
        form: OnceLock::new(),
    })
}

/// Coefficients of a binary form of degree `k`, indexed by the power of Y.
fn form_mul(f: &FieldSpec, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

impl Sl2Module {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn spec(&self) -> Sl2Spec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        match self.spec {
            Sl2Spec::Natural => 2,
            _ => 4,
        }
    }

    /// The image of a 2x2 matrix `h`.
    pub fn image(&self, h: &DenseMatrix) -> Result<DenseMatrix> {
        if h.rows() != 2 || h.cols() != 2 {
            return Err(Error::DimensionMismatch("expected a 2x2 matrix".into()));
        }
        if h.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        match self.spec {
            Sl2Spec::Natural => Ok(h.clone()),
            Sl2Spec::Twist { s, t } => {
                let hs = h.map_entries(f, |x| f.frobenius(x, s));
                let ht = h.map_entries(f, |x| f.frobenius(x, t));
                DenseMatrix::kronecker(&hs, &ht)
            }
            Sl2Spec::Symcube => {
                // X -> aX + bY, Y -> cX + dY on X^3, X^2Y, XY^2, Y^3
                let lx = [h.get(0, 0), h.get(0, 1)];
                let ly = [h.get(1, 0), h.get(1, 1)];
                let mut data = Vec::with_capacity(16);
                for i in 0..4 {
                    let mut poly = vec![1u64];
                    for _ in 0..3 - i {
                        poly = form_mul(f, &poly, &lx);
                    }
                    for _ in 0..i {
                        poly = form_mul(f, &poly, &ly);
                    }
                    data.extend(poly);
                }
                DenseMatrix::new(f, 4, 4, data)
            }
        }
    }

    pub fn group(&self) -> MatrixGroup {
        let gens = sl2_generators(&self.field)
            .iter()
            .map(|h| self.image(h).unwrap())
            .collect();
        let label = format!("SL2({}) {} module", self.field.order(), self.spec);
        MatrixGroup::new(&self.field, self.dim(), gens, &label).unwrap()
    }

    /// An alternating `J` with `g^T J g = J` on the module, if one exists.
    pub fn alternating_form(&self) -> Option<&DenseMatrix> {
        self.form
            .get_or_init(|| invariant_alternating_form(&self.group()))
            .as_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpoly::DensePoly;

    #[test]
    fn deleted_dimensions() {
        assert_eq!(deleted_perm_module(9, 2).unwrap().dim(), 8);
        assert_eq!(deleted_perm_module(10, 2).unwrap().dim(), 8);
        assert_eq!(
            deleted_perm_module(4, 2).unwrap_err(),
            Error::DegreeTooSmall(4)
        );
    }

    #[test]
    fn five_cycle_on_deleted_module() {
        let m = deleted_perm_module(9, 2).unwrap();
        let g = m.matrix(&Perm::cycle(9, 5)).unwrap();
        let f = m.field();
        let expect = DensePoly::new(f, vec![1, 1, 1, 1, 1])
            .mul(&DensePoly::linear(f, 1).pow(4))
            .unwrap();
        assert_eq!(g.char_poly().unwrap(), expect);
    }

    #[test]
    fn homomorphism_small() {
        let m = deleted_perm_module(6, 3).unwrap();
        let a = Perm::from_cycles(6, &[vec![1, 2, 3, 4]]).unwrap();
        let b = Perm::from_cycles(6, &[vec![2, 5], vec![3, 6]]).unwrap();
        let lhs = m.matrix(&a.compose(&b)).unwrap();
        let rhs = m.matrix(&a).unwrap().mul(&m.matrix(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sl2_spec_parsing() {
        assert_eq!(
            "twist:0,2".parse::<Sl2Spec>().unwrap(),
            Sl2Spec::Twist { s: 0, t: 2 }
        );
        assert_eq!("SYMCUBE".parse::<Sl2Spec>().unwrap(), Sl2Spec::Symcube);
        assert!("twist:1".parse::<Sl2Spec>().is_err());
        assert_eq!(
            sl2_module(8, Sl2Spec::Twist { s: 1, t: 1 }).unwrap_err(),
            Error::BadTwist { s: 1, t: 1, a: 3 }
        );
        assert_eq!(
            sl2_module(9, Sl2Spec::Symcube).unwrap_err(),
            Error::CharTooSmallForSymcube(3)
        );
    }

    #[test]
    fn symcube_preserves_a_form() {
        let m = sl2_module(5, Sl2Spec::Symcube).unwrap();
        let j = m.alternating_form().expect("symplectic").clone();
        assert!(j.is_invertible());
        assert_eq!(j.transpose(), j.scale(m.field().neg(1)));
        for g in m.group().generators() {
            assert_eq!(g.transpose().mul(&j).unwrap().mul(g).unwrap(), j);
        }
    }
}
