//! Element classification: stingray, ppd and the two non-stingray shapes
//! available when `e = d/2`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cyclo::MultiplicitySolution;
use crate::error::{Error, Result};
use crate::ffield::{Embedding, FieldSpec};
use crate::fmatrix::DenseMatrix;
use crate::fpoly::{cyclotomic_quotient, DensePoly, DEFAULT_FACTOR_SEED};
use crate::ppd::factor::is_prime_u64;
use crate::ppd::{is_eppd_prime, multiplicative_order, smallest_ppd_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Stingray(usize),
    PpdGeneral { e: usize, t: u32 },
    Type2I,
    Type2II,
    NotPpd,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Stingray(e) => write!(f, "STINGRAY({e})"),
            Tag::PpdGeneral { e, t } => write!(f, "PPD_GENERAL({e},{t})"),
            Tag::Type2I => f.write_str("TYPE_2I"),
            Tag::Type2II => f.write_str("TYPE_2II"),
            Tag::NotPpd => f.write_str("NOT_PPD"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClassification {
    pub d: usize,
    pub q: u64,
    pub e: usize,
    pub order: BigUint,
    pub semisimple: bool,
    pub fixed_dim: usize,
    /// `(degree, multiplicity)` of the non-`(t-1)` characteristic factors.
    pub irreducible_blocks: Vec<(usize, u32)>,
    pub tag: Tag,
    /// The order is an e-ppd prime, or 9 at `(q, e) = (2, 6)`.
    pub ppd_order: bool,
    pub diagnostics: String,
}

impl ElementClassification {
    pub fn is_ppd_stingray(&self) -> bool {
        matches!(self.tag, Tag::Stingray(_)) && self.ppd_order
    }
}

impl fmt::Display for ElementClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .irreducible_blocks
            .iter()
            .map(|(deg, m)| format!("{deg}^{m}"))
            .collect();
        write!(
            f,
            "tag={} order={} ppd={} semisimple={} fixed_dim={} blocks=[{}] d={} q={} e={}",
            self.tag,
            self.order,
            self.ppd_order,
            self.semisimple,
            self.fixed_dim,
            blocks.join(","),
            self.d,
            self.q,
            self.e
        )?;
        if !self.diagnostics.is_empty() {
            write!(f, " note={}", self.diagnostics)?;
        }
        Ok(())
    }
}

/// Whether an element of order `order` counts as an e-ppd element here.
pub fn ppd_order(order: &BigUint, q: u64, e: usize) -> bool {
    let Some(n) = order.to_u64() else {
        return false;
    };
    if n == 9 && q == 2 && e == 6 {
        return true;
    }
    n > 1 && is_prime_u64(n) && is_eppd_prime(n, q, e as u32).unwrap_or(false)
}

fn check_invertible(g: &DenseMatrix) -> Result<()> {
    if !g.is_square() {
        return Err(Error::NotSquare);
    }
    if !g.is_invertible() {
        return Err(Error::Singular);
    }
    Ok(())
}

pub fn classify_element(g: &DenseMatrix, e: usize) -> Result<ElementClassification> {
    check_invertible(g)?;
    if e == 0 {
        return Err(Error::InvalidArgument("e must be positive".into()));
    }
    let field = g.field();
    let d = g.rows();
    let one = DensePoly::linear(field, 1);
    let cp = g.char_poly()?.factor(DEFAULT_FACTOR_SEED)?;
    let mp = g.min_poly()?;
    let semisimple = mp
        .factor(DEFAULT_FACTOR_SEED)?
        .factors
        .iter()
        .all(|(_, m)| *m == 1);
    let fixed_dim = d - g.minus_scalar(1)?.rank();
    let blocks: Vec<(&DensePoly, u32)> = cp
        .factors
        .iter()
        .filter(|(f, _)| *f != one)
        .map(|(f, m)| (f, *m))
        .collect();
    let irreducible_blocks: Vec<(usize, u32)> = blocks
        .iter()
        .map(|(f, m)| (f.degree().unwrap(), *m))
        .collect();
    let order = g.order(None)?;
    let q = field.order();
    let ppd = ppd_order(&order, q, e);

    let mut diagnostics = String::new();
    let tag = if irreducible_blocks == [(e, 1)] && fixed_dim + e == d {
        Tag::Stingray(e)
    } else if 2 * e == d && irreducible_blocks == [(e, 1), (e, 1)] {
        Tag::Type2I
    } else if 2 * e == d && irreducible_blocks == [(e, 2)] && mp == *blocks[0].0 {
        Tag::Type2II
    } else if semisimple
        && !irreducible_blocks.is_empty()
        && irreducible_blocks.iter().all(|(deg, _)| *deg == e)
    {
        let t = irreducible_blocks.iter().map(|(_, m)| m).sum();
        if ppd {
            Tag::PpdGeneral { e, t }
        } else {
            diagnostics = format!("ppd shape with {t} blocks but order {order} is not e-ppd");
            Tag::NotPpd
        }
    } else {
        if irreducible_blocks.is_empty() {
            diagnostics = "unipotent".into();
        } else if !semisimple {
            diagnostics = "not semisimple".into();
        } else {
            diagnostics = "block degrees differ from e".into();
        }
        Tag::NotPpd
    };
    if matches!(tag, Tag::Stingray(_)) && !ppd {
        diagnostics = format!("order {order} is not e-ppd");
    }
    Ok(ElementClassification {
        d,
        q,
        e,
        order,
        semisimple,
        fixed_dim,
        irreducible_blocks,
        tag,
        ppd_order: ppd,
        diagnostics,
    })
}

/// Independent stingray test working directly with subspaces.
pub fn is_stingray_oracle(g: &DenseMatrix, e: usize) -> Result<bool> {
    check_invertible(g)?;
    let d = g.rows();
    let gm1 = g.minus_scalar(1)?;
    let fixed = gm1.kernel();
    let w = gm1.image();
    if fixed.dim() + e != d || w.dim() != e {
        return Ok(false);
    }
    if fixed.intersection(&w).dim() != 0 || !w.is_invariant(g) {
        return Ok(false);
    }
    let mp = g.restrict(&w)?.min_poly()?;
    Ok(mp.degree() == Some(e) && mp.is_irreducible()?)
}

/// Minimal polynomial splits into distinct linear factors over the base
/// field.
pub fn is_diagonalizable(g: &DenseMatrix) -> Result<bool> {
    let mp = g.min_poly()?;
    let fac = mp.factor(DEFAULT_FACTOR_SEED)?;
    Ok(fac
        .factors
        .iter()
        .all(|(f, m)| *m == 1 && f.degree() == Some(1)))
}

/// `diag(companion(f), I_{d/2})` for an irreducible factor `f` of
/// `(t^r - 1)/(t - 1)` over `GF(q)`.
pub fn construct_stingray(q: u64, d: usize, r: Option<u64>, det_one: bool) -> Result<DenseMatrix> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "dimension {d} must be even"
        )));
    }
    let e = d / 2;
    let field = FieldSpec::of_order(q)?;
    let r = match r {
        Some(r) => {
            if !is_prime_u64(r) || !is_eppd_prime(r, q, e as u32)? {
                return Err(Error::NoPpdPrime { q, e: e as u32 });
            }
            r
        }
        None if e < 2 => return Err(Error::NoPpdPrime { q, e: e as u32 }),
        None => smallest_ppd_prime(q, e as u32)?.ok_or(Error::NoPpdPrime { q, e: e as u32 })?,
    };
    let phi = cyclotomic_quotient(r, &field)?;
    let factors = phi.factor(DEFAULT_FACTOR_SEED)?.factors;
    let sign = if e % 2 == 0 { 1 } else { field.neg(1) };
    let f = if det_one {
        factors
            .iter()
            .map(|(f, _)| f)
            .find(|f| field.mul(sign, f.coeff(0)) == 1)
            .ok_or(Error::NoUnimodularFactor)?
    } else {
        &factors[0].0
    };
    let c = DenseMatrix::companion(f);
    DenseMatrix::block_diag(&[&c, &DenseMatrix::identity(&field, e)])
}

/// Smallest-encoding element of order `r` in `field`.
pub fn canonical_root_of_unity(field: &FieldSpec, r: u64) -> Result<u64> {
    let n = field.order() - 1;
    if n % r != 0 {
        return Err(Error::InvalidArgument(format!("{r} does not divide {n}")));
    }
    let h = field.pow(field.primitive_element(), n / r);
    let mut best = h;
    let mut x = h;
    for _ in 1..r {
        x = field.mul(x, h);
        // every nontrivial power has order r since r is prime
        if x != 1 && x < best {
            best = x;
        }
    }
    Ok(best)
}

/// Eigenvalue multiplicities of an element with `g^r = 1`, over the
/// splitting field `GF(q^{o_r(q)})`.
pub fn eigenvalue_multiplicities(g: &DenseMatrix, r: u64) -> Result<MultiplicitySolution> {
    check_invertible(g)?;
    let field = g.field();
    if r == field.characteristic() {
        return Err(Error::CharacteristicOrder(r));
    }
    if !is_prime_u64(r) || r < 3 {
        return Err(Error::NotPrime(r));
    }
    if !g.pow(r)?.is_identity() {
        return Err(Error::OrderMismatch {
            expected: r.to_string(),
            found: g.order(None)?.to_string(),
        });
    }
    let d = g.rows();
    let k = multiplicative_order(r, field.order())? as u32;
    let big = FieldSpec::new(field.characteristic(), field.degree() * k, None)?;
    let emb = Embedding::new(field, &big)?;
    let gb = g.map_entries(&big, |x| emb.apply(x));
    let cp = gb.char_poly()?;
    let zeta = canonical_root_of_unity(&big, r)?;
    let mut mults = vec![0u64; r as usize];
    let mut lambda = 1u64;
    for m in mults.iter_mut() {
        if cp.eval(lambda) == 0 {
            *m = (d - gb.minus_scalar(lambda)?.rank()) as u64;
        }
        lambda = big.mul(lambda, zeta);
    }
    let total: u64 = mults.iter().sum();
    debug_assert_eq!(total, d as u64, "order coprime to p forces semisimplicity");
    Ok(MultiplicitySolution {
        r: r as u32,
        d,
        mults,
    })
}

/// Order of `g` as a `u64` when it is prime; used by random searches.
pub fn prime_order(order: &BigUint) -> Option<u64> {
    order.to_u64().filter(|&n| n > 1 && is_prime_u64(n))
}
