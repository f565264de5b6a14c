//! Exact arithmetic in `Z[ζ_r]` for odd primes `r`, and the character
//! computations built on it.
//!
//! Elements are stored as `Σ b_i ζ^i` with `b_0 = 0`, which is possible
//! because `1 + ζ + … + ζ^{r-1} = 0`. In that form `ζ, …, ζ^{r-1}` is a
//! Z-basis, so equality is coefficient equality.
//!
//! Root labelling: over a finite field `ζ` stands for the smallest-encoding
//! element of order `r` in the splitting field. Nothing here depends on the
//! choice beyond a Galois permutation of the multiplicity vector.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ppd::factor::is_prime_u64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    r: u32,
    coeffs: Vec<i64>,
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt(r={}, {})", self.r, self)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_rational() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (i, &b) in self.coeffs.iter().enumerate().skip(1) {
            if b == 0 {
                continue;
            }
            let sign = if b < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = b.unsigned_abs();
            let coef = if mag == 1 {
                String::new()
            } else {
                mag.to_string()
            };
            write!(f, "{sign}{coef}z^{i}")?;
            first = false;
        }
        Ok(())
    }
}

fn check_r(r: u32) -> Result<()> {
    if r < 3 || !is_prime_u64(r as u64) {
        return Err(Error::NotPrime(r as u64));
    }
    Ok(())
}

impl CyclotomicInt {
    /// `Σ b_i ζ^i`; indices beyond `r` wrap around.
    pub fn new(r: u32, b: &[i64]) -> Result<Self> {
        check_r(r)?;
        let mut coeffs = vec![0i64; r as usize];
        for (i, &x) in b.iter().enumerate() {
            coeffs[i % r as usize] += x;
        }
        Ok(Self::normalized(r, coeffs))
    }

    fn normalized(r: u32, mut coeffs: Vec<i64>) -> Self {
        let b0 = coeffs[0];
        if b0 != 0 {
            coeffs.iter_mut().for_each(|x| *x -= b0);
        }
        CyclotomicInt { r, coeffs }
    }

    pub fn zero(r: u32) -> Result<Self> {
        Self::new(r, &[])
    }

    pub fn rational(r: u32, c: i64) -> Result<Self> {
        Self::new(r, &[c])
    }

    /// `ζ^k`.
    pub fn zeta_pow(r: u32, k: i64) -> Result<Self> {
        check_r(r)?;
        let mut coeffs = vec![0i64; r as usize];
        coeffs[k.rem_euclid(r as i64) as usize] = 1;
        Ok(Self::normalized(r, coeffs))
    }

    /// Atlas `b5 = ζ + ζ^4` in `Z[ζ_5]`.
    pub fn b5() -> Self {
        Self::new(5, &[0, 1, 0, 0, 1]).unwrap()
    }

    /// Atlas `c13 = ζ + ζ^{-1} + ζ^5 + ζ^{-5}` in `Z[ζ_13]`.
    pub fn c13() -> Self {
        let mut b = [0i64; 13];
        for k in [1, 12, 5, 8] {
            b[k] = 1;
        }
        Self::new(13, &b).unwrap()
    }

    /// Parse `"b0,b1,…"`.
    pub fn parse(r: u32, text: &str) -> Result<Self> {
        let b = text
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        if b.len() > r as usize {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients given for r = {r}",
                b.len()
            )));
        }
        Self::new(r, &b)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Normalized coefficients `(0, b_1, …, b_{r-1})`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    /// The integer value, if this element is rational.
    pub fn as_rational(&self) -> Option<i64> {
        let v = self.coeffs[1];
        self.coeffs[1..].iter().all(|&x| x == v).then_some(-v)
    }

    fn same_r(&self, other: &Self) -> Result<()> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(Error::MismatchedR(self.r, other.r))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_r(other)?;
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self::normalized(self.r, c))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_r(other)?;
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self::normalized(self.r, c))
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(-1)
    }

    pub fn scalar_mul(&self, k: i64) -> Self {
        Self::normalized(self.r, self.coeffs.iter().map(|&x| x * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_r(other)?;
        let r = self.r as usize;
        let mut c = vec![0i64; r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[(i + j) % r] += a * b;
            }
        }
        Ok(Self::normalized(self.r, c))
    }

    /// The automorphism `ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let r = self.r as i64;
        let k = k.rem_euclid(r);
        if k == 0 {
            return Err(Error::NonUnit { k, r: self.r });
        }
        let mut c = vec![0i64; self.r as usize];
        for (i, &b) in self.coeffs.iter().enumerate() {
            c[(i as i64 * k % r) as usize] += b;
        }
        Ok(Self::normalized(self.r, c))
    }

    /// `χ(g^j)` for `j = 1..r-1` given `χ(g)`, grouped into runs of equal
    /// values with their sizes, in order of first appearance.
    pub fn power_orbits(&self) -> Vec<(CyclotomicInt, usize)> {
        let mut out: Vec<(CyclotomicInt, usize)> = Vec::new();
        for j in 1..self.r as i64 {
            let v = self.galois(j).unwrap();
            match out.iter_mut().find(|(x, _)| *x == v) {
                Some((_, n)) => *n += 1,
                None => out.push((v, 1)),
            }
        }
        out
    }
}

/// Eigenvalue multiplicities of an order-`r` element: `mults[i]` counts
/// `ζ^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySolution {
    pub r: u32,
    pub d: usize,
    pub mults: Vec<u64>,
}

impl MultiplicitySolution {
    /// `Σ c_i ζ^i`.
    pub fn brauer_value(&self) -> CyclotomicInt {
        let b: Vec<i64> = self.mults.iter().map(|&c| c as i64).collect();
        CyclotomicInt::new(self.r, &b).unwrap()
    }

    /// The vector after relabelling `ζ ↦ ζ^k`.
    pub fn permuted(&self, k: i64) -> Self {
        let r = self.r as i64;
        let mut mults = vec![0u64; self.r as usize];
        for (i, &c) in self.mults.iter().enumerate() {
            mults[(i as i64 * k).rem_euclid(r) as usize] = c;
        }
        MultiplicitySolution {
            r: self.r,
            d: self.d,
            mults,
        }
    }
}

impl fmt::Display for MultiplicitySolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.mults.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The unique nonnegative `(c_0, …, c_{r-1})` with `Σ c_i = d` and
/// `Σ c_i ζ^i = chi`.
pub fn solve_multiplicities(chi: &CyclotomicInt, d: usize, r: u32) -> Result<MultiplicitySolution> {
    check_r(r)?;
    if chi.r != r {
        return Err(Error::MismatchedR(chi.r, r));
    }
    // c_i - c_0 = b_i for i >= 1, and r c_0 + Σ b_i = d
    let s: i64 = chi.coeffs.iter().sum();
    let num = d as i64 - s;
    if num < 0 || num % r as i64 != 0 {
        return Err(Error::NoSolution);
    }
    let c0 = num / r as i64;
    let mut mults = Vec::with_capacity(r as usize);
    mults.push(c0 as u64);
    for &b in &chi.coeffs[1..] {
        let c = b + c0;
        if c < 0 {
            return Err(Error::NoSolution);
        }
        mults.push(c as u64);
    }
    Ok(MultiplicitySolution { r, d, mults })
}

/// Outcome of the Brauer-character stingray test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionTag {
    Stingray,
    Type2I,
    Type2II,
    /// The value cannot come from an order-`r` element of this dimension.
    Inconsistent,
    Other,
}

impl fmt::Display for CriterionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CriterionTag::Stingray => "STINGRAY",
            CriterionTag::Type2I => "TYPE_2I",
            CriterionTag::Type2II => "TYPE_2II",
            CriterionTag::Inconsistent => "INCONSISTENT",
            CriterionTag::Other => "OTHER",
        };
        f.write_str(s)
    }
}

/// Decide the shape of an element of prime order `r` from its Brauer
/// character value, for `r = d/2 + 1` or `r = d + 1`.
pub fn stingray_criterion(r: u32, d: usize, chi: &CyclotomicInt) -> Result<CriterionTag> {
    if d % 2 != 0 || (r as usize != d / 2 + 1 && r as usize != d + 1) {
        return Err(Error::UnsupportedR { r, d });
    }
    if chi.r != r {
        return Err(Error::MismatchedR(chi.r, r));
    }
    let half = (d / 2) as i64;
    if r as usize == d / 2 + 1 {
        return Ok(match chi.as_rational() {
            Some(v) if v == half - 1 => CriterionTag::Stingray,
            Some(-2) => CriterionTag::Type2II,
            _ => CriterionTag::Inconsistent,
        });
    }
    if chi.as_rational() == Some(-1) {
        return Ok(CriterionTag::Type2I);
    }
    let sol = match solve_multiplicities(chi, d, r) {
        Ok(s) => s,
        Err(Error::NoSolution) => return Ok(CriterionTag::Inconsistent),
        Err(e) => return Err(e),
    };
    let rest = &sol.mults[1..];
    if sol.mults[0] == d as u64 / 2 && rest.iter().all(|&c| c <= 1) {
        Ok(CriterionTag::Stingray)
    } else if sol.mults[0] == 0 && rest.iter().all(|&c| c == 0 || c == 2) {
        Ok(CriterionTag::Type2II)
    } else {
        Ok(CriterionTag::Other)
    }
}

/// Multiplicity of the trivial character: `(1/r) Σ_j χ(g^j)`.
///
/// `chi_powers` lists `(χ(g^j), number of j)` over the nonzero residues;
/// `χ(1) = d` is added here.
pub fn trivial_multiplicity(
    chi_powers: &[(CyclotomicInt, usize)],
    d: usize,
    r: u32,
) -> Result<Ratio<i64>> {
    check_r(r)?;
    let total: usize = chi_powers.iter().map(|(_, n)| n).sum();
    if total != r as usize - 1 {
        return Err(Error::InvalidArgument(format!(
            "orbit sizes sum to {total}, expected {}",
            r - 1
        )));
    }
    let mut sum = CyclotomicInt::rational(r, d as i64)?;
    for (chi, n) in chi_powers {
        sum = sum.add(&chi.scalar_mul(*n as i64))?;
    }
    let v = sum.as_rational().ok_or(Error::NotRational)?;
    Ok(Ratio::new(v, r as i64))
}
