//! Primitive prime divisors and multiplicative orders.
//!
//! A prime `r` is an *e-ppd prime* for `q` when `r | q^e - 1` but
//! `r ∤ q^i - 1` for `i < e`, i.e. the multiplicative order of `q` modulo
//! `r` is exactly `e`. Every such prime satisfies `r ≡ 1 (mod e)`.

pub mod factor;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use factor::{cyclotomic_value, factor_big, factor_u64, is_prime_u64, pow_mod};

/// Bit cap on `q^e` for ppd enumeration.
pub const PPD_BIT_CAP: u64 = 512;

/// Primes `r` with `o_r(q) = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpdResult {
    pub q: u64,
    pub e: u32,
    pub primes: Vec<BigUint>,
    pub exists: bool,
    /// False when a listed prime was only certified probabilistically.
    pub proven: bool,
}

/// Split a prime power `q = p^a` into `(p, a)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::CompositeQ(q));
    }
    let f = factor_u64(q);
    match f.as_slice() {
        [(p, a)] => Ok((*p, *a)),
        _ => Err(Error::CompositeQ(q)),
    }
}

/// Least `e >= 1` with `q^e ≡ 1 (mod r)`, for a prime `r`.
pub fn multiplicative_order(r: u64, q: u64) -> Result<u64> {
    if !is_prime_u64(r) {
        return Err(Error::NotPrime(r));
    }
    let qm = q % r;
    if qm.gcd(&r) != 1 {
        return Err(Error::NotCoprime { r, q });
    }
    let mut order = r - 1;
    for (l, _) in factor_u64(r - 1) {
        while order % l == 0 && pow_mod(qm, order / l, r) == 1 {
            order /= l;
        }
    }
    Ok(order)
}

/// Order of `q` modulo a big prime `r` that is known to divide `q^e - 1`.
fn order_divides_e_is_exact(q: u64, e: u32, r: &BigUint) -> bool {
    let qb = BigUint::from(q);
    factor_u64(e as u64)
        .into_iter()
        .all(|(l, _)| !qb.modpow(&BigUint::from(e as u64 / l), r).is_one())
}

/// All e-ppd primes of `q^e - 1`, sorted.
///
/// Only the cyclotomic factor `Φ_e(q)` is factored: every e-ppd prime
/// divides it, and the remaining factors of `q^e - 1` cannot contain one.
pub fn primitive_prime_divisors(q: u64, e: u32) -> Result<PpdResult> {
    prime_power(q)?;
    if e < 2 {
        return Err(Error::InvalidArgument(format!(
            "exponent must be >= 2, got {e}"
        )));
    }
    let bits = BigUint::from(q).pow(e).bits();
    if bits > PPD_BIT_CAP {
        return Err(Error::TooLarge);
    }
    let phi = cyclotomic_value(e, q);
    let fac = factor_big(&phi);
    let primes: Vec<BigUint> = fac
        .factors
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| order_divides_e_is_exact(q, e, r))
        .collect();
    Ok(PpdResult {
        q,
        e,
        exists: !primes.is_empty(),
        primes,
        proven: fac.proven,
    })
}

/// True iff `r` is prime and `o_r(q) = e`.
pub fn is_eppd_prime(r: u64, q: u64, e: u32) -> Result<bool> {
    prime_power(q)?;
    if !is_prime_u64(r) {
        return Err(Error::NotPrime(r));
    }
    if q % r == 0 {
        return Ok(false);
    }
    Ok(multiplicative_order(r, q)? == e as u64)
}

/// Smallest e-ppd prime that fits in a machine word, if any.
pub fn smallest_ppd_prime(q: u64, e: u32) -> Result<Option<u64>> {
    let res = primitive_prime_divisors(q, e)?;
    Ok(res.primes.iter().find_map(|p| p.to_u64()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_u64(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|p| p.to_u64().unwrap()).collect()
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(5, 2).unwrap(), 4);
        assert_eq!(multiplicative_order(3, 8).unwrap(), 2);
        assert_eq!(multiplicative_order(7, 1).unwrap(), 1);
        assert_eq!(multiplicative_order(11, 3).unwrap(), 5);
        assert_eq!(multiplicative_order(17, 2).unwrap(), 8);
        assert!(matches!(
            multiplicative_order(3, 9),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            multiplicative_order(9, 2),
            Err(Error::NotPrime(9))
        ));
    }

    #[test]
    fn ppd_examples() {
        let r = primitive_prime_divisors(2, 6).unwrap();
        assert!(!r.exists);
        assert!(r.primes.is_empty());
        assert_eq!(
            as_u64(&primitive_prime_divisors(2, 4).unwrap().primes),
            vec![5]
        );
        assert_eq!(
            as_u64(&primitive_prime_divisors(3, 5).unwrap().primes),
            vec![11]
        );
        assert_eq!(
            as_u64(&primitive_prime_divisors(2, 3).unwrap().primes),
            vec![7]
        );
        // 7 + 1 = 8 is a power of two.
        assert!(!primitive_prime_divisors(7, 2).unwrap().exists);
    }

    #[test]
    fn ppd_errors() {
        assert_eq!(primitive_prime_divisors(6, 3), Err(Error::CompositeQ(6)));
        assert_eq!(primitive_prime_divisors(2, 600), Err(Error::TooLarge));
        assert_eq!(primitive_prime_divisors(2, 513), Err(Error::TooLarge));
        let fermat = primitive_prime_divisors(2, 64).unwrap();
        assert_eq!(as_u64(&fermat.primes), vec![641, 6_700_417]);
    }

    #[test]
    fn eppd_membership() {
        assert!(is_eppd_prime(5, 2, 4).unwrap());
        assert!(is_eppd_prime(3, 2, 2).unwrap());
        assert!(is_eppd_prime(7, 2, 3).unwrap());
        assert!(!is_eppd_prime(3, 4, 2).unwrap());
        assert!(!is_eppd_prime(2, 4, 1).unwrap());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(64).unwrap(), (2, 6));
        assert_eq!(prime_power(121).unwrap(), (11, 2));
        assert_eq!(prime_power(1), Err(Error::CompositeQ(1)));
        assert_eq!(prime_power(12), Err(Error::CompositeQ(12)));
    }
}
