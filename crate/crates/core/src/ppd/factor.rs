//! Integer primality and factorisation.
//!
//! Machine-word inputs go through a deterministic Miller–Rabin test and
//! Pollard–Brent rho in `u128` arithmetic. Larger inputs use trial division
//! by the primes below 10^6, then rho over [`BigUint`], with Miller–Rabin on
//! the cofactors. The first thirteen prime bases make Miller–Rabin a proof
//! below 3.3·10^24; beyond that 64 seeded random rounds are used and the
//! result is flagged as unproven.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_RANDOM_ROUNDS: usize = 64;

/// 3317044064679887385961981: Miller–Rabin with [`MR_BASES`] is exact below this.
fn deterministic_bound() -> &'static BigUint {
    static B: OnceLock<BigUint> = OnceLock::new();
    B.get_or_init(|| "3317044064679887385961981".parse().unwrap())
}

/// Primes below 10^6, sieved once.
pub fn small_primes() -> &'static [u32] {
    static P: OnceLock<Vec<u32>> = OnceLock::new();
    P.get_or_init(|| sieve(TRIAL_LIMIT))
}

pub fn sieve(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn mr_witness_u64(n: u64, a: u64, d: u64, s: u32) -> bool {
    let a = a % n;
    if a == 0 {
        return false;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return false;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return false;
        }
    }
    true
}

/// Deterministic primality for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    !MR_BASES.iter().any(|&a| mr_witness_u64(n, a, d, s))
}

fn mr_witness_big(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let n1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n1 {
        return false;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return false;
        }
    }
    true
}

/// Primality of an arbitrary integer. Returns `(is_prime, proven)`.
pub fn is_prime_big(n: &BigUint) -> (bool, bool) {
    if let Some(v) = n.to_u64() {
        return (is_prime_u64(v), true);
    }
    for &p in &MR_BASES {
        if (n % p).is_zero() {
            return (false, true);
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    if n < deterministic_bound() {
        let composite = MR_BASES
            .iter()
            .any(|&a| mr_witness_big(n, &BigUint::from(a), &d, s));
        return (!composite, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_b16);
    let span = n - 3u32;
    let mut bytes = vec![0u8; (n.bits() as usize).div_ceil(8) + 8];
    for _ in 0..MR_RANDOM_ROUNDS {
        rng.fill_bytes(&mut bytes);
        let a = BigUint::from_bytes_le(&bytes) % &span + 2u32;
        if mr_witness_big(n, &a, &d, s) {
            return (false, true);
        }
    }
    (true, false)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let m = 128u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = rho_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

fn collect<T: Ord + Clone>(mut v: Vec<T>) -> Vec<(T, u32)> {
    v.sort();
    let mut out: Vec<(T, u32)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Prime factorisation of a 64-bit integer, sorted by prime.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor zero");
    let mut primes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
    }
    factor_u64_into(n, &mut primes);
    collect(primes)
}

/// Distinct prime divisors of a 64-bit integer.
pub fn prime_divisors_u64(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

fn rho_big(n: &BigUint, seed: u64) -> BigUint {
    let mut c = BigUint::from(seed);
    let one = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 128u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// Complete factorisation of a big integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFactorization {
    pub factors: Vec<(BigUint, u32)>,
    /// False when some cofactor was only declared prime probabilistically.
    pub proven: bool,
}

fn factor_big_into(n: BigUint, out: &mut Vec<BigUint>, proven: &mut bool) {
    if n.is_one() {
        return;
    }
    if let Some(v) = n.to_u64() {
        let mut tmp = Vec::new();
        factor_u64_into(v, &mut tmp);
        out.extend(tmp.into_iter().map(BigUint::from));
        return;
    }
    let (prime, sure) = is_prime_big(&n);
    if prime {
        *proven &= sure;
        out.push(n);
        return;
    }
    let d = rho_big(&n, 1);
    let rest = &n / &d;
    factor_big_into(d, out, proven);
    factor_big_into(rest, out, proven);
}

/// Factor `n > 0`: trial division below 10^6, then Pollard–Brent rho.
pub fn factor_big(n: &BigUint) -> BigFactorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut n = n.clone();
    let mut primes: Vec<BigUint> = Vec::new();
    for &p in small_primes() {
        if n.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > n {
            break;
        }
        while (&n % p).is_zero() {
            n /= p;
            primes.push(pb.clone());
        }
    }
    let mut proven = true;
    factor_big_into(n, &mut primes, &mut proven);
    BigFactorization {
        factors: collect(primes),
        proven,
    }
}

fn mobius(n: u64) -> i32 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Value of the e-th cyclotomic polynomial at q.
pub fn cyclotomic_value(e: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for k in 1..=e {
        if e % k != 0 {
            continue;
        }
        let term = qb.pow(k) - 1u32;
        match mobius((e / k) as u64) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// Prime factorisation of q^n - 1, assembled from its cyclotomic pieces.
pub fn factor_q_power_minus_one(q: u64, n: u32) -> BigFactorization {
    let mut all = Vec::new();
    let mut proven = true;
    for k in 1..=n {
        if n % k == 0 {
            let f = factor_big(&cyclotomic_value(k, q));
            proven &= f.proven;
            for (p, e) in f.factors {
                for _ in 0..e {
                    all.push(p.clone());
                }
            }
        }
    }
    BigFactorization {
        factors: collect(all),
        proven,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primality() {
        let primes: Vec<u64> = (0..200).filter(|&n| is_prime_u64(n)).collect();
        let sieved: Vec<u64> = sieve(199).into_iter().map(u64::from).collect();
        assert_eq!(primes, sieved);
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn factor_words() {
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(242), vec![(2, 1), (11, 2)]);
        assert_eq!(
            factor_u64(600_851_475_143),
            vec![(71, 1), (839, 1), (1471, 1), (6857, 1)]
        );
        let n = 4_294_967_291u64 * 4_294_967_279u64;
        assert_eq!(factor_u64(n), vec![(4_294_967_279, 1), (4_294_967_291, 1)]);
    }

    #[test]
    fn factor_mersenne_95() {
        let n = (BigUint::one() << 95u32) - 1u32;
        let f = factor_big(&n);
        assert!(f.proven);
        let got: Vec<String> = f.factors.iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(got, ["31", "191", "524287", "420778751", "30327152671"]);
        let back = f
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, k)| acc * p.pow(*k));
        assert_eq!(back, n);
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic_value(1, 2), BigUint::from(1u32));
        assert_eq!(cyclotomic_value(4, 2), BigUint::from(5u32));
        assert_eq!(cyclotomic_value(6, 2), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(5, 3), BigUint::from(121u32));
        let f = factor_q_power_minus_one(2, 12);
        let back = f
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, k)| acc * p.pow(*k));
        assert_eq!(back, BigUint::from(4095u32));
    }

    #[test]
    fn big_primality_flags() {
        let m127 = (BigUint::one() << 127u32) - 1u32;
        let (p, proven) = is_prime_big(&m127);
        assert!(p);
        assert!(!proven);
        let m61 = (BigUint::one() << 61u32) - 1u32;
        assert_eq!(is_prime_big(&m61), (true, true));
        let comp = BigUint::from(4_294_967_291u64) * BigUint::from(18_446_744_073_709_551_557u64);
        assert_eq!(is_prime_big(&comp), (false, true));
    }
}
