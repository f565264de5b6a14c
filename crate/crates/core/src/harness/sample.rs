//! Random search for stingray elements of a prescribed prime order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::classify::classify_element;
use crate::error::{Error, Result};
use crate::fmatrix::DenseMatrix;
use crate::groups::{MatrixGroup, RandomWalkState};
use crate::ppd::factor::is_prime_u64;

#[derive(Debug, Clone)]
pub struct SampleReport {
    pub r: u64,
    pub e: usize,
    pub trials: usize,
    /// Draws whose order was prime to `r`.
    pub skipped: usize,
    /// Tag counts over the order-`r` powers.
    pub counts: BTreeMap<String, usize>,
    /// First ppd stingray found.
    pub witness: Option<DenseMatrix>,
}

impl SampleReport {
    pub fn count(&self, tag: &str) -> usize {
        self.counts.get(tag).copied().unwrap_or(0)
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials {} r {} e {}", self.trials, self.r, self.e)?;
        writeln!(f, "skipped {}", self.skipped)?;
        for (tag, n) in &self.counts {
            writeln!(f, "{tag} {n}")?;
        }
        match &self.witness {
            Some(w) => write!(f, "witness\n{w}"),
            None => write!(f, "witness none"),
        }
    }
}

pub fn sample_stingray(
    grp: &MatrixGroup,
    r: u64,
    e: usize,
    trials: usize,
    seed: u64,
) -> Result<SampleReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if !is_prime_u64(r) {
        return Err(Error::NotPrime(r));
    }
    let rb = BigUint::from(r);
    let mut walk = RandomWalkState::new(grp, seed);
    let mut report = SampleReport {
        r,
        e,
        trials,
        skipped: 0,
        counts: BTreeMap::new(),
        witness: None,
    };
    for _ in 0..trials {
        let x = walk.next_element();
        let o = x.order(None)?;
        if !(&o % &rb).is_zero() {
            report.skipped += 1;
            continue;
        }
        let h = x.pow_big(&(&o / &rb))?;
        let cls = classify_element(&h, e)?;
        *report.counts.entry(cls.tag.to_string()).or_default() += 1;
        if cls.is_ppd_stingray() && report.witness.is_none() {
            report.witness = Some(h);
        }
    }
    Ok(report)
}
