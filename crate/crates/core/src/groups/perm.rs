//! Permutations of `{1..n}`, composed left to right.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};

/// Images of `0..n`, so `i` maps to `self.0[i]`. Products apply the left
/// factor first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on `1..n`, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.iter().all(|c| c.len() == 1) {
            return f.write_str("()");
        }
        for c in cycles.iter().filter(|c| c.len() > 1) {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Build from 1-based cycles, e.g. `[[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for &x in c {
                if x == 0 || x > n || used[x - 1] {
                    return Err(Error::InvalidArgument(format!("bad cycle entry {x}")));
                }
                used[x - 1] = true;
            }
            for (k, &x) in c.iter().enumerate() {
                img[x - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Ok(Perm(img))
    }

    /// `(1 2 … k)` on `n` points.
    pub fn cycle(n: usize, k: usize) -> Self {
        Self::from_cycles(n, &[(1..=k).collect()]).expect("valid cycle")
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    /// Cycles as 0-based lists, including fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(
            self.degree(),
            self.cycles().iter().map(|c| c.len()).collect(),
        )
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 0
    }

    pub fn order(&self) -> BigUint {
        self.cycles().iter().fold(BigUint::from(1u32), |acc, c| {
            acc.lcm(&BigUint::from(c.len()))
        })
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            v.swap(i, j);
        }
        Perm(v)
    }
}

/// Multiset of cycle lengths, stored in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub n: usize,
    pub cycles: Vec<usize>,
}

impl CycleType {
    pub fn new(n: usize, mut cycles: Vec<usize>) -> Self {
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert_eq!(cycles.iter().sum::<usize>(), n);
        CycleType { n, cycles }
    }

    /// A representative permutation with the cycles laid out consecutively.
    pub fn representative(&self) -> Perm {
        let mut start = 1;
        let mut cycles = Vec::new();
        for &len in &self.cycles {
            cycles.push((start..start + len).collect());
            start += len;
        }
        Perm::from_cycles(self.n, &cycles).expect("lengths sum to n")
    }
}

impl fmt::Display for CycleType {
    /// Exponential notation, e.g. `9^1 3^1 1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.cycles.len() {
            let len = self.cycles[i];
            let k = self.cycles[i..].iter().take_while(|&&c| c == len).count();
            parts.push(format!("{len}^{k}"));
            i += k;
        }
        f.write_str(&parts.join(" "))
    }
}
