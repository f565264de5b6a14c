//! Group order by Schreier–Sims on a faithful permutation action.
//!
//! The action is restricted to the union of the orbits of the base points,
//! which is enough for faithfulness: a matrix fixing `e_1, …, e_d` is the
//! identity, and one fixing `<e_1>, …, <e_d>, <e_1 + … + e_d>` is scalar.

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::groups::MatrixGroup;

/// Largest number of points allowed in the underlying action.
pub const ACTION_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Vectors,
    Projective,
}

type PermVec = Vec<u32>;

fn encode(v: &[u64], q: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * q + x)
}

fn normalize(field: &FieldSpec, v: &mut [u64]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = field.inv(lead).unwrap();
        v.iter_mut().for_each(|x| *x = field.mul(*x, inv));
    }
}

/// Orbit closure of the base points and the generator permutations on it.
fn permutation_action(grp: &MatrixGroup, action: Action) -> (Vec<u32>, Vec<PermVec>) {
    let field = grp.field();
    let q = field.order();
    let d = grp.dim();
    let mut base_vecs: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
        .collect();
    if action == Action::Projective {
        base_vecs.push(vec![1; d]);
    }
    let mut index: HashMap<u64, u32> = HashMap::new();
    let mut points: Vec<Vec<u64>> = Vec::new();
    let mut base = Vec::new();
    for v in base_vecs {
        let key = encode(&v, q);
        let id = *index.entry(key).or_insert_with(|| {
            points.push(v.clone());
            (points.len() - 1) as u32
        });
        base.push(id);
    }
    let gens = grp.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut next = 0usize;
    while next < points.len() {
        let v = points[next].clone();
        for (k, g) in gens.iter().enumerate() {
            let mut w = g.apply(&v);
            if action == Action::Projective {
                normalize(field, &mut w);
            }
            let key = encode(&w, q);
            let id = match index.get(&key) {
                Some(&id) => id,
                None => {
                    points.push(w);
                    let id = (points.len() - 1) as u32;
                    index.insert(key, id);
                    id
                }
            };
            images[k].push(id);
        }
        next += 1;
    }
    (base, images)
}

fn compose(a: &[u32], b: &[u32]) -> PermVec {
    a.iter().map(|&i| b[i as usize]).collect()
}

fn invert(a: &[u32]) -> PermVec {
    let mut inv = vec![0u32; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j as usize] = i as u32;
    }
    inv
}

fn is_identity(a: &[u32]) -> bool {
    a.iter().enumerate().all(|(i, &j)| i as u32 == j)
}

/// Stabilizer chain with Schreier vectors.
struct Chain {
    base: Vec<u32>,
    n: usize,
    gens: Vec<PermVec>,
    inv: Vec<PermVec>,
    /// First base index each generator moves.
    level: Vec<usize>,
    /// Per level: point -> (generator, predecessor) for orbit points.
    trees: Vec<Vec<Option<(u32, u32)>>>,
    orbits: Vec<Vec<u32>>,
}

impl Chain {
    fn new(base: Vec<u32>, n: usize) -> Self {
        let k = base.len();
        let mut c = Chain {
            base,
            n,
            gens: Vec::new(),
            inv: Vec::new(),
            level: Vec::new(),
            trees: vec![Vec::new(); k],
            orbits: vec![Vec::new(); k],
        };
        for i in 0..k {
            c.rebuild(i);
        }
        c
    }

    fn first_moved(&self, p: &[u32]) -> Option<usize> {
        self.base.iter().position(|&b| p[b as usize] != b)
    }

    fn add_gen(&mut self, p: PermVec) -> usize {
        let lvl = self.first_moved(&p).expect("nontrivial on the base");
        self.inv.push(invert(&p));
        self.gens.push(p);
        self.level.push(lvl);
        lvl
    }

    fn rebuild(&mut self, i: usize) {
        let b = self.base[i];
        let mut tree = vec![None; self.n];
        tree[b as usize] = Some((u32::MAX, b));
        let mut orbit = vec![b];
        let mut next = 0;
        let active: Vec<usize> = (0..self.gens.len())
            .filter(|&g| self.level[g] >= i)
            .collect();
        while next < orbit.len() {
            let x = orbit[next];
            for &g in &active {
                let y = self.gens[g][x as usize];
                if tree[y as usize].is_none() {
                    tree[y as usize] = Some((g as u32, x));
                    orbit.push(y);
                }
            }
            next += 1;
        }
        self.trees[i] = tree;
        self.orbits[i] = orbit;
    }

    /// Divide `h` by transversal elements from level `from` down; returns
    /// the residue and the level where sifting stopped.
    fn sift(&self, mut h: PermVec, from: usize) -> (PermVec, usize) {
        for i in from..self.base.len() {
            let mut beta = h[self.base[i] as usize];
            if self.trees[i][beta as usize].is_none() {
                return (h, i);
            }
            while beta != self.base[i] {
                let (g, prev) = self.trees[i][beta as usize].unwrap();
                h = compose(&h, &self.inv[g as usize]);
                beta = prev;
            }
        }
        (h, self.base.len())
    }

    /// Transversal element taking `base[i]` to `beta`.
    fn transversal(&self, i: usize, mut beta: u32) -> PermVec {
        let mut word = Vec::new();
        while beta != self.base[i] {
            let (g, prev) = self.trees[i][beta as usize].unwrap();
            word.push(g);
            beta = prev;
        }
        let mut u: PermVec = (0..self.n as u32).collect();
        for &g in word.iter().rev() {
            u = compose(&u, &self.gens[g as usize]);
        }
        u
    }

    fn order(&self) -> BigUint {
        self.orbits
            .iter()
            .fold(BigUint::from(1u32), |acc, o| acc * BigUint::from(o.len()))
    }

    /// Add the residue of `h` if it is nontrivial; returns its level.
    fn absorb(&mut self, h: PermVec) -> Option<usize> {
        let (res, _) = self.sift(h, 0);
        if is_identity(&res) {
            return None;
        }
        let lvl = self.add_gen(res);
        for i in 0..=lvl {
            self.rebuild(i);
        }
        Some(lvl)
    }

    /// Deterministic completion: every Schreier generator sifts to the
    /// identity at every level.
    fn verify(&mut self) {
        let k = self.base.len();
        let mut i = k;
        'levels: while i > 0 {
            i -= 1;
            self.rebuild(i);
            let orbit = self.orbits[i].clone();
            let active: Vec<usize> = (0..self.gens.len())
                .filter(|&g| self.level[g] >= i)
                .collect();
            for &beta in &orbit {
                let u = self.transversal(i, beta);
                for &g in &active {
                    let gamma = self.gens[g][beta as usize];
                    let ug = compose(&u, &self.gens[g]);
                    let schreier = compose(&ug, &invert(&self.transversal(i, gamma)));
                    let (res, _) = self.sift(schreier, i + 1);
                    if !is_identity(&res) {
                        let lvl = self.add_gen(res);
                        for l in i + 1..=lvl {
                            self.rebuild(l);
                        }
                        i = lvl + 1;
                        continue 'levels;
                    }
                }
            }
        }
    }
}

/// Exact order of the group (or of its image in `PGL` for the projective
/// action).
pub fn group_order(grp: &MatrixGroup, action: Action, seed: u64) -> Result<BigUint> {
    let q = grp.field().order();
    let points = (q as u128).checked_pow(grp.dim() as u32);
    if points.is_none_or(|p| p > ACTION_CAP as u128) {
        return Err(Error::ActionTooLarge(
            points.map_or(u64::MAX, |p| p.min(u64::MAX as u128) as u64),
        ));
    }
    let (base, gens) = permutation_action(grp, action);
    let n = gens[0].len();
    let mut chain = Chain::new(base, n);
    for g in &gens {
        chain.absorb(g.clone());
    }
    // randomized phase: sift random products until a run of successes
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slots: Vec<PermVec> = (0..10).map(|i| gens[i % gens.len()].clone()).collect();
    let mut acc: PermVec = (0..n as u32).collect();
    let mut quiet = 0;
    while quiet < 30 {
        let i = rng.random_range(0..slots.len());
        let mut j = rng.random_range(0..slots.len() - 1);
        if j >= i {
            j += 1;
        }
        slots[i] = compose(&slots[i], &slots[j]);
        acc = compose(&acc, &slots[i]);
        if chain.absorb(acc.clone()).is_some() {
            quiet = 0;
        } else {
            quiet += 1;
        }
    }
    chain.verify();
    Ok(chain.order())
}
