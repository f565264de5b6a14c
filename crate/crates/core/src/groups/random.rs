//! Product replacement with an accumulator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fmatrix::DenseMatrix;
use crate::groups::MatrixGroup;

pub const SLOTS: usize = 12;
pub const BURN_IN: usize = 50;

#[derive(Debug, Clone)]
pub struct RandomWalkState {
    slots: Vec<DenseMatrix>,
    acc: DenseMatrix,
    rng: ChaCha8Rng,
    burn_in_done: bool,
}

impl RandomWalkState {
    pub fn new(grp: &MatrixGroup, seed: u64) -> Self {
        let gens = grp.generators();
        let n = SLOTS.max(gens.len());
        let slots = (0..n).map(|i| gens[i % gens.len()].clone()).collect();
        RandomWalkState {
            slots,
            acc: DenseMatrix::identity(grp.field(), grp.dim()),
            rng: ChaCha8Rng::seed_from_u64(seed),
            burn_in_done: false,
        }
    }

    pub fn burn_in_done(&self) -> bool {
        self.burn_in_done
    }

    fn step(&mut self) {
        let n = self.slots.len();
        let i = self.rng.random_range(0..n);
        let mut j = self.rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let prod = if self.rng.random_bool(0.5) {
            self.slots[i].mul_unchecked(&self.slots[j])
        } else {
            self.slots[j].mul_unchecked(&self.slots[i])
        };
        self.slots[i] = prod;
        self.acc = self.acc.mul_unchecked(&self.slots[i]);
    }

    /// Advance the walk and return the accumulator.
    pub fn next_element(&mut self) -> DenseMatrix {
        if !self.burn_in_done {
            for _ in 0..BURN_IN {
                self.step();
            }
            self.burn_in_done = true;
        }
        self.step();
        self.acc.clone()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

pub fn random_element(_grp: &MatrixGroup, state: &mut RandomWalkState) -> DenseMatrix {
    state.next_element()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::classical::{classical_generators, ClassicalFamily};

    #[test]
    fn deterministic_and_invertible() {
        let g = classical_generators(ClassicalFamily::Gl, 4, 2).unwrap();
        let mut a = RandomWalkState::new(&g, 7);
        let mut b = RandomWalkState::new(&g, 7);
        for _ in 0..50 {
            let x = random_element(&g, &mut a);
            assert!(x.is_invertible());
            assert_eq!(x, random_element(&g, &mut b));
        }
        assert!(a.burn_in_done());
        let mut c = RandomWalkState::new(&g, 8);
        let first: Vec<_> = (0..5).map(|_| c.next_element()).collect();
        let mut d = RandomWalkState::new(&g, 7);
        let other: Vec<_> = (0..5).map(|_| d.next_element()).collect();
        assert_ne!(first, other);
    }
}
