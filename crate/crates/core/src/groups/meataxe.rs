//! Randomized Norton irreducibility test.
//!
//! A random algebra element `θ` with an irreducible characteristic factor
//! `f` satisfying `nullity f(θ) = deg f` settles the question: either a
//! kernel vector of `f(θ)` spins to a proper submodule, or a kernel vector
//! of `f(θ)^T` spins to a proper submodule of the dual, or the module is
//! irreducible.

use rand::Rng;

use crate::fmatrix::{DenseMatrix, Subspace};
use crate::fpoly::DensePoly;
use crate::groups::random::RandomWalkState;
use crate::groups::{spin_with, MatrixGroup};

pub const DEFAULT_MEATAXE_ROUNDS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Yes,
    /// A proper nonzero invariant subspace.
    No(Subspace),
    Inconclusive,
}

pub fn is_irreducible(grp: &MatrixGroup, seed: u64, max_rounds: usize) -> Irreducibility {
    let d = grp.dim();
    let field = grp.field();
    if d == 1 {
        return Irreducibility::Yes;
    }
    let gens = grp.generators();
    let tgens: Vec<DenseMatrix> = gens.iter().map(|g| g.transpose()).collect();
    let mut walk = RandomWalkState::new(grp, seed);
    for _ in 0..max_rounds {
        let theta = random_algebra_element(grp, &mut walk);
        let Ok(cp) = theta.char_poly() else { continue };
        let Ok(fac) = cp.factor(seed) else { continue };
        let mut candidates: Vec<&DensePoly> = fac.factors.iter().map(|(f, _)| f).collect();
        candidates.sort_by_key(|f| f.degree());
        for f in candidates {
            let deg = f.degree().unwrap();
            let n = theta.eval_poly(f).expect("square");
            let ker = n.kernel();
            if ker.dim() != deg {
                continue;
            }
            let v = ker.basis()[0].clone();
            let u = spin_with(&[v], field, d, gens).expect("nonzero vector");
            if u.dim() < d {
                debug_assert!(gens.iter().all(|g| u.is_invariant(g)));
                return Irreducibility::No(u);
            }
            let tker = n.transpose().kernel();
            let w = tker.basis()[0].clone();
            let ut = spin_with(&[w], field, d, &tgens).expect("nonzero vector");
            if ut.dim() < d {
                let witness = ut.annihilator();
                debug_assert!(gens.iter().all(|g| witness.is_invariant(g)));
                return Irreducibility::No(witness);
            }
            return Irreducibility::Yes;
        }
    }
    Irreducibility::Inconclusive
}

/// A random linear combination of a few random group elements and the
/// generators.
fn random_algebra_element(grp: &MatrixGroup, walk: &mut RandomWalkState) -> DenseMatrix {
    let field = grp.field();
    let q = field.order();
    let d = grp.dim();
    let mut theta = DenseMatrix::zero(field, d, d);
    let mut terms: Vec<DenseMatrix> = (0..2).map(|_| walk.next_element()).collect();
    terms.extend(grp.generators().iter().cloned());
    for t in terms {
        let c = walk.rng().random_range(0..q);
        if c != 0 {
            theta = theta.add(&t.scale(c)).expect("same shape");
        }
    }
    theta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use crate::groups::classical::{classical_generators, ClassicalFamily};

    #[test]
    fn reducible_block_group() {
        let f = FieldSpec::prime(3).unwrap();
        let a = DenseMatrix::from_rows(&f, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
        let b = DenseMatrix::from_rows(&f, &[vec![2, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let g = MatrixGroup::new(&f, 3, vec![a, b], "").unwrap();
        match is_irreducible(&g, 1, 64) {
            Irreducibility::No(w) => {
                assert!(w.dim() > 0 && w.dim() < 3);
                assert!(g.generators().iter().all(|m| w.is_invariant(m)));
            }
            other => panic!("expected NO, got {other:?}"),
        }
    }

    #[test]
    fn natural_modules_are_irreducible() {
        for (fam, d, q) in [
            (ClassicalFamily::Sl, 2usize, 7u64),
            (ClassicalFamily::Gl, 4, 2),
            (ClassicalFamily::Sp, 4, 3),
        ] {
            let g = classical_generators(fam, d, q).unwrap();
            assert_eq!(
                is_irreducible(&g, 3, 64),
                Irreducibility::Yes,
                "{fam} {d} {q}"
            );
        }
    }
}
