//! Finitely generated matrix groups and explicit modules.

pub mod classical;
pub mod meataxe;
pub mod modules;
pub mod order;
pub mod perm;
pub mod random;

pub use classical::{classical_generators, symplectic_gram, ClassicalFamily};
pub use meataxe::{is_irreducible, Irreducibility, DEFAULT_MEATAXE_ROUNDS};
pub use modules::{
    deleted_perm_module, full_perm_module, sl2_generators, sl2_module, PermModule, Sl2Module,
    Sl2Spec,
};
pub use order::{group_order, Action};
pub use perm::{CycleType, Perm};
pub use random::{random_element, RandomWalkState};

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fmatrix::{DenseMatrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    field: FieldSpec,
    dim: usize,
    generators: Vec<DenseMatrix>,
    label: String,
}

impl MatrixGroup {
    pub fn new(
        field: &FieldSpec,
        dim: usize,
        generators: Vec<DenseMatrix>,
        label: &str,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("a group needs a generator".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {i} is {}x{}, expected {dim}x{dim}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::SingularGenerator(i));
            }
        }
        Ok(MatrixGroup {
            field: field.clone(),
            dim,
            generators,
            label: label.to_string(),
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[DenseMatrix] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.to_string();
        self
    }

    /// The group generated by the transposes.
    pub fn transposed(&self) -> MatrixGroup {
        MatrixGroup {
            field: self.field.clone(),
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.transpose()).collect(),
            label: format!("{} (transposed)", self.label),
        }
    }
}

/// Smallest subspace containing `vectors` and invariant under every
/// generator.
pub fn spin(vectors: &[Vec<u64>], grp: &MatrixGroup) -> Result<Subspace> {
    spin_with(vectors, grp.field(), grp.dim(), grp.generators())
}

pub(crate) fn spin_with(
    vectors: &[Vec<u64>],
    field: &FieldSpec,
    dim: usize,
    gens: &[DenseMatrix],
) -> Result<Subspace> {
    if vectors.is_empty() {
        return Err(Error::ZeroVector);
    }
    let mut echelon = Echelon::new(field, dim);
    let mut queue = Vec::new();
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in dimension {dim}",
                v.len()
            )));
        }
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        if echelon.insert(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if echelon.rank() == dim {
            break;
        }
        for g in gens {
            let w = g.apply(&v);
            if echelon.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(Subspace::from_vectors(field, dim, &echelon.rows))
}

/// Incremental row echelon basis; each row is zero at earlier pivots.
pub(crate) struct Echelon {
    field: FieldSpec,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(field: &FieldSpec, dim: usize) -> Self {
        Echelon {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Add `v` if it is independent; returns whether it was.
    pub(crate) fn insert(&mut self, v: &[u64]) -> bool {
        let f = &self.field;
        let mut cur = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = cur[p];
            if c == 0 {
                continue;
            }
            for (x, &y) in cur.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        match cur.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let inv = f.inv(cur[p]).unwrap();
                cur.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                debug_assert_eq!(cur.len(), self.dim);
                self.rows.push(cur);
                self.pivots.push(p);
                true
            }
        }
    }
}

/// Every element of `GL_d(q)`, in encoding order of the flattened entries.
pub fn enumerate_gl(field: &FieldSpec, d: usize) -> Result<Vec<DenseMatrix>> {
    let q = field.order();
    let n = d * d;
    let total = (q as u128).checked_pow(n as u32).filter(|&t| t <= 1 << 24);
    let Some(total) = total else {
        return Err(Error::TooLarge);
    };
    let mut out = Vec::new();
    let mut data = vec![0u64; n];
    for _ in 0..total {
        let m = DenseMatrix::new(field, d, d, data.clone())?;
        if m.is_invertible() {
            out.push(m);
        }
        for x in data.iter_mut() {
            *x += 1;
            if *x < q {
                break;
            }
            *x = 0;
        }
    }
    Ok(out)
}

/// Every element of `SL_2(q)`.
pub fn enumerate_sl2(field: &FieldSpec) -> Vec<DenseMatrix> {
    let q = field.order();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                // solve a d - b c = 1 for d when a != 0
                if a != 0 {
                    let d = field.div(field.add(1, field.mul(b, c)), a).unwrap();
                    out.push(DenseMatrix::new(field, 2, 2, vec![a, b, c, d]).unwrap());
                } else if field.mul(b, c) == field.neg(1) {
                    for d in 0..q {
                        out.push(DenseMatrix::new(field, 2, 2, vec![a, b, c, d]).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations_have_the_right_size() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(enumerate_gl(&f2, 3).unwrap().len(), 168);
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldSpec::of_order(q).unwrap();
            let all = enumerate_sl2(&f);
            assert_eq!(all.len() as u64, q * (q * q - 1));
            assert!(all.iter().all(|m| m.determinant().unwrap() == 1));
        }
    }

    #[test]
    fn group_validation() {
        let f = FieldSpec::prime(3).unwrap();
        let z = DenseMatrix::zero(&f, 2, 2);
        assert_eq!(
            MatrixGroup::new(&f, 2, vec![DenseMatrix::identity(&f, 2), z], "").unwrap_err(),
            Error::SingularGenerator(1)
        );
        assert!(MatrixGroup::new(&f, 2, vec![], "").is_err());
    }

    #[test]
    fn spin_errors() {
        let f = FieldSpec::prime(3).unwrap();
        let g = MatrixGroup::new(&f, 2, vec![DenseMatrix::identity(&f, 2)], "").unwrap();
        assert_eq!(spin(&[vec![0, 0]], &g).unwrap_err(), Error::ZeroVector);
        assert_eq!(spin(&[vec![1, 0]], &g).unwrap().dim(), 1);
        assert_eq!(spin(&[vec![1, 0], vec![2, 0]], &g).unwrap().dim(), 1);
    }
}
