//! Generators for `GL_d(q)`, `SL_d(q)` and `Sp_d(q)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fmatrix::DenseMatrix;
use crate::groups::MatrixGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalFamily {
    Gl,
    Sl,
    Sp,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalFamily::Gl => "GL",
            ClassicalFamily::Sl => "SL",
            ClassicalFamily::Sp => "SP",
        })
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(ClassicalFamily::Gl),
            "SL" => Ok(ClassicalFamily::Sl),
            "SP" => Ok(ClassicalFamily::Sp),
            _ => Err(Error::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

/// `I + c E_{ij}`.
fn elementary(field: &FieldSpec, d: usize, i: usize, j: usize, c: u64) -> DenseMatrix {
    let mut m = DenseMatrix::identity(field, d);
    m.set(i, j, c);
    m
}

/// `e_i -> e_{i+1}`, `e_{d-1} -> ±e_0`, with the sign making det 1.
fn signed_cycle(field: &FieldSpec, d: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zero(field, d, d);
    for i in 0..d - 1 {
        m.set(i, i + 1, 1);
    }
    let sign = if d % 2 == 0 { field.neg(1) } else { 1 };
    m.set(d - 1, 0, sign);
    m
}

/// `antidiag(1, …, 1, -1, …, -1)`.
pub fn symplectic_gram(field: &FieldSpec, d: usize) -> Result<DenseMatrix> {
    if d % 2 != 0 {
        return Err(Error::OddDimensionSymplectic(d));
    }
    let m = d / 2;
    let mut j = DenseMatrix::zero(field, d, d);
    for i in 0..d {
        j.set(i, d - 1 - i, if i < m { 1 } else { field.neg(1) });
    }
    Ok(j)
}

/// `x -> x + λ (x J v^T) v`, i.e. `I + λ J v^T v`.
fn transvection(field: &FieldSpec, j: &DenseMatrix, v: &[u64], lambda: u64) -> DenseMatrix {
    let d = v.len();
    let jv = j.apply(v); // v J^T = -(J v^T)^T for alternating J
    let mut m = DenseMatrix::identity(field, d);
    for r in 0..d {
        // (J v^T)_r = -(v J)_r
        let col = field.neg(jv[r]);
        if col == 0 {
            continue;
        }
        for c in 0..d {
            if v[c] != 0 {
                let add = field.mul(lambda, field.mul(col, v[c]));
                m.set(r, c, field.add(m.get(r, c), add));
            }
        }
    }
    m
}

pub fn classical_generators(family: ClassicalFamily, d: usize, q: u64) -> Result<MatrixGroup> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let field = FieldSpec::of_order(q)?;
    let a = field.degree();
    let w = field.primitive_element();
    let powers: Vec<u64> = (0..a).map(|k| field.pow(w, k as u64)).collect();
    let mut gens = Vec::new();
    match family {
        ClassicalFamily::Gl | ClassicalFamily::Sl => {
            for &c in &powers {
                gens.push(elementary(&field, d, 0, 1, c));
            }
            gens.push(elementary(&field, d, 1, 0, 1));
            gens.push(signed_cycle(&field, d));
            if family == ClassicalFamily::Gl && q > 2 {
                let mut diag = vec![1u64; d];
                diag[0] = w;
                gens.push(DenseMatrix::diagonal(&field, &diag));
            }
        }
        ClassicalFamily::Sp => {
            let j = symplectic_gram(&field, d)?;
            let m = d / 2;
            let mut vectors = Vec::new();
            for i in 0..d {
                let mut v = vec![0u64; d];
                v[i] = 1;
                vectors.push(v);
            }
            for i in 0..d {
                for k in i + 1..d {
                    let mut v = vec![0u64; d];
                    v[i] = 1;
                    v[k] = 1;
                    vectors.push(v);
                }
            }
            for v in &vectors {
                for &c in &powers {
                    gens.push(transvection(&field, &j, v, c));
                }
            }
            if m > 1 {
                // cycle the hyperbolic pairs (e_i, e_{d-1-i})
                let mut p = DenseMatrix::zero(&field, d, d);
                for i in 0..m {
                    let t = (i + 1) % m;
                    p.set(i, t, 1);
                    p.set(d - 1 - i, d - 1 - t, 1);
                }
                gens.push(p);
            }
            for g in &gens {
                let lhs = g.transpose().mul(&j)?.mul(g)?;
                if lhs != j || g.mul(&j)?.mul(&g.transpose())? != j {
                    return Err(Error::InvalidArgument("generator leaves the form".into()));
                }
            }
        }
    }
    let label = format!("{family}({d},{q})");
    MatrixGroup::new(&field, d, gens, &label)
}

/// A nonzero alternating `J` with `g^T J g = J` for every generator, or
/// `None`. When the solution space has dimension above one the first
/// echelon basis element is returned.
pub fn invariant_alternating_form(grp: &MatrixGroup) -> Option<DenseMatrix> {
    let f = grp.field();
    let d = grp.dim();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    let basis = |i: usize, j: usize| {
        let mut b = DenseMatrix::zero(f, d, d);
        b.set(i, j, 1);
        b.set(j, i, f.neg(1));
        b
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        let b = basis(i, j);
        let mut row = Vec::new();
        for g in grp.generators() {
            let img = g.transpose().mul(&b).ok()?.mul(g).ok()?;
            row.extend(img.sub(&b).ok()?.data().iter().copied());
        }
        rows.push(row);
    }
    let a = DenseMatrix::from_rows(f, &rows).ok()?;
    let ker = a.kernel();
    let x = ker.basis().first()?;
    let mut j = DenseMatrix::zero(f, d, d);
    for (&c, &(i, k)) in x.iter().zip(&pairs) {
        j = j.add(&basis(i, k).scale(c)).ok()?;
    }
    Some(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_generators_preserve_the_form() {
        for (d, q) in [(4usize, 3u64), (4, 2), (6, 4), (2, 5)] {
            let g = classical_generators(ClassicalFamily::Sp, d, q).unwrap();
            let f = g.field().clone();
            let j = symplectic_gram(&f, d).unwrap();
            for m in g.generators() {
                assert_eq!(m.transpose().mul(&j).unwrap().mul(m).unwrap(), j);
            }
        }
        assert_eq!(
            classical_generators(ClassicalFamily::Sp, 3, 3).unwrap_err(),
            Error::OddDimensionSymplectic(3)
        );
    }

    #[test]
    fn sl_generators_have_det_one() {
        for (d, q) in [(2usize, 7u64), (3, 4), (4, 9)] {
            let g = classical_generators(ClassicalFamily::Sl, d, q).unwrap();
            assert!(g.generators().iter().all(|m| m.determinant().unwrap() == 1));
        }
    }

    #[test]
    fn form_of_symplectic_group_is_found() {
        let g = classical_generators(ClassicalFamily::Sp, 4, 5).unwrap();
        let j = invariant_alternating_form(&g).unwrap();
        // unique up to scalar
        let j0 = symplectic_gram(g.field(), 4).unwrap();
        let c = j.get(0, 3);
        assert_eq!(j0.scale(c), j);
    }
}
