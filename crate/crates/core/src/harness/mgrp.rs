//! MGRP v1 text format for matrix groups.
//!
//! ```text
//! MGRP v1
//! p 2
//! a 2
//! modulus 1 1 1
//! dim 2
//! ngens 1
//!
//! 1 1
//! 0 1
//! # label line
//! ```
//!
//! Entries are field encodings `Σ c_i p^i` in decimal. Each matrix is
//! preceded by one blank line. Trailing `#` lines carry the group label.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fmatrix::DenseMatrix;
use crate::groups::MatrixGroup;

pub const MAGIC: &str = "MGRP v1";

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn to_mgrp_string(grp: &MatrixGroup) -> String {
    let f = grp.field();
    let mut out = String::new();
    writeln!(out, "{MAGIC}").unwrap();
    writeln!(out, "p {}", f.characteristic()).unwrap();
    writeln!(out, "a {}", f.degree()).unwrap();
    if let Some(m) = f.modulus() {
        let m: Vec<String> = m.iter().map(u64::to_string).collect();
        writeln!(out, "modulus {}", m.join(" ")).unwrap();
    }
    writeln!(out, "dim {}", grp.dim()).unwrap();
    writeln!(out, "ngens {}", grp.generators().len()).unwrap();
    for g in grp.generators() {
        out.push('\n');
        for i in 0..g.rows() {
            let row: Vec<String> = g.row(i).iter().map(u64::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    for line in grp.label().lines() {
        writeln!(out, "# {line}").unwrap();
    }
    out
}

pub fn write_mgrp(grp: &MatrixGroup, path: &Path) -> Result<()> {
    std::fs::write(path, to_mgrp_string(grp))?;
    Ok(())
}

pub fn parse_mgrp(path: &Path) -> Result<MatrixGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_mgrp_str(&text)
}

/// Reads `key value` on line `no`.
fn keyed<'a>(lines: &[&'a str], no: usize, key: &str) -> Result<&'a str> {
    let line = lines
        .get(no - 1)
        .ok_or_else(|| perr(no, format!("missing `{key}` line")))?;
    match line.split_once(' ') {
        Some((k, v)) if k == key => Ok(v.trim()),
        _ => Err(perr(no, format!("expected `{key} <value>`"))),
    }
}

fn number<T: std::str::FromStr>(s: &str, no: usize) -> Result<T> {
    s.parse().map_err(|_| perr(no, format!("bad number {s:?}")))
}

pub fn parse_mgrp_str(text: &str) -> Result<MatrixGroup> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.first().map(|l| l.trim_end()) != Some(MAGIC) {
        return Err(perr(1, "missing MGRP v1 header"));
    }
    let mut no = 2;
    let p: u64 = number(keyed(&lines, no, "p")?, no)?;
    if !crate::ppd::factor::is_prime_u64(p) {
        return Err(perr(no, format!("{p} is not prime")));
    }
    no += 1;
    let a: u32 = number(keyed(&lines, no, "a")?, no)?;
    if a == 0 {
        return Err(perr(no, "extension degree must be positive"));
    }
    no += 1;
    let has_modulus = lines.get(no - 1).is_some_and(|l| l.starts_with("modulus"));
    let field = if a > 1 {
        if !has_modulus {
            return Err(perr(no, "a > 1 requires a modulus line"));
        }
        let m: Vec<u64> = keyed(&lines, no, "modulus")?
            .split_whitespace()
            .map(|c| number(c, no))
            .collect::<Result<_>>()?;
        no += 1;
        match FieldSpec::new(p, a, Some(&m)) {
            Err(Error::ReducibleModulus) => return Err(Error::ReducibleModulus),
            Err(e) => return Err(perr(no - 1, e.to_string())),
            Ok(f) => f,
        }
    } else {
        if has_modulus {
            return Err(perr(no, "modulus line given for a prime field"));
        }
        FieldSpec::new(p, 1, None).map_err(|e| perr(no, e.to_string()))?
    };
    let dim: usize = number(keyed(&lines, no, "dim")?, no)?;
    if dim == 0 {
        return Err(perr(no, "dimension must be positive"));
    }
    no += 1;
    let ngens: usize = number(keyed(&lines, no, "ngens")?, no)?;
    if ngens == 0 {
        return Err(perr(no, "need at least one generator"));
    }
    no += 1;

    let q = field.order();
    let mut gens = Vec::with_capacity(ngens);
    let mut label = Vec::new();
    let mut idx = no - 1;
    let next_line = |idx: &mut usize, label: &mut Vec<String>| -> Option<(usize, &str)> {
        while *idx < lines.len() {
            let l = lines[*idx];
            *idx += 1;
            if let Some(c) = l.strip_prefix('#') {
                label.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            } else if !l.trim().is_empty() {
                return Some((*idx, l));
            }
        }
        None
    };
    for _ in 0..ngens {
        let mut data = Vec::with_capacity(dim * dim);
        for _ in 0..dim {
            let (lno, l) = next_line(&mut idx, &mut label)
                .ok_or_else(|| perr(lines.len() + 1, "unexpected end of file"))?;
            let row: Vec<u64> = l
                .split_whitespace()
                .map(|c| number(c, lno))
                .collect::<Result<_>>()?;
            if row.len() != dim {
                return Err(perr(
                    lno,
                    format!("expected {dim} entries, found {}", row.len()),
                ));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= q) {
                return Err(perr(lno, format!("entry {bad} is not below q = {q}")));
            }
            data.extend(row);
        }
        gens.push(DenseMatrix::new(&field, dim, dim, data)?);
    }
    if let Some((lno, _)) = next_line(&mut idx, &mut label) {
        return Err(perr(lno, "trailing data after the last matrix"));
    }
    MatrixGroup::new(&field, dim, gens, &label.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{classical_generators, ClassicalFamily};

    #[test]
    fn round_trip_is_byte_identical() {
        for (fam, d, q) in [
            (ClassicalFamily::Gl, 4usize, 2u64),
            (ClassicalFamily::Sl, 3, 9),
        ] {
            let g = classical_generators(fam, d, q)
                .unwrap()
                .with_label("test group\nsecond");
            let text = to_mgrp_string(&g);
            let h = parse_mgrp_str(&text).unwrap();
            assert_eq!(g, h);
            assert_eq!(to_mgrp_string(&h), text);
        }
    }

    #[test]
    fn rejects_bad_files() {
        let bad_p = "MGRP v1\np 4\na 1\ndim 1\nngens 1\n\n1\n";
        assert!(matches!(
            parse_mgrp_str(bad_p),
            Err(Error::Parse { line: 2, .. })
        ));
        let no_mod = "MGRP v1\np 2\na 2\ndim 1\nngens 1\n\n1\n";
        assert!(matches!(
            parse_mgrp_str(no_mod),
            Err(Error::Parse { line: 4, .. })
        ));
        let reducible = "MGRP v1\np 2\na 2\nmodulus 1 0 1\ndim 1\nngens 1\n\n1\n";
        assert_eq!(parse_mgrp_str(reducible), Err(Error::ReducibleModulus));
        let singular = "MGRP v1\np 3\na 1\ndim 2\nngens 2\n\n1 0\n0 1\n\n1 1\n1 1\n";
        assert_eq!(parse_mgrp_str(singular), Err(Error::SingularGenerator(1)));
        let short = "MGRP v1\np 3\na 1\ndim 2\nngens 1\n\n1 0\n";
        assert!(matches!(parse_mgrp_str(short), Err(Error::Parse { .. })));
        let big = "MGRP v1\np 3\na 1\ndim 1\nngens 1\n\n3\n";
        assert!(matches!(
            parse_mgrp_str(big),
            Err(Error::Parse { line: 7, .. })
        ));
    }
}
