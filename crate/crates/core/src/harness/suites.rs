//! Self-contained verification suites driven by the bundled manifest.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::Deserialize;

use crate::classify::{
    classify_element, construct_stingray, is_diagonalizable, is_stingray_oracle,
};
use crate::cyclo::{
    solve_multiplicities, stingray_criterion, trivial_multiplicity, CriterionTag, CyclotomicInt,
};
use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::fmatrix::{DenseMatrix, Subspace};
use crate::fpoly::{cyclotomic_quotient, DensePoly};
use crate::groups::{
    deleted_perm_module, enumerate_sl2, full_perm_module, group_order, is_irreducible, sl2_module,
    Action, Irreducibility, MatrixGroup, Perm, RandomWalkState, Sl2Module, Sl2Spec,
    DEFAULT_MEATAXE_ROUNDS,
};
use crate::harness::sample::sample_stingray;
use crate::ppd::{is_eppd_prime, primitive_prime_divisors};

const MANIFEST_TEXT: &str = include_str!("../../manifest/verify_suites.toml");

/// `SL_2(q)` is enumerated for certificates only up to this size.
const EXHAUSTIVE_Q: u64 = 16;

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub seed: u64,
    pub permmod: Vec<PermCase>,
    pub psl2: Vec<Psl2Case>,
    pub prop122: Prop122Case,
    pub ppdtable: PpdTableCase,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PermCase {
    pub id: String,
    pub line: u32,
    pub n: usize,
    pub p: u64,
    pub cycles: Vec<usize>,
    pub stingray: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Psl2Case {
    pub id: String,
    pub q: u64,
    pub module: String,
    pub r: u64,
    pub expect: String,
    pub samples: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Prop122Case {
    pub n: usize,
    pub p: u64,
    pub e: usize,
    pub max_fixed_dim: usize,
    pub elements: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PpdTableCase {
    pub q_max: u64,
    pub e_max: u32,
}

pub fn manifest() -> &'static Manifest {
    static M: OnceLock<Manifest> = OnceLock::new();
    M.get_or_init(|| toml::from_str(MANIFEST_TEXT).expect("bundled manifest parses"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Permmod,
    Psl2,
    Prop122,
    Characters,
    Ppdtable,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Permmod,
        Suite::Psl2,
        Suite::Prop122,
        Suite::Characters,
        Suite::Ppdtable,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Permmod => "PERMMOD",
            Suite::Psl2 => "PSL2",
            Suite::Prop122 => "PROP122",
            Suite::Characters => "CHARACTERS",
            Suite::Ppdtable => "PPDTABLE",
            Suite::All => "ALL",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PERMMOD" => Ok(Suite::Permmod),
            "PSL2" => Ok(Suite::Psl2),
            "PROP122" => Ok(Suite::Prop122),
            "CHARACTERS" => Ok(Suite::Characters),
            "PPDTABLE" => Ok(Suite::Ppdtable),
            "ALL" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl Check {
    fn eq(
        id: impl Into<String>,
        description: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
    ) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        Check {
            id: id.into(),
            description: description.into(),
            pass: expected == observed,
            expected,
            observed,
        }
    }

    fn with(
        id: impl Into<String>,
        description: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        pass: bool,
    ) -> Self {
        Check {
            id: id.into(),
            description: description.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clean = |s: &str| s.replace(char::is_whitespace, "_");
        write!(
            f,
            "CHECK {} {} expected={} observed={}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            clean(&self.expected),
            clean(&self.observed)
        )
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "SUITE {} {}",
            self.suite,
            if self.pass() { "PASS" } else { "FAIL" }
        )
    }
}

pub fn verify_suite(suite: Suite) -> Result<VerifyReport> {
    let checks = match suite {
        Suite::Permmod => permmod_checks()?,
        Suite::Psl2 => psl2_checks()?,
        Suite::Prop122 => prop122_checks()?,
        Suite::Characters => character_checks()?,
        Suite::Ppdtable => ppdtable_checks()?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(verify_suite(s)?.checks);
            }
            all
        }
    };
    Ok(VerifyReport {
        suite: suite.to_string(),
        checks,
    })
}

fn poly_str(f: &DensePoly) -> String {
    let c: Vec<String> = f.coeffs().iter().map(u64::to_string).collect();
    c.join(",")
}

fn t_minus_one_pow(field: &FieldSpec, k: usize) -> DensePoly {
    DensePoly::linear(field, 1).pow(k as u32)
}

/// Permutation of `{1..n}` with the given cycle lengths on consecutive points.
pub fn perm_with_cycles(n: usize, lengths: &[usize]) -> Result<Perm> {
    let mut start = 1;
    let mut cycles = Vec::new();
    for &len in lengths {
        cycles.push((start..start + len).collect::<Vec<_>>());
        start += len;
    }
    Perm::from_cycles(n, &cycles)
}

/// Characteristic polynomials of the Table-line element on `V` and `Y`.
pub fn permmod_closed_forms(
    field: &FieldSpec,
    line: u32,
    n: usize,
    r: usize,
    d: usize,
) -> Result<(DensePoly, DensePoly)> {
    let tm = |k| DensePoly::t_pow_minus_one(field, k);
    let one = DensePoly::linear(field, 1);
    let phi = || cyclotomic_quotient(r as u64, field);
    let forms = match line {
        1 => (tm(n).divmod(&one)?.0, tm(n)),
        2 => (tm(n - 1).divmod(&one)?.0, tm(n - 1).mul(&one)?),
        3 | 4 => (
            phi()?.mul(&t_minus_one_pow(field, d + 1 - r))?,
            tm(r).mul(&t_minus_one_pow(field, n - r))?,
        ),
        5 => (phi()?.pow(2), tm(r).pow(2)),
        _ => return Err(Error::InvalidArgument(format!("no table line {line}"))),
    };
    Ok(forms)
}

/// The sum-zero submodule `W` of the full permutation module.
fn sum_zero_subspace(field: &FieldSpec, n: usize) -> Result<Subspace> {
    let vecs: Vec<Vec<u64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v[i + 1] = field.neg(1);
            v
        })
        .collect();
    Ok(Subspace::from_vectors(field, n, &vecs))
}

fn permmod_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for case in &manifest().permmod {
        let sigma = perm_with_cycles(case.n, &case.cycles)?;
        let v_mod = deleted_perm_module(case.n, case.p)?;
        let y_mod = full_perm_module(case.n, case.p)?;
        let field = v_mod.field().clone();
        let d = v_mod.dim();
        let r = case.cycles[0];
        let gv = v_mod.matrix(&sigma)?;
        let gy = y_mod.matrix(&sigma)?;
        let gw = gy.restrict(&sum_zero_subspace(&field, case.n)?)?;
        let (ev, ey) = permmod_closed_forms(&field, case.line, case.n, r, d)?;
        let ew = ey.divmod(&DensePoly::linear(&field, 1))?.0;
        let desc = format!(
            "line {} n={} p={} cycles={:?}",
            case.line, case.n, case.p, case.cycles
        );
        out.push(Check::eq(
            format!("{}-CHARPOLY-V", case.id),
            &desc,
            poly_str(&ev),
            poly_str(&gv.char_poly()?),
        ));
        out.push(Check::eq(
            format!("{}-CHARPOLY-W", case.id),
            &desc,
            poly_str(&ew),
            poly_str(&gw.char_poly()?),
        ));
        out.push(Check::eq(
            format!("{}-CHARPOLY-Y", case.id),
            &desc,
            poly_str(&ey),
            poly_str(&gy.char_poly()?),
        ));
        let cls = classify_element(&gv, d / 2)?;
        let verdict = |b: bool| if b { "stingray" } else { "not-stingray" };
        out.push(Check::eq(
            format!("{}-VERDICT", case.id),
            format!("{desc} tag={}", cls.tag),
            verdict(case.stingray),
            verdict(cls.is_ppd_stingray()),
        ));
        let oracle = is_stingray_oracle(&gv, d / 2)?;
        out.push(Check::eq(
            format!("{}-ORACLE", case.id),
            format!("{desc} classifier against subspace oracle"),
            verdict(matches!(cls.tag, crate::classify::Tag::Stingray(_))),
            verdict(oracle),
        ));
    }
    Ok(out)
}

/// Result of sampling order-`r` elements of `SL_2(q)` in a module.
#[derive(Debug, Clone)]
pub struct Sl2Survey {
    /// Order-`r` elements examined.
    pub sampled: usize,
    pub stingrays: usize,
    /// Image of the first stingray found.
    pub witness: Option<DenseMatrix>,
    /// Classifier and subspace oracle agreed on every sample.
    pub oracle_agrees: bool,
}

/// Random search through `SL_2(q)`: each draw is raised to `|x|/r` when `r`
/// divides its order, and the image is classified with `e = 2`.
pub fn survey_sl2(
    module: &Sl2Module,
    r: u64,
    samples: usize,
    stop_at_first: bool,
    seed: u64,
) -> Result<Sl2Survey> {
    let natural = sl2_module(module.field().order(), Sl2Spec::Natural)?.group();
    let mut walk = RandomWalkState::new(&natural, seed);
    let rb = BigUint::from(r);
    let mut s = Sl2Survey {
        sampled: 0,
        stingrays: 0,
        witness: None,
        oracle_agrees: true,
    };
    let max_draws = samples.saturating_mul(50).max(1000);
    for _ in 0..max_draws {
        if s.sampled >= samples || (stop_at_first && s.witness.is_some()) {
            break;
        }
        let x = walk.next_element();
        let o = x.order(None)?;
        if (&o % &rb) != BigUint::from(0u32) {
            continue;
        }
        let h = x.pow_big(&(&o / &rb))?;
        let img = module.image(&h)?;
        let cls = classify_element(&img, 2)?;
        s.sampled += 1;
        let is_sting = matches!(cls.tag, crate::classify::Tag::Stingray(2));
        if is_sting != is_stingray_oracle(&img, 2)? {
            s.oracle_agrees = false;
        }
        if cls.is_ppd_stingray() {
            s.stingrays += 1;
            s.witness.get_or_insert(img);
        }
    }
    Ok(s)
}

/// Exhaustive pass over the order-`r` elements of `SL_2(q)`:
/// `(count, diagonalizable, stingray)`.
pub fn exhaustive_sl2(module: &Sl2Module, r: u64) -> Result<(usize, usize, usize)> {
    let (mut n, mut diag, mut sting) = (0, 0, 0);
    for h in enumerate_sl2(module.field()) {
        if h.is_identity() || !h.pow(r)?.is_identity() {
            continue;
        }
        let img = module.image(&h)?;
        n += 1;
        if is_diagonalizable(&img)? {
            diag += 1;
        }
        if classify_element(&img, 2)?.is_ppd_stingray() {
            sting += 1;
        }
    }
    Ok((n, diag, sting))
}

/// Number of distinct roots of `t^r - 1` in `GF(q)`.
pub fn roots_of_unity_in_field(field: &FieldSpec, r: u64) -> usize {
    DensePoly::t_pow_minus_one(field, r as usize).roots().len()
}

fn psl2_checks() -> Result<Vec<Check>> {
    let m = manifest();
    let mut out = Vec::new();
    for case in &m.psl2 {
        let spec: Sl2Spec = case.module.parse()?;
        let module = sl2_module(case.q, spec)?;
        let desc = format!("{} over GF({}) order {}", spec, case.q, case.r);
        match case.expect.as_str() {
            "stingray" => {
                let s = survey_sl2(&module, case.r, case.samples, true, m.seed)?;
                let found = if s.witness.is_some() { "found" } else { "none" };
                out.push(Check::eq(
                    format!("{}-SEARCH", case.id),
                    &desc,
                    "found",
                    found,
                ));
                let w_order = s
                    .witness
                    .as_ref()
                    .map(|w| w.order(None).map(|o| o.to_string()))
                    .transpose()?
                    .unwrap_or_else(|| "-".into());
                out.push(Check::eq(
                    format!("{}-WITNESS-ORDER", case.id),
                    &desc,
                    case.r,
                    w_order,
                ));
                out.push(Check::eq(
                    format!("{}-ORACLE", case.id),
                    &desc,
                    true,
                    s.oracle_agrees,
                ));
            }
            "none" => {
                let s = survey_sl2(&module, case.r, case.samples, false, m.seed)?;
                out.push(Check::with(
                    format!("{}-SEARCH", case.id),
                    &desc,
                    format!("0/{}", case.samples),
                    format!("{}/{}", s.stingrays, s.sampled),
                    s.stingrays == 0 && s.sampled >= case.samples,
                ));
                out.push(Check::eq(
                    format!("{}-ROOTS", case.id),
                    format!("{desc}: t^{}-1 splits over GF({})", case.r, case.q),
                    case.r,
                    roots_of_unity_in_field(module.field(), case.r),
                ));
                if case.q <= EXHAUSTIVE_Q {
                    let (n, diag, sting) = exhaustive_sl2(&module, case.r)?;
                    out.push(Check::with(
                        format!("{}-EXHAUSTIVE", case.id),
                        format!(
                            "{desc}: every order-{} element, diagonalizable and non-stingray",
                            case.r
                        ),
                        format!("diag={n}/{n},stingray=0"),
                        format!("diag={diag}/{n},stingray={sting}"),
                        n > 0 && diag == n && sting == 0,
                    ));
                }
            }
            other => return Err(Error::InvalidArgument(format!("bad expectation {other:?}"))),
        }
    }
    Ok(out)
}

fn prop122_checks() -> Result<Vec<Check>> {
    let c = &manifest().prop122;
    let module = deleted_perm_module(c.n, c.p)?;
    let mut out = Vec::new();
    for lengths in &c.elements {
        let tag: Vec<String> = lengths.iter().map(usize::to_string).collect();
        let id = format!("PROP122-{}", tag.join("."));
        let g = module.matrix(&perm_with_cycles(c.n, lengths)?)?;
        let cls = classify_element(&g, c.e)?;
        let desc = format!(
            "A{} deleted module over GF({}), cycle type {}",
            c.n,
            c.p,
            tag.join(".")
        );
        out.push(Check::eq(format!("{id}-DIM"), &desc, 2 * c.e, module.dim()));
        out.push(Check::eq(format!("{id}-ORDER"), &desc, 9, &cls.order));
        out.push(Check::with(
            format!("{id}-FIXED"),
            &desc,
            format!("<={}", c.max_fixed_dim),
            cls.fixed_dim,
            cls.fixed_dim <= c.max_fixed_dim,
        ));
        let sting = matches!(cls.tag, crate::classify::Tag::Stingray(e) if e == c.e);
        out.push(Check::eq(
            format!("{id}-VERDICT"),
            format!("{desc} tag={}", cls.tag),
            false,
            sting,
        ));
        out.push(Check::eq(
            format!("{id}-ORACLE"),
            &desc,
            false,
            is_stingray_oracle(&g, c.e)?,
        ));
    }
    Ok(out)
}

fn character_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let chi = CyclotomicInt::b5().neg();
    out.push(Check::eq(
        "CHAR-SOLVE-B5",
        "multiplicities of -b5 in degree 8, r = 5",
        "(2,1,2,2,1)",
        solve_multiplicities(&chi, 8, 5)?,
    ));
    let c = CyclotomicInt::rational(13, -1)?.sub(&CyclotomicInt::c13())?;
    out.push(Check::eq(
        "CHAR-TRIVIAL-C13",
        "trivial multiplicity of -1-c13 in degree 8, r = 13",
        0,
        trivial_multiplicity(&c.power_orbits(), 8, 13)?,
    ));
    let cases = [
        ("CHAR-CRIT-5-8-3", 5u32, 8usize, 3i64, true),
        ("CHAR-CRIT-5-8-M2", 5, 8, -2, false),
        ("CHAR-CRIT-3-4-1", 3, 4, 1, true),
    ];
    for (id, r, d, v, sting) in cases {
        let tag = stingray_criterion(r, d, &CyclotomicInt::rational(r, v)?)?;
        let verdict = |b: bool| if b { "STINGRAY" } else { "not-STINGRAY" };
        out.push(Check::eq(
            id,
            format!("criterion r={r} d={d} chi={v} tag={tag}"),
            verdict(sting),
            verdict(tag == CriterionTag::Stingray),
        ));
    }
    Ok(out)
}

fn prime_powers_up_to(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&q| crate::ppd::prime_power(q).is_ok())
        .collect()
}

fn ppdtable_checks() -> Result<Vec<Check>> {
    let c = &manifest().ppdtable;
    let fmt_set = |v: &[BigUint]| {
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", s.join(","))
    };
    let mut out = vec![
        Check::eq(
            "PPD-2-6",
            "ppd primes of 2^6-1",
            "{}",
            fmt_set(&primitive_prime_divisors(2, 6)?.primes),
        ),
        Check::eq(
            "PPD-2-4",
            "ppd primes of 2^4-1",
            "{5}",
            fmt_set(&primitive_prime_divisors(2, 4)?.primes),
        ),
    ];
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for q in prime_powers_up_to(c.q_max) {
        for e in 2..=c.e_max {
            let res = match primitive_prime_divisors(q, e) {
                Ok(res) => res,
                Err(Error::TooLarge) => continue,
                Err(err) => return Err(err),
            };
            for r in &res.primes {
                checked += 1;
                if r % e != BigUint::from(1u32) {
                    bad.push(format!("{q}^{e}:{r}"));
                }
            }
        }
    }
    out.push(Check::with(
        "PPD-CONGRUENCE",
        format!(
            "r = 1 mod e for q <= {}, e <= {} ({checked} primes)",
            c.q_max, c.e_max
        ),
        "violations=0",
        format!("violations={}", bad.len()),
        bad.is_empty() && checked > 0,
    ));
    let observed = match construct_stingray(2, 12, None, false) {
        Err(Error::NoPpdPrime { q, e }) => format!("NoPpdPrime(q={q},e={e})"),
        Err(e) => format!("{e:?}"),
        Ok(_) => "constructed".into(),
    };
    out.push(Check::eq(
        "PPD-CONSTRUCT-12-2",
        "construct_stingray at d=12, q=2",
        "NoPpdPrime(q=2,e=6)",
        observed,
    ));
    Ok(out)
}

/// Expectations checked against a user-supplied group, for table lines
/// whose generators are not bundled.
#[derive(Debug, Clone)]
pub struct SignatureSpec {
    pub order: Option<BigUint>,
    pub r: u64,
    /// Whether `(d/2)`-ppd stingray elements of order `r` should exist.
    pub stingray: Option<bool>,
    pub trials: usize,
    pub seed: u64,
}

pub fn signature_suite(grp: &MatrixGroup, spec: &SignatureSpec) -> Result<VerifyReport> {
    let d = grp.dim();
    let q = grp.field().order();
    let e = d / 2;
    let mut out = vec![Check::eq(
        "SIG-DIM-EVEN",
        format!("dimension {d}"),
        true,
        d % 2 == 0,
    )];
    if let Some(expected) = &spec.order {
        let observed = match group_order(grp, Action::Vectors, spec.seed) {
            Ok(o) => o.to_string(),
            Err(Error::ActionTooLarge(_)) => "not-computed".into(),
            Err(err) => return Err(err),
        };
        out.push(Check::eq(
            "SIG-ORDER",
            "group order by Schreier-Sims",
            expected,
            observed,
        ));
    }
    let irr = match is_irreducible(grp, spec.seed, DEFAULT_MEATAXE_ROUNDS) {
        Irreducibility::Yes => "YES".to_string(),
        Irreducibility::No(w) => format!("NO(dim={})", w.dim()),
        Irreducibility::Inconclusive => "INCONCLUSIVE".into(),
    };
    out.push(Check::eq("SIG-IRREDUCIBLE", "Norton test", "YES", irr));
    let is_ppd = e > 0 && is_eppd_prime(spec.r, q, e as u32)?;
    out.push(Check::eq(
        "SIG-PPD-PRIME",
        format!("{} is a {e}-ppd prime of {q}", spec.r),
        true,
        is_ppd,
    ));
    if let Some(expect) = spec.stingray {
        let rep = sample_stingray(grp, spec.r, e, spec.trials, spec.seed)?;
        let sampled = rep.trials - rep.skipped;
        let found = rep.witness.is_some();
        let desc = if expect {
            format!("stingray witness among {sampled} order-{} elements", spec.r)
        } else {
            format!(
                "no witness among {sampled} order-{} elements (bounded search, not a proof)",
                spec.r
            )
        };
        let word = |b: bool| if b { "found" } else { "none" };
        out.push(Check::with(
            "SIG-STINGRAY",
            desc,
            word(expect),
            word(found),
            found == expect && (expect || sampled > 0),
        ));
    }
    Ok(VerifyReport {
        suite: "SIGNATURE".into(),
        checks: out,
    })
}
