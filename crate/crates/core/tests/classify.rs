use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stingray::classify::{
    classify_element, construct_stingray, eigenvalue_multiplicities, is_stingray_oracle, ppd_order,
    ElementClassification, Tag,
};
use stingray::cyclo::{stingray_criterion, CriterionTag};
use stingray::error::Error;
use stingray::ffield::FieldSpec;
use stingray::fmatrix::DenseMatrix;
use stingray::fpoly::{cyclotomic_quotient, DensePoly, DEFAULT_FACTOR_SEED};
use stingray::groups::{
    classical_generators, deleted_perm_module, enumerate_gl, sl2_module, ClassicalFamily, Perm,
    RandomWalkState, Sl2Spec,
};
use stingray::ppd::multiplicative_order;

fn fq(q: u64) -> FieldSpec {
    FieldSpec::of_order(q).unwrap()
}

fn phi5_block(f2: &FieldSpec) -> DenseMatrix {
    DenseMatrix::companion(&DensePoly::new(f2, vec![1, 1, 1, 1, 1]))
}

fn phi5_stingray() -> DenseMatrix {
    let f2 = fq(2);
    DenseMatrix::block_diag(&[&phi5_block(&f2), &DenseMatrix::identity(&f2, 4)]).unwrap()
}

fn phi17_octics() -> (DenseMatrix, DenseMatrix) {
    let f2 = fq(2);
    let fac = cyclotomic_quotient(17, &f2)
        .unwrap()
        .factor(DEFAULT_FACTOR_SEED)
        .unwrap();
    assert_eq!(fac.shape(), vec![(8, 1), (8, 1)]);
    (
        DenseMatrix::companion(&fac.factors[0].0),
        DenseMatrix::companion(&fac.factors[1].0),
    )
}

fn random_invertible(f: &FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    loop {
        let data = (0..d * d).map(|_| rng.random_range(0..f.order())).collect();
        let m = DenseMatrix::new(f, d, d, data).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

fn conjugate(g: &DenseMatrix, h: &DenseMatrix) -> DenseMatrix {
    h.inverse().unwrap().mul(g).unwrap().mul(h).unwrap()
}

/// Elements of order exactly r drawn from a random walk by powering.
fn order_r_elements(
    family: ClassicalFamily,
    d: usize,
    q: u64,
    r: u64,
    count: usize,
    seed: u64,
) -> Vec<DenseMatrix> {
    let grp = classical_generators(family, d, q).unwrap();
    let mut walk = RandomWalkState::new(&grp, seed);
    let rb = BigUint::from(r);
    let mut out = Vec::new();
    while out.len() < count {
        let x = walk.next_element();
        let o = x.order(None).unwrap();
        if &o % &rb != BigUint::from(0u32) {
            continue;
        }
        out.push(x.pow_big(&(o / &rb)).unwrap());
    }
    out
}

#[test]
fn classification_examples() {
    let f2 = fq(2);
    let s = classify_element(&phi5_stingray(), 4).unwrap();
    assert_eq!(s.tag, Tag::Stingray(4));
    assert_eq!(s.order, BigUint::from(5u32));
    assert_eq!(s.fixed_dim, 4);
    assert!(s.ppd_order && s.is_ppd_stingray());

    let c = phi5_block(&f2);
    let cc = DenseMatrix::block_diag(&[&c, &c]).unwrap();
    assert_eq!(classify_element(&cc, 4).unwrap().tag, Tag::Type2II);

    // 2 has order 8 modulo 17, so Φ17 splits into two octics
    assert_eq!(multiplicative_order(17, 2).unwrap(), 8);
    let (c1, c2) = phi17_octics();
    let g = DenseMatrix::block_diag(&[&c1, &c2]).unwrap();
    let k = classify_element(&g, 8).unwrap();
    assert_eq!(k.tag, Tag::Type2I);
    assert_eq!(k.order, BigUint::from(17u32));

    for d in [2usize, 5, 8] {
        let k = classify_element(&DenseMatrix::identity(&f2, d), 2).unwrap();
        assert_eq!(k.tag, Tag::NotPpd);
    }
    assert_eq!(
        classify_element(&DenseMatrix::zero(&f2, 3, 3), 1).unwrap_err(),
        Error::Singular
    );
}

#[test]
fn ppd_general_shape() {
    // three copies of a Φ5 block over F2 in dimension 14
    let f2 = fq(2);
    let c = phi5_block(&f2);
    let g = DenseMatrix::block_diag(&[&c, &c, &c, &DenseMatrix::identity(&f2, 2)]).unwrap();
    let k = classify_element(&g, 4).unwrap();
    assert_eq!(k.tag, Tag::PpdGeneral { e: 4, t: 3 });
}

#[test]
fn prime_power_order_nine_at_two_six() {
    assert!(ppd_order(&BigUint::from(9u32), 2, 6));
    assert!(!ppd_order(&BigUint::from(9u32), 2, 3));
    assert!(!ppd_order(&BigUint::from(15u32), 2, 4));
    assert!(ppd_order(&BigUint::from(5u32), 2, 4));
    // a 9-cycle in the deleted module of A_9 has a degree-6 block
    let m = deleted_perm_module(9, 2).unwrap();
    let g = m.matrix(&Perm::cycle(9, 9)).unwrap();
    let k = classify_element(&g, 6).unwrap();
    assert_eq!(k.order, BigUint::from(9u32));
    assert!(k.ppd_order);
    assert_ne!(k.tag, Tag::Stingray(6));
}

#[test]
fn oracle_examples() {
    assert!(is_stingray_oracle(&phi5_stingray(), 4).unwrap());
    let f2 = fq(2);
    let c = phi5_block(&f2);
    assert!(!is_stingray_oracle(&DenseMatrix::block_diag(&[&c, &c]).unwrap(), 4).unwrap());

    let m = deleted_perm_module(13, 2).unwrap();
    assert_eq!(m.dim(), 12);
    let g = m
        .matrix(&Perm::from_cycles(13, &[(1..=9).collect()]).unwrap())
        .unwrap();
    assert!(!is_stingray_oracle(&g, 6).unwrap());
    let k = classify_element(&g, 6).unwrap();
    assert!(k.fixed_dim <= 4);
    assert_ne!(k.tag, Tag::Stingray(6));
}

#[test]
fn gl42_exhaustive() {
    let f2 = fq(2);
    let all = enumerate_gl(&f2, 4).unwrap();
    assert_eq!(all.len(), 20160);
    let mut order3 = 0;
    let mut sting = 0;
    for g in &all {
        let k = classify_element(g, 2).unwrap();
        assert_eq!(k.tag == Tag::Stingray(2), is_stingray_oracle(g, 2).unwrap());
        assert_ne!(k.tag, Tag::Type2I);
        if k.order == BigUint::from(3u32) {
            order3 += 1;
            let hits = [Tag::Stingray(2), Tag::Type2I, Tag::Type2II]
                .iter()
                .filter(|t| **t == k.tag)
                .count();
            assert_eq!(hits, 1, "{g:?}");
            if k.tag == Tag::Stingray(2) {
                sting += 1;
            }
        }
    }
    // both order-3 shapes occur
    assert!(order3 > 0 && sting > 0 && sting < order3);
}

fn examples() -> Vec<(DenseMatrix, usize)> {
    let f2 = fq(2);
    let c = phi5_block(&f2);
    let (c1, c2) = phi17_octics();
    let f4 = fq(4);
    let sl = construct_stingray(4, 4, Some(5), true).unwrap();
    let unip =
        DenseMatrix::from_rows(&fq(3), &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 2]]).unwrap();
    vec![
        (phi5_stingray(), 4),
        (DenseMatrix::block_diag(&[&c, &c]).unwrap(), 4),
        (DenseMatrix::block_diag(&[&c1, &c2]).unwrap(), 8),
        (DenseMatrix::identity(&f4, 4), 2),
        (sl, 2),
        (unip, 1),
    ]
}

#[test]
fn conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for (g, e) in examples() {
        let base = classify_element(&g, e).unwrap();
        for _ in 0..1000 {
            let h = random_invertible(g.field(), g.rows(), &mut rng);
            let k = classify_element(&conjugate(&g, &h), e).unwrap();
            assert_eq!(k, base);
        }
    }
}

#[test]
fn order_three_never_type_2i_when_q_is_2_mod_3() {
    for q in [2u64, 5, 8, 11] {
        assert_eq!(q % 3, 2);
        let mut seen = std::collections::HashSet::new();
        for g in order_r_elements(ClassicalFamily::Gl, 4, q, 3, 300, q) {
            let k = classify_element(&g, 2).unwrap();
            assert!(k.ppd_order);
            assert!(
                matches!(k.tag, Tag::Stingray(2) | Tag::Type2II),
                "q={q} {}",
                k.tag
            );
            assert_eq!(
                k.tag == Tag::Stingray(2),
                is_stingray_oracle(&g, 2).unwrap()
            );
            seen.insert(k.tag);
        }
        assert_eq!(seen.len(), 2, "q={q}");
    }
}

fn criterion_tag(tag: Tag) -> CriterionTag {
    match tag {
        Tag::Stingray(_) => CriterionTag::Stingray,
        Tag::Type2I => CriterionTag::Type2I,
        Tag::Type2II => CriterionTag::Type2II,
        _ => CriterionTag::Other,
    }
}

#[test]
fn character_criterion_half_dimension() {
    // r = d/2 + 1: stingray iff the Brauer value is the rational d/2 - 1
    let mut cases: Vec<(DenseMatrix, u64)> = Vec::new();
    for q in [2u64, 5, 8] {
        for g in order_r_elements(ClassicalFamily::Gl, 4, q, 3, 100, 9) {
            cases.push((g, 3));
        }
    }
    for g in order_r_elements(ClassicalFamily::Gl, 8, 2, 5, 60, 4) {
        cases.push((g, 5));
    }
    let dm = deleted_perm_module(10, 2).unwrap();
    for cyc in [
        vec![vec![1, 2, 3, 4, 5]],
        vec![vec![1, 2, 3, 4, 5], vec![6, 7, 8, 9, 10]],
    ] {
        cases.push((dm.matrix(&Perm::from_cycles(10, &cyc).unwrap()).unwrap(), 5));
    }
    for (g, r) in cases {
        let d = g.rows();
        let e = d / 2;
        let k = classify_element(&g, e).unwrap();
        let sol = eigenvalue_multiplicities(&g, r).unwrap();
        assert_eq!(sol.mults.iter().sum::<u64>(), d as u64);
        assert_eq!(sol.mults[0] as usize, k.fixed_dim);
        let chi = sol.brauer_value();
        let sting = chi.as_rational() == Some(e as i64 - 1);
        assert_eq!(k.tag == Tag::Stingray(e), sting, "{}", k);
        let crit = stingray_criterion(r as u32, d, &chi).unwrap();
        if k.ppd_order && d == 2 * (r as usize - 1) {
            assert_eq!(crit, criterion_tag(k.tag), "{}", k);
        }
    }
}

#[test]
fn character_criterion_full_dimension() {
    // r = d + 1 with r = 5 over GF(4), where 5 is a 2-ppd prime
    assert_eq!(multiplicative_order(5, 4).unwrap(), 2);
    let mut seen = std::collections::HashSet::new();
    for g in order_r_elements(ClassicalFamily::Gl, 4, 4, 5, 300, 12) {
        let k = classify_element(&g, 2).unwrap();
        let chi = eigenvalue_multiplicities(&g, 5).unwrap().brauer_value();
        let crit = stingray_criterion(5, 4, &chi).unwrap();
        assert_eq!(crit, criterion_tag(k.tag), "{}", k);
        seen.insert(k.tag);
    }
    assert_eq!(seen.len(), 3);
}

fn check_construction(q: u64, d: usize, det_one: bool) -> ElementClassification {
    let g = construct_stingray(q, d, None, det_one).unwrap();
    assert_eq!(g.rows(), d);
    let k = classify_element(&g, d / 2).unwrap();
    assert_eq!(k.tag, Tag::Stingray(d / 2), "q={q} d={d}");
    assert!(k.ppd_order);
    assert!(is_stingray_oracle(&g, d / 2).unwrap());
    if det_one {
        assert_eq!(g.determinant().unwrap(), 1);
    }
    k
}

#[test]
fn construction_examples() {
    for (d, q) in [(4usize, 4u64), (8, 2), (8, 3), (10, 3)] {
        check_construction(q, d, false);
    }
    let k = check_construction(4, 4, true);
    assert_eq!(k.order, BigUint::from(5u32));
    let g = construct_stingray(2, 8, Some(5), false).unwrap();
    let k = classify_element(&g, 4).unwrap();
    assert_eq!(k.order, BigUint::from(5u32));
    assert_eq!(k.tag, Tag::Stingray(4));

    assert_eq!(
        construct_stingray(2, 12, None, false).unwrap_err(),
        Error::NoPpdPrime { q: 2, e: 6 }
    );
    assert_eq!(
        construct_stingray(2, 8, Some(3), false).unwrap_err(),
        Error::NoPpdPrime { q: 2, e: 4 }
    );
}

#[test]
fn det_one_constructions() {
    // over GF(2) every determinant is 1; elsewhere the factor must be unimodular
    for (q, d) in [(2u64, 8usize), (4, 4), (3, 8), (5, 4), (7, 6), (9, 4)] {
        match construct_stingray(q, d, None, true) {
            Ok(g) => {
                assert_eq!(g.determinant().unwrap(), 1, "q={q} d={d}");
                check_construction(q, d, true);
            }
            Err(e) => assert_eq!(e, Error::NoUnimodularFactor, "q={q} d={d}"),
        }
    }
}

#[test]
fn eigenvalue_multiplicity_examples() {
    let s = eigenvalue_multiplicities(&phi5_stingray(), 5).unwrap();
    assert_eq!(s.mults, vec![4, 1, 1, 1, 1]);
    for d in [1usize, 4, 7] {
        let s = eigenvalue_multiplicities(&DenseMatrix::identity(&fq(7), d), 3).unwrap();
        assert_eq!(s.mults[0] as usize, d);
    }

    let f5 = fq(5);
    let h = DenseMatrix::from_rows(&f5, &[vec![0, 4], vec![1, 4]]).unwrap();
    assert_eq!(h.order(None).unwrap(), BigUint::from(3u32));
    let g = sl2_module(5, Sl2Spec::Symcube).unwrap().image(&h).unwrap();
    let s = eigenvalue_multiplicities(&g, 3).unwrap();
    assert_eq!(s.mults, vec![2, 1, 1]);
    assert!(is_stingray_oracle(&g, 2).unwrap());

    assert!(matches!(
        eigenvalue_multiplicities(&phi5_stingray(), 3),
        Err(Error::OrderMismatch { .. })
    ));
    let j = DenseMatrix::from_rows(&fq(3), &[vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(
        eigenvalue_multiplicities(&j, 3).unwrap_err(),
        Error::CharacteristicOrder(3)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_invariance_random(qi in 0usize..4, d in 2usize..7, seed in any::<u64>()) {
        let q = [2u64, 3, 4, 5][qi];
        let f = fq(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_invertible(&f, d, &mut rng);
        let h = random_invertible(&f, d, &mut rng);
        for e in 1..d {
            prop_assert_eq!(
                classify_element(&conjugate(&g, &h), e).unwrap(),
                classify_element(&g, e).unwrap()
            );
            prop_assert_eq!(
                classify_element(&g, e).unwrap().tag == Tag::Stingray(e),
                is_stingray_oracle(&g, e).unwrap()
            );
        }
    }
}
