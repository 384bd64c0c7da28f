mod common;

use consta_circulant::poly::divides_condition;
use consta_circulant::{Elem, Field, Poly, QuotientRing, SkewPoly, SkewQuotientRing};
use proptest::prelude::*;

use common::units_by_gcd;

fn codes_of(f: &Field, v: &[u32]) -> Vec<Elem> {
    v.iter().map(|&c| Elem::from_code(c % f.order())).collect()
}

fn field_strategy(orders: Vec<u64>) -> impl Strategy<Value = Field> {
    prop::sample::select(orders).prop_map(|q| Field::with_order(q).unwrap())
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..1 << 16, 0..=max_len)
}

/// Small rings `(q, m)` for exhaustive sweeps.
const SMALL_RINGS: [(u64, usize); 12] =
    [(2, 3), (2, 4), (2, 6), (3, 2), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3), (7, 2), (8, 2), (9, 2)];

#[test]
fn quotient_inverse_matches_exhaustive_search() {
    for (q, m) in SMALL_RINGS {
        let f = Field::with_order(q).unwrap();
        for lambda in f.nonzero_elements() {
            let ring = QuotientRing::new(&f, m, lambda).unwrap();
            let all: Vec<_> = ring.elements().unwrap().collect();
            let one = ring.one();
            let mut units = 0u64;
            for a in &all {
                let found = all.iter().find(|b| a.mul(b).unwrap() == one);
                match (a.inverse(), found) {
                    (Ok(inv), Some(b)) => {
                        assert_eq!(&inv, b);
                        assert_eq!(inv.mul(a).unwrap(), one);
                        units += 1;
                    }
                    (Err(_), None) => {}
                    (got, want) => panic!("q={q} m={m}: {a:?} inverse {got:?} vs search {want:?}"),
                }
            }
            assert_eq!(units, units_by_gcd(&f, m, lambda));
            assert_eq!(ring.units_count().unwrap().exact, units as u128);
        }
    }
}

#[test]
fn units_count_values_coincide_for_squarefree_moduli() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let f = Field::with_order(q).unwrap();
        for m in 1..=6 {
            for lambda in f.nonzero_elements() {
                let ring = QuotientRing::new(&f, m, lambda).unwrap();
                let fac = ring.modulus().factor().unwrap();
                let u = ring.units_count().unwrap();
                if fac.is_squarefree() {
                    assert_eq!(u.factor_product, u.exact, "q={q} m={m}");
                } else {
                    assert!(u.factor_product < u.exact, "q={q} m={m}");
                }
                if (q as u128).pow(m as u32) <= 4096 {
                    assert_eq!(u.exact, units_by_gcd(&f, m, lambda) as u128, "q={q} m={m}");
                }
            }
        }
    }
}

#[test]
fn divides_condition_matches_polynomial_division() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = Field::with_order(q).unwrap();
        for m in 1..=6usize {
            for g in 1..=12u64 {
                for lambda in f.nonzero_elements() {
                    let minus = f.neg(lambda);
                    let xm = Poly::new(&f, [vec![minus], vec![Elem::ZERO; m - 1], vec![Elem::ONE]].concat());
                    let mg = m * g as usize;
                    let xmg = Poly::new(&f, [vec![minus], vec![Elem::ZERO; mg - 1], vec![Elem::ONE]].concat());
                    let direct = xmg.rem(&xm).unwrap().is_zero();
                    assert_eq!(divides_condition(&f, m, g, lambda).unwrap(), direct, "q={q} m={m} g={g}");
                }
            }
        }
    }
}

#[test]
fn skew_centrality_matches_commutation() {
    for (q, theta, max_deg) in [(4u64, 1u32, 4usize), (8, 1, 4), (8, 2, 4), (9, 1, 4), (16, 1, 4), (16, 2, 4), (27, 1, 3)] {
        let f = Field::with_order(q).unwrap();
        let x = SkewPoly::monomial(&f, theta, Elem::ONE, 1).unwrap();
        let constants: Vec<SkewPoly> =
            f.elements().map(|c| SkewPoly::new(&f, theta, vec![c]).unwrap()).collect();
        let total = (q as usize).pow(max_deg as u32 + 1);
        for mut idx in 0..total {
            let coeffs: Vec<Elem> = (0..=max_deg)
                .map(|_| {
                    let c = Elem::from_code((idx % q as usize) as u32);
                    idx /= q as usize;
                    c
                })
                .collect();
            let p = SkewPoly::new(&f, theta, coeffs).unwrap();
            let commutes = std::iter::once(&x)
                .chain(constants.iter())
                .all(|g| p.mul(g).unwrap() == g.mul(&p).unwrap());
            assert_eq!(p.is_central(), commutes, "q={q} theta={theta} {}", p.render());
        }
    }
}

#[test]
fn twisted_rings_are_not_commutative() {
    for q in [4u64, 8, 9, 16, 25, 27, 64, 81] {
        let f = Field::with_order(q).unwrap();
        for theta in 1..f.degree() {
            let x = SkewPoly::monomial(&f, theta, Elem::ONE, 1).unwrap();
            let witness = f.elements().find(|&a| {
                let a = SkewPoly::new(&f, theta, vec![a]).unwrap();
                x.mul(&a).unwrap() != a.mul(&x).unwrap()
            });
            assert!(witness.is_some(), "q={q} theta={theta}");
        }
        let x = SkewPoly::monomial(&f, 0, Elem::ONE, 1).unwrap();
        assert!(f.elements().all(|a| {
            let a = SkewPoly::new(&f, 0, vec![a]).unwrap();
            x.mul(&a).unwrap() == a.mul(&x).unwrap()
        }));
    }
}

#[test]
fn skew_quotient_inverse_matches_exhaustive_search() {
    for (q, theta, m) in [(4u64, 1u32, 2usize), (4, 1, 4), (8, 1, 3), (9, 1, 2), (16, 2, 2)] {
        let f = Field::with_order(q).unwrap();
        for lambda in f.nonzero_elements().filter(|&l| f.frobenius(l, theta) == l) {
            let ring = SkewQuotientRing::new(&f, theta, m, lambda).unwrap();
            let all: Vec<_> = ring.elements().unwrap().collect();
            let one = ring.one();
            for a in &all {
                let right = all.iter().find(|b| a.mul(b).unwrap() == one);
                match a.inverse() {
                    Ok(inv) => {
                        assert_eq!(a.mul(&inv).unwrap(), one);
                        assert_eq!(inv.mul(a).unwrap(), one);
                        assert_eq!(right, Some(&inv));
                    }
                    Err(_) => assert!(right.is_none(), "q={q} theta={theta}: {a:?}"),
                }
            }
        }
    }
}

#[test]
fn invalid_skew_quotients_are_rejected() {
    let f16 = Field::with_order(16).unwrap();
    // ord(theta) = 4 does not divide 2
    assert!(SkewQuotientRing::new(&f16, 1, 2, Elem::ONE).is_err());
    // lambda = b is not fixed by squaring
    assert!(SkewQuotientRing::new(&f16, 1, 4, Elem::from_code(2)).is_err());
    assert!(SkewQuotientRing::new(&f16, 1, 4, Elem::ONE).is_ok());
}

proptest! {
    #[test]
    fn quotient_ring_axioms(
        f in field_strategy(vec![2, 3, 4, 5, 7, 8, 9, 16, 25]),
        m in 1usize..=5,
        l in 1u32..1000,
        v in prop::collection::vec(0u32..1 << 16, 15),
    ) {
        let lambda = Elem::from_code(1 + l % (f.order() - 1));
        let ring = QuotientRing::new(&f, m, lambda).unwrap();
        let el = |k: usize| ring.element(codes_of(&f, &v[k * 5..k * 5 + m])).unwrap();
        let (a, b, c) = (el(0), el(1), el(2));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&ring.one()).unwrap(), a.clone());
        // agrees with multiplying lifts and reducing
        let direct = a.lift().mul(&b.lift()).unwrap().rem(&ring.modulus()).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().lift(), direct);
    }

    #[test]
    fn poly_division_and_gcd(
        f in field_strategy(vec![2, 3, 4, 5, 8, 9, 16, 25, 49]),
        a in poly_strategy(9),
        b in poly_strategy(6),
    ) {
        let a = Poly::new(&f, codes_of(&f, &a));
        let b = Poly::new(&f, codes_of(&f, &b));
        prop_assume!(!b.is_zero());
        let (quot, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(quot.mul(&b).unwrap().add(&r).unwrap(), a.clone());
        prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        let (g, s, t) = a.xgcd(&b).unwrap();
        prop_assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), g.clone());
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero() && b.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn factorization_reconstructs_input(
        f in field_strategy(vec![2, 3, 4, 5, 7, 8, 9, 16, 25]),
        a in poly_strategy(9),
    ) {
        let a = Poly::new(&f, codes_of(&f, &a));
        prop_assume!(a.degree().unwrap_or(0) >= 1);
        let fac = a.factor().unwrap();
        prop_assert_eq!(fac.expand(&f), a.clone());
        for (p, e) in &fac.factors {
            prop_assert!(*e >= 1);
            prop_assert!(p.is_monic());
            prop_assert!(p.is_irreducible().unwrap());
        }
        for w in fac.factors.windows(2) {
            prop_assert!(w[0].0 != w[1].0);
        }
    }

    #[test]
    fn irreducibility_matches_root_count_in_low_degree(
        f in field_strategy(vec![2, 3, 4, 5, 7, 8, 9, 16]),
        a in prop::collection::vec(0u32..1 << 16, 3..=4),
    ) {
        let mut c = codes_of(&f, &a);
        let last = c.len() - 1;
        c[last] = Elem::ONE;
        let p = Poly::new(&f, c);
        // degree 2 or 3: irreducible iff no root
        prop_assert_eq!(p.is_irreducible().unwrap(), p.roots().is_empty());
    }

    #[test]
    fn skew_mul_is_associative(
        f in field_strategy(vec![4, 8, 9, 16]),
        t in 0u32..4,
        a in poly_strategy(6),
        b in poly_strategy(6),
        c in poly_strategy(6),
    ) {
        let theta = t % f.degree();
        let p = |v: &[u32]| SkewPoly::new(&f, theta, codes_of(&f, v)).unwrap();
        let (a, b, c) = (p(&a), p(&b), p(&c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(b.add(&c).unwrap().mul(&a).unwrap(), b.mul(&a).unwrap().add(&c.mul(&a).unwrap()).unwrap());
    }

    #[test]
    fn skew_divmod_reconstructs(
        f in field_strategy(vec![4, 8, 9, 16, 27]),
        t in 0u32..3,
        a in poly_strategy(8),
        b in poly_strategy(5),
    ) {
        let theta = t % f.degree();
        let a = SkewPoly::new(&f, theta, codes_of(&f, &a)).unwrap();
        let b = SkewPoly::new(&f, theta, codes_of(&f, &b)).unwrap();
        prop_assume!(!b.is_zero());
        let db = b.degree().unwrap();
        let (qr, rr) = a.divmod_right(&b).unwrap();
        prop_assert_eq!(qr.mul(&b).unwrap().add(&rr).unwrap(), a.clone());
        prop_assert!(rr.degree().map_or(true, |d| d < db));
        let (ql, rl) = a.divmod_left(&b).unwrap();
        prop_assert_eq!(b.mul(&ql).unwrap().add(&rl).unwrap(), a.clone());
        prop_assert!(rl.degree().map_or(true, |d| d < db));
    }

    #[test]
    fn untwisted_skew_ring_is_the_polynomial_ring(
        f in field_strategy(vec![3, 4, 8, 9, 16]),
        a in poly_strategy(6),
        b in poly_strategy(6),
    ) {
        let pa = Poly::new(&f, codes_of(&f, &a));
        let pb = Poly::new(&f, codes_of(&f, &b));
        let sa = SkewPoly::from_poly(&pa, 0).unwrap();
        let sb = SkewPoly::from_poly(&pb, 0).unwrap();
        prop_assert_eq!(sa.mul(&sb).unwrap().to_poly(), pa.mul(&pb).unwrap());
    }
}
