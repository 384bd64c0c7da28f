use consta_circulant::gf::prime_power;
use consta_circulant::{Elem, Field};
use proptest::prelude::*;

const SMALL_ORDERS: [u64; 17] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 32];

fn small_fields() -> Vec<Field> {
    SMALL_ORDERS.iter().map(|&q| Field::with_order(q).unwrap()).collect()
}

#[test]
fn frobenius_is_additive_and_multiplicative() {
    for f in small_fields() {
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
            }
            let p = f.characteristic() as u64;
            assert_eq!(f.frobenius(a, 1), f.pow(a, p));
            assert_eq!(f.frobenius(a, f.degree()), a);
        }
    }
}

#[test]
fn inverses_powers_and_orders() {
    for f in small_fields() {
        let q = f.order() as u64;
        let mut primitive_seen = false;
        for a in f.nonzero_elements() {
            assert_eq!(f.mul(f.inv(a).unwrap(), a), Elem::ONE);
            assert_eq!(f.pow(a, q - 1), Elem::ONE);
            let ord = f.mult_order(a).unwrap();
            assert_eq!((q - 1) % ord, 0);
            assert_eq!(f.pow(a, ord), Elem::ONE);
            assert!((1..ord).all(|k| f.pow(a, k) != Elem::ONE));
            primitive_seen |= ord == q - 1;
        }
        assert!(primitive_seen);
        assert_eq!(f.mult_order(f.primitive_element()).unwrap(), q - 1);
        assert!(f.inv(Elem::ZERO).is_err());
    }
}

#[test]
fn square_roots_in_characteristic_two() {
    for f in small_fields().into_iter().filter(|f| f.characteristic() == 2) {
        for a in f.elements() {
            let r = f.sqrt_char2(a).unwrap();
            assert_eq!(f.mul(r, r), a);
            assert_eq!(f.sqrt_char2(f.mul(a, a)).unwrap(), a);
        }
    }
    assert!(Field::with_order(9).unwrap().sqrt_char2(Elem::ONE).is_err());
}

#[test]
fn codes_round_trip() {
    for f in small_fields() {
        for a in f.elements() {
            assert_eq!(f.element(a.code() as u64).unwrap(), a);
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
            assert_eq!(f.parse_element(&f.render(a)).unwrap(), a);
            assert_eq!(f.parse_element(&a.code().to_string()).unwrap(), a);
        }
        assert!(f.element(f.order() as u64).is_err());
    }
}

#[test]
fn every_field_order_up_to_256_builds() {
    for q in 2..=256u64 {
        match prime_power(q) {
            Some(_) => {
                let f = Field::with_order(q).unwrap();
                assert_eq!(f.order() as u64, q);
                let spec: Field = f.spec_string().parse().unwrap();
                assert_eq!(spec, f);
            }
            None => assert!(Field::with_order(q).is_err(), "{q}"),
        }
    }
}

fn field_and_elems(k: usize) -> impl Strategy<Value = (Field, Vec<Elem>)> {
    prop::sample::select(vec![4u64, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 256, 343, 1024, 4096])
        .prop_flat_map(move |q| {
            (Just(Field::with_order(q).unwrap()), prop::collection::vec((0..q as u32).prop_map(Elem::from_code), k))
        })
}

proptest! {
    #[test]
    fn field_axioms((f, v) in field_and_elems(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn pow_adds_exponents((f, v) in field_and_elems(1), e1 in 0u64..5000, e2 in 0u64..5000) {
        let a = v[0];
        prop_assert_eq!(f.mul(f.pow(a, e1), f.pow(a, e2)), f.pow(a, e1 + e2));
    }

    #[test]
    fn scalar_is_repeated_addition((f, v) in field_and_elems(1), k in 0u64..40) {
        let a = v[0];
        let sum = (0..k).fold(Elem::ZERO, |acc, _| f.add(acc, a));
        prop_assert_eq!(f.scalar(k, a), sum);
    }
}
