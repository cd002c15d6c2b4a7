use num_bigint::BigInt;
use proptest::prelude::*;
use skein::{negative_part_solve, IntLaurent, QLaurent, Scalar};

const P: i64 = 1_000_003;

fn pow_mod(mut b: i64, mut e: i64) -> i64 {
    b = b.rem_euclid(P);
    let mut acc = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn inv(x: i64) -> i64 {
    pow_mod(x, P - 2)
}

fn power(b: i64, e: i32) -> i64 {
    if e >= 0 {
        pow_mod(b, e as i64)
    } else {
        inv(pow_mod(b, -e as i64))
    }
}

/// Evaluation at `q = 2`, `t = 3` in `Z/P`, where `z = 3/2` is invertible.
fn eval(x: &Scalar) -> i64 {
    let mut acc = 0i64;
    for ((a, b), c) in x.num().terms() {
        let c: i64 = (c % BigInt::from(P)).try_into().unwrap();
        acc = (acc + c.rem_euclid(P) * power(2, *a) % P * power(3, *b)) % P;
    }
    let z = (2 - inv(2)).rem_euclid(P);
    acc * power(z, -(x.zpow() as i32)) % P
}

fn laurent() -> impl Strategy<Value = IntLaurent> {
    prop::collection::vec(((-3i32..=3, -2i32..=2), -4i64..=4), 0..5)
        .prop_map(|ts| IntLaurent::from_terms(ts.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), 0u32..3).prop_map(|(p, k)| Scalar::reduce(p, k))
}

fn negative_q() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-5i32..=-1, -4i64..=4), 0..4)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn arithmetic_agrees_with_evaluation(a in scalar(), b in scalar()) {
        prop_assert_eq!(eval(&(&a * &b)), eval(&a) * eval(&b) % P);
        prop_assert_eq!(eval(&(&a + &b)), (eval(&a) + eval(&b)) % P);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
    }

    #[test]
    fn reduced_form_is_canonical(p in laurent(), k in 0u32..3) {
        let x = Scalar::reduce(p.clone(), k);
        let shifted = Scalar::reduce(&p * &IntLaurent::z(), k + 1);
        prop_assert_eq!(&x, &shifted);
        prop_assert!(x.zpow() == 0 || !x.num().divisible_by_z());
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a.clone()));
    }

    #[test]
    fn negative_part_solution_is_unique(r in negative_q()) {
        let g = &r - &r.bar();
        prop_assert_eq!(negative_part_solve(&g).unwrap(), r);
    }
}

#[test]
fn symmetric_input_has_no_negative_part_solution() {
    assert!(negative_part_solve(&QLaurent::one()).is_err());
    assert!(negative_part_solve(&"q + q^-1".parse::<QLaurent>().unwrap()).is_err());
}

#[test]
fn z_and_delta() {
    assert_eq!(Scalar::z().bar(), -Scalar::z());
    assert_eq!(Scalar::delta().bar(), Scalar::delta());
    assert_eq!(eval(&(&Scalar::z() * &Scalar::delta())), (3 - inv(3)).rem_euclid(P));
}
