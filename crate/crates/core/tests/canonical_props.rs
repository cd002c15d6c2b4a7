use proptest::prelude::*;
use skein::diagram::{ObjectWord, Orientation};
use skein::homspace::standard_basis;
use skein::verify::all_words;
use skein::Engine;

fn word(bits: &[bool]) -> ObjectWord {
    ObjectWord::new(bits.iter().map(|&b| if b { Orientation::Up } else { Orientation::Down }).collect())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A nonzero space with `|a| + |b| ≤ 6` whose bar matrix stays in `Z[q^±]`
/// (see mixed_triangle.rs for the ones that do not).
fn space() -> impl Strategy<Value = (ObjectWord, ObjectWord)> {
    (prop::collection::vec(any::<bool>(), 0..=3), prop::collection::vec(any::<bool>(), 0..=3))
        .prop_map(|(a, b)| (word(&a), word(&b)))
        .prop_filter("nonzero", |(a, b)| a.balanced_with(b))
        .prop_filter("t-free bar matrix", |(a, b)| Engine::new().bar_matrix(a, b).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dimension_is_a_factorial(a in prop::collection::vec(any::<bool>(), 0..=4), b in prop::collection::vec(any::<bool>(), 0..=4)) {
        let (a, b) = (word(&a), word(&b));
        let n = standard_basis(&a, &b).map(|x| x.len()).unwrap_or(0);
        let want = if a.balanced_with(&b) { factorial(a.ups() + b.downs()) } else { 0 };
        prop_assert_eq!(n, want);
    }

    #[test]
    fn canonical_bases_verify((a, b) in space()) {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&a, &b).unwrap();
        let report = e.verify_canonical(&cb);
        prop_assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn result_does_not_depend_on_order_within_a_length((a, b) in space(), seed in any::<u64>()) {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&a, &b).unwrap();
        let n = cb.dimension();
        let mut perm: Vec<usize> = (0..n).collect();
        // shuffle within each length class by a seeded key
        perm.sort_by_key(|&i| (cb.order[i].crossing_number(), (i as u64 + 1).wrapping_mul(seed | 1).rotate_left(17)));
        let other = e.canonical_basis_in_order(&a, &b, &perm).unwrap();
        for (m, c) in other.order.iter().zip(&other.elements) {
            prop_assert_eq!(cb.element(m).unwrap(), c);
        }
    }

    #[test]
    fn coordinates_recover_combinations((a, b) in space(), coeffs in prop::collection::vec(-3i64..=3, 24)) {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&a, &b).unwrap();
        let mut x = skein::Morphism::zero(&a, &b);
        for (c, el) in coeffs.iter().zip(&cb.elements) {
            x.add_scaled(el, &skein::Scalar::from_int(*c));
        }
        let got = cb.coordinates(&x);
        for (j, c) in coeffs.iter().take(cb.dimension()).enumerate() {
            prop_assert_eq!(&got[j], &skein::Scalar::from_int(*c));
        }
    }
}

#[test]
fn small_spaces_are_positive() {
    let mut e = Engine::new();
    for a in all_words(3) {
        for b in all_words(3) {
            if a.len() + b.len() <= 4 && a.balanced_with(&b) {
                assert!(e.canonical_basis(&a, &b).unwrap().is_positive(), "Hom({a}, {b})");
            }
        }
    }
}
