//! Three pairwise crossing strands with one pointing down: ψ(T) - T leaves
//! the Laurent ring in q, and no bar-invariant element of the form
//! T + Σ q^{-1}Z[q^{-1}]·T' exists.

use skein::diagram::{positive_lift, ObjectWord, SlicedDiagram};
use skein::homspace::standard_basis;
use skein::tangle::Tangle;
use skein::verify::all_words;
use skein::{Engine, IntLaurent, Scalar, SkeinError};

fn w(s: &str) -> ObjectWord {
    s.parse().unwrap()
}

const TOP: &str = "[-3>1 -1>3 2>-2]";

fn lifts() -> [SlicedDiagram; 2] {
    [
        "bottom: udu\n0 x+:ud\n1 x+:uu\n0 x+:du\ntop: udu\n".parse().unwrap(),
        "bottom: udu\n1 x+:du\n0 x+:uu\n1 x+:ud\ntop: udu\n".parse().unwrap(),
    ]
}

#[test]
fn two_distinct_positive_reduced_lifts() {
    let a = w("udu");
    let top = standard_basis(&a, &a).unwrap().into_iter().find(|m| m.to_string() == TOP).unwrap();
    assert_eq!(top.crossing_number(), 3);
    let mut e = Engine::new();
    let [l1, l2] = lifts();
    for d in [&l1, &l2] {
        let t = Tangle::from_sliced(d);
        assert_eq!(t.matching(), top);
        assert_eq!(t.crossing_count(), 3);
        assert!(t.signs.iter().all(|s| *s > 0));
    }
    assert_eq!(l1, positive_lift(&top));
    assert_ne!(e.expand(&l1), e.expand(&l2));
}

#[test]
fn bar_leaves_the_t_free_ring_for_both_lifts() {
    let a = w("udu");
    let mut e = Engine::new();
    let g = e.gram_data(&a, &a, None).unwrap();
    // -(t - t^-1)(q - q^-1)^2
    let want = -(&(&Scalar::t_pow(1) - &Scalar::t_pow(-1)) * &Scalar::z().pow(2));
    for d in lifts() {
        let x = e.expand(&d);
        let mirrored = d.flip_crossings();
        let image = e.expand(&mirrored);
        assert_eq!(e.expand_by_pairing(&g, &mirrored).unwrap(), image);
        let defect = &image - &x;
        let odd: Vec<_> = defect.terms().into_iter().filter(|(_, c)| !c.num().is_t_free()).collect();
        assert_eq!(odd.len(), 1);
        let (m, c) = odd[0];
        assert_eq!(m.crossing_number(), 0);
        assert_eq!(c, &want);
        // antisymmetric, but its q^0 part 2(t - t^-1) is not of the form r - bar(r) with r in q^-1 Z[q^-1, t^±]
        assert_eq!(c.bar(), -c.clone());
        let q0: IntLaurent = IntLaurent::from_terms(c.num().terms().filter(|((q, _), _)| *q == 0).map(|(k, v)| (*k, v.clone())));
        assert_eq!(q0.to_string(), "2*t - 2*t^-1");
    }
}

#[test]
fn canonical_basis_is_refused() {
    let a = w("udu");
    let err = Engine::new().canonical_basis(&a, &a).unwrap_err();
    assert!(matches!(err, SkeinError::Invariant(ref s) if s.contains(TOP)), "{err}");
}

#[test]
fn only_rotations_fail_up_to_total_length_six() {
    let mut e = Engine::new();
    let mut failing = Vec::new();
    for a in all_words(6) {
        for b in all_words(6) {
            if a.len() + b.len() > 6 || !a.balanced_with(&b) {
                continue;
            }
            match e.canonical_basis(&a, &b) {
                Ok(cb) => assert!(e.verify_canonical(&cb).passed(), "Hom({a}, {b})"),
                Err(_) => failing.push(format!("{a}>{b}")),
            }
        }
    }
    failing.sort();
    // every rotation of the alternating boundary ↑↓↑↓↑↓
    let want = [
        "d>dudud", "du>dudu", "dud>dud", "dudu>du", "dudud>d", "dududu>∅", "u>ududu",
        "ud>udud", "udu>udu", "udud>ud", "ududu>u", "ududud>∅", "∅>dududu", "∅>ududud",
    ];
    assert_eq!(failing, want);
}

#[test]
fn walled_spaces_are_unaffected() {
    let mut e = Engine::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
        let x = ObjectWord::walled(m, n);
        let cb = e.canonical_basis(&x, &x).unwrap();
        assert!(e.verify_canonical(&cb).passed(), "{x}");
    }
}
