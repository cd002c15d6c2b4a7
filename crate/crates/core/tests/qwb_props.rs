use proptest::prelude::*;
use skein::diagram::ObjectWord;
use skein::homspace::identity;
use skein::kl::{kl_basis, perm_matching, to_morphism};
use skein::qwb::{valid_index, AlgebraWord, Letter};
use skein::{Engine, Morphism, Scalar};

fn letters(m: usize, n: usize) -> Vec<Letter> {
    let mut out = vec![Letter::E];
    for i in -(m as i32)..=(n as i32) {
        if valid_index(m, n, i) {
            out.push(Letter::H(i));
            out.push(Letter::Hinv(i));
        }
    }
    out
}

fn words(m: usize, n: usize, max: usize) -> Vec<AlgebraWord> {
    let alphabet = letters(m, n);
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |l| w.iter().copied().chain([*l]).collect::<Vec<_>>()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out.into_iter().map(|w| AlgebraWord::new(m, n, w).unwrap()).collect()
}

#[test]
fn algebra_bar_matches_the_bar_involution() {
    let mut e = Engine::new();
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for w in words(m, n, 4) {
            let x = vec![(Scalar::one(), w.clone())];
            let direct = e.word_morphism(&w).unwrap();
            assert_eq!(e.alg_bar(&x).unwrap(), e.bar_morphism(&direct), "qWB({m},{n}) word {w}");
        }
    }
}

fn combination() -> impl Strategy<Value = Vec<(Scalar, AlgebraWord)>> {
    let alphabet = letters(2, 2);
    let k = alphabet.len();
    prop::collection::vec(((-2i32..=2, -3i64..=3), prop::collection::vec(0..k, 0..=4)), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .map(|((a, c), idx)| {
                let w = AlgebraWord::new(2, 2, idx.into_iter().map(|i| alphabet[i]).collect()).unwrap();
                (&Scalar::q_pow(a) * &Scalar::from_int(c), w)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_bar_is_semilinear(x in combination()) {
        let mut e = Engine::new();
        let direct = e.combination_morphism(&x).unwrap();
        prop_assert_eq!(e.alg_bar(&x).unwrap(), e.bar_morphism(&direct));
    }

    #[test]
    fn xi_is_multiplicative(x in combination(), y in combination()) {
        let mut e = Engine::new();
        let (_, u) = &x[0];
        let (_, v) = &y[0];
        let uv = e.word_morphism(&u.mul(v).unwrap()).unwrap();
        let (a, b) = (e.word_morphism(u).unwrap(), e.word_morphism(v).unwrap());
        prop_assert_eq!(e.alg_mul_expand(u, v).unwrap(), uv.clone());
        prop_assert_eq!(e.compose(&a, &b).unwrap(), uv);
    }

    #[test]
    fn word_bar_is_an_involution(x in combination()) {
        let (_, w) = &x[0];
        prop_assert_eq!(w.bar().bar(), w.clone());
        prop_assert_eq!(w.bar().len(), w.len());
    }
}

#[test]
fn hecke_block_of_qwb_3_1_is_the_kl_basis() {
    let mut e = Engine::new();
    let qc = e.qwb_canonical(3, 1).unwrap();
    let down: ObjectWord = "d".parse().unwrap();
    for (w, c) in kl_basis(3) {
        let kl = e.tensor(&to_morphism(&c, 3), &identity(&down));
        let top = e.tensor(&Morphism::basis(&perm_matching(&w)), &identity(&down));
        let (m, _) = top.terms()[0];
        assert_eq!(qc.basis.element(m).unwrap(), &kl, "{w:?}");
    }
}
