//! Kazhdan–Lusztig basis of the type A Hecke algebra, computed from the
//! `H_w` multiplication rule alone. Serves as an oracle for `End(↑^n)`.

use std::collections::BTreeMap;

use crate::diagram::{Generator, Layer, Matching, ObjectWord, Orientation, Sign, SlicedDiagram};
use crate::morphism::Morphism;
use crate::tangle::Tangle;
use num_traits::Zero;

use crate::{QLaurent, Scalar};

/// A permutation of `0..n`, `w[p]` the image of `p`.
pub type Perm = Vec<usize>;

/// Element of the Hecke algebra in the `H_w` basis.
pub type HeckeElement = BTreeMap<Perm, QLaurent>;

pub fn length(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// `s_i w`: swap the values `i` and `i + 1`.
pub fn left_mul(i: usize, w: &[usize]) -> Perm {
    w.iter()
        .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
        .collect()
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out.sort_by_key(|w| (length(w), w.clone()));
    out
}

fn add(x: &mut HeckeElement, w: Perm, c: &QLaurent) {
    let e = x.entry(w.clone()).or_insert_with(QLaurent::zero);
    *e = &*e + c;
    if e.is_zero() {
        x.remove(&w);
    }
}

/// `H_{s_i} · x`, using `H_s H_w = H_{sw}` if `sw > w` and `H_{sw} + z H_w` otherwise.
pub fn mul_generator(i: usize, x: &HeckeElement) -> HeckeElement {
    let z = QLaurent::from_laurent(&crate::IntLaurent::z()).expect("z is t-free");
    let mut out = HeckeElement::new();
    for (w, c) in x {
        let sw = left_mul(i, w);
        if length(&sw) > length(w) {
            add(&mut out, sw, c);
        } else {
            add(&mut out, sw, c);
            add(&mut out, w.clone(), &(&z * c));
        }
    }
    out
}

/// The bar-invariant basis `C_w ∈ H_w + Σ_{y<w} q^{-1}Z[q^{-1}] H_y`, for all `w ∈ S_n`.
pub fn kl_basis(n: usize) -> BTreeMap<Perm, HeckeElement> {
    let qinv = QLaurent::monomial(1.into(), -1);
    let mut basis: BTreeMap<Perm, HeckeElement> = BTreeMap::new();
    for w in all_perms(n) {
        let Some(i) = (0..n.saturating_sub(1)).find(|&i| length(&left_mul(i, &w)) < length(&w)) else {
            basis.insert(w.clone(), HeckeElement::from([(w, QLaurent::one())]));
            continue;
        };
        let v = left_mul(i, &w);
        let cv = &basis[&v];
        // C_s C_v = H_s C_v + q^-1 C_v
        let mut c = mul_generator(i, cv);
        for (y, a) in cv {
            add(&mut c, y.clone(), &(&qinv * a));
        }
        for (y, cy) in basis.iter() {
            if length(y) >= length(&v) || length(&left_mul(i, y)) > length(y) {
                continue;
            }
            let mu = cv.get(y).map(|p| p.coeff(-1)).unwrap_or_default();
            if !mu.is_zero() {
                let m = QLaurent::monomial(-mu, 0);
                for (u, a) in cy {
                    add(&mut c, u.clone(), &(&m * a));
                }
            }
        }
        basis.insert(w, c);
    }
    basis
}

/// The positive braid of a reduced word for `w`, with `bottom p` joined to `top w(p)`.
pub fn perm_diagram(w: &[usize]) -> SlicedDiagram {
    let up = ObjectWord(vec![Orientation::Up; w.len()]);
    let mut word = Vec::new();
    let mut cur = w.to_vec();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| length(&left_mul(i, &cur)) < length(&cur)) {
        word.push(i);
        cur = left_mul(i, &cur);
    }
    // the first letter acts last, so it sits on top
    let layers = word
        .iter()
        .rev()
        .map(|&offset| Layer { offset, gen: Generator::Cross(Sign::Pos, Orientation::Up, Orientation::Up) })
        .collect();
    SlicedDiagram::new(up, layers).expect("braid layers are well formed")
}

pub fn perm_matching(w: &[usize]) -> Matching {
    Tangle::from_sliced(&perm_diagram(w)).matching()
}

pub fn to_morphism(x: &HeckeElement, n: usize) -> Morphism {
    let up = ObjectWord(vec![Orientation::Up; n]);
    let mut out = Morphism::zero(&up, &up);
    for (w, c) in x {
        out.add_term(&perm_matching(w), Scalar::from_qpoly(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Engine;

    #[test]
    fn rank_two() {
        let b = kl_basis(2);
        let s = vec![1, 0];
        let cs = &b[&s];
        assert_eq!(cs[&s], QLaurent::one());
        assert_eq!(cs[&vec![0, 1]], "q^-1".parse().unwrap());
    }

    #[test]
    fn longest_element_of_s3_is_full_sum() {
        let b = kl_basis(3);
        let w0 = vec![2, 1, 0];
        let c = &b[&w0];
        assert_eq!(c.len(), 6);
        for (y, p) in c {
            let want = QLaurent::monomial(1.into(), -((3 - length(y)) as i32));
            assert_eq!(p, &want, "{y:?}");
        }
    }

    #[test]
    fn perm_matchings_are_the_standard_basis() {
        let mut labels: Vec<Matching> = all_perms(4).iter().map(|w| perm_matching(w)).collect();
        for (w, m) in all_perms(4).iter().zip(&labels) {
            assert_eq!(m.crossing_number(), length(w));
        }
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 24);
    }

    #[test]
    fn agrees_with_canonical_basis_of_s3() {
        let mut e = Engine::new();
        let up: ObjectWord = "uuu".parse().unwrap();
        let cb = e.canonical_basis(&up, &up).unwrap();
        for (w, c) in kl_basis(3) {
            let m = perm_matching(&w);
            assert_eq!(cb.element(&m).unwrap(), &to_morphism(&c, 3), "{w:?}");
        }
    }
}
