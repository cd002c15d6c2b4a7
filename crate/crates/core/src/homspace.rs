//! Morphism spaces `Hom(a, b)`: expansion in the standard basis, the bar
//! involution and its matrix.

use crate::diagram::{enumerate_matchings, positive_lift, Matching, ObjectWord, SlicedDiagram};
use crate::engine::Engine;
use crate::error::{Result, SkeinError};
use crate::morphism::Morphism;
use crate::{QLaurent, Scalar};

/// The standard basis of `Hom(a, b)`, or an error if the space is zero.
pub fn standard_basis(a: &ObjectWord, b: &ObjectWord) -> Result<Vec<Matching>> {
    let basis = enumerate_matchings(a, b);
    if basis.is_empty() {
        return Err(SkeinError::ZeroHomSpace { from: a.to_string(), to: b.to_string() });
    }
    Ok(basis)
}

/// Matrix of the bar involution: column `j` holds `ψ(basis[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarMatrix {
    pub basis: Vec<Matching>,
    pub entries: Vec<Vec<QLaurent>>,
}

impl Engine {
    /// `ψ` of a single basis element: expand the positive lift with all crossings switched.
    pub fn bar_basis(&mut self, m: &Matching) -> Morphism {
        if let Some(hit) = self.bars.get(m) {
            return hit.clone();
        }
        let img = self.expand(&positive_lift(m).flip_crossings());
        self.bars.insert(m.clone(), img.clone());
        img
    }

    /// The semilinear bar involution.
    pub fn bar_morphism(&mut self, x: &Morphism) -> Morphism {
        let mut out = Morphism::zero(x.source(), x.target());
        for (m, c) in x.terms() {
            let img = self.bar_basis(m);
            out.add_scaled(&img, &c.bar());
        }
        out
    }

    pub fn bar_matrix(&mut self, a: &ObjectWord, b: &ObjectWord) -> Result<BarMatrix> {
        let basis = standard_basis(a, b)?;
        let n = basis.len();
        let mut entries = vec![vec![QLaurent::zero(); n]; n];
        for (j, t) in basis.iter().enumerate() {
            let img = self.bar_basis(t);
            for (i, s) in basis.iter().enumerate() {
                let c = img.coeff(s);
                let q = c.to_qpoly().ok_or_else(|| {
                    SkeinError::Invariant(format!("ψ({t}) has coefficient {c} at {s}, which is not in Z[q^±]"))
                })?;
                let ok = if i == j {
                    q.is_one()
                } else {
                    q.is_zero() || s.crossing_number() < t.crossing_number()
                };
                if !ok {
                    return Err(SkeinError::Invariant(format!(
                        "ψ({t}) is not unitriangular: coefficient {q} at {s}"
                    )));
                }
                entries[i][j] = q;
            }
        }
        Ok(BarMatrix { basis, entries })
    }

    /// `upper ∘ lower`, computed on pairs of positive lifts.
    pub fn compose(&mut self, upper: &Morphism, lower: &Morphism) -> Result<Morphism> {
        if upper.source() != lower.target() {
            return Err(SkeinError::Compose { lower: lower.target().to_string(), upper: upper.source().to_string() });
        }
        let mut out = Morphism::zero(lower.source(), upper.target());
        for (s, x) in upper.terms() {
            for (t, y) in lower.terms() {
                let key = (s.clone(), t.clone());
                let prod = match self.products.get(&key) {
                    Some(p) => p.clone(),
                    None => {
                        let d = SlicedDiagram::compose(&positive_lift(s), &positive_lift(t))?;
                        let p = self.expand(&d);
                        self.products.insert(key, p.clone());
                        p
                    }
                };
                out.add_scaled(&prod, &(x * y));
            }
        }
        Ok(out)
    }

    /// `left ⊗ right` of standard-basis combinations.
    pub fn tensor(&mut self, left: &Morphism, right: &Morphism) -> Morphism {
        let mut out = Morphism::zero(&left.source().concat(right.source()), &left.target().concat(right.target()));
        for (s, x) in left.terms() {
            for (t, y) in right.terms() {
                let d = SlicedDiagram::tensor(&positive_lift(s), &positive_lift(t));
                out.add_scaled(&self.expand(&d), &(x * y));
            }
        }
        out
    }
}

/// The morphism of a diagram, for readability at call sites.
pub fn expand(d: &SlicedDiagram) -> Morphism {
    Engine::new().expand(d)
}

pub fn identity(word: &ObjectWord) -> Morphism {
    Morphism::basis(&Matching::identity(word))
}

pub fn scalar_multiple(word: &ObjectWord, c: Scalar) -> Morphism {
    identity(word).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::lift::crossing;
    use crate::diagram::{Orientation::Up as U, Sign};

    fn w(s: &str) -> ObjectWord {
        s.parse().unwrap()
    }

    #[test]
    fn basis_elements_expand_to_themselves() {
        let mut e = Engine::new();
        for (a, b) in [("uu", "uu"), ("ud", "ud"), ("uud", "u"), ("udu", "u"), ("dd", "dd"), ("ud", ""), ("uuud", "uu")] {
            for m in standard_basis(&w(a), &w(b)).unwrap() {
                assert_eq!(e.expand(&positive_lift(&m)), Morphism::basis(&m), "{m}");
            }
        }
    }

    #[test]
    fn negative_crossing_and_square() {
        let ms = standard_basis(&w("uu"), &w("uu")).unwrap();
        let (id, x) = (&ms[0], &ms[1]);
        let mut e = Engine::new();
        let neg = e.expand(&crossing(Sign::Neg, U, U));
        let mut want = Morphism::basis(x);
        want.add_term(id, -Scalar::z());
        assert_eq!(neg, want);
        let sq = e.expand(&SlicedDiagram::compose(&crossing(Sign::Pos, U, U), &crossing(Sign::Pos, U, U)).unwrap());
        let mut want = Morphism::basis(id);
        want.add_term(x, Scalar::z());
        assert_eq!(sq, want);
        assert_eq!(e.bar_basis(x), neg);
        assert_eq!(e.bar_morphism(&Morphism::basis(id)), Morphism::basis(id));
    }

    #[test]
    fn bar_matrices() {
        let mut e = Engine::new();
        let bm = e.bar_matrix(&w("u"), &w("u")).unwrap();
        assert_eq!(bm.entries, vec![vec![QLaurent::one()]]);
        let bm = e.bar_matrix(&w("uu"), &w("uu")).unwrap();
        assert_eq!(bm.entries[0][1], "q^-1 - q".parse().unwrap());
        assert!(bm.entries[1][0].is_zero());
        let bm = e.bar_matrix(&w("ud"), &w("ud")).unwrap();
        for (j, col) in bm.basis.iter().enumerate() {
            assert_eq!(col.crossing_number(), 0);
            for i in 0..bm.basis.len() {
                assert_eq!(bm.entries[i][j].is_one(), i == j);
                assert!(i == j || bm.entries[i][j].is_zero());
            }
        }
        assert!(e.bar_matrix(&w("u"), &w("d")).is_err());
    }
}
