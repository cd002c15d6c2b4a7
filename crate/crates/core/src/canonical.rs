//! Canonical bases via Lusztig's lemma applied to the bar matrix.

use crate::check::Check;
use crate::diagram::{positive_lift, Generator, Layer, Matching, ObjectWord, Orientation, SlicedDiagram};
use crate::engine::Engine;
use crate::error::{Result, SkeinError};
use crate::homspace::{standard_basis, BarMatrix};
use crate::morphism::Morphism;
use crate::scalar::negative_part_solve;
use crate::tangle::Tangle;
use crate::{QLaurent, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBasis {
    pub source: ObjectWord,
    pub target: ObjectWord,
    /// Standard basis, sorted by length.
    pub order: Vec<Matching>,
    /// `transition[i][j]` is the coefficient of `order[i]` in `elements[j]`.
    pub transition: Vec<Vec<QLaurent>>,
    pub elements: Vec<Morphism>,
}

impl CanonicalBasis {
    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.order.iter().position(|x| x == m)
    }

    pub fn element(&self, m: &Matching) -> Option<&Morphism> {
        self.index_of(m).map(|i| &self.elements[i])
    }

    pub fn dimension(&self) -> usize {
        self.order.len()
    }

    /// Coordinates of `x` in the canonical basis, indexed like `order`.
    pub fn coordinates(&self, x: &Morphism) -> Vec<Scalar> {
        let mut residual = x.clone();
        let mut out = vec![Scalar::zero(); self.dimension()];
        let mut by_length: Vec<usize> = (0..self.dimension()).collect();
        by_length.sort_by_key(|&j| std::cmp::Reverse(self.order[j].crossing_number()));
        for j in by_length {
            let a = residual.coeff(&self.order[j]);
            if !a.is_zero() {
                residual.add_scaled(&self.elements[j], &-a.clone());
                out[j] = a;
            }
        }
        debug_assert!(residual.is_zero());
        out
    }

    /// Whether every transition coefficient lies in `Z≥0[q^{-1}]`.
    pub fn is_positive(&self) -> bool {
        self.transition.iter().flatten().all(|c| c.is_nonnegative() && c.terms().all(|(e, _)| *e <= 0))
    }
}

fn to_morphism(order: &[Matching], coeffs: &[QLaurent], a: &ObjectWord, b: &ObjectWord) -> Morphism {
    let mut x = Morphism::zero(a, b);
    for (m, c) in order.iter().zip(coeffs) {
        x.add_term(m, Scalar::from_qpoly(c));
    }
    x
}

/// Solve for the bar-invariant element `order[j] + Σ_{ℓ(i) < ℓ(j)} y_i order[i]`.
fn solve_column(bm: &BarMatrix, order: &[usize], j: usize) -> Result<Vec<QLaurent>> {
    let n = order.len();
    let len = |i: usize| bm.basis[order[i]].crossing_number();
    let entry = |i: usize, k: usize| &bm.entries[order[i]][order[k]];
    let mut c = vec![QLaurent::zero(); n];
    c[j] = QLaurent::one();
    for _ in 0..=n * n {
        // d = ψ(c) - c
        let mut d = vec![QLaurent::zero(); n];
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let cb = ck.bar();
            for (i, di) in d.iter_mut().enumerate() {
                let x = entry(i, k);
                if !x.is_zero() {
                    *di += &(&cb * x);
                }
            }
        }
        for (di, ci) in d.iter_mut().zip(&c) {
            *di = &*di - ci;
        }
        let top = (0..n).filter(|&i| !d[i].is_zero()).max_by_key(|&i| (len(i), std::cmp::Reverse(i)));
        let Some(i) = top else { return Ok(c) };
        if len(i) >= len(j) {
            return Err(SkeinError::Invariant(format!(
                "ψ-defect at {} does not lie below {}",
                bm.basis[order[i]], bm.basis[order[j]]
            )));
        }
        let r = negative_part_solve(&d[i]).map_err(|_| {
            SkeinError::NotAntisymmetric(format!(
                "coefficient {} at ({}, {})",
                d[i], bm.basis[order[i]], bm.basis[order[j]]
            ))
        })?;
        c[i] = &c[i] + &r;
    }
    Err(SkeinError::Invariant(format!("correction loop did not settle for {}", bm.basis[order[j]])))
}

impl Engine {
    pub fn canonical_basis(&mut self, a: &ObjectWord, b: &ObjectWord) -> Result<CanonicalBasis> {
        let n = standard_basis(a, b)?.len();
        self.canonical_basis_in_order(a, b, &(0..n).collect::<Vec<_>>())
    }

    /// The same construction with the standard basis visited in `perm` order;
    /// `perm` must keep lengths nondecreasing.
    pub fn canonical_basis_in_order(&mut self, a: &ObjectWord, b: &ObjectWord, perm: &[usize]) -> Result<CanonicalBasis> {
        let bm = self.bar_matrix(a, b)?;
        let order: Vec<Matching> = perm.iter().map(|&i| bm.basis[i].clone()).collect();
        if order.windows(2).any(|w| w[0].crossing_number() > w[1].crossing_number()) {
            return Err(SkeinError::Invariant("basis order must be sorted by length".into()));
        }
        let n = order.len();
        let mut transition = vec![vec![QLaurent::zero(); n]; n];
        let mut elements = Vec::with_capacity(n);
        for j in 0..n {
            let col = solve_column(&bm, perm, j)?;
            elements.push(to_morphism(&order, &col, a, b));
            for (row, c) in transition.iter_mut().zip(col) {
                row[j] = c;
            }
        }
        Ok(CanonicalBasis { source: a.clone(), target: b.clone(), order, transition, elements })
    }

    /// Recheck every defining property of a canonical basis.
    pub fn verify_canonical(&mut self, cb: &CanonicalBasis) -> CanonicalReport {
        let mut checks = Vec::new();
        let n = cb.dimension();
        let mut unitri = Vec::new();
        let mut negpart = Vec::new();
        let mut strict = Vec::new();
        let mut tfree = Vec::new();
        let mut invariant = Vec::new();
        for j in 0..n {
            for i in 0..n {
                let y = &cb.transition[i][j];
                let pair = || format!("({}, {})", cb.order[i], cb.order[j]);
                if i == j {
                    if !y.is_one() {
                        unitri.push(format!("diagonal {y} at {}", pair()));
                    }
                    continue;
                }
                if !y.in_negative_part() {
                    negpart.push(format!("{y} at {}", pair()));
                }
                if !y.is_zero() && cb.order[i].crossing_number() >= cb.order[j].crossing_number() {
                    strict.push(format!("{y} at {}", pair()));
                }
            }
            let c = &cb.elements[j];
            if c.terms().iter().any(|(_, x)| x.zpow() != 0 || !x.num().is_t_free()) {
                tfree.push(cb.order[j].to_string());
            }
            let image = self.bar_morphism(c);
            if &image != c {
                invariant.push(cb.order[j].to_string());
            }
        }
        let mut push = |name: &str, bad: Vec<String>| {
            checks.push(Check::new(name, bad.is_empty(), bad.join("; ")));
        };
        push("unit diagonal", unitri);
        push("off-diagonal coefficients in q^-1 Z[q^-1]", negpart);
        push("strictly triangular in length", strict);
        push("t-free coefficients", tfree);
        push("bar invariant", invariant);
        CanonicalReport { checks, positive: cb.is_positive() }
    }

    /// Compare `i(C_T)` with `C_{T↷}` for every `T`, where `i` precomposes with
    /// a cap on two new source points `↑↓` at the right.
    pub fn embed_and_check(&mut self, a: &ObjectWord, b: &ObjectWord) -> Result<Vec<Check>> {
        let small = self.canonical_basis(a, b)?;
        let ext = a.concat(&"ud".parse().unwrap());
        let big = self.canonical_basis(&ext, b)?;
        let cap = SlicedDiagram::tensor(
            &SlicedDiagram::identity(a),
            &SlicedDiagram::new("ud".parse().unwrap(), vec![Layer { offset: 0, gen: Generator::Cap(Orientation::Up, Orientation::Down) }])?,
        );
        let mut checks = Vec::new();
        for (t, c) in small.order.iter().zip(&small.elements) {
            let lifted = SlicedDiagram::compose(&positive_lift(t), &cap)?;
            let ext_m = Tangle::from_sliced(&lifted).matching();
            let mut image = Morphism::zero(&ext, b);
            for (s, x) in c.terms() {
                let d = SlicedDiagram::compose(&positive_lift(s), &cap)?;
                image.add_scaled(&self.expand(&d), x);
            }
            let name = format!("i(C_{t}) = C_{ext_m}");
            let want = big.element(&ext_m).cloned().expect("extended matching is a basis label");
            let mut check = Check::equal(name, &image, &want);
            if ext_m.crossing_number() != t.crossing_number() {
                check.passed = false;
                check.detail.push_str(" length changed");
            }
            checks.push(check);
        }
        Ok(checks)
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalReport {
    pub checks: Vec<Check>,
    /// All transition coefficients in `Z≥0[q^{-1}]` (reported, never required).
    pub positive: bool,
}

impl CanonicalReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ObjectWord {
        s.parse().unwrap()
    }

    #[test]
    fn rank_two_hecke() {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&w("uu"), &w("uu")).unwrap();
        let (id, x) = (&cb.order[0], &cb.order[1]);
        assert_eq!(cb.elements[0], Morphism::basis(id));
        let mut want = Morphism::basis(x);
        want.add_term(id, Scalar::q_pow(-1));
        assert_eq!(cb.elements[1], want);
        let report = e.verify_canonical(&cb);
        assert!(report.passed() && report.positive);
    }

    #[test]
    fn crossingless_elements_are_fixed() {
        let mut e = Engine::new();
        let cb = e.canonical_basis(&w("ud"), &w("ud")).unwrap();
        for (m, c) in cb.order.iter().zip(&cb.elements) {
            assert_eq!(c, &Morphism::basis(m));
        }
        let cb = e.canonical_basis(&w("uud"), &w("uud")).unwrap();
        assert!(e.verify_canonical(&cb).passed());
        for (m, c) in cb.order.iter().zip(&cb.elements) {
            if m.crossing_number() == 0 {
                assert_eq!(c, &Morphism::basis(m));
            }
        }
    }

    #[test]
    fn corrupted_basis_is_flagged() {
        let mut e = Engine::new();
        let mut cb = e.canonical_basis(&w("uu"), &w("uu")).unwrap();
        cb.transition[1][1] = "2".parse().unwrap();
        let report = e.verify_canonical(&cb);
        assert!(!report.passed());
        assert!(!report.checks[0].passed);
    }

    #[test]
    fn embedding_small_spaces() {
        let mut e = Engine::new();
        for c in e.embed_and_check(&w("u"), &w("u")).unwrap() {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn zero_space_is_an_error() {
        let mut e = Engine::new();
        assert!(matches!(e.canonical_basis(&w("u"), &w("d")), Err(SkeinError::ZeroHomSpace { .. })));
    }
}
