//! The defining relations of the oriented skein category, checked as
//! identities between standard-basis expansions.

use crate::check::Check;
use crate::diagram::{Generator, Layer, ObjectWord, Orientation, Sign, SlicedDiagram};
use crate::engine::Engine;
use crate::homspace::{identity, scalar_multiple};
use crate::Scalar;

use Orientation::{Down as D, Up as U};

/// `A : ↑↓ -> ∅`.
pub const A: Generator = Generator::Cap(U, D);
/// `Ā : ↓↑ -> ∅`.
pub const A_BAR: Generator = Generator::Cap(D, U);
/// `U : ∅ -> ↓↑`.
pub const CUP: Generator = Generator::Cup(D, U);
/// `Ū : ∅ -> ↑↓`.
pub const CUP_BAR: Generator = Generator::Cup(U, D);

/// `X± : ↓↓ -> ↓↓`.
pub fn x_down(sign: Sign) -> Generator {
    Generator::Cross(sign, D, D)
}

/// A diagram from layers listed bottom to top.
pub fn stack(bottom: &str, layers: &[(usize, Generator)]) -> SlicedDiagram {
    let layers = layers.iter().map(|&(offset, gen)| Layer { offset, gen }).collect();
    SlicedDiagram::new(bottom.parse().unwrap(), layers).expect("relation diagrams are well formed")
}

fn word(s: &str) -> ObjectWord {
    s.parse().unwrap()
}

/// Every defining relation, both signs where a relation comes in a pair.
pub fn category_relations(e: &mut Engine) -> Vec<Check> {
    let mut out = Vec::new();
    let mut rel = |e: &mut Engine, name: String, lhs: SlicedDiagram, rhs: crate::Morphism| {
        let l = e.expand(&lhs);
        out.push(Check::equal(name, &l, &rhs));
    };

    rel(e, "zigzag (↓A)∘(U↓) = ↓".into(), stack("d", &[(0, CUP), (1, A)]), identity(&word("d")));
    rel(e, "zigzag (Ā↓)∘(↓Ū) = ↓".into(), stack("d", &[(1, CUP_BAR), (0, A_BAR)]), identity(&word("d")));
    rel(e, "zigzag (↑Ā)∘(Ū↑) = ↑".into(), stack("u", &[(0, CUP_BAR), (1, A_BAR)]), identity(&word("u")));
    rel(e, "zigzag (A↑)∘(↑U) = ↑".into(), stack("u", &[(1, CUP), (0, A)]), identity(&word("u")));

    let signs = [(Sign::Pos, "+"), (Sign::Neg, "-")];
    for (s, tag) in signs {
        let x = x_down(s);
        let lhs = stack("uu", &[(2, CUP), (3, CUP), (2, x), (1, A), (0, A)]);
        let rhs = stack("uu", &[(0, CUP_BAR), (1, CUP_BAR), (2, x), (3, A_BAR), (2, A_BAR)]);
        let r = e.expand(&rhs);
        rel(e, format!("pivotal: rotations of X{tag} agree"), lhs, r);
    }

    let xp = x_down(Sign::Pos);
    let braid_r = e.expand(&stack("ddd", &[(1, xp), (0, xp), (1, xp)]));
    rel(e, "braid relation".into(), stack("ddd", &[(0, xp), (1, xp), (0, xp)]), braid_r);

    for (s, tag) in signs {
        let d = stack("dd", &[(0, x_down(s.flip())), (0, x_down(s))]);
        rel(e, format!("invertibility: X{tag} inverse"), d, identity(&word("dd")));
    }

    let minus = e.expand(&stack("dd", &[(0, x_down(Sign::Neg))]));
    let rhs = &minus + &scalar_multiple(&word("dd"), Scalar::z());
    rel(e, "skein: X+ = X- + z".into(), stack("dd", &[(0, xp)]), rhs);

    for (s, tag, k) in [(Sign::Pos, "+", 1), (Sign::Neg, "-", -1)] {
        let d = stack("d", &[(1, CUP), (0, x_down(s)), (1, A_BAR)]);
        rel(e, format!("twist: X{tag} = t^{k}"), d, scalar_multiple(&word("d"), Scalar::t_pow(k)));
    }

    for (s, tag) in signs {
        let (x, y) = (x_down(s), x_down(s.flip()));
        let d = stack("du", &[(0, CUP_BAR), (1, x), (2, A_BAR), (2, CUP), (1, y), (0, A)]);
        rel(e, format!("sideways inverse: X{tag} on ↓↑"), d, identity(&word("du")));
        let d = stack("ud", &[(2, CUP), (1, y), (0, A), (0, CUP_BAR), (1, x), (2, A_BAR)]);
        rel(e, format!("sideways inverse: X{tag} on ↑↓"), d, identity(&word("ud")));
    }

    let empty = ObjectWord::empty();
    rel(e, "loop: A∘Ū = δ".into(), stack("", &[(0, CUP_BAR), (0, A)]), scalar_multiple(&empty, Scalar::delta()));
    rel(e, "loop: Ā∘U = δ".into(), stack("", &[(0, CUP), (0, A_BAR)]), scalar_multiple(&empty, Scalar::delta()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_relations_hold() {
        let mut e = Engine::new();
        let checks = category_relations(&mut e);
        assert_eq!(checks.len(), 18);
        for c in &checks {
            assert!(c.passed, "{c}");
        }
    }
}
