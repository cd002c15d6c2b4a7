//! Evaluation of closed diagrams via the skein, twist and loop relations.

use std::collections::BTreeMap;

use crate::diagram::{Matching, ObjectWord, PdCrossing, PdDiagram, Sign};
use crate::engine::Engine;
use crate::error::{Result, SkeinError};
use crate::tangle::Tangle;
use crate::Scalar;

impl Engine {
    /// The value of a closed diagram in `End(∅)`.
    pub fn eval_tangle(&mut self, t: &Tangle) -> Scalar {
        assert!(t.open.is_empty(), "only closed diagrams have a scalar value");
        let e = ObjectWord::empty();
        self.reduce(t).coeff(&Matching::identity(&e))
    }

    pub fn eval(&mut self, pd: &PdDiagram) -> Result<Scalar> {
        Ok(self.eval_tangle(&Tangle::from_pd(pd)?))
    }
}

/// One-shot evaluation with a fresh session.
pub fn eval(pd: &PdDiagram) -> Result<Scalar> {
    Engine::new().eval(pd)
}

fn check(pd: &PdDiagram, c: usize) -> Result<&PdCrossing> {
    pd.crossings.get(c).ok_or(SkeinError::UnknownCrossing(c))
}

/// Exchange over and under at crossing `c`; the sign flips, arcs stay.
pub fn switch(pd: &PdDiagram, c: usize) -> Result<PdDiagram> {
    let x = check(pd, c)?;
    let [a, b, cc, d] = x.slots;
    let slots = match x.sign {
        Sign::Pos => [d, a, b, cc],
        Sign::Neg => [b, cc, d, a],
    };
    let mut out = pd.clone();
    out.crossings[c] = PdCrossing { sign: x.sign.flip(), slots };
    Ok(out)
}

/// Remove crossing `c`, joining each incoming arc to the other strand's outgoing arc.
pub fn smooth(pd: &PdDiagram, c: usize) -> Result<PdDiagram> {
    let x = check(pd, c)?.clone();
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(p: &mut BTreeMap<usize, usize>, a: usize) -> usize {
        let up = *p.get(&a).unwrap_or(&a);
        if up == a {
            a
        } else {
            let r = find(p, up);
            p.insert(a, r);
            r
        }
    }
    for (u, v) in [(x.under_in(), x.over_out()), (x.over_in(), x.under_out())] {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent.insert(ru.max(rv), ru.min(rv));
        }
    }
    let crossings: Vec<PdCrossing> = pd
        .crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != c)
        .map(|(_, y)| PdCrossing { sign: y.sign, slots: y.slots.map(|a| find(&mut parent, a)) })
        .collect();
    let mut classes: Vec<usize> = x.slots.iter().map(|a| find(&mut parent, *a)).collect();
    classes.sort();
    classes.dedup();
    let loops = classes.iter().filter(|r| !crossings.iter().any(|y| y.slots.contains(r))).count();
    Ok(PdDiagram { crossings, loops: pd.loops + loops })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PdDiagram {
        s.parse().unwrap()
    }

    fn delta() -> Scalar {
        Scalar::delta()
    }

    #[test]
    fn unknot_and_unlinks() {
        assert_eq!(eval(&pd("loops: 1")).unwrap(), delta());
        assert_eq!(eval(&pd("loops: 3")).unwrap(), delta().pow(3));
        assert_eq!(eval(&pd("loops: 0")).unwrap(), Scalar::one());
    }

    #[test]
    fn kinks() {
        let plus = pd("X+[1,1,2,2]");
        let minus = switch(&plus, 0).unwrap();
        assert_eq!(minus.crossings[0].sign, Sign::Neg);
        assert_eq!(eval(&plus).unwrap(), &Scalar::t_pow(1) * &delta());
        assert_eq!(eval(&minus).unwrap(), &Scalar::t_pow(-1) * &delta());
        assert_eq!(switch(&minus, 0).unwrap(), plus);
        let s = smooth(&plus, 0).unwrap();
        assert_eq!((s.crossings.len(), s.loops), (0, 2));
        // t δ - t^-1 δ = z δ^2
        let lhs = &eval(&plus).unwrap() - &eval(&minus).unwrap();
        assert_eq!(lhs, &Scalar::z() * &eval(&s).unwrap());
    }

    #[test]
    fn unknown_crossing() {
        assert!(matches!(switch(&pd("loops: 1"), 0), Err(SkeinError::UnknownCrossing(0))));
        assert!(smooth(&pd("X+[1,1,2,2]"), 4).is_err());
    }
}
