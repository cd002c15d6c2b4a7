//! Reduction of tangle diagrams to the standard basis.
//!
//! A tangle is walked strand by strand: open strands in the cyclic order of
//! their tails, then closed strands. At the first crossing that is first met
//! from below, the skein relation replaces the diagram by its switch plus or
//! minus `z` times its smoothing. A diagram with no such crossing is
//! descending: its strands are stacked in walking order, so it equals
//! `t^w δ^c` times the layered diagram of its matching, where `w` is the
//! self-writhe and `c` the number of closed components. Layered diagrams are
//! in turn rewritten into positive lifts by switching crossings one at a time.

use std::collections::HashMap;

use crate::diagram::{positive_lift, Matching, SlicedDiagram};
use crate::morphism::Morphism;
use crate::tangle::Tangle;
use crate::Scalar;

/// Evaluation session. Caches are keyed by normalized Gauss codes and by
/// matchings; they never change results.
#[derive(Default)]
pub struct Engine {
    reduced: HashMap<Tangle, Morphism>,
    layered: HashMap<Matching, Morphism>,
    lifts: HashMap<Matching, Tangle>,
    delta_pows: Vec<Scalar>,
    pub(crate) bars: HashMap<Matching, Morphism>,
    pub(crate) products: HashMap<(Matching, Matching), Morphism>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn delta_pow(&mut self, k: usize) -> Scalar {
        if self.delta_pows.is_empty() {
            self.delta_pows.push(Scalar::one());
        }
        while self.delta_pows.len() <= k {
            let next = self.delta_pows.last().unwrap() * &Scalar::delta();
            self.delta_pows.push(next);
        }
        self.delta_pows[k].clone()
    }

    /// The Gauss code of the positive lift of `m`.
    pub fn lift_tangle(&mut self, m: &Matching) -> Tangle {
        self.lifts.entry(m.clone()).or_insert_with(|| Tangle::from_sliced(&positive_lift(m))).clone()
    }

    /// Standard-basis coordinates of a tangle.
    pub fn reduce(&mut self, t: &Tangle) -> Morphism {
        let loops = t.free_loops;
        if loops > 0 {
            let mut bare = t.clone();
            bare.free_loops = 0;
            let r = self.reduce(&bare);
            return r.scale(&self.delta_pow(loops));
        }
        if let Some(hit) = self.reduced.get(t) {
            return hit.clone();
        }
        let out = match t.first_ascending() {
            Some(c) => {
                let sign = t.signs[c];
                let switched = self.reduce(&t.switch(c).expect("crossing exists"));
                let smoothed = self.reduce(&t.smooth(c).expect("crossing exists"));
                let z = if sign > 0 { Scalar::z() } else { -Scalar::z() };
                let mut acc = switched;
                acc.add_scaled(&smoothed, &z);
                acc
            }
            None => {
                let factor = &Scalar::t_pow(t.self_writhe()) * &self.delta_pow(t.closed.len());
                self.layered(&t.matching()).scale(&factor)
            }
        };
        self.reduced.insert(t.clone(), out.clone());
        out
    }

    /// Coordinates of the layered diagram of `m`, in which strand `i` (walking
    /// order) lies above strand `j` whenever `i < j`.
    fn layered(&mut self, m: &Matching) -> Morphism {
        if let Some(hit) = self.layered.get(m) {
            return hit.clone();
        }
        let lift = self.lift_tangle(m);
        // make the earlier strand the over-strand at every crossing
        let mut owner_first_over: Vec<Option<bool>> = vec![None; lift.signs.len()];
        for s in lift.walk() {
            for v in s {
                if owner_first_over[v.crossing].is_none() {
                    owner_first_over[v.crossing] = Some(v.over);
                }
            }
        }
        let mut d = lift.clone();
        for (c, first_over) in owner_first_over.iter().enumerate() {
            if *first_over == Some(false) {
                d = d.switch(c).expect("crossing exists");
            }
        }
        // now undo the switches: D_- = D_+ - z D_0
        let mut acc = Morphism::zero(m.source(), m.target());
        let minus_z = -Scalar::z();
        while let Some(c) = d.signs.iter().position(|s| *s < 0) {
            let smoothed = self.reduce(&d.smooth(c).expect("crossing exists"));
            acc.add_scaled(&smoothed, &minus_z);
            d = d.switch(c).expect("crossing exists");
        }
        debug_assert_eq!(d, lift);
        acc.add_term(m, Scalar::one());
        self.layered.insert(m.clone(), acc.clone());
        acc
    }

    /// Standard-basis coordinates of a sliced diagram.
    pub fn expand(&mut self, d: &SlicedDiagram) -> Morphism {
        self.reduce(&Tangle::from_sliced(d))
    }

    pub fn cache_sizes(&self) -> (usize, usize) {
        (self.reduced.len(), self.layered.len())
    }
}
