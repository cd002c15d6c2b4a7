//! Tangles as signed Gauss codes: each strand is the sequence of crossings it
//! passes, in the direction of its orientation.

use std::collections::{BTreeMap, VecDeque};

use crate::diagram::matching::{Endpoint, Matching};
use crate::diagram::pd::{PdCrossing, PdDiagram};
use crate::diagram::sliced::{Generator, Sign, SlicedDiagram};
use crate::diagram::word::{ObjectWord, Orientation};
use crate::error::{Result, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenStrand {
    pub tail: Endpoint,
    pub head: Endpoint,
    pub visits: Vec<Visit>,
}

/// A tangle diagram `source -> target` up to planar isotopy.
///
/// Crossing `c` has sign `signs[c]`; both of its visits appear somewhere in
/// `open` or `closed`. Crossingless circles are only counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tangle {
    pub source: ObjectWord,
    pub target: ObjectWord,
    pub open: Vec<OpenStrand>,
    pub closed: Vec<Vec<Visit>>,
    pub free_loops: usize,
    pub signs: Vec<i8>,
}

/// Where a crossing's visit sits: strand index (open strands first, then
/// closed ones) and position along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Loc {
    strand: usize,
    pos: usize,
}

struct Chain {
    visits: VecDeque<Visit>,
    tail: Option<Endpoint>,
    head: Option<Endpoint>,
}

impl Tangle {
    pub fn from_sliced(d: &SlicedDiagram) -> Tangle {
        let mut chains: Vec<Option<Chain>> = Vec::new();
        let mut at: Vec<usize> = Vec::new();
        let mut closed: Vec<Vec<Visit>> = Vec::new();
        let mut signs = Vec::new();
        for (i, o) in d.bottom().0.iter().enumerate() {
            let (tail, head) = match o {
                Orientation::Up => (Some(Endpoint::Source(i)), None),
                Orientation::Down => (None, Some(Endpoint::Source(i))),
            };
            at.push(chains.len());
            chains.push(Some(Chain { visits: VecDeque::new(), tail, head }));
        }
        let interfaces = d.interfaces();
        for (layer, word) in d.layers().iter().zip(&interfaces) {
            let p = layer.offset;
            match layer.gen {
                Generator::Cross(sign, ol, or) => {
                    let c = signs.len();
                    signs.push(sign.value());
                    let a_over = (sign == Sign::Pos) == (ol == or);
                    for (pos, o, over) in [(p, ol, a_over), (p + 1, or, !a_over)] {
                        let ch = chains[at[pos]].as_mut().unwrap();
                        let v = Visit { crossing: c, over };
                        match o {
                            Orientation::Up => ch.visits.push_back(v),
                            Orientation::Down => ch.visits.push_front(v),
                        }
                    }
                    at.swap(p, p + 1);
                }
                Generator::Cap(..) => {
                    // the strand entering the cap from below-left or below-right
                    let (from, to) = if word[p] == Orientation::Up { (at[p], at[p + 1]) } else { (at[p + 1], at[p]) };
                    at.drain(p..p + 2);
                    if from == to {
                        closed.push(chains[from].take().unwrap().visits.into());
                    } else {
                        let second = chains[to].take().unwrap();
                        let first = chains[from].as_mut().unwrap();
                        first.visits.extend(second.visits);
                        first.head = second.head;
                        for x in at.iter_mut().filter(|x| **x == to) {
                            *x = from;
                        }
                    }
                }
                Generator::Cup(..) => {
                    let id = chains.len();
                    chains.push(Some(Chain { visits: VecDeque::new(), tail: None, head: None }));
                    at.splice(p..p, [id, id]);
                }
            }
        }
        for (j, o) in d.top().0.iter().enumerate() {
            let ch = chains[at[j]].as_mut().unwrap();
            match o {
                Orientation::Up => ch.head = Some(Endpoint::Target(j)),
                Orientation::Down => ch.tail = Some(Endpoint::Target(j)),
            }
        }
        let open = chains
            .into_iter()
            .flatten()
            .map(|c| OpenStrand { tail: c.tail.unwrap(), head: c.head.unwrap(), visits: c.visits.into() })
            .collect();
        let mut t = Tangle {
            source: d.bottom().clone(),
            target: d.top().clone(),
            open,
            closed,
            free_loops: 0,
            signs,
        };
        t.normalize();
        t
    }

    /// A closed diagram from a PD code; components start at their lowest arc id.
    pub fn from_pd(pd: &PdDiagram) -> Result<Tangle> {
        pd.validate()?;
        // arc -> (crossing, over) where the arc ends
        let mut enters: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
        for (c, x) in pd.crossings.iter().enumerate() {
            enters.insert(x.under_in(), (c, false));
            enters.insert(x.over_in(), (c, true));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut closed = Vec::new();
        for &start in enters.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut arc = start;
            while seen.insert(arc) {
                let (c, over) = enters[&arc];
                comp.push(Visit { crossing: c, over });
                let x = &pd.crossings[c];
                arc = if over { x.over_out() } else { x.under_out() };
            }
            closed.push(comp);
        }
        let mut t = Tangle {
            source: ObjectWord::empty(),
            target: ObjectWord::empty(),
            open: Vec::new(),
            closed,
            free_loops: pd.loops,
            signs: pd.crossings.iter().map(|x| x.sign.value()).collect(),
        };
        t.normalize();
        Ok(t)
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.iter().filter(|s| **s != 0).count()
    }

    pub fn matching(&self) -> Matching {
        let strands: Vec<_> = self.open.iter().map(|s| (s.tail, s.head)).collect();
        Matching::from_strands(self.source.clone(), self.target.clone(), &strands).expect("tangle strands form a matching")
    }

    fn strand(&self, i: usize) -> &[Visit] {
        if i < self.open.len() {
            &self.open[i].visits
        } else {
            &self.closed[i - self.open.len()]
        }
    }

    fn strand_count(&self) -> usize {
        self.open.len() + self.closed.len()
    }

    /// Strands in walking order with their visits.
    pub fn walk(&self) -> impl Iterator<Item = &[Visit]> {
        (0..self.strand_count()).map(move |i| self.strand(i))
    }

    fn locate(&self, c: usize) -> [Loc; 2] {
        let mut found = Vec::with_capacity(2);
        for s in 0..self.strand_count() {
            for (pos, v) in self.strand(s).iter().enumerate() {
                if v.crossing == c {
                    found.push(Loc { strand: s, pos });
                }
            }
        }
        assert_eq!(found.len(), 2, "crossing {c} must be visited twice");
        [found[0], found[1]]
    }

    fn check_crossing(&self, c: usize) -> Result<()> {
        if c < self.signs.len() && self.signs[c] != 0 {
            Ok(())
        } else {
            Err(SkeinError::UnknownCrossing(c))
        }
    }

    /// Exchange over and under at crossing `c`, negating its sign.
    pub fn switch(&self, c: usize) -> Result<Tangle> {
        self.check_crossing(c)?;
        let mut t = self.clone();
        t.signs[c] = -t.signs[c];
        let flip = |vs: &mut Vec<Visit>| {
            for v in vs.iter_mut().filter(|v| v.crossing == c) {
                v.over = !v.over;
            }
        };
        t.open.iter_mut().for_each(|s| flip(&mut s.visits));
        t.closed.iter_mut().for_each(flip);
        Ok(t)
    }

    /// The oriented resolution of crossing `c`.
    pub fn smooth(&self, c: usize) -> Result<Tangle> {
        self.check_crossing(c)?;
        let [a, b] = self.locate(c);
        let n_open = self.open.len();
        let mut open: Vec<OpenStrand> = Vec::new();
        let mut closed: Vec<Vec<Visit>> = Vec::new();
        let cat = |parts: &[&[Visit]]| parts.concat();
        if a.strand == b.strand {
            let s = self.strand(a.strand);
            let (p1, p2) = (a.pos, b.pos);
            let outer = cat(&[&s[..p1], &s[p2 + 1..]]);
            closed.push(s[p1 + 1..p2].to_vec());
            if a.strand < n_open {
                let o = &self.open[a.strand];
                open.push(OpenStrand { tail: o.tail, head: o.head, visits: outer });
            } else {
                closed.push(outer);
            }
        } else {
            let (s1, s2) = (self.strand(a.strand), self.strand(b.strand));
            let (p1, p2) = (a.pos, b.pos);
            match (a.strand < n_open, b.strand < n_open) {
                (true, true) => {
                    let (o1, o2) = (&self.open[a.strand], &self.open[b.strand]);
                    open.push(OpenStrand { tail: o1.tail, head: o2.head, visits: cat(&[&s1[..p1], &s2[p2 + 1..]]) });
                    open.push(OpenStrand { tail: o2.tail, head: o1.head, visits: cat(&[&s2[..p2], &s1[p1 + 1..]]) });
                }
                (true, false) => {
                    let o1 = &self.open[a.strand];
                    let visits = cat(&[&s1[..p1], &s2[p2 + 1..], &s2[..p2], &s1[p1 + 1..]]);
                    open.push(OpenStrand { tail: o1.tail, head: o1.head, visits });
                }
                (false, true) => {
                    let o2 = &self.open[b.strand];
                    let visits = cat(&[&s2[..p2], &s1[p1 + 1..], &s1[..p1], &s2[p2 + 1..]]);
                    open.push(OpenStrand { tail: o2.tail, head: o2.head, visits });
                }
                (false, false) => {
                    closed.push(cat(&[&s1[..p1], &s2[p2 + 1..], &s2[..p2], &s1[p1 + 1..]]));
                }
            }
        }
        let touched = [a.strand, b.strand];
        let mut t = Tangle {
            source: self.source.clone(),
            target: self.target.clone(),
            open: self
                .open
                .iter()
                .enumerate()
                .filter(|(i, _)| !touched.contains(i))
                .map(|(_, s)| s.clone())
                .chain(open)
                .collect(),
            closed: self
                .closed
                .iter()
                .enumerate()
                .filter(|(i, _)| !touched.contains(&(i + n_open)))
                .map(|(_, s)| s.clone())
                .chain(closed)
                .collect(),
            free_loops: self.free_loops,
            signs: self.signs.clone(),
        };
        t.signs[c] = 0;
        t.normalize();
        Ok(t)
    }

    /// Canonical presentation: empty closed strands become free loops, open
    /// strands are ordered by the cyclic position of their tails, and crossings
    /// are renumbered in order of first visit.
    pub fn normalize(&mut self) {
        let before = self.closed.len();
        self.closed.retain(|c| !c.is_empty());
        self.free_loops += before - self.closed.len();
        let (m, n) = (self.source.len(), self.target.len());
        self.open.sort_by_key(|s| Matching::cyclic_index_of(m, n, s.tail));
        let mut relabel = vec![usize::MAX; self.signs.len()];
        let mut signs = Vec::new();
        for s in 0..self.strand_count() {
            for v in self.strand(s) {
                if relabel[v.crossing] == usize::MAX {
                    relabel[v.crossing] = signs.len();
                    signs.push(self.signs[v.crossing]);
                }
            }
        }
        let apply = |vs: &mut Vec<Visit>| vs.iter_mut().for_each(|v| v.crossing = relabel[v.crossing]);
        self.open.iter_mut().for_each(|s| apply(&mut s.visits));
        self.closed.iter_mut().for_each(apply);
        self.signs = signs;
    }

    /// The first crossing, in walking order, whose first visit is on the under-strand.
    pub fn first_ascending(&self) -> Option<usize> {
        let mut seen = vec![false; self.signs.len()];
        for s in self.walk() {
            for v in s {
                if !seen[v.crossing] {
                    if !v.over {
                        return Some(v.crossing);
                    }
                    seen[v.crossing] = true;
                }
            }
        }
        None
    }

    /// Sum of the signs of crossings whose two visits lie on the same strand.
    pub fn self_writhe(&self) -> i32 {
        let mut owner = vec![usize::MAX; self.signs.len()];
        let mut total = 0;
        for (i, s) in self.walk().enumerate() {
            for v in s {
                if owner[v.crossing] == i {
                    total += self.signs[v.crossing] as i32;
                }
                owner[v.crossing] = i;
            }
        }
        total
    }

    /// Join each top point to the bottom point below it around the right side.
    pub fn closure(&self) -> Result<Tangle> {
        if self.source != self.target {
            return Err(SkeinError::NotEndomorphism { bottom: self.source.to_string(), top: self.target.to_string() });
        }
        let next_tail = |head: Endpoint| match head {
            Endpoint::Target(j) => Endpoint::Source(j),
            Endpoint::Source(j) => Endpoint::Target(j),
        };
        let by_tail: BTreeMap<Endpoint, usize> = self.open.iter().enumerate().map(|(i, s)| (s.tail, i)).collect();
        let mut used = vec![false; self.open.len()];
        let mut closed = Vec::new();
        let mut empty_loops = 0;
        for start in 0..self.open.len() {
            if used[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut i = start;
            while !used[i] {
                used[i] = true;
                comp.extend_from_slice(&self.open[i].visits);
                i = by_tail[&next_tail(self.open[i].head)];
            }
            if comp.is_empty() {
                empty_loops += 1;
            } else {
                closed.push(comp);
            }
        }
        closed.extend(self.closed.iter().cloned());
        let mut t = Tangle {
            source: ObjectWord::empty(),
            target: ObjectWord::empty(),
            open: Vec::new(),
            closed,
            free_loops: self.free_loops + empty_loops,
            signs: self.signs.clone(),
        };
        t.normalize();
        Ok(t)
    }

    /// PD code of a closed diagram; arcs are numbered from 1 along each component,
/// arc `k` entering the `k`-th visit.
    pub fn to_pd(&self) -> Result<PdDiagram> {
        if !self.open.is_empty() {
            return Err(SkeinError::InvalidDiagram("PD codes describe closed diagrams only".into()));
        }
        let mut slots: Vec<[usize; 4]> = vec![[0; 4]; self.signs.len()];
        let mut next_arc = 1;
        for comp in &self.closed {
            let first = next_arc;
            let k = comp.len();
            for (i, v) in comp.iter().enumerate() {
                let incoming = first + i;
                let outgoing = first + (i + 1) % k;
                let s = &mut slots[v.crossing];
                let positive = self.signs[v.crossing] > 0;
                if v.over {
                    let (inn, out) = if positive { (3, 1) } else { (1, 3) };
                    s[inn] = incoming;
                    s[out] = outgoing;
                } else {
                    s[0] = incoming;
                    s[2] = outgoing;
                }
            }
            next_arc += k;
        }
        let crossings = slots
            .into_iter()
            .zip(&self.signs)
            .map(|(slots, s)| PdCrossing { sign: if *s > 0 { Sign::Pos } else { Sign::Neg }, slots })
            .collect();
        Ok(PdDiagram { crossings, loops: self.free_loops })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::sliced::Layer;
    use Orientation::{Down as D, Up as U};

    fn w(s: &str) -> ObjectWord {
        s.parse().unwrap()
    }

    fn one(word: &str, gen: Generator) -> SlicedDiagram {
        SlicedDiagram::new(w(word), vec![Layer { offset: 0, gen }]).unwrap()
    }

    #[test]
    fn positive_crossing_on_up_strands() {
        let t = Tangle::from_sliced(&one("uu", Generator::Cross(Sign::Pos, U, U)));
        assert_eq!(t.open.len(), 2);
        // left strand goes to the right and passes over
        assert_eq!(t.open[0].tail, Endpoint::Source(0));
        assert_eq!(t.open[0].head, Endpoint::Target(1));
        assert!(t.open[0].visits[0].over);
        assert_eq!(t.first_ascending(), None);
        let n = Tangle::from_sliced(&one("uu", Generator::Cross(Sign::Neg, U, U)));
        assert_eq!(n.first_ascending(), Some(0));
        assert_eq!(t.switch(0).unwrap(), n);
    }

    #[test]
    fn mixed_orientation_crossing() {
        // on ↑↓ a positive crossing puts the down strand on top
        let t = Tangle::from_sliced(&one("ud", Generator::Cross(Sign::Pos, U, D)));
        let down = t.open.iter().find(|s| s.tail == Endpoint::Target(0)).unwrap();
        assert!(down.visits[0].over);
    }

    #[test]
    fn cap_cup_closure_is_one_loop() {
        let d = SlicedDiagram::new(
            w("ud"),
            vec![Layer { offset: 0, gen: Generator::Cap(U, D) }, Layer { offset: 0, gen: Generator::Cup(U, D) }],
        )
        .unwrap();
        let t = Tangle::from_sliced(&d);
        assert_eq!(t.open.len(), 2);
        let c = t.closure().unwrap();
        // bottom 0 -> cap -> bottom 1 -> top 1 -> cup -> top 0 -> bottom 0
        assert_eq!((c.closed.len(), c.free_loops), (0, 1));
        let id = Tangle::from_sliced(&SlicedDiagram::identity(&w("udu")));
        assert_eq!(id.closure().unwrap().free_loops, 3);
    }

    #[test]
    fn closure_of_positive_crossing() {
        let c = Tangle::from_sliced(&one("uu", Generator::Cross(Sign::Pos, U, U))).closure().unwrap();
        assert_eq!((c.closed.len(), c.free_loops, c.crossing_count()), (1, 0, 1));
        assert_eq!(c.self_writhe(), 1);
        let s = c.smooth(0).unwrap();
        assert_eq!((s.closed.len(), s.free_loops, s.crossing_count()), (0, 2, 0));
    }

    #[test]
    fn pd_round_trip() {
        let c = Tangle::from_sliced(&one("uu", Generator::Cross(Sign::Pos, U, U))).closure().unwrap();
        let pd = c.to_pd().unwrap();
        let back = Tangle::from_pd(&pd).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn smoothing_two_open_strands() {
        let t = Tangle::from_sliced(&one("uu", Generator::Cross(Sign::Pos, U, U)));
        let s = t.smooth(0).unwrap();
        assert!(s.matching().is_identity());
        assert_eq!(s.crossing_count(), 0);
        assert!(t.smooth(3).is_err());
    }
}
