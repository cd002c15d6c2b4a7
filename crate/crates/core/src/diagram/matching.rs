use std::fmt;

use super::word::{ObjectWord, Orientation};
use crate::error::{Result, SkeinError};

/// A boundary point of a morphism `source -> target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Source(usize),
    Target(usize),
}

impl Endpoint {
    /// Signed 1-indexed coordinate: negative on the source, positive on the target.
    pub fn signed(self) -> i64 {
        match self {
            Endpoint::Source(i) => -(i as i64 + 1),
            Endpoint::Target(j) => j as i64 + 1,
        }
    }

    pub fn from_signed(x: i64) -> Option<Self> {
        match x {
            x if x < 0 => Some(Endpoint::Source((-x - 1) as usize)),
            x if x > 0 => Some(Endpoint::Target((x - 1) as usize)),
            _ => None,
        }
    }
}

/// A standard basis label of `Hom(source, target)`: a perfect matching of the
/// boundary points in which every strand runs from a tail (source ↑ or target ↓)
/// to a head (target ↑ or source ↓).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    source: ObjectWord,
    target: ObjectWord,
    partner: Vec<usize>,
}

impl Matching {
    fn width(&self) -> usize {
        self.source.len() + self.target.len()
    }

    fn global(&self, e: Endpoint) -> usize {
        match e {
            Endpoint::Source(i) => i,
            Endpoint::Target(j) => self.source.len() + j,
        }
    }

    fn endpoint(&self, g: usize) -> Endpoint {
        let m = self.source.len();
        if g < m {
            Endpoint::Source(g)
        } else {
            Endpoint::Target(g - m)
        }
    }

    pub fn source(&self) -> &ObjectWord {
        &self.source
    }

    pub fn target(&self) -> &ObjectWord {
        &self.target
    }

    pub fn is_tail_of(source: &ObjectWord, target: &ObjectWord, e: Endpoint) -> bool {
        match e {
            Endpoint::Source(i) => source[i] == Orientation::Up,
            Endpoint::Target(j) => target[j] == Orientation::Down,
        }
    }

    pub fn is_tail(&self, e: Endpoint) -> bool {
        Self::is_tail_of(&self.source, &self.target, e)
    }

    /// Position in the boundary circle: source left to right, then target right to left.
    pub fn cyclic_index_of(source_len: usize, target_len: usize, e: Endpoint) -> usize {
        match e {
            Endpoint::Source(i) => i,
            Endpoint::Target(j) => source_len + (target_len - 1 - j),
        }
    }

    pub fn cyclic_index(&self, e: Endpoint) -> usize {
        Self::cyclic_index_of(self.source.len(), self.target.len(), e)
    }

    /// Build from `(tail, head)` strands, validating orientations and bijectivity.
    pub fn from_strands(
        source: ObjectWord,
        target: ObjectWord,
        strands: &[(Endpoint, Endpoint)],
    ) -> Result<Self> {
        let m = source.len();
        let total = m + target.len();
        let mut partner = vec![usize::MAX; total];
        let g = |e: Endpoint| match e {
            Endpoint::Source(i) if i < m => Some(i),
            Endpoint::Target(j) if j < total - m => Some(m + j),
            _ => None,
        };
        for &(tail, head) in strands {
            let bad = || SkeinError::InvalidDiagram(format!("bad strand {tail:?} -> {head:?}"));
            let (a, b) = (g(tail).ok_or_else(bad)?, g(head).ok_or_else(bad)?);
            if !Self::is_tail_of(&source, &target, tail) || Self::is_tail_of(&source, &target, head) {
                return Err(bad());
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(bad());
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(SkeinError::InvalidDiagram("matching leaves boundary points unpaired".into()));
        }
        Ok(Matching { source, target, partner })
    }

    pub fn partner(&self, e: Endpoint) -> Endpoint {
        self.endpoint(self.partner[self.global(e)])
    }

    /// `(tail, head)` pairs ordered by the cyclic index of the tail.
    pub fn strands(&self) -> Vec<(Endpoint, Endpoint)> {
        let mut out: Vec<_> = (0..self.width())
            .map(|g| self.endpoint(g))
            .filter(|e| self.is_tail(*e))
            .map(|e| (e, self.partner(e)))
            .collect();
        out.sort_by_key(|(t, _)| self.cyclic_index(*t));
        out
    }

    /// Number of interleaving chord pairs, the length `ℓ` of the basis element.
    pub fn crossing_number(&self) -> usize {
        let chords: Vec<(usize, usize)> = self
            .strands()
            .iter()
            .map(|(a, b)| {
                let (x, y) = (self.cyclic_index(*a), self.cyclic_index(*b));
                (x.min(y), x.max(y))
            })
            .collect();
        let mut count = 0;
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && (0..self.source.len()).all(|i| self.partner(Endpoint::Source(i)) == Endpoint::Target(i))
    }

    pub fn identity(word: &ObjectWord) -> Self {
        let strands: Vec<_> = (0..word.len())
            .map(|i| match word[i] {
                Orientation::Up => (Endpoint::Source(i), Endpoint::Target(i)),
                Orientation::Down => (Endpoint::Target(i), Endpoint::Source(i)),
            })
            .collect();
        Matching::from_strands(word.clone(), word.clone(), &strands).expect("identity matching")
    }

    /// The same matching read upside down, as an element of `Hom(target, source)`.
    pub fn reversed(&self) -> Matching {
        let swap = |e: Endpoint| match e {
            Endpoint::Source(i) => Endpoint::Target(i),
            Endpoint::Target(j) => Endpoint::Source(j),
        };
        let strands: Vec<_> = self.strands().iter().map(|(t, h)| (swap(*h), swap(*t))).collect();
        Matching::from_strands(self.target.clone(), self.source.clone(), &strands).expect("reversed matching")
    }

    /// Sorted signed pairs `[tail, head]`.
    pub fn signed_pairs(&self) -> Vec<[i64; 2]> {
        let mut v: Vec<[i64; 2]> = self.strands().iter().map(|(t, h)| [t.signed(), h.signed()]).collect();
        v.sort();
        v
    }

    pub fn from_signed_pairs(source: ObjectWord, target: ObjectWord, pairs: &[[i64; 2]]) -> Result<Self> {
        let strands = pairs
            .iter()
            .map(|[t, h]| {
                let e = |x: i64| Endpoint::from_signed(x).ok_or_else(|| SkeinError::InvalidDiagram("coordinate 0".into()));
                Ok((e(*t)?, e(*h)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Matching::from_strands(source, target, &strands)
    }

    /// Position key in the standard basis order: length first, then the partner array.
    pub fn basis_key(&self) -> (usize, Vec<usize>) {
        (self.crossing_number(), self.partner.clone())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.signed_pairs().iter().map(|[t, h]| format!("{t}>{h}")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All matchings of `Hom(a, b)`, sorted by crossing number then by the partner array.
pub fn enumerate_matchings(a: &ObjectWord, b: &ObjectWord) -> Vec<Matching> {
    if !a.balanced_with(b) {
        return Vec::new();
    }
    let mut tails = Vec::new();
    let mut heads = Vec::new();
    for i in 0..a.len() {
        let e = Endpoint::Source(i);
        if Matching::is_tail_of(a, b, e) { tails.push(e) } else { heads.push(e) }
    }
    for j in 0..b.len() {
        let e = Endpoint::Target(j);
        if Matching::is_tail_of(a, b, e) { tails.push(e) } else { heads.push(e) }
    }
    let mut out = Vec::new();
    let mut used = vec![false; heads.len()];
    let mut cur = Vec::new();
    permute(&tails, &heads, &mut used, &mut cur, &mut |strands| {
        out.push(Matching::from_strands(a.clone(), b.clone(), strands).expect("valid by construction"));
    });
    out.sort_by_cached_key(|m| m.basis_key());
    out
}

type Strands = [(Endpoint, Endpoint)];

fn permute(
    tails: &[Endpoint],
    heads: &[Endpoint],
    used: &mut [bool],
    cur: &mut Vec<(Endpoint, Endpoint)>,
    emit: &mut dyn FnMut(&Strands),
) {
    if cur.len() == tails.len() {
        emit(cur);
        return;
    }
    let t = tails[cur.len()];
    for k in 0..heads.len() {
        if !used[k] {
            used[k] = true;
            cur.push((t, heads[k]));
            permute(tails, heads, used, cur, emit);
            cur.pop();
            used[k] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ObjectWord {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_matchings(&w("uud"), &w("uud")).len(), 6);
        assert_eq!(enumerate_matchings(&w("uuud"), &w("uuud")).len(), 24);
        assert_eq!(enumerate_matchings(&w("uudd"), &w("uudd")).len(), 24);
        assert!(enumerate_matchings(&w("u"), &w("d")).is_empty());
        assert_eq!(enumerate_matchings(&w("ud"), &ObjectWord::empty()).len(), 1);
    }

    #[test]
    fn crossing_numbers() {
        let ms = enumerate_matchings(&w("uu"), &w("uu"));
        assert!(ms[0].is_identity());
        assert_eq!(ms[0].crossing_number(), 0);
        assert_eq!(ms[1].crossing_number(), 1);
        let ms = enumerate_matchings(&w("ud"), &w("ud"));
        let e = Matching::from_strands(
            w("ud"),
            w("ud"),
            &[(Endpoint::Source(0), Endpoint::Source(1)), (Endpoint::Target(1), Endpoint::Target(0))],
        )
        .unwrap();
        assert_eq!(e.crossing_number(), 0);
        assert!(ms.iter().all(|m| m.crossing_number() == 0));
    }

    #[test]
    fn signed_pairs_round_trip() {
        for m in enumerate_matchings(&w("uud"), &w("duu")) {
            let back = Matching::from_signed_pairs(w("uud"), w("duu"), &m.signed_pairs()).unwrap();
            assert_eq!(back, m);
            assert_eq!(m.reversed().reversed(), m);
        }
    }

    #[test]
    fn rejects_bad_orientation() {
        let r = Matching::from_strands(w("u"), w("u"), &[(Endpoint::Target(0), Endpoint::Source(0))]);
        assert!(r.is_err());
    }
}
