use super::matching::{Endpoint, Matching};
use super::sliced::{Generator, Layer, Sign, SlicedDiagram};
use super::word::{ObjectWord, Orientation};

/// Arcs with both ends in `side`, as pairs of indices `(left, right)`, shortest first.
fn same_side_arcs(m: &Matching, on_source: bool) -> Vec<(usize, usize)> {
    let mut arcs: Vec<(usize, usize)> = m
        .strands()
        .into_iter()
        .filter_map(|(t, h)| match (t, h, on_source) {
            (Endpoint::Source(i), Endpoint::Source(k), true) => Some((i.min(k), i.max(k))),
            (Endpoint::Target(i), Endpoint::Target(k), false) => Some((i.min(k), i.max(k))),
            _ => None,
        })
        .collect();
    arcs.sort_by_key(|&(l, r)| (r - l, l));
    arcs
}

/// Close off the given arcs of `word` one at a time: the left end of each arc
/// moves right across the strands in between, then the arc is capped. Returns
/// the layers (with the interface word above each) and the surviving labels.
fn close_arcs(
    word: &ObjectWord,
    arcs: &[(usize, usize)],
) -> (Vec<(ObjectWord, Layer)>, Vec<usize>, ObjectWord) {
    let mut labels: Vec<usize> = (0..word.len()).collect();
    let mut w = word.0.clone();
    let mut steps = Vec::new();
    for &(l, r) in arcs {
        let mut pl = labels.iter().position(|x| *x == l).unwrap();
        let pr = labels.iter().position(|x| *x == r).unwrap();
        while pl + 1 < pr {
            let gen = Generator::Cross(Sign::Pos, w[pl], w[pl + 1]);
            steps.push((ObjectWord(w.clone()), Layer { offset: pl, gen }));
            w.swap(pl, pl + 1);
            labels.swap(pl, pl + 1);
            pl += 1;
        }
        steps.push((ObjectWord(w.clone()), Layer { offset: pl, gen: Generator::Cap(w[pl], w[pl + 1]) }));
        w.drain(pl..pl + 2);
        labels.drain(pl..pl + 2);
    }
    (steps, labels, ObjectWord(w))
}

/// The reduced lift of `m` with every crossing positive.
///
/// Source arcs are capped first (shortest span first), then the through
/// strands are sorted by adjacent transpositions, then target arcs are opened
/// by the mirror of the first phase.
pub fn positive_lift(m: &Matching) -> SlicedDiagram {
    let (lower, lower_labels, mid) = close_arcs(m.source(), &same_side_arcs(m, true));
    let (upper, upper_labels, mid_top) = close_arcs(m.target(), &same_side_arcs(m, false));
    let mut layers: Vec<Layer> = lower.into_iter().map(|(_, l)| l).collect();

    // rank of each surviving source point in the target order of the through strands
    let mut keys: Vec<usize> = lower_labels
        .iter()
        .map(|&i| match m.partner(Endpoint::Source(i)) {
            Endpoint::Target(j) => upper_labels.iter().position(|x| *x == j).expect("through strand"),
            Endpoint::Source(_) => unreachable!("source arcs were capped"),
        })
        .collect();
    let mut w = mid.0.clone();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for p in 0..keys.len().saturating_sub(1) {
            if keys[p] > keys[p + 1] {
                layers.push(Layer { offset: p, gen: Generator::Cross(Sign::Pos, w[p], w[p + 1]) });
                keys.swap(p, p + 1);
                w.swap(p, p + 1);
                swapped = true;
            }
        }
    }
    debug_assert_eq!(ObjectWord(w), mid_top);

    for (above, l) in upper.into_iter().rev() {
        let p = l.offset;
        let gen = match l.gen {
            Generator::Cap(..) => Generator::Cup(above[p], above[p + 1]),
            Generator::Cross(..) => Generator::Cross(Sign::Pos, above[p + 1], above[p]),
            Generator::Cup(..) => unreachable!(),
        };
        layers.push(Layer { offset: p, gen });
    }
    let d = SlicedDiagram::new(m.source().clone(), layers).expect("lift is well formed");
    debug_assert_eq!(d.top(), m.target());
    d
}

/// The cap `↑↓ -> ∅` or `↓↑ -> ∅`.
pub fn cap(a: Orientation) -> SlicedDiagram {
    let w = ObjectWord(vec![a, a.flip()]);
    SlicedDiagram::new(w, vec![Layer { offset: 0, gen: Generator::Cap(a, a.flip()) }]).unwrap()
}

/// The cup `∅ -> ↑↓` or `∅ -> ↓↑`.
pub fn cup(a: Orientation) -> SlicedDiagram {
    SlicedDiagram::new(ObjectWord::empty(), vec![Layer { offset: 0, gen: Generator::Cup(a, a.flip()) }]).unwrap()
}

/// A single crossing on the two-letter word `a b`.
pub fn crossing(sign: Sign, a: Orientation, b: Orientation) -> SlicedDiagram {
    SlicedDiagram::new(ObjectWord(vec![a, b]), vec![Layer { offset: 0, gen: Generator::Cross(sign, a, b) }]).unwrap()
}
