use std::fmt;
use std::str::FromStr;

use super::word::{ObjectWord, Orientation};
use crate::error::{parse_err, Result, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A single generating morphism. The orientation pair is read left to right on
/// the wider boundary; for crossings that is the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Cap(Orientation, Orientation),
    Cup(Orientation, Orientation),
    Cross(Sign, Orientation, Orientation),
}

impl Generator {
    fn keyword(&self) -> &'static str {
        match self {
            Generator::Cap(..) => "cap",
            Generator::Cup(..) => "cup",
            Generator::Cross(Sign::Pos, ..) => "x+",
            Generator::Cross(Sign::Neg, ..) => "x-",
        }
    }

    fn pair(&self) -> (Orientation, Orientation) {
        match *self {
            Generator::Cap(a, b) | Generator::Cup(a, b) | Generator::Cross(_, a, b) => (a, b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layer {
    pub offset: usize,
    pub gen: Generator,
}

/// Apply one layer to the word below it.
pub fn apply_layer(word: &ObjectWord, layer: &Layer) -> Result<ObjectWord> {
    let p = layer.offset;
    let mut v = word.0.clone();
    let bad = |why: &str| SkeinError::InvalidDiagram(format!("{} at offset {p} on `{word}`: {why}", layer.gen.keyword()));
    match layer.gen {
        Generator::Cup(a, b) => {
            if a == b {
                return Err(bad("cup needs opposite orientations"));
            }
            if p > v.len() {
                return Err(bad("offset out of range"));
            }
            v.splice(p..p, [a, b]);
        }
        Generator::Cap(a, b) | Generator::Cross(_, a, b) => {
            if p + 2 > v.len() {
                return Err(bad("offset out of range"));
            }
            if (v[p], v[p + 1]) != (a, b) {
                return Err(bad("orientation mismatch"));
            }
            if let Generator::Cap(..) = layer.gen {
                if a == b {
                    return Err(bad("cap needs opposite orientations"));
                }
                v.drain(p..p + 2);
            } else {
                v.swap(p, p + 1);
            }
        }
    }
    Ok(ObjectWord(v))
}

/// A generic tangle diagram as a stack of one-generator layers, read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SlicedDiagram {
    bottom: ObjectWord,
    top: ObjectWord,
    layers: Vec<Layer>,
}

impl SlicedDiagram {
    pub fn new(bottom: ObjectWord, layers: Vec<Layer>) -> Result<Self> {
        let mut w = bottom.clone();
        for l in &layers {
            w = apply_layer(&w, l)?;
        }
        Ok(SlicedDiagram { bottom, top: w, layers })
    }

    pub fn identity(word: &ObjectWord) -> Self {
        SlicedDiagram { bottom: word.clone(), top: word.clone(), layers: Vec::new() }
    }

    pub fn bottom(&self) -> &ObjectWord {
        &self.bottom
    }

    pub fn top(&self) -> &ObjectWord {
        &self.top
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn crossing_count(&self) -> usize {
        self.layers.iter().filter(|l| matches!(l.gen, Generator::Cross(..))).count()
    }

    /// The words between consecutive layers, bottom first; `layers().len() + 1` entries.
    pub fn interfaces(&self) -> Vec<ObjectWord> {
        let mut out = vec![self.bottom.clone()];
        for l in &self.layers {
            let next = apply_layer(out.last().unwrap(), l).expect("validated on construction");
            out.push(next);
        }
        out
    }

    /// Swap every positive crossing with a negative one and vice versa.
    pub fn flip_crossings(&self) -> Self {
        let layers = self
            .layers
            .iter()
            .map(|l| match l.gen {
                Generator::Cross(s, a, b) => Layer { offset: l.offset, gen: Generator::Cross(s.flip(), a, b) },
                _ => *l,
            })
            .collect();
        SlicedDiagram { bottom: self.bottom.clone(), top: self.top.clone(), layers }
    }

    /// Vertical stacking: `upper ∘ lower`.
    pub fn compose(upper: &SlicedDiagram, lower: &SlicedDiagram) -> Result<Self> {
        if upper.bottom != lower.top {
            return Err(SkeinError::Compose { lower: lower.top.to_string(), upper: upper.bottom.to_string() });
        }
        let mut layers = lower.layers.clone();
        layers.extend_from_slice(&upper.layers);
        Ok(SlicedDiagram { bottom: lower.bottom.clone(), top: upper.top.clone(), layers })
    }

    /// Compose a list of diagrams, the first one on top.
    pub fn compose_all(parts: &[SlicedDiagram]) -> Result<Self> {
        let mut iter = parts.iter().rev();
        let mut acc = iter.next().cloned().ok_or_else(|| SkeinError::InvalidDiagram("empty composite".into()))?;
        for d in iter {
            acc = SlicedDiagram::compose(d, &acc)?;
        }
        Ok(acc)
    }

    /// Horizontal juxtaposition: `left`'s layers run first, then `right`'s beside `left.top`.
    pub fn tensor(left: &SlicedDiagram, right: &SlicedDiagram) -> Self {
        let shift = left.top.len();
        let mut layers = left.layers.clone();
        layers.extend(right.layers.iter().map(|l| Layer { offset: l.offset + shift, gen: l.gen }));
        SlicedDiagram { bottom: left.bottom.concat(&right.bottom), top: left.top.concat(&right.top), layers }
    }
}

fn word_text(w: &ObjectWord) -> String {
    if w.is_empty() {
        "-".into()
    } else {
        w.to_string()
    }
}

impl fmt::Display for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bottom: {}", word_text(&self.bottom))?;
        for l in &self.layers {
            let (a, b) = l.gen.pair();
            writeln!(f, "{} {}:{}{}", l.offset, l.gen.keyword(), a.letter(), b.letter())?;
        }
        writeln!(f, "top: {}", word_text(&self.top))
    }
}

impl FromStr for SlicedDiagram {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        let mut bottom = None;
        let mut top = None;
        let mut layers = Vec::new();
        let mut w = None::<ObjectWord>;
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let word_of = |rest: &str| -> Result<ObjectWord> {
                rest.trim().parse::<ObjectWord>().map_err(|_| parse_err(line_no, format!("bad word `{}`", rest.trim())))
            };
            if let Some(rest) = line.strip_prefix("bottom:") {
                let b = word_of(rest)?;
                w = Some(b.clone());
                bottom = Some(b);
                continue;
            }
            if let Some(rest) = line.strip_prefix("top:") {
                top = Some((line_no, word_of(rest)?));
                continue;
            }
            let cur = w.as_ref().ok_or_else(|| parse_err(line_no, "layer before `bottom:` header"))?;
            let (off, spec) = line.split_once(char::is_whitespace).ok_or_else(|| parse_err(line_no, "expected `<offset> <gen>:<oo>`"))?;
            let offset: usize = off.parse().map_err(|_| parse_err(line_no, format!("bad offset `{off}`")))?;
            let (kw, oo) = spec.trim().split_once(':').ok_or_else(|| parse_err(line_no, "expected `<gen>:<oo>`"))?;
            let mut letters = oo.chars().map(Orientation::from_letter);
            let (a, b) = match (letters.next().flatten(), letters.next().flatten(), letters.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(parse_err(line_no, format!("bad orientation pair `{oo}`"))),
            };
            let gen = match kw {
                "cap" => Generator::Cap(a, b),
                "cup" => Generator::Cup(a, b),
                "x+" => Generator::Cross(Sign::Pos, a, b),
                "x-" => Generator::Cross(Sign::Neg, a, b),
                _ => return Err(parse_err(line_no, format!("unknown generator `{kw}`"))),
            };
            let layer = Layer { offset, gen };
            w = Some(apply_layer(cur, &layer).map_err(|e| parse_err(line_no, e.to_string()))?);
            layers.push(layer);
        }
        let bottom = bottom.ok_or_else(|| parse_err(1, "missing `bottom:` header"))?;
        let d = SlicedDiagram::new(bottom, layers)?;
        if let Some((line_no, t)) = top {
            if t != d.top {
                return Err(parse_err(line_no, format!("declared top `{t}` but layers end at `{}`", d.top)));
            }
        }
        Ok(d)
    }
}
