use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use super::{build_ek, subscript, valid_index, xi, AlgebraWord, Letter};
use crate::canonical::CanonicalBasis;
use crate::diagram::{enumerate_matchings, positive_lift, Matching, ObjectWord, SlicedDiagram};
use crate::engine::Engine;
use crate::error::{parse_err, Result, SkeinError};
use crate::morphism::{scalar_to_json, Morphism};
use crate::tangle::Tangle;
use crate::{QLaurent, Scalar};

/// A letter of a labelling word: a generator or a whole `e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    H(i32),
    Hinv(i32),
    E,
    Ek(usize),
}

/// Words over [`Token`]. Text form: `H_{-1} e_2 H_1^{-1}`, with `s_i` read as
/// `H_i`, `E` as `e`, and `1` for the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenWord(pub Vec<Token>);

impl TokenWord {
    pub fn parse(s: &str) -> Result<TokenWord> {
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut out = Vec::new();
        let bad = |msg: String| parse_err(1, msg);
        let read_index = |i: &mut usize| -> Result<Option<String>> {
            if chars.get(*i) != Some(&'_') {
                return Ok(None);
            }
            *i += 1;
            let mut text = String::new();
            if chars.get(*i) == Some(&'{') {
                *i += 1;
                while let Some(&c) = chars.get(*i) {
                    *i += 1;
                    if c == '}' {
                        return Ok(Some(text));
                    }
                    text.push(c);
                }
                return Err(parse_err(1, format!("unclosed subscript in {s:?}")));
            }
            while let Some(&c) = chars.get(*i) {
                if c.is_ascii_digit() || (c == '-' && text.is_empty()) {
                    text.push(c);
                    *i += 1;
                } else {
                    break;
                }
            }
            Ok(Some(text))
        };
        while i < chars.len() {
            let c = chars[i];
            i += 1;
            if c.is_whitespace() || c == '·' || c == '*' || c == '1' {
                continue;
            }
            let sub = read_index(&mut i)?;
            let inverse = if chars.get(i) == Some(&'^') {
                let rest: String = chars[i..].iter().take(5).collect();
                let len = if rest.starts_with("^{-1}") {
                    5
                } else if rest.starts_with("^-1") {
                    3
                } else {
                    return Err(bad(format!("only the exponent -1 is allowed in {s:?}")));
                };
                i += len;
                true
            } else {
                false
            };
            let num = |t: &Option<String>| -> Result<i64> {
                let t = t.as_ref().ok_or_else(|| bad(format!("{c} needs a subscript in {s:?}")))?;
                t.trim().parse::<i64>().map_err(|_| bad(format!("bad subscript {t:?} in {s:?}")))
            };
            let tok = match c {
                'H' | 's' => {
                    let k = num(&sub)? as i32;
                    if k == 0 {
                        return Err(bad(format!("H_0 in {s:?}")));
                    }
                    if inverse {
                        Token::Hinv(k)
                    } else {
                        Token::H(k)
                    }
                }
                'e' | 'E' if !inverse => match sub {
                    None => Token::E,
                    Some(_) => match num(&sub)? {
                        k if k < 0 => return Err(bad(format!("e_{k} in {s:?}"))),
                        0 => continue,
                        1 => Token::E,
                        k => Token::Ek(k as usize),
                    },
                },
                _ => return Err(bad(format!("unexpected {c:?} in {s:?}"))),
            };
            out.push(tok);
        }
        Ok(TokenWord(out))
    }

    pub fn to_word(&self, m: usize, n: usize) -> Result<AlgebraWord> {
        let mut letters = Vec::new();
        for t in &self.0 {
            match *t {
                Token::H(i) => letters.push(Letter::H(i)),
                Token::Hinv(i) => letters.push(Letter::Hinv(i)),
                Token::E => letters.push(Letter::E),
                Token::Ek(k) => letters.extend(build_ek(m, n, k)?.word.letters),
            }
        }
        AlgebraWord::new(m, n, letters)
    }

    /// Label form, `s_{-1} e s_1`.
    pub fn label(&self) -> String {
        self.render("s")
    }

    fn render(&self, gen: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| match t {
                Token::H(i) => format!("{gen}_{}", subscript(*i)),
                Token::Hinv(i) => format!("{gen}_{}^{{-1}}", subscript(*i)),
                Token::E => "e".into(),
                Token::Ek(k) => format!("e_{}", subscript(*k as i32)),
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for TokenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("H"))
    }
}

/// The matching underlying `Ξ(w)`.
pub fn matching_of(w: &AlgebraWord) -> Result<Matching> {
    Ok(Tangle::from_sliced(&xi(w)?).matching())
}

fn is_reduced(t: &Tangle) -> bool {
    t.closed.is_empty() && t.free_loops == 0 && t.crossing_count() == t.matching().crossing_number()
}

/// The diagram drawn for a token; `e_k` is drawn as the crossingless
/// diagram it equals.
fn token_diagram(e: &mut Engine, m: usize, n: usize, t: Token) -> Result<SlicedDiagram> {
    let w = TokenWord(vec![t]).to_word(m, n)?;
    if !matches!(t, Token::Ek(_)) {
        return xi(&w);
    }
    let mt = matching_of(&w)?;
    if e.word_morphism(&w)? != Morphism::basis(&mt) || mt.crossing_number() != 0 {
        return Err(SkeinError::Invariant(format!("{w} is not a crossingless basis element")));
    }
    Ok(positive_lift(&mt))
}

/// For every matching of `End(↑^m ↓^n)`, a shortest word in `H_i`, `e`, `e_k`
/// whose image is exactly its positive lift. Words are visited by length,
/// then lexicographically in the order `H_{-1}, H_{-2}, …, H_1, H_2, …, e, e_2, …`.
pub fn label_words(e: &mut Engine, m: usize, n: usize) -> Result<BTreeMap<Matching, TokenWord>> {
    let obj = ObjectWord::walled(m, n);
    let wanted = enumerate_matchings(&obj, &obj).len();
    let mut tokens: Vec<Token> = (1..m as i32).map(|i| Token::H(-i)).collect();
    tokens.extend((1..n as i32).map(Token::H));
    if m >= 1 && n >= 1 {
        tokens.push(Token::E);
        tokens.extend((2..=m.min(n)).map(Token::Ek));
    }
    debug_assert!(tokens.iter().all(|t| !matches!(t, Token::H(i) if !valid_index(m, n, *i))));
    let pieces: Vec<SlicedDiagram> = tokens.iter().map(|&t| token_diagram(e, m, n, t)).collect::<Result<_>>()?;
    let mut labels = BTreeMap::new();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([Vec::<usize>::new()]);
    while let Some(w) = queue.pop_front() {
        let d = if w.is_empty() {
            SlicedDiagram::identity(&obj)
        } else {
            SlicedDiagram::compose_all(&w.iter().map(|&i| pieces[i].clone()).collect::<Vec<_>>())?
        };
        let t = Tangle::from_sliced(&d);
        if !is_reduced(&t) || !seen.insert(t.clone()) {
            continue;
        }
        let mt = t.matching();
        if !labels.contains_key(&mt) && e.reduce(&t) == Morphism::basis(&mt) {
            labels.insert(mt, TokenWord(w.iter().map(|&i| tokens[i]).collect()));
            if labels.len() == wanted {
                break;
            }
        }
        for i in 0..tokens.len() {
            let mut next = w.clone();
            next.push(i);
            queue.push_back(next);
        }
    }
    Ok(labels)
}

/// The canonical basis of `End(↑^m ↓^n)` with algebra labels.
#[derive(Clone, Debug)]
pub struct QwbCanonical {
    pub m: usize,
    pub n: usize,
    pub basis: CanonicalBasis,
    /// `labels[i]` names `basis.order[i]`.
    pub labels: Vec<TokenWord>,
}

fn coeff_term(c: &QLaurent, w: &TokenWord) -> String {
    let word = if w.0.is_empty() { String::new() } else { w.to_string() };
    crate::render::coeff_text(c, &word)
}

impl QwbCanonical {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels[i].label()
    }

    /// Index of the element named by a word such as `s_{-1} e s_{-1}`.
    pub fn index_of_word(&self, w: &AlgebraWord) -> Result<usize> {
        let m = matching_of(w)?;
        self.basis.index_of(&m).ok_or_else(|| SkeinError::InvalidDiagram(format!("{w} names no basis element")))
    }

    pub fn index_of_label(&self, label: &str) -> Result<usize> {
        self.index_of_word(&TokenWord::parse(label)?.to_word(self.m, self.n)?)
    }

    pub fn element(&self, i: usize) -> &Morphism {
        &self.basis.elements[i]
    }

    /// `C_{label} = …` over the labelled standard basis, longest terms first.
    pub fn element_text(&self, j: usize) -> String {
        let mut rows: Vec<usize> = (0..self.dimension()).filter(|&i| !self.basis.transition[i][j].is_zero()).collect();
        rows.sort_by_key(|&i| (std::cmp::Reverse(self.basis.order[i].crossing_number()), i));
        let terms: Vec<String> = rows.iter().map(|&i| coeff_term(&self.basis.transition[i][j], &self.labels[i])).collect();
        format!("C_{{{}}} = {}", self.label(j), terms.join(" + "))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("canonical basis of qWB({},{}): {} elements\n", self.m, self.n, self.dimension());
        for j in 0..self.dimension() {
            s.push_str(&self.element_text(j));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let elements: Vec<Value> = (0..self.dimension())
            .map(|j| {
                let terms: Vec<Value> = (0..self.dimension())
                    .filter(|&i| !self.basis.transition[i][j].is_zero())
                    .map(|i| {
                        json!({
                            "label": self.label(i),
                            "word": self.labels[i].to_string(),
                            "coeff": scalar_to_json(&Scalar::from_qpoly(&self.basis.transition[i][j])),
                        })
                    })
                    .collect();
                json!({
                    "label": self.label(j),
                    "matching": self.basis.order[j].signed_pairs(),
                    "length": self.basis.order[j].crossing_number(),
                    "terms": terms,
                })
            })
            .collect();
        json!({
            "m": self.m,
            "n": self.n,
            "dimension": self.dimension(),
            "quadratic_relation": "(H_i - q)(H_i + q^-1) = 0",
            "elements": elements,
        })
    }
}

impl Engine {
    pub fn qwb_canonical(&mut self, m: usize, n: usize) -> Result<QwbCanonical> {
        if m == 0 || n == 0 {
            return Err(SkeinError::Index(format!("qWB({m},{n}) needs m, n ≥ 1")));
        }
        let obj = ObjectWord::walled(m, n);
        let basis = self.canonical_basis(&obj, &obj)?;
        let found = label_words(self, m, n)?;
        let labels = basis
            .order
            .iter()
            .map(|mt| {
                found.get(mt).cloned().ok_or_else(|| SkeinError::Invariant(format!("no word labels {mt}")))
            })
            .collect::<Result<_>>()?;
        Ok(QwbCanonical { m, n, basis, labels })
    }
}
