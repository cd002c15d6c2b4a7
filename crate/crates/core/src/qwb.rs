//! The quantized walled Brauer algebra `qWB(m, n)` as words in `H_i^{±1}`
//! and `e`, realized in `End(↑^m ↓^n)`.
//!
//! Positions on each row are labelled `-m, …, -1, 1, …, n` from left to
//! right, so position `-k` is column `m - k` and position `j` is column
//! `m + j - 1`. A word `x y` is the composite `Ξ(x) ∘ Ξ(y)`: its first letter
//! is drawn on top.

use std::fmt;

use crate::check::Check;
use crate::diagram::{Generator, Layer, ObjectWord, Orientation, Sign, SlicedDiagram};
use crate::engine::Engine;
use crate::error::{Result, SkeinError};
use crate::homspace::identity;
use crate::morphism::Morphism;
use crate::Scalar;

mod golden;
mod labels;

pub use golden::{check_golden, check_table, GoldenCheck, GoldenReport, GOLDEN};
pub use labels::{label_words, matching_of, QwbCanonical, Token, TokenWord};

use Orientation::{Down as D, Up as U};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    H(i32),
    Hinv(i32),
    E,
}

impl Letter {
    pub fn bar(self) -> Letter {
        match self {
            Letter::H(i) => Letter::Hinv(i),
            Letter::Hinv(i) => Letter::H(i),
            Letter::E => Letter::E,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::H(i) => write!(f, "H_{}", subscript(*i)),
            Letter::Hinv(i) => write!(f, "H_{}^{{-1}}", subscript(*i)),
            Letter::E => f.write_str("e"),
        }
    }
}

pub(crate) fn subscript(i: i32) -> String {
    if (0..10).contains(&i) {
        i.to_string()
    } else {
        format!("{{{i}}}")
    }
}

/// Whether `H_i` is a generator of `qWB(m, n)`.
pub fn valid_index(m: usize, n: usize, i: i32) -> bool {
    (i < 0 && i.unsigned_abs() as usize <= m.saturating_sub(1)) || (i > 0 && i as usize <= n.saturating_sub(1))
}

fn check_letter(m: usize, n: usize, l: Letter) -> Result<()> {
    match l {
        Letter::H(i) | Letter::Hinv(i) if !valid_index(m, n, i) => {
            Err(SkeinError::Index(format!("H_{i} is not a generator of qWB({m},{n})")))
        }
        Letter::E if m == 0 || n == 0 => Err(SkeinError::Index(format!("e is not a generator of qWB({m},{n})"))),
        _ => Ok(()),
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraWord {
    pub m: usize,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl AlgebraWord {
    pub fn new(m: usize, n: usize, letters: Vec<Letter>) -> Result<Self> {
        for &l in &letters {
            check_letter(m, n, l)?;
        }
        Ok(AlgebraWord { m, n, letters })
    }

    pub fn unit(m: usize, n: usize) -> Self {
        AlgebraWord { m, n, letters: Vec::new() }
    }

    /// Parse letters such as `H_{-1} e H_1^{-1} e_2`; see [`TokenWord`].
    pub fn parse(m: usize, n: usize, s: &str) -> Result<Self> {
        TokenWord::parse(s)?.to_word(m, n)
    }

    pub fn object(&self) -> ObjectWord {
        ObjectWord::walled(self.m, self.n)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &AlgebraWord) -> Result<AlgebraWord> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(SkeinError::Index(format!(
                "cannot multiply words of qWB({},{}) and qWB({},{})",
                self.m, self.n, other.m, other.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(AlgebraWord { m: self.m, n: self.n, letters })
    }

    /// The algebraic bar map on a word: every `H_i` becomes `H_i^{-1}` and back.
    pub fn bar(&self) -> AlgebraWord {
        AlgebraWord { m: self.m, n: self.n, letters: self.letters.iter().map(|l| l.bar()).collect() }
    }
}

impl fmt::Display for AlgebraWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn letter_layers(m: usize, l: Letter) -> Vec<Layer> {
    let cross = |i: i32, sign: Sign| {
        if i < 0 {
            Layer { offset: m - i.unsigned_abs() as usize - 1, gen: Generator::Cross(sign, U, U) }
        } else {
            Layer { offset: m + i as usize - 1, gen: Generator::Cross(sign, D, D) }
        }
    };
    match l {
        Letter::H(i) => vec![cross(i, Sign::Pos)],
        Letter::Hinv(i) => vec![cross(i, Sign::Neg)],
        Letter::E => vec![
            Layer { offset: m - 1, gen: Generator::Cap(U, D) },
            Layer { offset: m - 1, gen: Generator::Cup(U, D) },
        ],
    }
}

/// The diagram `Ξ(w)`.
pub fn xi(w: &AlgebraWord) -> Result<SlicedDiagram> {
    for &l in &w.letters {
        check_letter(w.m, w.n, l)?;
    }
    let layers = w.letters.iter().rev().flat_map(|&l| letter_layers(w.m, l)).collect();
    SlicedDiagram::new(w.object(), layers)
}

/// A linear combination of words.
pub type Combination = Vec<(Scalar, AlgebraWord)>;

/// `e_k` together with a word realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EkElement {
    pub k: usize,
    pub word: AlgebraWord,
}

/// `H_l H_{l±1} ⋯ H_r` (or the inverses), stepping from `l` towards `r`.
pub fn run(l: i32, r: i32, inverse: bool) -> Vec<Letter> {
    let step = if l <= r { 1 } else { -1 };
    let mut out = Vec::new();
    let mut i = l;
    loop {
        out.push(if inverse { Letter::Hinv(i) } else { Letter::H(i) });
        if i == r {
            return out;
        }
        i += step;
    }
}

/// `e_0 = 1`, `e_1 = e`, `e_{k+1} = e H^-_{-1,-k} H^+_{1,k} e_k`.
pub fn build_ek(m: usize, n: usize, k: usize) -> Result<EkElement> {
    if k > m.min(n) {
        return Err(SkeinError::Index(format!("e_{k} needs k ≤ min({m},{n})")));
    }
    let mut letters = Vec::new();
    for j in 1..=k {
        // e_j = e H^-_{-1,-(j-1)} H^+_{1,j-1} e_{j-1}
        let mut prefix = vec![Letter::E];
        if j > 1 {
            let j = j as i32 - 1;
            prefix.extend(run(-1, -j, true));
            prefix.extend(run(1, j, false));
        }
        prefix.extend(letters);
        letters = prefix;
    }
    Ok(EkElement { k, word: AlgebraWord::new(m, n, letters)? })
}

impl Engine {
    pub fn word_morphism(&mut self, w: &AlgebraWord) -> Result<Morphism> {
        Ok(self.expand(&xi(w)?))
    }

    pub fn combination_morphism(&mut self, x: &[(Scalar, AlgebraWord)]) -> Result<Morphism> {
        let (m, n) = x.first().map(|(_, w)| (w.m, w.n)).unwrap_or((0, 0));
        let obj = ObjectWord::walled(m, n);
        let mut out = Morphism::zero(&obj, &obj);
        for (c, w) in x {
            out.add_scaled(&self.word_morphism(w)?, c);
        }
        Ok(out)
    }

    /// `Ξ(w1 · w2)` in the standard basis.
    pub fn alg_mul_expand(&mut self, w1: &AlgebraWord, w2: &AlgebraWord) -> Result<Morphism> {
        self.word_morphism(&w1.mul(w2)?)
    }

    /// The algebraic bar map `q ↦ q^-1, t ↦ t^-1, H_i ↦ H_i^-1, e ↦ e`, expanded.
    pub fn alg_bar(&mut self, x: &[(Scalar, AlgebraWord)]) -> Result<Morphism> {
        let barred: Combination = x.iter().map(|(c, w)| (c.bar(), w.bar())).collect();
        self.combination_morphism(&barred)
    }
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.concat()
}

struct Suite<'a> {
    e: &'a mut Engine,
    m: usize,
    n: usize,
    out: Vec<Check>,
}

impl Suite<'_> {
    fn expand(&mut self, letters: Vec<Letter>) -> Result<Morphism> {
        self.e.word_morphism(&AlgebraWord::new(self.m, self.n, letters)?)
    }

    fn eq(&mut self, name: String, lhs: Vec<Letter>, rhs: Morphism) -> Result<()> {
        let l = self.expand(lhs)?;
        self.out.push(Check::equal(name, &l, &rhs));
        Ok(())
    }

    fn same(&mut self, name: String, lhs: Vec<Letter>, rhs: Vec<Letter>) -> Result<()> {
        let r = self.expand(rhs)?;
        self.eq(name, lhs, r)
    }
}

/// Expand both sides of every defining relation and of the `e_k` identities
/// that make sense in `qWB(m, n)`.
pub fn relation_suite(e: &mut Engine, m: usize, n: usize) -> Result<Vec<Check>> {
    let obj = ObjectWord::walled(m, n);
    let one = identity(&obj);
    let delta = Scalar::delta();
    let tq = Scalar::t_pow(1);
    let idx: Vec<i32> = (-(m as i32 - 1)..=n as i32 - 1).filter(|&i| valid_index(m, n, i)).collect();
    let has_e = m >= 1 && n >= 1;
    let ek: Vec<Vec<Letter>> = (0..=m.min(n)).map(|k| build_ek(m, n, k).map(|x| x.word.letters)).collect::<Result<_>>()?;
    let mut s = Suite { e, m, n, out: Vec::new() };
    use Letter::{Hinv, E, H};

    for &i in &idx {
        // (H - q)(H + q^-1) = H^2 - z H - 1
        let h = s.expand(vec![H(i)])?;
        let mut rhs = one.clone();
        rhs.add_scaled(&h, &Scalar::z());
        s.eq(format!("quadratic: (H_{i} - q)(H_{i} + q^-1) = 0"), vec![H(i), H(i)], rhs)?;
        s.same(format!("inverse: H_{i} H_{i}^-1 = 1"), vec![H(i), Hinv(i)], vec![])?;
    }
    for &i in &idx {
        for &j in &idx {
            if i < j && (i - j).abs() > 1 {
                s.same(format!("far commutation: H_{i} H_{j} = H_{j} H_{i}"), vec![H(i), H(j)], vec![H(j), H(i)])?;
            }
        }
        if idx.contains(&(i + 1)) {
            s.same(
                format!("braid: H_{i} H_{} H_{i} = H_{} H_{i} H_{}", i + 1, i + 1, i + 1),
                vec![H(i), H(i + 1), H(i)],
                vec![H(i + 1), H(i), H(i + 1)]
            )?;
        }
    }
    if has_e {
        for &i in idx.iter().filter(|i| i.abs() >= 2) {
            s.same(format!("e commutes with H_{i}"), vec![H(i), E], vec![E, H(i)])?;
        }
        let ew = s.expand(vec![E])?;
        for i in [-1, 1].into_iter().filter(|i| idx.contains(i)) {
            s.eq(format!("kink: e H_{i} e = t e"), vec![E, H(i), E], ew.scale(&tq))?;
        }
        s.eq("loop: e^2 = δ e".into(), vec![E, E], ew.scale(&delta))?;
    }
    if idx.contains(&-1) && idx.contains(&1) {
        s.same(
            "wall, right: e H_-1^-1 H_1 e H_-1 = e H_-1^-1 H_1 e H_1".into(),
            vec![E, Hinv(-1), H(1), E, H(-1)],
            vec![E, Hinv(-1), H(1), E, H(1)]
        )?;
        s.same(
            "wall, left: H_-1 e H_-1^-1 H_1 e = H_1 e H_-1^-1 H_1 e".into(),
            vec![H(-1), E, Hinv(-1), H(1), E],
            vec![H(1), E, Hinv(-1), H(1), E]
        )?;
    }

    let kmax = m.min(n);
    let ekm: Vec<Morphism> =
        ek.iter().map(|w| s.expand(w.clone())).collect::<Result<_>>()?;
    for k in 1..kmax {
        let ki = k as i32;
        let alt = cat(&[&ek[k], &run(ki, 1, false), &run(-ki, -1, true), &[E]]);
        s.eq(format!("e_{} = e_{k} H+_(k,1) H-_(-k,-1) e", k + 1), alt, ekm[k + 1].clone())?;
    }
    for k in 1..=kmax {
        let ki = k as i32;
        for i in 1..ki {
            s.eq(format!("absorption: e_{k} H_{i} H_-{i}^-1 = e_{k}"), cat(&[&ek[k], &[H(i), Hinv(-i)]]), ekm[k].clone())?;
            s.eq(format!("absorption: H_-{i}^-1 H_{i} e_{k} = e_{k}"), cat(&[&[Hinv(-i), H(i)], &ek[k]]), ekm[k].clone())?;
        }
        for i in 1..=k {
            let want = ekm[k].scale(&s.e.delta_pow(i));
            s.eq(format!("product: e_{k} e_{i} = δ^{i} e_{k}"), cat(&[&ek[k], &ek[i]]), want.clone())?;
            s.eq(format!("product: e_{i} e_{k} = δ^{i} e_{k}"), cat(&[&ek[i], &ek[k]]), want)?;
        }
        for &i in idx.iter().filter(|i| i.abs() > ki) {
            s.same(format!("e_{k} commutes with H_{i}"), cat(&[&[H(i)], &ek[k]]), cat(&[&ek[k], &[H(i)]]))?;
        }
        for i in 1..=k {
            for &j in idx.iter().filter(|j| j.unsigned_abs() as usize <= i) {
                let want = ekm[k].scale(&(&tq * &s.e.delta_pow(i - 1)));
                s.eq(format!("e_{i} H_{j} e_{k} = t δ^{} e_{k}", i - 1), cat(&[&ek[i], &[H(j)], &ek[k]]), want.clone())?;
                s.eq(format!("e_{k} H_{j} e_{i} = t δ^{} e_{k}", i - 1), cat(&[&ek[k], &[H(j)], &ek[i]]), want)?;
            }
        }
        let x = vec![(Scalar::one(), AlgebraWord::new(m, n, ek[k].clone())?)];
        let barred = s.e.alg_bar(&x)?;
        s.out.push(Check::equal(format!("bar invariance of e_{k}"), &barred, &ekm[k]));
    }
    Ok(s.out)
}
