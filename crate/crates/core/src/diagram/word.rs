use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, SkeinError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Orientation::Up => 'u',
            Orientation::Down => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'u' | 'U' | '↑' => Some(Orientation::Up),
            'd' | 'D' | '↓' => Some(Orientation::Down),
            _ => None,
        }
    }
}

/// A word in `{↑, ↓}`, stored left to right. Displays as `u`/`d` letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectWord(pub Vec<Orientation>);

impl ObjectWord {
    pub fn new(letters: Vec<Orientation>) -> Self {
        ObjectWord(letters)
    }

    pub fn empty() -> Self {
        ObjectWord(Vec::new())
    }

    /// `↑^m ↓^n`.
    pub fn walled(m: usize, n: usize) -> Self {
        let mut v = vec![Orientation::Up; m];
        v.extend(std::iter::repeat_n(Orientation::Down, n));
        ObjectWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.0.iter().filter(|o| **o == Orientation::Up).count()
    }

    pub fn downs(&self) -> usize {
        self.len() - self.ups()
    }

    pub fn balanced_with(&self, other: &ObjectWord) -> bool {
        self.ups() as isize - self.downs() as isize == other.ups() as isize - other.downs() as isize
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ObjectWord(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Orientation> + '_ {
        self.0.iter().copied()
    }

    pub fn arrows(&self) -> String {
        self.0.iter().map(|o| if *o == Orientation::Up { '↑' } else { '↓' }).collect()
    }
}

impl std::ops::Index<usize> for ObjectWord {
    type Output = Orientation;
    fn index(&self, i: usize) -> &Orientation {
        &self.0[i]
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for o in &self.0 {
            write!(f, "{}", o.letter())?;
        }
        Ok(())
    }
}

impl FromStr for ObjectWord {
    type Err = SkeinError;

    /// Parses `u`/`d` strings; `""`, `-` and `∅` denote the empty word.
    fn from_str(s: &str) -> Result<Self, SkeinError> {
        let s = s.trim();
        if s == "-" || s == "∅" {
            return Ok(ObjectWord::empty());
        }
        s.chars()
            .map(|c| Orientation::from_letter(c).ok_or_else(|| parse_err(1, format!("bad letter `{c}` in word `{s}`"))))
            .collect::<Result<Vec<_>, _>>()
            .map(ObjectWord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_balance() {
        let a: ObjectWord = "uud".parse().unwrap();
        assert_eq!(a.to_string(), "uud");
        assert_eq!(a.arrows(), "↑↑↓");
        assert!(a.balanced_with(&"u".parse().unwrap()));
        assert!(!ObjectWord::walled(1, 0).balanced_with(&ObjectWord::walled(0, 1)));
        assert!("uX".parse::<ObjectWord>().is_err());
        assert_eq!("∅".parse::<ObjectWord>().unwrap(), ObjectWord::empty());
    }
}
