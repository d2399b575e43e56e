//! Alphabets and words.
//!
//! Symbols are single `char`s. The order in which an [`Alphabet`] lists its
//! symbols is significant: every enumeration, breadth-first search and
//! tie-break in the crate follows it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered, duplicate-free sequence of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<char>", into = "Vec<char>")]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::DuplicateSymbol(*c));
            }
        }
        Ok(Self { symbols })
    }

    /// Alphabet made of the characters of `s`, in order.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == c)
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    /// Symbols of `self` followed by the symbols of `other` not already present.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        symbols.extend(other.symbols.iter().filter(|c| !self.contains(**c)));
        Alphabet { symbols }
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.symbols.iter().all(|c| other.contains(*c))
    }

    /// Translates a word into symbol indices.
    pub fn encode(&self, word: &Word) -> Result<Vec<usize>> {
        word.symbols()
            .iter()
            .map(|&c| self.index_of(c).ok_or(Error::UnknownSymbol(c)))
            .collect()
    }

    pub fn decode(&self, indices: &[usize]) -> Word {
        Word(indices.iter().map(|&i| self.symbols[i]).collect())
    }
}

impl TryFrom<Vec<char>> for Alphabet {
    type Error = Error;

    fn try_from(symbols: Vec<char>) -> Result<Self> {
        Alphabet::new(symbols)
    }
}

impl From<Alphabet> for Vec<char> {
    fn from(a: Alphabet) -> Self {
        a.symbols
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A finite word. The empty word is `Word::empty()` and displays as `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<char>) -> Self {
        Word(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    /// The `k`-prefix: the first `k` symbols, or the whole word if it is shorter.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k.min(self.len())].to_vec())
    }

    /// The `k`-suffix, analogous to [`Word::prefix`].
    pub fn suffix(&self, k: usize) -> Word {
        let k = k.min(self.len());
        Word(self.0[self.len() - k..].to_vec())
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, t: usize) -> Word {
        Word(self.0.repeat(t))
    }

    /// Plain string form; the empty word becomes `""`.
    pub fn as_string(&self) -> String {
        self.0.iter().collect()
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.as_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Word::from(String::deserialize(d)?.as_str()))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "λ")
        } else {
            write!(f, "{}", self.as_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_symbols_rejected() {
        assert!(matches!(
            Alphabet::from_chars("aba"),
            Err(Error::DuplicateSymbol('a'))
        ));
    }

    #[test]
    fn prefixes_and_suffixes() {
        let w = Word::from("abcd");
        assert_eq!(w.prefix(0), Word::empty());
        assert_eq!(w.prefix(2), Word::from("ab"));
        assert_eq!(w.prefix(9), w);
        assert_eq!(w.suffix(3), Word::from("bcd"));
        assert_eq!(Word::empty().to_string(), "λ");
    }

    #[test]
    fn union_keeps_left_order() {
        let a = Alphabet::from_chars("ba").unwrap();
        let b = Alphabet::from_chars("cab").unwrap();
        assert_eq!(a.union(&b).symbols(), &['b', 'a', 'c']);
    }

    #[test]
    fn encode_rejects_foreign_symbols() {
        let a = Alphabet::from_chars("ab").unwrap();
        assert_eq!(a.encode(&Word::from("ba")).unwrap(), vec![1, 0]);
        assert!(matches!(
            a.encode(&Word::from("ac")),
            Err(Error::UnknownSymbol('c'))
        ));
    }
}
