//! Permutations of `[n] = {1, ..., n}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A bijection of `[n]`, stored as its one-line word `w(1) w(2) ... w(n)`.
///
/// Positions and values are 1-based everywhere in the public API, matching
/// the usual combinatorial conventions. `n` is limited to 255.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        if n > u8::MAX as usize {
            return Err(Error::invalid("permutation", format!("length {n} exceeds 255")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(
                    "permutation",
                    format!("{one_line:?} is not a bijection of [{n}]"),
                ));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    /// Wraps a word already known to be a permutation.
    pub(crate) fn from_word_unchecked(one_line: &[u8]) -> Self {
        debug_assert!(Permutation::new(one_line.to_vec()).is_ok());
        Permutation(one_line.to_vec())
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation((1..=n as u8).collect())
    }

    /// `n n-1 ... 1`
    pub fn reversal(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (pos + 1) as u8;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &v)| self.0[v as usize - 1] as usize == i + 1)
    }

    /// Number of inversions `|{(i, j) : i < j, w(i) > w(j)}|`, i.e. the
    /// Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }
}

/// Digits run together for `n <= 9` (`2413`), space separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { " " };
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Option<Vec<u8>> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
        };
        let word = word.ok_or_else(|| Error::invalid("permutation", format!("cannot parse {s:?}")))?;
        Permutation::new(word)
    }
}
