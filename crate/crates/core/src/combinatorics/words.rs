use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    letters: Vec<u8>,
}

impl BinaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidWord(format!("letter {bad} is not 0 or 1")));
        }
        Ok(Self { letters })
    }

    /// Word of length `n` with zeros exactly at the given 1-indexed positions.
    pub fn from_zero_positions(n: usize, zeros: &BTreeSet<u32>) -> Result<Self> {
        let mut letters = vec![1u8; n];
        for &z in zeros {
            if z == 0 || z as usize > n {
                return Err(Error::SubsetElement(z, n as u32));
            }
            letters[z as usize - 1] = 0;
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.letters.iter().filter(|&&b| b == 0).count()
    }

    /// 1-indexed positions of the zeros.
    pub fn zero_positions(&self) -> BTreeSet<u32> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 0)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// Cyclic left rotation by `t`: the first `t` letters move to the end.
    pub fn rotate(&self, t: usize) -> BinaryWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let len = letters.len();
            letters.rotate_left(t % len);
        }
        BinaryWord { letters }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.letters {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidWord(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Self { letters })
    }
}

/// All words of length `n` with exactly `k` zeros, in lexicographic order.
pub fn words_with_zeros(n: usize, k: usize) -> Vec<BinaryWord> {
    fn go(n: usize, zeros_left: usize, prefix: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
        let remaining = n - prefix.len();
        if remaining == 0 {
            out.push(BinaryWord {
                letters: prefix.clone(),
            });
            return;
        }
        if zeros_left > 0 {
            prefix.push(0);
            go(n, zeros_left - 1, prefix, out);
            prefix.pop();
        }
        if remaining > zeros_left {
            prefix.push(1);
            go(n, zeros_left, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Lexicographically smallest rotation.
pub fn necklace_canonical(w: &BinaryWord) -> BinaryWord {
    (0..w.len().max(1))
        .map(|t| w.rotate(t))
        .min()
        .unwrap_or_else(|| w.clone())
}

/// A word is Lyndon when it is strictly smaller than each of its nontrivial
/// rotations (which also forces it to be aperiodic).
pub fn is_lyndon(w: &BinaryWord) -> bool {
    !w.is_empty() && (1..w.len()).all(|t| *w < w.rotate(t))
}

/// Binary Lyndon words of length `n` with `k` zeros, sorted.
pub fn lyndon_words(n: usize, k: usize) -> Vec<BinaryWord> {
    words_with_zeros(n, k)
        .into_iter()
        .filter(is_lyndon)
        .collect()
}

/// Number of necklaces (rotation classes) of words with length `n` and `k`
/// zeros.
pub fn necklace_count(n: usize, k: usize) -> usize {
    words_with_zeros(n, k)
        .iter()
        .map(necklace_canonical)
        .collect::<BTreeSet<_>>()
        .len()
}

/// 1-indexed descents: positions `i` with `a_i = 1` and `a_{i+1} = 0`.
pub fn word_descents(w: &BinaryWord) -> BTreeSet<u32> {
    w.letters
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] == 1 && pair[1] == 0)
        .map(|(i, _)| i as u32 + 1)
        .collect()
}

pub fn word_maj(w: &BinaryWord) -> u64 {
    word_descents(w).into_iter().map(u64::from).sum()
}
