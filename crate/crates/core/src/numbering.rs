//! Integer numbering of a braid diagram, Gaussian parity, and smoothing.
//!
//! The numbering is anchored at the bottom: the strand starting at position
//! `i` enters with number `i`. A single upward sweep keeps one
//! `(strand, number)` pair per position. A virtual crossing swaps two pairs.
//! A classical crossing at positions `(i, i + 1)` with incoming numbers
//! `(λ, μ)` sends the right strand out on the left with `μ - 1` and the left
//! strand out on the right with `λ + 1`. The crossing is even when `μ = λ + 1`,
//! which is exactly when the numbers at both positions pass through unchanged.
//!
//! Because the anchors propagate uniquely, a word admits an Alexander
//! numbering iff every classical crossing of this sweep is even.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Classical { sign: Sign, lambda: i64, mu: i64 },
    Virtual,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingRecord {
    pub word_index: usize,
    /// Generator index `i`: the crossing sits between positions `i` and `i + 1`.
    pub position: usize,
    pub left_in_strand: usize,
    pub right_in_strand: usize,
    pub kind: CrossingKind,
}

impl CrossingRecord {
    /// `None` for virtual crossings.
    pub fn parity(&self) -> Option<Parity> {
        match self.kind {
            CrossingKind::Classical { lambda, mu, .. } => Some(if mu == lambda + 1 {
                Parity::Even
            } else {
                Parity::Odd
            }),
            CrossingKind::Virtual => None,
        }
    }

    /// Incoming `(λ, μ)` for classical crossings.
    pub fn numbers(&self) -> Option<(i64, i64)> {
        match self.kind {
            CrossingKind::Classical { lambda, mu, .. } => Some((lambda, mu)),
            CrossingKind::Virtual => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.kind, CrossingKind::Classical { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerNumbering {
    pub strands: usize,
    pub crossings: Vec<CrossingRecord>,
    pub top_strands: Vec<usize>,
    pub top_numbers: Vec<i64>,
}

impl IntegerNumbering {
    pub fn classical(&self) -> impl Iterator<Item = &CrossingRecord> {
        self.crossings.iter().filter(|c| c.is_classical())
    }

    pub fn parities(&self) -> Vec<(usize, Parity)> {
        self.crossings
            .iter()
            .filter_map(|c| c.parity().map(|p| (c.word_index, p)))
            .collect()
    }

    pub fn odd_letters(&self) -> Vec<usize> {
        self.parities()
            .into_iter()
            .filter(|&(_, p)| p == Parity::Odd)
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_alexander(&self) -> bool {
        self.classical().all(|c| c.parity() == Some(Parity::Even))
    }

    pub fn report(&self) -> NumberingReport {
        NumberingReport {
            strands: self.strands,
            crossings: self
                .crossings
                .iter()
                .map(|c| match c.kind {
                    CrossingKind::Classical { sign, lambda, mu } => CrossingEntry {
                        index: c.word_index,
                        kind: "classical".into(),
                        sign: Some(sign.as_i8()),
                        position: c.position,
                        lambda: Some(lambda),
                        mu: Some(mu),
                        parity: c.parity(),
                    },
                    CrossingKind::Virtual => CrossingEntry {
                        index: c.word_index,
                        kind: "virtual".into(),
                        sign: None,
                        position: c.position,
                        lambda: None,
                        mu: None,
                        parity: None,
                    },
                })
                .collect(),
            top_strands: self.top_strands.clone(),
            top_numbers: self.top_numbers.clone(),
        }
    }
}

/// JSON form of a numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberingReport {
    pub strands: usize,
    pub crossings: Vec<CrossingEntry>,
    pub top_strands: Vec<usize>,
    pub top_numbers: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingEntry {
    pub index: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sign: Option<i8>,
    pub position: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<Parity>,
}

pub fn integer_numbering(w: &BraidWord) -> IntegerNumbering {
    let n = w.strands();
    let mut state: Vec<(usize, i64)> = (1..=n).map(|i| (i, i as i64)).collect();
    let mut crossings = Vec::with_capacity(w.len());
    for (word_index, &letter) in w.letters().iter().enumerate() {
        let i = letter.index();
        let (left_strand, lambda) = state[i - 1];
        let (right_strand, mu) = state[i];
        let kind = match letter {
            Letter::Virtual { .. } => {
                state.swap(i - 1, i);
                CrossingKind::Virtual
            }
            Letter::Classical { sign, .. } => {
                state[i - 1] = (right_strand, mu - 1);
                state[i] = (left_strand, lambda + 1);
                CrossingKind::Classical { sign, lambda, mu }
            }
        };
        crossings.push(CrossingRecord {
            word_index,
            position: i,
            left_in_strand: left_strand,
            right_in_strand: right_strand,
            kind,
        });
    }
    IntegerNumbering {
        strands: n,
        crossings,
        top_strands: state.iter().map(|&(s, _)| s).collect(),
        top_numbers: state.iter().map(|&(_, x)| x).collect(),
    }
}

/// Parity of every classical letter, keyed by letter position.
pub fn parity(w: &BraidWord) -> Vec<(usize, Parity)> {
    integer_numbering(w).parities()
}

pub fn is_almost_classical(w: &BraidWord) -> bool {
    integer_numbering(w).is_alexander()
}

pub fn top_numbering(w: &BraidWord) -> Vec<i64> {
    integer_numbering(w).top_numbers
}

/// Whether `numbers` reads `1, 2, …, n` from left to right.
pub fn is_consecutive(numbers: &[i64]) -> bool {
    numbers.iter().enumerate().all(|(k, &x)| x == k as i64 + 1)
}

/// Oriented smoothing of the classical crossing at letter `k`.
///
/// On a braid word the smoothed crossing leaves both strands at their incoming
/// positions, so the letter is removed.
pub fn smooth(w: &BraidWord, k: usize) -> Result<BraidWord> {
    let letter = *w.letters().get(k).ok_or(Error::PositionOutOfRange {
        index: k,
        len: w.len(),
    })?;
    if letter.is_virtual() {
        return Err(Error::NotClassical { index: k });
    }
    let mut letters = w.letters().to_vec();
    letters.remove(k);
    Ok(BraidWord::from_checked(w.strands(), letters))
}
