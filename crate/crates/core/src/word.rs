//! Braid words over classical generators `σᵢ^±1` and virtual generators `τᵢ`.
//!
//! Letters are read left to right and stacked bottom to top. The ASCII
//! spelling is `sK` for `σ_K`, `SK` for `σ_K⁻¹` and `tK` for `τ_K`, separated
//! by whitespace or a single `.`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `σ_index` or its inverse.
    Classical { index: usize, sign: Sign },
    /// `τ_index`, its own inverse.
    Virtual { index: usize },
}

impl Letter {
    pub fn sigma(index: usize) -> Letter {
        Letter::Classical {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn sigma_inv(index: usize) -> Letter {
        Letter::Classical {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn tau(index: usize) -> Letter {
        Letter::Virtual { index }
    }

    pub fn index(self) -> usize {
        match self {
            Letter::Classical { index, .. } | Letter::Virtual { index } => index,
        }
    }

    pub fn is_virtual(self) -> bool {
        matches!(self, Letter::Virtual { .. })
    }

    pub fn is_classical(self) -> bool {
        !self.is_virtual()
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Classical { index, sign } => Letter::Classical {
                index,
                sign: sign.flip(),
            },
            v @ Letter::Virtual { .. } => v,
        }
    }

    /// The same crossing turned virtual.
    pub fn virtualized(self) -> Letter {
        Letter::Virtual {
            index: self.index(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Classical {
                index,
                sign: Sign::Pos,
            } => write!(f, "s{index}"),
            Letter::Classical {
                index,
                sign: Sign::Neg,
            } => write!(f, "S{index}"),
            Letter::Virtual { index } => write!(f, "t{index}"),
        }
    }
}

/// A virtual braid word on a fixed number of strands.
///
/// Every letter index lies in `1..strands`. The empty word is the identity
/// braid and is allowed for any strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(bad) = letters
            .iter()
            .find(|l| l.index() == 0 || l.index() >= strands)
        {
            return Err(Error::LetterOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, Vec::new())
    }

    /// Caller guarantees every index is already in range for `strands`.
    pub(crate) fn from_checked(strands: usize, letters: Vec<Letter>) -> BraidWord {
        debug_assert!(strands >= 1);
        debug_assert!(letters
            .iter()
            .all(|l| l.index() >= 1 && l.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        parse(text, strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when the word contains no virtual letter.
    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(|l| l.is_classical())
    }

    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_classical()).count()
    }

    pub fn inverse(&self) -> BraidWord {
        inverse(self)
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        concat(self, other)
    }

    pub fn free_reduce(&self) -> BraidWord {
        free_reduce(self)
    }

    pub fn permutation(&self) -> Permutation {
        permutation(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses a word in the ASCII token grammar.
///
/// Leading and trailing whitespace is ignored. Between tokens the separator is
/// either a run of whitespace or a single `.`.
pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(Error::NoStrands);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |mut p: usize| {
        while p < bytes.len() && bytes[p].is_ascii_whitespace() {
            p += 1;
        }
        p
    };
    pos = skip_ws(pos);
    let mut letters = Vec::new();
    if pos == bytes.len() {
        return Ok(BraidWord { strands, letters });
    }
    loop {
        let start = pos;
        let head = bytes[pos];
        if !matches!(head, b's' | b'S' | b't') {
            return Err(Error::Syntax {
                position: pos,
                message: format!("expected `s`, `S` or `t`, found `{}`", char_at(text, pos)),
            });
        }
        pos += 1;
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digits_start {
            return Err(Error::Syntax {
                position: pos,
                message: "expected a generator index after the letter".into(),
            });
        }
        let token = &text[start..pos];
        let max = strands - 1;
        let index = match text[digits_start..pos].parse::<usize>() {
            Ok(i) if (1..=max).contains(&i) => i,
            _ => {
                return Err(Error::IndexOutOfRange {
                    token: token.to_string(),
                    position: start,
                    max,
                })
            }
        };
        letters.push(match head {
            b's' => Letter::sigma(index),
            b'S' => Letter::sigma_inv(index),
            _ => Letter::tau(index),
        });

        if pos == bytes.len() {
            break;
        }
        let sep_start = pos;
        if bytes[pos] == b'.' {
            pos += 1;
        } else {
            pos = skip_ws(pos);
        }
        if pos == sep_start {
            return Err(Error::Syntax {
                position: pos,
                message: format!("expected a separator, found `{}`", char_at(text, pos)),
            });
        }
        if pos == bytes.len() {
            if bytes[sep_start] == b'.' {
                return Err(Error::Syntax {
                    position: pos,
                    message: "trailing `.` separator".into(),
                });
            }
            break;
        }
    }
    Ok(BraidWord { strands, letters })
}

fn char_at(text: &str, pos: usize) -> char {
    text[pos..].chars().next().unwrap_or('?')
}

pub fn format(w: &BraidWord) -> String {
    w.to_string()
}

/// Reverses the word and flips every classical sign.
pub fn inverse(w: &BraidWord) -> BraidWord {
    BraidWord {
        strands: w.strands,
        letters: w.letters.iter().rev().map(|l| l.inverse()).collect(),
    }
}

pub fn concat(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch {
            left: a.strands,
            right: b.strands,
        });
    }
    let mut letters = Vec::with_capacity(a.len() + b.len());
    letters.extend_from_slice(&a.letters);
    letters.extend_from_slice(&b.letters);
    Ok(BraidWord {
        strands: a.strands,
        letters,
    })
}

/// Deletes adjacent `σᵢ^ε σᵢ^-ε` and `τᵢ τᵢ` pairs until none remain.
///
/// No commutations are applied. The stack sweep yields the unique normal form
/// of this length-reducing system.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &letter in &w.letters {
        if out.last() == Some(&letter.inverse()) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    BraidWord {
        strands: w.strands,
        letters: out,
    }
}

/// Where each bottom strand ends up at the top.
///
/// `images[s - 1]` is the top position (1-based) reached by the strand that
/// starts at bottom position `s`. Both `σᵢ^±` and `τᵢ` act as the
/// transposition of positions `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len());
        Permutation {
            images: self.images.iter().map(|&p| next.apply(p)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i - 1] = k + 1;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

pub fn permutation(w: &BraidWord) -> Permutation {
    // strand_at[p] = bottom strand currently at position p + 1
    let mut strand_at: Vec<usize> = (1..=w.strands).collect();
    for l in &w.letters {
        let i = l.index();
        strand_at.swap(i - 1, i);
    }
    let mut images = vec![0; w.strands];
    for (p, &s) in strand_at.iter().enumerate() {
        images[s - 1] = p + 1;
    }
    Permutation { images }
}
