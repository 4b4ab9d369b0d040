//! Equality oracle for classical braid words via the Artin action on the free
//! group `F_n = ⟨x₁, …, x_n⟩`.
//!
//! `σᵢ` acts by `xᵢ ↦ xᵢ xᵢ₊₁ xᵢ⁻¹`, `xᵢ₊₁ ↦ xᵢ` and `σᵢ⁻¹` by
//! `xᵢ ↦ xᵢ₊₁`, `xᵢ₊₁ ↦ xᵢ₊₁⁻¹ xᵢ xᵢ₊₁`. The action is faithful on `B_n`, so two
//! classical words are equal in `B_n` iff their images agree. Virtual letters
//! are rejected.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn new(generator: usize, inverse: bool) -> FreeLetter {
        FreeLetter { generator, inverse }
    }

    pub fn inv(self) -> FreeLetter {
        FreeLetter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the free group.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(Vec<FreeLetter>);

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> FreeWord {
        FreeWord(vec![FreeLetter::new(g, false)])
    }

    /// Reduces `letters` on construction.
    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> FreeWord {
        let mut out = FreeWord::empty();
        for l in letters {
            out.push(l);
        }
        out
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: FreeLetter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[1] != p[0].inv())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

pub fn free_multiply(a: &FreeWord, b: &FreeWord) -> FreeWord {
    let mut out = a.clone();
    for &l in &b.0 {
        out.push(l);
    }
    out
}

fn product(parts: &[&FreeWord]) -> FreeWord {
    let mut out = FreeWord::empty();
    for part in parts {
        for &l in &part.0 {
            out.push(l);
        }
    }
    out
}

/// An endomorphism of `F_n` given by the images of `x₁, …, x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EndoImages {
    pub images: Vec<FreeWord>,
}

impl EndoImages {
    pub fn identity(n: usize) -> EndoImages {
        EndoImages {
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of an arbitrary free word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for l in w.letters() {
            let img = &self.images[l.generator - 1];
            if l.inverse {
                for &x in img.0.iter().rev() {
                    out.push(x.inv());
                }
            } else {
                for &x in &img.0 {
                    out.push(x);
                }
            }
        }
        out
    }

    /// `self ∘ other`: apply `other` first, then substitute `self`.
    ///
    /// With this convention `artin_action(a · b) = artin_action(a).compose(&artin_action(b))`.
    pub fn compose(&self, other: &EndoImages) -> EndoImages {
        assert_eq!(self.rank(), other.rank());
        EndoImages {
            images: other.images.iter().map(|img| self.apply(img)).collect(),
        }
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// Post-composes with the action of one classical generator.
    fn push_generator(&mut self, index: usize, sign: Sign) {
        let a = &self.images[index - 1];
        let b = &self.images[index];
        let (new_a, new_b) = match sign {
            Sign::Pos => (product(&[a, b, &a.inverse()]), a.clone()),
            Sign::Neg => (b.clone(), product(&[&b.inverse(), a, b])),
        };
        self.images[index - 1] = new_a;
        self.images[index] = new_b;
    }

    /// One `x_k -> image` line per generator.
    pub fn lines(&self) -> Vec<String> {
        self.images
            .iter()
            .enumerate()
            .map(|(k, img)| format!("x{} -> {}", k + 1, img))
            .collect()
    }
}

pub fn letter_action(n: usize, index: usize, sign: Sign) -> EndoImages {
    let mut e = EndoImages::identity(n);
    e.push_generator(index, sign);
    e
}

pub fn artin_action(w: &BraidWord) -> Result<EndoImages> {
    let mut images = EndoImages::identity(w.strands());
    for (k, &letter) in w.letters().iter().enumerate() {
        match letter {
            Letter::Classical { index, sign } => images.push_generator(index, sign),
            Letter::Virtual { .. } => return Err(Error::VirtualLetter { index: k }),
        }
    }
    Ok(images)
}

/// Equality in `B_n` of two classical words.
pub fn classical_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(artin_action(a)? == artin_action(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{apply_move, enumerate_moves, MoveKind};
    use crate::word::{concat, free_reduce, inverse, parse};
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> BraidWord {
        parse(text, n).unwrap()
    }

    fn x(g: usize) -> FreeLetter {
        FreeLetter::new(g, false)
    }

    fn xi(g: usize) -> FreeLetter {
        FreeLetter::new(g, true)
    }

    fn arb_classical(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        (2..=max_strands).prop_flat_map(move |n| {
            proptest::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |v| {
                let letters = v
                    .into_iter()
                    .map(|(i, neg)| {
                        if neg {
                            Letter::sigma_inv(i)
                        } else {
                            Letter::sigma(i)
                        }
                    })
                    .collect();
                BraidWord::new(n, letters).unwrap()
            })
        })
    }

    #[test]
    fn free_multiply_examples() {
        let a = FreeWord::from_letters([x(1)]);
        let b = FreeWord::from_letters([xi(1)]);
        assert!(free_multiply(&a, &b).is_empty());
        let a = FreeWord::from_letters([x(1), x(2)]);
        let b = FreeWord::from_letters([xi(2), x(3)]);
        assert_eq!(free_multiply(&a, &b), FreeWord::from_letters([x(1), x(3)]));
        assert_eq!(free_multiply(&FreeWord::empty(), &a), a);
    }

    #[test]
    fn action_examples() {
        assert_eq!(artin_action(&w("", 3)).unwrap(), EndoImages::identity(3));
        let e = artin_action(&w("s1", 2)).unwrap();
        assert_eq!(e.images[0], FreeWord::from_letters([x(1), x(2), xi(1)]));
        assert_eq!(e.images[1], FreeWord::from_letters([x(1)]));
        assert_eq!(e.lines(), vec!["x1 -> x1 x2 x1^-1", "x2 -> x1"]);
        assert_eq!(
            artin_action(&w("s1 S1", 2)).unwrap(),
            EndoImages::identity(2)
        );
        assert_eq!(
            artin_action(&w("s1 t1", 2)),
            Err(Error::VirtualLetter { index: 1 })
        );
    }

    #[test]
    fn equality_examples() {
        assert!(classical_equal(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
        assert!(!classical_equal(&w("s1 s2", 3), &w("s2 s1", 3)).unwrap());
        assert!(classical_equal(&w("s1 s3", 4), &w("s3 s1", 4)).unwrap());
        assert!(classical_equal(&w("s1", 2), &w("s1", 3)).is_err());
        // σ₁² ≠ 1 although both are pure
        assert!(!classical_equal(&w("s1 s1", 2), &w("", 2)).unwrap());
    }

    #[test]
    fn generator_actions_invert() {
        for n in 2..6 {
            for i in 1..n {
                let pos = letter_action(n, i, Sign::Pos);
                let neg = letter_action(n, i, Sign::Neg);
                assert_eq!(pos.compose(&neg), EndoImages::identity(n));
                assert_eq!(neg.compose(&pos), EndoImages::identity(n));
            }
        }
    }

    #[test]
    fn identity_is_a_unit() {
        let e = artin_action(&w("s1 S2 s3 s1", 4)).unwrap();
        let id = EndoImages::identity(4);
        assert_eq!(id.compose(&e), e);
        assert_eq!(e.compose(&id), e);
    }

    proptest! {
        #[test]
        fn action_is_a_homomorphism(a in arb_classical(6, 12), extra in proptest::collection::vec((1usize..100, any::<bool>()), 0..12)) {
            let n = a.strands();
            let letters = extra.into_iter().map(|(k, neg)| {
                let i = k % (n - 1) + 1;
                if neg { Letter::sigma_inv(i) } else { Letter::sigma(i) }
            }).collect();
            let b = BraidWord::new(n, letters).unwrap();
            let lhs = artin_action(&concat(&a, &b).unwrap()).unwrap();
            let rhs = artin_action(&a).unwrap().compose(&artin_action(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn composition_is_associative(words in proptest::collection::vec(proptest::collection::vec((1usize..4, any::<bool>()), 0..6), 3)) {
            let [a, b, c] = [0, 1, 2].map(|k| {
                let letters = words[k].iter().map(|&(i, neg)| if neg { Letter::sigma_inv(i) } else { Letter::sigma(i) }).collect();
                BraidWord::new(4, letters).unwrap()
            });
            let (ea, eb, ec) = (artin_action(&a).unwrap(), artin_action(&b).unwrap(), artin_action(&c).unwrap());
            prop_assert_eq!(ea.compose(&eb).compose(&ec), ea.compose(&eb.compose(&ec)));
        }

        #[test]
        fn classical_moves_preserve_the_action(word in arb_classical(5, 10)) {
            let base = artin_action(&word).unwrap();
            for m in enumerate_moves(&word) {
                if m.kind.is_detour() {
                    continue;
                }
                let next = apply_move(&word, &m).unwrap();
                prop_assert!(matches!(m.kind, MoveKind::U1 | MoveKind::U2 | MoveKind::U3));
                prop_assert_eq!(artin_action(&next).unwrap(), base.clone());
            }
            prop_assert!(classical_equal(&word, &free_reduce(&word)).unwrap());
            let both = concat(&word, &inverse(&word)).unwrap();
            prop_assert!(classical_equal(&both, &BraidWord::identity(word.strands()).unwrap()).unwrap());
        }

        #[test]
        fn images_stay_reduced_and_bounded(word in arb_classical(8, 40)) {
            let mut e = EndoImages::identity(word.strands());
            for l in word.letters() {
                let before = e.total_len();
                if let Letter::Classical { index, sign } = *l {
                    e.push_generator(index, sign);
                }
                prop_assert!(e.total_len() <= 3 * before);
                prop_assert!(e.images.iter().all(FreeWord::is_reduced));
            }
        }
    }
}
