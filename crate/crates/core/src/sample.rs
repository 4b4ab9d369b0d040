//! Seeded random words for walks, tests and examples.

use rand::Rng;

use crate::word::{BraidWord, Letter};

/// A uniformly random classical word with `len` letters.
pub fn random_classical<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2, "need at least two strands for a generator");
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..strands);
            if rng.random_bool(0.5) {
                Letter::sigma(i)
            } else {
                Letter::sigma_inv(i)
            }
        })
        .collect();
    BraidWord::from_checked(strands, letters)
}

/// A random word where each letter is virtual with probability `virtual_ratio`.
pub fn random_virtual<R: Rng + ?Sized>(
    rng: &mut R,
    strands: usize,
    len: usize,
    virtual_ratio: f64,
) -> BraidWord {
    assert!(strands >= 2, "need at least two strands for a generator");
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..strands);
            if rng.random_bool(virtual_ratio) {
                Letter::tau(i)
            } else if rng.random_bool(0.5) {
                Letter::sigma(i)
            } else {
                Letter::sigma_inv(i)
            }
        })
        .collect();
    BraidWord::from_checked(strands, letters)
}
