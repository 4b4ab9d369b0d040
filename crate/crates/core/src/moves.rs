//! Local rewrites for the classical relations U1–U3 and the virtual
//! relations V1–V5, and a seeded random walk over them.
//!
//! Direction conventions:
//!
//! | kind       | forward matches                  | backward matches            |
//! |------------|----------------------------------|-----------------------------|
//! | U1, V1     | `xᵢ yⱼ` with `j ≥ i + 2`         | `xᵢ yⱼ` with `i ≥ j + 2`    |
//! | U2, V2     | a cancelling pair (deleted)      | nothing (pair inserted)     |
//! | U3         | `σᵢ^ε σᵢ₋₁^ε σᵢ^ε`               | `σᵢ₋₁^ε σᵢ^ε σᵢ₋₁^ε`        |
//! | V3         | `τᵢ τᵢ₋₁ τᵢ`                     | `τᵢ₋₁ τᵢ τᵢ₋₁`              |
//! | V4         | `τᵢ τᵢ₋₁ σᵢ`                     | `σᵢ₋₁ τᵢ τᵢ₋₁`              |
//! | V5         | `τᵢ σⱼ^ε`, `|i - j| > 1`         | `σⱼ^ε τᵢ`, `|i - j| > 1`    |
//!
//! Every instance reverses to the same kind at the same site with the
//! opposite direction.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    U1,
    U2,
    U3,
    V1,
    V2,
    V3,
    V4,
    V5,
}

impl MoveKind {
    pub const ALL: [MoveKind; 8] = [
        MoveKind::U1,
        MoveKind::U2,
        MoveKind::U3,
        MoveKind::V1,
        MoveKind::V2,
        MoveKind::V3,
        MoveKind::V4,
        MoveKind::V5,
    ];

    /// Moves that only rearrange virtual crossings around the rest.
    pub fn is_detour(self) -> bool {
        matches!(
            self,
            MoveKind::V1 | MoveKind::V2 | MoveKind::V3 | MoveKind::V4 | MoveKind::V5
        )
    }

    pub fn is_pair(self) -> bool {
        matches!(self, MoveKind::U2 | MoveKind::V2)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for MoveKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| format!("unknown move kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "forward" => Ok(Direction::Forward),
            "backward" => Ok(Direction::Backward),
            _ => Err(format!("unknown direction `{s}`")),
        }
    }
}

/// One applicable rewrite.
///
/// For U2 and V2 the payload is the first letter of the cancelling pair: the
/// pair deleted by a forward move or inserted by a backward move. It is `None`
/// for every other kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveInstance {
    pub site: usize,
    pub kind: MoveKind,
    pub direction: Direction,
    pub payload: Option<Letter>,
}

impl MoveInstance {
    pub fn new(kind: MoveKind, site: usize, direction: Direction) -> MoveInstance {
        MoveInstance {
            site,
            kind,
            direction,
            payload: None,
        }
    }

    pub fn insertion(site: usize, first: Letter) -> MoveInstance {
        let kind = if first.is_virtual() {
            MoveKind::V2
        } else {
            MoveKind::U2
        };
        MoveInstance {
            site,
            kind,
            direction: Direction::Backward,
            payload: Some(first),
        }
    }

    pub fn deletion(site: usize, first: Letter) -> MoveInstance {
        MoveInstance {
            direction: Direction::Forward,
            ..MoveInstance::insertion(site, first)
        }
    }

    pub fn is_insertion(&self) -> bool {
        self.kind.is_pair() && self.direction == Direction::Backward
    }

    pub fn reversed(&self) -> MoveInstance {
        MoveInstance {
            direction: self.direction.flip(),
            ..*self
        }
    }

    /// Number of letters of the input word consumed at `site`.
    pub fn matched_len(&self) -> usize {
        match self.kind {
            MoveKind::U1 | MoveKind::V1 | MoveKind::V5 => 2,
            MoveKind::U2 | MoveKind::V2 => match self.direction {
                Direction::Forward => 2,
                Direction::Backward => 0,
            },
            MoveKind::U3 | MoveKind::V3 | MoveKind::V4 => 3,
        }
    }
}

impl fmt::Display for MoveInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} at {}",
            self.kind,
            self.direction.as_str(),
            self.site
        )?;
        if let Some(p) = self.payload {
            write!(f, " [{} {}]", p, p.inverse())?;
        }
        Ok(())
    }
}

fn distant(i: usize, j: usize) -> bool {
    i.abs_diff(j) > 1
}

/// Replacement for the pattern matched by `kind`/`direction` at the front of
/// `window`, or `None` when the pattern is absent.
fn rewrite(kind: MoveKind, direction: Direction, window: &[Letter]) -> Option<Vec<Letter>> {
    use Letter::{Classical as C, Virtual as V};
    let fwd = direction == Direction::Forward;
    match kind {
        MoveKind::U1 | MoveKind::V1 => {
            let (a, b) = (*window.first()?, *window.get(1)?);
            let same_type = match kind {
                MoveKind::U1 => a.is_classical() && b.is_classical(),
                _ => a.is_virtual() && b.is_virtual(),
            };
            let ordered = if fwd {
                b.index() >= a.index() + 2
            } else {
                a.index() >= b.index() + 2
            };
            (same_type && ordered).then(|| vec![b, a])
        }
        MoveKind::V5 => {
            let (a, b) = (*window.first()?, *window.get(1)?);
            let shape = if fwd {
                a.is_virtual() && b.is_classical()
            } else {
                a.is_classical() && b.is_virtual()
            };
            (shape && distant(a.index(), b.index())).then(|| vec![b, a])
        }
        MoveKind::U2 | MoveKind::V2 => {
            // deletions only; insertions are handled by the caller
            if !fwd {
                return None;
            }
            let (a, b) = (*window.first()?, *window.get(1)?);
            let right_type = (kind == MoveKind::U2) == a.is_classical();
            (right_type && b == a.inverse()).then(Vec::new)
        }
        MoveKind::U3 => match window.get(..3)? {
            &[C { index: x, sign: e1 }, C { index: y, sign: e2 }, C { index: z, sign: e3 }]
                if e1 == e2 && e2 == e3 && x == z =>
            {
                let sign = e1;
                let ok = if fwd { y + 1 == x } else { x + 1 == y };
                ok.then(|| {
                    vec![
                        C { index: y, sign },
                        C { index: x, sign },
                        C { index: y, sign },
                    ]
                })
            }
            _ => None,
        },
        MoveKind::V3 => match window.get(..3)? {
            &[V { index: x }, V { index: y }, V { index: z }] if x == z => {
                let ok = if fwd { y + 1 == x } else { x + 1 == y };
                ok.then(|| vec![V { index: y }, V { index: x }, V { index: y }])
            }
            _ => None,
        },
        MoveKind::V4 => {
            let w = window.get(..3)?;
            if fwd {
                // τᵢ τᵢ₋₁ σᵢ → σᵢ₋₁ τᵢ τᵢ₋₁
                match *w {
                    [V { index: i }, V { index: j }, C {
                        index: k,
                        sign: Sign::Pos,
                    }] if i == k && j + 1 == i => {
                        Some(vec![Letter::sigma(j), V { index: i }, V { index: j }])
                    }
                    _ => None,
                }
            } else {
                match *w {
                    [C {
                        index: j,
                        sign: Sign::Pos,
                    }, V { index: i }, V { index: k }]
                        if j == k && j + 1 == i =>
                    {
                        Some(vec![V { index: i }, V { index: j }, Letter::sigma(i)])
                    }
                    _ => None,
                }
            }
        }
    }
}

/// Limits on how many insertions `enumerate_moves_with` lists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep at most this many insertion instances, in enumeration order.
    pub max_insertions: Option<usize>,
}

fn insertion_payloads(strands: usize) -> impl Iterator<Item = Letter> {
    (1..strands).flat_map(|i| [Letter::sigma(i), Letter::sigma_inv(i), Letter::tau(i)])
}

/// Every move applicable to `w`, ordered by site, then kind, then direction
/// and payload.
pub fn enumerate_moves(w: &BraidWord) -> Vec<MoveInstance> {
    enumerate_moves_with(w, EnumerateOptions::default())
}

pub fn enumerate_moves_with(w: &BraidWord, options: EnumerateOptions) -> Vec<MoveInstance> {
    let letters = w.letters();
    let mut out = Vec::new();
    let mut insertions = 0usize;
    for site in 0..=letters.len() {
        let window = &letters[site..];
        for kind in MoveKind::ALL {
            for direction in [Direction::Forward, Direction::Backward] {
                if kind.is_pair() {
                    if direction == Direction::Forward {
                        if rewrite(kind, direction, window).is_some() {
                            out.push(MoveInstance::deletion(site, window[0]));
                        }
                    } else {
                        for first in insertion_payloads(w.strands()) {
                            let matches_kind = (kind == MoveKind::V2) == first.is_virtual();
                            if !matches_kind {
                                continue;
                            }
                            if options.max_insertions.is_some_and(|cap| insertions >= cap) {
                                continue;
                            }
                            insertions += 1;
                            out.push(MoveInstance::insertion(site, first));
                        }
                    }
                } else if rewrite(kind, direction, window).is_some() {
                    out.push(MoveInstance::new(kind, site, direction));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn apply_move(w: &BraidWord, m: &MoveInstance) -> Result<BraidWord> {
    let letters = w.letters();
    let inapplicable = || Error::InapplicableMove {
        kind: m.kind,
        direction: m.direction,
        site: m.site,
    };
    if m.site > letters.len() {
        return Err(inapplicable());
    }
    let (replacement, consumed) = if m.is_insertion() {
        let first = m.payload.ok_or_else(inapplicable)?;
        let type_ok = (m.kind == MoveKind::V2) == first.is_virtual();
        if !type_ok || first.index() == 0 || first.index() >= w.strands() {
            return Err(inapplicable());
        }
        (vec![first, first.inverse()], 0)
    } else {
        let window = &letters[m.site..];
        let replacement = rewrite(m.kind, m.direction, window).ok_or_else(inapplicable)?;
        if m.kind.is_pair() && m.payload.is_some_and(|p| p != window[0]) {
            return Err(inapplicable());
        }
        (replacement, m.matched_len())
    };
    let mut out = Vec::with_capacity(letters.len() + 2);
    out.extend_from_slice(&letters[..m.site]);
    out.extend(replacement);
    out.extend_from_slice(&letters[m.site + consumed..]);
    Ok(BraidWord::from_checked(w.strands(), out))
}

/// Relative weights for choosing between insertions (word grows) and
/// pattern rewrites (deletions and same-length moves).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkPolicy {
    pub insertion_weight: u32,
    pub pattern_weight: u32,
}

impl Default for WalkPolicy {
    fn default() -> Self {
        WalkPolicy {
            insertion_weight: 1,
            pattern_weight: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStep {
    pub step: usize,
    pub mv: MoveInstance,
    pub word: BraidWord,
}

/// A reproducible random walk of up to `steps` moves starting at `start`.
///
/// The walk stops early only when no move applies (a single strand).
pub fn random_walk(
    start: &BraidWord,
    steps: usize,
    seed: u64,
    policy: WalkPolicy,
) -> Vec<WalkStep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = start.clone();
    let mut out = Vec::with_capacity(steps);
    for step in 1..=steps {
        let (insertions, patterns): (Vec<MoveInstance>, Vec<MoveInstance>) =
            enumerate_moves(&current)
                .into_iter()
                .partition(|m| m.is_insertion());
        let pool = match (insertions.is_empty(), patterns.is_empty()) {
            (true, true) => break,
            (true, false) => &patterns,
            (false, true) => &insertions,
            (false, false) => {
                let total = policy.insertion_weight + policy.pattern_weight;
                if total == 0 || rng.random_range(0..total) < policy.insertion_weight {
                    &insertions
                } else {
                    &patterns
                }
            }
        };
        let mv = pool[rng.random_range(0..pool.len())];
        current = apply_move(&current, &mv).expect("enumerated moves apply");
        out.push(WalkStep {
            step,
            mv,
            word: current.clone(),
        });
    }
    out
}

/// The start word followed by every word of the walk.
pub fn walk_chain(start: &BraidWord, walk: &[WalkStep]) -> Vec<BraidWord> {
    std::iter::once(start.clone())
        .chain(walk.iter().map(|s| s.word.clone()))
        .collect()
}

/// One line of a walk log.
///
/// Step 0 carries only the start word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkLogEntry {
    pub step: usize,
    pub kind: Option<MoveKind>,
    pub site: Option<usize>,
    pub direction: Option<Direction>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub payload: Option<String>,
    pub word: String,
}

pub fn walk_log(start: &BraidWord, walk: &[WalkStep]) -> Vec<WalkLogEntry> {
    let head = WalkLogEntry {
        step: 0,
        kind: None,
        site: None,
        direction: None,
        payload: None,
        word: start.to_string(),
    };
    std::iter::once(head)
        .chain(walk.iter().map(|s| WalkLogEntry {
            step: s.step,
            kind: Some(s.mv.kind),
            site: Some(s.mv.site),
            direction: Some(s.mv.direction),
            payload: s.mv.payload.map(|p| p.to_string()),
            word: s.word.to_string(),
        }))
        .collect()
}

/// Re-applies each logged move and checks it yields the logged word.
pub fn replay_log(entries: &[WalkLogEntry], strands: usize) -> Result<Vec<BraidWord>> {
    let mut chain = Vec::with_capacity(entries.len());
    for (k, entry) in entries.iter().enumerate() {
        let word = BraidWord::parse(&entry.word, strands)?;
        if k > 0 {
            let (Some(kind), Some(site), Some(direction)) =
                (entry.kind, entry.site, entry.direction)
            else {
                return Err(Error::Syntax {
                    position: k,
                    message: "log entry after the first must name a move".into(),
                });
            };
            let payload = match &entry.payload {
                Some(p) => Some(
                    BraidWord::parse(p, strands)?
                        .letters()
                        .first()
                        .copied()
                        .ok_or(Error::Syntax {
                            position: k,
                            message: "empty payload".into(),
                        })?,
                ),
                None => None,
            };
            let mv = MoveInstance {
                site,
                kind,
                direction,
                payload,
            };
            let prev: &BraidWord = &chain[k - 1];
            if apply_move(prev, &mv)? != word {
                return Err(Error::InapplicableMove {
                    kind,
                    direction,
                    site,
                });
            }
        }
        chain.push(word);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::tests::arb_word;
    use crate::word::{parse, permutation};
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> BraidWord {
        parse(text, n).unwrap()
    }

    /// Literal relation schemas `(kind, lhs, rhs)` over the strand count,
    /// listed independently of `rewrite`.
    fn schemas(n: usize) -> Vec<(MoveKind, Vec<Letter>, Vec<Letter>)> {
        let s = Letter::sigma;
        let si = Letter::sigma_inv;
        let t = Letter::tau;
        let mut out = Vec::new();
        for i in 1..n {
            for j in 1..n {
                if i + 2 <= j {
                    for a in [s(i), si(i)] {
                        for b in [s(j), si(j)] {
                            out.push((MoveKind::U1, vec![a, b], vec![b, a]));
                        }
                    }
                    out.push((MoveKind::V1, vec![t(i), t(j)], vec![t(j), t(i)]));
                }
                if i.abs_diff(j) > 1 {
                    for b in [s(j), si(j)] {
                        out.push((MoveKind::V5, vec![t(i), b], vec![b, t(i)]));
                    }
                }
            }
            for a in [s(i), si(i), t(i)] {
                let kind = if a.is_virtual() {
                    MoveKind::V2
                } else {
                    MoveKind::U2
                };
                out.push((kind, vec![a, a.inverse()], vec![]));
            }
            if i >= 2 {
                out.push((
                    MoveKind::U3,
                    vec![s(i), s(i - 1), s(i)],
                    vec![s(i - 1), s(i), s(i - 1)],
                ));
                out.push((
                    MoveKind::U3,
                    vec![si(i), si(i - 1), si(i)],
                    vec![si(i - 1), si(i), si(i - 1)],
                ));
                out.push((
                    MoveKind::V3,
                    vec![t(i), t(i - 1), t(i)],
                    vec![t(i - 1), t(i), t(i - 1)],
                ));
                out.push((
                    MoveKind::V4,
                    vec![t(i), t(i - 1), s(i)],
                    vec![s(i - 1), t(i), t(i - 1)],
                ));
            }
        }
        out
    }

    /// Brute-force: every word reachable by replacing one occurrence of either
    /// side of a schema, including pair insertions anywhere.
    fn brute_force_neighbours(word: &BraidWord) -> Vec<(MoveKind, Vec<Letter>)> {
        let letters = word.letters();
        let mut out = Vec::new();
        for (kind, lhs, rhs) in schemas(word.strands()) {
            for (from, to) in [(&lhs, &rhs), (&rhs, &lhs)] {
                if from.is_empty() {
                    for site in 0..=letters.len() {
                        let mut next = letters[..site].to_vec();
                        next.extend_from_slice(to);
                        next.extend_from_slice(&letters[site..]);
                        out.push((kind, next));
                    }
                    continue;
                }
                for site in 0..letters.len() {
                    if letters[site..].starts_with(from) {
                        let mut next = letters[..site].to_vec();
                        next.extend_from_slice(to);
                        next.extend_from_slice(&letters[site + from.len()..]);
                        out.push((kind, next));
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn empty_word_offers_only_insertions() {
        let moves = enumerate_moves(&w("", 2));
        assert!(moves.iter().all(|m| m.is_insertion() && m.site == 0));
        let u2 = moves.iter().filter(|m| m.kind == MoveKind::U2).count();
        let v2 = moves.iter().filter(|m| m.kind == MoveKind::V2).count();
        assert_eq!((u2, v2), (2, 1));
    }

    #[test]
    fn distant_commutation_is_listed() {
        let moves = enumerate_moves(&w("s1 s3", 4));
        assert!(moves.contains(&MoveInstance::new(MoveKind::U1, 0, Direction::Forward)));
        let moves = enumerate_moves(&w("s1 s2", 4));
        assert!(!moves.iter().any(|m| m.kind == MoveKind::U1));
    }

    #[test]
    fn braid_relation_is_listed_and_applies() {
        let word = w("s2 s1 s2", 3);
        let m = MoveInstance::new(MoveKind::U3, 0, Direction::Forward);
        assert!(enumerate_moves(&word).contains(&m));
        assert_eq!(apply_move(&word, &m).unwrap(), w("s1 s2 s1", 3));
        let neg = w("S2 S1 S2", 3);
        assert_eq!(apply_move(&neg, &m).unwrap(), w("S1 S2 S1", 3));
        // mixed signs are not a primitive U3
        assert!(apply_move(&w("s2 S1 s2", 3), &m).is_err());
    }

    #[test]
    fn apply_examples() {
        let v4 = MoveInstance::new(MoveKind::V4, 0, Direction::Forward);
        assert_eq!(
            apply_move(&w("t2 t1 s2", 3), &v4).unwrap(),
            w("s1 t2 t1", 3)
        );
        assert_eq!(
            apply_move(&w("s1 t2 t1", 3), &v4.reversed()).unwrap(),
            w("t2 t1 s2", 3)
        );
        let ins = MoveInstance::insertion(1, Letter::sigma(2));
        assert_eq!(apply_move(&w("s1", 3), &ins).unwrap(), w("s1 s2 S2", 3));
        let del = MoveInstance::deletion(0, Letter::tau(1));
        assert!(apply_move(&w("t1 t1", 2), &del).unwrap().is_empty());
    }

    #[test]
    fn inapplicable_moves_error() {
        let v4 = MoveInstance::new(MoveKind::V4, 0, Direction::Forward);
        assert!(matches!(
            apply_move(&w("t1 t2 s2", 3), &v4),
            Err(Error::InapplicableMove { .. })
        ));
        assert!(apply_move(&w("s1", 2), &MoveInstance::insertion(5, Letter::tau(1))).is_err());
        assert!(apply_move(&w("s1", 2), &MoveInstance::insertion(0, Letter::tau(2))).is_err());
        assert!(apply_move(
            &w("s1 S1", 2),
            &MoveInstance::deletion(0, Letter::sigma_inv(1))
        )
        .is_err());
        let u1 = MoveInstance::new(MoveKind::U1, 0, Direction::Forward);
        assert!(apply_move(&w("s3 s1", 4), &u1).is_err());
        assert!(apply_move(&w("s3 s1", 4), &u1.reversed()).is_ok());
    }

    #[test]
    fn enumeration_is_sorted_and_capped() {
        let word = w("s1 t2 s1 S1", 4);
        let moves = enumerate_moves(&word);
        let mut sorted = moves.clone();
        sorted.sort();
        assert_eq!(moves, sorted);
        let capped = enumerate_moves_with(
            &word,
            EnumerateOptions {
                max_insertions: Some(4),
            },
        );
        assert_eq!(capped.iter().filter(|m| m.is_insertion()).count(), 4);
        assert_eq!(
            capped.iter().filter(|m| !m.is_insertion()).count(),
            moves.iter().filter(|m| !m.is_insertion()).count()
        );
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_words() {
        // all words of length <= 4 over n <= 3
        for n in 2..=3 {
            let alphabet: Vec<Letter> = (1..n)
                .flat_map(|i| [Letter::sigma(i), Letter::sigma_inv(i), Letter::tau(i)])
                .collect();
            let mut words = vec![vec![]];
            let mut frontier = vec![vec![]];
            for _ in 0..4 {
                let mut next = Vec::new();
                for word in &frontier {
                    for &l in &alphabet {
                        let mut longer: Vec<Letter> = word.clone();
                        longer.push(l);
                        next.push(longer);
                    }
                }
                words.extend(next.iter().cloned());
                frontier = next;
            }
            for letters in words {
                let word = BraidWord::new(n, letters).unwrap();
                let mut ours: Vec<(MoveKind, Vec<Letter>)> = enumerate_moves(&word)
                    .iter()
                    .map(|m| (m.kind, apply_move(&word, m).unwrap().into_letters()))
                    .collect();
                ours.sort();
                assert_eq!(ours, brute_force_neighbours(&word), "word {word}");
            }
        }
    }

    #[test]
    fn walk_is_reproducible() {
        let start = w("s1 s2 S1", 4);
        assert!(random_walk(&start, 0, 7, WalkPolicy::default()).is_empty());
        let a = random_walk(&start, 25, 42, WalkPolicy::default());
        let b = random_walk(&start, 25, 42, WalkPolicy::default());
        assert_eq!(a, b);
        assert_eq!(a.len(), 25);
        let c = random_walk(&start, 25, 43, WalkPolicy::default());
        assert_ne!(a, c);
        let chain = walk_chain(&start, &a);
        for (k, step) in a.iter().enumerate() {
            assert_eq!(apply_move(&chain[k], &step.mv).unwrap(), step.word);
        }
    }

    #[test]
    fn single_strand_walk_stops() {
        let start = w("", 1);
        assert!(enumerate_moves(&start).is_empty());
        assert!(random_walk(&start, 10, 1, WalkPolicy::default()).is_empty());
    }

    #[test]
    fn walk_log_replays() {
        let start = w("s1 S2", 3);
        let walk = random_walk(&start, 20, 9, WalkPolicy::default());
        let log = walk_log(&start, &walk);
        let lines: Vec<String> = log
            .iter()
            .map(|e| serde_json::to_string(e).unwrap())
            .collect();
        assert!(lines[0].contains("\"kind\":null"));
        let parsed: Vec<WalkLogEntry> = lines
            .iter()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(replay_log(&parsed, 3).unwrap(), walk_chain(&start, &walk));

        let mut tampered = parsed.clone();
        tampered[3].site = Some(tampered[3].site.unwrap() + 40);
        assert!(replay_log(&tampered, 3).is_err());
    }

    proptest! {
        #[test]
        fn every_enumerated_move_applies_and_reverses(word in arb_word(5, 12)) {
            for m in enumerate_moves(&word) {
                let next = apply_move(&word, &m).unwrap();
                let delta = next.len() as isize - word.len() as isize;
                prop_assert!([-2, 0, 2].contains(&delta));
                prop_assert_eq!(permutation(&next), permutation(&word));
                prop_assert_eq!(apply_move(&next, &m.reversed()).unwrap(), word.clone());
            }
        }
    }
}
