//! Gaussian projection, detour elimination, and the chain check that turns a
//! sequence of virtual moves between classical words into a chain of
//! classical words.

use serde::{Deserialize, Serialize};

use crate::artin::classical_equal;
use crate::error::{Error, Result};
use crate::numbering::{integer_numbering, is_consecutive, CrossingKind, Parity};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionRound {
    pub input: BraidWord,
    /// Letter positions turned virtual in this round.
    pub virtualized: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionTrace {
    pub rounds: Vec<ProjectionRound>,
    pub result: BraidWord,
}

/// Repeatedly turns every odd crossing into a virtual crossing at the same
/// site until all remaining classical crossings are even.
///
/// Only rounds that change the word are recorded, so a word that is already
/// almost classical yields an empty trace.
pub fn gauss_project(w: &BraidWord) -> ProjectionTrace {
    let mut rounds = Vec::new();
    let mut current = w.clone();
    loop {
        let odd = integer_numbering(&current).odd_letters();
        if odd.is_empty() {
            break;
        }
        let mut letters = current.letters().to_vec();
        for &k in &odd {
            letters[k] = letters[k].virtualized();
        }
        let next = BraidWord::from_checked(current.strands(), letters);
        rounds.push(ProjectionRound {
            input: current,
            virtualized: odd,
        });
        current = next;
    }
    ProjectionTrace {
        rounds,
        result: current,
    }
}

/// Removes the virtual crossings of an almost classical word whose top
/// endpoints are numbered `1..=n`.
///
/// Each classical crossing with incoming left number `λ` and sign `ε` becomes
/// `σ_λ^ε`; virtual letters are dropped.
pub fn classicalize(w: &BraidWord) -> Result<BraidWord> {
    let numbering = integer_numbering(w);
    let odd = numbering.odd_letters();
    if !odd.is_empty() {
        return Err(Error::NotAlmostClassical { odd });
    }
    if !is_consecutive(&numbering.top_numbers) {
        return Err(Error::TopNumbering {
            found: numbering.top_numbers,
        });
    }
    let max = w.strands() - 1;
    let mut letters = Vec::with_capacity(w.classical_count());
    for c in &numbering.crossings {
        if let CrossingKind::Classical { sign, lambda, .. } = c.kind {
            if lambda < 1 || lambda > max as i64 {
                return Err(Error::LambdaOutOfRange {
                    word_index: c.word_index,
                    lambda,
                    max,
                });
            }
            letters.push(Letter::Classical {
                index: lambda as usize,
                sign,
            });
        }
    }
    Ok(BraidWord::from_checked(w.strands(), letters))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub strands: usize,
    pub input_chain: Vec<BraidWord>,
    pub projected_chain: Vec<BraidWord>,
    pub classical_chain: Vec<BraidWord>,
    pub equal: bool,
    /// Index `i` of the first pair `(i - 1, i)` that is not equal in `B_n`.
    pub first_failure: Option<usize>,
}

impl PipelineReport {
    pub fn json(&self) -> PipelineJson {
        let strings = |chain: &[BraidWord]| chain.iter().map(|w| w.to_string()).collect();
        PipelineJson {
            strands: self.strands,
            chain: strings(&self.input_chain),
            projected: strings(&self.projected_chain),
            classical: strings(&self.classical_chain),
            equal: self.equal,
            first_failure: self.first_failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineJson {
    pub strands: usize,
    pub chain: Vec<String>,
    pub projected: Vec<String>,
    pub classical: Vec<String>,
    pub equal: bool,
    pub first_failure: Option<usize>,
}

/// Projects every word of a move chain that starts at a classical word,
/// classicalizes each projection, and certifies adjacent classical words
/// equal with the Artin oracle.
pub fn injectivity_pipeline(chain: &[BraidWord]) -> Result<PipelineReport> {
    let first = chain.first().ok_or(Error::EmptyChain)?;
    let strands = first.strands();
    if let Some(bad) = chain.iter().find(|w| w.strands() != strands) {
        return Err(Error::StrandMismatch {
            left: strands,
            right: bad.strands(),
        });
    }
    if !first.is_classical() {
        return Err(Error::ChainStartNotClassical);
    }
    let projected_chain: Vec<BraidWord> = chain.iter().map(|w| gauss_project(w).result).collect();
    let classical_chain = projected_chain
        .iter()
        .enumerate()
        .map(|(index, w)| {
            classicalize(w).map_err(|e| Error::Chain {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut first_failure = None;
    for i in 1..classical_chain.len() {
        if !classical_equal(&classical_chain[i - 1], &classical_chain[i])? {
            first_failure = Some(i);
            break;
        }
    }
    Ok(PipelineReport {
        strands,
        input_chain: chain.to_vec(),
        projected_chain,
        classical_chain,
        equal: first_failure.is_none(),
        first_failure,
    })
}

/// Parity of each crossing in `w`, with virtual letters reported as `None`.
/// Convenient when comparing a word with its image under a move.
pub fn parity_profile(w: &BraidWord) -> Vec<Option<Parity>> {
    integer_numbering(w)
        .crossings
        .iter()
        .map(|c| c.parity())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{apply_move, random_walk, walk_chain, MoveInstance, WalkPolicy};
    use crate::numbering::{is_almost_classical, top_numbering};
    use crate::word::parse;
    use crate::word::tests::arb_word;
    use proptest::prelude::*;

    fn w(text: &str, n: usize) -> BraidWord {
        parse(text, n).unwrap()
    }

    #[test]
    fn classical_words_are_fixed() {
        let trace = gauss_project(&w("s1 S2", 3));
        assert!(trace.rounds.is_empty());
        assert_eq!(trace.result, w("s1 S2", 3));
    }

    #[test]
    fn non_numberable_word_projects_in_one_round() {
        let trace = gauss_project(&w("t1 s1 t1 s1", 2));
        assert_eq!(trace.rounds.len(), 1);
        assert_eq!(trace.rounds[0].virtualized, vec![1, 3]);
        assert_eq!(trace.result, w("t1 t1 t1 t1", 2));
    }

    #[test]
    fn trivial_virtual_word_projects_to_virtual_identity() {
        let trace = gauss_project(&w("t1 s2 S2 t1", 3));
        assert_eq!(trace.result, w("t1 t2 t2 t1", 3));
        assert!(classicalize(&trace.result).unwrap().is_empty());
    }

    #[test]
    fn projection_can_need_several_rounds() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let found = (0..2000)
            .map(|_| crate::sample::random_virtual(&mut rng, 4, 12, 0.4))
            .find(|w| gauss_project(w).rounds.len() >= 2);
        let word = found.expect("a multi-round projection among 2000 samples");
        let trace = gauss_project(&word);
        assert!(is_almost_classical(&trace.result));
        assert!(trace.rounds.len() <= word.classical_count());
    }

    #[test]
    fn classicalize_examples() {
        assert!(classicalize(&w("t1 t2 t2 t1", 3)).unwrap().is_empty());
        assert_eq!(classicalize(&w("s2 S1", 3)).unwrap(), w("s2 S1", 3));
        assert_eq!(
            classicalize(&w("t1", 2)),
            Err(Error::TopNumbering { found: vec![2, 1] })
        );
        assert_eq!(
            classicalize(&w("t1 s1 t1 s1", 2)),
            Err(Error::NotAlmostClassical { odd: vec![1, 3] })
        );
        // t2 t1 s2 t1 t2 keeps the consecutive top numbering; its crossing is σ₁
        assert_eq!(classicalize(&w("t2 t1 s2 t1 t2", 3)).unwrap(), w("s1", 3));
    }

    #[test]
    fn pipeline_single_word() {
        let report = injectivity_pipeline(&[w("s1 S2", 3)]).unwrap();
        assert!(report.equal);
        assert_eq!(report.classical_chain, vec![w("s1 S2", 3)]);
    }

    #[test]
    fn pipeline_hand_chain() {
        let chain = [w("s2 S2", 3), w("t1 s2 S2 t1", 3), w("t1 t1", 3)];
        let report = injectivity_pipeline(&chain).unwrap();
        assert!(report.equal);
        assert_eq!(report.first_failure, None);
        assert_eq!(
            report.classical_chain,
            vec![w("s2 S2", 3), w("", 3), w("", 3)]
        );
        let json = serde_json::to_value(report.json()).unwrap();
        assert_eq!(json["classical"], serde_json::json!(["s2 S2", "", ""]));
        assert_eq!(json["first_failure"], serde_json::Value::Null);
    }

    #[test]
    fn pipeline_reports_inequality() {
        let report = injectivity_pipeline(&[w("s1", 2), w("S1", 2)]).unwrap();
        assert!(!report.equal);
        assert_eq!(report.first_failure, Some(1));
    }

    #[test]
    fn pipeline_errors() {
        assert_eq!(injectivity_pipeline(&[]), Err(Error::EmptyChain));
        assert_eq!(
            injectivity_pipeline(&[w("t1", 2)]),
            Err(Error::ChainStartNotClassical)
        );
        assert!(matches!(
            injectivity_pipeline(&[w("s1", 2), w("s1", 3)]),
            Err(Error::StrandMismatch { .. })
        ));
        match injectivity_pipeline(&[w("", 2), w("t1", 2)]) {
            Err(Error::Chain { index: 1, source }) => {
                assert!(matches!(*source, Error::TopNumbering { .. }))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn walk_from_generator_stays_equal() {
        let start = w("s1", 2);
        let walk = random_walk(&start, 10, 42, WalkPolicy::default());
        assert_eq!(walk.len(), 10);
        let report = injectivity_pipeline(&walk_chain(&start, &walk)).unwrap();
        assert!(report.equal);
        assert!(classical_equal(report.classical_chain.last().unwrap(), &start).unwrap());
    }

    proptest! {
        #[test]
        fn projection_is_idempotent(word in arb_word(6, 30)) {
            let once = gauss_project(&word);
            prop_assert!(is_almost_classical(&once.result));
            prop_assert!(gauss_project(&once.result).rounds.is_empty());
            prop_assert_eq!(once.result.permutation(), word.permutation());
            prop_assert!(once.rounds.len() <= word.classical_count());
            prop_assert!(once.rounds.iter().all(|r| !r.virtualized.is_empty()));
        }

        #[test]
        fn projection_commutes_with_moves(word in arb_word(5, 16), pick in any::<prop::sample::Index>()) {
            let moves = crate::moves::enumerate_moves(&word);
            let m: MoveInstance = moves[pick.index(moves.len())];
            let next = apply_move(&word, &m).unwrap();
            prop_assert_eq!(top_numbering(&next), top_numbering(&word));
            let (a, b) = (gauss_project(&word).result, gauss_project(&next).result);
            prop_assert_eq!(top_numbering(&a), top_numbering(&b));
            if is_consecutive(&top_numbering(&a)) {
                let (ca, cb) = (classicalize(&a).unwrap(), classicalize(&b).unwrap());
                prop_assert!(classical_equal(&ca, &cb).unwrap());
            }
        }
    }
}
