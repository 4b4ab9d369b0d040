use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator index out of range in token `{token}` at byte {position}: index must lie in 1..={max}")]
    IndexOutOfRange {
        token: String,
        position: usize,
        max: usize,
    },

    #[error("letter index {index} is out of range for {strands} strands")]
    LetterOutOfRange { index: usize, strands: usize },

    #[error("strand count must be at least 1")]
    NoStrands,

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("move {kind:?} ({direction:?}) does not apply at site {site}")]
    InapplicableMove {
        kind: crate::moves::MoveKind,
        direction: crate::moves::Direction,
        site: usize,
    },

    #[error("letter {index} is not a classical crossing")]
    NotClassical { index: usize },

    #[error("letter position {index} is out of range for a word of length {len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("word is not almost classical: odd crossings at letters {odd:?}")]
    NotAlmostClassical { odd: Vec<usize> },

    #[error("top numbering {found:?} is not consecutive from 1")]
    TopNumbering { found: Vec<i64> },

    #[error("crossing at letter {word_index} has left number {lambda} outside 1..={max}")]
    LambdaOutOfRange {
        word_index: usize,
        lambda: i64,
        max: usize,
    },

    #[error(
        "virtual letter at position {index}: the Artin action is defined on classical words only"
    )]
    VirtualLetter { index: usize },

    #[error("empty chain")]
    EmptyChain,

    #[error("chain element 0 must be a classical word")]
    ChainStartNotClassical,

    #[error("chain element {index}: {source}")]
    Chain {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}
