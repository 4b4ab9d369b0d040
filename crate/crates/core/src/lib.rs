//! Virtual braid words and the machinery that maps virtual move sequences
//! between classical braid words back to classical braid words.
//!
//! * [`word`]: words over `σᵢ^±1` and `τᵢ`, parsing, inverse, free reduction,
//!   strand permutation.
//! * [`moves`]: the relations U1–U3 and V1–V5 as reversible local rewrites,
//!   plus a seeded random walk.
//! * [`numbering`]: bottom-anchored integer numbering, Gaussian parity,
//!   almost classical test, oriented smoothing.
//! * [`projection`]: Gaussian projection, detour elimination, and the chain
//!   pipeline.
//! * [`artin`]: the Artin action on a free group, used as the equality oracle
//!   for classical words.
//! * [`render`]: SVG diagrams.
//! * [`cli`]: the `vbraid` command line.
//!
//! ```
//! use vbraid::{gauss_project, classicalize, BraidWord};
//!
//! let w = BraidWord::parse("t1 s2 S2 t1", 3).unwrap();
//! let projected = gauss_project(&w).result;
//! assert_eq!(projected.to_string(), "t1 t2 t2 t1");
//! assert!(classicalize(&projected).unwrap().is_empty());
//! ```

pub mod artin;
pub mod cli;
pub mod error;
pub mod moves;
pub mod numbering;
pub mod projection;
pub mod render;
pub mod sample;
pub mod word;

pub use artin::{artin_action, classical_equal, free_multiply, EndoImages, FreeLetter, FreeWord};
pub use error::{Error, Result};
pub use moves::{
    apply_move, enumerate_moves, random_walk, walk_chain, Direction, MoveInstance, MoveKind,
    WalkPolicy, WalkStep,
};
pub use numbering::{
    integer_numbering, is_almost_classical, parity, smooth, top_numbering, CrossingKind,
    CrossingRecord, IntegerNumbering, Parity,
};
pub use projection::{
    classicalize, gauss_project, injectivity_pipeline, PipelineReport, ProjectionTrace,
};
pub use word::{BraidWord, Letter, Permutation, Sign};
