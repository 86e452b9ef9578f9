//! Constructive transformations between five classes of graded algebras:
//! path algebras in degree one (PA1), weighted path algebras (WPA), monomial
//! algebras (MA), connected monomial algebras (CMA), and connected monomial
//! algebras generated in degree one (CMA1).
//!
//! The library builds the weighted Ufnarovskii graph of a connected monomial
//! algebra, normalizes weighted quivers to degree one by splitting arrows,
//! connectifies quiver algebras onto their arrow alphabet, and machine-checks
//! the functorial and combinatorial identities behind these constructions on
//! finite degree windows with exact rational arithmetic.

pub mod corpus;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod model;
pub mod pipeline;
pub mod report;
pub mod reps;
pub mod split;
pub mod ufn;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use model::{
    classify, connectify, emit_json, emit_string, parse_input, reduce_forbidden, AlgebraClass,
    AlgebraInput, Arrow, Classification, Generator, MonomialPresentation, QuiverMonomialAlgebra,
    QuiverPath, QuiverRef, WeightedQuiver, Word,
};
pub use pipeline::{run_pipeline, PipelineReport, PipelineStep};
pub use report::CheckReport;
pub use split::{
    normalize_to_degree_one, split_arrow, weight_discrepancy, SplitOrder, SplitStep, SplitTrace,
};
pub use ufn::{build_ufnarovskii, classify_growth, ell, Growth, LabeledPath, PathSum, UfnGraph};
pub use verify::{run_named_suite, SuiteOptions, SuiteReport};
pub use words::{DegreeSeries, FactorAutomaton, DEFAULT_ENUM_BUDGET};
