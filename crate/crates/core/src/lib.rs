//! Semantic analysis of unordered icon sequences.
//!
//! Symbols carry attribute-value features inherited through a
//! domain → taxeme → symbol hierarchy. Predicative symbols also carry a case
//! frame whose slots state selectional features. Analysing an utterance means
//! finding, for every predicative symbol, the best assignment of the other
//! symbols to its case slots. Candidates are scored by feature compatibility
//! and damped by linear distance. Attachments that do not clear an
//! acceptability threshold are discarded. The result is a typed semantic
//! network which the [`realizer`] turns into a French sentence through slot
//! templates.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the CLI and the
//! HTTP service live in the companion `pictosem` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analyzer;
pub mod bench;
pub mod feature;
pub mod lexicon;
pub mod network;
pub mod realizer;

mod num;

pub use analyzer::{
    analyze, analyze_detailed, best_affectation, best_affectation_matching, compatibility,
    enumerate_affectations, unification_value, Affectation, AffectationProblem, Analysis, AnalysisError,
    AnalyzerConfig, Binding, LocalityExponent, UnificationCandidate, Utterance,
};
pub use bench::{categorize, run_benchmark, BenchError, BenchReport, Category, GoldItem, ItemVerdict};
pub use feature::{Atom, FeatureError, FeatureSet};
pub use lexicon::{
    validate_lexicon, CaseFrame, CaseSlot, Domain, Finding, Lexicon, LexiconBuilder, LexiconError, Severity,
    SymbolEntry, Taxeme, ValidationReport,
};
pub use network::{Arc, NetworkError, SemanticNetwork, Vertex};
pub use realizer::{
    lexical_choice, realize, transfer, Dictionary, LemmaEntry, RealizationTemplate, RealizeError, Sentence,
    TemplateSet, TransferError,
};
