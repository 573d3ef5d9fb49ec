//! Exact `(T, I, F)` triples over the extended unit interval and the class
//! taxonomy built on them.
//!
//! Values live in the unit interval extended by one infinitesimal step on
//! each side, `[0−ε, 1+ε]`, realized as exact rationals plus a rational
//! multiple of a formal infinitesimal ([`Hyperreal`]). Truth, indeterminacy
//! and falsity degrees are nonempty unions of closed intervals over that
//! range ([`Subset`]), and a [`Triple`] of them classifies into the derived
//! classes — intuitionistic, paraconsistent, faillibilist, paradoxist,
//! pseudo-paradoxist, tautological, nihilist, plus classical/fuzzy detectors
//! — under set, probability and logic readings alike ([`Triple::classify`]).
//!
//! Collections add the relational checks: dialetheist and trivialist set
//! models, event/complement spaces, and universal label lifts
//! ([`SetModel`], [`ComplementSpace`], [`PropositionCorpus`]).
//!
//! The [`text`] module defines the literal grammar (`({1+};{0-};{0-})`),
//! [`report`] handles batch classification and the JSON corpus format, and
//! [`lattice`] tabulates label implications over endpoint grids.
//!
//! Everything is exact: decimal input becomes rationals, arithmetic never
//! rounds, and all predicates compare at full lexicographic order.

pub mod hyperreal;
pub mod lattice;
pub mod model;
pub mod report;
pub mod subset;
pub mod taxonomy;
pub mod text;

// the exact-rational types appearing in public signatures
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use hyperreal::Hyperreal;
pub use lattice::{lattice_report, GridSpec, LatticeReport, PairRelation};
pub use model::{
    classify_probability, classify_proposition, ComplementSpace, EventPair, ModelError,
    PropositionCorpus, PropositionEntry, SetModel,
};
pub use report::{
    classify_file, classify_str, corpus_to_json, load_model_str, render_json_lines, render_table,
    BatchOutcome, ClassificationRecord, LoadedModel, ModelLoadError, RawRecord, RecordError,
    RecordKind,
};
pub use subset::{Interval, Subset, SubsetError};
pub use taxonomy::{Label, LabelSet, ParseLabelError, Triple};
pub use text::{
    format_endpoint, format_subset, format_triple, parse_endpoint, parse_rational, parse_subset,
    parse_triple, ParseError, TripleComponent,
};
