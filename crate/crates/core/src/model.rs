//! Collection-level structures: a set over a universe of elements, a
//! probability space of event/complement pairs, and a proposition corpus.
//!
//! The relational dialetheist/trivialist predicates live here. "Belongs"
//! reads the *standard part* of the relevant infimum: an element belongs to
//! the set when `st(inf(T)) > 0` and to the complement when `st(inf(F)) > 0`,
//! so a merely infinitesimal degree never creates an overlap.

use std::collections::BTreeSet;

use num_traits::Signed;
use thiserror::Error;

use crate::taxonomy::{Label, LabelSet, Triple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown element: {0}")]
    UnknownElement(String),
    #[error("duplicate identifier: {0}")]
    DuplicateId(String),
}

fn check_unique_ids<'a>(ids: impl Iterator<Item = &'a str>) -> Result<(), ModelError> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(ModelError::DuplicateId(id.to_string()));
        }
    }
    Ok(())
}

fn has_positive_truth(t: &Triple) -> bool {
    t.truth().inf().standard_part().is_positive()
}

fn has_positive_falsity(t: &Triple) -> bool {
    t.falsity().inf().standard_part().is_positive()
}

/// Universal label check over a collection of triples. An empty collection
/// lifts only `Nihilist`: the empty set is the canonical nihilist set.
fn lift_over<'a>(triples: impl IntoIterator<Item = &'a Triple>, label: Label) -> bool {
    let mut iter = triples.into_iter().peekable();
    if iter.peek().is_none() {
        return label == Label::Nihilist;
    }
    iter.all(|t| t.classify().contains(label))
}

/// A set over an ordered universe of named elements, each carrying the
/// `(T, I, F)` triple of its membership in the set. Complement membership is
/// read from the falsity component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetModel {
    entries: Vec<(String, Triple)>,
}

impl SetModel {
    pub fn new(entries: Vec<(String, Triple)>) -> Result<Self, ModelError> {
        check_unique_ids(entries.iter().map(|(id, _)| id.as_str()))?;
        Ok(SetModel { entries })
    }

    pub fn empty() -> Self {
        SetModel { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn universe(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(id, _)| id.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Triple)> {
        self.entries.iter().map(|(id, t)| (id.as_str(), t))
    }

    pub fn triple_of(&self, element: &str) -> Result<&Triple, ModelError> {
        self.entries
            .iter()
            .find(|(id, _)| id == element)
            .map(|(_, t)| t)
            .ok_or_else(|| ModelError::UnknownElement(element.to_string()))
    }

    /// Membership in the set: `st(inf(T)) > 0`.
    pub fn belongs_to(&self, element: &str) -> Result<bool, ModelError> {
        Ok(has_positive_truth(self.triple_of(element)?))
    }

    /// Membership in the complement: `st(inf(F)) > 0`.
    pub fn belongs_to_complement(&self, element: &str) -> Result<bool, ModelError> {
        Ok(has_positive_falsity(self.triple_of(element)?))
    }

    /// At least one element belongs to the set and to its complement.
    pub fn is_dialetheist(&self) -> bool {
        self.entries
            .iter()
            .any(|(_, t)| has_positive_truth(t) && has_positive_falsity(t))
    }

    /// Every element belongs to the set and to its complement. Requires a
    /// nonempty universe: trivialism needs a witness.
    pub fn is_trivialist(&self) -> bool {
        !self.entries.is_empty()
            && self
                .entries
                .iter()
                .all(|(_, t)| has_positive_truth(t) && has_positive_falsity(t))
    }

    /// True when every element's classification carries `label`. The empty
    /// universe lifts only `Nihilist`.
    pub fn lift_label(&self, label: Label) -> bool {
        lift_over(self.entries.iter().map(|(_, t)| t), label)
    }
}

/// One event together with its complementary event, both as triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventPair {
    pub id: String,
    pub event: Triple,
    pub co_event: Triple,
}

/// A probability space given as a list of event/complement pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementSpace {
    pairs: Vec<EventPair>,
}

impl ComplementSpace {
    pub fn new(pairs: Vec<EventPair>) -> Result<Self, ModelError> {
        check_unique_ids(pairs.iter().map(|p| p.id.as_str()))?;
        Ok(ComplementSpace { pairs })
    }

    pub fn empty() -> Self {
        ComplementSpace { pairs: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[EventPair] {
        &self.pairs
    }

    fn overlaps(pair: &EventPair) -> bool {
        has_positive_truth(&pair.event) && has_positive_truth(&pair.co_event)
    }

    /// At least one event and its complement both occur with substantively
    /// positive truth.
    pub fn is_dialetheist(&self) -> bool {
        self.pairs.iter().any(Self::overlaps)
    }

    /// Every event overlaps its complement; requires at least one pair.
    pub fn is_trivialist(&self) -> bool {
        !self.pairs.is_empty() && self.pairs.iter().all(Self::overlaps)
    }
}

/// One estimated proposition: identifier, optional source text, and its
/// truth/indeterminacy/falsity triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionEntry {
    pub id: String,
    pub text: Option<String>,
    pub triple: Triple,
}

/// A corpus of estimated propositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionCorpus {
    items: Vec<PropositionEntry>,
}

impl PropositionCorpus {
    pub fn new(items: Vec<PropositionEntry>) -> Result<Self, ModelError> {
        check_unique_ids(items.iter().map(|p| p.id.as_str()))?;
        Ok(PropositionCorpus { items })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[PropositionEntry] {
        &self.items
    }

    /// True when every proposition's classification carries `label`; the
    /// empty corpus lifts only `Nihilist`, like the empty set model.
    pub fn lift_label(&self, label: Label) -> bool {
        lift_over(self.items.iter().map(|p| &p.triple), label)
    }
}

/// Probability classification: the probability classes repeat the set-class
/// conditions verbatim, so this is the one classification engine under a
/// probability reading. The record kind supplies the vocabulary.
pub fn classify_probability(t: &Triple) -> LabelSet {
    t.classify()
}

/// Proposition (logic) classification; same engine, logic reading.
pub fn classify_proposition(t: &Triple) -> LabelSet {
    t.classify()
}
