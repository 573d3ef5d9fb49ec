//! Batch classification over files and strings, the JSON corpus format, and
//! deterministic report rendering.
//!
//! Two input shapes are accepted and auto-detected:
//!
//! * line format — one triple literal per line, blank lines ignored; records
//!   are identified by their 1-based line number;
//! * JSON — an array of objects `{"id", "kind"?, "triple"}` for single
//!   records, or `{"id", "event", "co_event"}` for event/complement pairs,
//!   with triples written as grammar literals.
//!
//! Output rendering (table and JSON lines) is a pure function of the records,
//! so identical input always produces byte-identical reports.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::model::{ComplementSpace, EventPair, ModelError, PropositionCorpus, PropositionEntry, SetModel};
use crate::taxonomy::{LabelSet, Triple};
use crate::text::{format_triple, parse_triple};
use crate::hyperreal::Hyperreal;

/// What a record describes; selects the vocabulary of a report, not the
/// classification itself (one engine serves all three).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecordKind {
    Element,
    Event,
    Proposition,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::Element => "element",
            RecordKind::Event => "event",
            RecordKind::Proposition => "proposition",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "element" => Some(RecordKind::Element),
            "event" => Some(RecordKind::Event),
            "proposition" => Some(RecordKind::Proposition),
            _ => None,
        }
    }
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One classified input record. Labels and the two diagnostic sums are
/// computed at construction, so they always agree with the stored triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    id: String,
    kind: RecordKind,
    triple: Triple,
    labels: LabelSet,
    inf_sum: Hyperreal,
    sup_sum: Hyperreal,
}

impl ClassificationRecord {
    pub fn new(id: String, kind: RecordKind, triple: Triple) -> Self {
        let labels = triple.classify();
        let inf_sum = triple.inf_sum();
        let sup_sum = triple.sup_sum();
        ClassificationRecord {
            id,
            kind,
            triple,
            labels,
            inf_sum,
            sup_sum,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> RecordKind {
        self.kind
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn labels(&self) -> LabelSet {
        self.labels
    }

    pub fn inf_sum(&self) -> &Hyperreal {
        &self.inf_sum
    }

    pub fn sup_sum(&self) -> &Hyperreal {
        &self.sup_sum
    }
}

/// A record that could not be turned into a [`ClassificationRecord`],
/// located by line number (line input) or by index/id (JSON input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

/// Result of classifying a batch: records in input order plus any
/// per-record failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchOutcome {
    pub records: Vec<ClassificationRecord>,
    pub errors: Vec<RecordError>,
}

impl BatchOutcome {
    pub fn is_clean(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Raw JSON corpus record; `triple`, `event` and `co_event` hold grammar
/// literals. Exactly one of `triple` or the `event`/`co_event` pair must be
/// present.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RawRecord {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triple: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub event: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub co_event: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub text: Option<String>,
}

/// Classifies a string in either input shape. `default_kind` applies to
/// line records and to JSON records without a `kind` field.
pub fn classify_str(input: &str, default_kind: RecordKind) -> BatchOutcome {
    if input.trim_start().starts_with('[') {
        classify_json(input, default_kind)
    } else {
        classify_lines(input, default_kind)
    }
}

/// Reads and classifies a file (see [`classify_str`]).
pub fn classify_file(path: &Path, default_kind: RecordKind) -> io::Result<BatchOutcome> {
    Ok(classify_str(&fs::read_to_string(path)?, default_kind))
}

fn classify_lines(input: &str, kind: RecordKind) -> BatchOutcome {
    let mut outcome = BatchOutcome::default();
    for (index, line) in input.lines().enumerate() {
        let line_no = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        match parse_triple(line) {
            Ok(triple) => outcome.records.push(ClassificationRecord::new(
                line_no.to_string(),
                kind,
                triple,
            )),
            Err(e) => outcome.errors.push(RecordError {
                location: format!("line {line_no}"),
                message: e.to_string(),
            }),
        }
    }
    outcome
}

fn classify_json(input: &str, default_kind: RecordKind) -> BatchOutcome {
    let mut outcome = BatchOutcome::default();
    let raw: Vec<RawRecord> = match serde_json::from_str(input) {
        Ok(raw) => raw,
        Err(e) => {
            outcome.errors.push(RecordError {
                location: "json".to_string(),
                message: e.to_string(),
            });
            return outcome;
        }
    };
    for (index, record) in raw.into_iter().enumerate() {
        let location = format!("record {} (id \"{}\")", index + 1, record.id);
        let kind = match record.kind.as_deref() {
            None => default_kind,
            Some(k) => match RecordKind::parse(k) {
                Some(kind) => kind,
                None => {
                    outcome.errors.push(RecordError {
                        location,
                        message: format!("unknown kind \"{k}\""),
                    });
                    continue;
                }
            },
        };
        let literal = match (&record.triple, &record.event, &record.co_event) {
            (Some(t), None, None) => t,
            (None, Some(_), Some(_)) => {
                outcome.errors.push(RecordError {
                    location,
                    message: "event/co_event pairs belong to model files; classify expects \
                              records with a \"triple\" field"
                        .to_string(),
                });
                continue;
            }
            _ => {
                outcome.errors.push(RecordError {
                    location,
                    message: "record needs either a \"triple\" field or both \"event\" and \
                              \"co_event\""
                        .to_string(),
                });
                continue;
            }
        };
        match parse_triple(literal) {
            Ok(triple) => {
                outcome
                    .records
                    .push(ClassificationRecord::new(record.id, kind, triple))
            }
            Err(e) => outcome.errors.push(RecordError {
                location,
                message: e.to_string(),
            }),
        }
    }
    outcome
}

/// A homogeneous model loaded from a JSON corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedModel {
    Elements(SetModel),
    Events(ComplementSpace),
    Propositions(PropositionCorpus),
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ModelLoadError {
    #[error("invalid model file: {0}")]
    Json(String),
    #[error("record {index} (id \"{id}\"): {message}")]
    Record {
        index: usize,
        id: String,
        message: String,
    },
    #[error("model files may not mix single-triple records with event/co_event pairs")]
    MixedShapes,
    #[error("{0}")]
    Model(#[from] ModelError),
}

/// Loads a JSON corpus as a model. Pair records produce a complement space;
/// single records produce a proposition corpus when every record is marked
/// `proposition`, and a set model otherwise.
pub fn load_model_str(input: &str) -> Result<LoadedModel, ModelLoadError> {
    let raw: Vec<RawRecord> =
        serde_json::from_str(input).map_err(|e| ModelLoadError::Json(e.to_string()))?;

    let mut singles: Vec<RawRecord> = Vec::new();
    let mut pairs: Vec<EventPair> = Vec::new();
    for (index, record) in raw.into_iter().enumerate() {
        let index = index + 1;
        let fail = |message: String| ModelLoadError::Record {
            index,
            id: record.id.clone(),
            message,
        };
        match (&record.triple, &record.event, &record.co_event) {
            (Some(_), None, None) => singles.push(record),
            (None, Some(event), Some(co_event)) => {
                let event = parse_triple(event).map_err(|e| fail(format!("event: {e}")))?;
                let co_event =
                    parse_triple(co_event).map_err(|e| fail(format!("co_event: {e}")))?;
                pairs.push(EventPair {
                    id: record.id,
                    event,
                    co_event,
                });
            }
            _ => {
                return Err(fail(
                    "record needs either a \"triple\" field or both \"event\" and \"co_event\""
                        .to_string(),
                ))
            }
        }
    }

    match (singles.is_empty(), pairs.is_empty()) {
        (false, false) => Err(ModelLoadError::MixedShapes),
        // an empty file is an empty set model (the nihilist edge case)
        (true, true) => Ok(LoadedModel::Elements(SetModel::empty())),
        (true, false) => Ok(LoadedModel::Events(ComplementSpace::new(pairs)?)),
        (false, true) => {
            let all_propositions = singles
                .iter()
                .all(|r| r.kind.as_deref() == Some("proposition"));
            let mut parsed = Vec::with_capacity(singles.len());
            for (index, record) in singles.into_iter().enumerate() {
                let literal = record.triple.as_deref().expect("checked above");
                let triple = parse_triple(literal).map_err(|e| ModelLoadError::Record {
                    index: index + 1,
                    id: record.id.clone(),
                    message: e.to_string(),
                })?;
                parsed.push((record, triple));
            }
            if all_propositions {
                let items = parsed
                    .into_iter()
                    .map(|(r, triple)| PropositionEntry {
                        id: r.id,
                        text: r.text,
                        triple,
                    })
                    .collect();
                Ok(LoadedModel::Propositions(PropositionCorpus::new(items)?))
            } else {
                let entries = parsed.into_iter().map(|(r, triple)| (r.id, triple)).collect();
                Ok(LoadedModel::Elements(SetModel::new(entries)?))
            }
        }
    }
}

/// Serializes single-triple records to the JSON corpus format (canonical
/// triple literals, compact layout).
pub fn corpus_to_json(records: &[(String, RecordKind, Triple)]) -> String {
    let raw: Vec<RawRecord> = records
        .iter()
        .map(|(id, kind, triple)| RawRecord {
            id: id.clone(),
            kind: Some(kind.as_str().to_string()),
            triple: Some(format_triple(triple)),
            event: None,
            co_event: None,
            text: None,
        })
        .collect();
    serde_json::to_string(&raw).expect("corpus records always serialize")
}

#[derive(Serialize)]
struct JsonReportRow<'a> {
    id: &'a str,
    labels: Vec<&'static str>,
    n_inf: String,
    n_sup: String,
}

/// One JSON object per record, one per line, fields `id`, `labels` (sorted),
/// `n_inf`, `n_sup`.
pub fn render_json_lines(records: &[ClassificationRecord]) -> String {
    let mut out = String::new();
    for record in records {
        let row = JsonReportRow {
            id: record.id(),
            labels: record.labels().iter().map(|l| l.as_str()).collect(),
            n_inf: record.inf_sum().to_string(),
            n_sup: record.sup_sum().to_string(),
        };
        out.push_str(&serde_json::to_string(&row).expect("report rows always serialize"));
        out.push('\n');
    }
    out
}

/// Aligned plain-text table; empty input renders as an empty report.
pub fn render_table(records: &[ClassificationRecord]) -> String {
    if records.is_empty() {
        return String::new();
    }
    let header = ["id", "kind", "labels", "n_inf", "n_sup"];
    let rows: Vec<[String; 5]> = records
        .iter()
        .map(|r| {
            [
                r.id().to_string(),
                r.kind().to_string(),
                r.labels().to_string(),
                r.inf_sum().to_string(),
                r.sup_sum().to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: [&str; 5]| {
        for (i, (cell, width)) in cells.iter().zip(widths.iter()).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..*width {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(&mut out, header);
    for row in &rows {
        emit(
            &mut out,
            [&row[0], &row[1], &row[2], &row[3], &row[4]].map(|s| s.as_str()),
        );
    }
    out
}
