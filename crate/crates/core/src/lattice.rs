//! Empirical label-relationship table over a finite grid of singleton
//! triples.
//!
//! The grid is the cube of all in-range endpoints `(std, eps)` drawn from a
//! list of standard parts and a list of infinitesimal coefficients. For each
//! ordered label pair `(A, B)` the report records whether `A ⇒ B` held on
//! every grid triple and whether `A ∧ B` was witnessed at all, which makes
//! implication claims (and their non-vacuity) checkable by enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::hyperreal::Hyperreal;
use crate::subset::Subset;
use crate::taxonomy::{Label, Triple};

/// Endpoint grid: standard parts × infinitesimal coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub std_values: Vec<BigRational>,
    pub eps_values: Vec<BigRational>,
}

impl Default for GridSpec {
    /// Standard parts `0, 1/4, 1/2, 3/4, 1` with coefficients `-1, 0, +1`.
    fn default() -> Self {
        GridSpec {
            std_values: [0, 1, 2, 3, 4]
                .into_iter()
                .map(|n| BigRational::new(BigInt::from(n), BigInt::from(4)))
                .collect(),
            eps_values: [-1, 0, 1]
                .into_iter()
                .map(|n| BigRational::from_integer(BigInt::from(n)))
                .collect(),
        }
    }
}

impl GridSpec {
    /// All in-range endpoints of the grid, in grid order.
    pub fn endpoints(&self) -> Vec<Hyperreal> {
        let mut points = Vec::new();
        for std in &self.std_values {
            for eps in &self.eps_values {
                let p = Hyperreal::new(std.clone(), eps.clone());
                if p.in_unit_range() {
                    points.push(p);
                }
            }
        }
        points
    }

    /// The cube of singleton triples over [`GridSpec::endpoints`].
    pub fn triples(&self) -> Vec<Triple> {
        let singletons: Vec<Subset> = self
            .endpoints()
            .into_iter()
            .map(|p| Subset::singleton(p).expect("grid endpoints are range-checked"))
            .collect();
        let mut triples = Vec::with_capacity(singletons.len().pow(3));
        for t in &singletons {
            for i in &singletons {
                for f in &singletons {
                    triples.push(Triple::new(t.clone(), i.clone(), f.clone()));
                }
            }
        }
        triples
    }
}

/// Relationship of one ordered label pair over the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub antecedent: Label,
    pub consequent: Label,
    /// No grid triple satisfied the antecedent without the consequent.
    pub implication_holds: bool,
    /// Some grid triple satisfied both labels.
    pub conjunction_witnessed: bool,
}

/// The full ordered-pair table for one grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    endpoint_count: usize,
    triple_count: usize,
    relations: Vec<PairRelation>,
}

impl LatticeReport {
    pub fn endpoint_count(&self) -> usize {
        self.endpoint_count
    }

    pub fn triple_count(&self) -> usize {
        self.triple_count
    }

    pub fn relations(&self) -> &[PairRelation] {
        &self.relations
    }

    fn relation(&self, antecedent: Label, consequent: Label) -> &PairRelation {
        self.relations
            .iter()
            .find(|r| r.antecedent == antecedent && r.consequent == consequent)
            .expect("every ordered pair of distinct labels is present")
    }

    pub fn implication_holds(&self, antecedent: Label, consequent: Label) -> bool {
        self.relation(antecedent, consequent).implication_holds
    }

    pub fn conjunction_witnessed(&self, a: Label, b: Label) -> bool {
        self.relation(a, b).conjunction_witnessed
    }

    /// Plain-text rendering, one line per ordered pair, alphabetical.
    pub fn render(&self) -> String {
        let mut out = format!(
            "grid: {} endpoints, {} singleton triples\n",
            self.endpoint_count, self.triple_count
        );
        let name_width = Label::ALL.iter().map(|l| l.as_str().len()).max().unwrap();
        for r in &self.relations {
            out.push_str(&format!(
                "{:<w$} => {:<w$}  implication: {:<5}  conjunction: {}\n",
                r.antecedent.as_str(),
                r.consequent.as_str(),
                if r.implication_holds { "holds" } else { "fails" },
                if r.conjunction_witnessed {
                    "witnessed"
                } else {
                    "never"
                },
                w = name_width,
            ));
        }
        out
    }
}

/// Classifies every grid triple and tabulates all ordered label pairs.
pub fn lattice_report(spec: &GridSpec) -> LatticeReport {
    let endpoints = spec.endpoints();
    let triples = spec.triples();
    let label_sets: Vec<_> = triples.iter().map(Triple::classify).collect();

    let mut relations = Vec::with_capacity(Label::ALL.len() * (Label::ALL.len() - 1));
    for a in Label::ALL {
        for b in Label::ALL {
            if a == b {
                continue;
            }
            let mut implication_holds = true;
            let mut conjunction_witnessed = false;
            for labels in &label_sets {
                if labels.contains(a) {
                    if labels.contains(b) {
                        conjunction_witnessed = true;
                    } else {
                        implication_holds = false;
                    }
                }
            }
            relations.push(PairRelation {
                antecedent: a,
                consequent: b,
                implication_holds,
                conjunction_witnessed,
            });
        }
    }

    LatticeReport {
        endpoint_count: endpoints.len(),
        triple_count: triples.len(),
        relations,
    }
}
