//! The `(T, I, F)` triple and the per-triple class predicates.
//!
//! A triple carries three subsets of the extended unit range: truth,
//! indeterminacy and falsity degrees. Every class here is a condition on one
//! triple, and [`Triple::classify`] reports *all* conditions that hold, so a
//! triple routinely carries several labels at once. The comparisons against
//! `1` in the sum predicates run at full lexicographic order, which makes
//! infinitesimal differences classification-relevant: `({1+};{0};{0})` has
//! supremum sum `1 + ε` and is therefore paraconsistent as well as
//! tautological, while `({1+};{0-};{0-})` has supremum sum `1 − ε` and picks
//! up the intuitionistic label instead. The classifier reports what the
//! conditions yield; it does not suppress such co-labels.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::hyperreal::Hyperreal;
use crate::subset::Subset;

/// The ten per-triple class labels, ordered alphabetically.
///
/// Dialetheist and trivialist are deliberately absent: they are relational
/// properties of whole collections (see the model types), not of one triple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Label {
    Classical,
    Faillibilist,
    Fuzzy,
    Intuitionistic,
    Neutrosophic,
    Nihilist,
    Paraconsistent,
    Paradoxist,
    PseudoParadoxist,
    Tautological,
}

impl Label {
    pub const ALL: [Label; 10] = [
        Label::Classical,
        Label::Faillibilist,
        Label::Fuzzy,
        Label::Intuitionistic,
        Label::Neutrosophic,
        Label::Nihilist,
        Label::Paraconsistent,
        Label::Paradoxist,
        Label::PseudoParadoxist,
        Label::Tautological,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Classical => "Classical",
            Label::Faillibilist => "Faillibilist",
            Label::Fuzzy => "Fuzzy",
            Label::Intuitionistic => "Intuitionistic",
            Label::Neutrosophic => "Neutrosophic",
            Label::Nihilist => "Nihilist",
            Label::Paraconsistent => "Paraconsistent",
            Label::Paradoxist => "Paradoxist",
            Label::PseudoParadoxist => "PseudoParadoxist",
            Label::Tautological => "Tautological",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseLabelError {
    /// Dialetheist/trivialist name a property of a collection, not of a
    /// single triple, so they cannot be used where a per-triple label is
    /// expected (e.g. a lift check).
    #[error("{0} is a relational check over a whole model, not a per-triple label")]
    Relational(String),
    #[error("unknown label: {0}")]
    Unknown(String),
}

impl FromStr for Label {
    type Err = ParseLabelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        for label in Label::ALL {
            if s.eq_ignore_ascii_case(label.as_str()) {
                return Ok(label);
            }
        }
        // also accept the hyphenated spelling
        if s.eq_ignore_ascii_case("pseudo-paradoxist") {
            return Ok(Label::PseudoParadoxist);
        }
        if s.eq_ignore_ascii_case("dialetheist") || s.eq_ignore_ascii_case("trivialist") {
            return Err(ParseLabelError::Relational(s.to_string()));
        }
        Err(ParseLabelError::Unknown(s.to_string()))
    }
}

/// A set of [`Label`]s, iterated in alphabetical label order.
#[derive(Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct LabelSet {
    bits: u16,
}

impl LabelSet {
    pub fn empty() -> Self {
        LabelSet::default()
    }

    pub fn insert(&mut self, label: Label) {
        self.bits |= 1 << label as u16;
    }

    pub fn contains(self, label: Label) -> bool {
        self.bits & (1 << label as u16) != 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Label> {
        Label::ALL.into_iter().filter(move |&l| self.contains(l))
    }
}

impl FromIterator<Label> for LabelSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        let mut set = LabelSet::empty();
        for label in iter {
            set.insert(label);
        }
        set
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            f.write_str(label.as_str())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Truth, indeterminacy and falsity degrees of one element, event or
/// proposition, each a normalized subset of the extended unit range.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Triple {
    truth: Subset,
    indeterminacy: Subset,
    falsity: Subset,
}

impl Triple {
    pub fn new(truth: Subset, indeterminacy: Subset, falsity: Subset) -> Self {
        Triple {
            truth,
            indeterminacy,
            falsity,
        }
    }

    pub fn truth(&self) -> &Subset {
        &self.truth
    }

    pub fn indeterminacy(&self) -> &Subset {
        &self.indeterminacy
    }

    pub fn falsity(&self) -> &Subset {
        &self.falsity
    }

    fn components(&self) -> [&Subset; 3] {
        [&self.truth, &self.indeterminacy, &self.falsity]
    }

    /// Sum of the three component infima. Always in `[0−3ε, 3+3ε]`.
    pub fn inf_sum(&self) -> Hyperreal {
        self.components().iter().map(|s| s.inf()).sum()
    }

    /// Sum of the three component suprema. Always in `[0−3ε, 3+3ε]`.
    pub fn sup_sum(&self) -> Hyperreal {
        self.components().iter().map(|s| s.sup()).sum()
    }

    /// Incomplete information: the supremum sum stays strictly below 1.
    pub fn is_intuitionistic(&self) -> bool {
        self.sup_sum() < Hyperreal::one()
    }

    /// Contradictory information: the supremum sum strictly exceeds 1.
    pub fn is_paraconsistent(&self) -> bool {
        self.sup_sum() > Hyperreal::one()
    }

    /// Guaranteed indeterminacy: `inf(I) > 0` at full lexicographic order,
    /// so an infinitesimal indeterminacy `0+` qualifies.
    pub fn is_faillibilist(&self) -> bool {
        self.indeterminacy.inf() > &Hyperreal::zero()
    }

    /// The form `(1, I, 1)`: fully true and fully false at once.
    pub fn is_paradoxist(&self) -> bool {
        is_exactly_one(&self.truth) && is_exactly_one(&self.falsity)
    }

    /// Fully true with substantively partial falsity, or the mirror image:
    /// one component pinned at `{1}` while the other stays strictly inside
    /// the open unit interval. "Strictly inside" reads the lower bound on
    /// the standard part, so a merely infinitesimal degree does not count
    /// as partial membership (matching the belongs-threshold convention of
    /// the relational predicates); the upper bound stays a full
    /// lexicographic comparison against 1.
    pub fn is_pseudo_paradoxist(&self) -> bool {
        (is_exactly_one(&self.truth) && is_strictly_partial(&self.falsity))
            || (is_exactly_one(&self.falsity) && is_strictly_partial(&self.truth))
    }

    /// The form `(1+, 0, 0)`: true beyond certainty in every possible world.
    /// The near-zero components accept both the `0` and `0-` spellings.
    pub fn is_tautological(&self) -> bool {
        is_exactly_one_plus(&self.truth)
            && is_near_zero(&self.indeterminacy)
            && is_near_zero(&self.falsity)
    }

    /// The form `(0, 0, 1+)`: false beyond impossibility in every possible
    /// world. The near-zero components accept both `0` and `0-`.
    pub fn is_nihilist(&self) -> bool {
        is_exactly_one_plus(&self.falsity)
            && is_near_zero(&self.truth)
            && is_near_zero(&self.indeterminacy)
    }

    /// Crisp membership: no indeterminacy and `{T, F} = {{1}, {0}}`.
    pub fn is_classical(&self) -> bool {
        is_exactly_zero(&self.indeterminacy)
            && ((is_exactly_one(&self.truth) && is_exactly_zero(&self.falsity))
                || (is_exactly_zero(&self.truth) && is_exactly_one(&self.falsity)))
    }

    /// Single standard membership degree with complementary falsity:
    /// `T`, `I`, `F` are standard singletons, `I = {0}`, and the standard
    /// parts of `T` and `F` sum to exactly 1. Crisp triples satisfy this
    /// too, so classical triples are also fuzzy.
    pub fn is_fuzzy(&self) -> bool {
        let (t, i, f) = match (
            self.truth.as_singleton(),
            self.indeterminacy.as_singleton(),
            self.falsity.as_singleton(),
        ) {
            (Some(t), Some(i), Some(f)) => (t, i, f),
            _ => return false,
        };
        if !t.infinitesimal_part().is_zero()
            || !i.infinitesimal_part().is_zero()
            || !f.infinitesimal_part().is_zero()
        {
            return false;
        }
        i.standard_part().is_zero() && (t.standard_part() + f.standard_part()).is_one()
    }

    /// Every label whose condition holds, plus the unconditional
    /// `Neutrosophic` umbrella label.
    pub fn classify(&self) -> LabelSet {
        let mut labels = LabelSet::empty();
        labels.insert(Label::Neutrosophic);
        if self.is_classical() {
            labels.insert(Label::Classical);
        }
        if self.is_fuzzy() {
            labels.insert(Label::Fuzzy);
        }
        if self.is_intuitionistic() {
            labels.insert(Label::Intuitionistic);
        }
        if self.is_paraconsistent() {
            labels.insert(Label::Paraconsistent);
        }
        if self.is_faillibilist() {
            labels.insert(Label::Faillibilist);
        }
        if self.is_paradoxist() {
            labels.insert(Label::Paradoxist);
        }
        if self.is_pseudo_paradoxist() {
            labels.insert(Label::PseudoParadoxist);
        }
        if self.is_tautological() {
            labels.insert(Label::Tautological);
        }
        if self.is_nihilist() {
            labels.insert(Label::Nihilist);
        }
        labels
    }
}

fn is_exactly_one(s: &Subset) -> bool {
    s.as_singleton() == Some(&Hyperreal::one())
}

fn is_exactly_zero(s: &Subset) -> bool {
    s.as_singleton() == Some(&Hyperreal::zero())
}

fn is_exactly_one_plus(s: &Subset) -> bool {
    s.as_singleton() == Some(&Hyperreal::one_plus())
}

/// Singleton with standard part 0 and a non-positive infinitesimal
/// coefficient, covering both the `0` and `0-` spellings of "no degree".
fn is_near_zero(s: &Subset) -> bool {
    match s.as_singleton() {
        Some(p) => p.standard_part().is_zero() && !p.infinitesimal_part().is_positive(),
        None => false,
    }
}

/// Strictly inside the open unit interval in the substantive sense:
/// `st(inf) > 0` and `sup < 1`.
fn is_strictly_partial(s: &Subset) -> bool {
    s.inf().standard_part().is_positive() && s.sup() < &Hyperreal::one()
}
