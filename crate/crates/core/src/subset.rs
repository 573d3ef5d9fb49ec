//! Subsets of the extended unit range, kept as normalized finite unions of
//! closed intervals.
//!
//! Normal form: intervals sorted ascending, pairwise disjoint and
//! non-adjacent. Endpoint equality is exact, so adjacency (one interval's
//! upper bound equal to the next one's lower bound) is well defined and
//! always merged away. Structural equality of two normal forms therefore
//! coincides with point-set equality.

use thiserror::Error;

use crate::hyperreal::Hyperreal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetError {
    /// A subset must contain at least one interval; there is no empty subset.
    #[error("a subset must contain at least one interval")]
    Empty,
    /// Endpoint outside the closed range `[0-, 1+]`.
    #[error("endpoint {0} is outside the unit range [0-, 1+]")]
    OutOfRange(Box<Hyperreal>),
    #[error("interval bounds out of order: {lo} > {hi}")]
    InvertedBounds {
        lo: Box<Hyperreal>,
        hi: Box<Hyperreal>,
    },
}

/// A closed interval `[lo, hi]` inside the extended unit range.
/// Singletons are intervals with `lo == hi`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Interval {
    lo: Hyperreal,
    hi: Hyperreal,
}

impl Interval {
    pub fn new(lo: Hyperreal, hi: Hyperreal) -> Result<Self, SubsetError> {
        if !lo.in_unit_range() {
            return Err(SubsetError::OutOfRange(Box::new(lo)));
        }
        if !hi.in_unit_range() {
            return Err(SubsetError::OutOfRange(Box::new(hi)));
        }
        if lo > hi {
            return Err(SubsetError::InvertedBounds {
                lo: Box::new(lo),
                hi: Box::new(hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(p: Hyperreal) -> Result<Self, SubsetError> {
        Interval::new(p.clone(), p)
    }

    pub fn lo(&self) -> &Hyperreal {
        &self.lo
    }

    pub fn hi(&self) -> &Hyperreal {
        &self.hi
    }

    pub fn contains(&self, p: &Hyperreal) -> bool {
        &self.lo <= p && p <= &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// A nonempty union of closed intervals in normal form.
///
/// Built through [`Subset::new`], which sorts the raw intervals and merges
/// every overlapping or touching pair, so two subsets are equal as values
/// exactly when they are equal as point sets.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Subset {
    intervals: Vec<Interval>,
}

impl Subset {
    /// Normalizes a raw interval list into a subset.
    pub fn new(raw: Vec<Interval>) -> Result<Self, SubsetError> {
        if raw.is_empty() {
            return Err(SubsetError::Empty);
        }
        let mut sorted = raw;
        sorted.sort();
        let mut intervals: Vec<Interval> = Vec::with_capacity(sorted.len());
        for iv in sorted {
            match intervals.last_mut() {
                // touching counts as overlap: closed intervals sharing an
                // endpoint form one connected interval
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => intervals.push(iv),
            }
        }
        Ok(Subset { intervals })
    }

    pub fn singleton(p: Hyperreal) -> Result<Self, SubsetError> {
        Ok(Subset {
            intervals: vec![Interval::point(p)?],
        })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Greatest lower bound; the lower endpoint of the first interval.
    pub fn inf(&self) -> &Hyperreal {
        self.intervals[0].lo()
    }

    /// Least upper bound; the upper endpoint of the last interval.
    pub fn sup(&self) -> &Hyperreal {
        self.intervals[self.intervals.len() - 1].hi()
    }

    pub fn contains(&self, p: &Hyperreal) -> bool {
        self.intervals.iter().any(|iv| iv.contains(p))
    }

    /// `Some(p)` when the subset is exactly the one-point set `{p}`.
    pub fn as_singleton(&self) -> Option<&Hyperreal> {
        match self.intervals.as_slice() {
            [only] if only.is_point() => Some(only.lo()),
            _ => None,
        }
    }
}
