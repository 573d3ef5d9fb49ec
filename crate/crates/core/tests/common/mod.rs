//! Shared test support: seeded random generators for endpoints, subsets,
//! triples and models, plus an independent brute-force label evaluator for
//! singleton triples that works directly on `(standard, infinitesimal)`
//! rational pairs — no `Hyperreal` comparisons, no `Subset` machinery.

// not every test target uses every helper
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use neutro_core::{BigInt, BigRational, Hyperreal, Interval, SetModel, Subset, Triple};
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn hyper(n: i64, d: i64, eps: i64) -> Hyperreal {
    Hyperreal::new(ratio(n, d), BigRational::from_integer(BigInt::from(eps)))
}

/// Random rational in [0, 1] with denominator up to 24.
pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let den = rng.random_range(1i64..=24);
    let num = rng.random_range(0..=den);
    ratio(num, den)
}

/// Random in-range endpoint with infinitesimal coefficient in {-1, 0, +1}.
pub fn random_endpoint(rng: &mut ChaCha8Rng) -> Hyperreal {
    let std = random_rational(rng);
    let eps = rng.random_range(-1i64..=1);
    Hyperreal::new(std, BigRational::from_integer(BigInt::from(eps)))
}

pub fn random_interval(rng: &mut ChaCha8Rng) -> Interval {
    let a = random_endpoint(rng);
    let b = random_endpoint(rng);
    if a <= b {
        Interval::new(a, b).unwrap()
    } else {
        Interval::new(b, a).unwrap()
    }
}

/// Raw (unnormalized) interval list with 1..=max intervals.
pub fn random_raw(rng: &mut ChaCha8Rng, max: usize) -> Vec<Interval> {
    let count = rng.random_range(1..=max);
    (0..count).map(|_| random_interval(rng)).collect()
}

pub fn random_subset(rng: &mut ChaCha8Rng) -> Subset {
    Subset::new(random_raw(rng, 3)).unwrap()
}

pub fn random_triple(rng: &mut ChaCha8Rng) -> Triple {
    Triple::new(
        random_subset(rng),
        random_subset(rng),
        random_subset(rng),
    )
}

pub fn random_model(rng: &mut ChaCha8Rng, max_len: usize) -> SetModel {
    let count = rng.random_range(0..=max_len);
    let entries = (0..count)
        .map(|i| (format!("x{i}"), random_triple(rng)))
        .collect();
    SetModel::new(entries).unwrap()
}

/// A point of the extended interval as a bare rational pair.
pub type Pt = (BigRational, BigRational);

pub fn pt(n: i64, d: i64, eps: i64) -> Pt {
    (ratio(n, d), BigRational::from_integer(BigInt::from(eps)))
}

pub fn lex_cmp(a: &Pt, b: &Pt) -> Ordering {
    a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1))
}

fn lex_lt(a: &Pt, b: &Pt) -> bool {
    lex_cmp(a, b) == Ordering::Less
}

fn sum3(a: &Pt, b: &Pt, c: &Pt) -> Pt {
    (&a.0 + &b.0 + &c.0, &a.1 + &b.1 + &c.1)
}

fn near_zero(p: &Pt) -> bool {
    p.0.is_zero() && !p.1.is_positive()
}

/// Labels of the singleton triple `({t}; {i}; {f})` evaluated from the
/// defining inequalities, using nothing but rational arithmetic and
/// hand-rolled lexicographic comparison. For singletons inf = sup = the
/// point, so the sums need no interval handling.
pub fn brute_force_labels(t: &Pt, i: &Pt, f: &Pt) -> BTreeSet<&'static str> {
    let one = pt(1, 1, 0);
    let zero = pt(0, 1, 0);
    let one_plus = pt(1, 1, 1);
    let sup_sum = sum3(t, i, f);

    let mut labels = BTreeSet::from(["Neutrosophic"]);
    if lex_lt(&sup_sum, &one) {
        labels.insert("Intuitionistic");
    }
    if lex_lt(&one, &sup_sum) {
        labels.insert("Paraconsistent");
    }
    if lex_lt(&zero, i) {
        labels.insert("Faillibilist");
    }
    if *t == one && *f == one {
        labels.insert("Paradoxist");
    }
    let partial = |p: &Pt| p.0.is_positive() && lex_lt(p, &one);
    if (*t == one && partial(f)) || (*f == one && partial(t)) {
        labels.insert("PseudoParadoxist");
    }
    if *t == one_plus && near_zero(i) && near_zero(f) {
        labels.insert("Tautological");
    }
    if *f == one_plus && near_zero(t) && near_zero(i) {
        labels.insert("Nihilist");
    }
    if *i == zero && ((*t == one && *f == zero) || (*t == zero && *f == one)) {
        labels.insert("Classical");
    }
    if t.1.is_zero()
        && i.1.is_zero()
        && f.1.is_zero()
        && i.0.is_zero()
        && (&t.0 + &f.0) == BigRational::from_integer(BigInt::from(1))
    {
        labels.insert("Fuzzy");
    }
    labels
}

/// Builds the singleton triple corresponding to three points.
pub fn singleton_triple(t: &Pt, i: &Pt, f: &Pt) -> Triple {
    let single = |p: &Pt| {
        Subset::singleton(Hyperreal::new(p.0.clone(), p.1.clone())).expect("grid point in range")
    };
    Triple::new(single(t), single(i), single(f))
}

/// The 5×3 endpoint grid: std in {0, 1/4, 1/2, 3/4, 1}, eps in {-1, 0, +1}.
pub fn grid_points() -> Vec<Pt> {
    let mut points = Vec::new();
    for n in 0..=4i64 {
        for eps in -1..=1i64 {
            points.push(pt(n, 4, eps));
        }
    }
    points
}
