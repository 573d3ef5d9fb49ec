//! Cross-module invariants: exhaustive grid agreement with a brute-force
//! evaluator, exact summation at scale, lift monotonicity, infinitesimal
//! scale-invariance of the relational predicates, and the shared
//! classification engine.

mod common;

use std::collections::BTreeSet;

use common::*;
use neutro_core::{
    classify_probability, classify_proposition, parse_endpoint, BigInt, BigRational, Hyperreal,
    Interval, Label, SetModel, Subset, Triple,
};

/// Every singleton triple over the 5×3 grid classifies exactly as the
/// rational-pair evaluator says it should.
#[test]
fn grid_classification_matches_brute_force_evaluator() {
    let points = grid_points();
    let mut checked = 0usize;
    for t in &points {
        for i in &points {
            for f in &points {
                let triple = singleton_triple(t, i, f);
                let got: BTreeSet<&'static str> =
                    triple.classify().iter().map(|l| l.as_str()).collect();
                let expected = brute_force_labels(t, i, f);
                assert_eq!(
                    got, expected,
                    "disagreement at t={t:?} i={i:?} f={f:?}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 15 * 15 * 15);
}

/// Summing one million parsed copies of 0.3 gives exactly 300000: decimal
/// input is converted to exact rationals and addition never drifts.
#[test]
fn summing_a_million_parsed_decimals_is_exact() {
    let value = parse_endpoint("0.3").unwrap();
    let n = 1_000_000usize;
    let mut total = Hyperreal::zero();
    for _ in 0..n {
        total = &total + &value;
    }
    let expected = BigRational::from_integer(BigInt::from(n as i64))
        * BigRational::new(BigInt::from(3), BigInt::from(10));
    assert_eq!(total.standard_part(), &expected);
    assert_eq!(total, Hyperreal::from_rational(expected));
}

/// Removing an element never turns a true lift false while the universe
/// stays nonempty (universal quantification over a subset).
#[test]
fn lift_is_monotone_under_element_removal() {
    let mut rng = rng(0x5eed_0011);
    for _ in 0..300 {
        let model = random_model(&mut rng, 5);
        if model.len() < 2 {
            continue;
        }
        let held: Vec<Label> = Label::ALL
            .into_iter()
            .filter(|&l| model.lift_label(l))
            .collect();
        // drop one random element and re-check every label that held
        let entries: Vec<(String, Triple)> = model
            .iter()
            .map(|(id, t)| (id.to_string(), t.clone()))
            .collect();
        let victim = rng_index(&mut rng, entries.len());
        let remaining: Vec<(String, Triple)> = entries
            .into_iter()
            .enumerate()
            .filter(|(i, _)| *i != victim)
            .map(|(_, e)| e)
            .collect();
        let smaller = SetModel::new(remaining).unwrap();
        for label in held {
            assert!(
                smaller.lift_label(label),
                "removing an element broke lift of {label}"
            );
        }
    }
}

fn rng_index(rng: &mut rand_chacha::ChaCha8Rng, len: usize) -> usize {
    use rand::Rng;
    rng.random_range(0..len)
}

/// Scales every infinitesimal coefficient of every endpoint by a positive
/// factor ≤ 1; standard parts are untouched, so order and range survive.
fn scale_eps(t: &Triple, factor: &BigRational) -> Triple {
    let scale_subset = |s: &Subset| {
        let intervals = s
            .intervals()
            .iter()
            .map(|iv| {
                let scale = |h: &Hyperreal| {
                    Hyperreal::new(h.standard_part().clone(), h.infinitesimal_part() * factor)
                };
                Interval::new(scale(iv.lo()), scale(iv.hi())).unwrap()
            })
            .collect();
        Subset::new(intervals).unwrap()
    };
    Triple::new(
        scale_subset(t.truth()),
        scale_subset(t.indeterminacy()),
        scale_subset(t.falsity()),
    )
}

/// The relational predicates read only standard parts, so rescaling the
/// infinitesimal coefficients changes nothing.
#[test]
fn relational_predicates_ignore_infinitesimal_scale() {
    let mut rng = rng(0x5eed_0012);
    let factors = [ratio(1, 2), ratio(1, 3), ratio(2, 7)];
    for _ in 0..200 {
        let model = random_model(&mut rng, 5);
        for factor in &factors {
            let scaled_entries: Vec<(String, Triple)> = model
                .iter()
                .map(|(id, t)| (id.to_string(), scale_eps(t, factor)))
                .collect();
            let scaled = SetModel::new(scaled_entries).unwrap();
            assert_eq!(model.is_dialetheist(), scaled.is_dialetheist());
            assert_eq!(model.is_trivialist(), scaled.is_trivialist());
            for (id, _) in model.iter() {
                assert_eq!(
                    model.belongs_to(id).unwrap(),
                    scaled.belongs_to(id).unwrap()
                );
                assert_eq!(
                    model.belongs_to_complement(id).unwrap(),
                    scaled.belongs_to_complement(id).unwrap()
                );
            }
        }
    }
}

/// One classification engine serves the set, probability and logic readings.
#[test]
fn probability_and_logic_vocabularies_share_the_engine() {
    let mut rng = rng(0x5eed_0013);
    for _ in 0..500 {
        let t = random_triple(&mut rng);
        let base = t.classify();
        assert_eq!(classify_probability(&t), base);
        assert_eq!(classify_proposition(&t), base);
    }
}

/// The sum-bound corners are attained exactly at the all-minus-zero and
/// all-one-plus corner triples.
#[test]
fn sum_bound_corners_are_attained() {
    let minus = Subset::singleton(Hyperreal::minus_zero()).unwrap();
    let plus = Subset::singleton(Hyperreal::one_plus()).unwrap();
    let low = Triple::new(minus.clone(), minus.clone(), minus);
    let high = Triple::new(plus.clone(), plus.clone(), plus);
    assert_eq!(low.inf_sum(), hyper(0, 1, -3));
    assert_eq!(high.sup_sum(), hyper(3, 1, 3));
}
