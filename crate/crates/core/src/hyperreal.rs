//! Exact values of the form `a + b·ε`, where `a` and `b` are rationals and
//! `ε` is a single formal infinitesimal.
//!
//! This is the smallest number model in which `0 − ε`, `0`, `0 + ε`, `1` and
//! `1 + ε` are distinct and totally ordered, which is all the class
//! predicates need. Comparison is lexicographic on `(standard, infinitesimal)`
//! and addition is componentwise, so the order is compatible with addition
//! and nothing is ever rounded.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact extended-unit-interval value `std + eps·ε`.
///
/// The total order is lexicographic: first the standard part, then the
/// infinitesimal coefficient. `Eq`/`Ord` derive from the field order, so
/// `(0, −1) < (0, 0) < (0, +1) < (1, 0) < (1, +1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperreal {
    std: BigRational,
    eps: BigRational,
}

impl Hyperreal {
    pub fn new(std: BigRational, eps: BigRational) -> Self {
        Hyperreal { std, eps }
    }

    /// A purely standard value (infinitesimal coefficient zero).
    pub fn from_rational(std: BigRational) -> Self {
        Hyperreal {
            std,
            eps: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `0 − ε`, the value written `0-` in the text grammar.
    pub fn minus_zero() -> Self {
        Hyperreal::new(BigRational::zero(), -BigRational::one())
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    /// `0 + ε`, the smallest strictly positive value in the model.
    pub fn zero_plus() -> Self {
        Hyperreal::new(BigRational::zero(), BigRational::one())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `1 + ε`, the value written `1+` in the text grammar.
    pub fn one_plus() -> Self {
        Hyperreal::new(BigRational::one(), BigRational::one())
    }

    /// The rational part `a` of `a + b·ε`.
    pub fn standard_part(&self) -> &BigRational {
        &self.std
    }

    /// The coefficient `b` of `a + b·ε`.
    pub fn infinitesimal_part(&self) -> &BigRational {
        &self.eps
    }

    /// Membership in the closed extended unit range `[0−ε, 1+ε]`.
    pub fn in_unit_range(&self) -> bool {
        *self >= Self::minus_zero() && *self <= Self::one_plus()
    }
}

impl Add for Hyperreal {
    type Output = Hyperreal;

    fn add(self, rhs: Hyperreal) -> Hyperreal {
        Hyperreal {
            std: self.std + rhs.std,
            eps: self.eps + rhs.eps,
        }
    }
}

impl Add<&Hyperreal> for &Hyperreal {
    type Output = Hyperreal;

    fn add(self, rhs: &Hyperreal) -> Hyperreal {
        Hyperreal {
            std: &self.std + &rhs.std,
            eps: &self.eps + &rhs.eps,
        }
    }
}

impl Sum for Hyperreal {
    fn sum<I: Iterator<Item = Hyperreal>>(iter: I) -> Hyperreal {
        iter.fold(Hyperreal::zero(), Add::add)
    }
}

impl<'a> Sum<&'a Hyperreal> for Hyperreal {
    fn sum<I: Iterator<Item = &'a Hyperreal>>(iter: I) -> Hyperreal {
        iter.fold(Hyperreal::zero(), |acc, x| &acc + x)
    }
}

/// Canonical literal form: the standard part as an exact rational, followed
/// by `+` or `-` when the infinitesimal coefficient is nonzero. Only the sign
/// of the coefficient is written; values produced by the parser always have
/// coefficient in `{−1, 0, +1}`, for which this form is lossless.
impl fmt::Display for Hyperreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.std)?;
        match self.eps.cmp(&BigRational::zero()) {
            Ordering::Greater => write!(f, "+"),
            Ordering::Less => write!(f, "-"),
            Ordering::Equal => Ok(()),
        }
    }
}

impl fmt::Debug for Hyperreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.eps.is_zero() {
            write!(f, "Hyperreal({})", self.std)
        } else if self.eps.is_positive() {
            write!(f, "Hyperreal({} + {}ε)", self.std, self.eps)
        } else {
            write!(f, "Hyperreal({} - {}ε)", self.std, self.eps.abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hr(sn: i64, sd: i64, e: i64) -> Hyperreal {
        Hyperreal::new(
            BigRational::new(BigInt::from(sn), BigInt::from(sd)),
            BigRational::from_integer(BigInt::from(e)),
        )
    }

    #[test]
    fn addition_is_componentwise() {
        assert_eq!(&Hyperreal::one_plus() + &Hyperreal::one_plus(), hr(2, 1, 2));
        assert_eq!(&Hyperreal::minus_zero() + &Hyperreal::zero(), hr(0, 1, -1));
    }

    #[test]
    fn fold_of_tautological_sup_sum() {
        // 1+ plus two copies of 0-: components sum to (1+0+0, 1-1-1).
        let total: Hyperreal = [
            Hyperreal::one_plus(),
            Hyperreal::minus_zero(),
            Hyperreal::minus_zero(),
        ]
        .iter()
        .sum();
        assert_eq!(total, hr(1, 1, -1));
    }

    #[test]
    fn order_is_lexicographic() {
        assert!(Hyperreal::minus_zero() < Hyperreal::zero());
        assert!(hr(1, 1, -1) < Hyperreal::one());
        assert_eq!(hr(1, 2, 0).cmp(&hr(1, 2, 0)), Ordering::Equal);
    }

    #[test]
    fn literal_order_chain() {
        let chain = [
            Hyperreal::minus_zero(),
            Hyperreal::zero(),
            Hyperreal::zero_plus(),
            Hyperreal::one(),
            Hyperreal::one_plus(),
        ];
        for pair in chain.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn standard_part_ignores_infinitesimal() {
        assert_eq!(
            Hyperreal::one_plus().standard_part(),
            &BigRational::from_integer(BigInt::from(1))
        );
        assert!(Hyperreal::minus_zero().standard_part().is_zero());
        assert_eq!(
            hr(2, 5, 3).standard_part(),
            &BigRational::new(BigInt::from(2), BigInt::from(5))
        );
    }

    #[test]
    fn unit_range_includes_both_extended_endpoints() {
        assert!(Hyperreal::minus_zero().in_unit_range());
        assert!(Hyperreal::one_plus().in_unit_range());
        assert!(!hr(1, 1, 2).in_unit_range());
        assert!(!hr(2, 1, 0).in_unit_range());
        assert!(!hr(0, 1, -2).in_unit_range());
    }

    fn arb_hyperreal() -> impl Strategy<Value = Hyperreal> {
        (-50i64..=50, 1i64..=20, -3i64..=3).prop_map(|(n, d, e)| hr(n, d, e))
    }

    proptest! {
        #[test]
        fn order_compatible_with_addition(
            a in arb_hyperreal(),
            b in arb_hyperreal(),
            c in arb_hyperreal(),
        ) {
            if a < b {
                prop_assert!(&a + &c < &b + &c);
            }
        }

        #[test]
        fn addition_commutes(a in arb_hyperreal(), b in arb_hyperreal()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }
    }
}
