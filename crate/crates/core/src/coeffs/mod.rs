//! Exact coefficient rings.
//!
//! [`Laurent`] is `A = Z[q, q^-1]`; [`CycScalar`] extends it by `1/r` and a
//! primitive `r`-th root of unity. Both implement [`Scalar`], which is all the
//! algebra modules need from a coefficient.

mod cyc;
mod laurent;

use std::fmt::{Debug, Display};

pub use cyc::{cyclotomic, CycScalar};
pub use laurent::Laurent;

/// A commutative coefficient ring containing `Z[q, q^-1]`.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_laurent(a: &Laurent) -> Self;

    fn from_int(c: i64) -> Self {
        Self::from_laurent(&Laurent::constant(c))
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.add_assign_ref(&rhs.neg_ref());
    }
}

impl Scalar for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_laurent(a: &Laurent) -> Self {
        a.clone()
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

impl Scalar for CycScalar {
    fn zero() -> Self {
        CycScalar::zero(0)
    }
    fn one() -> Self {
        CycScalar::one(0)
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_laurent(a: &Laurent) -> Self {
        CycScalar::from_laurent(0, a)
    }
}

#[cfg(test)]
mod ring_axioms {
    use super::*;
    use num_rational::Rational64;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = Laurent> {
        prop::collection::vec((-3i32..=3, -4i64..=4), 0..5).prop_map(Laurent::from_terms)
    }

    fn cyc(r: u32) -> impl Strategy<Value = CycScalar> {
        prop::collection::vec((0i64..8, -2i32..=2, -4i64..=4, 0u32..3), 0..5).prop_map(move |ts| {
            let mut out = CycScalar::zero(r);
            for (z, e, c, p) in ts {
                out.add_term(z, e, Rational64::new(c, (r as i64).pow(p)));
            }
            out
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &Laurent::one(), a.clone());
            prop_assert!(a.terms().all(|(_, k)| k != 0));
        }

        #[test]
        fn bar_is_a_ring_homomorphism(a in laurent(), b in laurent()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a);
        }

        #[test]
        fn cyc_ring((r, a, b, c) in (1u32..=6).prop_flat_map(|r| (Just(r), cyc(r), cyc(r), cyc(r)))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &CycScalar::one(r), a.clone());
            prop_assert!((&a * &b).denominators_are_r_powers());
            prop_assert_eq!(a.reduce(), a);
        }
    }
}
