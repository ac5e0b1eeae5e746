//! Idempotent semifields (quasi-fields of characteristic one).
//!
//! A [`Semifield`] is a commutative semiring whose nonzero elements form a
//! multiplicative group and whose addition is idempotent. Idempotency makes
//! `a ≤ b ⇔ a ⊕ b = b` an order; both instances shipped here are totally
//! ordered.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact rational numbers used for coefficients, exponents of witnesses and
/// every polyhedral computation.
pub type Rational = BigRational;

/// Builds the rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Contract shared by the semifields of characteristic one.
pub trait Semifield: Clone + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    /// Idempotent addition `⊕`.
    fn add(&self, other: &Self) -> Self;
    /// Multiplication `⊗`.
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; only the zero element fails.
    fn inv(&self) -> Result<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The induced order: `a ≤ b` iff `a ⊕ b = b`.
    fn le(&self, other: &Self) -> bool {
        self.add(other) == *other
    }

    /// Greatest lower bound under the induced (total) order.
    fn meet(&self, other: &Self) -> Self {
        if self.le(other) {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `self ⊗ other⁻¹`.
    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// The additive quasi-inverse. Characteristic one forces `x* = x`.
    fn quasi_symmetric(&self) -> Self {
        self.clone()
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Whether `k·1 ⊕ 1 = 1`, i.e. `k` belongs to the set whose generator
    /// is the characteristic.
    fn char_set_member(k: u64) -> bool {
        let one = Self::one();
        let mut multiple = Self::zero();
        for _ in 0..k {
            multiple = multiple.add(&one);
        }
        multiple.add(&one) == one
    }
}

/// The two-element semifield `F₁ = {0, 1}` with `1 ⊕ 1 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Boolean(pub bool);

impl Boolean {
    pub const ZERO: Boolean = Boolean(false);
    pub const ONE: Boolean = Boolean(true);

    pub fn all() -> [Boolean; 2] {
        [Boolean::ZERO, Boolean::ONE]
    }
}

impl Semifield for Boolean {
    fn zero() -> Self {
        Boolean::ZERO
    }

    fn one() -> Self {
        Boolean::ONE
    }

    fn add(&self, other: &Self) -> Self {
        Boolean(self.0 || other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Boolean(self.0 && other.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0 {
            Ok(*self)
        } else {
            Err(Error::ZeroInverse)
        }
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

/// Max-plus over exact rationals in the log-domain convention:
/// `⊕ = max`, `⊗ = +`, the zero element is `⊥ = -inf` and the unit is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaxPlus(Option<Rational>);

impl MaxPlus {
    pub fn bottom() -> Self {
        MaxPlus(None)
    }

    pub fn finite(value: Rational) -> Self {
        MaxPlus(Some(value))
    }

    pub fn from_int(value: i64) -> Self {
        MaxPlus(Some(int(value)))
    }

    pub fn is_bottom(&self) -> bool {
        self.0.is_none()
    }

    pub fn value(&self) -> Option<&Rational> {
        self.0.as_ref()
    }

    pub fn into_value(self) -> Option<Rational> {
        self.0
    }

    /// `self^n` for a rational exponent, i.e. `n·self` in the log domain.
    pub fn scale(&self, n: &Rational) -> Self {
        MaxPlus(self.0.as_ref().map(|v| v * n))
    }
}

impl From<Rational> for MaxPlus {
    fn from(value: Rational) -> Self {
        MaxPlus::finite(value)
    }
}

impl From<Option<Rational>> for MaxPlus {
    fn from(value: Option<Rational>) -> Self {
        MaxPlus(value)
    }
}

impl PartialOrd for MaxPlus {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaxPlus {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }
}

impl Semifield for MaxPlus {
    fn zero() -> Self {
        MaxPlus(None)
    }

    fn one() -> Self {
        MaxPlus(Some(Rational::zero()))
    }

    fn add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Some(a), Some(b)) => MaxPlus(Some(a + b)),
            _ => MaxPlus(None),
        }
    }

    fn inv(&self) -> Result<Self> {
        match &self.0 {
            Some(a) => Ok(MaxPlus(Some(-a))),
            None => Err(Error::ZeroInverse),
        }
    }

    fn le(&self, other: &Self) -> bool {
        self <= other
    }

    fn pow(&self, n: u32) -> Self {
        match &self.0 {
            Some(a) => MaxPlus(Some(a * int(i64::from(n)))),
            None if n == 0 => MaxPlus::one(),
            None => MaxPlus(None),
        }
    }
}

impl fmt::Display for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("-inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(n: i64) -> MaxPlus {
        MaxPlus::from_int(n)
    }

    #[test]
    fn max_plus_operations() {
        assert_eq!(mp(2).add(&mp(3)), mp(3));
        assert_eq!(mp(2).mul(&mp(3)), mp(5));
        assert_eq!(
            MaxPlus::finite(frac(5, 2)).inv().unwrap(),
            MaxPlus::finite(frac(-5, 2))
        );
        assert_eq!(MaxPlus::bottom().inv(), Err(Error::ZeroInverse));
        assert_eq!(mp(4).add(&MaxPlus::bottom()), mp(4));
        assert_eq!(mp(4).mul(&MaxPlus::bottom()), MaxPlus::bottom());
    }

    #[test]
    fn boolean_operations() {
        assert_eq!(Boolean::ONE.add(&Boolean::ONE), Boolean::ONE);
        assert_eq!(Boolean::ZERO.inv(), Err(Error::ZeroInverse));
        assert_eq!(Boolean::ONE.inv(), Ok(Boolean::ONE));
    }

    #[test]
    fn quasi_symmetric_is_identity() {
        assert_eq!(mp(3).quasi_symmetric(), mp(3));
        assert_eq!(MaxPlus::zero().quasi_symmetric(), MaxPlus::zero());
        assert_eq!(MaxPlus::one().quasi_symmetric(), MaxPlus::one());
        assert_eq!(Boolean::ONE.quasi_symmetric(), Boolean::ONE);
    }

    #[test]
    fn characteristic_one() {
        assert!(Boolean::char_set_member(1));
        assert!(MaxPlus::char_set_member(7));
        assert!(MaxPlus::char_set_member(2));
    }

    #[test]
    fn boolean_laws_exhaustive() {
        for a in Boolean::all() {
            assert_eq!(a.add(&a), a);
            for b in Boolean::all() {
                let s = a.add(&b);
                assert!(s == a || s == b);
                for n in 0..=16 {
                    assert_eq!(s.pow(n), a.pow(n).add(&b.pow(n)));
                }
                for c in Boolean::all() {
                    assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                }
            }
        }
    }

    #[test]
    fn pow_of_bottom() {
        assert_eq!(MaxPlus::bottom().pow(0), MaxPlus::one());
        assert_eq!(MaxPlus::bottom().pow(3), MaxPlus::bottom());
        assert_eq!(mp(-2).pow(3), mp(-6));
    }

    #[test]
    fn display() {
        assert_eq!(MaxPlus::finite(frac(6, 4)).to_string(), "3/2");
        assert_eq!(MaxPlus::bottom().to_string(), "-inf");
        assert_eq!(mp(-7).to_string(), "-7");
    }
}
