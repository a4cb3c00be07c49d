//! Exact arithmetic in the formal ring `Z[t]/(t^2 - d)` and its rational
//! extension.
//!
//! Elements are pairs `a + b t`. Nothing here ever substitutes a numeric
//! square root for `t`, so the ring stays well defined when `d` is a perfect
//! square (`k = 3` gives `d = 4`): `10 + 6t` and `22` are distinct elements
//! even though they evaluate to the same number.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use crate::error::{Error, Result};
use crate::seq::check_k;

/// Coefficient types usable in [`Quadratic`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + From<BigInt> {}

impl<T> Coefficient for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + From<BigInt> {}

/// `a + b t` with `t^2 = d`.
///
/// Elements built over different `d` never interact: the checked operations
/// return [`Error::RingMismatch`] and the operator impls panic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadratic<T> {
    a: T,
    b: T,
    d: u64,
}

/// Integer coefficients.
pub type RingInt = Quadratic<BigInt>;
/// Rational coefficients, always in lowest terms.
pub type RingRat = Quadratic<BigRational>;

impl<T: Coefficient> Quadratic<T> {
    pub fn new(a: impl Into<T>, b: impl Into<T>, d: u64) -> Self {
        Self { a: a.into(), b: b.into(), d }
    }

    pub fn zero(d: u64) -> Self {
        Self { a: T::zero(), b: T::zero(), d }
    }

    pub fn one(d: u64) -> Self {
        Self { a: T::one(), b: T::zero(), d }
    }

    /// The generator `t`.
    pub fn t(d: u64) -> Self {
        Self { a: T::zero(), b: T::one(), d }
    }

    /// A pure "rational part" element `a + 0t`.
    pub fn scalar(a: impl Into<T>, d: u64) -> Self {
        Self { a: a.into(), b: T::zero(), d }
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn d_coeff(&self) -> T {
        T::from(BigInt::from(self.d))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.d, right: other.d })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            a: self.a.clone() + other.a.clone(),
            b: self.b.clone() + other.b.clone(),
            d: self.d,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            a: self.a.clone() - other.a.clone(),
            b: self.b.clone() - other.b.clone(),
            d: self.d,
        })
    }

    /// `(a1 + b1 t)(a2 + b2 t) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1) t`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let a = self.a.clone() * other.a.clone() + self.d_coeff() * self.b.clone() * other.b.clone();
        let b = self.a.clone() * other.b.clone() + other.a.clone() * self.b.clone();
        Ok(Self { a, b, d: self.d })
    }

    /// Multiplies both components by a coefficient.
    pub fn scale(&self, c: &T) -> Self {
        Self { a: self.a.clone() * c.clone(), b: self.b.clone() * c.clone(), d: self.d }
    }

    /// `a - b t`.
    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// `a^2 - d b^2`, multiplicative.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.d_coeff() * self.b.clone() * self.b.clone()
    }

    /// Binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.d);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl RingInt {
    /// Embeds into the rational ring.
    pub fn to_rat(&self) -> RingRat {
        RingRat {
            a: BigRational::from_integer(self.a.clone()),
            b: BigRational::from_integer(self.b.clone()),
            d: self.d,
        }
    }
}

impl RingRat {
    /// `conj(x) / N(x)`; `None` when the norm vanishes (zero, or a zero
    /// divisor when `d` is a perfect square).
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self { a: self.a.clone() / n.clone(), b: -self.b.clone() / n, d: self.d })
    }

    /// Returns the integer pair if both coefficients are integral.
    pub fn to_int(&self) -> Option<RingInt> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(RingInt { a: self.a.to_integer(), b: self.b.to_integer(), d: self.d })
        } else {
            None
        }
    }

    /// Evaluates with `t = sqrt(d)` in double precision.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, T: Coefficient> $tr<&'a Quadratic<T>> for &'a Quadratic<T> {
            type Output = Quadratic<T>;

            fn $method(self, rhs: &'a Quadratic<T>) -> Quadratic<T> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl<T: Coefficient> $tr for Quadratic<T> {
            type Output = Quadratic<T>;

            fn $method(self, rhs: Quadratic<T>) -> Quadratic<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<T: Coefficient> Neg for Quadratic<T> {
    type Output = Quadratic<T>;

    fn neg(self) -> Quadratic<T> {
        Quadratic { a: -self.a, b: -self.b, d: self.d }
    }
}

impl<T: Coefficient + Signed> fmt::Display for Quadratic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*t", self.a, sign, self.b.abs())
    }
}

/// The pair `(P(k, n), Q(k, n))` read off `phi^n` for `phi = 1 + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinetPair {
    pub p: BigInt,
    pub q: BigInt,
}

/// `phi = 1 + t` over `d = 1 + k`, the dominant characteristic root.
pub fn phi(k: u64) -> Result<RingInt> {
    check_k(k)?;
    Ok(RingInt::new(1, 1, k + 1))
}

/// Both Binet formulas evaluated in the formal ring.
///
/// With `phi^n = a + b t` and its conjugate `a - b t`, the difference
/// `phi^n - conj(phi)^n = 2 b t` divided by `2 t` is `b`, and the sum is
/// `2 a`. So `P(k, n) = b` and `Q(k, n) = 2 a` with no irrational arithmetic.
pub fn binet_pair(k: u64, n: u64) -> Result<BinetPair> {
    let power = phi(k)?.pow(n);
    Ok(BinetPair { p: power.b.clone(), q: power.a << 1u32 })
}

impl BinetPair {
    /// Checks `q^2 - 4 d p^2 = 4 (-k)^n` with `d = 1 + k`.
    pub fn satisfies_norm_identity(&self, k: u64, n: u64) -> bool {
        let d = BigInt::from(k) + 1;
        let lhs = &self.q * &self.q - BigInt::from(4) * d * &self.p * &self.p;
        lhs == BigInt::from(4) * signed_power(k, n)
    }
}

/// `(-k)^n` as a big integer.
pub fn signed_power(k: u64, n: u64) -> BigInt {
    let mag = num_traits::pow(BigInt::from(k), n as usize);
    if n % 2 == 1 {
        -mag
    } else {
        mag
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64, d: u64) -> RingRat {
        RingRat::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), d)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&rat(1, 1, 3) * &rat(1, -1, 3), rat(-2, 0, 3));
        assert_eq!(&rat(4, 2, 3) * &rat(1, 1, 3), rat(10, 6, 3));
        assert_eq!(&rat(0, 0, 2) * &rat(7, 5, 2), rat(0, 0, 2));
    }

    #[test]
    fn mismatched_rings() {
        let err = rat(1, 1, 2).try_mul(&rat(1, 1, 3)).unwrap_err();
        assert_eq!(err, Error::RingMismatch { left: 2, right: 3 });
        assert!(rat(1, 1, 2).try_add(&rat(1, 1, 3)).is_err());
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn operator_panics_on_mismatch() {
        let _ = rat(1, 1, 2) * rat(1, 1, 5);
    }

    #[test]
    fn pow_examples() {
        assert_eq!(rat(1, 1, 3).pow(3), rat(10, 6, 3));
        assert_eq!(rat(1, 1, 17).pow(0), rat(1, 0, 17));
        assert_eq!(rat(1, 1, 2).pow(2), rat(3, 2, 2));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(rat(1, 1, 3).conj(), rat(1, -1, 3));
        assert_eq!(rat(10, 6, 3).conj(), rat(10, -6, 3));
        assert_eq!(rat(3, 5, 7).conj().conj(), rat(3, 5, 7));
    }

    #[test]
    fn rational_coefficients_stay_canonical() {
        let half = BigRational::new(2.into(), 4.into());
        let x = RingRat::new(half.clone(), half, 2);
        assert_eq!(x.a(), &BigRational::new(1.into(), 2.into()));
        let y = &x * &x; // (1/2 + t/2)^2 = 3/4 + t/2
        assert_eq!(y.a(), &BigRational::new(3.into(), 4.into()));
        assert_eq!(y.b(), &BigRational::new(1.into(), 2.into()));
        assert_eq!(*y.b().denom(), BigInt::from(2));
    }

    #[test]
    fn inverse() {
        let x = rat(3, 2, 2);
        assert_eq!(&x * &x.inverse().unwrap(), rat(1, 0, 2));
        let t = RingRat::t(5).scale(&BigRational::from_integer(4.into()));
        assert_eq!(&t * &t.inverse().unwrap(), RingRat::one(5));
        // 2 + t is a zero divisor when t^2 = 4
        assert!(rat(2, 1, 4).inverse().is_none());
        assert!(RingRat::zero(3).inverse().is_none());
    }

    #[test]
    fn binet_examples() {
        assert_eq!(binet_pair(3, 5).unwrap(), BinetPair { p: 61.into(), q: 242.into() });
        assert_eq!(binet_pair(1, 3).unwrap(), BinetPair { p: 5.into(), q: 14.into() });
        assert_eq!(binet_pair(2, 0).unwrap(), BinetPair { p: 0.into(), q: 2.into() });
        assert_eq!(binet_pair(0, 1), Err(Error::ZeroK));
    }

    #[test]
    fn phi_norm_is_minus_k() {
        for k in 1..30u64 {
            assert_eq!(phi(k).unwrap().norm(), -BigInt::from(k));
        }
    }

    #[test]
    fn display() {
        assert_eq!(rat(10, 6, 3).to_string(), "10 + 6*t");
        assert_eq!(rat(1, -1, 3).to_string(), "1 - 1*t");
        assert_eq!(rat(-2, 0, 3).to_string(), "-2");
        let r = RingRat::scalar(BigRational::new(58.into(), 3.into()), 2);
        assert_eq!(r.to_string(), "58/3");
    }

    #[test]
    fn signed_powers() {
        assert_eq!(signed_power(2, 3), BigInt::from(-8));
        assert_eq!(signed_power(2, 0), BigInt::from(1));
        assert_eq!(signed_power(5, 2), BigInt::from(25));
    }
}
