//! Scalar types the geometry kernel is generic over.
//!
//! Everything in the crate is written against [`GridScalar`], a thin layer on
//! top of `num_traits::Num`. The exact scalar used by the constructions is
//! [`QSqrt2`], the quadratic field of numbers `r + s2·√2` over a rational base
//! type. Floats also implement the trait so the same predicates can be run as a
//! cheap cross-check, but only the exact types give exact answers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A number type usable for grid geometry.
pub trait GridScalar: Num + Neg<Output = Self> + Clone + PartialOrd + fmt::Debug {
    fn from_int(v: i64) -> Self;

    /// The exact integer value, if this number is an integer fitting in `i64`.
    fn to_integer(&self) -> Option<i64>;

    /// The exact rational value, if this number is rational.
    fn to_rational(&self) -> Option<BigRational>;

    /// Approximate value, for display and floating cross-checks only.
    fn to_f64(&self) -> f64;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_negative_value(&self) -> bool {
        *self < Self::zero()
    }
}

impl GridScalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_integer(&self) -> Option<i64> {
        (self.fract() == 0.0 && self.abs() < 9.0e15).then_some(*self as i64)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Ratio::from_float(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl GridScalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl GridScalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| *self.numer())
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(
            BigInt::from(*self.numer()),
            BigInt::from(*self.denom()),
        ))
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

/// An element `r + s2·√2` of the field Q(√2).
///
/// The representation is canonical: two values are equal iff both components
/// are equal, since √2 is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2<T> {
    r: T,
    s2: T,
}

impl<T> QSqrt2<T> {
    pub const fn new(r: T, s2: T) -> Self {
        QSqrt2 { r, s2 }
    }

    /// Rational part.
    pub fn r(&self) -> &T {
        &self.r
    }

    /// Coefficient of √2.
    pub fn s2(&self) -> &T {
        &self.s2
    }

    pub fn into_parts(self) -> (T, T) {
        (self.r, self.s2)
    }
}

impl<T: Zero> QSqrt2<T> {
    pub fn from_rational(r: T) -> Self {
        QSqrt2 { r, s2: T::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.s2.is_zero()
    }
}

impl<T: Zero + One> QSqrt2<T> {
    /// The number √2 itself.
    pub fn sqrt2() -> Self {
        QSqrt2 {
            r: T::zero(),
            s2: T::one(),
        }
    }
}

impl<T> QSqrt2<T>
where
    T: Clone + Num + Neg<Output = T> + PartialOrd,
{
    /// Galois conjugate `r − s2·√2`.
    pub fn conjugate(&self) -> Self {
        QSqrt2 {
            r: self.r.clone(),
            s2: -self.s2.clone(),
        }
    }

    /// Field norm `r² − 2·s2²`; zero only for zero.
    pub fn norm(&self) -> T {
        let two = T::one() + T::one();
        self.r.clone() * self.r.clone() - two * self.s2.clone() * self.s2.clone()
    }

    /// Exact sign, decided without any floating-point step.
    pub fn sign(&self) -> Ordering {
        let zero = T::zero();
        let a = self.r.partial_cmp(&zero).unwrap_or(Ordering::Equal);
        let b = self.s2.partial_cmp(&zero).unwrap_or(Ordering::Equal);
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            // Opposite signs: the rational part wins iff r² > 2·s2².
            (x, _) => match self.norm().partial_cmp(&zero).unwrap_or(Ordering::Equal) {
                Ordering::Greater => x,
                Ordering::Less => x.reverse(),
                Ordering::Equal => Ordering::Equal,
            },
        }
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
}

impl<T: Clone + Num> Zero for QSqrt2<T> {
    fn zero() -> Self {
        QSqrt2 {
            r: T::zero(),
            s2: T::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s2.is_zero()
    }
}

impl<T: Clone + Num> One for QSqrt2<T> {
    fn one() -> Self {
        QSqrt2 {
            r: T::one(),
            s2: T::zero(),
        }
    }
}

impl<T: Num> Add for QSqrt2<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        QSqrt2 {
            r: self.r + rhs.r,
            s2: self.s2 + rhs.s2,
        }
    }
}

impl<T: Num> Sub for QSqrt2<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        QSqrt2 {
            r: self.r - rhs.r,
            s2: self.s2 - rhs.s2,
        }
    }
}

impl<T: Num + Neg<Output = T>> Neg for QSqrt2<T> {
    type Output = Self;

    fn neg(self) -> Self {
        QSqrt2 {
            r: -self.r,
            s2: -self.s2,
        }
    }
}

impl<T: Clone + Num> Mul for QSqrt2<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if rhs.s2.is_zero() {
            return QSqrt2 {
                r: self.r * rhs.r.clone(),
                s2: self.s2 * rhs.r,
            };
        }
        if self.s2.is_zero() {
            return QSqrt2 {
                r: self.r.clone() * rhs.r,
                s2: self.r * rhs.s2,
            };
        }
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = T::one() + T::one();
        QSqrt2 {
            r: self.r.clone() * rhs.r.clone() + two * self.s2.clone() * rhs.s2.clone(),
            s2: self.r * rhs.s2 + self.s2 * rhs.r,
        }
    }
}

impl<T: Clone + Num> Div for QSqrt2<T> {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        if rhs.s2.is_zero() {
            return QSqrt2 {
                r: self.r / rhs.r.clone(),
                s2: self.s2 / rhs.r,
            };
        }
        // Multiply through by the conjugate of the divisor.
        let two = T::one() + T::one();
        let norm = rhs.r.clone() * rhs.r.clone() - two.clone() * rhs.s2.clone() * rhs.s2.clone();
        let r = self.r.clone() * rhs.r.clone() - two * self.s2.clone() * rhs.s2.clone();
        let s2 = self.s2 * rhs.r - self.r * rhs.s2;
        QSqrt2 {
            r: r / norm.clone(),
            s2: s2 / norm,
        }
    }
}

impl<T: Clone + Num> Rem for QSqrt2<T> {
    type Output = Self;

    /// Division in a field is exact, so the remainder is always zero.
    fn rem(self, _rhs: Self) -> Self {
        Self::zero()
    }
}

impl<T: Clone + Num> Num for QSqrt2<T> {
    type FromStrRadixErr = T::FromStrRadixErr;

    fn from_str_radix(str: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        T::from_str_radix(str, radix).map(|r| QSqrt2 { r, s2: T::zero() })
    }
}

impl<T> PartialOrd for QSqrt2<T>
where
    T: Clone + Num + Neg<Output = T> + PartialOrd,
{
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).sign())
    }
}

impl<T> Ord for QSqrt2<T>
where
    T: Clone + Num + Neg<Output = T> + Ord,
{
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl<T> GridScalar for QSqrt2<T>
where
    T: GridScalar + Signed,
{
    fn from_int(v: i64) -> Self {
        QSqrt2::from_rational(T::from_int(v))
    }

    fn to_integer(&self) -> Option<i64> {
        if self.s2.is_zero() {
            self.r.to_integer()
        } else {
            None
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        if self.s2.is_zero() {
            self.r.to_rational()
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        self.r.to_f64() + self.s2.to_f64() * std::f64::consts::SQRT_2
    }
}

impl<T: fmt::Display + Zero + PartialOrd + Clone + Neg<Output = T>> fmt::Display for QSqrt2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s2.is_zero() {
            return write!(f, "{}", self.r);
        }
        if !self.r.is_zero() {
            write!(f, "{}", self.r)?;
            if self.s2 < T::zero() {
                write!(f, "-({})√2", -self.s2.clone())
            } else {
                write!(f, "+({})√2", self.s2)
            }
        } else {
            write!(f, "({})√2", self.s2)
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Rational(String),
    Integer(i64),
    Quadratic { r: String, s2: String },
}

impl<T> Serialize for QSqrt2<T>
where
    T: fmt::Display + Zero,
{
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = if self.s2.is_zero() {
            ScalarRepr::Rational(self.r.to_string())
        } else {
            ScalarRepr::Quadratic {
                r: self.r.to_string(),
                s2: self.s2.to_string(),
            }
        };
        repr.serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for QSqrt2<T>
where
    T: FromStr + Zero,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let parse = |s: &str| s.trim().parse::<T>().map_err(D::Error::custom);
        match ScalarRepr::deserialize(deserializer)? {
            ScalarRepr::Rational(r) => Ok(QSqrt2 {
                r: parse(&r)?,
                s2: T::zero(),
            }),
            ScalarRepr::Integer(v) => Ok(QSqrt2 {
                r: parse(&v.to_string())?,
                s2: T::zero(),
            }),
            ScalarRepr::Quadratic { r, s2 } => Ok(QSqrt2 {
                r: parse(&r)?,
                s2: parse(&s2)?,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Scalar};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn s(r: Rational, s2: Rational) -> Scalar {
        Scalar::new(r, s2)
    }

    #[test]
    fn product_expands_exactly() {
        // (1 + √2)(3 − 2√2) = 3 − 2√2 + 3√2 − 4 = −1 + √2
        let a = s(q(1, 1), q(1, 1));
        let b = s(q(3, 1), q(-2, 1));
        assert_eq!(a * b, s(q(-1, 1), q(1, 1)));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = s(q(7, 3), q(-5, 2));
        let b = s(q(1, 2), q(3, 1));
        assert_eq!((a.clone() * b.clone()) / b, a);
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 3 − 2√2 ≈ 0.17 > 0
        assert_eq!(s(q(3, 1), q(-2, 1)).sign(), Ordering::Greater);
        // 1 − √2 < 0
        assert_eq!(s(q(1, 1), q(-1, 1)).sign(), Ordering::Less);
        // −3 + 2√2 < 0
        assert_eq!(s(q(-3, 1), q(2, 1)).sign(), Ordering::Less);
        assert_eq!(Scalar::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn ordering_is_total() {
        let a = s(q(1, 1), q(1, 1));
        let b = s(q(2, 1), q(1, 2));
        // 1 + √2 ≈ 2.414 and 2 + √2/2 ≈ 2.707
        assert!(a < b);
        assert_eq!(a.cmp(&b), Ordering::Less);
    }

    #[test]
    fn integer_detection() {
        assert_eq!(Scalar::from_int(5).to_integer(), Some(5));
        assert_eq!(Scalar::ratio(10, 2).to_integer(), Some(5));
        assert_eq!(Scalar::ratio(7, 2).to_integer(), None);
        assert_eq!(Scalar::sqrt2().to_integer(), None);
    }

    #[test]
    fn serializes_rationals_as_strings() {
        let v = serde_json::to_string(&Scalar::ratio(11, 3)).unwrap();
        assert_eq!(v, "\"11/3\"");
        let w = serde_json::to_string(&s(q(4, 1), q(-1, 20))).unwrap();
        assert_eq!(w, r#"{"r":"4","s2":"-1/20"}"#);
        let back: Scalar = serde_json::from_str(&w).unwrap();
        assert_eq!(back, s(q(4, 1), q(-1, 20)));
    }

    #[test]
    fn generic_over_machine_rationals() {
        type Small = QSqrt2<Ratio<i64>>;
        let a = Small::new(Ratio::new(3, 1), Ratio::new(-2, 1));
        assert!(a > Small::zero());
        assert_eq!(a.to_integer(), None);
    }
}
