//! Exact coefficient fields.
//!
//! Three kinds are supported: the rationals, prime fields `GF(p)`, and
//! quadratic extensions `Q[t]/(t^2 + c1 t + c0)` of the rationals. Every
//! [`Scalar`] carries enough of its field to reject mixed arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Rational number with machine-word numerator and denominator, used for the
/// minimal polynomial of a quadratic extension.
pub type SmallRational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDescriptor, FieldDescriptor),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("t^2 + ({0})t + ({1}) is reducible over Q")]
    Reducible(SmallRational, SmallRational),
    #[error("cannot parse field descriptor {0:?}; expected Q, Fp:<p> or ext:<c1>,<c0>")]
    BadDescriptor(String),
    #[error("{0} has no image in {1}")]
    NotRepresentable(String, FieldDescriptor),
}

/// Which field the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    /// `GF(p)`; the characteristic is prime.
    Prime(u64),
    /// `Q[t]/(t^2 + c1 t + c0)` with an irreducible minimal polynomial.
    QuadraticExt { c1: SmallRational, c0: SmallRational },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_rational_square(q: SmallRational) -> bool {
    if q.is_negative() {
        return false;
    }
    let sq = |n: i64| {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|s| s >= 0 && s.checked_mul(s) == Some(n))
    };
    sq(*q.numer()) && sq(*q.denom())
}

impl FieldDescriptor {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        // Products of residues are formed in u128, so any u64 prime works.
        if is_prime(p) {
            Ok(FieldDescriptor::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn quadratic(c1: SmallRational, c0: SmallRational) -> Result<Self, FieldError> {
        let disc = c1 * c1 - SmallRational::from_integer(4) * c0;
        if is_rational_square(disc) {
            Err(FieldError::Reducible(c1, c0))
        } else {
            Ok(FieldDescriptor::QuadraticExt { c1, c0 })
        }
    }

    /// The extension `Q[t]/(t^2 - t + 1)` in which `t` is a primitive sixth root of unity.
    pub fn eisenstein() -> Self {
        FieldDescriptor::QuadraticExt {
            c1: SmallRational::from_integer(-1),
            c0: SmallRational::from_integer(1),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldDescriptor::Prime(p) => Scalar::Prime {
                value: n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits"),
                p,
            },
            FieldDescriptor::QuadraticExt { c1, c0 } => Scalar::Ext(Box::new(ExtElem {
                a: BigRational::from_integer(n.clone()),
                b: BigRational::zero(),
                c1,
                c0,
            })),
        }
    }

    /// Image of a rational number; fails in `GF(p)` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.try_div(&den)
            .map_err(|_| FieldError::NotRepresentable(q.to_string(), *self))
    }

    /// The generator `t` of a quadratic extension.
    pub fn generator(&self) -> Option<Scalar> {
        match *self {
            FieldDescriptor::QuadraticExt { c1, c0 } => Some(Scalar::Ext(Box::new(ExtElem {
                a: BigRational::zero(),
                b: BigRational::one(),
                c1,
                c0,
            }))),
            _ => None,
        }
    }

    /// `n!` as an element of the field.
    pub fn factorial(&self, n: u32) -> Scalar {
        let mut acc = BigInt::one();
        for k in 2..=n {
            acc *= k;
        }
        self.from_bigint(&acc)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "Fp:{p}"),
            FieldDescriptor::QuadraticExt { c1, c0 } => write!(f, "ext:{c1},{c0}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    /// Accepts `Q`, `Fp:<p>` and `ext:<c1>,<c0>`; the last names `Q[t]/(t^2 + c1 t + c0)`.
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadDescriptor(s.to_string());
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldDescriptor::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            return FieldDescriptor::prime(p.trim().parse().map_err(|_| bad())?);
        }
        if let Some(rest) = s.strip_prefix("ext:") {
            let (c1, c0) = rest.split_once(',').ok_or_else(bad)?;
            let c1: SmallRational = c1.trim().parse().map_err(|_| bad())?;
            let c0: SmallRational = c0.trim().parse().map_err(|_| bad())?;
            return FieldDescriptor::quadratic(c1, c0);
        }
        Err(bad())
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Element `a + b t` of a quadratic extension, always reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem {
    pub a: BigRational,
    pub b: BigRational,
    c1: SmallRational,
    c0: SmallRational,
}

fn big(q: SmallRational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Residue in `[0, p)`.
    Prime { value: u64, p: u64 },
    Ext(Box<ExtElem>),
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rationals,
            Scalar::Prime { p, .. } => FieldDescriptor::Prime(*p),
            Scalar::Ext(e) => FieldDescriptor::QuadraticExt { c1: e.c1, c0: e.c0 },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Ext(e) => e.a.is_zero() && e.b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Ext(e) => e.a.is_one() && e.b.is_zero(),
        }
    }

    /// The rational value, when the element lies in the prime subfield of a characteristic-zero field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Ext(e) if e.b.is_zero() => Some(e.a.clone()),
            _ => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        let (f, g) = (self.field(), other.field());
        if f == g {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(f, g))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Ext(x), Scalar::Ext(y)) => Scalar::Ext(Box::new(ExtElem {
                a: &x.a + &y.a,
                b: &x.b + &y.b,
                c1: x.c1,
                c0: x.c0,
            })),
            _ => unreachable!("descriptors already compared"),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, p }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Ext(x), Scalar::Ext(y)) => {
                // t^2 = -c1 t - c0
                let bd = &x.b * &y.b;
                let a = &x.a * &y.a - &bd * big(x.c0);
                let b = &x.a * &y.b + &x.b * &y.a - &bd * big(x.c1);
                Scalar::Ext(Box::new(ExtElem { a, b, c1: x.c1, c0: x.c0 }))
            }
            _ => unreachable!("descriptors already compared"),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.try_add(&other.neg())
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime { value: (p - value) % p, p: *p },
            Scalar::Ext(x) => Scalar::Ext(Box::new(ExtElem {
                a: -&x.a,
                b: -&x.b,
                c1: x.c1,
                c0: x.c0,
            })),
        }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, p } => Scalar::Prime { value: pow_mod(*value, p - 2, *p), p: *p },
            Scalar::Ext(x) => {
                // (a + b t)(a - b c1 - b t) = a^2 - a b c1 + b^2 c0
                let (c1, c0) = (big(x.c1), big(x.c0));
                let norm = &x.a * &x.a - &x.a * &x.b * &c1 + &x.b * &x.b * &c0;
                Scalar::Ext(Box::new(ExtElem {
                    a: (&x.a - &x.b * &c1) / &norm,
                    b: -&x.b / &norm,
                    c1: x.c1,
                    c0: x.c0,
                }))
            }
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Whether the printed form starts with a minus sign that can be pulled out.
    pub(crate) fn prints_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Ext(e) => e.a.is_zero() && e.b.is_negative() || e.b.is_zero() && e.a.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn write_ext(f: &mut fmt::Formatter<'_>, a: &BigRational, b: &BigRational) -> fmt::Result {
    let coeff_t = |f: &mut fmt::Formatter<'_>, b: &BigRational| {
        if b.is_one() {
            write!(f, "t")
        } else if (-b).is_one() {
            write!(f, "-t")
        } else {
            write!(f, "{b}*t")
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (_, true) => write!(f, "{a}"),
        (true, false) => coeff_t(f, b),
        (false, false) => {
            write!(f, "(")?;
            if b.is_negative() {
                write!(f, "{a} - ")?;
                coeff_t(f, &-b)?;
            } else {
                write!(f, "{a} + ")?;
                coeff_t(f, b)?;
            }
            write!(f, ")")
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Ext(e) => write_ext(f, &e.a, &e.b),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics when the operands live in different fields.
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn gf2_one_plus_one() {
        let f = FieldDescriptor::prime(2).unwrap();
        assert!((&f.one() + &f.one()).is_zero());
    }

    #[test]
    fn eisenstein_square_of_generator() {
        let f = FieldDescriptor::eisenstein();
        let t = f.generator().unwrap();
        assert_eq!(&t * &t, &t - &f.one());
    }

    #[test]
    fn ext_inverse() {
        let f = FieldDescriptor::eisenstein();
        let t = f.generator().unwrap();
        let x = &(&t * &f.from_i64(3)) + &f.from_i64(-2);
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn prime_inverse_and_mismatch() {
        let f = FieldDescriptor::prime(7).unwrap();
        assert!((&f.from_i64(3) * &f.from_i64(3).inv().unwrap()).is_one());
        assert!(matches!(f.one().try_add(&q(1, 1)), Err(FieldError::FieldMismatch(..))));
        assert_eq!(f.zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Q", "Fp:2", "ext:-1,1"] {
            assert_eq!(s.parse::<FieldDescriptor>().unwrap().to_string(), s);
        }
        assert!("Fp:4".parse::<FieldDescriptor>().is_err());
        assert!("ext:0,-1".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn rational_image_in_prime_field() {
        let f = FieldDescriptor::prime(5).unwrap();
        let half = f.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half, f.from_i64(3));
        assert!(f.from_rational(&BigRational::new(1.into(), 5.into())).is_err());
    }
}
