//! Exact rationals and degree-one forms `a·t + b` in a single formal parameter.
//!
//! Every invariant in the crate is a [`Quantity`]: either an exact rational
//! constant or a [`LinForm`] in a named parameter (`n` for generating pairs,
//! `k` for the quotient examples). Nothing here ever rounds.

use std::borrow::Cow;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator over arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        (!rhs.is_zero()).then(|| Rational(&self.0 / &rhs.0))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize, BigInt);

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}
rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
// Panics on a zero divisor, like integer division; see `checked_div`.
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// JSON encoding of a single big integer: a plain number when it fits in
/// `i64`, a decimal string otherwise. Never a float.
mod json_int {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&n.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

impl Serialize for Rational {
    /// Integers as JSON integers, everything else as a `"p/q"` string.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(Rational::from(v)),
            Repr::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

/// Name of the formal parameter of a [`LinForm`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Param(String);

impl Param {
    pub fn new(name: impl Into<String>) -> Self {
        Param(name.into())
    }

    /// Parameter of the generating-pair series.
    pub fn n() -> Self {
        Param::new("n")
    }

    /// Parameter of the quotient examples, with `n = 3k`.
    pub fn k() -> Self {
        Param::new("k")
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `slope·t + offset` in the parameter `param`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinForm {
    pub slope: Rational,
    pub offset: Rational,
    pub param: Param,
}

/// Result of [`LinForm::divide_exact`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub form: LinForm,
    /// Slope and offset are both integers, so the form is integer-valued at
    /// every integer parameter value.
    pub integral: bool,
}

impl LinForm {
    pub fn new(slope: impl Into<Rational>, offset: impl Into<Rational>, param: Param) -> Self {
        LinForm {
            slope: slope.into(),
            offset: offset.into(),
            param,
        }
    }

    pub fn constant(offset: impl Into<Rational>, param: Param) -> Self {
        LinForm::new(Rational::zero(), offset, param)
    }

    /// The identity form `t`.
    pub fn var(param: Param) -> Self {
        LinForm::new(1, 0, param)
    }

    pub fn eval(&self, t: impl Into<BigInt>) -> Rational {
        &self.slope * Rational::from_integer(t) + &self.offset
    }

    /// `a·f + b·g`, componentwise.
    pub fn combine(a: &Rational, f: &LinForm, b: &Rational, g: &LinForm) -> Result<LinForm> {
        if f.param != g.param {
            return Err(Error::IncompatibleParameter {
                left: f.param.to_string(),
                right: g.param.to_string(),
            });
        }
        Ok(LinForm {
            slope: a * &f.slope + b * &g.slope,
            offset: a * &f.offset + b * &g.offset,
            param: f.param.clone(),
        })
    }

    /// `f / d`, reporting whether the quotient is still integer-valued.
    ///
    /// Panics if `d == 0`.
    pub fn divide_exact(&self, d: u64) -> Division {
        assert!(d >= 1, "division of a linear form by zero");
        let d = Rational::from(d);
        let form = LinForm {
            slope: &self.slope / &d,
            offset: &self.offset / &d,
            param: self.param.clone(),
        };
        let integral = form.is_integral();
        Division { form, integral }
    }

    /// Substitute `old = factor · new`: the slope is multiplied by `factor`
    /// and the offset is kept.
    pub fn reparameterize(&self, factor: i64, param: Param) -> LinForm {
        LinForm {
            slope: &self.slope * Rational::from(factor),
            offset: self.offset.clone(),
            param,
        }
    }

    pub fn scale(&self, c: &Rational) -> LinForm {
        LinForm {
            slope: &self.slope * c,
            offset: &self.offset * c,
            param: self.param.clone(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.slope.is_integer() && self.offset.is_integer()
    }

    pub fn is_constant(&self) -> bool {
        self.slope.is_zero()
    }

    /// `a*t+b` with both terms always present, e.g. `24*k-12` or `5*k+0`.
    pub fn to_expr(&self) -> String {
        let sign = if self.offset.is_negative() { '-' } else { '+' };
        format!("{}*{}{}{}", self.slope, self.param, sign, self.offset.abs())
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &Rational, param: &Param) -> fmt::Result {
    if *c == Rational::one() {
        write!(f, "{param}")
    } else if *c == -Rational::one() {
        write!(f, "-{param}")
    } else if c.is_integer() {
        write!(f, "{c}{param}")
    } else {
        write!(f, "({c}){param}")
    }
}

impl fmt::Display for LinForm {
    /// Compact form as printed in tables: `24n-32`, `4k`, `-k+1`, `24k-32/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.offset);
        }
        write_coefficient(f, &self.slope, &self.param)?;
        if self.offset.is_positive() {
            write!(f, "+{}", self.offset)?;
        } else if self.offset.is_negative() {
            write!(f, "-{}", self.offset.abs())?;
        }
        Ok(())
    }
}

impl Serialize for LinForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Int<'a>(&'a BigInt);
        impl Serialize for Int<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                json_int::serialize(self.0, s)
            }
        }
        let mut st = s.serialize_struct("LinForm", 5)?;
        st.serialize_field("slope_num", &Int(self.slope.numer()))?;
        st.serialize_field("slope_den", &Int(self.slope.denom()))?;
        st.serialize_field("offset_num", &Int(self.offset.numer()))?;
        st.serialize_field("offset_den", &Int(self.offset.denom()))?;
        st.serialize_field("param", &self.param)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct LinFormRepr {
    #[serde(with = "json_int")]
    slope_num: BigInt,
    #[serde(with = "json_int")]
    slope_den: BigInt,
    #[serde(with = "json_int")]
    offset_num: BigInt,
    #[serde(with = "json_int")]
    offset_den: BigInt,
    param: Param,
}

impl TryFrom<LinFormRepr> for LinForm {
    type Error = Error;

    fn try_from(r: LinFormRepr) -> Result<Self> {
        Ok(LinForm {
            slope: Rational::new(r.slope_num, r.slope_den)?,
            offset: Rational::new(r.offset_num, r.offset_den)?,
            param: r.param,
        })
    }
}

impl<'de> Deserialize<'de> for LinForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LinFormRepr::deserialize(d)?
            .try_into()
            .map_err(de::Error::custom)
    }
}

/// An invariant value: an exact constant or a linear form.
///
/// Forms with zero slope compare equal to the matching constant.
#[derive(Clone, Debug, Eq)]
pub enum Quantity {
    Exact(Rational),
    Linear(LinForm),
}

impl Quantity {
    pub fn zero() -> Self {
        Quantity::Exact(Rational::zero())
    }

    fn normalized(&self) -> Cow<'_, Quantity> {
        match self {
            Quantity::Linear(f) if f.is_constant() => Cow::Owned(Quantity::Exact(f.offset.clone())),
            other => Cow::Borrowed(other),
        }
    }

    pub fn param(&self) -> Option<&Param> {
        match self.normalized() {
            Cow::Borrowed(Quantity::Linear(f)) => Some(&f.param),
            _ => None,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.param().is_some()
    }

    pub fn slope(&self) -> Rational {
        match self {
            Quantity::Exact(_) => Rational::zero(),
            Quantity::Linear(f) => f.slope.clone(),
        }
    }

    pub fn offset(&self) -> Rational {
        match self {
            Quantity::Exact(c) => c.clone(),
            Quantity::Linear(f) => f.offset.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<Rational> {
        match self.normalized().as_ref() {
            Quantity::Exact(c) => Some(c.clone()),
            Quantity::Linear(_) => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_exact().and_then(|c| c.to_i64())
    }

    /// Value at parameter `t`; constants ignore `t`.
    pub fn eval(&self, t: impl Into<BigInt>) -> Rational {
        match self {
            Quantity::Exact(c) => c.clone(),
            Quantity::Linear(f) => f.eval(t),
        }
    }

    pub fn at(&self, t: impl Into<BigInt>) -> Quantity {
        Quantity::Exact(self.eval(t))
    }

    fn combine(a: &Rational, x: &Quantity, b: &Rational, y: &Quantity) -> Result<Quantity> {
        let out = match (x, y) {
            (Quantity::Exact(p), Quantity::Exact(q)) => Quantity::Exact(a * p + b * q),
            (Quantity::Linear(f), Quantity::Exact(q)) => Quantity::Linear(LinForm {
                slope: a * &f.slope,
                offset: a * &f.offset + b * q,
                param: f.param.clone(),
            }),
            (Quantity::Exact(p), Quantity::Linear(g)) => Quantity::Linear(LinForm {
                slope: b * &g.slope,
                offset: a * p + b * &g.offset,
                param: g.param.clone(),
            }),
            (Quantity::Linear(f), Quantity::Linear(g)) => {
                if f.is_constant() || g.is_constant() {
                    let x = x.normalized();
                    let y = y.normalized();
                    return Quantity::combine(a, &x, b, &y);
                }
                Quantity::Linear(LinForm::combine(a, f, b, g)?)
            }
        };
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Quantity) -> Result<Quantity> {
        Quantity::combine(&Rational::one(), self, &Rational::one(), rhs)
    }

    pub fn try_sub(&self, rhs: &Quantity) -> Result<Quantity> {
        Quantity::combine(&Rational::one(), self, &-Rational::one(), rhs)
    }

    pub fn scale(&self, c: impl Into<Rational>) -> Quantity {
        let c = c.into();
        match self {
            Quantity::Exact(v) => Quantity::Exact(v * &c),
            Quantity::Linear(f) => Quantity::Linear(f.scale(&c)),
        }
    }

    /// `self / d` together with its integrality.
    pub fn divide_exact(&self, d: u64) -> (Quantity, bool) {
        match self {
            Quantity::Exact(v) => {
                assert!(d >= 1, "division by zero");
                let q = v / Rational::from(d);
                let integral = q.is_integer();
                (Quantity::Exact(q), integral)
            }
            Quantity::Linear(f) => {
                let Division { form, integral } = f.divide_exact(d);
                (Quantity::Linear(form), integral)
            }
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            Quantity::Exact(v) => v.is_integer(),
            Quantity::Linear(f) => f.is_integral(),
        }
    }

    /// `self ≥ 0` for every integer parameter value `t ≥ floor`.
    ///
    /// For a form `a·t + b` this holds iff `a ≥ 0` and `a·floor + b ≥ 0`.
    pub fn nonneg_from(&self, floor: i64) -> bool {
        match self {
            Quantity::Exact(v) => !v.is_negative(),
            Quantity::Linear(f) => !f.slope.is_negative() && !f.eval(floor).is_negative(),
        }
    }

    /// `self ≥ rhs` for every integer parameter value `t ≥ floor`.
    pub fn ge_from(&self, rhs: &Quantity, floor: i64) -> Result<bool> {
        Ok(self.try_sub(rhs)?.nonneg_from(floor))
    }

    /// Expression rendering for CSV cells: integers as-is, forms as `a*t+b`.
    pub fn to_expr(&self) -> String {
        match self.normalized().as_ref() {
            Quantity::Exact(v) => v.to_string(),
            Quantity::Linear(f) => f.to_expr(),
        }
    }
}

impl PartialEq for Quantity {
    fn eq(&self, other: &Self) -> bool {
        match (self.normalized().as_ref(), other.normalized().as_ref()) {
            (Quantity::Exact(a), Quantity::Exact(b)) => a == b,
            (Quantity::Linear(f), Quantity::Linear(g)) => f == g,
            _ => false,
        }
    }
}

impl Hash for Quantity {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self.normalized().as_ref() {
            Quantity::Exact(v) => (0u8, v).hash(state),
            Quantity::Linear(f) => (1u8, f).hash(state),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(v) => write!(f, "{v}"),
            Quantity::Linear(form) => write!(f, "{form}"),
        }
    }
}

impl From<Rational> for Quantity {
    fn from(v: Rational) -> Self {
        Quantity::Exact(v)
    }
}

impl From<LinForm> for Quantity {
    fn from(f: LinForm) -> Self {
        Quantity::Linear(f)
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Exact(Rational::from(v))
    }
}

impl From<u64> for Quantity {
    fn from(v: u64) -> Self {
        Quantity::Exact(Rational::from(v))
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.normalized().as_ref() {
            Quantity::Exact(v) => v.serialize(s),
            Quantity::Linear(f) => f.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct QuantityVisitor;

        impl<'de> Visitor<'de> for QuantityVisitor {
            type Value = Quantity;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a \"p/q\" string or a linear-form object")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Quantity, E> {
                Ok(Quantity::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Quantity, E> {
                Ok(Quantity::from(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Quantity, E> {
                v.parse::<Rational>().map(Quantity::Exact).map_err(E::custom)
            }

            fn visit_map<A: MapAccess<'de>>(self, map: A) -> std::result::Result<Quantity, A::Error> {
                let repr = LinFormRepr::deserialize(de::value::MapAccessDeserializer::new(map))?;
                LinForm::try_from(repr)
                    .map(Quantity::Linear)
                    .map_err(de::Error::custom)
            }
        }

        d.deserialize_any(QuantityVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_form(a: i64, b: i64) -> LinForm {
        LinForm::new(a, b, Param::n())
    }

    fn k_form(a: i64, b: i64) -> LinForm {
        LinForm::new(a, b, Param::k())
    }

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn rationals_are_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn parse_rational() {
        assert_eq!("-32/3".parse::<Rational>().unwrap(), rat(-32, 3));
        assert_eq!("12".parse::<Rational>().unwrap(), Rational::from(12));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(n_form(24, -32).eval(3), Rational::from(40));
        assert_eq!(LinForm::constant(5, Param::new("t")).eval(7), Rational::from(5));
        assert_eq!(n_form(7, -4).eval(0), Rational::from(-4));
    }

    #[test]
    fn combine_examples() {
        let x = n_form(24, -32);
        let s = n_form(12, -16);
        let one = Rational::one();
        assert_eq!(LinForm::combine(&one, &x, &-Rational::one(), &s).unwrap(), n_form(12, -16));
        assert_eq!(LinForm::combine(&Rational::zero(), &x, &one, &s).unwrap(), s);
        assert_eq!(LinForm::combine(&rat(1, 2), &x, &Rational::zero(), &s).unwrap(), n_form(12, -16));
    }

    #[test]
    fn combine_rejects_mixed_parameters() {
        let err = LinForm::combine(&Rational::one(), &n_form(1, 0), &Rational::one(), &k_form(1, 0));
        assert!(matches!(err, Err(Error::IncompatibleParameter { .. })));
    }

    #[test]
    fn divide_exact_examples() {
        let d = k_form(72, -36).divide_exact(3);
        assert_eq!(d.form, k_form(24, -12));
        assert!(d.integral);

        let d = k_form(6, 0).divide_exact(3);
        assert_eq!(d.form, k_form(2, 0));
        assert!(d.integral);

        let d = k_form(72, -32).divide_exact(3);
        assert_eq!(d.form, LinForm::new(24, rat(-32, 3), Param::k()));
        assert!(!d.integral);
        assert_eq!(d.form.to_string(), "24k-32/3");
    }

    #[test]
    fn reparameterize_n_as_3k() {
        assert_eq!(n_form(24, -32).reparameterize(3, Param::k()), k_form(72, -32));
    }

    #[test]
    fn display_forms() {
        assert_eq!(n_form(48, -48).to_string(), "48n-48");
        assert_eq!(k_form(4, 0).to_string(), "4k");
        assert_eq!(k_form(1, 0).to_string(), "k");
        assert_eq!(k_form(-1, 1).to_string(), "-k+1");
        assert_eq!(k_form(0, -4).to_string(), "-4");
        assert_eq!(k_form(24, -12).to_expr(), "24*k-12");
        assert_eq!(k_form(5, 0).to_expr(), "5*k+0");
    }

    #[test]
    fn quantity_equality_ignores_constant_forms() {
        assert_eq!(Quantity::from(k_form(0, 3)), Quantity::from(3i64));
        assert_ne!(Quantity::from(k_form(1, 3)), Quantity::from(n_form(1, 3)));
        assert_eq!(Quantity::from(k_form(0, 3)).param(), None);
    }

    #[test]
    fn quantity_mixed_arithmetic() {
        let x = Quantity::from(k_form(12, -4));
        let y = x.try_add(&Quantity::from(4i64)).unwrap();
        assert_eq!(y, Quantity::from(k_form(12, 0)));
        let z = y.try_sub(&Quantity::from(k_form(12, 0))).unwrap();
        assert_eq!(z, Quantity::zero());
        // A constant form in another parameter does not conflict.
        let w = x.try_add(&Quantity::from(n_form(0, 1))).unwrap();
        assert_eq!(w, Quantity::from(k_form(12, -3)));
        assert!(x.try_add(&Quantity::from(n_form(1, 0))).is_err());
    }

    #[test]
    fn nonneg_on_half_line() {
        // 24k-9 >= 14k-6 for all k >= 1
        let lhs = Quantity::from(k_form(24, -9));
        let rhs = Quantity::from(k_form(14, -6));
        assert!(lhs.ge_from(&rhs, 1).unwrap());
        // 12k-6 >= 1 holds from k = 1 but not from k = 0
        let q = Quantity::from(k_form(12, -7));
        assert!(q.nonneg_from(1));
        assert!(!q.nonneg_from(0));
        // negative slope eventually fails
        assert!(!Quantity::from(k_form(-1, 100)).nonneg_from(1));
    }

    #[test]
    fn json_encoding() {
        let q = Quantity::from(n_form(24, -32));
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"slope_num":24,"slope_den":1,"offset_num":-32,"offset_den":1,"param":"n"}"#);
        assert_eq!(serde_json::from_str::<Quantity>(&s).unwrap(), q);

        assert_eq!(serde_json::to_string(&Quantity::from(7i64)).unwrap(), "7");
        let frac = Quantity::Exact(rat(-2, 3));
        assert_eq!(serde_json::to_string(&frac).unwrap(), r#""-2/3""#);
        assert_eq!(serde_json::from_str::<Quantity>(r#""-2/3""#).unwrap(), frac);
    }

    #[test]
    fn json_big_integers_are_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(1000);
        let q = Quantity::from(LinForm::new(big.clone(), 1, Param::k()));
        let s = serde_json::to_string(&q).unwrap();
        assert!(s.contains(&format!("\"{big}\"")));
        assert_eq!(serde_json::from_str::<Quantity>(&s).unwrap(), q);
    }
}
