//! Exact scalars in Q(i).
//!
//! Every coefficient and parameter in this crate is a [`GaussianRational`]:
//! a complex number whose real and imaginary parts are reduced big-integer
//! fractions. Equality is structural, so two values compare equal exactly
//! when they denote the same number.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational numbers: reduced fractions of big integers.
pub type Rational = RBig;

fn rational(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    RBig::from_parts_signed(IBig::from(num), IBig::from(den))
}

fn integer(n: i64) -> Rational {
    RBig::from(IBig::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar {0:?}")]
    Parse(String),
}

/// A Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational { re, im: RBig::ZERO }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(integer(n))
    }

    /// `num/den` as a real scalar. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_real(rational(num, den))
    }

    /// `(re_num/re_den) + (im_num/im_den)*i`. Panics on a zero denominator.
    pub fn complex(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational {
            re: rational(re_num, re_den),
            im: rational(im_num, im_den),
        }
    }

    pub fn i() -> Self {
        GaussianRational { re: RBig::ZERO, im: RBig::ONE }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<IBig> {
        (self.im.is_zero() && self.re.is_int()).then(|| self.re.numerator().clone())
    }

    /// True for 0, -1, -2, ...: the values at which `(b)_k` eventually vanishes.
    pub fn is_nonpositive_integer(&self) -> bool {
        self.to_integer().is_some_and(|n| n <= IBig::ZERO)
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Self::from_real(&RBig::ONE / &self.re));
        }
        let d = self.norm_sqr();
        Ok(GaussianRational { re: &self.re / &d, im: -(&self.im / &d) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if rhs.im.is_zero() {
            return Ok(GaussianRational { re: &self.re / &rhs.re, im: &self.im / &rhs.re });
        }
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, exp: i64) -> Result<Self, ScalarError> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.checked_inv()?.pow(exp.unsigned_abs()))
        }
    }

    /// Divide by a nonzero machine integer.
    pub fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        let d = integer(d);
        GaussianRational { re: &self.re / &d, im: &self.im / &d }
    }

    pub fn add_int(&self, n: i64) -> Self {
        GaussianRational {
            re: &self.re + integer(n),
            im: self.im.clone(),
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: RBig::ZERO, im: RBig::ZERO }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_real(RBig::ONE)
    }

    fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_real(r)
    }
}

// Total order used for canonical sorting: lexicographic on (re, im).
impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussianRational::from_real(&self.re * &rhs.re),
            (true, false) => GaussianRational { re: &self.re * &rhs.re, im: &self.re * &rhs.im },
            (false, true) => GaussianRational { re: &self.re * &rhs.re, im: &self.im * &rhs.re },
            (false, false) => GaussianRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

/// Panics on division by zero; use [`GaussianRational::checked_div`] otherwise.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::one(), |mut acc, x| {
            acc *= &x;
            acc
        })
    }
}

impl<'a> Product<&'a GaussianRational> for GaussianRational {
    fn product<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::one(), |mut acc, x| {
            acc *= x;
            acc
        })
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.is_int() {
        write!(f, "{}", r.numerator())
    } else {
        write!(f, "{}/{}", r.numerator(), r.denominator())
    }
}

/// Text form: `p`, `p/q`, `r/s*i`, `p/q+r/s*i`, with `i` / `-i` for unit imaginary parts.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            if self.im > RBig::ZERO {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-&self.im).is_one() {
            f.write_str("-i")
        } else {
            write_rational(f, &self.im)?;
            f.write_str("*i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_unsigned_rational(body: &str) -> Option<Rational> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match body.split_once('/') {
        None if digits(body) => Some(RBig::from(body.parse::<UBig>().ok()?)),
        Some((n, d)) if digits(n) && digits(d) => {
            let d: UBig = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(RBig::from_parts(IBig::from(n.parse::<UBig>().ok()?), d))
        }
        _ => None,
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }

        // Split into signed terms at every '+' / '-' after the first character.
        let mut terms = Vec::new();
        let mut start = 0;
        for (idx, ch) in compact.char_indices() {
            if idx > 0 && (ch == '+' || ch == '-') {
                terms.push(&compact[start..idx]);
                start = idx;
            }
        }
        terms.push(&compact[start..]);

        let mut re = None;
        let mut im = None;
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'+') => (false, &term[1..]),
                Some(b'-') => (true, &term[1..]),
                _ => (false, term),
            };
            let (slot, value) = if let Some(coef) = body.strip_suffix('i') {
                let value = if coef.is_empty() {
                    RBig::ONE
                } else {
                    parse_unsigned_rational(coef.strip_suffix('*').ok_or_else(err)?)
                        .ok_or_else(err)?
                };
                (&mut im, value)
            } else {
                (&mut re, parse_unsigned_rational(body).ok_or_else(err)?)
            };
            if slot.is_some() {
                return Err(err());
            }
            *slot = Some(if negative { -value } else { value });
        }
        Ok(GaussianRational {
            re: re.unwrap_or(RBig::ZERO),
            im: im.unwrap_or(RBig::ZERO),
        })
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
