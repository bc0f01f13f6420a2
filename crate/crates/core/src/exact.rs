//! Arbitrary-precision integers and canonical rationals.
//!
//! Every rationality test in the crate bottoms out in [`integer_kth_root`]
//! and [`rational_kth_root`], so both are exact and floating-point free.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;

/// A fraction `num/den` kept in lowest terms with `den > 0`.
///
/// Zero is stored as `0/1`, so two rationals are equal exactly when their
/// fields are identical and the derived `Eq`/`Hash` are the numeric ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Integer,
    den: Integer,
}

/// Build the canonical rational equal to `num/den`.
pub fn normalize(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(Rational::zero());
    }
    if den.is_one() {
        return Ok(Rational { num, den });
    }
    let g = num.gcd(&den);
    let (mut num, mut den) = (num / &g, den / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    Ok(Rational { num, den })
}

impl Rational {
    /// Panics on a zero denominator; use [`normalize`] for fallible input.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Self {
        normalize(num.into(), den.into()).expect("zero denominator")
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational {
            num: n.into(),
            den: Integer::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> &Integer {
        &self.num
    }

    pub fn denom(&self) -> &Integer {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.num.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rational {
        Rational {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Rational> {
        normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: i64) -> Result<Rational> {
        rational_pow(self, e)
    }

    /// Always `num/den`, even for integers. Used by the JSON formats.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(String);

/// Accepts `n` and `n/d` with an optional leading sign; no decimals.
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let digits_ok = |t: &str, signed: bool| {
            let t = if signed {
                t.strip_prefix(['-', '+']).unwrap_or(t)
            } else {
                t
            };
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !digits_ok(num, true) {
            return Err(err());
        }
        let num: Integer = num.parse().map_err(|_| err())?;
        let den: Integer = match den {
            Some(d) if digits_ok(d, false) => d.parse().map_err(|_| err())?,
            Some(_) => return Err(err()),
            None => Integer::one(),
        };
        normalize(num, den).map_err(|_| err())
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -self.clone()
    }
}

fn add_ref(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        return normalize(&a.num + &b.num, a.den.clone()).unwrap();
    }
    normalize(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den).unwrap()
}

fn sub_ref(a: &Rational, b: &Rational) -> Rational {
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        return normalize(&a.num - &b.num, a.den.clone()).unwrap();
    }
    normalize(&a.num * &b.den - &b.num * &a.den, &a.den * &b.den).unwrap()
}

fn mul_ref(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    normalize(&a.num * &b.num, &a.den * &b.den).unwrap()
}

fn div_ref(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b).expect("division by zero rational")
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
// Panics on a zero divisor, like integer division.
forward_binop!(Div, div, div_ref);

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Floor of the `k`-th root of a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KthRoot {
    pub root: Integer,
    pub exact: bool,
}

/// `⌊v^{1/k}⌋` by bisection between the powers of two that bracket the root,
/// with `exact` set when `root^k = v`.
pub fn integer_kth_root(v: &Integer, k: u32) -> Result<KthRoot> {
    if k == 0 {
        return Err(Error::ZeroRootIndex);
    }
    if v.is_negative() {
        return Err(Error::NegativeRootArgument(v.to_string()));
    }
    if k == 1 || v.is_zero() || v.is_one() {
        return Ok(KthRoot {
            root: v.clone(),
            exact: true,
        });
    }
    let bits = v.bits();
    let k64 = u64::from(k);
    if k64 >= bits {
        // 1 <= root < 2
        return Ok(KthRoot {
            root: Integer::one(),
            exact: false,
        });
    }
    // lo^k <= v < hi^k
    let shift = (bits - 1) / k64;
    let mut lo = Integer::one() << shift;
    let mut hi = Integer::one() << (shift + 1);
    while &hi - &lo > Integer::one() {
        let mid: Integer = (&lo + &hi) >> 1;
        if num_traits::pow::Pow::pow(&mid, k) <= *v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exact = num_traits::pow::Pow::pow(&lo, k) == *v;
    Ok(KthRoot { root: lo, exact })
}

/// The positive rational `r` with `r^k = a`, if there is one.
///
/// `a = p/q` is in lowest terms, so `r = s/t` in lowest terms gives
/// `p t^k = q s^k` with both sides' fractions coprime; hence `p = s^k` and
/// `q = t^k`, and testing numerator and denominator separately is complete.
pub fn rational_kth_root(a: &Rational, k: u32) -> Result<Option<Rational>> {
    if !a.is_positive() {
        return Err(Error::NonPositiveRadicand(a.clone()));
    }
    if k == 0 {
        return Err(Error::ZeroRootIndex);
    }
    let num = integer_kth_root(a.numer(), k)?;
    if !num.exact {
        return Ok(None);
    }
    let den = integer_kth_root(a.denom(), k)?;
    if !den.exact {
        return Ok(None);
    }
    // Roots of coprime perfect powers are coprime, so no renormalization.
    Ok(Some(Rational {
        num: num.root,
        den: den.root,
    }))
}

/// Exact `a^e` for any integer exponent representable as `u32` in magnitude.
pub fn rational_pow(a: &Rational, e: i64) -> Result<Rational> {
    let mag = e.unsigned_abs().to_u32().ok_or(Error::ExponentOutOfRange(e))?;
    if e < 0 && a.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    let num = num_traits::pow::Pow::pow(&a.num, mag);
    let den = num_traits::pow::Pow::pow(&a.den, mag);
    if e >= 0 {
        Ok(Rational { num, den })
    } else {
        normalize(den, num)
    }
}

/// Serialized as a `"num/den"` string; deserialization also accepts `"n"`.
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_fraction_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalize_examples() {
        let x = normalize((4).into(), (-6).into()).unwrap();
        assert_eq!((x.numer().clone(), x.denom().clone()), ((-2).into(), 3.into()));
        let z = normalize(0.into(), 7.into()).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        assert_eq!(normalize(21.into(), 14.into()).unwrap(), r(3, 2));
        assert_eq!(normalize(1.into(), 0.into()), Err(Error::ZeroDenominator));
        assert_eq!(normalize(0.into(), (-5).into()).unwrap().to_fraction_string(), "0/1");
    }

    #[test]
    fn integer_kth_root_examples() {
        let k = |v: i64, k: u32| {
            let res = integer_kth_root(&v.into(), k).unwrap();
            (res.root.to_i64().unwrap(), res.exact)
        };
        assert_eq!(k(27, 3), (3, true));
        assert_eq!(k(26, 3), (2, false));
        assert_eq!(k(1, 9), (1, true));
        assert_eq!(k(0, 4), (0, true));
        assert_eq!(k(2, 64), (1, false));
        assert_eq!(k(1 << 62, 62), (2, true));
        assert!(integer_kth_root(&(-1).into(), 3).is_err());
        assert_eq!(integer_kth_root(&8.into(), 0), Err(Error::ZeroRootIndex));
    }

    #[test]
    fn integer_kth_root_large() {
        let base: Integer = Integer::from(10).pow(40u32) + 7;
        let v = base.pow(5u32);
        assert_eq!(
            integer_kth_root(&v, 5).unwrap(),
            KthRoot {
                root: base.clone(),
                exact: true
            }
        );
        let below = integer_kth_root(&(v - 1), 5).unwrap();
        assert_eq!(below.root, base - 1);
        assert!(!below.exact);
    }

    #[test]
    fn rational_kth_root_examples() {
        assert_eq!(rational_kth_root(&r(27, 8), 3).unwrap(), Some(r(3, 2)));
        assert_eq!(rational_kth_root(&r(2, 1), 2).unwrap(), None);
        assert_eq!(rational_kth_root(&r(1, 1), 5).unwrap(), Some(r(1, 1)));
        assert_eq!(rational_kth_root(&r(4, 9), 2).unwrap(), Some(r(2, 3)));
        assert_eq!(rational_kth_root(&r(4, 3), 2).unwrap(), None);
        assert!(rational_kth_root(&r(0, 1), 2).is_err());
        assert!(rational_kth_root(&r(-8, 1), 3).is_err());
    }

    #[test]
    fn rational_pow_examples() {
        assert_eq!(rational_pow(&r(3, 2), 3).unwrap(), r(27, 8));
        assert_eq!(rational_pow(&r(5, 1), 0).unwrap(), r(1, 1));
        assert_eq!(rational_pow(&r(2, 3), -2).unwrap(), r(9, 4));
        assert_eq!(rational_pow(&r(-2, 3), -3).unwrap(), r(-27, 8));
        assert_eq!(rational_pow(&r(0, 1), -1), Err(Error::ZeroToNegativePower));
        assert_eq!(rational_pow(&r(0, 1), 0).unwrap(), r(1, 1));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-6/4".parse::<Rational>().unwrap(), r(-3, 2));
        assert_eq!(" 12 ".parse::<Rational>().unwrap(), r(12, 1));
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert_eq!(r(-3, 2).to_string(), "-3/2");
        assert_eq!(r(4, 2).to_string(), "2");
        assert_eq!(r(4, 2).to_fraction_string(), "2/1");
    }

    #[test]
    fn ordering_and_arithmetic() {
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(-1, 3));
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 2), Rational::zero());
        assert_eq!(r(2, 3) * r(3, 4), r(1, 2));
        assert_eq!(r(2, 3) / r(4, 3), r(1, 2));
        assert_eq!(r(1, 6) + r(1, 6), r(1, 3));
        assert_eq!(r(0, 1).recip(), Err(Error::ZeroDenominator));
    }
}
