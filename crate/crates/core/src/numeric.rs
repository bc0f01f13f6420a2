//! Fixed-point evaluation used only as a secondary cross-check.
//!
//! Values are integers scaled by `2^bits`. Roots come from num-bigint's
//! Newton `nth_root`, not from the bisection in [`crate::exact`], so the two
//! routes stay independent. None of the deciders depend on this module.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::Rational;
use crate::radical::Radical;

/// Environment variable overriding [`DEFAULT_BITS`].
pub const BITS_ENV: &str = "RADICALS_CHECK_BITS";

pub const DEFAULT_BITS: u32 = 256;

/// Fractional bits from `RADICALS_CHECK_BITS`, falling back to 256.
pub fn configured_bits() -> u32 {
    std::env::var(BITS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b: &u32| (16..=1 << 16).contains(&b))
        .unwrap_or(DEFAULT_BITS)
}

/// Number of fractional bits needed for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.33
    digits * 333 / 100 + 8
}

/// `⌊x·2^bits⌋`-style approximation; error is a few units in the last place
/// times the size of any coefficients involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approx {
    scaled: BigInt,
    bits: u32,
}

impl Approx {
    pub fn zero(bits: u32) -> Self {
        Approx {
            scaled: BigInt::default(),
            bits,
        }
    }

    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        Approx {
            scaled: (q.numer() << bits) / q.denom(),
            bits,
        }
    }

    pub fn from_radical(r: &Radical, bits: u32) -> Self {
        let n = r.index();
        let scaled_radicand = (r.radicand().numer() << (u64::from(bits) * u64::from(n))) / r.radicand().denom();
        Approx {
            scaled: scaled_radicand.nth_root(n),
            bits,
        }
    }

    /// `coef · radical`
    pub fn term(coef: &Rational, r: &Radical, bits: u32) -> Self {
        let root = Self::from_radical(r, bits);
        Approx {
            scaled: root.scaled * coef.numer() / coef.denom(),
            bits,
        }
    }

    pub fn add(&self, other: &Approx) -> Approx {
        assert_eq!(self.bits, other.bits);
        Approx {
            scaled: &self.scaled + &other.scaled,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Approx) -> Approx {
        assert_eq!(self.bits, other.bits);
        Approx {
            scaled: &self.scaled - &other.scaled,
            bits: self.bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `|x| < 10^-exp10`
    pub fn abs_below_pow10(&self, exp10: u32) -> bool {
        self.scaled.abs() * BigInt::from(10).pow(exp10) < BigInt::one() << self.bits
    }

    /// `|x| < 2^-exp2`
    pub fn abs_below_pow2(&self, exp2: u32) -> bool {
        exp2 <= self.bits && self.scaled.abs() < BigInt::one() << (self.bits - exp2)
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.bits.saturating_sub(60);
        let top: BigInt = &self.scaled >> shift;
        let top: f64 = num_traits::ToPrimitive::to_f64(&top).unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }
}

/// `constant + Σ coef·radical`
pub fn eval_affine<'a>(
    constant: &Rational,
    terms: impl IntoIterator<Item = (&'a Rational, &'a Radical)>,
    bits: u32,
) -> Approx {
    terms
        .into_iter()
        .fold(Approx::from_rational(constant, bits), |acc, (c, r)| {
            acc.add(&Approx::term(c, r, bits))
        })
}
