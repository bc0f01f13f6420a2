//! Radicals `A^{1/n}` of positive rationals and their reduced forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{rational_kth_root, rational_pow, Rational};

/// `radicand^{1/index}` with `radicand > 0` and `index >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Radical {
    radicand: Rational,
    index: u32,
}

impl Radical {
    pub fn new(radicand: Rational, index: u32) -> Result<Self> {
        if !radicand.is_positive() {
            return Err(Error::NonPositiveRadicand(radicand));
        }
        if index == 0 {
            return Err(Error::ZeroRootIndex);
        }
        Ok(Radical { radicand, index })
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn reduce(&self) -> ReducedRadical {
        reduce(self)
    }
}

/// Always `root(A,n)`, including for index 1.
impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root({},{})", self.radicand, self.index)
    }
}

/// A radical with no smaller equal index: either `index == 1` (a rational
/// value) or an irreducible radical with `index >= 2`.
///
/// Only [`reduce`] produces these, so the invariant holds by construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedRadical(Radical);

impl ReducedRadical {
    pub fn radicand(&self) -> &Rational {
        &self.0.radicand
    }

    pub fn index(&self) -> u32 {
        self.0.index
    }

    pub fn is_rational(&self) -> bool {
        self.0.index == 1
    }

    /// The rational value when `index == 1`.
    pub fn rational_value(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.0.radicand)
    }

    pub fn as_radical(&self) -> &Radical {
        &self.0
    }
}

/// The radicand alone for index 1, `root(A,n)` otherwise.
impl fmt::Display for ReducedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.0.radicand)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Positive divisors of `n` in decreasing order, by trial division up to `√n`.
pub fn divisors_desc(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u32 = 1;
    while u64::from(d) * u64::from(d) <= u64::from(n) {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.extend(small.into_iter().rev());
    large
}

/// Canonical reduced form of `A^{1/n}`.
///
/// Scanning divisors `t` of `n` from the largest down, the first `t` with a
/// rational `t`-th root `B` of `A` gives the minimal index `m = n/t`, and
/// then `A^{1/n} = B^{1/m}` with `B^{n/m} = A`. Any index admitting a
/// rational radicand is a multiple of the minimal one, so restricting to
/// divisors loses nothing.
pub fn reduce(r: &Radical) -> ReducedRadical {
    for t in divisors_desc(r.index) {
        let root = rational_kth_root(&r.radicand, t).expect("radicand is positive and t >= 1");
        if let Some(b) = root {
            return ReducedRadical(Radical {
                radicand: b,
                index: r.index / t,
            });
        }
    }
    unreachable!("t = 1 always succeeds")
}

/// Whether no smaller index represents the same number.
pub fn is_irreducible(r: &Radical) -> Result<bool> {
    if r.index < 2 {
        return Err(Error::IndexTooSmall { index: r.index, min: 2 });
    }
    Ok(reduce(r).index() == r.index)
}

/// Whether `(A^k)^{1/n}` is irrational for every `k` in `2..n`.
///
/// Kept separate from [`is_irreducible`] so the two characterizations can be
/// checked against each other.
pub fn prop21_powers_irrational(r: &Radical) -> Result<bool> {
    if r.index < 3 {
        return Err(Error::IndexTooSmall { index: r.index, min: 3 });
    }
    for k in 2..r.index {
        let power = rational_pow(&r.radicand, i64::from(k))?;
        if rational_kth_root(&power, r.index)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Numeric equality of two radicals, decided on their reduced forms.
pub fn radical_equal(r1: &Radical, r2: &Radical) -> bool {
    reduce(r1) == reduce(r2)
}


#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn radical() -> impl Strategy<Value = Radical> {
        (1i64..=300, 1i64..=60, 1u32..=24).prop_map(|(p, q, n)| Radical::new(Rational::new(p, q), n).unwrap())
    }

    /// Minimal `m` in `1..=n` with `A^{m/n}` rational, scanning every `m`.
    fn brute_force_min_index(r: &Radical) -> u32 {
        (1..=r.index())
            .find(|&m| {
                let power = rational_pow(r.radicand(), i64::from(m)).unwrap();
                rational_kth_root(&power, r.index()).unwrap().is_some()
            })
            .unwrap()
    }

    proptest! {
        #[test]
        fn reduce_idempotent(r in radical()) {
            let once = reduce(&r);
            prop_assert_eq!(reduce(once.as_radical()), once);
        }

        #[test]
        fn reduce_preserves_value(r in radical()) {
            let red = reduce(&r);
            prop_assert_eq!(r.index() % red.index(), 0);
            let back = rational_pow(red.radicand(), i64::from(r.index() / red.index())).unwrap();
            prop_assert_eq!(&back, r.radicand());
        }

        #[test]
        fn reduce_minimal_over_all_indices(r in radical()) {
            prop_assert_eq!(reduce(&r).index(), brute_force_min_index(&r));
        }

        #[test]
        fn equality_is_symmetric(a in radical(), b in radical()) {
            prop_assert_eq!(radical_equal(&a, &b), radical_equal(&b, &a));
            prop_assert!(radical_equal(&a, &a));
        }
    }
}
