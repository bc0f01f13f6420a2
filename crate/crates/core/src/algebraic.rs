//! Arithmetic in `Q(θ)` for an irreducible radical `θ = A^{1/n}` and the
//! decision procedures built on it.
//!
//! An irreducible `θ` is not a root of any nonzero rational polynomial of
//! degree below `n`, so `1, θ, …, θ^{n-1}` are linearly independent and a
//! [`PowerBasisElement`] is zero exactly when all of its coordinates are.
//! Every decider here is exact; nothing consults floating point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rational_kth_root, rational_pow, Rational};
use crate::poly::{compose_linear, extended_gcd, Polynomial};
use crate::radical::{reduce, Radical, ReducedRadical};

fn require_field_base(theta: &ReducedRadical) -> Result<()> {
    if theta.index() < 2 {
        return Err(Error::IndexTooSmall {
            index: theta.index(),
            min: 2,
        });
    }
    Ok(())
}

/// Reduce `r` and insist that nothing changed and the result is irrational.
pub fn irreducible_base(r: &Radical) -> Result<ReducedRadical> {
    if r.index() < 2 {
        return Err(Error::IndexTooSmall {
            index: r.index(),
            min: 2,
        });
    }
    let reduced = reduce(r);
    if reduced.as_radical() != r {
        return Err(Error::ReducibleBase {
            radicand: r.radicand().clone(),
            index: r.index(),
        });
    }
    Ok(reduced)
}

/// `c_0 + c_1·θ + … + c_{n-1}·θ^{n-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerBasisElement {
    base: ReducedRadical,
    coords: Vec<Rational>,
}

impl PowerBasisElement {
    pub fn new(base: ReducedRadical, coords: Vec<Rational>) -> Result<Self> {
        require_field_base(&base)?;
        let expected = base.index() as usize;
        if coords.len() != expected {
            return Err(Error::CoordinateCount {
                expected,
                got: coords.len(),
            });
        }
        Ok(PowerBasisElement { base, coords })
    }

    pub fn zero(base: &ReducedRadical) -> Result<Self> {
        require_field_base(base)?;
        Ok(PowerBasisElement {
            base: base.clone(),
            coords: vec![Rational::zero(); base.index() as usize],
        })
    }

    pub fn from_rational(base: &ReducedRadical, c: Rational) -> Result<Self> {
        let mut e = Self::zero(base)?;
        e.coords[0] = c;
        Ok(e)
    }

    /// θ itself.
    pub fn theta(base: &ReducedRadical) -> Result<Self> {
        let mut e = Self::zero(base)?;
        e.coords[1] = Rational::one();
        Ok(e)
    }

    pub fn base(&self) -> &ReducedRadical {
        &self.base
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerBasisElement {
            base: self.base.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    fn check_same_base(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }
}

/// `(c_0, c_1, …, c_{n-1})`
impl fmt::Display for PowerBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Coordinates of `p(θ)`, folding `x^{qn+r}` onto `A^q·θ^r`.
pub fn pb_from_poly(p: &Polynomial, theta: &ReducedRadical) -> Result<PowerBasisElement> {
    let mut out = PowerBasisElement::zero(theta)?;
    let n = theta.index() as usize;
    let mut a_pow = Rational::one();
    for (block, chunk) in p.coeffs().chunks(n).enumerate() {
        if block > 0 {
            a_pow = &a_pow * theta.radicand();
        }
        for (r, c) in chunk.iter().enumerate() {
            if !c.is_zero() {
                out.coords[r] = &out.coords[r] + c * &a_pow;
            }
        }
    }
    Ok(out)
}

pub fn pb_add(e1: &PowerBasisElement, e2: &PowerBasisElement) -> Result<PowerBasisElement> {
    e1.check_same_base(e2)?;
    Ok(PowerBasisElement {
        base: e1.base.clone(),
        coords: e1.coords.iter().zip(&e2.coords).map(|(a, b)| a + b).collect(),
    })
}

pub fn pb_sub(e1: &PowerBasisElement, e2: &PowerBasisElement) -> Result<PowerBasisElement> {
    e1.check_same_base(e2)?;
    Ok(PowerBasisElement {
        base: e1.base.clone(),
        coords: e1.coords.iter().zip(&e2.coords).map(|(a, b)| a - b).collect(),
    })
}

/// Product with `θ^n = A` applied to every exponent `>= n`.
pub fn pb_mul(e1: &PowerBasisElement, e2: &PowerBasisElement) -> Result<PowerBasisElement> {
    e1.check_same_base(e2)?;
    let n = e1.coords.len();
    let a = e1.base.radicand();
    let mut coords = vec![Rational::zero(); n];
    for (i, x) in e1.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in e2.coords.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let prod = x * y;
            let k = i + j;
            if k < n {
                coords[k] = &coords[k] + prod;
            } else {
                coords[k - n] = &coords[k - n] + prod * a;
            }
        }
    }
    Ok(PowerBasisElement {
        base: e1.base.clone(),
        coords,
    })
}

/// Whether `p(θ) = 0`. For nonzero `p` of degree below the index this is
/// always false.
pub fn is_root(p: &Polynomial, theta: &ReducedRadical) -> Result<bool> {
    Ok(pb_from_poly(p, theta)?.is_zero())
}

/// Polynomials `u`, `v` with `u·p + v·(x^n - A) = 1`, refuting `p(θ) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutCertificate {
    pub p: Polynomial,
    pub modulus: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl BezoutCertificate {
    /// Recomputes `u·p + v·modulus` from scratch.
    pub fn verify(&self) -> bool {
        &(&self.u * &self.p) + &(&self.v * &self.modulus) == Polynomial::one()
    }
}

pub fn coprimality_certificate(p: &Polynomial, theta: &ReducedRadical) -> Result<BezoutCertificate> {
    require_field_base(theta)?;
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree >= theta.index() as usize {
        return Err(Error::DegreeTooHigh {
            degree,
            index: theta.index(),
        });
    }
    let modulus = Polynomial::x_pow_minus(theta.index() as usize, theta.radicand());
    let g = extended_gcd(p, &modulus)?;
    if g.gcd != Polynomial::one() {
        return Err(Error::InvariantViolation(format!(
            "gcd({p}, {modulus}) = {} for an irreducible modulus",
            g.gcd
        )));
    }
    let cert = BezoutCertificate {
        p: p.clone(),
        modulus,
        u: g.u,
        v: g.v,
    };
    if !cert.verify() {
        return Err(Error::InvariantViolation("Bezout identity failed".into()));
    }
    Ok(cert)
}

/// Whether `x^n - A` is irreducible over the rationals, which holds exactly
/// when `A^{1/n}` is an irreducible radical.
pub fn xn_minus_a_irreducible(a: &Rational, n: u32) -> Result<bool> {
    Ok(xn_minus_a_factor(a, n)?.is_none())
}

/// For reducible `A^{1/n} = B^{1/m}` with `m < n`, the proper factor
/// `x^m - B` of `x^n - A`.
pub fn xn_minus_a_factor(a: &Rational, n: u32) -> Result<Option<Polynomial>> {
    if n < 2 {
        return Err(Error::IndexTooSmall { index: n, min: 2 });
    }
    let reduced = reduce(&Radical::new(a.clone(), n)?);
    if reduced.index() == n {
        return Ok(None);
    }
    Ok(Some(Polynomial::x_pow_minus(
        reduced.index() as usize,
        reduced.radicand(),
    )))
}

/// The monic minimal polynomial of `a + b·θ`, of degree `n`.
///
/// Built as `(x^n - A)` composed with `x ↦ (x - a)/b` and scaled by `b^n`,
/// i.e. `(x - a)^n - b^n·A`.
pub fn minimal_polynomial_affine(a: &Rational, b: &Rational, theta: &ReducedRadical) -> Result<Polynomial> {
    require_field_base(theta)?;
    if b.is_zero() {
        return Err(Error::ZeroRadicalCoefficient);
    }
    let n = theta.index();
    let binv = b.recip()?;
    let base = Polynomial::x_pow_minus(n as usize, theta.radicand());
    let composed = compose_linear(&base, &(-a * &binv), &binv);
    let out = composed.scale(&rational_pow(b, i64::from(n))?);
    debug_assert!(out.is_monic() && out.degree() == Some(n as usize));
    Ok(out)
}

/// Like [`minimal_polynomial_affine`], but a rational value (`b = 0` or a
/// rational-valued radical) yields `x - value`.
pub fn minimal_polynomial_affine_allow_degenerate(
    a: &Rational,
    b: &Rational,
    theta: &ReducedRadical,
) -> Result<Polynomial> {
    let value = match theta.rational_value() {
        Some(v) => a + &(b * v),
        None if b.is_zero() => a.clone(),
        None => return minimal_polynomial_affine(a, b, theta),
    };
    Ok(Polynomial::new(vec![-value, Rational::one()]))
}

/// `constant + coef·θ` with the radical part absent when it is rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineForm {
    pub constant: Rational,
    pub term: Option<(Rational, ReducedRadical)>,
}

impl AffineForm {
    /// Reduce the radical and fold rational values into the constant.
    pub fn normalized(a: &Rational, b: &Rational, r: &Radical) -> Self {
        let reduced = reduce(r);
        if b.is_zero() {
            return AffineForm {
                constant: a.clone(),
                term: None,
            };
        }
        match reduced.rational_value() {
            Some(v) => AffineForm {
                constant: a + &(b * v),
                term: None,
            },
            None => AffineForm {
                constant: a.clone(),
                term: Some((b.clone(), reduced)),
            },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotEqualReason {
    ConstantsDiffer,
    IndicesDiffer,
    RadicalPartsDiffer,
    RationalVsIrrational,
}

impl fmt::Display for NotEqualReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotEqualReason::ConstantsDiffer => "constants differ",
            NotEqualReason::IndicesDiffer => "indices differ",
            NotEqualReason::RadicalPartsDiffer => "radical parts differ",
            NotEqualReason::RationalVsIrrational => "rational vs irrational",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equality {
    Equal(AffineForm),
    NotEqual(NotEqualReason),
}

impl Equality {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equality::Equal(_))
    }
}

/// Ordering used to pick one representative among equal radical terms:
/// integer radicands first, then the smaller one.
pub(crate) fn radicand_key(r: &Rational) -> (num_bigint::BigInt, num_bigint::BigInt) {
    (r.denom().clone(), r.numer().clone())
}

/// Decide `a + b·r1 = d + f·r2` exactly.
///
/// Both radicals are reduced first and rational ones are folded into the
/// constants. With two irrational parts, equality forces equal indices,
/// equal constants and `b·θ1 = f·θ2`; the radicals are positive reals, so
/// the last condition is `sign(b) = sign(f)` together with
/// `b^n·A1 = f^n·A2`.
pub fn decide_affine_equality(
    a: &Rational,
    b: &Rational,
    r1: &Radical,
    d: &Rational,
    f: &Rational,
    r2: &Radical,
) -> Equality {
    let lhs = AffineForm::normalized(a, b, r1);
    let rhs = AffineForm::normalized(d, f, r2);
    match (&lhs.term, &rhs.term) {
        (None, None) => {
            if lhs.constant == rhs.constant {
                Equality::Equal(lhs)
            } else {
                Equality::NotEqual(NotEqualReason::ConstantsDiffer)
            }
        }
        (Some(_), None) | (None, Some(_)) => Equality::NotEqual(NotEqualReason::RationalVsIrrational),
        (Some((c1, t1)), Some((c2, t2))) => {
            if t1.index() != t2.index() {
                return Equality::NotEqual(NotEqualReason::IndicesDiffer);
            }
            if lhs.constant != rhs.constant {
                return Equality::NotEqual(NotEqualReason::ConstantsDiffer);
            }
            let n = i64::from(t1.index());
            let left = rational_pow(c1, n).expect("nonzero") * t1.radicand();
            let right = rational_pow(c2, n).expect("nonzero") * t2.radicand();
            if c1.signum() != c2.signum() || left != right {
                return Equality::NotEqual(NotEqualReason::RadicalPartsDiffer);
            }
            if radicand_key(t2.radicand()) < radicand_key(t1.radicand()) {
                Equality::Equal(rhs)
            } else {
                Equality::Equal(lhs)
            }
        }
    }
}

/// Rationals `a, b, c`, not all zero, with `a + b·θ1 + c·θ2 = 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DependencyWitness {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// `(a, b, c)`
impl fmt::Display for DependencyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl DependencyWitness {
    pub fn verify(&self, r1: &Radical, r2: &Radical) -> Result<bool> {
        if self.a.is_zero() && self.b.is_zero() && self.c.is_zero() {
            return Ok(false);
        }
        decide_combination_zero(&self.a, &self.b, &self.c, r1, r2)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndependenceReason {
    IndicesDiffer,
    RatioNotPerfectPower,
}

impl fmt::Display for IndependenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndependenceReason::IndicesDiffer => "indices differ",
            IndependenceReason::RatioNotPerfectPower => "radicand ratio is not a perfect power",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Independence {
    Independent(IndependenceReason),
    Dependent(DependencyWitness),
}

fn irrational_reduced(r: &Radical) -> Result<ReducedRadical> {
    let reduced = reduce(r);
    if reduced.is_rational() {
        return Err(Error::RationalValuedRadical {
            radicand: r.radicand().clone(),
            index: r.index(),
        });
    }
    Ok(reduced)
}

/// Linear independence of `1, r1, r2` over the rationals.
///
/// Independent when the reduced indices differ, or agree at `n` with
/// `(A1/A2)^{1/n}` irrational. Otherwise `r1 = ρ·r2` for rational `ρ` and the
/// witness is `(0, 1, -ρ)`.
pub fn decide_triple_independence(r1: &Radical, r2: &Radical) -> Result<Independence> {
    let t1 = irrational_reduced(r1)?;
    let t2 = irrational_reduced(r2)?;
    if t1.index() != t2.index() {
        return Ok(Independence::Independent(IndependenceReason::IndicesDiffer));
    }
    let ratio = t1.radicand().checked_div(t2.radicand())?;
    let Some(rho) = rational_kth_root(&ratio, t1.index())? else {
        return Ok(Independence::Independent(IndependenceReason::RatioNotPerfectPower));
    };
    let witness = DependencyWitness {
        a: Rational::zero(),
        b: Rational::one(),
        c: -rho,
    };
    if !witness.verify(r1, r2)? {
        return Err(Error::InvariantViolation(format!("witness {witness} does not vanish")));
    }
    Ok(Independence::Dependent(witness))
}

/// Decide `a + b·r1 + c·r2 = 0` for irrational `r1`, `r2`.
pub fn decide_combination_zero(a: &Rational, b: &Rational, c: &Rational, r1: &Radical, r2: &Radical) -> Result<bool> {
    irrational_reduced(r1)?;
    irrational_reduced(r2)?;
    Ok(match (b.is_zero(), c.is_zero()) {
        (true, true) => a.is_zero(),
        // a rational plus a nonzero multiple of an irrational is never zero
        (true, false) | (false, true) => false,
        (false, false) => decide_affine_equality(a, b, r1, &Rational::zero(), &-c, r2).is_equal(),
    })
}
