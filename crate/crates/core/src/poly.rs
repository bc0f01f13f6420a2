//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending by degree and trimmed so that the last
//! one is nonzero; the zero polynomial is the empty vector. Euclid runs on
//! exact rationals without pseudo-remainders, so coefficients can grow on
//! large inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Serializes as its ascending coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Output of [`extended_gcd`]: `u·p + v·q = gcd`, with `gcd` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedGcd {
    pub gcd: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c·x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `x^n - a`
    pub fn x_pow_minus(n: usize, a: &Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        coeffs[0] = &coeffs[0] - a;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divide through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip().expect("leading coefficient is nonzero")),
            None => Polynomial::zero(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        eval_at_rational(self, x)
    }

    /// Ascending coefficient list, e.g. `[-3, 3, -3, 1]`.
    pub fn to_coeff_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(Rational::to_string).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Ascending coefficients as `num/den` strings.
    pub fn to_fraction_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(Rational::to_fraction_string).collect()
    }
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

fn add_ref(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let n = p.coeffs.len().max(q.coeffs.len());
    Polynomial::new((0..n).map(|i| p.coeff(i) + q.coeff(i)).collect())
}

fn sub_ref(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let n = p.coeffs.len().max(q.coeffs.len());
    Polynomial::new((0..n).map(|i| p.coeff(i) - q.coeff(i)).collect())
}

fn mul_ref(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero();
    }
    let mut out = vec![Rational::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + a * b;
        }
    }
    Polynomial::new(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $f(self, rhs)
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Division with remainder: `p = q·quotient + remainder`, `deg remainder < deg q`.
pub fn divmod(p: &Polynomial, q: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let dq = q.degree().ok_or(Error::DivisionByZeroPolynomial)?;
    let lead_inv = q.coeffs[dq].recip()?;
    let mut rem = p.coeffs.clone();
    let Some(dp) = p.degree().filter(|&dp| dp >= dq) else {
        return Ok((Polynomial::zero(), p.clone()));
    };
    let mut quot = vec![Rational::zero(); dp - dq + 1];
    for k in (0..=dp - dq).rev() {
        let c = &rem[k + dq] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, qc) in q.coeffs.iter().enumerate() {
            rem[k + j] = &rem[k + j] - &c * qc;
        }
        quot[k] = c;
    }
    rem.truncate(dq);
    Ok((Polynomial::new(quot), Polynomial::new(rem)))
}

/// Extended Euclid carrying both cofactors through every step.
///
/// The gcd is made monic at the end and the cofactors are scaled with it,
/// so `u·p + v·q = gcd` holds exactly.
pub fn extended_gcd(p: &Polynomial, q: &Polynomial) -> Result<ExtendedGcd> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
    let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (quot, rem) = divmod(&r0, &r1)?;
        let s2 = &s0 - &(&quot * &s1);
        let t2 = &t0 - &(&quot * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead_inv = r0.leading().expect("nonzero gcd").recip()?;
    Ok(ExtendedGcd {
        gcd: r0.scale(&lead_inv),
        u: s0.scale(&lead_inv),
        v: t0.scale(&lead_inv),
    })
}

/// `p(a + b·x)`, accumulated Horner-style.
pub fn compose_linear(p: &Polynomial, a: &Rational, b: &Rational) -> Polynomial {
    let inner = Polynomial::new(vec![a.clone(), b.clone()]);
    p.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
        &(&acc * &inner) + &Polynomial::constant(c.clone())
    })
}

pub fn eval_at_rational(p: &Polynomial, x: &Rational) -> Rational {
    p.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Human form, descending: `x^3 - 3x^2 + 3x - 3`. Fractional coefficients of
/// non-constant terms are parenthesized, as in `(1/2)x^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            if k == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
