//! Surface syntax for radical expressions and polynomials.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := ('+' | '-')? factor ('*' factor)*
//! factor   := rational | radical | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! radical  := 'root(' rational ',' positive-integer ')' | 'sqrt(' rational ')' | 'cbrt(' rational ')'
//! ```
//!
//! Whitespace is insignificant. A term may hold at most one radical factor.
//! Parsing normalizes: radicals are reduced, rational-valued ones are folded
//! into the constant, and terms whose radicals are rational multiples of one
//! another are merged.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebraic::{radicand_key, AffineForm};
use crate::error::{Error, Result};
use crate::exact::{normalize, rational_kth_root, Rational};
use crate::numeric::{self, Approx};
use crate::poly::Polynomial;
use crate::radical::{reduce, Radical, ReducedRadical};

/// Largest polynomial exponent accepted in text form.
pub const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonPositiveRadicand,
    ZeroIndex,
    IndexTooLarge,
    TwoRadicals,
}

impl ParseErrorKind {
    /// Stable identifier used in JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::Syntax(_) => "syntax",
            ParseErrorKind::NonPositiveRadicand => "non-positive-radicand",
            ParseErrorKind::ZeroIndex => "zero-index",
            ParseErrorKind::IndexTooLarge => "index-too-large",
            ParseErrorKind::TwoRadicals => "two-radicals",
        }
    }
}

/// A parse failure at a 1-based character offset.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{} at offset {offset}", describe(kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Syntax(msg) => format!("syntax error: {msg}"),
        ParseErrorKind::NonPositiveRadicand => "radicand must be positive".into(),
        ParseErrorKind::ZeroIndex => "root index must be at least 1".into(),
        ParseErrorKind::IndexTooLarge => "root index must be below 2^32".into(),
        ParseErrorKind::TwoRadicals => "product of two radicals".into(),
    }
}

/// `constant + Σ coef·radical`, normalized.
///
/// Terms carry irrational reduced radicals with nonzero coefficients, sorted
/// by (index, radicand); no two terms are rational multiples of each other.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RadicalSum {
    constant: Rational,
    terms: Vec<(Rational, ReducedRadical)>,
}

impl RadicalSum {
    pub fn rational(c: Rational) -> Self {
        RadicalSum {
            constant: c,
            terms: Vec::new(),
        }
    }

    /// Normalize an arbitrary list of terms.
    ///
    /// Two irreducible radicals of the same index are rational multiples of
    /// each other iff the ratio of radicands is a perfect power; such terms
    /// are merged onto the radicand with the smallest `(denominator,
    /// numerator)`, which makes the result independent of input order.
    pub fn normalize(constant: Rational, raw: impl IntoIterator<Item = (Rational, Radical)>) -> Self {
        struct Class {
            index: u32,
            radicand: Rational,
            coef: Rational,
        }
        let mut constant = constant;
        let mut classes: Vec<Class> = Vec::new();
        for (coef, r) in raw {
            if coef.is_zero() {
                continue;
            }
            let red = reduce(&r);
            if let Some(v) = red.rational_value() {
                constant = constant + &coef * v;
                continue;
            }
            let n = red.index();
            let a = red.radicand();
            let existing = classes.iter_mut().filter(|c| c.index == n).find_map(|c| {
                let ratio = a.checked_div(&c.radicand).ok()?;
                let rho = rational_kth_root(&ratio, n).ok()??;
                Some((c, rho))
            });
            match existing {
                // coef·A^{1/n} = coef·ρ·C^{1/n}
                Some((class, rho)) => {
                    let new_coef = &class.coef + &(&coef * &rho);
                    if radicand_key(a) < radicand_key(&class.radicand) {
                        // switch representative: C^{1/n} = A^{1/n}/ρ
                        class.coef = new_coef / rho;
                        class.radicand = a.clone();
                    } else {
                        class.coef = new_coef;
                    }
                }
                None => classes.push(Class {
                    index: n,
                    radicand: a.clone(),
                    coef,
                }),
            }
        }
        let mut terms: Vec<(Rational, ReducedRadical)> = classes
            .into_iter()
            .filter(|c| !c.coef.is_zero())
            .map(|c| {
                let r = Radical::new(c.radicand, c.index).expect("positive radicand");
                (c.coef, reduce(&r))
            })
            .collect();
        terms.sort_by(|(_, x), (_, y)| x.index().cmp(&y.index()).then_with(|| x.radicand().cmp(y.radicand())));
        RadicalSum { constant, terms }
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn terms(&self) -> &[(Rational, ReducedRadical)] {
        &self.terms
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sum as `constant + coef·θ`, failing if it has two or more terms.
    pub fn as_affine(&self) -> Result<AffineForm> {
        match self.terms.as_slice() {
            [] => Ok(AffineForm {
                constant: self.constant.clone(),
                term: None,
            }),
            [t] => Ok(AffineForm {
                constant: self.constant.clone(),
                term: Some(t.clone()),
            }),
            more => Err(Error::TooManyTerms(more.len())),
        }
    }

    pub fn approx(&self, bits: u32) -> Approx {
        numeric::eval_affine(
            &self.constant,
            self.terms.iter().map(|(c, r)| (c, r.as_radical())),
            bits,
        )
    }

    fn add(mut self, other: RadicalSum) -> RadicalSum {
        self.constant = self.constant + other.constant;
        self.terms.extend(other.terms);
        self
    }

    fn scale(self, c: &Rational) -> RadicalSum {
        RadicalSum {
            constant: self.constant * c,
            terms: self.terms.into_iter().map(|(k, r)| (k * c, r)).collect(),
        }
    }

    fn renormalize(self) -> RadicalSum {
        let RadicalSum { constant, terms } = self;
        RadicalSum::normalize(constant, terms.into_iter().map(|(c, r)| (c, r.as_radical().clone())))
    }
}

impl From<&AffineForm> for RadicalSum {
    fn from(f: &AffineForm) -> Self {
        RadicalSum::normalize(
            f.constant.clone(),
            f.term.iter().map(|(c, r)| (c.clone(), r.as_radical().clone())),
        )
    }
}

/// Canonical text: constant first (when nonzero or alone), coefficient 1
/// elided, radicals always as `root(A,n)`.
impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (coef, rad) in &self.terms {
            let mag = coef.abs();
            match (first, coef.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", rad.as_radical())?;
        }
        Ok(())
    }
}

pub fn print(s: &RadicalSum) -> String {
    s.to_string()
}

/// Parse and normalize a radical expression.
pub fn parse(text: &str) -> Result<RadicalSum, ParseError> {
    let mut p = Parser::new(text);
    let sum = p.expr()?;
    p.expect_end()?;
    Ok(sum.renormalize())
}

/// Parse one radical literal (`root`, `sqrt`, `cbrt`) or a positive rational,
/// without reducing it.
pub fn parse_radical(text: &str) -> Result<Radical, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let start = p.offset();
    let r = if p.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
        p.radical()?
    } else {
        let q = p.rational(true)?;
        if !q.is_positive() {
            return Err(p.error_at(start, ParseErrorKind::NonPositiveRadicand));
        }
        Radical::new(q, 1).expect("checked positive")
    };
    p.expect_end()?;
    Ok(r)
}

/// Parse `x^3 - 2x + 1/2` style text or an ascending list `[1/2, -2, 0, 1]`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let poly = if p.peek() == Some('[') {
        p.coeff_list()?
    } else {
        p.poly_text()?
    };
    p.expect_end()?;
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.pos + 1
    }

    fn error_at(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, offset }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.error_at(self.offset(), ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    /// Skip whitespace and consume `c` if it is next.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.syntax(format!("expected {wanted}, found '{c}'")),
            None => self.syntax(format!("expected {wanted}, found end of input")),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a number"));
        }
        if self.peek() == Some('.') {
            return Err(self.syntax("decimal literals are not supported"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// `integer ('/' positive-integer)?`, optionally signed.
    fn rational(&mut self, signed: bool) -> Result<Rational, ParseError> {
        let negative = signed && {
            self.skip_ws();
            if self.eat('-') {
                true
            } else {
                self.eat('+');
                false
            }
        };
        let num = self.digits()?;
        let den = if self.eat('/') {
            let at = self.offset();
            let d = self.digits()?;
            if d.is_zero() {
                return Err(self.error_at(at, ParseErrorKind::Syntax("zero denominator".into())));
            }
            d
        } else {
            BigInt::from(1)
        };
        let num = if negative { -num } else { num };
        Ok(normalize(num, den).expect("nonzero denominator"))
    }

    fn expr(&mut self) -> Result<RadicalSum, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.add(self.term()?.scale(&-Rational::one()));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RadicalSum, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            let at = self.offset();
            if !self.eat('*') {
                break;
            }
            self.skip_ws();
            let at_factor = self.offset().max(at);
            let rhs = self.factor()?;
            acc = match (acc.is_rational(), rhs.is_rational()) {
                (true, _) => rhs.scale(&acc.constant),
                (false, true) => acc.scale(&rhs.constant),
                (false, false) => return Err(self.error_at(at_factor, ParseErrorKind::TwoRadicals)),
            };
        }
        Ok(if negative { acc.scale(&-Rational::one()) } else { acc })
    }

    fn factor(&mut self) -> Result<RadicalSum, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner.renormalize())
            }
            Some(c) if c.is_ascii_digit() => Ok(RadicalSum::rational(self.rational(false)?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let r = self.radical()?;
                Ok(RadicalSum::normalize(Rational::zero(), [(Rational::one(), r)]))
            }
            _ => Err(self.unexpected("a number, radical or '('")),
        }
    }

    fn radical(&mut self) -> Result<Radical, ParseError> {
        self.skip_ws();
        let name_at = self.offset();
        let name = self.ident();
        let fixed_index = match name.as_str() {
            "root" => None,
            "sqrt" => Some(2),
            "cbrt" => Some(3),
            _ => return Err(self.error_at(name_at, ParseErrorKind::Syntax(format!("unknown function '{name}'")))),
        };
        self.expect('(')?;
        self.skip_ws();
        let radicand_at = self.offset();
        let radicand = self.rational(true)?;
        if !radicand.is_positive() {
            return Err(self.error_at(radicand_at, ParseErrorKind::NonPositiveRadicand));
        }
        let index = match fixed_index {
            Some(n) => n,
            None => {
                self.expect(',')?;
                self.skip_ws();
                let at = self.offset();
                let n = self.digits()?;
                if n.is_zero() {
                    return Err(self.error_at(at, ParseErrorKind::ZeroIndex));
                }
                n.to_u32()
                    .ok_or_else(|| self.error_at(at, ParseErrorKind::IndexTooLarge))?
            }
        };
        self.expect(')')?;
        Ok(Radical::new(radicand, index).expect("validated above"))
    }

    fn coeff_list(&mut self) -> Result<Polynomial, ParseError> {
        self.expect('[')?;
        let mut coeffs = Vec::new();
        if !self.eat(']') {
            loop {
                coeffs.push(self.rational(true)?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(Polynomial::new(coeffs))
    }

    fn poly_text(&mut self) -> Result<Polynomial, ParseError> {
        let mut coeffs: Vec<Rational> = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -Rational::one()
            } else if self.eat('+') || first {
                Rational::one()
            } else {
                break;
            };
            first = false;
            let (c, k) = self.poly_term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = &coeffs[k] + &(sign * c);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// `coef? '*'? ('x' ('^' integer)?)?` with at least one part present.
    fn poly_term(&mut self) -> Result<(Rational, usize), ParseError> {
        self.skip_ws();
        let coef = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.rational(false)?),
            Some('(') => {
                self.pos += 1;
                let c = self.rational(true)?;
                self.expect(')')?;
                Some(c)
            }
            _ => None,
        };
        if coef.is_some() {
            self.eat('*');
        }
        self.skip_ws();
        if self.peek() != Some('x') {
            return match coef {
                Some(c) => Ok((c, 0)),
                None => Err(self.unexpected("a coefficient or 'x'")),
            };
        }
        self.pos += 1;
        let mut k = 1;
        if self.eat('^') {
            self.skip_ws();
            let at = self.offset();
            k = self
                .digits()?
                .to_usize()
                .filter(|&k| k <= MAX_EXPONENT)
                .ok_or_else(|| self.error_at(at, ParseErrorKind::Syntax("exponent too large".into())))?;
        }
        Ok((coef.unwrap_or_else(Rational::one), k))
    }
}
