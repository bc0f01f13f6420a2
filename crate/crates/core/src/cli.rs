//! Command-line front end.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 domain or hypothesis
//! violation, 3 internal invariant failure. Every certificate is re-verified
//! before it is printed.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebraic::{
    coprimality_certificate, decide_affine_equality, decide_triple_independence, minimal_polynomial_affine,
    minimal_polynomial_affine_allow_degenerate, pb_from_poly, BezoutCertificate, DependencyWitness, Equality,
    Independence,
};
use crate::error::Error;
use crate::exact::Rational;
use crate::numeric;
use crate::parser::{parse, parse_polynomial, parse_radical, ParseError, ParseErrorKind, RadicalSum};
use crate::poly::{compose_linear, divmod, extended_gcd, Polynomial};
use crate::radical::{is_irreducible, reduce, Radical, ReducedRadical};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "radicals",
    version,
    about = "Exact decisions about radicals of positive rationals"
)]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Run one command per line of FILE, printing one JSON object per line.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Reduce a radical to its minimal index.
    Reduce { radical: String },
    /// Whether no smaller index represents the radical.
    Irreducible { radical: String },
    /// Monic minimal polynomial of a + b*radical.
    Minpoly {
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        b: String,
        /// Answer x - value when a + b*radical is rational.
        #[arg(long)]
        allow_degenerate: bool,
        radical: String,
    },
    /// Decide equality of two expressions with at most one radical term each.
    Equal { left: String, right: String },
    /// Whether the radical is a root of the polynomial.
    IsRoot {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        radical: String,
    },
    /// Bezout certificate that the radical is not a root of the polynomial.
    CertifyNonroot {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        radical: String,
    },
    /// Linear independence of 1 and two radicals over the rationals.
    Independent { first: String, second: String },
    /// Monic gcd with Bezout cofactors.
    Gcd {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Reduced,
    True,
    False,
    Minpoly,
    Equal,
    NotEqual,
    Certified,
    Independent,
    Dependent,
    Gcd,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Reduced => "reduced",
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Minpoly => "minpoly",
            Verdict::Equal => "equal",
            Verdict::NotEqual => "not-equal",
            Verdict::Certified => "certified",
            Verdict::Independent => "independent",
            Verdict::Dependent => "dependent",
            Verdict::Gcd => "gcd",
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdCertificate {
    pub p: Polynomial,
    pub q: Polynomial,
    pub d: Polynomial,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl GcdCertificate {
    pub fn verify(&self) -> bool {
        let divides = |x: &Polynomial| divmod(x, &self.d).is_ok_and(|(_, r)| r.is_zero());
        self.d.is_monic()
            && &(&self.u * &self.p) + &(&self.v * &self.q) == self.d
            && divides(&self.p)
            && divides(&self.q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Bezout(BezoutCertificate),
    Dependency(DependencyWitness),
    Gcd(GcdCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandResult {
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

impl CommandResult {
    fn new(verdict: Verdict, detail: impl Into<String>) -> Self {
        CommandResult {
            verdict,
            detail: detail.into(),
            certificate: None,
        }
    }

    fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_human(&self) -> String {
        match (self.verdict, &self.certificate) {
            (Verdict::Reduced | Verdict::Minpoly, _) => self.detail.clone(),
            (Verdict::Gcd, Some(Certificate::Gcd(g))) => format!("{}\nu = {}\nv = {}", self.detail, g.u, g.v),
            _ if self.detail.is_empty() => self.verdict.as_str().to_string(),
            _ => format!("{}: {}", self.verdict.as_str(), self.detail),
        }
    }
}

/// A failed command, carrying its exit code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommandError {
    pub verdict: &'static str,
    pub code: &'static str,
    pub detail: String,
    pub exit_code: i32,
}

impl CommandError {
    pub fn usage(detail: impl Into<String>) -> Self {
        CommandError {
            verdict: "error",
            code: "usage",
            detail: detail.into(),
            exit_code: EXIT_USAGE,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let (code, exit_code) = match &e {
            Error::Parse(p) => match p.kind {
                ParseErrorKind::Syntax(_) => (p.kind.code(), EXIT_USAGE),
                _ => (p.kind.code(), EXIT_DOMAIN),
            },
            Error::InvariantViolation(_) => ("internal", EXIT_INTERNAL),
            _ => ("domain", EXIT_DOMAIN),
        };
        CommandError {
            verdict: "error",
            code,
            detail: e.to_string(),
            exit_code,
        }
    }
}

fn rational_arg(text: &str) -> Result<Rational, Error> {
    // Reuse the expression grammar so offsets and messages stay uniform.
    let sum = parse(text)?;
    if !sum.is_rational() {
        return Err(Error::Parse(ParseError {
            kind: ParseErrorKind::Syntax("expected a rational number".into()),
            offset: 1,
        }));
    }
    Ok(sum.constant().clone())
}

fn field_base(text: &str) -> Result<ReducedRadical, Error> {
    let r = parse_radical(text)?;
    let reduced = reduce(&r);
    if reduced.is_rational() {
        return Err(Error::RationalValuedRadical {
            radicand: r.radicand().clone(),
            index: r.index(),
        });
    }
    Ok(reduced)
}

fn internal(msg: impl Into<String>) -> Error {
    Error::InvariantViolation(msg.into())
}

pub fn cmd_reduce(radical: &str) -> Result<CommandResult, Error> {
    let r = parse_radical(radical)?;
    Ok(CommandResult::new(Verdict::Reduced, reduce(&r).to_string()))
}

pub fn cmd_irreducible(radical: &str) -> Result<CommandResult, Error> {
    let r = parse_radical(radical)?;
    let irreducible = is_irreducible(&r)?;
    Ok(CommandResult::new(
        Verdict::from_bool(irreducible),
        reduce(&r).to_string(),
    ))
}

pub fn cmd_minpoly(a: &str, b: &str, radical: &str, allow_degenerate: bool) -> Result<CommandResult, Error> {
    let a = rational_arg(a)?;
    let b = rational_arg(b)?;
    let theta = reduce(&parse_radical(radical)?);
    let poly = if allow_degenerate {
        minimal_polynomial_affine_allow_degenerate(&a, &b, &theta)?
    } else if theta.is_rational() {
        return Err(Error::RationalValuedRadical {
            radicand: theta.radicand().clone(),
            index: theta.index(),
        });
    } else {
        minimal_polynomial_affine(&a, &b, &theta)?
    };
    // a + bθ must be a root: p(a + b·x) vanishes at θ.
    let vanishes = match theta.rational_value() {
        Some(v) => poly.eval(&(&a + &(&b * v))).is_zero(),
        None if b.is_zero() => poly.eval(&a).is_zero(),
        None => pb_from_poly(&compose_linear(&poly, &a, &b), &theta)?.is_zero(),
    };
    if !poly.is_monic() || !vanishes {
        return Err(internal(format!("{poly} does not vanish at the given value")));
    }
    Ok(CommandResult::new(Verdict::Minpoly, poly.to_string()))
}

pub fn cmd_equal(left: &str, right: &str) -> Result<CommandResult, Error> {
    let lhs = parse(left)?;
    let rhs = parse(right)?;
    let l = lhs.as_affine()?;
    let r = rhs.as_affine()?;
    let one = Radical::new(Rational::one(), 1).expect("valid");
    let split = |f: &crate::algebraic::AffineForm| match &f.term {
        Some((c, t)) => (f.constant.clone(), c.clone(), t.as_radical().clone()),
        None => (f.constant.clone(), Rational::zero(), one.clone()),
    };
    let (a, b, r1) = split(&l);
    let (d, f, r2) = split(&r);
    let bits = numeric::configured_bits();
    let diff = lhs.approx(bits).sub(&rhs.approx(bits));
    match decide_affine_equality(&a, &b, &r1, &d, &f, &r2) {
        Equality::Equal(form) => {
            if !diff.abs_below_pow2(bits / 2) {
                return Err(internal(format!(
                    "exact equality contradicted by numeric difference {:e}",
                    diff.to_f64()
                )));
            }
            Ok(CommandResult::new(Verdict::Equal, RadicalSum::from(&form).to_string()))
        }
        Equality::NotEqual(reason) => Ok(CommandResult::new(Verdict::NotEqual, reason.to_string())),
    }
}

pub fn cmd_is_root(poly: &str, radical: &str) -> Result<CommandResult, Error> {
    let p = parse_polynomial(poly)?;
    let theta = field_base(radical)?;
    let e = pb_from_poly(&p, &theta)?;
    Ok(CommandResult::new(Verdict::from_bool(e.is_zero()), e.to_string()))
}

pub fn cmd_certify_nonroot(poly: &str, radical: &str) -> Result<CommandResult, Error> {
    let p = parse_polynomial(poly)?;
    let theta = field_base(radical)?;
    let cert = coprimality_certificate(&p, &theta)?;
    if !cert.verify() {
        return Err(internal("Bezout certificate failed verification"));
    }
    let detail = format!("u = {}; v = {}", cert.u, cert.v);
    Ok(CommandResult::new(Verdict::Certified, detail).with_certificate(Certificate::Bezout(cert)))
}

pub fn cmd_independent(first: &str, second: &str) -> Result<CommandResult, Error> {
    let r1 = parse_radical(first)?;
    let r2 = parse_radical(second)?;
    match decide_triple_independence(&r1, &r2)? {
        Independence::Independent(reason) => Ok(CommandResult::new(Verdict::Independent, reason.to_string())),
        Independence::Dependent(w) => {
            if !w.verify(&r1, &r2)? {
                return Err(internal(format!("dependency witness {w} failed verification")));
            }
            Ok(CommandResult::new(Verdict::Dependent, w.to_string()).with_certificate(Certificate::Dependency(w)))
        }
    }
}

pub fn cmd_gcd(p: &str, q: &str) -> Result<CommandResult, Error> {
    let p = parse_polynomial(p)?;
    let q = parse_polynomial(q)?;
    let g = extended_gcd(&p, &q)?;
    let cert = GcdCertificate {
        p,
        q,
        d: g.gcd,
        u: g.u,
        v: g.v,
    };
    if !cert.verify() {
        return Err(internal("gcd cofactors failed verification"));
    }
    Ok(CommandResult::new(Verdict::Gcd, cert.d.to_string()).with_certificate(Certificate::Gcd(cert)))
}

pub fn run(command: &Command) -> Result<CommandResult, CommandError> {
    let res = match command {
        Command::Reduce { radical } => cmd_reduce(radical),
        Command::Irreducible { radical } => cmd_irreducible(radical),
        Command::Minpoly {
            a,
            b,
            allow_degenerate,
            radical,
        } => cmd_minpoly(a, b, radical, *allow_degenerate),
        Command::Equal { left, right } => cmd_equal(left, right),
        Command::IsRoot { poly, radical } => cmd_is_root(poly, radical),
        Command::CertifyNonroot { poly, radical } => cmd_certify_nonroot(poly, radical),
        Command::Independent { first, second } => cmd_independent(first, second),
        Command::Gcd { p, q } => cmd_gcd(p, q),
    };
    res.map_err(CommandError::from)
}

/// Everything the binary writes, plus its exit code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn batch_line(line: &str) -> Result<CommandResult, CommandError> {
    let words = shlex::split(line).ok_or_else(|| CommandError::usage("unbalanced quotes"))?;
    let cli = Cli::try_parse_from(std::iter::once("radicals".to_string()).chain(words))
        .map_err(|e| CommandError::usage(e.kind().to_string()))?;
    match (&cli.command, &cli.batch) {
        (Some(cmd), None) => run(cmd),
        _ => Err(CommandError::usage("each batch line must hold exactly one subcommand")),
    }
}

/// Run every non-blank, non-`#` line; output order follows input order.
pub fn run_batch(text: &str) -> Outcome {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<(String, i32)> = lines
        .par_iter()
        .map(|line| match batch_line(line) {
            Ok(r) => (r.to_json(), EXIT_OK),
            Err(e) => (e.to_json(), e.exit_code),
        })
        .collect();
    let mut out = Outcome::default();
    for (json, code) in results {
        out.stdout.push_str(&json);
        out.stdout.push('\n');
        out.code = out.code.max(code);
    }
    out
}

pub fn execute(cli: &Cli) -> Outcome {
    if cli.batch.is_some() && cli.command.is_some() {
        return Outcome {
            stderr: "error: --batch cannot be combined with a subcommand\n".into(),
            code: EXIT_USAGE,
            ..Outcome::default()
        };
    }
    if let Some(path) = &cli.batch {
        return match std::fs::read_to_string(path) {
            Ok(text) => run_batch(&text),
            Err(e) => Outcome {
                stderr: format!("error: cannot read {}: {e}\n", path.display()),
                code: EXIT_USAGE,
                ..Outcome::default()
            },
        };
    }
    let Some(command) = &cli.command else {
        return Outcome {
            stderr: "error: a subcommand or --batch FILE is required\n".into(),
            code: EXIT_USAGE,
            ..Outcome::default()
        };
    };
    match (run(command), cli.json) {
        (Ok(r), true) => Outcome {
            stdout: r.to_json() + "\n",
            ..Outcome::default()
        },
        (Ok(r), false) => Outcome {
            stdout: r.to_human() + "\n",
            ..Outcome::default()
        },
        (Err(e), true) => Outcome {
            stdout: e.to_json() + "\n",
            code: e.exit_code,
            ..Outcome::default()
        },
        (Err(e), false) => Outcome {
            stderr: format!("error: {}\n", e.detail),
            code: e.exit_code,
            ..Outcome::default()
        },
    }
}
