//! Exact decision procedures for radicals `A^{1/n}` of positive rationals.
//!
//! The crate reduces radicals to their minimal index, decides whether a
//! rational polynomial vanishes at an irreducible radical (with Bezout
//! certificates when it does not), builds minimal polynomials of `a + b·θ`,
//! and decides equality and linear independence of small radical
//! expressions. All of it runs on exact rationals.

pub mod algebraic;
pub mod cli;
pub mod error;
pub mod exact;
pub mod numeric;
pub mod parser;
pub mod poly;
pub mod radical;

pub use algebraic::{
    coprimality_certificate, decide_affine_equality, decide_combination_zero, decide_triple_independence, is_root,
    minimal_polynomial_affine, pb_add, pb_from_poly, pb_mul, xn_minus_a_irreducible, BezoutCertificate,
    DependencyWitness, Equality, Independence, PowerBasisElement,
};
pub use error::{Error, Result};
pub use exact::{integer_kth_root, normalize, rational_kth_root, rational_pow, Integer, Rational};
pub use parser::{parse, parse_polynomial, parse_radical, print, RadicalSum};
pub use poly::{compose_linear, divmod, eval_at_rational, extended_gcd, Polynomial};
pub use radical::{is_irreducible, prop21_powers_irrational, radical_equal, reduce, Radical, ReducedRadical};
