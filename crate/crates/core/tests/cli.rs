//! End-to-end checks of the `radicals` binary: exit codes, human and JSON
//! output, and independent re-verification of every emitted certificate.

use std::process::{Command, Output};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::Value;

use radicals::{BezoutCertificate, DependencyWitness, Polynomial, Rational};

fn radicals(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radicals"))
        .args(args)
        .env_remove("RADICALS_CHECK_BITS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn human(args: &[&str]) -> String {
    let o = radicals(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&radicals(&full))).unwrap()
}

/// Horner evaluation, deliberately not using the library's polynomial code.
fn eval(p: &Polynomial, x: &Rational) -> Rational {
    p.coeffs().iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
}

#[test]
fn human_output_examples() {
    assert_eq!(human(&["reduce", "root(8,6)"]), "root(2,2)");
    assert_eq!(human(&["reduce", "root(64,6)"]), "2");
    assert_eq!(human(&["reduce", "root(2,3)"]), "root(2,3)");
    assert_eq!(human(&["irreducible", "root(2,2)"]), "true: root(2,2)");
    assert_eq!(human(&["irreducible", "root(8,6)"]), "false: root(2,2)");
    assert_eq!(human(&["irreducible", "root(16,4)"]), "false: 2");
    assert_eq!(
        human(&["minpoly", "--a", "1", "--b", "1", "root(2,3)"]),
        "x^3 - 3x^2 + 3x - 3"
    );
    assert_eq!(human(&["minpoly", "--a", "0", "--b", "1", "root(2,2)"]), "x^2 - 2");
    assert_eq!(human(&["minpoly", "--a", "0", "--b", "2", "root(2,2)"]), "x^2 - 8");
    assert_eq!(
        human(&["equal", "1 + 2*root(8,6)", "1 + 2*root(2,2)"]),
        "equal: 1 + 2*root(2,2)"
    );
    assert_eq!(
        human(&["equal", "3 + sqrt(2)", "2 + sqrt(3)"]),
        "not-equal: constants differ"
    );
    assert_eq!(human(&["equal", "sqrt(2)", "sqrt(2)"]), "equal: root(2,2)");
    assert_eq!(human(&["is-root", "--poly", "x^2 - 2", "root(2,2)"]), "true: (0, 0)");
    assert_eq!(
        human(&["is-root", "--poly", "x^2 - x", "root(2,3)"]),
        "false: (0, -1, 1)"
    );
    assert_eq!(
        human(&["certify-nonroot", "--poly", "x", "root(2,3)"]),
        "certified: u = (1/2)x^2; v = -1/2"
    );
    assert_eq!(
        human(&["independent", "root(2,2)", "root(3,3)"]),
        "independent: indices differ"
    );
    assert_eq!(
        human(&["independent", "root(2,2)", "root(8,2)"]),
        "dependent: (0, 1, -1/2)"
    );
    assert_eq!(
        human(&["independent", "root(2,2)", "root(3,2)"]),
        "independent: radicand ratio is not a perfect power"
    );
    assert_eq!(
        human(&["gcd", "--p", "x^2 - 1", "--q", "x^3 - 1"]),
        "x - 1\nu = -x\nv = 1"
    );
    assert_eq!(
        human(&["gcd", "--p", "x^2 - 2", "--q", "x - 1"]),
        "1\nu = -1\nv = x + 1"
    );
    assert_eq!(human(&["gcd", "--p", "x^2 - 2", "--q", "0"]), "x^2 - 2\nu = 1\nv = 0");
    assert_eq!(
        human(&["gcd", "--p", "[-2,0,1]", "--q", "[0]"]),
        "x^2 - 2\nu = 1\nv = 0"
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| radicals(args).status.code();
    assert_eq!(code(&["reduce", "sqrt(2)"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
    // usage and syntax
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["reduce"]), Some(1));
    assert_eq!(code(&["reduce", "root(2,"]), Some(1));
    assert_eq!(code(&["reduce", "1.5"]), Some(1));
    assert_eq!(code(&["minpoly", "--a", "x", "root(2,2)"]), Some(1));
    assert_eq!(code(&["--batch", "/nonexistent/batch.txt"]), Some(1));
    assert_eq!(code(&["--batch", "/dev/null", "reduce", "sqrt(2)"]), Some(1));
    // domain
    assert_eq!(code(&["reduce", "root(0,2)"]), Some(2));
    assert_eq!(code(&["reduce", "root(2,0)"]), Some(2));
    assert_eq!(code(&["equal", "sqrt(2) * sqrt(3)", "1"]), Some(2));
    assert_eq!(code(&["equal", "sqrt(2) + sqrt(3)", "1"]), Some(2));
    assert_eq!(code(&["irreducible", "root(5,1)"]), Some(2));
    assert_eq!(code(&["minpoly", "root(4,2)"]), Some(2));
    assert_eq!(code(&["minpoly", "--b", "0", "root(2,2)"]), Some(2));
    assert_eq!(code(&["is-root", "--poly", "x", "sqrt(9)"]), Some(2));
    assert_eq!(code(&["certify-nonroot", "--poly", "0", "sqrt(2)"]), Some(2));
    assert_eq!(code(&["certify-nonroot", "--poly", "x^2", "sqrt(2)"]), Some(2));
    assert_eq!(code(&["independent", "sqrt(4)", "sqrt(2)"]), Some(2));
    assert_eq!(code(&["gcd", "--p", "0", "--q", "0"]), Some(2));
}

#[test]
fn errors_are_reported_in_the_chosen_format() {
    let o = radicals(&["reduce", "root(2,"]);
    assert!(stdout(&o).is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.starts_with("error: ") && err.contains("offset 8"), "{err}");

    let v = json(&["reduce", "sqrt(2"]);
    assert_eq!(v["verdict"], "error");
    assert_eq!(v["code"], "syntax");
    assert_eq!(v["exit_code"], 1);
    let v = json(&["reduce", "sqrt(-2)"]);
    assert_eq!(v["code"], "non-positive-radicand");
    assert_eq!(v["exit_code"], 2);
    let v = json(&["equal", "sqrt(2)*cbrt(2)", "1"]);
    assert_eq!(v["code"], "two-radicals");
    assert_eq!(v["exit_code"], 2);
}

#[test]
fn json_envelope_is_stable() {
    let args = ["--json", "certify-nonroot", "--poly", "x", "root(2,3)"];
    let first = stdout(&radicals(&args));
    assert_eq!(first, stdout(&radicals(&args)));
    assert_eq!(
        first.trim_end(),
        r#"{"verdict":"certified","detail":"u = (1/2)x^2; v = -1/2","certificate":{"kind":"bezout","p":["0/1","1/1"],"modulus":["-2/1","0/1","0/1","1/1"],"u":["0/1","0/1","1/2"],"v":["-1/2"]}}"#
    );
    let v = json(&["reduce", "root(8,6)"]);
    assert_eq!(v, serde_json::json!({"verdict": "reduced", "detail": "root(2,2)"}));
}

#[test]
fn bezout_certificates_verify_outside_the_library() {
    let cases = [
        ("x", "root(2,3)"),
        ("x - 1", "sqrt(2)"),
        ("3x^4 - (1/7)x + 2", "root(5/3,5)"),
        ("[1,1,1,1,1]", "root(12,5)"),
        ("x^2 + x + 1", "root(10,3)"),
    ];
    for (poly, radical) in cases {
        let v = json(&["certify-nonroot", "--poly", poly, radical]);
        assert_eq!(v["verdict"], "certified", "{poly} at {radical}: {v}");
        let cert: BezoutCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
        assert_eq!(v["certificate"]["kind"], "bezout");
        // both sides have degree below `points`, so agreeing at that many
        // distinct points proves the polynomial identity
        let points = cert.u.coeffs().len() + cert.p.coeffs().len() + cert.modulus.coeffs().len() + 2;
        for k in 0..points as i64 {
            let x = Rational::new(k - 3, 2);
            let value = &(&eval(&cert.u, &x) * &eval(&cert.p, &x)) + &(&eval(&cert.v, &x) * &eval(&cert.modulus, &x));
            assert!(value.is_one(), "{poly} at {radical}: u·p + v·m = {value} at x = {x}");
        }
    }
}

#[test]
fn gcd_certificates_verify_outside_the_library() {
    let v = json(&["gcd", "--p", "x^4 - 1", "--q", "x^3 + x^2 - x - 1"]);
    assert_eq!(v["detail"], "x^2 - 1");
    let field = |name: &str| -> Polynomial { serde_json::from_value(v["certificate"][name].clone()).unwrap() };
    let (p, q, d, u, w) = (field("p"), field("q"), field("d"), field("u"), field("v"));
    for k in -6i64..=6 {
        let x = Rational::from(k);
        assert_eq!(
            &(&eval(&u, &x) * &eval(&p, &x)) + &(&eval(&w, &x) * &eval(&q, &x)),
            eval(&d, &x)
        );
    }
    // d vanishes at ±1, the common roots
    assert!(eval(&d, &Rational::one()).is_zero() && eval(&d, &-Rational::one()).is_zero());
}

/// `|a + b·A^{1/m} + c·B^{1/n}|·2^bits`, by direct integer roots.
fn scaled_combination(w: &DependencyWitness, r1: (i64, i64, u32), r2: (i64, i64, u32), bits: usize) -> BigInt {
    let root = |(p, d, n): (i64, i64, u32)| (BigInt::from(p) << (bits * n as usize)) / d;
    let term = |c: &Rational, r: (i64, i64, u32)| root(r).nth_root(r.2) * c.numer() / c.denom();
    let constant = (BigInt::one() << bits) * w.a.numer() / w.a.denom();
    (constant + term(&w.b, r1) + term(&w.c, r2)).abs()
}

#[test]
fn dependency_witnesses_vanish_and_independent_pairs_do_not() {
    let bits = 360;
    let tiny = |v: &BigInt| v * BigInt::from(10).pow(50) < (BigInt::one() << bits);
    let dependent = [
        ((2, 1, 2), (8, 1, 2)),
        ((12, 1, 4), (3, 4, 4)),
        ((2, 1, 3), (54, 1, 3)),
        ((5, 1, 2), (1, 5, 2)),
        ((8, 1, 6), (18, 1, 2)),
    ];
    for (r1, r2) in dependent {
        let fmt = |(p, d, n): (i64, i64, u32)| format!("root({p}/{d},{n})");
        let v = json(&["independent", &fmt(r1), &fmt(r2)]);
        assert_eq!(v["verdict"], "dependent", "{v}");
        let w: DependencyWitness = serde_json::from_value(v["certificate"].clone()).unwrap();
        assert!(tiny(&scaled_combination(&w, r1, r2, bits)), "{w} does not vanish");
    }

    // For independent pairs, small rational combinations stay far from zero.
    let independent = [((2, 1, 2), (3, 1, 2)), ((2, 1, 2), (3, 1, 3)), ((5, 2, 3), (7, 1, 3))];
    for (r1, r2) in independent {
        let fmt = |(p, d, n): (i64, i64, u32)| format!("root({p}/{d},{n})");
        assert_eq!(json(&["independent", &fmt(r1), &fmt(r2)])["verdict"], "independent");
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                for c in -3i64..=3 {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let w = DependencyWitness {
                        a: a.into(),
                        b: b.into(),
                        c: c.into(),
                    };
                    assert!(
                        !tiny(&scaled_combination(&w, r1, r2, bits)),
                        "{w} vanishes for {r1:?}, {r2:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn batch_mode_keeps_order_and_reports_worst_exit_code() {
    let dir = std::env::temp_dir().join(format!("radicals-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("batch.txt");
    std::fs::write(&path, "reduce 'root(8,6)'\n\n# comment\nirreducible 'root(2,2)'\n").unwrap();
    let o = radicals(&["--batch", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"verdict\":\"reduced\",\"detail\":\"root(2,2)\"}\n{\"verdict\":\"true\",\"detail\":\"root(2,2)\"}\n"
    );
    std::fs::write(&path, "reduce 'root(0,2)'\nreduce 'x'\nreduce sqrt(2)\n").unwrap();
    let o = radicals(&["--batch", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn numeric_check_precision_is_configurable() {
    let o = Command::new(env!("CARGO_BIN_EXE_radicals"))
        .args(["equal", "sqrt(8)", "2*sqrt(2)"])
        .env("RADICALS_CHECK_BITS", "64")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "equal: 2*root(2,2)\n");
}
