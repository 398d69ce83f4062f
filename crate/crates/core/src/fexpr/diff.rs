//! Symbolic ordinary differentiation with a small local simplifier.
//!
//! The simplifier only applies identity and constant-folding rules; it never
//! rewrites trigonometric terms, so the output is deterministic.

use super::{Expr, Func};
use crate::error::{GError, Result};

fn fold(v: f64) -> Option<Expr> {
    v.is_finite().then_some(Expr::Const(v))
}

pub fn negate(u: Expr) -> Expr {
    match u {
        Expr::Const(c) => Expr::Const(-c),
        Expr::Neg(inner) => *inner,
        other => Expr::neg(other),
    }
}

pub fn sum(a: Expr, b: Expr) -> Expr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => fold(x + y).unwrap_or_else(|| Expr::add(a, b)),
        (Some(0.0), _) => b,
        (_, Some(0.0)) => a,
        _ => match b {
            Expr::Neg(inner) => difference(a, *inner),
            b => Expr::add(a, b),
        },
    }
}

pub fn difference(a: Expr, b: Expr) -> Expr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => fold(x - y).unwrap_or_else(|| Expr::sub(a, b)),
        (_, Some(0.0)) => a,
        (Some(0.0), _) => negate(b),
        _ if a == b => Expr::Const(0.0),
        _ => Expr::sub(a, b),
    }
}

pub fn product(a: Expr, b: Expr) -> Expr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => fold(x * y).unwrap_or_else(|| Expr::mul(a, b)),
        (Some(0.0), _) | (_, Some(0.0)) => Expr::Const(0.0),
        (Some(1.0), _) => b,
        (_, Some(1.0)) => a,
        (Some(-1.0), _) => negate(b),
        (_, Some(-1.0)) => negate(a),
        _ => match (a, b) {
            (Expr::Neg(x), Expr::Neg(y)) => product(*x, *y),
            (Expr::Neg(x), y) => negate(product(*x, y)),
            (x, Expr::Neg(y)) => negate(product(x, *y)),
            (x, y) => Expr::mul(x, y),
        },
    }
}

pub fn quotient(a: Expr, b: Expr) -> Expr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) if y != 0.0 => fold(x / y).unwrap_or_else(|| Expr::div(a, b)),
        (Some(0.0), _) => Expr::Const(0.0),
        (_, Some(1.0)) => a,
        _ if a == b => Expr::Const(1.0),
        _ => match a {
            // (u·v)/u → v and (u·v)/v → u
            Expr::Mul(u, v) if *u == b => *v,
            Expr::Mul(u, v) if *v == b => *u,
            Expr::Neg(inner) => negate(quotient(*inner, b)),
            a => Expr::div(a, b),
        },
    }
}

pub fn power(a: Expr, b: Expr) -> Expr {
    match (a.as_const(), b.as_const()) {
        (_, Some(0.0)) => Expr::Const(1.0),
        (_, Some(1.0)) => a,
        (Some(x), Some(y)) => {
            let v = x.powf(y);
            fold(v).unwrap_or_else(|| Expr::pow(a, b))
        }
        _ => Expr::pow(a, b),
    }
}

pub fn apply(f: Func, u: Expr) -> Expr {
    if let Some(c) = u.as_const() {
        if let Ok(v) = Expr::func(f, Expr::Const(c)).eval(0.0) {
            return Expr::Const(v);
        }
    }
    match (f, u) {
        (Func::Ln, Expr::Func(Func::Exp, inner)) => *inner,
        (f, u) => Expr::func(f, u),
    }
}

/// Symbolic ordinary derivative `d/dx e`.
///
/// A power with a non-constant exponent is differentiated through
/// `b^e = exp(e·ln b)`, giving `b^e·(e'·ln b + e·b'/b)`. That fails only when
/// the base is a constant that is provably `<= 0`.
pub fn differentiate(e: &Expr) -> Result<Expr> {
    Ok(match e {
        Expr::Const(_) => Expr::Const(0.0),
        Expr::Var => Expr::Const(1.0),
        Expr::Neg(u) => negate(differentiate(u)?),
        Expr::Add(a, b) => sum(differentiate(a)?, differentiate(b)?),
        Expr::Sub(a, b) => difference(differentiate(a)?, differentiate(b)?),
        Expr::Mul(a, b) => {
            let da = differentiate(a)?;
            let db = differentiate(b)?;
            sum(product(da, (**b).clone()), product((**a).clone(), db))
        }
        Expr::Div(a, b) => {
            let da = differentiate(a)?;
            let db = differentiate(b)?;
            if db.as_const() == Some(0.0) {
                quotient(da, (**b).clone())
            } else {
                quotient(
                    difference(product(da, (**b).clone()), product((**a).clone(), db)),
                    power((**b).clone(), Expr::Const(2.0)),
                )
            }
        }
        Expr::Pow(base, exponent) => {
            let base = (**base).clone();
            let exponent = (**exponent).clone();
            if exponent.is_constant() {
                // n·b^(n−1)·b'
                let reduced = match exponent.as_const() {
                    Some(n) => Expr::Const(n - 1.0),
                    None => difference(exponent.clone(), Expr::Const(1.0)),
                };
                let db = differentiate(&base)?;
                product(product(exponent, power(base, reduced)), db)
            } else {
                if base.is_constant() {
                    let b = base.eval(0.0)?;
                    if b <= 0.0 {
                        return Err(GError::domain(format!(
                            "cannot differentiate a variable power of non-positive base {b}"
                        )));
                    }
                }
                let db = differentiate(&base)?;
                let de = differentiate(&exponent)?;
                let inner = sum(
                    product(de, apply(Func::Ln, base.clone())),
                    product(exponent.clone(), quotient(db, base.clone())),
                );
                product(power(base, exponent), inner)
            }
        }
        Expr::Func(f, u) => {
            let du = differentiate(u)?;
            let u = (**u).clone();
            match f {
                Func::Sin => product(apply(Func::Cos, u), du),
                Func::Cos => negate(product(apply(Func::Sin, u), du)),
                Func::Tan => quotient(du, power(apply(Func::Cos, u), Expr::Const(2.0))),
                Func::Exp => product(apply(Func::Exp, u), du),
                Func::Ln => quotient(du, u),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn d(text: &str) -> Expr {
        differentiate(&parse(text).unwrap()).unwrap()
    }

    fn central(e: &Expr, x: f64) -> f64 {
        let h = 1e-6 * x.abs().max(1.0);
        (e.eval(x + h).unwrap() - e.eval(x - h).unwrap()) / (2.0 * h)
    }

    #[test]
    fn basic_rules() {
        assert_eq!(d("sin(x)"), parse("cos(x)").unwrap());
        assert_eq!(d("x^2"), parse("2*x").unwrap());
        assert_eq!(d("5"), Expr::Const(0.0));
        assert_eq!(d("x"), Expr::Const(1.0));
        assert_eq!(d("exp(x)"), parse("exp(x)").unwrap());
        assert_eq!(d("ln(x)"), parse("1/x").unwrap());
    }

    #[test]
    fn gaussian_like_term_matches_finite_differences() {
        // d/dx exp(-1/x^2) = exp(-1/x^2)·2/x^3
        let f = parse("exp(-1/x^2)").unwrap();
        let df = differentiate(&f).unwrap();
        for x in [0.5, 1.0, 2.0] {
            let closed = f.eval(x).unwrap() * 2.0 / x.powi(3);
            let fd = central(&f, x);
            assert!((df.eval(x).unwrap() - closed).abs() <= 1e-12 * closed.abs().max(1.0));
            assert!((df.eval(x).unwrap() - fd).abs() <= 1e-6 * fd.abs().max(1e-12));
        }
    }

    #[test]
    fn variable_exponents() {
        let f = parse("x^x").unwrap();
        let df = differentiate(&f).unwrap();
        for x in [0.5_f64, 1.3, 2.0] {
            let closed = x.powf(x) * (x.ln() + 1.0);
            assert!((df.eval(x).unwrap() - closed).abs() < 1e-12 * closed.abs().max(1.0));
        }
        let g = parse("2^x").unwrap();
        let dg = differentiate(&g).unwrap();
        assert!((dg.eval(3.0).unwrap() - 8.0 * 2f64.ln()).abs() < 1e-12);
        assert!(matches!(
            differentiate(&parse("(-2)^x").unwrap()),
            Err(GError::Domain(_))
        ));
    }

    #[test]
    fn simplifier_rules() {
        assert_eq!(sum(Expr::Const(0.0), Expr::Var), Expr::Var);
        assert_eq!(product(Expr::Const(1.0), Expr::Var), Expr::Var);
        assert_eq!(product(Expr::Var, Expr::Const(0.0)), Expr::Const(0.0));
        assert_eq!(sum(Expr::Const(2.0), Expr::Const(3.0)), Expr::Const(5.0));
        assert_eq!(negate(negate(Expr::Var)), Expr::Var);
        let u = parse("sin(x)").unwrap();
        assert_eq!(
            quotient(product(u.clone(), Expr::Var), u.clone()),
            Expr::Var
        );
        assert_eq!(apply(Func::Ln, apply(Func::Exp, Expr::Var)), Expr::Var);
    }

    #[test]
    fn trig_and_quotients_match_finite_differences() {
        for text in [
            "tan(x)",
            "cos(x)/sin(x)",
            "1/cos(x)",
            "x^(ln(x))",
            "exp(-1/x^2)/(x^2*sin(x))",
            "3*2^x",
            "ln(x)*cos(x)^3",
            "-x^3+2*x",
        ] {
            let f = parse(text).unwrap();
            let df = differentiate(&f).unwrap();
            for x in [0.4, 0.9, 1.3] {
                let fd = central(&f, x);
                let got = df.eval(x).unwrap();
                assert!(
                    (got - fd).abs() <= 1e-5 * fd.abs().max(1.0),
                    "{text} at {x}: {got} vs {fd}"
                );
            }
        }
    }
}
