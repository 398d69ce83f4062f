//! Single-variable expressions: parsing, evaluation, printing and symbolic
//! ordinary differentiation.
//!
//! Grammar, from loosest to tightest binding:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?            right associative
//! atom  := NUMBER | 'x' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'
//! FUNC  := sin | cos | tan | exp | ln
//! ```

mod diff;
mod function;
mod parser;

use std::fmt;

use crate::error::{GError, Result};

pub use diff::differentiate;
pub use function::{Builtin, Evaluation, GFunction, PositivityDomain};
pub use parser::parse;

/// Simplifying node constructors (identity rules and constant folding).
pub mod simplify {
    pub use super::diff::{apply, difference, negate, power, product, quotient, sum};
}

/// Tolerance on `|cos u|` below which `tan u` is treated as a pole.
pub const POLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            _ => return None,
        })
    }

    fn apply(self, u: f64) -> Result<f64> {
        match self {
            Func::Sin => Ok(u.sin()),
            Func::Cos => Ok(u.cos()),
            Func::Tan => {
                if u.cos().abs() <= POLE_TOL {
                    Err(GError::domain(format!("tan has a pole at {u}")))
                } else {
                    Ok(u.tan())
                }
            }
            Func::Exp => Ok(u.exp()),
            Func::Ln => {
                if u <= 0.0 {
                    Err(GError::domain(format!("ln of non-positive value {u}")))
                } else {
                    Ok(u.ln())
                }
            }
        }
    }
}

/// Immutable expression tree over the single variable `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Func(Func, Box<Expr>),
}

impl Expr {
    pub fn constant(c: f64) -> Expr {
        Expr::Const(c)
    }

    pub fn var() -> Expr {
        Expr::Var
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(u: Expr) -> Expr {
        Expr::Neg(Box::new(u))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, b: Expr) -> Expr {
        Expr::Pow(Box::new(a), Box::new(b))
    }

    pub fn func(f: Func, u: Expr) -> Expr {
        Expr::Func(f, Box::new(u))
    }

    /// True when the tree does not mention `x`.
    pub fn is_constant(&self) -> bool {
        match self {
            Expr::Const(_) => true,
            Expr::Var => false,
            Expr::Neg(u) | Expr::Func(_, u) => u.is_constant(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.is_constant() && b.is_constant(),
        }
    }

    pub fn as_const(&self) -> Option<f64> {
        match self {
            Expr::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var => 1,
            Expr::Neg(u) | Expr::Func(_, u) => 1 + u.size(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// IEEE double evaluation at `x`, innermost first.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Var => x,
            Expr::Neg(u) => -u.eval(x)?,
            Expr::Add(a, b) => a.eval(x)? + b.eval(x)?,
            Expr::Sub(a, b) => a.eval(x)? - b.eval(x)?,
            Expr::Mul(a, b) => a.eval(x)? * b.eval(x)?,
            Expr::Div(a, b) => {
                let num = a.eval(x)?;
                let den = b.eval(x)?;
                if den == 0.0 {
                    return Err(GError::domain(format!("division by zero at x = {x}")));
                }
                num / den
            }
            Expr::Pow(a, b) => {
                let base = a.eval(x)?;
                let exponent = b.eval(x)?;
                eval_pow(base, exponent, b.is_constant())?
            }
            Expr::Func(f, u) => f.apply(u.eval(x)?)?,
        };
        if v.is_nan() {
            return Err(GError::domain(format!("undefined value at x = {x}")));
        }
        if v.is_infinite() {
            return Err(GError::range(format!("overflow at x = {x}")));
        }
        Ok(v)
    }
}

fn eval_pow(base: f64, exponent: f64, constant_exponent: bool) -> Result<f64> {
    if !constant_exponent && base <= 0.0 {
        return Err(GError::domain(format!(
            "variable exponent needs a positive base, got {base}"
        )));
    }
    let integral = exponent.fract() == 0.0 && exponent.abs() < i32::MAX as f64;
    if base < 0.0 && !integral {
        return Err(GError::domain(format!(
            "negative base {base} with non-integer exponent {exponent}"
        )));
    }
    if base == 0.0 && exponent < 0.0 {
        return Err(GError::domain("zero raised to a negative power"));
    }
    Ok(if integral {
        base.powi(exponent as i32)
    } else {
        base.powf(exponent)
    })
}

/// Evaluates `text` as a constant expression (no `x`), e.g. `pi/6`.
pub fn eval_constant(text: &str) -> Result<f64> {
    let e = parse(text)?;
    if !e.is_constant() {
        return Err(GError::Parse {
            column: 1,
            message: "expected a constant expression without x".into(),
        });
    }
    e.eval(0.0)
}

// Binding strength used by the printer.
const PREC_SUM: u8 = 1;
const PREC_PRODUCT: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_POWER: u8 = 4;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Const(c) if c.is_sign_negative() => PREC_UNARY,
            Expr::Const(_) | Expr::Var | Expr::Func(..) => PREC_ATOM,
            Expr::Neg(_) => PREC_UNARY,
            Expr::Add(..) | Expr::Sub(..) => PREC_SUM,
            Expr::Mul(..) | Expr::Div(..) => PREC_PRODUCT,
            Expr::Pow(..) => PREC_POWER,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let paren = self.precedence() < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Const(c) => write!(f, "{c}")?,
            Expr::Var => f.write_str("x")?,
            Expr::Neg(u) => {
                f.write_str("-")?;
                u.write_at(f, PREC_UNARY)?;
            }
            Expr::Add(a, b) => {
                a.write_at(f, PREC_SUM)?;
                f.write_str(" + ")?;
                b.write_at(f, PREC_SUM)?;
            }
            Expr::Sub(a, b) => {
                a.write_at(f, PREC_SUM)?;
                f.write_str(" - ")?;
                b.write_at(f, PREC_PRODUCT)?;
            }
            Expr::Mul(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                f.write_str("*")?;
                b.write_at(f, PREC_UNARY)?;
            }
            Expr::Div(a, b) => {
                a.write_at(f, PREC_PRODUCT)?;
                f.write_str("/")?;
                b.write_at(f, PREC_UNARY)?;
            }
            Expr::Pow(a, b) => {
                a.write_at(f, PREC_ATOM)?;
                f.write_str("^")?;
                b.write_at(f, PREC_UNARY)?;
            }
            Expr::Func(func, u) => {
                write!(f, "{}(", func.name())?;
                u.write_at(f, 0)?;
                f.write_str(")")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
