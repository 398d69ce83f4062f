use std::fmt;
use std::sync::Arc;

use super::{parse, Expr};
use crate::error::{GError, Result};

/// Where a function is claimed to keep a constant sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PositivityDomain {
    /// Positive on the open interval `(lo, hi)`.
    Interval {
        lo: f64,
        hi: f64,
    },
    /// Keeps one sign (possibly negative) wherever it is evaluated.
    SignConsistent,
    Unclaimed,
}

impl PositivityDomain {
    pub fn contains(&self, x: f64) -> bool {
        match *self {
            PositivityDomain::Interval { lo, hi } => x > lo && x < hi,
            _ => true,
        }
    }
}

/// Functions that are not expressible in the expression grammar.
#[derive(Clone)]
pub enum Builtin {
    /// `|x|^G`: `x` for `x >= 1`, `1/x` on `(0, 1)`.
    GeometricAbs,
    Closure(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::GeometricAbs => f.write_str("GeometricAbs"),
            Builtin::Closure(_) => f.write_str("Closure(..)"),
        }
    }
}

#[derive(Debug, Clone)]
enum Body {
    Expr(Expr),
    Builtin(Builtin),
}

/// A real function handle on a positive interval.
#[derive(Debug, Clone)]
pub struct GFunction {
    label: String,
    body: Body,
    domain: PositivityDomain,
}

/// A function value plus whether `x` fell outside the claimed domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub outside_domain: bool,
}

impl GFunction {
    pub fn from_expr(expr: Expr) -> Self {
        GFunction {
            label: expr.to_string(),
            body: Body::Expr(expr),
            domain: PositivityDomain::Unclaimed,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let expr = parse(text)?;
        Ok(GFunction {
            label: text.trim().to_string(),
            body: Body::Expr(expr),
            domain: PositivityDomain::Unclaimed,
        })
    }

    pub fn geometric_abs() -> Self {
        GFunction {
            label: "|x|^G".into(),
            body: Body::Builtin(Builtin::GeometricAbs),
            domain: PositivityDomain::Interval {
                lo: 0.0,
                hi: f64::INFINITY,
            },
        }
    }

    pub fn from_fn(
        label: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        GFunction {
            label: label.into(),
            body: Body::Builtin(Builtin::Closure(Arc::new(f))),
            domain: PositivityDomain::Unclaimed,
        }
    }

    pub fn with_domain(mut self, domain: PositivityDomain) -> Self {
        self.domain = domain;
        self
    }

    pub fn positive_on(self, lo: f64, hi: f64) -> Self {
        self.with_domain(PositivityDomain::Interval { lo, hi })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn domain(&self) -> PositivityDomain {
        self.domain
    }

    /// The symbolic body, when there is one.
    pub fn expr(&self) -> Option<&Expr> {
        match &self.body {
            Body::Expr(e) => Some(e),
            Body::Builtin(_) => None,
        }
    }

    /// The symbolic body, or [`GError::NotAnalytic`].
    pub fn require_expr(&self) -> Result<&Expr> {
        self.expr()
            .ok_or_else(|| GError::NotAnalytic(self.label.clone()))
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match &self.body {
            Body::Expr(e) => e.eval(x),
            Body::Builtin(Builtin::GeometricAbs) => {
                if x <= 0.0 {
                    Err(GError::domain(format!("|x|^G undefined at {x}")))
                } else if x >= 1.0 {
                    Ok(x)
                } else {
                    Ok(1.0 / x)
                }
            }
            Body::Builtin(Builtin::Closure(f)) => {
                let v = f(x);
                if v.is_nan() {
                    Err(GError::domain(format!("{} undefined at {x}", self.label)))
                } else if v.is_infinite() {
                    Err(GError::range(format!("{} overflows at {x}", self.label)))
                } else {
                    Ok(v)
                }
            }
        }
    }

    /// Evaluates and reports whether `x` lies outside the claimed domain.
    pub fn eval_flagged(&self, x: f64) -> Result<Evaluation> {
        Ok(Evaluation {
            value: self.eval(x)?,
            outside_domain: !self.domain.contains(x),
        })
    }
}
