//! Geometric forward and backward differences.
//!
//! With geometric step `h` the nodes are `a·h^j`. The alternating geometric
//! sum collapses to an integer combination of logs:
//!
//! ```text
//! ln Δ^n_G f(a) = Σ_k (−1)^k C(n,k) ln f(a·h^{n−k})
//! ln ∇^n_G f(a) = Σ_k (−1)^k C(n,k) ln f(a·h^{−k})
//! ```
//!
//! The sign `(−1)^k` plays the role of `(⊖e)^{k_G}`, with `(⊖e)^{0_G} = e`.

use crate::error::{GError, Result};
use crate::fexpr::GFunction;
use crate::garith::{binomial, GReal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiffTable {
    pub base: f64,
    pub step: GReal,
    pub direction: Direction,
    /// `rows[k][i]` is the `k`-th difference at the `i`-th node.
    pub rows: Vec<Vec<GReal>>,
}

fn check_inputs(a: f64, h: GReal) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(GError::precondition(format!(
            "base point must be positive, got {a}"
        )));
    }
    if h.log_value() == 0.0 {
        return Err(GError::precondition("geometric step h must differ from 1"));
    }
    Ok(())
}

fn node(a: f64, h: GReal, j: i64) -> f64 {
    a * (j as f64 * h.log_value()).exp()
}

fn log_at(f: &GFunction, x: f64) -> Result<f64> {
    let v = f.eval(x)?;
    if v <= 0.0 {
        return Err(GError::sign(format!(
            "{} is not positive at node {x} (value {v})",
            f.label()
        )));
    }
    Ok(v.ln())
}

fn closed_form(f: &GFunction, a: f64, h: GReal, n: u32, direction: Direction) -> Result<GReal> {
    check_inputs(a, h)?;
    let mut total = 0.0;
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let j = match direction {
            Direction::Forward => (n - k) as i64,
            Direction::Backward => -(k as i64),
        };
        total += sign * binomial(n, k)? as f64 * log_at(f, node(a, h, j))?;
    }
    GReal::from_log(total)
}

/// `Δ^n_G f(a)` in closed form.
pub fn forward_diff(f: &GFunction, a: f64, h: GReal, n: u32) -> Result<GReal> {
    closed_form(f, a, h, n, Direction::Forward)
}

/// `∇^n_G f(a)` in closed form.
pub fn backward_diff(f: &GFunction, a: f64, h: GReal, n: u32) -> Result<GReal> {
    closed_form(f, a, h, n, Direction::Backward)
}

/// `Δ^n = Δ^{n−1}(a ⊕ h) ⊖ Δ^{n−1}(a)`, evaluated literally.
pub fn forward_diff_recursive(f: &GFunction, a: f64, h: GReal, n: u32) -> Result<GReal> {
    check_inputs(a, h)?;
    if n == 0 {
        return GReal::from_log(log_at(f, a)?);
    }
    let shifted = forward_diff_recursive(f, a * h.value(), h, n - 1)?;
    shifted.ominus(forward_diff_recursive(f, a, h, n - 1)?)
}

/// `∇^n = ∇^{n−1}(a) ⊖ ∇^{n−1}(a ⊖ h)`, evaluated literally.
pub fn backward_diff_recursive(f: &GFunction, a: f64, h: GReal, n: u32) -> Result<GReal> {
    check_inputs(a, h)?;
    if n == 0 {
        return GReal::from_log(log_at(f, a)?);
    }
    let here = backward_diff_recursive(f, a, h, n - 1)?;
    here.ominus(backward_diff_recursive(f, a / h.value(), h, n - 1)?)
}

/// Triangular table of differences up to order `n`.
pub fn diff_table(
    f: &GFunction,
    a: f64,
    h: GReal,
    n: u32,
    direction: Direction,
) -> Result<DiffTable> {
    check_inputs(a, h)?;
    let stride = match direction {
        Direction::Forward => 1,
        Direction::Backward => -1,
    };
    let first = (0..=n as i64)
        .map(|i| log_at(f, node(a, h, stride * i)).and_then(GReal::from_log))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = vec![first];
    for _ in 0..n {
        let prev = rows.last().expect("at least one row");
        let next = prev
            .windows(2)
            .map(|w| match direction {
                Direction::Forward => w[1].ominus(w[0]),
                Direction::Backward => w[0].ominus(w[1]),
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(next);
    }
    Ok(DiffTable {
        base: a,
        step: h,
        direction,
        rows,
    })
}
