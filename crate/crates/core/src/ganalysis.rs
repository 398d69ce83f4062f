//! G-limits, G-continuity and G-derivatives, plus witness finders for the
//! intermediate-value and mean-value theorems of the G-calculus.
//!
//! Two independent routes compute the G-derivative:
//!
//! * the numeric limit `lim_{u→0} [f(x·e^u) / f(x)]^{1/u}`, probed on the
//!   geometric schedule `u = ±10^-k, k = 2..=8` with Richardson extrapolation;
//! * the analytic bridge `f^G(x) = exp(x·f'(x)/f(x))`, using the symbolic
//!   derivative from [`crate::fexpr`].
//!
//! Side naming follows the direction of approach: the *left* value comes from
//! probes `x·e^{-u}` below `x`, the *right* value from probes above. Some
//! texts label the `h → 1+` branch as the left-hand derivative; here that
//! branch is reported as `right`.

use crate::error::{GError, Result};
use crate::fexpr::{differentiate, simplify, Expr, GFunction};
use crate::garith::{rel_log_error, GReal};

/// Probe exponents: `u = 10^-k` for `k` in this range.
pub const PROBE_EXPONENTS: std::ops::RangeInclusive<i32> = 2..=8;
/// Consecutive Richardson extrapolants must agree to this relative tolerance.
pub const RICHARDSON_TOL: f64 = 1e-7;
/// Fallback acceptance when no consecutive pair meets [`RICHARDSON_TOL`].
pub const RICHARDSON_FALLBACK_TOL: f64 = 1e-3;
/// Left and right numeric G-derivatives must agree to this (log domain).
pub const SIDE_AGREEMENT_TOL: f64 = 1e-6;
/// Ratio tolerance for the continuity checker.
pub const CONTINUITY_TOL: f64 = 1e-6;
/// Required residual `|ln f^G(c) − ln k|` of a witness.
pub const WITNESS_TOL: f64 = 1e-10;
pub const MAX_BISECTION_STEPS: usize = 200;
/// Threshold on `ln f^G` for monotonicity classification.
pub const MONOTONE_TAU: f64 = 1e-9;
/// Highest order supported by the nested numeric route.
pub const MAX_NUMERIC_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    NumericLimit,
    AnalyticBridge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sidedness {
    TwoSided(GReal),
    /// Left and right limits exist but differ, so there is no two-sided value.
    OneSided {
        left: GReal,
        right: GReal,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GDerivativeResult {
    pub outcome: Sidedness,
    pub method: Method,
    pub order: usize,
}

impl GDerivativeResult {
    pub fn value(&self) -> Option<GReal> {
        match self.outcome {
            Sidedness::TwoSided(v) => Some(v),
            Sidedness::OneSided { .. } => None,
        }
    }

    pub fn one_sided(&self) -> Option<(GReal, GReal)> {
        match self.outcome {
            Sidedness::TwoSided(_) => None,
            Sidedness::OneSided { left, right } => Some((left, right)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Stationary,
}

fn scale(v: f64) -> f64 {
    v.abs().max(1.0)
}

/// Two-term Richardson extrapolation of a sequence converging linearly in
/// the step, where each step is a tenth of the previous one.
fn richardson(seq: &[f64]) -> Result<f64> {
    let extrapolants: Vec<f64> = seq.windows(2).map(|w| (10.0 * w[1] - w[0]) / 9.0).collect();
    let mut best: Option<(f64, f64)> = None;
    for w in extrapolants.windows(2) {
        let diff = (w[1] - w[0]).abs() / scale(w[1]);
        if diff <= RICHARDSON_TOL {
            return Ok(w[1]);
        }
        if best.is_none_or(|(d, _)| diff < d) {
            best = Some((diff, w[1]));
        }
    }
    match best {
        Some((d, v)) if d <= RICHARDSON_FALLBACK_TOL => Ok(v),
        Some((d, _)) => Err(GError::NoLimit(format!(
            "probe schedule did not settle (spread {d:.3e})"
        ))),
        None => Err(GError::NoLimit("probe schedule too short".into())),
    }
}

fn probe_steps() -> impl Iterator<Item = f64> {
    PROBE_EXPONENTS.map(|k| 10f64.powi(-k))
}

fn require_positive_point(x: f64, what: &str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(GError::precondition(format!(
            "{what} must be a positive real, got {x}"
        )))
    }
}

/// Numeric `_G lim_{x→a} f(x)`, approaching `a` geometrically from both sides.
pub fn g_limit_estimate(f: &GFunction, a: f64) -> Result<f64> {
    require_positive_point(a, "limit point")?;
    let mut sides = [Vec::new(), Vec::new()];
    for (side, sign) in [-1.0, 1.0].into_iter().enumerate() {
        for u in probe_steps() {
            sides[side].push(f.eval(a * (sign * u).exp())?);
        }
    }
    let all = sides.iter().flatten();
    let positive = all.clone().all(|v| *v > 0.0);
    let negative = all.clone().all(|v| *v < 0.0);
    if !positive && !negative {
        return Err(GError::sign(format!(
            "{} changes sign or vanishes near {a}",
            f.label()
        )));
    }
    let left = richardson(&sides[0])?;
    let right = richardson(&sides[1])?;
    if (left - right).abs() > SIDE_AGREEMENT_TOL * scale(right) {
        return Err(GError::NoLimit(format!(
            "left limit {left} differs from right limit {right} at {a}"
        )));
    }
    Ok(0.5 * (left + right))
}

/// True iff `f(x)/f(a) → 1` as `x → a` geometrically from both sides.
pub fn g_continuity_check(f: &GFunction, a: f64) -> Result<bool> {
    require_positive_point(a, "continuity point")?;
    let fa = f.eval(a)?;
    if fa == 0.0 {
        return Err(GError::domain(format!("{} vanishes at {a}", f.label())));
    }
    for sign in [-1.0, 1.0] {
        let ratios = probe_steps()
            .map(|u| f.eval(a * (sign * u).exp()).map(|v| v / fa))
            .collect::<Result<Vec<_>>>()?;
        let limit = match richardson(&ratios) {
            Ok(v) => v,
            Err(GError::NoLimit(_)) => return Ok(false),
            Err(e) => return Err(e),
        };
        if (limit - 1.0).abs() > CONTINUITY_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One-sided numeric log G-derivatives `(left, right)` of an evaluator.
fn numeric_log_sides(eval: &dyn Fn(f64) -> Result<f64>, x: f64) -> Result<(f64, f64)> {
    let fx = eval(x)?;
    if fx == 0.0 {
        return Err(GError::domain(format!("function vanishes at {x}")));
    }
    let mut out = [0.0; 2];
    for (slot, sign) in [-1.0, 1.0].into_iter().enumerate() {
        let mut quotients = Vec::new();
        for u in probe_steps() {
            let step = sign * u;
            let ratio = eval(x * step.exp())? / fx;
            if ratio <= 0.0 {
                return Err(GError::sign(format!(
                    "f({x}) and f({}) differ in sign",
                    x * step.exp()
                )));
            }
            quotients.push(ratio.ln() / step);
        }
        out[slot] = richardson(&quotients)?;
    }
    Ok((out[0], out[1]))
}

fn numeric_outcome(eval: &dyn Fn(f64) -> Result<f64>, x: f64) -> Result<Sidedness> {
    let (left, right) = numeric_log_sides(eval, x)?;
    if rel_log_error(left, right) <= SIDE_AGREEMENT_TOL {
        Ok(Sidedness::TwoSided(GReal::from_log(0.5 * (left + right))?))
    } else {
        Ok(Sidedness::OneSided {
            left: GReal::from_log(left)?,
            right: GReal::from_log(right)?,
        })
    }
}

/// Numeric first G-derivative via the geometric difference quotient.
pub fn g_derivative_numeric(f: &GFunction, x: f64) -> Result<GDerivativeResult> {
    require_positive_point(x, "evaluation point")?;
    let outcome = numeric_outcome(&|y| f.eval(y), x)?;
    Ok(GDerivativeResult {
        outcome,
        method: Method::NumericLimit,
        order: 1,
    })
}

/// `f^G(x) = exp(x·f'(x)/f(x))` with a symbolic `f'`.
pub fn g_derivative_analytic(f: &Expr, x: f64) -> Result<GReal> {
    require_positive_point(x, "evaluation point")?;
    let fx = f.eval(x)?;
    if fx == 0.0 {
        return Err(GError::domain(format!("f vanishes at {x}")));
    }
    let df = differentiate(f)?;
    GReal::from_log(x * df.eval(x)? / fx)
}

/// Symbolic logs of the iterated G-derivatives: element `k − 1` is
/// `ln f^{[k]}` for `k = 1..=n`.
///
/// `ln f^{[1]} = x·f'/f`, and since `f^{[k+1]} = exp(x·(ln f^{[k]})')`,
/// each further order is `x` times the derivative of the previous log.
pub fn g_derivative_log_chain(f: &Expr, n: usize) -> Result<Vec<Expr>> {
    let mut chain = Vec::with_capacity(n);
    if n == 0 {
        return Ok(chain);
    }
    let df = differentiate(f).map_err(|e| at_order(1, e))?;
    let mut current = simplify::product(Expr::Var, simplify::quotient(df, f.clone()));
    chain.push(current.clone());
    for k in 2..=n {
        let d = differentiate(&current).map_err(|e| at_order(k, e))?;
        current = simplify::product(Expr::Var, d);
        chain.push(current.clone());
    }
    Ok(chain)
}

fn at_order(order: usize, e: GError) -> GError {
    GError::AtOrder {
        order,
        source: Box::new(e),
    }
}

/// `f^{[n]}(x)` on the analytic path.
pub fn g_derivative_n_analytic(f: &Expr, x: f64, n: usize) -> Result<GReal> {
    if n == 0 {
        return GReal::from_value(f.eval(x)?);
    }
    require_positive_point(x, "evaluation point")?;
    let fx = f.eval(x)?;
    if fx == 0.0 {
        return Err(GError::domain(format!("f vanishes at {x}")));
    }
    let chain = g_derivative_log_chain(f, n)?;
    let log = chain[n - 1].eval(x).map_err(|e| at_order(n, e))?;
    GReal::from_log(log).map_err(|e| at_order(n, e))
}

/// `f^{[n]}(x)` by nesting the numeric limit; `n <= 4`.
pub fn g_derivative_n_numeric(f: &GFunction, x: f64, n: usize) -> Result<GReal> {
    if n > MAX_NUMERIC_ORDER {
        return Err(GError::UnsupportedOrder {
            order: n,
            reason: format!("numeric route supports orders up to {MAX_NUMERIC_ORDER}"),
        });
    }
    require_positive_point(x, "evaluation point")?;
    if n == 0 {
        return GReal::from_value(f.eval(x)?);
    }
    fn two_sided_log(eval: &dyn Fn(f64) -> Result<f64>, y: f64) -> Result<f64> {
        match numeric_outcome(eval, y)? {
            Sidedness::TwoSided(v) => Ok(v.log_value()),
            Sidedness::OneSided { left, right } => Err(GError::NoLimit(format!(
                "one-sided G-derivatives differ at {y}: left {left}, right {right}"
            ))),
        }
    }
    fn nested(f: &GFunction, level: usize, y: f64) -> Result<f64> {
        if level == 0 {
            f.eval(y)
        } else {
            let inner = |z: f64| nested(f, level - 1, z);
            two_sided_log(&inner, y).map(f64::exp)
        }
    }
    let inner = |z: f64| nested(f, n - 1, z);
    let log = two_sided_log(&inner, x).map_err(|e| at_order(n, e))?;
    GReal::from_log(log)
}

/// `f^{[n]}(x)`: analytic when `f` has a symbolic body, numeric otherwise.
pub fn g_derivative_n(f: &GFunction, x: f64, n: usize) -> Result<GReal> {
    match f.expr() {
        Some(e) => g_derivative_n_analytic(e, x, n),
        None => g_derivative_n_numeric(f, x, n),
    }
}

/// Builds an evaluator of `ln f^G`, preferring the analytic path.
pub fn log_g_derivative_fn(f: &GFunction) -> Result<Box<dyn Fn(f64) -> Result<f64> + '_>> {
    match f.expr() {
        Some(e) => {
            let chain = g_derivative_log_chain(e, 1)?;
            let log = chain.into_iter().next().expect("chain of length 1");
            Ok(Box::new(move |x: f64| {
                require_positive_point(x, "evaluation point")?;
                let fx = e.eval(x)?;
                if fx == 0.0 {
                    return Err(GError::domain(format!("f vanishes at {x}")));
                }
                log.eval(x)
            }))
        }
        None => Ok(Box::new(move |x: f64| {
            g_derivative_numeric(f, x)?
                .value()
                .map(GReal::log_value)
                .ok_or_else(|| {
                    GError::NoLimit(format!("no two-sided G-derivative of {} at {x}", f.label()))
                })
        })),
    }
}

/// First G-derivative, analytic when possible.
pub fn g_derivative(f: &GFunction, x: f64) -> Result<GReal> {
    GReal::from_log(log_g_derivative_fn(f)?(x)?)
}

/// Recovers `f'(x) = f(x)·ln(f^G(x))/x`.
pub fn ordinary_from_g(f: &GFunction, x: f64) -> Result<f64> {
    let fg = g_derivative(f, x)?;
    Ok(f.eval(x)? * fg.log_value() / x)
}

/// Increasing when `f^G > 1`, decreasing when `f^G < 1`, stationary in between
/// (threshold [`MONOTONE_TAU`] on the log).
pub fn monotonicity_classify(f: &GFunction, x: f64) -> Result<Monotonicity> {
    let log = g_derivative(f, x)?.log_value();
    Ok(if log > MONOTONE_TAU {
        Monotonicity::Increasing
    } else if log < -MONOTONE_TAU {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Stationary
    })
}

/// Finds `c ∈ ]a, b[` with `f^G(c) = k` by bisection on `ln f^G(x) − ln k`.
pub fn g_intermediate_witness(f: &GFunction, a: f64, b: f64, k: GReal) -> Result<f64> {
    if !(a > 0.0 && a < b) {
        return Err(GError::precondition(format!(
            "need 0 < a < b, got [{a}, {b}]"
        )));
    }
    let log_fg = log_g_derivative_fn(f)?;
    let target = k.log_value();
    let g = |x: f64| log_fg(x).map(|v| v - target);
    let ga = g(a)?;
    let gb = g(b)?;
    if ga * gb > 0.0 {
        return Err(GError::Bracket(format!(
            "{k} is not between f^G({a}) = e^{:.6} and f^G({b}) = e^{:.6}",
            ga + target,
            gb + target
        )));
    }
    let (mut lo, mut hi, mut glo) = (a, b, ga);
    let mut mid = 0.5 * (lo + hi);
    let mut gm = g(mid)?;
    for _ in 0..MAX_BISECTION_STEPS {
        if gm == 0.0 || (hi - lo) <= 4.0 * f64::EPSILON * mid.abs() {
            break;
        }
        if glo * gm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
        mid = 0.5 * (lo + hi);
        gm = g(mid)?;
    }
    if gm.abs() > WITNESS_TOL {
        return Err(GError::Bracket(format!(
            "bisection ended at {mid} with residual {gm:.3e}; f^G may be discontinuous"
        )));
    }
    Ok(mid)
}

/// Darboux / Rolle form: a point with `f^G(c) = 1`, the geometric zero.
pub fn g_stationary_witness(f: &GFunction, a: f64, b: f64) -> Result<f64> {
    g_intermediate_witness(f, a, b, GReal::ZERO)
}

/// Outcome of a geometric mean-value search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MvtWitness {
    /// `[f(b)/f(a)]^{1/ln(b/a)}`.
    pub quotient: GReal,
    /// A point with `f^G(c) = quotient`, absent when the hypotheses fail.
    pub c: Option<f64>,
}

pub fn mvt_witness(f: &GFunction, a: f64, b: f64) -> Result<MvtWitness> {
    if !(a > 0.0 && a < b) {
        return Err(GError::precondition(format!(
            "need 0 < a < b, got [{a}, {b}]"
        )));
    }
    let fa = f.eval(a)?;
    let fb = f.eval(b)?;
    let ratio = fb / fa;
    if !(ratio > 0.0) {
        return Err(GError::sign(format!(
            "f({a}) = {fa} and f({b}) = {fb} do not share a sign"
        )));
    }
    let quotient = GReal::from_log(ratio.ln() / (b / a).ln())?;
    let c = match g_intermediate_witness(f, a, b, quotient) {
        Ok(c) => Some(c),
        Err(GError::Bracket(_)) | Err(GError::NoLimit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(MvtWitness { quotient, c })
}
