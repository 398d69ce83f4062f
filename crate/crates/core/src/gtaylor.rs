//! Geometric Taylor products.
//!
//! Around a base point `a > 0`,
//!
//! ```text
//! f(x) = Π_k [f^{[k]}(a)]^{ln^k(x/a) / k!}
//! ```
//!
//! and truncating after order `n − 1` leaves the remainder factor
//! `[f^{[n]}(a·h^{ln θ})]^{(1 − ln θ)^{n−p} ln^n h / ((n−1)! p)}` for some
//! `θ ∈ (1, e)`. All products are accumulated as sums of logs.

use crate::error::{GError, Result};
use crate::fexpr::{differentiate, GFunction};
use crate::ganalysis::{g_derivative_log_chain, g_derivative_n};
use crate::garith::GReal;

/// Search interval for θ, kept strictly inside `(1, e)`.
pub const THETA_MARGIN: f64 = 1e-6;
const GOLDEN_STEPS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct TaylorExpansion {
    pub base: f64,
    pub order: usize,
    /// `[f(a), f^{[1]}(a), …, f^{[order]}(a)]`.
    pub factors: Vec<GReal>,
    /// Raw `f(a)`, kept so the product is exact at the base point.
    pub base_value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorRemainder {
    pub theta: f64,
    pub p: usize,
    pub value: GReal,
}

/// Result of fitting θ so that the truncated product reproduces `f(ah)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaSearch {
    pub remainder: TaylorRemainder,
    /// `|ln f(ah) − ln(partial · R_n)|` at the chosen θ.
    pub residual: f64,
}

fn require_base(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(GError::precondition(format!(
            "base point must be positive, got {a}"
        )))
    }
}

/// Factors `f^{[k]}(a)` for `k = 0..=n`, from the analytic path when `f` has
/// a symbolic body.
pub fn taylor_factors(f: &GFunction, a: f64, n: usize) -> Result<TaylorExpansion> {
    require_base(a)?;
    let fa = f.eval(a)?;
    let mut factors = Vec::with_capacity(n + 1);
    factors.push(GReal::from_value(fa).map_err(|_| {
        GError::domain(format!(
            "f(a) = {fa} is not positive; no geometric expansion"
        ))
    })?);
    match f.expr() {
        Some(e) => {
            for (k, log) in g_derivative_log_chain(e, n)?.iter().enumerate() {
                let v = log
                    .eval(a)
                    .and_then(GReal::from_log)
                    .map_err(|err| GError::AtOrder {
                        order: k + 1,
                        source: Box::new(err),
                    })?;
                factors.push(v);
            }
        }
        None => {
            for k in 1..=n {
                factors.push(g_derivative_n(f, a, k)?);
            }
        }
    }
    Ok(TaylorExpansion {
        base: a,
        order: n,
        factors,
        base_value: fa,
    })
}

impl TaylorExpansion {
    /// `Σ_k ln(factor_k) · ln^k(x/a) / k!`, the log of the truncated product.
    pub fn eval_log(&self, x: f64) -> Result<f64> {
        Ok(self.factors[0].log_value() + self.growth_log(x)?)
    }

    /// The log of the product without the `k = 0` factor.
    fn growth_log(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(GError::domain(format!("expansion needs x > 0, got {x}")));
        }
        let l = (x / self.base).ln();
        let mut power = 1.0;
        let mut total = 0.0;
        for (k, factor) in self.factors.iter().enumerate().skip(1) {
            power *= l / k as f64;
            total += factor.log_value() * power;
        }
        Ok(total)
    }
}

/// The truncated Taylor product at `x`.
pub fn taylor_eval(t: &TaylorExpansion, x: f64) -> Result<f64> {
    let v = t.base_value * t.growth_log(x)?.exp();
    if v.is_infinite() {
        return Err(GError::range(format!("e^{} overflows", t.eval_log(x)?)));
    }
    Ok(v)
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Remainder factor `R_n` at a given θ.
pub fn taylor_remainder(
    f: &GFunction,
    a: f64,
    h: f64,
    n: usize,
    p: usize,
    theta: f64,
) -> Result<TaylorRemainder> {
    require_base(a)?;
    if !(h > 1.0) {
        return Err(GError::precondition(format!(
            "remainder needs h > 1, got {h}"
        )));
    }
    if !(theta > 1.0 && theta < std::f64::consts::E) {
        return Err(GError::precondition(format!(
            "θ must lie in (1, e), got {theta}"
        )));
    }
    if !(p >= 1 && p <= n) {
        return Err(GError::precondition(format!(
            "need 1 <= p <= n, got p = {p}, n = {n}"
        )));
    }
    let lt = theta.ln();
    let lh = h.ln();
    let point = a * h.powf(lt);
    let fn_at = g_derivative_n(f, point, n)?;
    let exponent =
        (1.0 - lt).powi((n - p) as i32) * lh.powi(n as i32) / (factorial(n - 1) * p as f64);
    Ok(TaylorRemainder {
        theta,
        p,
        value: GReal::from_log(fn_at.log_value() * exponent)?,
    })
}

/// Golden-section search for θ ∈ (1 + 1e-6, e − 1e-6) minimising the
/// mismatch between `f(ah)` and the order-`n` product with remainder.
pub fn remainder_theta_search(
    f: &GFunction,
    a: f64,
    h: f64,
    n: usize,
    p: usize,
) -> Result<ThetaSearch> {
    if n == 0 {
        return Err(GError::precondition("remainder needs n >= 1"));
    }
    let target = GReal::from_value(f.eval(a * h)?)?.log_value();
    let partial = taylor_factors(f, a, n - 1)?.eval_log(a * h)?;
    let mismatch = |theta: f64| -> Result<f64> {
        let r = taylor_remainder(f, a, h, n, p, theta)?;
        Ok((target - partial - r.value.log_value()).abs())
    };
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (1.0 + THETA_MARGIN, std::f64::consts::E - THETA_MARGIN);
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = mismatch(c)?;
    let mut fd = mismatch(d)?;
    for _ in 0..GOLDEN_STEPS {
        if hi - lo < 1e-13 {
            break;
        }
        if fc < fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = mismatch(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = mismatch(d)?;
        }
    }
    let theta = 0.5 * (lo + hi);
    let remainder = taylor_remainder(f, a, h, n, p, theta)?;
    Ok(ThetaSearch {
        remainder,
        residual: mismatch(theta)?,
    })
}

fn ordinary_derivative(f: &GFunction, a: f64) -> Result<f64> {
    match f.expr() {
        Some(e) => differentiate(e)?.eval(a),
        None => {
            let h = 1e-6 * a.abs().max(1.0);
            Ok((f.eval(a + h)? - f.eval(a - h)?) / (2.0 * h))
        }
    }
}

/// First-order ordinary Taylor approximation `f(a) + (x − a)·f'(a)`.
pub fn linear_approx(f: &GFunction, a: f64, x: f64) -> Result<f64> {
    Ok(f.eval(a)? + (x - a) * ordinary_derivative(f, a)?)
}

/// Geometric Taylor approximation of the given order; order 1 is
/// `f(a)·(f^G(a))^{ln(x/a)}`.
pub fn exp_approx(f: &GFunction, a: f64, order: usize, x: f64) -> Result<f64> {
    let fa = f.eval(a)?;
    if fa <= 0.0 {
        return Err(GError::domain(format!(
            "exponential approximation needs f(a) > 0, got {fa}"
        )));
    }
    taylor_eval(&taylor_factors(f, a, order)?, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn func(text: &str) -> GFunction {
        GFunction::parse(text).unwrap()
    }

    #[test]
    fn factors_examples() {
        let t = taylor_factors(&func("exp(x)"), 1.0, 4).unwrap();
        assert_eq!(t.factors.len(), 5);
        for f in &t.factors {
            assert!((f.log_value() - 1.0).abs() < 1e-14);
        }

        let t = taylor_factors(&func("sin(x)"), PI / 6.0, 1).unwrap();
        assert!((t.factors[0].value() - 0.5).abs() < 1e-15);
        assert!((t.factors[1].log_value() - PI / (2.0 * 3f64.sqrt())).abs() < 1e-14);

        let t = taylor_factors(&func("x^2"), 1.0, 2).unwrap();
        assert!(t.factors[0].log_value().abs() < 1e-15);
        assert!((t.factors[1].log_value() - 2.0).abs() < 1e-15);
        assert!(t.factors[2].log_value().abs() < 1e-15);

        assert!(matches!(
            taylor_factors(&func("sin(x)"), 4.0, 1),
            Err(GError::Domain(_))
        ));
    }

    #[test]
    fn eval_examples() {
        let t = taylor_factors(&func("exp(x)"), 1.0, 4).unwrap();
        let oracle = (1.0 + 1.0 + 0.5 + 1.0 / 6.0 + 1.0 / 24.0_f64).exp();
        assert!((taylor_eval(&t, E).unwrap() - oracle).abs() < 1e-12);
        assert!((oracle - 15.004248).abs() < 1e-6);

        let t = taylor_factors(&func("sin(x)"), PI / 6.0, 1).unwrap();
        assert_eq!(taylor_eval(&t, PI / 6.0).unwrap(), (PI / 6.0).sin());
        let v = taylor_eval(&t, 0.4).unwrap();
        let oracle = 0.5 * (PI / (2.0 * 3f64.sqrt()) * (6.0 * 0.4 / PI).ln()).exp();
        assert!((v - oracle).abs() < 1e-14);
        assert!((v - 0.391668).abs() < 1e-6);
        assert!(taylor_eval(&t, -1.0).is_err());
    }

    #[test]
    fn remainder_search_reproduces_value() {
        let s = remainder_theta_search(&func("exp(x)"), 1.0, E, 3, 3).unwrap();
        assert!(s.residual <= 1e-8, "residual {}", s.residual);
        // θ/6 = e − 5/2 closes the gap exactly
        assert!((s.remainder.theta - 6.0 * (E - 2.5)).abs() < 1e-6);
    }

    #[test]
    fn remainder_limits() {
        let f = func("exp(x)");
        let (a, h, n) = (1.0, 1.5_f64, 3);
        let r = taylor_remainder(&f, a, h, n, n, 1.0 + 1e-12).unwrap();
        let limit = g_derivative_n(&f, a, n).unwrap().log_value() * h.ln().powi(3) / 6.0;
        assert!((r.value.log_value() - limit).abs() < 1e-9);

        let sq = func("x^2");
        for (a, h) in [(0.5, 2.0), (1.3, 1.1)] {
            let r = taylor_remainder(&sq, a, h, 3, 2, 1.7).unwrap();
            assert!(r.value.log_value().abs() < 1e-12);
        }
        assert!(taylor_remainder(&f, 1.0, 0.5, 3, 3, 1.5).is_err());
        assert!(taylor_remainder(&f, 1.0, 2.0, 3, 3, 3.0).is_err());
        assert!(taylor_remainder(&f, 1.0, 2.0, 3, 4, 1.5).is_err());
    }

    #[test]
    fn linear_examples() {
        let s = func("sin(x)");
        assert!((linear_approx(&s, PI / 6.0, 0.4).unwrap() - 0.39296).abs() < 5e-6);
        assert!((linear_approx(&s, PI / 6.0, 2.0).unwrap() - 1.778601).abs() < 5e-7);
        assert_eq!(
            linear_approx(&s, PI / 6.0, PI / 6.0).unwrap(),
            (PI / 6.0).sin()
        );
    }

    #[test]
    fn exp_approx_examples() {
        let s = func("sin(x)");
        assert!((exp_approx(&s, PI / 6.0, 1, PI / 6.0).unwrap() - 0.5).abs() < 1e-15);
        let oracle = 0.5 * (6.0 * 0.4 / PI).powf(PI / (2.0 * 3f64.sqrt()));
        assert!((exp_approx(&s, PI / 6.0, 1, 0.4).unwrap() - oracle).abs() < 1e-12);

        let series: f64 = (0..=8)
            .map(|k| 2f64.ln().powi(k) / factorial(k as usize))
            .sum();
        let v = exp_approx(&func("exp(x)"), 1.0, 8, 2.0).unwrap();
        assert!((v - series.exp()).abs() < 1e-10);
        assert!((v - 2f64.exp()).abs() <= 2e-3);

        assert!(matches!(
            exp_approx(&s, 4.0, 1, 4.5),
            Err(GError::Domain(_))
        ));
    }
}
