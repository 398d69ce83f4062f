//! Growth and elasticity read off the G-derivative.
//!
//! For `y = a·b^x`, `y^G = b^x` is the total growth (decay when `b < 1`).
//! For a demand curve `y(x)`, `ln y^G(x) = x·y'/y` is the price elasticity
//! `E_p`, and the resiliency is `e^{E_p}`.

use crate::error::{GError, Result};
use crate::fexpr::GFunction;
use crate::ganalysis::{g_derivative, g_derivative_analytic, g_derivative_numeric, Method};
use crate::garith::GReal;

/// Total growth factor `f^G(x)` of a positive function.
pub fn total_growth(f: &GFunction, x: f64) -> Result<GReal> {
    let fx = f.eval(x)?;
    if fx <= 0.0 {
        return Err(GError::domain(format!("growth needs f(x) > 0, got {fx}")));
    }
    g_derivative(f, x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticityReport {
    pub price: f64,
    /// `E_p = x·y'/y`.
    pub elasticity: f64,
    /// `y^{[1]} = e^{E_p}`.
    pub g_derivative: GReal,
    pub resiliency: GReal,
    pub method: Method,
}

/// Price elasticity through the G-derivative: analytic when the demand has a
/// symbolic body, numeric otherwise.
pub fn price_elasticity(demand: &GFunction, price: f64) -> Result<ElasticityReport> {
    if !(price > 0.0) {
        return Err(GError::precondition(format!(
            "price must be positive, got {price}"
        )));
    }
    if demand.eval(price)? == 0.0 {
        return Err(GError::domain(format!("demand vanishes at price {price}")));
    }
    let (gd, method) = match demand.expr() {
        Some(e) => (g_derivative_analytic(e, price)?, Method::AnalyticBridge),
        None => {
            let r = g_derivative_numeric(demand, price)?;
            let v = r.value().ok_or_else(|| {
                GError::NoLimit(format!("demand has no two-sided G-derivative at {price}"))
            })?;
            (v, Method::NumericLimit)
        }
    };
    Ok(ElasticityReport {
        price,
        elasticity: gd.log_value(),
        g_derivative: gd,
        resiliency: gd,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn func(text: &str) -> GFunction {
        GFunction::parse(text).unwrap()
    }

    #[test]
    fn growth_examples() {
        let g = total_growth(&func("3*2^x"), 3.0).unwrap();
        assert!((g.log_value() - 3.0 * 2f64.ln()).abs() < 1e-12);
        assert!((g.value() - 8.0).abs() < 1e-12);
        let g = total_growth(&func("5*0.5^x"), 1.0).unwrap();
        assert!((g.value() - 0.5).abs() < 1e-12);
        let g = total_growth(&func("4*1^x"), 2.0).unwrap();
        assert!(g.log_value().abs() < 1e-15);
        assert!(total_growth(&func("-2^x"), 1.0).is_err());
    }

    #[test]
    fn elasticity_examples() {
        for p in [0.5, 10.0, 42.0] {
            let r = price_elasticity(&func("100*x^(-2)"), p).unwrap();
            assert!((r.elasticity + 2.0).abs() < 1e-12);
            assert!((r.g_derivative.value() - 0.135335).abs() < 1e-6);
            assert_eq!(r.resiliency, r.g_derivative);
            assert_eq!(r.method, Method::AnalyticBridge);
        }
        let r = price_elasticity(&func("12"), 3.0).unwrap();
        assert_eq!(r.elasticity, 0.0);
        assert_eq!(r.resiliency, GReal::ZERO);
        let r = price_elasticity(&func("100*exp(-0.5*x)"), 4.0).unwrap();
        assert!((r.elasticity + 2.0).abs() < 1e-12);
    }

    #[test]
    fn numeric_path_for_builtins() {
        let d = GFunction::from_fn("demand", |x: f64| 50.0 * x.powf(-1.5));
        let r = price_elasticity(&d, 2.0).unwrap();
        assert_eq!(r.method, Method::NumericLimit);
        assert!((r.elasticity + 1.5).abs() < 1e-8);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            price_elasticity(&func("x-3"), 3.0),
            Err(GError::Domain(_))
        ));
        assert!(matches!(
            price_elasticity(&func("x"), 0.0),
            Err(GError::Precondition(_))
        ));
    }
}
