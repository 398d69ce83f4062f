//! The geometric arithmetic field ℝ(G).
//!
//! Every positive real `x` is stored as `ln x`. Under this representation
//! the geometric operations become ordinary float arithmetic on logs:
//!
//! | geometric | raw value      | log domain   |
//! |-----------|----------------|--------------|
//! | `x ⊕ y`   | `x·y`          | `lx + ly`    |
//! | `x ⊖ y`   | `x / y`        | `lx − ly`    |
//! | `x ⊙ y`   | `x^(ln y)`     | `lx · ly`    |
//! | `x ⊘ y`   | `x^(1/ln y)`   | `lx / ly`    |
//!
//! The geometric zero is `1` and the geometric identity is `e`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{GError, Result};

/// Default relative tolerance on `log_value` used by [`GReal::approx_eq`].
pub const DEFAULT_LOG_TOL: f64 = 1e-12;

/// Largest `n` for which binomial coefficients are computed.
pub const MAX_BINOMIAL_N: u32 = 20;

/// Largest `n` whose factorial is finite as an `f64`.
pub const MAX_FACTORIAL_N: u32 = 170;

/// An element of ℝ(G), i.e. a strictly positive real held by its natural log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GReal {
    log_value: f64,
}

impl GReal {
    /// The geometric zero, `1`.
    pub const ZERO: GReal = GReal { log_value: 0.0 };
    /// The geometric identity, `e`.
    pub const ONE: GReal = GReal { log_value: 1.0 };

    /// Builds from a raw positive value. Rejects `x <= 0` and non-finite input.
    pub fn from_value(x: f64) -> Result<Self> {
        if x.is_nan() || x <= 0.0 {
            return Err(GError::domain(format!(
                "{x} is not a positive real; ℝ(G) excludes 0 and negatives"
            )));
        }
        if x.is_infinite() {
            return Err(GError::range("infinity is not representable"));
        }
        Ok(GReal { log_value: x.ln() })
    }

    /// Builds from the natural logarithm of the represented value.
    pub fn from_log(log_value: f64) -> Result<Self> {
        if !log_value.is_finite() {
            return Err(GError::range(format!(
                "log value {log_value} is not finite"
            )));
        }
        Ok(GReal { log_value })
    }

    /// The geometric integer `e^n`.
    pub fn geometric_integer(n: i64) -> Self {
        GReal {
            log_value: n as f64,
        }
    }

    pub fn log_value(self) -> f64 {
        self.log_value
    }

    /// The represented raw number `exp(log_value)`. May overflow to `inf`
    /// for large logs; use [`GReal::log_value`] for exact work.
    pub fn value(self) -> f64 {
        self.log_value.exp()
    }

    /// True for members of ℝ⁺(G) (raw value above 1).
    pub fn is_g_positive(self) -> bool {
        self.log_value > 0.0
    }

    /// True for members of ℝ⁻(G) (raw value below 1).
    pub fn is_g_negative(self) -> bool {
        self.log_value < 0.0
    }

    /// `x ⊕ y = x·y`.
    pub fn oplus(self, other: GReal) -> Result<GReal> {
        GReal::from_log(self.log_value + other.log_value)
    }

    /// `x ⊖ y = x / y`.
    pub fn ominus(self, other: GReal) -> Result<GReal> {
        GReal::from_log(self.log_value - other.log_value)
    }

    /// `x ⊙ y = x^(ln y) = y^(ln x)`.
    pub fn odot(self, other: GReal) -> Result<GReal> {
        GReal::from_log(self.log_value * other.log_value)
    }

    /// `x ⊘ y = x^(1/ln y)`.
    pub fn oslash(self, other: GReal) -> Result<GReal> {
        if other.log_value == 0.0 {
            return Err(GError::DivisionByGeometricZero);
        }
        GReal::from_log(self.log_value / other.log_value)
    }

    /// Geometric negation `⊖x = 1/x`.
    pub fn gneg(self) -> GReal {
        GReal {
            log_value: -self.log_value,
        }
    }

    /// Geometric power `x^{n_G} = x ⊙ x ⊙ … ⊙ x`. `x^{0_G} = e`; negative `n`
    /// goes through the geometric inverse `x^{-1_G} = e^{1/ln x}`.
    pub fn gpow(self, n: i32) -> Result<GReal> {
        if n < 0 && self.log_value == 0.0 {
            return Err(GError::DivisionByGeometricZero);
        }
        GReal::from_log(self.log_value.powi(n))
    }

    /// Geometric absolute value `|x|^G`; always `>= 1`.
    pub fn gabs(self) -> GReal {
        GReal {
            log_value: self.log_value.abs(),
        }
    }

    /// Geometric square root: the `y` with `y ⊙ y = x`, defined for `x >= 1`.
    pub fn gsqrt(self) -> Result<GReal> {
        if self.log_value < 0.0 {
            return Err(GError::domain("geometric square root of a value below 1"));
        }
        GReal::from_log(self.log_value.sqrt())
    }

    /// Approximate equality with relative tolerance `tol` on `log_value`
    /// (absolute near the geometric zero).
    pub fn approx_eq(self, other: GReal, tol: f64) -> bool {
        rel_log_error(self.log_value, other.log_value) <= tol
    }
}

/// `|a − b| / max(1, |b|)`: relative when logs are large, absolute near zero.
pub fn rel_log_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

impl PartialOrd for GReal {
    /// The order transported by `exp`: `x < y` iff `ln x < ln y`.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.log_value.partial_cmp(&other.log_value)
    }
}

impl fmt::Display for GReal {
    /// Raw decimal with 6 significant digits, or `e^k` when `|k| > 20`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_value.abs() > 20.0 {
            f.write_str(&self.log_form())
        } else {
            f.write_str(&significant(self.value(), 6))
        }
    }
}

impl GReal {
    /// The `e^k` rendering with at most 6 decimals in `k`.
    pub fn log_form(&self) -> String {
        format!("e^{}", trim_decimal(format!("{:.6}", self.log_value)))
    }
}

fn significant(v: f64, digits: i32) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    trim_decimal(format!("{v:.decimals$}"))
}

fn trim_decimal(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.to_string()
    }
}

pub fn g_add(x: GReal, y: GReal) -> Result<GReal> {
    x.oplus(y)
}

pub fn g_sub(x: GReal, y: GReal) -> Result<GReal> {
    x.ominus(y)
}

pub fn g_mul(x: GReal, y: GReal) -> Result<GReal> {
    x.odot(y)
}

pub fn g_div(x: GReal, y: GReal) -> Result<GReal> {
    x.oslash(y)
}

pub fn g_pow(x: GReal, n: i32) -> Result<GReal> {
    x.gpow(n)
}

pub fn g_abs(x: GReal) -> GReal {
    x.gabs()
}

/// `n!_G = e^n ⊙ e^(n−1) ⊙ … ⊙ e = e^{n!}`, with `0!_G = e`.
pub fn g_factorial(n: u32) -> Result<GReal> {
    if n > MAX_FACTORIAL_N {
        return Err(GError::range(format!(
            "{n}! exceeds the representable log range"
        )));
    }
    let fact = (1..=n).fold(1.0_f64, |acc, k| acc * k as f64);
    GReal::from_log(fact)
}

/// Binomial coefficient in integer arithmetic, `n <= 20`.
pub fn binomial(n: u32, k: u32) -> Result<u64> {
    if n > MAX_BINOMIAL_N {
        return Err(GError::range(format!(
            "binomial coefficients limited to n <= {MAX_BINOMIAL_N}, got {n}"
        )));
    }
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    // Each partial product is itself a binomial coefficient, so the division is exact.
    Ok((0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)))
}

/// Expansion of `(a ⊕ b)^{n_G}` (or `(a ⊖ b)^{n_G}` when `signed`) into its
/// `n + 1` terms `e^{C(n,k)} ⊙ a^{(n−k)_G} ⊙ (±b)^{k_G}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialExpansion {
    pub terms: Vec<GReal>,
    pub total: GReal,
}

pub fn g_binomial_expand(a: GReal, b: GReal, n: u32, signed: bool) -> Result<BinomialExpansion> {
    if n == 0 {
        return Err(GError::precondition("binomial expansion needs n >= 1"));
    }
    let la = a.log_value;
    let lb = if signed { -b.log_value } else { b.log_value };
    let mut terms = Vec::with_capacity(n as usize + 1);
    let mut total = 0.0;
    for k in 0..=n {
        let c = binomial(n, k)? as f64;
        let log = c * la.powi((n - k) as i32) * lb.powi(k as i32);
        terms.push(GReal::from_log(log)?);
        total += log;
    }
    Ok(BinomialExpansion {
        terms,
        total: GReal::from_log(total)?,
    })
}
