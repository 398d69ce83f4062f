//! Geometric trigonometry.
//!
//! In a geometric right triangle with hypotenuse `h`, opposite side `p` and
//! adjacent side `b` (all `> 1`), `sing θ = p ⊘ h = p^{1/ln h}`, and so on.
//! Writing the sides as `e^{h'}`, `e^{p'}`, `e^{b'}` this is `e^{p'/h'}`, i.e.
//! `sing θ = e^{sin θ}` where θ is the ordinary angle with legs `p'`, `b'`.
//! Angles stay ordinary radians; only the ratios live in ℝ(G).
//!
//! [`g_trig`] applies the bridge `e^{trig θ}` for any θ off the poles, which
//! extends the triangle construction beyond acute angles.

use std::fmt;

use crate::error::{GError, Result};
use crate::garith::GReal;

/// `|cos θ|` (or `|sin θ|`) below this marks a pole.
pub const POLE_TOL: f64 = 1e-12;
/// Relative tolerance of [`triplet_check`].
pub const TRIPLET_TOL: f64 = 1e-10;
/// Relative tolerance enforced by [`GTriplet::new`].
pub const TRIPLET_BUILD_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Sing,
    Cosg,
    Tang,
    Cotg,
    Secg,
    Cscg,
}

impl TrigKind {
    pub const ALL: [TrigKind; 6] = [
        TrigKind::Sing,
        TrigKind::Cosg,
        TrigKind::Tang,
        TrigKind::Cotg,
        TrigKind::Secg,
        TrigKind::Cscg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TrigKind::Sing => "sing",
            TrigKind::Cosg => "cosg",
            TrigKind::Tang => "tang",
            TrigKind::Cotg => "cotg",
            TrigKind::Secg => "secg",
            TrigKind::Cscg => "cscg",
        }
    }
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `e^{trig θ}` for the ordinary ratio matching `kind`.
pub fn g_trig(kind: TrigKind, theta: f64) -> Result<GReal> {
    let (s, c) = theta.sin_cos();
    let pole = |v: f64| {
        if v.abs() <= POLE_TOL {
            Err(GError::domain(format!("{kind} has a pole at θ = {theta}")))
        } else {
            Ok(())
        }
    };
    let ratio = match kind {
        TrigKind::Sing => s,
        TrigKind::Cosg => c,
        TrigKind::Tang => {
            pole(c)?;
            s / c
        }
        TrigKind::Cotg => {
            pole(s)?;
            c / s
        }
        TrigKind::Secg => {
            pole(c)?;
            1.0 / c
        }
        TrigKind::Cscg => {
            pole(s)?;
            1.0 / s
        }
    };
    GReal::from_log(ratio)
}

/// Geometric Pythagorean triplet: hypotenuse `h`, opposite `p`, adjacent `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GTriplet {
    h: GReal,
    p: GReal,
    b: GReal,
}

impl GTriplet {
    /// Validates `h^{2_G} = p^{2_G} ⊕ b^{2_G}` and that every side exceeds 1.
    pub fn new(h: GReal, p: GReal, b: GReal) -> Result<Self> {
        for (name, side) in [("hypotenuse", h), ("opposite", p), ("adjacent", b)] {
            if side.log_value() <= 0.0 {
                return Err(GError::domain(format!(
                    "{name} {side} must exceed 1 in a geometric triangle"
                )));
            }
        }
        if !pythagorean(h, p, b, TRIPLET_BUILD_TOL) {
            return Err(GError::domain(format!(
                "({}, {}, {}) is not a geometric Pythagorean triplet",
                h.log_form(),
                p.log_form(),
                b.log_form()
            )));
        }
        Ok(GTriplet { h, p, b })
    }

    pub fn hypotenuse(&self) -> GReal {
        self.h
    }

    pub fn opposite(&self) -> GReal {
        self.p
    }

    pub fn adjacent(&self) -> GReal {
        self.b
    }

    /// The ordinary angle opposite `p`.
    pub fn angle(&self) -> f64 {
        self.p.log_value().atan2(self.b.log_value())
    }
}

fn pythagorean(x: GReal, y: GReal, z: GReal, tol: f64) -> bool {
    let lhs = x.log_value().powi(2);
    let rhs = y.log_value().powi(2) + z.log_value().powi(2);
    (lhs - rhs).abs() <= tol * lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE)
}

/// True iff `(ln x)² = (ln y)² + (ln z)²` within relative `1e-10`; `x` is the
/// hypotenuse.
pub fn triplet_check(x: GReal, y: GReal, z: GReal) -> bool {
    pythagorean(x, y, z, TRIPLET_TOL)
}

/// `(e^{m²+1}, e^{m²−1}, e^{2m})` from the ordinary triple `{m²−1, 2m, m²+1}`.
pub fn triplet_generate(m: u64) -> Result<GTriplet> {
    if m < 2 {
        return Err(GError::precondition(format!(
            "triplet generator needs m >= 2, got {m}"
        )));
    }
    let sq = m
        .checked_mul(m)
        .filter(|sq| *sq < (1u64 << 53))
        .ok_or_else(|| GError::range(format!("m = {m} is too large for exact logs")))?;
    let h = GReal::from_log((sq + 1) as f64)?;
    let p = GReal::from_log((sq - 1) as f64)?;
    let b = GReal::from_log((2 * m) as f64)?;
    GTriplet::new(h, p, b)
}

/// The geometric ratio read off the triangle sides.
pub fn g_trig_from_triangle(t: &GTriplet, kind: TrigKind) -> Result<GReal> {
    let (h, p, b) = (t.h, t.p, t.b);
    match kind {
        TrigKind::Sing => p.oslash(h),
        TrigKind::Cosg => b.oslash(h),
        TrigKind::Tang => p.oslash(b),
        TrigKind::Cotg => b.oslash(p),
        TrigKind::Secg => h.oslash(b),
        TrigKind::Cscg => h.oslash(p),
    }
}

/// Area of a geometric right triangle, `ln(base)·ln(altitude)/2`.
pub fn g_triangle_area(base: GReal, altitude: GReal) -> Result<f64> {
    if base.log_value() <= 0.0 || altitude.log_value() <= 0.0 {
        return Err(GError::domain("geometric triangle sides must exceed 1"));
    }
    Ok(base.log_value() * altitude.log_value() / 2.0)
}
