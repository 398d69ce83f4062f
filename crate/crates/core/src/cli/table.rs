//! Linear vs exponential approximation tables.

use std::io::Write;

use crate::error::{GError, Result};
use crate::fexpr::GFunction;
use crate::gtaylor::{exp_approx, linear_approx};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub f: f64,
    /// First-order ordinary approximation `L(x)`.
    pub l: f64,
    /// First-order geometric approximation `E(x)`; present iff `x > 0`.
    pub e: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub function: GFunction,
    pub base: f64,
    pub from: f64,
    pub to: f64,
    pub step: f64,
}

impl Default for TableSpec {
    /// `sin` around `π/6` on `-2, -1.6, …, 5.2`.
    fn default() -> Self {
        TableSpec {
            function: GFunction::parse("sin(x)").expect("sin parses"),
            base: std::f64::consts::FRAC_PI_6,
            from: -2.0,
            to: 5.2,
            step: 0.4,
        }
    }
}

/// Grid `from, from + step, …` up to `to` (inclusive within a small slack).
fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(from < to) || !from.is_finite() || !to.is_finite() {
        return Err(GError::precondition(format!(
            "table needs from < to and step > 0, got from={from}, to={to}, step={step}"
        )));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=count)
        .map(|i| {
            let x = from + step * i as f64;
            // snap to 12 decimals; the + 0.0 folds -0 into 0
            (x * 1e12).round() / 1e12 + 0.0
        })
        .collect())
}

pub fn generate_table(spec: &TableSpec) -> Result<Vec<TableRow>> {
    grid(spec.from, spec.to, spec.step)?
        .into_iter()
        .map(|x| {
            let e = if x > 0.0 {
                Some(exp_approx(&spec.function, spec.base, 1, x)?)
            } else {
                None
            };
            Ok(TableRow {
                x,
                f: spec.function.eval(x)?,
                l: linear_approx(&spec.function, spec.base, x)?,
                e,
            })
        })
        .collect()
}

fn fixed(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// CSV with header `x,f,L,E`, six fixed decimals, LF endings, empty `E`
/// where absent.
pub fn write_csv<W: Write>(rows: &[TableRow], mut out: W) -> std::io::Result<()> {
    out.write_all(b"x,f,L,E\n")?;
    for r in rows {
        let e = r.e.map(fixed).unwrap_or_default();
        writeln!(out, "{},{},{},{}", fixed(r.x), fixed(r.f), fixed(r.l), e)?;
    }
    Ok(())
}

/// Published `(x, sin x, L(x), E(x))` values for `sin` around `π/6`.
pub const REFERENCE_TABLE: [(f64, f64, f64, Option<f64>); 19] = [
    (-2.0, -0.9093, -1.6855, None),
    (-1.6, -0.99957, -1.33909, None),
    (-1.2, -0.93204, -0.99268, None),
    (-0.8, -0.71736, -0.64627, None),
    (-0.4, -0.38942, -0.29986, None),
    (0.0, 0.0, 0.04655, None),
    (0.4, 0.389418, 0.39296, Some(0.431021)),
    (0.8, 0.717356, 0.73937, Some(0.631633)),
    (1.2, 0.932039, 1.085781, Some(0.789858)),
    (1.6, 0.999574, 1.432191, Some(0.925617)),
    (2.0, 0.909297, 1.778601, Some(1.046793)),
    (2.4, 0.675463, 2.125011, Some(1.157486)),
    (2.8, 0.334988, 2.471421, Some(1.260159)),
    (3.2, -0.05837, 2.817831, Some(1.356432)),
    (3.6, -0.44252, 3.164242, Some(1.447438)),
    (4.0, -0.7568, 3.510652, Some(1.534007)),
    (4.4, -0.9516, 3.857062, Some(1.61677)),
    (4.8, -0.99616, 4.203472, Some(1.69622)),
    (5.2, -0.88345, 4.549882, Some(1.77275)),
];

/// One comparison between a generated row and the reference values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditLine {
    pub x: f64,
    pub f_dev: f64,
    pub l_dev: f64,
    /// `(computed, published)` when both exist.
    pub e_pair: Option<(f64, f64)>,
}

/// Matches generated rows to [`REFERENCE_TABLE`] by `x`; reference rows
/// without a generated counterpart are skipped.
pub fn audit_table(rows: &[TableRow]) -> Vec<AuditLine> {
    REFERENCE_TABLE
        .iter()
        .filter_map(|&(x, f, l, e)| {
            let row = rows.iter().find(|r| (r.x - x).abs() < 1e-9)?;
            Some(AuditLine {
                x,
                f_dev: (row.f - f).abs(),
                l_dev: (row.l - l).abs(),
                e_pair: row.e.zip(e),
            })
        })
        .collect()
}
