//! Bigeometric (G-) calculus over the positive reals.
//!
//! * [`garith`]: the geometric arithmetic field ℝ(G) in log representation.
//! * [`fexpr`]: expression parsing, evaluation and symbolic differentiation.
//! * [`ganalysis`]: G-limits, G-continuity, G-derivatives and witness finders.
//! * [`gtaylor`]: geometric Taylor products and the linear/exponential
//!   approximation comparison.
//! * [`gdiff`]: geometric forward and backward differences.
//! * [`gtrig`]: geometric trigonometric ratios and Pythagorean triplets.
//! * [`apps`]: growth and price-elasticity applications.
//! * [`cli`]: table generation and the geometric `ops` evaluator behind the
//!   `bigeo` binary.

// `!(x > 0.0)` is used on purpose so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod apps;
pub mod cli;
pub mod error;
pub mod fexpr;
pub mod ganalysis;
pub mod garith;
pub mod gdiff;
pub mod gtaylor;
pub mod gtrig;
pub mod registry;

pub use error::{GError, Result};
pub use fexpr::{parse, Expr, GFunction};
pub use garith::GReal;
