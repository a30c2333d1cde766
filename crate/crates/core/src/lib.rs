//! Halves of points on odd-degree hyperelliptic curves.
//!
//! Given `y^2 = f(x)` with `f` monic of degree `2g + 1` and split over `F_p`,
//! and a point `P = (a, b)` with `a` in `F_p`, this crate computes all
//! `2^(2g)` divisor classes `D` with `2D = P` from choices of square roots
//! `r(alpha) = sqrt(a - alpha)`, and checks the results against plain Cantor
//! arithmetic and exhaustive search.

pub mod error;
pub mod ff;
pub mod halving;
pub mod jacobian;
pub mod json;
pub mod oracle;
mod par;
pub mod poly;

pub use error::{Error, Result};
pub use ff::{Fe, FieldParams};
pub use halving::{Half, SignVector, SqrtProfile};
pub use jacobian::{AffinePoint, Curve, MumfordDivisor};
pub use oracle::{SweepConfig, SweepReport};
pub use par::Execution;
pub use poly::Poly;
