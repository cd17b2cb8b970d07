//! Exact computations with germs of c-holomorphic functions on monomial cusp
//! curves `z1^p = z2^q`.
//!
//! Every germ on a cusp is represented by its pullback along the
//! normalization `t -> (t^q, t^p)`, a truncated Laurent polynomial in `t`
//! with Gaussian-rational coefficients. Holomorphy then reduces to
//! membership of exponents in the numerical semigroup `<p, q>`.
//!
//! Modules:
//!
//! * [`semigroup`]: two-generator numerical semigroups.
//! * [`germ`]: truncated Laurent germs and three-valued decisions.
//! * [`curve`]: cusp curves, the Radó germ `h`, powers, flatness and
//!   Weierstrass polynomials of the branched covering.
//! * [`surgery`]: the glued curve with cusps `z1^k = z2^(k+1)` at every
//!   integer `k >= 2`, its global section and per-region power bounds.
//! * [`nagata`]: square-zero (dual number) sections over the punctured line.
//! * [`cli`] and [`report`]: the `cusp` command-line surface.

pub mod cli;
pub mod coeff;
pub mod curve;
mod error;
pub mod germ;
pub mod nagata;
pub mod report;
pub mod semigroup;
pub mod surgery;

pub use coeff::Coefficient;
pub use curve::{Axis, CuspCurve, RadoGerm, WeierstrassPoly};
pub use error::{Error, Result};
pub use germ::{Decision, LaurentGerm};
pub use nagata::{DualSection, LaurentObject};
pub use semigroup::NumericalSemigroup;
pub use surgery::{GlobalSection, Site, SurgeryCurve};
