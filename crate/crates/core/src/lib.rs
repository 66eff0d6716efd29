//! Classification of algebraic Z^d-dynamical systems defined by integer
//! Laurent polynomials.
//!
//! A nonzero `f` in `Z[u1, u1^-1, ..., ud, ud^-1]` cuts out a closed
//! shift-invariant subgroup of the full torus shift via the relation
//! `sum_m f_m x(n + m) = 0`. This crate decides, exactly where possible and
//! with certified numerics otherwise, whether that system is connected,
//! mixing, and expansive, computes its topological entropy `|log M(f)|`
//! through the Mahler measure, and combines the answers into a
//! surjunctivity verdict (every injective equivariant continuous self-map
//! is surjective). Alongside the classifier, [`shift`] holds exact finite
//! models: the Σ subshift with its injective-not-surjective map, mod-p
//! periodic-point counting, and image-chain stabilization.

pub mod classify;
pub mod error;
pub mod laurent;
pub mod parse;
pub mod roots;
pub mod shift;
pub mod torus;
pub mod univariate;

pub use classify::{analyze, AnalyzeConfig, PropertyReport, SurjunctivityVerdict};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial};
pub use parse::{format_poly, parse_poly, PolySource};
pub use univariate::UnivariateIntPoly;
