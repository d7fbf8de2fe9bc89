//! Exact-arithmetic toolkit for hyperelliptic curve families, their nodal
//! degenerations, pencils of such curves viewed as fibred surfaces, and the
//! numerical geography of fibred surfaces.
//!
//! Every computation runs over ℚ (or a number field ℚ[λ]/(m)); nothing is
//! approximated.

pub mod curves;
pub mod error;
pub mod geography;
pub mod literal;
pub mod pencil;
pub mod poly;
pub mod rng;
pub mod systems;

pub use error::{Error, Result};
pub use poly::{rat, BiPoly, Rational, UniPoly};
