//! Exact computations for finitely presented graded noncommutative algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact rationals, univariate rational functions, dense
//!   exact linear algebra.
//! - [`ncalg`]: free algebra arithmetic, presentations, per-degree quotient
//!   caches (bases, normal forms, Hilbert functions, minimal relations).
//! - [`normelem`]: normal elements, their twisting automorphisms, and
//!   Heisenberg-type normal element checks.
//! - [`construct`]: quasi-Veronese algebras, Zhang twists, and the Weyl
//!   witness identity.
//! - [`pointgeo`]: truncated point modules as projective point sequences,
//!   extension fibers, torsion-free search, skew point varieties.
//! - [`colorlie`]: color Lie algebras, PBW arithmetic, presentations of
//!   enveloping algebras, and the color Koszul complex.
//! - [`io`]: the algebra and color Lie algebra file formats.
//!
//! Everything is generic over [`Scalar`]; the aliases below fix the scalar
//! to the rationals.

pub mod colorlie;
pub mod construct;
pub mod error;
pub mod io;
pub mod ncalg;
pub mod normelem;
pub mod pointgeo;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{RatFunc, Rational, Scalar};

/// Free algebra element over the rationals.
pub type QPoly = ncalg::NCPoly<Rational>;
/// Presentation over the rationals.
pub type QPresentation = ncalg::Presentation<Rational>;
/// Quotient cache over the rationals.
pub type QCache = ncalg::QuotientCache<Rational>;
/// Matrix over the rationals.
pub type QMatrix = scalar::Matrix<Rational>;
/// Free algebra element over rational functions in `t`.
pub type TPoly = ncalg::NCPoly<RatFunc>;
/// Presentation over rational functions in `t`.
pub type TPresentation = ncalg::Presentation<RatFunc>;
/// Color Lie algebra over the rationals.
pub type QColorLie = colorlie::ColorLieAlgebra<Rational>;
