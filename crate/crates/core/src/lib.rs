//! Exact computation of the partial-derivative dynamical systems
//! `phi_F = (F_Y, -F_X)` on the projective line, their PGL2 moduli,
//! periodic-point polynomials, modified Newton maps and the Lattes maps of
//! elliptic curves.
//!
//! Everything is generic over an exact [`Field`]; the aliases below fix the
//! two fields the crate ships with.

pub mod checks;
pub mod dermap;
pub mod error;
pub mod lattes;
pub mod moduli;
pub mod polyalg;
pub mod random;

pub use error::{Error, Result};
pub use polyalg::{q, q2, BiForm, Field, Fp, Modulus, ProjPoint, Rational, UniPoly};

pub use dermap::{AffineMap, ProjMap};
pub use lattes::EllCurve;
pub use moduli::Moebius;

/// Rational binary forms.
pub type QForm = BiForm<Rational>;
/// Rational univariate polynomials.
pub type QPoly = UniPoly<Rational>;
/// Self-maps of P^1 over Q.
pub type QMap = ProjMap<Rational>;
/// Points of P^1(Q).
pub type QPoint = ProjPoint<Rational>;
/// Binary forms over a prime field.
pub type FpForm = BiForm<Fp>;
/// Univariate polynomials over a prime field.
pub type FpPoly = UniPoly<Fp>;
/// Self-maps of P^1 over a prime field.
pub type FpMap = ProjMap<Fp>;
