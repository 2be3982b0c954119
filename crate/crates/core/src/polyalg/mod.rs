//! Exact scalars and binary-form algebra: the substrate everything else
//! computes on.

pub mod biform;
pub mod field;
pub mod matrix;
pub mod modular;
pub mod point;
pub mod resultant;
pub mod roots;
pub mod unipoly;

pub use biform::BiForm;
pub use field::{q, q2, Field, Fp, Modulus, Rational};
pub use point::{parse_scalar, ProjPoint};
pub use resultant::{discriminant, resultant, squarefree, DiscRoute, Discriminant};
pub use roots::rational_roots;
pub use unipoly::UniPoly;

/// `(F_X, F_Y)`.
pub fn partials<T: Field>(f: &BiForm<T>) -> (BiForm<T>, BiForm<T>) {
    f.partials()
}

/// Monic gcd of two univariate polynomials.
pub fn gcd<T: Field>(p: &UniPoly<T>, q: &UniPoly<T>) -> UniPoly<T> {
    p.gcd(q)
}
