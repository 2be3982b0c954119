//! The maps `phi_F`, modified Newton maps, iteration, fixed and periodic
//! points with their multipliers.

mod maps;
mod multiplier;
mod newton;
mod phi;
mod psi;

pub use maps::{AffineMap, ProjMap, DEFAULT_SIZE_CAP};
pub use multiplier::{
    affine_root_product, cycle, fixed_points, local_derivative, multiplier, product_formula, FixedPoint,
    FixedPointReport,
};
pub use newton::{modified_newton, reconstruct, NewtonMap, Reconstruction, ReconstructionSource};
pub use phi::{affine_form, build_phi, char_divides_degree, fixed_point_form, res_disc_check, ResDisc};
pub use psi::{multiplier_charpoly, periodic_report, psi_sequence, PeriodicReport, PsiStep};
pub(crate) use psi::raw_derivative;

/// `phi^n`; refuses when `(deg phi)^n` exceeds `cap`.
pub fn iterate<T: crate::Field>(phi: &ProjMap<T>, n: usize, cap: usize) -> crate::Result<ProjMap<T>> {
    phi.iterate(n, cap)
}
