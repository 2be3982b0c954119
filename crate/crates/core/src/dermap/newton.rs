//! Modified Newton maps `x - r f(x)/f'(x)` and the inverse problem of
//! rebuilding a map from its fixed points.

use crate::dermap::maps::{AffineMap, ProjMap};
use crate::dermap::multiplier::affine_root_product;
use crate::dermap::phi::build_phi;
use crate::error::{Error, Result};
use crate::polyalg::{BiForm, Field, ProjPoint, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonMap<T: Field> {
    pub map: AffineMap<T>,
    /// `1 - r`, shared by every root of `f`.
    pub root_multiplier: T,
    /// `deg f / (deg f - r)`; `None` when `r = deg f` and infinity is not fixed.
    pub infinity_multiplier: Option<T>,
}

impl<T: Field> NewtonMap<T> {
    pub fn r_equals_degree(&self) -> bool {
        self.infinity_multiplier.is_none()
    }
}

pub fn modified_newton<T: Field>(f: &UniPoly<T>, r: &T) -> Result<NewtonMap<T>> {
    let ctx = f.ctx();
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg < 2 {
        return Err(Error::DegreeTooSmall { op: "modified Newton", min: 2, got: deg });
    }
    if r.is_zero() {
        return Err(Error::InvalidParameter("r must be nonzero".into()));
    }
    let fp = f.derivative();
    if f.gcd(&fp).degree() != Some(0) {
        return Err(Error::MultipleRoots);
    }
    let num = &(&UniPoly::x(ctx) * &fp) - &f.scale(r);
    let map = AffineMap::new(num, fp)?;
    let d = T::from_i64(ctx, deg as i64);
    let gap = d.clone() - r.clone();
    let infinity_multiplier = if gap.is_zero() { None } else { Some(d.checked_div(&gap)?) };
    Ok(NewtonMap { map, root_multiplier: T::one(ctx) - r.clone(), infinity_multiplier })
}

/// What a reconstruction was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReconstructionSource<T: Field> {
    /// `F = prod (b_i X - a_i Y)`, the map being `phi_F`.
    Form(BiForm<T>),
    /// `f = prod (x - a_i)` over the affine points, the map being the
    /// modified Newton map of `f`.
    Newton(UniPoly<T>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction<T: Field> {
    pub source: ReconstructionSource<T>,
    pub map: ProjMap<T>,
    pub root_multiplier: T,
    pub infinity_multiplier: Option<T>,
}

/// The map whose fixed points are exactly `points`, each affine one with
/// multiplier `1 - r`.
///
/// Without infinity among the points, `r` must equal their number and the
/// answer is `phi_F`. With infinity, the answer is the modified Newton map
/// of the affine part, which needs `r != deg f`.
pub fn reconstruct<T: Field>(ctx: &T::Ctx, points: &[ProjPoint<T>], r: &T) -> Result<Reconstruction<T>> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoints);
        }
    }
    if points.iter().any(|p| p.is_infinity()) {
        let f = affine_root_product(ctx, points);
        let deg = f.degree().unwrap_or(0);
        if T::from_i64(ctx, deg as i64) == *r {
            return Err(Error::InfinityNotFixed { degree: deg });
        }
        let newton = modified_newton(&f, r)?;
        return Ok(Reconstruction {
            map: newton.map.to_projective(),
            source: ReconstructionSource::Newton(f),
            root_multiplier: newton.root_multiplier,
            infinity_multiplier: newton.infinity_multiplier,
        });
    }
    if T::from_i64(ctx, points.len() as i64) != *r {
        return Err(Error::PointCountMismatch { expected: r.to_string(), r: r.to_string(), got: points.len() });
    }
    let form = BiForm::from_roots(ctx, points);
    let map = build_phi(&form)?;
    Ok(Reconstruction {
        map,
        source: ReconstructionSource::Form(form),
        root_multiplier: T::one(ctx) - r.clone(),
        infinity_multiplier: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dermap::multiplier::fixed_points;
    use crate::dermap::phi::affine_form;
    use crate::polyalg::{q, q2, Rational};

    fn poly(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_i64s(&(), c)
    }

    fn pts(xs: &[&str]) -> Vec<ProjPoint<Rational>> {
        xs.iter().map(|s| ProjPoint::parse(&(), s).unwrap()).collect()
    }

    #[test]
    fn classical_newton_on_x2_minus_1() {
        let n = modified_newton(&poly(&[-1, 0, 1]), &q(1)).unwrap();
        assert_eq!(n.map.to_string(), "(x^2 + 1)/(2*x)");
        assert_eq!(n.root_multiplier, q(0));
        assert_eq!(n.infinity_multiplier, Some(q(2)));
        let report = fixed_points(&n.map.to_projective()).unwrap();
        for fp in report.points.iter().filter(|p| !p.point.is_infinity()) {
            assert_eq!(fp.multiplier, q(0));
        }
    }

    #[test]
    fn r_equal_to_degree_is_phi() {
        let f = poly(&[0, 2, -3, 1]);
        let n = modified_newton(&f, &q(4)).unwrap();
        let phi_form = BiForm::from_i64s_desc(&(), &[0, 1, -3, 2, 0]);
        assert_eq!(n.map, affine_form(&phi_form).unwrap());
        let n = modified_newton(&f, &q(3)).unwrap();
        assert!(n.r_equals_degree());
    }

    #[test]
    fn cubic_with_r_one_has_three_halves_at_infinity() {
        let n = modified_newton(&poly(&[0, 2, -3, 1]), &q(1)).unwrap();
        assert_eq!(n.infinity_multiplier, Some(q2(3, 2)));
    }

    #[test]
    fn rejects_bad_newton_input() {
        assert_eq!(modified_newton(&poly(&[1, 2, 1]), &q(1)), Err(Error::MultipleRoots));
        assert!(modified_newton(&poly(&[-1, 0, 1]), &q(0)).is_err());
        assert!(matches!(modified_newton(&poly(&[1, 1]), &q(1)), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn reconstruct_examples() {
        let phi = build_phi(&BiForm::from_i64s_desc(&(), &[0, 1, -3, 2, 0])).unwrap();
        let rec = reconstruct(&(), &pts(&["0", "1", "2", "inf"]), &q(4)).unwrap();
        assert_eq!(rec.map, phi);
        assert_eq!(rec.infinity_multiplier, Some(q(-3)));

        let rec = reconstruct(&(), &pts(&["1", "-1"]), &q(2)).unwrap();
        assert_eq!(rec.map.to_affine().to_string(), "(1)/(x)");

        assert_eq!(reconstruct(&(), &pts(&["0", "1", "inf"]), &q(2)), Err(Error::InfinityNotFixed { degree: 2 }));
        assert_eq!(reconstruct(&(), &pts(&["0", "0"]), &q(2)), Err(Error::DuplicatePoints));
        assert!(matches!(reconstruct(&(), &pts(&["0", "1"]), &q(3)), Err(Error::PointCountMismatch { .. })));
    }
}
