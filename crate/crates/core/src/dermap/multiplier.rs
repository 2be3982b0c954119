//! Multipliers of periodic points.
//!
//! A point at infinity is handled in the chart `t = Y/X` (the swap
//! `(X, Y) -> (Y, X)` followed by differentiation at 0), so the multiplier of
//! a cycle is the product of local derivatives between the charts of
//! consecutive orbit points.

use crate::dermap::maps::ProjMap;
use crate::error::{Error, Result};
use crate::polyalg::{rational_roots, BiForm, Field, ProjPoint, UniPoly};

/// Derivative of `phi` at `pt`, read in the charts of `pt` and `phi(pt)`.
pub fn local_derivative<T: Field>(phi: &ProjMap<T>, pt: &ProjPoint<T>) -> Result<T> {
    let ctx = phi.ctx();
    let image = phi.eval(pt)?;
    let (p, q, t0) = match pt.affine_value() {
        Some(x) => (phi.p().dehomogenize(), phi.q().dehomogenize(), x.clone()),
        None => (phi.p().swap().dehomogenize(), phi.q().swap().dehomogenize(), T::zero(ctx)),
    };
    let (num, den) = if image.is_infinity() { (q, p) } else { (p, q) };
    let dv = den.eval(&t0);
    let top = num.derivative().eval(&t0) * dv.clone() - num.eval(&t0) * den.derivative().eval(&t0);
    top.checked_div(&(dv.clone() * dv))
}

/// Orbit `pt, phi(pt), ..., phi^(n-1)(pt)`; fails unless `phi^n(pt) = pt`.
pub fn cycle<T: Field>(phi: &ProjMap<T>, pt: &ProjPoint<T>, n: usize) -> Result<Vec<ProjPoint<T>>> {
    let mut orbit = Vec::with_capacity(n);
    let mut cur = pt.clone();
    for _ in 0..n {
        orbit.push(cur.clone());
        cur = phi.eval(&cur)?;
    }
    if cur != *pt {
        return Err(Error::NotPeriodic { period: n });
    }
    Ok(orbit)
}

/// `(phi^n)'` at a point of period dividing `n`, by the chain rule.
pub fn multiplier<T: Field>(phi: &ProjMap<T>, pt: &ProjPoint<T>, n: usize) -> Result<T> {
    let ctx = phi.ctx().clone();
    cycle(phi, pt, n)?
        .iter()
        .try_fold(T::one(&ctx), |acc, p| Ok(acc * local_derivative(phi, p)?))
}

/// Multiplier along an affine orbit of `phi_F` from the product
/// `prod (1 - d + d f f'' / f'^2)` over `x, phi(x), ..., phi^(n-1)(x)`.
/// `None` when the orbit leaves the affine line.
pub fn product_formula<T: Field>(f: &BiForm<T>, x0: &T, n: usize) -> Option<T> {
    let ctx = f.ctx();
    let poly = f.dehomogenize();
    let d1 = poly.derivative();
    let d2 = d1.derivative();
    let d = T::from_i64(ctx, f.degree() as i64);
    let one = T::one(ctx);
    let mut acc = one.clone();
    let mut x = x0.clone();
    for _ in 0..n {
        let fv = poly.eval(&x);
        let f1 = d1.eval(&x);
        let f2 = d2.eval(&x);
        let ratio = (fv.clone() * f2).checked_div(&(f1.clone() * f1.clone())).ok()?;
        acc = acc * (one.clone() - d.clone() + d.clone() * ratio);
        // x <- x - d f / f'
        x = x.clone() - d.clone() * fv.checked_div(&f1).ok()?;
    }
    Some(acc)
}

/// A fixed point with its multiplicity as a root of the fixed-point form and
/// its multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint<T: Field> {
    pub point: ProjPoint<T>,
    pub multiplicity: usize,
    pub multiplier: T,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointReport<T: Field> {
    pub points: Vec<FixedPoint<T>>,
    /// Every fixed point (with multiplicity) is defined over the base field.
    pub all_rational: bool,
    /// `sum 1/(1 - lambda_i)` when all fixed points are rational and simple.
    pub relation_sum: Option<T>,
}

pub fn fixed_points<T: Field>(phi: &ProjMap<T>) -> Result<FixedPointReport<T>> {
    let roots = rational_roots(&phi.fixed_point_form())?;
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    let all_rational = total == phi.degree() + 1;
    let mut points = Vec::with_capacity(roots.len());
    for (point, multiplicity) in roots {
        let multiplier = multiplier(phi, &point, 1)?;
        points.push(FixedPoint { point, multiplicity, multiplier });
    }
    let ctx = phi.ctx();
    let relation_sum = if all_rational && points.iter().all(|p| p.multiplicity == 1) {
        points.iter().try_fold(T::zero(ctx), |acc, fp| {
            let denom = T::one(ctx) - fp.multiplier.clone();
            denom.inv().ok().map(|inv| acc + inv)
        })
    } else {
        None
    };
    Ok(FixedPointReport { points, all_rational, relation_sum })
}

/// The product of the linear factors for the given roots, as a univariate
/// polynomial (infinity contributes nothing).
pub fn affine_root_product<T: Field>(ctx: &T::Ctx, points: &[ProjPoint<T>]) -> UniPoly<T> {
    points
        .iter()
        .filter_map(|p| p.affine_value())
        .fold(UniPoly::one(ctx), |acc, r| &acc * &UniPoly::linear_root(r))
}
