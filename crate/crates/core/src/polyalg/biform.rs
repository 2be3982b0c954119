use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polyalg::field::Field;
use crate::polyalg::point::ProjPoint;
use crate::polyalg::unipoly::{render_terms, UniPoly};

/// A homogeneous binary form `a_d X^d + a_{d-1} X^{d-1} Y + ... + a_0 Y^d`.
///
/// Stored lowest X-power first, so `coeff(i)` is the coefficient of
/// `X^i Y^(d-i)` and the storage coincides with the dehomogenization
/// `F(x, 1)`. The zero form of a given degree is representable (partials
/// of a pure power produce one) but most operations reject it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiForm<T: Field> {
    coeffs: Vec<T>,
    ctx: T::Ctx,
}

impl<T: Field> BiForm<T> {
    /// From `a_0, a_1, ..., a_d`. Degree is `coeffs.len() - 1`.
    pub fn from_ascending(ctx: &T::Ctx, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BiForm { coeffs, ctx: ctx.clone() }
    }

    /// From `a_d, a_{d-1}, ..., a_0`, the order used when writing forms out.
    pub fn from_descending(ctx: &T::Ctx, mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::from_ascending(ctx, coeffs)
    }

    pub fn from_i64s_desc(ctx: &T::Ctx, coeffs: &[i64]) -> Self {
        Self::from_descending(ctx, coeffs.iter().map(|&c| T::from_i64(ctx, c)).collect())
    }

    pub fn zero(ctx: &T::Ctx, degree: usize) -> Self {
        BiForm { coeffs: vec![T::zero(ctx); degree + 1], ctx: ctx.clone() }
    }

    /// The linear form `a X + b Y`.
    pub fn linear(a: T, b: T) -> Self {
        let ctx = a.ctx();
        Self::from_ascending(&ctx, vec![b, a])
    }

    /// `b X - a Y`, the linear form vanishing at the point `(a, b)`.
    pub fn vanishing_at(p: &ProjPoint<T>) -> Self {
        Self::linear(p.y().clone(), -p.x().clone())
    }

    /// Homogenizes `f` to degree `d >= deg f`.
    pub fn homogenize(f: &UniPoly<T>, d: usize) -> Result<Self> {
        if let Some(df) = f.degree() {
            if df > d {
                return Err(Error::DegreeMismatch { left: df, right: d });
            }
        }
        let coeffs = (0..=d).map(|i| f.coeff(i)).collect();
        Ok(Self::from_ascending(f.ctx(), coeffs))
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `X^i Y^(d-i)`.
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs_ascending(&self) -> &[T] {
        &self.coeffs
    }

    /// `a_d, ..., a_0`.
    pub fn coeffs_descending(&self) -> Vec<T> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn leading(&self) -> &T {
        &self.coeffs[self.degree()]
    }

    /// `f(x) = F(x, 1)`.
    pub fn dehomogenize(&self) -> UniPoly<T> {
        UniPoly::new(&self.ctx, self.coeffs.clone())
    }

    /// Multiplicity of the root at infinity (the power of `Y` dividing F).
    pub fn infinity_multiplicity(&self) -> usize {
        let d = self.degree();
        match self.dehomogenize().degree() {
            Some(df) => d - df,
            None => d,
        }
    }

    /// `(F_X, F_Y)`, each of degree `d - 1` (zero for constant forms).
    pub fn partials(&self) -> (Self, Self) {
        let d = self.degree();
        if d == 0 {
            return (Self::zero(&self.ctx, 0), Self::zero(&self.ctx, 0));
        }
        let fx = (1..=d).map(|i| T::from_i64(&self.ctx, i as i64) * self.coeffs[i].clone()).collect();
        let fy = (0..d).map(|i| T::from_i64(&self.ctx, (d - i) as i64) * self.coeffs[i].clone()).collect();
        (Self::from_ascending(&self.ctx, fx), Self::from_ascending(&self.ctx, fy))
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        // Horner in x; a_i picks up y^(d-i) as it enters.
        let d = self.degree();
        let mut acc = self.coeffs[d].clone();
        let mut ypow = T::one(&self.ctx);
        for i in (0..d).rev() {
            ypow = ypow * y.clone();
            acc = acc * x.clone() + self.coeffs[i].clone() * ypow.clone();
        }
        acc
    }

    pub fn eval_point(&self, p: &ProjPoint<T>) -> T {
        self.eval(p.x(), p.y())
    }

    /// `F(A(x), B(x))` for univariate `A`, `B`.
    pub fn eval_polys(&self, a: &UniPoly<T>, b: &UniPoly<T>) -> UniPoly<T> {
        let d = self.degree();
        let apow = powers(a, d, UniPoly::one(&self.ctx), |u, v| u * v);
        let bpow = powers(b, d, UniPoly::one(&self.ctx), |u, v| u * v);
        let mut acc = UniPoly::zero(&self.ctx);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&apow[i] * &bpow[d - i]).scale(c);
        }
        acc
    }

    /// `F(P, Q)` for forms `P`, `Q` of a common degree `e`; degree `d*e`.
    pub fn compose(&self, p: &Self, q: &Self) -> Result<Self> {
        if p.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: p.degree(), right: q.degree() });
        }
        let d = self.degree();
        let e = p.degree();
        let ppow = powers(p, d, Self::one(&self.ctx), |u, v| u * v);
        let qpow = powers(q, d, Self::one(&self.ctx), |u, v| u * v);
        let mut acc = Self::zero(&self.ctx, d * e);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&ppow[i] * &qpow[d - i]).scale(c);
        }
        Ok(acc)
    }

    /// `F(aX + bY, cX + dY)`.
    pub fn substitute(&self, a: &T, b: &T, c: &T, d: &T) -> Self {
        let l1 = Self::linear(a.clone(), b.clone());
        let l2 = Self::linear(c.clone(), d.clone());
        self.compose(&l1, &l2).expect("linear forms share a degree")
    }

    /// `F(Y, X)`.
    pub fn swap(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_ascending(&self.ctx, coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_ascending(&self.ctx, self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// The constant form 1 of degree 0.
    pub fn one(ctx: &T::Ctx) -> Self {
        Self::from_ascending(ctx, vec![T::one(ctx)])
    }

    /// `X * self`.
    pub fn times_x(&self) -> Self {
        let mut coeffs = vec![T::zero(&self.ctx)];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_ascending(&self.ctx, coeffs)
    }

    /// `Y * self`.
    pub fn times_y(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(T::zero(&self.ctx));
        Self::from_ascending(&self.ctx, coeffs)
    }

    /// Homogeneous gcd, normalized to have a monic dehomogenized part.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let ye = self.infinity_multiplicity().min(other.infinity_multiplicity());
        let dg = g.degree().unwrap_or(0);
        Self::homogenize(&g, dg + ye).expect("degree fits")
    }

    /// Exact division by a nonzero form.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || divisor.degree() > self.degree() {
            return None;
        }
        let d = self.degree() - divisor.degree();
        if self.is_zero() {
            return Some(Self::zero(&self.ctx, d));
        }
        if divisor.infinity_multiplicity() > self.infinity_multiplicity() {
            return None;
        }
        let quo = self.dehomogenize().exact_div(&divisor.dehomogenize())?;
        Self::homogenize(&quo, d).ok()
    }

    /// The scalar `s` with `other = s * self`, if one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<T> {
        if self.degree() != other.degree() {
            return None;
        }
        let i = self.coeffs.iter().position(|c| !c.is_zero())?;
        let s = other.coeffs[i].checked_div(&self.coeffs[i]).ok()?;
        (self.scale(&s) == *other).then_some(s)
    }

    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        !self.is_zero() && other.ratio_to(self).is_some_and(|s| !s.is_zero())
    }

    /// Canonical representative of the projective class (content removed).
    pub fn normalized(&self) -> Self {
        match T::primitive_scale(&self.coeffs_descending()) {
            Some(s) => self.scale(&s),
            None => self.clone(),
        }
    }

    /// Product of the linear forms vanishing at `points`.
    pub fn from_roots(ctx: &T::Ctx, points: &[ProjPoint<T>]) -> Self {
        points.iter().fold(Self::one(ctx), |acc, p| &acc * &Self::vanishing_at(p))
    }
}

fn powers<P: Clone>(base: &P, n: usize, one: P, mul: impl Fn(&P, &P) -> P) -> Vec<P> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(one);
    for i in 0..n {
        let next = mul(&out[i], base);
        out.push(next);
    }
    out
}

impl<T: Field> fmt::Display for BiForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let terms: Vec<(T, Vec<(String, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), vec![("X".to_string(), i), ("Y".to_string(), d - i)]))
            .collect();
        f.write_str(&render_terms(&terms, &self.ctx))
    }
}

impl<T: Field> Add for &BiForm<T> {
    type Output = BiForm<T>;
    fn add(self, rhs: &BiForm<T>) -> BiForm<T> {
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degrees");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        BiForm::from_ascending(&self.ctx, coeffs)
    }
}

impl<T: Field> Sub for &BiForm<T> {
    type Output = BiForm<T>;
    fn sub(self, rhs: &BiForm<T>) -> BiForm<T> {
        assert_eq!(self.degree(), rhs.degree(), "subtracting forms of different degrees");
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        BiForm::from_ascending(&self.ctx, coeffs)
    }
}

impl<T: Field> Mul for &BiForm<T> {
    type Output = BiForm<T>;
    fn mul(self, rhs: &BiForm<T>) -> BiForm<T> {
        let mut coeffs = vec![T::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BiForm::from_ascending(&self.ctx, coeffs)
    }
}

impl<T: Field> Neg for &BiForm<T> {
    type Output = BiForm<T>;
    fn neg(self) -> BiForm<T> {
        BiForm::from_ascending(&self.ctx, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::field::{q, Fp, Modulus, Rational};

    fn form(desc: &[i64]) -> BiForm<Rational> {
        BiForm::from_i64s_desc(&(), desc)
    }

    #[test]
    fn partials_examples() {
        // X^2 - Y^2 -> (2X, -2Y)
        let (fx, fy) = form(&[1, 0, -1]).partials();
        assert_eq!(fx, form(&[2, 0]));
        assert_eq!(fy, form(&[0, -2]));
        // X^3 Y - 3 X^2 Y^2 + 2 X Y^3
        let (fx, fy) = form(&[0, 1, -3, 2, 0]).partials();
        assert_eq!(fx, form(&[0, 3, -6, 2]));
        assert_eq!(fy, form(&[1, -6, 6, 0]));
    }

    #[test]
    fn partials_in_characteristic_two() {
        let p = Modulus::new(2).unwrap();
        let f = BiForm::<Fp>::from_i64s_desc(&p, &[1, 1, 1]);
        let (fx, fy) = f.partials();
        assert_eq!(fx, BiForm::from_i64s_desc(&p, &[0, 1]));
        assert_eq!(fy, BiForm::from_i64s_desc(&p, &[1, 0]));
    }

    #[test]
    fn display_and_eval() {
        let f = form(&[0, 1, -3, 2, 0]);
        assert_eq!(f.to_string(), "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3");
        assert_eq!(f.eval(&q(2), &q(1)), q(0));
        assert_eq!(f.eval(&q(3), &q(1)), q(6));
        assert_eq!(f.eval(&q(1), &q(0)), q(0));
    }

    #[test]
    fn substitution_matches_pointwise_evaluation() {
        let f = form(&[2, -1, 0, 5]);
        let (a, b, c, d) = (q(1), q(2), q(-3), q(1));
        let g = f.substitute(&a, &b, &c, &d);
        for (x, y) in [(q(1), q(0)), (q(2), q(5)), (q(-1), q(3))] {
            let lhs = g.eval(&x, &y);
            let rhs = f.eval(&(a.clone() * x.clone() + b.clone() * y.clone()), &(c.clone() * x + d.clone() * y));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn homogeneous_gcd_tracks_infinity() {
        let f = form(&[0, 1, -1]); // XY - Y^2 = Y(X - Y)
        let g = form(&[0, 1, 0]); // XY
        assert_eq!(f.gcd(&g), form(&[0, 1]));
        let h = form(&[1, -1, 0]); // X^2 - XY = X(X - Y)
        assert_eq!(f.gcd(&h), form(&[1, -1]));
    }

    #[test]
    fn infinity_multiplicity_counts_y_power() {
        assert_eq!(form(&[0, 0, 1, 1]).infinity_multiplicity(), 2);
        assert_eq!(form(&[1, 0, 0]).infinity_multiplicity(), 0);
    }
}
