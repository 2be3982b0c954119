use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{Field, UniPoly};

/// The curve `y^2 = g(x) = x^3 + a x^2 + b x + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllCurve<T: Field> {
    a: T,
    b: T,
    c: T,
}

impl<T: Field> EllCurve<T> {
    /// Rejects characteristic 2 and 3 and singular cubics.
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let ch = T::characteristic(&a.ctx());
        if ch == 2 || ch == 3 {
            return Err(Error::UnsupportedCharacteristic { op: "elliptic curves", characteristic: ch });
        }
        let e = EllCurve { a, b, c };
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    pub fn from_i64s(ctx: &T::Ctx, a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(T::from_i64(ctx, a), T::from_i64(ctx, b), T::from_i64(ctx, c))
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn ctx(&self) -> T::Ctx {
        self.a.ctx()
    }

    fn n(&self, v: i64) -> T {
        T::from_i64(&self.ctx(), v)
    }

    pub fn g(&self) -> UniPoly<T> {
        UniPoly::new(&self.ctx(), vec![self.c.clone(), self.b.clone(), self.a.clone(), self.n(1)])
    }

    /// Discriminant of the cubic `g`.
    pub fn discriminant(&self) -> T {
        let (a, b, c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let n = |v| self.n(v);
        a.clone() * a.clone() * b.clone() * b.clone() - n(4) * b.pow(3) - n(4) * a.pow(3) * c.clone() - n(27) * c.clone() * c.clone()
            + n(18) * a * b * c
    }

    /// `j = 1728 * 4A^3 / (4A^3 + 27B^2)` for the short model `x^3 + Ax + B`
    /// obtained by `x -> x - a/3`.
    pub fn j_invariant(&self) -> Result<T> {
        let n = |v| self.n(v);
        let (a, b, c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let third = n(3).inv()?;
        let big_a = b.clone() - a.clone() * a.clone() * third.clone();
        let big_b = n(2) * a.pow(3) * n(27).inv()? - a * b * third + c;
        let a3 = n(4) * big_a.pow(3);
        (n(1728) * a3.clone()).checked_div(&(a3 + n(27) * big_b.clone() * big_b))
    }
}

impl<T: Field> fmt::Display for EllCurve<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.g())
    }
}

/// `even(x) + y * odd(x)` in the coordinate ring, with `y^2 = g(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoly<T: Field> {
    pub even: UniPoly<T>,
    pub odd: UniPoly<T>,
}

impl<T: Field> CurvePoly<T> {
    pub fn plain(even: UniPoly<T>) -> Self {
        let odd = UniPoly::zero(even.ctx());
        CurvePoly { even, odd }
    }

    pub fn with_y(odd: UniPoly<T>) -> Self {
        let even = UniPoly::zero(odd.ctx());
        CurvePoly { even, odd }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// The polynomial in `x` alone, when there is no `y` part.
    pub fn as_plain(&self) -> Option<&UniPoly<T>> {
        self.odd.is_zero().then_some(&self.even)
    }

    /// The factor multiplying `y`, when there is no plain part.
    pub fn x_part(&self) -> &UniPoly<T> {
        if self.odd.is_zero() {
            &self.even
        } else {
            &self.odd
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CurvePoly { even: &self.even + &other.even, odd: &self.odd + &other.odd }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CurvePoly { even: &self.even - &other.even, odd: &self.odd - &other.odd }
    }

    pub fn mul(&self, other: &Self, g: &UniPoly<T>) -> Self {
        let even = &(&self.even * &other.even) + &(&(&self.odd * &other.odd) * g);
        let odd = &(&self.even * &other.odd) + &(&self.odd * &other.even);
        CurvePoly { even, odd }
    }

    pub fn pow(&self, e: usize, g: &UniPoly<T>) -> Self {
        let one = CurvePoly::plain(UniPoly::one(self.even.ctx()));
        (0..e).fold(one, |acc, _| acc.mul(self, g))
    }

    /// Exact division by `2y`: `(e + y o) / 2y = o/2 + y e / (2g)`.
    pub fn div_2y(&self, g: &UniPoly<T>) -> Result<Self> {
        let ctx = self.even.ctx();
        let half = T::from_i64(ctx, 2).inv()?;
        let e = self.even.exact_div(g).ok_or(Error::InexactDivision { step: 0 })?;
        Ok(CurvePoly { even: self.odd.scale(&half), odd: e.scale(&half) })
    }
}

impl<T: Field> fmt::Display for CurvePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "y*({})", self.odd),
            (false, false) => write!(f, "{} + y*({})", self.even, self.odd),
        }
    }
}

/// `Psi_0, ..., Psi_m`.
pub fn division_polynomials<T: Field>(e: &EllCurve<T>, m: usize) -> Vec<CurvePoly<T>> {
    let ctx = e.ctx();
    let n = |v: i64| T::from_i64(&ctx, v);
    let (a, b, c) = (e.a.clone(), e.b.clone(), e.c.clone());
    let g = e.g();

    let b2 = n(4) * a.clone();
    let b4 = n(2) * b.clone();
    let b6 = n(4) * c.clone();
    let b8 = n(4) * a.clone() * c.clone() - b.clone() * b.clone();
    let psi3 = UniPoly::new(&ctx, vec![b8.clone(), n(12) * c, n(6) * b, n(4) * a, n(3)]);
    let psi4 = UniPoly::new(
        &ctx,
        vec![
            b4.clone() * b8.clone() - b6.clone() * b6.clone(),
            b2.clone() * b8.clone() - b4.clone() * b6.clone(),
            n(10) * b8,
            n(10) * b6,
            n(5) * b4,
            b2,
            n(2),
        ],
    )
    .scale(&n(2));

    let mut psi = vec![
        CurvePoly::plain(UniPoly::zero(&ctx)),
        CurvePoly::plain(UniPoly::one(&ctx)),
        CurvePoly::with_y(UniPoly::constant(n(2))),
        CurvePoly::plain(psi3),
        CurvePoly::with_y(psi4),
    ];
    while psi.len() <= m {
        let idx = psi.len();
        let k = idx / 2;
        let next = if idx % 2 == 1 {
            psi[k + 2]
                .mul(&psi[k].pow(3, &g), &g)
                .sub(&psi[k - 1].mul(&psi[k + 1].pow(3, &g), &g))
        } else {
            let inner = psi[k + 2]
                .mul(&psi[k - 1].pow(2, &g), &g)
                .sub(&psi[k - 2].mul(&psi[k + 1].pow(2, &g), &g));
            psi[k].mul(&inner, &g).div_2y(&g).expect("Psi_k (..) is divisible by 2y")
        };
        psi.push(next);
    }
    psi.truncate(m + 1);
    psi
}

pub fn division_polynomial<T: Field>(e: &EllCurve<T>, m: usize) -> CurvePoly<T> {
    division_polynomials(e, m).pop().expect("at least Psi_0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, Fp, Modulus, Rational};

    fn curve(a: i64, b: i64, c: i64) -> EllCurve<Rational> {
        EllCurve::from_i64s(&(), a, b, c).unwrap()
    }

    fn qp(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_i64s(&(), c)
    }

    #[test]
    fn rejects_singular_and_small_characteristic() {
        assert_eq!(EllCurve::<Rational>::from_i64s(&(), 0, 0, 0), Err(Error::SingularCurve));
        assert_eq!(EllCurve::<Rational>::from_i64s(&(), 0, -3, 2), Err(Error::SingularCurve));
        let p3 = Modulus::new(3).unwrap();
        assert!(matches!(EllCurve::<Fp>::from_i64s(&p3, 0, 1, 1), Err(Error::UnsupportedCharacteristic { .. })));
    }

    #[test]
    fn j_invariants() {
        assert_eq!(curve(0, -1, 0).j_invariant().unwrap(), q(1728));
        assert_eq!(curve(0, 0, 1).j_invariant().unwrap(), q(0));
        assert_eq!(curve(0, 2, 0).discriminant(), q(-32));
    }

    #[test]
    fn base_cases() {
        let e = curve(0, -1, 0);
        let psi = division_polynomials(&e, 4);
        assert_eq!(psi[1], CurvePoly::plain(qp(&[1])));
        assert_eq!(psi[2], CurvePoly::with_y(qp(&[2])));
        assert_eq!(psi[3], CurvePoly::plain(qp(&[-1, 0, -6, 0, 3])));
    }

    #[test]
    fn psi3_is_2ggpp_minus_gp_squared() {
        let e = curve(2, -3, 5);
        let g = e.g();
        let gp = g.derivative();
        let closed = &(&(&g * &gp.derivative()) * &qp(&[2])) - &(&gp * &gp);
        assert_eq!(division_polynomial(&e, 3).as_plain(), Some(&closed));
    }

    #[test]
    fn degree_law() {
        let e = curve(1, -2, 3);
        for (m, p) in division_polynomials(&e, 9).iter().enumerate().skip(1) {
            let expected = if m % 2 == 1 { (m * m - 1) / 2 } else { (m * m - 4) / 2 };
            assert_eq!(p.x_part().degree(), Some(expected), "m = {m}");
            assert_eq!(p.as_plain().is_some(), m % 2 == 1);
        }
    }

    #[test]
    fn psi4_roots_are_points_whose_double_is_two_torsion() {
        // On y^2 = x^3 - x the 2-torsion x-coordinates are 0, +-1; a point P
        // has exact order 4 iff x(2P) is one of them, x(2P) = (x^2+1)^2/(4(x^3-x)).
        let e = curve(0, -1, 0);
        let psi4 = division_polynomial(&e, 4);
        let quotient = psi4.odd.scale(&q(1).checked_div(&q(2)).unwrap());
        let num = qp(&[1, 0, 2, 0, 1]);
        let den = qp(&[0, -4, 0, 4]);
        let oracle = [q(0), q(1), q(-1)]
            .iter()
            .map(|t| &num - &den.scale(t))
            .fold(qp(&[1]), |acc, p| &acc * &p);
        assert_eq!(quotient.monic().unwrap(), oracle.squarefree_part().monic().unwrap());
    }
}
