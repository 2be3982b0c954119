use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{BiForm, Field, ProjPoint, UniPoly};

/// Default bound on the degree of iterates and periodic polynomials.
pub const DEFAULT_SIZE_CAP: usize = 10_000;

/// A morphism `(X, Y) -> (P(X, Y), Q(X, Y))` of the projective line.
///
/// `P` and `Q` share a degree and have no common root. The pair is stored
/// in canonical projective form (content removed, and over Q the first
/// nonzero coefficient scanning `P` from `X^d` down, then `Q`, positive), so
/// scalar multiples compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap<T: Field> {
    p: BiForm<T>,
    q: BiForm<T>,
}

impl<T: Field> ProjMap<T> {
    pub fn new(p: BiForm<T>, q: BiForm<T>) -> Result<Self> {
        if p.degree() != q.degree() {
            return Err(Error::DegreeMismatch { left: p.degree(), right: q.degree() });
        }
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !coprime(&p, &q) {
            return Err(Error::NotAMorphism);
        }
        Ok(Self::from_coprime(p, q))
    }

    /// Normalizes a pair already known to be a morphism.
    pub(crate) fn from_coprime(p: BiForm<T>, q: BiForm<T>) -> Self {
        let mut scan = p.coeffs_descending();
        scan.extend(q.coeffs_descending());
        match T::primitive_scale(&scan) {
            Some(s) => ProjMap { p: p.scale(&s), q: q.scale(&s) },
            None => ProjMap { p, q },
        }
    }

    pub fn identity(ctx: &T::Ctx) -> Self {
        ProjMap {
            p: BiForm::linear(T::one(ctx), T::zero(ctx)),
            q: BiForm::linear(T::zero(ctx), T::one(ctx)),
        }
    }

    pub fn p(&self) -> &BiForm<T> {
        &self.p
    }

    pub fn q(&self) -> &BiForm<T> {
        &self.q
    }

    pub fn ctx(&self) -> &T::Ctx {
        self.p.ctx()
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ctx())
    }

    pub fn eval(&self, pt: &ProjPoint<T>) -> Result<ProjPoint<T>> {
        ProjPoint::new(self.p.eval_point(pt), self.q.eval_point(pt)).map_err(|_| Error::NotAMorphism)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let p = self.p.compose(&inner.p, &inner.q).expect("coordinate forms share a degree");
        let q = self.q.compose(&inner.p, &inner.q).expect("coordinate forms share a degree");
        Self::from_coprime(p, q)
    }

    /// The `n`-th iterate; refuses when its degree would exceed `cap`.
    pub fn iterate(&self, n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("iteration count must be positive".into()));
        }
        let degree = checked_degree_power(self.degree(), n, cap)?;
        debug_assert!(degree <= cap);
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc);
        }
        Ok(acc)
    }

    /// `Y P - X Q`, whose roots are exactly the fixed points.
    pub fn fixed_point_form(&self) -> BiForm<T> {
        &self.p.times_y() - &self.q.times_x()
    }

    /// The induced rational function on the affine line.
    pub fn to_affine(&self) -> AffineMap<T> {
        AffineMap::new(self.p.dehomogenize(), self.q.dehomogenize()).expect("morphisms dehomogenize to a fraction")
    }

    pub fn resultant(&self) -> T {
        crate::polyalg::resultant(&self.p, &self.q)
    }
}

/// `base^n` if it stays within `cap`.
pub(crate) fn checked_degree_power(base: usize, n: usize, cap: usize) -> Result<usize> {
    let mut degree = 1usize;
    for _ in 0..n {
        degree = degree.checked_mul(base).filter(|&d| d <= cap).ok_or(Error::SizeCapExceeded {
            degree: base.saturating_pow(n as u32),
            cap,
        })?;
    }
    Ok(degree)
}

pub(crate) fn coprime<T: Field>(p: &BiForm<T>, q: &BiForm<T>) -> bool {
    if p.is_zero() {
        return q.degree() == 0;
    }
    if q.is_zero() {
        return p.degree() == 0;
    }
    p.gcd(q).degree() == 0
}

impl<T: Field> fmt::Display for ProjMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// A reduced fraction `num(x) / den(x)`.
///
/// Used both for maps of the affine line and for their derivatives. Stored
/// in lowest terms with the same canonical scaling as [`ProjMap`] (scanning
/// the numerator from its top coefficient, then the denominator).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap<T: Field> {
    num: UniPoly<T>,
    den: UniPoly<T>,
}

impl<T: Field> AffineMap<T> {
    pub fn new(num: UniPoly<T>, den: UniPoly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero { context: "rational function denominator" });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        } else {
            (num, den)
        };
        let mut scan: Vec<T> = num.coeffs().iter().rev().cloned().collect();
        scan.extend(den.coeffs().iter().rev().cloned());
        let s = T::primitive_scale(&scan).expect("denominator is nonzero");
        Ok(AffineMap { num: num.scale(&s), den: den.scale(&s) })
    }

    pub fn num(&self) -> &UniPoly<T> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<T> {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        self.num.eval(x).checked_div(&self.den.eval(x)).ok()
    }

    /// `(num' den - num den') / den^2`, reduced.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Homogenizes to a morphism of degree `max(deg num, deg den)`.
    pub fn to_projective(&self) -> ProjMap<T> {
        let d = self.degree();
        let p = BiForm::homogenize(&self.num, d).expect("degree fits");
        let q = BiForm::homogenize(&self.den, d).expect("degree fits");
        ProjMap::from_coprime(p, q)
    }
}

impl<T: Field> fmt::Display for AffineMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, Rational};

    fn form(desc: &[i64]) -> BiForm<Rational> {
        BiForm::from_i64s_desc(&(), desc)
    }

    #[test]
    fn normalization_is_scale_free() {
        let a = ProjMap::new(form(&[0, -2]), form(&[-2, 0])).unwrap();
        let b = ProjMap::new(form(&[0, 1]), form(&[1, 0])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(Y, X)");
    }

    #[test]
    fn rejects_non_morphisms() {
        assert_eq!(ProjMap::new(form(&[1, -1, 0]), form(&[1, 0, -1])), Err(Error::NotAMorphism));
        assert!(matches!(ProjMap::new(form(&[1, 0]), form(&[1, 0, 0])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn involution_iterates_to_identity() {
        let phi = ProjMap::new(form(&[0, 1]), form(&[1, 0])).unwrap();
        assert!(phi.iterate(2, DEFAULT_SIZE_CAP).unwrap().is_identity());
        assert_eq!(phi.iterate(1, DEFAULT_SIZE_CAP).unwrap(), phi);
    }

    #[test]
    fn size_cap_is_enforced() {
        let phi = ProjMap::new(form(&[1, 0, 1]), form(&[0, 1, 0])).unwrap();
        assert_eq!(phi.iterate(4, 10), Err(Error::SizeCapExceeded { degree: 16, cap: 10 }));
        assert_eq!(phi.iterate(3, 10).unwrap().degree(), 8);
    }

    #[test]
    fn affine_round_trip() {
        let f = AffineMap::new(UniPoly::from_i64s(&(), &[1, 0, 1]), UniPoly::from_i64s(&(), &[0, 2])).unwrap();
        assert_eq!(f.to_string(), "(x^2 + 1)/(2*x)");
        assert_eq!(f.to_projective().to_affine(), f);
        assert_eq!(f.eval(&q(1)), Some(q(1)));
        assert_eq!(f.eval(&q(0)), None);
    }

    #[test]
    fn fraction_is_reduced() {
        // (x^2 - 1)/(x - 1) = x + 1
        let f = AffineMap::<Rational>::new(UniPoly::from_i64s(&(), &[-1, 0, 1]), UniPoly::from_i64s(&(), &[-1, 1])).unwrap();
        assert_eq!(f.num(), &UniPoly::from_i64s(&(), &[1, 1]));
        assert_eq!(f.den(), &UniPoly::from_i64s(&(), &[1]));
    }
}
