use std::fmt;
use std::hash::{Hash, Hasher};

use crate::dermap::ProjMap;
use crate::error::{Error, Result};
use crate::polyalg::{BiForm, Field, ProjPoint};

/// An element of PGL2 acting by `(x, y) -> (a x + b y, c x + d y)`.
///
/// The matrix is kept as given, since substitution into a form depends on
/// the representative (`F ∘ g` picks up `s^d` when `g` is scaled by `s`).
/// Equality and hashing use the canonical representative whose first
/// nonzero entry is 1, so scalar multiples compare equal.
#[derive(Clone, Debug)]
pub struct Moebius<T: Field> {
    a: T,
    b: T,
    c: T,
    d: T,
}

impl<T: Field> Moebius<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if det.is_zero() {
            return Err(Error::InvalidParameter("Moebius matrix is singular".into()));
        }
        Ok(Moebius { a, b, c, d })
    }

    /// The representative whose first nonzero entry is 1.
    pub fn canonical(&self) -> [T; 4] {
        let e = [&self.a, &self.b, &self.c, &self.d];
        let s = e.iter().find(|x| !x.is_zero()).expect("nonzero determinant").inv().expect("nonzero");
        e.map(|x| x.clone() * s.clone())
    }

    /// The same class with its canonical matrix.
    pub fn normalized(&self) -> Self {
        let [a, b, c, d] = self.canonical();
        Moebius { a, b, c, d }
    }

    pub fn from_i64s(ctx: &T::Ctx, e: [i64; 4]) -> Result<Self> {
        let [a, b, c, d] = e.map(|v| T::from_i64(ctx, v));
        Self::new(a, b, c, d)
    }

    pub fn identity(ctx: &T::Ctx) -> Self {
        Self::diag(T::one(ctx), T::one(ctx)).expect("invertible")
    }

    /// `(x, y) -> (y, x)`.
    pub fn swap(ctx: &T::Ctx) -> Self {
        Self::new(T::zero(ctx), T::one(ctx), T::one(ctx), T::zero(ctx)).expect("invertible")
    }

    pub fn diag(s: T, t: T) -> Result<Self> {
        let z = T::zero(&s.ctx());
        Self::new(s, z.clone(), z, t)
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn ctx(&self) -> T::Ctx {
        self.a.ctx()
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ctx())
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone()).expect("invertible")
    }

    /// The matrix product `self * other`, i.e. `self ∘ other` on points.
    pub fn compose(&self, other: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&other.a, &other.b, &other.c, &other.d);
        Self::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a.clone() * f.clone() + b.clone() * h.clone(),
            c.clone() * e.clone() + d.clone() * g.clone(),
            c.clone() * f.clone() + d.clone() * h.clone(),
        )
        .expect("product of invertible matrices")
    }

    pub fn apply(&self, p: &ProjPoint<T>) -> ProjPoint<T> {
        let (x, y) = (p.x().clone(), p.y().clone());
        ProjPoint::new(
            self.a.clone() * x.clone() + self.b.clone() * y.clone(),
            self.c.clone() * x + self.d.clone() * y,
        )
        .expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// The unique element sending `p1, p2, p3` to `0, 1, infinity`.
    pub fn from_three_points(p1: &ProjPoint<T>, p2: &ProjPoint<T>, p3: &ProjPoint<T>) -> Result<Self> {
        if p1 == p2 || p1 == p3 || p2 == p3 {
            return Err(Error::DuplicatePoints);
        }
        // L_i vanishes at p_i.
        let l = |p: &ProjPoint<T>, q: &ProjPoint<T>| p.y().clone() * q.x().clone() - p.x().clone() * q.y().clone();
        let k1 = l(p3, p2);
        let k3 = l(p1, p2);
        let g = Self::new(
            k1.clone() * p1.y().clone(),
            -(k1 * p1.x().clone()),
            k3.clone() * p3.y().clone(),
            -(k3 * p3.x().clone()),
        )?;
        Ok(g.normalized())
    }

    /// The map `(X, Y) -> (aX + bY, cX + dY)` as a degree-1 morphism.
    pub fn to_map(&self) -> ProjMap<T> {
        ProjMap::new(BiForm::linear(self.a.clone(), self.b.clone()), BiForm::linear(self.c.clone(), self.d.clone()))
            .expect("invertible matrix")
    }
}

impl<T: Field> PartialEq for Moebius<T> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<T: Field> Eq for Moebius<T> {}

impl<T: Field> Hash for Moebius<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl<T: Field> fmt::Display for Moebius<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, q2, Rational};

    fn pt(s: &str) -> ProjPoint<Rational> {
        ProjPoint::parse(&(), s).unwrap()
    }

    #[test]
    fn canonical_scaling() {
        let g = Moebius::<Rational>::from_i64s(&(), [2, 4, 0, 6]).unwrap();
        assert_eq!(g, Moebius::new(q(1), q(2), q(0), q(3)).unwrap());
        assert_eq!(g.canonical(), [q(1), q(2), q(0), q(3)]);
        assert_eq!(g.entries(), [&q(2), &q(4), &q(0), &q(6)]);
        assert_eq!(Moebius::<Rational>::from_i64s(&(), [-1, 0, 0, -1]).unwrap(), Moebius::identity(&()));
        assert!(Moebius::<Rational>::from_i64s(&(), [1, 2, 2, 4]).is_err());
    }

    #[test]
    fn three_points_go_to_zero_one_infinity() {
        for (a, b, c) in [("2", "-1", "1/3"), ("inf", "0", "5"), ("0", "inf", "1")] {
            let g = Moebius::from_three_points(&pt(a), &pt(b), &pt(c)).unwrap();
            assert_eq!(g.apply(&pt(a)), pt("0"));
            assert_eq!(g.apply(&pt(b)), pt("1"));
            assert_eq!(g.apply(&pt(c)), pt("inf"));
        }
        assert!(Moebius::from_three_points(&pt("0"), &pt("1"), &pt("inf")).unwrap().is_identity());
    }

    #[test]
    fn inverse_and_compose() {
        let g = Moebius::<Rational>::from_i64s(&(), [2, 1, 1, 1]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        let p = pt("3/7");
        let h = Moebius::swap(&());
        assert_eq!(g.compose(&h).apply(&p), g.apply(&h.apply(&p)));
        assert_eq!(h.apply(&p), ProjPoint::affine(q2(7, 3)));
    }
}
