use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::field::Field;

/// A point of the projective line in canonical form: `(x, 1)` for affine
/// points and `(1, 0)` for the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint<T: Field> {
    x: T,
    y: T,
}

impl<T: Field> ProjPoint<T> {
    /// Canonicalizes `(x, y)`; fails when both coordinates vanish.
    pub fn new(x: T, y: T) -> Result<Self> {
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::InvalidParameter("(0, 0) is not a projective point".into()));
            }
            let ctx = x.ctx();
            return Ok(Self::infinity(&ctx));
        }
        let x = x.checked_div(&y)?;
        let ctx = x.ctx();
        Ok(ProjPoint { x, y: T::one(&ctx) })
    }

    pub fn affine(x: T) -> Self {
        let ctx = x.ctx();
        ProjPoint { x, y: T::one(&ctx) }
    }

    pub fn infinity(ctx: &T::Ctx) -> Self {
        ProjPoint { x: T::one(ctx), y: T::zero(ctx) }
    }

    pub fn x(&self) -> &T {
        &self.x
    }

    pub fn y(&self) -> &T {
        &self.y
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    /// The affine coordinate, `None` at infinity.
    pub fn affine_value(&self) -> Option<&T> {
        if self.is_infinity() {
            None
        } else {
            Some(&self.x)
        }
    }

    /// Affine points in canonical scalar order, infinity last.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self.affine_value(), other.affine_value()) {
            (Some(a), Some(b)) => a.canonical_cmp(b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => Ordering::Equal,
        }
    }

    /// Parses `a`, `a/b` or `inf` into a point over the field `ctx`.
    pub fn parse(ctx: &T::Ctx, src: &str) -> Result<Self> {
        let s = src.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity(ctx));
        }
        Ok(Self::affine(parse_scalar(ctx, s)?))
    }
}

/// Parses an integer or `num/den` literal.
pub fn parse_scalar<T: Field>(ctx: &T::Ctx, src: &str) -> Result<T> {
    let s = src.trim();
    let bad = || Error::InvalidParameter(format!("not a rational literal: {src:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    T::from_fraction(ctx, &num, &den)
}

impl<T: Field> fmt::Display for ProjPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.x)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::field::{q, q2, Rational};

    #[test]
    fn canonical_forms() {
        let p = ProjPoint::new(q(4), q(6)).unwrap();
        assert_eq!(p, ProjPoint::affine(q2(2, 3)));
        let inf = ProjPoint::new(q(-5), q(0)).unwrap();
        assert!(inf.is_infinity());
        assert_eq!(inf.x(), &q(1));
        assert!(ProjPoint::new(q(0), q(0)).is_err());
    }

    #[test]
    fn parse_points() {
        assert_eq!(ProjPoint::<Rational>::parse(&(), "-3/6").unwrap(), ProjPoint::affine(q2(-1, 2)));
        assert!(ProjPoint::<Rational>::parse(&(), "inf").unwrap().is_infinity());
        assert!(ProjPoint::<Rational>::parse(&(), "1/0").is_err());
        assert!(ProjPoint::<Rational>::parse(&(), "x").is_err());
    }
}
