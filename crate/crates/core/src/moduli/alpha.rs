//! The degree-4 family `F = X Y (X - Y)(X - alpha Y)`.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};

use crate::dermap::{psi_sequence, ProjMap, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::polyalg::{BiForm, Field, ProjPoint, Rational, UniPoly};

/// A parameter `alpha` outside `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaFamily<T: Field> {
    alpha: T,
}

impl<T: Field> AlphaFamily<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if alpha.is_zero() || alpha.is_one() {
            return Err(Error::InvalidParameter(format!("alpha = {alpha} gives a repeated root")));
        }
        Ok(AlphaFamily { alpha })
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }
}

/// `F = X^3 Y - (alpha+1) X^2 Y^2 + alpha X Y^3` and
/// `phi = (X^3 - 2(alpha+1) X^2 Y + 3 alpha X Y^2, -3 X^2 Y + 2(alpha+1) X Y^2 - alpha Y^3)`.
pub fn alpha_family_form<T: Field>(fam: &AlphaFamily<T>) -> Result<(BiForm<T>, ProjMap<T>)> {
    let a = fam.alpha.clone();
    let ctx = a.ctx();
    let n = |v: i64| T::from_i64(&ctx, v);
    let a1 = a.clone() + n(1);
    let f = BiForm::from_descending(&ctx, vec![n(0), n(1), -a1.clone(), a.clone(), n(0)]);
    let p = BiForm::from_descending(&ctx, vec![n(1), n(-2) * a1.clone(), n(3) * a.clone(), n(0)]);
    let q = BiForm::from_descending(&ctx, vec![n(0), n(-3), n(2) * a1, -a]);
    Ok((f, ProjMap::new(p, q)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPeriodic<T: Field> {
    /// `x^2 - alpha`, `(x-1)^2 - (1-alpha)`, `(x-alpha)^2 - (alpha^2-alpha)`.
    pub quadratics: Vec<UniPoly<T>>,
    /// `0, 1, alpha, infinity`.
    pub fixed_points: Vec<ProjPoint<T>>,
    /// Roots of the quadratics lying in the base field, ascending.
    pub rational_points: Vec<T>,
    /// The quadratics times `x (x-1)(x-alpha)` equal the monic `Psi_2`.
    pub matches_psi2: bool,
}

pub fn two_periodic_points<T: Field>(fam: &AlphaFamily<T>) -> Result<TwoPeriodic<T>> {
    let a = fam.alpha.clone();
    let ctx = a.ctx();
    let n = |v: i64| T::from_i64(&ctx, v);
    let quad = |lin: T, c: T| UniPoly::new(&ctx, vec![c, lin, n(1)]);
    let quadratics = vec![
        quad(n(0), -a.clone()),
        quad(n(-2), a.clone()),
        quad(n(-2) * a.clone(), a.clone()),
    ];
    let mut rational_points = Vec::new();
    for qd in &quadratics {
        rational_points.extend(T::roots_in_field(qd)?);
    }
    rational_points.sort_by(|x, y| x.canonical_cmp(y));
    rational_points.dedup();

    let fixed = [n(0), n(1), a.clone()].map(|r| UniPoly::linear_root(&r));
    let product = quadratics.iter().chain(fixed.iter()).fold(UniPoly::one(&ctx), |acc, p| &acc * p);
    let (f, _) = alpha_family_form(fam)?;
    let psi2 = &psi_sequence(&f, 2, DEFAULT_SIZE_CAP)?[1].psi;
    let mut fixed_points: Vec<ProjPoint<T>> = [n(0), n(1), a].into_iter().map(ProjPoint::affine).collect();
    fixed_points.sort_by(|x, y| x.canonical_cmp(y));
    fixed_points.push(ProjPoint::infinity(&ctx));
    Ok(TwoPeriodic { quadratics, fixed_points, rational_points, matches_psi2: product == *psi2 })
}

/// Every `alpha = p^2/q^2` with `gcd(p, q) = 1`, `p < q <= bound` and
/// `q^2 - p^2` a perfect square, ascending.
pub fn pythagorean_alphas(bound: u64) -> Result<Vec<Rational>> {
    if bound < 5 {
        return Err(Error::InvalidParameter(format!("hypotenuse bound must be at least 5, got {bound}")));
    }
    let mut out = Vec::new();
    for q in 2..=bound {
        for p in 1..q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let r2 = q * q - p * p;
            let r = r2.sqrt();
            if r * r == r2 {
                out.push(Rational::new(BigInt::from(p * p), BigInt::from(q * q)));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dermap::build_phi;
    use crate::polyalg::{q, q2, Fp, Modulus};

    #[test]
    fn alpha_two_matches_build_phi() {
        let fam = AlphaFamily::new(q(2)).unwrap();
        let (f, phi) = alpha_family_form(&fam).unwrap();
        assert_eq!(f, BiForm::from_i64s_desc(&(), &[0, 1, -3, 2, 0]));
        assert_eq!(phi, build_phi(&f).unwrap());
    }

    #[test]
    fn alpha_minus_one() {
        let (_, phi) = alpha_family_form(&AlphaFamily::new(q(-1)).unwrap()).unwrap();
        let expected = ProjMap::new(
            BiForm::from_i64s_desc(&(), &[1, 0, -3, 0]),
            BiForm::from_i64s_desc(&(), &[0, -3, 0, 1]),
        )
        .unwrap();
        assert_eq!(phi, expected);
    }

    #[test]
    fn rejects_degenerate_alpha() {
        assert!(AlphaFamily::new(q(0)).is_err());
        assert!(AlphaFamily::new(q(1)).is_err());
    }

    #[test]
    fn two_periodic_alpha_two() {
        let tp = two_periodic_points(&AlphaFamily::new(q(2)).unwrap()).unwrap();
        let expected = [[-2, 0, 1], [2, -2, 1], [2, -4, 1]].map(|c| UniPoly::from_i64s(&(), &c));
        assert_eq!(tp.quadratics, expected);
        assert!(tp.rational_points.is_empty());
        assert!(tp.matches_psi2);
    }

    #[test]
    fn two_periodic_nine_twentyfifths() {
        let tp = two_periodic_points(&AlphaFamily::new(q2(9, 25)).unwrap()).unwrap();
        assert_eq!(tp.rational_points, vec![q2(-3, 5), q2(1, 5), q2(3, 5), q2(9, 5)]);
        assert!(tp.matches_psi2);
    }

    #[test]
    fn two_periodic_over_prime_field() {
        let p = Modulus::new(13).unwrap();
        let tp = two_periodic_points(&AlphaFamily::new(Fp::new(4, p)).unwrap()).unwrap();
        assert!(tp.matches_psi2);
        assert!(tp.rational_points.contains(&Fp::new(2, p)));
    }

    #[test]
    fn pythagorean_small_bounds() {
        assert_eq!(pythagorean_alphas(5).unwrap(), vec![q2(9, 25), q2(16, 25)]);
        assert_eq!(pythagorean_alphas(13).unwrap(), vec![q2(25, 169), q2(9, 25), q2(16, 25), q2(144, 169)]);
        assert!(pythagorean_alphas(4).is_err());
    }
}
