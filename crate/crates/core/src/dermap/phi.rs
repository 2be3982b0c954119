use crate::dermap::maps::{AffineMap, ProjMap};
use crate::error::{Error, Result};
use crate::polyalg::{discriminant, resultant, squarefree, BiForm, Field, UniPoly};

fn check_phi_input<T: Field>(f: &BiForm<T>) -> Result<()> {
    if f.degree() < 2 {
        return Err(Error::DegreeTooSmall { op: "phi_F", min: 2, got: f.degree() });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !squarefree(f) {
        return Err(Error::MultipleRoots);
    }
    Ok(())
}

/// True when the characteristic divides `deg F`, in which case `phi_F`
/// collapses to the identity.
pub fn char_divides_degree<T: Field>(f: &BiForm<T>) -> bool {
    let p = T::characteristic(f.ctx());
    p != 0 && (f.degree() as u64).is_multiple_of(p)
}

/// `phi_F = (F_Y, -F_X)`, normalized, of degree `d - 1`.
///
/// When the characteristic divides `d` the two coordinates share the factor
/// `F_Y / X`; it is divided out and the result is the identity map.
pub fn build_phi<T: Field>(f: &BiForm<T>) -> Result<ProjMap<T>> {
    check_phi_input(f)?;
    let (fx, fy) = f.partials();
    let p = fy;
    let q = -&fx;
    if char_divides_degree(f) {
        let g = p.gcd(&q);
        let p = p.exact_div(&g).ok_or(Error::NotAMorphism)?;
        let q = q.exact_div(&g).ok_or(Error::NotAMorphism)?;
        return ProjMap::new(p, q);
    }
    ProjMap::new(p, q)
}

/// `x - d f(x) / f'(x)` in lowest terms, `f = F(x, 1)`.
pub fn affine_form<T: Field>(f: &BiForm<T>) -> Result<AffineMap<T>> {
    check_phi_input(f)?;
    let ctx = f.ctx();
    let poly = f.dehomogenize();
    let deriv = poly.derivative();
    let d = T::from_i64(ctx, f.degree() as i64);
    let num = &(&UniPoly::x(ctx) * &deriv) - &poly.scale(&d);
    AffineMap::new(num, deriv)
}

/// `Y P - X Q`; for `phi_F` this is `d F`.
pub fn fixed_point_form<T: Field>(phi: &ProjMap<T>) -> BiForm<T> {
    phi.fixed_point_form()
}

/// Both sides of `Res(phi_F) = (-1)^(d(d-1)/2) d^(d-2) Disc(F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResDisc<T: Field> {
    /// `Res(F_Y, -F_X)` for the unnormalized pair of partials.
    pub res: T,
    pub disc: T,
    pub holds: bool,
}

pub fn res_disc_check<T: Field>(f: &BiForm<T>) -> Result<ResDisc<T>> {
    check_phi_input(f)?;
    let d = f.degree();
    let (fx, fy) = f.partials();
    let res = resultant(&fy, &-&fx);
    let disc = discriminant(f)?.value;
    let mut rhs = T::from_i64(f.ctx(), d as i64).pow(d as u64 - 2) * disc.clone();
    if (d * (d - 1) / 2) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(ResDisc { holds: res == rhs, res, disc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{q, Fp, Modulus, Rational};

    fn form(desc: &[i64]) -> BiForm<Rational> {
        BiForm::from_i64s_desc(&(), desc)
    }

    #[test]
    fn build_phi_examples() {
        let phi = build_phi(&form(&[1, 0, -1])).unwrap();
        assert_eq!(phi, ProjMap::new(form(&[0, 1]), form(&[1, 0])).unwrap());
        let phi = build_phi(&form(&[0, 1, -3, 2, 0])).unwrap();
        assert_eq!(phi.p(), &form(&[1, -6, 6, 0]));
        assert_eq!(phi.q(), &form(&[0, -3, 6, -2]));
    }

    #[test]
    fn build_phi_rejects_bad_input() {
        assert_eq!(build_phi(&form(&[1, 2, 1])), Err(Error::MultipleRoots));
        assert!(matches!(build_phi(&form(&[1, 1])), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn characteristic_two_gives_identity() {
        let p = Modulus::new(2).unwrap();
        let f = BiForm::<Fp>::from_i64s_desc(&p, &[1, 1, 1]);
        assert!(char_divides_degree(&f));
        assert!(build_phi(&f).unwrap().is_identity());
    }

    #[test]
    fn affine_form_examples() {
        let a = affine_form(&form(&[0, 1, 0])).unwrap(); // XY
        assert_eq!(a, AffineMap::new(UniPoly::from_i64s(&(), &[0, -1]), UniPoly::from_i64s(&(), &[1])).unwrap());
        let a = affine_form(&form(&[1, 0, -1])).unwrap();
        assert_eq!(a.to_string(), "(1)/(x)");
        let a = affine_form(&form(&[0, 1, -3, 2, 0])).unwrap();
        // x - 4 (x^3 - 3x^2 + 2x) / (3x^2 - 6x + 2)
        let f = UniPoly::from_i64s(&(), &[0, 2, -3, 1]);
        let fp = f.derivative();
        let expected = AffineMap::new(&(&UniPoly::x(&()) * &fp) - &f.scale(&q(4)), fp).unwrap();
        assert_eq!(a, expected);
        assert_eq!(a.to_projective(), build_phi(&form(&[0, 1, -3, 2, 0])).unwrap());
    }

    #[test]
    fn fixed_point_form_examples() {
        let phi = build_phi(&form(&[0, 1, 0])).unwrap();
        assert_eq!(phi.p(), &form(&[1, 0]));
        assert_eq!(phi.q(), &form(&[0, -1]));
        assert_eq!(fixed_point_form(&phi), form(&[0, 2, 0]));
        let swap = ProjMap::new(form(&[0, 1]), form(&[1, 0])).unwrap();
        assert_eq!(fixed_point_form(&swap), form(&[-1, 0, 1]));
        let f = form(&[0, 1, -3, 2, 0]);
        assert!(fixed_point_form(&build_phi(&f).unwrap()).is_scalar_multiple_of(&f));
    }

    #[test]
    fn res_disc_examples() {
        let r = res_disc_check(&form(&[1, 0, -1])).unwrap();
        assert_eq!((r.res, r.disc, r.holds), (q(-4), q(4), true));
        let r = res_disc_check(&form(&[1, 0, -1, 0])).unwrap();
        assert_eq!((r.res, r.disc, r.holds), (q(-12), q(4), true));
    }
}
