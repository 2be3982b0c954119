//! Resultants and discriminants of binary forms.

use crate::error::{Error, Result};
use crate::polyalg::biform::BiForm;
use crate::polyalg::field::Field;
use crate::polyalg::matrix::determinant;

/// Sylvester matrix of `p` (degree m) and `q` (degree n), built from the
/// coefficient sequences `a_m..a_0` and `b_n..b_0` at their formal degrees.
pub fn sylvester_matrix<T: Field>(p: &BiForm<T>, q: &BiForm<T>) -> Vec<Vec<T>> {
    let ctx = p.ctx();
    let (m, n) = (p.degree(), q.degree());
    let size = m + n;
    let pd = p.coeffs_descending();
    let qd = q.coeffs_descending();
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![T::zero(ctx); size];
        for (k, c) in pd.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![T::zero(ctx); size];
        for (k, c) in qd.iter().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `Res(P, Q)`: the Sylvester determinant. Zero exactly when the forms share
/// a projective root.
pub fn resultant<T: Field>(p: &BiForm<T>, q: &BiForm<T>) -> T {
    determinant(p.ctx(), sylvester_matrix(p, q))
}

/// How the discriminant was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscRoute<T: Field> {
    /// `a_d != 0`; the defining formula applies directly.
    Direct,
    /// `a_d = 0` but `a_0 != 0`; computed on `F(Y, X)`.
    Swapped,
    /// `a_d = a_0 = 0`; computed on `F(X, Y + tX)` for the recorded `t`.
    Sheared(T),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant<T: Field> {
    pub value: T,
    pub route: DiscRoute<T>,
}

fn sign_pow(d: usize) -> bool {
    // (-1)^(d(d-1)/2) is negative iff d mod 4 is 2 or 3.
    (d * d.saturating_sub(1) / 2) % 2 == 1
}

/// `(-1)^(d(d-1)/2) Res(F, F_X) / a_d`; requires `a_d != 0`.
pub fn discriminant_direct<T: Field>(f: &BiForm<T>) -> Result<T> {
    if f.leading().is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    let (fx, _) = f.partials();
    let r = resultant(f, &fx).checked_div(f.leading())?;
    Ok(if sign_pow(f.degree()) { -r } else { r })
}

/// Discriminant of a binary form of degree `d >= 1`, with the chart fallback:
/// swap `X` and `Y` when `a_d = 0`, and when both end coefficients vanish apply
/// the unimodular shear `Y -> Y + tX`. Both changes of variable leave the
/// discriminant unchanged.
pub fn discriminant<T: Field>(f: &BiForm<T>) -> Result<Discriminant<T>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::DegreeTooSmall { op: "discriminant", min: 1, got: 0 });
    }
    if !f.leading().is_zero() {
        return Ok(Discriminant { value: discriminant_direct(f)?, route: DiscRoute::Direct });
    }
    let swapped = f.swap();
    if !swapped.leading().is_zero() {
        return Ok(Discriminant { value: discriminant_direct(&swapped)?, route: DiscRoute::Swapped });
    }
    let ctx = f.ctx().clone();
    let p = T::characteristic(&ctx);
    let limit = if p == 0 { 64 } else { p.min(64) };
    for t in 1..limit {
        let tv = T::from_i64(&ctx, t as i64);
        let zero = T::zero(&ctx);
        let one = T::one(&ctx);
        let sheared = f.substitute(&one, &zero, &tv, &one);
        if !sheared.leading().is_zero() {
            return Ok(Discriminant { value: discriminant_direct(&sheared)?, route: DiscRoute::Sheared(tv) });
        }
    }
    Err(Error::NoUsableChart)
}

/// True iff `F` has no repeated projective root.
pub fn squarefree<T: Field>(f: &BiForm<T>) -> bool {
    match discriminant(f) {
        Ok(d) => !d.value.is_zero(),
        Err(Error::NoUsableChart) => {
            // Every affine point of a tiny prime field is a root; decide by gcd.
            let g = f.dehomogenize();
            g.gcd(&g.derivative()).degree() == Some(0) && f.infinity_multiplicity() <= 1
        }
        Err(_) => false,
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
    fn resultant_examples() {
        assert_eq!(resultant(&form(&[1, 0]), &form(&[0, 1])), q(1));
        assert_eq!(resultant(&form(&[0, -2]), &form(&[-2, 0])), q(-4));
        // F = X^3 - X Y^2: Res(F_Y, -F_X) = -12
        let f = form(&[1, 0, -1, 0]);
        let (fx, fy) = f.partials();
        assert_eq!(resultant(&fy, &-&fx), q(-12));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&form(&[1, 0, -1])).unwrap().value, q(4));
        assert_eq!(discriminant(&form(&[1, 0, -1, 0])).unwrap().value, q(4));
        let d = discriminant(&form(&[0, 1, 0, -1])).unwrap();
        assert_eq!(d.value, q(4));
        assert_eq!(d.route, DiscRoute::Swapped);
        let d = discriminant(&form(&[0, 1, -3, 2, 0])).unwrap();
        assert!(matches!(d.route, DiscRoute::Sheared(_)));
        assert_ne!(d.value, q(0));
    }

    #[test]
    fn direct_route_rejects_zero_lead() {
        assert_eq!(discriminant_direct(&form(&[0, 1, 1])), Err(Error::LeadingCoefficientZero));
    }

    #[test]
    fn squarefree_examples() {
        assert!(squarefree(&form(&[1, 0, -1])));
        assert!(!squarefree(&form(&[1, 2, 1])));
        assert!(squarefree(&form(&[0, 1, -3, 2, 0])));
        assert!(!squarefree(&form(&[0, 0, 1, 1])));
    }

    #[test]
    fn squarefree_over_f2_when_all_affine_points_are_roots() {
        // XY(X + Y) vanishes on all of P^1(F_2).
        let p = Modulus::new(2).unwrap();
        let f = BiForm::<Fp>::from_i64s_desc(&p, &[0, 1, 1, 0]);
        assert!(squarefree(&f));
        let g = BiForm::<Fp>::from_i64s_desc(&p, &[0, 1, 0, 0]);
        assert!(!squarefree(&g));
    }
}
