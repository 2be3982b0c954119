//! Periodic-point polynomials `Psi_n` and their recursion.
//!
//! With `phi~^n(x) = A_n(x) / B_n(x)` (each `B_n` scaled to content 1 with
//! positive leading coefficient over Q, monic over F_p) and
//! `c_n = -B_{n+1} / F_X(A_n, B_n)`, the identities
//!
//! ```text
//! phi~^n(x) = x + d Psi^_n(x) / B_n(x)
//! Psi^_{n+1} = c_n (F(A_n, B_n) - Psi^_n F_X(A_n, B_n)) / B_n
//! ```
//!
//! hold exactly for the unnormalized `Psi^_n`; the reported `Psi_n` is its
//! monic multiple. The division by `B_n` is checked to be exact at every step.

use crate::dermap::maps::{checked_degree_power, ProjMap};
use crate::dermap::multiplier::multiplier;
use crate::dermap::phi::{build_phi, char_divides_degree};
use crate::error::{Error, Result};
use crate::polyalg::modular::{charpoly_of_quotient, charpoly_of_quotient_q};
use crate::polyalg::{BiForm, Field, ProjPoint, Rational, UniPoly};

/// One level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiStep<T: Field> {
    pub n: usize,
    /// Monic `Psi_n`.
    pub psi: UniPoly<T>,
    /// Leading coefficient of the unnormalized `Psi^_n`.
    pub psi_scale: T,
    /// `c_{n-1}`.
    pub c: T,
    pub a: UniPoly<T>,
    pub b: UniPoly<T>,
    /// Infinity is fixed by `phi^n`.
    pub infinity_periodic: bool,
    /// `(d-1)^n + 1 - [infinity periodic]`.
    pub expected_degree: usize,
}

impl<T: Field> PsiStep<T> {
    pub fn degree(&self) -> usize {
        self.psi.degree().unwrap_or(0)
    }

    pub fn degree_law_holds(&self) -> bool {
        self.degree() == self.expected_degree
    }
}

fn denominator_scale<T: Field>(b: &UniPoly<T>) -> Option<T> {
    let desc: Vec<T> = b.coeffs().iter().rev().cloned().collect();
    T::primitive_scale(&desc)
}

/// `Psi_1 .. Psi_n` together with the scalars `c_0 .. c_{n-1}`.
pub fn psi_sequence<T: Field>(f: &BiForm<T>, n: usize, cap: usize) -> Result<Vec<PsiStep<T>>> {
    if n == 0 {
        return Err(Error::InvalidParameter("period must be positive".into()));
    }
    let phi = build_phi(f)?;
    if char_divides_degree(f) {
        return Err(Error::UnsupportedCharacteristic { op: "periodic polynomials", characteristic: T::characteristic(f.ctx()) });
    }
    let d = f.degree();
    if d == 2 && n >= 2 {
        return Err(Error::DynamicallyTrivial);
    }
    checked_degree_power(d - 1, n, cap)?;

    let ctx = f.ctx();
    let dd = T::from_i64(ctx, d as i64);
    let (fx_form, fy_form) = f.partials();
    let x = UniPoly::x(ctx);
    let mut a = x.clone();
    let mut b = UniPoly::one(ctx);
    let mut psi_hat = UniPoly::zero(ctx);
    let mut inf_orbit = ProjPoint::infinity(ctx);
    let mut steps = Vec::with_capacity(n);

    for step in 0..n {
        let fab = f.eval_polys(&a, &b);
        let fx = fx_form.eval_polys(&a, &b);
        let fy = fy_form.eval_polys(&a, &b);

        let s = denominator_scale(&fx).ok_or(Error::NonscalarRatio { step })?;
        let b_next = fx.scale(&s);
        let ratio = b_next.exact_div(&fx).ok_or(Error::NonscalarRatio { step })?;
        if ratio.degree() != Some(0) {
            return Err(Error::NonscalarRatio { step });
        }
        let c = -ratio.coeff(0);
        let a_next = fy.scale(&c);

        let numer = &fab - &(&psi_hat * &fx);
        let psi_next = numer.exact_div(&b).ok_or(Error::InexactDivision { step })?.scale(&c);
        let direct = (&a_next - &(&x * &b_next)).scale(&dd.inv()?);
        if psi_next != direct {
            return Err(Error::InexactDivision { step });
        }

        inf_orbit = phi.eval(&inf_orbit)?;
        let infinity_periodic = inf_orbit.is_infinity();
        let k = step + 1;
        let expected_degree = (d - 1).pow(k as u32) + 1 - usize::from(infinity_periodic);
        let psi_scale = psi_next.lead().cloned().ok_or(Error::ZeroPolynomial)?;
        steps.push(PsiStep {
            n: k,
            psi: psi_next.monic()?,
            psi_scale,
            c,
            a: a_next.clone(),
            b: b_next.clone(),
            infinity_periodic,
            expected_degree,
        });
        a = a_next;
        b = b_next;
        psi_hat = psi_next;
    }
    Ok(steps)
}

/// Periodic data of period dividing `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicReport<T: Field> {
    pub period: usize,
    pub psi: UniPoly<T>,
    /// Base-field periodic points (affine roots of `Psi_n`, then infinity if
    /// periodic) with their multipliers.
    pub rational_points: Vec<(ProjPoint<T>, T)>,
    /// Monic polynomial in `t` whose roots are the multipliers at all roots
    /// of `Psi_n`, with multiplicity.
    pub multiplier_charpoly: UniPoly<T>,
    pub infinity_periodic: bool,
    pub expected_degree: usize,
}

impl<T: Field> PeriodicReport<T> {
    pub fn degree_law_holds(&self) -> bool {
        self.psi.degree().unwrap_or(0) == self.expected_degree
    }
}

/// `prod (t - h(r))` over the roots `r` of `psi`, with `h = num/den`: the
/// characteristic polynomial of multiplication by `h` on `K[x]/(psi)`. This
/// equals `Res_x(psi, t den - num)` made monic in `t`.
///
/// Over Q the resultant is assembled from its images modulo word-size primes,
/// which avoids the coefficient swell of a rational extended gcd.
pub fn multiplier_charpoly<T: Field>(psi: &UniPoly<T>, num: &UniPoly<T>, den: &UniPoly<T>) -> Result<UniPoly<T>> {
    let pole = || Error::InvalidParameter("derivative has a pole at a periodic point".into());
    if T::characteristic(psi.ctx()) != 0 {
        return charpoly_of_quotient(psi, num, den)?.ok_or_else(pole);
    }
    let to_q = |p: &UniPoly<T>| -> Result<UniPoly<Rational>> {
        let c = p.coeffs().iter().map(|c| c.to_rational().ok_or_else(|| Error::InvalidParameter("not rational".into())));
        Ok(UniPoly::new(&(), c.collect::<Result<_>>()?))
    };
    let chi = charpoly_of_quotient_q(&to_q(psi)?, &to_q(num)?, &to_q(den)?)?.ok_or_else(pole)?;
    let ctx = psi.ctx();
    let coeffs = chi.coeffs().iter().map(|c| T::from_fraction(ctx, c.numer(), c.denom()));
    Ok(UniPoly::new(ctx, coeffs.collect::<Result<_>>()?))
}

/// Numerator and denominator of `(a/b)'`, left unreduced.
pub(crate) fn raw_derivative<T: Field>(a: &UniPoly<T>, b: &UniPoly<T>) -> (UniPoly<T>, UniPoly<T>) {
    (&(&a.derivative() * b) - &(a * &b.derivative()), b * b)
}

pub fn periodic_report<T: Field>(f: &BiForm<T>, n: usize, cap: usize) -> Result<PeriodicReport<T>> {
    let steps = psi_sequence(f, n, cap)?;
    let last = steps.last().expect("n >= 1");
    let phi: ProjMap<T> = build_phi(f)?;
    let ctx = f.ctx();

    let mut rational_points = Vec::new();
    for r in T::roots_in_field(&last.psi)? {
        let pt = ProjPoint::affine(r);
        let m = multiplier(&phi, &pt, n)?;
        rational_points.push((pt, m));
    }
    if last.infinity_periodic {
        let pt = ProjPoint::infinity(ctx);
        let m = multiplier(&phi, &pt, n)?;
        rational_points.push((pt, m));
    }

    let (num, den) = raw_derivative(&last.a, &last.b);
    let multiplier_charpoly = multiplier_charpoly(&last.psi, &num, &den)?;
    Ok(PeriodicReport {
        period: n,
        psi: last.psi.clone(),
        rational_points,
        multiplier_charpoly,
        infinity_periodic: last.infinity_periodic,
        expected_degree: last.expected_degree,
    })
}
