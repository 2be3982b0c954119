//! Division polynomials and Lattes maps of `y^2 = x^3 + a x^2 + b x + c`,
//! the doubling map as a modified Newton map, and the CM automorphism
//! checks for `j = 1728` and `j = 0`.

mod curve;

pub use curve::{division_polynomial, division_polynomials, CurvePoly, EllCurve};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dermap::{build_phi, modified_newton, multiplier, multiplier_charpoly, raw_derivative, AffineMap, NewtonMap, ProjMap};
use crate::error::{Error, Result};
use crate::moduli::{invariance_check, is_automorphism, Moebius};
use crate::polyalg::{discriminant, resultant, BiForm, Field, ProjPoint, Rational, UniPoly};

/// The multiplication-by-`m` map on x-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LattesMap<T: Field> {
    pub m: usize,
    pub map: ProjMap<T>,
    pub affine: AffineMap<T>,
    /// `x Psi_m^2 - Psi_{m-1} Psi_{m+1}` before reduction.
    pub natural_num: UniPoly<T>,
    /// `Psi_m^2` before reduction.
    pub natural_den: UniPoly<T>,
    /// `Psi_{m-1} Psi_{m+1}` made monic; its roots are the affine fixed points.
    pub fixed_point_poly: UniPoly<T>,
    /// Multipliers at the roots of `fixed_point_poly`, with multiplicity.
    pub multiplier_charpoly: UniPoly<T>,
    pub infinity_multiplier: T,
}

fn plain<T: Field>(p: &CurvePoly<T>, what: &'static str) -> Result<UniPoly<T>> {
    p.as_plain().cloned().ok_or(Error::YFactorRemains(what))
}

pub fn lattes_map<T: Field>(e: &EllCurve<T>, m: usize) -> Result<LattesMap<T>> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("Lattes maps need m >= 2, got {m}")));
    }
    let ctx = e.ctx();
    let ch = T::characteristic(&ctx);
    if ch != 0 && (m as u64).is_multiple_of(ch) {
        return Err(Error::UnsupportedCharacteristic { op: "Lattes maps with p | m", characteristic: ch });
    }
    let g = e.g();
    let psi = division_polynomials(e, m + 1);
    let den = plain(&psi[m].mul(&psi[m], &g), "Psi_m^2")?;
    let prod = plain(&psi[m - 1].mul(&psi[m + 1], &g), "Psi_{m-1} Psi_{m+1}")?;
    let num = &(&UniPoly::x(&ctx) * &den) - &prod;
    let affine = AffineMap::new(num.clone(), den.clone())?;
    let map = affine.to_projective();
    let fixed_point_poly = prod.monic()?;
    let (dn, dd) = raw_derivative(affine.num(), affine.den());
    let multiplier_charpoly = multiplier_charpoly(&fixed_point_poly, &dn, &dd)?;
    let infinity_multiplier = multiplier(&map, &ProjPoint::infinity(&ctx), 1)?;
    Ok(LattesMap {
        m,
        map,
        affine,
        natural_num: num,
        natural_den: den,
        fixed_point_poly,
        multiplier_charpoly,
        infinity_multiplier,
    })
}

/// The modified Newton map `x - 3 f/f'` for `f = Psi_3 / 3`, and whether it
/// equals the doubling map.
pub fn doubling_from_torsion<T: Field>(e: &EllCurve<T>) -> Result<(NewtonMap<T>, bool)> {
    let ctx = e.ctx();
    let f = plain(&division_polynomial(e, 3), "Psi_3")?.monic()?;
    let newton = modified_newton(&f, &T::from_i64(&ctx, 3))?;
    let doubling = lattes_map(e, 2)?;
    let equal = newton.map == doubling.affine;
    Ok((newton, equal))
}

/// `G = x^4/4 + (a/3) x^3 + (b/2) x^2 + c x + C` with `C = -(b^2 - 4ac)/12`,
/// an antiderivative of `g`; returns `G` and whether `12 G = Psi_3`.
pub fn three_torsion_by_integration<T: Field>(e: &EllCurve<T>) -> Result<(UniPoly<T>, bool)> {
    let ctx = e.ctx();
    let ch = T::characteristic(&ctx);
    if ch != 0 {
        return Err(Error::UnsupportedCharacteristic { op: "3-torsion by integration", characteristic: ch });
    }
    let n = |v: i64| T::from_i64(&ctx, v);
    let g = e.g();
    let mut coeffs = vec![T::zero(&ctx)];
    for (i, c) in g.coeffs().iter().enumerate() {
        coeffs.push(c.checked_div(&n(i as i64 + 1))?);
    }
    let (a, b, c) = (e.a().clone(), e.b().clone(), e.c().clone());
    coeffs[0] = -(b.clone() * b - n(4) * a * c).checked_div(&n(12))?;
    let big_g = UniPoly::new(&ctx, coeffs);
    let holds = Some(&big_g.scale(&n(12))) == division_polynomial(e, 3).as_plain();
    Ok((big_g, holds))
}

/// `Disc(Psi_{m-1} Psi_{m+1}) / Res(phi_{E,m})` with its factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResDiscExperiment {
    pub m: usize,
    pub disc: Rational,
    pub res: Rational,
    pub ratio: Rational,
    pub sign: i8,
    /// Primes with exponents; negative exponents come from the denominator.
    pub factorization: Vec<(BigInt, i64)>,
    /// Part of `|ratio|` left after trial division, if any.
    pub unfactored: Option<Rational>,
    /// Every prime factor of `|ratio|` divides `2 (m-1) (m+1)`.
    pub primes_divide_2_m_pm_1: bool,
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn trial_factor(mut n: BigInt) -> (Vec<(BigInt, i64)>, BigInt) {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() && n.to_u64().is_some_and(|v| v <= TRIAL_LIMIT * TRIAL_LIMIT) {
        out.push((n, 1));
        n = BigInt::one();
    }
    (out, n)
}

/// Compares the discriminant of the fixed-point polynomial with the
/// resultant of the unreduced pair `(x Psi_m^2 - Psi_{m-1} Psi_{m+1}, Psi_m^2)`.
pub fn res_disc_experiment(e: &EllCurve<Rational>, m: usize) -> Result<ResDiscExperiment> {
    let l = lattes_map(e, m)?;
    let deg = m * m;
    let num = BiForm::homogenize(&l.natural_num, deg)?;
    let den = BiForm::homogenize(&l.natural_den, deg)?;
    let res = resultant(&num, &den);
    let g = e.g();
    let psi = division_polynomials(e, m + 1);
    let prod = plain(&psi[m - 1].mul(&psi[m + 1], &g), "Psi_{m-1} Psi_{m+1}")?;
    let prod_form = BiForm::homogenize(&prod, prod.degree().unwrap_or(0))?;
    let disc = discriminant(&prod_form)?.value;
    if Zero::is_zero(&res) {
        return Err(Error::RatioUndefined("Res(phi_{E,m})"));
    }
    if Zero::is_zero(&disc) {
        return Err(Error::RatioUndefined("Disc(Psi_{m-1} Psi_{m+1})"));
    }
    let ratio = disc.clone() / res.clone();
    let sign = if Signed::is_negative(&ratio) { -1 } else { 1 };
    let (mut factorization, rest_num) = trial_factor(ratio.numer().abs());
    let (den_factors, rest_den) = trial_factor(ratio.denom().clone());
    factorization.extend(den_factors.into_iter().map(|(p, e)| (p, -e)));
    factorization.sort();
    let rest = Rational::new(rest_num, rest_den);
    let unfactored = (!One::is_one(&rest)).then_some(rest);
    let bound = BigInt::from(2 * (m as u64 - 1) * (m as u64 + 1));
    let primes_divide_2_m_pm_1 = unfactored.is_none() && factorization.iter().all(|(p, _)| bound.is_multiple_of(p));
    Ok(ResDiscExperiment { m, disc, res, ratio, sign, factorization, unfactored, primes_divide_2_m_pm_1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmFamily {
    /// `y^2 = x^3 + b x`.
    J1728,
    /// `y^2 = x^3 + c`.
    J0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmCheck<T: Field> {
    pub label: &'static str,
    pub form: BiForm<T>,
    pub chi: Option<T>,
    pub automorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmReport<T: Field> {
    pub family: CmFamily,
    /// `x -> -x` for `j = 1728`, `x -> zeta_3 x` for `j = 0`.
    pub action: Option<Moebius<T>>,
    pub skipped: Option<&'static str>,
    pub checks: Vec<CmCheck<T>>,
}

/// The 2-torsion form `g(X, Y)` and the 3-torsion form `Psi_3(X, Y)`.
pub fn torsion_forms<T: Field>(e: &EllCurve<T>) -> Result<[(&'static str, BiForm<T>); 2]> {
    let psi3 = plain(&division_polynomial(e, 3), "Psi_3")?;
    Ok([("2-torsion", BiForm::homogenize(&e.g(), 3)?), ("3-torsion", BiForm::homogenize(&psi3, 4)?)])
}

pub fn cm_automorphism_suite<T: Field>(e: &EllCurve<T>) -> Result<CmReport<T>> {
    let ctx = e.ctx();
    let family = match (e.a().is_zero(), e.b().is_zero(), e.c().is_zero()) {
        (true, false, true) => CmFamily::J1728,
        (true, true, false) => CmFamily::J0,
        _ => return Err(Error::NotCmFamily),
    };
    let action = match family {
        CmFamily::J1728 => Some(Moebius::diag(-T::one(&ctx), T::one(&ctx))?),
        CmFamily::J0 => T::cube_root_of_unity(&ctx).map(|z| Moebius::diag(z, T::one(&ctx))).transpose()?,
    };
    let Some(g) = action.clone() else {
        return Ok(CmReport { family, action, skipped: Some("no cube root of unity in field"), checks: Vec::new() });
    };
    let mut checks = Vec::new();
    for (label, form) in torsion_forms(e)? {
        let chi = invariance_check(&form, &g);
        let automorphism = is_automorphism(&build_phi(&form)?, &g);
        checks.push(CmCheck { label, form, chi, automorphism });
    }
    Ok(CmReport { family, action, skipped: None, checks })
}
