//! Multi-modular evaluation of `prod (t - num(r)/den(r))` over the roots of a
//! rational polynomial.
//!
//! With `psi`, `num`, `den` scaled to integer polynomials (`num` and `den`
//! by the same factor), `R(t) = Res_x(psi, t den - num)` has integer
//! coefficients, and its leading coefficient is `Res_x(psi, den)`. Each
//! coefficient is bounded via Hadamard's inequality on the Sylvester rows, so
//! reducing modulo enough primes and lifting with CRT recovers `R` exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::biform::BiForm;
use crate::polyalg::field::{is_prime_u64, Field, Fp, Modulus, Rational};
use crate::polyalg::matrix::charpoly;
use crate::polyalg::resultant::resultant;
use crate::polyalg::unipoly::UniPoly;

/// Integer coefficients of `polys` after multiplying all of them by one
/// common positive factor.
fn clear_denominators(polys: &[&UniPoly<Rational>]) -> Vec<Vec<BigInt>> {
    let l = polys
        .iter()
        .flat_map(|p| p.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    polys
        .iter()
        .map(|p| p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect())
        .collect()
}

/// Upper bound on `log2 ||v||_2`.
fn log2_norm(v: &[BigInt]) -> f64 {
    let bits = v.iter().map(|c| c.bits()).max().unwrap_or(0) as f64;
    bits + 0.5 * (v.len().max(1) as f64).log2()
}

fn reduce(ctx: &Modulus, v: &[BigInt]) -> UniPoly<Fp> {
    UniPoly::new(ctx, v.iter().map(|c| Fp::from_bigint(ctx, c)).collect())
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let g = content(&v);
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Primitive part of the pseudo-remainder of `a` by `b` (both nonzero).
fn primitive_prem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while a.len() > db {
        let la = a.last().expect("nonempty").clone();
        let shift = a.len() - 1 - db;
        for c in a.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            a[shift + j] -= &la * bc;
        }
        a = primitive(a);
    }
    a
}

/// Monic gcd over Q.
///
/// A gcd of degree 0 modulo a prime not dividing either leading coefficient
/// settles the common coprime case at once; otherwise a primitive remainder
/// sequence over Z keeps the coefficients small.
pub fn gcd_q(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> UniPoly<Rational> {
    if a.is_zero() || b.is_zero() {
        let g = if a.is_zero() { b } else { a };
        return g.monic().unwrap_or_else(|_| g.clone());
    }
    let mut ab = clear_denominators(&[a]);
    ab.extend(clear_denominators(&[b]));
    let (mut x, mut y) = (primitive(ab[0].clone()), primitive(ab[1].clone()));
    let mut p: u64 = (1 << 61) - 1;
    let mut tried = 0;
    while tried < 2 {
        p -= 2;
        if !is_prime_u64(p) {
            continue;
        }
        let ctx = Modulus::new(p).expect("prime");
        let (xp, yp) = (reduce(&ctx, &x), reduce(&ctx, &y));
        if xp.degree() != Some(x.len() - 1) || yp.degree() != Some(y.len() - 1) {
            continue;
        }
        tried += 1;
        if xp.gcd(&yp).degree() == Some(0) {
            return UniPoly::one(&());
        }
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = primitive_prem(x, &y);
        x = std::mem::replace(&mut y, r);
        if y.is_empty() {
            break;
        }
    }
    let g = if y.is_empty() { x } else { vec![BigInt::one()] };
    let g = UniPoly::new(&(), g.into_iter().map(Rational::from_integer).collect());
    g.monic().expect("nonzero gcd")
}

/// Charpoly of multiplication by `num/den` on `F_p[x]/(psi)`; `None` when
/// `den` is not a unit there.
pub fn charpoly_of_quotient<T: Field>(psi: &UniPoly<T>, num: &UniPoly<T>, den: &UniPoly<T>) -> Result<Option<UniPoly<T>>> {
    let ctx = psi.ctx();
    let k = psi.degree().ok_or(Error::ZeroPolynomial)?;
    if k == 0 {
        return Ok(Some(UniPoly::one(ctx)));
    }
    let psi = psi.monic()?;
    let Some(den_inv) = den.rem(&psi)?.inverse_mod(&psi) else {
        return Ok(None);
    };
    let hmod = (&num.rem(&psi)? * &den_inv).rem(&psi)?;
    let mut matrix = vec![vec![T::zero(ctx); k]; k];
    let mut col = hmod;
    for j in 0..k {
        for (i, row) in matrix.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        col = col.shift(1).rem(&psi)?;
    }
    Ok(Some(charpoly(ctx, matrix)))
}

/// Exact `prod (t - num(r)/den(r))` over the roots of `psi` in an algebraic
/// closure of Q, or `None` when `den` vanishes at one of them.
pub fn charpoly_of_quotient_q(
    psi: &UniPoly<Rational>,
    num: &UniPoly<Rational>,
    den: &UniPoly<Rational>,
) -> Result<Option<UniPoly<Rational>>> {
    let k = psi.degree().ok_or(Error::ZeroPolynomial)?;
    if k == 0 {
        return Ok(Some(UniPoly::one(&())));
    }
    if den.is_zero() {
        return Ok(None);
    }
    let m = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
    let psi_z = clear_denominators(&[psi]).pop().expect("one polynomial");
    let mut nd = clear_denominators(&[num, den]);
    let den_z = nd.pop().expect("two polynomials");
    let num_z = nd.pop().expect("two polynomials");
    let lead = psi_z.last().expect("nonzero").clone();

    // Sylvester rows: m copies of psi, k copies of (t den - num).
    let g_norm = log2_norm(&num_z).max(log2_norm(&den_z)) + 1.0;
    let bound_bits = (m as f64) * log2_norm(&psi_z) + (k as f64) * g_norm;
    let needed_bits = bound_bits.ceil() as u64 + 2;

    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); k + 1];
    let mut p: u64 = (1 << 62) - 1;
    // Res(psi, den) != 0 is confirmed by one prime where it survives; after
    // a few vanishing residues fall back to an exact gcd.
    let mut unit_seen = false;
    let mut vanished = 0;
    while modulus.bits() <= needed_bits {
        p -= 2;
        if !is_prime_u64(p) {
            continue;
        }
        let ctx = Modulus::new(p)?;
        if Fp::from_bigint(&ctx, &lead).is_zero() {
            continue;
        }
        let (psi_p, num_p, den_p) = (reduce(&ctx, &psi_z), reduce(&ctx, &num_z), reduce(&ctx, &den_z));
        let res_p = resultant(&BiForm::homogenize(&psi_p, k)?, &BiForm::homogenize(&den_p, m)?);
        if res_p.is_zero() {
            vanished += 1;
            if !unit_seen && vanished == 3 {
                if !psi.gcd(den).is_constant() {
                    return Ok(None);
                }
                unit_seen = true;
            }
            continue;
        }
        unit_seen = true;
        let Some(chi_p) = charpoly_of_quotient(&psi_p, &num_p, &den_p)? else {
            continue;
        };
        let pb = BigInt::from(p);
        let m_inv = Fp::from_bigint(&ctx, &modulus).inv()?;
        for (i, a) in acc.iter_mut().enumerate() {
            let r = res_p * chi_p.coeff(i);
            // a + M ((r - a) M^-1 mod p)
            let delta = (r - Fp::from_bigint(&ctx, a)) * m_inv;
            *a += &modulus * BigInt::from(delta.value());
        }
        modulus *= pb;
    }
    let half = &modulus >> 1;
    let lifted: Vec<BigInt> = acc.into_iter().map(|a| if a > half { a - &modulus } else { a }).collect();
    let top = lifted[k].clone();
    let coeffs = lifted.iter().map(|c| Rational::new(c.clone(), top.clone())).collect();
    Ok(Some(UniPoly::new(&(), coeffs)))
}
