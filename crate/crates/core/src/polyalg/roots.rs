//! Roots lying in the base field.
//!
//! Over Q a rational root `u/v` of an integer polynomial with leading
//! coefficient `l` satisfies `v | l`, so `w = l*u/v` is an integer bounded by
//! `|l| + max|a_i|`. Rather than enumerating divisors of possibly huge
//! coefficients, the candidates `w` are recovered from simple roots modulo a
//! small prime, Hensel-lifted past twice that bound. Over F_p the search is
//! exhaustive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyalg::biform::BiForm;
use crate::polyalg::field::{is_prime_u64, Field, Fp, Rational};
use crate::polyalg::point::ProjPoint;
use crate::polyalg::unipoly::UniPoly;

/// Largest prime for which exhaustive root search is attempted.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 24;

/// Projective roots in the base field with their multiplicities, affine
/// roots ascending, infinity (present iff `a_d = 0`) last.
pub fn rational_roots<T: Field>(f: &BiForm<T>) -> Result<Vec<(ProjPoint<T>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.dehomogenize();
    let mut out: Vec<(ProjPoint<T>, usize)> = T::roots_in_field(&g)?
        .into_iter()
        .map(|r| {
            let m = g.root_multiplicity(&r);
            (ProjPoint::affine(r), m)
        })
        .collect();
    let inf = f.infinity_multiplicity();
    if inf > 0 {
        out.push((ProjPoint::infinity(f.ctx()), inf));
    }
    Ok(out)
}

/// Distinct roots of a nonzero polynomial over F_p, ascending.
pub fn roots_fp(f: &UniPoly<Fp>) -> Result<Vec<Fp>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = *f.ctx();
    if p.get() > EXHAUSTIVE_LIMIT {
        return Err(Error::FieldTooLarge(p.get()));
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    Ok((0..p.get()).map(|v| Fp::from_u64(v, p)).filter(|x| f.eval(x).is_zero()).collect())
}

/// Integer coefficients with content removed, lowest degree first.
fn integer_primitive(f: &UniPoly<Rational>) -> Vec<BigInt> {
    let s = Rational::primitive_scale(f.coeffs()).expect("nonzero polynomial");
    f.coeffs()
        .iter()
        .map(|c| {
            let v = c * &s;
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

fn eval_mod(coeffs: &[BigInt], x: u64, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let mut acc: u128 = 0;
    for c in coeffs.iter().rev() {
        let cm = c.mod_floor(&pb).to_u64().unwrap() as u128;
        acc = (acc * x as u128 + cm) % p as u128;
    }
    acc as u64
}

fn eval_big_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn derivative_int(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Squarefree mod p and p does not divide the leading coefficient.
fn good_prime(coeffs: &[BigInt], p: u64) -> bool {
    let modulus = crate::polyalg::field::Modulus::new(p).expect("prime");
    let lead = coeffs.last().unwrap();
    if (lead % BigInt::from(p)).is_zero() {
        return false;
    }
    let fp = UniPoly::<Fp>::new(&modulus, coeffs.iter().map(|c| Fp::from_bigint(&modulus, c)).collect());
    fp.gcd(&fp.derivative()).degree() == Some(0)
}

/// Distinct rational roots of a nonzero rational polynomial, ascending.
pub fn rational_roots_q(f: &UniPoly<Rational>) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut g = f.clone();
    if Zero::is_zero(&g.coeff(0)) {
        roots.push(<Rational as Zero>::zero());
        let k = g.coeffs().iter().position(|c| !Zero::is_zero(c)).unwrap();
        g = UniPoly::new(&(), g.coeffs()[k..].to_vec());
    }
    if g.degree().unwrap_or(0) >= 1 {
        let sf = g.squarefree_part();
        roots.extend(lifted_roots(&integer_primitive(&sf)));
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn lifted_roots(coeffs: &[BigInt]) -> Vec<Rational> {
    let deg = coeffs.len() - 1;
    if deg == 1 {
        return vec![Rational::new(-coeffs[0].clone(), coeffs[1].clone())];
    }
    let lead = coeffs[deg].clone();
    let max_coeff = coeffs.iter().map(|c| c.abs()).max().unwrap();
    let bound = lead.abs() + max_coeff;
    let p = (3u64..)
        .filter(|&p| is_prime_u64(p))
        .find(|&p| good_prime(coeffs, p))
        .expect("a squarefree integer polynomial is squarefree modulo all but finitely many primes");
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut exponent = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        exponent += 1;
    }
    let deriv = derivative_int(coeffs);
    let mut found = Vec::new();
    for r0 in (0..p).filter(|&x| eval_mod(coeffs, x, p) == 0) {
        // Quadratic Hensel lifting from p to p^exponent.
        let mut r = BigInt::from(r0);
        let mut prec = 1u32;
        while prec < exponent {
            prec = (prec * 2).min(exponent);
            let m = pb.pow(prec);
            let fv = eval_big_mod(coeffs, &r, &m);
            let dv = eval_big_mod(&deriv, &r, &m);
            let inv = mod_inverse(&dv, &m).expect("simple root modulo a good prime");
            r = (r - fv * inv).mod_floor(&m);
        }
        let mut w = (&lead * &r).mod_floor(&modulus);
        if w > &modulus / 2 {
            w -= &modulus;
        }
        let cand = Rational::new(w, lead.clone());
        let value = coeffs.iter().rev().fold(<Rational as Zero>::zero(), |acc, c| acc * &cand + Rational::from_integer(c.clone()));
        if Zero::is_zero(&value) {
            found.push(cand);
        }
    }
    found
}
