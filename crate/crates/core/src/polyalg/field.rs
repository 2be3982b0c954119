//! Exact scalar fields.
//!
//! All of the algebra in this crate is written against [`Field`]. Two
//! implementations are provided: arbitrary-precision rationals
//! ([`Rational`]) and residues modulo a prime chosen at run time ([`Fp`]).
//! Because the prime is a run-time value, field elements carry a context
//! (`Field::Ctx`) that constructors of zero and one need; for the rationals
//! the context is `()`.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyalg::roots;
use crate::polyalg::unipoly::UniPoly;

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = BigRational;

/// An exact field usable as a coefficient domain.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Run-time data identifying the field (the modulus for prime fields).
    type Ctx: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// `num / den`; fails when `den` vanishes in the field.
    fn from_fraction(ctx: &Self::Ctx, num: &BigInt, den: &BigInt) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    /// 0 for the rationals, p for F_p.
    fn characteristic(ctx: &Self::Ctx) -> u64;
    /// Sign used by normalization; always false in prime fields.
    fn is_negative(&self) -> bool;
    /// Total order used only for deterministic output (value order over Q,
    /// residue order over F_p).
    fn canonical_cmp(&self, other: &Self) -> Ordering;
    /// The scalar `s` such that `s * coeffs` is the canonical representative
    /// of the projective class of `coeffs`; `None` if every entry is zero.
    fn primitive_scale(coeffs: &[Self]) -> Option<Self>;
    /// Distinct roots in the field of a nonzero polynomial, ascending.
    fn roots_in_field(poly: &UniPoly<Self>) -> Result<Vec<Self>>;
    /// An element of multiplicative order 3, when the field has one.
    fn cube_root_of_unity(ctx: &Self::Ctx) -> Option<Self>;
    /// The value as a rational number, when the field is Q.
    fn to_rational(&self) -> Option<Rational>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        <Rational as Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <Rational as One>::one()
    }

    fn from_i64(_: &(), n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_bigint(_: &(), n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn from_fraction(_: &(), num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero { context: "rational literal" });
        }
        Ok(Rational::new(num.clone(), den.clone()))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero { context: "rational inverse" });
        }
        Ok(self.recip())
    }

    fn characteristic(_: &()) -> u64 {
        0
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn primitive_scale(coeffs: &[Self]) -> Option<Self> {
        let first = coeffs.iter().find(|c| !Zero::is_zero(*c))?;
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut s = Rational::new(den_lcm, num_gcd);
        if Signed::is_negative(first) {
            s = -s;
        }
        Some(s)
    }

    fn roots_in_field(poly: &UniPoly<Self>) -> Result<Vec<Self>> {
        roots::rational_roots_q(poly)
    }

    fn cube_root_of_unity(_: &()) -> Option<Self> {
        None
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(Modulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue modulo a prime, stored as its representative in `[0, p)`.
///
/// Combining residues of different moduli is a logic error and panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: Modulus,
}

impl Fp {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let p = modulus.0 as i128;
        let v = (value as i128).rem_euclid(p) as u64;
        Fp { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: Modulus) -> Self {
        Fp { value: value % modulus.0, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn same_field(self, rhs: Fp) -> u64 {
        assert_eq!(
            self.modulus, rhs.modulus,
            "mixed prime-field operands: F_{} and F_{}",
            self.modulus, rhs.modulus
        );
        self.modulus.0
    }
}

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        let s = (self.value as u128 + rhs.value as u128) % p as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        let s = (self.value as u128 + p as u128 - rhs.value as u128) % p as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let p = self.same_field(rhs);
        let s = (self.value as u128 * rhs.value as u128) % p as u128;
        Fp { value: s as u64, modulus: self.modulus }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let p = self.modulus.0;
        Fp { value: if self.value == 0 { 0 } else { p - self.value }, modulus: self.modulus }
    }
}

impl Field for Fp {
    type Ctx = Modulus;

    fn ctx(&self) -> Modulus {
        self.modulus
    }

    fn zero(ctx: &Modulus) -> Self {
        Fp { value: 0, modulus: *ctx }
    }

    fn one(ctx: &Modulus) -> Self {
        Fp::from_u64(1, *ctx)
    }

    fn from_i64(ctx: &Modulus, n: i64) -> Self {
        Fp::new(n, *ctx)
    }

    fn from_bigint(ctx: &Modulus, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(ctx.0));
        Fp::from_u64(r.to_u64().expect("reduced residue fits in u64"), *ctx)
    }

    fn from_fraction(ctx: &Modulus, num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Self::from_bigint(ctx, den);
        if d.value == 0 {
            return Err(Error::CharacteristicCollision { context: "rational literal" });
        }
        Ok(Self::from_bigint(ctx, num) * d.inv()?)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::CharacteristicCollision { context: "prime-field inverse" });
        }
        Ok(Field::pow(self, self.modulus.0 - 2))
    }

    fn characteristic(ctx: &Modulus) -> u64 {
        ctx.0
    }

    fn is_negative(&self) -> bool {
        false
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }

    fn primitive_scale(coeffs: &[Self]) -> Option<Self> {
        coeffs.iter().find(|c| c.value != 0).map(|c| c.inv().expect("nonzero residue"))
    }

    fn roots_in_field(poly: &UniPoly<Self>) -> Result<Vec<Self>> {
        roots::roots_fp(poly)
    }

    fn cube_root_of_unity(ctx: &Modulus) -> Option<Self> {
        let p = ctx.0;
        if p % 3 != 1 {
            return None;
        }
        (2..p).map(|g| Field::pow(&Fp::from_u64(g, *ctx), (p - 1) / 3)).find(|z| z.value != 1)
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`.
pub fn q2(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
