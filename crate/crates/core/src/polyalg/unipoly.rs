use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::polyalg::field::{Field, Rational};

/// A univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<T: Field> {
    coeffs: Vec<T>,
    ctx: T::Ctx,
}

impl<T: Field> UniPoly<T> {
    pub fn new(ctx: &T::Ctx, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, ctx: ctx.clone() }
    }

    pub fn from_i64s(ctx: &T::Ctx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| T::from_i64(ctx, c)).collect())
    }

    pub fn zero(ctx: &T::Ctx) -> Self {
        UniPoly { coeffs: Vec::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &T::Ctx) -> Self {
        Self::constant(T::one(ctx))
    }

    pub fn constant(c: T) -> Self {
        let ctx = c.ctx();
        Self::new(&ctx, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(ctx: &T::Ctx) -> Self {
        Self::new(ctx, vec![T::zero(ctx), T::one(ctx)])
    }

    /// `x - r`.
    pub fn linear_root(r: &T) -> Self {
        let ctx = r.ctx();
        Self::new(&ctx, vec![-r.clone(), T::one(&ctx)])
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(|| T::zero(&self.ctx))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| T::from_i64(&self.ctx, i as i64) * c.clone())
            .collect();
        Self::new(&self.ctx, coeffs)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs, ctx: self.ctx.clone() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.lead().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.inv()?))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero { context: "polynomial division" })?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(&self.ctx), Self::zero(&self.ctx)));
        };
        if nd < dd {
            return Ok((Self::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![T::zero(&self.ctx); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(&self.ctx, quot), Self::new(&self.ctx, rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if T::characteristic(&self.ctx) == 0 {
            if let (Some(a), Some(b)) = (self.to_rational_poly(), other.to_rational_poly()) {
                return Self::from_rational_poly(&self.ctx, &crate::polyalg::modular::gcd_q(&a, &b));
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().unwrap_or(a)
    }

    fn to_rational_poly(&self) -> Option<UniPoly<Rational>> {
        let c: Option<Vec<Rational>> = self.coeffs.iter().map(|c| c.to_rational()).collect();
        Some(UniPoly::new(&(), c?))
    }

    fn from_rational_poly(ctx: &T::Ctx, p: &UniPoly<Rational>) -> Self {
        let c = p.coeffs().iter().map(|c| T::from_fraction(ctx, c.numer(), c.denom()).expect("char 0 field"));
        Self::new(ctx, c.collect())
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ctx), Self::zero(ctx));
        let (mut t0, mut t1) = (Self::zero(ctx), Self::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            Some(l) => {
                let inv = l.inv().expect("nonzero lead");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Inverse of `self` modulo `modulus`, when they are coprime.
    pub fn inverse_mod(&self, modulus: &Self) -> Option<Self> {
        let (g, s, _) = self.xgcd(modulus);
        if g.degree() == Some(0) {
            s.rem(modulus).ok()
        } else {
            None
        }
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.is_zero() {
            return self.clone();
        }
        self.exact_div(&g).expect("gcd divides")
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear_root(r);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(next) = p.exact_div(&lin) {
            p = next;
            m += 1;
        }
        m
    }

    /// Renders with the given variable name in the CLI grammar.
    pub fn display_with(&self, var: &str) -> String {
        let terms: Vec<(T, Vec<(String, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), vec![(var.to_string(), i)]))
            .collect();
        render_terms(&terms, &self.ctx)
    }
}

/// Shared term printer: `coefficient*v1^e1*v2^e2 + ...`.
pub(crate) fn render_terms<T: Field>(terms: &[(T, Vec<(String, usize)>)], ctx: &T::Ctx) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, vars)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let monomial: Vec<String> = vars
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if monomial.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if mag != T::one(ctx) {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&monomial.join("*"));
        }
    }
    out
}

impl<T: Field> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl<T: Field> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(&self.ctx, coeffs)
    }
}

impl<T: Field> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(&self.ctx, coeffs)
    }
}

impl<T: Field> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.ctx);
        }
        let mut coeffs = vec![T::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(&self.ctx, coeffs)
    }
}

impl<T: Field> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::new(&self.ctx, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}
