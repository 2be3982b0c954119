//! Polynomial expressions.
//!
//! Terms are joined by `+` or `-`. A term is an optional coefficient
//! (`7` or `7/3`) followed by variables with optional exponents (`X^2`),
//! with `*` optional between factors. Whitespace is ignored.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pdyn_core::{BiForm, Field, UniPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `X` and `Y`, every term of the same total degree.
    Homogeneous,
    /// `x` only.
    Affine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { column: usize, message: String },
    NotHomogeneous { term: String, degree: usize, expected: usize },
    ZeroPolynomial,
    ConstantForm,
    Field(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { column, message } => write!(f, "parse error at column {column}: {message}"),
            ParseError::NotHomogeneous { term, degree, expected } => {
                write!(f, "not homogeneous: term `{term}` has degree {degree}, expected {expected}")
            }
            ParseError::ZeroPolynomial => f.write_str("zero polynomial"),
            ParseError::ConstantForm => f.write_str("a binary form needs degree at least 1"),
            ParseError::Field(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for ParseError {}

/// One parsed term: `num/den * X^i * Y^j` (or `x^i`).
#[derive(Clone, Debug)]
struct Term {
    num: BigInt,
    den: BigInt,
    x: usize,
    y: usize,
    text: String,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// 1-based column of the next character (or one past the end).
    fn column(&self) -> usize {
        let byte = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        self.src[..byte].chars().count() + 1
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { column: self.column(), message: message.into() })
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn byte_at(&self, pos: usize) -> usize {
        self.chars.get(pos).map_or(self.src.len(), |&(i, _)| i)
    }
}

fn parse_terms(src: &str, mode: Mode) -> Result<Vec<Term>, ParseError> {
    let mut lx = Lexer::new(src);
    if lx.peek().is_none() {
        return lx.err("empty expression");
    }
    let mut terms = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let mut negative = false;
        match lx.peek() {
            Some('+') => lx.pos += 1,
            Some('-') => {
                negative = true;
                lx.pos += 1;
            }
            _ if first => {}
            Some(c) => return lx.err(format!("expected `+` or `-`, found `{c}`")),
            None => unreachable!(),
        }
        first = false;
        let body = lx.pos;

        let (mut num, mut den) = (BigInt::one(), BigInt::one());
        let mut have_coeff = false;
        if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
            num = lx.integer()?;
            if lx.peek() == Some('/') {
                lx.pos += 1;
                den = lx.integer()?;
                if den.is_zero() {
                    lx.pos -= 1;
                    return lx.err("zero denominator");
                }
            }
            have_coeff = true;
        }
        let (mut x, mut y) = (0usize, 0usize);
        let mut factors = 0;
        loop {
            let star = lx.peek() == Some('*');
            if star {
                if !have_coeff && factors == 0 {
                    return lx.err("`*` needs a factor before it");
                }
                lx.pos += 1;
            }
            let var = match (lx.peek(), mode) {
                (Some('X'), Mode::Homogeneous) => 'X',
                (Some('Y'), Mode::Homogeneous) => 'Y',
                (Some('x'), Mode::Affine) => 'x',
                (Some(c), _) if star => {
                    let want = if mode == Mode::Homogeneous { "`X` or `Y`" } else { "`x`" };
                    return lx.err(format!("expected {want}, found `{c}`"));
                }
                (None, _) if star => return lx.err("expression ends after `*`"),
                _ => break,
            };
            lx.pos += 1;
            let mut e = 1usize;
            if lx.peek() == Some('^') {
                lx.pos += 1;
                let v = lx.integer()?;
                e = usize::try_from(v).or_else(|_| lx.err("exponent too large"))?;
            }
            if var == 'Y' {
                y += e;
            } else {
                x += e;
            }
            factors += 1;
        }
        if !have_coeff && factors == 0 {
            return match lx.peek() {
                Some(c) => lx.err(format!("unexpected `{c}`")),
                None => lx.err("expression ends after a sign"),
            };
        }
        if negative {
            num = -num;
        }
        let text = src[lx.byte_at(body)..lx.byte_at(lx.pos)].trim().to_string();
        terms.push(Term { num, den, x, y, text });
    }
    Ok(terms)
}

fn coeff<T: Field>(ctx: &T::Ctx, t: &Term) -> Result<T, ParseError> {
    T::from_fraction(ctx, &t.num, &t.den).map_err(|e| ParseError::Field(e.to_string()))
}

pub fn parse_form<T: Field>(ctx: &T::Ctx, src: &str) -> Result<BiForm<T>, ParseError> {
    let terms = parse_terms(src, Mode::Homogeneous)?;
    let d = terms[0].x + terms[0].y;
    for t in &terms {
        if t.x + t.y != d {
            return Err(ParseError::NotHomogeneous { term: t.text.clone(), degree: t.x + t.y, expected: d });
        }
    }
    if d == 0 {
        return Err(ParseError::ConstantForm);
    }
    let mut coeffs = vec![T::zero(ctx); d + 1];
    for t in &terms {
        coeffs[t.x] = coeffs[t.x].clone() + coeff(ctx, t)?;
    }
    let f = BiForm::from_ascending(ctx, coeffs);
    if f.is_zero() {
        return Err(ParseError::ZeroPolynomial);
    }
    Ok(f)
}

pub fn parse_poly<T: Field>(ctx: &T::Ctx, src: &str) -> Result<UniPoly<T>, ParseError> {
    let terms = parse_terms(src, Mode::Affine)?;
    let d = terms.iter().map(|t| t.x).max().unwrap_or(0);
    let mut coeffs = vec![T::zero(ctx); d + 1];
    for t in &terms {
        coeffs[t.x] = coeffs[t.x].clone() + coeff(ctx, t)?;
    }
    let f = UniPoly::new(ctx, coeffs);
    if f.is_zero() {
        return Err(ParseError::ZeroPolynomial);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pdyn_core::{q, Fp, Modulus, Rational};

    #[test]
    fn alpha_two_form() {
        let f = parse_form::<Rational>(&(), "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3").unwrap();
        assert_eq!(f, BiForm::from_i64s_desc(&(), &[0, 1, -3, 2, 0]));
        assert_eq!(parse_form::<Rational>(&(), "2XY^3 + X^3 Y - 3X^2Y^2").unwrap(), f);
    }

    #[test]
    fn affine_and_rational_coefficients() {
        let f = parse_poly::<Rational>(&(), "x^3 - x").unwrap();
        assert_eq!(f, UniPoly::from_i64s(&(), &[0, -1, 0, 1]));
        let g = parse_poly::<Rational>(&(), "-1/2*x + 3/4").unwrap();
        assert_eq!(g.coeff(1), q(-1) / q(2));
        assert_eq!(g.coeff(0), q(3) / q(4));
    }

    #[test]
    fn rejections() {
        let e = parse_form::<Rational>(&(), "X^2 + X*Y^2").unwrap_err();
        assert!(e.to_string().starts_with("not homogeneous"), "{e}");
        assert_eq!(parse_form::<Rational>(&(), "X*Y - Y*X"), Err(ParseError::ZeroPolynomial));
        assert_eq!(parse_form::<Rational>(&(), "5"), Err(ParseError::ConstantForm));
        let e = parse_form::<Rational>(&(), "X^2 + + Y^2").unwrap_err();
        assert_eq!(e, ParseError::Syntax { column: 7, message: "unexpected `+`".into() });
        assert!(matches!(parse_form::<Rational>(&(), "X^2 + Z"), Err(ParseError::Syntax { column: 7, .. })));
        assert!(matches!(parse_poly::<Rational>(&(), "x^2 + 1/0"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_poly::<Rational>(&(), ""), Err(ParseError::Syntax { column: 1, .. })));
    }

    #[test]
    fn reduces_into_prime_fields() {
        let p = Modulus::new(2).unwrap();
        let f = parse_form::<Fp>(&p, "X^2 + X*Y + Y^2").unwrap();
        assert_eq!(f.degree(), 2);
        assert!(matches!(parse_form::<Fp>(&p, "1/2*X^2 + Y^2"), Err(ParseError::Field(_))));
    }
}
