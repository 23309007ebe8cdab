use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::{Field, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element of `k(T)`, stored as `num/den` with `den` monic and
/// `gcd(num, den) = 1`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let base = num.field().clone();
        if num.is_zero() {
            return Some(RatFunc::zero(base));
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = (num.div_exact(&g), den.div_exact(&g));
        let inv = den.lead().inv()?;
        Some(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero(base: Field) -> Self {
        RatFunc { num: Poly::zero(base.clone()), den: Poly::one(base) }
    }

    pub fn constant(c: Scalar) -> Self {
        let base = c.field();
        RatFunc { num: Poly::constant(c), den: Poly::one(base) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let base = p.field().clone();
        RatFunc { num: p, den: Poly::one(base) }
    }

    pub fn base(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        RatFunc::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn parse(base: &Field, s: &str) -> Result<RatFunc> {
        parse_expr(base, s)
    }
}

fn wrap(p: &Poly) -> String {
    let s = p.display_with("T");
    let compound = s.chars().skip(1).any(|c| c == '+' || c == '-');
    if compound {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.display_with("T"))
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c == 't' || c == 'T' {
            out.push(Tok::Var);
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    base: &'a Field,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::Parse(format!("malformed rational function {:?}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.mul(&d.inv().ok_or_else(|| self.err())?);
            } else if matches!(self.peek(), Some(Tok::Var) | Some(Tok::Op('('))) {
                acc = acc.mul(&self.unary()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(self.err());
            };
            self.pos += 1;
            let e: u32 = n.try_into().map_err(|_| self.err())?;
            let mut acc = RatFunc::constant(self.base.one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let q = BigRational::from_integer(n);
                let c = match self.base {
                    Field::Rational => Scalar::Rational(q),
                    Field::Prime(_) => self.base.parse_scalar(&q.to_string())?,
                    Field::Function(_) => return Err(self.err()),
                };
                Ok(RatFunc::constant(c))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(RatFunc::from_poly(Poly::x(self.base.clone())))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                Ok(e)
            }
            _ => Err(self.err()),
        }
    }
}

/// Parses an arithmetic expression in `t`/`T` over a base field.
pub(crate) fn parse_expr(base: &Field, s: &str) -> Result<RatFunc> {
    if matches!(base, Field::Function(_)) {
        return Err(Error::Unsupported("nested rational function fields".into()));
    }
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, base, src: s };
    if p.toks.is_empty() {
        return Err(p.err());
    }
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced_with_monic_denominator() {
        let q = Field::Rational;
        let a = parse_expr(&q, "(2*T^2-2)/(4*T+4)").unwrap();
        assert_eq!(a.to_string(), "1/2*T-1/2");
        let b = parse_expr(&q, "(t^2+1)/(t-3)").unwrap();
        assert_eq!(b.to_string(), "(T^2+1)/(T-3)");
        assert_eq!(parse_expr(&q, &b.to_string()).unwrap(), b);
    }

    #[test]
    fn arithmetic_over_function_field() {
        let q = Field::Rational;
        let t = RatFunc::from_poly(Poly::x(q.clone()));
        let inv = t.inv().unwrap();
        assert!(t.mul(&inv).is_one());
        let s = t.add(&inv);
        assert_eq!(s.to_string(), "(T^2+1)/T");
        assert!(s.sub(&s).is_zero());
        assert!(RatFunc::zero(q).inv().is_none());
    }

    #[test]
    fn prime_base_parsing() {
        let f3 = Field::Prime(3);
        let a = parse_expr(&f3, "T/(2*T+1)").unwrap();
        // 2T+1 = 2(T+2) in F3, so T/(2T+1) = 2T/(T+2)
        assert_eq!(a.to_string(), "2*T/(T+2)");
        assert!(parse_expr(&f3, "1/(3)").is_err());
    }
}
