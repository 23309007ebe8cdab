use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// The exact scalar fields supported by the engine.
///
/// `Function` is the rational function field `k(T)` over a base `k` that is
/// itself `Rational` or `Prime`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
    Function(Box<Field>),
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} exceeds 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn function(base: Field) -> Result<Self> {
        match base {
            Field::Rational | Field::Prime(_) => Ok(Field::Function(Box::new(base))),
            Field::Function(_) => Err(Error::InvalidField(
                "nested rational function fields are not supported".into(),
            )),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Prime { value: 0, modulus: *p },
            Field::Function(base) => Scalar::Function(RatFunc::zero((**base).clone())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(*p as i64) as u32,
                modulus: *p,
            },
            Field::Function(base) => {
                Scalar::Function(RatFunc::constant(base.from_i64(n)))
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        self.from_i64(num) * self.from_i64(den).inv().expect("denominator vanishes in field")
    }

    /// 0 for the characteristic-zero fields.
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
            Field::Function(base) => base.characteristic(),
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p as u64),
            _ => None,
        }
    }

    /// All elements of a finite field, in increasing representative order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Prime(p) => Some(
                (0..*p)
                    .map(|v| Scalar::Prime { value: v, modulus: *p })
                    .collect(),
            ),
            _ => None,
        }
    }

    /// The transcendental generator `T` of a function field.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Function(base) => Some(Scalar::Function(RatFunc::from_poly(Poly::x(
                (**base).clone(),
            )))),
            _ => None,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match self {
            Field::Function(base) => Some(base),
            _ => None,
        }
    }

    /// A random element; for infinite fields small integers are drawn.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime {
                value: rng.gen_range(0..*p),
                modulus: *p,
            },
            _ => self.from_i64(rng.gen_range(-6..=6)),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            Field::Rational => parse_rational(s).map(Scalar::Rational),
            Field::Prime(p) => {
                let q = parse_rational(s)?;
                let num = q.numer().mod_floor_u32(*p);
                let den = q.denom().mod_floor_u32(*p);
                let den = Scalar::Prime { value: den, modulus: *p };
                let inv = den
                    .inv()
                    .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {p}")))?;
                Ok(Scalar::Prime { value: num, modulus: *p } * inv)
            }
            Field::Function(base) => RatFunc::parse(base, s).map(Scalar::Function),
        }
    }

    pub fn spec_name(&self) -> String {
        match self {
            Field::Rational => "Q".into(),
            Field::Prime(p) => format!("F{p}"),
            Field::Function(base) => format!("{}(T)", base.spec_name()),
        }
    }
}

trait ModFloorU32 {
    fn mod_floor_u32(&self, p: u32) -> u32;
}

impl ModFloorU32 for BigInt {
    fn mod_floor_u32(&self, p: u32) -> u32 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u32().expect("residue fits")
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational scalar {s:?}"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        if t.is_empty() || !t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// An exact field element. Every arithmetic operation requires both operands
/// to come from the same field; mixing fields is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
    Function(RatFunc),
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
            Scalar::Function(f) => Field::Function(Box::new(f.base().clone())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Function(f) => f.is_one(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
            Scalar::Function(f) => Scalar::Function(f.inv()?),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self * &i)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_function(&self) -> Option<&RatFunc> {
        match self {
            Scalar::Function(f) => Some(f),
            _ => None,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {:?} vs {:?}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(a.add(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(a.sub(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Prime {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            (Scalar::Function(a), Scalar::Function(b)) => Scalar::Function(a.mul(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::Function(a) => Scalar::Function(a.neg()),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Function(r) => write!(f, "{r}"),
        }
    }
}

/// Writes a base-field coefficient for polynomial display; returns whether it
/// is negative so the caller can pick the sign.
pub(crate) fn split_sign(c: &Scalar) -> (bool, String) {
    match c {
        Scalar::Rational(q) if q.is_negative() => (true, Scalar::Rational(-q).to_string()),
        _ => (false, c.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.from_ratio(n, d)
    }

    #[test]
    fn rationals_are_kept_in_lowest_terms() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(Field::Rational.parse_scalar("10/4").unwrap().to_string(), "5/2");
    }

    #[test]
    fn prime_field_parse_and_inverse() {
        let f5 = Field::prime(5).unwrap();
        let two = f5.parse_scalar("2").unwrap();
        assert_eq!(two.inv().unwrap().to_string(), "3");
        assert_eq!(f5.parse_scalar("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse_scalar("1/2").unwrap().to_string(), "3");
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::prime(7).unwrap().zero().inv().is_none());
    }

    fn small_prime() -> impl Strategy<Value = u32> {
        prop_oneof![Just(2u32), Just(3), Just(5), Just(7), Just(2_147_483_629)]
    }

    proptest! {
        #[test]
        fn prime_field_axioms(p in small_prime(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
            let f = Field::Prime(p);
            let (a, b, c) = (f.from_i64(a as i64), f.from_i64(b as i64), f.from_i64(c as i64));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn rational_field_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20) {
            let x = q(a, b);
            let y = q(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
            let text = x.to_string();
            prop_assert_eq!(Field::Rational.parse_scalar(&text).unwrap(), x);
        }
    }
}
