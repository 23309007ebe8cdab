use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{split_sign, Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients stored low degree first with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        let one = field.one();
        Poly::new(field, vec![one])
    }

    pub fn x(field: Field) -> Self {
        Poly::new(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(c.field(), vec![c])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    /// `x - a`
    pub fn linear(a: &Scalar) -> Self {
        let field = a.field();
        Poly::new(field.clone(), vec![-a, field.one()])
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Poly::new(field.clone(), coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field.clone(), (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(self.field.clone(), (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field.clone(), out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().inv().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(self.field.clone()), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dj);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field.clone(), q), Poly::new(self.field.clone(), r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.lead().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(&self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(&self.field, n).scale(c));
        }
        acc
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field.clone()).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        match &self.field {
            Field::Rational => {
                let g = Poly::gcd(self, &self.derivative());
                Ok(self.div_exact(&g).monic())
            }
            Field::Prime(_) => Ok(self
                .squarefree_decomposition()?
                .iter()
                .fold(Poly::one(self.field.clone()), |acc, (f, _)| acc.mul(f))),
            Field::Function(base) if base.characteristic() == 0 => {
                let g = Poly::gcd(self, &self.derivative());
                Ok(self.div_exact(&g).monic())
            }
            Field::Function(_) => Err(Error::Unsupported(
                "radicals over rational function fields of positive characteristic".into(),
            )),
        }
    }

    /// Squarefree decomposition over a prime field: monic squarefree,
    /// pairwise coprime factors with multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        let p = match self.field {
            Field::Prime(p) => p as usize,
            _ => return Err(Error::Unsupported("squarefree decomposition needs F_p".into())),
        };
        let mut out = Vec::new();
        sqf_fp(&self.monic(), p, 1, &mut out);
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        Ok(out)
    }

    /// Complete factorization over a prime field into monic irreducibles.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        let Field::Prime(p) = self.field else {
            return Err(Error::Unsupported("factorization is only implemented over F_p".into()));
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
        let mut out = Vec::new();
        for (sq, mult) in self.squarefree_decomposition()? {
            for (g, d) in ddf(&sq, p) {
                let mut parts = Vec::new();
                edf(&g, d, p, &mut rng, &mut parts);
                out.extend(parts.into_iter().map(|f| (f, mult)));
            }
        }
        out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        Ok(out)
    }

    /// `Some(answer)` when irreducibility can be decided over the coefficient field.
    pub fn is_irreducible(&self) -> Option<bool> {
        let d = self.degree()?;
        if d == 0 {
            return Some(false);
        }
        if d == 1 {
            return Some(true);
        }
        match self.field {
            Field::Prime(_) => {
                let f = self.factor().ok()?;
                Some(f.len() == 1 && f[0].1 == 1)
            }
            Field::Rational if d <= 3 => Some(self.roots().ok()?.is_empty()),
            _ => None,
        }
    }

    /// Distinct roots in the coefficient field, sorted.
    pub fn roots(&self) -> Result<Vec<Scalar>> {
        if self.is_zero() {
            return Err(Error::Precondition("roots of the zero polynomial".into()));
        }
        match &self.field {
            Field::Prime(p) => {
                let p = *p;
                if p <= 2000 {
                    return Ok(self
                        .field
                        .elements()
                        .unwrap()
                        .into_iter()
                        .filter(|a| self.eval(a).is_zero())
                        .collect());
                }
                let x = Poly::x(self.field.clone());
                let f = self.monic();
                let xp = x.pow_mod(&BigUint::from(p), &f);
                let g = Poly::gcd(&xp.sub(&x), &f);
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
                let mut parts = Vec::new();
                if g.degree().unwrap_or(0) > 0 {
                    edf(&g, 1, p, &mut rng, &mut parts);
                }
                let mut roots: Vec<Scalar> = parts.iter().map(|l| -&l.coeff(0)).collect();
                roots.sort_by_key(|r| match r {
                    Scalar::Prime { value, .. } => *value,
                    _ => 0,
                });
                Ok(roots)
            }
            Field::Rational => rational_roots(self),
            Field::Function(_) => Err(Error::Unsupported("roots over rational function fields".into())),
        }
    }

    pub fn companion(&self) -> Matrix {
        let f = self.monic();
        let n = f.degree().unwrap_or(0);
        let mut m = Matrix::zeros(&self.field, n, n);
        for i in 1..n {
            m.set(i, i - 1, self.field.one());
        }
        for i in 0..n {
            m.set(i, n - 1, -&f.coeff(i));
        }
        m
    }

    /// Renders with the given variable name, e.g. `t^2+2*t-1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = split_sign(c);
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let unit = mag == "1";
            if k == 0 {
                out.push_str(&mag);
                continue;
            }
            if !unit {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(var);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        out
    }

    /// Parses a polynomial written in `t` or `T`.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let r = super::ratfunc::parse_expr(field, s)?;
        if !r.den().is_one() {
            return Err(Error::Parse(format!("{s:?} is not a polynomial")));
        }
        Ok(r.num().clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

/// Deterministic total order used to sort factor lists.
pub(crate) fn cmp_poly(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| {
            let ka: Vec<String> = a.coeffs.iter().rev().map(|c| c.to_string()).collect();
            let kb: Vec<String> = b.coeffs.iter().rev().map(|c| c.to_string()).collect();
            ka.cmp(&kb)
        })
}

fn pth_root(f: &Poly, p: usize) -> Poly {
    let coeffs = f.coeffs.iter().step_by(p).cloned().collect();
    Poly::new(f.field.clone(), coeffs)
}

fn sqf_fp(f: &Poly, p: usize, scale: usize, out: &mut Vec<(Poly, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        sqf_fp(&pth_root(f, p), p, scale * p, out);
        return;
    }
    let mut c = Poly::gcd(f, &d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = Poly::gcd(&w, &c);
        let z = w.div_exact(&y);
        if z.degree().unwrap_or(0) > 0 {
            push_factor(out, z.monic(), i * scale);
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if c.degree().unwrap_or(0) > 0 {
        sqf_fp(&pth_root(&c, p), p, scale * p, out);
    }
}

fn push_factor(out: &mut Vec<(Poly, usize)>, f: Poly, m: usize) {
    if let Some(entry) = out.iter_mut().find(|(g, _)| *g == f) {
        entry.1 += m;
    } else {
        out.push((f, m));
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &Poly, p: u32) -> Vec<(Poly, usize)> {
    let field = f.field.clone();
    let x = Poly::x(field.clone());
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut i = 1;
    let pb = BigUint::from(p);
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(&pb, &rest);
        let g = Poly::gcd(&h.sub(&x), &rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-`d` irreducibles.
fn edf(f: &Poly, d: usize, p: u32, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.monic());
        return;
    }
    let field = f.field.clone();
    loop {
        let a = Poly::new(field.clone(), (0..n).map(|_| field.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            let mut acc = a.rem(f);
            let mut term = acc.clone();
            for _ in 1..d {
                term = term.mul(&term).rem(f);
                acc = acc.add(&term);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&e, f).sub(&Poly::one(field.clone()))
        };
        let g = Poly::gcd(&b, f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            edf(&g, d, p, rng, out);
            edf(&f.div_exact(&g), d, p, rng, out);
            return;
        }
    }
}

fn is_small_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d: &u32| d * d <= n).all(|d| n % d != 0)
}

fn modp(c: &BigInt, p: u32) -> i64 {
    c.mod_floor(&BigInt::from(p)).to_i64().unwrap()
}

/// The candidate `n/d` with `|n| ≤ nb` and `n ≡ r d (mod m)`; unique when `m > 2 nb d`.
fn rational_reconstruction(r: &BigInt, m: &BigInt, nb: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > nb {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Rational roots of a squarefree part, by lifting roots modulo a good prime
/// and reconstructing. A root `n/d` has `n | a0` and `d | an`.
fn rational_roots(f: &Poly) -> Result<Vec<Scalar>> {
    let field = Field::Rational;
    let mut roots = Vec::new();
    let mut g = f.clone();
    if g.coeff(0).is_zero() {
        roots.push(field.zero());
        while g.coeff(0).is_zero() {
            g = g.div_exact(&Poly::x(field.clone()));
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        let g = g.div_exact(&Poly::gcd(&g, &g.derivative()));
        let mut lcm = BigInt::one();
        for c in &g.coeffs {
            lcm = lcm.lcm(c.as_rational().unwrap().denom());
        }
        let ints: Vec<BigInt> = g
            .coeffs
            .iter()
            .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let (a0, an) = (ints[0].abs(), ints.last().unwrap().abs());
        let bound = &a0 * &an * 2u32 + 1u32;
        let eval = |x: &BigInt, m: &BigInt| ints.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m));
        let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
        let eval_d = |x: &BigInt, m: &BigInt| deriv.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m));
        let mut p = 1009u32;
        let (p, modular) = loop {
            while !is_small_prime(p) {
                p += 2;
            }
            let fp = Field::Prime(p);
            if modp(&an, p) != 0 {
                let gp = Poly::new(fp.clone(), ints.iter().map(|c| fp.from_i64(modp(c, p))).collect());
                if Poly::gcd(&gp, &gp.derivative()).degree() == Some(0) {
                    break (p, gp.roots()?);
                }
            }
            p += 2;
        };
        let pb = BigInt::from(p);
        for r in modular {
            let Scalar::Prime { value, .. } = r else { unreachable!() };
            let mut x = BigInt::from(value);
            let mut m = pb.clone();
            while m <= bound {
                m = &m * &m;
                let inv = eval_d(&x, &m).extended_gcd(&m).x;
                x = (&x - eval(&x, &m) * inv).mod_floor(&m);
            }
            if let Some(q) = rational_reconstruction(&x, &m, &a0) {
                let cand = Scalar::Rational(q);
                if g.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_by(|a, b| a.as_rational().unwrap().cmp(b.as_rational().unwrap()));
    Ok(roots)
}
