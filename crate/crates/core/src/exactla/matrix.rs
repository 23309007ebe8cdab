use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::field::{Field, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Dense row-major matrix over one exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != *field) {
            return Err(Error::InvalidField(format!("entry {bad} is not in {}", field.spec_name())));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| field.from_i64(v))).collect();
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    pub fn column(field: &Field, v: Vec<Scalar>) -> Self {
        Matrix { field: field.clone(), rows: v.len(), cols: 1, data: v }
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// A random invertible matrix, found by rejection.
    pub fn random_invertible<R: Rng + ?Sized>(field: &Field, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Matrix::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols);
        let mut out = Matrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row-echelon form and its strictly increasing pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match self.field {
            Field::Prime(p) => return self.rref_mod(p),
            Field::Rational => return self.rref_rational(),
            Field::Function(_) => {}
        }
        self.rref_generic()
    }

    fn rref_mod(&self, p: u32) -> (Matrix, Vec<usize>) {
        let p = p as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<u64> = self
            .data
            .iter()
            .map(|x| match x {
                Scalar::Prime { value, .. } => *value as u64,
                _ => unreachable!("field checked"),
            })
            .collect();
        let inv = |x: u64| {
            let (mut b, mut e, mut acc) = (x, p - 2, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    acc = acc * b % p;
                }
                b = b * b % p;
                e >>= 1;
            }
            acc
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
            if pr != r {
                for j in 0..cols {
                    a.swap(r * cols + j, pr * cols + j);
                }
            }
            let iv = inv(a[r * cols + c]);
            for j in c..cols {
                a[r * cols + j] = a[r * cols + j] * iv % p;
            }
            for i in 0..rows {
                let f = a[i * cols + c];
                if i == r || f == 0 {
                    continue;
                }
                for j in c..cols {
                    let b = a[r * cols + j];
                    if b != 0 {
                        a[i * cols + j] = (a[i * cols + j] + (p - f) * b) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let data = a.into_iter().map(|v| Scalar::Prime { value: v as u32, modulus: p as u32 }).collect();
        (Matrix { field: self.field.clone(), rows, cols, data }, pivots)
    }

    /// Fraction-free elimination on primitive integer rows.
    fn rref_rational(&self) -> (Matrix, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                let row = &self.data[i * cols..(i + 1) * cols];
                let mut l = BigInt::one();
                for x in row {
                    l = l.lcm(x.as_rational().unwrap().denom());
                }
                let mut v: Vec<BigInt> =
                    row.iter().map(|x| (x.as_rational().unwrap() * BigRational::from_integer(l.clone())).to_integer()).collect();
                make_primitive(&mut v);
                v
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].bits()) else { continue };
            a.swap(r, pr);
            let (head, tail) = a.split_at_mut(r);
            let (prow, tail) = tail.split_first_mut().unwrap();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                if row[c].is_zero() {
                    continue;
                }
                let g = row[c].gcd(&prow[c]);
                let (fa, fb) = (&prow[c] / &g, &row[c] / &g);
                for j in 0..cols {
                    if prow[j].is_zero() {
                        if !row[j].is_zero() {
                            row[j] = &row[j] * &fa;
                        }
                    } else {
                        row[j] = &row[j] * &fa - &prow[j] * &fb;
                    }
                }
                make_primitive(row);
            }
            pivots.push(c);
            r += 1;
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in a.iter().enumerate() {
            let lead = if i < pivots.len() { row[pivots[i]].clone() } else { BigInt::one() };
            for x in row {
                data.push(Scalar::Rational(BigRational::new(x.clone(), lead.clone())));
            }
        }
        (Matrix { field: self.field.clone(), rows, cols, data }, pivots)
    }

    fn rref_generic(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * b);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the right null space.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(&self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, j, -r.get(i, f));
            }
        }
        k
    }

    /// Rows form a basis of `{y : y * self = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve with {} rows against {} rows",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(&self.field, self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let (r, pivots) = self.hstack(&Matrix::identity(&self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..m.rows {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.cols {
                out.set(r, self.cols + c, o.get(r, c).clone());
            }
        }
        out
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn hcat(field: &Field, rows: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, rows, 0), |acc, p| acc.hstack(p))
    }

    pub fn vcat(field: &Field, cols: usize, parts: &[Matrix]) -> Matrix {
        parts.iter().fold(Matrix::zeros(field, 0, cols), |acc, p| acc.vstack(p))
    }

    pub fn block_diag(field: &Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.put_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn put_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Columns of `self` forming a basis of its column space.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Standard basis vectors completing the (independent) columns of `self`
    /// to a basis of the ambient space.
    pub fn complement_columns(&self) -> Matrix {
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let (_, pivots) = aug.rref();
        let picked: Vec<usize> = pivots.into_iter().filter(|&p| p >= self.cols).collect();
        aug.select_cols(&picked)
    }

    /// Characteristic polynomial `det(xI - self)` via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square(), "charpoly of a non-square matrix");
        let n = self.rows;
        let f = &self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let t = h.get(m, m - 1).inv().unwrap();
            for i in m + 1..n {
                let u = h.get(i, m - 1) * &t;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(i, j) - &(&u * h.get(m, j));
                    h.set(i, j, v);
                }
                for r in 0..n {
                    let v = h.get(r, m) + &(&u * h.get(r, i));
                    h.set(r, m, v);
                }
            }
        }
        let x = Poly::x(f.clone());
        let mut p: Vec<Poly> = vec![Poly::one(f.clone())];
        for m in 1..=n {
            let mut pm = x.sub(&Poly::constant(h.get(m - 1, m - 1).clone())).mul(&p[m - 1]);
            let mut t = f.one();
            for i in (1..m).rev() {
                t = &t * h.get(i, i - 1);
                let c = &t * h.get(i - 1, m - 1);
                if !c.is_zero() {
                    pm = pm.sub(&p[i - 1].scale(&c));
                }
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(&q(), 2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let id = Matrix::identity(&q(), 3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let f5 = Field::Prime(5);
        let m = Matrix::from_i64(&f5, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::from_i64(&f5, &[&[1, 2], &[0, 0]]), vec![0]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&q(), 2).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(&q(), 2, 3).kernel_basis().rank(), 3);
        let k = Matrix::from_i64(&q(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(&q(), &[&[-1], &[1]]));
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(&q(), &[&[4, 1], &[5, 9]]);
        assert_eq!(Matrix::identity(&q(), 2).solve(&b).unwrap(), Some(b));
        let a = Matrix::from_i64(&q(), &[&[1], &[0]]);
        assert_eq!(a.solve(&Matrix::from_i64(&q(), &[&[0], &[1]])).unwrap(), None);
        let a = Matrix::from_i64(&q(), &[&[1, 2], &[0, 1]]);
        let x = a.solve(&Matrix::from_i64(&q(), &[&[3], &[1]])).unwrap().unwrap();
        assert_eq!(x, Matrix::from_i64(&q(), &[&[1], &[1]]));
        assert!(a.solve(&Matrix::zeros(&q(), 3, 1)).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(&q(), 3, 2).rank(), 0);
        assert_eq!(Matrix::identity(&q(), 4).rank(), 4);
        assert_eq!(Matrix::from_i64(&q(), &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn charpoly_satisfies_cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for field in [q(), Field::Prime(7), Field::Prime(2)] {
            for n in 0..6 {
                let m = Matrix::random(&field, n, n, &mut rng);
                let p = m.charpoly();
                assert_eq!(p.degree(), Some(n));
                assert!(p.eval_matrix(&m).is_zero());
                assert_eq!(p.eval(&field.zero()), if n % 2 == 0 { m.det() } else { -m.det() });
            }
        }
    }

    #[test]
    fn inverse_and_complement() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = Field::Prime(3);
        let a = Matrix::random_invertible(&f, 4, &mut rng);
        assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(&f, 4));
        let sub = Matrix::from_i64(&f, &[&[1], &[1], &[0]]);
        let c = sub.complement_columns();
        assert_eq!(sub.hstack(&c).rank(), 3);
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(5))]
    }

    proptest! {
        #[test]
        fn rank_kernel_and_solve(field in field_strategy(), r in 0usize..5, c in 0usize..5, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::random(&field, r, c, &mut rng);
            let (red, pivots) = m.rref();
            prop_assert_eq!(red.rank(), m.rank());
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols(), c - m.rank());
            prop_assert!(m.mul(&k).is_zero());
            let x0 = Matrix::random(&field, c, 2, &mut rng);
            let b = m.mul(&x0);
            let x = m.solve(&b).unwrap().expect("constructed system is consistent");
            prop_assert_eq!(m.mul(&x), b);
        }
    }
}
