use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rep::{same_algebra, Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};

/// The commuting-square system whose null space is `Hom(m, n)`; unknowns are
/// the entries of `f_v`, vertex by vertex, row-major.
fn hom_system(m: &Representation, n: &Representation) -> Matrix {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        let (ms, mt, ns, nt) = (m.dim(s), m.dim(t), n.dim(s), n.dim(t));
        // (f_t M_a - N_a f_s)[r][c] = 0
        for r in 0..nt {
            for c in 0..ms {
                let mut row = vec![f.zero(); unknowns];
                let mut any = false;
                for k in 0..mt {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let idx = offset[t] + r * mt + k;
                        row[idx] = &row[idx] + x;
                        any = true;
                    }
                }
                for k in 0..ns {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let idx = offset[s] + k * ms + c;
                        row[idx] = &row[idx] - x;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        Matrix::zeros(f, 0, unknowns)
    } else {
        Matrix::from_rows(f, rows).expect("rectangular system")
    }
}

/// A basis of `Hom(m, n)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let k = hom_system(m, n).kernel_basis();
    Ok((0..k.cols()).map(|j| Morphism::from_flat(m, n, &k.col(j))).collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let sys = hom_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// Scalars for random linear combinations: the whole field when finite,
/// otherwise integers from a window wide enough that a nonzero polynomial of
/// modest degree is rarely hit.
pub(crate) fn random_scalar<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> Scalar {
    match field {
        Field::Prime(_) => field.random(rng),
        _ => field.from_i64(rng.gen_range(-100..=100)),
    }
}

pub(crate) fn random_combination<R: Rng + ?Sized>(basis: &[Morphism], rng: &mut R) -> Morphism {
    let f = basis[0].source().field().clone();
    let cs: Vec<Scalar> = basis.iter().map(|_| random_scalar(&f, rng)).collect();
    Morphism::combination(basis, &cs)
}

/// Calls `visit` on every coefficient vector of a finite field, stopping
/// early when it returns `true`.
pub(crate) fn for_each_vector(field: &Field, len: usize, mut visit: impl FnMut(&[Scalar]) -> bool) -> bool {
    let elems = field.elements().expect("finite field");
    let q = elems.len();
    let mut idx = vec![0usize; len];
    loop {
        let v: Vec<Scalar> = idx.iter().map(|&i| elems[i].clone()).collect();
        if visit(&v) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == len {
                return false;
            }
            idx[k] += 1;
            if idx[k] < q {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub(crate) fn small_enough(field: &Field, dim: usize, bound: u64) -> bool {
    match field.order() {
        Some(q) => (dim as f64) * (q as f64).log2() <= (bound as f64).log2() + 1e-9,
        None => false,
    }
}

/// An isomorphism `m → n`, if one exists.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Option<Morphism>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morphism::zero(m, n)));
    }
    let basis = hom_basis(m, n)?;
    if basis.is_empty() || hom_dim(n, m)? != basis.len() || hom_dim(m, m)? != basis.len() {
        return Ok(None);
    }
    let field = m.field().clone();
    if small_enough(&field, basis.len(), 4096) {
        let mut found = None;
        for_each_vector(&field, basis.len(), |cs| {
            let f = Morphism::combination(&basis, cs);
            if f.is_iso() {
                found = Some(f);
                return true;
            }
            false
        });
        return Ok(found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150_150);
    for _ in 0..64 {
        let f = random_combination(&basis, &mut rng);
        if f.is_iso() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use std::sync::Arc;

    fn kron(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::kronecker(f))
    }

    fn point(k: &Arc<Algebra>, lambda: i64) -> Representation {
        let f = k.field();
        Representation::new(k, vec![1, 1], vec![Matrix::from_i64(f, &[&[1]]), Matrix::from_i64(f, &[&[lambda]])]).unwrap()
    }

    #[test]
    fn kronecker_hom_examples() {
        let k = kron(Field::Prime(5));
        let pc = Representation::projective(&k, 1);
        let p0 = Representation::projective(&k, 0);
        assert_eq!(hom_basis(&pc, &p0).unwrap().len(), 2);
        assert_eq!(hom_basis(&p0, &pc).unwrap().len(), 0);
        assert!(hom_basis(&point(&k, 0), &point(&k, 1)).unwrap().is_empty());
        let m = Representation::sum(&k, &[p0.clone(), point(&k, 3)]);
        let id = Morphism::identity(&m);
        let basis = hom_basis(&m, &m).unwrap();
        let flat: Vec<Matrix> = basis.iter().map(|b| Matrix::column(m.field(), b.flatten())).collect();
        let span = Matrix::hcat(m.field(), flat[0].rows(), &flat);
        assert!(span.solve(&Matrix::column(m.field(), id.flatten())).unwrap().is_some());
    }

    #[test]
    fn isomorphism_examples() {
        let k = kron(Field::Prime(5));
        let s0 = point(&k, 0);
        assert!(is_isomorphic(&s0, &s0).unwrap().is_some());
        assert!(is_isomorphic(&s0, &point(&k, 1)).unwrap().is_none());
        assert!(is_isomorphic(&s0, &Representation::projective(&k, 0)).unwrap().is_none());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = Representation::sum(&k, &[s0.clone(), s0.clone(), point(&k, 2)]);
        let (c, _) = m.random_conjugate(&mut rng);
        let iso = is_isomorphic(&m, &c).unwrap().unwrap();
        assert!(Morphism::new(m, c, iso.maps().to_vec()).unwrap().is_iso());
    }

    #[test]
    fn isomorphism_over_the_rationals() {
        let k = kron(Field::Rational);
        let m = Representation::sum(&k, &[point(&k, 2), point(&k, 2), Representation::projective(&k, 0)]);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (c, _) = m.random_conjugate(&mut rng);
        assert!(is_isomorphic(&m, &c).unwrap().is_some());
    }
}
