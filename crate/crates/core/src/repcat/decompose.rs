use rand::Rng;

use super::hom::{for_each_vector, hom_basis, is_isomorphic, random_combination, random_scalar, small_enough};
use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Poly, Scalar};

/// `End(m)` with a fixed basis and a coordinate map.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    module: Representation,
    basis: Vec<Morphism>,
    rows: Vec<usize>,
    rows_inv: Matrix,
}

impl EndAlgebra {
    pub fn new(m: &Representation) -> Result<Self> {
        let basis = hom_basis(m, m)?;
        let f = m.field();
        let cols: Vec<Matrix> = basis.iter().map(|b| Matrix::column(f, b.flatten())).collect();
        let len: usize = m.dims().iter().map(|d| d * d).sum();
        let big = Matrix::hcat(f, len, &cols);
        let (_, rows) = big.transpose().rref();
        let rows_inv = big.select_rows(&rows).inverse().expect("independent basis");
        Ok(EndAlgebra { module: m.clone(), basis, rows, rows_inv })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    fn field(&self) -> &Field {
        self.module.field()
    }

    /// Coordinates of an endomorphism in the basis.
    pub fn coords(&self, x: &Morphism) -> Vec<Scalar> {
        let flat = x.flatten();
        let sub: Vec<Scalar> = self.rows.iter().map(|&r| flat[r].clone()).collect();
        self.rows_inv.mul_vec(&sub)
    }

    pub fn element(&self, c: &[Scalar]) -> Morphism {
        if self.basis.is_empty() {
            return Morphism::zero(&self.module, &self.module);
        }
        Morphism::combination(&self.basis, c)
    }

    /// `table[i][j]` holds the coordinates of `basis[i] ∘ basis[j]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.basis
            .iter()
            .map(|a| self.basis.iter().map(|b| self.coords(&a.compose(b))).collect())
            .collect()
    }

    fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.coords(&self.element(a).compose(&self.element(b)))
    }

}

/// Nilpotence on the module: `x^N = 0` with `N` the largest vertex dimension.
fn is_nilpotent(x: &Morphism) -> bool {
    x.maps().iter().all(|m| m.rows() == 0 || m.pow(m.rows() as u64).is_zero())
}

fn power(x: &Morphism) -> Morphism {
    let n = x.maps().iter().map(Matrix::rows).max().unwrap_or(0) as u64;
    let maps: Vec<Matrix> = x.maps().iter().map(|m| m.pow(n)).collect();
    Morphism::from_flat(x.source(), x.target(), &maps.iter().flat_map(|m| m.data().to_vec()).collect::<Vec<_>>())
}

/// Outcome of the locality certificate for `End(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locality {
    /// Local, with the radical given by coordinate vectors.
    Local { radical: Vec<Vec<Scalar>> },
    NotLocal,
    Unknown,
}

fn span_basis(field: &Field, n: usize, vecs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(field, vecs.to_vec()).expect("rectangular");
    let (r, piv) = m.rref();
    let _ = n;
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Two-sided ideal generated by `gens` (coordinate vectors).
fn ideal_closure(end: &EndAlgebra, gens: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let n = end.dim();
    let f = end.field().clone();
    let unit: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect();
    let mut basis = span_basis(&f, n, &gens);
    loop {
        let mut more = basis.clone();
        for x in &basis {
            for e in &unit {
                more.push(end.mul_coords(e, x));
                more.push(end.mul_coords(x, e));
            }
        }
        let next = span_basis(&f, n, &more);
        if next.len() == basis.len() {
            return basis;
        }
        basis = next;
    }
}

/// Splits `k^n = U ⊕ W` with `W` spanned by standard vectors; returns a
/// function giving the `W`-coordinates of a vector.
struct Quotient {
    w_index: Vec<usize>,
    solver: Matrix,
    u_dim: usize,
}

impl Quotient {
    fn new(field: &Field, n: usize, u: &[Vec<Scalar>]) -> Self {
        let u_cols = if u.is_empty() {
            Matrix::zeros(field, n, 0)
        } else {
            Matrix::from_rows(field, u.to_vec()).unwrap().transpose()
        };
        let comp = u_cols.complement_columns();
        let w_index = (0..comp.cols())
            .map(|j| (0..n).find(|&i| !comp.get(i, j).is_zero()).unwrap())
            .collect();
        let solver = u_cols.hstack(&comp).inverse().expect("complement basis");
        Quotient { w_index, solver, u_dim: u.len() }
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.solver.mul_vec(v)[self.u_dim..].to_vec()
    }

    fn lift(&self, field: &Field, n: usize, w: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![field.zero(); n];
        for (c, &i) in w.iter().zip(&self.w_index) {
            v[i] = c.clone();
        }
        v
    }
}

/// Matrix of a map on the quotient `A/U`, given on lifted basis vectors.
fn quotient_map(end: &EndAlgebra, q: &Quotient, op: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Matrix {
    let f = end.field().clone();
    let n = end.dim();
    let r = q.w_index.len();
    let mut m = Matrix::zeros(&f, r, r);
    for j in 0..r {
        let mut e = vec![f.zero(); r];
        e[j] = f.one();
        let image = q.reduce(&op(&q.lift(&f, n, &e)));
        for i in 0..r {
            m.set(i, j, image[i].clone());
        }
    }
    m
}

fn pow_coords(end: &EndAlgebra, x: &[Scalar], e: u64) -> Vec<Scalar> {
    end.coords(&power_by(&end.element(x), e))
}

fn power_by(x: &Morphism, e: u64) -> Morphism {
    let maps: Vec<Matrix> = x.maps().iter().map(|m| m.pow(e)).collect();
    Morphism::from_flat(x.source(), x.target(), &maps.iter().flat_map(|m| m.data().to_vec()).collect::<Vec<_>>())
}

/// Decides whether `End(m)` is local, without randomness where possible.
pub fn certify_local<R: Rng + ?Sized>(end: &EndAlgebra, rng: &mut R) -> Result<Locality> {
    let n = end.dim();
    let f = end.field().clone();
    if n == 0 {
        return Ok(Locality::NotLocal);
    }
    if n == 1 {
        return Ok(Locality::Local { radical: Vec::new() });
    }
    let radical: Vec<Vec<Scalar>> = match &f {
        Field::Prime(p) => {
            let p = *p as u64;
            let mut comms = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let (a, b) = (&end.basis[i], &end.basis[j]);
                    comms.push(end.coords(&a.compose(b).sub(&b.compose(a))));
                }
            }
            let c = ideal_closure(end, comms);
            let q = Quotient::new(&f, n, &c);
            let phi = quotient_map(end, &q, |x| pow_coords(end, x, p));
            let r = q.w_index.len();
            let mut steps = 1u32;
            while p.saturating_pow(steps) < r as u64 {
                steps += 1;
            }
            let k = phi.pow(steps as u64).kernel_basis();
            let mut rad = c.clone();
            for j in 0..k.cols() {
                rad.push(q.lift(&f, n, &k.col(j)));
            }
            let rad = span_basis(&f, n, &rad);
            if rad.iter().any(|x| !is_nilpotent(&end.element(x))) {
                return Ok(Locality::NotLocal);
            }
            rad
        }
        Field::Rational | Field::Function(_) if f.characteristic() == 0 => {
            // tr(ab) = Σ a[i][j] b[j][i], summed over vertices
            let trace_pair = |x: &Morphism, y: &Morphism| {
                let mut acc = f.zero();
                for (mx, my) in x.maps().iter().zip(y.maps()) {
                    for i in 0..mx.rows() {
                        for j in 0..mx.cols() {
                            let (u, w) = (mx.get(i, j), my.get(j, i));
                            if !u.is_zero() && !w.is_zero() {
                                acc = &acc + &(u * w);
                            }
                        }
                    }
                }
                acc
            };
            let mut gram = Matrix::zeros(&f, n, n);
            for i in 0..n {
                for j in i..n {
                    let t = trace_pair(&end.basis[i], &end.basis[j]);
                    gram.set(i, j, t.clone());
                    gram.set(j, i, t);
                }
            }
            let k = gram.kernel_basis();
            (0..k.cols()).map(|j| k.col(j)).collect()
        }
        _ => return Ok(Locality::Unknown),
    };
    let residue = n - radical.len();
    if residue == 1 {
        return Ok(Locality::Local { radical });
    }
    let q = Quotient::new(&f, n, &radical);
    match &f {
        Field::Prime(p) => {
            let p = *p as u64;
            let phi = quotient_map(end, &q, |x| pow_coords(end, x, p));
            let fixed = phi.sub(&Matrix::identity(&f, residue)).kernel_basis().cols();
            Ok(if fixed == 1 { Locality::Local { radical } } else { Locality::NotLocal })
        }
        Field::Rational if residue <= 3 => {
            let x: Vec<Scalar> = (0..n).map(|_| random_scalar(&f, rng)).collect();
            let left = quotient_map(end, &q, |y| end.mul_coords(&x, y));
            match left.charpoly().is_irreducible() {
                Some(true) => Ok(Locality::Local { radical }),
                _ => Ok(Locality::Unknown),
            }
        }
        _ => Ok(Locality::Unknown),
    }
}

/// An endomorphism `z` whose Fitting decomposition `ker z^N ⊕ im z^N` is nontrivial.
fn find_splitter<R: Rng + ?Sized>(end: &EndAlgebra, rng: &mut R) -> Result<Option<Morphism>> {
    let m = end.module();
    let f = m.field().clone();
    let id = Morphism::identity(m);
    let splits = |z: &Morphism| {
        let zn = power(z);
        !zn.is_zero() && !zn.is_iso()
    };
    for attempt in 0..24 {
        // small coefficients keep rational characteristic polynomials factorable
        let x = match &f {
            Field::Prime(_) => random_combination(&end.basis, rng),
            _ => {
                let w = 1 + attempt / 6;
                let cs: Vec<Scalar> = end.basis.iter().map(|_| f.from_i64(rng.gen_range(-w..=w))).collect();
                end.element(&cs)
            }
        };
        let charpoly = x
            .maps()
            .iter()
            .fold(Poly::one(f.clone()), |acc, mv| acc.mul(&mv.charpoly()));
        let candidates: Vec<Poly> = match &f {
            Field::Prime(_) => {
                let fac = charpoly.factor()?;
                if fac.len() < 2 {
                    Vec::new()
                } else {
                    fac.into_iter().map(|(g, _)| g).collect()
                }
            }
            Field::Rational => match charpoly.radical().and_then(|r| r.roots()) {
                Ok(roots) => roots.iter().map(Poly::linear).collect(),
                Err(_) => Vec::new(),
            },
            _ => Vec::new(),
        };
        for g in candidates {
            let maps: Vec<Matrix> = x.maps().iter().map(|mv| g.eval_matrix(mv)).collect();
            let z = Morphism::from_flat(m, m, &maps.iter().flat_map(|mm| mm.data().to_vec()).collect::<Vec<_>>());
            if splits(&z) {
                return Ok(Some(z));
            }
        }
    }
    // Stabilizers of random lines: x with x_v w ∈ k·w, shifted by the eigenvalue.
    let support = m.support();
    for _ in 0..24 {
        let v = support[rng.gen_range(0..support.len())];
        let w: Vec<Scalar> = (0..m.dim(v)).map(|_| random_scalar(&f, rng)).collect();
        let Some(pivot) = w.iter().position(|c| !c.is_zero()) else { continue };
        let wcol = Matrix::column(&f, w.clone());
        let annihilator = wcol.left_kernel();
        let cols: Vec<Matrix> = end
            .basis
            .iter()
            .map(|b| annihilator.mul(&b.map(v).mul(&wcol)))
            .collect();
        let sys = Matrix::hcat(&f, annihilator.rows(), &cols);
        let k = sys.kernel_basis();
        if k.cols() == 0 {
            continue;
        }
        let coeffs: Vec<Scalar> = {
            let mix: Vec<Scalar> = (0..k.cols()).map(|_| random_scalar(&f, rng)).collect();
            k.mul_vec(&mix)
        };
        let x = end.element(&coeffs);
        let image = x.map(v).mul(&wcol);
        let c = image.get(pivot, 0).checked_div(&w[pivot]).unwrap();
        let z = x.sub(&id.scale(&c));
        if splits(&z) {
            return Ok(Some(z));
        }
    }
    if small_enough(&f, end.dim(), 1 << 16) {
        let mut found = None;
        for_each_vector(&f, end.dim(), |cs| {
            let e = end.element(cs);
            if !e.is_zero() && e != id && e.compose(&e) == e {
                found = Some(e);
                return true;
            }
            false
        });
        return Ok(found);
    }
    Ok(None)
}

fn split_rec<R: Rng + ?Sized>(m: &Representation, rng: &mut R, out: &mut Vec<(Representation, Morphism)>, outer: &Morphism) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = EndAlgebra::new(m)?;
    let loc = certify_local(&end, rng)?;
    if let Locality::Local { .. } = loc {
        out.push((m.clone(), outer.clone()));
        return Ok(());
    }
    let Some(z) = find_splitter(&end, rng)? else {
        return Err(Error::DecompositionStalled(format!(
            "no splitting endomorphism found for a module of dimension {} (End has dimension {})",
            m.total_dim(),
            end.dim()
        )));
    };
    let zn = power(&z);
    let (k, k_incl) = zn.kernel();
    let (i, i_incl, _) = zn.image();
    split_rec(&k, rng, out, &outer.compose(&k_incl))?;
    split_rec(&i, rng, out, &outer.compose(&i_incl))?;
    Ok(())
}

/// A direct sum decomposition into indecomposables with an explicit isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    module: Representation,
    parts: Vec<Representation>,
    inclusions: Vec<Morphism>,
    projections: Vec<Morphism>,
}

impl Decomposition {
    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn parts(&self) -> &[Representation] {
        &self.parts
    }

    pub fn inclusions(&self) -> &[Morphism] {
        &self.inclusions
    }

    pub fn projections(&self) -> &[Morphism] {
        &self.projections
    }

    /// The isomorphism `⊕ parts → module`.
    pub fn iso(&self) -> Morphism {
        let alg = self.module.algebra();
        let (sum, _, proj) = Representation::direct_sum(alg, &self.parts);
        let mut acc = Morphism::zero(&sum, &self.module);
        for (incl, p) in self.inclusions.iter().zip(&proj) {
            acc = acc.add(&incl.compose(p));
        }
        acc
    }

    /// The inverse of [`Decomposition::iso`].
    pub fn iso_inverse(&self) -> Morphism {
        let alg = self.module.algebra();
        let (sum, inj, _) = Representation::direct_sum(alg, &self.parts);
        let mut acc = Morphism::zero(&self.module, &sum);
        for (p, i) in self.projections.iter().zip(&inj) {
            acc = acc.add(&i.compose(p));
        }
        acc
    }

    /// Isomorphism classes of summands with multiplicities.
    pub fn summands(&self) -> Result<Vec<(Representation, usize)>> {
        let mut classes: Vec<(Representation, usize)> = Vec::new();
        'outer: for p in &self.parts {
            for (rep, k) in classes.iter_mut() {
                if rep.dims() == p.dims() && is_isomorphic(rep, p)?.is_some() {
                    *k += 1;
                    continue 'outer;
                }
            }
            classes.push((p.clone(), 1));
        }
        Ok(classes)
    }

    /// Checks that the recorded maps are mutually inverse.
    pub fn verify(&self) -> bool {
        let iso = self.iso();
        let inv = self.iso_inverse();
        iso.compose(&inv) == Morphism::identity(&self.module)
            && inv.compose(&iso) == Morphism::identity(iso.source())
    }
}

/// Splits `m` into indecomposable summands. Randomness only steers the search;
/// every summand is certified to have a local endomorphism ring.
pub fn decompose<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<Decomposition> {
    let mut found = Vec::new();
    split_rec(m, rng, &mut found, &Morphism::identity(m))?;
    found.sort_by(|a, b| (a.0.total_dim(), a.0.dims()).cmp(&(b.0.total_dim(), b.0.dims())));
    let f = m.field();
    let alg = m.algebra();
    let parts: Vec<Representation> = found.iter().map(|(p, _)| p.clone()).collect();
    let inclusions: Vec<Morphism> = found.into_iter().map(|(_, i)| i).collect();
    let (sum, _, proj) = Representation::direct_sum(alg, &parts);
    let mut iso = Morphism::zero(&sum, m);
    for (incl, p) in inclusions.iter().zip(&proj) {
        iso = iso.add(&incl.compose(p));
    }
    let inv = iso.inverse().ok_or_else(|| Error::DecompositionStalled("summands do not span the module".into()))?;
    let (_, inj, projs) = Representation::direct_sum(alg, &parts);
    let projections: Vec<Morphism> = projs
        .iter()
        .map(|p| p.compose(&inv))
        .collect();
    let _ = (f, inj);
    let d = Decomposition { module: m.clone(), parts, inclusions, projections };
    debug_assert!(d.verify());
    Ok(d)
}

/// Whether `m` is indecomposable (nonzero with local endomorphism ring).
pub fn is_indecomposable<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = EndAlgebra::new(m)?;
    match certify_local(&end, rng)? {
        Locality::Local { .. } => Ok(true),
        Locality::NotLocal => Ok(false),
        Locality::Unknown => match find_splitter(&end, rng)? {
            Some(_) => Ok(false),
            None => Err(Error::DecompositionStalled("cannot decide indecomposability".into())),
        },
    }
}

/// Whether `End(m)` is a division ring.
pub fn is_brick<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = EndAlgebra::new(m)?;
    if end.dim() == 1 {
        return Ok(true);
    }
    match certify_local(&end, rng)? {
        Locality::Local { radical } => Ok(radical.is_empty()),
        Locality::NotLocal => Ok(false),
        // a splitter is a nonzero non-invertible element
        Locality::Unknown => match find_splitter(&end, rng)? {
            Some(_) => Ok(false),
            None => Err(Error::DecompositionStalled("cannot decide whether End is a division ring".into())),
        },
    }
}

pub fn end_algebra_structure(m: &Representation) -> Result<Vec<Vec<Vec<Scalar>>>> {
    Ok(EndAlgebra::new(m)?.structure_constants())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn point(k: &Arc<Algebra>, lambda: i64) -> Representation {
        let f = k.field();
        Representation::new(k, vec![1, 1], vec![Matrix::from_i64(f, &[&[1]]), Matrix::from_i64(f, &[&[lambda]])]).unwrap()
    }

    fn jordan(k: &Arc<Algebra>, r: usize) -> Representation {
        let f = k.field();
        let mut j = Matrix::zeros(f, r, r);
        for i in 0..r.saturating_sub(1) {
            j.set(i, i + 1, f.one());
        }
        Representation::new(k, vec![r, r], vec![Matrix::identity(f, r), j]).unwrap()
    }

    #[test]
    fn local_endomorphism_rings() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for field in [Field::Prime(2), Field::Prime(5), Field::Rational] {
            let k = Arc::new(Algebra::kronecker(field));
            let s0 = point(&k, 0);
            assert!(is_brick(&s0, &mut rng).unwrap());
            assert!(is_indecomposable(&jordan(&k, 3), &mut rng).unwrap());
            assert!(!is_brick(&jordan(&k, 2), &mut rng).unwrap());
            let mm = Representation::sum(&k, &[s0.clone(), s0]);
            assert!(!is_brick(&mm, &mut rng).unwrap());
            assert!(!is_indecomposable(&mm, &mut rng).unwrap());
            let p0 = Representation::projective(&k, 0);
            assert!(is_indecomposable(&p0, &mut rng).unwrap());
        }
    }

    #[test]
    fn structure_constants_examples() {
        let k = Arc::new(Algebra::kronecker(Field::Prime(3)));
        let t = end_algebra_structure(&point(&k, 1)).unwrap();
        assert_eq!(t, vec![vec![vec![Field::Prime(3).one()]]]);
        let mm = Representation::sum(&k, &[point(&k, 1), point(&k, 1)]);
        assert_eq!(end_algebra_structure(&mm).unwrap().len(), 4);
        let j = jordan(&k, 3);
        let end = EndAlgebra::new(&j).unwrap();
        assert_eq!(end.dim(), 3);
        let table = end.structure_constants();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(table[a][b], table[b][a]);
            }
        }
    }

    #[test]
    fn decomposition_recovers_conjugated_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for field in [Field::Prime(5), Field::Prime(2), Field::Rational] {
            let k = Arc::new(Algebra::kronecker(field.clone()));
            let parts = vec![point(&k, 0), point(&k, 1), jordan(&k, 2), Representation::projective(&k, 0), point(&k, 0)];
            let m = Representation::sum(&k, &parts);
            let (c, _) = m.random_conjugate(&mut rng);
            let d = decompose(&c, &mut rng).unwrap();
            assert!(d.verify());
            assert_eq!(d.parts().len(), 5);
            let classes = d.summands().unwrap();
            assert_eq!(classes.len(), 4);
            assert!(classes.iter().any(|(r, k)| *k == 2 && is_isomorphic(r, &parts[0]).unwrap().is_some()));
        }
    }

    #[test]
    fn decompose_indecomposable_is_singleton() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let k = Arc::new(Algebra::kronecker(Field::Prime(5)));
        let d = decompose(&Representation::projective(&k, 0), &mut rng).unwrap();
        assert_eq!(d.parts().len(), 1);
        assert!(decompose(&Representation::zero(&k), &mut rng).unwrap().parts().is_empty());
    }

    #[test]
    fn quadratic_point_over_rationals_is_a_brick() {
        // companion matrix of t^2+1: End is Q(i)
        let q = Field::Rational;
        let k = Arc::new(Algebra::kronecker(q.clone()));
        let c = Poly::from_i64s(&q, &[1, 0, 1]).companion();
        let s = Representation::new(&k, vec![2, 2], vec![Matrix::identity(&q, 2), c]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(is_brick(&s, &mut rng).unwrap());
        let d = decompose(&Representation::sum(&k, &[s.clone(), s]), &mut rng).unwrap();
        assert_eq!(d.parts().len(), 2);
    }
}
