use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite-dimensional representation: a vector space per vertex and a
/// `dims(target) × dims(source)` matrix per arrow, satisfying every relation.
#[derive(Clone, Debug)]
pub struct Representation {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, o: &Self) -> bool {
        same_algebra(&self.alg, &o.alg) && self.dims == o.dims && self.maps == o.maps
    }
}

impl Eq for Representation {}

impl Representation {
    pub fn new(alg: &Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidRepresentation(m));
        if dims.len() != alg.vertex_count() {
            return bad(format!("{} dimensions for {} vertices", dims.len(), alg.vertex_count()));
        }
        if maps.len() != alg.arrows().len() {
            return bad(format!("{} matrices for {} arrows", maps.len(), alg.arrows().len()));
        }
        for (a, m) in alg.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return bad(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.label,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                ));
            }
            if m.field() != alg.field() {
                return bad(format!("arrow {} has entries outside the base field", a.label));
            }
        }
        let rep = Representation { alg: alg.clone(), dims, maps };
        for (i, r) in alg.relations().iter().enumerate() {
            let path0 = &r.terms[0].1;
            let src = alg.arrows()[path0[0]].source;
            let tgt = alg.path_endpoints(src, path0);
            let mut acc = Matrix::zeros(alg.field(), rep.dims[tgt], rep.dims[src]);
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_map(src, p).scale(c));
            }
            if !acc.is_zero() {
                return bad(format!("relation {i} does not vanish"));
            }
        }
        Ok(rep)
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        Representation::with_dims_zero_maps(alg, vec![0; alg.vertex_count()])
    }

    fn with_dims_zero_maps(alg: &Arc<Algebra>, dims: Vec<usize>) -> Self {
        let maps = alg
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// The action of a path starting at `v`.
    pub fn path_map(&self, v: usize, path: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[v]);
        for &a in path {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    pub fn defect(&self) -> Result<i64> {
        self.alg.defect(&self.dims)
    }

    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        Representation::with_dims_zero_maps(alg, dims)
    }

    /// `P(v)`, with basis the normal-form paths out of `v`.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Self {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| alg.path_dim(v, w)).collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(alg.field(), dims[a.target], dims[a.source]);
                for (j, p) in alg.basis_paths(v, a.source).into_iter().enumerate() {
                    let mut q = p.to_vec();
                    q.push(ai);
                    for (i, c) in alg.path_coords(v, a.target, &q).into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// `I(v) = D P^op(v)`.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Self {
        let op = alg.opposite();
        Representation::projective(&op, v).dual_to(alg)
    }

    /// `D = Hom_k(-, k)`, landing over `target`, which must be the opposite algebra.
    pub fn dual_to(&self, target: &Arc<Algebra>) -> Self {
        debug_assert!(target.arrows().iter().zip(self.alg.arrows()).all(|(a, b)| a.source == b.target && a.target == b.source));
        Representation {
            alg: target.clone(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn dual(&self) -> Self {
        self.dual_to(&self.alg.opposite())
    }

    /// Block-diagonal sum with its injections and projections.
    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Representation]) -> (Self, Vec<Morphism>, Vec<Morphism>) {
        let n = alg.vertex_count();
        let f = alg.field();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.arrows().len())
            .map(|a| Matrix::block_diag(f, &parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        let sum = Representation { alg: alg.clone(), dims: dims.clone(), maps };
        let mut offsets = vec![0; n];
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for p in parts {
            let mut i_maps = Vec::new();
            let mut p_maps = Vec::new();
            for v in 0..n {
                let mut i = Matrix::zeros(f, dims[v], p.dims[v]);
                i.put_block(offsets[v], 0, &Matrix::identity(f, p.dims[v]));
                p_maps.push(i.transpose());
                i_maps.push(i);
                offsets[v] += p.dims[v];
            }
            inj.push(Morphism::new_unchecked(p.clone(), sum.clone(), i_maps));
            proj.push(Morphism::new_unchecked(sum.clone(), p.clone(), p_maps));
        }
        (sum, inj, proj)
    }

    pub fn sum(alg: &Arc<Algebra>, parts: &[Representation]) -> Self {
        Representation::direct_sum(alg, parts).0
    }

    pub fn power(&self, k: usize) -> Self {
        Representation::sum(&self.alg, &vec![self.clone(); k])
    }

    /// Transport along per-vertex invertible matrices; returns the new
    /// representation with the isomorphism from `self` to it.
    pub fn conjugate(&self, g: &[Matrix]) -> (Self, Morphism) {
        let maps = self
            .alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| g[a.target].mul(&self.maps[i]).mul(&g[a.source].inverse().expect("invertible")))
            .collect();
        let other = Representation { alg: self.alg.clone(), dims: self.dims.clone(), maps };
        let iso = Morphism::new_unchecked(self.clone(), other.clone(), g.to_vec());
        (other, iso)
    }

    pub fn random_conjugate<R: Rng + ?Sized>(&self, rng: &mut R) -> (Self, Morphism) {
        let g: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::random_invertible(self.field(), d, rng)).collect();
        self.conjugate(&g)
    }

    /// Restriction to `Λ/ΛeΛ` for a representation vanishing at the deleted vertex.
    pub fn restrict(&self, sub: &Arc<Algebra>, kept_vertices: &[usize], kept_arrows: &[usize]) -> Result<Self> {
        let dropped_nonzero = (0..self.dims.len()).any(|v| !kept_vertices.contains(&v) && self.dims[v] > 0);
        if dropped_nonzero {
            return Err(Error::Precondition("module is supported at a deleted vertex".into()));
        }
        let dims = kept_vertices.iter().map(|&v| self.dims[v]).collect();
        let maps = kept_arrows.iter().map(|&a| self.maps[a].clone()).collect();
        Representation::new(sub, dims, maps)
    }

    /// The inverse of [`Representation::restrict`].
    pub fn inflate(&self, alg: &Arc<Algebra>, kept_vertices: &[usize], kept_arrows: &[usize]) -> Result<Self> {
        let mut dims = vec![0; alg.vertex_count()];
        for (i, &v) in kept_vertices.iter().enumerate() {
            dims[v] = self.dims[i];
        }
        let mut maps: Vec<Matrix> = alg
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.field(), dims[a.target], dims[a.source]))
            .collect();
        for (i, &a) in kept_arrows.iter().enumerate() {
            maps[a] = self.maps[i].clone();
        }
        Representation::new(alg, dims, maps)
    }

    /// Vertices with nonzero space.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Morphism `P(v) → self` sending the trivial path to `x ∈ self_v`.
    pub fn yoneda(&self, proj: &Representation, v: usize, x: &[Scalar]) -> Morphism {
        let alg = &self.alg;
        let xcol = Matrix::column(self.field(), x.to_vec());
        let maps = (0..alg.vertex_count())
            .map(|w| {
                let cols: Vec<Matrix> = alg
                    .basis_paths(v, w)
                    .into_iter()
                    .map(|p| self.path_map(v, p).mul(&xcol))
                    .collect();
                Matrix::hcat(self.field(), self.dims[w], &cols)
            })
            .collect();
        Morphism::new_unchecked(proj.clone(), self.clone(), maps)
    }

    /// `rad M_v`: the span of the images of all arrows ending at `v`, as columns.
    pub fn radical_at(&self, v: usize) -> Matrix {
        let f = self.field();
        let imgs: Vec<Matrix> = self
            .alg
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(i, _)| self.maps[i].clone())
            .collect();
        Matrix::hcat(f, self.dims[v], &imgs).column_space()
    }
}

/// A family of per-vertex maps commuting with all arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        if !same_algebra(&source.alg, &target.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let alg = source.alg.clone();
        if maps.len() != alg.vertex_count() {
            return Err(Error::DimensionMismatch("one matrix per vertex expected".into()));
        }
        for v in 0..alg.vertex_count() {
            if maps[v].rows() != target.dims[v] || maps[v].cols() != source.dims[v] {
                return Err(Error::DimensionMismatch(format!("vertex {} map has the wrong shape", alg.vertices()[v])));
            }
        }
        for (i, a) in alg.arrows().iter().enumerate() {
            let lhs = maps[a.target].mul(&source.maps[i]);
            let rhs = target.maps[i].mul(&maps[a.source]);
            if lhs != rhs {
                return Err(Error::InvalidRepresentation(format!("square at arrow {} does not commute", a.label)));
            }
        }
        Ok(Morphism { source, target, maps })
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, maps: Vec<Matrix>) -> Self {
        debug_assert!(Morphism::new(source.clone(), target.clone(), maps.clone()).is_ok());
        Morphism { source, target, maps }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn identity(m: &Representation) -> Self {
        let maps = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&first.maps).map(|(a, b)| a.mul(b)).collect();
        Morphism { source: first.source.clone(), target: self.target.clone(), maps }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&o.maps).map(|(a, b)| a.add(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn sub(&self, o: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&o.maps).map(|(a, b)| a.sub(b)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    /// `Σ cᵢ fᵢ` over a nonempty family of parallel morphisms.
    pub fn combination(fs: &[Morphism], cs: &[Scalar]) -> Morphism {
        let mut acc = Morphism::zero(&fs[0].source, &fs[0].target);
        for (f, c) in fs.iter().zip(cs) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub(crate) fn from_flat(source: &Representation, target: &Representation, v: &[Scalar]) -> Morphism {
        let f = source.field();
        let mut off = 0;
        let maps = (0..source.dims.len())
            .map(|i| {
                let (r, c) = (target.dims[i], source.dims[i]);
                let m = Matrix::from_vec(f, r, c, v[off..off + r * c].to_vec()).expect("shape");
                off += r * c;
                m
            })
            .collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    /// The kernel with its inclusion.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let alg = self.source.alg.clone();
        let basis: Vec<Matrix> = self.maps.iter().map(Matrix::kernel_basis).collect();
        sub_from_columns(&alg, &self.source, basis)
    }

    /// The image, with its inclusion into the target and the corestriction.
    pub fn image(&self) -> (Representation, Morphism, Morphism) {
        let alg = self.source.alg.clone();
        let basis: Vec<Matrix> = self.maps.iter().map(Matrix::column_space).collect();
        let (img, incl) = sub_from_columns(&alg, &self.target, basis);
        let corestriction = factor_through_mono(&incl, self).expect("a map factors through its image");
        (img, incl, corestriction)
    }

    /// The cokernel with its projection.
    pub fn cokernel(&self) -> (Representation, Morphism) {
        let alg = self.source.alg.clone();
        let q: Vec<Matrix> = self.maps.iter().map(Matrix::left_kernel).collect();
        quotient_from_rows(&alg, &self.target, q)
    }
}

/// The subrepresentation of `m` spanned per vertex by the given columns
/// (which must be independent and closed under the arrows).
pub fn sub_from_columns(alg: &Arc<Algebra>, m: &Representation, basis: Vec<Matrix>) -> (Representation, Morphism) {
    let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let image = m.maps[i].mul(&basis[a.source]);
            basis[a.target].solve(&image).unwrap().expect("subspace is closed under the arrows")
        })
        .collect();
    let sub = Representation { alg: alg.clone(), dims, maps };
    let incl = Morphism { source: sub.clone(), target: m.clone(), maps: basis };
    (sub, incl)
}

/// The quotient of `m` given per vertex by a surjection with the given rows.
pub fn quotient_from_rows(alg: &Arc<Algebra>, m: &Representation, q: Vec<Matrix>) -> (Representation, Morphism) {
    let dims: Vec<usize> = q.iter().map(Matrix::rows).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            // C(a) q_s = q_t M(a)
            let rhs = q[a.target].mul(&m.maps[i]);
            q[a.source]
                .transpose()
                .solve(&rhs.transpose())
                .unwrap()
                .expect("kernel is closed under the arrows")
                .transpose()
        })
        .collect();
    let quot = Representation { alg: alg.clone(), dims, maps };
    let proj = Morphism { source: m.clone(), target: quot.clone(), maps: q };
    (quot, proj)
}

/// `x` with `incl ∘ x = h`, if `h` lands in the image of the monomorphism.
pub fn factor_through_mono(incl: &Morphism, h: &Morphism) -> Option<Morphism> {
    let maps = incl
        .maps
        .iter()
        .zip(&h.maps)
        .map(|(i, hv)| i.solve(hv).ok().flatten())
        .collect::<Option<Vec<_>>>()?;
    Some(Morphism { source: h.source.clone(), target: incl.source.clone(), maps })
}

/// `x` with `x ∘ proj = h`, if `h` vanishes on the kernel of the epimorphism.
pub fn factor_through_epi(proj: &Morphism, h: &Morphism) -> Option<Morphism> {
    let maps = proj
        .maps
        .iter()
        .zip(&h.maps)
        .map(|(p, hv)| p.transpose().solve(&hv.transpose()).ok().flatten().map(|x| x.transpose()))
        .collect::<Option<Vec<_>>>()?;
    let out = Morphism { source: proj.target.clone(), target: h.target.clone(), maps };
    (out.compose(proj) == *h).then_some(out)
}

/// The sum of the images of the given maps into `m`, with its inclusion.
pub fn sum_of_images(m: &Representation, maps: &[Morphism]) -> (Representation, Morphism) {
    let alg = m.alg.clone();
    let f = m.field();
    let basis = (0..alg.vertex_count())
        .map(|v| {
            let cols: Vec<Matrix> = maps.iter().map(|g| g.maps[v].clone()).collect();
            Matrix::hcat(f, m.dims[v], &cols).column_space()
        })
        .collect();
    sub_from_columns(&alg, m, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn kron(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::kronecker(f))
    }

    #[test]
    fn kronecker_projectives_and_injectives() {
        let k = kron(Field::Rational);
        let pc = Representation::projective(&k, 1);
        assert_eq!(pc.dims(), &[0, 1]);
        let p0 = Representation::projective(&k, 0);
        assert_eq!(p0.dims(), &[1, 2]);
        let f = Field::Rational;
        assert_eq!(p0.map(0), &Matrix::from_i64(&f, &[&[1], &[0]]));
        assert_eq!(p0.map(1), &Matrix::from_i64(&f, &[&[0], &[1]]));
        let i0 = Representation::injective(&k, 0);
        assert_eq!(i0.dims(), &[1, 0]);
        let ic = Representation::injective(&k, 1);
        assert_eq!(ic.dims(), &[2, 1]);
    }

    #[test]
    fn relations_are_enforced() {
        let f = Field::Rational;
        let a = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(2)]).unwrap());
        let dims = vec![1; 5];
        let ones: Vec<Matrix> = a.arrows().iter().map(|_| Matrix::from_i64(&f, &[&[1]])).collect();
        // x3 = 1 but x2 - 2 x1 = -1
        assert!(Representation::new(&a, dims.clone(), ones.clone()).is_err());
        let p0 = Representation::projective(&a, 0);
        assert_eq!(p0.dims(), &[1, 1, 1, 1, 2]);
    }

    #[test]
    fn kernel_cokernel_image() {
        let f = Field::Prime(5);
        let k = kron(f.clone());
        let pc = Representation::projective(&k, 1);
        let p0 = Representation::projective(&k, 0);
        // P(c) -> P(0) along the first arrow
        let g = p0.yoneda(&pc, 1, &[f.one(), f.zero()]);
        assert!(g.is_injective());
        let (q, proj) = g.cokernel();
        assert_eq!(q.dims(), &[1, 1]);
        assert_eq!(q.defect().unwrap(), 0);
        assert!(proj.compose(&g).is_zero());
        let (kk, _) = g.kernel();
        assert!(kk.is_zero());
        let (img, incl, co) = g.image();
        assert_eq!(img.dims(), &[0, 1]);
        assert_eq!(incl.compose(&co), g);
        let id = Morphism::identity(&p0);
        assert!(id.kernel().0.is_zero());
        let z = Morphism::zero(&p0, &pc);
        assert_eq!(z.kernel().0.dims(), p0.dims());
    }

    #[test]
    fn direct_sum_biproduct_identities() {
        let f = Field::Prime(3);
        let k = kron(f);
        let parts = vec![Representation::projective(&k, 0), Representation::simple(&k, 0)];
        let (s, inj, proj) = Representation::direct_sum(&k, &parts);
        assert_eq!(s.dims(), &[2, 2]);
        let mut acc = Morphism::zero(&s, &s);
        for (i, p) in inj.iter().zip(&proj) {
            acc = acc.add(&i.compose(p));
            assert_eq!(p.compose(i), Morphism::identity(i.source()));
        }
        assert_eq!(acc, Morphism::identity(&s));
        assert!(Representation::sum(&k, &[]).is_zero());
    }

    #[test]
    fn conjugation_is_an_isomorphism() {
        let f = Field::Prime(5);
        let k = kron(f);
        let p0 = Representation::projective(&k, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (q, iso) = p0.random_conjugate(&mut rng);
        assert!(Morphism::new(p0, q, iso.maps().to_vec()).unwrap().is_iso());
    }
}
