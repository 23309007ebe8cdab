//! `Ext¹` with explicit cocycles, middle terms, and the translate `τ = D Tr`.
//!
//! Every class in `Ext¹(N, M)` is a map `Ω N → M` modulo restrictions of maps
//! `P₀ → M`, where `P₁ → P₀ → N` is the minimal presentation of `N`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::repcat::{
    factor_through_epi, factor_through_mono, generator_index, hom_basis, lift_from_projective, map_from_generators,
    minimal_projective_presentation, same_algebra, Morphism, Presentation, Representation,
};

/// Coordinates in the span of independent vectors, read off from a fixed set
/// of rows.
#[derive(Clone, Debug)]
struct SpanCoords {
    rows: Vec<usize>,
    inv: Matrix,
}

impl SpanCoords {
    fn new(field: &Field, len: usize, vecs: &[Vec<Scalar>]) -> Self {
        if vecs.is_empty() {
            return SpanCoords { rows: Vec::new(), inv: Matrix::zeros(field, 0, 0) };
        }
        let cols: Vec<Matrix> = vecs.iter().map(|v| Matrix::column(field, v.clone())).collect();
        let big = Matrix::hcat(field, len, &cols);
        let (_, rows) = big.transpose().rref();
        let inv = big.select_rows(&rows).inverse().expect("independent vectors");
        SpanCoords { rows, inv }
    }

    fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let sub: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&sub)
    }
}

/// `Ext¹(N, M)` with a fixed basis of cocycles.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    presentation: Arc<Presentation>,
    target: Representation,
    cocycles: Vec<Morphism>,
    hom_coords: SpanCoords,
    solver: Matrix,
    boundary_dim: usize,
    basis_index: Vec<usize>,
}

/// A class in `Ext¹(N, M)`, carried by a cocycle `Ω N → M`.
#[derive(Clone, Debug)]
pub struct ExtClass {
    presentation: Arc<Presentation>,
    cocycle: Morphism,
}

impl ExtClass {
    pub fn source(&self) -> &Representation {
        &self.presentation.module
    }

    pub fn target(&self) -> &Representation {
        self.cocycle.target()
    }

    pub fn cocycle(&self) -> &Morphism {
        &self.cocycle
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }
}

/// `Hom(P₀, M)` from generator images; `P₀ = ⊕ P(tops)` so this is `⊕ M_{tops[i]}`.
fn maps_from_cover(pres: &Presentation, m: &Representation) -> Vec<Morphism> {
    let f = m.field();
    let tops = &pres.p0.tops;
    let mut out = Vec::new();
    for (i, &v) in tops.iter().enumerate() {
        for k in 0..m.dim(v) {
            let gens: Vec<Vec<Scalar>> = tops
                .iter()
                .enumerate()
                .map(|(j, &w)| (0..m.dim(w)).map(|r| if j == i && r == k { f.one() } else { f.zero() }).collect())
                .collect();
            out.push(map_from_generators(&pres.p0.projective, tops, m, &gens));
        }
    }
    out
}

impl ExtSpace {
    pub fn new(n: &Representation, m: &Representation) -> Result<Self> {
        Self::with_presentation(Arc::new(minimal_projective_presentation(n)), m)
    }

    pub fn with_presentation(presentation: Arc<Presentation>, m: &Representation) -> Result<Self> {
        if !same_algebra(presentation.module.algebra(), m.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let f = m.field().clone();
        let omega = &presentation.omega;
        let cocycles = hom_basis(omega, m)?;
        let len: usize = (0..omega.dims().len()).map(|v| omega.dim(v) * m.dim(v)).sum();
        let flat: Vec<Vec<Scalar>> = cocycles.iter().map(Morphism::flatten).collect();
        let hom_coords = SpanCoords::new(&f, len, &flat);
        let h = cocycles.len();
        let boundaries: Vec<Matrix> = maps_from_cover(&presentation, m)
            .iter()
            .map(|g| Matrix::column(&f, hom_coords.coords(&g.compose(&presentation.omega_incl).flatten())))
            .collect();
        let b = Matrix::hcat(&f, h, &boundaries).column_space();
        let comp = b.complement_columns();
        let basis_index = (0..comp.cols()).map(|j| (0..h).find(|&i| !comp.get(i, j).is_zero()).unwrap()).collect();
        let solver = b.hstack(&comp).inverse().expect("complement basis");
        Ok(ExtSpace { boundary_dim: b.cols(), presentation, target: m.clone(), cocycles, hom_coords, solver, basis_index })
    }

    pub fn source(&self) -> &Representation {
        &self.presentation.module
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.basis_index.len()
    }

    pub fn basis(&self) -> Vec<ExtClass> {
        self.basis_index.iter().map(|&i| self.class_of_cocycle(self.cocycles[i].clone())).collect()
    }

    fn class_of_cocycle(&self, cocycle: Morphism) -> ExtClass {
        ExtClass { presentation: self.presentation.clone(), cocycle }
    }

    /// Coordinates of a cocycle `Ω N → M` in the class basis.
    pub fn cocycle_coords(&self, cocycle: &Morphism) -> Vec<Scalar> {
        let c = self.hom_coords.coords(&cocycle.flatten());
        self.solver.mul_vec(&c)[self.boundary_dim..].to_vec()
    }

    /// Coordinates of a class whose presentation matches this space.
    pub fn coords(&self, e: &ExtClass) -> Result<Vec<Scalar>> {
        if e.presentation.module != self.presentation.module || *e.target() != self.target {
            return Err(Error::Precondition("class lives in a different Ext space".into()));
        }
        Ok(self.cocycle_coords(&e.cocycle))
    }

    pub fn class(&self, coords: &[Scalar]) -> ExtClass {
        let mut acc = Morphism::zero(&self.presentation.omega, &self.target);
        for (c, &i) in coords.iter().zip(&self.basis_index) {
            if !c.is_zero() {
                acc = acc.add(&self.cocycles[i].scale(c));
            }
        }
        self.class_of_cocycle(acc)
    }

    pub fn is_zero_class(&self, cocycle: &Morphism) -> bool {
        self.cocycle_coords(cocycle).iter().all(Scalar::is_zero)
    }

    /// Coordinates of the class of `0 → M → B → N → 0`; the ends must match exactly.
    pub fn class_of(&self, s: &ShortExactSequence) -> Result<Vec<Scalar>> {
        if *s.c() != self.presentation.module || *s.a() != self.target {
            return Err(Error::Precondition("sequence ends do not match the Ext space".into()));
        }
        let cover = &self.presentation.p0;
        let g = lift_from_projective(&cover.projective, &cover.tops, &cover.map, s.pi()).expect("epimorphism");
        let phi = factor_through_mono(s.iota(), &g.compose(&self.presentation.omega_incl)).expect("Ω lands in ker π");
        Ok(self.cocycle_coords(&phi))
    }

    /// Matrix of `f_*: Ext¹(N, M) → Ext¹(N, M')` for `f: M → M'`.
    pub fn pushforward_matrix(&self, f: &Morphism, other: &ExtSpace) -> Matrix {
        let field = self.target.field();
        let cols: Vec<Matrix> = self
            .basis()
            .iter()
            .map(|e| Matrix::column(field, other.cocycle_coords(&f.compose(&e.cocycle))))
            .collect();
        Matrix::hcat(field, other.dim(), &cols)
    }

    /// Matrix of `g^*: Ext¹(N, M) → Ext¹(N', M)` for `g: N' → N`.
    pub fn pullback_matrix(&self, g: &Morphism, other: &ExtSpace) -> Matrix {
        let field = self.target.field();
        let (_, g1) = lift_to_presentations(g, &other.presentation, &self.presentation);
        let cols: Vec<Matrix> = self
            .basis()
            .iter()
            .map(|e| Matrix::column(field, other.cocycle_coords(&e.cocycle.compose(&g1))))
            .collect();
        Matrix::hcat(field, other.dim(), &cols)
    }
}

pub fn ext1_basis(n: &Representation, m: &Representation) -> Result<Vec<ExtClass>> {
    Ok(ExtSpace::new(n, m)?.basis())
}

pub fn ext1_dim(n: &Representation, m: &Representation) -> Result<usize> {
    Ok(ExtSpace::new(n, m)?.dim())
}

/// `dim Ext²(N, M) = dim Ext¹(Ω N, M)`.
pub fn ext2_dim(n: &Representation, m: &Representation) -> Result<usize> {
    let pres = minimal_projective_presentation(n);
    ext1_dim(&pres.omega, m)
}

/// Lifts `g: N' → N` to `g₀: P₀' → P₀` and its restriction `g₁: Ω N' → Ω N`.
pub fn lift_to_presentations(g: &Morphism, src: &Presentation, dst: &Presentation) -> (Morphism, Morphism) {
    let cover = &src.p0;
    let g0 = lift_from_projective(&cover.projective, &cover.tops, &g.compose(&cover.map), &dst.p0.map)
        .expect("cover is onto");
    let g1 = factor_through_mono(&dst.omega_incl, &g0.compose(&src.omega_incl)).expect("kernels map to kernels");
    (g0, g1)
}

/// `f_* e` for `f: M → M'`.
pub fn pushforward(e: &ExtClass, f: &Morphism) -> ExtClass {
    ExtClass { presentation: e.presentation.clone(), cocycle: f.compose(&e.cocycle) }
}

/// `g^* e` for `g: N' → N`, relative to the minimal presentation of `N'`.
pub fn pullback_class(e: &ExtClass, g: &Morphism) -> ExtClass {
    let src = Arc::new(minimal_projective_presentation(g.source()));
    let (_, g1) = lift_to_presentations(g, &src, &e.presentation);
    ExtClass { presentation: src, cocycle: e.cocycle.compose(&g1) }
}

/// `0 → A → B → C → 0`, exactness checked on construction.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    iota: Morphism,
    pi: Morphism,
}

impl ShortExactSequence {
    pub fn new(iota: Morphism, pi: Morphism) -> Result<Self> {
        if iota.target() != pi.source() {
            return Err(Error::DimensionMismatch("middle terms differ".into()));
        }
        let s = ShortExactSequence { iota, pi };
        if !s.verify() {
            return Err(Error::Precondition("sequence is not exact".into()));
        }
        Ok(s)
    }

    pub fn a(&self) -> &Representation {
        self.iota.source()
    }

    pub fn b(&self) -> &Representation {
        self.iota.target()
    }

    pub fn c(&self) -> &Representation {
        self.pi.target()
    }

    pub fn iota(&self) -> &Morphism {
        &self.iota
    }

    pub fn pi(&self) -> &Morphism {
        &self.pi
    }

    /// Mono, epi, and `im ι = ker π` (by composite zero and dimension count).
    pub fn verify(&self) -> bool {
        self.iota.is_injective()
            && self.pi.is_surjective()
            && self.pi.compose(&self.iota).is_zero()
            && (0..self.b().dims().len()).all(|v| self.a().dim(v) + self.c().dim(v) == self.b().dim(v))
    }

    /// A section of `π`, if the sequence splits.
    pub fn section(&self) -> Result<Option<Morphism>> {
        let homs = hom_basis(self.c(), self.b())?;
        let f = self.b().field();
        let id = Morphism::identity(self.c());
        let target = Matrix::column(f, id.flatten());
        let len = target.rows();
        if homs.is_empty() {
            return Ok(if self.c().is_zero() { Some(Morphism::zero(self.c(), self.b())) } else { None });
        }
        let cols: Vec<Matrix> = homs.iter().map(|h| Matrix::column(f, self.pi.compose(h).flatten())).collect();
        let sol = Matrix::hcat(f, len, &cols).solve(&target)?;
        Ok(sol.map(|x| Morphism::combination(&homs, &x.col(0))))
    }

    pub fn is_split(&self) -> Result<bool> {
        Ok(self.section()?.is_some())
    }
}

/// The middle term of `⊕ e_j` in `Ext¹(⊕ N_j, M)`: the pushout of
/// `⊕ Ω N_j → ⊕ P₀(N_j)` along the cocycles.
pub fn realize_sum(alg: &Arc<Algebra>, target: &Representation, classes: &[ExtClass]) -> Result<ShortExactSequence> {
    for e in classes {
        if e.target() != target {
            return Err(Error::Precondition("classes must share their left end".into()));
        }
    }
    let mut pieces = vec![target.clone()];
    pieces.extend(classes.iter().map(|e| e.presentation.p0.projective.clone()));
    let (s, s_inj, s_proj) = Representation::direct_sum(alg, &pieces);
    let omegas: Vec<Representation> = classes.iter().map(|e| e.presentation.omega.clone()).collect();
    let (omega, _, o_proj) = Representation::direct_sum(alg, &omegas);
    let mut h = Morphism::zero(&omega, &s);
    for (j, e) in classes.iter().enumerate() {
        let a = s_inj[0].compose(&e.cocycle).compose(&o_proj[j]);
        let b = s_inj[j + 1].compose(&e.presentation.omega_incl).compose(&o_proj[j]);
        h = h.add(&a).sub(&b);
    }
    let (_, q) = h.cokernel();
    let ns: Vec<Representation> = classes.iter().map(|e| e.source().clone()).collect();
    let (c, c_inj, _) = Representation::direct_sum(alg, &ns);
    let mut gamma = Morphism::zero(&s, &c);
    for (j, e) in classes.iter().enumerate() {
        gamma = gamma.add(&c_inj[j].compose(&e.presentation.p0.map).compose(&s_proj[j + 1]));
    }
    let beta = factor_through_epi(&q, &gamma).expect("γ vanishes on the relations");
    ShortExactSequence::new(q.compose(&s_inj[0]), beta)
}

/// `0 → M → B → N → 0` representing `e`; the zero class gives `B = M ⊕ N`.
pub fn realize(e: &ExtClass) -> ShortExactSequence {
    let alg = e.target().algebra().clone();
    realize_sum(&alg, e.target(), std::slice::from_ref(e)).expect("single class")
}

/// Pushout of `s` along `f: A → A'`.
pub fn pushout(f: &Morphism, s: &ShortExactSequence) -> Result<ShortExactSequence> {
    if f.source() != s.a() {
        return Err(Error::DimensionMismatch("pushout map must start at the left term".into()));
    }
    let alg = s.a().algebra().clone();
    let (sum, inj, proj) = Representation::direct_sum(&alg, &[f.target().clone(), s.b().clone()]);
    let h = inj[0].compose(f).sub(&inj[1].compose(s.iota()));
    let (_, q) = h.cokernel();
    let beta = factor_through_epi(&q, &s.pi().compose(&proj[1])).expect("π kills the relations");
    let _ = sum;
    ShortExactSequence::new(q.compose(&inj[0]), beta)
}

/// Pullback of `s` along `g: C' → C`.
pub fn pullback(g: &Morphism, s: &ShortExactSequence) -> Result<ShortExactSequence> {
    if g.target() != s.c() {
        return Err(Error::DimensionMismatch("pullback map must end at the right term".into()));
    }
    let alg = s.a().algebra().clone();
    let (_, inj, proj) = Representation::direct_sum(&alg, &[g.source().clone(), s.b().clone()]);
    let h = g.compose(&proj[0]).sub(&s.pi().compose(&proj[1]));
    let (_, k) = h.kernel();
    let alpha = factor_through_mono(&k, &inj[1].compose(s.iota())).expect("ι lands in the fibre product");
    ShortExactSequence::new(alpha, proj[0].compose(&k))
}

/// Classes `e` with prescribed pullbacks `g_i^* e = e_i` along `g_i: N_i → N`.
pub fn class_with_restrictions(space: &ExtSpace, conditions: &[(Morphism, ExtClass)]) -> Result<Option<ExtClass>> {
    let f = space.target.field().clone();
    let mut blocks = Vec::new();
    let mut rhs = Vec::new();
    for (g, e) in conditions {
        let other = ExtSpace::with_presentation(e.presentation.clone(), &space.target)?;
        blocks.push(space.pullback_matrix(g, &other));
        rhs.push(Matrix::column(&f, other.coords(e)?));
    }
    let a = Matrix::vcat(&f, space.dim(), &blocks);
    let b = Matrix::vcat(&f, 1, &rhs);
    Ok(a.solve(&b)?.map(|x| space.class(&x.col(0))))
}

/// `0 → M → X → ⊕ S^{d_S} → 0` killing every `Ext¹(S, M)`.
#[derive(Clone, Debug)]
pub struct UniversalExtension {
    pub sequence: ShortExactSequence,
    /// `d_S`, the rank of `Ext¹(S, M)` over `End(S)`.
    pub multiplicities: Vec<usize>,
}

impl UniversalExtension {
    pub fn middle(&self) -> &Representation {
        self.sequence.b()
    }
}

/// Basis of `Ext¹(S, M)` as a right `End(S)`-module, picked greedily.
pub fn ext_basis_over_end(space: &ExtSpace) -> Result<Vec<ExtClass>> {
    let s = space.source();
    let ends = hom_basis(s, s)?;
    let f = space.target.field().clone();
    let pres = space.presentation.clone();
    let lifts: Vec<Morphism> = ends.iter().map(|g| lift_to_presentations(g, &pres, &pres).1).collect();
    let mut chosen = Vec::new();
    let mut span: Vec<Vec<Scalar>> = Vec::new();
    let rank = |vs: &Vec<Vec<Scalar>>| if vs.is_empty() { 0 } else { Matrix::from_rows(&f, vs.clone()).unwrap().rank() };
    for e in space.basis() {
        let mut trial = span.clone();
        trial.push(space.cocycle_coords(&e.cocycle));
        if rank(&trial) == rank(&span) {
            continue;
        }
        for g1 in &lifts {
            span.push(space.cocycle_coords(&e.cocycle.compose(g1)));
        }
        chosen.push(e);
        if rank(&span) == space.dim() {
            break;
        }
    }
    if ends.len() * chosen.len() != space.dim() {
        return Err(Error::Unsupported("Ext is not free over End(S)".into()));
    }
    Ok(chosen)
}

pub fn universal_extension(m: &Representation, simples: &[Representation]) -> Result<UniversalExtension> {
    let alg = m.algebra().clone();
    let mut classes = Vec::new();
    let mut multiplicities = Vec::new();
    for s in simples {
        let space = ExtSpace::new(s, m)?;
        let chosen = ext_basis_over_end(&space)?;
        multiplicities.push(chosen.len());
        classes.extend(chosen);
    }
    let sequence = realize_sum(&alg, m, &classes)?;
    Ok(UniversalExtension { sequence, multiplicities })
}

/// Whether every class of `Ext¹(S, M)` pushes forward to zero in `Ext¹(S, X)`.
pub fn kills_ext(iota: &Morphism, s: &Representation) -> Result<bool> {
    let from = ExtSpace::new(s, iota.source())?;
    let to = ExtSpace::with_presentation(from.presentation.clone(), iota.target())?;
    Ok(from.basis().iter().all(|e| to.is_zero_class(&iota.compose(&e.cocycle))))
}

/// Result of `τ` or `τ⁻`, with the dropped projective or injective summands
/// as `(vertex, multiplicity)`.
#[derive(Clone, Debug)]
pub struct Translate {
    pub module: Representation,
    pub dropped: Vec<(usize, usize)>,
}

/// The transpose of a module over `target`'s opposite, landing over `target`.
fn transpose(n: &Representation, target: &Arc<Algebra>) -> Representation {
    let alg = n.algebra();
    let pres = minimal_projective_presentation(n);
    let (v_tops, w_tops) = (&pres.p0.tops, &pres.p1.tops);
    let f = n.field();
    let p0op = crate::repcat::projective_sum(target, v_tops);
    let p1op = crate::repcat::projective_sum(target, w_tops);
    // generator i of P₀* goes to Σ_j rev(d_{ij}) in P₁*
    let mut gens: Vec<Vec<Scalar>> = v_tops.iter().map(|&v| vec![f.zero(); p1op.dim(v)]).collect();
    for (j, &w) in w_tops.iter().enumerate() {
        let image = pres.differential.map(w).col(generator_index(alg, w_tops, j));
        let mut off = 0;
        for (i, &v) in v_tops.iter().enumerate() {
            let paths = alg.basis_paths(v, w);
            let op_off: usize = w_tops[..j].iter().map(|&x| target.path_dim(x, v)).sum();
            for (k, p) in paths.iter().enumerate() {
                let c = &image[off + k];
                if c.is_zero() {
                    continue;
                }
                let rev: Vec<usize> = p.iter().rev().copied().collect();
                for (t, x) in target.path_coords(w, v, &rev).into_iter().enumerate() {
                    gens[i][op_off + t] = &gens[i][op_off + t] + &(c * &x);
                }
            }
            off += paths.len();
        }
    }
    let d = map_from_generators(&p0op, v_tops, &p1op, &gens);
    d.cokernel().0
}

fn projective_multiplicities(m: &Representation) -> Result<Vec<(usize, usize)>> {
    let alg = m.algebra();
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        let p = Representation::projective(alg, v);
        let rows: Vec<Matrix> = hom_basis(m, &p)?.iter().map(|g| g.map(v).clone()).collect();
        if rows.is_empty() {
            continue;
        }
        let r = Matrix::vcat(m.field(), m.dim(v), &rows).rank();
        if r > 0 {
            out.push((v, r));
        }
    }
    Ok(out)
}

fn injective_multiplicities(m: &Representation) -> Result<Vec<(usize, usize)>> {
    let alg = m.algebra();
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        let i = Representation::injective(alg, v);
        let cols: Vec<Matrix> = hom_basis(&i, m)?.iter().map(|g| g.map(v).clone()).collect();
        if cols.is_empty() {
            continue;
        }
        let r = Matrix::hcat(m.field(), m.dim(v), &cols).rank();
        if r > 0 {
            out.push((v, r));
        }
    }
    Ok(out)
}

/// `τ M = D Tr M`; projective summands vanish and are reported.
pub fn tau(m: &Representation) -> Result<Translate> {
    let alg = m.algebra().clone();
    let tr = transpose(m, &alg.opposite());
    Ok(Translate { module: tr.dual_to(&alg), dropped: projective_multiplicities(m)? })
}

/// `τ⁻ M = Tr D M`; injective summands vanish and are reported.
pub fn tau_inverse(m: &Representation) -> Result<Translate> {
    let alg = m.algebra().clone();
    Ok(Translate { module: transpose(&m.dual(), &alg), dropped: injective_multiplicities(m)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{decompose, hom_dim, is_indecomposable, is_isomorphic};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn kron(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::kronecker(f))
    }

    fn point(k: &Arc<Algebra>, lambda: i64) -> Representation {
        let f = k.field();
        Representation::new(k, vec![1, 1], vec![Matrix::from_i64(f, &[&[1]]), Matrix::from_i64(f, &[&[lambda]])]).unwrap()
    }

    #[test]
    fn kronecker_ext_dimensions() {
        let k = kron(Field::Prime(5));
        let s0 = point(&k, 0);
        let pc = Representation::projective(&k, 1);
        assert_eq!(ext1_dim(&s0, &pc).unwrap(), 1);
        assert_eq!(ext1_dim(&s0, &s0).unwrap(), 1);
        assert_eq!(ext1_dim(&s0, &point(&k, 1)).unwrap(), 0);
        assert_eq!(ext1_dim(&Representation::projective(&k, 0), &s0).unwrap(), 0);
        assert_eq!(ext1_dim(&Representation::simple(&k, 0), &pc).unwrap(), 2);
    }

    #[test]
    fn realizations() {
        let k = kron(Field::Prime(5));
        let s0 = point(&k, 0);
        let pc = Representation::projective(&k, 1);
        let e = &ext1_basis(&s0, &pc).unwrap()[0];
        let s = realize(e);
        assert!(is_isomorphic(s.b(), &Representation::projective(&k, 0)).unwrap().is_some());
        assert!(!s.is_split().unwrap());
        let e = &ext1_basis(&s0, &s0).unwrap()[0];
        let s = realize(e);
        assert_eq!(s.b().dims(), &[2, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(is_indecomposable(s.b(), &mut rng).unwrap());
        let space = ExtSpace::new(&s0, &s0).unwrap();
        let zero = space.class(&[Field::Prime(5).zero()]);
        let split = realize(&zero);
        assert!(split.is_split().unwrap());
        assert_eq!(space.class_of(&split).unwrap(), vec![Field::Prime(5).zero()]);
    }

    #[test]
    fn class_round_trip() {
        let f = Field::Prime(7);
        let c = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(3)]).unwrap());
        let n = Representation::simple(&c, 0);
        let arms: Vec<Representation> = (1..4).map(|v| Representation::simple(&c, v)).collect();
        let m = Representation::sum(&c, &arms);
        let space = ExtSpace::new(&n, &m).unwrap();
        assert_eq!(space.dim(), 3);
        let coords: Vec<Scalar> = (0..space.dim()).map(|i| f.from_i64(i as i64 + 2)).collect();
        let s = realize(&space.class(&coords));
        assert_eq!(space.class_of(&s).unwrap(), coords);
    }

    #[test]
    fn euler_form_matches_homological_dimensions() {
        let f = Field::Prime(3);
        let c = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(2)]).unwrap());
        let mods: Vec<Representation> = (0..c.vertex_count())
            .flat_map(|v| [Representation::simple(&c, v), Representation::projective(&c, v), Representation::injective(&c, v)])
            .collect();
        for x in mods.iter().step_by(2) {
            for y in mods.iter().step_by(3) {
                let lhs = hom_dim(x, y).unwrap() as i64 - ext1_dim(x, y).unwrap() as i64 + ext2_dim(x, y).unwrap() as i64;
                assert_eq!(lhs, c.euler(x.dims(), y.dims()));
            }
        }
    }

    #[test]
    fn tau_on_kronecker() {
        let k = kron(Field::Prime(5));
        let s1 = point(&k, 1);
        let t = tau(&s1).unwrap();
        assert!(t.dropped.is_empty());
        assert!(is_isomorphic(&t.module, &s1).unwrap().is_some());
        let s0 = Representation::simple(&k, 0);
        let t = tau(&s0).unwrap();
        assert_eq!(t.module.dims(), &[3, 2]);
        assert_eq!(t.module.defect().unwrap(), s0.defect().unwrap());
        assert!(is_isomorphic(&tau_inverse(&t.module).unwrap().module, &s0).unwrap().is_some());
        let p = tau(&Representation::projective(&k, 0)).unwrap();
        assert!(p.module.is_zero());
        assert_eq!(p.dropped, vec![(0, 1)]);
        let pc = Representation::projective(&k, 1);
        let up = tau_inverse(&pc).unwrap().module;
        assert_eq!(up.dims(), &[2, 3]);
    }

    #[test]
    fn auslander_reiten_formula() {
        let f = Field::Prime(5);
        let c = Arc::new(Algebra::canonical(f.clone(), &[2, 3], &[]).unwrap());
        let tubes: Vec<Representation> = (1..c.vertex_count() - 1).map(|v| Representation::simple(&c, v)).collect();
        let others: Vec<Representation> = (0..c.vertex_count())
            .flat_map(|v| [Representation::projective(&c, v), Representation::injective(&c, v), Representation::simple(&c, v)])
            .collect();
        for t in &tubes {
            let tt = tau(t).unwrap().module;
            for m in &others {
                assert_eq!(ext1_dim(t, m).unwrap(), hom_dim(m, &tt).unwrap());
            }
        }
    }

    #[test]
    fn universal_extensions() {
        let k = kron(Field::Prime(5));
        let pc = Representation::projective(&k, 1);
        let (s0, s1) = (point(&k, 0), point(&k, 1));
        let u = universal_extension(&pc, &[s0.clone()]).unwrap();
        assert!(is_isomorphic(u.middle(), &Representation::projective(&k, 0)).unwrap().is_some());
        let u = universal_extension(&pc, &[s0.clone(), s1.clone()]).unwrap();
        assert_eq!(u.middle().dims(), &[2, 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(decompose(u.middle(), &mut rng).unwrap().parts().len(), 1);
        assert!(kills_ext(u.sequence.iota(), &s0).unwrap());
        assert!(kills_ext(u.sequence.iota(), &s1).unwrap());
        let triv = universal_extension(&Representation::projective(&k, 0), &[Representation::simple(&k, 1)]).unwrap();
        assert_eq!(triv.middle(), &Representation::projective(&k, 0));
    }

    #[test]
    fn pushouts_and_pullbacks() {
        let k = kron(Field::Prime(3));
        let s0 = point(&k, 0);
        let pc = Representation::projective(&k, 1);
        let s = realize(&ext1_basis(&s0, &pc).unwrap()[0]);
        let same = pushout(&Morphism::identity(&pc), &s).unwrap();
        assert!(is_isomorphic(same.b(), s.b()).unwrap().is_some());
        let zero = pushout(&Morphism::zero(&pc, &s0), &s).unwrap();
        assert!(zero.is_split().unwrap());
        let back = pullback(&Morphism::zero(&s0, &s0), &s).unwrap();
        assert!(back.is_split().unwrap());
        let space = ExtSpace::new(&s0, &pc).unwrap();
        let e = &space.basis()[0];
        let doubled = pullback_class(e, &Morphism::identity(&s0).scale(&Field::Prime(3).from_i64(2)));
        let other = ExtSpace::with_presentation(doubled.presentation().clone(), &pc).unwrap();
        assert_eq!(other.coords(&doubled).unwrap(), vec![Field::Prime(3).from_i64(2)]);
    }
}
