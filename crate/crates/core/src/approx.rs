//! Finite truncations of Prüfer modules and of the left and right
//! approximations by them, plus the generic Kronecker module.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::homology::{class_with_restrictions, ext_basis_over_end, kills_ext, realize_sum, ExtSpace, ShortExactSequence};
use crate::repcat::{hom_basis, hom_dim, random_combination, sum_of_images, Morphism, Representation};
use crate::trisection::{regular_simples, s_bracket_chain, split_trisect, TubeId};

/// `S[1] ↪ S[2] ↪ … ↪ S[r]`.
#[derive(Clone, Debug)]
pub struct PruferTruncation {
    pub modules: Vec<Representation>,
    /// `inclusions[j]: S[j+1] → S[j+2]`.
    pub inclusions: Vec<Morphism>,
}

impl PruferTruncation {
    pub fn socle(&self) -> &Representation {
        &self.modules[0]
    }

    pub fn depth(&self) -> usize {
        self.modules.len()
    }

    pub fn top(&self) -> &Representation {
        self.modules.last().unwrap()
    }

    /// The composite `S[1] ↪ S[r]`.
    pub fn socle_inclusion(&self) -> Morphism {
        self.inclusions.iter().fold(Morphism::identity(self.socle()), |acc, i| i.compose(&acc))
    }
}

pub fn prufer_chain(s: &Representation, r: usize) -> Result<PruferTruncation> {
    if r == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    let seqs = s_bracket_chain(s, r)?;
    let mut modules = vec![s.clone()];
    modules.extend(seqs.iter().map(|q| q.b().clone()));
    let inclusions = seqs.into_iter().map(|q| q.iota().clone()).collect();
    Ok(PruferTruncation { modules, inclusions })
}

/// A finite set of tubes and a depth.
#[derive(Clone, Debug)]
pub struct TruncationParams {
    pub tubes: Vec<TubeId>,
    pub depth: usize,
}

impl TruncationParams {
    pub fn new(tubes: Vec<TubeId>, depth: usize) -> Result<Self> {
        if tubes.is_empty() || depth == 0 {
            return Err(Error::Precondition("need at least one tube and depth at least 1".into()));
        }
        Ok(TruncationParams { tubes, depth })
    }

    /// Every regular simple of the chosen tubes, tube by tube.
    pub fn simples(&self, alg: &Arc<Algebra>) -> Result<Vec<(TubeId, Representation)>> {
        let mut out = Vec::new();
        for t in &self.tubes {
            for s in regular_simples(alg, t)? {
                out.push((t.clone(), s));
            }
        }
        Ok(out)
    }
}

/// `0 → M → X → T' → 0` with `T'` a sum of truncated Prüfer modules.
#[derive(Clone, Debug)]
pub struct LeftApproximation {
    pub sequence: ShortExactSequence,
    /// `d_S` for each simple of the chosen tubes.
    pub multiplicities: Vec<(TubeId, Representation, usize)>,
    /// The summand of the input with positive defect, removed before approximating.
    pub stripped: Representation,
    /// `Ext¹(S, M) → Ext¹(S, X)` vanishes for every chosen simple.
    pub ext_killed: bool,
    /// `Hom(S, M) = 0` for all chosen simples forces `Hom(S, X) = 0`.
    pub torsionfree_preserved: bool,
}

pub fn left_omega_approx<R: Rng + ?Sized>(m: &Representation, params: &TruncationParams, rng: &mut R) -> Result<LeftApproximation> {
    let alg = m.algebra().clone();
    let split = split_trisect(m, rng)?;
    let (base, stripped) = if split.q.is_zero() {
        (m.clone(), split.q)
    } else {
        (Representation::sum(&alg, &[split.p.clone(), split.t.clone()]), split.q)
    };
    let simples = params.simples(&alg)?;
    let mut classes = Vec::new();
    let mut multiplicities = Vec::new();
    for (tube, s) in &simples {
        let space = ExtSpace::new(s, &base)?;
        let chosen = ext_basis_over_end(&space)?;
        multiplicities.push((tube.clone(), s.clone(), chosen.len()));
        if chosen.is_empty() {
            continue;
        }
        let chain = prufer_chain(s, params.depth)?;
        let incl = chain.socle_inclusion();
        let big = ExtSpace::new(chain.top(), &base)?;
        for e in chosen {
            let lifted = class_with_restrictions(&big, &[(incl.clone(), e)])?.ok_or_else(|| {
                Error::Unrealizable(format!("a class in Ext¹(S, M) for {tube} does not extend to S[{}]", params.depth))
            })?;
            classes.push(lifted);
        }
    }
    let sequence = realize_sum(&alg, &base, &classes)?;
    let mut ext_killed = true;
    let mut was_free = true;
    let mut now_free = true;
    for (_, s) in &simples {
        ext_killed &= kills_ext(sequence.iota(), s)?;
        was_free &= hom_dim(s, &base)? == 0;
        now_free &= hom_dim(s, sequence.b())? == 0;
    }
    Ok(LeftApproximation { sequence, multiplicities, stripped, ext_killed, torsionfree_preserved: !was_free || now_free })
}

/// `0 → K → N → M → 0` with `N` a sum of truncated Prüfer modules.
#[derive(Clone, Debug)]
pub struct RightApproximation {
    pub sequence: ShortExactSequence,
    /// The cover summands kept, as `(tube, socle index, depth)`.
    pub cover: Vec<(TubeId, usize, usize)>,
    /// `Hom(S, K) = 0` for every chosen simple.
    pub kernel_torsionfree: bool,
}

fn surjective_family(m: &Representation, maps: &[Morphism]) -> bool {
    !maps.is_empty() && sum_of_images(m, maps).0.dims() == m.dims()
}

pub fn right_omega_approx<R: Rng + ?Sized>(m: &Representation, params: &TruncationParams, rng: &mut R) -> Result<RightApproximation> {
    let alg = m.algebra().clone();
    let split = split_trisect(m, rng)?;
    if !split.p.is_zero() || !split.t.is_zero() {
        return Err(Error::Precondition("every summand must have positive defect".into()));
    }
    // candidates in tube order, then depth descending
    let mut candidates: Vec<((TubeId, usize, usize), Morphism)> = Vec::new();
    let mut simples = Vec::new();
    for tube in &params.tubes {
        for (k, s) in regular_simples(&alg, tube)?.into_iter().enumerate() {
            let chain = prufer_chain(&s, params.depth)?;
            for j in (1..=params.depth).rev() {
                for g in hom_basis(&chain.modules[j - 1], m)? {
                    candidates.push(((tube.clone(), k, j), g));
                }
            }
            simples.push(s);
        }
    }
    let all: Vec<Morphism> = candidates.iter().map(|(_, g)| g.clone()).collect();
    if !surjective_family(m, &all) {
        let (missing, _) = sum_of_images(m, &all).1.cokernel();
        return Err(Error::Precondition(format!(
            "tubes and depth do not generate the module; uncovered dimension vector {:?}",
            missing.dims()
        )));
    }
    let mut keep = vec![true; candidates.len()];
    for i in 0..candidates.len() {
        keep[i] = false;
        let rest: Vec<Morphism> = candidates.iter().zip(&keep).filter(|(_, &k)| k).map(|((_, g), _)| g.clone()).collect();
        if !surjective_family(m, &rest) {
            keep[i] = true;
        }
    }
    let kept: Vec<&((TubeId, usize, usize), Morphism)> = candidates.iter().zip(&keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
    let parts: Vec<Representation> = kept.iter().map(|(_, g)| g.source().clone()).collect();
    let (mut n, _, proj) = Representation::direct_sum(&alg, &parts);
    let mut cover = Morphism::zero(&n, m);
    for ((_, g), p) in kept.iter().zip(&proj) {
        cover = cover.add(&g.compose(p));
    }
    // factor out the torsion of the kernel until it is torsionfree
    loop {
        let (k, k_incl) = cover.kernel();
        let mut images = Vec::new();
        for s in &simples {
            for g in hom_basis(s, &k)? {
                images.push(k_incl.compose(&g));
            }
        }
        if images.is_empty() {
            let sequence = ShortExactSequence::new(k_incl, cover)?;
            let cover_ids = kept.iter().map(|(id, _)| id.clone()).collect();
            return Ok(RightApproximation { sequence, cover: cover_ids, kernel_torsionfree: true });
        }
        let (_, t_incl) = sum_of_images(&n, &images);
        let (quot, q) = t_incl.cokernel();
        cover = crate::repcat::factor_through_epi(&q, &cover).expect("torsion of the kernel maps to zero");
        n = quot;
    }
}

/// The generic Kronecker module `(1, T)` over `k(T)`.
pub fn kronecker_generic(base: &Field) -> Result<Representation> {
    let f = Field::function(base.clone())?;
    let alg = Arc::new(Algebra::kronecker(f.clone()));
    let t = f.parse_scalar("T")?;
    Representation::new(&alg, vec![1, 1], vec![Matrix::identity(&f, 1), Matrix::from_vec(&f, 1, 1, vec![t])?])
}

/// Length of `g` over its endomorphism ring: `dim g / dim End(g)`.
pub fn endolength(g: &Representation) -> Result<usize> {
    let e = hom_dim(g, g)?;
    if e == 0 || g.total_dim() % e != 0 {
        return Err(Error::Precondition("endomorphism ring does not divide the dimension".into()));
    }
    Ok(g.total_dim() / e)
}

/// `dim Hom(P, S[r])` for `r = 1..=r_max`, with a monomorphism when one is found.
#[derive(Clone, Debug)]
pub struct PegGrowth {
    pub dims: Vec<usize>,
    pub witnesses: Vec<Option<Morphism>>,
}

pub fn peg_hom_growth(peg: &Representation, s: &Representation, r_max: usize) -> Result<PegGrowth> {
    if peg.defect()? != -1 {
        return Err(Error::Precondition("a peg has defect −1".into()));
    }
    let chain = prufer_chain(s, r_max.max(1))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e6);
    let mut dims = Vec::new();
    let mut witnesses = Vec::new();
    for x in chain.modules.iter().take(r_max) {
        let basis = hom_basis(peg, x)?;
        dims.push(basis.len());
        let mut found = basis.iter().find(|g| g.is_injective()).cloned();
        if found.is_none() && !basis.is_empty() {
            found = (0..64).map(|_| random_combination(&basis, &mut rng)).find(Morphism::is_injective);
        }
        witnesses.push(found);
    }
    Ok(PegGrowth { dims, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::{decompose, is_brick, is_indecomposable, is_isomorphic};
    use crate::trisection::{classify, s_bracket, TrisectLabel};

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(17)
    }

    fn setup(f: Field) -> (Arc<Algebra>, Representation, TruncationParams) {
        let k = Arc::new(Algebra::kronecker(f.clone()));
        let tube = TubeId::at(&f.zero());
        let s0 = regular_simples(&k, &tube).unwrap().remove(0);
        (k, s0, TruncationParams::new(vec![tube], 1).unwrap())
    }

    #[test]
    fn prufer_chain_levels() {
        let (_, s0, _) = setup(Field::Prime(3));
        let chain = prufer_chain(&s0, 3).unwrap();
        let dims: Vec<&[usize]> = chain.modules.iter().map(|m| m.dims()).collect();
        assert_eq!(dims, vec![&[1, 1][..], &[2, 2], &[3, 3]]);
        assert!(chain.socle_inclusion().is_injective());
        for (j, i) in chain.inclusions.iter().enumerate() {
            let (q, _) = i.cokernel();
            assert!(is_isomorphic(&q, &s0).unwrap().is_some(), "level {j}");
        }
    }

    #[test]
    fn left_approximation_of_the_simple_projective() {
        let (k, s0, mut params) = setup(Field::Prime(5));
        let pc = Representation::projective(&k, 1);
        let mut r = rng();
        for depth in 1..=4 {
            params.depth = depth;
            let a = left_omega_approx(&pc, &params, &mut r).unwrap();
            let x = a.sequence.b();
            assert_eq!(x.dims(), &[depth, depth + 1]);
            assert!(is_indecomposable(x, &mut r).unwrap());
            assert!(is_isomorphic(a.sequence.c(), &s_bracket(&s0, depth).unwrap()).unwrap().is_some());
            assert!(a.ext_killed && a.torsionfree_preserved);
            assert_eq!(hom_dim(&s0, x).unwrap(), 0);
        }
        params.depth = 1;
        let a = left_omega_approx(&pc, &params, &mut r).unwrap();
        assert!(is_isomorphic(a.sequence.b(), &Representation::projective(&k, 0)).unwrap().is_some());
    }

    #[test]
    fn left_approximation_inside_the_tube() {
        let (_, s0, mut params) = setup(Field::Prime(5));
        params.depth = 2;
        let a = left_omega_approx(&s0, &params, &mut rng()).unwrap();
        assert!(is_isomorphic(a.sequence.b(), &s_bracket(&s0, 3).unwrap()).unwrap().is_some());
        assert!(a.ext_killed);
    }

    #[test]
    fn left_approximation_strips_positive_defect() {
        let (k, _, params) = setup(Field::Prime(5));
        let m = Representation::sum(&k, &[Representation::projective(&k, 1), Representation::simple(&k, 0)]);
        let a = left_omega_approx(&m, &params, &mut rng()).unwrap();
        assert_eq!(a.stripped.dims(), &[1, 0]);
        assert_eq!(a.sequence.a().dims(), &[0, 1]);
    }

    #[test]
    fn right_approximation_of_the_simple_injective() {
        let (k, s0, params) = setup(Field::Prime(5));
        let s = Representation::simple(&k, 0);
        let mut r = rng();
        let a = right_omega_approx(&s, &params, &mut r).unwrap();
        assert!(is_isomorphic(a.sequence.b(), &s0).unwrap().is_some());
        assert!(is_isomorphic(a.sequence.a(), &Representation::projective(&k, 1)).unwrap().is_some());
        assert!(a.kernel_torsionfree);
        assert!(right_omega_approx(&s0, &params, &mut r).is_err());
        let deep = TruncationParams::new(params.tubes.clone(), 3).unwrap();
        let a = right_omega_approx(&Representation::injective(&k, 1), &deep, &mut r).unwrap();
        assert_eq!(hom_dim(&s0, a.sequence.a()).unwrap(), 0);
        for part in decompose(a.sequence.a(), &mut r).unwrap().parts() {
            assert_eq!(classify(part, &mut r).unwrap(), TrisectLabel::P);
        }
    }

    #[test]
    fn generic_module() {
        for base in [Field::Rational, Field::Prime(3)] {
            let g = kronecker_generic(&base).unwrap();
            assert_eq!(hom_basis(&g, &g).unwrap().len(), 1);
            assert!(is_brick(&g, &mut rng()).unwrap());
            assert_eq!(endolength(&g).unwrap(), 2);
            let f = g.field().clone();
            let t = f.parse_scalar("T").unwrap();
            let at_t = regular_simples(g.algebra(), &TubeId::at(&t)).unwrap().remove(0);
            assert_eq!(hom_dim(&g, &at_t).unwrap(), 1);
            let at_zero = regular_simples(g.algebra(), &TubeId::at(&f.zero())).unwrap().remove(0);
            assert_eq!(hom_dim(&g, &at_zero).unwrap(), 0);
        }
    }

    #[test]
    fn peg_growth_is_linear_on_homogeneous_tubes() {
        let (k, s0, _) = setup(Field::Prime(5));
        let g = peg_hom_growth(&Representation::projective(&k, 1), &s0, 6).unwrap();
        assert_eq!(g.dims, vec![1, 2, 3, 4, 5, 6]);
        assert!(g.witnesses.iter().all(Option::is_some));
        assert!(peg_hom_growth(&Representation::simple(&k, 0), &s0, 2).is_err());
    }
}
