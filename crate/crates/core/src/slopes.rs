//! Slopes for the tubular canonical algebras of weight type (2,2,2,2),
//! (3,3,3), (2,4,4) and (2,3,6).
//!
//! `δ₀ = ⟨h₀, −⟩` and `δ_∞ = ⟨h_∞, −⟩`, where `h₀`, `h_∞` generate the radicals
//! of the Euler forms of the two hereditary quotients obtained by deleting
//! the source and the sink. An indecomposable off `p₀` and `q_∞` has slope
//! `κ · (−δ₀ / δ_∞)`, with `κ > 0` fixed by a calibration module.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::homology::{realize, tau, tau_inverse, ExtSpace};
use crate::repcat::{same_algebra, decompose, hom_basis, is_indecomposable, is_isomorphic, minimal_projective_presentation, random_combination, Morphism, Presentation, Representation};

const TUBULAR_TYPES: [&[usize]; 4] = [&[2, 2, 2, 2], &[3, 3, 3], &[2, 4, 4], &[2, 3, 6]];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slope {
    Finite(BigRational),
    Infinity,
}

impl Slope {
    pub fn zero() -> Self {
        Slope::Finite(BigRational::zero())
    }

    pub fn integer(n: i64) -> Self {
        Slope::Finite(BigRational::from_integer(n.into()))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Slope::Infinity);
        }
        let q: BigRational = s.parse().map_err(|_| Error::Parse(format!("bad slope {s:?}")))?;
        if q.is_negative() {
            return Err(Error::Parse(format!("slope {s} is negative")));
        }
        Ok(Slope::Finite(q))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::Finite(a), Slope::Finite(b)) => a.cmp(b),
            (Slope::Finite(_), Slope::Infinity) => Ordering::Less,
            (Slope::Infinity, Slope::Finite(_)) => Ordering::Greater,
            (Slope::Infinity, Slope::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(q) => write!(f, "{q}"),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

/// Where an indecomposable sits relative to the two defects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    P0,
    T0,
    Sloped(Slope),
    TInfinity,
    QInfinity,
}

impl Family {
    pub fn slope(&self) -> Option<&Slope> {
        match self {
            Family::Sloped(s) => Some(s),
            _ => None,
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Family::P0 => "p0".into(),
            Family::T0 => "t0".into(),
            Family::Sloped(s) => format!("t{s}"),
            Family::TInfinity => "tinf".into(),
            Family::QInfinity => "qinf".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TubularAlgebra {
    alg: Arc<Algebra>,
    h0: Vec<i64>,
    h_inf: Vec<i64>,
    d0: Vec<i64>,
    d_inf: Vec<i64>,
    kappa: BigRational,
    calibration: Vec<usize>,
}

fn primitive(v: Vec<BigInt>) -> Vec<i64> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    v.into_iter()
        .map(|x| i64::try_from(if g.is_zero() { x } else { x / &g }).expect("small integer"))
        .collect()
}

/// Primitive nonnegative generator of the radical of the symmetric Euler form.
fn radical_generator(alg: &Algebra) -> Result<Vec<i64>> {
    let q = alg.symmetric_euler();
    let rows: Vec<&[i64]> = q.iter().map(Vec::as_slice).collect();
    let ker = Matrix::from_i64(&Field::Rational, &rows).kernel_basis();
    if ker.cols() != 1 {
        return Err(Error::Unsupported(format!("quotient radical has rank {}", ker.cols())));
    }
    let col: Vec<BigRational> = ker.col(0).iter().map(|s| s.as_rational().expect("rational").clone()).collect();
    let den = col.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut ints = primitive(col.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect());
    if ints.iter().any(|&x| x < 0) {
        ints.iter_mut().for_each(|x| *x = -*x);
    }
    if ints.iter().any(|&x| x < 0) {
        return Err(Error::Unsupported("quotient radical is not sign-definite".into()));
    }
    Ok(ints)
}

fn embed(v: &[i64], kept: &[usize], n: usize) -> Vec<i64> {
    let mut out = vec![0; n];
    for (x, &w) in v.iter().zip(kept) {
        out[w] = *x;
    }
    out
}

fn unit(n: usize, v: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[v] = 1;
    e
}

fn dot(c: &[i64], d: &[usize]) -> i64 {
    c.iter().zip(d).map(|(a, b)| a * *b as i64).sum()
}

impl TubularAlgebra {
    pub fn new(alg: &Arc<Algebra>) -> Result<Self> {
        let shape = alg.require_canonical()?;
        let mut w = shape.weights.clone();
        w.sort_unstable();
        if !TUBULAR_TYPES.contains(&w.as_slice()) {
            return Err(Error::Precondition(format!("weights {:?} are not of tubular type", shape.weights)));
        }
        let n = alg.vertex_count();
        let (l0, kept0, _) = alg.delete_vertex(shape.source)?;
        let (linf, kept_inf, _) = alg.delete_vertex(shape.sink)?;
        let h0 = embed(&radical_generator(&l0)?, &kept0, n);
        let h_inf = embed(&radical_generator(&linf)?, &kept_inf, n);
        let form = |h: &[i64], witness: usize, want_negative: bool| {
            let mut c = primitive((0..n).map(|v| BigInt::from(alg.euler_signed(h, &unit(n, v)))).collect());
            let at = c[witness];
            if (at < 0) != want_negative {
                c.iter_mut().for_each(|x| *x = -*x);
            }
            c
        };
        // δ₀ < 0 on the simple projective, δ_∞ > 0 on the simple injective
        let d0 = form(&h0, shape.sink, true);
        let d_inf = form(&h_inf, shape.source, false);
        let mut t = TubularAlgebra { alg: alg.clone(), h0, h_inf, d0, d_inf, kappa: BigRational::one(), calibration: Vec::new() };
        t.calibrate()?;
        Ok(t)
    }

    /// Sets `κ` so that the smallest sloped simple, or failing that the
    /// smallest sloped module of a deterministic closure search, has slope 1.
    fn calibrate(&mut self) -> Result<()> {
        let n = self.alg.vertex_count();
        let mut cands: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut e = vec![0; n];
                e[v] = 1;
                e
            })
            .filter(|d| self.is_middle(d))
            .collect();
        if cands.is_empty() {
            let pool = closure_pool(self, &PoolConfig { seed: 0, ..PoolConfig::default() })?;
            cands = pool.iter().map(|m| m.dims().to_vec()).filter(|d| self.is_middle(d)).collect();
        }
        cands.sort_by(|a, b| (a.iter().sum::<usize>(), a).cmp(&(b.iter().sum::<usize>(), b)));
        let d = cands.into_iter().next().ok_or_else(|| Error::Unsupported("no calibration module found".into()))?;
        self.kappa = BigRational::new((-self.delta_infty(&d)).into(), self.delta_zero(&d).into());
        self.calibration = d;
        Ok(())
    }

    fn is_middle(&self, d: &[usize]) -> bool {
        self.delta_zero(d) > 0 && self.delta_infty(d) < 0
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn h0(&self) -> &[i64] {
        &self.h0
    }

    pub fn h_infinity(&self) -> &[i64] {
        &self.h_inf
    }

    pub fn delta_zero_coefficients(&self) -> &[i64] {
        &self.d0
    }

    pub fn delta_infty_coefficients(&self) -> &[i64] {
        &self.d_inf
    }

    /// Dimension vector of the calibration module, of slope 1.
    pub fn calibration(&self) -> &[usize] {
        &self.calibration
    }

    pub fn kappa(&self) -> &BigRational {
        &self.kappa
    }

    pub fn delta_zero(&self, d: &[usize]) -> i64 {
        dot(&self.d0, d)
    }

    pub fn delta_infty(&self, d: &[usize]) -> i64 {
        dot(&self.d_inf, d)
    }

    /// The family of an indecomposable with dimension vector `d`.
    pub fn family(&self, d: &[usize]) -> Family {
        let (a, b) = (self.delta_zero(d), self.delta_infty(d));
        if a < 0 {
            Family::P0
        } else if b > 0 {
            Family::QInfinity
        } else if a == 0 {
            Family::T0
        } else if b == 0 {
            Family::TInfinity
        } else {
            let q = BigRational::new(a.into(), (-b).into()) * &self.kappa;
            Family::Sloped(Slope::Finite(q))
        }
    }

    /// Slope of an indecomposable, read off its dimension vector.
    pub fn slope(&self, m: &Representation) -> Result<Slope> {
        if !same_algebra(m.algebra(), &self.alg) {
            return Err(Error::AlgebraMismatch);
        }
        match self.family(m.dims()) {
            Family::P0 => Err(Error::Precondition("module lies in p0 and has no slope".into())),
            Family::QInfinity => Err(Error::Precondition("module lies in q∞ and has no slope".into())),
            Family::T0 => Ok(Slope::zero()),
            Family::TInfinity => Ok(Slope::Infinity),
            Family::Sloped(s) => Ok(s),
        }
    }

    /// Indecomposables of `t₀`: modules vanishing at the source with `δ₀ = 0`.
    pub fn t0_members<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<Representation>> {
        let shape = self.alg.require_canonical()?;
        self.quotient_members(shape.source, |d| self.delta_zero(d) == 0, rng)
    }

    /// Indecomposables of `t_∞`: modules vanishing at the sink with `δ_∞ = 0`.
    pub fn t_infinity_members<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<Representation>> {
        let shape = self.alg.require_canonical()?;
        self.quotient_members(shape.sink, |d| self.delta_infty(d) == 0, rng)
    }

    fn quotient_members<R: Rng + ?Sized>(&self, killed: usize, keep: impl Fn(&[usize]) -> bool, rng: &mut R) -> Result<Vec<Representation>> {
        let mut out: Vec<Representation> = Vec::new();
        let mut cands = thin_modules(&self.alg)?;
        let h = if killed == 0 { &self.h0 } else { &self.h_inf };
        let hd: Vec<usize> = h.iter().map(|&x| x as usize).collect();
        for _ in 0..4 {
            cands.push(random_on_support(&self.alg, &hd, rng)?);
        }
        for m in cands {
            if m.dim(killed) != 0 || !keep(m.dims()) || m.is_zero() || !is_indecomposable(&m, rng)? {
                continue;
            }
            let mut seen = false;
            for o in &out {
                if o.dims() == m.dims() && is_isomorphic(o, &m)?.is_some() {
                    seen = true;
                    break;
                }
            }
            if !seen {
                out.push(m);
            }
        }
        Ok(out)
    }
}

/// A random module with dimension vector `d` vanishing at the source or the
/// sink, so that no relation applies.
fn random_on_support<R: Rng + ?Sized>(alg: &Arc<Algebra>, d: &[usize], rng: &mut R) -> Result<Representation> {
    let f = alg.field();
    let maps = alg.arrows().iter().map(|a| Matrix::random(f, d[a.target], d[a.source], rng)).collect();
    Representation::new(alg, d.to_vec(), maps)
}

/// All thin modules whose arms carry identities except for the last arrow
/// of each arm, scaled so that the relations hold; only connected supports
/// yield indecomposables.
pub fn thin_modules(alg: &Arc<Algebra>) -> Result<Vec<Representation>> {
    let shape = alg.require_canonical()?.clone();
    let f = alg.field().clone();
    let n = alg.vertex_count();
    if n > 14 {
        return Err(Error::Unsupported("too many vertices for thin enumeration".into()));
    }
    let small: Vec<Scalar> = (0..3).map(|i| f.from_i64(i)).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let d: Vec<usize> = (0..n).map(|v| ((mask >> v) & 1) as usize).collect();
        let full = d[shape.source] == 1 && d[shape.sink] == 1;
        let pairs: Vec<(Scalar, Scalar)> = if full {
            small.iter().flat_map(|a| small.iter().map(move |b| (a.clone(), b.clone()))).collect()
        } else {
            vec![(f.one(), f.one())]
        };
        for (s1, s2) in pairs {
            let mut maps: Vec<Matrix> = alg.arrows().iter().map(|a| Matrix::zeros(&f, d[a.target], d[a.source])).collect();
            for (i, arrows) in shape.arm_arrows.iter().enumerate() {
                let scale = match i {
                    0 => s1.clone(),
                    1 => s2.clone(),
                    _ => s2.clone() - shape.params[i - 2].clone() * s1.clone(),
                };
                for (j, &a) in arrows.iter().enumerate() {
                    let ar = &alg.arrows()[a];
                    if d[ar.source] == 1 && d[ar.target] == 1 {
                        let c = if j + 1 == arrows.len() && full { scale.clone() } else { f.one() };
                        maps[a] = Matrix::from_vec(&f, 1, 1, vec![c])?;
                    }
                }
            }
            if let Ok(m) = Representation::new(alg, d.clone(), maps) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Limits for the closure search.
#[derive(Clone, Debug)]
pub struct PoolConfig {
    pub max_total_dim: usize,
    pub max_size: usize,
    pub seed: u64,
}

impl Default for PoolConfig {
    fn default() -> Self {
        PoolConfig { max_total_dim: 12, max_size: 160, seed: 0 }
    }
}

struct Pool {
    members: Vec<Representation>,
    presentations: Vec<Option<Arc<Presentation>>>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    budget: usize,
    cap: usize,
}

impl Pool {
    fn insert_indecomposable(&mut self, m: Representation) -> Result<()> {
        if m.is_zero() || m.total_dim() > self.budget || self.members.len() >= self.cap {
            return Ok(());
        }
        let ids = self.by_dims.entry(m.dims().to_vec()).or_default();
        for &i in ids.iter() {
            if is_isomorphic(&self.members[i], &m)?.is_some() {
                return Ok(());
            }
        }
        ids.push(self.members.len());
        self.members.push(m);
        self.presentations.push(None);
        Ok(())
    }

    fn insert<R: Rng + ?Sized>(&mut self, m: &Representation, rng: &mut R) -> Result<()> {
        for part in decompose(m, rng)?.parts() {
            self.insert_indecomposable(part.clone())?;
        }
        Ok(())
    }

    fn presentation(&mut self, i: usize) -> Arc<Presentation> {
        self.presentations[i].get_or_insert_with(|| Arc::new(minimal_projective_presentation(&self.members[i]))).clone()
    }
}

/// Indecomposables up to a total dimension, closed as far as the limits
/// allow under `τ`, `τ⁻` and middle terms of random extensions between
/// members. Seeds are the thin modules, projectives and injectives.
pub fn closure_pool(tub: &TubularAlgebra, cfg: &PoolConfig) -> Result<Vec<Representation>> {
    let alg = tub.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pool = Pool { members: Vec::new(), presentations: Vec::new(), by_dims: HashMap::new(), budget: cfg.max_total_dim, cap: cfg.max_size };
    for m in thin_modules(alg)? {
        if is_indecomposable(&m, &mut rng)? {
            pool.insert_indecomposable(m)?;
        }
    }
    for v in 0..alg.vertex_count() {
        pool.insert_indecomposable(Representation::projective(alg, v))?;
        pool.insert_indecomposable(Representation::injective(alg, v))?;
    }
    let mut i = 0;
    while i < pool.members.len() && pool.members.len() < cfg.max_size {
        let x = pool.members[i].clone();
        for t in [tau(&x)?.module, tau_inverse(&x)?.module] {
            pool.insert_indecomposable(t)?;
        }
        for j in 0..=i {
            if pool.members.len() >= cfg.max_size {
                break;
            }
            let y = pool.members[j].clone();
            if x.total_dim() + y.total_dim() > cfg.max_total_dim {
                continue;
            }
            for (a, b) in [(i, j), (j, i)] {
                let space = ExtSpace::with_presentation(pool.presentation(a), &pool.members[b])?;
                if space.dim() == 0 {
                    continue;
                }
                let coords: Vec<Scalar> = (0..space.dim()).map(|_| alg.field().random(&mut rng)).collect();
                if coords.iter().all(Scalar::is_zero) {
                    continue;
                }
                let seq = realize(&space.class(&coords));
                pool.insert(seq.b(), &mut rng)?;
                if a == b {
                    break;
                }
            }
        }
        i += 1;
    }
    let mut members = pool.members;
    members.sort_by(|a, b| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    Ok(members)
}

/// The default search space for [`chain_toward_slope`]: the constructed
/// members of `t₀` and `t_∞` and the indecomposable thin modules.
pub fn chain_pool(tub: &TubularAlgebra, seed: u64) -> Result<Vec<Representation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool = tub.t0_members(&mut rng)?;
    pool.extend(tub.t_infinity_members(&mut rng)?);
    for m in thin_modules(tub.algebra())? {
        if is_indecomposable(&m, &mut rng)? {
            pool.push(m);
        }
    }
    pool.sort_by(|a, b| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    Ok(pool)
}

/// Outcome of comparing two sloped indecomposables.
#[derive(Clone, Debug)]
pub struct OrderVerdict {
    pub slopes: (Slope, Slope),
    pub hom_dim: usize,
    /// A nonzero map `m → n`, if any.
    pub witness: Option<Morphism>,
    /// False exactly when `slope(m) > slope(n)` yet `Hom(m, n) ≠ 0`.
    pub consistent: bool,
}

pub fn slope_order_check(tub: &TubularAlgebra, m: &Representation, n: &Representation) -> Result<OrderVerdict> {
    let (a, b) = (tub.slope(m)?, tub.slope(n)?);
    let basis = hom_basis(m, n)?;
    let consistent = a <= b || basis.is_empty();
    Ok(OrderVerdict { hom_dim: basis.len(), witness: basis.into_iter().next(), consistent, slopes: (a, b) })
}

/// `M₁ ⊂ M₂ ⊂ … ⊂ M_n` with `M_i` a sum of copies of one indecomposable of slope `α_i`.
#[derive(Clone, Debug)]
pub struct SlopeChain {
    pub slopes: Vec<Slope>,
    pub modules: Vec<Representation>,
    /// `inclusions[i]: M_{i+1} → M_{i+2}`.
    pub inclusions: Vec<Morphism>,
    pub cokernels: Vec<Representation>,
}

impl SlopeChain {
    pub fn composite(&self) -> Option<Morphism> {
        let first = self.modules.first()?;
        Some(self.inclusions.iter().fold(Morphism::identity(first), |acc, i| i.compose(&acc)))
    }
}

fn find_mono<R: Rng + ?Sized>(m: &Representation, n: &Representation, rng: &mut R) -> Result<Option<Morphism>> {
    let basis = hom_basis(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    if let Some(g) = basis.iter().find(|g| g.is_injective()) {
        return Ok(Some(g.clone()));
    }
    Ok((0..32).map(|_| random_combination(&basis, rng)).find(Morphism::is_injective))
}

/// Searches `pool` stage by stage, backtracking, for a chain through the
/// given ascending slopes whose members stay within `budget`.
pub fn chain_toward_slope<R: Rng + ?Sized>(
    tub: &TubularAlgebra,
    ratios: &[Slope],
    pool: &[Representation],
    budget: usize,
    rng: &mut R,
) -> Result<SlopeChain> {
    if ratios.is_empty() {
        return Err(Error::Precondition("no slopes given".into()));
    }
    if ratios.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("slopes must increase strictly".into()));
    }
    let stages: Vec<Vec<&Representation>> = ratios
        .iter()
        .map(|a| pool.iter().filter(|m| tub.family(m.dims()).slope() == Some(a) || (a == &Slope::zero() && tub.family(m.dims()) == Family::T0) || (a == &Slope::Infinity && tub.family(m.dims()) == Family::TInfinity)).collect())
        .collect();
    let mut deepest = 0;
    let mut path: Vec<(Representation, Option<Morphism>)> = Vec::new();
    if search(&stages, 0, budget, &mut path, &mut deepest, rng)? {
        let modules: Vec<Representation> = path.iter().map(|(m, _)| m.clone()).collect();
        let inclusions: Vec<Morphism> = path.into_iter().filter_map(|(_, g)| g).collect();
        let cokernels = inclusions.iter().map(|g| g.cokernel().0).collect();
        return Ok(SlopeChain { slopes: ratios.to_vec(), modules, inclusions, cokernels });
    }
    Err(Error::Unrealizable(format!(
        "no monomorphism into a module of slope {} within total dimension {budget} (stage {})",
        ratios[deepest.min(ratios.len() - 1)],
        deepest + 1
    )))
}

fn search<R: Rng + ?Sized>(
    stages: &[Vec<&Representation>],
    k: usize,
    budget: usize,
    path: &mut Vec<(Representation, Option<Morphism>)>,
    deepest: &mut usize,
    rng: &mut R,
) -> Result<bool> {
    *deepest = (*deepest).max(k);
    if k == stages.len() {
        return Ok(true);
    }
    for &cand in &stages[k] {
        let mut copies = 1;
        while copies * cand.total_dim() <= budget {
            let target = cand.power(copies);
            copies += 1;
            let g = match path.last() {
                None => None,
                Some((prev, _)) => match find_mono(prev, &target, rng)? {
                    Some(g) => Some(g),
                    None => continue,
                },
            };
            path.push((target, g));
            if search(stages, k + 1, budget, path, deepest, rng)? {
                return Ok(true);
            }
            path.pop();
            if k == 0 {
                break;
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2222() -> Arc<Algebra> {
        let f = Field::Prime(5);
        Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2, 2], &[f.from_i64(2), f.from_i64(3)]).unwrap())
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(5)
    }

    #[test]
    fn defect_forms() {
        let alg = c2222();
        let t = TubularAlgebra::new(&alg).unwrap();
        assert_eq!(t.h0(), &[0, 1, 1, 1, 1, 2]);
        assert_eq!(t.h_infinity(), &[2, 1, 1, 1, 1, 0]);
        assert_eq!(t.delta_zero_coefficients(), &[0, 1, 1, 1, 1, -2]);
        assert_eq!(t.delta_infty_coefficients(), &[2, -1, -1, -1, -1, 0]);
        assert!(t.delta_zero(Representation::projective(&alg, 5).dims()) < 0);
        assert!(t.delta_infty(Representation::simple(&alg, 0).dims()) > 0);
        let h0: Vec<usize> = t.h0().iter().map(|&x| x as usize).collect();
        assert_eq!(t.delta_zero(&h0), 0);
        assert_eq!(t.delta_zero(Representation::projective(&alg, 0).dims()), 0);
        assert_eq!(t.delta_infty(Representation::injective(&alg, 5).dims()), 0);
        assert_eq!(t.calibration(), &[0, 0, 0, 0, 1, 0]);
        assert!(t.kappa().is_one());
        let f = Field::Prime(5);
        let not = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(2)]).unwrap());
        assert!(TubularAlgebra::new(&not).is_err());
    }

    #[test]
    fn other_weight_types_calibrate() {
        let f = Field::Prime(7);
        for w in [&[3, 3, 3][..], &[2, 4, 4], &[2, 3, 6]] {
            let alg = Arc::new(Algebra::canonical(f.clone(), w, &[f.from_i64(2)]).unwrap());
            let t = TubularAlgebra::new(&alg).unwrap();
            assert_eq!(t.slope(&Representation::new(&alg, t.calibration().to_vec(), zero_maps(&alg, t.calibration())).unwrap()).unwrap(), Slope::integer(1));
            assert!(t.delta_zero(Representation::projective(&alg, alg.vertex_count() - 1).dims()) < 0);
        }
    }

    fn zero_maps(alg: &Arc<Algebra>, d: &[usize]) -> Vec<Matrix> {
        alg.arrows().iter().map(|a| Matrix::zeros(alg.field(), d[a.target], d[a.source])).collect()
    }

    #[test]
    fn tube_members_have_the_end_slopes() {
        let alg = c2222();
        let t = TubularAlgebra::new(&alg).unwrap();
        let mut r = rng();
        let t0 = t.t0_members(&mut r).unwrap();
        let tinf = t.t_infinity_members(&mut r).unwrap();
        assert!(t0.len() >= 6 && tinf.len() >= 6);
        for m in &t0 {
            assert_eq!(t.slope(m).unwrap(), Slope::zero());
            assert!(t.delta_infty(m.dims()) < 0);
        }
        for m in &tinf {
            assert_eq!(t.slope(m).unwrap(), Slope::Infinity);
            assert!(t.delta_zero(m.dims()) > 0);
        }
        for a in &tinf {
            for b in &t0 {
                let v = slope_order_check(&t, a, b).unwrap();
                assert!(v.consistent && v.hom_dim == 0);
            }
        }
        assert!(t.slope(&Representation::projective(&alg, 5)).is_err());
        assert!(t.slope(&Representation::simple(&alg, 0)).is_err());
    }

    #[test]
    fn slopes_respect_hom_order_on_a_small_pool() {
        let alg = c2222();
        let t = TubularAlgebra::new(&alg).unwrap();
        let pool = closure_pool(&t, &PoolConfig { max_total_dim: 7, max_size: 60, seed: 3 }).unwrap();
        let sloped: Vec<&Representation> = pool.iter().filter(|m| t.slope(m).is_ok()).collect();
        assert!(sloped.len() >= 10);
        let mut distinct: Vec<Slope> = sloped.iter().map(|m| t.slope(m).unwrap()).collect();
        distinct.sort();
        distinct.dedup();
        assert!(distinct.len() >= 3, "{distinct:?}");
        for a in &sloped {
            for b in &sloped {
                assert!(slope_order_check(&t, a, b).unwrap().consistent);
            }
            let ta = tau(a).unwrap().module;
            if !ta.is_zero() && t.slope(&ta).is_ok() && t.slope(a).unwrap() != Slope::zero() && t.slope(a).unwrap() != Slope::Infinity {
                assert_eq!(t.slope(&ta).unwrap(), t.slope(a).unwrap());
            }
        }
    }

    #[test]
    fn chain_from_zero_to_one() {
        let alg = c2222();
        let t = TubularAlgebra::new(&alg).unwrap();
        let mut r = rng();
        let pool = chain_pool(&t, 0).unwrap();
        let chain = chain_toward_slope(&t, &[Slope::zero(), Slope::integer(1)], &pool, 16, &mut r).unwrap();
        assert_eq!(chain.modules.len(), 2);
        assert!(chain.inclusions.iter().all(Morphism::is_injective));
        assert!(chain.composite().unwrap().is_injective());
        assert_eq!(t.slope(&chain.modules[0]).unwrap(), Slope::zero());
        let single = chain_toward_slope(&t, &[Slope::zero()], &pool, 16, &mut r).unwrap();
        assert_eq!(single.modules.len(), 1);
        assert!(chain_toward_slope(&t, &[Slope::integer(1), Slope::zero()], &pool, 16, &mut r).is_err());
    }

    #[test]
    fn slope_parse_and_order() {
        assert_eq!(Slope::parse("3/2").unwrap().to_string(), "3/2");
        assert!(Slope::parse("inf").unwrap() > Slope::integer(100));
        assert!(Slope::parse("-1").is_err());
    }
}
