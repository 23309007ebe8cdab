//! The defect trisection `p | t | q` and the tubes of `t`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Poly, Scalar};
use crate::homology::{ext1_basis, realize, tau, tau_inverse, ShortExactSequence};
use crate::repcat::{decompose, hom_basis, hom_dim, is_brick, is_indecomposable, is_isomorphic, Morphism, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrisectLabel {
    P,
    T,
    Q,
}

impl TrisectLabel {
    pub fn of_defect(d: i64) -> Self {
        match d.signum() {
            -1 => TrisectLabel::P,
            0 => TrisectLabel::T,
            _ => TrisectLabel::Q,
        }
    }
}

impl fmt::Display for TrisectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrisectLabel::P => "P",
            TrisectLabel::T => "T",
            TrisectLabel::Q => "Q",
        })
    }
}

/// Label of an indecomposable module by the sign of its defect.
pub fn classify<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<TrisectLabel> {
    if !is_indecomposable(m, rng)? {
        return Err(Error::NotIndecomposable);
    }
    Ok(TrisectLabel::of_defect(m.defect()?))
}

/// Indecomposable projectives of defect −1.
pub fn pegs(alg: &Arc<Algebra>) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        let p = Representation::projective(alg, v);
        if p.defect()? == -1 {
            out.push(p);
        }
    }
    Ok(out)
}

/// `m ≅ p ⊕ t ⊕ q` with the isomorphism `p ⊕ t ⊕ q → m`.
#[derive(Clone, Debug)]
pub struct SplitTrisection {
    pub p: Representation,
    pub t: Representation,
    pub q: Representation,
    pub iso: Morphism,
}

impl SplitTrisection {
    pub fn part(&self, label: TrisectLabel) -> &Representation {
        match label {
            TrisectLabel::P => &self.p,
            TrisectLabel::T => &self.t,
            TrisectLabel::Q => &self.q,
        }
    }
}

/// Sum of the given parts with the map to `m` assembled from their inclusions.
fn assemble(m: &Representation, groups: &[Vec<(Representation, Morphism)>]) -> (Vec<Representation>, Morphism) {
    let alg = m.algebra();
    let mut sums = Vec::new();
    let mut maps = Vec::new();
    for g in groups {
        let parts: Vec<Representation> = g.iter().map(|(p, _)| p.clone()).collect();
        let (sum, _, proj) = Representation::direct_sum(alg, &parts);
        let mut acc = Morphism::zero(&sum, m);
        for ((_, incl), pr) in g.iter().zip(&proj) {
            acc = acc.add(&incl.compose(pr));
        }
        sums.push(sum);
        maps.push(acc);
    }
    let (total, _, proj) = Representation::direct_sum(alg, &sums);
    let mut iso = Morphism::zero(&total, m);
    for (f, pr) in maps.iter().zip(&proj) {
        iso = iso.add(&f.compose(pr));
    }
    (sums, iso)
}

pub fn split_trisect<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<SplitTrisection> {
    let d = decompose(m, rng)?;
    let mut groups: Vec<Vec<(Representation, Morphism)>> = vec![Vec::new(), Vec::new(), Vec::new()];
    for (part, incl) in d.parts().iter().zip(d.inclusions()) {
        let slot = TrisectLabel::of_defect(part.defect()?) as usize;
        groups[slot].push((part.clone(), incl.clone()));
    }
    let (mut sums, iso) = assemble(m, &groups);
    debug_assert!(iso.is_iso());
    let q = sums.pop().unwrap();
    let t = sums.pop().unwrap();
    let p = sums.pop().unwrap();
    Ok(SplitTrisection { p, t, q, iso })
}

/// Index of a tube: an exceptional arm or a point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TubeId {
    /// 1-based arm index.
    Arm(usize),
    Infinity,
    /// A monic irreducible polynomial in `t`.
    Point(Poly),
}

impl fmt::Display for TubeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeId::Arm(i) => write!(f, "arm:{i}"),
            TubeId::Infinity => f.write_str("pt:∞"),
            TubeId::Point(p) => write!(f, "pt:{}", p.display_with("t")),
        }
    }
}

impl TubeId {
    /// Parses `arm:2`, `pt:∞` (or `pt:inf`), `pt:t^2+1`.
    pub fn parse(field: &Field, s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("arm:") {
            let i = usize::from_str(rest.trim()).map_err(|_| Error::Parse(format!("bad arm index in {s:?}")))?;
            return Ok(TubeId::Arm(i));
        }
        if let Some(rest) = s.strip_prefix("pt:") {
            let rest = rest.trim();
            if rest == "∞" || rest.eq_ignore_ascii_case("inf") || rest.eq_ignore_ascii_case("infinity") {
                return Ok(TubeId::Infinity);
            }
            let p = Poly::parse(field, rest)?;
            if p.degree().unwrap_or(0) == 0 {
                return Err(Error::Parse(format!("tube polynomial {rest:?} is constant")));
            }
            return Ok(TubeId::Point(p.monic()));
        }
        Err(Error::Parse(format!("unrecognised tube {s:?}")))
    }

    /// The point `t − a` for a scalar `a`.
    pub fn at(a: &Scalar) -> Self {
        TubeId::Point(Poly::linear(a))
    }

    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        let shape = alg.require_canonical()?;
        let field = alg.field();
        let special = |point: Option<Scalar>| {
            (0..shape.arms.len()).find(|&i| shape.arms[i] >= 2 && shape.arm_point(i, field) == point)
        };
        match self {
            TubeId::Arm(i) => {
                if *i == 0 || *i > shape.arms.len() || shape.arms[i - 1] < 2 {
                    return Err(Error::InvalidTube(format!("{self} is not an arm of weight at least two")));
                }
            }
            TubeId::Infinity => {
                if let Some(i) = special(None) {
                    return Err(Error::InvalidTube(format!("∞ belongs to arm {}", i + 1)));
                }
            }
            TubeId::Point(mu) => {
                if mu.field() != field || !mu.lead().is_one() {
                    return Err(Error::InvalidTube(format!("{self} is not monic over {}", field.spec_name())));
                }
                match mu.is_irreducible() {
                    Some(true) => {}
                    Some(false) => return Err(Error::InvalidTube(format!("{self} is reducible"))),
                    None => return Err(Error::Unsupported(format!("cannot certify that {self} is irreducible"))),
                }
                if mu.degree() == Some(1) {
                    let a = -&mu.coeff(0);
                    if let Some(i) = special(Some(a)) {
                        return Err(Error::InvalidTube(format!("{self} belongs to arm {}", i + 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Position of an indecomposable regular module: its tube, the index of its
/// regular socle in the orbit returned by [`regular_simples`], and its regular length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubePosition {
    pub tube: TubeId,
    pub socle: usize,
    pub rlen: usize,
}

/// The regular simple at a point: first arrows `I`, `C(μ)` and `C(μ) − λ_i`.
fn homogeneous_simple(alg: &Arc<Algebra>, tube: &TubeId) -> Result<Representation> {
    let shape = alg.require_canonical()?;
    let f = alg.field();
    let (x1, x2) = match tube {
        TubeId::Infinity => (Matrix::zeros(f, 1, 1), Matrix::identity(f, 1)),
        TubeId::Point(mu) => {
            let d = mu.degree().unwrap();
            (Matrix::identity(f, d), mu.companion())
        }
        TubeId::Arm(_) => unreachable!("arm tubes have no homogeneous simple"),
    };
    let d = x1.rows();
    let dims = vec![d; alg.vertex_count()];
    let mut maps = vec![Matrix::identity(f, d); alg.arrows().len()];
    for (i, arm) in shape.arm_arrows.iter().enumerate() {
        maps[arm[0]] = match i {
            0 => x1.clone(),
            1 => x2.clone(),
            _ => x2.sub(&x1.scale(&shape.params[i - 2])),
        };
    }
    Representation::new(alg, dims, maps)
}

/// The connecting module of arm `i` (0-based): one-dimensional off the inner
/// vertices of arm `i`, with that arm's path zero.
fn arm_connector(alg: &Arc<Algebra>, i: usize) -> Result<Representation> {
    let shape = alg.require_canonical()?;
    let f = alg.field();
    let mut dims = vec![1; alg.vertex_count()];
    for &v in &shape.arm_vertices[i] {
        dims[v] = 0;
    }
    let (x1, x2) = match i {
        0 => (f.zero(), f.one()),
        1 => (f.one(), f.zero()),
        _ => (f.one(), shape.params[i - 2].clone()),
    };
    let mut maps: Vec<Matrix> = alg
        .arrows()
        .iter()
        .map(|a| {
            if dims[a.source] == 1 && dims[a.target] == 1 {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dims[a.target], dims[a.source])
            }
        })
        .collect();
    for (k, arm) in shape.arm_arrows.iter().enumerate() {
        let x = match k {
            _ if k == i => f.zero(),
            0 => x1.clone(),
            1 => x2.clone(),
            _ => &x2 - &(&shape.params[k - 2] * &x1),
        };
        if dims[alg.arrows()[arm[0]].target] == 1 {
            maps[arm[0]] = Matrix::from_vec(f, 1, 1, vec![x])?;
        }
    }
    Representation::new(alg, dims, maps)
}

/// The τ-orbit of regular simples of a tube; arm tubes are listed along τ⁻
/// starting from the connecting module.
pub fn regular_simples(alg: &Arc<Algebra>, tube: &TubeId) -> Result<Vec<Representation>> {
    tube.validate(alg)?;
    let TubeId::Arm(i) = tube else {
        return Ok(vec![homogeneous_simple(alg, tube)?]);
    };
    let shape = alg.require_canonical()?;
    let mut pool: Vec<Representation> = shape.arm_vertices[i - 1].iter().map(|&v| Representation::simple(alg, v)).collect();
    let mut orbit = vec![arm_connector(alg, i - 1)?];
    while !pool.is_empty() {
        let next = tau_inverse(orbit.last().unwrap())?.module;
        let k = pool
            .iter()
            .position(|s| s.dims() == next.dims())
            .ok_or_else(|| Error::InvalidTube(format!("τ⁻ leaves the orbit of {tube}")))?;
        orbit.push(pool.remove(k));
    }
    Ok(orbit)
}

fn require_regular(s: &Representation) -> Result<()> {
    if s.is_zero() || s.defect()? != 0 {
        return Err(Error::NotRegular("defect is not zero".into()));
    }
    Ok(())
}

/// Least `r ≥ 1` with `τ^r s ≅ s`.
pub fn tau_period(s: &Representation) -> Result<usize> {
    require_regular(s)?;
    let bound = 2 * s.algebra().vertex_count() + 2;
    let mut x = s.clone();
    for r in 1..=bound {
        let t = tau(&x)?;
        if !t.dropped.is_empty() || t.module.is_zero() {
            return Err(Error::NotRegular("τ reached a projective".into()));
        }
        x = t.module;
        if is_isomorphic(&x, s)?.is_some() {
            return Ok(r);
        }
    }
    Err(Error::NotRegular(format!("no τ-period up to {bound}")))
}

/// The predicate certifying a regular-simple orbit: defect zero, bricks,
/// and τ permuting the list cyclically backwards along the order.
pub fn verify_orbit<R: Rng + ?Sized>(orbit: &[Representation], rng: &mut R) -> Result<bool> {
    let n = orbit.len();
    for (k, s) in orbit.iter().enumerate() {
        if s.defect()? != 0 || !is_brick(s, rng)? {
            return Ok(false);
        }
        let t = tau(s)?.module;
        if is_isomorphic(&t, &orbit[(k + n - 1) % n])?.is_none() {
            return Ok(false);
        }
    }
    Ok(n > 0 && tau_period(&orbit[0])? == n)
}

/// The chain `S[1] ⊂ S[2] ⊂ … ⊂ S[r]`, as the sequences
/// `0 → S[k] → S[k+1] → τ^{−k} s → 0`.
pub fn s_bracket_chain(s: &Representation, r: usize) -> Result<Vec<ShortExactSequence>> {
    require_regular(s)?;
    let mut out = Vec::new();
    let mut current = s.clone();
    let mut top = s.clone();
    for _ in 1..r {
        top = tau_inverse(&top)?.module;
        let basis = ext1_basis(&top, &current)?;
        let e = basis.first().ok_or_else(|| Error::NotRegular("no extension continues the chain".into()))?;
        let seq = realize(e);
        current = seq.b().clone();
        out.push(seq);
    }
    Ok(out)
}

/// The uniserial `S[r]` with regular socle `s` and regular length `r`.
pub fn s_bracket(s: &Representation, r: usize) -> Result<Representation> {
    if r == 0 {
        return Err(Error::Precondition("regular length must be at least 1".into()));
    }
    Ok(s_bracket_chain(s, r)?.last().map(|q| q.b().clone()).unwrap_or_else(|| s.clone()))
}

/// The composite path map along arm `i` from the source to the sink.
fn arm_path(m: &Representation, i: usize) -> Matrix {
    let shape = m.algebra().canonical_shape().expect("canonical");
    m.path_map(shape.source, &shape.arm_arrows[i])
}

/// The point of a regular module whose exceptional arms all act invertibly.
fn homogeneous_point(m: &Representation) -> Result<Option<TubeId>> {
    let x1 = arm_path(m, 0);
    let x2 = arm_path(m, 1);
    if let Some(inv) = x1.inverse() {
        let chi = inv.mul(&x2).charpoly();
        let mu = chi.radical()?;
        if mu.is_irreducible() == Some(true) {
            return Ok(Some(TubeId::Point(mu)));
        }
        return Ok(None);
    }
    match x2.inverse() {
        Some(inv) if inv.mul(&x1).charpoly().radical()?.degree() == Some(1) => Ok(Some(TubeId::Infinity)),
        _ => Ok(None),
    }
}

/// The tube of a regular indecomposable: the tube whose simples map to it.
pub fn tube_of(m: &Representation) -> Result<TubeId> {
    require_regular(m)?;
    let alg = m.algebra();
    let shape = alg.require_canonical()?;
    for i in shape.tube_arms() {
        let tube = TubeId::Arm(i + 1);
        for s in regular_simples(alg, &tube)? {
            if hom_dim(&s, m)? > 0 {
                return Ok(tube);
            }
        }
    }
    if let Some(tube) = homogeneous_point(m)? {
        if tube.validate(alg).is_ok() && hom_dim(&regular_simples(alg, &tube)?[0], m)? > 0 {
            return Ok(tube);
        }
    }
    Err(Error::NotRegular("no tube has a simple mapping to the module".into()))
}

/// Tube, regular socle and regular length of a regular indecomposable.
pub fn tube_position(m: &Representation) -> Result<TubePosition> {
    let tube = tube_of(m)?;
    let simples = regular_simples(m.algebra(), &tube)?;
    let socle = simples
        .iter()
        .position(|s| hom_dim(s, m).map(|d| d > 0).unwrap_or(false))
        .ok_or_else(|| Error::NotRegular("no regular socle".into()))?;
    let rlen = regular_length_by_dims(m, &simples, socle)
        .ok_or_else(|| Error::NotRegular("dimension vector is not a tube segment".into()))?;
    Ok(TubePosition { tube, socle, rlen })
}

fn regular_length_by_dims(m: &Representation, simples: &[Representation], socle: usize) -> Option<usize> {
    let n = simples.len();
    let mut acc = vec![0usize; m.dims().len()];
    for r in 1..=m.total_dim() {
        let s = &simples[(socle + r - 1) % n];
        for (a, d) in acc.iter_mut().zip(s.dims()) {
            *a += d;
        }
        if acc == m.dims() {
            return Some(r);
        }
    }
    None
}

/// Regular composition factors of each indecomposable summand, socle first.
pub fn regular_series<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<Vec<Vec<Representation>>> {
    let d = decompose(m, rng)?;
    let mut out = Vec::new();
    for part in d.parts() {
        require_regular(part)?;
        let tube = tube_of(part)?;
        let simples = regular_simples(part.algebra(), &tube)?;
        let mut factors = Vec::new();
        let mut x = part.clone();
        while !x.is_zero() {
            let (s, f) = simples
                .iter()
                .find_map(|s| {
                    let basis = hom_basis(s, &x).ok()?;
                    basis.into_iter().find(|g| g.is_injective()).map(|g| (s.clone(), g))
                })
                .ok_or_else(|| Error::NotRegular("no regular simple embeds".into()))?;
            factors.push(s);
            x = f.cokernel().0;
        }
        out.push(factors);
    }
    Ok(out)
}

/// `m ≅ m₁ ⊕ m₂` with `m₁` supported on the given tubes.
#[derive(Clone, Debug)]
pub struct TubePartition {
    pub inside: Representation,
    pub outside: Representation,
    /// `inside ⊕ outside → m`.
    pub iso: Morphism,
}

pub fn partition_by_tubes<R: Rng + ?Sized>(m: &Representation, tubes: &[TubeId], rng: &mut R) -> Result<TubePartition> {
    for t in tubes {
        t.validate(m.algebra())?;
    }
    let d = decompose(m, rng)?;
    let mut groups: Vec<Vec<(Representation, Morphism)>> = vec![Vec::new(), Vec::new()];
    for (part, incl) in d.parts().iter().zip(d.inclusions()) {
        let tube = tube_of(part)?;
        let slot = if tubes.contains(&tube) { 0 } else { 1 };
        groups[slot].push((part.clone(), incl.clone()));
    }
    let (mut sums, iso) = assemble(m, &groups);
    let outside = sums.pop().unwrap();
    let inside = sums.pop().unwrap();
    Ok(TubePartition { inside, outside, iso })
}

/// `tM`, the largest submodule generated by `t`: the image of the `t` and `q`
/// parts of the split trisection.
pub fn torsion_part<R: Rng + ?Sized>(m: &Representation, rng: &mut R) -> Result<(Representation, Morphism)> {
    let split = split_trisect(m, rng)?;
    let alg = m.algebra();
    let (_, inj, _) = Representation::direct_sum(alg, &[split.p.clone(), split.t.clone(), split.q.clone()]);
    let parts = [split.iso.compose(&inj[1]), split.iso.compose(&inj[2])];
    Ok(crate::repcat::sum_of_images(m, &parts))
}

/// Monic irreducible polynomials of degree at most `max_degree` over a finite
/// field, in a fixed order.
pub fn irreducible_polys(field: &Field, max_degree: usize) -> Result<Vec<Poly>> {
    let q = field.order().ok_or_else(|| Error::Unsupported("enumeration needs a finite field".into()))?;
    let elems = field.elements().unwrap();
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let count = (q as usize).pow(d as u32);
        for mut k in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(elems[k % q as usize].clone());
                k /= q as usize;
            }
            coeffs.push(field.one());
            let p = Poly::new(field.clone(), coeffs);
            if p.is_irreducible() == Some(true) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Every valid tube with point degree at most `max_degree` (finite fields),
/// arm tubes first, then ∞, then points.
pub fn tubes(alg: &Algebra, max_degree: usize) -> Result<Vec<TubeId>> {
    let shape = alg.require_canonical()?;
    let mut out: Vec<TubeId> = shape.tube_arms().into_iter().map(|i| TubeId::Arm(i + 1)).collect();
    if TubeId::Infinity.validate(alg).is_ok() {
        out.push(TubeId::Infinity);
    }
    for p in irreducible_polys(alg.field(), max_degree)? {
        let t = TubeId::Point(p);
        if t.validate(alg).is_ok() {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(5)
    }

    fn kron(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::kronecker(f))
    }

    #[test]
    fn classification_examples() {
        let k = kron(Field::Prime(5));
        let mut r = rng();
        assert_eq!(classify(&Representation::projective(&k, 1), &mut r).unwrap(), TrisectLabel::P);
        assert_eq!(classify(&Representation::simple(&k, 0), &mut r).unwrap(), TrisectLabel::Q);
        let s = regular_simples(&k, &TubeId::Infinity).unwrap().remove(0);
        assert_eq!(classify(&s, &mut r).unwrap(), TrisectLabel::T);
        let two = Representation::sum(&k, &[s.clone(), s]);
        assert_eq!(classify(&two, &mut r), Err(Error::NotIndecomposable));
        assert_eq!(pegs(&k).unwrap().len(), 2);
    }

    #[test]
    fn tube_ids_round_trip() {
        let f = Field::Prime(5);
        for s in ["arm:2", "pt:∞", "pt:t^2+2", "pt:t+3"] {
            assert_eq!(TubeId::parse(&f, s).unwrap().to_string(), s);
        }
        let k = kron(f.clone());
        assert!(TubeId::parse(&f, "pt:t^2+1").unwrap().validate(&k).is_err());
        assert!(TubeId::Arm(1).validate(&k).is_err());
        let c = Algebra::canonical(f.clone(), &[2, 3], &[]).unwrap();
        assert!(TubeId::Infinity.validate(&c).is_err());
        assert!(TubeId::at(&f.zero()).validate(&c).is_err());
        assert!(TubeId::at(&f.one()).validate(&c).is_ok());
    }

    #[test]
    fn kronecker_regular_simples() {
        let f = Field::Prime(5);
        let k = kron(f.clone());
        let s = regular_simples(&k, &TubeId::parse(&f, "pt:t-2").unwrap()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].map(1), &Matrix::from_i64(&f, &[&[2]]));
        let inf = regular_simples(&k, &TubeId::Infinity).unwrap();
        assert_eq!(inf[0].map(0), &Matrix::from_i64(&f, &[&[0]]));
        assert_eq!(tau_period(&inf[0]).unwrap(), 1);
        let mut r = rng();
        assert!(verify_orbit(&s, &mut r).unwrap());
        let quad = regular_simples(&k, &TubeId::parse(&f, "pt:t^2+2").unwrap()).unwrap();
        assert_eq!(quad[0].dims(), &[2, 2]);
        assert!(verify_orbit(&quad, &mut r).unwrap());
    }

    #[test]
    fn arm_tubes_have_the_right_periods() {
        let f = Field::Prime(7);
        let mut r = rng();
        for (weights, params) in [(vec![2, 2], vec![]), (vec![2, 3], vec![]), (vec![2, 2, 2], vec![f.from_i64(3)])] {
            let c = Arc::new(Algebra::canonical(f.clone(), &weights, &params).unwrap());
            for (i, &p) in weights.iter().enumerate() {
                let orbit = regular_simples(&c, &TubeId::Arm(i + 1)).unwrap();
                assert_eq!(orbit.len(), p);
                assert!(verify_orbit(&orbit, &mut r).unwrap());
                assert_eq!(tau_period(&orbit[0]).unwrap(), p);
            }
            let h = regular_simples(&c, &TubeId::at(&f.from_i64(5))).unwrap();
            assert_eq!(tau_period(&h[0]).unwrap(), 1);
        }
    }

    #[test]
    fn s_brackets() {
        let f = Field::Rational;
        let k = kron(f.clone());
        let s0 = regular_simples(&k, &TubeId::at(&f.zero())).unwrap().remove(0);
        let mut r = rng();
        for n in 1..=4 {
            let x = s_bracket(&s0, n).unwrap();
            let mut j = Matrix::zeros(&f, n, n);
            for i in 0..n - 1 {
                j.set(i, i + 1, f.one());
            }
            let model = Representation::new(&k, vec![n, n], vec![Matrix::identity(&f, n), j]).unwrap();
            assert!(is_isomorphic(&x, &model).unwrap().is_some());
            assert_eq!(regular_series(&x, &mut r).unwrap(), vec![vec![s0.clone(); n]]);
        }
        let c = Arc::new(Algebra::canonical(Field::Prime(5), &[2, 2], &[]).unwrap());
        let orbit = regular_simples(&c, &TubeId::Arm(1)).unwrap();
        let x = s_bracket(&orbit[0], 2).unwrap();
        let sum: Vec<usize> = orbit[0].dims().iter().zip(orbit[1].dims()).map(|(a, b)| a + b).collect();
        assert_eq!(x.dims(), &sum[..]);
        let series = regular_series(&x, &mut r).unwrap();
        assert_eq!(series[0].len(), 2);
        assert_eq!(series[0][1], orbit[1]);
        assert_eq!(tube_position(&x).unwrap(), TubePosition { tube: TubeId::Arm(1), socle: 0, rlen: 2 });
    }

    #[test]
    fn trisection_and_partition() {
        let f = Field::Prime(5);
        let k = kron(f.clone());
        let mut r = rng();
        let s0 = regular_simples(&k, &TubeId::at(&f.zero())).unwrap().remove(0);
        let m = Representation::sum(&k, &[Representation::projective(&k, 1), s0.clone(), Representation::simple(&k, 0)]);
        let (c, _) = m.random_conjugate(&mut r);
        let st = split_trisect(&c, &mut r).unwrap();
        assert_eq!((st.p.dims(), st.t.dims(), st.q.dims()), (&[0, 1][..], &[1, 1][..], &[1, 0][..]));
        assert!(st.iso.is_iso());
        let (tm, _) = torsion_part(&c, &mut r).unwrap();
        assert_eq!(tm.dims(), &[2, 1]);

        let q = Field::Rational;
        let kq = kron(q.clone());
        let a = s_bracket(&regular_simples(&kq, &TubeId::at(&q.zero())).unwrap()[0], 2).unwrap();
        let b = regular_simples(&kq, &TubeId::at(&q.one())).unwrap().remove(0);
        let m = Representation::sum(&kq, &[a.clone(), b.clone()]);
        let part = partition_by_tubes(&m, &[TubeId::at(&q.zero())], &mut r).unwrap();
        assert!(is_isomorphic(&part.inside, &a).unwrap().is_some());
        assert!(is_isomorphic(&part.outside, &b).unwrap().is_some());
        assert!(part.iso.is_iso());
        assert_eq!(tube_of(&a).unwrap(), TubeId::at(&q.zero()));
    }
}
