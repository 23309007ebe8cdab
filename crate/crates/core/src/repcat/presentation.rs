use std::sync::Arc;

use super::rep::{sub_from_columns, Morphism, Representation};
use crate::algebra::Algebra;
use crate::exactla::{Matrix, Scalar};

/// `rad M`, spanned per vertex by the images of the incoming arrows.
pub fn radical(m: &Representation) -> (Representation, Morphism) {
    let alg = m.algebra().clone();
    let basis = (0..alg.vertex_count()).map(|v| m.radical_at(v)).collect();
    sub_from_columns(&alg, m, basis)
}

/// `M / rad M` with its projection.
pub fn top(m: &Representation) -> (Representation, Morphism) {
    radical(m).1.cokernel()
}

/// `⊕ P(tops[i])`, in the given order.
pub fn projective_sum(alg: &Arc<Algebra>, tops: &[usize]) -> Representation {
    let parts: Vec<Representation> = tops.iter().map(|&v| Representation::projective(alg, v)).collect();
    Representation::sum(alg, &parts)
}

/// The map `⊕ P(tops[i]) → target` sending the `i`-th generator to `gens[i]`.
pub fn map_from_generators(p: &Representation, tops: &[usize], target: &Representation, gens: &[Vec<Scalar>]) -> Morphism {
    let alg = target.algebra();
    let f = target.field();
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let mut cols = Vec::new();
            for (&v, x) in tops.iter().zip(gens) {
                let xcol = Matrix::column(f, x.clone());
                for path in alg.basis_paths(v, w) {
                    cols.push(target.path_map(v, path).mul(&xcol));
                }
            }
            Matrix::hcat(f, target.dim(w), &cols)
        })
        .collect();
    Morphism::new_unchecked(p.clone(), target.clone(), maps)
}

/// Column of the `i`-th generator inside `(⊕ P(tops))_{tops[i]}`.
pub fn generator_index(alg: &Algebra, tops: &[usize], i: usize) -> usize {
    let v = tops[i];
    tops[..i].iter().map(|&w| alg.path_dim(w, v)).sum()
}

/// Lifts `f: P → C` through an epimorphism `beta: B → C` when `P = ⊕ P(tops)`.
pub fn lift_from_projective(p: &Representation, tops: &[usize], f: &Morphism, beta: &Morphism) -> Option<Morphism> {
    let alg = p.algebra();
    let mut gens = Vec::with_capacity(tops.len());
    for (i, &v) in tops.iter().enumerate() {
        let col = generator_index(alg, tops, i);
        let x = Matrix::column(p.field(), f.map(v).col(col));
        let y = beta.map(v).solve(&x).ok().flatten()?;
        gens.push(y.col(0));
    }
    Some(map_from_generators(p, tops, beta.source(), &gens))
}

/// A projective cover `P₀ → M`, with the tops of `P₀` in vertex order.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub tops: Vec<usize>,
    pub projective: Representation,
    pub map: Morphism,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let alg = m.algebra();
    let mut tops = Vec::new();
    let mut gens = Vec::new();
    for v in 0..alg.vertex_count() {
        if m.dim(v) == 0 {
            continue;
        }
        let comp = m.radical_at(v).complement_columns();
        for j in 0..comp.cols() {
            tops.push(v);
            gens.push(comp.col(j));
        }
    }
    let p = projective_sum(alg, &tops);
    let map = map_from_generators(&p, &tops, m, &gens);
    ProjectiveCover { tops, projective: p, map }
}

/// `P₁ → P₀ → M → 0` with both maps projective covers onto their images.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub module: Representation,
    pub p0: ProjectiveCover,
    /// `Ω M = ker(P₀ → M)` with its inclusion.
    pub omega: Representation,
    pub omega_incl: Morphism,
    pub p1: ProjectiveCover,
    /// The composite `P₁ → Ω M → P₀`.
    pub differential: Morphism,
}

impl Presentation {
    /// Exactness and minimality: `P₀ → M` onto, `Ω ⊆ rad P₀`, `P₁ → Ω` onto.
    pub fn verify(&self) -> bool {
        let (rad, _) = radical(&self.p0.projective);
        self.p0.map.is_surjective()
            && self.p0.map.compose(&self.omega_incl).is_zero()
            && (0..self.module.dims().len()).all(|v| {
                self.omega.dim(v) + self.module.dim(v) == self.p0.projective.dim(v) && self.omega.dim(v) <= rad.dim(v)
            })
            && self.p1.map.is_surjective()
    }
}

pub fn minimal_projective_presentation(m: &Representation) -> Presentation {
    let p0 = projective_cover(m);
    let (omega, omega_incl) = p0.map.kernel();
    let p1 = projective_cover(&omega);
    let differential = omega_incl.compose(&p1.map);
    Presentation { module: m.clone(), p0, omega, omega_incl, p1, differential }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    #[test]
    fn kronecker_presentations() {
        let f = Field::Prime(5);
        let k = Arc::new(Algebra::kronecker(f.clone()));
        let s = Representation::new(&k, vec![1, 1], vec![Matrix::from_i64(&f, &[&[1]]), Matrix::from_i64(&f, &[&[2]])]).unwrap();
        let p = minimal_projective_presentation(&s);
        assert!(p.verify());
        assert_eq!(p.p0.tops, vec![0]);
        assert_eq!(p.p1.tops, vec![1]);
        let s0 = Representation::simple(&k, 0);
        let p = minimal_projective_presentation(&s0);
        assert!(p.verify());
        assert_eq!(p.p1.tops, vec![1, 1]);
        let pc = Representation::projective(&k, 0);
        let p = minimal_projective_presentation(&pc);
        assert!(p.p1.tops.is_empty());
        assert_eq!(p.p0.tops, vec![0]);
        assert_eq!(top(&pc).0.dims(), &[1, 0]);
    }

    #[test]
    fn canonical_projective_dimensions() {
        let f = Field::Rational;
        let c = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(2)]).unwrap());
        let p0 = Representation::projective(&c, 0);
        let sink = c.vertex_count() - 1;
        for v in 0..c.vertex_count() {
            assert_eq!(p0.dim(v), if v == sink { 2 } else { 1 });
        }
        let pres = minimal_projective_presentation(&Representation::simple(&c, 0));
        assert!(pres.verify());
        assert_eq!(pres.p1.tops.len(), 3);
    }
}
