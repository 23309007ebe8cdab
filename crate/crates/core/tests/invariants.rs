//! Property tests for structural invariants, with brute-force oracles on tiny fields.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use canrep::approx::{left_omega_approx, TruncationParams};
use canrep::exactla::{Field, Matrix};
use canrep::homology::{ext1_dim, ext2_dim, realize, tau, ExtSpace};
use canrep::repcat::{decompose, hom_dim, is_isomorphic, Representation};
use canrep::slopes::{closure_pool, PoolConfig, TubularAlgebra};
use canrep::trisection::{classify, regular_simples, s_bracket, tubes, TrisectLabel, TubeId};
use canrep::Algebra;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Kronecker module given by integer matrices, arrows `0 → c` as `b × a` blocks.
#[derive(Clone, Debug)]
struct IntKron {
    p: i64,
    a: usize,
    b: usize,
    arrows: [Vec<Vec<i64>>; 2],
}

impl IntKron {
    fn random(p: i64, a: usize, b: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut m = || (0..b).map(|_| (0..a).map(|_| rng.gen_range(0..p)).collect()).collect();
        IntKron { p, a, b, arrows: [m(), m()] }
    }

    fn rep(&self, alg: &Arc<Algebra>) -> Representation {
        let f = alg.field();
        let maps = self
            .arrows
            .iter()
            .map(|rows| Matrix::from_vec(f, self.b, self.a, rows.iter().flatten().map(|&x| f.from_i64(x)).collect()).unwrap())
            .collect();
        Representation::new(alg, vec![self.a, self.b], maps).unwrap()
    }
}

fn mat_mul(x: &[Vec<i64>], y: &[Vec<i64>], inner: usize, cols: usize, p: i64) -> Vec<Vec<i64>> {
    x.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * y[k][j]).sum::<i64>().rem_euclid(p)).collect()).collect()
}

fn unpack(mut code: u64, rows: usize, cols: usize, p: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; cols]; rows];
    for row in out.iter_mut() {
        for x in row.iter_mut() {
            *x = (code % p as u64) as i64;
            code /= p as u64;
        }
    }
    out
}

/// The differential `(f₀, f_c) ↦ (f_c M_α − N_α f₀)_α` on every vertex-map tuple, by enumeration.
fn differential_images(m: &IntKron, n: &IntKron) -> (u64, HashSet<Vec<Vec<Vec<i64>>>>) {
    let p = m.p;
    let (u0, uc) = (n.a * m.a, n.b * m.b);
    let mut zeros = 0;
    let mut images = HashSet::new();
    for x0 in 0..(p as u64).pow(u0 as u32) {
        let f0 = unpack(x0, n.a, m.a, p);
        let nf: Vec<Vec<Vec<i64>>> = n.arrows.iter().map(|na| mat_mul(na, &f0, n.a, m.a, p)).collect();
        for xc in 0..(p as u64).pow(uc as u32) {
            let fc = unpack(xc, n.b, m.b, p);
            let d: Vec<Vec<Vec<i64>>> = (0..2)
                .map(|k| {
                    let fm = mat_mul(&fc, &m.arrows[k], m.b, m.a, p);
                    fm.iter().zip(&nf[k]).map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x - y).rem_euclid(p)).collect()).collect()
                })
                .collect();
            if d.iter().flatten().flatten().all(|&x| x == 0) {
                zeros += 1;
            }
            images.insert(d);
        }
    }
    (zeros, images)
}

fn log_p(n: u64, p: i64) -> usize {
    let mut k = 0;
    let mut x = 1u64;
    while x < n {
        x *= p as u64;
        k += 1;
    }
    assert_eq!(x, n, "count is not a power of p");
    k
}

fn kron(p: u32) -> Arc<Algebra> {
    Arc::new(Algebra::kronecker(Field::Prime(p)))
}

fn c222(p: u32) -> Arc<Algebra> {
    let f = Field::Prime(p);
    Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2], &[f.from_i64(2)]).unwrap())
}

/// Middle term of a random extension between two building blocks.
fn random_canonical(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Representation {
    let n = alg.vertex_count();
    let mut blocks: Vec<Representation> = Vec::new();
    for v in 0..n {
        blocks.push(Representation::simple(alg, v));
        blocks.push(Representation::projective(alg, v));
        blocks.push(Representation::injective(alg, v));
    }
    for t in tubes(alg, 1).unwrap().into_iter().take(5) {
        blocks.extend(regular_simples(alg, &t).unwrap());
    }
    let x = &blocks[rng.gen_range(0..blocks.len())];
    let y = &blocks[rng.gen_range(0..blocks.len())];
    let space = ExtSpace::new(x, y).unwrap();
    let f = alg.field();
    let coords: Vec<_> = (0..space.dim()).map(|_| f.random(rng)).collect();
    realize(&space.class(&coords)).b().clone()
}

fn multiset_matches(xs: &[Representation], ys: &[Representation]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut used = vec![false; ys.len()];
    xs.iter().all(|x| {
        let hit = ys.iter().enumerate().position(|(j, y)| !used[j] && x.dims() == y.dims() && is_isomorphic(x, y).unwrap().is_some());
        hit.map(|j| used[j] = true).is_some()
    })
}

fn kron_strategy(max_total: usize) -> impl Strategy<Value = (u32, usize, usize, u64)> {
    (prop_oneof![Just(2u32), Just(3u32)], 0..=max_total, 0..=max_total, any::<u64>())
        .prop_filter("total dimension", move |(_, a, b, _)| a + b <= max_total && a + b > 0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn hom_dimension_matches_enumeration((p, a, b, seed) in kron_strategy(5), (a2, b2) in (0usize..=3, 0usize..=3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = IntKron::random(p as i64, a, b, &mut rng);
        let n = IntKron::random(p as i64, a2, b2, &mut rng);
        let unknowns = n.a * m.a + n.b * m.b;
        prop_assume!((p as f64).powi(unknowns as i32) <= 20_000.0);
        let alg = kron(p);
        let (zeros, _) = differential_images(&m, &n);
        prop_assert_eq!(hom_dim(&m.rep(&alg), &n.rep(&alg)).unwrap(), log_p(zeros, p as i64));
    }

    #[test]
    fn ext_dimension_matches_cocycle_count((a, b, seed) in (0usize..=3, 0usize..=3, any::<u64>()), (a2, b2) in (0usize..=3, 0usize..=3)) {
        prop_assume!(a + b + a2 + b2 <= 7 && a + b > 0 && a2 + b2 > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = IntKron::random(2, a, b, &mut rng);
        let n = IntKron::random(2, a2, b2, &mut rng);
        prop_assume!(n.a * m.a + n.b * m.b <= 14);
        let alg = kron(2);
        let (_, images) = differential_images(&m, &n);
        // Ext¹(M, N) is the cokernel of the differential into ⊕_α Hom(M₀, N_c).
        let cochains = 2 * m.a * n.b;
        let expected = cochains - log_p(images.len() as u64, 2);
        prop_assert_eq!(ext1_dim(&m.rep(&alg), &n.rep(&alg)).unwrap(), expected);
    }

    #[test]
    fn decomposition_is_certified_and_conjugation_invariant(seed in any::<u64>(), canonical in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = if canonical {
            random_canonical(&c222(3), &mut rng)
        } else {
            let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            IntKron::random(3, a, b, &mut rng).rep(&kron(3))
        };
        let d = decompose(&m, &mut rng).unwrap();
        prop_assert!(d.verify());
        let (conj, _) = m.random_conjugate(&mut rng);
        let e = decompose(&conj, &mut rng).unwrap();
        prop_assert!(multiset_matches(d.parts(), e.parts()));
    }

    #[test]
    fn hom_from_projectives_is_the_euler_form(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = c222(5);
        let m = random_canonical(&alg, &mut rng);
        for v in 0..alg.vertex_count() {
            let p = Representation::projective(&alg, v);
            let h = hom_dim(&p, &m).unwrap();
            prop_assert_eq!(h, m.dims()[v]);
            prop_assert_eq!(h as i64, alg.euler(p.dims(), m.dims()));
        }
    }

    #[test]
    fn auslander_reiten_formula_on_random_modules(seed in any::<u64>(), pick in 0usize..64, depth in 1usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = c222(3);
        let m = random_canonical(&alg, &mut rng);
        let mut simples = Vec::new();
        for t in tubes(&alg, 1).unwrap() {
            simples.extend(regular_simples(&alg, &t).unwrap());
        }
        let t = s_bracket(&simples[pick % simples.len()], depth).unwrap();
        let tt = tau(&t).unwrap().module;
        prop_assert_eq!(ext1_dim(&t, &m).unwrap(), hom_dim(&m, &tt).unwrap());
    }

    #[test]
    fn tau_preserves_defect_and_labels_follow_its_sign(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = c222(5);
        let m = random_canonical(&alg, &mut rng);
        for part in decompose(&m, &mut rng).unwrap().parts() {
            let d = part.defect().unwrap();
            prop_assert_eq!(classify(part, &mut rng).unwrap(), TrisectLabel::of_defect(d));
            let t = tau(part).unwrap();
            if t.module.is_zero() {
                continue;
            }
            // Defect is Coxeter-invariant, so it survives τ exactly when pd ≤ 1;
            // the label survives regardless.
            prop_assert_eq!(classify(&t.module, &mut rng).unwrap(), TrisectLabel::of_defect(d));
            let pd_at_most_one = (0..alg.vertex_count()).all(|w| ext2_dim(part, &Representation::simple(&alg, w)).unwrap() == 0);
            if pd_at_most_one {
                prop_assert_eq!(t.module.defect().unwrap(), d);
            }
        }
    }

    #[test]
    fn left_approximation_certificates_hold(seed in any::<u64>(), depth in 1usize..=3, both in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = c222(3);
        let f = alg.field().clone();
        let m = random_canonical(&alg, &mut rng);
        let mut ids = vec![TubeId::Arm(1)];
        if both {
            ids.push(TubeId::at(&f.one()));
        }
        let params = TruncationParams::new(ids, depth).unwrap();
        let a = left_omega_approx(&m, &params, &mut rng).unwrap();
        prop_assert!(a.sequence.verify());
        prop_assert!(a.ext_killed);
        let simples: Vec<Representation> = params.simples(&alg).unwrap().into_iter().map(|(_, s)| s).collect();
        let torsionfree = |x: &Representation| simples.iter().all(|s| hom_dim(s, x).unwrap() == 0);
        let sub = a.sequence.a();
        if torsionfree(sub) {
            prop_assert!(torsionfree(a.sequence.b()));
        }
    }
}

fn tubular_pool() -> &'static (TubularAlgebra, Vec<Representation>) {
    static POOL: OnceLock<(TubularAlgebra, Vec<Representation>)> = OnceLock::new();
    POOL.get_or_init(|| {
        let f = Field::Prime(5);
        let alg = Arc::new(Algebra::canonical(f.clone(), &[2, 2, 2, 2], &[f.from_i64(2), f.from_i64(3)]).unwrap());
        let tub = TubularAlgebra::new(&alg).unwrap();
        let pool = closure_pool(&tub, &PoolConfig { max_total_dim: 8, max_size: 60, seed: 4 }).unwrap();
        (tub, pool)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn slope_is_constant_on_tau_orbits(pick in 0usize..1000) {
        let (tub, pool) = tubular_pool();
        let m = &pool[pick % pool.len()];
        prop_assume!(tub.slope(m).is_ok());
        let t = tau(m).unwrap().module;
        prop_assume!(!t.is_zero());
        prop_assert_eq!(tub.slope(&t).unwrap(), tub.slope(m).unwrap());
    }

    #[test]
    fn sloped_modules_never_vanish_on_both_defects(pick in 0usize..1000) {
        let (tub, pool) = tubular_pool();
        let m = &pool[pick % pool.len()];
        prop_assert!(tub.delta_zero(m.dims()) != 0 || tub.delta_infty(m.dims()) != 0);
    }
}
