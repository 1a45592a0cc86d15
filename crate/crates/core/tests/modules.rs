use borel_core::duality::dual;
use borel_core::monomial::Monomial;
use borel_core::sample::{random_ideals, random_module, rng, IdealShape, DEFAULT_SEED};
use borel_core::shift_module::{
    cokernel, degree_monomial, dual_module, expand, expand_morphism, from_sst_ideal, kernel,
    projective_sum, reachable, scalar_morphism, FiniteShiftModule,
};
use borel_core::{Alphabet, Field, Matrix, PrimeField};
use rand::Rng;

#[test]
fn dual_module_is_involutive_and_dimension_preserving() {
    let f = PrimeField::default();
    let mut r = rng(DEFAULT_SEED);
    for (m, n) in [(3, 3), (2, 4)] {
        for _ in 0..25 {
            let v = random_module(&mut r, &f, m, n).unwrap();
            assert!(v.validate().is_valid());
            let w = dual_module(&v).unwrap();
            assert!(w.validate().is_valid());
            assert_eq!((w.m(), w.n()), (n, m));
            assert_eq!(w.total_dim(), v.total_dim());
            assert_eq!(dual_module(&w).unwrap(), v);
        }
    }
}

#[test]
fn dual_of_ideal_module_lives_on_the_complement_of_the_dual() {
    let f = PrimeField::default();
    let shape = IdealShape {
        max_gens: 3,
        max_degree: 4,
        max_var: 4,
    };
    for i in random_ideals(DEFAULT_SEED, 60, shape, Alphabet::X) {
        let (m, n) = (i.max_var() as usize, i.max_degree() as usize);
        let w = dual_module(&from_sst_ideal(f, &i, m, n).unwrap()).unwrap();
        let j = dual(&i).unwrap();
        for c in borel_core::monomial::delta_elements(n, m).unwrap() {
            let y = degree_monomial(&c);
            assert_eq!(w.dim(&c) > 0, !j.member(&y), "I = {i}, J = {j}, c = {c:?}");
        }
    }
}

/// A random map between sums of projectives over `Δ_{m+1}(n)`.
fn random_map<R: Rng>(
    r: &mut R,
    f: &PrimeField,
    m: usize,
    n: usize,
) -> (
    FiniteShiftModule<PrimeField>,
    FiniteShiftModule<PrimeField>,
    borel_core::shift_module::ShiftMorphism<u64>,
) {
    let all = borel_core::monomial::delta_elements(m, n).unwrap();
    let mut pick = |k: usize| -> Vec<Vec<u32>> {
        (0..k)
            .map(|_| all[r.gen_range(0..all.len())].clone())
            .collect()
    };
    let targets = pick(2);
    let sources = pick(3);
    let mut s = Matrix::zeros(f, targets.len(), sources.len());
    for (i, a) in targets.iter().enumerate() {
        for (j, b) in sources.iter().enumerate() {
            if reachable(a, b) {
                s.set(i, j, f.from_i64(r.gen_range(-3..=3)));
            }
        }
    }
    let phi = scalar_morphism(f, &targets, &sources, &s).unwrap();
    let p = projective_sum(*f, m, n, &sources).unwrap();
    let q = projective_sum(*f, m, n, &targets).unwrap();
    (p, q, phi)
}

#[test]
fn dualization_is_exact() {
    // 0 -> ker -> P -> Q -> coker -> 0 stays exact after dualizing: the
    // dimension of every piece is preserved and the alternating sum vanishes
    let f = PrimeField::default();
    let mut r = rng(5);
    for _ in 0..20 {
        let (p, q, phi) = random_map(&mut r, &f, 2, 3);
        let (k, _) = kernel(&p, &q, &phi).unwrap();
        let (c, _) = cokernel(&p, &q, &phi).unwrap();
        let (dk, dp, dq, dc) = (
            dual_module(&k).unwrap(),
            dual_module(&p).unwrap(),
            dual_module(&q).unwrap(),
            dual_module(&c).unwrap(),
        );
        for d in dp.dims().keys().chain(dq.dims().keys()) {
            let sum = dk.dim(d) as i64 - dp.dim(d) as i64 + dq.dim(d) as i64 - dc.dim(d) as i64;
            assert_eq!(sum, 0);
        }
    }
}

#[test]
fn expansion_commutes_with_kernels() {
    let f = PrimeField::default();
    let mut r = rng(9);
    let bound = 5;
    for _ in 0..20 {
        let (p, q, phi) = random_map(&mut r, &f, 2, 2);
        let (k, _) = kernel(&p, &q, &phi).unwrap();
        let ek = expand(&k, bound).unwrap();
        let ep = expand(&p, bound).unwrap();
        let maps = expand_morphism(&p, &q, &phi, bound).unwrap();
        for (alpha, mat) in &maps {
            let rank = borel_core::linalg::rank(&f, mat).unwrap();
            assert_eq!(ek.dim(alpha), ep.dim(alpha) - rank, "{alpha:?}");
        }
        assert!(ek.multiplication_failures().is_empty());
        assert!(ek.noncommuting_variables().is_empty());
    }
}

#[test]
fn expansion_of_ideal_module_is_the_ideal() {
    let f = PrimeField::default();
    let shape = IdealShape {
        max_gens: 3,
        max_degree: 3,
        max_var: 3,
    };
    for i in random_ideals(17, 30, shape, Alphabet::X) {
        let (m, n) = (i.max_var() as usize, i.max_degree() as usize);
        let t = expand(&from_sst_ideal(f, &i, m, n).unwrap(), n as u32 + 2).unwrap();
        for (alpha, &k) in t.dims() {
            assert_eq!(k, usize::from(i.member(&Monomial::from_exponents(alpha))));
        }
    }
}

#[test]
fn generators_of_ideal_modules_are_the_sst_generators() {
    let f = PrimeField::default();
    for i in random_ideals(DEFAULT_SEED, 60, IdealShape::default(), Alphabet::X) {
        let (m, n) = (i.max_var() as usize, i.max_degree() as usize);
        let v = from_sst_ideal(f, &i, m, n).unwrap();
        assert!(v.validate().is_valid());
        let mut got: Vec<Monomial> = v
            .generators()
            .unwrap()
            .into_iter()
            .map(|(d, k)| {
                assert_eq!(k, 1);
                degree_monomial(&d)
            })
            .collect();
        got.sort();
        let mut want = i.gens().to_vec();
        want.sort();
        assert_eq!(got, want);
    }
}
