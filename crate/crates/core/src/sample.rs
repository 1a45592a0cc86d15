//! Seeded random inputs for property suites and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::ideal::{sst_minimalize, SstIdeal};
use crate::linalg::Matrix;
use crate::monomial::{delta_elements, Alphabet, Monomial};
use crate::shift_module::{
    cokernel, kernel, projective_sum, reachable, scalar_morphism, Degree, FiniteShiftModule,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Size limits for random ideals.
#[derive(Debug, Clone, Copy)]
pub struct IdealShape {
    pub max_gens: usize,
    pub max_degree: u32,
    pub max_var: u32,
}

impl Default for IdealShape {
    fn default() -> Self {
        Self {
            max_gens: 4,
            max_degree: 5,
            max_var: 5,
        }
    }
}

/// A nonzero proper sst ideal with at most `max_gens` raw generators.
pub fn random_ideal<R: Rng>(rng: &mut R, shape: IdealShape, alphabet: Alphabet) -> SstIdeal {
    let vars = rng.gen_range(1..=shape.max_var);
    let count = rng.gen_range(1..=shape.max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=shape.max_degree);
            let mut f: Vec<u32> = (0..deg).map(|_| rng.gen_range(1..=vars)).collect();
            f.sort_unstable();
            Monomial::from_factors(&f).expect("positive indices")
        })
        .collect();
    sst_minimalize(gens, alphabet)
}

pub fn random_ideals(
    seed: u64,
    count: usize,
    shape: IdealShape,
    alphabet: Alphabet,
) -> Vec<SstIdeal> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_ideal(&mut r, shape, alphabet))
        .collect()
}

/// A random valid module over `Δ_{m+1}(n)`: the cokernel or the kernel of a
/// random map between sums of projectives.
pub fn random_module<F: Field, R: Rng>(
    rng: &mut R,
    field: &F,
    m: usize,
    n: usize,
) -> Result<FiniteShiftModule<F>> {
    let all = delta_elements(m, n)?;
    let pick = |rng: &mut R, k: usize| -> Vec<Degree> {
        (0..k)
            .map(|_| all.choose(rng).expect("nonempty box").clone())
            .collect()
    };
    let (t, s) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let targets = pick(rng, t);
    let sources = pick(rng, s);
    let mut scalars = Matrix::zeros(field, targets.len(), sources.len());
    for (i, a) in targets.iter().enumerate() {
        for (j, b) in sources.iter().enumerate() {
            if reachable(a, b) {
                scalars.set(i, j, field.from_i64(rng.gen_range(-3..=3)));
            }
        }
    }
    let phi = scalar_morphism(field, &targets, &sources, &scalars)?;
    let p = projective_sum(field.clone(), m, n, &sources)?;
    let q = projective_sum(field.clone(), m, n, &targets)?;
    Ok(if rng.gen_bool(0.5) {
        cokernel(&p, &q, &phi)?.0
    } else {
        kernel(&p, &q, &phi)?.0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn seeded_ideals_are_reproducible() {
        let a = random_ideals(7, 20, IdealShape::default(), Alphabet::Y);
        let b = random_ideals(7, 20, IdealShape::default(), Alphabet::Y);
        assert_eq!(a, b);
        assert!(a
            .iter()
            .all(|i| !i.is_zero() && i.gens().len() <= 4 && i.max_var() <= 5));
    }

    #[test]
    fn random_modules_validate() {
        let f = PrimeField::default();
        let mut r = rng(3);
        for _ in 0..30 {
            let v = random_module(&mut r, &f, 3, 3).unwrap();
            assert!(v.validate().is_valid());
        }
    }
}
