//! Minimal projective shift resolutions over `Δ_{m+1}(n)` by iterated
//! projective covers.

use super::{Grading, ShiftComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::SstIdeal;
use crate::linalg::Matrix;
use crate::shift_module::{
    compose, cover, from_sst_ideal, kernel, present_summands, ShiftMorphism,
};

/// Resolves `from_sst_ideal(I, m, n)`. Each differential column is the image
/// of a new generator in the previous projective, read at its own degree.
pub fn minimal_shift_resolution<F: Field>(
    field: F,
    ideal: &SstIdeal,
    m: usize,
    n: usize,
) -> Result<ShiftComplex<F>> {
    let v = from_sst_ideal(field.clone(), ideal, m, n)?;
    let (degs0, mut proj, mut to_prev) = cover(&v)?;
    let mut prev_target = v;
    let mut terms = vec![degs0];
    let mut diffs = Vec::new();
    // global dimension is at most min(m, n); allow one extra round to see
    // the kernel vanish
    for _ in 0..=m.min(n) + 1 {
        let (k, inc) = kernel(&proj, &prev_target, &to_prev)?;
        if k.is_zero() {
            return ShiftComplex::new(field, Grading::Box { m, n }, terms, diffs);
        }
        let (degs, next, pi) = cover(&k)?;
        let map = compose(&next, &k, &proj, &pi, &inc)?;
        diffs.push(scalar_matrix(&field, terms.last().unwrap(), &degs, &map));
        terms.push(degs);
        prev_target = proj;
        proj = next;
        to_prev = map;
    }
    Err(Error::InvalidInput(format!(
        "resolution of {ideal} did not stop within {} steps",
        m.min(n) + 2
    )))
}

fn scalar_matrix<F: Field>(
    field: &F,
    rows: &[Vec<u32>],
    cols: &[Vec<u32>],
    map: &ShiftMorphism<F::Elem>,
) -> Matrix<F::Elem> {
    let mut d = Matrix::zeros(field, rows.len(), cols.len());
    for (j, deg) in cols.iter().enumerate() {
        let col = present_summands(cols, deg)
            .iter()
            .position(|&k| k == j)
            .expect("a summand is present at its own degree");
        let Some(mat) = map.maps.get(deg) else {
            continue;
        };
        for (r, i) in present_summands(rows, deg).into_iter().enumerate() {
            d.set(i, j, mat.get(r, col).clone());
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;

    fn resolve(s: &str) -> ShiftComplex<PrimeField> {
        let i = SstIdeal::parse(s).unwrap();
        let (m, n) = (i.max_var() as usize, i.max_degree() as usize);
        let c = minimal_shift_resolution(PrimeField::default(), &i, m, n).unwrap();
        let r = c
            .verify(&|e| usize::from(i.member(&c.grading.monomial(e))), 0)
            .unwrap();
        assert!(r.is_resolution(), "{s}: {r:?}");
        assert!(r.minimal, "{s}");
        assert!(c.length() <= m.min(n));
        c
    }

    fn names(c: &ShiftComplex<PrimeField>) -> Vec<Vec<String>> {
        c.term_monomials()
            .iter()
            .map(|t| t.iter().map(Monomial::to_string).collect())
            .collect()
    }

    #[test]
    fn principal_is_projective() {
        let c = resolve("x1*x2^2");
        assert_eq!(names(&c), [["x1*x2^2"]]);
    }

    #[test]
    fn generic_branch_instance() {
        let c = resolve("x1^2*x2^5, x1^3*x2^3*x3, x1^4*x2*x3^2");
        let t = names(&c);
        assert_eq!(t.len(), 2);
        let mut f0 = t[0].clone();
        f0.sort();
        let mut want = vec!["x1^2*x2^5", "x1^3*x2^3*x3", "x1^4*x2*x3^2"];
        want.sort();
        assert_eq!(f0, want);
        let mut f1 = t[1].clone();
        f1.sort();
        assert_eq!(f1, ["x1^3*x2^4", "x1^4*x2^2*x3"]);
    }

    #[test]
    fn agrees_with_koszul_under_condition_min() {
        use crate::resolution::{check_condition_min, koszul_shift_resolution, KoszulMode};
        let i = SstIdeal::parse("x1^2*x2*x3, x1*x2^3*x3, x1*x2*x3^4").unwrap();
        assert!(check_condition_min(i.gens()).holds());
        let k =
            koszul_shift_resolution(PrimeField::default(), i.gens(), KoszulMode::Ideal).unwrap();
        let c = resolve("x1^2*x2*x3, x1*x2^3*x3, x1*x2*x3^4");
        assert_eq!(c.betti(), k.betti());
        assert_eq!(c.betti().totals(), vec![3, 3, 1]);
    }
}
