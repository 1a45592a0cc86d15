//! Duals of finite shift modules: a module over `Δ_{m+1}(n)` becomes a
//! module over `Δ_{n+1}(m)` by relabelling degrees with the degree map and
//! transposing the shifts.

use std::collections::BTreeMap;

use super::{shift_target, Degree, FiniteShiftModule, ShiftMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{degree_map, delta_elements};

/// The index `p` with `dm(c) = dm(c') + e_p − e_{p+1}`, where `c'` is the
/// `k`-th shift of `c` and `dm` is the degree map into `Δ_{m+1}(n)`.
fn partner_index(c: &[u32], k: usize, m: usize, n: usize) -> Result<Option<(Degree, usize)>> {
    let Some(c2) = shift_target(c, k) else {
        return Ok(None);
    };
    let d = degree_map(c, n, m)?;
    let d2 = degree_map(&c2, n, m)?;
    let p = (1..=m)
        .find(|&p| shift_target(&d2, p).as_deref() == Some(&d[..]))
        .ok_or_else(|| {
            Error::InvalidInput(format!(
                "degree map does not carry t_{k} at {c:?} to a shift"
            ))
        })?;
    Ok(Some((d2, p)))
}

/// `W = V*` over `Δ_{n+1}(m)`: `W_c = (V_{dm(c)})*` and `t_k` at `c` is the
/// transpose of the matching `s_p`.
pub fn dual_module<F: Field>(v: &FiniteShiftModule<F>) -> Result<FiniteShiftModule<F>> {
    let (m, n) = (v.m(), v.n());
    let mut dims = BTreeMap::new();
    let mut shifts = BTreeMap::new();
    for c in delta_elements(n, m)? {
        let d = degree_map(&c, n, m)?;
        if v.dim(&d) == 0 {
            continue;
        }
        dims.insert(c.clone(), v.dim(&d));
        for k in 1..=n {
            if let Some((d2, p)) = partner_index(&c, k, m, n)? {
                if v.dim(&d2) > 0 {
                    let s = v.shift(&d2, p).expect("partner shift is defined");
                    shifts.insert((c.clone(), k), s.transpose());
                }
            }
        }
    }
    FiniteShiftModule::new(v.field().clone(), n, m, dims, shifts)
}

/// `φ*: W' → W` for `φ: V → V'`, transposing degreewise.
pub fn dual_morphism<F: Field>(
    source: &FiniteShiftModule<F>,
    target: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
) -> Result<ShiftMorphism<F::Elem>> {
    let (m, n) = (source.m(), source.n());
    let field = source.field();
    let mut maps = BTreeMap::new();
    for c in delta_elements(n, m)? {
        let d = degree_map(&c, n, m)?;
        if source.dim(&d) > 0 && target.dim(&d) > 0 {
            maps.insert(c, phi.at(field, source, target, &d).transpose());
        }
    }
    Ok(ShiftMorphism { maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::SstIdeal;
    use crate::monomial::lambda_box_inv;
    use crate::shift_module::{from_sst_ideal, projective};

    #[test]
    fn dual_of_square_ideal() {
        let f = PrimeField::default();
        let v = from_sst_ideal(f, &SstIdeal::parse("x1^2").unwrap(), 2, 2).unwrap();
        let w = dual_module(&v).unwrap();
        assert_eq!(
            w.dims().keys().cloned().collect::<Vec<_>>(),
            vec![vec![0, 0, 2]]
        );
    }

    #[test]
    fn partner_index_matches_box_formula() {
        // p = h(k) where h is the box map of c
        for m in 1..=4 {
            for n in 1..=4 {
                for c in delta_elements(n, m).unwrap() {
                    let h = lambda_box_inv(&c);
                    for k in 1..=n {
                        if let Some((_, p)) = partner_index(&c, k, m, n).unwrap() {
                            assert_eq!(p as u32, h[k - 1], "c={c:?} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projective_dual_is_valid_and_involutive() {
        let f = PrimeField::default();
        let p = projective(f, 3, 2, &[0, 1, 1, 0]).unwrap();
        let w = dual_module(&p).unwrap();
        assert!(w.validate().is_valid());
        assert_eq!(dual_module(&w).unwrap(), p);
    }
}
