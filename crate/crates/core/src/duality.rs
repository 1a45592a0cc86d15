//! The strongly stable dual of a finitely generated ideal.
//!
//! A generator `g` with sorted factors `b_1 ≤ … ≤ b_s` is the large map
//! `f_g`. The small maps outside the poset ideal below the `f_g` form the
//! filter `∩_g ∪_p ↑γ_{p, b_p + 1}`, where `γ_{p,v}` is `1` before `p` and `v`
//! from `p` on. Its minimal elements are joins of one `γ` per generator, and
//! Λ turns them into the strongly stable generators of the dual.

use crate::error::{Error, Result};
use crate::ideal::{sst_minimalize, SstIdeal};
use crate::isotone::IsotoneMap;
use crate::limits;
use crate::monomial::{gamma_inv, lambda, Monomial};

/// `γ_{p,v}` as a small map.
fn gamma_step(p: usize, v: u32) -> IsotoneMap {
    let mut prefix = vec![1; p - 1];
    prefix.push(v);
    IsotoneMap::small(&prefix, v).expect("step maps are isotone")
}

/// Drops maps that lie above another map in the list.
fn minimal_maps(maps: Vec<IsotoneMap>) -> Vec<IsotoneMap> {
    let mut out: Vec<IsotoneMap> = Vec::new();
    for h in maps {
        if out.iter().any(|k| k.leq(&h).expect("same domain")) {
            continue;
        }
        out.retain(|k| !h.leq(k).expect("same domain"));
        out.push(h);
    }
    out
}

/// Dual ideal via the filter-join construction. The alphabet flips.
pub fn dual(ideal: &SstIdeal) -> Result<SstIdeal> {
    let alphabet = ideal.alphabet().flip();
    if ideal.is_zero() {
        return Ok(SstIdeal::unit(alphabet));
    }
    if ideal.is_unit() {
        return Ok(SstIdeal::zero(alphabet));
    }
    // joins are built one generator at a time and pruned to the minimal
    // ones, so the guard applies to the candidates actually formed
    let mut frontier = vec![IsotoneMap::small(&[], 1).expect("constant map")];
    for g in ideal.gens() {
        let b = g.factors();
        limits::check(
            "dual filter joins",
            frontier.len() as u128 * b.len() as u128,
        )?;
        let steps: Vec<IsotoneMap> = b
            .iter()
            .enumerate()
            .map(|(k, &v)| gamma_step(k + 1, v + 1))
            .collect();
        let mut next = Vec::with_capacity(frontier.len() * steps.len());
        for h in &frontier {
            for s in &steps {
                next.push(h.join(s)?);
            }
        }
        frontier = minimal_maps(next);
    }
    let mons = frontier
        .iter()
        .map(lambda)
        .collect::<Result<Vec<Monomial>>>()?;
    Ok(sst_minimalize(mons, alphabet))
}

/// Dual of the principal ideal `⟨y_A⟩`: `⟨x_1^{a_1}, …, x_n^{a_n}⟩`.
pub fn dual_principal(a: &[u32]) -> Result<SstIdeal> {
    if a.is_empty() {
        return Err(Error::InvalidInput(
            "exponent sequence must be nonempty".into(),
        ));
    }
    if a.contains(&0) || a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!(
            "{a:?} is not a weakly increasing positive sequence"
        )));
    }
    let gens = a
        .iter()
        .enumerate()
        .map(|(i, &e)| Monomial::from_pairs([(i as u32 + 1, e)]).expect("positive index"));
    Ok(sst_minimalize(gens, Default::default()))
}

/// Dual as the intersection of the duals of the principal pieces.
pub fn dual_via_intersection(ideal: &SstIdeal) -> Result<SstIdeal> {
    let alphabet = ideal.alphabet().flip();
    if ideal.is_unit() {
        return Ok(SstIdeal::zero(alphabet));
    }
    let mut acc = SstIdeal::unit(alphabet);
    for g in ideal.gens() {
        let piece = dual_principal(&g.factors())?.with_alphabet(alphabet);
        acc = acc.intersect(&piece)?;
    }
    Ok(acc)
}

/// Whether `Λ(g)` lies in the dual of `ideal`, decided from the generator
/// maps alone: for every generator map `f` some position `p` has
/// `(Dg)(f(p)) ≤ p`, which is the same as `f(p) < g(p)`.
pub fn dual_member(g: &IsotoneMap, ideal: &SstIdeal) -> Result<bool> {
    if !g.is_small() {
        return Err(Error::InvalidInput(format!("{g} is not a small map")));
    }
    let h = g.dual();
    Ok(ideal.gens().iter().all(|u| {
        let f = gamma_inv(u);
        f.prefix()
            .iter()
            .enumerate()
            .filter_map(|(k, v)| v.finite().map(|fv| (k + 1, fv)))
            .any(|(p, fv)| {
                h.value(fv as usize)
                    .finite()
                    .is_some_and(|x| x as usize <= p)
            })
    }))
}

/// `dual(dual(I)) = I` with the alphabet restored.
pub fn verify_double_dual(ideal: &SstIdeal) -> Result<bool> {
    let back = dual(&dual(ideal)?)?;
    Ok(back == *ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{lambda_inv, monomials_of_degree, Alphabet};

    fn ideal(s: &str) -> SstIdeal {
        SstIdeal::parse(s).unwrap()
    }

    #[test]
    fn principal_examples() {
        assert_eq!(dual(&ideal("y2*y3")).unwrap(), ideal("x1^2, x2^3"));
        assert_eq!(dual(&ideal("y3^2")).unwrap(), ideal("x2^3"));
        assert_eq!(dual_principal(&[2, 3]).unwrap(), ideal("x1^2, x2^3"));
        assert_eq!(dual_principal(&[4, 4, 4]).unwrap(), ideal("x3^4"));
        assert_eq!(dual_principal(&[1]).unwrap(), ideal("x1"));
        assert!(dual_principal(&[3, 2]).is_err());
        assert!(dual_principal(&[]).is_err());
    }

    #[test]
    fn two_generator_example_agrees_with_intersection() {
        let i = ideal("y1*y3, y2^2");
        let want = ideal("x1*x2, x2^3");
        assert_eq!(dual_via_intersection(&i).unwrap(), want);
        assert_eq!(dual(&i).unwrap(), want);
    }

    #[test]
    fn extreme_ideals() {
        let unit = SstIdeal::unit(Alphabet::Y);
        let zero = SstIdeal::zero(Alphabet::X);
        assert_eq!(dual(&unit).unwrap(), zero);
        assert_eq!(dual(&zero).unwrap(), unit);
        assert!(verify_double_dual(&unit).unwrap());
        assert_eq!(dual_via_intersection(&zero).unwrap(), unit);
    }

    #[test]
    fn membership_criterion_convention() {
        let i = ideal("y2*y3");
        let g = lambda_inv(&"x1^2".parse().unwrap());
        assert!(dual_member(&g, &i).unwrap());
        assert!(dual_member(&lambda_inv(&"x1".parse().unwrap()), &ideal("y1")).unwrap());
        let one = lambda_inv(&Monomial::one());
        assert!(!dual_member(&one, &i).unwrap());
        assert!(dual_member(&"[1|inf]".parse().unwrap(), &i).is_err());
    }

    #[test]
    fn membership_criterion_matches_engine() {
        for s in ["y2*y3", "y1*y3, y2^2", "y3^2", "y1^2*y4, y2*y3^2", "y2"] {
            let i = ideal(s);
            let d = dual(&i).unwrap();
            for deg in 0..=4 {
                for u in monomials_of_degree(5, deg).unwrap() {
                    assert_eq!(
                        dual_member(&lambda_inv(&u), &i).unwrap(),
                        d.member(&u),
                        "{u} against {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn double_dual_examples() {
        for s in ["y2*y3", "y1*y3, y2^2", "x1^2*x2, x3^3", "x4"] {
            assert!(verify_double_dual(&ideal(s)).unwrap(), "{s}");
        }
    }
}
