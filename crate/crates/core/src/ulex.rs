//! Universal lex-segment ideals attached to a weakly increasing sequence
//! `a_1 ≤ … ≤ a_m`, on the Γ side and on the Λ side. Throughout `a_0 = 1`.

use crate::duality::dual;
use crate::error::{Error, Result};
use crate::ideal::{sst_minimalize, SstIdeal};
use crate::monomial::{Alphabet, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UlexMode {
    Finite,
    /// The values are a prefix of an unbounded map; keep generators `r ≤ R`.
    TruncatedInfinite(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UlexSide {
    Gamma,
    Lambda,
}

fn check_values(values: &[u32], mode: UlexMode) -> Result<usize> {
    if values.is_empty() {
        return Err(Error::InvalidInput(
            "value sequence must be nonempty".into(),
        ));
    }
    if values[0] == 0 || values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!(
            "{values:?} is not a weakly increasing positive sequence"
        )));
    }
    match mode {
        UlexMode::Finite => Ok(values.len()),
        UlexMode::TruncatedInfinite(r) if r <= values.len() => Ok(r),
        UlexMode::TruncatedInfinite(r) => Err(Error::InvalidInput(format!(
            "truncation depth {r} exceeds the {} supplied values",
            values.len()
        ))),
    }
}

/// Value `a_r` with `a_0 = 1`.
fn a(values: &[u32], r: usize) -> u32 {
    if r == 0 {
        1
    } else {
        values[r - 1]
    }
}

/// Generators `x_{a_1}⋯x_{a_{r−1}} x_{a_r − 1}` for each `r` with
/// `a_{r−1} < a_r`, plus `x_{a_1}⋯x_{a_m}` in finite mode.
pub fn ulex_gamma(values: &[u32], mode: UlexMode) -> Result<SstIdeal> {
    let depth = check_values(values, mode)?;
    let mut gens = Vec::new();
    for r in 1..=depth {
        if a(values, r - 1) < a(values, r) {
            let mut factors = values[..r - 1].to_vec();
            factors.push(a(values, r) - 1);
            gens.push(Monomial::from_factors(&factors)?);
        }
    }
    if mode == UlexMode::Finite {
        gens.push(Monomial::from_factors(values)?);
    }
    Ok(sst_minimalize(gens, Alphabet::X))
}

/// Generators `x_1^{a_1−a_0} ⋯ x_{r−1}^{a_{r−1}−a_{r−2}} x_r^{a_r−a_{r−1}+1}`.
pub fn ulex_lambda(values: &[u32], mode: UlexMode) -> Result<SstIdeal> {
    let depth = check_values(values, mode)?;
    let mut gens = Vec::new();
    for r in 1..=depth {
        let pairs = (1..=r).map(|i| {
            let e = a(values, i) - a(values, i - 1) + u32::from(i == r);
            (i as u32, e)
        });
        gens.push(Monomial::from_pairs(pairs)?);
    }
    Ok(sst_minimalize(gens, Alphabet::X))
}

pub fn ulex(values: &[u32], side: UlexSide, mode: UlexMode) -> Result<SstIdeal> {
    match side {
        UlexSide::Gamma => ulex_gamma(values, mode),
        UlexSide::Lambda => ulex_lambda(values, mode),
    }
}

/// Whether the two finite ulex ideals of `values` are dual to each other.
pub fn verify_ulex_duality(values: &[u32]) -> Result<bool> {
    let g = ulex_gamma(values, UlexMode::Finite)?;
    let l = ulex_lambda(values, UlexMode::Finite)?;
    Ok(dual(&g)?.equals(&l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isotone::weakly_increasing;

    fn ideal(s: &str) -> SstIdeal {
        SstIdeal::parse(s).unwrap()
    }

    #[test]
    fn gamma_examples() {
        // x2^2 dominates x2*x3, so the listed triple collapses
        assert_eq!(
            ulex_gamma(&[2, 3], UlexMode::Finite).unwrap(),
            ideal("x1, x2^2, x2*x3")
        );
        assert_eq!(ulex_gamma(&[5], UlexMode::Finite).unwrap(), ideal("x4, x5"));
        assert_eq!(ulex_gamma(&[1], UlexMode::Finite).unwrap(), ideal("x1"));
        assert_eq!(
            ulex_gamma(&[1, 2, 3, 4], UlexMode::TruncatedInfinite(4)).unwrap(),
            ideal("x1^2, x1*x2^2, x1*x2*x3^2")
        );
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            ulex_lambda(&[2, 3], UlexMode::Finite).unwrap(),
            ideal("x1^2, x1*x2^2")
        );
        assert_eq!(
            ulex_lambda(&[1, 2, 3], UlexMode::TruncatedInfinite(3)).unwrap(),
            ideal("x1, x2^2, x2*x3^2")
        );
        assert_eq!(ulex_lambda(&[4], UlexMode::Finite).unwrap(), ideal("x1^4"));
    }

    #[test]
    fn bad_inputs() {
        assert!(ulex_gamma(&[3, 2], UlexMode::Finite).is_err());
        assert!(ulex_lambda(&[1, 2], UlexMode::TruncatedInfinite(3)).is_err());
        assert!(ulex_gamma(&[], UlexMode::Finite).is_err());
    }

    #[test]
    fn duality_small_sweep() {
        for len in 1..=3 {
            for v in weakly_increasing(len, 1, 4) {
                assert!(verify_ulex_duality(&v).unwrap(), "{v:?}");
            }
        }
    }

    #[test]
    fn truncations_increase() {
        let id: Vec<u32> = (1..=6).collect();
        for side in [UlexSide::Gamma, UlexSide::Lambda] {
            for r in 1..6 {
                let small = ulex(&id, side, UlexMode::TruncatedInfinite(r)).unwrap();
                let big = ulex(&id, side, UlexMode::TruncatedInfinite(r + 1)).unwrap();
                assert!(big.contains(&small));
            }
        }
    }
}
