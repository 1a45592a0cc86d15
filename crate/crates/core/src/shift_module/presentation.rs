//! Regularity of a presentation `⊕ ⟨x^{b_j}⟩ → ⊕ ⟨x^{a_i}⟩` of projectives.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::monomial::{st_geq, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationRegularity {
    /// Largest source generator degree, `None` for a zero source.
    pub image: Option<u32>,
    /// `max(â, b̂ − 1)`.
    pub cokernel: u32,
    /// Least `n` for which the cokernel is `n`-expanded: `max(â, b̂)`.
    pub expansion: u32,
}

/// `matrix` has one row per target generator and one column per source
/// generator. A nonzero entry needs the source generator in the strongly
/// stable ideal of the target one, and for a minimal presentation the two
/// must differ.
pub fn presentation_regularity<F: Field>(
    field: &F,
    source: &[Monomial],
    target: &[Monomial],
    matrix: &Matrix<F::Elem>,
) -> Result<PresentationRegularity> {
    if matrix.shape() != (target.len(), source.len()) {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {:?}, generators give {:?}",
            matrix.shape(),
            (target.len(), source.len())
        )));
    }
    for (i, a) in target.iter().enumerate() {
        for (j, b) in source.iter().enumerate() {
            if field.is_zero(matrix.get(i, j)) {
                continue;
            }
            if a == b {
                return Err(Error::NonMinimalPresentation(format!(
                    "unit entry between copies of ⟨{a}⟩"
                )));
            }
            if !st_geq(b, a) {
                return Err(Error::InvalidInput(format!("no shift map ⟨{b}⟩ → ⟨{a}⟩")));
            }
        }
    }
    let a_hat = target.iter().map(Monomial::degree).max().unwrap_or(0);
    let b_hat = source.iter().map(Monomial::degree).max();
    Ok(match b_hat {
        None => PresentationRegularity {
            image: None,
            cokernel: a_hat,
            expansion: a_hat,
        },
        Some(b) => PresentationRegularity {
            image: Some(b),
            cokernel: a_hat.max(b.saturating_sub(1)),
            expansion: a_hat.max(b),
        },
    })
}
