//! Resolutions by sums of graded pieces: the Koszul-type shift resolution,
//! minimal shift resolutions by iterated covers, and the generalized
//! Eliahou–Kervaire free resolution.
//!
//! Every complex here is a sequence of direct sums of rank-one modules, each
//! summand one-dimensional in the degrees where it is present. A map between
//! two summands is a scalar, so each differential is a single scalar matrix
//! and its piece in a degree is the submatrix on the summands present there.

mod ek;
mod koszul;
mod minimal;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::monomial::{delta_elements, st_geq, Monomial};
use crate::shift_module::{free_degrees, reachable, Degree};

pub use ek::{ek_betti_closed_form, ek_resolution, ek_resolution_sst, EkComplex, Symbol};
pub use koszul::{check_condition_min, koszul_shift_resolution, ConditionMin, KoszulMode};
pub use minimal::minimal_shift_resolution;

/// Where summands live and when a summand of degree `d` is present in
/// degree `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// Projectives `P(d)` over `Δ_{m+1}(n)`: present when `e` is reachable.
    Box { m: usize, n: usize },
    /// Projectives `⟨x^d⟩` over `k[x_1..x_m]`: present when `x^e ∈ ⟨x^d⟩`
    /// as a strongly stable ideal.
    Stable { m: usize },
    /// Free modules `S(−d)`: present when `d ≤ e` componentwise.
    Free { m: usize },
}

impl Grading {
    pub fn present(&self, d: &[u32], e: &[u32]) -> bool {
        match self {
            Grading::Box { .. } => reachable(d, e),
            Grading::Stable { .. } => {
                st_geq(&Monomial::from_exponents(e), &Monomial::from_exponents(d))
            }
            Grading::Free { .. } => d.iter().zip(e).all(|(a, b)| a <= b),
        }
    }

    /// The monomial a degree stands for (the pad coordinate is dropped on
    /// boxes).
    pub fn monomial(&self, d: &[u32]) -> Monomial {
        match self {
            Grading::Box { .. } => Monomial::from_exponents(&d[..d.len() - 1]),
            _ => Monomial::from_exponents(d),
        }
    }

    pub fn total_degree(&self, d: &[u32]) -> u32 {
        self.monomial(d).degree()
    }

    /// Degrees to check: all of the box, or total degree at most `bound`.
    pub fn degrees(&self, bound: u32) -> Result<Vec<Degree>> {
        match *self {
            Grading::Box { m, n } => delta_elements(m, n),
            Grading::Stable { m } | Grading::Free { m } => free_degrees(m, bound),
        }
    }
}

/// `terms[p]` lists the summand degrees of `F_p`; `diffs[p]` is the scalar
/// matrix of `F_{p+1} → F_p` (rows indexed by `terms[p]`).
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftComplex<F: Field> {
    pub field: F,
    pub grading: Grading,
    pub terms: Vec<Vec<Degree>>,
    pub diffs: Vec<Matrix<F::Elem>>,
}

impl<F: Field> ShiftComplex<F> {
    pub fn new(
        field: F,
        grading: Grading,
        terms: Vec<Vec<Degree>>,
        diffs: Vec<Matrix<F::Elem>>,
    ) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::ShapeMismatch(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (p, d) in diffs.iter().enumerate() {
            if d.shape() != (terms[p].len(), terms[p + 1].len()) {
                return Err(Error::ShapeMismatch(format!(
                    "differential {} is {:?}, terms give {:?}",
                    p + 1,
                    d.shape(),
                    (terms[p].len(), terms[p + 1].len())
                )));
            }
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if !field.is_zero(d.get(i, j))
                        && !grading.present(&terms[p][i], &terms[p + 1][j])
                    {
                        return Err(Error::InvalidInput(format!(
                            "no map from {:?} to {:?}",
                            terms[p + 1][j],
                            terms[p][i]
                        )));
                    }
                }
            }
        }
        Ok(Self {
            field,
            grading,
            terms,
            diffs,
        })
    }

    /// Homological length: the last nonempty term.
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_empty()).unwrap_or(0)
    }

    pub fn term_monomials(&self) -> Vec<Vec<Monomial>> {
        self.terms
            .iter()
            .map(|t| t.iter().map(|d| self.grading.monomial(d)).collect())
            .collect()
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for (p, term) in self.terms.iter().enumerate() {
            for d in term {
                t.add(p, self.grading.total_degree(d), 1);
            }
        }
        t
    }

    /// The differential `F_{p+1} → F_p` in degree `e`, with the summands
    /// present on each side.
    pub fn piece(&self, p: usize, e: &[u32]) -> (Vec<usize>, Vec<usize>, Matrix<F::Elem>) {
        let rows = self.present(p, e);
        let cols = self.present(p + 1, e);
        let d = &self.diffs[p];
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| d.get(i, j).clone()))
            .collect();
        let m = Matrix::from_vec(rows.len(), cols.len(), data).expect("sizes agree");
        (rows, cols, m)
    }

    fn present(&self, p: usize, e: &[u32]) -> Vec<usize> {
        self.terms.get(p).map_or_else(Vec::new, |t| {
            (0..t.len())
                .filter(|&i| self.grading.present(&t[i], e))
                .collect()
        })
    }

    /// Nonzero entries between summands of equal degree.
    pub fn non_minimal_entries(&self) -> Vec<(usize, Degree)> {
        let mut out = Vec::new();
        for (p, d) in self.diffs.iter().enumerate() {
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if !self.field.is_zero(d.get(i, j)) && self.terms[p][i] == self.terms[p + 1][j]
                    {
                        out.push((p + 1, self.terms[p][i].clone()));
                    }
                }
            }
        }
        out
    }

    /// Checks `d² = 0`, vanishing homology in positive degrees and
    /// `H_0 = target` in every degree of the grading up to `bound`.
    pub fn verify(&self, target: &dyn Fn(&[u32]) -> usize, bound: u32) -> Result<VerifyReport> {
        let field = &self.field;
        let mut report = VerifyReport {
            minimal: self.non_minimal_entries().is_empty(),
            ..VerifyReport::default()
        };
        for e in self.grading.degrees(bound)? {
            report.degrees_checked += 1;
            let pieces: Vec<Matrix<F::Elem>> =
                (0..self.diffs.len()).map(|p| self.piece(p, &e).2).collect();
            let mut ranks = Vec::with_capacity(pieces.len());
            for (p, piece) in pieces.iter().enumerate() {
                ranks.push(linalg::rank(field, piece)?);
                if p + 1 < pieces.len() && !piece.mul(field, &pieces[p + 1])?.is_zero(field) {
                    report.d_squared.push((e.clone(), p + 1));
                }
            }
            let rank = |p: usize| ranks.get(p).copied().unwrap_or(0);
            for p in 1..self.terms.len() {
                let n = self.present(p, &e).len();
                let h = n as i64 - rank(p - 1) as i64 - rank(p) as i64;
                if h != 0 {
                    report.homology.push((e.clone(), p, h));
                }
            }
            let h0 = self.present(0, &e).len() - rank(0);
            let want = target(&e);
            if h0 != want {
                report.h0.push((e.clone(), want, h0));
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub degrees_checked: usize,
    /// `(degree, p)` where `d_p ∘ d_{p+1} ≠ 0`.
    pub d_squared: Vec<(Degree, usize)>,
    /// `(degree, p, dim H_p)` for nonzero homology with `p ≥ 1`.
    pub homology: Vec<(Degree, usize, i64)>,
    /// `(degree, expected, found)` where `H_0` differs from the target.
    pub h0: Vec<(Degree, usize, usize)>,
    pub minimal: bool,
}

impl VerifyReport {
    pub fn is_complex(&self) -> bool {
        self.d_squared.is_empty()
    }

    pub fn is_resolution(&self) -> bool {
        self.d_squared.is_empty() && self.homology.is_empty() && self.h0.is_empty()
    }
}

/// Counts per homological degree and total degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn add(&mut self, p: usize, degree: u32, count: usize) {
        if count > 0 {
            *self.entries.entry((p, degree)).or_default() += count;
        }
    }

    pub fn get(&self, p: usize, degree: u32) -> usize {
        self.entries.get(&(p, degree)).copied().unwrap_or(0)
    }

    /// `β_p` summed over total degrees, up to the last nonzero `p`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|&(p, _)| p + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(p, _), &c) in &self.entries {
            out[p] += c;
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Rows are homological degrees, columns total degrees.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "0");
        }
        let lo = self.entries.keys().map(|&(_, d)| d).min().unwrap();
        let hi = self.entries.keys().map(|&(_, d)| d).max().unwrap();
        let rows = self.totals().len();
        write!(f, "{:>4}", "")?;
        for d in lo..=hi {
            write!(f, " {d:>4}")?;
        }
        writeln!(f)?;
        for p in 0..rows {
            write!(f, "{p:>4}")?;
            for d in lo..=hi {
                match self.get(p, d) {
                    0 => write!(f, " {:>4}", ".")?,
                    c => write!(f, " {c:>4}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn presence_rules() {
        assert!(Grading::Box { m: 2, n: 2 }.present(&[1, 1, 0], &[2, 0, 0]));
        assert!(!Grading::Box { m: 2, n: 2 }.present(&[2, 0, 0], &[1, 1, 0]));
        assert!(Grading::Stable { m: 2 }.present(&[0, 1], &[1, 0]));
        assert!(!Grading::Free { m: 2 }.present(&[0, 1], &[1, 0]));
        assert!(Grading::Free { m: 2 }.present(&[0, 1], &[1, 1]));
    }

    #[test]
    fn rejects_maps_against_the_grading() {
        let f = PrimeField::default();
        let terms = vec![vec![vec![1, 0]], vec![vec![0, 1]]];
        let d = Matrix::identity(&f, 1);
        assert!(
            ShiftComplex::new(f, Grading::Free { m: 2 }, terms.clone(), vec![d.clone()]).is_err()
        );
        assert!(ShiftComplex::new(f, Grading::Stable { m: 2 }, terms, vec![d]).is_err());
    }

    #[test]
    fn betti_display() {
        let mut t = BettiTable::default();
        t.add(0, 2, 3);
        t.add(1, 3, 2);
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(
            t.to_string(),
            "        2    3\n   0    3    .\n   1    .    2\n"
        );
    }
}
