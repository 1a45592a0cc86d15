//! The Koszul-type shift resolution of a strongly stable ideal from its
//! generators: `F_p = ⊕_{|R| = p} ⟨Γ(f_R)⟩` with `f_R` the meet of the
//! generator maps in `R`.

use super::{Grading, ShiftComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::limits;
use crate::linalg::Matrix;
use crate::monomial::{gamma, gamma_inv, Monomial};

/// Resolve the ideal itself, or the quotient `S/I` (which adds `F_0 = S`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulMode {
    Ideal,
    Quotient,
}

/// `Γ` of the pointwise meet of the maps of `gens`; the empty meet is `1`.
fn meet_monomial(gens: &[&Monomial]) -> Monomial {
    let mut maps = gens.iter().map(|g| gamma_inv(g));
    let Some(first) = maps.next() else {
        return Monomial::one();
    };
    let f = maps.fold(first, |acc, g| {
        acc.meet(&g).expect("large maps share a domain")
    });
    gamma(&f).expect("meets of large maps are large")
}

pub fn koszul_shift_resolution<F: Field>(
    field: F,
    gens: &[Monomial],
    mode: KoszulMode,
) -> Result<ShiftComplex<F>> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let r = gens.len();
    limits::check("Koszul subsets", 1u128 << r.min(127))?;
    let m = gens
        .iter()
        .filter_map(Monomial::max_var)
        .max()
        .unwrap_or(1)
        .max(1) as usize;
    // subsets of each size as sorted index lists, in lex order
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r + 1];
    for mask in 0u64..1 << r {
        let s: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        by_size[s.len()].push(s);
    }
    for v in &mut by_size {
        v.sort();
    }
    let start = match mode {
        KoszulMode::Quotient => 0,
        KoszulMode::Ideal => 1,
    };
    let subsets: Vec<&Vec<Vec<usize>>> = by_size[start..].iter().collect();
    let terms: Vec<Vec<Vec<u32>>> = subsets
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|s| {
                    let us: Vec<&Monomial> = s.iter().map(|&i| &gens[i]).collect();
                    meet_monomial(&us).exponents(m).expect("within m")
                })
                .collect()
        })
        .collect();
    let mut diffs = Vec::new();
    for p in 0..subsets.len() - 1 {
        let (rows, cols) = (subsets[p], subsets[p + 1]);
        let mut d = Matrix::zeros(&field, rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for q in 0..s.len() {
                let mut t = s.clone();
                t.remove(q);
                let i = rows.binary_search(&t).expect("faces are listed");
                // (-1)^q with q counted from 1
                let sign = if q % 2 == 0 { -1 } else { 1 };
                d.set(i, j, field.from_i64(sign));
            }
        }
        diffs.push(d);
    }
    ShiftComplex::new(field, Grading::Stable { m }, terms, diffs)
}

/// Outcome of the strict-minimum search: for each generator, the least
/// position where its map is strictly below all the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionMin {
    Holds {
        witnesses: Vec<usize>,
    },
    /// 0-based index of the first generator with no witness.
    Fails {
        generator: usize,
    },
}

impl ConditionMin {
    pub fn holds(&self) -> bool {
        matches!(self, ConditionMin::Holds { .. })
    }
}

pub fn check_condition_min(gens: &[Monomial]) -> ConditionMin {
    let maps: Vec<Vec<u32>> = gens.iter().map(Monomial::factors).collect();
    let len = maps.iter().map(Vec::len).max().unwrap_or(0);
    let value = |i: usize, q: usize| maps[i].get(q).copied().unwrap_or(u32::MAX);
    let mut witnesses = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let q = (0..len).find(|&q| {
            value(i, q) != u32::MAX && (0..gens.len()).all(|j| j == i || value(i, q) < value(j, q))
        });
        match q {
            Some(q) => witnesses.push(q + 1),
            None if gens.len() == 1 => witnesses.push(1),
            None => return ConditionMin::Fails { generator: i },
        }
    }
    ConditionMin::Holds { witnesses }
}
