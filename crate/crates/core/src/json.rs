//! JSON forms of ideals, finite shift modules and complexes. Field entries
//! are written as strings (`"3"`, `"-1/2"`) so every field round-trips.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::SstIdeal;
use crate::linalg::Matrix;
use crate::monomial::{parse_monomial, Alphabet};
use crate::resolution::{BettiTable, Grading, ShiftComplex};
use crate::shift_module::{Degree, FiniteShiftModule};

fn bad(e: serde_json::Error) -> Error {
    Error::Parse(format!("json: {e}"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub alphabet: String,
    pub gens: Vec<String>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &SstIdeal) -> Self {
        Self {
            alphabet: ideal.alphabet().letter().to_string(),
            gens: ideal
                .gens()
                .iter()
                .map(|g| g.display(ideal.alphabet()))
                .collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<SstIdeal> {
        let mut chars = self.alphabet.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::Parse(format!("bad alphabet {:?}", self.alphabet)));
        };
        let alphabet = Alphabet::from_letter(c)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let (u, seen) = parse_monomial(g)?;
                match seen {
                    Some(a) if a != alphabet => Err(Error::AlphabetMismatch {
                        left: alphabet.letter(),
                        right: a.letter(),
                    }),
                    _ => Ok(u),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SstIdeal::new(gens, alphabet))
    }
}

pub fn ideal_to_json(ideal: &SstIdeal) -> String {
    serde_json::to_string(&IdealJson::from_ideal(ideal)).expect("plain data")
}

pub fn ideal_from_json(s: &str) -> Result<SstIdeal> {
    serde_json::from_str::<IdealJson>(s)
        .map_err(bad)?
        .to_ideal()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<String>,
}

impl MatrixJson {
    pub fn from_matrix<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|e| field.format(e)).collect(),
        }
    }

    pub fn to_matrix<F: Field>(&self, field: &F) -> Result<Matrix<F::Elem>> {
        let data = self
            .entries
            .iter()
            .map(|e| field.parse(e))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(self.rows, self.cols, data)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftJson {
    pub degree: Degree,
    pub p: usize,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub m: usize,
    pub n: usize,
    pub field: String,
    pub dims: Vec<(Degree, usize)>,
    pub shifts: Vec<ShiftJson>,
}

impl ModuleJson {
    pub fn from_module<F: Field>(v: &FiniteShiftModule<F>) -> Self {
        let field = v.field();
        Self {
            m: v.m(),
            n: v.n(),
            field: field.describe(),
            dims: v.dims().iter().map(|(d, &k)| (d.clone(), k)).collect(),
            shifts: v
                .stored_shifts()
                .iter()
                .map(|((d, p), mat)| ShiftJson {
                    degree: d.clone(),
                    p: *p,
                    matrix: MatrixJson::from_matrix(field, mat),
                })
                .collect(),
        }
    }

    pub fn to_module<F: Field>(&self, field: F) -> Result<FiniteShiftModule<F>> {
        let dims = self.dims.iter().cloned().collect();
        let shifts = self
            .shifts
            .iter()
            .map(|s| Ok(((s.degree.clone(), s.p), s.matrix.to_matrix(&field)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        FiniteShiftModule::new(field, self.m, self.n, dims, shifts)
    }
}

pub fn module_to_json<F: Field>(v: &FiniteShiftModule<F>) -> String {
    serde_json::to_string(&ModuleJson::from_module(v)).expect("plain data")
}

pub fn module_from_json<F: Field>(field: F, s: &str) -> Result<FiniteShiftModule<F>> {
    serde_json::from_str::<ModuleJson>(s)
        .map_err(bad)?
        .to_module(field)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GradingJson {
    Box { m: usize, n: usize },
    Stable { m: usize },
    Free { m: usize },
}

impl From<Grading> for GradingJson {
    fn from(g: Grading) -> Self {
        match g {
            Grading::Box { m, n } => GradingJson::Box { m, n },
            Grading::Stable { m } => GradingJson::Stable { m },
            Grading::Free { m } => GradingJson::Free { m },
        }
    }
}

impl From<GradingJson> for Grading {
    fn from(g: GradingJson) -> Self {
        match g {
            GradingJson::Box { m, n } => Grading::Box { m, n },
            GradingJson::Stable { m } => Grading::Stable { m },
            GradingJson::Free { m } => Grading::Free { m },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub p: usize,
    pub degree: u32,
    pub count: usize,
}

pub fn betti_to_entries(t: &BettiTable) -> Vec<BettiEntry> {
    t.entries
        .iter()
        .map(|(&(p, degree), &count)| BettiEntry { p, degree, count })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub engine: String,
    pub field: String,
    pub grading: GradingJson,
    /// Summand generators as monomials, per homological degree.
    pub terms: Vec<Vec<String>>,
    /// Summand degrees, per homological degree.
    pub degrees: Vec<Vec<Degree>>,
    /// `diffs[p]` maps term `p+1` to term `p`.
    pub diffs: Vec<MatrixJson>,
    pub betti: Vec<BettiEntry>,
}

impl ComplexJson {
    pub fn from_complex<F: Field>(engine: &str, c: &ShiftComplex<F>) -> Self {
        Self {
            engine: engine.to_string(),
            field: c.field.describe(),
            grading: c.grading.into(),
            terms: c
                .term_monomials()
                .iter()
                .map(|t| t.iter().map(|u| u.to_string()).collect())
                .collect(),
            degrees: c.terms.clone(),
            diffs: c
                .diffs
                .iter()
                .map(|d| MatrixJson::from_matrix(&c.field, d))
                .collect(),
            betti: betti_to_entries(&c.betti()),
        }
    }

    pub fn to_complex<F: Field>(&self, field: F) -> Result<ShiftComplex<F>> {
        let diffs = self
            .diffs
            .iter()
            .map(|d| d.to_matrix(&field))
            .collect::<Result<Vec<_>>>()?;
        ShiftComplex::new(
            field,
            self.grading.clone().into(),
            self.degrees.clone(),
            diffs,
        )
    }
}

pub fn complex_to_json<F: Field>(engine: &str, c: &ShiftComplex<F>) -> String {
    serde_json::to_string(&ComplexJson::from_complex(engine, c)).expect("plain data")
}

pub fn complex_from_json<F: Field>(field: F, s: &str) -> Result<ShiftComplex<F>> {
    serde_json::from_str::<ComplexJson>(s)
        .map_err(bad)?
        .to_complex(field)
}
