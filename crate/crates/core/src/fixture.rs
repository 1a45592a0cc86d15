//! Resolution fixtures: families of ideals with their expected shift
//! resolutions, Eliahou–Kervaire Betti numbers and strict-minimum witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::sst_minimalize;
use crate::monomial::{parse_monomial, Alphabet, Monomial};
use crate::resolution::{
    check_condition_min, ek_betti_closed_form, ek_resolution_sst, koszul_shift_resolution,
    minimal_shift_resolution, ConditionMin, KoszulMode, ShiftComplex,
};

/// Three-variable ideals of shift projective dimension at most one.
pub const PD1: &str = include_str!("../fixtures/pd1.json");
/// Three-generator ideals of shift projective dimension two.
pub const PD2: &str = include_str!("../fixtures/pd2.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub family: String,
    pub instances: Vec<Instance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub gens: Vec<String>,
    /// Expected generators of each term of the minimal shift resolution.
    pub shift_terms: Vec<Vec<String>>,
    /// Expected `(p, total degree, count)` of the EK resolution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ek_betti: Option<Vec<(usize, u32, usize)>>,
    /// Expected strict-minimum positions, one per listed generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub name: String,
    pub failures: Vec<String>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn parse_fixture(s: &str) -> Result<FixtureFile> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("fixture: {e}")))
}

fn monomials(list: &[String]) -> Result<Vec<Monomial>> {
    list.iter().map(|s| Ok(parse_monomial(s)?.0)).collect()
}

fn sorted_terms<F: Field>(c: &ShiftComplex<F>) -> Vec<Vec<Monomial>> {
    let mut t = c.term_monomials();
    for level in &mut t {
        level.sort();
    }
    while t.last().is_some_and(Vec::is_empty) {
        t.pop();
    }
    t
}

fn show(t: &[Vec<Monomial>]) -> String {
    t.iter()
        .map(|l| {
            l.iter()
                .map(Monomial::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect::<Vec<_>>()
        .join(" <- ")
}

/// Runs every engine the instance has expectations for.
pub fn check_instance<F: Field>(field: &F, inst: &Instance) -> Result<InstanceReport> {
    let gens = monomials(&inst.gens)?;
    let ideal = sst_minimalize(gens.clone(), Alphabet::X);
    let m = ideal.max_var().max(1) as usize;
    let n = ideal.max_degree() as usize;
    let mut failures = Vec::new();
    let member = |c: &ShiftComplex<F>, e: &[u32]| usize::from(ideal.member(&c.grading.monomial(e)));

    let shift = minimal_shift_resolution(field.clone(), &ideal, m, n)?;
    let mut want: Vec<Vec<Monomial>> = inst
        .shift_terms
        .iter()
        .map(|l| monomials(l))
        .collect::<Result<_>>()?;
    for level in &mut want {
        level.sort();
    }
    let got = sorted_terms(&shift);
    if got != want {
        failures.push(format!(
            "shift terms {} , expected {}",
            show(&got),
            show(&want)
        ));
    }
    let r = shift.verify(&|e| member(&shift, e), 0)?;
    if !r.is_resolution() || !r.minimal {
        failures.push(format!(
            "minimal shift resolution fails verification: {r:?}"
        ));
    }
    if shift.length() > m.min(n) {
        failures.push(format!(
            "shift length {} exceeds {}",
            shift.length(),
            m.min(n)
        ));
    }

    if let Some(expected) = &inst.ek_betti {
        let ek = ek_resolution_sst(field.clone(), &ideal)?.complex;
        let got: Vec<(usize, u32, usize)> = ek
            .betti()
            .entries
            .iter()
            .map(|(&(p, d), &c)| (p, d, c))
            .collect();
        if &got != expected {
            failures.push(format!("EK Betti {got:?}, expected {expected:?}"));
        }
        if ek.betti() != ek_betti_closed_form(&ideal)? {
            failures.push("EK Betti differs from the closed form".into());
        }
        let r = ek.verify(&|e| member(&ek, e), n as u32 + 2)?;
        if !r.is_resolution() || !r.minimal {
            failures.push(format!("EK complex fails verification: {r:?}"));
        }
    }

    if let Some(expected) = &inst.witnesses {
        match check_condition_min(&gens) {
            ConditionMin::Holds { witnesses } if &witnesses == expected => {}
            other => failures.push(format!("condition min {other:?}, expected {expected:?}")),
        }
        let k = koszul_shift_resolution(field.clone(), &gens, KoszulMode::Ideal)?;
        let kt = sorted_terms(&k);
        if kt != got {
            failures.push(format!(
                "Koszul terms {} differ from minimal {}",
                show(&kt),
                show(&got)
            ));
        }
        let r = k.verify(&|e| member(&k, e), n as u32 + 3)?;
        if !r.is_resolution() || !r.minimal {
            failures.push(format!("Koszul complex fails verification: {r:?}"));
        }
    }
    Ok(InstanceReport {
        name: inst.name.clone(),
        failures,
    })
}

pub fn check_fixture<F: Field>(field: &F, file: &FixtureFile) -> Result<Vec<InstanceReport>> {
    file.instances
        .iter()
        .map(|i| check_instance(field, i))
        .collect()
}
