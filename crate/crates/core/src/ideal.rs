//! Finitely generated strongly stable ideals, stored by their antichain of
//! strongly stable generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::{
    monomials_of_degree, parse_monomial, st_dominators, st_geq, Alphabet, Monomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SstIdeal {
    gens: Vec<Monomial>,
    alphabet: Alphabet,
}

/// Keeps the `≥_st`-minimal elements. The result generates the same ideal.
pub fn sst_minimalize(
    monomials: impl IntoIterator<Item = Monomial>,
    alphabet: Alphabet,
) -> SstIdeal {
    let mut all: Vec<Monomial> = monomials.into_iter().collect();
    all.sort();
    all.dedup();
    let gens = all
        .iter()
        .filter(|u| !all.iter().any(|v| v != *u && st_geq(u, v)))
        .cloned()
        .collect();
    SstIdeal { gens, alphabet }
}

/// Keeps the divisibility-minimal elements, sorted.
pub fn divisibility_minimalize(monomials: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = monomials.into_iter().collect();
    all.sort();
    all.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for u in all {
        if !out.iter().any(|g| g.divides(&u)) {
            out.push(u);
        }
    }
    out
}

impl SstIdeal {
    pub fn new(gens: impl IntoIterator<Item = Monomial>, alphabet: Alphabet) -> Self {
        sst_minimalize(gens, alphabet)
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        Self {
            gens: Vec::new(),
            alphabet,
        }
    }

    pub fn unit(alphabet: Alphabet) -> Self {
        Self {
            gens: vec![Monomial::one()],
            alphabet,
        }
    }

    /// Parses a comma-separated generator list such as `y2*y3, y1^2`.
    /// `0` or an empty string is the zero ideal. Alphabet defaults to `x`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero(Alphabet::X));
        }
        let mut alphabet = None;
        let mut gens = Vec::new();
        for part in s.split(',') {
            let (u, a) = parse_monomial(part)?;
            if let Some(a) = a {
                if alphabet.is_some_and(|b| b != a) {
                    return Err(Error::Parse(format!("mixed alphabets in {s:?}")));
                }
                alphabet = Some(a);
            }
            gens.push(u);
        }
        Ok(Self::new(gens, alphabet.unwrap_or_default()))
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> u32 {
        self.gens
            .iter()
            .filter_map(Monomial::max_var)
            .max()
            .unwrap_or(0)
    }

    pub fn member(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| st_geq(u, g))
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &SstIdeal) -> bool {
        other.gens.iter().all(|g| self.member(g))
    }

    /// Equality as ideals, ignoring the alphabet.
    pub fn equals(&self, other: &SstIdeal) -> bool {
        self.gens == other.gens
    }

    fn same_alphabet(&self, other: &SstIdeal) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.letter(),
                right: other.alphabet.letter(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &SstIdeal) -> Result<SstIdeal> {
        self.same_alphabet(other)?;
        Ok(sst_minimalize(
            self.gens.iter().chain(&other.gens).cloned(),
            self.alphabet,
        ))
    }

    /// Intersection through pairwise lcms of monomial generators.
    pub fn intersect(&self, other: &SstIdeal) -> Result<SstIdeal> {
        self.same_alphabet(other)?;
        let a = self.monomial_min_gens()?;
        let b = other.monomial_min_gens()?;
        limits::check("intersection lcm table", a.len() as u128 * b.len() as u128)?;
        let lcms = a.iter().flat_map(|u| b.iter().map(move |v| u.lcm(v)));
        Ok(sst_minimalize(divisibility_minimalize(lcms), self.alphabet))
    }

    /// The minimal monomial generating set. Every divisibility-minimal
    /// element dominates a strongly stable generator of its own degree, so
    /// the same-degree dominators of the generators contain all of them.
    pub fn monomial_min_gens(&self) -> Result<Vec<Monomial>> {
        let mut all = Vec::new();
        for g in &self.gens {
            all.extend(st_dominators(g)?);
            limits::check("monomial generators", all.len() as u128)?;
        }
        Ok(divisibility_minimalize(all))
    }

    /// Number of monomials of each degree `0..=max_degree` in `x_1..x_m`
    /// lying in the ideal.
    pub fn hilbert_function(&self, max_degree: u32, m: usize) -> Result<Vec<u64>> {
        (0..=max_degree)
            .map(|d| {
                Ok(monomials_of_degree(m, d)?
                    .iter()
                    .filter(|u| self.member(u))
                    .count() as u64)
            })
            .collect()
    }

    /// Generators joined by `", "`, or `0` for the zero ideal.
    pub fn gens_string(&self) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|g| g.display(self.alphabet))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for SstIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.gens_string())
    }
}
