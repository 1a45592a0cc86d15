//! Normal forms in rear torsion-free modules: every element is a unique
//! combination of `x^a · m_g` with `max(deg g) ≤ min(a)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::expand::GradedPieceTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::SstIdeal;
use crate::linalg::{self, Matrix};
use crate::monomial::Monomial;

/// `coef · x^multiplier · m_generator`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term<E> {
    pub coef: E,
    pub multiplier: Vec<u32>,
    pub generator: usize,
}

/// Largest index with a nonzero entry (1-based), 0 for the zero vector.
pub fn max_index(d: &[u32]) -> usize {
    d.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1)
}

/// Smallest index with a nonzero entry (1-based), `usize::MAX` for zero.
pub fn min_index(a: &[u32]) -> usize {
    a.iter().position(|&x| x > 0).map_or(usize::MAX, |i| i + 1)
}

/// `x^a · u` with `deg u = d` is admissible when `max(d) ≤ min(a)`.
pub fn admissible(d: &[u32], a: &[u32]) -> bool {
    max_index(d) <= min_index(a)
}

/// Generator order: total degree, then reverse-lex on exponents (compare
/// from the last coordinate), then input order.
pub fn generator_order(a: &[u32], b: &[u32]) -> Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// Splits `w ∈ I` as `g · c` with `g` a minimal monomial generator and
/// `max(g) ≤ min(c)`: `g` is the shortest prefix of the sorted factors of
/// `w` that lies in `I`.
pub fn ek_decompose(ideal: &SstIdeal, w: &Monomial) -> Option<(Monomial, Monomial)> {
    let factors = w.factors();
    for k in 0..=factors.len() {
        let g = Monomial::from_factors(&factors[..k]).expect("valid factors");
        if ideal.member(&g) {
            let c = Monomial::from_factors(&factors[k..]).expect("valid factors");
            return Some((g, c));
        }
    }
    None
}

/// Normal form of `x^a · u_g` in an sst ideal by repeated rewriting
/// `x_p · m = x_b · s_{p,b}(m)` with `b = max(g)`, `p = min(a) < b`.
/// Returns `(multiplier, generator)`.
pub fn normal_form(ideal: &SstIdeal, a: &Monomial, g: &Monomial) -> Result<(Monomial, Monomial)> {
    let (mut gen, c) = ek_decompose(ideal, g)
        .ok_or_else(|| Error::InvalidInput(format!("{g} is not in the ideal")))?;
    let mut mult = a.mul(&c);
    while let (Some(b), Some(p)) = (gen.max_var(), mult.min_var()) {
        if p >= b {
            break;
        }
        mult = mult.shift(b, p).expect("x_p divides the multiplier");
        let s = gen.shift(p, b).expect("x_b divides the generator");
        let (g2, c2) = ek_decompose(ideal, &s).expect("sst ideals are closed under shifts");
        gen = g2;
        mult = mult.mul(&c2);
    }
    Ok((mult, gen))
}

/// Access to the normal forms a generalized Eliahou–Kervaire complex needs.
pub trait NormalFormOracle<F: Field> {
    fn m(&self) -> usize;
    /// Generator degrees in `ℕ₀^m`, in the fixed generator order.
    fn generator_degrees(&self) -> &[Vec<u32>];
    /// Normal form of `s_{p,b}(m_g)` with `b = max(deg g)` and `p < b`.
    fn shifted_generator(&self, field: &F, g: usize, p: usize) -> Result<Vec<Term<F::Elem>>>;
    /// Dimension of the module in degree `alpha`.
    fn dim(&self, alpha: &[u32]) -> usize;
}

/// Oracle for an sst ideal: generators are the minimal monomial generators.
#[derive(Debug, Clone)]
pub struct MonomialNormalForm {
    ideal: SstIdeal,
    m: usize,
    gens: Vec<Monomial>,
    degrees: Vec<Vec<u32>>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialNormalForm {
    /// `m` must be at least the largest variable of the generators.
    pub fn new(ideal: &SstIdeal, m: usize) -> Result<Self> {
        if (ideal.max_var() as usize) > m {
            return Err(Error::Bounds(format!(
                "generators use x_{} but m = {m}",
                ideal.max_var()
            )));
        }
        let mut gens = ideal.monomial_min_gens()?;
        let exps = |u: &Monomial| u.exponents(m).expect("within m");
        gens.sort_by(|u, v| generator_order(&exps(u), &exps(v)));
        let degrees = gens.iter().map(exps).collect();
        let index = gens
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        Ok(Self {
            ideal: ideal.clone(),
            m,
            gens,
            degrees,
            index,
        })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn ideal(&self) -> &SstIdeal {
        &self.ideal
    }
}

impl<F: Field> NormalFormOracle<F> for MonomialNormalForm {
    fn m(&self) -> usize {
        self.m
    }

    fn generator_degrees(&self) -> &[Vec<u32>] {
        &self.degrees
    }

    fn shifted_generator(&self, field: &F, g: usize, p: usize) -> Result<Vec<Term<F::Elem>>> {
        let u = &self.gens[g];
        let b = u.max_var().unwrap_or(0);
        let s = u
            .shift(p as u32, b)
            .ok_or_else(|| Error::InvalidInput(format!("s_({p},{b}) undefined on {u}")))?;
        let (gen, c) = ek_decompose(&self.ideal, &s).expect("sst ideals are closed under shifts");
        Ok(vec![Term {
            coef: field.one(),
            multiplier: c.exponents(self.m).expect("within m"),
            generator: self.index[&gen],
        }])
    }

    fn dim(&self, alpha: &[u32]) -> usize {
        usize::from(self.ideal.member(&Monomial::from_exponents(alpha)))
    }
}

/// Checks on the truncated table that multiplication by `x_j` is injective
/// on every piece of degree `d` with `j ≥ max(d)`.
pub fn check_rear_torsion_free<F: Field>(table: &GradedPieceTable<F>) -> Result<()> {
    let field = table.field();
    for (alpha, &k) in table.dims() {
        for j in max_index(alpha).max(1)..=table.m() {
            let Some(x) = table.mult(alpha, j) else {
                continue;
            };
            if linalg::rank(field, &x)? < k {
                return Err(Error::NotRearTorsionFree(format!(
                    "x_{j} has a kernel in degree {alpha:?}"
                )));
            }
        }
    }
    Ok(())
}

/// Normal forms read off a truncated table: minimal generators are found
/// degree by degree and elements are solved against the admissible
/// products `x^a · m_g`.
#[derive(Debug, Clone)]
pub struct TableNormalForm<F: Field> {
    table: GradedPieceTable<F>,
    degrees: Vec<Vec<u32>>,
    vectors: Vec<Vec<F::Elem>>,
}

impl<F: Field> TableNormalForm<F> {
    pub fn new(table: GradedPieceTable<F>) -> Result<Self> {
        check_rear_torsion_free(&table)?;
        let field = table.field().clone();
        let mut gens = Vec::new();
        for (alpha, &k) in table.dims() {
            let mut cols: Vec<Vec<F::Elem>> = Vec::new();
            for i in 1..=table.m() {
                if alpha[i - 1] == 0 {
                    continue;
                }
                let mut below = alpha.clone();
                below[i - 1] -= 1;
                if table.dim(&below) == 0 {
                    continue;
                }
                let x = table.mult(&below, i).expect("below the bound");
                cols.extend((0..x.cols()).map(|j| x.column(j)));
            }
            let image = Matrix::from_columns(&field, k, &cols);
            for idx in linalg::complement_basis(&field, &image)? {
                let mut v = vec![field.zero(); k];
                v[idx] = field.one();
                gens.push((alpha.clone(), v));
            }
        }
        gens.sort_by(|a, b| generator_order(&a.0, &b.0));
        let (degrees, vectors) = gens.into_iter().unzip();
        Ok(Self {
            table,
            degrees,
            vectors,
        })
    }

    pub fn table(&self) -> &GradedPieceTable<F> {
        &self.table
    }

    /// The unique admissible combination equal to `v ∈ M_alpha`.
    pub fn normal_form(&self, alpha: &[u32], v: &[F::Elem]) -> Result<Vec<Term<F::Elem>>> {
        let field = self.table.field();
        let k = self.table.dim(alpha);
        let mut terms = Vec::new();
        let mut cols = Vec::new();
        for (g, d) in self.degrees.iter().enumerate() {
            if d.iter().zip(alpha).any(|(x, y)| x > y) {
                continue;
            }
            let a: Vec<u32> = alpha.iter().zip(d).map(|(x, y)| x - y).collect();
            if !admissible(d, &a) {
                continue;
            }
            let x = self.table.mult_monomial(d, &a).ok_or_else(|| {
                Error::Bounds(format!("degree {alpha:?} is past the table bound"))
            })?;
            cols.push(x.mul_vec(field, &self.vectors[g])?);
            terms.push((a, g));
        }
        let basis = Matrix::from_columns(field, k, &cols);
        if linalg::rank(field, &basis)? < cols.len() {
            return Err(Error::NotRearTorsionFree(format!(
                "admissible products are dependent in degree {alpha:?}"
            )));
        }
        let coefs = linalg::solve(field, &basis, v)?.ok_or_else(|| {
            Error::InvalidInput(format!("element of degree {alpha:?} is not spanned"))
        })?;
        Ok(terms
            .into_iter()
            .zip(coefs)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|((multiplier, generator), coef)| Term {
                coef,
                multiplier,
                generator,
            })
            .collect())
    }
}

impl<F: Field> NormalFormOracle<F> for TableNormalForm<F> {
    fn m(&self) -> usize {
        self.table.m()
    }

    fn generator_degrees(&self) -> &[Vec<u32>] {
        &self.degrees
    }

    fn shifted_generator(&self, field: &F, g: usize, p: usize) -> Result<Vec<Term<F::Elem>>> {
        let d = &self.degrees[g];
        let b = max_index(d);
        let s = self
            .table
            .shift_range(d, p, b)
            .ok_or_else(|| Error::InvalidInput(format!("s_({p},{b}) undefined at {d:?}")))?;
        let mut e = d.clone();
        e[p - 1] += 1;
        e[b - 1] -= 1;
        self.normal_form(&e, &s.mul_vec(field, &self.vectors[g])?)
    }

    fn dim(&self, alpha: &[u32]) -> usize {
        self.table.dim(alpha)
    }
}
