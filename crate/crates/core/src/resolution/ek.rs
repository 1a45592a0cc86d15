//! The generalized Eliahou–Kervaire resolution of a rear torsion-free
//! module, driven by a normal-form oracle.

use std::collections::HashMap;

use super::{BettiTable, Grading, ShiftComplex};
use crate::error::Result;
use crate::field::Field;
use crate::ideal::SstIdeal;
use crate::limits;
use crate::linalg::Matrix;
use crate::shift_module::{max_index, MonomialNormalForm, NormalFormOracle};

/// `(i_1 < … < i_p | u_g)` with `i_p < max(deg g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub indices: Vec<usize>,
    pub generator: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EkComplex<F: Field> {
    pub complex: ShiftComplex<F>,
    pub symbols: Vec<Vec<Symbol>>,
    pub generator_degrees: Vec<Vec<u32>>,
}

fn subsets(below: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(
        next: usize,
        below: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in next..below {
            cur.push(i);
            rec(i + 1, below, size, cur, out);
            cur.pop();
        }
    }
    rec(1, below, size, &mut cur, &mut out);
    out
}

fn symbol_degree(gdeg: &[u32], indices: &[usize]) -> Vec<u32> {
    let mut d = gdeg.to_vec();
    for &i in indices {
        d[i - 1] += 1;
    }
    d
}

/// Builds `d = δ − μ` on all admissible symbols. Symbols that come out of
/// `μ` with a non-admissible index set are zero.
pub fn ek_resolution<F: Field, O: NormalFormOracle<F> + ?Sized>(
    field: F,
    oracle: &O,
) -> Result<EkComplex<F>> {
    let gdegs = oracle.generator_degrees().to_vec();
    let maxes: Vec<usize> = gdegs.iter().map(|d| max_index(d)).collect();
    let count: u128 = maxes
        .iter()
        .map(|&b| 1u128 << b.saturating_sub(1).min(100))
        .sum();
    limits::check("Eliahou-Kervaire symbols", count)?;

    let mut symbols: Vec<Vec<Symbol>> = Vec::new();
    for p in 0.. {
        let level: Vec<Symbol> = (0..gdegs.len())
            .flat_map(|g| {
                subsets(maxes[g], p).into_iter().map(move |indices| Symbol {
                    indices,
                    generator: g,
                })
            })
            .collect();
        if level.is_empty() {
            break;
        }
        symbols.push(level);
    }
    let index: Vec<HashMap<&Symbol, usize>> = symbols
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();

    let mut diffs = Vec::new();
    for p in 1..symbols.len() {
        let mut d = Matrix::zeros(&field, symbols[p - 1].len(), symbols[p].len());
        for (j, s) in symbols[p].iter().enumerate() {
            for q in 0..s.indices.len() {
                // (-1)^q with q counted from 1
                let sign = if q % 2 == 0 {
                    field.from_i64(-1)
                } else {
                    field.one()
                };
                let mut rest = s.indices.clone();
                let iq = rest.remove(q);
                let top = rest.last().copied().unwrap_or(0);
                let delta = Symbol {
                    indices: rest.clone(),
                    generator: s.generator,
                };
                let i = index[p - 1][&delta];
                d.set(i, j, field.add(d.get(i, j), &sign));
                for t in oracle.shifted_generator(&field, s.generator, iq)? {
                    if top >= maxes[t.generator] {
                        continue;
                    }
                    let mu = Symbol {
                        indices: rest.clone(),
                        generator: t.generator,
                    };
                    let i = index[p - 1][&mu];
                    let v = field.sub(d.get(i, j), &field.mul(&sign, &t.coef));
                    d.set(i, j, v);
                }
            }
        }
        diffs.push(d);
    }
    let terms = symbols
        .iter()
        .map(|l| {
            l.iter()
                .map(|s| symbol_degree(&gdegs[s.generator], &s.indices))
                .collect()
        })
        .collect();
    let complex = ShiftComplex::new(field, Grading::Free { m: oracle.m() }, terms, diffs)?;
    Ok(EkComplex {
        complex,
        symbols,
        generator_degrees: gdegs,
    })
}

/// The classical Eliahou–Kervaire resolution of an sst ideal.
pub fn ek_resolution_sst<F: Field>(field: F, ideal: &SstIdeal) -> Result<EkComplex<F>> {
    let oracle = MonomialNormalForm::new(ideal, ideal.max_var().max(1) as usize)?;
    ek_resolution(field, &oracle)
}

/// `β_{p, deg u + p} = Σ_u binomial(max(u) − 1, p)` over the minimal monomial
/// generators `u`.
pub fn ek_betti_closed_form(ideal: &SstIdeal) -> Result<BettiTable> {
    let mut t = BettiTable::default();
    for u in ideal.monomial_min_gens()? {
        let b = u.max_var().unwrap_or(1).max(1) as u64;
        for p in 0..b {
            t.add(
                p as usize,
                u.degree() + p as u32,
                limits::binomial(b - 1, p) as usize,
            );
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::monomial::Monomial;
    use crate::shift_module::{expand, from_sst_ideal, TableNormalForm};

    fn check<F: Field>(field: F, s: &str, bound: u32) -> EkComplex<F> {
        let i = SstIdeal::parse(s).unwrap();
        let c = ek_resolution_sst(field, &i).unwrap();
        let r = c
            .complex
            .verify(
                &|e| usize::from(i.member(&Monomial::from_exponents(e))),
                bound,
            )
            .unwrap();
        assert!(r.is_resolution(), "{s}: {r:?}");
        assert!(r.minimal, "{s}");
        assert_eq!(c.complex.betti(), ek_betti_closed_form(&i).unwrap(), "{s}");
        c
    }

    #[test]
    fn small_ideals() {
        let f = PrimeField::default();
        assert_eq!(check(f, "x2^2", 5).complex.betti().totals(), vec![3, 2]);
        assert_eq!(check(f, "x1^3", 5).complex.betti().totals(), vec![1]);
        assert_eq!(check(f, "x1", 3).complex.betti().totals(), vec![1]);
        check(f, "x2*x3, x1^3", 6);
        check(RationalField, "x1*x2*x3", 5);
    }

    #[test]
    fn three_variable_instance() {
        let c = check(PrimeField::default(), "x1^3*x2^2*x3, x1^4*x3^2", 9);
        let b = c.complex.betti();
        assert_eq!((b.get(0, 6), b.get(1, 7), b.get(2, 8)), (8, 11, 4));
        assert_eq!(b.totals(), vec![8, 11, 4]);
    }

    #[test]
    fn symbols_are_admissible() {
        let c = check(PrimeField::default(), "x2*x3^2, x1^2*x4", 0);
        for level in &c.symbols {
            for s in level {
                let b = max_index(&c.generator_degrees[s.generator]);
                assert!(s.indices.iter().all(|&i| i < b));
            }
        }
    }

    #[test]
    fn table_oracle_reproduces_monomial_complex() {
        let f = PrimeField::default();
        let i = SstIdeal::parse("x1^2*x2, x1*x2^2, x1^2*x3").unwrap();
        let v = from_sst_ideal(f, &i, 3, 3).unwrap();
        let t = TableNormalForm::new(expand(&v, 7).unwrap()).unwrap();
        let a = ek_resolution(f, &t).unwrap();
        let b = ek_resolution_sst(f, &i).unwrap();
        assert_eq!(a, b);
    }
}
