//! Expansion of a module over `Δ_{m+1}(n)` to an `ℕ₀^m`-graded shift module
//! over `k[x_1..x_m]`, truncated at a total degree bound.

use std::collections::BTreeMap;

use super::{shift_target, Degree, FiniteShiftModule, ShiftMorphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::limits;
use crate::linalg::Matrix;

/// The degree of `Δ_{m+1}(n)` whose piece sits at `α`: pad with `n − |α|`
/// when `|α| ≤ n`, otherwise keep the part of `α` up to the break `r` where
/// the partial sums reach `n`.
pub fn tau(alpha: &[u32], n: usize) -> Degree {
    let n = n as u32;
    let total: u32 = alpha.iter().sum();
    let mut d = Vec::with_capacity(alpha.len() + 1);
    if total <= n {
        d.extend_from_slice(alpha);
        d.push(n - total);
        return d;
    }
    let mut acc = 0;
    for &a in alpha {
        let take = a.min(n - acc);
        d.push(take);
        acc += take;
    }
    d.push(0);
    d
}

/// All `α ∈ ℕ₀^m` with `|α| ≤ bound`.
pub fn free_degrees(m: usize, bound: u32) -> Result<Vec<Vec<u32>>> {
    limits::check(
        "graded piece enumeration",
        limits::binomial(m as u64 + bound as u64, m as u64),
    )?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(m, left - v, cur, out);
            cur.pop();
        }
    }
    rec(m, bound, &mut cur, &mut out);
    out.sort_by_key(|a| (a.iter().sum::<u32>(), a.clone()));
    Ok(out)
}

/// Target of `s_p` on `ℕ₀^m`: `α + e_p − e_{p+1}` for `p < m` (needs
/// `α_{p+1} > 0`) and `α + e_m` for `p = m`.
pub fn free_shift_target(alpha: &[u32], p: usize) -> Option<Vec<u32>> {
    let m = alpha.len();
    if p == 0 || p > m {
        return None;
    }
    let mut b = alpha.to_vec();
    b[p - 1] += 1;
    if p < m {
        if alpha[p] == 0 {
            return None;
        }
        b[p] -= 1;
    }
    Some(b)
}

fn total(alpha: &[u32]) -> u32 {
    alpha.iter().sum()
}

/// Graded pieces of an `ℕ₀^m`-graded shift module up to a degree bound,
/// with shift matrices and multiplication by each variable.
#[derive(Debug, Clone)]
pub struct GradedPieceTable<F: Field> {
    field: F,
    m: usize,
    bound: u32,
    dims: BTreeMap<Vec<u32>, usize>,
    shifts: BTreeMap<(Vec<u32>, usize), Matrix<F::Elem>>,
    mult: BTreeMap<(Vec<u32>, usize), Matrix<F::Elem>>,
}

impl<F: Field> GradedPieceTable<F> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self, alpha: &[u32]) -> usize {
        self.dims.get(alpha).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<Vec<u32>, usize> {
        &self.dims
    }

    /// `s_p` at `α`, or `None` if undefined or past the bound.
    pub fn shift(&self, alpha: &[u32], p: usize) -> Option<Matrix<F::Elem>> {
        let b = free_shift_target(alpha, p)?;
        if total(&b) > self.bound {
            return None;
        }
        Some(match self.shifts.get(&(alpha.to_vec(), p)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(&b), self.dim(alpha)),
        })
    }

    /// Multiplication by `x_i` at `α`, or `None` past the bound.
    pub fn mult(&self, alpha: &[u32], i: usize) -> Option<Matrix<F::Elem>> {
        if total(alpha) >= self.bound || i == 0 || i > self.m {
            return None;
        }
        let mut b = alpha.to_vec();
        b[i - 1] += 1;
        Some(match self.mult.get(&(alpha.to_vec(), i)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(&self.field, self.dim(&b), self.dim(alpha)),
        })
    }

    /// Multiplication by a monomial `x^a` at `α`, applied one variable at a
    /// time, or `None` past the bound.
    pub fn mult_monomial(&self, alpha: &[u32], a: &[u32]) -> Option<Matrix<F::Elem>> {
        let mut cur = alpha.to_vec();
        let mut acc = Matrix::identity(&self.field, self.dim(alpha));
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                let x = self.mult(&cur, i + 1)?;
                acc = x.mul(&self.field, &acc).expect("shapes agree");
                cur[i] += 1;
            }
        }
        Some(acc)
    }

    /// `s_{p,q} = s_p ∘ … ∘ s_{q−1}` at `α` (for `q = m+1` this ends with the
    /// multiplication-like `s_m`).
    pub fn shift_range(&self, alpha: &[u32], p: usize, q: usize) -> Option<Matrix<F::Elem>> {
        let mut cur = alpha.to_vec();
        let mut acc = Matrix::identity(&self.field, self.dim(alpha));
        for r in (p..q).rev() {
            let s = self.shift(&cur, r)?;
            acc = s.mul(&self.field, &acc).expect("shapes agree");
            cur = free_shift_target(&cur, r)?;
        }
        Some(acc)
    }

    /// Shift-square violations `s_p s_q ≠ s_q s_p` within the bound.
    pub fn commutation_failures(&self) -> Vec<(Vec<u32>, usize, usize)> {
        let mut out = Vec::new();
        for alpha in self.dims.keys() {
            for p in 1..=self.m {
                for q in p + 1..=self.m {
                    let (Some(ap), Some(aq)) =
                        (free_shift_target(alpha, p), free_shift_target(alpha, q))
                    else {
                        continue;
                    };
                    let (Some(sp), Some(sq)) = (self.shift(alpha, p), self.shift(alpha, q)) else {
                        continue;
                    };
                    let (Some(pq), Some(qp)) = (self.shift(&aq, p), self.shift(&ap, q)) else {
                        continue;
                    };
                    let l = pq.mul(&self.field, &sq).expect("shapes agree");
                    let r = qp.mul(&self.field, &sp).expect("shapes agree");
                    if l != r {
                        out.push((alpha.clone(), p, q));
                    }
                }
            }
        }
        out
    }

    /// Places where `x_i ≠ s_{i,m+1}`.
    pub fn multiplication_failures(&self) -> Vec<(Vec<u32>, usize)> {
        let mut out = Vec::new();
        for alpha in self.dims.keys() {
            for i in 1..=self.m {
                let Some(x) = self.mult(alpha, i) else {
                    continue;
                };
                match self.shift_range(alpha, i, self.m + 1) {
                    Some(s) if s == x => {}
                    _ => out.push((alpha.clone(), i)),
                }
            }
        }
        out
    }

    /// Places where `x_i x_j ≠ x_j x_i`.
    pub fn noncommuting_variables(&self) -> Vec<(Vec<u32>, usize, usize)> {
        let mut out = Vec::new();
        for alpha in self.dims.keys() {
            if total(alpha) + 2 > self.bound {
                continue;
            }
            for i in 1..=self.m {
                for j in i + 1..=self.m {
                    let mut ai = alpha.clone();
                    ai[i - 1] += 1;
                    let mut aj = alpha.clone();
                    aj[j - 1] += 1;
                    let l = self
                        .mult(&ai, j)
                        .unwrap()
                        .mul(&self.field, &self.mult(alpha, i).unwrap());
                    let r = self
                        .mult(&aj, i)
                        .unwrap()
                        .mul(&self.field, &self.mult(alpha, j).unwrap());
                    if l.ok() != r.ok() {
                        out.push((alpha.clone(), i, j));
                    }
                }
            }
        }
        out
    }
}

/// Expands `V` to degrees `|α| ≤ bound`.
pub fn expand<F: Field>(v: &FiniteShiftModule<F>, bound: u32) -> Result<GradedPieceTable<F>> {
    let (m, n) = (v.m(), v.n());
    let field = v.field().clone();
    let mut dims = BTreeMap::new();
    let mut shifts = BTreeMap::new();
    let alphas = free_degrees(m, bound)?;
    for alpha in &alphas {
        let k = v.dim(&tau(alpha, n));
        if k > 0 {
            dims.insert(alpha.clone(), k);
        }
    }
    for alpha in dims.keys() {
        let t = tau(alpha, n);
        for p in 1..=m {
            let Some(beta) = free_shift_target(alpha, p) else {
                continue;
            };
            if total(&beta) > bound || !dims.contains_key(&beta) {
                continue;
            }
            let tb = tau(&beta, n);
            let mat = if tb == t {
                Matrix::identity(&field, dims[alpha])
            } else if shift_target(&t, p).as_ref() == Some(&tb) {
                v.shift(&t, p).expect("defined")
            } else {
                return Err(Error::InvalidInput(format!(
                    "expansion of s_{p} at {alpha:?} leaves the shift pattern"
                )));
            };
            shifts.insert((alpha.clone(), p), mat);
        }
    }
    let mut table = GradedPieceTable {
        field,
        m,
        bound,
        dims,
        shifts,
        mult: BTreeMap::new(),
    };
    let mut mult = BTreeMap::new();
    for alpha in table.dims.keys() {
        if total(alpha) >= bound {
            continue;
        }
        for i in 1..=m {
            let x = table
                .shift_range(alpha, i, m + 1)
                .expect("within the bound");
            mult.insert((alpha.clone(), i), x);
        }
    }
    table.mult = mult;
    Ok(table)
}

/// `expand(φ)` degreewise: `φ_{τ(α)}`.
pub fn expand_morphism<F: Field>(
    source: &FiniteShiftModule<F>,
    target: &FiniteShiftModule<F>,
    phi: &ShiftMorphism<F::Elem>,
    bound: u32,
) -> Result<BTreeMap<Vec<u32>, Matrix<F::Elem>>> {
    let field = source.field();
    let mut out = BTreeMap::new();
    for alpha in free_degrees(source.m(), bound)? {
        let t = tau(&alpha, source.n());
        if source.dim(&t) > 0 || target.dim(&t) > 0 {
            out.insert(alpha, phi.at(field, source, target, &t));
        }
    }
    Ok(out)
}

/// Tries to make the free module `S·u` with `deg u = d` a shift module,
/// with each shift the identity where the target degree lies in the
/// support and zero otherwise. Succeeds only when `d = d_1 e_1`.
pub fn try_free_rank_one<F: Field>(field: F, d: &[u32], bound: u32) -> Result<GradedPieceTable<F>> {
    let m = d.len();
    let above = |a: &[u32]| a.iter().zip(d).all(|(x, y)| x >= y);
    let mut dims = BTreeMap::new();
    for alpha in free_degrees(m, bound)? {
        if above(&alpha) {
            dims.insert(alpha, 1);
        }
    }
    let mut shifts = BTreeMap::new();
    let mut mult = BTreeMap::new();
    for alpha in dims.keys() {
        for p in 1..=m {
            if let Some(b) = free_shift_target(alpha, p) {
                if total(&b) <= bound && above(&b) {
                    shifts.insert((alpha.clone(), p), Matrix::identity(&field, 1));
                }
            }
            if total(alpha) < bound {
                mult.insert((alpha.clone(), p), Matrix::identity(&field, 1));
            }
        }
    }
    let table = GradedPieceTable {
        field,
        m,
        bound,
        dims,
        shifts,
        mult,
    };
    let squares = table.commutation_failures();
    let products = table.multiplication_failures();
    if let Some((a, p, q)) = squares.first() {
        return Err(Error::NotAShiftModule(format!(
            "S·u in degree {d:?}: s_{p} and s_{q} do not commute at {a:?}"
        )));
    }
    if let Some((a, i)) = products.first() {
        return Err(Error::NotAShiftModule(format!(
            "S·u in degree {d:?}: x_{i} differs from s_({i},{}) at {a:?}",
            m + 1
        )));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::SstIdeal;
    use crate::monomial::Monomial;
    use crate::shift_module::{from_sst_ideal, projective};

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&[1, 0], 2), vec![1, 0, 1]);
        assert_eq!(tau(&[2, 1], 2), vec![2, 0, 0]);
        assert_eq!(tau(&[1, 3], 2), vec![1, 1, 0]);
        assert_eq!(tau(&[0, 3], 2), vec![0, 2, 0]);
    }

    #[test]
    fn projective_expands_to_principal_ideal() {
        let f = PrimeField::default();
        let p = projective(f, 2, 2, &[1, 1, 0]).unwrap();
        let t = expand(&p, 3).unwrap();
        let ideal = SstIdeal::parse("x1*x2").unwrap();
        for alpha in free_degrees(2, 3).unwrap() {
            let inside = ideal.member(&Monomial::from_exponents(&alpha));
            assert_eq!(t.dim(&alpha), usize::from(inside), "{alpha:?}");
        }
        assert!(t.multiplication_failures().is_empty());
        assert!(t.noncommuting_variables().is_empty());
        assert!(t.commutation_failures().is_empty());
    }

    #[test]
    fn ideal_module_expands_to_the_ideal() {
        let f = PrimeField::default();
        let i = SstIdeal::parse("x1^2*x2, x2^3, x1*x3^2").unwrap();
        let v = from_sst_ideal(f, &i, 3, 3).unwrap();
        let t = expand(&v, 6).unwrap();
        for alpha in free_degrees(3, 6).unwrap() {
            let inside = i.member(&Monomial::from_exponents(&alpha));
            assert_eq!(t.dim(&alpha), usize::from(inside));
        }
        assert!(t.noncommuting_variables().is_empty());
    }

    #[test]
    fn zero_module_expands_to_zero() {
        let f = PrimeField::default();
        let z = FiniteShiftModule::zero(f, 2, 2);
        assert!(expand(&z, 4).unwrap().dims().is_empty());
    }

    #[test]
    fn free_rank_one_obstruction() {
        let f = PrimeField::default();
        assert!(try_free_rank_one(f, &[3, 0, 0], 5).is_ok());
        assert!(try_free_rank_one(f, &[0, 0, 0], 4).is_ok());
        for d in [[0u32, 1, 0], [1, 1, 0], [0, 0, 2], [2, 0, 1]] {
            assert!(matches!(
                try_free_rank_one(f, &d, 5),
                Err(Error::NotAShiftModule(_))
            ));
        }
    }
}
