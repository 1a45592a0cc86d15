//! Finite shift modules over `Δ_{m+1}(n)`.
//!
//! A module assigns a vector space to each degree `d` and a linear map
//! `s_p : V_d → V_{d + e_p − e_{p+1}}` whenever `d_{p+1} > 0`, with the
//! `s_p` pairwise commuting. Degrees are coordinate vectors of length `m+1`.

mod dual;
mod expand;
mod morphism;
mod normal_form;
mod presentation;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::SstIdeal;
use crate::limits;
use crate::linalg::{self, Matrix};
use crate::monomial::{check_delta, delta_elements, Monomial};

pub use dual::{dual_module, dual_morphism};
pub use expand::{
    expand, expand_morphism, free_degrees, free_shift_target, tau, try_free_rank_one,
    GradedPieceTable,
};
pub use morphism::{cokernel, compose, cover, is_morphism, kernel, scalar_morphism, ShiftMorphism};
pub use normal_form::{
    admissible, check_rear_torsion_free, ek_decompose, generator_order, max_index, min_index,
    normal_form, MonomialNormalForm, NormalFormOracle, TableNormalForm, Term,
};
pub use presentation::{presentation_regularity, PresentationRegularity};

/// A multidegree in `Δ_{m+1}(n)`.
pub type Degree = Vec<u32>;

/// `d + e_p − e_{p+1}` when `d_{p+1} > 0`; `p` is 1-based.
pub fn shift_target(d: &[u32], p: usize) -> Option<Degree> {
    if p == 0 || p >= d.len() || d[p] == 0 {
        return None;
    }
    let mut e = d.to_vec();
    e[p - 1] += 1;
    e[p] -= 1;
    Some(e)
}

/// Partial sums `S_j = d_1 + … + d_j` for `j = 1..=m`.
fn partial_sums(d: &[u32]) -> Vec<u32> {
    let mut acc = 0;
    d[..d.len() - 1]
        .iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect()
}

/// Whether `e` is reachable from `d` by shifts: every partial sum of `e`
/// dominates the one of `d`.
pub fn reachable(d: &[u32], e: &[u32]) -> bool {
    partial_sums(e)
        .iter()
        .zip(partial_sums(d))
        .all(|(a, b)| *a >= b)
}

/// Every degree reachable from `d`, `d` included, in sorted order.
pub fn reachable_from(d: &[u32]) -> Result<Vec<Degree>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![d.to_vec()];
    while let Some(c) = stack.pop() {
        if !seen.insert(c.clone()) {
            continue;
        }
        limits::check("reachable degrees", seen.len() as u128)?;
        for p in 1..d.len() {
            if let Some(t) = shift_target(&c, p) {
                stack.push(t);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A shift sequence from `d` to `e` (1-based indices in application order).
pub fn shift_path(d: &[u32], e: &[u32]) -> Option<Vec<usize>> {
    if !reachable(d, e) {
        return None;
    }
    let target = partial_sums(e);
    let mut c = d.to_vec();
    let mut path = Vec::new();
    loop {
        let cur = partial_sums(&c);
        // largest p with S_p(c) < S_p(e); then c_{p+1} > 0
        let Some(p) = (1..=cur.len()).rev().find(|&p| cur[p - 1] < target[p - 1]) else {
            return Some(path);
        };
        c = shift_target(&c, p).expect("c_{p+1} > 0 on a shortest path");
        path.push(p);
    }
}

/// One violated condition found by [`FiniteShiftModule::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadDegree(Degree),
    Undefined {
        degree: Degree,
        p: usize,
    },
    Shape {
        degree: Degree,
        p: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    NonCommuting {
        degree: Degree,
        p: usize,
        q: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub squares_checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct FiniteShiftModule<F: Field> {
    field: F,
    m: usize,
    n: usize,
    dims: BTreeMap<Degree, usize>,
    shifts: BTreeMap<(Degree, usize), Matrix<F::Elem>>,
}

impl<F: Field> PartialEq for FiniteShiftModule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n && self.dims == other.dims && {
            // absent shifts are zero maps
            let keys: std::collections::BTreeSet<_> =
                self.shifts.keys().chain(other.shifts.keys()).collect();
            keys.into_iter()
                .all(|(d, p)| self.shift(d, *p) == other.shift(d, *p))
        }
    }
}

impl<F: Field> FiniteShiftModule<F> {
    /// Builds a module from nonzero dimensions and shift matrices. Shapes and
    /// degrees are checked here; commutation is left to [`Self::validate`].
    pub fn new(
        field: F,
        m: usize,
        n: usize,
        dims: BTreeMap<Degree, usize>,
        shifts: BTreeMap<(Degree, usize), Matrix<F::Elem>>,
    ) -> Result<Self> {
        let dims: BTreeMap<Degree, usize> = dims.into_iter().filter(|(_, k)| *k > 0).collect();
        for d in dims.keys() {
            check_delta(d, m, n)?;
        }
        let mut module = Self {
            field,
            m,
            n,
            dims,
            shifts: BTreeMap::new(),
        };
        for ((d, p), mat) in shifts {
            check_delta(&d, m, n)?;
            let e = shift_target(&d, p)
                .ok_or_else(|| Error::InvalidInput(format!("shift s_{p} is undefined at {d:?}")))?;
            let expected = (module.dim(&e), module.dim(&d));
            if mat.shape() != expected {
                return Err(Error::ShapeMismatch(format!(
                    "s_{p} at {d:?} is {:?}, expected {expected:?}",
                    mat.shape()
                )));
            }
            if expected.0 > 0 && expected.1 > 0 && !mat.is_zero(&module.field) {
                module.shifts.insert((d, p), mat);
            }
        }
        Ok(module)
    }

    pub fn zero(field: F, m: usize, n: usize) -> Self {
        Self {
            field,
            m,
            n,
            dims: BTreeMap::new(),
            shifts: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, d: &[u32]) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    /// Nonzero dimensions.
    pub fn dims(&self) -> &BTreeMap<Degree, usize> {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Every degree of `Δ_{m+1}(n)`.
    pub fn degrees(&self) -> Result<Vec<Degree>> {
        delta_elements(self.m, self.n)
    }

    /// Stored nonzero shift matrices.
    pub fn stored_shifts(&self) -> &BTreeMap<(Degree, usize), Matrix<F::Elem>> {
        &self.shifts
    }

    /// `s_p` at `d`, or `None` when `d_{p+1} = 0`.
    pub fn shift(&self, d: &[u32], p: usize) -> Option<Matrix<F::Elem>> {
        let e = shift_target(d, p)?;
        Some(match self.shifts.get(&(d.to_vec(), p)) {
            Some(mat) => mat.clone(),
            None => Matrix::zeros(&self.field, self.dim(&e), self.dim(d)),
        })
    }

    /// Composite of the shifts along `path`, starting at `d`.
    pub fn path_map(&self, d: &[u32], path: &[usize]) -> Result<Matrix<F::Elem>> {
        let mut cur = d.to_vec();
        let mut acc = Matrix::identity(&self.field, self.dim(d));
        for &p in path {
            let s = self.shift(&cur, p).ok_or_else(|| {
                Error::InvalidInput(format!("shift s_{p} is undefined at {cur:?}"))
            })?;
            acc = s.mul(&self.field, &acc)?;
            cur = shift_target(&cur, p).expect("checked above");
        }
        Ok(acc)
    }

    /// The canonical map `V_d → V_e` for reachable `e`.
    pub fn transport(&self, d: &[u32], e: &[u32]) -> Result<Option<Matrix<F::Elem>>> {
        match shift_path(d, e) {
            Some(path) => self.path_map(d, &path).map(Some),
            None => Ok(None),
        }
    }

    /// Checks shapes and all commutation squares `s_p s_q = s_q s_p`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for d in self.dims.keys() {
            if check_delta(d, self.m, self.n).is_err() {
                report.violations.push(Violation::BadDegree(d.clone()));
            }
        }
        for ((d, p), mat) in &self.shifts {
            match shift_target(d, *p) {
                None => report.violations.push(Violation::Undefined {
                    degree: d.clone(),
                    p: *p,
                }),
                Some(e) => {
                    let expected = (self.dim(&e), self.dim(d));
                    if mat.shape() != expected {
                        report.violations.push(Violation::Shape {
                            degree: d.clone(),
                            p: *p,
                            expected,
                            found: mat.shape(),
                        });
                    }
                }
            }
        }
        if !report.violations.is_empty() {
            return report;
        }
        for d in self.dims.keys() {
            for p in 1..=self.m {
                for q in p + 1..=self.m {
                    let (Some(dp), Some(dq)) = (shift_target(d, p), shift_target(d, q)) else {
                        continue;
                    };
                    report.squares_checked += 1;
                    let pq = self.shift(&dq, p).expect("defined after s_q");
                    let qp = self.shift(&dp, q).expect("defined after s_p");
                    let sp = self.shift(d, p).expect("defined");
                    let sq = self.shift(d, q).expect("defined");
                    let left = pq.mul(&self.field, &sq).expect("shapes checked");
                    let right = qp.mul(&self.field, &sp).expect("shapes checked");
                    if left != right {
                        report.violations.push(Violation::NonCommuting {
                            degree: d.clone(),
                            p,
                            q,
                        });
                    }
                }
            }
        }
        report
    }

    /// Generators: for each degree, `dim V_d` minus the rank of the images
    /// of the incoming shifts, with a basis of complement vectors.
    pub fn generator_basis(&self) -> Result<Vec<(Degree, Matrix<F::Elem>)>> {
        let mut out = Vec::new();
        for (d, &k) in &self.dims {
            let incoming = self.incoming_image(d)?;
            let comp = linalg::complement_basis(&self.field, &incoming)?;
            if comp.is_empty() {
                continue;
            }
            let id = Matrix::identity(&self.field, k);
            out.push((d.clone(), id.select_columns(&comp)));
        }
        Ok(out)
    }

    /// Columns spanning the sum of the images of shifts into `V_d`.
    fn incoming_image(&self, d: &[u32]) -> Result<Matrix<F::Elem>> {
        let k = self.dim(d);
        let mut acc = Matrix::zeros(&self.field, k, 0);
        for p in 1..=self.m {
            // source c = d − e_p + e_{p+1}
            if d[p - 1] == 0 {
                continue;
            }
            let mut c = d.to_vec();
            c[p - 1] -= 1;
            c[p] += 1;
            if self.dim(&c) == 0 {
                continue;
            }
            acc = acc.hstack(&self.shift(&c, p).expect("c_{p+1} > 0"))?;
        }
        Ok(acc)
    }

    /// Generator degrees with multiplicities.
    pub fn generators(&self) -> Result<Vec<(Degree, usize)>> {
        Ok(self
            .generator_basis()?
            .into_iter()
            .map(|(d, b)| (d, b.cols()))
            .collect())
    }

    /// Dimension of `V_d / rad V_d` at every degree with generators.
    pub fn radical_quotient(&self) -> Result<BTreeMap<Degree, usize>> {
        Ok(self.generators()?.into_iter().collect())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::ShapeMismatch(
                "direct sum over different boxes".into(),
            ));
        }
        let mut dims = self.dims.clone();
        for (d, k) in &other.dims {
            *dims.entry(d.clone()).or_default() += k;
        }
        let mut shifts = BTreeMap::new();
        for d in dims.keys() {
            for p in 1..=self.m {
                let Some(e) = shift_target(d, p) else {
                    continue;
                };
                let (a, b) = (self.shift(d, p).unwrap(), other.shift(d, p).unwrap());
                let rows = self.dim(&e) + other.dim(&e);
                let cols = self.dim(d) + other.dim(d);
                let mut mat = Matrix::zeros(&self.field, rows, cols);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        mat.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        mat.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
                    }
                }
                shifts.insert((d.clone(), p), mat);
            }
        }
        Self::new(self.field.clone(), self.m, self.n, dims, shifts)
    }
}

/// `P(d)`: one-dimensional at every degree reachable from `d`, identity shifts.
pub fn projective<F: Field>(
    field: F,
    m: usize,
    n: usize,
    d: &[u32],
) -> Result<FiniteShiftModule<F>> {
    projective_sum(field, m, n, &[d.to_vec()])
}

/// `⊕_k P(d_k)`. At each degree the basis is the summands present there, in
/// the given order; shifts include one basis into the next.
pub fn projective_sum<F: Field>(
    field: F,
    m: usize,
    n: usize,
    degrees: &[Degree],
) -> Result<FiniteShiftModule<F>> {
    for d in degrees {
        check_delta(d, m, n)?;
    }
    let mut dims = BTreeMap::new();
    let mut present = BTreeMap::new();
    for e in delta_elements(m, n)? {
        let ks: Vec<usize> = (0..degrees.len())
            .filter(|&k| reachable(&degrees[k], &e))
            .collect();
        if !ks.is_empty() {
            dims.insert(e.clone(), ks.len());
            present.insert(e, ks);
        }
    }
    let mut shifts = BTreeMap::new();
    for (e, ks) in &present {
        for p in 1..=m {
            let Some(t) = shift_target(e, p) else {
                continue;
            };
            let tk = &present[&t];
            let mut mat = Matrix::zeros(&field, tk.len(), ks.len());
            for (j, k) in ks.iter().enumerate() {
                let i = tk
                    .iter()
                    .position(|x| x == k)
                    .expect("support is shift-closed");
                mat.set(i, j, field.one());
            }
            shifts.insert((e.clone(), p), mat);
        }
    }
    FiniteShiftModule::new(field, m, n, dims, shifts)
}

/// Summands of `⊕_k P(d_k)` present at `e`, in order.
pub fn present_summands(degrees: &[Degree], e: &[u32]) -> Vec<usize> {
    (0..degrees.len())
        .filter(|&k| reachable(&degrees[k], e))
        .collect()
}

/// The degree of a monomial in `Δ_{m+1}(n)`, padding with `n − deg u`.
pub fn monomial_degree(u: &Monomial, m: usize, n: usize) -> Result<Degree> {
    let mut d = u
        .exponents(m)
        .ok_or_else(|| Error::Bounds(format!("{u} uses a variable beyond x{m}")))?;
    let deg = u.degree() as usize;
    if deg > n {
        return Err(Error::Bounds(format!("{u} has degree above {n}")));
    }
    d.push((n - deg) as u32);
    Ok(d)
}

/// The monomial of a degree, dropping the pad coordinate.
pub fn degree_monomial(d: &[u32]) -> Monomial {
    Monomial::from_exponents(&d[..d.len() - 1])
}

/// The module of an sst ideal: one-dimensional where the monomial lies in
/// the ideal, identity shifts.
pub fn from_sst_ideal<F: Field>(
    field: F,
    ideal: &SstIdeal,
    m: usize,
    n: usize,
) -> Result<FiniteShiftModule<F>> {
    if ideal.max_var() as usize > m || ideal.max_degree() as usize > n {
        return Err(Error::Bounds(format!(
            "{ideal} does not fit in {m} variables and degree {n}"
        )));
    }
    let mut dims = BTreeMap::new();
    for e in delta_elements(m, n)? {
        if ideal.member(&degree_monomial(&e)) {
            dims.insert(e, 1);
        }
    }
    let mut shifts = BTreeMap::new();
    for e in dims.keys() {
        for p in 1..=m {
            if let Some(t) = shift_target(e, p) {
                if dims.contains_key(&t) {
                    shifts.insert((e.clone(), p), Matrix::identity(&field, 1));
                }
            }
        }
    }
    FiniteShiftModule::new(field, m, n, dims, shifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn projective_supports() {
        let free = projective(f(), 2, 3, &[0, 0, 3]).unwrap();
        assert_eq!(free.total_dim(), 10);
        let top = projective(f(), 2, 3, &[3, 0, 0]).unwrap();
        assert_eq!(top.dims().keys().collect::<Vec<_>>(), vec![&vec![3, 0, 0]]);
        let p = projective(f(), 2, 2, &[1, 1, 0]).unwrap();
        assert_eq!(
            p.dims().keys().cloned().collect::<Vec<_>>(),
            vec![vec![1, 1, 0], vec![2, 0, 0]]
        );
        assert!(p.validate().is_valid());
        assert_eq!(p.generators().unwrap(), vec![(vec![1, 1, 0], 1)]);
    }

    #[test]
    fn paths_follow_partial_sums() {
        let path = shift_path(&[0, 1, 2], &[2, 1, 0]).unwrap();
        let mut c = vec![0, 1, 2];
        for p in path {
            c = shift_target(&c, p).unwrap();
        }
        assert_eq!(c, vec![2, 1, 0]);
        assert!(shift_path(&[1, 0, 1], &[0, 2, 0]).is_none());
    }

    #[test]
    fn ideal_module() {
        let i = SstIdeal::parse("x1^2").unwrap();
        let v = from_sst_ideal(f(), &i, 2, 2).unwrap();
        assert_eq!(
            v.dims().keys().cloned().collect::<Vec<_>>(),
            vec![vec![2, 0, 0]]
        );
        let j = SstIdeal::parse("x1*x2").unwrap();
        let w = from_sst_ideal(f(), &j, 2, 2).unwrap();
        assert!(w.validate().is_valid());
        let unit = from_sst_ideal(f(), &SstIdeal::parse("1").unwrap(), 2, 2).unwrap();
        assert_eq!(unit, projective(f(), 2, 2, &[0, 0, 2]).unwrap());
        assert!(from_sst_ideal(f(), &j, 1, 2).is_err());
    }

    #[test]
    fn ideal_generators_are_sst_generators() {
        let i = SstIdeal::parse("x1^2*x2*x3, x1^3*x3^2, x2^4").unwrap();
        let v = from_sst_ideal(RationalField, &i, 3, 5).unwrap();
        let gens: Vec<Monomial> = v
            .generators()
            .unwrap()
            .into_iter()
            .map(|(d, k)| {
                assert_eq!(k, 1);
                degree_monomial(&d)
            })
            .collect();
        let mut want = i.gens().to_vec();
        want.sort_by_key(|u| monomial_degree(u, 3, 5).unwrap());
        let mut got = gens;
        got.sort_by_key(|u| monomial_degree(u, 3, 5).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn corrupted_matrix_is_reported() {
        let fld = f();
        let p = projective(fld, 2, 2, &[0, 0, 2]).unwrap();
        let mut shifts = p.stored_shifts().clone();
        let key = (vec![0, 1, 1], 1);
        shifts.insert(key, Matrix::from_vec(1, 1, vec![2]).unwrap());
        let bad = FiniteShiftModule::new(fld, 2, 2, p.dims().clone(), shifts).unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&Violation::NonCommuting {
            degree: vec![0, 1, 1],
            p: 1,
            q: 2
        }));
    }

    #[test]
    fn direct_sum_generators() {
        let a = projective(f(), 2, 2, &[1, 1, 0]).unwrap();
        let b = projective(f(), 2, 2, &[0, 1, 1]).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert!(s.validate().is_valid());
        assert_eq!(
            s.generators().unwrap(),
            vec![(vec![0, 1, 1], 1), (vec![1, 1, 0], 1)]
        );
        assert_eq!(
            s,
            projective_sum(f(), 2, 2, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap()
        );
    }
}
