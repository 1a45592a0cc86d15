//! Monomials in countably many variables, the bijections Λ and Γ with
//! isotone maps, the strongly stable order, and the degree correspondence
//! `Δ_{m+1}(n) ↔ Δ_{n+1}(m)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::isotone::{ExtNat, FiniteBox, IsotoneMap, Tail};
use crate::limits;

/// Printing alphabet. The two sides of the duality use `x` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Alphabet {
    #[default]
    X,
    Y,
}

impl Alphabet {
    pub fn flip(self) -> Self {
        match self {
            Alphabet::X => Alphabet::Y,
            Alphabet::Y => Alphabet::X,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        match c {
            'x' => Ok(Alphabet::X),
            'y' => Ok(Alphabet::Y),
            other => Err(Error::Parse(format!("unknown alphabet {other:?}"))),
        }
    }
}

/// Sparse monomial: `(variable, exponent)` pairs with increasing variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: u32) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        Self { exps: vec![(i, 1)] }
    }

    /// From `(variable, exponent)` pairs in any order; zero exponents vanish.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (v, e) in pairs {
            if v == 0 {
                return Err(Error::InvalidInput("variables are indexed from 1".into()));
            }
            if e > 0 {
                exps.push((v, e));
            }
        }
        exps.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Ok(Self { exps: merged })
    }

    /// Dense exponent vector; entry `k` is the exponent of `x_{k+1}`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Self {
            exps: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (k as u32 + 1, e))
                .collect(),
        }
    }

    /// From a list of factor indices, e.g. `[1,1,3]` for `x1^2*x3`.
    pub fn from_factors(factors: &[u32]) -> Result<Self> {
        Self::from_pairs(factors.iter().map(|&v| (v, 1)))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, i: u32) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v == i)
            .map_or(0, |&(_, e)| e)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn min_var(&self) -> Option<u32> {
        self.exps.first().map(|&(v, _)| v)
    }

    /// Dense exponents over `x_1..x_m`, or `None` if a larger variable occurs.
    pub fn exponents(&self, m: usize) -> Option<Vec<u32>> {
        let mut out = vec![0; m];
        for &(v, e) in &self.exps {
            *out.get_mut(v as usize - 1)? = e;
        }
        Some(out)
    }

    /// Weakly increasing list of factor indices.
    pub fn factors(&self) -> Vec<u32> {
        self.exps
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_pairs(self.exps.iter().chain(&other.exps).copied()).expect("valid variables")
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self {
            exps: self
                .exps
                .iter()
                .map(|&(v, e)| (v, e - other.exponent(v)))
                .filter(|&(_, e)| e > 0)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut vars: Vec<u32> = self
            .exps
            .iter()
            .chain(&other.exps)
            .map(|&(v, _)| v)
            .collect();
        vars.sort_unstable();
        vars.dedup();
        Self {
            exps: vars
                .into_iter()
                .map(|v| (v, self.exponent(v).max(other.exponent(v))))
                .collect(),
        }
    }

    /// `self · x_i / x_j`, when `x_j` divides `self`.
    pub fn shift(&self, i: u32, j: u32) -> Option<Self> {
        let base = self.div(&Monomial::var(j))?;
        Some(base.mul(&Monomial::var(i)))
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let c = alphabet.letter();
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("{c}{v}")
                } else {
                    format!("{c}{v}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    /// Degree first, then lex on sorted factor lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors().cmp(&other.factors()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::X))
    }
}

/// Parses `x1^2*x2`, `y3`, or `1`. Returns the alphabet seen, if any.
pub fn parse_monomial(s: &str) -> Result<(Monomial, Option<Alphabet>)> {
    let s = s.trim();
    if s == "1" {
        return Ok((Monomial::one(), None));
    }
    if s.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    let mut alphabet = None;
    let mut pairs = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        let bad = || Error::Parse(format!("bad factor {factor:?} in {s:?}"));
        let mut chars = factor.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let a = Alphabet::from_letter(letter).map_err(|_| bad())?;
        if alphabet.is_some_and(|b| b != a) {
            return Err(Error::Parse(format!("mixed alphabets in {s:?}")));
        }
        alphabet = Some(a);
        let rest = chars.as_str();
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let var = var.trim().parse::<u32>().map_err(|_| bad())?;
        if var == 0 {
            return Err(bad());
        }
        pairs.push((var, exp));
    }
    Ok((Monomial::from_pairs(pairs)?, alphabet))
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_monomial(s).map(|(m, _)| m)
    }
}

/// `Γ f = ∏_{f(i) < ∞} x_{f(i)}` for a large map.
pub fn gamma(f: &IsotoneMap) -> Result<Monomial> {
    if !f.is_large() {
        return Err(Error::InvalidInput(format!("Γ needs a large map, got {f}")));
    }
    Monomial::from_factors(
        &f.prefix()
            .iter()
            .filter_map(|v| v.finite())
            .collect::<Vec<_>>(),
    )
}

/// The large map whose finite values are the sorted factors of `u`.
pub fn gamma_inv(u: &Monomial) -> IsotoneMap {
    IsotoneMap::large(&u.factors()).expect("sorted factors are isotone")
}

/// `Λ f = ∏ x_i^{f(i) − f(i−1)}` with `f(0) = 1`, for a small map.
pub fn lambda(f: &IsotoneMap) -> Result<Monomial> {
    if !f.is_small() {
        return Err(Error::InvalidInput(format!("Λ needs a small map, got {f}")));
    }
    let mut prev = 1u32;
    let mut exps = Vec::new();
    for i in 1..=f.prefix().len() + 1 {
        let v = f.value(i).finite().expect("small maps are finite");
        exps.push(v - prev);
        prev = v;
    }
    Ok(Monomial::from_exponents(&exps))
}

/// The small map with `f(i) = 1 + Σ_{k ≤ i} e_k`.
pub fn lambda_inv(u: &Monomial) -> IsotoneMap {
    let top = u.max_var().unwrap_or(0) as usize;
    let mut acc = 1;
    let prefix: Vec<ExtNat> = (1..=top)
        .map(|i| {
            acc += u.exponent(i as u32);
            ExtNat::Fin(acc)
        })
        .collect();
    IsotoneMap::new(prefix, Tail::Const(1 + u.degree())).expect("partial sums are isotone")
}

/// Γ on a box map `[m] → [n+1]`, the value `n+1` read as ∞.
pub fn gamma_box(values: &[u32], n: usize) -> Monomial {
    Monomial::from_factors(
        &values
            .iter()
            .copied()
            .filter(|&v| v <= n as u32)
            .collect::<Vec<_>>(),
    )
    .expect("box values are positive")
}

/// Λ on a box map `g : [m] → [n+1]` with `g(0) = 1`, `g(m+1) = n+1`.
/// The result is the exponent vector in `Δ_{m+1}(n)`.
pub fn lambda_box(values: &[u32], n: usize) -> Vec<u32> {
    let mut prev = 1;
    let mut out = Vec::with_capacity(values.len() + 1);
    for &v in values.iter().chain(std::iter::once(&(n as u32 + 1))) {
        out.push(v - prev);
        prev = v;
    }
    out
}

/// Inverse of [`lambda_box`]: partial sums plus one, dropping the pad.
pub fn lambda_box_inv(d: &[u32]) -> Vec<u32> {
    let m = d.len().saturating_sub(1);
    let mut acc = 1;
    d[..m]
        .iter()
        .map(|&e| {
            acc += e;
            acc
        })
        .collect()
}

/// `u ≥_st v`: with sorted factors `a` (length r) and `b` (length s),
/// `r ≥ s` and `a_i ≤ b_i` for `i ≤ s`.
pub fn st_geq(u: &Monomial, v: &Monomial) -> bool {
    let a = u.factors();
    let b = v.factors();
    a.len() >= b.len() && a.iter().zip(&b).all(|(x, y)| x <= y)
}

/// All monomials of degree `deg g` that are `≥_st g`.
pub fn st_dominators(g: &Monomial) -> Result<Vec<Monomial>> {
    let b = g.factors();
    // crude upper bound: weakly increasing sequences below max(b)
    let bound = limits::binomial(
        (b.len() as u64 + g.max_var().unwrap_or(1) as u64).saturating_sub(1),
        b.len() as u64,
    );
    limits::check("strongly stable dominators", bound)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(b.len());
    fn rec(b: &[u32], lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let k = cur.len();
        if k == b.len() {
            out.push(Monomial::from_factors(cur).expect("positive factors"));
            return;
        }
        for v in lo..=b[k] {
            cur.push(v);
            rec(b, v, cur, out);
            cur.pop();
        }
    }
    rec(&b, 1, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

/// All monomials of degree `d` in `x_1..x_m`.
pub fn monomials_of_degree(m: usize, d: u32) -> Result<Vec<Monomial>> {
    if m == 0 {
        return Ok(if d == 0 {
            vec![Monomial::one()]
        } else {
            vec![]
        });
    }
    limits::check(
        "monomial enumeration",
        limits::binomial(m as u64 + d as u64 - 1, d as u64),
    )?;
    let mut out: Vec<Monomial> = crate::isotone::weakly_increasing(d as usize, 1, m as u32)
        .iter()
        .map(|f| Monomial::from_factors(f).expect("positive factors"))
        .collect();
    out.sort();
    Ok(out)
}

/// Grading context of a [`MultiDegree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GradingContext {
    /// `Δ_{m+1}(n)`: length `m+1`, coordinate sum `n`.
    Delta { m: usize, n: usize },
    /// `ℕ₀^m` with the convention `d_{m+1} = ∞`.
    FreeGrading { m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiDegree {
    pub coords: Vec<u32>,
    pub context: GradingContext,
}

impl MultiDegree {
    pub fn delta(coords: Vec<u32>, m: usize, n: usize) -> Result<Self> {
        check_delta(&coords, m, n)?;
        Ok(Self {
            coords,
            context: GradingContext::Delta { m, n },
        })
    }

    pub fn free(coords: Vec<u32>) -> Self {
        let m = coords.len();
        Self {
            coords,
            context: GradingContext::FreeGrading { m },
        }
    }
}

pub fn check_delta(coords: &[u32], m: usize, n: usize) -> Result<()> {
    if coords.len() != m + 1 {
        return Err(Error::InvalidInput(format!(
            "degree {coords:?} should have {} coordinates",
            m + 1
        )));
    }
    let sum: u32 = coords.iter().sum();
    if sum as usize != n {
        return Err(Error::InvalidInput(format!(
            "degree {coords:?} sums to {sum}, expected {n}"
        )));
    }
    Ok(())
}

/// All of `Δ_{m+1}(n)`, in lex order of coordinates.
pub fn delta_elements(m: usize, n: usize) -> Result<Vec<Vec<u32>>> {
    limits::check("Δ enumeration", limits::binomial((m + n) as u64, m as u64))?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m + 1);
    fn rec(slots: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(slots - 1, left - v, cur, out);
            cur.pop();
        }
    }
    rec(m + 1, n as u32, &mut cur, &mut out);
    Ok(out)
}

/// The bijection `Δ_{m+1}(n) → Δ_{n+1}(m)`: partial sums give a box map
/// `g ∈ Hom([m],[n+1])`, then Λ of its dual `Dg ∈ Hom([n],[m+1])`.
pub fn degree_map(d: &[u32], m: usize, n: usize) -> Result<Vec<u32>> {
    check_delta(d, m, n)?;
    let g = lambda_box_inv(d);
    let h = FiniteBox { m, n }.dual(&g);
    Ok(lambda_box(&h, m))
}
