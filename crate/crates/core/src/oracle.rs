//! Brute-force checks that do not rely on the strongly stable order:
//! membership by exhaustive search, degreewise ideal equality, and the
//! complement law for duals inside a finite box.

use std::collections::{BTreeSet, VecDeque};

use crate::duality::dual;
use crate::error::Result;
use crate::ideal::SstIdeal;
use crate::isotone::FiniteBox;
use crate::limits;
use crate::monomial::Monomial;

/// Whether `u` lies in the strongly stable ideal generated by `gens`. Walks
/// down from `u` by dividing out a variable or moving a factor `x_i` to a
/// larger index `x_j` (up to the largest generator variable) and reports
/// whether a generator is reached.
pub fn bfs_member(gens: &[Monomial], u: &Monomial) -> bool {
    let targets: BTreeSet<&Monomial> = gens.iter().collect();
    let top = gens.iter().filter_map(Monomial::max_var).max().unwrap_or(0);
    let min_deg = gens.iter().map(Monomial::degree).min().unwrap_or(u32::MAX);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(w) = queue.pop_front() {
        if targets.contains(&w) {
            return true;
        }
        if w.degree() < min_deg || !seen.insert(w.clone()) {
            continue;
        }
        for &(i, _) in w.pairs() {
            let smaller = w.div(&Monomial::var(i)).expect("x_i divides w");
            queue.push_back(smaller);
            for j in i + 1..=top {
                queue.push_back(w.shift(j, i).expect("x_i divides w"));
            }
        }
    }
    false
}

/// Every monomial in `x_1..x_m` of degree `≤ max_degree` in the strongly
/// stable ideal generated by `gens`, by closing the generators upward under
/// multiplication by a variable and moving a factor `x_j` to `x_i`, `i < j`.
pub fn ideal_up_to(gens: &[Monomial], m: usize, max_degree: u32) -> BTreeSet<Monomial> {
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<Monomial> = gens
        .iter()
        .filter(|g| g.degree() <= max_degree && g.max_var().unwrap_or(0) as usize <= m)
        .cloned()
        .collect();
    while let Some(w) = queue.pop_front() {
        if !seen.insert(w.clone()) {
            continue;
        }
        if w.degree() < max_degree {
            for i in 1..=m as u32 {
                queue.push_back(w.mul(&Monomial::var(i)));
            }
        }
        for &(j, _) in w.pairs() {
            for i in 1..j {
                queue.push_back(w.shift(i, j).expect("x_j divides w"));
            }
        }
    }
    seen
}

/// First monomial in `x_1..x_m` of degree `≤ max_degree` in exactly one of
/// the two ideals.
pub fn degreewise_difference(
    a: &SstIdeal,
    b: &SstIdeal,
    m: usize,
    max_degree: u32,
) -> Result<Option<Monomial>> {
    limits::check(
        "degreewise comparison",
        limits::binomial((m as u32 + max_degree) as u64, m as u64),
    )?;
    let left = ideal_up_to(a.gens(), m, max_degree);
    let right = ideal_up_to(b.gens(), m, max_degree);
    Ok(left.symmetric_difference(&right).min().cloned())
}

/// Inside `Hom([m], [n+1])`: every box map `v` has exactly one of `Γ(v) ∈ I`
/// and `Γ(Dv) ∈ dual(I)`, with the top value read as ∞ on both sides.
/// Returns the first map where this fails. Generators of `I` need at most `m`
/// factors and indices at most `n`.
pub fn duality_complement(ideal: &SstIdeal, m: usize, n: usize) -> Result<Option<Vec<u32>>> {
    complement_law(ideal, &dual(ideal)?, m, n)
}

/// The complement law for a candidate dual `j`.
pub fn complement_law(
    ideal: &SstIdeal,
    j: &SstIdeal,
    m: usize,
    n: usize,
) -> Result<Option<Vec<u32>>> {
    let bx = FiniteBox::new(m, n)?;
    let dual_bx = bx.transposed();
    let gamma = |values: &[u32], top: u32| {
        let f: Vec<u32> = values.iter().copied().filter(|&v| v < top).collect();
        Monomial::from_factors(&f).expect("positive values")
    };
    for v in bx.enumerate()? {
        let in_i = bfs_member(ideal.gens(), &gamma(&v, n as u32 + 1));
        let dv = bx.dual(&v);
        let in_j = bfs_member(j.gens(), &gamma(&dv, dual_bx.n as u32 + 1));
        if in_i == in_j {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// `D ∘ D = id` on every map of the box; returns the number of maps checked
/// or the first failure.
pub fn box_involution(m: usize, n: usize) -> Result<std::result::Result<usize, Vec<u32>>> {
    let bx = FiniteBox::new(m, n)?;
    limits::check("box involution", bx.cardinality())?;
    let maps = bx.enumerate()?;
    for v in &maps {
        if bx.transposed().dual(&bx.dual(v)) != *v {
            return Ok(Err(v.clone()));
        }
    }
    Ok(Ok(maps.len()))
}
