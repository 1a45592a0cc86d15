//! Isotone maps ℕ → ℕ ∪ {∞} with finite encodings, the duality `D`, and
//! the finite boxes `Hom([m], [n+1])` used for exhaustive checks.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;

/// A positive integer or ∞. The derived order puts `Inf` above every `Fin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        self == ExtNat::Inf
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tail {
    Const(u32),
    Infinity,
}

impl Tail {
    pub fn value(self) -> ExtNat {
        match self {
            Tail::Const(c) => ExtNat::Fin(c),
            Tail::Infinity => ExtNat::Inf,
        }
    }

    fn from_value(v: ExtNat) -> Tail {
        match v {
            ExtNat::Fin(c) => Tail::Const(c),
            ExtNat::Inf => Tail::Infinity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    AllOfN,
    Interval(usize),
}

/// Which of the two representable classes a conversion should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapClass {
    Small,
    Large,
}

/// A weakly increasing map, stored as a finite prefix plus a tail.
///
/// Maps on `AllOfN` are kept canonical: the prefix never ends in an entry
/// equal to the tail value, so structural equality is equality of maps.
/// Maps on `Interval(m)` carry exactly `m` prefix entries and ignore the tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsotoneMap {
    prefix: Vec<ExtNat>,
    tail: Tail,
    domain: Domain,
}

impl IsotoneMap {
    pub fn new(prefix: Vec<ExtNat>, tail: Tail) -> Result<Self> {
        if let Tail::Const(0) = tail {
            return Err(Error::InvalidInput("tail value must be positive".into()));
        }
        check_isotone(&prefix)?;
        if let Some(&last) = prefix.last() {
            if last > tail.value() {
                return Err(Error::InvalidInput(format!(
                    "prefix entry {last} exceeds the tail {}",
                    tail.value()
                )));
            }
        }
        let mut map = Self {
            prefix,
            tail,
            domain: Domain::AllOfN,
        };
        map.canonicalize();
        Ok(map)
    }

    pub fn small(prefix: &[u32], c: u32) -> Result<Self> {
        Self::new(
            prefix.iter().map(|&v| ExtNat::Fin(v)).collect(),
            Tail::Const(c),
        )
    }

    pub fn large(prefix: &[u32]) -> Result<Self> {
        Self::new(
            prefix.iter().map(|&v| ExtNat::Fin(v)).collect(),
            Tail::Infinity,
        )
    }

    /// A map on the finite interval `[m]`, `m = values.len()`.
    pub fn interval(values: Vec<ExtNat>) -> Result<Self> {
        check_isotone(&values)?;
        Ok(Self {
            domain: Domain::Interval(values.len()),
            prefix: values,
            tail: Tail::Infinity,
        })
    }

    fn canonicalize(&mut self) {
        if self.domain != Domain::AllOfN {
            return;
        }
        let t = self.tail.value();
        while self.prefix.last() == Some(&t) {
            self.prefix.pop();
        }
    }

    pub fn prefix(&self) -> &[ExtNat] {
        &self.prefix
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_small(&self) -> bool {
        self.domain == Domain::AllOfN && matches!(self.tail, Tail::Const(_))
    }

    pub fn is_large(&self) -> bool {
        self.domain == Domain::AllOfN && self.tail == Tail::Infinity
    }

    /// Value at `i ≥ 1`. For interval maps, positions past `m` read as ∞.
    pub fn value(&self, i: usize) -> ExtNat {
        debug_assert!(i >= 1);
        match self.prefix.get(i - 1) {
            Some(&v) => v,
            None => self.tail.value(),
        }
    }

    /// Finite prefix values when none is ∞.
    pub fn finite_prefix(&self) -> Option<Vec<u32>> {
        self.prefix.iter().map(|v| v.finite()).collect()
    }

    /// The duality `Df(j) = min { i : f(i) > j }`.
    ///
    /// Interval maps are read through their large extension (∞ past `m`).
    pub fn dual(&self) -> IsotoneMap {
        match self.tail {
            Tail::Const(c) if self.domain == Domain::AllOfN => {
                // f(len+1) = c, so every j < c finds its i within len+1
                let prefix = (1..c)
                    .map(|j| ExtNat::Fin(self.first_above(j, self.prefix.len() + 1) as u32))
                    .collect();
                IsotoneMap::new(prefix, Tail::Infinity).expect("dual of a small map is isotone")
            }
            _ => {
                let k = self
                    .prefix
                    .iter()
                    .position(|v| v.is_inf())
                    .unwrap_or(self.prefix.len())
                    + 1;
                let top = self
                    .prefix
                    .iter()
                    .filter_map(|v| v.finite())
                    .max()
                    .unwrap_or(0);
                let prefix = (1..=top)
                    .map(|j| ExtNat::Fin(self.first_above(j, k) as u32))
                    .collect();
                IsotoneMap::new(prefix, Tail::Const(k as u32))
                    .expect("dual of a large map is isotone")
            }
        }
    }

    fn first_above(&self, j: u32, bound: usize) -> usize {
        (1..=bound)
            .find(|&i| self.value(i) > ExtNat::Fin(j))
            .unwrap_or(bound)
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(format!(
                "{:?} vs {:?}",
                self.domain, other.domain
            )));
        }
        Ok(())
    }

    /// Positions that decide any pointwise comparison with `other`.
    fn span(&self, other: &Self) -> usize {
        match self.domain {
            Domain::Interval(m) => m,
            Domain::AllOfN => self.prefix.len().max(other.prefix.len()) + 1,
        }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_domain(other)?;
        Ok((1..=self.span(other)).all(|i| self.value(i) <= other.value(i)))
    }

    pub fn lex_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_domain(other)?;
        for i in 1..=self.span(other) {
            match self.value(i).cmp(&other.value(i)) {
                Ordering::Equal => {}
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }

    fn pointwise(&self, other: &Self, pick: fn(ExtNat, ExtNat) -> ExtNat) -> Result<Self> {
        self.check_domain(other)?;
        match self.domain {
            Domain::Interval(m) => IsotoneMap::interval(
                (1..=m)
                    .map(|i| pick(self.value(i), other.value(i)))
                    .collect(),
            ),
            Domain::AllOfN => {
                let len = self.prefix.len().max(other.prefix.len());
                let prefix = (1..=len)
                    .map(|i| pick(self.value(i), other.value(i)))
                    .collect();
                let tail = Tail::from_value(pick(self.tail.value(), other.tail.value()));
                IsotoneMap::new(prefix, tail)
            }
        }
    }

    /// Pointwise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, std::cmp::min)
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, std::cmp::max)
    }
}

fn check_isotone(values: &[ExtNat]) -> Result<()> {
    if values.contains(&ExtNat::Fin(0)) {
        return Err(Error::InvalidInput("map values must be positive".into()));
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput(format!(
            "values {} are not weakly increasing",
            join_values(values)
        )));
    }
    Ok(())
}

fn join_values(values: &[ExtNat]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for IsotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.domain, self.tail) {
            (Domain::Interval(_), _) => write!(f, "[{}]", join_values(&self.prefix)),
            (_, Tail::Infinity) => write!(f, "[{}|inf]", join_values(&self.prefix)),
            (_, Tail::Const(c)) => write!(f, "[{}|{c}]", join_values(&self.prefix)),
        }
    }
}

fn parse_ext(s: &str) -> Result<ExtNat> {
    let s = s.trim();
    if s == "inf" || s == "∞" {
        return Ok(ExtNat::Inf);
    }
    s.parse::<u32>()
        .map(ExtNat::Fin)
        .map_err(|_| Error::Parse(format!("bad map value {s:?}")))
}

impl FromStr for IsotoneMap {
    type Err = Error;

    /// `[v1,...|inf]`, `[v1,...|c]`, or `[v1,...]` for an interval map.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("isotone map {s:?} must be bracketed")))?;
        let (head, tail) = match body.split_once('|') {
            Some((h, t)) => (h, Some(t)),
            None => (body, None),
        };
        let prefix = if head.trim().is_empty() {
            Vec::new()
        } else {
            head.split(',').map(parse_ext).collect::<Result<Vec<_>>>()?
        };
        match tail {
            None => IsotoneMap::interval(prefix),
            Some(t) => IsotoneMap::new(prefix, Tail::from_value(parse_ext(t)?)),
        }
    }
}

/// Converts a finite partial map on `[m]` with `f(m) = n` to the small map
/// `f_S` (equal to `f` below `m`, then constant `n+1`) or the large map `f^L`
/// (equal to `f` on `[m]`, then ∞). `f_S` covers `f^L` in the lex order.
pub fn small_large_convert(values: &[ExtNat], target: MapClass) -> Result<IsotoneMap> {
    let vals: Vec<u32> = values
        .iter()
        .map(|v| {
            v.finite()
                .ok_or_else(|| Error::InvalidInput("partial map has an infinite value".into()))
        })
        .collect::<Result<_>>()?;
    let Some(&n) = vals.last() else {
        return Err(Error::InvalidInput("partial map must be nonempty".into()));
    };
    match target {
        MapClass::Small => IsotoneMap::small(&vals[..vals.len() - 1], n + 1),
        MapClass::Large => IsotoneMap::large(&vals),
    }
}

/// North-east step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    N,
    E,
}

/// Encodes `f : [m] → ℕ` as the NE path from `(1,1)` to `(m, f(m))` on
/// which `f(i)` is the highest point in column `i`.
pub fn ne_encode(values: &[u32]) -> Result<Vec<Step>> {
    let ext: Vec<ExtNat> = values.iter().map(|&v| ExtNat::Fin(v)).collect();
    check_isotone(&ext)?;
    let mut word = Vec::new();
    let mut height = 1;
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            word.push(Step::E);
        }
        word.extend(std::iter::repeat_n(Step::N, (v - height) as usize));
        height = v;
    }
    Ok(word)
}

pub fn ne_decode(word: &[Step]) -> Vec<u32> {
    let mut values = vec![1];
    for step in word {
        match step {
            Step::N => *values.last_mut().expect("nonempty") += 1,
            Step::E => {
                let h = *values.last().expect("nonempty");
                values.push(h);
            }
        }
    }
    values
}

pub fn ne_word_to_string(word: &[Step]) -> String {
    word.iter()
        .map(|s| match s {
            Step::N => 'N',
            Step::E => 'E',
        })
        .collect()
}

pub fn ne_word_from_str(s: &str) -> Result<Vec<Step>> {
    s.trim()
        .chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            other => Err(Error::Parse(format!("bad path step {other:?}"))),
        })
        .collect()
}

/// The finite poset `Hom([m], [n+1])`; the top value `n+1` stands for ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteBox {
    pub m: usize,
    pub n: usize,
}

impl FiniteBox {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput(
                "box dimensions must be positive".into(),
            ));
        }
        Ok(Self { m, n })
    }

    pub fn cardinality(&self) -> u128 {
        limits::binomial((self.m + self.n) as u64, self.m as u64)
    }

    /// All weakly increasing maps `[m] → [n+1]`, in lex order.
    pub fn enumerate(&self) -> Result<Vec<Vec<u32>>> {
        limits::check("box enumeration", self.cardinality())?;
        Ok(weakly_increasing(self.m, 1, self.n as u32 + 1))
    }

    /// The large map on ℕ obtained by reading `n+1` as ∞.
    pub fn embed_large(&self, values: &[u32]) -> IsotoneMap {
        let top = self.n as u32 + 1;
        let prefix = values
            .iter()
            .map(|&v| {
                if v >= top {
                    ExtNat::Inf
                } else {
                    ExtNat::Fin(v)
                }
            })
            .collect();
        IsotoneMap::new(prefix, Tail::Infinity).expect("box maps are isotone")
    }

    /// The dual box `Hom([n], [m+1])`.
    pub fn transposed(&self) -> FiniteBox {
        FiniteBox {
            m: self.n,
            n: self.m,
        }
    }

    /// `D(f)(j) = min { i ∈ [m] : f(i) > j }`, or `m+1`, for `j ∈ [n]`.
    pub fn dual(&self, values: &[u32]) -> Vec<u32> {
        (1..=self.n as u32)
            .map(|j| {
                values
                    .iter()
                    .position(|&v| v > j)
                    .map_or(self.m as u32 + 1, |i| i as u32 + 1)
            })
            .collect()
    }
}

/// All weakly increasing sequences of length `len` with entries in `lo..=hi`.
pub fn weakly_increasing(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(len, v, hi, cur, out);
            cur.pop();
        }
    }
    rec(len, lo, hi, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> IsotoneMap {
        s.parse().unwrap()
    }

    #[test]
    fn dual_of_example_map() {
        let d = m("[2,2,4,5,5,7|inf]").dual();
        assert_eq!(d, m("[1,3,3,4,6,6|7]"));
        assert_eq!(d.dual(), m("[2,2,4,5,5,7|inf]"));
    }

    #[test]
    fn dual_of_all_infinite_is_constant_one() {
        let d = m("[|inf]").dual();
        assert_eq!(d, IsotoneMap::small(&[], 1).unwrap());
        assert_eq!(d, m("[1|1]"));
        assert_eq!(d.dual(), m("[|inf]"));
    }

    #[test]
    fn dual_of_short_large_map() {
        assert_eq!(m("[2,3|inf]").dual(), m("[1,2|3]"));
    }

    #[test]
    fn canonical_trim() {
        assert_eq!(m("[2,2,4,4|4]").prefix().len(), 2);
        assert_eq!(m("[1,inf|inf]"), m("[1|inf]"));
    }

    #[test]
    fn rejects_bad_maps() {
        assert!("[3,2|inf]".parse::<IsotoneMap>().is_err());
        assert!("[2,5|4]".parse::<IsotoneMap>().is_err());
        assert!("[0|inf]".parse::<IsotoneMap>().is_err());
        assert!("2,3".parse::<IsotoneMap>().is_err());
    }

    #[test]
    fn leq_examples() {
        assert!(m("[1,2|inf]").leq(&m("[1,3|inf]")).unwrap());
        assert!(!m("[2|2]").leq(&m("[1|3]")).unwrap());
        let (f, g) = (m("[1,1|inf]"), m("[1,2|inf]"));
        assert!(f.leq(&g).unwrap());
        assert!(g.dual().leq(&f.dual()).unwrap());
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let a = m("[1,2]");
        let b = m("[1,2|inf]");
        assert!(matches!(a.leq(&b), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn lex_examples() {
        assert_eq!(
            m("[2,3|inf]").lex_cmp(&m("[2,2|2]")).unwrap(),
            Ordering::Greater
        );
        let f = m("[1,4|5]");
        assert_eq!(f.lex_cmp(&f).unwrap(), Ordering::Equal);
    }

    #[test]
    fn meet_examples() {
        assert_eq!(
            m("[1,1,2,3|inf]").meet(&m("[1,2,2,2,3|inf]")).unwrap(),
            m("[1,1,2,2,3|inf]")
        );
        assert_eq!(m("[2|2]").meet(&m("[1|inf]")).unwrap(), m("[1|2]"));
    }

    #[test]
    fn small_large_of_partial_maps() {
        let f = [ExtNat::Fin(2), ExtNat::Fin(3)];
        let s = small_large_convert(&f, MapClass::Small).unwrap();
        let l = small_large_convert(&f, MapClass::Large).unwrap();
        assert_eq!(s, m("[2|4]"));
        assert_eq!(l, m("[2,3|inf]"));
        assert_eq!(s.lex_cmp(&l).unwrap(), Ordering::Greater);
        let one = small_large_convert(&[ExtNat::Fin(1)], MapClass::Small).unwrap();
        assert_eq!(one, m("[|2]"));
        assert!(small_large_convert(&[ExtNat::Inf], MapClass::Small).is_err());
    }

    #[test]
    fn small_covers_large_in_lex_order() {
        // any map strictly between f^L and f_S would show up in a box with
        // one extra row and column
        for (mm, nn) in [(2usize, 3usize), (3, 3), (3, 4)] {
            let bx = FiniteBox::new(mm + 1, nn + 1).unwrap();
            for f in weakly_increasing(mm, 1, nn as u32) {
                let ext: Vec<ExtNat> = f.iter().map(|&v| ExtNat::Fin(v)).collect();
                let s = small_large_convert(&ext, MapClass::Small).unwrap();
                let l = small_large_convert(&ext, MapClass::Large).unwrap();
                for g in bx.enumerate().unwrap() {
                    let g = bx.embed_large(&g);
                    let above_l = g.lex_cmp(&l).unwrap() == Ordering::Greater;
                    let below_s = g.lex_cmp(&s).unwrap() == Ordering::Less;
                    assert!(!(above_l && below_s), "{g} between {l} and {s}");
                }
            }
        }
    }

    #[test]
    fn box_sizes() {
        assert_eq!(
            FiniteBox::new(1, 1).unwrap().enumerate().unwrap(),
            vec![vec![1], vec![2]]
        );
        assert_eq!(FiniteBox::new(2, 2).unwrap().enumerate().unwrap().len(), 6);
        assert_eq!(FiniteBox::new(3, 3).unwrap().enumerate().unwrap().len(), 20);
    }

    #[test]
    fn box_dual_is_an_involution() {
        let bx = FiniteBox::new(3, 4).unwrap();
        for f in bx.enumerate().unwrap() {
            let d = bx.dual(&f);
            assert_eq!(bx.transposed().dual(&d), f);
        }
    }

    #[test]
    fn ne_paths() {
        assert!(ne_encode(&[1]).unwrap().is_empty());
        let w = ne_encode(&[2, 2, 3]).unwrap();
        assert_eq!(ne_word_to_string(&w), "NEEN");
        assert_eq!(ne_decode(&w), vec![2, 2, 3]);
        let fiber = weakly_increasing(3, 1, 3)
            .into_iter()
            .filter(|f| f[2] == 3)
            .count();
        assert_eq!(fiber as u128, limits::binomial(4, 2));
    }

    fn arb_map() -> impl Strategy<Value = IsotoneMap> {
        (
            prop::collection::vec(1u32..6, 0..5),
            prop::option::of(1u32..8),
        )
            .prop_map(|(mut v, tail)| {
                v.sort_unstable();
                match tail {
                    Some(c) => {
                        let c = c.max(*v.last().unwrap_or(&1));
                        IsotoneMap::small(&v, c).unwrap()
                    }
                    None => IsotoneMap::large(&v).unwrap(),
                }
            })
    }

    proptest! {
        #[test]
        fn dual_is_involutive(f in arb_map()) {
            let d = f.dual();
            prop_assert_eq!(d.is_small(), f.is_large());
            prop_assert_eq!(d.dual(), f);
        }

        #[test]
        fn meet_laws(f in arb_map(), g in arb_map(), h in arb_map()) {
            let fg = f.meet(&g).unwrap();
            prop_assert_eq!(&fg, &g.meet(&f).unwrap());
            prop_assert_eq!(f.meet(&f).unwrap(), f.clone());
            prop_assert_eq!(fg.meet(&h).unwrap(), f.meet(&g.meet(&h).unwrap()).unwrap());
            prop_assert!(fg.leq(&f).unwrap() && fg.leq(&g).unwrap());
            if f.leq(&h).unwrap() {
                prop_assert!(fg.leq(&h.meet(&g).unwrap()).unwrap());
            }
        }

        #[test]
        fn text_round_trip(f in arb_map()) {
            prop_assert_eq!(f.to_string().parse::<IsotoneMap>().unwrap(), f);
        }

        #[test]
        fn ne_round_trip(mut v in prop::collection::vec(1u32..9, 1..7)) {
            v.sort_unstable();
            let w = ne_encode(&v).unwrap();
            prop_assert_eq!(ne_decode(&w), v);
        }
    }
}
