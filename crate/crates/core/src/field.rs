//! Coefficient fields: a prime field of configurable characteristic and the
//! rationals. All arithmetic is exact.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 32003;

/// Environment variable that overrides [`DEFAULT_PRIME`].
pub const PRIME_ENV_VAR: &str = "BOREL_PRIME";

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn describe(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::InvalidInput(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Self { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut base = *a;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(acc)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let n = self.parse(num)?;
            let d = self.parse(den)?;
            let inv = self
                .inv(&d)
                .ok_or_else(|| Error::Parse(format!("zero denominator in {s:?}")))?;
            return Ok(self.mul(&n, &inv));
        }
        let v: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        Ok(self.reduce(v))
    }
    fn format(&self, a: &u64) -> String {
        // symmetric representative reads better for signs
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn describe(&self) -> String {
        format!("prime:{}", self.p)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(
                BigInt::from_str(s).map_err(|_| bad())?,
            ))
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn describe(&self) -> String {
        "rational".to_string()
    }
}

/// Field selection as given on the command line: `prime:<p>` or `rational`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldConfig {
    Prime(u64),
    Rational,
}

impl FieldConfig {
    /// The default prime field, honouring [`PRIME_ENV_VAR`].
    pub fn default_prime() -> Result<Self> {
        match std::env::var(PRIME_ENV_VAR) {
            Ok(v) => {
                let p: u64 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{PRIME_ENV_VAR}={v:?}")))?;
                PrimeField::new(p)?;
                Ok(FieldConfig::Prime(p))
            }
            Err(_) => Ok(FieldConfig::Prime(DEFAULT_PRIME)),
        }
    }
}

impl FromStr for FieldConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" || s == "Q" {
            return Ok(FieldConfig::Rational);
        }
        if s == "prime" {
            return FieldConfig::default_prime();
        }
        let p = s
            .strip_prefix("prime:")
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
        PrimeField::new(p)?;
        Ok(FieldConfig::Prime(p))
    }
}

impl std::fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldConfig::Prime(p) => write!(f, "prime:{p}"),
            FieldConfig::Rational => write!(f, "rational"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_inverse() {
        let f = PrimeField::default();
        for a in [1u64, 2, 3, 12345, 32002] {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rejects_composite() {
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert_eq!(f.format(&6), "-1");
        assert_eq!(f.parse("1/2").unwrap(), 4);

        let q = RationalField;
        let x = q.parse("-3/6").unwrap();
        assert_eq!(q.format(&x), "-1/2");
        assert_eq!(q.format(&q.from_i64(4)), "4");
    }

    #[test]
    fn field_config_parsing() {
        assert_eq!(
            "prime:32003".parse::<FieldConfig>().unwrap(),
            FieldConfig::Prime(32003)
        );
        assert_eq!(
            "rational".parse::<FieldConfig>().unwrap(),
            FieldConfig::Rational
        );
        assert!("prime:4".parse::<FieldConfig>().is_err());
        assert!("real".parse::<FieldConfig>().is_err());
    }
}
