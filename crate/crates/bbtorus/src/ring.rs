//! Coefficient ring selection.
//!
//! Every computation in this crate is parameterized by a [`RingSpec`]: the
//! integers, the rationals, a prime field, or the integers with a finite set
//! of primes inverted. These are exactly the principal ideal domains and
//! fields for which the homological invariants here are fully decidable.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("unknown ring `{0}` (expected z, q, f<p>, or z-inv:p1,p2,...)")]
    UnknownRing(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("a field is required here, but the ring is {0}")]
    FieldRequired(String),
}

/// Selector for the coefficient ring of a computation.
///
/// `IntegersInverted(S)` denotes the subring of the rationals generated by
/// the inverses of the primes in `S`; with `S` empty it is the same ring as
/// `Integers`, and the constructors normalize that case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Integers,
    Rationals,
    PrimeField(u64),
    IntegersInverted(BTreeSet<u64>),
}

impl RingSpec {
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if is_prime(p) {
            Ok(RingSpec::PrimeField(p))
        } else {
            Err(RingError::NotPrime(p))
        }
    }

    pub fn integers_inverted<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self, RingError> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        for &p in &set {
            if !is_prime(p) {
                return Err(RingError::NotPrime(p));
            }
        }
        if set.is_empty() {
            Ok(RingSpec::Integers)
        } else {
            Ok(RingSpec::IntegersInverted(set))
        }
    }

    /// Parses the command-line ring syntax: `z`, `q`, `f2`, `f3`, ...,
    /// `z-inv:2,3`.
    pub fn parse(text: &str) -> Result<Self, RingError> {
        let t = text.trim();
        match t {
            "z" | "Z" => return Ok(RingSpec::Integers),
            "q" | "Q" => return Ok(RingSpec::Rationals),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix('f').or_else(|| t.strip_prefix('F')) {
            let p: u64 = rest
                .parse()
                .map_err(|_| RingError::UnknownRing(t.to_string()))?;
            return RingSpec::prime_field(p);
        }
        if let Some(rest) = t
            .strip_prefix("z-inv:")
            .or_else(|| t.strip_prefix("Z-inv:"))
        {
            let mut primes = Vec::new();
            for part in rest.split(',').filter(|s| !s.is_empty()) {
                let p: u64 = part
                    .trim()
                    .parse()
                    .map_err(|_| RingError::UnknownRing(t.to_string()))?;
                primes.push(p);
            }
            return RingSpec::integers_inverted(primes);
        }
        Err(RingError::UnknownRing(t.to_string()))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::PrimeField(_))
    }

    pub fn require_field(&self) -> Result<(), RingError> {
        if self.is_field() {
            Ok(())
        } else {
            Err(RingError::FieldRequired(self.to_string()))
        }
    }

    /// The primes inverted in this ring (empty unless `IntegersInverted`).
    pub fn inverted_primes(&self) -> BTreeSet<u64> {
        match self {
            RingSpec::IntegersInverted(s) => s.clone(),
            _ => BTreeSet::new(),
        }
    }

    /// Token accepted back by [`RingSpec::parse`].
    pub fn token(&self) -> String {
        match self {
            RingSpec::Integers => "z".to_string(),
            RingSpec::Rationals => "q".to_string(),
            RingSpec::PrimeField(p) => format!("f{p}"),
            RingSpec::IntegersInverted(s) => {
                let list: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                format!("z-inv:{}", list.join(","))
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::PrimeField(p) => write!(f, "F_{p}"),
            RingSpec::IntegersInverted(s) => {
                let list: Vec<String> = s.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", list.join(","))
            }
        }
    }
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_tokens() {
        assert_eq!(RingSpec::parse("z").unwrap(), RingSpec::Integers);
        assert_eq!(RingSpec::parse("q").unwrap(), RingSpec::Rationals);
        assert_eq!(RingSpec::parse("f2").unwrap(), RingSpec::PrimeField(2));
        assert_eq!(RingSpec::parse("f101").unwrap(), RingSpec::PrimeField(101));
        let s = RingSpec::parse("z-inv:2,3").unwrap();
        assert_eq!(s, RingSpec::integers_inverted([2, 3]).unwrap());
    }

    #[test]
    fn parse_rejects_nonsense() {
        assert!(RingSpec::parse("f4").is_err());
        assert!(RingSpec::parse("gf2").is_err());
        assert!(RingSpec::parse("z-inv:6").is_err());
        assert!(RingSpec::parse("").is_err());
    }

    #[test]
    fn empty_inversion_set_is_the_integers() {
        assert_eq!(
            RingSpec::integers_inverted(std::iter::empty()).unwrap(),
            RingSpec::Integers
        );
        assert_eq!(RingSpec::parse("z-inv:").unwrap(), RingSpec::Integers);
    }

    #[test]
    fn token_round_trip() {
        for spec in [
            RingSpec::Integers,
            RingSpec::Rationals,
            RingSpec::PrimeField(7),
            RingSpec::integers_inverted([2, 5]).unwrap(),
        ] {
            assert_eq!(RingSpec::parse(&spec.token()).unwrap(), spec);
        }
    }

    #[test]
    fn field_check() {
        assert!(RingSpec::Rationals.require_field().is_ok());
        assert!(RingSpec::PrimeField(3).require_field().is_ok());
        assert!(RingSpec::Integers.require_field().is_err());
        assert!(RingSpec::integers_inverted([2])
            .unwrap()
            .require_field()
            .is_err());
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 7, 11, 97, 101, 7919];
        for p in primes {
            assert!(is_prime(p), "{p}");
        }
        for c in [0u64, 1, 4, 9, 91, 1001, 7917] {
            assert!(!is_prime(c), "{c}");
        }
    }
}
