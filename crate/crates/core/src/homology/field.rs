use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Largest supported characteristic (exclusive): residues stay below `2^61`.
pub const MAX_PRIME: u64 = 1 << 61;

/// Coefficient field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Self::Rationals => 0,
            Self::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "q"),
            Self::PrimeField(p) => write!(f, "f{p}"),
        }
    }
}

/// Parses `q` or `f<p>` with `p` prime.
impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(Self::Rationals);
        }
        let digits = t
            .strip_prefix('f')
            .ok_or_else(|| format!("unsupported field `{s}`: expected `q` or `f<prime>`"))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| format!("unsupported field `{s}`: expected `q` or `f<prime>`"))?;
        Self::prime(p).map_err(|e| format!("unsupported field `{s}`: {e}"))
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = String;
    fn try_from(s: String) -> std::result::Result<Self, String> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}
