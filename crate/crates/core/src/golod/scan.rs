//! Which characteristics change the verdict.
//!
//! Candidates are the primes dividing some elementary divisor of a matrix the
//! verdict depends on, over the triples examined in characteristic 0 and in
//! every small characteristic. Every candidate and every prime up to
//! [`SCAN_SAFETY_BOUND`] is then tested directly.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::homology::{integral_phi_prime_candidates, FieldSpec};
use crate::primes::primes_up_to;

use super::product::{run_scope, PairScope, PairSpec};

/// Primes up to this bound are always tested.
pub const SCAN_SAFETY_BOUND: u64 = 13;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicScan {
    /// Product triviality over `Q`.
    pub rational_verdict: bool,
    pub exceptional_primes: BTreeSet<u64>,
    pub tested_primes: BTreeSet<u64>,
    /// Primes suggested by elementary divisors, always including 2.
    pub candidate_primes: BTreeSet<u64>,
    /// Product triviality over each tested `F_p`.
    pub verdicts: BTreeMap<u64, bool>,
}

pub fn characteristic_scan(complex: &SimplicialComplex) -> Result<CharacteristicScan> {
    let mut triples: BTreeMap<_, PairSpec> = BTreeMap::new();
    let mut collect = |field: FieldSpec| -> Result<bool> {
        let (verdict, examined) = run_scope(complex, field, &PairScope::Pruned, None)?;
        for t in examined {
            triples.insert(t.sort_key(), t);
        }
        Ok(verdict.product_trivial)
    };
    let rational_verdict = collect(FieldSpec::Rationals)?;
    let mut verdicts = BTreeMap::new();
    for p in primes_up_to(SCAN_SAFETY_BOUND) {
        verdicts.insert(p, collect(FieldSpec::prime(p)?)?);
    }
    let per_triple: Vec<BTreeSet<u64>> = triples
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|t| integral_phi_prime_candidates(complex, &t.left, &t.right, t.degree))
        .collect::<Result<_>>()?;
    let mut candidate_primes: BTreeSet<u64> = per_triple.into_iter().flatten().collect();
    candidate_primes.insert(2);
    for &p in &candidate_primes {
        if let std::collections::btree_map::Entry::Vacant(slot) = verdicts.entry(p) {
            let (v, _) = run_scope(complex, FieldSpec::prime(p)?, &PairScope::Pruned, None)?;
            slot.insert(v.product_trivial);
        }
    }
    Ok(CharacteristicScan {
        rational_verdict,
        exceptional_primes: verdicts.iter().filter(|(_, &v)| v != rational_verdict).map(|(&p, _)| p).collect(),
        tested_primes: verdicts.keys().copied().collect(),
        candidate_primes,
        verdicts,
    })
}
