//! Fixed inputs shared by the benchmarks.

use std::collections::BTreeSet;

use golodscope_core::{golod_in_primes, mobius_with_two_discs, subdivided_projective_plane, SimplicialComplex};

/// The two seven-vertex examples and the construction for `T = {2}`.
pub fn workloads() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("mobius_two_discs", mobius_with_two_discs()),
        ("projective_plane_subdivided", subdivided_projective_plane()),
        ("delta_2", golod_in_primes(&BTreeSet::from([2])).expect("2 is prime")),
    ]
}
