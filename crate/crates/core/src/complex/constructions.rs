//! Named complexes: the characteristic-sensitive families built from a disc
//! glued `N` times around a triangle, and two small seven-vertex examples.

use std::collections::BTreeSet;

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::primes::is_prime;

const BASE_TRIANGLES: [[&str; 3]; 5] = [
    ["1", "2", "4"],
    ["2", "3", "5"],
    ["3", "4", "1"],
    ["4", "5", "2"],
    ["5", "1", "3"],
];
const SEVEN_LABELS: [&str; 7] = ["1", "2", "3", "4", "5", "a", "b"];

/// A Möbius strip on `1..5` with two discs (apexes `a`, `b`) glued along its
/// boundary. Over a field it has a nonzero Koszul product unless the
/// characteristic is 2.
pub fn mobius_with_two_discs() -> SimplicialComplex {
    let mut facets: Vec<Vec<&str>> = BASE_TRIANGLES.iter().map(|t| t.to_vec()).collect();
    for apex in ["a", "b"] {
        for k in 1..=5 {
            facets.push(vec![SEVEN_LABELS[k - 1], SEVEN_LABELS[k % 5], apex]);
        }
    }
    SimplicialComplex::from_facets(SEVEN_LABELS, facets).expect("fixed facet list is valid")
}

/// The six-vertex real projective plane with the triangle `5 1 a` subdivided
/// by a new vertex `b`.
pub fn subdivided_projective_plane() -> SimplicialComplex {
    let mut facets: Vec<Vec<&str>> = BASE_TRIANGLES.iter().map(|t| t.to_vec()).collect();
    for k in 1..=4 {
        facets.push(vec![SEVEN_LABELS[k - 1], SEVEN_LABELS[k], "a"]);
    }
    facets.extend([vec!["5", "1", "b"], vec!["1", "a", "b"], vec!["a", "5", "b"]]);
    SimplicialComplex::from_facets(SEVEN_LABELS, facets).expect("fixed facet list is valid")
}

fn middle(prefix: &str, k: usize) -> String {
    format!("{prefix}{k}")
}

/// Triangles of one disc glued `n` times around the triangle `1 2 3`, using
/// middle-row labels `{prefix}0 .. {prefix}(3n-1)` and the given apex.
fn disc_triangles(n: usize, prefix: &str, apex: &str) -> Vec<[String; 3]> {
    let len = 3 * n;
    let bottom = |k: usize| (1 + k % 3).to_string();
    let mut out = Vec::with_capacity(9 * n);
    for k in 0..len {
        let (m, m_next) = (middle(prefix, k), middle(prefix, (k + 1) % len));
        out.push([bottom(k), bottom(k + 1), m.clone()]);
        out.push([m.clone(), bottom(k + 1), m_next.clone()]);
        out.push([m, m_next, apex.to_string()]);
    }
    out
}

fn disc_labels(n: usize, prefix: &str, apex: &str) -> Vec<String> {
    (0..3 * n)
        .map(|k| middle(prefix, k))
        .chain(std::iter::once(apex.to_string()))
        .collect()
}

/// The disc glued `n` times around the cycle `1 2 3`: a bottom strip of `6n`
/// triangles winding `n` times around the cycle, a middle cycle `m0 .. m(3n-1)`
/// and a cone with apex `a` over it. Integrally `H̃_1 = Z/n` and `H̃_2 = 0`.
pub fn glued_disc(n: usize) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(Error::InvalidParameter);
    }
    let labels: Vec<String> = ["1", "2", "3"]
        .iter()
        .map(|s| s.to_string())
        .chain(disc_labels(n, "m", "a"))
        .collect();
    SimplicialComplex::from_facets(&labels, disc_triangles(n, "m", "a"))
}

fn prime_product(primes: &BTreeSet<u64>) -> Result<usize> {
    if primes.is_empty() {
        return Err(Error::EmptyPrimeSet);
    }
    let mut n = 1usize;
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        n = n.checked_mul(p as usize).ok_or(Error::InvalidParameter)?;
    }
    Ok(n)
}

fn with_all_edges_except(
    complex: &SimplicialComplex,
    skip: impl Fn(usize, usize) -> bool,
) -> SimplicialComplex {
    let n = complex.n_vertices();
    let edges: Vec<Face> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !skip(u, v))
        .map(|(u, v)| Face::from([u, v]))
        .collect();
    complex.with_faces(&edges).expect("edges use existing vertices")
}

/// Two copies of [`glued_disc`] for `N = ∏ primes`, glued along `1 2 3`
/// (second copy: middle row `m'k`, apex `b`), plus every edge except `{a, b}`.
/// Its Koszul product is trivial exactly in the characteristics in `primes`.
pub fn golod_in_primes(primes: &BTreeSet<u64>) -> Result<SimplicialComplex> {
    let n = prime_product(primes)?;
    let labels: Vec<String> = ["1", "2", "3"]
        .iter()
        .map(|s| s.to_string())
        .chain(disc_labels(n, "m", "a"))
        .chain(disc_labels(n, "m'", "b"))
        .collect();
    let mut facets = disc_triangles(n, "m", "a");
    facets.extend(disc_triangles(n, "m'", "b"));
    let two = SimplicialComplex::from_facets(&labels, facets)?;
    let (a, b) = (two.index_of("a").unwrap(), two.index_of("b").unwrap());
    Ok(with_all_edges_except(&two, |u, v| (u, v) == (a.min(b), a.max(b))))
}

/// [`glued_disc`] for `N = ∏ primes` plus every edge not containing `a`.
/// Its Koszul product is trivial exactly in the characteristics outside
/// `primes`.
pub fn golod_outside_primes(primes: &BTreeSet<u64>) -> Result<SimplicialComplex> {
    let n = prime_product(primes)?;
    let disc = glued_disc(n)?;
    let a = disc.index_of("a").unwrap();
    Ok(with_all_edges_except(&disc, |u, v| u == a || v == a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glued_disc_counts() {
        for n in 1..=6 {
            let d = glued_disc(n).unwrap();
            assert_eq!(d.n_vertices(), 3 * n + 4);
            assert_eq!(d.faces_of_dim(2).len(), 9 * n);
            assert_eq!(d.dim(), 2);
        }
        assert_eq!(glued_disc(0).unwrap_err(), Error::InvalidParameter);
    }

    #[test]
    fn glued_disc_labels_follow_the_documented_embedding() {
        let d = glued_disc(2).unwrap();
        let has = |t: [&str; 3]| d.contains_face(&Face::new(d.vertex_set(&t).unwrap().iter()));
        assert!(has(["1", "2", "m0"]));
        assert!(has(["m0", "2", "m1"]));
        assert!(has(["m0", "m1", "a"]));
        assert!(has(["3", "1", "m5"]));
        assert!(has(["m5", "m0", "1"]));
        assert!(has(["m5", "m0", "a"]));
    }

    #[test]
    fn characteristic_families_sizes() {
        let t: BTreeSet<u64> = [2].into();
        let delta = golod_in_primes(&t).unwrap();
        assert_eq!(delta.n_vertices(), 17);
        assert_eq!(delta.faces_of_dim(2).len(), 36);
        assert_eq!(delta.faces_of_dim(1).len(), 17 * 16 / 2 - 1);
        let gamma = golod_outside_primes(&t).unwrap();
        assert_eq!(gamma.n_vertices(), 10);
        let a = gamma.index_of("a").unwrap();
        let a_edges = gamma.faces_of_dim(1).iter().filter(|e| e.contains(a)).count();
        assert_eq!(a_edges, 6);
        assert_eq!(gamma.faces_of_dim(1).len(), 9 * 8 / 2 + 6);
    }

    #[test]
    fn prime_set_validation() {
        assert_eq!(golod_in_primes(&BTreeSet::new()).unwrap_err(), Error::EmptyPrimeSet);
        assert_eq!(golod_in_primes(&[4].into()).unwrap_err(), Error::NotPrime(4));
        assert_eq!(golod_outside_primes(&[1].into()).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn seven_vertex_examples() {
        let x = mobius_with_two_discs();
        assert_eq!((x.n_vertices(), x.facets().len()), (7, 15));
        let y = subdivided_projective_plane();
        assert_eq!((y.n_vertices(), y.facets().len()), (7, 12));
    }
}
