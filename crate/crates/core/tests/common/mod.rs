//! Seeded random complexes and brute-force oracles shared by the suites.

#![allow(dead_code)]

use golodscope_core::{Face, Graph, SimplicialComplex, VertexSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use std::ops::{Range, RangeInclusive};

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|k| format!("v{k}")).collect()
}

/// A complex on a vertex count drawn from `n`: a number of random sets drawn
/// from `facets`, of size `1..=max_size`, plus singletons for vertices left out.
pub fn random_complex<R: Rng>(
    rng: &mut R,
    n: RangeInclusive<usize>,
    facets: RangeInclusive<usize>,
    max_size: usize,
) -> SimplicialComplex {
    let n = rng.gen_range(n);
    let facets = rng.gen_range(facets);
    let mut out: Vec<Face> = (0..facets)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n));
            Face::new(rand::seq::index::sample(rng, n, size).into_iter())
        })
        .collect();
    for v in 0..n {
        if !out.iter().any(|f| f.contains(v)) {
            out.push(Face::new([v]));
        }
    }
    SimplicialComplex::from_index_facets(labels(n), out).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: RangeInclusive<usize>, density: Range<f64>) -> SimplicialComplex {
    let n = rng.gen_range(n);
    let density = rng.gen_range(density);
    let mut facets: Vec<Face> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                facets.push(Face::new([u, v]));
            }
        }
    }
    for v in 0..n {
        if !facets.iter().any(|f| f.contains(v)) {
            facets.push(Face::new([v]));
        }
    }
    SimplicialComplex::from_index_facets(labels(n), facets).unwrap()
}

/// Chordality by definition: no induced cycle of length ≥ 4, searched over
/// every vertex subset and every cyclic order of it.
pub fn chordal_by_brute_force(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u64..1 << n {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if verts.len() < 4 {
            continue;
        }
        // an induced cycle: every vertex has exactly two neighbours inside, connected
        let s: VertexSet = verts.iter().copied().collect();
        let two_regular = verts.iter().all(|&v| g.neighbors(v).intersection(&s).len() == 2);
        if two_regular && g.is_connected_on(&s) {
            return false;
        }
    }
    true
}

/// All unordered pairs of disjoint nonempty subsets of `0..n`.
pub fn all_pairs(n: usize) -> Vec<(VertexSet, VertexSet)> {
    let mut out = Vec::new();
    for mask in 1u64..1 << n {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            if sub != rest {
                let left = low | sub;
                out.push((VertexSet::from_mask(left), VertexSet::from_mask(mask ^ left)));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    out
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    // Laplace expansion; fine for the tiny matrices used here
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut acc = BigInt::zero();
    for (c, x) in m[0].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, v)| v.clone()).collect()).collect();
        let term = x * determinant(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Elementary divisors from determinantal divisors: `d_k = g_k / g_{k-1}` with
/// `g_k` the gcd of all `k × k` minors.
pub fn divisors_by_minors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=m.min(n) {
        let mut g = BigInt::zero();
        for rs in combinations(m, k) {
            for cs in combinations(n, k) {
                let sub: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(rows[r][c])).collect()).collect();
                g = g.gcd(&determinant(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}
