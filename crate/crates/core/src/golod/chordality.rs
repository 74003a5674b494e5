//! Decomposition chordality: every `k`-cycle of every induced subcomplex is a
//! sum of complete `k`-cycles (boundaries of `(k+1)`-simplices whose
//! `k`-faces are all present) of that subcomplex.
//!
//! Quantifying over subsets replaces the per-cycle support condition: a cycle
//! supported on `S` decomposes inside `Δ|_S` iff it lies in the span of the
//! complete cycles of `Δ|_S`, and checking that span equals `Z_k(Δ|_S)` for
//! every `S` covers every cycle with its own support.

use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::linalg::{self, IntColumn};
use crate::homology::{induced_map_vanishes, FaceIndex, FieldSpec};

use super::subsets::{check_subset_limit, SUBSET_LIMIT};

/// Vertex sets of size `k + 2` all of whose `k`-faces lie in `Δ`, in
/// lexicographic order, whether or not they are faces themselves.
pub fn complete_cycle_simplices(complex: &SimplicialComplex, k: usize) -> Vec<Face> {
    let d = k as isize;
    let n = complex.n_vertices();
    let mut out = Vec::new();
    for f in complex.faces_of_dim(d) {
        let last = f.vertices().last().unwrap_or(0);
        for v in last + 1..n {
            let s = f.with_vertex(v);
            if s.boundary().all(|(g, _)| complex.contains_face(&g)) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// `Δ` with every complete `k`-cycle filled by its simplex.
pub fn fill_complete_cycles(complex: &SimplicialComplex, k: usize) -> Result<SimplicialComplex> {
    complex.with_faces(&complete_cycle_simplices(complex, k))
}

pub fn decomposition_k_chordal(complex: &SimplicialComplex, k: usize, field: FieldSpec) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidParameter);
    }
    check_subset_limit(complex, SUBSET_LIMIT)?;
    let d = k as isize;
    let index = FaceIndex::new(complex);
    let simplices = complete_cycle_simplices(complex, k);
    let rows = complex.faces_of_dim(d);
    let complete: Vec<(u64, IntColumn)> = simplices
        .iter()
        .map(|s| {
            let mut col: IntColumn = s
                .boundary()
                .map(|(g, sign)| (rows.binary_search(&g).expect("complete cycles use faces of Δ") as u32, sign))
                .collect();
            col.sort_unstable();
            (s.mask(), col)
        })
        .collect();
    let n = complex.n_vertices();
    Ok((0..1u64 << n).into_par_iter().all(|mask| {
        let s = VertexSet::from_mask(mask);
        let (ids, bd) = index.restricted_boundary(d, &s);
        let cycles = ids.len() - linalg::rank(field, &bd);
        if cycles == 0 {
            return true;
        }
        let inside: Vec<IntColumn> =
            complete.iter().filter(|(m, _)| m & !mask == 0).map(|(_, c)| c.clone()).collect();
        linalg::rank(field, &inside) == cycles
    }))
}

/// Whether `φ_i^{I,J}` has the same verdict on `Δ` and on `Δ` with the
/// given `(i+1)`-simplices added, each of which must have all its `i`-faces
/// in `Δ` already.
pub fn skeleton_independence_check(
    complex: &SimplicialComplex,
    degree: usize,
    left: &VertexSet,
    right: &VertexSet,
    field: FieldSpec,
    additions: &[Face],
) -> Result<bool> {
    for s in additions {
        let name = || complex.face_labels(s).join(" ");
        if s.dim() != degree as isize + 1 {
            return Err(Error::InvalidAddition(name(), "wrong dimension"));
        }
        if s.vertices().any(|v| v >= complex.n_vertices()) {
            return Err(Error::InvalidAddition(format!("{s:?}"), "unknown vertex"));
        }
        if !s.boundary().all(|(g, _)| complex.contains_face(&g)) {
            return Err(Error::InvalidAddition(name(), "not every boundary face is present"));
        }
    }
    let bigger = complex.with_faces(additions)?;
    let before = induced_map_vanishes(complex, left, right, degree, field)?;
    let after = induced_map_vanishes(&bigger, left, right, degree, field)?;
    Ok(before.vanishes == after.vanishes)
}
