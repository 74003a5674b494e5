//! Reduced simplicial chain complexes with integer boundary matrices.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex, VertexSet};

use super::linalg::IntColumn;
use super::smith::IntMatrix;

/// Augmented chain complex of a simplicial complex: bases in each degree
/// `d ≥ -1` (degree `-1` is `{∅}`) in lexicographic order, and `∂_d` as sparse
/// columns over the basis of degree `d - 1`.
#[derive(Clone, Debug)]
pub struct IntegerChainComplex {
    bases: Vec<Vec<Face>>,
    boundaries: Vec<Vec<IntColumn>>,
}

impl IntegerChainComplex {
    /// Highest degree with a nonempty basis, `-2` for the void complex.
    pub fn top_degree(&self) -> isize {
        self.bases.len() as isize - 2
    }

    pub fn basis(&self, d: isize) -> &[Face] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.bases.get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Columns of `∂_d`; empty outside `0..=top_degree`.
    pub fn boundary(&self, d: isize) -> &[IntColumn] {
        usize::try_from(d)
            .ok()
            .and_then(|k| self.boundaries.get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn boundary_matrix(&self, d: isize) -> IntMatrix {
        let mut m = IntMatrix::from_int_columns(self.basis(d - 1).len(), self.boundary(d));
        if m.columns.len() < self.basis(d).len() {
            m.columns.resize(self.basis(d).len(), Vec::new());
        }
        m
    }

    pub fn euler_characteristic(&self) -> i64 {
        (-1..=self.top_degree())
            .map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 } * self.basis(d).len() as i64)
            .sum()
    }

    /// Checks `∂_{d-1} ∘ ∂_d = 0` in every degree.
    pub fn is_chain_complex(&self) -> bool {
        (1..=self.top_degree()).all(|d| {
            let lower = self.boundary(d - 1);
            self.boundary(d).iter().all(|col| compose(lower, col).is_empty())
        })
    }
}

/// `A · c` for a sparse column `c`.
pub(crate) fn compose(a: &[IntColumn], c: &[(u32, i64)]) -> Vec<(u32, i64)> {
    let mut acc: HashMap<u32, i64> = HashMap::new();
    for &(k, v) in c {
        for &(r, w) in &a[k as usize] {
            *acc.entry(r).or_insert(0) += v * w;
        }
    }
    let mut out: Vec<(u32, i64)> = acc.into_iter().filter(|(_, v)| *v != 0).collect();
    out.sort_unstable();
    out
}

pub fn build_chain_complex(complex: &SimplicialComplex) -> IntegerChainComplex {
    let top = complex.dim();
    let bases: Vec<Vec<Face>> = (-1..=top).map(|d| complex.faces_of_dim(d).to_vec()).collect();
    let boundaries = (0..=top)
        .map(|d| boundary_columns(&bases[d as usize], &bases[(d + 1) as usize]))
        .collect();
    let c = IntegerChainComplex { bases, boundaries };
    assert!(c.is_chain_complex(), "boundary of a boundary must vanish");
    c
}

/// Boundary columns of `domain` faces over the row basis `lower`.
pub(crate) fn boundary_columns(lower: &[Face], domain: &[Face]) -> Vec<IntColumn> {
    let index: HashMap<&Face, u32> = lower.iter().enumerate().map(|(k, f)| (f, k as u32)).collect();
    domain
        .iter()
        .map(|f| {
            let mut col: IntColumn = f.boundary().map(|(g, s)| (index[&g], s)).collect();
            col.sort_unstable();
            col
        })
        .collect()
}

/// Columns of `∂_d` of a whole complex, rows indexed like `faces_of_dim(d - 1)`.
pub(crate) fn boundary_columns_of(complex: &SimplicialComplex, d: isize) -> Vec<IntColumn> {
    boundary_columns(complex.faces_of_dim(d - 1), complex.faces_of_dim(d))
}

/// Per-dimension face lists of a complex with boundary columns in parent
/// numbering, for repeated restriction to vertex subsets without rebuilding
/// complexes. Restricted boundary matrices keep parent row indices, which is
/// harmless for ranks and kernels.
pub(crate) struct FaceIndex<'a> {
    pub complex: &'a SimplicialComplex,
    /// `boundaries[d]`: columns of `∂_d` indexed like `faces_of_dim(d)`.
    boundaries: Vec<Vec<IntColumn>>,
}

impl<'a> FaceIndex<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        let boundaries = (0..=complex.dim())
            .map(|d| boundary_columns_of(complex, d))
            .collect();
        Self { complex, boundaries }
    }

    /// Ids (positions in `faces_of_dim(d)`) of the `d`-faces inside `s`.
    pub fn faces_within(&self, d: isize, s: &VertexSet) -> Vec<usize> {
        self.complex
            .faces_of_dim(d)
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_within(s))
            .map(|(k, _)| k)
            .collect()
    }

    pub fn boundary_column(&self, d: isize, id: usize) -> &IntColumn {
        &self.boundaries[d as usize][id]
    }

    /// Columns of `∂_d` restricted to the `d`-faces inside `s`, with their ids.
    pub fn restricted_boundary(&self, d: isize, s: &VertexSet) -> (Vec<usize>, Vec<IntColumn>) {
        if d < 0 {
            return (Vec::new(), Vec::new());
        }
        let ids = self.faces_within(d, s);
        let cols = ids.iter().map(|&k| self.boundary_column(d, k).clone()).collect();
        (ids, cols)
    }
}
