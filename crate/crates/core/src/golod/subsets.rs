//! Reduced homology of every restriction `Δ|_S`, indexed by the bitmask of `S`.

use rayon::prelude::*;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::linalg::{self, IntColumn};
use crate::homology::FieldSpec;

/// Largest vertex count for which all `2^n` restrictions are enumerated.
pub const SUBSET_LIMIT: usize = 24;

pub(crate) fn check_subset_limit(complex: &SimplicialComplex, limit: usize) -> Result<()> {
    if complex.n_vertices() > limit {
        Err(Error::TooManyVertices(complex.n_vertices(), limit))
    } else {
        Ok(())
    }
}

/// Field dimensions of `H̃_d(Δ|_S)` for all `S` and `d = -1 ..= dim Δ`.
pub(crate) struct SubsetTable {
    n: usize,
    stride: usize,
    dims: Vec<u32>,
}

pub(crate) fn mask_of(s: &VertexSet) -> u64 {
    s.to_mask().expect("subset tables only exist below 64 vertices")
}

impl SubsetTable {
    pub fn build(complex: &SimplicialComplex, field: FieldSpec) -> Result<Self> {
        check_subset_limit(complex, SUBSET_LIMIT)?;
        let n = complex.n_vertices();
        let top = complex.dim();
        let stride = (top + 2).max(0) as usize;
        let mut dims = vec![0u32; stride << n];
        if stride == 0 {
            return Ok(Self { n, stride, dims });
        }
        let masks: Vec<Vec<u64>> =
            (-1..=top).map(|d| complex.faces_of_dim(d).iter().map(|f| f.mask()).collect()).collect();
        let boundaries: Vec<Vec<IntColumn>> = (0..=top)
            .map(|d| crate::homology::boundary_columns_of(complex, d))
            .collect();
        let mut adj = vec![0u64; n];
        for e in complex.faces_of_dim(1) {
            let m = e.mask();
            for v in e.vertices() {
                adj[v] |= m & !(1 << v);
            }
        }
        dims.par_chunks_mut(stride).enumerate().for_each(|(mask, out)| {
            let mask = mask as u64;
            if mask == 0 {
                out[0] = 1;
                return;
            }
            let size = mask.count_ones() as usize;
            let comps = components(&adj, mask);
            out[1] = comps as u32 - 1;
            let within = |d: isize| -> Vec<usize> {
                masks[(d + 1) as usize]
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m & !mask == 0)
                    .map(|(k, _)| k)
                    .collect()
            };
            // ranks[d] = rank ∂_d on Δ|_S for d = 0 ..= top + 1
            let mut ranks = vec![0usize; (top + 2) as usize];
            ranks[0] = 1;
            if top >= 1 {
                ranks[1] = size - comps;
            }
            let mut counts = vec![0usize; stride];
            for d in 1..=top {
                let ids = within(d);
                counts[(d + 1) as usize] = ids.len();
                if d >= 2 {
                    let cols: Vec<IntColumn> = ids.iter().map(|&k| boundaries[d as usize][k].clone()).collect();
                    ranks[d as usize] = linalg::rank(field, &cols);
                }
            }
            for d in 1..=top {
                let du = d as usize;
                out[du + 1] = (counts[du + 1] - ranks[du] - ranks[du + 1]) as u32;
            }
        });
        Ok(Self { n, stride, dims })
    }

    /// Dimensions for degrees `-1 ..= dim Δ`.
    pub fn dims(&self, mask: u64) -> &[u32] {
        let k = mask as usize * self.stride;
        &self.dims[k..k + self.stride]
    }

    pub fn dim(&self, mask: u64, d: isize) -> u32 {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.dims(mask).get(k).copied())
            .unwrap_or(0)
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> {
        0..(1u64 << self.n)
    }

    /// Largest `d + 1` with `H̃_d(Δ|_S) ≠ 0` for some `S`; `0` if only the empty
    /// restriction has homology.
    pub fn regularity(&self) -> usize {
        self.masks()
            .flat_map(|m| {
                self.dims(m)
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v > 0)
                    .map(|(k, _)| k)
                    .collect::<Vec<_>>()
            })
            .max()
            .unwrap_or(0)
    }
}

fn components(adj: &[u64], mask: u64) -> usize {
    let mut rest = mask;
    let mut count = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= adj[v];
                f &= f - 1;
            }
            frontier = next & mask & !comp;
            comp |= frontier;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{mobius_with_two_discs, subdivided_projective_plane};
    use crate::homology::{homology, Coefficients};

    #[test]
    fn agrees_with_direct_homology() {
        for c in [mobius_with_two_discs(), subdivided_projective_plane()] {
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let t = SubsetTable::build(&c, field).unwrap();
                for mask in t.masks() {
                    let r = c.restrict(&VertexSet::from_mask(mask)).unwrap().complex;
                    let h = homology(&r, Coefficients::Field(field));
                    for d in -1..=2 {
                        assert_eq!(t.dim(mask, d) as usize, h.rank(d), "mask {mask:b} d {d}");
                    }
                }
            }
        }
    }
}
