use num_traits::ToPrimitive;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::primes::prime_power_factors;

use super::chain::{build_chain_complex, FaceIndex};
use super::field::FieldSpec;
use super::linalg::{self, rank};
use super::smith::smith_normal_form;

/// Coefficients for [`homology`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integral,
    Field(FieldSpec),
}

/// Reduced homology in one degree. In field mode `rank` is the dimension and
/// `torsion` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: isize,
    pub rank: usize,
    /// Torsion as prime powers, sorted.
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub coefficients: Coefficients,
    /// Degrees `-1 ..= dim`, in order; empty for the void complex.
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyProfile {
    fn get(&self, d: isize) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|h| h.degree == d)
    }

    /// Free rank (integral) or dimension (field) in degree `d`.
    pub fn rank(&self, d: isize) -> usize {
        self.get(d).map_or(0, |h| h.rank)
    }

    pub fn torsion(&self, d: isize) -> &[u64] {
        self.get(d).map_or(&[], |h| h.torsion.as_slice())
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(|h| h.rank == 0 && h.torsion.is_empty())
    }

    /// Field dimensions predicted from an integral profile by universal
    /// coefficients: over `F_p` each `p`-primary torsion summand of `H̃_d`
    /// contributes to degrees `d` and `d + 1`.
    pub fn universal_coefficients(&self, field: FieldSpec) -> HomologyProfile {
        assert_eq!(self.coefficients, Coefficients::Integral, "needs an integral profile");
        let hits = |d: isize| match field {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => self.torsion(d).iter().filter(|&&q| q % p == 0).count(),
        };
        let degrees = self
            .degrees
            .iter()
            .map(|h| DegreeHomology {
                degree: h.degree,
                rank: h.rank + hits(h.degree) + hits(h.degree - 1),
                torsion: Vec::new(),
            })
            .collect();
        HomologyProfile { coefficients: Coefficients::Field(field), degrees }
    }
}

/// Reduced homology of `complex` in degrees `-1 ..= dim`.
pub fn homology(complex: &SimplicialComplex, coefficients: Coefficients) -> HomologyProfile {
    let chains = build_chain_complex(complex);
    let top = chains.top_degree();
    let degrees = match coefficients {
        Coefficients::Field(field) => {
            let ranks: Vec<usize> = (0..=top + 1).map(|d| rank(field, chains.boundary(d))).collect();
            let r = |d: isize| if d < 0 { 0 } else { ranks[d as usize] };
            (-1..=top)
                .map(|d| DegreeHomology {
                    degree: d,
                    rank: chains.basis(d).len() - r(d) - r(d + 1),
                    torsion: Vec::new(),
                })
                .collect()
        }
        Coefficients::Integral => {
            let forms: Vec<_> = (0..=top + 1)
                .map(|d| smith_normal_form(&chains.boundary_matrix(d)))
                .collect();
            let r = |d: isize| if d < 0 { 0 } else { forms[d as usize].rank };
            (-1..=top)
                .map(|d| {
                    let mut torsion: Vec<u64> = forms[(d + 1) as usize]
                        .torsion()
                        .flat_map(|t| {
                            prime_power_factors(t.to_u64().expect("torsion coefficient fits in 64 bits"))
                        })
                        .collect();
                    torsion.sort_unstable();
                    DegreeHomology { degree: d, rank: chains.basis(d).len() - r(d) - r(d + 1), torsion }
                })
                .collect()
        }
    };
    HomologyProfile { coefficients, degrees }
}

/// Field dimensions of `H̃_d(Δ|_s)` for `d = -1 ..= dim Δ`, computed from the
/// parent's face index without building the restriction.
pub(crate) fn restricted_dims(index: &FaceIndex<'_>, s: &VertexSet, field: FieldSpec) -> Vec<usize> {
    let complex = index.complex;
    let top = complex.dim();
    if complex.is_void() {
        return vec![0; (top + 2).max(0) as usize];
    }
    let counts: Vec<usize> = (-1..=top).map(|d| index.faces_within(d, s).len()).collect();
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|d| {
            if d > top {
                0
            } else if d == 0 {
                usize::from(!s.is_empty())
            } else {
                linalg::rank(field, &index.restricted_boundary(d, s).1)
            }
        })
        .collect();
    (-1..=top)
        .map(|d| {
            let below = if d < 0 { 0 } else { ranks[d as usize] };
            counts[(d + 1) as usize] - below - ranks[(d + 1) as usize]
        })
        .collect()
}
