//! Stanley–Reisner rings of simplicial complexes: Betti tables through
//! Hochster's formula, triviality of the product on Koszul homology in every
//! characteristic, and complexes whose answer depends on the characteristic.

pub mod complex;
pub mod error;
pub mod golod;
pub mod homology;
pub mod primes;

pub use complex::io::{parse_facet_file, write_facet_file};
pub use complex::{
    glued_disc, golod_in_primes, golod_outside_primes, masseyless_hypothesis, mobius_with_two_discs,
    subdivided_projective_plane, Face, Graph, Restriction, SimplicialComplex, VertexSet,
};
pub use error::{Error, Result};
pub use golod::*;
pub use homology::{
    build_chain_complex, homology, induced_map_vanishes, integral_phi_prime_candidates, join_inclusion_chain_map,
    smith_normal_form, smith_normal_form_with_transforms, ChainMap, Coefficients, FieldSpec, HomologyProfile,
    IntMatrix, IntegerChainComplex, PhiReport, SmithForm,
};
