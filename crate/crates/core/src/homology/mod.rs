//! Exact linear algebra for reduced simplicial homology and the induced maps
//! of join inclusions.

mod chain;
mod field;
pub(crate) mod int;
pub mod linalg;
mod phi;
mod profile;
mod smith;

pub use chain::{build_chain_complex, IntegerChainComplex};
pub(crate) use chain::{boundary_columns_of, FaceIndex};
pub use field::{FieldSpec, MAX_PRIME};
pub use int::{ExactInt, Overflow};
pub use phi::{induced_map_vanishes, integral_phi_prime_candidates, join_inclusion_chain_map, ChainMap, PhiReport};
pub(crate) use phi::validate_pair;
pub use profile::{homology, Coefficients, DegreeHomology, HomologyProfile};
pub(crate) use profile::restricted_dims;
pub use smith::{smith_normal_form, smith_normal_form_with_transforms, IntMatrix, SmithForm};

#[cfg(test)]
pub(crate) mod oracle;
