//! Betti tables, the Poincaré-series bound, and triviality of the Koszul
//! product across characteristics.

mod betti;
mod chordality;
mod product;
mod scan;
mod series;
mod subsets;

pub use betti::{hochster_betti, hochster_betti_multigraded, regularity, BettiPolynomial, BigradedBettiTable, MultidegreeEntry};
pub use chordality::{complete_cycle_simplices, decomposition_k_chordal, fill_complete_cycles, skeleton_independence_check};
pub use product::{
    golod_verdict, product_trivial, product_trivial_up_to, BasisOfClaim, GolodVerdict, PairScope, PairSpec,
    ALL_SCOPE_LIMIT,
};
pub use scan::{characteristic_scan, CharacteristicScan, SCAN_SAFETY_BOUND};
pub use series::{serre_rhs_series, TruncatedBiSeries, DEFAULT_TRUNCATION};
pub use subsets::SUBSET_LIMIT;
