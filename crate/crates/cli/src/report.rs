//! Serializable report objects. Every collection is emitted in a canonical
//! order so output is byte-stable.

use golodscope_core::{
    BasisOfClaim, BigradedBettiTable, CharacteristicScan, GolodVerdict, PhiReport, SimplicialComplex,
    TruncatedBiSeries, VertexSet,
};
use serde::Serialize;

#[derive(Serialize)]
pub struct AnalysisReport {
    pub command: &'static str,
    pub complex: ComplexSummary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<FieldSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanReport>,
}

#[derive(Serialize)]
pub struct ComplexSummary {
    pub vertices: usize,
    pub facets: usize,
    pub dimension: isize,
    pub minimal_nonfaces: usize,
}

impl ComplexSummary {
    pub fn of(c: &SimplicialComplex) -> Self {
        Self {
            vertices: c.n_vertices(),
            facets: c.facets().len(),
            dimension: c.dim(),
            minimal_nonfaces: c.minimal_nonfaces().len(),
        }
    }
}

/// Results over one coefficient field; only the parts a command computes.
#[derive(Serialize)]
pub struct FieldSection {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
}

impl FieldSection {
    pub fn new(field: String) -> Self {
        Self { field, betti: None, regularity: None, series: None, verdict: None }
    }
}

#[derive(Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub dim: u64,
}

#[derive(Serialize)]
pub struct MultidegreeReport {
    pub i: usize,
    pub support: Vec<String>,
    pub dim: u64,
}

#[derive(Serialize)]
pub struct BettiReport {
    /// `f_RH` in the usual notation.
    pub polynomial: String,
    /// Nonzero `β_{i,j}` sorted by `(i, j)`, the coefficients of `f_RH`.
    pub entries: Vec<BettiEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multigraded: Option<Vec<MultidegreeReport>>,
}

impl BettiReport {
    pub fn of(c: &SimplicialComplex, t: &BigradedBettiTable) -> Self {
        Self {
            polynomial: t.polynomial().to_string(),
            entries: t.entries.iter().map(|(&(i, j), &dim)| BettiEntry { i, j, dim }).collect(),
            multigraded: t.multigraded.as_ref().map(|m| {
                m.iter()
                    .map(|e| MultidegreeReport {
                        i: e.i,
                        support: labels(c, &e.support.to_set()),
                        dim: e.dim,
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
pub struct SeriesTerm {
    pub t: usize,
    pub x: usize,
    /// Decimal string: coefficients can exceed 64 bits.
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct SeriesReport {
    pub truncation: usize,
    /// Sorted by total degree, then by the power of `t`.
    pub terms: Vec<SeriesTerm>,
}

impl SeriesReport {
    pub fn of(s: &TruncatedBiSeries) -> Self {
        let mut terms: Vec<SeriesTerm> = s
            .coefficients
            .iter()
            .map(|(&(t, x), c)| SeriesTerm { t, x, coefficient: c.to_string() })
            .collect();
        terms.sort_by_key(|term| (term.t + term.x, term.t));
        Self { truncation: s.bound, terms }
    }
}

#[derive(Serialize)]
pub struct WitnessTerm {
    pub face: Vec<String>,
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct PairReport {
    pub degree: usize,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub source_homology_dim: usize,
    pub image_rank: usize,
    pub witness: Vec<WitnessTerm>,
}

impl PairReport {
    pub fn of(c: &SimplicialComplex, r: &PhiReport) -> Self {
        Self {
            degree: r.degree,
            left: labels(c, &r.left),
            right: labels(c, &r.right),
            source_homology_dim: r.source_homology_dim,
            image_rank: r.image_rank_mod_boundaries,
            witness: r
                .witness
                .iter()
                .flatten()
                .map(|(f, coeff)| WitnessTerm {
                    face: c.face_labels(f).iter().map(|s| s.to_string()).collect(),
                    coefficient: coeff.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub scope: String,
    pub product_trivial: bool,
    pub examined: usize,
    pub hypothesis_dim2: bool,
    pub basis_of_claim: &'static str,
    pub failing_pairs: Vec<PairReport>,
}

impl VerdictReport {
    pub fn of(c: &SimplicialComplex, scope: &str, v: &GolodVerdict) -> Self {
        Self {
            scope: scope.to_string(),
            product_trivial: v.product_trivial,
            examined: v.examined,
            hypothesis_dim2: v.hypothesis_dim2,
            basis_of_claim: match v.basis_of_claim {
                BasisOfClaim::Dim2Lemma => "dim2_lemma",
                BasisOfClaim::Citation => "citation",
            },
            failing_pairs: v.failing_pairs.iter().map(|r| PairReport::of(c, r)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub product_trivial: bool,
}

#[derive(Serialize)]
pub struct ScanReport {
    pub rational_verdict: bool,
    pub exceptional_primes: Vec<u64>,
    pub tested_primes: Vec<u64>,
    pub candidate_primes: Vec<u64>,
    pub verdicts: Vec<PrimeVerdict>,
}

impl ScanReport {
    pub fn of(s: &CharacteristicScan) -> Self {
        Self {
            rational_verdict: s.rational_verdict,
            exceptional_primes: s.exceptional_primes.iter().copied().collect(),
            tested_primes: s.tested_primes.iter().copied().collect(),
            candidate_primes: s.candidate_primes.iter().copied().collect(),
            verdicts: s.verdicts.iter().map(|(&prime, &v)| PrimeVerdict { prime, product_trivial: v }).collect(),
        }
    }
}

pub fn labels(c: &SimplicialComplex, s: &VertexSet) -> Vec<String> {
    c.set_labels(s).iter().map(|l| l.to_string()).collect()
}
