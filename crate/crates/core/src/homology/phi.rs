//! The maps `φ_i^{I,J}: H̃_i(Δ|_{I∪J}) → H̃_i(Δ|_I * Δ|_J)` induced by the join
//! inclusion.
//!
//! [`join_inclusion_chain_map`] builds the chain map literally, with the join
//! ordered I-block first. The vanishing test itself orients every join face by
//! the parent's vertex order instead; the two bases differ by a sign per face,
//! which changes neither ranks nor verdicts, and the inclusion then becomes the
//! identity on faces.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;

use crate::complex::{Face, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::primes::prime_divisors;

use super::chain::{boundary_columns, build_chain_complex, compose, IntegerChainComplex};
use super::field::FieldSpec;
use super::int::Overflow;
use super::linalg::{dispatch, kernel_with, lift, Echelon, FieldTask, FractionFree, IntColumn, Scalars};
use super::smith::{smith_normal_form, IntMatrix};

pub(crate) fn validate_pair(complex: &SimplicialComplex, i: &VertexSet, j: &VertexSet) -> Result<()> {
    if i.is_empty() || j.is_empty() || !i.is_disjoint(j) {
        return Err(Error::InvalidPair);
    }
    let n = complex.n_vertices();
    match i.union(j).last() {
        Some(v) if v >= n => Err(Error::VertexOutOfRange { index: v, len: n }),
        _ => Ok(()),
    }
}

/// A chain map between augmented chain complexes, one matrix per degree.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: IntegerChainComplex,
    pub target: IntegerChainComplex,
    maps: Vec<Vec<IntColumn>>,
}

impl ChainMap {
    /// Columns of the map in degree `d ≥ -1`, one per source basis element.
    pub fn degree(&self, d: isize) -> &[IntColumn] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.maps.get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// `∂^target_d · M_d = M_{d-1} · ∂^source_d` in every degree.
    pub fn commutes(&self) -> bool {
        (0..=self.source.top_degree()).all(|d| {
            let m_d = self.degree(d);
            let m_lower = self.degree(d - 1);
            let target_bd = self.target.boundary(d);
            self.source
                .boundary(d)
                .iter()
                .zip(m_d)
                .all(|(bd, m)| compose(target_bd, m) == compose(m_lower, bd))
        })
    }
}

/// The chain map of `Δ|_{I∪J} ↪ Δ|_I * Δ|_J`. The join lists the vertices of
/// `I` before those of `J`; each face `F` goes to `(F∩I) ∪ (F∩J)` with the sign
/// of the permutation that reorders `F` into that block order.
pub fn join_inclusion_chain_map(complex: &SimplicialComplex, i: &VertexSet, j: &VertexSet) -> Result<ChainMap> {
    validate_pair(complex, i, j)?;
    let union = i.union(j);
    let source_complex = complex.restrict(&union)?;
    let target_complex = complex.restrict(i)?.complex.join(&complex.restrict(j)?.complex)?;
    let source = build_chain_complex(&source_complex.complex);
    let target = build_chain_complex(&target_complex);

    let i_pos: HashMap<usize, usize> = i.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let j_pos: HashMap<usize, usize> = j.iter().enumerate().map(|(k, v)| (v, i.len() + k)).collect();
    let mut maps = Vec::new();
    for d in -1..=source.top_degree() {
        let index: HashMap<&Face, u32> =
            target.basis(d).iter().enumerate().map(|(k, f)| (f, k as u32)).collect();
        let cols = source
            .basis(d)
            .iter()
            .map(|f| {
                let parent: Vec<usize> = f.vertices().map(|v| source_complex.back_map[v]).collect();
                // inversions between J-vertices and later I-vertices
                let mut inversions = 0usize;
                let mut js_seen = 0usize;
                for v in &parent {
                    if i_pos.contains_key(v) {
                        inversions += js_seen;
                    } else {
                        js_seen += 1;
                    }
                }
                let image = Face::new(parent.iter().map(|v| i_pos.get(v).or_else(|| j_pos.get(v)).copied().unwrap()));
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                vec![(index[&image], sign)]
            })
            .collect();
        maps.push(cols);
    }
    let map = ChainMap { source, target, maps };
    assert!(map.commutes(), "join inclusion must be a chain map");
    Ok(map)
}

/// One `(I, J, i, field)` verdict with its rank evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    /// The set `I`.
    pub left: VertexSet,
    /// The set `J`.
    pub right: VertexSet,
    pub degree: usize,
    pub field: FieldSpec,
    pub vanishes: bool,
    pub source_homology_dim: usize,
    /// `rank[B | M·Z] − rank[B]` in the target.
    pub image_rank_mod_boundaries: usize,
    /// A source cycle whose image is not a boundary, as `(face, coefficient)`
    /// with faces in the parent's vertex indices. Over `F_p` coefficients are
    /// symmetric residues.
    pub witness: Option<Vec<(Face, BigInt)>>,
}

fn faces_within(complex: &SimplicialComplex, d: isize, s: &VertexSet) -> Vec<Face> {
    complex.faces_of_dim(d).iter().filter(|f| f.is_within(s)).cloned().collect()
}

/// Faces of `Δ|_I * Δ|_J` of dimension `d`, in parent numbering and sorted.
fn join_faces(complex: &SimplicialComplex, i: &VertexSet, j: &VertexSet, d: isize) -> Vec<Face> {
    let mut out = Vec::new();
    if d < -1 {
        return out;
    }
    for k in 0..=(d + 1) {
        let left = faces_within(complex, k - 1, i);
        if left.is_empty() {
            continue;
        }
        let right = faces_within(complex, d - k, j);
        for f in &left {
            for g in &right {
                out.push(f.union(g));
            }
        }
    }
    out.sort();
    out
}

/// Matrices of one `φ_i^{I,J}` problem, in parent orientation.
struct PhiSetup {
    source_faces: Vec<Face>,
    /// Number of source `(i-1)`-faces, the rows of `source_bd`.
    source_rows: usize,
    /// `∂_i` on source `i`-faces.
    source_bd: Vec<IntColumn>,
    /// `∂_{i+1}` on source `(i+1)`-faces.
    source_next: Vec<IntColumn>,
    /// `∂_{i+1}` of the join, rows indexed by `target_faces`.
    target_next: Vec<IntColumn>,
    target_rows: usize,
    /// Row of each source `i`-face among the join's `i`-faces.
    embed: Vec<u32>,
}

impl PhiSetup {
    fn new(complex: &SimplicialComplex, i: &VertexSet, j: &VertexSet, degree: usize) -> Self {
        let d = degree as isize;
        let union = i.union(j);
        let below = faces_within(complex, d - 1, &union);
        let source_faces = faces_within(complex, d, &union);
        let above = faces_within(complex, d + 1, &union);
        let target_faces = join_faces(complex, i, j, d);
        let target_above = join_faces(complex, i, j, d + 1);
        let index: HashMap<&Face, u32> =
            target_faces.iter().enumerate().map(|(k, f)| (f, k as u32)).collect();
        let embed = source_faces.iter().map(|f| index[f]).collect();
        Self {
            source_bd: boundary_columns(&below, &source_faces),
            source_next: boundary_columns(&source_faces, &above),
            target_next: boundary_columns(&target_faces, &target_above),
            target_rows: target_faces.len(),
            source_rows: below.len(),
            embed,
            source_faces,
        }
    }

    fn image<C: Clone>(&self, z: &[(u32, C)]) -> Vec<(u32, C)> {
        let mut out: Vec<(u32, C)> = z.iter().map(|(k, c)| (self.embed[*k as usize], c.clone())).collect();
        out.sort_by_key(|e| e.0);
        out
    }
}

struct PhiOutcome {
    source_dim: usize,
    image_rank: usize,
    witness: Option<Vec<(u32, BigInt)>>,
}

impl FieldTask for PhiSetup {
    type Output = PhiOutcome;

    fn run<S: Scalars>(&self, s: &S) -> std::result::Result<PhiOutcome, Overflow> {
        let cycles = kernel_with(s, &self.source_bd)?;
        let boundaries = super::linalg::rank_with(s, &self.source_next)?;
        let mut ech = Echelon::new(s);
        for c in &self.target_next {
            ech.insert_untracked(lift(s, c)?)?;
        }
        let mut image_rank = 0;
        let mut witness = None;
        for z in &cycles {
            if ech.insert_untracked(self.image(z))? {
                image_rank += 1;
                if witness.is_none() {
                    witness = Some(z.iter().map(|(k, c)| (*k, s.to_bigint(c))).collect());
                }
            }
        }
        Ok(PhiOutcome { source_dim: cycles.len() - boundaries, image_rank, witness })
    }
}

/// Decides whether `φ_i^{I,J}` vanishes over `field` by comparing
/// `rank[B_target | M·Z_source]` with `rank[B_target]`.
pub fn induced_map_vanishes(
    complex: &SimplicialComplex,
    i: &VertexSet,
    j: &VertexSet,
    degree: usize,
    field: FieldSpec,
) -> Result<PhiReport> {
    validate_pair(complex, i, j)?;
    let setup = PhiSetup::new(complex, i, j, degree);
    let out = dispatch(field, &setup);
    Ok(PhiReport {
        left: i.clone(),
        right: j.clone(),
        degree,
        field,
        vanishes: out.image_rank == 0,
        source_homology_dim: out.source_dim,
        image_rank_mod_boundaries: out.image_rank,
        witness: out.witness.map(|w| {
            w.into_iter()
                .map(|(k, c)| (setup.source_faces[k as usize].clone(), c))
                .collect()
        }),
    })
}

fn integral_kernel(cols: &[IntColumn]) -> Vec<Vec<(u32, BigInt)>> {
    match kernel_with(&FractionFree::<i64>::new(), cols) {
        Ok(k) => k
            .into_iter()
            .map(|z| z.into_iter().map(|(r, v)| (r, BigInt::from(v))).collect())
            .collect(),
        Err(Overflow) => kernel_with(&FractionFree::<BigInt>::new(), cols).expect("big integers cannot overflow"),
    }
}

/// Primes `p` for which the verdict over `F_p` may differ from the verdict
/// over `Q`: prime divisors of the elementary divisors of every matrix the
/// verdict depends on.
///
/// For `p` outside the result, the integral cycle basis stays a basis of the
/// cycles mod `p` and every rank in the test is the same mod `p` as over `Q`.
/// The matrices are `∂_i`, `∂_{i+1}` and `∂_{i+2}` of the source, the integral
/// cycle basis itself (its divisors measure saturation), `∂_i`, `∂_{i+1}` and
/// `∂_{i+2}` of the join, and `[∂_{i+1} | M·Z]` in the join.
pub fn integral_phi_prime_candidates(
    complex: &SimplicialComplex,
    i: &VertexSet,
    j: &VertexSet,
    degree: usize,
) -> Result<BTreeSet<u64>> {
    validate_pair(complex, i, j)?;
    let d = degree as isize;
    let setup = PhiSetup::new(complex, i, j, degree);
    let union = i.union(j);
    let cycles = integral_kernel(&setup.source_bd);

    let src_above = faces_within(complex, d + 1, &union);
    let src_top = faces_within(complex, d + 2, &union);
    let tgt_below = join_faces(complex, i, j, d - 1);
    let tgt_faces = join_faces(complex, i, j, d);
    let tgt_above = join_faces(complex, i, j, d + 1);
    let tgt_top = join_faces(complex, i, j, d + 2);

    let z_matrix = IntMatrix { n_rows: setup.source_faces.len(), columns: cycles.clone() };
    let image = IntMatrix {
        n_rows: setup.target_rows,
        columns: cycles.iter().map(|z| setup.image(z)).collect(),
    };
    let target_next = IntMatrix::from_int_columns(setup.target_rows, &setup.target_next);
    let matrices = [
        IntMatrix::from_int_columns(setup.source_rows, &setup.source_bd),
        IntMatrix::from_int_columns(setup.source_faces.len(), &setup.source_next),
        IntMatrix::from_int_columns(src_above.len(), &boundary_columns(&src_above, &src_top)),
        z_matrix,
        IntMatrix::from_int_columns(tgt_below.len(), &boundary_columns(&tgt_below, &tgt_faces)),
        target_next.clone(),
        IntMatrix::from_int_columns(tgt_above.len(), &boundary_columns(&tgt_above, &tgt_top)),
        target_next.hconcat(&image),
    ];
    let mut out = BTreeSet::new();
    for m in &matrices {
        for t in smith_normal_form(m).torsion() {
            out.extend(prime_divisors(t));
        }
    }
    Ok(out)
}
