//! Triviality of the product on `Tor^S(K[Δ], K)`: it is trivial iff every
//! `φ_i^{I,J}` vanishes.
//!
//! Only `1 ≤ i ≤ reg − 1` matters. For `i = 0` the source `H̃_0(Δ|_{I∪J})` maps
//! into the connected join of two nonempty complexes. For `i ≥ reg` the
//! source vanishes for every `I ∪ J`, and `reg − 1 ≤ dim Δ`.
//!
//! # Pruning
//!
//! Call `S` a *flat* in degree `i` if `S` is the union of the supports of the
//! `i`-cycles of `Δ|_S`. For any pair, let `F` be the flat spanned by the
//! cycles of `Δ|_{I∪J}`; the cycles live in `Δ|_{I∩F} * Δ|_{J∩F}`, which sits
//! inside `Δ|_I * Δ|_J`. So `φ^{I,J}` vanishes whenever `φ^{I∩F, J∩F}` does (or
//! one side of `F` is empty, when the cycles are cones). It therefore suffices
//! to split flats. Flats are found top-down: the flats strictly inside a
//! flat `S` all lie below the flats spanned by `S ∖ v`.
//!
//! A split `S = I ⊔ J` can only fail if the join has homology in degree `i`.
//! Over a field `H̃_i(A * B) = ⊕_{a+b=i−1} H̃_a(A) ⊗ H̃_b(B)`, so one side has
//! nonzero `H̃_a` with `a ≤ (i−1)/2`. For `a = 0` these are the disconnected
//! induced subgraphs.
//!
//! In degree 1 the maps all vanish iff the 1-skeleton is chordal. Otherwise
//! one chordless cycle yields a failing pair, which stands in for the rest.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use crate::complex::{masseyless_hypothesis, Graph, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::linalg::{dispatch, kernel_with, FieldTask, IntColumn, Scalars};
use crate::homology::{induced_map_vanishes, restricted_dims, validate_pair, FaceIndex, FieldSpec, Overflow, PhiReport};

use super::subsets::{check_subset_limit, mask_of, SubsetTable};

/// Largest vertex count accepted by [`PairScope::All`].
pub const ALL_SCOPE_LIMIT: usize = 16;

/// One triple `(I, J, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairSpec {
    pub left: VertexSet,
    pub right: VertexSet,
    pub degree: usize,
}

type SetKey = (usize, Vec<usize>);

fn set_key(s: &VertexSet) -> SetKey {
    (s.len(), s.iter().collect())
}

impl PairSpec {
    pub fn new(left: VertexSet, right: VertexSet, degree: usize) -> Self {
        Self { left, right, degree }
    }

    /// The same unordered pair with the smaller side (by size, then vertices)
    /// on the left.
    pub fn canonical(self) -> Self {
        if set_key(&self.right) < set_key(&self.left) {
            Self { left: self.right, right: self.left, degree: self.degree }
        } else {
            self
        }
    }

    pub(crate) fn sort_key(&self) -> (usize, SetKey, SetKey) {
        (self.degree, set_key(&self.left), set_key(&self.right))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairScope {
    /// Every unordered split of every vertex set with homology, all degrees.
    All,
    /// Splits of flats that pass the Künneth test; exact, see the module docs.
    Pruned,
    /// Only the listed triples.
    Critical(Vec<PairSpec>),
}

/// What the Golod claim rests on once the product is known to be trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisOfClaim {
    /// The dimension-two criterion applies directly.
    Dim2Lemma,
    /// Equivalence of product triviality and Golodness from the literature.
    Citation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolodVerdict {
    pub field: FieldSpec,
    pub product_trivial: bool,
    /// Sorted by degree, then left and right sets.
    pub failing_pairs: Vec<PhiReport>,
    pub hypothesis_dim2: bool,
    pub basis_of_claim: BasisOfClaim,
    /// Number of triples tested.
    pub examined: usize,
}

pub fn product_trivial(complex: &SimplicialComplex, field: FieldSpec, scope: &PairScope) -> Result<GolodVerdict> {
    product_trivial_up_to(complex, field, scope, None)
}

/// [`product_trivial`] restricted to degrees `i ≤ max_degree`.
pub fn product_trivial_up_to(
    complex: &SimplicialComplex,
    field: FieldSpec,
    scope: &PairScope,
    max_degree: Option<usize>,
) -> Result<GolodVerdict> {
    Ok(run_scope(complex, field, scope, max_degree)?.0)
}

/// Product triviality over the pruned scope, labelled with its basis.
pub fn golod_verdict(complex: &SimplicialComplex, field: FieldSpec) -> Result<GolodVerdict> {
    product_trivial(complex, field, &PairScope::Pruned)
}

/// The verdict together with the triples it examined.
pub(crate) fn run_scope(
    complex: &SimplicialComplex,
    field: FieldSpec,
    scope: &PairScope,
    max_degree: Option<usize>,
) -> Result<(GolodVerdict, Vec<PairSpec>)> {
    let cap = max_degree.unwrap_or(usize::MAX);
    let triples = match scope {
        PairScope::All => all_triples(complex, field, cap)?,
        PairScope::Pruned => pruned_triples(complex, field, cap)?,
        PairScope::Critical(list) => critical_triples(complex, list, cap)?,
    };
    let reports: Vec<PhiReport> = triples
        .par_iter()
        .map(|t| induced_map_vanishes(complex, &t.left, &t.right, t.degree, field))
        .collect::<Result<_>>()?;
    let mut failing: Vec<PhiReport> = reports.into_iter().filter(|r| !r.vanishes).collect();
    failing.sort_by_key(|r| PairSpec::new(r.left.clone(), r.right.clone(), r.degree).sort_key());
    let hypothesis_dim2 = masseyless_hypothesis(complex);
    let verdict = GolodVerdict {
        field,
        product_trivial: failing.is_empty(),
        failing_pairs: failing,
        hypothesis_dim2,
        basis_of_claim: if hypothesis_dim2 { BasisOfClaim::Dim2Lemma } else { BasisOfClaim::Citation },
        examined: triples.len(),
    };
    Ok((verdict, triples))
}

fn critical_triples(complex: &SimplicialComplex, list: &[PairSpec], cap: usize) -> Result<Vec<PairSpec>> {
    let mut out = Vec::new();
    for t in list {
        let describe = || format!("{:?} | {:?} in degree {}", t.left, t.right, t.degree);
        if t.degree == 0 {
            return Err(Error::InvalidScope(format!("{}: degree must be at least 1", describe())));
        }
        validate_pair(complex, &t.left, &t.right).map_err(|e| Error::InvalidScope(format!("{}: {e}", describe())))?;
        if t.degree <= cap {
            out.push(t.clone());
        }
    }
    Ok(out)
}

fn all_triples(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<Vec<PairSpec>> {
    check_subset_limit(complex, ALL_SCOPE_LIMIT)?;
    let table = SubsetTable::build(complex, field)?;
    let top = table.regularity().saturating_sub(1).min(cap);
    let mut out = Vec::new();
    for i in 1..=top {
        for mask in table.masks() {
            // splits of a set without homology in degree i vanish trivially
            if table.dim(mask, i as isize) == 0 {
                continue;
            }
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let mut sub = rest;
            loop {
                if sub != rest {
                    let left = low | sub;
                    out.push(PairSpec::new(VertexSet::from_mask(left), VertexSet::from_mask(mask ^ left), i).canonical());
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
    }
    out.sort_by_key(PairSpec::sort_key);
    Ok(out)
}

struct CycleSupport<'a>(&'a [IntColumn]);

impl FieldTask for CycleSupport<'_> {
    type Output = BTreeSet<u32>;
    fn run<S: Scalars>(&self, s: &S) -> std::result::Result<BTreeSet<u32>, Overflow> {
        Ok(kernel_with(s, self.0)?
            .into_iter()
            .flatten()
            .filter(|(_, c)| !s.is_zero(c))
            .map(|(k, _)| k)
            .collect())
    }
}

/// Union of the supports of the `d`-cycles of `Δ|_s`.
fn cycle_support(index: &FaceIndex<'_>, d: isize, s: &VertexSet, field: FieldSpec) -> VertexSet {
    let (ids, cols) = index.restricted_boundary(d, s);
    let faces = index.complex.faces_of_dim(d);
    dispatch(field, &CycleSupport(&cols))
        .into_iter()
        .flat_map(|k| faces[ids[k as usize]].vertices().collect::<Vec<_>>())
        .collect()
}

/// Every nonempty flat in degree `d`.
fn flats(index: &FaceIndex<'_>, d: isize, field: FieldSpec) -> Vec<VertexSet> {
    let start = cycle_support(index, d, &index.complex.all_vertices(), field);
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue = VecDeque::new();
    if !start.is_empty() {
        seen.insert(start.clone());
        queue.push_back(start);
    }
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        let children: Vec<VertexSet> = s
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&v| {
                let mut smaller = s.clone();
                smaller.remove(v);
                cycle_support(index, d, &smaller, field)
            })
            .collect();
        for c in children {
            if !c.is_empty() && seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
        out.push(s);
    }
    out.sort_by_key(set_key);
    out
}

/// Vertex sets inside `s` that induce a disconnected subgraph.
fn disconnected_within(graph: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let verts: Vec<usize> = s.iter().collect();
    let local = Graph::from_edges(
        verts.len(),
        (0..verts.len())
            .flat_map(|a| (a + 1..verts.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| graph.has_edge(verts[a], verts[b])),
    );
    local
        .disconnected_subsets()
        .into_iter()
        .map(|l| l.iter().map(|k| verts[k]).collect())
        .collect()
}

fn join_has_homology(index: &FaceIndex<'_>, left: &VertexSet, right: &VertexSet, degree: usize, field: FieldSpec) -> bool {
    let dl = restricted_dims(index, left, field);
    let dr = restricted_dims(index, right, field);
    (0..degree).any(|a| {
        let b = degree - 1 - a;
        dl.get(a + 1).is_some_and(|&x| x > 0) && dr.get(b + 1).is_some_and(|&x| x > 0)
    })
}

fn pruned_triples(complex: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<Vec<PairSpec>> {
    // every restriction of a simplex is a simplex
    if complex.facets().len() <= 1 {
        return Ok(Vec::new());
    }
    let top = usize::try_from(complex.dim()).unwrap_or(0).min(cap);
    let graph = Graph::one_skeleton(complex);
    let mut out: BTreeSet<(usize, SetKey, SetKey)> = BTreeSet::new();
    let mut push = |t: PairSpec| {
        out.insert(t.canonical().sort_key());
    };
    if top >= 1 && !graph.is_chordal() {
        let cycle = graph.chordless_cycle().expect("a non-chordal graph has a chordless cycle");
        let left: VertexSet = [cycle[1], cycle[cycle.len() - 1]].into_iter().collect();
        let right = cycle.iter().copied().collect::<VertexSet>().difference(&left);
        push(PairSpec::new(left, right, 1));
    }
    let index = FaceIndex::new(complex);
    let mut table: Option<SubsetTable> = None;
    for i in 2..=top {
        if i >= 3 && table.is_none() {
            table = Some(SubsetTable::build(complex, field)?);
        }
        let d = i as isize;
        for flat in flats(&index, d, field) {
            if restricted_dims(&index, &flat, field)[i + 1] == 0 {
                continue;
            }
            let mut sides: Vec<VertexSet> = disconnected_within(&graph, &flat);
            if let Some(t) = &table {
                let fm = mask_of(&flat);
                for a in 1..=(i - 1) / 2 {
                    let mut sub = fm;
                    while sub != 0 {
                        if t.dim(sub, a as isize) > 0 {
                            sides.push(VertexSet::from_mask(sub));
                        }
                        sub = (sub - 1) & fm;
                    }
                }
            }
            let found: Vec<PairSpec> = sides
                .par_iter()
                .filter(|l| **l != flat)
                .filter_map(|l| {
                    let r = flat.difference(l);
                    join_has_homology(&index, l, &r, i, field).then(|| PairSpec::new(l.clone(), r, i))
                })
                .collect();
            found.into_iter().for_each(&mut push);
        }
    }
    Ok(out
        .into_iter()
        .map(|(degree, (_, l), (_, r))| PairSpec::new(l.into_iter().collect(), r.into_iter().collect(), degree))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{mobius_with_two_discs, subdivided_projective_plane};

    fn set(c: &SimplicialComplex, labels: &[&str]) -> VertexSet {
        c.vertex_set(labels).unwrap()
    }

    #[test]
    fn example_one_verdicts() {
        let c = mobius_with_two_discs();
        for scope in [PairScope::All, PairScope::Pruned] {
            let f2 = product_trivial(&c, FieldSpec::PrimeField(2), &scope).unwrap();
            assert!(f2.product_trivial);
            assert_eq!(f2.basis_of_claim, BasisOfClaim::Dim2Lemma);
            let q = product_trivial(&c, FieldSpec::Rationals, &scope).unwrap();
            assert!(!q.product_trivial);
            let named = (set(&c, &["a", "b"]), set(&c, &["1", "2", "3", "4", "5"]), 2);
            assert!(q.failing_pairs.iter().any(|r| (r.left.clone(), r.right.clone(), r.degree) == named));
        }
    }

    #[test]
    fn example_two_verdicts() {
        let c = subdivided_projective_plane();
        for scope in [PairScope::All, PairScope::Pruned] {
            assert!(product_trivial(&c, FieldSpec::Rationals, &scope).unwrap().product_trivial);
            let f2 = product_trivial(&c, FieldSpec::PrimeField(2), &scope).unwrap();
            assert!(!f2.product_trivial);
            if scope == PairScope::All {
                let named = (set(&c, &["1", "5", "a"]), set(&c, &["2", "3", "4", "b"]), 2);
                assert!(f2.failing_pairs.iter().any(|r| (r.left.clone(), r.right.clone(), r.degree) == named));
            }
        }
    }

    #[test]
    fn four_cycle_fails_in_degree_one() {
        let c = SimplicialComplex::from_facets(["0", "1", "2", "3"], [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]])
            .unwrap();
        for scope in [PairScope::All, PairScope::Pruned] {
            let v = product_trivial(&c, FieldSpec::Rationals, &scope).unwrap();
            assert!(!v.product_trivial);
            assert_eq!(v.failing_pairs[0].degree, 1);
        }
    }

    #[test]
    fn critical_scope_validates_entries() {
        let c = mobius_with_two_discs();
        let ok = PairSpec::new(set(&c, &["a", "b"]), set(&c, &["1", "2", "3", "4", "5"]), 2);
        let v = product_trivial(&c, FieldSpec::Rationals, &PairScope::Critical(vec![ok.clone()])).unwrap();
        assert_eq!(v.examined, 1);
        assert!(!v.product_trivial);
        let bad = PairSpec { degree: 0, ..ok.clone() };
        assert!(matches!(
            product_trivial(&c, FieldSpec::Rationals, &PairScope::Critical(vec![bad])),
            Err(Error::InvalidScope(_))
        ));
        let overlap = PairSpec { right: ok.left.clone(), ..ok };
        assert!(matches!(
            product_trivial(&c, FieldSpec::Rationals, &PairScope::Critical(vec![overlap])),
            Err(Error::InvalidScope(_))
        ));
    }

    #[test]
    fn all_scope_refuses_large_complexes() {
        let labels: Vec<String> = (0..17).map(|k| k.to_string()).collect();
        let c = SimplicialComplex::simplex(&labels);
        assert_eq!(
            product_trivial(&c, FieldSpec::Rationals, &PairScope::All).unwrap_err(),
            Error::TooManyVertices(17, ALL_SCOPE_LIMIT)
        );
        assert!(product_trivial(&c, FieldSpec::Rationals, &PairScope::Pruned).unwrap().product_trivial);
        let path = SimplicialComplex::from_facets(&labels, (0..16).map(|k| [labels[k].clone(), labels[k + 1].clone()]))
            .unwrap();
        assert!(product_trivial(&path, FieldSpec::Rationals, &PairScope::Pruned).unwrap().product_trivial);
    }

    #[test]
    fn canonical_orders_by_size_then_vertices() {
        let a: VertexSet = [0, 5].into_iter().collect();
        let b: VertexSet = [1].into_iter().collect();
        let p = PairSpec::new(a.clone(), b.clone(), 1).canonical();
        assert_eq!((p.left, p.right), (b, a));
    }
}
