//! Abstract simplicial complexes stored as a facet antichain.

mod constructions;
mod face;
mod graph;
pub mod io;
mod vertex_set;

use std::collections::{HashMap, HashSet};

pub use constructions::*;
pub use face::Face;
pub use graph::{Graph, masseyless_hypothesis};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// A finite abstract simplicial complex.
///
/// Vertices carry distinct labels and dense indices `0..n`; the facets form an
/// antichain and every vertex lies in some facet. Membership of an arbitrary
/// face is containment in a facet. Two degenerate complexes are representable
/// through dedicated constructors: the void complex (no faces at all) and the
/// irrelevant complex `{∅}`.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
    /// `faces[d + 1]` lists the `d`-dimensional faces in lexicographic order.
    faces: Vec<Vec<Face>>,
    face_set: HashSet<Face>,
}

/// A restriction `Δ|_S` together with the map from its dense vertex indices back
/// to the indices of the parent complex.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub complex: SimplicialComplex,
    pub back_map: Vec<usize>,
}

impl SimplicialComplex {
    /// Builds a complex from labelled facets. Vertex indices follow the order of
    /// `labels`; nested and repeated facets are absorbed.
    pub fn from_facets<L, F, S>(labels: L, facets: F) -> Result<Self>
    where
        L: IntoIterator<Item = S>,
        S: AsRef<str>,
        F: IntoIterator,
        F::Item: IntoIterator,
        <F::Item as IntoIterator>::Item: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut faces = Vec::new();
        for facet in facets {
            let mut idx = Vec::new();
            for l in facet {
                let l = l.as_ref();
                idx.push(*index.get(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
            }
            faces.push(Face::new(idx));
        }
        Self::from_index_facets(labels, faces)
    }

    /// Builds a complex from facets given by vertex indices into `labels`.
    pub fn from_index_facets(labels: Vec<String>, facets: Vec<Face>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut covered = vec![false; n];
        for f in &facets {
            for v in f.vertices() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index: v, len: n });
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::IsolatedLabel(labels[v].clone()));
        }
        Ok(Self::assemble(labels, maximal_faces(facets)))
    }

    /// The void complex: no faces, not even the empty one.
    pub fn void() -> Self {
        Self::assemble(Vec::new(), Vec::new())
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant() -> Self {
        Self::assemble(Vec::new(), vec![Face::empty()])
    }

    /// The full simplex on the given labels.
    pub fn simplex<S: AsRef<str>>(labels: &[S]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let facet = Face::new(0..labels.len());
        Self::assemble(labels, vec![facet])
    }

    fn assemble(labels: Vec<String>, mut facets: Vec<Face>) -> Self {
        facets.sort();
        let mut face_set = HashSet::new();
        for f in &facets {
            for s in f.subfaces() {
                face_set.insert(s);
            }
        }
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); if facets.is_empty() { 0 } else { top + 1 }];
        for f in &face_set {
            faces[f.len()].push(f.clone());
        }
        for level in &mut faces {
            level.sort();
        }
        Self { labels, facets, faces, face_set }
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels to a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n_vertices())
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; `-1` for the irrelevant and the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces of dimension `d` in lexicographic order (`d = -1` gives `[∅]`).
    pub fn faces_of_dim(&self, d: isize) -> &[Face] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.faces.get(k))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.face_set.contains(f)
    }

    /// The induced subcomplex on `s`, re-indexed densely in the parent's order.
    pub fn restrict(&self, s: &VertexSet) -> Result<Restriction> {
        if let Some(v) = s.last() {
            if v >= self.n_vertices() {
                return Err(Error::VertexOutOfRange { index: v, len: self.n_vertices() });
            }
        }
        let back_map: Vec<usize> = s.iter().collect();
        if self.is_void() {
            return Ok(Restriction { complex: Self::void(), back_map });
        }
        let mut forward = vec![usize::MAX; self.n_vertices()];
        for (new, &old) in back_map.iter().enumerate() {
            forward[old] = new;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.intersect(s).map_indices(|v| forward[v]))
            .collect();
        let labels = back_map.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Restriction {
            complex: Self::assemble(labels, maximal_faces(facets)),
            back_map,
        })
    }

    /// The join `A * B`; vertices of `A` precede those of `B`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(l) = self.labels.iter().find(|l| other.labels.contains(l)) {
            return Err(Error::OverlappingLabels(l.clone()));
        }
        let shift = self.n_vertices();
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(&g.map_indices(|v| v + shift)));
            }
        }
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        Ok(Self::assemble(labels, facets))
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Self {
        if self.dim() <= k as isize {
            return self.clone();
        }
        let facets: Vec<Face> = self
            .faces
            .iter()
            .take(k + 2)
            .flatten()
            .filter(|f| self.facets.iter().any(|g| f.is_subset(g)) && f.dim() <= k as isize)
            .cloned()
            .collect();
        Self::assemble(self.labels.clone(), maximal_faces(facets))
    }

    /// Adds faces (with all their subsets) to the complex.
    pub fn with_faces(&self, extra: &[Face]) -> Result<Self> {
        for f in extra {
            if let Some(v) = f.vertices().find(|&v| v >= self.n_vertices()) {
                return Err(Error::VertexOutOfRange { index: v, len: self.n_vertices() });
            }
        }
        let facets = self.facets.iter().chain(extra).cloned().collect();
        Ok(Self::assemble(self.labels.clone(), maximal_faces(facets)))
    }

    /// Inclusion-minimal non-faces, i.e. the supports of the minimal monomial
    /// generators of the Stanley–Reisner ideal, in lexicographic order.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::empty()];
        }
        let mut out = HashSet::new();
        for level in &self.faces {
            for f in level {
                let after = f.raw().last().map_or(0, |&v| v as usize + 1);
                // a minimal non-face M is found once, from F = M minus its largest vertex
                for v in after..self.n_vertices() {
                    let m = f.with_vertex(v);
                    if !self.contains_face(&m)
                        && (0..m.len()).all(|k| self.contains_face(&m.without_position(k)))
                    {
                        out.insert(m);
                    }
                }
            }
        }
        let mut out: Vec<Face> = out.into_iter().collect();
        out.sort();
        out
    }

    /// Rebuilds a complex on `labels` from its minimal non-faces.
    pub fn from_minimal_nonfaces(labels: Vec<String>, nonfaces: &[Face]) -> Result<Self> {
        let mut facets = vec![Face::new(0..labels.len())];
        for m in nonfaces {
            let mut next = Vec::new();
            for f in facets {
                if m.is_subset(&f) {
                    next.extend(m.vertices().map(|v| {
                        let pos = f.raw().binary_search(&(v as u32)).unwrap();
                        f.without_position(pos)
                    }));
                } else {
                    next.push(f);
                }
            }
            facets = maximal_faces(next);
        }
        if facets.iter().all(Face::is_empty) {
            return Ok(Self::irrelevant());
        }
        Self::from_index_facets(labels, facets)
    }

    /// Facets rendered with labels, in canonical order.
    pub fn labelled_facets(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.vertices().map(|v| self.labels[v].as_str()).collect())
            .collect()
    }

    pub fn face_labels(&self, f: &Face) -> Vec<&str> {
        f.vertices().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn set_labels(&self, s: &VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.labels[v].as_str()).collect()
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("labels", &self.labels)
            .field("facets", &self.labelled_facets())
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

/// Inclusion-maximal elements, deduplicated and sorted.
fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::new();
    for f in faces {
        if !kept.iter().any(|g| f.is_subset(g)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}
