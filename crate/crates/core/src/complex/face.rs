use std::fmt;

use smallvec::SmallVec;

use super::VertexSet;

/// A face given by its strictly increasing vertex indices.
///
/// The derived ordering compares vertex sequences lexicographically, which is
/// the canonical order used for chain bases and all set-valued outputs.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(SmallVec<[u32; 4]>);

impl Face {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a face from arbitrary indices, sorting and deduplicating them.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut v: SmallVec<[u32; 4]> = vertices.into_iter().map(|x| x as u32).collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, `-1` for the empty face.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&(v as u32)).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn is_within(&self, set: &VertexSet) -> bool {
        self.vertices().all(|v| set.contains(v))
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn to_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn intersect(&self, set: &VertexSet) -> Face {
        Face(self.0.iter().copied().filter(|&v| set.contains(v as usize)).collect())
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.vertices().chain(other.vertices()))
    }

    /// The face with the `k`-th vertex (in sorted position) removed.
    pub fn without_position(&self, k: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(k);
        Face(v)
    }

    pub fn with_vertex(&self, v: usize) -> Face {
        let mut out = self.0.clone();
        match out.binary_search(&(v as u32)) {
            Ok(_) => {}
            Err(pos) => out.insert(pos, v as u32),
        }
        Face(out)
    }

    /// Codimension-one faces paired with their boundary signs `(-1)^k`.
    pub fn boundary(&self) -> impl Iterator<Item = (Face, i64)> + '_ {
        (0..self.len()).map(move |k| (self.without_position(k), if k % 2 == 0 { 1 } else { -1 }))
    }

    /// Every subset of this face, including the empty face and the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.len();
        assert!(n < 32, "face too large to enumerate");
        (0u32..1 << n).map(move |bits| {
            Face(
                (0..n)
                    .filter(|k| bits >> k & 1 == 1)
                    .map(|k| self.0[k])
                    .collect(),
            )
        })
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Face {
        Face::new(self.vertices().map(f))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl<const N: usize> From<[usize; N]> for Face {
    fn from(v: [usize; N]) -> Self {
        Face::new(v)
    }
}
