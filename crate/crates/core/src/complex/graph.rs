//! The 1-skeleton as a graph: chordality, chordless cycles and connectivity.

use std::collections::VecDeque;

use super::{SimplicialComplex, VertexSet};

/// Simple undirected graph on vertices `0..n` with bitmap adjacency.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self { adj: vec![VertexSet::new(); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The 1-skeleton of a complex.
    pub fn one_skeleton(complex: &SimplicialComplex) -> Self {
        let edges = complex.faces_of_dim(1).iter().map(|e| {
            let mut it = e.vertices();
            (it.next().unwrap(), it.next().unwrap())
        });
        Self::from_edges(complex.n_vertices(), edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The complement graph (the non-edges).
    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Lexicographic breadth-first search by partition refinement. Returns the
    /// visiting order; ties are broken towards the smallest index.
    pub fn lex_bfs(&self) -> Vec<usize> {
        let n = self.n();
        // ordered partition of unvisited vertices; the first cell is explored next
        let mut cells: VecDeque<Vec<usize>> = VecDeque::new();
        if n > 0 {
            cells.push_back((0..n).collect());
        }
        let mut order = Vec::with_capacity(n);
        while let Some(mut first) = cells.pop_front() {
            let v = first.remove(0);
            if !first.is_empty() {
                cells.push_front(first);
            }
            order.push(v);
            let nbrs = &self.adj[v];
            let mut refined = VecDeque::with_capacity(cells.len() + 1);
            for cell in cells.drain(..) {
                let (inside, outside): (Vec<usize>, Vec<usize>) =
                    cell.into_iter().partition(|&u| nbrs.contains(u));
                if !inside.is_empty() {
                    refined.push_back(inside);
                }
                if !outside.is_empty() {
                    refined.push_back(outside);
                }
            }
            cells = refined;
        }
        order
    }

    /// Tests whether `elimination` (a permutation of the vertices) is a perfect
    /// elimination ordering, using the parent check of Rose, Tarjan and Lueker.
    pub fn is_perfect_elimination_ordering(&self, elimination: &[usize]) -> bool {
        let n = self.n();
        let mut pos = vec![0; n];
        for (i, &v) in elimination.iter().enumerate() {
            pos[v] = i;
        }
        for &v in elimination {
            let later: Vec<usize> = self.adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
                if later
                    .iter()
                    .any(|&u| u != parent && !self.adj[parent].contains(u))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Chordality via LexBFS: the reverse visiting order is a perfect
    /// elimination ordering exactly when the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        let mut order = self.lex_bfs();
        order.reverse();
        self.is_perfect_elimination_ordering(&order)
    }

    /// An induced cycle of length at least four, listed in cyclic order, if one
    /// exists.
    pub fn chordless_cycle(&self) -> Option<Vec<usize>> {
        for v in 0..self.n() {
            let nbrs: Vec<usize> = self.adj[v].iter().collect();
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    // shortest a-b path avoiding v and its other neighbours
                    let mut blocked = self.adj[v].clone();
                    blocked.insert(v);
                    blocked.remove(a);
                    blocked.remove(b);
                    if let Some(path) = self.shortest_path(a, b, &blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: &VertexSet) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n()];
        prev[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[u].iter() {
                if prev[w] == usize::MAX && !blocked.contains(w) {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Connected components of the induced subgraph on `s`, each as a vertex set,
    /// ordered by their smallest vertex.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            left.remove(start);
            comp.insert(start);
            while let Some(u) = stack.pop() {
                for w in self.adj[u].intersection(&left).iter().collect::<Vec<_>>() {
                    left.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_on(&self, s: &VertexSet) -> bool {
        self.components(s).len() <= 1
    }

    /// Every vertex set whose induced subgraph is disconnected, sorted.
    ///
    /// A disconnected set is the component `C` of its smallest vertex `r`
    /// together with a nonempty set of vertices above `r` not adjacent to `C`.
    /// Connected sets `C` are grown from `r` and abandoned as soon as no such
    /// vertex is left, which keeps dense graphs cheap.
    pub fn disconnected_subsets(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut out = Vec::new();
        for root in 0..n {
            let above: VertexSet = (root + 1..n).collect();
            let comp: VertexSet = [root].into_iter().collect();
            let frontier = self.adj[root].intersection(&above);
            self.grow_components(&above, comp, frontier, VertexSet::new(), &mut out);
        }
        out.sort();
        out
    }

    fn grow_components(
        &self,
        above: &VertexSet,
        comp: VertexSet,
        frontier: VertexSet,
        excluded: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        let closed = comp.iter().fold(comp.clone(), |acc, v| acc.union(&self.adj[v]));
        let free = above.difference(&closed);
        if free.is_empty() {
            return;
        }
        for rest in nonempty_subsets(&free) {
            out.push(comp.union(&rest));
        }
        // extend comp by one frontier vertex at a time; earlier choices are excluded
        let mut excluded = excluded;
        for w in frontier.iter().collect::<Vec<_>>() {
            let mut bigger = comp.clone();
            bigger.insert(w);
            excluded.insert(w);
            let new_frontier = frontier
                .union(&self.adj[w].intersection(above))
                .difference(&bigger)
                .difference(&excluded);
            self.grow_components(above, bigger, new_frontier, excluded.clone(), out);
        }
    }
}

fn nonempty_subsets(set: &VertexSet) -> Vec<VertexSet> {
    let elems: Vec<usize> = set.iter().collect();
    assert!(elems.len() < 40, "too many free vertices to enumerate");
    (1u64..1 << elems.len())
        .map(|bits| {
            elems
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Whether the hypotheses of the dimension-two product criterion hold:
/// `dim Δ ≤ 2` and no two disjoint nonempty vertex sets both induce
/// disconnected restrictions.
///
/// A disconnected restriction contains a non-edge between two of its
/// components, and two disjoint non-edges give two disconnected two-point
/// restrictions; so the pair condition is equivalent to the non-edge graph
/// having no matching of size two.
pub fn masseyless_hypothesis(complex: &SimplicialComplex) -> bool {
    if complex.dim() > 2 {
        return false;
    }
    let non_edges: Vec<(usize, usize)> = Graph::one_skeleton(complex).complement().edges().collect();
    !non_edges.iter().enumerate().any(|(i, &(a, b))| {
        non_edges[i + 1..]
            .iter()
            .any(|&(c, d)| a != c && a != d && b != c && b != d)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        let g = cycle(4);
        assert!(!g.is_chordal());
        let c = g.chordless_cycle().unwrap();
        assert_eq!(c.len(), 4);
        let mut h = g.clone();
        h.add_edge(0, 2);
        assert!(h.is_chordal());
        assert!(h.chordless_cycle().is_none());
    }

    #[test]
    fn lex_bfs_visits_everything() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]);
        let mut order = g.lex_bfs();
        assert_eq!(order[0], 0);
        order.sort();
        assert_eq!(order, (0..6).collect::<Vec<_>>());
        assert!(g.is_chordal());
    }

    #[test]
    fn disconnected_subsets_of_small_graphs() {
        // path 0-1-2: disconnected sets are {0,2} only
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let d = p.disconnected_subsets();
        assert_eq!(d, vec![[0, 2].into_iter().collect::<VertexSet>()]);
        // three isolated vertices: every set of size >= 2
        let e = Graph::new(3);
        assert_eq!(e.disconnected_subsets().len(), 4);
    }

    #[test]
    fn components_of_induced_subgraph() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]);
        let comps = g.components(&VertexSet::full(5));
        assert_eq!(comps.len(), 3);
        assert!(g.is_connected_on(&[0, 1].into_iter().collect()));
        assert!(g.is_connected_on(&VertexSet::new()));
    }
}
