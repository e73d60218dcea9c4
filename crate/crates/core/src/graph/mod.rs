//! Immutable simple graphs with bit-packed adjacency rows.
//!
//! Vertices are the dense integers `0..n`. Every row is a [`VertexSet`], so
//! neighborhood unions and differences run word-at-a-time.

mod bitset;
pub mod graph6;
pub mod iso;
pub mod structure;
pub mod subgraph;

pub use bitset::VertexSet;
pub use structure::{TwinKind, TwinPair};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Undirected edge `(u, v)` with `u < v`.
pub type Edge = (Vertex, Vertex);

/// Ordered, duplicate-free edge list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList(Vec<Edge>);

impl EdgeList {
    /// Normalizes every pair to `u < v`, sorts and removes duplicates.
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut v: Vec<Edge> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        v.sort_unstable();
        v.dedup();
        EdgeList(v)
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl FromIterator<Edge> for EdgeList {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeList::new(iter)
    }
}

/// Equality and hashing ignore the label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, label: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            label: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::new(a + b, edges).expect("complete bipartite edges are valid")
    }

    /// Rebuilds from rows; used by decoders that fill rows directly.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        Graph {
            n: adj.len(),
            adj,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edges(&self) -> EdgeList {
        EdgeList(
            self.vertices()
                .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
                .collect(),
        )
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn isolated_vertex(&self) -> Option<Vertex> {
        self.vertices().find(|&v| self.adj[v].is_empty())
    }

    /// Single-word adjacency masks, available for orders up to 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adj.iter().map(|r| r.word(0)).collect())
    }

    /// Common degree when the graph is regular (and nonempty).
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(*self.vertices().collect::<Vec<_>>().first()?);
        self.vertices().all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.n > 0 && self.is_k_regular(3)
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_set();
        let adj = self
            .vertices()
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges()
            .into_vec()
            .into_iter()
            .chain(other.edges().into_vec().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Applies `perm` as the map old vertex -> new vertex.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation length {} differs from order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = self.empty_set();
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::Precondition("relabeling is not a permutation".into()));
            }
            seen.insert(p);
        }
        let g = Graph::new(
            self.n,
            self.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
        )?;
        Ok(Graph {
            label: self.label.clone(),
            ..g
        })
    }

    /// Induced subgraph on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vs.len(), edges).expect("induced subgraph is valid")
    }

    /// Checks the symmetry, loop-freedom and row-width invariants.
    pub fn validate(&self) -> Result<()> {
        for u in self.vertices() {
            if self.adj[u].contains(u) {
                return Err(Error::LoopEdge(u));
            }
            for v in self.adj[u].iter() {
                if v >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
                }
                if !self.adj[v].contains(u) {
                    return Err(Error::Precondition(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        Ok(())
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges().as_slice())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.is_k_regular(2));
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn diamond_degrees() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![2, 3, 3, 2]);
    }

    #[test]
    fn loop_rejected() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::LoopEdge(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges().as_slice(), &[(0, 1)]);
    }

    #[test]
    fn large_orders_use_multiword_rows() {
        let g = Graph::cycle(150);
        g.validate().unwrap();
        assert!(g.is_k_regular(2));
        assert!(g.has_edge(149, 0));
        assert!(g.adjacency_masks().is_none());
    }

    #[test]
    fn complement_of_two_four_cycles_is_five_regular() {
        let two_c4 = Graph::cycle(4).disjoint_union(&Graph::cycle(4));
        let h = two_c4.complement();
        assert!(h.is_k_regular(5));
        h.validate().unwrap();
    }
}
