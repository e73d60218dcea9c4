//! Connected cubic graph generation.

use crate::error::{Error, Result};
use crate::graph::iso::dedup_isomorphic;
use crate::graph::{Graph, VertexSet};

/// Largest order handled by the built-in enumerator.
pub const ENUMERATE_MAX_ORDER: usize = 10;

/// Every connected cubic graph of order `n` at least once up to isomorphism.
///
/// Labelings are breadth-first: vertices are completed in index order and
/// the new neighbors of a vertex receive the next unused indices. A vertex
/// that is still unused when its turn comes would start a second component,
/// so that branch is cut.
pub fn enumerate_cubic_labeled(n: usize) -> Result<Vec<Graph>> {
    if n % 2 == 1 {
        return Err(Error::Precondition(format!("cubic graphs need even order, got {n}")));
    }
    if !(4..=ENUMERATE_MAX_ORDER).contains(&n) {
        return Err(Error::Precondition(format!(
            "built-in enumeration covers orders 4..={ENUMERATE_MAX_ORDER}, got {n}; ingest a graph6 file instead"
        )));
    }
    let mut state = Labeled {
        n,
        adj: vec![0; n],
        out: Vec::new(),
    };
    state.extend(0, 1);
    Ok(state.out)
}

/// One representative per isomorphism class of connected cubic graphs of order `n`.
pub fn enumerate_cubic(n: usize) -> Result<Vec<Graph>> {
    Ok(dedup_isomorphic(enumerate_cubic_labeled(n)?))
}

struct Labeled {
    n: usize,
    adj: Vec<u64>,
    out: Vec<Graph>,
}

impl Labeled {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Completes vertex `v`; vertices `0..used` already carry an index.
    fn extend(&mut self, v: usize, used: usize) {
        if v == self.n {
            let rows = self.adj.iter().map(|&w| VertexSet::from_word(self.n, w)).collect();
            self.out.push(Graph::from_rows(rows));
            return;
        }
        if v >= used {
            return;
        }
        let need = 3 - self.degree(v);
        let candidates: Vec<usize> = (v + 1..used)
            .filter(|&w| self.degree(w) < 3 && self.adj[v] >> w & 1 == 0)
            .collect();
        let mut chosen = Vec::with_capacity(need);
        self.choose(v, used, need, &candidates, 0, &mut chosen);
    }

    /// Picks an increasing subset of `candidates`, then fills the rest with fresh vertices.
    fn choose(
        &mut self,
        v: usize,
        used: usize,
        need: usize,
        candidates: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
    ) {
        let fresh = need - chosen.len();
        if used + fresh <= self.n {
            let added: Vec<usize> = chosen.iter().copied().chain(used..used + fresh).collect();
            for &w in &added {
                self.adj[v] |= 1 << w;
                self.adj[w] |= 1 << v;
            }
            self.extend(v + 1, used + fresh);
            for &w in &added {
                self.adj[v] &= !(1 << w);
                self.adj[w] &= !(1 << v);
            }
        }
        if chosen.len() == need {
            return;
        }
        for i in from..candidates.len() {
            chosen.push(candidates[i]);
            self.choose(v, used, need, candidates, i + 1, chosen);
            chosen.pop();
        }
    }
}

/// Subdivides two distinct edges and joins the two new vertices.
pub fn edge_insertions(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let edges = g.edges().into_vec();
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let mut next: Vec<(usize, usize)> = edges.iter().copied().filter(|&x| x != e && x != f).collect();
            next.extend([(e.0, n), (n, e.1), (f.0, n + 1), (n + 1, f.1), (n, n + 1)]);
            out.push(Graph::new(n + 2, next).expect("edge insertion keeps the graph simple"));
        }
    }
    out
}

/// Replaces one edge by a path through a diamond whose degree-2 vertices
/// become the path's inner ends.
pub fn diamond_insertions(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let edges = g.edges().into_vec();
    let (p, q, r, s) = (n, n + 1, n + 2, n + 3);
    edges
        .iter()
        .map(|&e| {
            let mut next: Vec<(usize, usize)> = edges.iter().copied().filter(|&x| x != e).collect();
            next.extend([(e.0, p), (p, q), (p, r), (q, r), (q, s), (r, s), (s, e.1)]);
            Graph::new(n + 4, next).expect("diamond insertion keeps the graph simple")
        })
        .collect()
}

/// Subdivides one edge in each of two graphs and joins the new vertices by a bridge.
pub fn bridge_joins(a: &Graph, b: &Graph) -> Vec<Graph> {
    let union = a.disjoint_union(b);
    let off = a.order();
    let (x, y) = (union.order(), union.order() + 1);
    let union_edges = union.edges().into_vec();
    let mut out = Vec::new();
    for &e in a.edges().iter() {
        for &(c, d) in b.edges().iter() {
            let f = (c + off, d + off);
            let mut next: Vec<(usize, usize)> = union_edges.iter().copied().filter(|&z| z != e && z != f).collect();
            next.extend([(e.0, x), (x, e.1), (f.0, y), (y, f.1), (x, y)]);
            out.push(Graph::new(x + 2, next).expect("bridge join keeps the graph simple"));
        }
    }
    out
}

/// Isomorphism classes of connected cubic graphs of orders `4, 6, ..., max_n`,
/// grown from `K_4`.
///
/// Order `n + 2` is produced by edge insertion from order `n`, diamond
/// insertion from order `n - 2`, and bridge joins of two smaller classes
/// whose orders sum to `n`.
pub fn grow_cubic_classes(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n % 2 == 1 || max_n < 4 {
        return Err(Error::Precondition(format!("max order must be even and at least 4, got {max_n}")));
    }
    if max_n > 64 {
        return Err(Error::OrderTooLarge { n: max_n, max: 64 });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::complete(4)]];
    for n in (6..=max_n).step_by(2) {
        let idx = |order: usize| (order - 4) / 2;
        let mut grown: Vec<Graph> = levels[idx(n - 2)].iter().flat_map(edge_insertions).collect();
        if n >= 8 {
            grown.extend(levels[idx(n - 4)].iter().flat_map(diamond_insertions));
        }
        for a in (4..).step_by(2).take_while(|&a| 2 * a <= n - 2) {
            let b = n - 2 - a;
            for (i, ga) in levels[idx(a)].iter().enumerate() {
                let partners = &levels[idx(b)];
                let from = if a == b { i } else { 0 };
                for gb in &partners[from..] {
                    grown.extend(bridge_joins(ga, gb));
                }
            }
        }
        log::debug!("order {n}: {} candidates", grown.len());
        levels.push(dedup_isomorphic(grown));
    }
    Ok(levels)
}
