//! Connectivity, girth, twins and bridges.

use super::{Edge, EdgeList, Graph, Vertex, VertexSet};
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// `N[u] = N[v]`
    Closed,
    /// `N(u) = N(v)`
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwinPair {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: TwinKind,
}

impl Graph {
    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reachable_from(s);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn reachable_from(&self, s: Vertex) -> VertexSet {
        let mut comp = self.empty_set();
        comp.insert(s);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in frontier.iter() {
                next.union_with(self.neighbors(v));
            }
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reachable_from(0).len() == self.order()
    }

    pub fn distances_from(&self, s: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let (dist, parent) = self.bfs_tree(root);
            for (u, v) in self.edges().iter().copied() {
                if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                    if parent[u] != Some(v) && parent[v] != Some(u) {
                        let len = du + dv + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring (`false`/`true` per vertex), if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.order()];
        for s in self.vertices() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u).iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Vertices of a shortest odd cycle in cyclic order, `None` for bipartite graphs.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<Vertex>> {
        self.shortest_cycle_by(true)
    }

    /// Vertices of a shortest cycle in cyclic order, `None` for forests.
    pub fn shortest_cycle(&self) -> Option<Vec<Vertex>> {
        self.shortest_cycle_by(false)
    }

    fn shortest_cycle_by(&self, odd_only: bool) -> Option<Vec<Vertex>> {
        let mut best: Option<Vec<Vertex>> = None;
        for root in self.vertices() {
            let (dist, parent) = self.bfs_tree(root);
            for (u, v) in self.edges().iter().copied() {
                let (Some(du), Some(dv)) = (dist[u], dist[v]) else {
                    continue;
                };
                let len = du + dv + 1;
                if parent[u] == Some(v) || parent[v] == Some(u) || (odd_only && du != dv) {
                    continue;
                }
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                let pu = path_to_root(&parent, u);
                let pv = path_to_root(&parent, v);
                // both paths end at the root; they must share nothing else
                let shared = pu.iter().filter(|x| pv.contains(x)).count();
                if shared != 1 {
                    continue;
                }
                let mut out = vec![root];
                out.extend(pu.iter().rev().skip(1));
                let mut tail = pv;
                tail.pop();
                out.extend(tail);
                best = Some(out);
            }
        }
        best
    }

    fn bfs_tree(&self, root: Vertex) -> (Vec<Option<usize>>, Vec<Option<Vertex>>) {
        let n = self.order();
        let mut dist = vec![None; n];
        let mut parent = vec![None; n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(dist[u].unwrap() + 1);
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// All twin pairs `u < v`, each tagged closed or open.
    pub fn find_twins(&self) -> Vec<TwinPair> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.order() {
                let kind = if self.has_edge(u, v) {
                    (self.closed_neighborhood(u) == self.closed_neighborhood(v))
                        .then_some(TwinKind::Closed)
                } else {
                    (self.neighbors(u) == self.neighbors(v)).then_some(TwinKind::Open)
                };
                if let Some(kind) = kind {
                    out.push(TwinPair { u, v, kind });
                }
            }
        }
        out
    }

    pub fn are_twins(&self, u: Vertex, v: Vertex) -> bool {
        self.closed_neighborhood(u) == self.closed_neighborhood(v)
    }

    /// Cut edges via an iterative low-link depth-first search.
    pub fn bridges(&self) -> EdgeList {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut out: Vec<Edge> = Vec::new();
        let rows: Vec<Vec<Vertex>> = self.vertices().map(|v| self.neighbors(v).to_vec()).collect();

        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if let Some(&w) = rows[v].get(*idx) {
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        EdgeList::new(out)
    }
}

fn path_to_root(parent: &[Option<Vertex>], mut v: Vertex) -> Vec<Vertex> {
    let mut path = vec![v];
    while let Some(p) = parent[v] {
        path.push(p);
        v = p;
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, e).unwrap()
    }

    fn cube() -> Graph {
        let e = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        Graph::new(8, e).unwrap()
    }

    /// Shortest cycle through each edge by deleting it and measuring the
    /// remaining distance between its endpoints.
    fn girth_oracle(g: &Graph) -> Option<usize> {
        g.edges()
            .iter()
            .filter_map(|&(u, v)| g.without_edge(u, v).distances_from(u)[v].map(|d| d + 1))
            .min()
    }

    #[test]
    fn petersen_structure() {
        let p = petersen();
        assert!(p.is_connected());
        assert!(p.is_k_regular(3));
        assert_eq!(p.girth(), Some(5));
        assert_eq!(girth_oracle(&p), Some(5));
        assert_eq!(p.shortest_odd_cycle().map(|c| c.len()), Some(5));
    }

    #[test]
    fn cube_girth() {
        assert_eq!(cube().girth(), Some(4));
        assert_eq!(girth_oracle(&cube()), Some(4));
        assert!(cube().is_bipartite());
        assert!(cube().shortest_odd_cycle().is_none());
    }

    #[test]
    fn path_has_no_cycle() {
        assert_eq!(Graph::path(3).girth(), None);
    }

    #[test]
    fn twins() {
        let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            diamond.find_twins(),
            vec![
                TwinPair { u: 0, v: 3, kind: TwinKind::Open },
                TwinPair { u: 1, v: 2, kind: TwinKind::Closed },
            ]
        );
        assert!(Graph::cycle(5).find_twins().is_empty());
        let k33 = Graph::complete_bipartite(3, 3);
        let tw = k33.find_twins();
        assert_eq!(tw.len(), 6);
        assert!(tw.iter().all(|t| t.kind == TwinKind::Open && (t.u < 3) == (t.v < 3)));
    }

    #[test]
    fn bridges_simple() {
        assert!(Graph::cycle(7).bridges().is_empty());
        assert_eq!(Graph::path(4).bridges().as_slice(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn disconnected_graph() {
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 2);
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |raw| {
                Graph::new(n, raw.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bridges_match_brute_force(g in random_graph()) {
            let base = g.components().len();
            let expected: Vec<Edge> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| g.without_edge(u, v).components().len() > base)
                .collect();
            prop_assert_eq!(g.bridges().into_vec(), expected);
        }

        #[test]
        fn girth_matches_oracle(g in random_graph()) {
            prop_assert_eq!(g.girth(), girth_oracle(&g));
        }

        #[test]
        fn shortest_cycle_has_girth_length(g in random_graph()) {
            match g.shortest_cycle() {
                None => prop_assert!(g.girth().is_none()),
                Some(c) => {
                    prop_assert_eq!(Some(c.len()), g.girth());
                    let mut sorted = c.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    prop_assert_eq!(sorted.len(), c.len());
                    for i in 0..c.len() {
                        prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                    }
                }
            }
        }

        #[test]
        fn odd_cycle_is_a_cycle(g in random_graph()) {
            match g.shortest_odd_cycle() {
                None => prop_assert!(g.is_bipartite()),
                Some(c) => {
                    prop_assert!(c.len() % 2 == 1);
                    let mut sorted = c.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    prop_assert_eq!(sorted.len(), c.len());
                    for i in 0..c.len() {
                        prop_assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
                    }
                    // an odd girth is also the shortest odd cycle length
                    if let Some(gi) = g.girth() {
                        if gi % 2 == 1 {
                            prop_assert_eq!(c.len(), gi);
                        }
                    }
                }
            }
        }
    }
}
