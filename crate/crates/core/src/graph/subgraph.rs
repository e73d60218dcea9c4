//! Subgraph (not necessarily induced) containment for small patterns.

use super::{Graph, Vertex};

/// `K_4` minus the edge `0-3`; vertices 1 and 2 have degree 3.
pub fn diamond() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("diamond edges are valid")
}

/// `K_{2,3}` (sides `{0,1}` and `{2,3,4}`) plus the edge `2-3`; vertex 4 has degree 2.
pub fn y_pattern() -> Graph {
    Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])
        .expect("Y edges are valid")
}

/// Finds an injective map `pattern -> host` sending pattern edges to host edges.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<Vertex>> {
    if pattern.order() > host.order() {
        return None;
    }
    let order = pattern_order(pattern);
    let mut map = vec![usize::MAX; pattern.order()];
    let mut used = host.empty_set();
    extend(host, pattern, &order, 0, &mut map, &mut used).then_some(map)
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}

fn pattern_order(p: &Graph) -> Vec<Vertex> {
    let mut placed = p.empty_set();
    let mut order = Vec::new();
    while order.len() < p.order() {
        let v = p
            .vertices()
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (p.neighbors(v).intersection_len(&placed), p.degree(v), usize::MAX - v))
            .unwrap();
        placed.insert(v);
        order.push(v);
    }
    order
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut super::VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // restrict to common neighbors of already-mapped pattern neighbors
    let mut candidates = host.full_set();
    for &u in &order[..depth] {
        if pattern.has_edge(u, v) {
            candidates.intersect_with(host.neighbors(map[u]));
        }
    }
    candidates.difference_with(used);
    for w in candidates.iter() {
        if host.degree(w) < pattern.degree(v) {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
    }
    map[v] = usize::MAX;
    false
}

impl Graph {
    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.neighbors(u).intersection_len(self.neighbors(v)) > 0)
    }

    pub fn has_diamond(&self) -> bool {
        contains_subgraph(self, &diamond())
    }

    #[allow(non_snake_case)]
    pub fn has_Y_subgraph(&self) -> bool {
        contains_subgraph(self, &y_pattern())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Tries every injective assignment of pattern vertices.
    fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
        fn go(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
            if map.len() == pattern.order() {
                return pattern
                    .edges()
                    .iter()
                    .all(|&(a, b)| host.has_edge(map[a], map[b]));
            }
            for w in host.vertices() {
                if map.contains(&w) {
                    continue;
                }
                map.push(w);
                if go(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
            false
        }
        go(host, pattern, &mut Vec::new())
    }

    #[test]
    fn prism_has_triangle_only() {
        let prism = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        assert!(prism.has_triangle());
        assert!(!prism.has_diamond());
        assert!(!prism.has_Y_subgraph());
        assert!(!brute_force_contains(&prism, &diamond()));
        assert!(!brute_force_contains(&prism, &y_pattern()));
    }

    #[test]
    fn k4_contains_diamond_not_y() {
        let k4 = Graph::complete(4);
        assert!(k4.has_diamond());
        assert!(!k4.has_Y_subgraph());
    }

    #[test]
    fn y_contains_itself() {
        assert!(y_pattern().has_Y_subgraph());
        assert!(y_pattern().has_diamond());
    }

    fn random_graph() -> impl Strategy<Value = Graph> {
        (1usize..8).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |raw| {
                Graph::new(n, raw.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(g in random_graph()) {
            prop_assert_eq!(g.has_triangle(), brute_force_contains(&g, &Graph::complete(3)));
            prop_assert_eq!(g.has_diamond(), brute_force_contains(&g, &diamond()));
            prop_assert_eq!(g.has_Y_subgraph(), brute_force_contains(&g, &y_pattern()));
        }
    }
}
