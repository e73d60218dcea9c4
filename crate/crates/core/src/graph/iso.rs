//! Isomorphism testing for small graphs.
//!
//! Vertices are colored by iterated neighborhood refinement starting from
//! degree, triangle count and distance profile; a backtracking search then
//! only pairs equally colored vertices.

use super::{Graph, Vertex};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

/// Stable refinement colors; equal graphs up to relabeling get equal color multisets.
pub fn refined_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = g.vertices().map(|v| local_signature(g, v)).collect();
    let mut classes = count_distinct(&colors);
    for _ in 0..g.order() {
        let next: Vec<u64> = g
            .vertices()
            .map(|v| {
                let mut nbr: Vec<u64> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nbr.sort_unstable();
                let mut h = DefaultHasher::new();
                colors[v].hash(&mut h);
                nbr.hash(&mut h);
                h.finish()
            })
            .collect();
        let next_classes = count_distinct(&next);
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    colors
}

/// Degree, triangles through `v`, and the number of vertices at each distance from `v`.
fn local_signature(g: &Graph, v: Vertex) -> u64 {
    let nbrs = g.neighbors(v);
    let triangles: usize = nbrs.iter().map(|w| g.neighbors(w).intersection_len(nbrs)).sum::<usize>() / 2;
    let mut layers = Vec::new();
    for d in g.distances_from(v).into_iter().flatten() {
        if layers.len() <= d {
            layers.resize(d + 1, 0usize);
        }
        layers[d] += 1;
    }
    let mut h = DefaultHasher::new();
    (g.degree(v), triangles, layers).hash(&mut h);
    h.finish()
}

fn count_distinct(xs: &[u64]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Isomorphism-invariant fingerprint used to bucket graphs before exact tests.
pub fn invariant_hash(g: &Graph) -> u64 {
    let mut colors = refined_colors(g);
    colors.sort_unstable();
    let mut h = DefaultHasher::new();
    g.order().hash(&mut h);
    g.size().hash(&mut h);
    colors.hash(&mut h);
    h.finish()
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let cg = refined_colors(g);
    let ch = refined_colors(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }

    let order = search_order(g, &cg);
    let mut map = vec![usize::MAX; g.order()];
    let mut used = h.empty_set();
    extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used).then_some(map)
}

/// Rarest color class first, then grow along edges so that each new vertex
/// is constrained by already-mapped neighbors.
fn search_order(g: &Graph, colors: &[u64]) -> Vec<Vertex> {
    let freq = |c: u64| colors.iter().filter(|&&x| x == c).count();
    let mut placed = g.empty_set();
    let mut order = Vec::with_capacity(g.order());
    while order.len() < g.order() {
        let next = g
            .vertices()
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| {
                let anchored = g.neighbors(v).intersection_len(&placed);
                (usize::MAX - anchored, freq(colors[v]), v)
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    order: &[Vertex],
    depth: usize,
    map: &mut [Vertex],
    used: &mut super::VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in h.vertices() {
        if used.contains(w) || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

/// Keeps the first member of every isomorphism class, preserving order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: std::collections::HashMap<u64, Vec<usize>> = Default::default();
    let mut out: Vec<Graph> = Vec::new();
    for g in graphs {
        let key = invariant_hash(&g);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&out[i], &g)) {
            continue;
        }
        bucket.push(out.len());
        out.push(g);
    }
    out
}
