//! Greedy minimum-footprint sequences and closed-form bounds for regular graphs.
//!
//! The greedy rule plays, at every step, a vertex that footprints at least
//! one vertex (for Z-sequences: at least one vertex other than itself) and
//! as few as possible, preferring already dominated vertices, then the
//! lowest index. With the right starting prefix the resulting dominating
//! sequence witnesses the lower bounds below.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::sequences::{footprints, Variant, VertexSequence};
use num_rational::Ratio;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `γ_gr ≥ (n + ⌈k/2⌉ - 2)/(k - 1)`
    GrundyLower,
    /// `γ_gr^Z ≥ (n - 1)/(k - 1)` with a triangle, `(n - 2)/(k - 1)` without
    ZGrundyLower,
    /// `Z ≤ (n(k - 2) + 1)/(k - 1)` with a triangle, `(n(k - 2) + 2)/(k - 1)` without
    ZeroForcingUpper,
    /// `γ_gr^Z ≥ n/2` for connected cubic graphs other than `K_4` and `K_{3,3}`
    CubicHalf,
}

/// An evaluated bound; `value` is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundSpec {
    pub kind: BoundKind,
    pub n: usize,
    pub k: usize,
    pub has_triangle: bool,
    pub value: Rational,
}

impl BoundSpec {
    pub fn evaluate(kind: BoundKind, n: usize, k: usize, has_triangle: bool) -> Result<Self> {
        let value = match kind {
            BoundKind::GrundyLower => grundy_regular_lower_bound(n, k)?,
            BoundKind::ZGrundyLower => zgrundy_regular_lower_bound(n, k, has_triangle)?,
            BoundKind::ZeroForcingUpper => zero_forcing_regular_upper_bound(n, k, has_triangle)?,
            BoundKind::CubicHalf => {
                if k != 3 {
                    return Err(Error::InvalidDegree(k));
                }
                Rational::new(n as i64, 2)
            }
        };
        Ok(BoundSpec { kind, n, k, has_triangle, value })
    }

    pub fn ceil(&self) -> i64 {
        self.value.ceil().to_integer()
    }

    pub fn floor(&self) -> i64 {
        self.value.floor().to_integer()
    }

    pub fn is_upper(&self) -> bool {
        self.kind == BoundKind::ZeroForcingUpper
    }

    /// `value - bound` for lower bounds, `bound - value` for upper bounds.
    pub fn slack(&self, value: usize) -> Rational {
        let v = Rational::from_integer(value as i64);
        if self.is_upper() {
            self.value - v
        } else {
            v - self.value
        }
    }
}

fn check_degree(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::InvalidDegree(k))
    } else {
        Ok(())
    }
}

pub fn grundy_regular_lower_bound(n: usize, k: usize) -> Result<Rational> {
    check_degree(k)?;
    if n < k + 1 {
        return Err(Error::Precondition(format!("order {n} below k + 1 = {}", k + 1)));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(Rational::new(n + (k + 1) / 2 - 2, k - 1))
}

pub fn zgrundy_regular_lower_bound(n: usize, k: usize, has_triangle: bool) -> Result<Rational> {
    check_degree(k)?;
    let (n, k) = (n as i64, k as i64);
    let drop = if has_triangle { 1 } else { 2 };
    Ok(Rational::new(n - drop, k - 1))
}

pub fn zero_forcing_regular_upper_bound(n: usize, k: usize, has_triangle: bool) -> Result<Rational> {
    check_degree(k)?;
    let (n, k) = (n as i64, k as i64);
    let extra = if has_triangle { 1 } else { 2 };
    Ok(Rational::new(n * (k - 2) + extra, k - 1))
}

/// Adjacent non-twin pair with the most common neighbors, ties broken
/// lexicographically. `None` when no such pair has a common neighbor.
pub fn triangle_start_pair(g: &Graph) -> Result<Option<(Vertex, Vertex)>> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    if !g.has_triangle() {
        return Err(Error::Precondition("graph is triangle-free".into()));
    }
    if g.size() == g.order() * (g.order() - 1) / 2 {
        return Err(Error::Precondition("graph is complete".into()));
    }
    let mut best: Option<((Vertex, Vertex), usize)> = None;
    for (u, v) in g.edges().iter().copied() {
        if g.are_twins(u, v) {
            continue;
        }
        let common = g.neighbors(u).intersection_len(g.neighbors(v));
        if common > 0 && best.is_none_or(|(_, c)| common > c) {
            best = Some(((u, v), common));
        }
    }
    Ok(best.map(|(p, _)| p))
}

/// Extends `start` greedily to a dominating sequence of the given variant.
pub fn greedy_min_footprint(
    g: &Graph,
    variant: Variant,
    start: Option<&[Vertex]>,
) -> Result<VertexSequence> {
    if variant == Variant::Z {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let mut seq = footprints(g, start.unwrap_or(&[]))
        .map_err(|e| Error::InvalidPrefix(e.to_string()))?;
    if !seq.is_valid(variant) {
        return Err(Error::InvalidPrefix(format!(
            "start is not a {} sequence",
            variant.name()
        )));
    }
    while let Some(v) = next_greedy(g, variant, &seq) {
        seq.push(g, v)?;
    }
    Ok(seq)
}

fn next_greedy(g: &Graph, variant: Variant, seq: &VertexSequence) -> Option<Vertex> {
    let dominated = seq.dominated();
    g.vertices()
        .filter(|&v| variant.playable(g, dominated, v))
        .min_by_key(|&v| {
            let count = g.closed_neighborhood(v).difference_len(dominated);
            (count, !dominated.contains(v), v)
        })
}

/// Starting prefix used by the constructive lower-bound argument for the
/// closed variant on a connected regular graph.
///
/// * bipartite: one full color class, which is already dominating;
/// * with a triangle: the start pair, when one exists;
/// * cubic, triangle-free and non-bipartite: a path along a shortest odd
///   cycle, cut where an outside vertex sees two cycle vertices, or the
///   whole cycle otherwise;
/// * anything else: no prefix.
pub fn bound_start(g: &Graph) -> Result<Vec<Vertex>> {
    if let Some(colors) = g.two_coloring() {
        if g.isolated_vertex().is_none() {
            let side = colors[0];
            return Ok(g.vertices().filter(|&v| colors[v] == side).collect());
        }
    }
    let complete = g.size() == g.order() * g.order().saturating_sub(1) / 2;
    if g.has_triangle() {
        if complete || !g.is_connected() {
            return Ok(Vec::new());
        }
        return Ok(triangle_start_pair(g)?.map_or_else(Vec::new, |(u, v)| vec![u, v]));
    }
    if g.is_cubic() {
        if let Some(cycle) = g.shortest_odd_cycle() {
            return Ok(odd_cycle_start(g, &cycle));
        }
    }
    Ok(Vec::new())
}

fn odd_cycle_start(g: &Graph, cycle: &[Vertex]) -> Vec<Vertex> {
    let len = cycle.len();
    let pos = |v: Vertex| cycle.iter().position(|&c| c == v);
    // outside vertex with two cycle neighbors at minimum cycle distance
    let mut best: Option<(usize, usize, usize)> = None; // (distance, i, j)
    for x in g.vertices().filter(|&x| pos(x).is_none()) {
        let on_cycle: Vec<usize> = g.neighbors(x).iter().filter_map(pos).collect();
        for (a, &i) in on_cycle.iter().enumerate() {
            for &j in &on_cycle[a + 1..] {
                let d = (i + len - j) % len;
                let d = d.min(len - d);
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    match best {
        Some((d, i, j)) => {
            // walk the shorter arc from position i to position j
            let forward = (j + len - i) % len == d;
            (0..=d)
                .map(|s| {
                    if forward {
                        cycle[(i + s) % len]
                    } else {
                        cycle[(i + len - s) % len]
                    }
                })
                .collect()
        }
        None => cycle.to_vec(),
    }
}

/// Z-sequence prefix for a connected cubic graph other than `K_4` and
/// `K_{3,3}` in which every vertex after the first footprints at most two
/// vertices and at least two footprint exactly one. Greedy extension of
/// such a prefix reaches length at least `n/2`.
///
/// * with a diamond `v, {p, q}, a` (`p ~ q`, `v ≁ a`): `(v, p, a)`, or
///   `(v, p, x)` with `x` the third neighbor of `v` when `v` and `a` are
///   open twins;
/// * with a triangle but no diamond: the triangle;
/// * triangle-free: a shortest cycle when every cycle vertex has a private
///   outside neighbor, otherwise a four-vertex prefix built around the
///   common outside neighbors of opposite vertices of a 4-cycle.
pub fn cubic_z_start(g: &Graph) -> Result<Vec<Vertex>> {
    if !g.is_cubic() || !g.is_connected() {
        return Err(Error::Precondition("graph is not connected cubic".into()));
    }
    if g.order() == 4 || (g.order() == 6 && g.is_bipartite()) {
        return Err(Error::Precondition("K4 and K3,3 have no such prefix".into()));
    }
    if g.has_triangle() {
        return Ok(triangle_z_start(g));
    }
    let cycle = g.shortest_cycle().expect("cubic graphs contain cycles");
    let on_cycle = |v: Vertex| cycle.contains(&v);
    let outside = |v: Vertex| -> Vertex {
        g.neighbors(v)
            .iter()
            .find(|&w| !on_cycle(w))
            .expect("a cycle vertex of a cubic graph has an outside neighbor when the cycle is chordless")
    };
    let private = |v: Vertex| {
        let u = outside(v);
        g.neighbors(u).iter().filter(|&w| on_cycle(w)).count() == 1
    };
    if cycle.iter().all(|&v| private(v)) {
        return Ok(cycle);
    }
    debug_assert_eq!(cycle.len(), 4, "cycles of length five or more have private neighbors");
    let c = if outside(cycle[0]) == outside(cycle[2]) {
        cycle.clone()
    } else {
        vec![cycle[1], cycle[2], cycle[3], cycle[0]]
    };
    let (v1, v2, v3, v4) = (c[0], c[1], c[2], c[3]);
    let b = outside(v1);
    debug_assert_eq!(b, outside(v3));
    let (u2, u4) = (outside(v2), outside(v4));
    if u2 == u4 {
        let x = g.neighbors(b).iter().find(|&w| w != v1 && w != v3).unwrap();
        return Ok(if g.neighbors(u2).contains(x) { vec![v1, v2, b, x] } else { vec![v1, v2, b, u2] });
    }
    let (v2, v4, u2, u4) = if g.has_edge(b, u2) { (v4, v2, u4, u2) } else { (v2, v4, u2, u4) };
    Ok(if !g.has_edge(b, u4) {
        vec![v1, b, v2, v4]
    } else if g.has_edge(u2, u4) {
        vec![v1, b, u4, u2]
    } else {
        vec![v1, b, v2, u4]
    })
}

fn triangle_z_start(g: &Graph) -> Vec<Vertex> {
    for (p, q) in g.edges().iter().copied() {
        let common = g.neighbors(p).intersection(g.neighbors(q));
        if common.len() == 2 {
            let (v, a) = (common.first().unwrap(), common.iter().nth(1).unwrap());
            if g.neighbors(v) != g.neighbors(a) {
                return vec![v, p, a];
            }
            let x = g.neighbors(v).iter().find(|&w| w != p && w != q).unwrap();
            return vec![v, p, x];
        }
    }
    for (p, q) in g.edges().iter().copied() {
        if let Some(r) = g.neighbors(p).intersection(g.neighbors(q)).first() {
            return vec![p, q, r];
        }
    }
    unreachable!("caller checked for a triangle")
}

/// Greedy extension of the case-appropriate starting prefix.
///
/// The closed variant uses [`bound_start`] on regular graphs and no prefix
/// otherwise. The Z variant uses [`cubic_z_start`] on connected cubic graphs other
/// than `K_4` and `K_{3,3}`, the start pair on other regular graphs with a
/// triangle, and no prefix otherwise.
pub fn constructive_sequence(g: &Graph, variant: Variant) -> Result<VertexSequence> {
    let start = match variant {
        Variant::Closed if g.regularity().is_some() => bound_start(g)?,
        Variant::Closed => Vec::new(),
        Variant::Z => {
            let complete = g.size() * 2 == g.order() * g.order().saturating_sub(1);
            if g.is_cubic() && g.is_connected() && !complete && !(g.order() == 6 && g.is_bipartite()) {
                cubic_z_start(g)?
            } else if g.regularity().is_some() && g.is_connected() && g.has_triangle() && !complete {
                triangle_start_pair(g)?.map_or_else(Vec::new, |(u, v)| vec![u, v])
            } else {
                Vec::new()
            }
        }
    };
    greedy_min_footprint(g, variant, Some(&start))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn grundy_bound_values() {
        assert_eq!(grundy_regular_lower_bound(10, 3).unwrap(), r(5, 1));
        assert_eq!(grundy_regular_lower_bound(12, 4).unwrap(), r(4, 1));
        assert_eq!(grundy_regular_lower_bound(8, 5).unwrap(), r(9, 4));
        assert_eq!(grundy_regular_lower_bound(8, 2), Err(Error::InvalidDegree(2)));
    }

    #[test]
    fn zgrundy_bound_values() {
        let b = zgrundy_regular_lower_bound(6, 3, true).unwrap();
        assert_eq!(b, r(5, 2));
        assert_eq!(b.ceil().to_integer(), 3);
        for k in 3..8 {
            assert_eq!(zgrundy_regular_lower_bound(2 * k, k, false).unwrap(), r(2, 1));
        }
        assert_eq!(zgrundy_regular_lower_bound(10, 3, false).unwrap(), r(4, 1));
    }

    #[test]
    fn zero_forcing_bound_values() {
        assert_eq!(zero_forcing_regular_upper_bound(6, 3, false).unwrap(), r(4, 1));
        assert_eq!(zero_forcing_regular_upper_bound(6, 3, true).unwrap(), r(7, 2));
        assert_eq!(zero_forcing_regular_upper_bound(10, 3, false).unwrap(), r(6, 1));
        assert!(zero_forcing_regular_upper_bound(10, 1, false).is_err());
    }

    #[test]
    fn bound_spec_slack() {
        let b = BoundSpec::evaluate(BoundKind::ZeroForcingUpper, 6, 3, false).unwrap();
        assert_eq!(b.slack(4), r(0, 1));
        let b = BoundSpec::evaluate(BoundKind::GrundyLower, 8, 5, false).unwrap();
        assert_eq!(b.slack(2), r(-1, 4));
        assert_eq!(b.ceil(), 3);
    }

    #[test]
    fn start_pair_on_prism() {
        let (u, v) = triangle_start_pair(&prism()).unwrap().unwrap();
        assert_eq!((u, v), (0, 1));
        assert_eq!(prism().neighbors(u).intersection_len(prism().neighbors(v)), 1);
    }

    #[test]
    fn start_pair_errors() {
        assert!(triangle_start_pair(&Graph::complete(4)).is_err());
        assert!(triangle_start_pair(&Graph::cycle(6)).is_err());
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(4));
        assert!(triangle_start_pair(&two).is_err());
    }

    #[test]
    fn greedy_on_prism() {
        let s = greedy_min_footprint(&prism(), Variant::Z, None).unwrap();
        assert!(s.is_z_sequence() && s.is_dominating());
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn greedy_rejects_bad_prefix() {
        let k4 = Graph::complete(4);
        assert!(matches!(
            greedy_min_footprint(&k4, Variant::Closed, Some(&[0, 1])),
            Err(Error::InvalidPrefix(_))
        ));
        assert!(matches!(
            greedy_min_footprint(&k4, Variant::Closed, Some(&[0, 9])),
            Err(Error::InvalidPrefix(_))
        ));
    }

    #[test]
    fn greedy_extends_prefix() {
        let c7 = Graph::cycle(7);
        let s = greedy_min_footprint(&c7, Variant::Closed, Some(&[3])).unwrap();
        assert_eq!(s.order()[0], 3);
        assert!(s.is_closed_neighborhood_sequence() && s.is_dominating());
    }

    #[test]
    fn odd_cycle_start_is_valid_prefix() {
        // Petersen: outer 5-cycle, no outside vertex sees two cycle vertices
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let p = Graph::new(10, e).unwrap();
        let start = bound_start(&p).unwrap();
        assert_eq!(start.len(), 5);
        let s = footprints(&p, &start).unwrap();
        assert!(s.is_closed_neighborhood_sequence());
        assert_eq!(constructive_sequence(&p, Variant::Closed).unwrap().len(), 5);
    }

    #[test]
    fn bipartite_start_is_a_color_class() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(bound_start(&k33).unwrap(), vec![0, 1, 2]);
        assert_eq!(constructive_sequence(&k33, Variant::Closed).unwrap().len(), 3);
    }

    fn check_cubic_prefix(g: &Graph) {
        let start = cubic_z_start(g).unwrap();
        let s = footprints(g, &start).unwrap();
        assert!(s.is_z_sequence(), "{start:?} on {g:?}");
        let sizes: Vec<usize> = s.footprints().iter().map(|f| f.len()).collect();
        assert!(sizes[1..].iter().all(|&c| c <= 2), "{sizes:?} on {g:?}");
        assert!(sizes[1..].iter().filter(|&&c| c == 1).count() >= 2, "{sizes:?} on {g:?}");
        let full = constructive_sequence(g, Variant::Z).unwrap();
        assert!(2 * full.len() >= g.order());
    }

    #[test]
    fn cubic_prefixes_on_all_small_classes() {
        let k33 = Graph::complete_bipartite(3, 3);
        for n in [6, 8, 10] {
            for g in crate::verify::enumerate_cubic(n).unwrap() {
                if !crate::graph::iso::isomorphic(&g, &k33) {
                    check_cubic_prefix(&g);
                }
            }
        }
    }

    #[test]
    fn cubic_prefix_cases() {
        // diamond with open-twin tips (two diamonds joined), triangle only (prism), girth 5
        let two_diamonds = Graph::new(
            8,
            [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (0, 4), (3, 7)],
        )
        .unwrap();
        check_cubic_prefix(&two_diamonds);
        check_cubic_prefix(&prism());
        assert_eq!(cubic_z_start(&prism()).unwrap().len(), 3);
        assert!(cubic_z_start(&Graph::complete(4)).is_err());
        assert!(cubic_z_start(&Graph::complete_bipartite(3, 3)).is_err());
        assert!(cubic_z_start(&Graph::cycle(6)).is_err());
    }
}
