//! Cubic graphs obtained by identifying every leaf of a `{1,3}`-tree with
//! the designated vertex of an X or Y unit.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitKind {
    /// `K_{3,3}` with one edge subdivided (7 vertices).
    X,
    /// `K_{2,3}` plus an edge between two degree-2 vertices (5 vertices).
    Y,
}

/// A unit graph with its designated degree-2 vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub kind: UnitKind,
    pub graph: Graph,
    pub alpha: Vertex,
}

impl UnitKind {
    pub fn letter(self) -> char {
        match self {
            UnitKind::X => 'X',
            UnitKind::Y => 'Y',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'X' => Some(UnitKind::X),
            'Y' => Some(UnitKind::Y),
            _ => None,
        }
    }

    pub fn order(self) -> usize {
        match self {
            UnitKind::X => 7,
            UnitKind::Y => 5,
        }
    }

    pub fn unit(self) -> Unit {
        match self {
            UnitKind::X => make_x(),
            UnitKind::Y => make_y(),
        }
    }

    /// The unit minus its designated vertex, with the two vertices that lost
    /// a neighbor.
    pub(crate) fn core(self) -> (Graph, (Vertex, Vertex)) {
        let u = self.unit();
        let rest: Vec<Vertex> = u.graph.vertices().filter(|&v| v != u.alpha).collect();
        let core = u.graph.induced_subgraph(&rest);
        let nb: Vec<Vertex> = u
            .graph
            .neighbors(u.alpha)
            .iter()
            .map(|w| rest.iter().position(|&r| r == w).unwrap())
            .collect();
        (core, (nb[0], nb[1]))
    }
}

/// Vertex 0 subdivides the edge `1-4` of `K_{3,3}` on sides `{1,2,3}`, `{4,5,6}`.
pub fn make_x() -> Unit {
    let mut edges = vec![(0, 1), (0, 4)];
    for a in 1..=3 {
        for b in 4..=6 {
            if (a, b) != (1, 4) {
                edges.push((a, b));
            }
        }
    }
    Unit {
        kind: UnitKind::X,
        graph: Graph::new(7, edges).expect("valid").with_label("X"),
        alpha: 0,
    }
}

/// `K_{2,3}` on sides `{1,2}`, `{0,3,4}` plus the edge `3-4`; vertex 0 keeps degree 2.
pub fn make_y() -> Unit {
    Unit {
        kind: UnitKind::Y,
        graph: crate::graph::subgraph::y_pattern()
            .relabel(&[1, 2, 3, 4, 0])
            .expect("permutation")
            .with_label("Y"),
        alpha: 0,
    }
}

/// Skeleton tree plus the unit attached at each leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMDecomposition {
    pub skeleton: Graph,
    /// Unit per skeleton leaf.
    pub units: BTreeMap<Vertex, UnitKind>,
    /// Skeleton leaf -> vertex of the full graph carrying that unit's designated vertex.
    pub attachment: BTreeMap<Vertex, Vertex>,
}

impl FamilyMDecomposition {
    pub fn internal_vertices(&self) -> usize {
        self.skeleton.order() - self.units.len()
    }

    /// Members whose skeleton is `K_2` or `K_{1,3}`.
    pub fn in_m_prime(&self) -> bool {
        matches!((self.skeleton.order(), self.internal_vertices()), (2, 0) | (4, 1))
    }

    /// Unit letters sorted, e.g. `"XXY"`.
    pub fn signature(&self) -> String {
        let mut letters: Vec<char> = self.units.values().map(|u| u.letter()).collect();
        letters.sort_unstable();
        letters.into_iter().collect()
    }

    pub fn rebuild(&self) -> Result<Graph> {
        Ok(make_family_m(&self.skeleton, &self.units)?.0)
    }
}

fn check_skeleton(skeleton: &Graph, units: &BTreeMap<Vertex, UnitKind>) -> Result<()> {
    let n = skeleton.order();
    if n < 2 {
        return Err(Error::Skeleton("needs at least two vertices".into()));
    }
    if !skeleton.is_connected() || skeleton.size() != n - 1 {
        return Err(Error::Skeleton("not a tree".into()));
    }
    for v in skeleton.vertices() {
        match skeleton.degree(v) {
            1 => {
                if !units.contains_key(&v) {
                    return Err(Error::Skeleton(format!("leaf {v} has no unit")));
                }
            }
            3 => {
                if units.contains_key(&v) {
                    return Err(Error::Skeleton(format!("internal vertex {v} has a unit")));
                }
            }
            d => {
                return Err(Error::Skeleton(format!("vertex {v} has degree {d}")));
            }
        }
    }
    if let Some(&v) = units.keys().find(|&&v| v >= n) {
        return Err(Error::Skeleton(format!("unit assigned to missing vertex {v}")));
    }
    Ok(())
}

/// Builds the member; returns it with the skeleton-leaf -> designated-vertex map.
///
/// Internal skeleton vertices come first (in skeleton order), then each
/// unit's vertices in leaf order.
pub fn make_family_m(
    skeleton: &Graph,
    units: &BTreeMap<Vertex, UnitKind>,
) -> Result<(Graph, BTreeMap<Vertex, Vertex>)> {
    check_skeleton(skeleton, units)?;
    let mut index = vec![usize::MAX; skeleton.order()];
    let mut next = 0;
    for v in skeleton.vertices().filter(|v| !units.contains_key(v)) {
        index[v] = next;
        next += 1;
    }
    let mut edges = Vec::new();
    let mut attachment = BTreeMap::new();
    for (&leaf, &kind) in units {
        let unit = kind.unit();
        index[leaf] = next + unit.alpha;
        attachment.insert(leaf, next + unit.alpha);
        edges.extend(unit.graph.edges().iter().map(|&(a, b)| (a + next, b + next)));
        next += unit.graph.order();
    }
    edges.extend(skeleton.edges().iter().map(|&(a, b)| (index[a], index[b])));
    let g = Graph::new(next, edges)?;
    debug_assert!(g.is_cubic());
    Ok((g, attachment))
}

/// Convenience for `K_2` / `K_{1,3}` skeletons from a unit word like `"XXY"`.
pub fn member_from_letters(letters: &str) -> Result<Graph> {
    let kinds: Vec<UnitKind> = letters
        .chars()
        .map(|c| UnitKind::from_letter(c).ok_or_else(|| Error::Input(format!("unit letter {c:?}"))))
        .collect::<Result<_>>()?;
    let (skeleton, leaves): (Graph, Vec<Vertex>) = match kinds.len() {
        2 => (Graph::path(2), vec![0, 1]),
        3 => (Graph::complete_bipartite(1, 3), vec![1, 2, 3]),
        k => return Err(Error::Skeleton(format!("{k} units need an explicit skeleton"))),
    };
    let units = leaves.into_iter().zip(kinds).collect();
    Ok(make_family_m(&skeleton, &units)?.0)
}

/// Outcome of recognition: `None` when the graph is not a member.
pub type Recognition = Option<FamilyMDecomposition>;

/// Decomposes a connected cubic graph into skeleton and units.
///
/// Bridges split the graph into 2-edge-connected pieces. Every piece must
/// be a single vertex (an internal skeleton vertex) or a pendant X/Y unit
/// whose bridge endpoint is the designated vertex.
pub fn recognize_family_m(g: &Graph) -> Result<Recognition> {
    if !g.is_cubic() {
        return Err(Error::Precondition("graph is not cubic".into()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let bridges = g.bridges();
    if bridges.is_empty() {
        return Ok(None);
    }
    let mut cut = g.clone();
    for &(u, v) in bridges.iter() {
        cut = cut.without_edge(u, v);
    }
    let pieces = cut.components();
    let mut piece_of = vec![0; g.order()];
    for (i, p) in pieces.iter().enumerate() {
        for v in p.iter() {
            piece_of[v] = i;
        }
    }

    let mut units = BTreeMap::new();
    let mut attachment = BTreeMap::new();
    for (i, piece) in pieces.iter().enumerate() {
        if piece.len() == 1 {
            continue;
        }
        let ends: Vec<Vertex> = bridges
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .filter(|&x| piece_of[x] == i)
            .collect();
        let [alpha] = ends[..] else {
            return Ok(None);
        };
        let members = piece.to_vec();
        let Some(kind) = match_unit(&cut, &members, alpha) else {
            return Ok(None);
        };
        units.insert(i, kind);
        attachment.insert(i, alpha);
    }
    if units.len() < 2 {
        return Ok(None);
    }
    let skeleton = Graph::new(
        pieces.len(),
        bridges.iter().map(|&(u, v)| (piece_of[u], piece_of[v])),
    )?;
    // every non-unit piece is a singleton, hence a degree-3 skeleton vertex
    if check_skeleton(&skeleton, &units).is_err() {
        return Ok(None);
    }
    Ok(Some(FamilyMDecomposition {
        skeleton,
        units,
        attachment,
    }))
}

/// Fixed-pattern check of a pendant piece against X and Y with `alpha` pinned.
fn match_unit(g: &Graph, members: &[Vertex], alpha: Vertex) -> Option<UnitKind> {
    let inside = |v: Vertex| members.contains(&v);
    let nb = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().filter(|&w| inside(w)).collect() };
    let alpha_nb = nb(alpha);
    let [b, c] = alpha_nb[..] else {
        return None;
    };
    if g.has_edge(b, c) {
        return None;
    }
    let others: Vec<Vertex> = members
        .iter()
        .copied()
        .filter(|&v| v != alpha && v != b && v != c)
        .collect();
    match members.len() {
        5 => {
            // remaining pair adjacent, each adjacent to both b and c
            let [p, q] = others[..] else { return None };
            let ok = g.has_edge(p, q) && [p, q].iter().all(|&x| g.has_edge(x, b) && g.has_edge(x, c));
            ok.then_some(UnitKind::Y)
        }
        7 => {
            let side_b: Vec<Vertex> = nb(b).into_iter().filter(|&w| w != alpha).collect();
            let side_c: Vec<Vertex> = nb(c).into_iter().filter(|&w| w != alpha).collect();
            if side_b.len() != 2 || side_c.len() != 2 {
                return None;
            }
            let mut all = side_b.clone();
            all.extend(&side_c);
            all.sort_unstable();
            let mut rest = others.clone();
            rest.sort_unstable();
            if all != rest {
                return None;
            }
            let complete = side_b.iter().all(|&x| side_c.iter().all(|&y| g.has_edge(x, y)));
            let independent = !g.has_edge(side_b[0], side_b[1]) && !g.has_edge(side_c[0], side_c[1]);
            (complete && independent).then_some(UnitKind::X)
        }
        _ => None,
    }
}
