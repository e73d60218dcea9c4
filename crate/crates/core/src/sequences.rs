//! Closed neighborhood sequences, Z-sequences and footprints.
//!
//! Step `i` of a sequence footprints `N[v_i]` minus everything dominated by
//! the earlier steps. A closed neighborhood sequence needs a nonempty
//! footprint at every step; a Z-sequence needs a footprinted vertex other
//! than `v_i` itself.

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Closed neighborhood (Grundy domination) sequences.
    #[serde(rename = "grundy")]
    Closed,
    /// Z-sequences.
    #[serde(rename = "zgrundy")]
    Z,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Closed => "grundy",
            Variant::Z => "zgrundy",
        }
    }

    /// Whether `v` may be played when `dominated` is already covered.
    pub fn playable(self, g: &Graph, dominated: &VertexSet, v: Vertex) -> bool {
        match self {
            Variant::Closed => !dominated.contains(v) || !g.neighbors(v).is_subset(dominated),
            Variant::Z => !g.neighbors(v).is_subset(dominated),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grundy" | "closed" => Ok(Variant::Closed),
            "zgrundy" | "z" => Ok(Variant::Z),
            other => Err(Error::Input(format!("unknown variant {other:?}"))),
        }
    }
}

/// Ordered vertices with the footprint of every step, computed eagerly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSequence {
    order: Vec<Vertex>,
    footprints: Vec<VertexSet>,
    dominated: VertexSet,
    universe: usize,
}

impl VertexSequence {
    pub fn empty(g: &Graph) -> Self {
        VertexSequence {
            order: Vec::new(),
            footprints: Vec::new(),
            dominated: g.empty_set(),
            universe: g.order(),
        }
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn footprints(&self) -> &[VertexSet] {
        &self.footprints
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Union of the closed neighborhoods of all steps.
    pub fn dominated(&self) -> &VertexSet {
        &self.dominated
    }

    /// Number of steps that footprint exactly one vertex.
    pub fn single_footprint_count(&self) -> usize {
        self.footprints.iter().filter(|f| f.len() == 1).count()
    }

    pub fn is_closed_neighborhood_sequence(&self) -> bool {
        self.footprints.iter().all(|f| !f.is_empty())
    }

    pub fn is_z_sequence(&self) -> bool {
        self.order
            .iter()
            .zip(&self.footprints)
            .all(|(&v, f)| f.iter().any(|x| x != v))
    }

    pub fn is_valid(&self, variant: Variant) -> bool {
        match variant {
            Variant::Closed => self.is_closed_neighborhood_sequence(),
            Variant::Z => self.is_z_sequence(),
        }
    }

    pub fn is_dominating(&self) -> bool {
        self.dominated.len() == self.universe
    }

    /// Appends one step, recomputing its footprint.
    pub fn push(&mut self, g: &Graph, v: Vertex) -> Result<()> {
        g.check_vertex(v)?;
        if self.order.contains(&v) {
            return Err(Error::DuplicateVertex(v));
        }
        let closed = g.closed_neighborhood(v);
        self.footprints.push(closed.difference(&self.dominated));
        self.dominated.union_with(&closed);
        self.order.push(v);
        Ok(())
    }

    /// Checks that the stored footprints match a recomputation on `g`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        footprints(g, &self.order).is_ok_and(|s| s == *self)
    }
}

/// Computes `F_i` for every step of `order`; empty footprints are allowed.
pub fn footprints(g: &Graph, order: &[Vertex]) -> Result<VertexSequence> {
    let mut seq = VertexSequence::empty(g);
    for &v in order {
        seq.push(g, v)?;
    }
    Ok(seq)
}

pub fn is_closed_neighborhood_sequence(g: &Graph, order: &[Vertex]) -> Result<bool> {
    Ok(footprints(g, order)?.is_closed_neighborhood_sequence())
}

/// Errors on graphs with isolated vertices, where Z-sequences are undefined.
pub fn is_z_sequence(g: &Graph, order: &[Vertex]) -> Result<bool> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(footprints(g, order)?.is_z_sequence())
}

pub fn is_dominating(g: &Graph, order: &[Vertex]) -> Result<bool> {
    Ok(footprints(g, order)?.is_dominating())
}

pub fn single_footprint_count(seq: &VertexSequence) -> usize {
    seq.single_footprint_count()
}

/// Serialized certificate for a Grundy or Z-Grundy sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph: String,
    pub order: Vec<Vertex>,
    pub variant: Variant,
}

impl Witness {
    pub fn new(g: &Graph, order: &[Vertex], variant: Variant) -> Result<Self> {
        Ok(Witness {
            graph: graph6::encode(g)?,
            order: order.to_vec(),
            variant,
        })
    }

    /// Decodes the graph and re-validates the order; returns the sequence length.
    pub fn verify(&self) -> Result<usize> {
        let g = graph6::decode(&self.graph)?;
        let seq = footprints(&g, &self.order)?;
        if self.variant == Variant::Z {
            if let Some(v) = g.isolated_vertex() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        if !seq.is_valid(self.variant) {
            return Err(Error::InvalidPrefix(format!(
                "order is not a valid {} sequence",
                self.variant.name()
            )));
        }
        Ok(seq.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn c5_footprints() {
        let c5 = Graph::cycle(5);
        let s = footprints(&c5, &[0, 2]).unwrap();
        assert_eq!(s.footprints(), &[set(5, &[4, 0, 1]), set(5, &[2, 3])]);
        assert_eq!(s.single_footprint_count(), 0);
        assert!(s.is_dominating());
        assert!(!footprints(&c5, &[0]).unwrap().is_dominating());
    }

    #[test]
    fn k4_second_step_is_empty() {
        let k4 = Graph::complete(4);
        let s = footprints(&k4, &[0, 1]).unwrap();
        assert_eq!(s.footprints()[0], k4.full_set());
        assert!(s.footprints()[1].is_empty());
        assert!(!s.is_closed_neighborhood_sequence());
    }

    #[test]
    fn first_step_is_closed_neighborhood() {
        let g = prism();
        for v in g.vertices() {
            assert_eq!(footprints(&g, &[v]).unwrap().footprints()[0], g.closed_neighborhood(v));
        }
    }

    #[test]
    fn prism_z_sequence() {
        let g = prism();
        let s = footprints(&g, &[0, 1, 2]).unwrap();
        assert!(s.is_z_sequence());
        assert!(s.is_dominating());
        assert_eq!(s.footprints()[1], set(6, &[4]));
        assert_eq!(s.footprints()[2], set(6, &[5]));
        assert_eq!(s.single_footprint_count(), 2);
    }

    #[test]
    fn k33_z_sequence() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(is_z_sequence(&g, &[0, 3]).unwrap());
        assert!(is_dominating(&g, &[0, 3]).unwrap());
    }

    #[test]
    fn errors() {
        let g = Graph::cycle(5);
        assert_eq!(footprints(&g, &[0, 0]), Err(Error::DuplicateVertex(0)));
        assert_eq!(
            footprints(&g, &[7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(is_z_sequence(&iso, &[0]), Err(Error::IsolatedVertex(2)));
        assert!(is_closed_neighborhood_sequence(&iso, &[2, 0]).unwrap());
    }

    #[test]
    fn witness_json_roundtrip() {
        let g = prism();
        let w = Witness::new(&g, &[0, 1, 2], Variant::Z).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.contains("\"variant\":\"zgrundy\""));
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back.verify().unwrap(), 3);
        let other = Witness { order: vec![0, 3], ..w };
        assert_eq!(other.verify().unwrap(), 2);
        let bad = Witness { order: vec![0, 1, 2, 3], ..other };
        assert!(bad.verify().is_err());
    }

    fn graph_and_order() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (2usize..9).prop_flat_map(|n| {
            (
                proptest::collection::vec((0..n, 0..n), 0..20),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                0..=n,
            )
                .prop_map(move |(raw, perm, len)| {
                    let g = Graph::new(n, raw.into_iter().filter(|(u, v)| u != v)).unwrap();
                    (g, perm[..len].to_vec())
                })
        })
    }

    proptest! {
        #[test]
        fn footprint_sizes_sum_to_dominated((g, order) in graph_and_order()) {
            let s = footprints(&g, &order).unwrap();
            let total: usize = s.footprints().iter().map(VertexSet::len).sum();
            prop_assert_eq!(total, s.dominated().len());
            prop_assert!(total <= g.order());
            prop_assert_eq!(total == g.order(), s.is_dominating());
            prop_assert!(s.is_consistent_with(&g));
        }

        #[test]
        fn prefixes_of_valid_sequences_are_valid((g, order) in graph_and_order()) {
            let s = footprints(&g, &order).unwrap();
            for k in 0..=order.len() {
                let p = footprints(&g, &order[..k]).unwrap();
                if s.is_closed_neighborhood_sequence() {
                    prop_assert!(p.is_closed_neighborhood_sequence());
                }
                if s.is_z_sequence() {
                    prop_assert!(p.is_z_sequence());
                }
            }
        }
    }
}
