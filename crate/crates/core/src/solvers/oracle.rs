use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequences::{Variant, VertexSequence};

pub const BRUTE_FORCE_MAX_ORDER: usize = 10;

/// Longest valid sequence by exhaustive enumeration of every sequence,
/// with no memoization or pruning beyond validity.
pub fn brute_force_grundy(g: &Graph, variant: Variant) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: BRUTE_FORCE_MAX_ORDER });
    }
    if variant == Variant::Z {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
    }
    Ok(extend(g, variant, &VertexSequence::empty(g)))
}

fn extend(g: &Graph, variant: Variant, seq: &VertexSequence) -> usize {
    let mut best = seq.len();
    for v in g.vertices() {
        if seq.order().contains(&v) {
            continue;
        }
        let mut next = seq.clone();
        next.push(g, v).expect("fresh in-range vertex");
        if next.is_valid(variant) {
            best = best.max(extend(g, variant, &next));
        }
    }
    best
}
