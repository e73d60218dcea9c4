//! Named graphs, the attachment family built from X and Y units, and a
//! seeded random regular graph sampler.

mod catalog;
mod family_m;
mod random;

pub use catalog::{by_name, catalog, CatalogEntry, KnownValues};
pub use family_m::{
    make_family_m, make_x, make_y, member_from_letters, recognize_family_m, FamilyMDecomposition, Recognition, Unit,
    UnitKind,
};
pub use random::random_k_regular;

use crate::graph::Graph;

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, e).expect("valid").with_label("Petersen")
}

pub fn cube() -> Graph {
    let e = (0..8usize)
        .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
        .filter(|&(u, v)| u < v);
    Graph::new(8, e).expect("valid").with_label("Q3")
}

/// Two 4-cycles `a b c d` and `a' b' c' d'` joined by `aa'`, `bb'`, `cd'`, `dc'`.
pub fn twisted_cube() -> Graph {
    let (a, b, c, d) = (0, 1, 2, 3);
    let (a2, b2, c2, d2) = (4, 5, 6, 7);
    Graph::new(
        8,
        [
            (a, b),
            (b, c),
            (c, d),
            (d, a),
            (a2, b2),
            (b2, c2),
            (c2, d2),
            (d2, a2),
            (a, a2),
            (b, b2),
            (c, d2),
            (d, c2),
        ],
    )
    .expect("valid")
    .with_label("TQ3")
}

/// Triangular prism `K_3 □ K_2`: triangles `{0,1,2}`, `{3,4,5}`, matching `i ~ i+3`.
pub fn prism() -> Graph {
    Graph::new(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid")
    .with_label("K3xK2")
}

/// The sporadic 8-vertex graph: a triangle `x y z` matched into a 5-vertex
/// block `u v v' v'' w`.
pub fn tk() -> Graph {
    let (x, y, z, u, v, v1, v2, w) = (0, 1, 2, 3, 4, 5, 6, 7);
    Graph::new(
        8,
        [
            (x, y),
            (y, z),
            (z, x),
            (w, v1),
            (v1, v),
            (v, v2),
            (v2, u),
            (v1, u),
            (v2, w),
            (x, u),
            (y, v),
            (z, w),
        ],
    )
    .expect("valid")
    .with_label("TK")
}

/// `K_4` minus the edge `0-3`.
pub fn diamond() -> Graph {
    crate::graph::subgraph::diamond().with_label("diamond")
}

/// Complement of two disjoint 4-cycles (5-regular on 8 vertices).
pub fn co_two_c4() -> Graph {
    Graph::cycle(4)
        .disjoint_union(&Graph::cycle(4))
        .complement()
        .with_label("co2C4")
}

/// Necklace: two unit cores (a unit without its designated vertex) joined by
/// two edges between their degree-2 vertices.
pub fn necklace(a: UnitKind, b: UnitKind) -> Graph {
    let (ga, pa) = a.core();
    let (gb, pb) = b.core();
    let off = ga.order();
    let mut edges = ga.disjoint_union(&gb).edges().into_vec();
    edges.push((pa.0, pb.0 + off));
    edges.push((pa.1, pb.1 + off));
    Graph::new(off + gb.order(), edges)
        .expect("valid")
        .with_label(format!("N_{}{}", a.letter(), b.letter()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sporadic_graphs_are_connected_cubic() {
        for g in [petersen(), cube(), twisted_cube(), prism(), tk()] {
            assert!(g.is_cubic() && g.is_connected(), "{g:?}");
        }
        for (a, b, n) in [
            (UnitKind::X, UnitKind::X, 12),
            (UnitKind::X, UnitKind::Y, 10),
            (UnitKind::Y, UnitKind::Y, 8),
        ] {
            let g = necklace(a, b);
            assert_eq!(g.order(), n);
            assert!(g.is_cubic() && g.is_connected());
        }
    }

    #[test]
    fn twisted_cube_is_not_the_cube() {
        assert!(!twisted_cube().is_bipartite());
        assert!(cube().is_bipartite());
        assert!(!crate::graph::iso::isomorphic(&cube(), &twisted_cube()));
    }

    #[test]
    fn co_two_c4_is_five_regular() {
        let g = co_two_c4();
        assert_eq!(g.order(), 8);
        assert!(g.is_k_regular(5) && g.is_connected());
    }
}
