//! Named graphs with their known invariant values.

use super::family_m::member_from_letters;
use super::{co_two_c4, cube, diamond, necklace, petersen, prism, tk, twisted_cube, UnitKind};
use crate::graph::Graph;

/// Published invariant values; `None` where no value is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KnownValues {
    pub grundy: Option<usize>,
    pub zgrundy: Option<usize>,
    pub zero_forcing: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub known: KnownValues,
    /// Connected cubic with `γ_gr^Z = n/2`.
    pub zgrundy_extremal: bool,
    /// Connected cubic with `γ_gr = n/2`.
    pub grundy_extremal: bool,
}

impl CatalogEntry {
    fn cubic_extremal(name: &'static str, graph: Graph, zgrundy: usize, grundy_extremal: bool) -> Self {
        let n = graph.order();
        CatalogEntry {
            name,
            known: KnownValues {
                grundy: grundy_extremal.then_some(n / 2),
                zgrundy: Some(zgrundy),
                zero_forcing: Some(n - zgrundy),
            },
            graph: graph.with_label(name),
            zgrundy_extremal: true,
            grundy_extremal,
        }
    }

    fn exception(name: &'static str, graph: Graph, known: KnownValues, grundy_extremal: bool) -> Self {
        CatalogEntry {
            name,
            graph: graph.with_label(name),
            known,
            zgrundy_extremal: false,
            grundy_extremal,
        }
    }
}

/// The fifteen cubic graphs with `γ_gr^Z = n/2`, followed by the exception
/// graphs `K_4`, `K_{3,3}`, the complement of `2C_4` and the diamond.
pub fn catalog() -> Vec<CatalogEntry> {
    let m = |w: &str| member_from_letters(w).expect("fixed unit word");
    use UnitKind::{X, Y};
    vec![
        CatalogEntry::cubic_extremal("X2", m("XX"), 7, false),
        CatalogEntry::cubic_extremal("X3", m("XXX"), 11, false),
        CatalogEntry::cubic_extremal("Y2", m("YY"), 5, true),
        CatalogEntry::cubic_extremal("Y3", m("YYY"), 8, true),
        CatalogEntry::cubic_extremal("XY", m("XY"), 6, false),
        CatalogEntry::cubic_extremal("XY2", m("XYY"), 9, false),
        CatalogEntry::cubic_extremal("X2Y", m("XXY"), 10, false),
        CatalogEntry::cubic_extremal("N_XX", necklace(X, X), 6, false),
        CatalogEntry::cubic_extremal("N_XY", necklace(X, Y), 5, false),
        CatalogEntry::cubic_extremal("N_YY", necklace(Y, Y), 4, true),
        CatalogEntry::cubic_extremal("K3xK2", prism(), 3, true),
        CatalogEntry::cubic_extremal("TK", tk(), 4, false),
        CatalogEntry::cubic_extremal("Q3", cube(), 4, true),
        CatalogEntry::cubic_extremal("TQ3", twisted_cube(), 4, true),
        CatalogEntry::cubic_extremal("Petersen", petersen(), 5, true),
        CatalogEntry::exception(
            "K4",
            Graph::complete(4),
            KnownValues { grundy: Some(1), zgrundy: Some(1), zero_forcing: Some(3) },
            false,
        ),
        CatalogEntry::exception(
            "K3,3",
            Graph::complete_bipartite(3, 3),
            KnownValues { grundy: Some(3), zgrundy: Some(2), zero_forcing: Some(4) },
            true,
        ),
        CatalogEntry::exception(
            "co2C4",
            co_two_c4(),
            KnownValues { grundy: Some(2), ..Default::default() },
            false,
        ),
        CatalogEntry::exception("diamond", diamond(), KnownValues::default(), false),
    ]
}

/// Looks up a catalog name (case-insensitive) or a parametric name:
/// `C<n>`, `P<n>`, `K<n>`, `K<a>,<b>`.
pub fn by_name(name: &str) -> Option<Graph> {
    let lower = name.to_ascii_lowercase();
    let aliases: &[(&str, &str)] = &[
        ("petersen", "Petersen"),
        ("prism", "K3xK2"),
        ("k3k2", "K3xK2"),
        ("cube", "Q3"),
        ("nxx", "N_XX"),
        ("nxy", "N_XY"),
        ("nyy", "N_YY"),
        ("k33", "K3,3"),
    ];
    let canonical = aliases
        .iter()
        .find(|(a, _)| *a == lower)
        .map(|(_, c)| c.to_ascii_lowercase())
        .unwrap_or(lower.clone());
    if let Some(e) = catalog().into_iter().find(|e| e.name.to_ascii_lowercase() == canonical) {
        return Some(e.graph);
    }
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = lower.strip_prefix('c') {
        return num(rest).filter(|&n| n >= 3).map(|n| Graph::cycle(n).with_label(name));
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return num(rest).filter(|&n| n >= 1).map(|n| Graph::path(n).with_label(name));
    }
    if let Some(rest) = lower.strip_prefix('k') {
        if let Some((a, b)) = rest.split_once(',') {
            return Some(Graph::complete_bipartite(num(a)?, num(b)?).with_label(name));
        }
        return num(rest).map(|n| Graph::complete(n).with_label(name));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let orders: Vec<(&str, usize)> = catalog()
            .iter()
            .filter(|e| e.zgrundy_extremal)
            .map(|e| (e.name, e.graph.order()))
            .collect();
        assert_eq!(
            orders,
            vec![
                ("X2", 14),
                ("X3", 22),
                ("Y2", 10),
                ("Y3", 16),
                ("XY", 12),
                ("XY2", 18),
                ("X2Y", 20),
                ("N_XX", 12),
                ("N_XY", 10),
                ("N_YY", 8),
                ("K3xK2", 6),
                ("TK", 8),
                ("Q3", 8),
                ("TQ3", 8),
                ("Petersen", 10),
            ]
        );
    }

    #[test]
    fn extremal_entries_are_cubic_with_half_values() {
        for e in catalog().iter().filter(|e| e.zgrundy_extremal) {
            assert!(e.graph.is_cubic() && e.graph.is_connected(), "{}", e.name);
            assert_eq!(e.known.zgrundy, Some(e.graph.order() / 2), "{}", e.name);
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(by_name("petersen").unwrap().order(), 10);
        assert_eq!(by_name("N_YY").unwrap().order(), 8);
        assert_eq!(by_name("C7").unwrap(), Graph::cycle(7));
        assert_eq!(by_name("K4,4").unwrap(), Graph::complete_bipartite(4, 4));
        assert_eq!(by_name("k5").unwrap(), Graph::complete(5));
        assert!(by_name("nonsense").is_none());
        assert!(by_name("C2").is_none());
    }
}
