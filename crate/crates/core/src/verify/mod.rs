//! Checks the regular-graph bounds, the duality between Z-Grundy domination
//! and zero forcing, and the cubic extremal characterizations over streams
//! of graphs, producing per-graph reports.

mod enumerate;
mod ingest;
mod report;

pub use enumerate::{
    bridge_joins, diamond_insertions, edge_insertions, enumerate_cubic, enumerate_cubic_labeled,
    grow_cubic_classes, ENUMERATE_MAX_ORDER,
};
pub use ingest::{parse_graph6_stream, read_cubic_file, read_graph6_file};
pub use report::{ReportRow, Status, Summary, VerificationReport};

use crate::error::{Error, Result};
use crate::families::{catalog, co_two_c4, recognize_family_m, CatalogEntry};
use crate::graph::graph6;
use crate::graph::iso::{invariant_hash, isomorphic};
use crate::graph::Graph;
use crate::heuristics::{BoundKind, BoundSpec, Rational};
use crate::sequences::Variant;
use crate::solvers::{grundy_number, zero_forcing_direct, zero_forcing_number};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Direct seed search is exponential; above this order duality rows are skipped.
pub const DUALITY_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; at least one.
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { workers: 1 }
    }
}

/// Lower or upper bounds checked over regular graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundSuite {
    /// `γ_gr ≥ (n + ⌈k/2⌉ - 2)/(k - 1)`; excludes `K_{k+1}` and the complement of `2C_4`.
    GrundyLower,
    /// `γ_gr^Z ≥ (n - 1)/(k - 1)` or `(n - 2)/(k - 1)` when triangle-free; excludes `K_{k+1}`.
    ZGrundyLower,
    /// `Z ≤ (n(k - 2) + 1)/(k - 1)` or `(n(k - 2) + 2)/(k - 1)` when triangle-free; excludes `K_{k+1}`.
    ForcingUpper,
    /// `γ_gr^Z ≥ n/2` on cubic graphs; excludes `K_4` and `K_{3,3}`.
    CubicHalf,
}

/// "invariant = n/2 exactly on the listed graphs" statements for connected cubic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterizationSuite {
    /// `γ_gr^Z = n/2` exactly on the fifteen extremal catalog graphs.
    ZGrundyHalf,
    /// `Z = n/2` exactly on the same fifteen graphs.
    ForcingHalf,
    /// `γ_gr = n/2` exactly on the eight listed graphs.
    GrundyHalf,
    /// Within the attachment family, `γ_gr^Z = n/2` exactly for star and edge skeletons.
    Family,
}

/// Role name, then a short legacy code also accepted on the command line.
const BOUND_NAMES: [(BoundSuite, &str, &str); 4] = [
    (BoundSuite::GrundyLower, "grundy-lower", "thm21"),
    (BoundSuite::ZGrundyLower, "zgrundy-lower", "thm31"),
    (BoundSuite::ForcingUpper, "forcing-upper", "cor32"),
    (BoundSuite::CubicHalf, "cubic-half", "thm34"),
];

const CHAR_NAMES: [(CharacterizationSuite, &str, &str); 4] = [
    (CharacterizationSuite::ZGrundyHalf, "zgrundy-half", "thm44"),
    (CharacterizationSuite::ForcingHalf, "forcing-half", "cor45"),
    (CharacterizationSuite::GrundyHalf, "grundy-half", "cor46"),
    (CharacterizationSuite::Family, "family", "prop42"),
];

impl BoundSuite {
    pub const ALL: [BoundSuite; 4] = [
        BoundSuite::GrundyLower,
        BoundSuite::ZGrundyLower,
        BoundSuite::ForcingUpper,
        BoundSuite::CubicHalf,
    ];

    pub fn name(self) -> &'static str {
        BOUND_NAMES.iter().find(|e| e.0 == self).unwrap().1
    }

    fn kind(self) -> BoundKind {
        match self {
            BoundSuite::GrundyLower => BoundKind::GrundyLower,
            BoundSuite::ZGrundyLower => BoundKind::ZGrundyLower,
            BoundSuite::ForcingUpper => BoundKind::ZeroForcingUpper,
            BoundSuite::CubicHalf => BoundKind::CubicHalf,
        }
    }
}

impl CharacterizationSuite {
    pub const ALL: [CharacterizationSuite; 4] = [
        CharacterizationSuite::ZGrundyHalf,
        CharacterizationSuite::ForcingHalf,
        CharacterizationSuite::GrundyHalf,
        CharacterizationSuite::Family,
    ];

    pub fn name(self) -> &'static str {
        CHAR_NAMES.iter().find(|e| e.0 == self).unwrap().1
    }
}

impl fmt::Display for BoundSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for CharacterizationSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        BOUND_NAMES
            .iter()
            .find(|e| e.1 == s || e.2 == s)
            .map(|e| e.0)
            .ok_or_else(|| Error::Input(format!("unknown bound suite '{s}'")))
    }
}

impl FromStr for CharacterizationSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        CHAR_NAMES
            .iter()
            .find(|e| e.1 == s || e.2 == s)
            .map(|e| e.0)
            .ok_or_else(|| Error::Input(format!("unknown characterization suite '{s}'")))
    }
}

/// Catalog entries keyed by isomorphism fingerprint.
struct CatalogIndex {
    entries: Vec<(u64, CatalogEntry)>,
}

impl CatalogIndex {
    fn new() -> Self {
        CatalogIndex {
            entries: catalog().into_iter().map(|e| (invariant_hash(&e.graph), e)).collect(),
        }
    }

    fn matching(&self, g: &Graph) -> Option<&CatalogEntry> {
        let h = invariant_hash(g);
        self.entries
            .iter()
            .find(|(eh, e)| *eh == h && isomorphic(&e.graph, g))
            .map(|(_, e)| e)
    }
}

fn run_parallel<F>(graphs: &[Graph], opts: &VerifyOptions, f: F) -> Result<Vec<ReportRow>>
where
    F: Fn(&Graph) -> ReportRow + Sync,
{
    if opts.workers == 0 {
        return Err(Error::Precondition("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| graphs.par_iter().map(&f).collect()))
}

fn base_row(g: &Graph) -> ReportRow {
    let code = graph6::encode(g).unwrap_or_else(|_| format!("<order {}>", g.order()));
    let mut row = ReportRow::new(code, g.order());
    row.k = g.regularity();
    row.connected = g.is_connected();
    row.triangle = g.has_triangle();
    row
}

fn skip(row: ReportRow, reason: String) -> ReportRow {
    log::info!("skipping {}: {reason}", row.graph6);
    row.with_status(Status::Skipped, reason)
}

/// Routes solver errors: unsupported inputs are skipped, anything else fails the row.
fn solver_failure(row: ReportRow, e: Error) -> ReportRow {
    match e {
        Error::OrderTooLarge { .. } | Error::IsolatedVertex(_) | Error::EmptyGraph => skip(row, e.to_string()),
        other => row.with_status(Status::Fail, other.to_string()),
    }
}

/// Checks one bound over every graph of the stream.
///
/// Graphs that are disconnected, irregular, or of degree below 3 (below or
/// above 3 for [`BoundSuite::CubicHalf`]) are skipped. Exception graphs are
/// recognized by isomorphism and reported as excluded. A negative slack on
/// any other graph fails its row.
pub fn check_bounds(graphs: &[Graph], suite: BoundSuite, opts: &VerifyOptions) -> Result<VerificationReport> {
    let index = CatalogIndex::new();
    let co2c4 = co_two_c4();
    let rows = run_parallel(graphs, opts, |g| {
        let mut row = base_row(g);
        row.catalog_match = index.matching(g).map(|e| e.name.to_string());
        let k = match row.k {
            _ if g.order() == 0 => return skip(row, "empty graph".into()),
            _ if !row.connected => return skip(row, "disconnected".into()),
            None => return skip(row, "not regular".into()),
            Some(k) if k < 3 => return skip(row, format!("degree {k} below 3")),
            Some(k) if suite == BoundSuite::CubicHalf && k != 3 => {
                return skip(row, format!("degree {k}, not cubic"))
            }
            Some(k) => k,
        };
        let mut excluded = None;
        if isomorphic(g, &Graph::complete(k + 1)) {
            excluded = Some(format!("complete graph K{}", k + 1));
        } else if suite == BoundSuite::GrundyLower && isomorphic(g, &co2c4) {
            excluded = Some("complement of 2C4".to_string());
        } else if suite == BoundSuite::CubicHalf && isomorphic(g, &Graph::complete_bipartite(3, 3)) {
            excluded = Some("complete bipartite K3,3".to_string());
        }
        let value = match suite {
            BoundSuite::GrundyLower => grundy_number(g, Variant::Closed).map(|r| r.value),
            BoundSuite::ZGrundyLower | BoundSuite::CubicHalf => grundy_number(g, Variant::Z).map(|r| r.value),
            BoundSuite::ForcingUpper => zero_forcing_number(g).map(|r| r.value),
        };
        let value = match value {
            Ok(v) => v,
            Err(e) => return solver_failure(row, e),
        };
        match suite {
            BoundSuite::GrundyLower => row.grundy = Some(value),
            BoundSuite::ForcingUpper => row.zero_forcing = Some(value),
            _ => row.zgrundy = Some(value),
        }
        let spec = match BoundSpec::evaluate(suite.kind(), g.order(), k, row.triangle) {
            Ok(s) => s,
            Err(e) => return skip(row, e.to_string()),
        };
        let slack = spec.slack(value);
        row.bound = Some(spec.value.to_string());
        row.slack = Some(slack.to_string());
        if let Some(reason) = excluded {
            log::info!("excluding {}: {reason}", row.graph6);
            return row.with_status(Status::Excluded, reason);
        }
        row.extremal = Some(slack == Rational::from_integer(0));
        if slack < Rational::from_integer(0) {
            let note = format!("value {value} violates bound {}", spec.value);
            row.with_status(Status::Fail, note)
        } else {
            row
        }
    })?;
    Ok(VerificationReport::new(suite.name(), rows))
}

/// Compares `n - γ_gr^Z` from the Grundy solver against the direct seed search.
pub fn check_duality(graphs: &[Graph], opts: &VerifyOptions) -> Result<VerificationReport> {
    let index = CatalogIndex::new();
    let rows = run_parallel(graphs, opts, |g| {
        let mut row = base_row(g);
        row.catalog_match = index.matching(g).map(|e| e.name.to_string());
        let n = g.order();
        if let Some(v) = g.isolated_vertex() {
            return skip(row, format!("isolated vertex {v}"));
        }
        if n > DUALITY_MAX_ORDER {
            return skip(row, format!("order {n} above direct search cap {DUALITY_MAX_ORDER}"));
        }
        let zg = match grundy_number(g, Variant::Z) {
            Ok(r) => r.value,
            Err(e) => return solver_failure(row, e),
        };
        let z = match zero_forcing_direct(g) {
            Ok(z) => z,
            Err(e) => return solver_failure(row, e),
        };
        row.zgrundy = Some(zg);
        row.zero_forcing = Some(z);
        if z + zg == n {
            row
        } else {
            row.with_status(Status::Fail, format!("Z = {z} but n - zgrundy = {}", n - zg))
        }
    })?;
    Ok(VerificationReport::new("duality", rows))
}

/// Checks that the extremal predicate holds exactly on the listed graphs.
///
/// Every connected cubic graph gets a row; both a listed graph that is not
/// extremal and an extremal graph missing from the list fail. The family
/// suite only considers members of the attachment family and compares
/// against star and edge skeletons.
pub fn check_characterization(
    graphs: &[Graph],
    suite: CharacterizationSuite,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let index = CatalogIndex::new();
    let rows = run_parallel(graphs, opts, |g| {
        let mut row = base_row(g);
        let entry = index.matching(g);
        row.catalog_match = entry.map(|e| e.name.to_string());
        if !row.connected || !g.is_cubic() {
            return skip(row, "not connected cubic".into());
        }
        let n = g.order();
        let (expected, listed_as) = match suite {
            CharacterizationSuite::ZGrundyHalf | CharacterizationSuite::ForcingHalf => {
                (entry.is_some_and(|e| e.zgrundy_extremal), "the extremal catalog")
            }
            CharacterizationSuite::GrundyHalf => (entry.is_some_and(|e| e.grundy_extremal), "the extremal catalog"),
            CharacterizationSuite::Family => match recognize_family_m(g) {
                Ok(Some(d)) => {
                    row.catalog_match = Some(format!("family {}", d.signature()));
                    (d.in_m_prime(), "star or edge skeleton members")
                }
                Ok(None) => return skip(row, "not in the attachment family".into()),
                Err(e) => return solver_failure(row, e),
            },
        };
        let value = match suite {
            CharacterizationSuite::GrundyHalf => grundy_number(g, Variant::Closed).map(|r| r.value),
            CharacterizationSuite::ForcingHalf => zero_forcing_number(g).map(|r| r.value),
            _ => grundy_number(g, Variant::Z).map(|r| r.value),
        };
        let value = match value {
            Ok(v) => v,
            Err(e) => return solver_failure(row, e),
        };
        match suite {
            CharacterizationSuite::GrundyHalf => row.grundy = Some(value),
            CharacterizationSuite::ForcingHalf => row.zero_forcing = Some(value),
            _ => row.zgrundy = Some(value),
        }
        let half = Rational::new(n as i64, 2);
        row.bound = Some(half.to_string());
        row.slack = Some((Rational::from_integer(value as i64) - half).to_string());
        let extremal = 2 * value == n;
        row.extremal = Some(extremal);
        match (extremal, expected) {
            (true, false) => row.with_status(Status::Fail, format!("extremal but not among {listed_as}")),
            (false, true) => row.with_status(Status::Fail, format!("listed in {listed_as} but value is {value}")),
            _ => row,
        }
    })?;
    Ok(VerificationReport::new(suite.name(), rows))
}

/// Connected `k`-regular graphs of the stream whose Grundy number equals
/// `(n + ⌈k/2⌉ - 2)/(k - 1)` exactly, in stream order.
pub fn extremal_scan(graphs: &[Graph], k: usize, opts: &VerifyOptions) -> Result<Vec<Graph>> {
    if k < 4 {
        return Err(Error::Precondition(format!("extremal scan needs k >= 4, got {k}")));
    }
    let pool_rows = run_parallel(graphs, opts, |g| {
        let row = base_row(g);
        if !row.connected || row.k != Some(k) {
            return skip(row, format!("not connected {k}-regular"));
        }
        let bound = match BoundSpec::evaluate(BoundKind::GrundyLower, g.order(), k, row.triangle) {
            Ok(b) => b,
            Err(e) => return skip(row, e.to_string()),
        };
        match grundy_number(g, Variant::Closed) {
            Ok(r) => {
                let mut row = row;
                row.extremal = Some(bound.slack(r.value) == Rational::from_integer(0));
                row
            }
            Err(e) => solver_failure(row, e),
        }
    })?;
    Ok(graphs
        .iter()
        .zip(pool_rows)
        .filter(|(_, r)| r.extremal == Some(true))
        .map(|(g, _)| g.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{by_name, petersen};

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn suite_names_parse() {
        for s in BoundSuite::ALL {
            assert_eq!(s.name().parse::<BoundSuite>().unwrap(), s);
        }
        assert_eq!("thm34".parse::<BoundSuite>().unwrap(), BoundSuite::CubicHalf);
        assert_eq!("COR46".parse::<CharacterizationSuite>().unwrap(), CharacterizationSuite::GrundyHalf);
        assert!("thm99".parse::<BoundSuite>().is_err());
    }

    #[test]
    fn cubic_half_on_order_eight() {
        let graphs = enumerate_cubic(8).unwrap();
        let r = check_bounds(&graphs, BoundSuite::CubicHalf, &opts()).unwrap();
        assert_eq!(r.summary.total, 5);
        assert!(r.is_success());
        assert_eq!(r.summary.extremal, 4);
        let zeros = r.rows.iter().filter(|r| r.slack.as_deref() == Some("0")).count();
        assert_eq!(zeros, 4);
    }

    #[test]
    fn k33_meets_forcing_bound() {
        let r = check_bounds(&[Graph::complete_bipartite(3, 3)], BoundSuite::ForcingUpper, &opts()).unwrap();
        let row = &r.rows[0];
        assert_eq!(row.zero_forcing, Some(4));
        assert_eq!(row.slack.as_deref(), Some("0"));
        assert_eq!(row.status, Status::Pass);
    }

    #[test]
    fn co2c4_excluded_from_grundy_bound() {
        let r = check_bounds(&[co_two_c4()], BoundSuite::GrundyLower, &opts()).unwrap();
        assert_eq!(r.rows[0].status, Status::Excluded);
        assert!(r.is_success());
    }

    #[test]
    fn exceptions_excluded_from_cubic_half() {
        let graphs = vec![Graph::complete(4), Graph::complete_bipartite(3, 3), Graph::cycle(6)];
        let r = check_bounds(&graphs, BoundSuite::CubicHalf, &opts()).unwrap();
        assert_eq!(r.summary.excluded, 2);
        assert_eq!(r.summary.skipped, 1);
        assert!(r.is_success());
    }

    #[test]
    fn duality_rows() {
        let graphs = vec![petersen(), by_name("C7").unwrap(), Graph::new(3, [(0, 1)]).unwrap()];
        let r = check_duality(&graphs, &opts()).unwrap();
        assert!(r.is_success());
        assert_eq!(r.summary.skipped, 1);
        let pet = r.rows.iter().find(|r| r.n == 10).unwrap();
        assert_eq!((pet.zgrundy, pet.zero_forcing), (Some(5), Some(5)));
        let c7 = r.rows.iter().find(|r| r.n == 7).unwrap();
        assert_eq!((c7.zgrundy, c7.zero_forcing), (Some(5), Some(2)));
    }

    #[test]
    fn characterization_sizes_by_order() {
        let mut sizes = Vec::new();
        for n in [4, 6, 8] {
            let r = check_characterization(&enumerate_cubic(n).unwrap(), CharacterizationSuite::ZGrundyHalf, &opts())
                .unwrap();
            assert!(r.is_success(), "{:?}", r.summary.failures);
            sizes.push(r.summary.extremal);
        }
        assert_eq!(sizes, vec![0, 1, 4]);
    }

    #[test]
    fn unlisted_graph_is_not_extremal() {
        let g = by_name("TK").unwrap();
        let r = check_characterization(&[g], CharacterizationSuite::GrundyHalf, &opts()).unwrap();
        assert!(r.is_success());
        assert_eq!(r.rows[0].extremal, Some(false));
    }

    #[test]
    fn family_suite_skips_non_members() {
        let r = check_characterization(&[petersen()], CharacterizationSuite::Family, &opts()).unwrap();
        assert_eq!(r.summary.skipped, 1);
    }

    #[test]
    fn extremal_scan_edges() {
        assert!(extremal_scan(&[], 4, &opts()).unwrap().is_empty());
        assert!(extremal_scan(&[Graph::complete_bipartite(4, 4)], 4, &opts()).unwrap().is_empty());
        assert!(extremal_scan(&[], 3, &opts()).is_err());
    }

    #[test]
    fn workers_do_not_change_report() {
        let graphs = enumerate_cubic_labeled(8).unwrap();
        let one = check_bounds(&graphs, BoundSuite::ZGrundyLower, &opts()).unwrap();
        let four = check_bounds(&graphs, BoundSuite::ZGrundyLower, &VerifyOptions { workers: 4 }).unwrap();
        assert_eq!(one, four);
        assert!(check_duality(&graphs, &VerifyOptions { workers: 0 }).is_err());
    }
}
