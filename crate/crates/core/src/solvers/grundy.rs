use super::{SolveResult, SolveStats, SolverConfig, Strategy, EXACT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::heuristics::greedy_min_footprint;
use crate::sequences::{footprints, Variant, VertexSequence};
use rustc_hash::FxHashMap;
use std::time::Instant;

/// Exact `γ_gr` (closed variant) or `γ_gr^Z` (Z variant) with a maximum witness.
pub fn grundy_number(g: &Graph, variant: Variant) -> Result<SolveResult<VertexSequence>> {
    grundy_number_with(g, variant, &SolverConfig::default())
}

pub fn grundy_number_with(
    g: &Graph,
    variant: Variant,
    config: &SolverConfig,
) -> Result<SolveResult<VertexSequence>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > EXACT_MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: EXACT_MAX_ORDER });
    }
    if variant == Variant::Z {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
    }

    let start = Instant::now();
    let space = StateSpace::new(g, variant);
    let mut memo = MemoSearch {
        space: &space,
        table: FxHashMap::default(),
        budget: config.memo_budget,
        states: 0,
    };
    let (order, states, strategy) = match memo.best(0) {
        Some(_) => {
            let order = memo.witness();
            (order, memo.states, Strategy::Memo)
        }
        None => {
            log::info!(
                "memo budget of {} states exceeded on n = {n}; switching to branch and bound",
                config.memo_budget
            );
            let spent = memo.states;
            drop(memo);
            let incumbent = greedy_min_footprint(g, variant, None)?;
            let mut bnb = BranchAndBound {
                space: &space,
                best: incumbent.order().to_vec(),
                path: Vec::with_capacity(n),
                seen: FxHashMap::default(),
                budget: config.memo_budget,
                states: 0,
            };
            bnb.search(0);
            (bnb.best, spent + bnb.states, Strategy::BranchAndBound)
        }
    };

    let witness = footprints(g, &order)?;
    debug_assert!(witness.is_valid(variant) && witness.is_dominating());
    Ok(SolveResult {
        value: witness.len(),
        witness,
        stats: SolveStats {
            states,
            elapsed: start.elapsed(),
            strategy,
            cross_checked: false,
        },
    })
}

/// Single-word view of the graph shared by both search strategies.
struct StateSpace {
    n: usize,
    full: u64,
    open: Vec<u64>,
    closed: Vec<u64>,
    variant: Variant,
}

impl StateSpace {
    fn new(g: &Graph, variant: Variant) -> Self {
        let n = g.order();
        let open = g.adjacency_masks().expect("order checked by caller");
        let closed = open.iter().enumerate().map(|(v, m)| m | (1u64 << v)).collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        StateSpace { n, full, open, closed, variant }
    }

    #[inline]
    fn playable(&self, dominated: u64, v: usize) -> bool {
        let reach = match self.variant {
            Variant::Closed => self.closed[v],
            Variant::Z => self.open[v],
        };
        reach & !dominated != 0
    }

    /// Distinct successor states in increasing vertex order.
    fn successors(&self, dominated: u64) -> impl Iterator<Item = (usize, u64)> + '_ {
        let mut seen: [u64; 64] = [0; 64];
        let mut count = 0;
        (0..self.n).filter_map(move |v| {
            if !self.playable(dominated, v) {
                return None;
            }
            let next = dominated | self.closed[v];
            if seen[..count].contains(&next) {
                return None;
            }
            seen[count] = next;
            count += 1;
            Some((v, next))
        })
    }

    fn remaining_cap(&self, dominated: u64) -> usize {
        let undominated = (self.full & !dominated).count_ones() as usize;
        let playable = (0..self.n).filter(|&v| self.playable(dominated, v)).count();
        undominated.min(playable)
    }
}

/// Memo maps a dominated set to the longest continuation from it; the
/// continuation does not depend on which vertices produced that set.
struct MemoSearch<'a> {
    space: &'a StateSpace,
    table: FxHashMap<u64, u8>,
    budget: usize,
    states: u64,
}

impl MemoSearch<'_> {
    /// `None` once the table outgrows its budget.
    fn best(&mut self, dominated: u64) -> Option<u8> {
        if let Some(&v) = self.table.get(&dominated) {
            return Some(v);
        }
        if self.table.len() >= self.budget {
            return None;
        }
        self.states += 1;
        let cap = self.space.remaining_cap(dominated) as u8;
        let mut best = 0u8;
        let succ: Vec<u64> = self.space.successors(dominated).map(|(_, d)| d).collect();
        for next in succ {
            if best == cap {
                break;
            }
            best = best.max(1 + self.best(next)?);
        }
        self.table.insert(dominated, best);
        Some(best)
    }

    /// Lowest-index-first walk through optimal moves.
    fn witness(&mut self) -> Vec<usize> {
        let mut order = Vec::new();
        let mut dominated = 0u64;
        loop {
            let target = self.best(dominated).expect("state already solved");
            if target == 0 {
                return order;
            }
            let succ: Vec<(usize, u64)> = self.space.successors(dominated).collect();
            let (v, next) = succ
                .into_iter()
                .find(|&(_, next)| self.best(next).map(|b| b + 1) == Some(target))
                .expect("an optimal move exists");
            order.push(v);
            dominated = next;
        }
    }
}

struct BranchAndBound<'a> {
    space: &'a StateSpace,
    best: Vec<usize>,
    path: Vec<usize>,
    /// deepest depth at which each dominated set has been expanded
    seen: FxHashMap<u64, u8>,
    budget: usize,
    states: u64,
}

impl BranchAndBound<'_> {
    fn search(&mut self, dominated: u64) {
        self.states += 1;
        let depth = self.path.len();
        if depth > self.best.len() {
            self.best = self.path.clone();
        }
        if depth + self.space.remaining_cap(dominated) <= self.best.len() {
            return;
        }
        match self.seen.get(&dominated) {
            Some(&d) if d as usize >= depth => return,
            _ => {
                if self.seen.len() < self.budget || self.seen.contains_key(&dominated) {
                    self.seen.insert(dominated, depth as u8);
                }
            }
        }
        let succ: Vec<(usize, u64)> = self.space.successors(dominated).collect();
        for (v, next) in succ {
            self.path.push(v);
            self.search(next);
            self.path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_budget() -> SolverConfig {
        SolverConfig {
            memo_budget: 4,
            ..SolverConfig::default()
        }
    }

    #[test]
    fn cycles() {
        for n in 3..=12 {
            let r = grundy_number(&Graph::cycle(n), Variant::Closed).unwrap();
            assert_eq!(r.value, n - 2, "C_{n}");
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=7 {
            assert_eq!(grundy_number(&Graph::complete(n), Variant::Closed).unwrap().value, 1);
        }
        assert_eq!(grundy_number(&Graph::complete(4), Variant::Z).unwrap().value, 1);
    }

    #[test]
    fn k33() {
        let g = Graph::complete_bipartite(3, 3);
        assert_eq!(grundy_number(&g, Variant::Closed).unwrap().value, 3);
        assert_eq!(grundy_number(&g, Variant::Z).unwrap().value, 2);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::new(4, [(0, 1)]).unwrap();
        assert_eq!(grundy_number(&g, Variant::Closed).unwrap().value, 3);
        assert_eq!(grundy_number(&g, Variant::Z).unwrap_err(), Error::IsolatedVertex(2));
        assert_eq!(grundy_number(&Graph::empty(0), Variant::Closed).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn witness_is_lowest_index_first() {
        let r = grundy_number(&Graph::cycle(5), Variant::Closed).unwrap();
        assert_eq!(r.witness.order(), &[0, 1, 2]);
    }

    #[test]
    fn branch_and_bound_agrees_with_memo() {
        let graphs = [
            Graph::cycle(9),
            Graph::complete_bipartite(3, 4),
            Graph::path(7),
            Graph::complete(5),
        ];
        for g in &graphs {
            for variant in [Variant::Closed, Variant::Z] {
                let a = grundy_number(g, variant).unwrap();
                let b = grundy_number_with(g, variant, &tiny_budget()).unwrap();
                assert_eq!(a.stats.strategy, Strategy::Memo);
                if a.stats.states > 4 {
                    assert_eq!(b.stats.strategy, Strategy::BranchAndBound);
                }
                assert_eq!(a.value, b.value, "{g:?} {variant:?}");
                assert!(b.witness.is_valid(variant));
            }
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            grundy_number(&Graph::cycle(65), Variant::Closed),
            Err(Error::OrderTooLarge { .. })
        ));
    }
}
