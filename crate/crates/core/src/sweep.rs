//! Exhaustive check of the clique / 2-club equivalence over every labeled
//! source graph on `n` vertices.

use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::{reduce, target_size, target_size_formula};
use crate::solvers::{
    brute_force_max_clique, brute_force_max_s_club, find_s_club_of_size, max_clique, max_s_club,
};

/// Largest `n` swept by default with the branching engine.
pub const BRANCHING_GUARD: usize = 3;
/// Largest `n` swept by default with the brute-force engine (19-vertex gadgets).
pub const BRUTE_GUARD: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Branching,
    Brute,
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "branching" => Ok(Engine::Branching),
            "brute" => Ok(Engine::Brute),
            other => Err(format!("unknown engine `{other}`")),
        }
    }
}

/// Number of vertex pairs, i.e. bits in a source-graph encoding.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes a labeled graph from its edge bitmask; bit `t` stands for the
/// `t`-th pair `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask & (1 << bit) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("pairs are in range")
}

pub fn mask_of_graph(g: &Graph) -> u64 {
    let n = g.n_vertices();
    let mut mask = 0;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceRow {
    pub h_id: u64,
    pub n: usize,
    pub k: usize,
    pub omega: usize,
    pub target: usize,
    pub max_2club: usize,
    pub clique_yes: bool,
    pub club_yes: bool,
    pub agree: bool,
    /// `max_2club == target_size(n, omega)`.
    pub formula_consistent: bool,
    /// Early-exit decision answer for `target`, when the engine computes one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision_yes: Option<bool>,
}

impl EquivalenceRow {
    /// Every recorded check on this row holds.
    pub fn verified(&self) -> bool {
        self.agree && self.formula_consistent && self.decision_yes.is_none_or(|d| d == self.club_yes)
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub engine: Engine,
    pub guard_override: bool,
    pub threads: usize,
    /// Added to every target size. Non-zero only to test that a wrong
    /// threshold is caught.
    pub target_offset: isize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            engine: Engine::Branching,
            guard_override: false,
            threads: 1,
            target_offset: 0,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    /// Sorted by `(h_id, k)`.
    pub rows: Vec<EquivalenceRow>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SweepOutcome {
    pub fn all_verified(&self) -> bool {
        self.rows.iter().all(EquivalenceRow::verified)
    }
}

/// Solves the source graph and its gadget once and emits one row per `k`.
pub fn equivalence_rows(
    h: &Graph,
    ks: RangeInclusive<usize>,
    options: &SweepOptions,
) -> Result<(Vec<EquivalenceRow>, u64)> {
    let n = h.n_vertices();
    let inst = reduce(h)?;
    let (omega, club, mut nodes) = match options.engine {
        Engine::Branching => {
            let omega = max_clique(h)?;
            let club = max_s_club(&inst.graph, 2)?;
            (omega.best_size, club.best_size, omega.nodes_explored + club.nodes_explored)
        }
        Engine::Brute => {
            let omega = brute_force_max_clique(h)?;
            let club = brute_force_max_s_club(&inst.graph, 2)?;
            (omega.best_size, club.best_size, omega.nodes_explored + club.nodes_explored)
        }
    };
    let mut rows = Vec::new();
    for k in ks {
        let target = target_size(n, k)?
            .checked_add_signed(options.target_offset)
            .ok_or_else(|| Error::InvalidParameter("target offset underflows".into()))?;
        let clique_yes = omega >= k;
        let club_yes = club >= target;
        let decision_yes = match options.engine {
            Engine::Branching => {
                let found = find_s_club_of_size(&inst.graph, 2, target)?;
                nodes += found.as_ref().map_or(0, |r| r.nodes_explored);
                Some(found.is_some())
            }
            Engine::Brute => None,
        };
        rows.push(EquivalenceRow {
            h_id: mask_of_graph(h),
            n,
            k,
            omega,
            target,
            max_2club: club,
            clique_yes,
            club_yes,
            agree: clique_yes == club_yes,
            formula_consistent: club == target_size_formula(n, omega),
            decision_yes,
        });
    }
    Ok((rows, nodes))
}

pub fn check_guard(n: usize, engine: Engine, guard_override: bool) -> Result<()> {
    let limit = match engine {
        Engine::Branching => BRANCHING_GUARD,
        Engine::Brute => BRUTE_GUARD,
    };
    if n > limit && !guard_override {
        return Err(Error::TooLarge {
            what: "source vertices",
            value: n,
            limit,
        });
    }
    Ok(())
}

/// Runs [`equivalence_rows`] for every labeled graph on `n` vertices.
pub fn run_equivalence_sweep(
    n: usize,
    ks: RangeInclusive<usize>,
    options: &SweepOptions,
) -> Result<SweepOutcome> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    check_guard(n, options.engine, options.guard_override)?;
    for k in ks.clone() {
        target_size(n, k)?;
    }
    let bits = pair_count(n);
    if bits >= 64 {
        return Err(Error::TooLarge {
            what: "source vertices",
            value: n,
            limit: 11,
        });
    }
    let clock = crate::solvers::Stopwatch::start();
    let masks: Vec<u64> = (0..1u64 << bits).collect();
    let per_graph = |&mask: &u64| equivalence_rows(&graph_from_mask(n, mask), ks.clone(), options);
    let results: Vec<Result<(Vec<EquivalenceRow>, u64)>> = map_maybe_parallel(&masks, options.threads, per_graph);

    let mut outcome = SweepOutcome::default();
    for r in results {
        let (rows, nodes) = r?;
        outcome.rows.extend(rows);
        outcome.nodes_explored += nodes;
    }
    outcome.rows.sort_by_key(|r| (r.h_id, r.k));
    outcome.elapsed = clock.elapsed();
    Ok(outcome)
}

/// Maps `f` over `items`, on a dedicated pool when `threads > 1`. Output
/// order always matches input order.
pub fn map_maybe_parallel<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if threads > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    let _ = threads;
    items.iter().map(f).collect()
}
