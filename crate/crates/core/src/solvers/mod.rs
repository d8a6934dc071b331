//! Exact solvers for maximum clique and maximum s-club, plus exhaustive
//! oracles used to cross-check them.

mod brute;
mod clique;
mod club;

use std::time::Duration;

use serde::{Serialize, Serializer};

pub use brute::{brute_force_max_clique, brute_force_max_s_club, BRUTE_FORCE_MAX_VERTICES};
pub use clique::max_clique;
pub use club::{find_s_club_of_size, has_s_club_of_size, max_s_club};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    /// Optimal vertex set, ascending.
    pub best_set: Vec<usize>,
    pub best_size: usize,
    pub nodes_explored: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "duration_ms")]
    pub elapsed: Duration,
}

impl SolveResult {
    fn new(mut best_set: Vec<usize>, nodes_explored: u64, elapsed: Duration) -> Self {
        best_set.sort_unstable();
        SolveResult {
            best_size: best_set.len(),
            best_set,
            nodes_explored,
            elapsed,
        }
    }
}

fn duration_ms<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

/// Wall-clock timer; reads zero on targets without a monotonic clock.
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed()
        }
        #[cfg(target_arch = "wasm32")]
        {
            Duration::ZERO
        }
    }
}
