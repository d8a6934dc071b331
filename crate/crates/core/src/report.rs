//! Machine-readable run reports.

use serde::Serialize;

use crate::solvers::SolveResult;
use crate::sweep::EquivalenceRow;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

/// A solver answer attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub problem: String,
    pub size: usize,
    pub set: Vec<usize>,
}

impl Solution {
    pub fn from_result(problem: impl Into<String>, result: &SolveResult) -> Self {
        Solution {
            problem: problem.into(),
            size: result.best_size,
            set: result.best_set.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub rows: Vec<EquivalenceRow>,
    /// Sorted id lists.
    pub certificates: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub solutions: Vec<Solution>,
    pub stats: Stats,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn add_certificate(&mut self, ids: &[usize]) {
        let mut ids = ids.to_vec();
        ids.sort_unstable();
        self.certificates.push(ids);
    }
}
