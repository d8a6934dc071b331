//! s-club cluster graphs (every connected component has diameter at most
//! `s`) and vertex-deletion distance to that class.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{components_within, diameter_within, Graph};

/// Largest deletion budget accepted by [`min_deletion_to_s_club_cluster`].
pub const MAX_DELETION_BUDGET: usize = 4;

/// A deletion set whose removal leaves an s-club cluster graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionCertificate {
    /// Ascending vertex ids.
    pub deleted: Vec<usize>,
    pub class_s: usize,
}

impl DeletionCertificate {
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        verify_deletion(g, &self.deleted, self.class_s)
    }
}

/// Components of `G[within]` whose diameter exceeds `s`.
fn violating_components(g: &Graph, within: &VertexSet, s: usize) -> Vec<VertexSet> {
    components_within(g, within)
        .into_iter()
        .filter(|c| !diameter_within(g, c).is_within(s))
        .collect()
}

fn is_cluster_within(g: &Graph, within: &VertexSet, s: usize) -> bool {
    components_within(g, within)
        .iter()
        .all(|c| diameter_within(g, c).is_within(s))
}

pub fn is_s_club_cluster(g: &Graph, s: usize) -> bool {
    is_cluster_within(g, &g.all_vertices(), s)
}

/// Whether `G - deleted` is an s-club cluster graph.
pub fn verify_deletion(g: &Graph, deleted: &[usize], s: usize) -> Result<bool> {
    let removed = g.vertex_set(deleted)?;
    Ok(is_cluster_within(g, &g.all_vertices().difference(&removed), s))
}

/// Smallest deletion set of size at most `d_max` turning `g` into an s-club
/// cluster graph; ties go to the lexicographically smallest id list.
pub fn min_deletion_to_s_club_cluster(
    g: &Graph,
    s: usize,
    d_max: usize,
) -> Result<Option<DeletionCertificate>> {
    if d_max > MAX_DELETION_BUDGET {
        return Err(Error::TooLarge {
            what: "deletion budget",
            value: d_max,
            limit: MAX_DELETION_BUDGET,
        });
    }
    let n = g.n_vertices();
    let all = g.all_vertices();
    // A violating component of G is untouched by deletions outside it, so
    // every such component must lose at least one vertex.
    let violating = violating_components(g, &all, s);
    for size in 0..=d_max.min(n) {
        if violating.len() > size {
            continue;
        }
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            let removed = VertexSet::from_ids(n, chosen.iter().copied());
            let hits_all = violating.iter().all(|c| c.intersects(&removed));
            if hits_all && is_cluster_within(g, &all.difference(&removed), s) {
                return Ok(Some(DeletionCertificate {
                    deleted: chosen,
                    class_s: s,
                }));
            }
            if !next_combination(&mut chosen, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `comb` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
