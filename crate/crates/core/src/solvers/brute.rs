//! Exhaustive oracles over vertex subsets, encoded as `u32` masks.
//!
//! These deliberately avoid the bitset and BFS helpers used by the
//! branching solvers so that the two can be compared.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{SolveResult, Stopwatch};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 22;

fn adjacency_masks(g: &Graph) -> Result<Vec<u32>> {
    let n = g.n_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertices",
            value: n,
            limit: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(adj)
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

fn mask_is_s_club(adj: &[u32], mask: u32, s: usize) -> bool {
    members(mask).all(|v| {
        let mut reached = 1u32 << v;
        let mut frontier = reached;
        for _ in 0..s {
            let mut next = 0;
            for w in members(frontier) {
                next |= adj[w];
            }
            next &= mask & !reached;
            if next == 0 {
                break;
            }
            reached |= next;
            frontier = next;
        }
        reached == mask
    })
}

fn mask_is_clique(adj: &[u32], mask: u32) -> bool {
    members(mask).all(|v| (adj[v] | (1 << v)) & mask == mask)
}

/// Scans subset sizes from `n` downwards, each size in increasing mask order
/// (Gosper's hack), returning the first accepted subset.
fn largest_accepted(n: usize, accept: impl Fn(u32) -> bool) -> (u32, u64) {
    let mut tested = 0;
    for size in (1..=n).rev() {
        let limit = 1u64 << n;
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < limit {
            tested += 1;
            if accept(mask as u32) {
                return (mask as u32, tested);
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    unreachable!("every single vertex is accepted")
}

/// Maximum s-club by exhaustive subset enumeration (`|V| <= 22`).
pub fn brute_force_max_s_club(g: &Graph, s: usize) -> Result<SolveResult> {
    let adj = adjacency_masks(g)?;
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let clock = Stopwatch::start();
    let (mask, tested) = largest_accepted(adj.len(), |m| mask_is_s_club(&adj, m, s));
    Ok(SolveResult::new(members(mask).collect(), tested, clock.elapsed()))
}

/// Maximum clique by exhaustive subset enumeration (`|V| <= 22`).
pub fn brute_force_max_clique(g: &Graph) -> Result<SolveResult> {
    let adj = adjacency_masks(g)?;
    let clock = Stopwatch::start();
    let (mask, tested) = largest_accepted(adj.len(), |m| mask_is_clique(&adj, m));
    Ok(SolveResult::new(members(mask).collect(), tested, clock.elapsed()))
}
