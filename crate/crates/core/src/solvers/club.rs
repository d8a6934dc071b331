//! Maximum s-club by vertex-deletion branching.
//!
//! A search node holds a candidate set `C` and a set of forced vertices
//! `F ⊆ C`. If `G[C]` has diameter at most `s` it is a solution. Otherwise
//! the lexicographically first pair `(x, y)` at distance greater than `s`
//! in `G[C]` cannot both survive, and the node branches into `C - x` and
//! `C - y` (with `x` forced, since the first branch covers every solution
//! without `x`). Vertices farther than `s` from a forced vertex inside the
//! candidate are dropped, and a node is pruned once `|C|` cannot beat the
//! incumbent.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{ball, components_within, first_far_pair, is_s_club_set, Graph};

use super::{SolveResult, Stopwatch};

/// Maximum s-club of `g`.
pub fn max_s_club(g: &Graph, s: usize) -> Result<SolveResult> {
    check_inputs(g, s)?;
    let clock = Stopwatch::start();
    let mut search = ClubSearch::new(g, s, None);
    search.run();
    let result = SolveResult::new(search.best.to_vec(), search.nodes, clock.elapsed());
    assert!(
        is_s_club_set(g, &search.best, s),
        "max_s_club returned a set that is not an s-club"
    );
    Ok(result)
}

/// Some s-club of size at least `target`, stopping at the first one found.
pub fn find_s_club_of_size(g: &Graph, s: usize, target: usize) -> Result<Option<SolveResult>> {
    if target == 0 {
        return Ok(Some(SolveResult::new(Vec::new(), 0, Default::default())));
    }
    check_inputs(g, s)?;
    let clock = Stopwatch::start();
    let mut search = ClubSearch::new(g, s, Some(target));
    search.run();
    if search.best.len() < target {
        return Ok(None);
    }
    assert!(is_s_club_set(g, &search.best, s));
    Ok(Some(SolveResult::new(
        search.best.to_vec(),
        search.nodes,
        clock.elapsed(),
    )))
}

/// Whether `g` has an s-club with at least `target` vertices.
pub fn has_s_club_of_size(g: &Graph, s: usize, target: usize) -> Result<bool> {
    if target == 0 {
        return Ok(true);
    }
    if target > g.n_vertices() {
        return Ok(false);
    }
    Ok(find_s_club_of_size(g, s, target)?.is_some())
}

fn check_inputs(g: &Graph, s: usize) -> Result<()> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    Ok(())
}

struct ClubSearch<'a> {
    g: &'a Graph,
    s: usize,
    best: VertexSet,
    /// Candidates of this size or smaller are pruned.
    bound: usize,
    stop_at: Option<usize>,
    done: bool,
    nodes: u64,
}

impl<'a> ClubSearch<'a> {
    fn new(g: &'a Graph, s: usize, stop_at: Option<usize>) -> Self {
        ClubSearch {
            g,
            s,
            best: VertexSet::new(g.n_vertices()),
            bound: stop_at.map_or(0, |t| t - 1),
            stop_at,
            done: false,
            nodes: 0,
        }
    }

    fn record(&mut self, set: VertexSet) {
        if set.len() > self.bound {
            self.bound = set.len();
            self.best = set;
            if self.stop_at.is_some_and(|t| self.best.len() >= t) {
                self.done = true;
            }
        }
    }

    fn run(&mut self) {
        let heuristic = self.greedy_lower_bound();
        self.record(heuristic);
        if self.done {
            return;
        }
        let all = self.g.all_vertices();
        for component in components_within(self.g, &all) {
            if component.len() <= self.bound {
                continue;
            }
            let root = self.root_reduce(component);
            self.branch(root, VertexSet::new(self.g.n_vertices()));
            if self.done {
                return;
            }
        }
    }

    /// Largest set of the form "ball of radius s/2 around v", grown greedily
    /// in id order while it stays an s-club.
    fn greedy_lower_bound(&self) -> VertexSet {
        let all = self.g.all_vertices();
        let mut best = VertexSet::new(self.g.n_vertices());
        best.insert(0);
        for v in 0..self.g.n_vertices() {
            let b = ball(self.g, &all, v, self.s / 2);
            if b.len() > best.len() {
                best = b;
            }
        }
        let mut frontier = VertexSet::new(self.g.n_vertices());
        for v in &best {
            frontier.union_with(self.g.neighbors(v));
        }
        frontier.difference_with(&best);
        for w in frontier.iter() {
            best.insert(w);
            if !is_s_club_set(self.g, &best, self.s) {
                best.remove(w);
            }
        }
        best
    }

    /// Drops vertices whose s-ball inside the candidate is too small to beat
    /// the incumbent, until stable.
    fn root_reduce(&self, mut cand: VertexSet) -> VertexSet {
        loop {
            let mut changed = false;
            for v in cand.clone().iter() {
                if ball(self.g, &cand, v, self.s).len() <= self.bound {
                    cand.remove(v);
                    changed = true;
                }
            }
            if !changed || cand.len() <= self.bound {
                return cand;
            }
        }
    }

    fn branch(&mut self, mut cand: VertexSet, forced: VertexSet) {
        self.nodes += 1;
        loop {
            let before = cand.len();
            for f in &forced {
                if !cand.contains(f) {
                    return;
                }
                cand = ball(self.g, &cand, f, self.s);
            }
            if cand.len() == before {
                break;
            }
        }
        if cand.len() <= self.bound {
            return;
        }
        let Some((x, y)) = first_far_pair(self.g, &cand, self.s) else {
            self.record(cand);
            return;
        };
        let x_forced = forced.contains(x);
        let y_forced = forced.contains(y);
        if !x_forced {
            let mut without_x = cand.clone();
            without_x.remove(x);
            self.branch(without_x, forced.clone());
            if self.done {
                return;
            }
        }
        if !y_forced {
            let mut without_y = cand;
            without_y.remove(y);
            let mut keep_x = forced;
            keep_x.insert(x);
            self.branch(without_y, keep_x);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn star_is_a_2club() {
        let star = Graph::new(6, (1..6).map(|i| (0, i))).unwrap();
        let r = max_s_club(&star, 2).unwrap();
        assert_eq!(r.best_size, 6);
        assert_eq!(r.best_set, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn path_examples() {
        assert_eq!(max_s_club(&path(4), 2).unwrap().best_size, 3);
        assert_eq!(max_s_club(&path(4), 1).unwrap().best_size, 2);
        assert_eq!(max_s_club(&path(4), 3).unwrap().best_size, 4);
        assert!(!has_s_club_of_size(&path(4), 2, 4).unwrap());
        assert!(has_s_club_of_size(&path(4), 2, 3).unwrap());
    }

    #[test]
    fn trivial_thresholds() {
        let g = Graph::edgeless(3);
        assert!(has_s_club_of_size(&g, 2, 0).unwrap());
        assert!(has_s_club_of_size(&g, 2, 1).unwrap());
        assert!(!has_s_club_of_size(&g, 2, 2).unwrap());
        assert!(!has_s_club_of_size(&g, 2, 4).unwrap());
    }

    #[test]
    fn clubs_stay_inside_one_component() {
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = max_s_club(&g, 2).unwrap();
        assert_eq!(r.best_size, 3);
    }

    #[test]
    fn induced_distance_matters() {
        // C6: whole cycle has diameter 3; removing a vertex leaves P5 with
        // diameter 4, so the best 2-club is a closed neighborhood (3 vertices)
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(max_s_club(&c6, 2).unwrap().best_size, 3);
        assert_eq!(max_s_club(&c6, 3).unwrap().best_size, 6);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(max_s_club(&Graph::edgeless(0), 2), Err(Error::EmptyGraph));
        assert!(matches!(
            max_s_club(&path(3), 0),
            Err(Error::InvalidParameter(_))
        ));
    }
}
