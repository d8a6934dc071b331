use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{SolveResult, Stopwatch};

/// Maximum clique by branch-and-bound with a greedy-coloring bound.
pub fn max_clique(g: &Graph) -> Result<SolveResult> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    let clock = Stopwatch::start();
    let mut search = CliqueSearch {
        g,
        current: Vec::new(),
        best: vec![0],
        nodes: 0,
    };
    search.expand(g.all_vertices());
    let result = SolveResult::new(search.best, search.nodes, clock.elapsed());
    assert!(
        g.is_clique(&g.vertex_set(&result.best_set)?),
        "max_clique returned a non-clique"
    );
    Ok(result)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: VertexSet) {
        self.nodes += 1;
        let (order, colors) = color_classes(self.g, &candidates);
        for idx in (0..order.len()).rev() {
            // colors[idx] bounds the clique size reachable from order[..=idx]
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next = candidates.intersection(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Sequential greedy coloring of `candidates` in id order. Returns vertices
/// grouped by color class and the (1-based) color of each.
fn color_classes(g: &Graph, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    let mut uncolored = candidates.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut open = uncolored.clone();
        while let Some(v) = open.first() {
            open.remove(v);
            open.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(max_clique(&Graph::complete(4)).unwrap().best_size, 4);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(max_clique(&c5).unwrap().best_size, 2);
        assert_eq!(max_clique(&petersen()).unwrap().best_size, 2);
        assert_eq!(max_clique(&Graph::edgeless(3)).unwrap().best_size, 1);
        assert_eq!(max_clique(&Graph::edgeless(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn finds_planted_clique() {
        let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
        let planted = [1, 4, 6, 9, 11];
        for (i, &u) in planted.iter().enumerate() {
            for &v in &planted[i + 1..] {
                edges.push((u, v));
            }
        }
        let g = Graph::new(12, edges).unwrap();
        let r = max_clique(&g).unwrap();
        assert_eq!(r.best_set, planted.to_vec());
        assert!(r.nodes_explored >= 1);
    }

    #[test]
    fn coloring_is_proper() {
        let g = petersen();
        let (order, colors) = color_classes(&g, &g.all_vertices());
        assert_eq!(order.len(), 10);
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if colors[i] == colors[j] {
                    assert!(!g.has_edge(order[i], order[j]));
                }
            }
        }
        assert!(colors.windows(2).all(|w| w[0] <= w[1]));
    }
}
