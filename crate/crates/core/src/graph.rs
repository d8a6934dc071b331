//! Undirected simple graphs over dense `0..n` vertex ids.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Shortest-path length, with `Unreachable` ordered above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_within(self, bound: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u64(*d as u64),
            Distance::Unreachable => serializer.serialize_none(),
        }
    }
}

/// Immutable undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    n_edges: usize,
}

impl Graph {
    /// Builds a graph, deduplicating parallel edges.
    pub fn new<I>(n_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![VertexSet::new(n_vertices); n_vertices];
        let mut n_edges = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(Error::InvalidVertex {
                        vertex: w,
                        n_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            if !adjacency[u].contains(v) {
                adjacency[u].insert(v);
                adjacency[v].insert(u);
                n_edges += 1;
            }
        }
        Ok(Graph { adjacency, n_edges })
    }

    /// Graph on `n_vertices` vertices and no edges.
    pub fn edgeless(n_vertices: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::new(n_vertices); n_vertices],
            n_edges: 0,
        }
    }

    pub fn complete(n_vertices: usize) -> Self {
        let adjacency = (0..n_vertices)
            .map(|v| {
                let mut row = VertexSet::full(n_vertices);
                row.remove(v);
                row
            })
            .collect();
        Graph {
            adjacency,
            n_edges: n_vertices * n_vertices.saturating_sub(1) / 2,
        }
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_vertices() && self.adjacency[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, row)| {
            let start = row.next_after(u);
            std::iter::successors(start, move |&v| row.next_after(v)).map(move |v| (u, v))
        })
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n_vertices())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n_vertices() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n_vertices: self.n_vertices(),
            })
        }
    }

    /// Converts a list of ids into a set, rejecting out-of-range ids.
    pub fn vertex_set(&self, ids: &[usize]) -> Result<VertexSet> {
        let mut set = VertexSet::new(self.n_vertices());
        for &v in ids {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    /// True iff every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adjacency[v])
        })
    }

    /// First non-adjacent pair `(u, v)`, `u < v`, inside `ids`.
    pub fn first_non_edge(&self, ids: &[usize]) -> Option<(usize, usize)> {
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &u) in sorted.iter().enumerate() {
            for &v in &sorted[i + 1..] {
                if !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n_vertices", &self.n_vertices())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Breadth-first distances from `source` over the whole graph.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Distance>> {
    g.check_vertex(source)?;
    let mut dist = vec![Distance::Unreachable; g.n_vertices()];
    let mut unvisited = g.all_vertices();
    let mut frontier = VertexSet::new(g.n_vertices());
    frontier.insert(source);
    unvisited.remove(source);
    let mut level = 0;
    while !frontier.is_empty() {
        let mut next = VertexSet::new(g.n_vertices());
        for v in &frontier {
            dist[v] = Distance::Finite(level);
            next.union_with(g.neighbors(v));
        }
        next.intersect_with(&unvisited);
        unvisited.difference_with(&next);
        frontier = next;
        level += 1;
    }
    Ok(dist)
}

/// Vertices of `within` reachable from `source` by paths of length at most
/// `radius` that stay inside `within`. `source` must be a member of `within`.
pub fn ball(g: &Graph, within: &VertexSet, source: usize, radius: usize) -> VertexSet {
    let mut reached = VertexSet::new(g.n_vertices());
    reached.insert(source);
    let mut frontier = reached.clone();
    for _ in 0..radius {
        let mut next = VertexSet::new(g.n_vertices());
        for v in &frontier {
            next.union_with(g.neighbors(v));
        }
        next.intersect_with(within);
        next.difference_with(&reached);
        if next.is_empty() {
            break;
        }
        reached.union_with(&next);
        frontier = next;
    }
    reached
}

/// Eccentricity of `source` in `G[within]`.
fn eccentricity_within(g: &Graph, within: &VertexSet, source: usize) -> Distance {
    let target = within.len();
    let mut reached = VertexSet::new(g.n_vertices());
    reached.insert(source);
    let mut seen = 1;
    let mut frontier = reached.clone();
    let mut level = 0;
    while seen < target {
        let mut next = VertexSet::new(g.n_vertices());
        for v in &frontier {
            next.union_with(g.neighbors(v));
        }
        next.intersect_with(within);
        next.difference_with(&reached);
        if next.is_empty() {
            return Distance::Unreachable;
        }
        seen += next.len();
        reached.union_with(&next);
        frontier = next;
        level += 1;
    }
    Distance::Finite(level)
}

/// Diameter of the subgraph induced by `within` (`Finite(0)` when `within`
/// has at most one vertex).
pub fn diameter_within(g: &Graph, within: &VertexSet) -> Distance {
    let mut best = Distance::Finite(0);
    for v in within {
        let ecc = eccentricity_within(g, within, v);
        if ecc == Distance::Unreachable {
            return ecc;
        }
        best = best.max(ecc);
    }
    best
}

pub fn diameter(g: &Graph) -> Result<Distance> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(diameter_within(g, &g.all_vertices()))
}

/// Lexicographically first pair `(u, v)`, `u < v`, of `within` whose distance
/// in `G[within]` exceeds `s`.
pub fn first_far_pair(g: &Graph, within: &VertexSet, s: usize) -> Option<(usize, usize)> {
    for u in within {
        let near = ball(g, within, u, s);
        if let Some(v) = within.difference(&near).first() {
            // Any far vertex below u would have reported u earlier.
            debug_assert!(v > u);
            return Some((u, v));
        }
    }
    None
}

/// `G[within]` has diameter at most `s`; sets of size at most one qualify.
pub fn is_s_club_set(g: &Graph, within: &VertexSet, s: usize) -> bool {
    within.len() <= 1 || first_far_pair(g, within, s).is_none()
}

pub fn is_s_club(g: &Graph, set: &[usize], s: usize) -> Result<bool> {
    let within = g.vertex_set(set)?;
    Ok(is_s_club_set(g, &within, s))
}

/// Induced subgraph together with the id correspondence.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `new_to_old[i]` is the original id of new vertex `i`; ascending.
    pub new_to_old: Vec<usize>,
}

impl InducedSubgraph {
    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.new_to_old.binary_search(&old).ok()
    }
}

pub fn induced_subgraph(g: &Graph, set: &[usize]) -> Result<InducedSubgraph> {
    let mut new_to_old = set.to_vec();
    new_to_old.sort_unstable();
    new_to_old.dedup();
    for &v in &new_to_old {
        g.check_vertex(v)?;
    }
    let mut edges = Vec::new();
    for (i, &u) in new_to_old.iter().enumerate() {
        for (j, &v) in new_to_old.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(new_to_old.len(), edges)?;
    Ok(InducedSubgraph { graph, new_to_old })
}

/// Connected components of `G[within]`, ordered by smallest member.
pub fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut remaining = within.clone();
    let mut out = Vec::new();
    while let Some(start) = remaining.first() {
        let comp = ball(g, &remaining, start, usize::MAX);
        remaining.difference_with(&comp);
        out.push(comp);
    }
    out
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_within(g, &g.all_vertices())
        .iter()
        .map(VertexSet::to_vec)
        .collect()
}
