//! The CLIQUE to 2-CLUB gadget.
//!
//! For a source graph `H` on `n` vertices the gadget `G` has vertex classes
//!
//! * `Original(i)`: the vertices of `H`, keeping the edges of `H`,
//! * `Copy(i, j)`: `n` private copies attached to each original `i`,
//! * `a`, `b`, `u`: three hubs,
//! * `X1`: `n^3` padding vertices seen only by `a` and `b`,
//! * `X2`: `n^2 - n` padding vertices seen by `b`, `u` and every original.
//!
//! Hub edges: `a` sees `b`, all of `X1` and all copies; `b` sees all of `X1`,
//! all originals and all of `X2`; `u` sees all copies, all originals and all
//! of `X2`. `H` has a clique of size `k` exactly when `G` has a 2-club of
//! size [`target_size`]`(n, k)`. The gadget depends on `H` only, so one
//! instance serves every `k`.
//!
//! Ids are laid out as originals `0..n`, `Copy(i, j)` at `n + i*n + j`, then
//! `a`, `b`, `u`, then `X1`, then `X2`.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Original(usize),
    Copy(usize, usize),
    SpecialA,
    SpecialB,
    SpecialU,
    X1(usize),
    X2(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Original(i) => write!(f, "orig:{i}"),
            Role::Copy(i, j) => write!(f, "copy:{i}:{j}"),
            Role::SpecialA => f.write_str("a"),
            Role::SpecialB => f.write_str("b"),
            Role::SpecialU => f.write_str("u"),
            Role::X1(t) => write!(f, "x1:{t}"),
            Role::X2(t) => write!(f, "x2:{t}"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.parse::<usize>().map_err(|_| format!("bad index in role `{s}`"));
        match parts.as_slice() {
            ["orig", i] => Ok(Role::Original(num(i)?)),
            ["copy", i, j] => Ok(Role::Copy(num(i)?, num(j)?)),
            ["a"] => Ok(Role::SpecialA),
            ["b"] => Ok(Role::SpecialB),
            ["u"] => Ok(Role::SpecialU),
            ["x1", t] => Ok(Role::X1(num(t)?)),
            ["x2", t] => Ok(Role::X2(num(t)?)),
            _ => Err(format!("unknown role `{s}`")),
        }
    }
}

/// Id scheme of a gadget built from a source graph on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetLayout {
    n: usize,
}

impl GadgetLayout {
    pub fn new(n: usize) -> Self {
        GadgetLayout { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n_vertices(&self) -> usize {
        let n = self.n;
        n * n * n + 2 * n * n + 3
    }

    pub fn original(&self, i: usize) -> usize {
        debug_assert!(i < self.n);
        i
    }

    pub fn copy(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.n);
        self.n + i * self.n + j
    }

    pub fn special_a(&self) -> usize {
        self.n + self.n * self.n
    }

    pub fn special_b(&self) -> usize {
        self.special_a() + 1
    }

    pub fn special_u(&self) -> usize {
        self.special_a() + 2
    }

    pub fn x1(&self, t: usize) -> usize {
        debug_assert!(t < self.x1_len());
        self.special_a() + 3 + t
    }

    pub fn x2(&self, t: usize) -> usize {
        debug_assert!(t < self.x2_len());
        self.special_a() + 3 + self.x1_len() + t
    }

    pub fn x1_len(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn x2_len(&self) -> usize {
        self.n * self.n - self.n
    }

    pub fn originals(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn copies(&self) -> std::ops::Range<usize> {
        self.n..self.n + self.n * self.n
    }

    /// The copies `Copy(i, 0..n)` of original `i`.
    pub fn copies_of(&self, i: usize) -> std::ops::Range<usize> {
        let start = self.copy(i, 0);
        start..start + self.n
    }

    pub fn x1_ids(&self) -> std::ops::Range<usize> {
        let start = self.special_a() + 3;
        start..start + self.x1_len()
    }

    pub fn x2_ids(&self) -> std::ops::Range<usize> {
        let start = self.x1_ids().end;
        start..start + self.x2_len()
    }

    pub fn role_of(&self, id: usize) -> Option<Role> {
        let n = self.n;
        if id < n {
            Some(Role::Original(id))
        } else if self.copies().contains(&id) {
            let off = id - n;
            Some(Role::Copy(off / n, off % n))
        } else if id == self.special_a() {
            Some(Role::SpecialA)
        } else if id == self.special_b() {
            Some(Role::SpecialB)
        } else if id == self.special_u() {
            Some(Role::SpecialU)
        } else if self.x1_ids().contains(&id) {
            Some(Role::X1(id - self.x1_ids().start))
        } else if self.x2_ids().contains(&id) {
            Some(Role::X2(id - self.x2_ids().start))
        } else {
            None
        }
    }

    pub fn id_of(&self, role: Role) -> Option<usize> {
        let n = self.n;
        match role {
            Role::Original(i) if i < n => Some(self.original(i)),
            Role::Copy(i, j) if i < n && j < n => Some(self.copy(i, j)),
            Role::SpecialA => Some(self.special_a()),
            Role::SpecialB => Some(self.special_b()),
            Role::SpecialU => Some(self.special_u()),
            Role::X1(t) if t < self.x1_len() => Some(self.x1(t)),
            Role::X2(t) if t < self.x2_len() => Some(self.x2(t)),
            _ => None,
        }
    }

    /// Role sidecar text: one `<id> <role>` line per vertex.
    pub fn emit_roles(&self) -> String {
        let mut out = String::new();
        for id in 0..self.n_vertices() {
            out.push_str(&format!("{id} {}\n", self.role_of(id).expect("id in range")));
        }
        out
    }

    /// Reads a role sidecar back, checking it matches this layout line by line.
    pub fn parse_roles(text: &str) -> Result<Vec<(usize, Role)>> {
        let mut out = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let (id, role) = line
                .split_once(' ')
                .ok_or_else(|| bad("expected `<id> <role>`".into()))?;
            let id = id
                .parse::<usize>()
                .map_err(|_| bad(format!("invalid id `{id}`")))?;
            let role = role.trim().parse::<Role>().map_err(bad)?;
            out.push((id, role));
        }
        Ok(out)
    }
}

/// Gadget graph together with its layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub layout: GadgetLayout,
    pub n: usize,
}

impl ReducedInstance {
    /// Recovers the source graph from the edges among originals.
    pub fn source_graph(&self) -> Graph {
        let originals: Vec<usize> = self.layout.originals().collect();
        induced_subgraph(&self.graph, &originals)
            .expect("originals are in range")
            .graph
    }
}

/// Builds the gadget for source graph `h`.
pub fn reduce(h: &Graph) -> Result<ReducedInstance> {
    let n = h.n_vertices();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let layout = GadgetLayout::new(n);
    let (a, b, u) = (layout.special_a(), layout.special_b(), layout.special_u());
    let mut edges: Vec<(usize, usize)> = h.edges().collect();

    edges.push((a, b));
    for x in layout.x1_ids() {
        edges.push((a, x));
        edges.push((b, x));
    }
    for c in layout.copies() {
        edges.push((a, c));
        edges.push((u, c));
    }
    for i in layout.originals() {
        edges.push((b, i));
        edges.push((u, i));
        for x in layout.x2_ids() {
            edges.push((i, x));
        }
        for c in layout.copies_of(i) {
            edges.push((i, c));
        }
    }
    for x in layout.x2_ids() {
        edges.push((b, x));
        edges.push((u, x));
    }

    let graph = Graph::new(layout.n_vertices(), edges)?;
    Ok(ReducedInstance { graph, layout, n })
}

/// `n^3 + n^2 + (k - 1) n + k + 2`, the 2-club size matched to a `k`-clique.
pub fn target_size(n: usize, k: usize) -> Result<usize> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    Ok(target_size_formula(n, k))
}

/// [`target_size`] without the `1 <= k <= n` precondition.
pub fn target_size_formula(n: usize, k: usize) -> usize {
    n * n * n + n * n + k * n + k + 2 - n
}

/// Image of clique `clique` of the source graph: all of `X1` and `X2`, the
/// clique's originals with all of their copies, and the hubs `a` and `b`.
pub fn forward_map(inst: &ReducedInstance, clique: &[usize]) -> Result<Vec<usize>> {
    let layout = &inst.layout;
    let mut members = clique.to_vec();
    members.sort_unstable();
    members.dedup();
    for &i in &members {
        if i >= inst.n {
            return Err(Error::InvalidVertex {
                vertex: i,
                n_vertices: inst.n,
            });
        }
    }
    if members.is_empty() {
        return Err(Error::InvalidK { k: 0, n: inst.n });
    }
    if let Some((x, y)) = inst.graph.first_non_edge(&members) {
        return Err(Error::NotAClique(x, y));
    }

    let mut set = VertexSet::new(layout.n_vertices());
    for &i in &members {
        set.insert(layout.original(i));
        for c in layout.copies_of(i) {
            set.insert(c);
        }
    }
    set.insert(layout.special_a());
    set.insert(layout.special_b());
    for x in layout.x1_ids().chain(layout.x2_ids()) {
        set.insert(x);
    }
    Ok(set.to_vec())
}

/// Originals of `club` that keep at least one of their copies in `club`.
pub fn extract_clique(inst: &ReducedInstance, club: &[usize]) -> Vec<usize> {
    let layout = &inst.layout;
    let mut present = VertexSet::new(layout.n_vertices());
    for &v in club {
        if v < layout.n_vertices() {
            present.insert(v);
        }
    }
    layout
        .originals()
        .filter(|&i| present.contains(i) && layout.copies_of(i).any(|c| present.contains(c)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetViolation {
    VertexCount { expected: usize, found: usize },
    MissingEdge(usize, usize),
    UnexpectedEdge(usize, usize),
}

impl fmt::Display for GadgetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetViolation::VertexCount { expected, found } => {
                write!(f, "expected {expected} vertices, found {found}")
            }
            GadgetViolation::MissingEdge(u, v) => write!(f, "required edge ({u}, {v}) missing"),
            GadgetViolation::UnexpectedEdge(u, v) => {
                write!(f, "edge ({u}, {v}) is not part of the construction")
            }
        }
    }
}

/// Whether the construction demands an edge between two roles. Pairs of
/// originals are decided by the source graph and return `None`.
pub fn required_by_roles(x: Role, y: Role) -> Option<bool> {
    use Role::*;
    let required = match (x, y) {
        (Original(_), Original(_)) => return None,
        (SpecialA, SpecialB) | (SpecialB, SpecialA) => true,
        (SpecialA, X1(_)) | (X1(_), SpecialA) => true,
        (SpecialA, Copy(..)) | (Copy(..), SpecialA) => true,
        (SpecialB, X1(_)) | (X1(_), SpecialB) => true,
        (SpecialB, Original(_)) | (Original(_), SpecialB) => true,
        (SpecialB, X2(_)) | (X2(_), SpecialB) => true,
        (Original(_), X2(_)) | (X2(_), Original(_)) => true,
        (SpecialU, Copy(..)) | (Copy(..), SpecialU) => true,
        (SpecialU, Original(_)) | (Original(_), SpecialU) => true,
        (SpecialU, X2(_)) | (X2(_), SpecialU) => true,
        (Original(i), Copy(c, _)) | (Copy(c, _), Original(i)) => i == c,
        _ => false,
    };
    Some(required)
}

/// Checks every vertex pair of the instance against the construction,
/// reporting the lexicographically first mismatch.
pub fn validate_gadget(inst: &ReducedInstance) -> std::result::Result<(), GadgetViolation> {
    let layout = &inst.layout;
    let expected = layout.n_vertices();
    let found = inst.graph.n_vertices();
    if expected != found || layout.n() != inst.n {
        return Err(GadgetViolation::VertexCount { expected, found });
    }
    let roles: Vec<Role> = (0..expected)
        .map(|id| layout.role_of(id).expect("id in range"))
        .collect();
    for u in 0..expected {
        for v in u + 1..expected {
            let present = inst.graph.has_edge(u, v);
            match required_by_roles(roles[u], roles[v]) {
                None => {}
                Some(true) if !present => return Err(GadgetViolation::MissingEdge(u, v)),
                Some(false) if present => return Err(GadgetViolation::UnexpectedEdge(u, v)),
                Some(_) => {}
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_s_club;

    #[test]
    fn layout_ids_match_fixed_scheme() {
        let l = GadgetLayout::new(2);
        assert_eq!(l.n_vertices(), 19);
        assert_eq!(l.copy(0, 0), 2);
        assert_eq!(l.copy(1, 1), 5);
        assert_eq!((l.special_a(), l.special_b(), l.special_u()), (6, 7, 8));
        assert_eq!(l.x1_ids(), 9..17);
        assert_eq!(l.x2_ids(), 17..19);
        assert_eq!(l.role_of(19), None);
    }

    #[test]
    fn role_of_is_a_bijection() {
        for n in 1..=5 {
            let l = GadgetLayout::new(n);
            let mut counts = [0usize; 7];
            for id in 0..l.n_vertices() {
                let role = l.role_of(id).unwrap();
                assert_eq!(l.id_of(role), Some(id));
                let slot = match role {
                    Role::Original(_) => 0,
                    Role::Copy(..) => 1,
                    Role::SpecialA => 2,
                    Role::SpecialB => 3,
                    Role::SpecialU => 4,
                    Role::X1(_) => 5,
                    Role::X2(_) => 6,
                };
                counts[slot] += 1;
            }
            assert_eq!(counts, [n, n * n, 1, 1, 1, n * n * n, n * n - n]);
        }
    }

    #[test]
    fn role_text_round_trip() {
        let l = GadgetLayout::new(2);
        let text = l.emit_roles();
        assert!(text.starts_with("0 orig:0\n1 orig:1\n2 copy:0:0\n"));
        assert!(text.contains("6 a\n7 b\n8 u\n9 x1:0\n"));
        assert!(text.ends_with("18 x2:1\n"));
        let parsed = GadgetLayout::parse_roles(&text).unwrap();
        assert_eq!(parsed.len(), 19);
        for (id, role) in parsed {
            assert_eq!(l.role_of(id), Some(role));
        }
        assert!(GadgetLayout::parse_roles("0 orig\n").is_err());
    }

    #[test]
    fn reduce_rejects_empty_source() {
        assert_eq!(reduce(&Graph::edgeless(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn n_equals_one_is_degenerate_but_valid() {
        let inst = reduce(&Graph::edgeless(1)).unwrap();
        assert_eq!(inst.graph.n_vertices(), 6);
        assert_eq!(inst.layout.x2_len(), 0);
        assert_eq!(inst.graph.n_edges(), 3 + 4 + 1);
        assert_eq!(validate_gadget(&inst), Ok(()));
        let y = forward_map(&inst, &[0]).unwrap();
        assert_eq!(y.len(), target_size(1, 1).unwrap());
        assert!(is_s_club(&inst.graph, &y, 2).unwrap());
    }

    #[test]
    fn target_size_examples() {
        assert_eq!(target_size(2, 2), Ok(18));
        assert_eq!(target_size(3, 3), Ok(47));
        assert_eq!(target_size(4, 3), Ok(93));
        assert_eq!(target_size(3, 0), Err(Error::InvalidK { k: 0, n: 3 }));
        assert_eq!(target_size(3, 4), Err(Error::InvalidK { k: 4, n: 3 }));
        assert_eq!(target_size_formula(2, 3), 21);
    }

    #[test]
    fn forward_map_k2_fixture() {
        let inst = reduce(&Graph::complete(2)).unwrap();
        let y = forward_map(&inst, &[1, 0]).unwrap();
        let expected: Vec<usize> = (0..=7).chain(9..=16).chain([17, 18]).collect();
        assert_eq!(y, expected);
        assert!(is_s_club(&inst.graph, &y, 2).unwrap());
    }

    #[test]
    fn forward_map_errors() {
        let inst = reduce(&Graph::edgeless(3)).unwrap();
        assert_eq!(forward_map(&inst, &[0, 2]), Err(Error::NotAClique(0, 2)));
        assert_eq!(forward_map(&inst, &[]), Err(Error::InvalidK { k: 0, n: 3 }));
        assert!(matches!(
            forward_map(&inst, &[3]),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn extract_clique_requires_copy_witness() {
        let inst = reduce(&Graph::complete(3)).unwrap();
        let l = inst.layout;
        assert!(extract_clique(&inst, &[]).is_empty());
        assert!(extract_clique(&inst, &[0, 1, 2]).is_empty());
        assert_eq!(extract_clique(&inst, &[0, 1, l.copy(1, 2)]), vec![1]);
        // a copy without its original does not count
        assert!(extract_clique(&inst, &[l.copy(0, 0)]).is_empty());
    }

    #[test]
    fn validate_reports_first_violation() {
        let mut inst = reduce(&Graph::complete(2)).unwrap();
        let (a, u) = (inst.layout.special_a(), inst.layout.special_u());
        let mut edges: Vec<_> = inst.graph.edges().collect();
        edges.push((a, u));
        inst.graph = Graph::new(19, edges).unwrap();
        assert_eq!(validate_gadget(&inst), Err(GadgetViolation::UnexpectedEdge(a, u)));
    }
}
