//! WebAssembly bindings for the browser demo.
//!
//! Every export takes the source graph as text (DIMACS or EDGELIST, detected
//! automatically) and returns a JSON string, so the page needs no generated
//! TypeScript types. Errors come back as rejected strings.

use serde::Serialize;
use twoclub::{
    extract_clique, max_clique, max_s_club, min_deletion_to_s_club_cluster, parse_graph_auto,
    reduce, target_size, validate_gadget, ReducedInstance,
};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest source graph the page accepts; n = 4 already gives a 99-vertex
/// gadget and keeps every operation interactive.
pub const MAX_SOURCE_VERTICES: usize = 4;

type Outcome = Result<String, String>;

#[derive(Serialize)]
struct GadgetView {
    n: usize,
    n_vertices: usize,
    n_edges: usize,
    /// Role label per gadget vertex, indexed by id.
    roles: Vec<String>,
    edges: Vec<(usize, usize)>,
    /// `targets[k - 1]` is the 2-club size matching a k-clique.
    targets: Vec<usize>,
}

#[derive(Serialize)]
struct SolveView {
    omega: usize,
    clique: Vec<usize>,
    max_2club: usize,
    club: Vec<usize>,
    extracted_clique: Vec<usize>,
    target: usize,
    agree: bool,
    nodes_explored: u64,
}

#[derive(Serialize)]
struct CertificateView {
    deleted: Vec<usize>,
    roles: Vec<String>,
}

fn load(source: &str) -> Result<ReducedInstance, String> {
    let h = parse_graph_auto(source).map_err(|e| e.to_string())?;
    if h.n_vertices() > MAX_SOURCE_VERTICES {
        return Err(format!(
            "source graph has {} vertices; the demo accepts at most {MAX_SOURCE_VERTICES}",
            h.n_vertices()
        ));
    }
    let inst = reduce(&h).map_err(|e| e.to_string())?;
    validate_gadget(&inst).map_err(|v| v.to_string())?;
    Ok(inst)
}

fn to_json(value: &impl Serialize) -> Outcome {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn role_label(inst: &ReducedInstance, id: usize) -> String {
    inst.layout
        .role_of(id)
        .map_or_else(|| "?".to_string(), |r| r.to_string())
}

/// Builds the gadget for `source` and returns its vertices, roles and edges.
#[wasm_bindgen]
pub fn build_gadget(source: &str) -> Outcome {
    let inst = load(source)?;
    let n = inst.n;
    to_json(&GadgetView {
        n,
        n_vertices: inst.graph.n_vertices(),
        n_edges: inst.graph.n_edges(),
        roles: (0..inst.graph.n_vertices())
            .map(|id| role_label(&inst, id))
            .collect(),
        edges: inst.graph.edges().collect(),
        targets: (1..=n).map(|k| target_size(n, k).unwrap()).collect(),
    })
}

/// Solves maximum clique on the source and maximum 2-club on the gadget,
/// and maps the 2-club back to a clique.
#[wasm_bindgen]
pub fn solve(source: &str) -> Outcome {
    let inst = load(source)?;
    let h = inst.source_graph();
    let clique = max_clique(&h).map_err(|e| e.to_string())?;
    let club = max_s_club(&inst.graph, 2).map_err(|e| e.to_string())?;
    let target = target_size(inst.n, clique.best_size).map_err(|e| e.to_string())?;
    let extracted_clique = extract_clique(&inst, &club.best_set);
    to_json(&SolveView {
        omega: clique.best_size,
        agree: club.best_size == target && extracted_clique.len() >= clique.best_size,
        clique: clique.best_set,
        max_2club: club.best_size,
        club: club.best_set,
        extracted_clique,
        target,
        nodes_explored: clique.nodes_explored + club.nodes_explored,
    })
}

/// Smallest set of at most two gadget vertices whose deletion leaves a
/// 2-club cluster graph.
#[wasm_bindgen]
pub fn deletion_certificate(source: &str) -> Outcome {
    let inst = load(source)?;
    let cert = min_deletion_to_s_club_cluster(&inst.graph, 2, 2)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| "no deletion set of size at most 2".to_string())?;
    to_json(&CertificateView {
        roles: cert.deleted.iter().map(|&id| role_label(&inst, id)).collect(),
        deleted: cert.deleted,
    })
}
