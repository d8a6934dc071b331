use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoclub::sweep::{graph_from_mask, pair_count};
use twoclub::{
    is_s_club_cluster, min_deletion_to_s_club_cluster, reduce, verify_deletion, Graph,
};

/// Independent membership test: all-pairs distances by repeated relaxation
/// over the surviving vertices, then "same component implies distance <= s".
fn oracle_is_cluster(g: &Graph, alive: &[bool], s: usize) -> bool {
    let n = g.n_vertices();
    let inf = usize::MAX;
    let mut d = vec![vec![inf; n]; n];
    for u in (0..n).filter(|&u| alive[u]) {
        d[u][u] = 0;
        for v in (0..n).filter(|&v| alive[v] && g.has_edge(u, v)) {
            d[u][v] = 1;
        }
    }
    for k in (0..n).filter(|&k| alive[k]) {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != inf && d[k][j] != inf && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.iter().flatten().all(|&x| x == inf || x <= s)
}

fn oracle_min_size(g: &Graph, s: usize, d_max: usize) -> Option<usize> {
    let n = g.n_vertices();
    (0..=d_max.min(n)).find(|&size| {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == size)
            .any(|m| {
                let alive: Vec<bool> = (0..n).map(|v| m & (1 << v) == 0).collect();
                oracle_is_cluster(g, &alive, s)
            })
    })
}

#[test]
fn minimality_against_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..150 {
        let n = rng.gen_range(2..=12);
        let p: f64 = rng.gen_range(0.1..0.6);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        for s in 1..=2 {
            let found = min_deletion_to_s_club_cluster(&g, s, 3).unwrap();
            assert_eq!(found.as_ref().map(|c| c.deleted.len()), oracle_min_size(&g, s, 3));
            if let Some(cert) = found {
                assert!(verify_deletion(&g, &cert.deleted, s).unwrap());
                assert!(cert.deleted.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

#[test]
fn gadget_minus_hubs_is_a_cluster_graph() {
    for n in 1..=4 {
        for mask in 0..1u64 << pair_count(n) {
            let inst = reduce(&graph_from_mask(n, mask)).unwrap();
            let l = inst.layout;
            assert!(verify_deletion(&inst.graph, &[l.special_a(), l.special_b()], 2).unwrap());
            assert!(!is_s_club_cluster(&inst.graph, 2));
        }
    }
}

#[test]
fn certificate_fixtures() {
    let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let inst = reduce(&p3).unwrap();
    let l = inst.layout;
    let cert = min_deletion_to_s_club_cluster(&inst.graph, 2, 2).unwrap().unwrap();
    assert_eq!(cert.deleted, vec![l.special_a(), l.special_b()]);

    let inst = reduce(&Graph::complete(3)).unwrap();
    let cert = min_deletion_to_s_club_cluster(&inst.graph, 2, 2).unwrap().unwrap();
    assert_eq!(cert.deleted, vec![inst.layout.special_u()]);

    let l = inst.layout;
    assert!(!verify_deletion(&inst.graph, &[l.special_a(), l.special_u()], 2).unwrap());
    let everything: Vec<usize> = (0..inst.graph.n_vertices()).collect();
    assert!(verify_deletion(&inst.graph, &everything, 2).unwrap());
}

#[test]
fn distance_is_exactly_two_for_non_complete_sources() {
    for n in 2..=3 {
        for mask in 0..1u64 << pair_count(n) {
            let h = graph_from_mask(n, mask);
            let inst = reduce(&h).unwrap();
            let cert = min_deletion_to_s_club_cluster(&inst.graph, 2, 2).unwrap().unwrap();
            let complete = h.n_edges() == pair_count(n);
            assert_eq!(cert.deleted.len(), if complete { 1 } else { 2 }, "H={mask:b}");
        }
    }
}
