use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoclub::sweep::{graph_from_mask, pair_count};
use twoclub::{
    brute_force_max_clique, brute_force_max_s_club, has_s_club_of_size, is_s_club, max_clique,
    max_s_club, reduce, target_size, Graph,
};

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.7);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn check_against_oracles(g: &Graph) {
    let omega = max_clique(g).unwrap();
    assert_eq!(omega.best_size, brute_force_max_clique(g).unwrap().best_size, "{g:?}");
    assert!(g.is_clique(&g.vertex_set(&omega.best_set).unwrap()));
    let mut previous = 0;
    for s in 1..=3 {
        let fast = max_s_club(g, s).unwrap();
        let slow = brute_force_max_s_club(g, s).unwrap();
        assert_eq!(fast.best_size, slow.best_size, "s={s} {g:?}");
        assert_eq!(fast.best_size, fast.best_set.len());
        assert!(is_s_club(g, &fast.best_set, s).unwrap());
        assert!(fast.best_size >= previous);
        previous = fast.best_size;
        if s == 1 {
            assert_eq!(fast.best_size, omega.best_size);
        }
    }
}

#[test]
fn petersen_clique_number() {
    // brute force over all 1024 subsets gives 2
    assert_eq!(brute_force_max_clique(&petersen()).unwrap().best_size, 2);
    assert_eq!(max_clique(&petersen()).unwrap().best_size, 2);
    // diameter 2 graph: the whole graph is a 2-club
    assert_eq!(max_s_club(&petersen(), 2).unwrap().best_size, 10);
}

#[test]
fn p4_fixtures() {
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(brute_force_max_s_club(&p4, 2).unwrap().best_size, 3);
    assert_eq!(max_s_club(&p4, 2).unwrap().best_size, 3);
    assert!(!has_s_club_of_size(&p4, 2, 4).unwrap());
}

#[test]
fn k2_gadget_optimum_is_target() {
    let inst = reduce(&Graph::complete(2)).unwrap();
    let oracle = brute_force_max_s_club(&inst.graph, 2).unwrap();
    assert_eq!(oracle.best_size, 18);
    assert_eq!(max_s_club(&inst.graph, 2).unwrap().best_size, 18);
    assert_eq!(target_size(2, 2).unwrap(), 18);
    assert!(has_s_club_of_size(&inst.graph, 2, 18).unwrap());
    assert!(!has_s_club_of_size(&inst.graph, 2, 19).unwrap());
}

#[test]
fn exhaustive_up_to_five_vertices() {
    for n in 1..=5 {
        for mask in 0..1u64 << pair_count(n) {
            check_against_oracles(&graph_from_mask(n, mask));
        }
    }
}

#[test]
fn random_graphs_8_to_16_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2c1b);
    for _ in 0..500 {
        let n = rng.gen_range(8..=16);
        check_against_oracles(&random_graph(&mut rng, n));
    }
}

#[test]
fn decision_mode_matches_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(5..=12);
        let g = random_graph(&mut rng, n);
        for s in 1..=3 {
            let best = max_s_club(&g, s).unwrap().best_size;
            for t in 0..=n + 1 {
                assert_eq!(has_s_club_of_size(&g, s, t).unwrap(), t <= best, "s={s} t={t}");
            }
        }
    }
}

#[test]
fn repeated_runs_are_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 14);
        for s in 1..=3 {
            let a = max_s_club(&g, s).unwrap();
            let b = max_s_club(&g, s).unwrap();
            assert_eq!((a.best_set, a.nodes_explored), (b.best_set, b.nodes_explored));
        }
        assert_eq!(max_clique(&g).unwrap().best_set, max_clique(&g).unwrap().best_set);
    }
}
