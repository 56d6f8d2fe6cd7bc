//! Cross-checks between the two chain twist detectors, greedy execution and
//! the zero forcing closure.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_dipath_forests, random_dipath_forest, random_graph};
use twistcube_core::arcs::{
    execute, find_chain_twist, for_each_chain_twist_path, is_chain_twist, is_forcing_arc_set,
    product_arcset, Detector,
};
use twistcube_core::forcing::is_zero_forcing_set;
use twistcube_core::graph::cartesian_product;
use twistcube_core::Graph;

fn check_instance(g: &Graph, f: &twistcube_core::ArcSet) {
    let exhaustive = find_chain_twist(g, f, Detector::Exhaustive).unwrap();
    let walk = find_chain_twist(g, f, Detector::Walk).unwrap();
    let complete = execute(g, f).unwrap().is_complete();
    assert_eq!(exhaustive.is_none(), complete, "graph {g:?} arcs {f:?}");
    assert_eq!(walk.is_none(), complete, "graph {g:?} arcs {f:?}");
    for w in exhaustive.iter().chain(walk.iter()) {
        assert!(is_chain_twist(g, f, w).unwrap());
    }
    if complete {
        let starts = f.initial_vertices(g.order());
        assert!(is_zero_forcing_set(g, &starts).unwrap());
    }
}

#[test]
fn every_arc_set_on_four_vertices() {
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
        .collect();
    let mut instances = 0;
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(4, edges).unwrap();
        for f in all_dipath_forests(&g) {
            check_instance(&g, &f);
            instances += 1;
        }
    }
    assert!(instances > 1000);
}

#[test]
fn random_hosts_up_to_twelve_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut twists = 0;
    for _ in 0..400 {
        let order = rng.gen_range(3..=12);
        let p = if order > 9 { 0.3 } else { 0.5 };
        let g = random_graph(&mut rng, order, p);
        let density = rng.gen_range(0.3..0.9);
        let f = random_dipath_forest(&mut rng, &g, density);
        check_instance(&g, &f);
        twists += usize::from(!is_forcing_arc_set(&g, &f).unwrap());
    }
    // The corpus exercises both outcomes.
    assert!(twists > 20 && twists < 380, "{twists}");
}

#[test]
fn chain_twist_paths_avoid_isolated_interiors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 8, 0.4);
        let f = random_dipath_forest(&mut rng, &g, 0.6);
        let isolated = f.isolated_vertices(g.order());
        for start in 0..g.order() {
            for_each_chain_twist_path(&g, &f, &[start], 8, |path| {
                let interior = &path[1..path.len().saturating_sub(1).max(1)];
                assert!(interior.iter().all(|v| !isolated.contains(v)), "{path:?}");
            })
            .unwrap();
        }
    }
}

#[test]
fn product_lift_stays_forcing() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut checked = 0;
    while checked < 40 {
        let order = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, order, 0.5);
        let f = random_dipath_forest(&mut rng, &g, 0.7);
        if !is_forcing_arc_set(&g, &f).unwrap() {
            continue;
        }
        let h_order = rng.gen_range(1..=4);
        let h = random_graph(&mut rng, h_order, 0.6);
        let lifted = product_arcset(&g, &f, &h).unwrap();
        let p = cartesian_product(&g, &h);
        assert_eq!(lifted.len(), f.len() * h.order());
        assert!(is_forcing_arc_set(&p, &lifted).unwrap());
        assert_eq!(
            lifted.initial_vertices(p.order()).len(),
            f.initial_vertices(g.order()).len() * h.order()
        );
        checked += 1;
    }
}
