mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::random_graph;
use twistcube_core::forcing::is_zero_forcing_set;
use twistcube_core::minority::build_recursive;
use twistcube_core::solver::{solve_exact, SolveOptions};
use twistcube_core::{CubeGraph, Graph};

/// Every subset in order of size, then by mask value; the first forcing
/// subset found gives the zero forcing number.
fn reference_z(g: &Graph) -> usize {
    let n = g.order();
    for k in 0..=n {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_zero_forcing_set(g, &s).unwrap() {
                return k;
            }
        }
    }
    unreachable!("the whole vertex set forces")
}

#[test]
fn agrees_with_reference_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..150 {
        let (order, p) = (rng.gen_range(1..=8), rng.gen_range(0.1..0.9));
        let g = random_graph(&mut rng, order, p);
        let r = solve_exact(&g, &SolveOptions::default()).unwrap();
        assert_eq!(r.z(), Some(reference_z(&g)), "{g:?}");
        assert!(is_zero_forcing_set(&g, &r.witness).unwrap());
    }
}

#[test]
fn witness_is_lexicographically_least() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 7, 0.4);
        let r = solve_exact(&g, &SolveOptions::default()).unwrap();
        let z = r.witness.len();
        let least = (0u32..1 << 7)
            .filter(|m| m.count_ones() as usize == z)
            .map(|m| (0..7).filter(|&v| m >> v & 1 == 1).collect::<Vec<usize>>())
            .filter(|s| is_zero_forcing_set(&g, s).unwrap())
            .min()
            .unwrap();
        assert_eq!(r.witness, least);
    }
}

#[test]
fn cube_values() {
    let opts = SolveOptions::default();
    for n in 2..=4 {
        let q = CubeGraph::hypercube(n).unwrap();
        assert_eq!(
            solve_exact(q.graph(), &opts).unwrap().z(),
            Some(1 << (n - 1))
        );
    }
    let m4 = build_recursive(4).unwrap();
    let r = solve_exact(m4.cube.graph(), &opts).unwrap();
    assert_eq!(r.z(), Some(7));
    assert!(r.subsets_tested > 0);
}
