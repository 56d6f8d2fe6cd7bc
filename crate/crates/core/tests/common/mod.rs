#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use twistcube_core::{ArcEdge, ArcSet, Graph, TwistSpec};

/// Erdős–Rényi graph on `order` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(order, edges).unwrap()
}

/// Twisted hypercube recipe with independent random children and matchings.
pub fn random_spec<R: Rng>(rng: &mut R, n: u32) -> TwistSpec {
    if n == 0 {
        return TwistSpec::Leaf;
    }
    let mut matching: Vec<usize> = (0..1usize << (n - 1)).collect();
    matching.shuffle(rng);
    TwistSpec::Node {
        left: Box::new(random_spec(rng, n - 1)),
        right: Box::new(random_spec(rng, n - 1)),
        matching,
    }
}

/// Random arc set whose arcs form vertex-disjoint directed paths.
pub fn random_dipath_forest<R: Rng>(rng: &mut R, g: &Graph, p: f64) -> ArcSet {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let n = g.order();
    let mut out = vec![None; n];
    let mut inn = vec![None; n];
    let mut f = ArcSet::new();
    for (a, b) in edges {
        if !rng.gen_bool(p) {
            continue;
        }
        let (t, h) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        if out[t].is_some() || inn[h].is_some() {
            continue;
        }
        // Following arcs from h must not lead back to t.
        let mut v = Some(h);
        let mut closes = false;
        while let Some(x) = v {
            if x == t {
                closes = true;
                break;
            }
            v = out[x];
        }
        if closes {
            continue;
        }
        out[t] = Some(h);
        inn[h] = Some(t);
        f.insert(t, h);
    }
    f
}

/// Every arc set of `g` (each edge unused, forward or backward) that forms
/// vertex-disjoint directed paths.
pub fn all_dipath_forests(g: &Graph) -> Vec<ArcSet> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = 3usize.pow(edges.len() as u32);
    let mut out = Vec::new();
    'code: for mut code in 0..total {
        let mut indeg = vec![0u8; g.order()];
        let mut outdeg = vec![0u8; g.order()];
        let mut f = ArcSet::new();
        for &(u, v) in &edges {
            let choice = code % 3;
            code /= 3;
            let (t, h) = match choice {
                0 => continue,
                1 => (u, v),
                _ => (v, u),
            };
            outdeg[t] += 1;
            indeg[h] += 1;
            if outdeg[t] > 1 || indeg[h] > 1 {
                continue 'code;
            }
            f.insert(t, h);
        }
        if twistcube_core::arcs::decompose(g, &f).is_ok() {
            out.push(f);
        }
    }
    out
}

pub fn arc(t: usize, h: usize) -> ArcEdge {
    ArcEdge::new(t, h)
}
