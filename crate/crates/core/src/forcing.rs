//! The zero forcing process.
//!
//! A blue vertex with exactly one white neighbour forces that neighbour
//! blue. [`closure`] runs the rule to its fixed point, always firing the
//! smallest eligible forcer first, and records every force.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::arcs::{ArcEdge, ArcSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A single application of the colour change rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

/// Chronological record of a closure run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub forces: Vec<Force>,
}

impl ForcingTrace {
    /// Replays the trace on `g`, checking every step against the rule.
    /// Returns the final blue set.
    pub fn replay(&self, g: &Graph) -> Result<VertexSet> {
        let mut blue = self.initial.clone();
        for (step, f) in self.forces.iter().enumerate() {
            g.check_vertex(f.forcer)?;
            g.check_vertex(f.forced)?;
            if !blue.contains(f.forcer)
                || blue.contains(f.forced)
                || !g.has_edge(f.forcer, f.forced)
            {
                return Err(Error::Domain(alloc::format!(
                    "step {step}: {} cannot force {}",
                    f.forcer,
                    f.forced
                )));
            }
            let white = g
                .neighbors(f.forcer)
                .iter()
                .filter(|&&w| !blue.contains(w))
                .count();
            if white != 1 {
                return Err(Error::Domain(alloc::format!(
                    "step {step}: {} has {white} white neighbours",
                    f.forcer
                )));
            }
            blue.insert(f.forced);
        }
        Ok(blue)
    }

    /// The forces as an arc set.
    pub fn to_arc_set(&self) -> ArcSet {
        self.forces
            .iter()
            .map(|f| ArcEdge::new(f.forcer, f.forced))
            .collect()
    }
}

fn blue_set(g: &Graph, s: &[usize]) -> Result<VertexSet> {
    let mut blue = VertexSet::new(g.order());
    for &v in s {
        g.check_vertex(v)?;
        blue.insert(v);
    }
    Ok(blue)
}

/// Derived set of `s` together with the forces that produced it.
pub fn closure(g: &Graph, s: &[usize]) -> Result<(VertexSet, ForcingTrace)> {
    let blue = blue_set(g, s)?;
    Ok(closure_of_set(g, blue))
}

pub fn closure_of_set(g: &Graph, initial: VertexSet) -> (VertexSet, ForcingTrace) {
    let mut blue = initial.clone();
    let mut white_count: Vec<usize> = (0..g.order())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| !blue.contains(w))
                .count()
        })
        .collect();
    let mut ready: BinaryHeap<Reverse<usize>> = blue
        .iter()
        .filter(|&v| white_count[v] == 1)
        .map(Reverse)
        .collect();
    let mut forces = Vec::new();
    while let Some(Reverse(u)) = ready.pop() {
        if white_count[u] != 1 {
            continue;
        }
        let v = *g
            .neighbors(u)
            .iter()
            .find(|&&w| !blue.contains(w))
            .expect("white count is one");
        blue.insert(v);
        forces.push(Force {
            forcer: u,
            forced: v,
        });
        for &w in g.neighbors(v) {
            white_count[w] -= 1;
            if white_count[w] == 1 && blue.contains(w) {
                ready.push(Reverse(w));
            }
        }
        if white_count[v] == 1 {
            ready.push(Reverse(v));
        }
    }
    (blue, ForcingTrace { initial, forces })
}

pub fn derived_set(g: &Graph, s: &[usize]) -> Result<VertexSet> {
    closure(g, s).map(|(d, _)| d)
}

pub fn is_zero_forcing_set(g: &Graph, s: &[usize]) -> Result<bool> {
    derived_set(g, s).map(|d| d.is_full())
}

/// Closure on graphs with at most 64 vertices using neighbourhood masks.
#[derive(Clone, Debug)]
pub struct SmallGraph {
    masks: Vec<u64>,
    full: u64,
}

impl SmallGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.order() > 64 {
            return Err(Error::Resource {
                what: "order for mask closure",
                limit: 64,
                got: g.order(),
            });
        }
        let masks = (0..g.order())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let full = if g.order() == 64 {
            u64::MAX
        } else {
            (1u64 << g.order()) - 1
        };
        Ok(SmallGraph { masks, full })
    }

    pub fn order(&self) -> usize {
        self.masks.len()
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.masks[v]
    }

    /// Derived set of the mask `blue`.
    pub fn closure(&self, mut blue: u64) -> u64 {
        loop {
            let before = blue;
            let mut scan = blue;
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                let white = self.masks[u] & !blue;
                if white != 0 && white & (white - 1) == 0 {
                    blue |= white;
                }
            }
            if blue == before || blue == self.full {
                return blue;
            }
        }
    }
}

/// Bitmask of `vs`.
pub fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Vertices of a mask in ascending order.
pub fn mask_members(mut m: u64) -> Vec<usize> {
    let mut out = vec![];
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}
