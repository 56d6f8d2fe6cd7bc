//! The minority cube family `(Q̂_n, F_n)` for `n >= 3`.
//!
//! `Q̂_3` is the ordinary 3-cube with the chains `000→100→110`,
//! `001→101→111` and the isolated vertices `010`, `011`. Dimension `n` joins
//! two copies of dimension `n - 1` (suffix `0` and `1`) by the standard
//! matching except for one transposition, which produces the two twisted
//! edges `01 0̄ 00 - 10 0̄ 11` and `10 0̄ 10 - 01 0̄ 01` with `0̄ = 0^(n-4)`.
//! The arc set is both copies' arcs plus the bridge arc `01 0̄ 10 → 01 0̄ 11`.
//!
//! Unrolled, the arcs are
//!
//! * `00a → 10a → 11a` for every `a` of length `n - 2`;
//! * `01 0^j 10 b → 01 0^j 11 b` for `0 <= j <= n - 4` and every `b` of
//!   length `n - j - 4` (the bridge arc added at dimension `j + 4`, copied
//!   upward);
//!
//! which leaves `01 0^(n-2)` and `01 0^(n-3) 1` isolated.

use alloc::vec;
use alloc::vec::Vec;

use crate::arcs::{decompose, ArcEdge, ArcSet, ChainDecomposition};
use crate::error::{Error, Result};
use crate::graph::{CubeGraph, TwistSpec};

pub const MIN_DIMENSION: u32 = 3;
pub const MAX_DIMENSION: u32 = 12;

fn check(n: u32) -> Result<()> {
    if n < MIN_DIMENSION {
        return Err(Error::Domain(alloc::format!(
            "minority cubes start at dimension {MIN_DIMENSION}, got {n}"
        )));
    }
    if n > MAX_DIMENSION {
        return Err(Error::Resource {
            what: "minority cube dimension",
            limit: MAX_DIMENSION as usize,
            got: n as usize,
        });
    }
    Ok(())
}

/// Class of a vertex by its two leftmost bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    C00,
    C01,
    C10,
    C11,
}

impl VertexClass {
    pub fn of(v: usize, n: u32) -> Self {
        match (v >> (n - 2)) & 0b11 {
            0b00 => VertexClass::C00,
            0b01 => VertexClass::C01,
            0b10 => VertexClass::C10,
            _ => VertexClass::C11,
        }
    }
}

/// The two `(n-1)`-bit strings swapped by the dimension-`n` matching:
/// `01 0^(n-4) 0` and `10 0^(n-4) 1`.
fn swapped_pair(n: u32) -> (usize, usize) {
    (1 << (n - 3), (1 << (n - 2)) | 1)
}

/// `(n-1)`-bit string whose two copies the dimension-`n` bridge arc joins:
/// `01 0^(n-4) 1`.
fn bridge_base(n: u32) -> usize {
    (1 << (n - 3)) | 1
}

/// Recipe of `Q̂_n` as a twisted hypercube.
pub fn twist_spec(n: u32) -> Result<TwistSpec> {
    check(n)?;
    let levels = (1..=n)
        .map(|m| {
            let mut matching: Vec<usize> = (0..1usize << (m - 1)).collect();
            if m >= 4 {
                let (x, y) = swapped_pair(m);
                matching.swap(x, y);
            }
            matching
        })
        .collect();
    Ok(TwistSpec::uniform(levels))
}

#[derive(Clone, Debug)]
pub struct MinorityCube {
    pub n: u32,
    pub cube: CubeGraph,
    pub arcs: ArcSet,
    /// The arc across the top-level matching; absent for `n = 3`.
    pub bridge_arc: Option<ArcEdge>,
    /// The two twisted edges of the top-level matching; empty for `n = 3`.
    pub top_twisted_edges: Vec<(usize, usize)>,
}

/// Builds `(Q̂_n, F_n)` by doubling from `(Q̂_3, F_3)`.
pub fn build_recursive(n: u32) -> Result<MinorityCube> {
    check(n)?;
    let cube = CubeGraph::twisted(&twist_spec(n)?)?;
    let mut arcs: Vec<ArcEdge> = [
        (0b000, 0b100),
        (0b100, 0b110),
        (0b001, 0b101),
        (0b101, 0b111),
    ]
    .into_iter()
    .map(|(t, h)| ArcEdge::new(t, h))
    .collect();
    let mut bridge_arc = None;
    for m in 4..=n {
        let lower = core::mem::take(&mut arcs);
        for bit in [0, 1] {
            arcs.extend(
                lower
                    .iter()
                    .map(|a| ArcEdge::new((a.tail << 1) | bit, (a.head << 1) | bit)),
            );
        }
        let b = bridge_base(m);
        let bridge = ArcEdge::new(b << 1, (b << 1) | 1);
        arcs.push(bridge);
        bridge_arc = Some(bridge);
    }
    let top_twisted_edges = if n >= 4 {
        let (x, y) = swapped_pair(n);
        let mut e = vec![(x << 1, (y << 1) | 1), (y << 1, (x << 1) | 1)];
        for p in &mut e {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        e.sort_unstable();
        e
    } else {
        Vec::new()
    };
    Ok(MinorityCube {
        n,
        cube,
        arcs: arcs.into_iter().collect(),
        bridge_arc,
        top_twisted_edges,
    })
}

/// Head of the arc leaving `v` in `F_n`, from the closed form.
pub fn out_neighbor(n: u32, v: usize) -> Option<usize> {
    let rest = v & ((1 << (n - 2)) - 1);
    match VertexClass::of(v, n) {
        VertexClass::C00 => Some((0b10 << (n - 2)) | rest),
        VertexClass::C10 => Some((0b11 << (n - 2)) | rest),
        VertexClass::C11 => None,
        VertexClass::C01 => match lead_split(rest) {
            Some((pos, false)) => Some(v | (1 << pos)),
            _ => None,
        },
    }
}

/// Tail of the arc entering `v` in `F_n`, from the closed form.
pub fn in_neighbor(n: u32, v: usize) -> Option<usize> {
    let rest = v & ((1 << (n - 2)) - 1);
    match VertexClass::of(v, n) {
        VertexClass::C00 => None,
        VertexClass::C10 => Some(rest),
        VertexClass::C11 => Some((0b10 << (n - 2)) | rest),
        VertexClass::C01 => match lead_split(rest) {
            Some((pos, true)) => Some(v & !(1 << pos)),
            _ => None,
        },
    }
}

/// For the last `n - 2` bits `rest = 0^j 1 c` of a 01-vertex with `c`
/// non-empty, the bit position (from the right) of `c`'s first character and
/// that character. `None` for the two isolated vertices.
fn lead_split(rest: usize) -> Option<(u32, bool)> {
    if rest <= 1 {
        return None;
    }
    let top = usize::BITS - 1 - rest.leading_zeros();
    let pos = top - 1;
    Some((pos, (rest >> pos) & 1 == 1))
}

pub fn has_out_arc(n: u32, v: usize) -> bool {
    out_neighbor(n, v).is_some()
}

pub fn has_in_arc(n: u32, v: usize) -> bool {
    in_neighbor(n, v).is_some()
}

/// `F_n` written out from the closed form.
pub fn build_closed_form(n: u32) -> Result<ArcSet> {
    check(n)?;
    let mut f = ArcSet::new();
    let q = n - 2;
    for a in 0..1usize << q {
        f.insert(a, (0b10 << q) | a);
        f.insert((0b10 << q) | a, (0b11 << q) | a);
    }
    for j in 0..n - 3 {
        let tail_prefix = (1usize << (j + 2)) | 0b10;
        let width = n - j - 4;
        for b in 0..1usize << width {
            f.insert((tail_prefix << width) | b, ((tail_prefix | 1) << width) | b);
        }
    }
    Ok(f)
}

/// `2^(n-1) + 2^(n-3) - 1`.
pub fn expected_arc_count(n: u32) -> usize {
    (1 << (n - 1)) + (1 << (n - 3)) - 1
}

/// `2^(n-1) - 2^(n-3) + 1`.
pub fn expected_zero_forcing_size(n: u32) -> usize {
    (1 << (n - 1)) - (1 << (n - 3)) + 1
}

/// `01 0^(n-3) 0` and `01 0^(n-3) 1`.
pub fn expected_isolated(n: u32) -> [usize; 2] {
    let base = 1 << (n - 2);
    [base, base | 1]
}

impl MinorityCube {
    pub fn chains(&self) -> ChainDecomposition {
        decompose(self.cube.graph(), &self.arcs).expect("F_n is a forest of dipaths")
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.arcs.isolated_vertices(self.cube.graph().order())
    }

    /// Chain-initial vertices of `F_n`.
    pub fn zero_forcing_set(&self) -> Vec<usize> {
        self.arcs.initial_vertices(self.cube.graph().order())
    }
}

pub fn zero_forcing_set(n: u32) -> Result<Vec<usize>> {
    Ok(build_recursive(n)?.zero_forcing_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::is_forcing_arc_set;
    use crate::forcing::is_zero_forcing_set;
    use crate::graph::BitVertex;

    fn id(s: &str) -> usize {
        BitVertex::parse(s).unwrap().id()
    }

    #[test]
    fn dimension_three() {
        let m = build_recursive(3).unwrap();
        assert_eq!(m.cube, CubeGraph::hypercube(3).unwrap());
        assert_eq!(m.arcs.len(), 4);
        assert_eq!(m.isolated_vertices(), vec![id("010"), id("011")]);
        assert_eq!(m.bridge_arc, None);
        let s = m.zero_forcing_set();
        assert_eq!(s, vec![id("000"), id("001"), id("010"), id("011")]);
    }

    #[test]
    fn dimension_four() {
        let m = build_recursive(4).unwrap();
        assert_eq!(
            m.top_twisted_edges,
            vec![(id("0100"), id("1011")), (id("0101"), id("1010"))]
        );
        assert_eq!(m.cube.twisted_edges(), m.top_twisted_edges);
        assert_eq!(m.bridge_arc, Some(ArcEdge::new(id("0110"), id("0111"))));
        assert_eq!(m.arcs.len(), 9);
        assert_eq!(m.isolated_vertices(), vec![id("0100"), id("0101")]);
        assert_eq!(m.cube.twin(id("0100")).unwrap(), id("1011"));
        assert_eq!(m.zero_forcing_set().len(), 7);
        assert!(is_forcing_arc_set(m.cube.graph(), &m.arcs).unwrap());
    }

    #[test]
    fn dimension_five() {
        let m = build_recursive(5).unwrap();
        assert_eq!(m.arcs.len(), 19);
        assert_eq!(m.isolated_vertices(), vec![id("01000"), id("01001")]);
        assert_eq!(m.cube.twisted_edges().len(), 6);
    }

    #[test]
    fn guards() {
        assert!(matches!(build_recursive(2), Err(Error::Domain(_))));
        assert!(matches!(build_recursive(13), Err(Error::Resource { .. })));
        assert!(build_closed_form(2).is_err());
    }

    #[test]
    fn closed_form_matches_recursion() {
        for n in 3..=12 {
            assert_eq!(
                build_closed_form(n).unwrap(),
                build_recursive(n).unwrap().arcs,
                "n = {n}"
            );
        }
        let n4: Vec<(usize, usize)> = build_closed_form(4)
            .unwrap()
            .iter()
            .filter(|a| VertexClass::of(a.tail, 4) == VertexClass::C01)
            .map(|a| (a.tail, a.head))
            .collect();
        assert_eq!(n4, vec![(id("0110"), id("0111"))]);
    }

    #[test]
    fn membership_queries_match_arc_set() {
        for n in 3..=9 {
            let m = build_recursive(n).unwrap();
            for v in 0..1usize << n {
                let out = out_neighbor(n, v);
                let inn = in_neighbor(n, v);
                assert_eq!(out.is_some_and(|h| m.arcs.contains(v, h)), out.is_some());
                assert_eq!(m.arcs.iter().any(|a| a.tail == v), has_out_arc(n, v));
                assert_eq!(m.arcs.iter().any(|a| a.head == v), has_in_arc(n, v));
                if let Some(t) = inn {
                    assert!(m.arcs.contains(t, v));
                }
            }
        }
        assert_eq!(VertexClass::of(id("1011"), 4), VertexClass::C10);
        assert!(!has_out_arc(4, id("1100")));
    }

    #[test]
    fn zero_forcing_sets_force() {
        for n in 3..=8 {
            let m = build_recursive(n).unwrap();
            let s = m.zero_forcing_set();
            assert_eq!(s.len(), expected_zero_forcing_size(n));
            assert!(is_zero_forcing_set(m.cube.graph(), &s).unwrap());
        }
        assert_eq!(zero_forcing_set(6).unwrap().len(), 25);
    }
}
