//! Simple undirected graphs, bit-string labelled cubes and the twisted
//! hypercube constructors.
//!
//! A vertex of an `n`-dimensional cube is a bit string of length `n`. Its id
//! is the string read as a binary numeral with the leftmost character most
//! significant, so the bit appended when two copies are joined is the least
//! significant bit of the id.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest dimension any cube constructor accepts.
pub const MAX_DIMENSION: u32 = 20;
/// Largest dimension for algorithms that are quadratic or worse in the order.
pub const MAX_DENSE_DIMENSION: u32 = 16;

/// A simple undirected graph on the vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// Graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            size: 0,
        }
    }

    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.size += 1;
        }
        for (u, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Domain(format!("repeated edge {u}-{}", w[0])));
            }
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Self {
        Self::from_edges(order, (1..order).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        Self::from_edges(order, (0..order).map(|v| (v, (v + 1) % order))).expect("cycle is simple")
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
        Self::from_edges(order, edges).expect("complete graph is simple")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.order()
    }
}

/// `G □ H`. Vertex `(u, x)` gets id `u * |V(H)| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let pairs_g = g
        .edges()
        .flat_map(|(u, v)| (0..m).map(move |x| (u * m + x, v * m + x)));
    let pairs_h = (0..g.order()).flat_map(|u| h.edges().map(move |(x, y)| (u * m + x, u * m + y)));
    Graph::from_edges(g.order() * m, pairs_g.chain(pairs_h))
        .expect("product of simple graphs is simple")
}

/// A bit string of length `len` together with its integer id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BitVertex {
    id: u32,
    len: u32,
}

impl BitVertex {
    pub fn new(id: usize, len: u32) -> Result<Self> {
        if len > MAX_DIMENSION {
            return Err(Error::Resource {
                what: "dimension",
                limit: MAX_DIMENSION as usize,
                got: len as usize,
            });
        }
        if id >> len != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: id,
                order: 1 << len,
            });
        }
        Ok(BitVertex { id: id as u32, len })
    }

    /// Parses a string of `0` and `1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let len = s.len() as u32;
        if len > MAX_DIMENSION {
            return Err(Error::Resource {
                what: "dimension",
                limit: MAX_DIMENSION as usize,
                got: len as usize,
            });
        }
        let mut id = 0u32;
        for c in s.chars() {
            id = match c {
                '0' => id << 1,
                '1' => (id << 1) | 1,
                _ => return Err(Error::Domain(format!("{s:?} is not a bit string"))),
            };
        }
        Ok(BitVertex { id, len })
    }

    pub fn id(self) -> usize {
        self.id as usize
    }

    pub fn len(self) -> u32 {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Character at `pos`, counted from the left starting at 0.
    pub fn bit(self, pos: u32) -> bool {
        assert!(pos < self.len);
        (self.id >> (self.len - 1 - pos)) & 1 == 1
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 0..self.len {
            f.write_str(if self.bit(pos) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Bit string of `id` with `len` characters.
pub fn bit_label(id: usize, len: u32) -> String {
    (0..len)
        .map(|pos| {
            if (id >> (len - 1 - pos)) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Recursive recipe for a twisted hypercube.
///
/// A node of dimension `m` joins two children of dimension `m - 1`: the
/// left child's strings get `0` appended, the right child's get `1`, and
/// `matching[a]` is the right-child string joined to `a0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TwistSpec {
    Leaf,
    Node {
        left: Box<TwistSpec>,
        right: Box<TwistSpec>,
        matching: Vec<usize>,
    },
}

impl TwistSpec {
    /// The standard matching at every level, i.e. `Q_n`.
    pub fn identity(n: u32) -> Self {
        let levels = (1..=n).map(|m| (0..1usize << (m - 1)).collect()).collect();
        Self::uniform(levels)
    }

    /// Both children are equal at every level; `levels[m - 1]` is the
    /// matching used to build dimension `m`.
    pub fn uniform(levels: Vec<Vec<usize>>) -> Self {
        levels
            .into_iter()
            .fold(TwistSpec::Leaf, |child, matching| TwistSpec::Node {
                left: Box::new(child.clone()),
                right: Box::new(child),
                matching,
            })
    }

    pub fn dimension(&self) -> u32 {
        match self {
            TwistSpec::Leaf => 0,
            TwistSpec::Node { left, .. } => 1 + left.dimension(),
        }
    }

    /// Checks child dimensions agree and every matching is a bijection.
    pub fn validate(&self) -> Result<u32> {
        match self {
            TwistSpec::Leaf => Ok(0),
            TwistSpec::Node {
                left,
                right,
                matching,
            } => {
                let dl = left.validate()?;
                let dr = right.validate()?;
                if dl != dr {
                    return Err(Error::InvalidSpec(format!(
                        "children have dimensions {dl} and {dr}"
                    )));
                }
                if dl >= MAX_DIMENSION {
                    return Err(Error::Resource {
                        what: "dimension",
                        limit: MAX_DIMENSION as usize,
                        got: dl as usize + 1,
                    });
                }
                let half = 1usize << dl;
                if matching.len() != half {
                    return Err(Error::InvalidSpec(format!(
                        "dimension {} matching has {} entries, expected {half}",
                        dl + 1,
                        matching.len()
                    )));
                }
                let mut hit = vec![false; half];
                for (a, &b) in matching.iter().enumerate() {
                    if b >= half || hit[b] {
                        return Err(Error::InvalidSpec(format!(
                            "dimension {} matching is not a bijection at {}",
                            dl + 1,
                            bit_label(a, dl)
                        )));
                    }
                    hit[b] = true;
                }
                Ok(dl + 1)
            }
        }
    }
}

/// A graph whose vertices are all bit strings of one length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeGraph {
    dimension: u32,
    graph: Graph,
}

fn check_dimension(n: u32) -> Result<()> {
    if n > MAX_DIMENSION {
        return Err(Error::Resource {
            what: "dimension",
            limit: MAX_DIMENSION as usize,
            got: n as usize,
        });
    }
    Ok(())
}

impl CubeGraph {
    /// Wraps `graph` as a cube of the given dimension; only the order is checked.
    pub fn from_graph(dimension: u32, graph: Graph) -> Result<Self> {
        check_dimension(dimension)?;
        if graph.order() != 1 << dimension {
            return Err(Error::Domain(format!(
                "a {dimension}-dimensional cube has {} vertices, got {}",
                1usize << dimension,
                graph.order()
            )));
        }
        Ok(CubeGraph { dimension, graph })
    }

    /// `Q_n`: strings are adjacent when they differ in exactly one position.
    pub fn hypercube(n: u32) -> Result<Self> {
        check_dimension(n)?;
        let order = 1usize << n;
        let edges = (0..order).flat_map(|u| {
            (0..n)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        });
        Self::from_graph(n, Graph::from_edges(order, edges)?)
    }

    pub fn twisted(spec: &TwistSpec) -> Result<Self> {
        let n = spec.validate()?;
        let mut edges = Vec::with_capacity((n as usize) << n.saturating_sub(1));
        collect_edges(spec, n, n, 0, &mut edges);
        Self::from_graph(n, Graph::from_edges(1 << n, edges)?)
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn vertex(&self, id: usize) -> Result<BitVertex> {
        BitVertex::new(id, self.dimension)
    }

    pub fn label(&self, id: usize) -> String {
        bit_label(id, self.dimension)
    }

    /// The neighbour of `v` that differs from it in the final bit.
    pub fn twin(&self, v: usize) -> Result<usize> {
        self.graph.check_vertex(v)?;
        let mut found = None;
        for &u in self.graph.neighbors(v) {
            if (u ^ v) & 1 == 1 {
                if found.is_some() {
                    return Err(Error::Domain(format!(
                        "{} has more than one neighbour across the final bit",
                        self.label(v)
                    )));
                }
                found = Some(u);
            }
        }
        found.ok_or_else(|| {
            Error::Domain(format!(
                "{} has no neighbour across the final bit",
                self.label(v)
            ))
        })
    }

    /// Edges whose endpoints differ in more than one position.
    pub fn twisted_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .filter(|&(u, v)| (u ^ v).count_ones() > 1)
            .collect()
    }

    /// Product with concatenated labels: `(u, x)` becomes the string `u x`.
    pub fn cartesian_product(&self, other: &CubeGraph) -> Result<CubeGraph> {
        check_dimension(self.dimension + other.dimension)?;
        Self::from_graph(
            self.dimension + other.dimension,
            cartesian_product(&self.graph, &other.graph),
        )
    }

    /// Recovers the recipe if this graph is a twisted hypercube under its
    /// labelling: at every level each vertex has exactly one neighbour that
    /// agrees with it on the lower bits and differs at that level's bit.
    pub fn recover_spec(&self) -> Result<TwistSpec> {
        let n = self.dimension;
        if !self.graph.is_regular(n as usize) {
            return Err(Error::Domain(format!("graph is not {n}-regular")));
        }
        // level_partner[x][m-1]: neighbour joined to x by the dimension-m matching.
        let mut partner = vec![usize::MAX; (n as usize) << n];
        for x in 0..self.graph.order() {
            for &y in self.graph.neighbors(x) {
                let j = (x ^ y).trailing_zeros();
                let m = (n - j) as usize;
                let slot = &mut partner[x * n as usize + m - 1];
                if *slot != usize::MAX {
                    return Err(Error::Domain(format!(
                        "{} has two dimension-{m} matching edges",
                        self.label(x)
                    )));
                }
                *slot = y;
            }
        }
        Ok(rebuild(&partner, n, n, 0))
    }
}

fn collect_edges(spec: &TwistSpec, n: u32, m: u32, suffix: usize, out: &mut Vec<(usize, usize)>) {
    if let TwistSpec::Node {
        left,
        right,
        matching,
    } = spec
    {
        let shift = n - m;
        collect_edges(left, n, m - 1, suffix, out);
        collect_edges(right, n, m - 1, (1 << shift) | suffix, out);
        for (a, &b) in matching.iter().enumerate() {
            let u = ((a << 1) << shift) | suffix;
            let v = (((b << 1) | 1) << shift) | suffix;
            out.push((u, v));
        }
    }
}

fn rebuild(partner: &[usize], n: u32, m: u32, suffix: usize) -> TwistSpec {
    if m == 0 {
        return TwistSpec::Leaf;
    }
    let shift = n - m;
    let matching = (0..1usize << (m - 1))
        .map(|a| {
            let x = ((a << 1) << shift) | suffix;
            partner[x * n as usize + m as usize - 1] >> (shift + 1)
        })
        .collect();
    TwistSpec::Node {
        left: Box::new(rebuild(partner, n, m - 1, suffix)),
        right: Box::new(rebuild(partner, n, m - 1, (1 << shift) | suffix)),
        matching,
    }
}
