//! Arc sets, their chain decomposition and chain twists.
//!
//! An arc set picks at most one orientation for some edges of a host graph.
//! When every vertex has at most one arc in and one arc out and the arcs
//! form no directed cycle, the arcs split the vertex set into chains, and
//! the chain starts are the initial blue set of the forcing process the
//! arcs describe.
//!
//! A chain twist is a cycle of the host in which no two consecutive steps
//! are non-arcs (an arc walked against its orientation is a non-arc). An arc
//! set is forcing exactly when it contains no chain twist. Two detectors are
//! provided: plain enumeration of simple cycles, and a search for a cycle in
//! the "must happen before" relation between arcs, which is polynomial.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result, StructureKind};
use crate::graph::Graph;

/// Largest host order for exhaustive cycle enumeration.
pub const EXHAUSTIVE_CYCLE_LIMIT: usize = 16;

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcEdge {
    pub tail: usize,
    pub head: usize,
}

impl ArcEdge {
    pub fn new(tail: usize, head: usize) -> Self {
        ArcEdge { tail, head }
    }
}

/// A set of arcs, ordered by `(tail, head)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ArcSet {
    arcs: BTreeSet<ArcEdge>,
}

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, tail: usize, head: usize) -> bool {
        self.arcs.insert(ArcEdge { tail, head })
    }

    pub fn contains(&self, tail: usize, head: usize) -> bool {
        self.arcs.contains(&ArcEdge { tail, head })
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArcEdge> + '_ {
        self.arcs.iter()
    }

    /// Vertices of `0..order` with no incoming arc.
    pub fn initial_vertices(&self, order: usize) -> Vec<usize> {
        let mut has_in = vec![false; order];
        for a in &self.arcs {
            if a.head < order {
                has_in[a.head] = true;
            }
        }
        (0..order).filter(|&v| !has_in[v]).collect()
    }

    /// Vertices touched by no arc.
    pub fn isolated_vertices(&self, order: usize) -> Vec<usize> {
        let mut touched = vec![false; order];
        for a in &self.arcs {
            for v in [a.tail, a.head] {
                if v < order {
                    touched[v] = true;
                }
            }
        }
        (0..order).filter(|&v| !touched[v]).collect()
    }
}

impl FromIterator<ArcEdge> for ArcSet {
    fn from_iter<I: IntoIterator<Item = ArcEdge>>(iter: I) -> Self {
        ArcSet {
            arcs: iter.into_iter().collect(),
        }
    }
}

impl Extend<ArcEdge> for ArcSet {
    fn extend<I: IntoIterator<Item = ArcEdge>>(&mut self, iter: I) {
        self.arcs.extend(iter);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    VertexOutOfRange,
    NotAnEdge,
    BothOrientations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub arc: ArcEdge,
    pub kind: ViolationKind,
}

/// Checks that every arc is an edge of `host` and that no edge carries both
/// orientations. A pair with both orientations is reported once, at the
/// orientation with the smaller tail.
pub fn validate(host: &Graph, f: &ArcSet) -> core::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    for &arc in f.iter() {
        let kind = if !host.contains(arc.tail) || !host.contains(arc.head) {
            Some(ViolationKind::VertexOutOfRange)
        } else if !host.has_edge(arc.tail, arc.head) {
            Some(ViolationKind::NotAnEdge)
        } else if arc.tail < arc.head && f.contains(arc.head, arc.tail) {
            Some(ViolationKind::BothOrientations)
        } else {
            None
        };
        if let Some(kind) = kind {
            out.push(Violation { arc, kind });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Per-vertex in and out neighbours of an arc set that forms vertex-disjoint
/// directed paths.
#[derive(Clone, Debug)]
pub(crate) struct Dipaths {
    pub out: Vec<Option<usize>>,
    pub inn: Vec<Option<usize>>,
}

pub(crate) fn dipaths(host: &Graph, f: &ArcSet) -> Result<Dipaths> {
    if let Err(violations) = validate(host, f) {
        let first = violations[0].arc;
        return Err(Error::Structure {
            vertex: first.tail,
            kind: StructureKind::NotAnArcSet,
        });
    }
    let n = host.order();
    let mut out = vec![None; n];
    let mut inn = vec![None; n];
    for a in f.iter() {
        if out[a.tail].replace(a.head).is_some() {
            return Err(Error::Structure {
                vertex: a.tail,
                kind: StructureKind::OutDegree,
            });
        }
        if inn[a.head].replace(a.tail).is_some() {
            return Err(Error::Structure {
                vertex: a.head,
                kind: StructureKind::InDegree,
            });
        }
    }
    // Paths start at vertices without an in-arc; anything left unvisited is on a cycle.
    let mut seen = vec![false; n];
    for s in (0..n).filter(|&v| inn[v].is_none()) {
        let mut v = Some(s);
        while let Some(x) = v {
            seen[x] = true;
            v = out[x];
        }
    }
    if let Some(v) = (0..n).find(|&v| !seen[v]) {
        return Err(Error::Structure {
            vertex: v,
            kind: StructureKind::DirectedCycle,
        });
    }
    Ok(Dipaths { out, inn })
}

/// The chains of an arc set, ordered by their initial vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// First vertex of every chain; the initial blue set.
    pub fn initial_vertices(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c[0]).collect()
    }

    /// `census[k]` is the number of chains with exactly `k` arcs.
    pub fn census(&self) -> Vec<usize> {
        let longest = self.chains.iter().map(Vec::len).max().unwrap_or(1);
        let mut census = vec![0; longest];
        for c in &self.chains {
            census[c.len() - 1] += 1;
        }
        census
    }
}

pub fn decompose(host: &Graph, f: &ArcSet) -> Result<ChainDecomposition> {
    let d = dipaths(host, f)?;
    let chains = (0..host.order())
        .filter(|&v| d.inn[v].is_none())
        .map(|s| {
            let mut chain = vec![s];
            while let Some(next) = d.out[*chain.last().unwrap()] {
                chain.push(next);
            }
            chain
        })
        .collect();
    Ok(ChainDecomposition { chains })
}

fn check_walk(host: &Graph, seq: &[usize], closed: bool) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &v in seq {
        host.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(Error::Domain(format!("vertex {v} repeats")));
        }
    }
    let k = seq.len();
    let steps = if closed { k } else { k.saturating_sub(1) };
    for i in 0..steps {
        let (u, v) = (seq[i], seq[(i + 1) % k]);
        if !host.has_edge(u, v) {
            return Err(Error::Domain(format!("{u}-{v} is not an edge")));
        }
    }
    Ok(())
}

/// Whether the closed sequence `cycle` is a chain twist: every step that is
/// not an arc is preceded and followed by an arc.
pub fn is_chain_twist(host: &Graph, f: &ArcSet, cycle: &[usize]) -> Result<bool> {
    if cycle.len() < 3 {
        return Err(Error::Domain(format!(
            "a cycle needs at least 3 vertices, got {}",
            cycle.len()
        )));
    }
    check_walk(host, cycle, true)?;
    Ok(twist_property(f, cycle))
}

fn twist_property(f: &ArcSet, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let arc = |i: usize| f.contains(cycle[i % k], cycle[(i + 1) % k]);
    (0..k).all(|i| arc(i) || (arc(i + k - 1) && arc(i + 1)))
}

/// Whether the simple path `path` is a chain twist path: no two
/// consecutive steps are non-arcs.
pub fn is_chain_twist_path(host: &Graph, f: &ArcSet, path: &[usize]) -> Result<bool> {
    if path.is_empty() {
        return Err(Error::Domain("empty path".into()));
    }
    check_walk(host, path, false)?;
    Ok(path_property(f, path))
}

fn path_property(f: &ArcSet, path: &[usize]) -> bool {
    let k = path.len();
    let arc = |i: usize| f.contains(path[i], path[i + 1]);
    // Interior positions 1..k-1: step i leaves path[i].
    (1..k.saturating_sub(1)).all(|i| arc(i) || (arc(i - 1) && (i + 2 >= k || arc(i + 1))))
}

/// Calls `visit` for every simple chain twist path that extends `prefix`
/// (including `prefix` itself when it qualifies), up to `max_len` vertices.
pub fn for_each_chain_twist_path<F>(
    host: &Graph,
    f: &ArcSet,
    prefix: &[usize],
    max_len: usize,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[usize]),
{
    if prefix.is_empty() {
        return Err(Error::Domain("empty path".into()));
    }
    check_walk(host, prefix, false)?;
    if !path_property(f, prefix) {
        return Ok(());
    }
    let mut on_path = vec![false; host.order()];
    for &v in prefix {
        on_path[v] = true;
    }
    let mut path = prefix.to_vec();
    extend_paths(host, f, &mut path, &mut on_path, max_len, &mut visit);
    Ok(())
}

fn extend_paths<F: FnMut(&[usize])>(
    host: &Graph,
    f: &ArcSet,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    max_len: usize,
    visit: &mut F,
) {
    visit(path);
    if path.len() >= max_len {
        return;
    }
    let last = *path.last().unwrap();
    for &w in host.neighbors(last) {
        if on_path[w] {
            continue;
        }
        // Appending w only adds the step last->w; it is a violation exactly
        // when it and the previous step are both non-arcs.
        let k = path.len();
        if k >= 2 && !f.contains(path[k - 2], last) && !f.contains(last, w) {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        extend_paths(host, f, path, on_path, max_len, visit);
        path.pop();
        on_path[w] = false;
    }
}

/// Which chain twist detector [`find_chain_twist`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Detector {
    /// Enumerate every simple cycle of the host and test it. Hosts of at most
    /// [`EXHAUSTIVE_CYCLE_LIMIT`] vertices.
    Exhaustive,
    /// Cycle search over the precedence relation between arcs. Any host size.
    Walk,
    /// `Exhaustive` when the host is small enough, `Walk` otherwise.
    Auto,
}

/// A chain twist of `f`, if one exists, rotated to start at its smallest
/// vertex.
pub fn find_chain_twist(
    host: &Graph,
    f: &ArcSet,
    detector: Detector,
) -> Result<Option<Vec<usize>>> {
    match detector {
        Detector::Exhaustive => exhaustive_twist(host, f),
        Detector::Walk => walk_twist(host, f),
        Detector::Auto if host.order() <= EXHAUSTIVE_CYCLE_LIMIT => exhaustive_twist(host, f),
        Detector::Auto => walk_twist(host, f),
    }
}

/// Calls `visit` on every simple cycle of length at least 3, once per
/// orientation, each starting at its smallest vertex. Stops early when
/// `visit` returns `false`.
pub fn for_each_cycle<F>(host: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> bool,
{
    if host.order() > EXHAUSTIVE_CYCLE_LIMIT {
        return Err(Error::Resource {
            what: "host order for cycle enumeration",
            limit: EXHAUSTIVE_CYCLE_LIMIT,
            got: host.order(),
        });
    }
    let mut on_path = vec![false; host.order()];
    let mut path = Vec::with_capacity(host.order());
    for start in 0..host.order() {
        path.push(start);
        on_path[start] = true;
        let go_on = cycles_from(host, start, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
        if !go_on {
            break;
        }
    }
    Ok(())
}

fn cycles_from<F: FnMut(&[usize]) -> bool>(
    host: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> bool {
    let last = *path.last().unwrap();
    for &w in host.neighbors(last) {
        if w == start && path.len() >= 3 {
            if !visit(path) {
                return false;
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            let go_on = cycles_from(host, start, path, on_path, visit);
            path.pop();
            on_path[w] = false;
            if !go_on {
                return false;
            }
        }
    }
    true
}

fn exhaustive_twist(host: &Graph, f: &ArcSet) -> Result<Option<Vec<usize>>> {
    let mut witness = None;
    for_each_cycle(host, |cycle| {
        if twist_property(f, cycle) {
            witness = Some(cycle.to_vec());
            false
        } else {
            true
        }
    })?;
    Ok(witness)
}

/// Arcs indexed `0..len` in set order, with the "enables" relation: arc `b`
/// enables arc `a = (u, v)` when `b` enters `u` or enters a neighbour of `u`
/// other than `v`. An arc can only be performed after every arc enabling it.
struct Precedence {
    arcs: Vec<ArcEdge>,
    enables: Vec<Vec<usize>>,
    indegree: Vec<usize>,
}

impl Precedence {
    fn new(host: &Graph, f: &ArcSet, d: &Dipaths) -> Self {
        let arcs: Vec<ArcEdge> = f.iter().copied().collect();
        let mut index_by_head = vec![usize::MAX; host.order()];
        for (i, a) in arcs.iter().enumerate() {
            index_by_head[a.head] = i;
        }
        let mut enables = vec![Vec::new(); arcs.len()];
        let mut indegree = vec![0; arcs.len()];
        for (i, a) in arcs.iter().enumerate() {
            let blockers = core::iter::once(a.tail).chain(
                host.neighbors(a.tail)
                    .iter()
                    .copied()
                    .filter(|&w| w != a.head),
            );
            for w in blockers {
                if d.inn[w].is_some() {
                    enables[index_by_head[w]].push(i);
                    indegree[i] += 1;
                }
            }
        }
        Precedence {
            arcs,
            enables,
            indegree,
        }
    }

    /// Arcs that lie on or behind a cycle of the relation (Kahn leftovers).
    fn stuck(&self) -> Vec<bool> {
        let mut indegree = self.indegree.clone();
        let mut queue: VecDeque<usize> =
            (0..self.arcs.len()).filter(|&i| indegree[i] == 0).collect();
        let mut stuck = vec![true; self.arcs.len()];
        while let Some(i) = queue.pop_front() {
            stuck[i] = false;
            for &j in &self.enables[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        stuck
    }

    /// A shortest cycle of the relation among `alive` arcs.
    fn shortest_cycle(&self, alive: &[bool]) -> Option<Vec<usize>> {
        let m = self.arcs.len();
        let mut best: Option<Vec<usize>> = None;
        let mut parent = vec![usize::MAX; m];
        for s in (0..m).filter(|&s| alive[s]) {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut dist = vec![usize::MAX; m];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(i) = queue.pop_front() {
                if best.as_ref().is_some_and(|b| dist[i] + 1 >= b.len()) {
                    break;
                }
                for &j in &self.enables[i] {
                    if !alive[j] {
                        continue;
                    }
                    if j == s {
                        let mut cyc = vec![i];
                        while *cyc.last().unwrap() != s {
                            cyc.push(parent[*cyc.last().unwrap()]);
                        }
                        cyc.reverse();
                        best = Some(cyc);
                        break 'bfs;
                    }
                    if dist[j] == usize::MAX {
                        dist[j] = dist[i] + 1;
                        parent[j] = i;
                        queue.push_back(j);
                    }
                }
            }
        }
        best
    }
}

fn walk_twist(host: &Graph, f: &ArcSet) -> Result<Option<Vec<usize>>> {
    let d = dipaths(host, f)?;
    let prec = Precedence::new(host, f, &d);
    let stuck = prec.stuck();
    if !stuck.iter().any(|&s| s) {
        return Ok(None);
    }
    let cyc = prec
        .shortest_cycle(&stuck)
        .expect("Kahn leftovers contain a cycle");
    // Lay the arcs out in enabling order; consecutive arcs either share a
    // vertex or are joined by a single non-arc edge.
    let mut seq: Vec<usize> = Vec::new();
    for &i in &cyc {
        let a = prec.arcs[i];
        if seq.last() != Some(&a.tail) {
            seq.push(a.tail);
        }
        seq.push(a.head);
    }
    if seq.first() == seq.last() {
        seq.pop();
    }
    let start = (0..seq.len()).min_by_key(|&i| seq[i]).unwrap();
    seq.rotate_left(start);
    debug_assert!(is_chain_twist(host, f, &seq).unwrap_or(false));
    Ok(Some(seq))
}

/// Outcome of executing an arc set greedily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    /// Arcs in the order they were performed.
    pub performed: Vec<ArcEdge>,
    /// Arcs that never became performable.
    pub blocked: Vec<ArcEdge>,
}

impl Execution {
    pub fn is_complete(&self) -> bool {
        self.blocked.is_empty()
    }
}

/// Starts with the chain-initial vertices blue and keeps performing any arc
/// `u -> v` whose tail is blue and has `v` as its only white neighbour,
/// smallest tail first.
///
/// Each vertex has at most one incoming arc, so an arc that becomes
/// performable stays performable until it is performed; the greedy order
/// therefore performs every arc that any order could.
pub fn execute(host: &Graph, f: &ArcSet) -> Result<Execution> {
    let d = dipaths(host, f)?;
    let n = host.order();
    let mut blue: Vec<bool> = d.inn.iter().map(Option::is_none).collect();
    let mut white_count: Vec<usize> = (0..n)
        .map(|v| host.neighbors(v).iter().filter(|&&w| !blue[w]).count())
        .collect();
    let ready_now = |v: usize, blue: &[bool], wc: &[usize]| {
        blue[v] && wc[v] == 1 && d.out[v].is_some_and(|h| !blue[h])
    };
    let mut ready: alloc::collections::BinaryHeap<core::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| ready_now(v, &blue, &white_count))
        .map(core::cmp::Reverse)
        .collect();
    let mut performed = Vec::with_capacity(f.len());
    while let Some(core::cmp::Reverse(u)) = ready.pop() {
        if !ready_now(u, &blue, &white_count) {
            continue;
        }
        let v = d.out[u].unwrap();
        blue[v] = true;
        performed.push(ArcEdge::new(u, v));
        for &w in host.neighbors(v) {
            white_count[w] -= 1;
            if ready_now(w, &blue, &white_count) {
                ready.push(core::cmp::Reverse(w));
            }
        }
        if ready_now(v, &blue, &white_count) {
            ready.push(core::cmp::Reverse(v));
        }
    }
    let done: BTreeSet<ArcEdge> = performed.iter().copied().collect();
    let blocked = f.iter().filter(|a| !done.contains(a)).copied().collect();
    Ok(Execution { performed, blocked })
}

/// Whether `f` records a complete forcing process.
pub fn is_forcing_arc_set(host: &Graph, f: &ArcSet) -> Result<bool> {
    execute(host, f).map(|e| e.is_complete())
}

/// Lifts a forcing arc set of `g` to `g □ h` by copying it into every
/// `g`-fibre. Vertex `(v, u)` has id `v * |V(h)| + u`, as in
/// [`crate::graph::cartesian_product`].
pub fn product_arcset(g: &Graph, f: &ArcSet, h: &Graph) -> Result<ArcSet> {
    if !is_forcing_arc_set(g, f)? {
        return Err(Error::Domain("arc set is not forcing".into()));
    }
    let m = h.order();
    Ok(f.iter()
        .flat_map(|a| (0..m).map(move |u| ArcEdge::new(a.tail * m + u, a.head * m + u)))
        .collect())
}
