//! Finite connected multigraphs with loops and parallel edges.
//!
//! Vertices and edges are stored sorted by [`Label`], so [`VertexId`] and
//! [`EdgeId`] order agrees with identifier order and "least identifier" is
//! simply "least index".

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::classes::{EdgeClassification, EdgeType};
use crate::label::Label;

/// Edge-count guard for [`enumerate_cycles`].
pub const DEFAULT_CYCLE_GUARD: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v#{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("empty graph")]
    Empty,
    #[error("duplicate vertex identifier {0}")]
    DuplicateVertex(Label),
    #[error("duplicate edge identifier {0}")]
    DuplicateEdge(Label),
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: Label, vertex: Label },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {edges} edges, cycle enumeration is limited to {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("path endpoints coincide")]
    SameEndpoints,
    #[error("precondition violated: edge {0} is a bridge")]
    BridgePresent(Label),
    #[error("precondition violated: edge {0} is a loop")]
    LoopEdge(Label),
    #[error("precondition violated: edge {0} is not c-type")]
    NotCType(Label),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EdgeRecord {
    label: Label,
    ends: (VertexId, VertexId),
}

/// A finite connected multigraph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<Label>,
    edges: Vec<EdgeRecord>,
    // incident edges per vertex in id order; a loop is listed once
    incidence: Vec<Vec<EdgeId>>,
}

impl Multigraph {
    /// Builds a graph from vertex identifiers and `(edge, end, end)` triples.
    ///
    /// Rejects empty vertex sets, duplicate identifiers, edges naming unknown
    /// vertices and disconnected graphs.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<Label>,
        E: IntoIterator<Item = (Label, Label, Label)>,
    {
        let mut vertices: Vec<Label> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        vertices.sort();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0].clone()));
            }
        }
        let index: BTreeMap<&Label, usize> =
            vertices.iter().enumerate().map(|(i, l)| (l, i)).collect();

        let mut raw: Vec<(Label, Label, Label)> = edges.into_iter().collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        for w in raw.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GraphError::DuplicateEdge(w[0].0.clone()));
            }
        }
        let mut records = Vec::with_capacity(raw.len());
        for (label, u, v) in raw {
            let lookup = |x: &Label| {
                index
                    .get(x)
                    .map(|&i| VertexId(i))
                    .ok_or_else(|| GraphError::UnknownVertex { edge: label.clone(), vertex: x.clone() })
            };
            let ends = (lookup(&u)?, lookup(&v)?);
            records.push(EdgeRecord { label, ends });
        }

        let mut incidence = vec![Vec::new(); vertices.len()];
        for (i, r) in records.iter().enumerate() {
            incidence[r.ends.0 .0].push(EdgeId(i));
            if r.ends.1 != r.ends.0 {
                incidence[r.ends.1 .0].push(EdgeId(i));
            }
        }
        let g = Multigraph { vertices, edges: records, incidence };
        if !g.is_connected_without(&[]) {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Convenience constructor from string slices.
    pub fn from_labels(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, GraphError> {
        Self::new(
            vertices.iter().map(|v| Label::from(*v)),
            edges.iter().map(|(e, u, v)| (Label::from(*e), Label::from(*u), Label::from(*v))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn vertex_label(&self, v: VertexId) -> &Label {
        &self.vertices[v.0]
    }

    pub fn edge_label(&self, e: EdgeId) -> &Label {
        &self.edges[e.0].label
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|l| l.as_str() == label).map(VertexId)
    }

    pub fn edge_by_label(&self, label: &str) -> Option<EdgeId> {
        self.edges.iter().position(|r| r.label.as_str() == label).map(EdgeId)
    }

    /// Stored `(u, v)` orientation of an edge.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0].ends
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.ends(e);
        u == v
    }

    /// The end of `e` opposite to `v`; `v` itself for a loop.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.ends(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edges in id order. Loops appear once.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    /// Degree with each loop counting twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v.0].iter().map(|&e| if self.is_loop(e) { 2 } else { 1 }).sum()
    }

    /// Rank of the fundamental group, `|E| - |V| + 1`.
    pub fn cycle_rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    /// Component index of every vertex after deleting the edges whose mask
    /// entry is `true`, together with the number of components. A mask
    /// shorter than the edge list leaves the remaining edges in place.
    pub fn components_without(&self, removed: &[bool]) -> (usize, Vec<usize>) {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(VertexId(s));
            while let Some(x) = queue.pop_front() {
                for &e in self.incident(x) {
                    if removed.get(e.0).copied().unwrap_or(false) {
                        continue;
                    }
                    let y = self.other_end(e, x);
                    if comp[y.0] == usize::MAX {
                        comp[y.0] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        self.components_without(removed).0 == 1
    }

    /// Edge mask with `true` at every member of `set`.
    pub fn mask<'a>(&self, set: impl IntoIterator<Item = &'a EdgeId>) -> Vec<bool> {
        let mut m = vec![false; self.edges.len()];
        for e in set {
            m[e.0] = true;
        }
        m
    }
}

/// One traversal of an edge. `forward` means from the stored first end to the
/// stored second end; for a loop it fixes the direction around the loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Step {
    /// Vertex the step leaves from and arrives at.
    pub fn span(&self, g: &Multigraph) -> (VertexId, VertexId) {
        let (u, v) = g.ends(self.edge);
        if self.forward {
            (u, v)
        } else {
            (v, u)
        }
    }
}

/// A walk with distinct edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trail {
    start: VertexId,
    steps: Vec<Step>,
}

impl Trail {
    /// Checks adjacency and edge distinctness.
    pub fn new(g: &Multigraph, start: VertexId, steps: Vec<Step>) -> Option<Self> {
        let mut at = start;
        let mut seen = BTreeSet::new();
        for s in &steps {
            if s.edge.0 >= g.edge_count() || !seen.insert(s.edge) {
                return None;
            }
            let (from, to) = s.span(g);
            if from != at {
                return None;
            }
            at = to;
        }
        Some(Trail { start, steps })
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self, g: &Multigraph) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.span(g).1)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.steps.iter().map(|s| s.edge)
    }

    /// Visited vertices, `start` first and the end last.
    pub fn vertices(&self, g: &Multigraph) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start);
        out.extend(self.steps.iter().map(|s| s.span(g).1));
        out
    }

    /// No vertex repeats, except that a closed trail returns to its start.
    pub fn is_embedded(&self, g: &Multigraph) -> bool {
        let vs = self.vertices(g);
        let body = if vs.len() > 1 && vs[0] == vs[vs.len() - 1] { &vs[..vs.len() - 1] } else { &vs[..] };
        let distinct: BTreeSet<_> = body.iter().collect();
        distinct.len() == body.len()
    }
}

/// An embedded closed trail, compared by its canonical edge sequence.
#[derive(Clone, Debug)]
pub struct Cycle {
    trail: Trail,
    canonical: Vec<EdgeId>,
}

impl Cycle {
    /// Accepts closed, embedded trails of positive length.
    pub fn from_trail(g: &Multigraph, trail: Trail) -> Option<Self> {
        if trail.is_empty() || trail.end(g) != trail.start() || !trail.is_embedded(g) {
            return None;
        }
        let seq: Vec<EdgeId> = trail.edges().collect();
        Some(Cycle { canonical: canonical_form(&seq), trail })
    }

    pub fn trail(&self) -> &Trail {
        &self.trail
    }

    /// Least rotation or reflection of the edge sequence.
    pub fn canonical(&self) -> &[EdgeId] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.canonical.contains(&e)
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.canonical.iter().copied().collect()
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for Cycle {}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
pub fn canonical_form(seq: &[EdgeId]) -> Vec<EdgeId> {
    let n = seq.len();
    let mut best: Option<Vec<EdgeId>> = None;
    let reversed: Vec<EdgeId> = seq.iter().rev().copied().collect();
    for base in [seq, &reversed[..]] {
        for r in 0..n {
            let cand: Vec<EdgeId> = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Cut edges. Loops never qualify.
pub fn bridges(g: &Multigraph) -> BTreeSet<EdgeId> {
    bridges_without(g, &[])
}

/// Cut edges of `g` with the masked edges deleted, found by a lowpoint search
/// that skips the tree edge it arrived by rather than the parent vertex, so
/// parallel edges are handled.
pub(crate) fn bridges_without(g: &Multigraph, removed: &[bool]) -> BTreeSet<EdgeId> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = BTreeSet::new();
    let mut time = 0;
    let gone = |e: EdgeId| removed.get(e.0).copied().unwrap_or(false);

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // frames: (vertex, edge used to enter, next incidence position)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(VertexId(root), None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (x, via, ref mut pos)) = stack.last_mut() {
            if let Some(&e) = g.incident(x).get(*pos) {
                *pos += 1;
                if gone(e) || Some(e) == via || g.is_loop(e) {
                    continue;
                }
                let y = g.other_end(e, x);
                if disc[y.0] == usize::MAX {
                    disc[y.0] = time;
                    low[y.0] = time;
                    time += 1;
                    stack.push((y, Some(e), 0));
                } else {
                    low[x.0] = low[x.0].min(disc[y.0]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (via, stack.last()) {
                    low[p.0] = low[p.0].min(low[x.0]);
                    if low[x.0] > disc[p.0] {
                        out.insert(e);
                    }
                }
            }
        }
    }
    out
}

/// Whether `s` is a minimal disconnecting edge set.
pub fn is_bond(g: &Multigraph, s: &BTreeSet<EdgeId>) -> bool {
    bond_sides(g, s).is_some()
}

/// The two components left by deleting the bond `s`, or `None` when `s` is
/// not a bond.
///
/// `s` is a bond exactly when `g - s` has two components and every member
/// of `s` joins them: then restoring any one edge reconnects the graph.
pub fn bond_sides(g: &Multigraph, s: &BTreeSet<EdgeId>) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    if s.is_empty() {
        return None;
    }
    let (count, comp) = g.components_without(&g.mask(s));
    if count != 2 {
        return None;
    }
    for &e in s {
        let (u, v) = g.ends(e);
        if comp[u.0] == comp[v.0] {
            return None;
        }
    }
    let (a, b): (Vec<_>, Vec<_>) = g.vertices().partition(|v| comp[v.0] == 0);
    Some((a, b))
}

/// All unordered pairs `{e, f}` forming a bond, by scanning every pair.
pub fn two_edge_bond_pairs(g: &Multigraph) -> BTreeSet<(EdgeId, EdgeId)> {
    let mut out = BTreeSet::new();
    for i in 0..g.edge_count() {
        for j in i + 1..g.edge_count() {
            let s: BTreeSet<EdgeId> = [EdgeId(i), EdgeId(j)].into_iter().collect();
            if is_bond(g, &s) {
                out.insert((EdgeId(i), EdgeId(j)));
            }
        }
    }
    out
}

/// Same result as [`two_edge_bond_pairs`]: `{e, f}` is a bond exactly when
/// neither edge is a bridge of `g` and `f` is a bridge of `g - e`.
pub fn two_edge_bond_pairs_fast(g: &Multigraph) -> BTreeSet<(EdgeId, EdgeId)> {
    let cut = bridges(g);
    let mut out = BTreeSet::new();
    let mut removed = vec![false; g.edge_count()];
    for e in g.edges() {
        if cut.contains(&e) || g.is_loop(e) {
            continue;
        }
        removed[e.0] = true;
        for f in bridges_without(g, &removed) {
            if f > e && !cut.contains(&f) {
                out.insert((e, f));
            }
        }
        removed[e.0] = false;
    }
    out
}

/// Breadth-first spanning tree with fundamental cycles.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    in_tree: Vec<bool>,
    non_tree: Vec<EdgeId>,
    fundamental: Vec<Cycle>,
}

impl SpanningTree {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree[e.0]
    }

    pub fn tree_edges(&self) -> BTreeSet<EdgeId> {
        (0..self.in_tree.len()).filter(|&i| self.in_tree[i]).map(EdgeId).collect()
    }

    /// Non-tree edges in id order; position `j` is the index of the `j`-th
    /// fundamental cycle.
    pub fn non_tree_edges(&self) -> &[EdgeId] {
        &self.non_tree
    }

    /// Fundamental cycle of the `j`-th non-tree edge. Its trail begins by
    /// traversing that edge forward.
    pub fn fundamental_cycle(&self, j: usize) -> &Cycle {
        &self.fundamental[j]
    }

    pub fn fundamental_cycles(&self) -> &[Cycle] {
        &self.fundamental
    }

    /// Rank of the fundamental group of the graph.
    pub fn rank(&self) -> usize {
        self.non_tree.len()
    }
}

/// Deterministic spanning tree: breadth-first from the least vertex, scanning
/// incident edges in id order.
pub fn spanning_tree(g: &Multigraph) -> SpanningTree {
    let n = g.vertex_count();
    let mut parent: Vec<Option<(EdgeId, VertexId)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut in_tree = vec![false; g.edge_count()];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(VertexId(0));
    while let Some(x) = queue.pop_front() {
        for &e in g.incident(x) {
            let y = g.other_end(e, x);
            if !seen[y.0] {
                seen[y.0] = true;
                in_tree[e.0] = true;
                parent[y.0] = Some((e, x));
                depth[y.0] = depth[x.0] + 1;
                queue.push_back(y);
            }
        }
    }

    let step_from = |e: EdgeId, from: VertexId| Step { edge: e, forward: g.ends(e).0 == from };
    let mut non_tree = Vec::new();
    let mut fundamental = Vec::new();
    for f in g.edges().filter(|e| !in_tree[e.0]) {
        let (u, v) = g.ends(f);
        let mut steps = vec![Step { edge: f, forward: true }];
        // tree path v -> u: climb from v to the meeting point, then descend to u
        let (mut a, mut b) = (v, u);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if depth[a.0] >= depth[b.0] {
                let (e, p) = parent[a.0].expect("non-root has a parent");
                up.push(step_from(e, a));
                a = p;
            } else {
                let (e, p) = parent[b.0].expect("non-root has a parent");
                down.push(step_from(e, p));
                b = p;
            }
        }
        steps.extend(up);
        steps.extend(down.into_iter().rev());
        let trail = Trail::new(g, u, steps).expect("fundamental cycle is a trail");
        non_tree.push(f);
        fundamental.push(Cycle::from_trail(g, trail).expect("fundamental cycle is embedded"));
    }
    SpanningTree { in_tree, non_tree, fundamental }
}

/// Every embedded cycle exactly once, loops included.
pub fn enumerate_cycles(g: &Multigraph, max_edges: usize) -> Result<BTreeSet<Cycle>, GraphError> {
    if g.edge_count() > max_edges {
        return Err(GraphError::TooManyEdges { edges: g.edge_count(), limit: max_edges });
    }
    let mut out = BTreeSet::new();
    for e in g.edges().filter(|&e| g.is_loop(e)) {
        let t = Trail::new(g, g.ends(e).0, vec![Step { edge: e, forward: true }]).expect("loop trail");
        out.insert(Cycle::from_trail(g, t).expect("loop cycle"));
    }
    // each cycle is rooted at its least vertex; both orientations get found and
    // collapse in the set
    let mut on_path = vec![false; g.vertex_count()];
    let mut steps = Vec::new();
    for s in g.vertices() {
        on_path[s.0] = true;
        extend_cycles(g, s, s, &mut on_path, &mut steps, &mut out);
        on_path[s.0] = false;
    }
    Ok(out)
}

fn extend_cycles(
    g: &Multigraph,
    root: VertexId,
    at: VertexId,
    on_path: &mut [bool],
    steps: &mut Vec<Step>,
    out: &mut BTreeSet<Cycle>,
) {
    for &e in g.incident(at) {
        if g.is_loop(e) || steps.iter().any(|s| s.edge == e) {
            continue;
        }
        let next = g.other_end(e, at);
        let step = Step { edge: e, forward: g.ends(e).0 == at };
        if next == root {
            if !steps.is_empty() {
                steps.push(step);
                let t = Trail::new(g, root, steps.clone()).expect("closed trail");
                out.insert(Cycle::from_trail(g, t).expect("embedded cycle"));
                steps.pop();
            }
        } else if next > root && !on_path[next.0] {
            on_path[next.0] = true;
            steps.push(step);
            extend_cycles(g, root, next, on_path, steps, out);
            steps.pop();
            on_path[next.0] = false;
        }
    }
}

/// Result of contracting an edge set.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Multigraph,
    /// `edge_map[i]` is the edge of the original graph that became edge `i`.
    pub edge_map: Vec<EdgeId>,
}

/// Deletes every edge of `h` and identifies its ends. Merged vertices take the
/// least identifier of their class; edges keep their identifiers.
pub fn contract(g: &Multigraph, h: &BTreeSet<EdgeId>) -> Contraction {
    let n = g.vertex_count();
    let mut rep: Vec<usize> = (0..n).collect();
    fn find(rep: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while rep[r] != r {
            r = rep[r];
        }
        let mut y = x;
        while rep[y] != r {
            let nx = rep[y];
            rep[y] = r;
            y = nx;
        }
        r
    }
    for &e in h {
        let (u, v) = g.ends(e);
        let (a, b) = (find(&mut rep, u.0), find(&mut rep, v.0));
        // keep the smaller index as root so the class label is the least one
        if a < b {
            rep[b] = a;
        } else if b < a {
            rep[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut rep, x)).collect();
    let vertices: BTreeSet<usize> = roots.iter().copied().collect();
    let mut edge_map = Vec::new();
    let mut edges = Vec::new();
    for e in g.edges().filter(|e| !h.contains(e)) {
        let (u, v) = g.ends(e);
        edges.push((
            g.edge_label(e).clone(),
            g.vertex_label(VertexId(roots[u.0])).clone(),
            g.vertex_label(VertexId(roots[v.0])).clone(),
        ));
        edge_map.push(e);
    }
    let graph = Multigraph::new(vertices.iter().map(|&i| g.vertex_label(VertexId(i)).clone()), edges)
        .expect("contraction of a connected graph is connected");
    Contraction { graph, edge_map }
}

/// Two edge-disjoint `(u, v)`-paths in a bridgeless graph.
pub fn edge_disjoint_paths(g: &Multigraph, u: VertexId, v: VertexId) -> Result<(Trail, Trail), GraphError> {
    if u == v {
        return Err(GraphError::SameEndpoints);
    }
    if let Some(&b) = bridges(g).iter().next() {
        return Err(GraphError::BridgePresent(g.edge_label(b).clone()));
    }
    Ok(two_paths_avoiding(g, u, v, &[]).expect("bridgeless graphs are 2-edge-connected"))
}

/// Two edge-disjoint simple `(u, v)`-paths avoiding the masked edges, found as
/// a unit-capacity flow of value two.
fn two_paths_avoiding(g: &Multigraph, u: VertexId, v: VertexId, banned: &[bool]) -> Option<(Trail, Trail)> {
    let m = g.edge_count();
    let usable = |e: EdgeId| !g.is_loop(e) && !banned.get(e.0).copied().unwrap_or(false);
    // +1: flow along the stored orientation, -1: against it
    let mut flow = vec![0i8; m];
    for _ in 0..2 {
        let mut prev: Vec<Option<(EdgeId, VertexId)>> = vec![None; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        seen[u.0] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &e in g.incident(x) {
                if !usable(e) {
                    continue;
                }
                let dir = if g.ends(e).0 == x { 1 } else { -1 };
                let y = g.other_end(e, x);
                if flow[e.0] != dir && !seen[y.0] {
                    seen[y.0] = true;
                    prev[y.0] = Some((e, x));
                    queue.push_back(y);
                }
            }
        }
        if !seen[v.0] {
            return None;
        }
        let mut y = v;
        while let Some((e, x)) = prev[y.0] {
            let dir = if g.ends(e).0 == x { 1 } else { -1 };
            flow[e.0] += dir;
            y = x;
        }
    }

    let mut used = vec![false; m];
    let mut walk = || {
        let mut steps: Vec<Step> = Vec::new();
        let mut at = u;
        while at != v {
            let e = g.incident(at).iter().copied().find(|&e| {
                let leaves = (flow[e.0] == 1 && g.ends(e).0 == at) || (flow[e.0] == -1 && g.ends(e).1 == at);
                leaves && !used[e.0]
            })?;
            used[e.0] = true;
            steps.push(Step { edge: e, forward: flow[e.0] == 1 });
            at = g.other_end(e, at);
        }
        Some(shortcut(g, u, steps))
    };
    let first = walk()?;
    let second = walk()?;
    Some((first, second))
}

/// Removes closed sub-walks so that no vertex repeats.
fn shortcut(g: &Multigraph, start: VertexId, steps: Vec<Step>) -> Trail {
    let mut kept: Vec<Step> = Vec::new();
    let mut visited = vec![start];
    for s in steps {
        let to = s.span(g).1;
        if let Some(pos) = visited.iter().position(|&x| x == to) {
            kept.truncate(pos);
            visited.truncate(pos + 1);
        } else {
            kept.push(s);
            visited.push(to);
        }
    }
    Trail::new(g, start, kept).expect("shortcut walk is a trail")
}

/// Two cycles whose edge sets meet exactly in the c-type edge `c`.
pub fn two_cycles_through(
    g: &Multigraph,
    cls: &EdgeClassification,
    c: EdgeId,
) -> Result<(Cycle, Cycle), GraphError> {
    if g.is_loop(c) {
        return Err(GraphError::LoopEdge(g.edge_label(c).clone()));
    }
    match cls.edge_type(c) {
        EdgeType::C => {}
        EdgeType::A => return Err(GraphError::BridgePresent(g.edge_label(c).clone())),
        EdgeType::B(_) => return Err(GraphError::NotCType(g.edge_label(c).clone())),
    }
    let (x, y) = g.ends(c);
    let mut banned = vec![false; g.edge_count()];
    banned[c.0] = true;
    let (p, q) = two_paths_avoiding(g, y, x, &banned).ok_or_else(|| GraphError::NotCType(g.edge_label(c).clone()))?;
    let close = |path: Trail| {
        let mut steps = vec![Step { edge: c, forward: true }];
        steps.extend_from_slice(path.steps());
        let t = Trail::new(g, x, steps).expect("closed trail through c");
        Cycle::from_trail(g, t).expect("simple path plus c is embedded")
    };
    Ok((close(p), close(q)))
}
