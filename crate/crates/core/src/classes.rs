//! Partition of the edges into a-type (cut edges), b-type classes (edges
//! pairwise forming 2-edge bonds) and c-type edges.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bridges, two_edge_bond_pairs_fast, EdgeId, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeType {
    A,
    /// Member of the b-class with this index.
    B(usize),
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    a_edges: BTreeSet<EdgeId>,
    b_classes: Vec<Vec<EdgeId>>,
    c_edges: BTreeSet<EdgeId>,
}

impl EdgeClassification {
    /// Assembles a classification from its parts without checking it; see
    /// [`verify_classification`]. Each b-class is sorted and the classes are
    /// ordered by representative.
    pub fn from_parts(a_edges: BTreeSet<EdgeId>, b_classes: Vec<Vec<EdgeId>>, c_edges: BTreeSet<EdgeId>) -> Self {
        let mut b_classes: Vec<Vec<EdgeId>> = b_classes
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        b_classes.sort();
        EdgeClassification { a_edges, b_classes, c_edges }
    }

    pub fn a_edges(&self) -> &BTreeSet<EdgeId> {
        &self.a_edges
    }

    /// b-classes ordered by representative, members in id order.
    pub fn b_classes(&self) -> &[Vec<EdgeId>] {
        &self.b_classes
    }

    pub fn c_edges(&self) -> &BTreeSet<EdgeId> {
        &self.c_edges
    }

    /// Least member of the `j`-th b-class.
    pub fn representative(&self, j: usize) -> EdgeId {
        self.b_classes[j][0]
    }

    pub fn p(&self) -> usize {
        self.a_edges.len()
    }

    pub fn r(&self) -> usize {
        self.b_classes.len()
    }

    pub fn q(&self, j: usize) -> usize {
        self.b_classes[j].len()
    }

    pub fn s(&self) -> usize {
        self.c_edges.len()
    }

    pub fn edge_type(&self, e: EdgeId) -> EdgeType {
        if self.a_edges.contains(&e) {
            return EdgeType::A;
        }
        match self.b_classes.iter().position(|c| c.contains(&e)) {
            Some(j) => EdgeType::B(j),
            None => EdgeType::C,
        }
    }

    /// Edge types indexed by edge id, for `edge_count` edges.
    pub fn types(&self, edge_count: usize) -> Vec<EdgeType> {
        let mut out = vec![EdgeType::C; edge_count];
        for &e in &self.a_edges {
            out[e.0] = EdgeType::A;
        }
        for (j, c) in self.b_classes.iter().enumerate() {
            for &e in c {
                out[e.0] = EdgeType::B(j);
            }
        }
        out
    }
}

/// The unique classification: bridges are a-type, connected components of
/// the 2-edge-bond relation with at least two members are b-classes, the
/// remaining edges are c-type.
pub fn classify(g: &Multigraph) -> EdgeClassification {
    let a_edges = bridges(g);
    let n = g.edge_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, f) in two_edge_bond_pairs_fast(g) {
        let (a, b) = (root(&mut parent, e.0), root(&mut parent, f.0));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for e in g.edges().filter(|e| !a_edges.contains(e)) {
        let r = root(&mut parent, e.0);
        groups[r].push(e);
    }
    let mut b_classes = Vec::new();
    let mut c_edges = BTreeSet::new();
    for grp in groups.into_iter().filter(|g| !g.is_empty()) {
        if grp.len() >= 2 {
            b_classes.push(grp);
        } else {
            c_edges.insert(grp[0]);
        }
    }
    EdgeClassification::from_parts(a_edges, b_classes, c_edges)
}

/// Re-derives every classification invariant with plain connectivity tests
/// and reports whether `cls` satisfies all of them.
pub fn verify_classification(g: &Multigraph, cls: &EdgeClassification) -> bool {
    let n = g.edge_count();
    let mut owner = vec![0u8; n];
    let all = cls.a_edges.iter().chain(cls.b_classes.iter().flatten()).chain(cls.c_edges.iter());
    for e in all {
        if e.0 >= n {
            return false;
        }
        owner[e.0] += 1;
    }
    if owner.iter().any(|&k| k != 1) || cls.b_classes.iter().any(|c| c.len() < 2) {
        return false;
    }

    let pieces = |removed: &[EdgeId]| pieces_after_removal(g, removed);
    let is_cut: Vec<bool> = g.edges().map(|e| pieces(&[e]) > 1).collect();
    let bonded = |e: EdgeId, f: EdgeId| e != f && !is_cut[e.0] && !is_cut[f.0] && pieces(&[e, f]) > 1;

    for e in g.edges() {
        if is_cut[e.0] != cls.a_edges.contains(&e) {
            return false;
        }
    }
    let class_of = |e: EdgeId| cls.b_classes.iter().position(|c| c.contains(&e));
    for class in &cls.b_classes {
        for (i, &e) in class.iter().enumerate() {
            if class[i + 1..].iter().any(|&f| !bonded(e, f)) {
                return false;
            }
        }
    }
    // no bond pair may straddle two classes or touch a c-edge
    for e in g.edges() {
        for f in g.edges().filter(|&f| f > e) {
            if bonded(e, f) && (class_of(e).is_none() || class_of(e) != class_of(f)) {
                return false;
            }
        }
    }
    true
}

/// Component count of `g` minus `removed`, by union-find over surviving edges.
fn pieces_after_removal(g: &Multigraph, removed: &[EdgeId]) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    let mut count = g.vertex_count();
    for e in g.edges().filter(|e| !removed.contains(e)) {
        let (u, v) = g.ends(e);
        let (a, b) = (root(&mut parent, u.0), root(&mut parent, v.0));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contract;

    fn set(ids: &[usize]) -> BTreeSet<EdgeId> {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    fn cycle_graph(n: usize) -> Multigraph {
        let vs: Vec<alloc::string::String> = (0..n).map(|i| alloc::format!("v{i}")).collect();
        let es: Vec<(alloc::string::String, alloc::string::String, alloc::string::String)> = (0..n)
            .map(|i| (alloc::format!("e{i}"), vs[i].clone(), vs[(i + 1) % n].clone()))
            .collect();
        Multigraph::new(
            vs.iter().map(|s| crate::Label::from(s.as_str())),
            es.into_iter().map(|(a, b, c)| (a.into(), b.into(), c.into())),
        )
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = Multigraph::from_labels(&["u", "v", "w"], &[("a1", "u", "v"), ("a2", "v", "w")]).unwrap();
        let cls = classify(&p);
        assert_eq!(cls.a_edges(), &set(&[0, 1]));
        assert!(cls.b_classes().is_empty());
        assert!(cls.c_edges().is_empty());

        let t = Multigraph::from_labels(&["x", "y", "z"], &[("b1", "x", "y"), ("b2", "x", "z"), ("b3", "y", "z")]).unwrap();
        let cls = classify(&t);
        assert!(cls.a_edges().is_empty());
        assert_eq!(cls.b_classes(), [alloc::vec![EdgeId(0), EdgeId(1), EdgeId(2)]]);
        assert!(cls.c_edges().is_empty());

        let th = Multigraph::from_labels(&["u", "v"], &[("c1", "u", "v"), ("c2", "u", "v"), ("c3", "u", "v")]).unwrap();
        let cls = classify(&th);
        assert_eq!((cls.p(), cls.r(), cls.s()), (0, 0, 3));
    }

    #[test]
    fn cycle_graphs_form_one_class() {
        for n in 2..=8 {
            let g = cycle_graph(n);
            let cls = classify(&g);
            assert_eq!(cls.r(), 1, "C{n}");
            assert_eq!(cls.q(0), n);
            assert!(verify_classification(&g, &cls));
        }
    }

    #[test]
    fn loops_are_c_type() {
        let g = Multigraph::from_labels(&["x", "y"], &[("l", "x", "x"), ("m", "x", "y"), ("n", "x", "y")]).unwrap();
        let cls = classify(&g);
        assert_eq!(cls.edge_type(EdgeId(0)), EdgeType::C);
        assert_eq!(cls.edge_type(EdgeId(1)), EdgeType::B(0));
    }

    #[test]
    fn single_vertex_without_edges() {
        let g = Multigraph::from_labels(&["x"], &[]).unwrap();
        let cls = classify(&g);
        assert_eq!((cls.p(), cls.r(), cls.s()), (0, 0, 0));
        assert!(verify_classification(&g, &cls));
    }

    #[test]
    fn verify_rejects_wrong_partitions() {
        let t = Multigraph::from_labels(&["x", "y", "z"], &[("b1", "x", "y"), ("b2", "x", "z"), ("b3", "y", "z")]).unwrap();
        assert!(verify_classification(&t, &classify(&t)));
        let wrong = EdgeClassification::from_parts(BTreeSet::new(), alloc::vec![alloc::vec![EdgeId(1), EdgeId(2)]], set(&[0]));
        assert!(!verify_classification(&t, &wrong));
        let overlapping = EdgeClassification::from_parts(set(&[0]), alloc::vec![alloc::vec![EdgeId(0), EdgeId(1), EdgeId(2)]], BTreeSet::new());
        assert!(!verify_classification(&t, &overlapping));
        let missing = EdgeClassification::from_parts(BTreeSet::new(), alloc::vec![alloc::vec![EdgeId(0), EdgeId(1)]], BTreeSet::new());
        assert!(!verify_classification(&t, &missing));
        let split = EdgeClassification::from_parts(BTreeSet::new(), alloc::vec![], set(&[0, 1, 2]));
        assert!(!verify_classification(&t, &split));
    }

    #[test]
    fn b_edge_becomes_c_after_contracting_its_class() {
        let t = cycle_graph(5);
        let cls = classify(&t);
        for &b in &cls.b_classes()[0] {
            let rest: BTreeSet<EdgeId> = cls.b_classes()[0].iter().copied().filter(|&e| e != b).collect();
            let c = contract(&t, &rest);
            let inner = classify(&c.graph);
            let new_b = c.edge_map.iter().position(|&e| e == b).unwrap();
            assert_eq!(inner.edge_type(EdgeId(new_b)), EdgeType::C);
        }
    }
}
