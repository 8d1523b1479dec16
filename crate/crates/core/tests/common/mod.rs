//! Shared generators and brute-force oracles for the integration tests.
//!
//! The oracles here deliberately avoid the library's own algorithms: they
//! work from edge lists and plain union-find so that a bug in the crate
//! cannot be mirrored in its checker.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use torelli_core::classes::EdgeClassification;
use torelli_core::{EdgeId, Label, Multigraph};

/// A connected multigraph described by raw endpoints: a random tree plus
/// extra edges (loops and parallels allowed). Edge labels are permuted so
/// tree edges are not always the least identifiers.
#[derive(Clone, Debug)]
pub struct RawGraph {
    pub vertices: usize,
    pub ends: Vec<(usize, usize)>,
    pub label_order: Vec<usize>,
}

impl RawGraph {
    pub fn build(&self) -> Multigraph {
        Multigraph::new(
            (0..self.vertices).map(|i| Label::new(format!("v{i}"))),
            self.ends.iter().enumerate().map(|(i, &(u, v))| {
                (Label::new(format!("e{}", self.label_order[i])), Label::new(format!("v{u}")), Label::new(format!("v{v}")))
            }),
        )
        .expect("raw graphs are connected")
    }
}

pub fn raw_graph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = RawGraph> {
    (1..=max_vertices)
        .prop_flat_map(move |n| {
            let tree = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extra_max = max_edges.saturating_sub(n - 1);
            (Just(n), tree, prop::collection::vec((0..n, 0..n), 0..=extra_max))
        })
        .prop_flat_map(|(n, parents, extra)| {
            let mut ends: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            ends.extend(extra);
            let m = ends.len();
            (Just(n), Just(ends), Just((0..m).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(vertices, ends, label_order)| RawGraph { vertices, ends, label_order })
}

/// Same distribution as [`raw_graph`], drawn from an explicit RNG.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut ends: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    let extra = rng.gen_range(0..=max_edges - (n - 1));
    for _ in 0..extra {
        ends.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    let mut label_order: Vec<usize> = (0..ends.len()).collect();
    for i in (1..label_order.len()).rev() {
        let j = rng.gen_range(0..=i);
        label_order.swap(i, j);
    }
    RawGraph { vertices: n, ends, label_order }.build()
}

/// Number of components after deleting `removed`, by union-find.
pub fn components(g: &Multigraph, removed: &BTreeSet<EdgeId>) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut count = g.vertex_count();
    for e in g.edges().filter(|e| !removed.contains(e)) {
        let (u, v) = g.ends(e);
        let (a, b) = (find(&mut parent, u.0), find(&mut parent, v.0));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

pub fn bridges_by_removal(g: &Multigraph) -> BTreeSet<EdgeId> {
    g.edges().filter(|&e| components(g, &BTreeSet::from([e])) > 1).collect()
}

/// Edge sets of all embedded cycles: subsets in which every touched vertex has
/// degree exactly two (loops counting twice) and which are connected.
pub fn cycles_by_subsets(g: &Multigraph) -> BTreeSet<BTreeSet<EdgeId>> {
    let m = g.edge_count();
    assert!(m <= 20, "subset oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let set: BTreeSet<EdgeId> = (0..m).filter(|i| mask & (1 << i) != 0).map(EdgeId).collect();
        let mut degree = vec![0usize; g.vertex_count()];
        for &e in &set {
            let (u, v) = g.ends(e);
            degree[u.0] += 1;
            degree[v.0] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // connected as an edge set: union-find over touched vertices
        let touched: Vec<usize> = (0..g.vertex_count()).filter(|&v| degree[v] > 0).collect();
        let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            r
        }
        for &e in &set {
            let (u, v) = g.ends(e);
            let (a, b) = (find(&mut parent, u.0), find(&mut parent, v.0));
            parent[a] = b;
        }
        let roots: BTreeSet<usize> = touched.iter().map(|&v| find(&mut parent, v)).collect();
        if roots.len() == 1 {
            out.insert(set);
        }
    }
    out
}

/// Rank over the rationals by Euclidean row reduction on integer rows.
pub fn rank_by_gcd_rows(rows: &[Vec<BigInt>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        loop {
            // pick the row (from `rank` on) with the smallest nonzero entry in column c
            let pick = (rank..rows.len()).filter(|&r| !rows[r][c].is_zero()).min_by_key(|&r| rows[r][c].abs());
            let Some(p) = pick else { break };
            rows.swap(rank, p);
            let mut cleared = true;
            for r in rank + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_floor(&rows[rank][c]);
                let pivot = rows[rank].clone();
                for (x, p) in rows[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &q * p;
                }
                if !rows[r][c].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                rank += 1;
                break;
            }
        }
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// An exponent vector in `-bound..=bound`. With `force_torelli`, c-type entries
/// are zero and each b-class is resampled until its sum vanishes.
pub fn random_exponents<R: Rng>(rng: &mut R, cls: &EdgeClassification, edges: usize, bound: i64, force_torelli: bool) -> Vec<BigInt> {
    let mut ex: Vec<i64> = (0..edges).map(|_| rng.gen_range(-bound..=bound)).collect();
    if force_torelli {
        for &c in cls.c_edges() {
            ex[c.0] = 0;
        }
        for class in cls.b_classes() {
            loop {
                for &b in &class[1..] {
                    ex[b.0] = rng.gen_range(-bound..=bound);
                }
                let rest: i64 = class[1..].iter().map(|b| ex[b.0]).sum();
                if rest.abs() <= bound {
                    ex[class[0].0] = -rest;
                    break;
                }
            }
        }
    }
    ints(&ex)
}
