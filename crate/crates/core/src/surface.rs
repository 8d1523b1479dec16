//! Reduction system graphs decorated with the genus of each complementary
//! component, plus the counting arguments that bound the Torelli rank.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classes::classify;
use crate::graph::{Multigraph, VertexId};
use crate::label::Label;
use crate::torelli::torelli_rank;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("expected {expected} genus values, got {got}")]
    GenusCount { expected: usize, got: usize },
    #[error("inconsistent Euler characteristic: 2g - 2 = {0}")]
    EulerCharacteristic(i128),
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u64),
}

/// `S` cut along the reduction system: the graph plus the genus of the
/// component behind each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    graph: Multigraph,
    genus_of: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A genus-0 component with one boundary curve: that curve bounds a disc.
    DiscComponent(Label),
    /// A genus-0 component with two boundary curves: they are isotopic.
    AnnulusComponent(Label),
    /// `genus(S) ≥ rank π₁(G) + #{vertices of degree ≤ 2}` fails.
    GenusInequality { genus: u64, bound: u64 },
    Euler(SurfaceError),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DiscComponent(v) => write!(f, "vertex {v} has genus 0 and degree 1"),
            Violation::AnnulusComponent(v) => write!(f, "vertex {v} has genus 0 and degree 2"),
            Violation::GenusInequality { genus, bound } => {
                write!(f, "genus {genus} is below rank plus low-degree vertex count {bound}")
            }
            Violation::Euler(e) => write!(f, "{e}"),
        }
    }
}

impl SurfaceModel {
    /// `genus_of[i]` is the genus of the component at `VertexId(i)`. The
    /// invariants are not checked here; see [`validate`].
    pub fn new(graph: Multigraph, genus_of: Vec<u64>) -> Result<Self, SurfaceError> {
        if genus_of.len() != graph.vertex_count() {
            return Err(SurfaceError::GenusCount { expected: graph.vertex_count(), got: genus_of.len() });
        }
        Ok(SurfaceModel { graph, genus_of })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn genus_of(&self, v: VertexId) -> u64 {
        self.genus_of[v.0]
    }

    pub fn genera(&self) -> &[u64] {
        &self.genus_of
    }

    pub fn total_vertex_genus(&self) -> u64 {
        self.genus_of.iter().sum()
    }

    /// Number of vertices with each `(degree, genus)` pair.
    pub fn census(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for v in self.graph.vertices() {
            *out.entry((self.graph.degree(v), self.genus_of[v.0])).or_insert(0) += 1;
        }
        out
    }

    fn is_exempt(&self) -> bool {
        self.graph.vertex_count() == 1 && self.graph.edge_count() <= 1
    }
}

/// Genus of the closed surface from `2g - 2 = Σ_v (2γ_v + b_v - 2)`.
pub fn genus(s: &SurfaceModel) -> Result<u64, SurfaceError> {
    let twice: i128 = s
        .graph
        .vertices()
        .map(|v| 2 * s.genus_of[v.0] as i128 + s.graph.degree(v) as i128 - 2)
        .sum();
    if twice % 2 != 0 || twice < -2 {
        return Err(SurfaceError::EulerCharacteristic(twice));
    }
    Ok(((twice + 2) / 2) as u64)
}

/// Every violated invariant; empty for a valid model.
pub fn validate(s: &SurfaceModel) -> Vec<Violation> {
    let g = &s.graph;
    let mut out = Vec::new();
    for v in g.vertices() {
        match (s.genus_of[v.0], g.degree(v)) {
            (0, 1) => out.push(Violation::DiscComponent(g.vertex_label(v).clone())),
            (0, 2) => out.push(Violation::AnnulusComponent(g.vertex_label(v).clone())),
            _ => {}
        }
    }
    match genus(s) {
        Err(e) => out.push(Violation::Euler(e)),
        Ok(genus) if !s.is_exempt() => {
            let low = g.vertices().filter(|&v| g.degree(v) <= 2).count();
            let bound = (g.cycle_rank() + low) as u64;
            if genus < bound {
                out.push(Violation::GenusInequality { genus, bound });
            }
        }
        Ok(_) => {}
    }
    out
}

pub fn is_valid(s: &SurfaceModel) -> bool {
    validate(s).is_empty()
}

/// Components that are neither pairs of pants nor one-holed tori.
pub fn omega(s: &SurfaceModel) -> usize {
    s.graph
        .vertices()
        .filter(|&v| !matches!((s.genus_of[v.0], s.graph.degree(v)), (0, 3) | (1, 1)))
        .count()
}

/// The quantities entering the two rank bounds, with their slack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub rank: usize,
    pub vertices: usize,
    pub omega: usize,
    pub genus: u64,
    /// `(ν - 1) - rank`; the bound holds when this is nonnegative.
    pub vertex_slack: i64,
    /// `(2g - 3) - (rank + Ω)`; `None` when `g < 2`.
    pub omega_slack: Option<i64>,
}

impl BoundsReport {
    pub fn vertex_bound_holds(&self) -> bool {
        self.vertex_slack >= 0
    }

    /// `true` when the clause is skipped for `g < 2`.
    pub fn omega_bound_holds(&self) -> bool {
        self.omega_slack.is_none_or(|s| s >= 0)
    }

    pub fn holds(&self) -> bool {
        self.vertex_bound_holds() && self.omega_bound_holds()
    }
}

/// Evaluates `rank ≤ ν - 1` and, for `g ≥ 2`, `rank + Ω ≤ 2g - 3`.
pub fn check_bounds(s: &SurfaceModel) -> Result<BoundsReport, SurfaceError> {
    let genus = genus(s)?;
    let rank = torelli_rank(&classify(&s.graph));
    let vertices = s.graph.vertex_count();
    let omega = omega(s);
    let vertex_slack = vertices as i64 - 1 - rank as i64;
    let omega_slack = (genus >= 2).then(|| 2 * genus as i64 - 3 - (rank + omega) as i64);
    Ok(BoundsReport { rank, vertices, omega, genus, vertex_slack, omega_slack })
}

/// A caterpillar tree realising rank `2g - 3`: `g - 2` pants in a path with
/// `g` one-holed tori hanging off so that every internal vertex is
/// trivalent. For `g = 2` two one-holed tori share one edge.
pub fn gen_extremal(g: u64) -> Result<SurfaceModel, SurfaceError> {
    if g < 2 {
        return Err(SurfaceError::GenusTooSmall(g));
    }
    let g = g as usize;
    let mut vertices: Vec<(String, u64)> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let edge = |u: &str, v: &str, edges: &mut Vec<(String, String, String)>| {
        let name = format!("a{}", edges.len() + 1);
        edges.push((name, String::from(u), String::from(v)));
    };
    if g == 2 {
        vertices.push((String::from("t1"), 1));
        vertices.push((String::from("t2"), 1));
        edge("t1", "t2", &mut edges);
    } else {
        let spine = g - 2;
        for i in 1..=spine {
            vertices.push((format!("p{i}"), 0));
        }
        for i in 1..spine {
            edge(&format!("p{i}"), &format!("p{}", i + 1), &mut edges);
        }
        let mut leaf = 0;
        for i in 1..=spine {
            let wanted = 3 - (i > 1) as usize - (i < spine) as usize;
            for _ in 0..wanted {
                leaf += 1;
                let t = format!("t{leaf}");
                vertices.push((t.clone(), 1));
                edge(&format!("p{i}"), &t, &mut edges);
            }
        }
    }
    build(vertices, edges)
}

/// A random valid model of genus `g`, determined by `seed`.
///
/// Draws a random tree on at most `2g - 2` vertices, adds up to `g` extra
/// edges (loops and parallels allowed), gives genus 1 to every vertex of
/// degree at most 2 and spreads the remaining genus at random. Draws whose
/// forced genus already exceeds `g` are discarded.
pub fn gen_random(g: u64, seed: u64) -> Result<SurfaceModel, SurfaceError> {
    if g < 2 {
        return Err(SurfaceError::GenusTooSmall(g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_vertices = (2 * g - 2) as usize;
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let mut ends: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
        for _ in 0..rng.gen_range(0..=g) {
            ends.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in &ends {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut genus_of: Vec<u64> = degree.iter().map(|&d| (d <= 2) as u64).collect();
        if n == 1 && ends.is_empty() {
            genus_of[0] = 0;
        }
        let forced = (ends.len() + 1 - n) as u64 + genus_of.iter().sum::<u64>();
        if forced > g {
            continue;
        }
        for _ in 0..g - forced {
            genus_of[rng.gen_range(0..n)] += 1;
        }
        let vertices = (0..n).map(|i| (format!("v{i}"), genus_of[i])).collect();
        let edges = ends.iter().enumerate().map(|(i, &(u, v))| (format!("e{i}"), format!("v{u}"), format!("v{v}"))).collect();
        return build(vertices, edges);
    }
}

fn build(vertices: Vec<(String, u64)>, edges: Vec<(String, String, String)>) -> Result<SurfaceModel, SurfaceError> {
    let graph = Multigraph::new(
        vertices.iter().map(|(v, _)| Label::from(v.as_str())),
        edges.into_iter().map(|(e, u, v)| (e.into(), u.into(), v.into())),
    )
    .expect("generated graphs are connected with unique labels");
    let mut genus_of = vec![0; vertices.len()];
    for (name, genus) in &vertices {
        genus_of[graph.vertex_by_label(name).expect("vertex present").0] = *genus;
    }
    SurfaceModel::new(graph, genus_of)
}
