//! Torelli membership, rank and canonical decomposition of multitwists.
//!
//! A multitwist `D_{e_1}^{ε_1} ⋯ D_{e_n}^{ε_n}` on a reduction system acts
//! trivially on homology exactly when its exponents, read as a weighting of
//! the graph's edges, give every cycle total weight zero. In terms of the
//! edge classification that means every c-type exponent vanishes and every
//! b-class has exponent sum zero; a-type exponents are free.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::classes::{classify, EdgeClassification};
use crate::graph::{enumerate_cycles, EdgeId, GraphError, Multigraph, DEFAULT_CYCLE_GUARD};
use crate::label::Label;

/// A multitwist: one integer exponent per edge of the reduction system graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multitwist {
    graph: Multigraph,
    exponents: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TorelliError {
    #[error("expected {expected} exponents, got {got}")]
    ExponentCount { expected: usize, got: usize },
    #[error("not in the Torelli group: {0}")]
    NotTorelli(TorelliViolation),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigInt),
}

impl Multitwist {
    /// `exponents[i]` is the exponent of edge `EdgeId(i)`.
    pub fn new(graph: Multigraph, exponents: Vec<BigInt>) -> Result<Self, TorelliError> {
        if exponents.len() != graph.edge_count() {
            return Err(TorelliError::ExponentCount { expected: graph.edge_count(), got: exponents.len() });
        }
        Ok(Multitwist { graph, exponents })
    }

    pub fn from_i64(graph: Multigraph, exponents: &[i64]) -> Result<Self, TorelliError> {
        Self::new(graph, exponents.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn identity(graph: Multigraph) -> Self {
        let n = graph.edge_count();
        Multitwist { graph, exponents: vec![BigInt::zero(); n] }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    pub fn exponent(&self, e: EdgeId) -> &BigInt {
        &self.exponents[e.0]
    }

    /// Product of two multitwists on the same graph (exponents add).
    pub fn compose(&self, other: &Multitwist) -> Option<Multitwist> {
        (self.graph == other.graph).then(|| Multitwist {
            graph: self.graph.clone(),
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn inverse(&self) -> Multitwist {
        Multitwist { graph: self.graph.clone(), exponents: self.exponents.iter().map(|x| -x).collect() }
    }
}

/// The first failed membership condition, in the order c-edges by id, then
/// b-classes by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorelliViolation {
    CEdge { edge: EdgeId, label: Label, modulus: Option<BigInt> },
    BClassSum { class: usize, sum: BigInt, modulus: Option<BigInt> },
}

impl fmt::Display for TorelliViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorelliViolation::CEdge { label, modulus: None, .. } => {
                write!(f, "c-type edge {label} has nonzero exponent")
            }
            TorelliViolation::CEdge { label, modulus: Some(m), .. } => {
                write!(f, "c-type edge {label} has exponent not divisible by {m}")
            }
            TorelliViolation::BClassSum { class, sum, modulus: None } => {
                write!(f, "b-class {class} has nonzero exponent sum {sum}")
            }
            TorelliViolation::BClassSum { class, sum, modulus: Some(m) } => {
                write!(f, "b-class {class} has exponent sum {sum} not divisible by {m}")
            }
        }
    }
}

/// A canonical generator of the Torelli multitwist group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistFactor {
    /// `D_edge^exponent` about a separating (a-type) curve.
    SeparatingTwist { edge: EdgeId, exponent: BigInt },
    /// `(D_plus D_minus^{-1})^exponent` for a bounding pair inside one b-class.
    BpMap { plus: EdgeId, minus: EdgeId, exponent: BigInt },
}

fn first_violation(
    g: &Multigraph,
    w: &[BigInt],
    cls: &EdgeClassification,
    modulus: Option<&BigInt>,
) -> Option<TorelliViolation> {
    let vanishes = |x: &BigInt| match modulus {
        None => x.is_zero(),
        Some(m) => x.mod_floor(m).is_zero(),
    };
    for &c in cls.c_edges() {
        if !vanishes(&w[c.0]) {
            return Some(TorelliViolation::CEdge { edge: c, label: g.edge_label(c).clone(), modulus: modulus.cloned() });
        }
    }
    for (j, class) in cls.b_classes().iter().enumerate() {
        let sum: BigInt = class.iter().map(|e| &w[e.0]).sum();
        if !vanishes(&sum) {
            return Some(TorelliViolation::BClassSum { class: j, sum, modulus: modulus.cloned() });
        }
    }
    None
}

/// Whether the weighting `w` vanishes on every cycle, decided from the
/// classification: c-type weights are zero and each b-class sums to zero.
pub fn zero_on_all_cycles(g: &Multigraph, w: &[BigInt], cls: &EdgeClassification) -> bool {
    first_violation(g, w, cls, None).is_none()
}

/// Same question answered by summing `w` over every enumerated cycle.
pub fn zero_on_all_cycles_oracle(g: &Multigraph, w: &[BigInt]) -> Result<bool, GraphError> {
    let cycles = enumerate_cycles(g, DEFAULT_CYCLE_GUARD)?;
    Ok(cycles.iter().all(|c| c.canonical().iter().map(|e| &w[e.0]).sum::<BigInt>().is_zero()))
}

/// The violated membership condition, if any.
pub fn torelli_violation(m: &Multitwist) -> Option<TorelliViolation> {
    first_violation(&m.graph, &m.exponents, &classify(&m.graph), None)
}

pub fn is_torelli(m: &Multitwist) -> bool {
    torelli_violation(m).is_none()
}

/// `p + Σ (q_j - 1)`.
pub fn torelli_rank(cls: &EdgeClassification) -> usize {
    cls.p() + cls.b_classes().iter().map(|c| c.len() - 1).sum::<usize>()
}

/// Free basis of the Torelli multitwist group: a unit twist on each a-edge,
/// then for each b-class with representative `b_1` the BP maps
/// `D_{b_k} D_{b_1}^{-1}`, `k = 2..q`.
pub fn torelli_basis(g: &Multigraph, cls: &EdgeClassification) -> Vec<Multitwist> {
    let unit = |entries: &[(EdgeId, i64)]| {
        let mut ex = vec![BigInt::zero(); g.edge_count()];
        for &(e, x) in entries {
            ex[e.0] = BigInt::from(x);
        }
        Multitwist { graph: g.clone(), exponents: ex }
    };
    let mut out: Vec<Multitwist> = cls.a_edges().iter().map(|&a| unit(&[(a, 1)])).collect();
    for class in cls.b_classes() {
        for &b in &class[1..] {
            out.push(unit(&[(b, 1), (class[0], -1)]));
        }
    }
    out
}

/// Writes a Torelli multitwist as a product of separating twists and BP maps.
/// Identity factors are omitted.
pub fn decompose(m: &Multitwist) -> Result<Vec<TwistFactor>, TorelliError> {
    let cls = classify(&m.graph);
    if let Some(v) = first_violation(&m.graph, &m.exponents, &cls, None) {
        return Err(TorelliError::NotTorelli(v));
    }
    let mut out = Vec::new();
    for &a in cls.a_edges() {
        let x = &m.exponents[a.0];
        if !x.is_zero() {
            out.push(TwistFactor::SeparatingTwist { edge: a, exponent: x.clone() });
        }
    }
    // the representative's exponent is minus the sum of the others, so it is
    // absorbed by the BP maps
    for class in cls.b_classes() {
        let rep = class[0];
        for &b in &class[1..] {
            let x = &m.exponents[b.0];
            if !x.is_zero() {
                out.push(TwistFactor::BpMap { plus: b, minus: rep, exponent: x.clone() });
            }
        }
    }
    Ok(out)
}

/// Exponent vector of a product of factors.
pub fn recompose(g: &Multigraph, factors: &[TwistFactor]) -> Vec<BigInt> {
    let mut ex = vec![BigInt::zero(); g.edge_count()];
    for f in factors {
        match f {
            TwistFactor::SeparatingTwist { edge, exponent } => ex[edge.0] += exponent,
            TwistFactor::BpMap { plus, minus, exponent } => {
                ex[plus.0] += exponent;
                ex[minus.0] -= exponent;
            }
        }
    }
    ex
}

/// Membership in the level-`modulus` subgroup: the Torelli conditions taken
/// modulo `modulus`.
pub fn is_gamma_m(m: &Multitwist, modulus: &BigInt) -> Result<bool, TorelliError> {
    Ok(gamma_m_violation(m, modulus)?.is_none())
}

pub fn gamma_m_violation(m: &Multitwist, modulus: &BigInt) -> Result<Option<TorelliViolation>, TorelliError> {
    if *modulus < BigInt::from(2) {
        return Err(TorelliError::ModulusTooSmall(modulus.clone()));
    }
    Ok(first_violation(&m.graph, &m.exponents, &classify(&m.graph), Some(modulus)))
}

/// Whether every factor has the shape of a Torelli generator for `cls`.
pub fn factors_well_formed(cls: &EdgeClassification, factors: &[TwistFactor]) -> bool {
    use crate::classes::EdgeType;
    factors.iter().all(|f| match f {
        TwistFactor::SeparatingTwist { edge, .. } => cls.edge_type(*edge) == EdgeType::A,
        TwistFactor::BpMap { plus, minus, .. } => {
            plus != minus
                && matches!((cls.edge_type(*plus), cls.edge_type(*minus)), (EdgeType::B(i), EdgeType::B(j)) if i == j)
        }
    })
}

impl TwistFactor {
    pub fn exponent(&self) -> &BigInt {
        match self {
            TwistFactor::SeparatingTwist { exponent, .. } | TwistFactor::BpMap { exponent, .. } => exponent,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.exponent().is_zero()
    }
}
