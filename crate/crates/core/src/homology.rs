//! Integer symplectic model of `H_1(S)` and the action of multitwists on it.
//!
//! With a spanning tree of the reduction system graph fixed, the `j`-th
//! non-tree edge `f_j` is given the class `x_j`, and a dual curve running once
//! around its fundamental cycle is given `y_j`. Any other edge gets the signed
//! sum of the `x_j` whose fundamental cycle it lies on; bridges get zero. The
//! genus of each complementary component contributes hyperbolic pairs that
//! pair trivially with every curve class. A Dehn twist then acts by the
//! transvection `w ↦ w + ⟨[e], w⟩ [e]`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::classes::{classify, EdgeClassification, EdgeType};
use crate::graph::{spanning_tree, EdgeId, Multigraph};
use crate::matrix::IntMatrix;
use crate::surface::SurfaceModel;
use crate::torelli::Multitwist;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("multitwist graph differs from the model graph")]
    GraphMismatch,
    #[error("curve classes in b-class {class} differ by more than a sign")]
    UnequalBClass { class: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransvectionError {
    #[error("vector {index} has length {len}, lattice rank is {rank}")]
    Dimension { index: usize, len: usize, rank: usize },
    #[error("vector {index} is zero")]
    Zero { index: usize },
    #[error("vector {index} is not primitive")]
    NotPrimitive { index: usize },
    #[error("vectors {0} and {1} are not symplectically orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("vectors {0} and {1} are linearly dependent")]
    Dependent(usize, usize),
}

/// `Z^{2g}` with an alternating unimodular form given by `g` hyperbolic pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticLattice {
    dim: usize,
    // (x, y) coordinate indices with ⟨x, y⟩ = 1
    pairs: Vec<(usize, usize)>,
}

impl SymplecticLattice {
    /// Basis `a_1, b_1, …, a_g, b_g` with `⟨a_i, b_i⟩ = 1`.
    pub fn standard(g: usize) -> Self {
        SymplecticLattice { dim: 2 * g, pairs: (0..g).map(|i| (2 * i, 2 * i + 1)).collect() }
    }

    /// Basis `x_1..x_k, y_1..y_k` followed by `handles` interleaved pairs.
    pub fn graph_layout(k: usize, handles: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
        pairs.extend((0..handles).map(|h| (2 * k + 2 * h, 2 * k + 2 * h + 1)));
        SymplecticLattice { dim: 2 * (k + handles), pairs }
    }

    pub fn rank(&self) -> usize {
        self.dim
    }

    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn hyperbolic_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Gram matrix `J`, so that `⟨u, w⟩ = uᵀ J w`.
    pub fn form(&self) -> IntMatrix {
        let mut j = IntMatrix::zeros(self.dim, self.dim);
        for &(x, y) in &self.pairs {
            j.set(x, y, BigInt::one());
            j.set(y, x, -BigInt::one());
        }
        j
    }

    pub fn pair(&self, u: &[BigInt], w: &[BigInt]) -> BigInt {
        self.pairs.iter().map(|&(x, y)| &u[x] * &w[y] - &u[y] * &w[x]).sum()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim];
        v[i] = BigInt::one();
        v
    }

    /// `Mᵀ J M = J`.
    pub fn preserves_form(&self, m: &IntMatrix) -> bool {
        let j = self.form();
        &(&m.transpose() * &j) * m == j
    }
}

/// The power `T_v^m` of the transvection `w ↦ w + ⟨v, w⟩ v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub vector: Vec<BigInt>,
    pub exponent: BigInt,
}

impl Transvection {
    pub fn new(vector: Vec<BigInt>, exponent: BigInt) -> Self {
        Transvection { vector, exponent }
    }

    pub fn from_i64(vector: &[i64], exponent: i64) -> Self {
        Transvection { vector: vector.iter().map(|&x| BigInt::from(x)).collect(), exponent: BigInt::from(exponent) }
    }

    /// `I + m v vᵀ J`; exact because `⟨v, v⟩ = 0` makes `v vᵀ J` square to zero.
    pub fn matrix(&self, lattice: &SymplecticLattice) -> IntMatrix {
        let n = lattice.rank();
        let step = &IntMatrix::outer(&self.vector, &self.vector) * &lattice.form();
        &IntMatrix::identity(n) + &step.scaled(&self.exponent)
    }
}

/// `T_1^{m_1} T_2^{m_2} ⋯ T_n^{m_n}` after checking that the vectors are
/// primitive, pairwise orthogonal and pairwise linearly independent.
pub fn multitransvection(lattice: &SymplecticLattice, pairs: &[Transvection]) -> Result<IntMatrix, TransvectionError> {
    let rank = lattice.rank();
    for (index, t) in pairs.iter().enumerate() {
        if t.vector.len() != rank {
            return Err(TransvectionError::Dimension { index, len: t.vector.len(), rank });
        }
        let content = t.vector.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() {
            return Err(TransvectionError::Zero { index });
        }
        if !content.is_one() {
            return Err(TransvectionError::NotPrimitive { index });
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (u, w) = (&pairs[i].vector, &pairs[j].vector);
            if !lattice.pair(u, w).is_zero() {
                return Err(TransvectionError::NotOrthogonal(i, j));
            }
            if !independent(u, w) {
                return Err(TransvectionError::Dependent(i, j));
            }
        }
    }
    Ok(pairs.iter().fold(IntMatrix::identity(rank), |acc, t| &acc * &t.matrix(lattice)))
}

fn independent(u: &[BigInt], w: &[BigInt]) -> bool {
    (0..u.len()).any(|i| (i + 1..u.len()).any(|j| !(&u[i] * &w[j] - &u[j] * &w[i]).is_zero()))
}

/// A multitransvection with nonzero exponents that is nevertheless the
/// identity: in genus 2, `v_i = a_1 + i·a_2` for `i = 1..4` with exponents
/// `1, -3, 3, -1`. The exponents are the third finite difference, so they
/// annihilate `1`, `i` and `i²`, the coefficients of `v_i v_iᵀ`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub lattice: SymplecticLattice,
    pub transvections: Vec<Transvection>,
    pub matrix: IntMatrix,
}

pub fn conjecture_counterexample() -> Counterexample {
    let lattice = SymplecticLattice::standard(2);
    let transvections: Vec<Transvection> = [1i64, -3, 3, -1]
        .iter()
        .zip(1i64..)
        .map(|(&m, i)| Transvection::from_i64(&[1, 0, i, 0], m))
        .collect();
    let matrix = multitransvection(&lattice, &transvections).expect("counterexample satisfies the hypotheses");
    Counterexample { lattice, transvections, matrix }
}

/// Homology classes of the curves of a reduction system.
#[derive(Clone, Debug)]
pub struct HomologyModel {
    graph: Multigraph,
    lattice: SymplecticLattice,
    cycle_rank: usize,
    curve_class: Vec<Vec<BigInt>>,
    // signed membership of each edge in each fundamental cycle, before
    // orientation normalisation
    membership: Vec<Vec<i8>>,
    orientation: Vec<i8>,
}

impl HomologyModel {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn lattice(&self) -> &SymplecticLattice {
        &self.lattice
    }

    /// Rank of `π₁` of the graph.
    pub fn cycle_rank(&self) -> usize {
        self.cycle_rank
    }

    pub fn curve_class(&self, e: EdgeId) -> &[BigInt] {
        &self.curve_class[e.0]
    }

    /// `y_j`, the class of the curve dual to the `j`-th non-tree edge.
    pub fn dual_class(&self, j: usize) -> Vec<BigInt> {
        self.lattice.basis_vector(self.cycle_rank + j)
    }

    /// `±1` if `e` lies on the `j`-th fundamental cycle (sign from the
    /// traversal that starts along `f_j`), else `0`.
    pub fn membership(&self, e: EdgeId, j: usize) -> i8 {
        self.membership[e.0][j]
    }

    /// `-1` where the curve was reoriented to match its b-class representative.
    pub fn orientation(&self, e: EdgeId) -> i8 {
        self.orientation[e.0]
    }

    /// Checks every structural property the construction promises. Returns
    /// a description of the first failure.
    pub fn check_invariants(&self, cls: &EdgeClassification) -> Result<(), &'static str> {
        let g = &self.graph;
        let lat = &self.lattice;
        let handle_start = 2 * self.cycle_rank;
        for e in g.edges() {
            let ce = self.curve_class(e);
            if ce[handle_start..].iter().any(|x| !x.is_zero()) {
                return Err("curve class has handle coordinates");
            }
            for f in g.edges() {
                if !lat.pair(ce, self.curve_class(f)).is_zero() {
                    return Err("curve classes are not orthogonal");
                }
            }
            for j in 0..self.cycle_rank {
                let want = BigInt::from(self.orientation[e.0] * self.membership[e.0][j]);
                if lat.pair(ce, &self.dual_class(j)) != want {
                    return Err("pairing with a dual class is not the signed membership");
                }
            }
            if cls.edge_type(e) == EdgeType::A && ce.iter().any(|x| !x.is_zero()) {
                return Err("bridge has nonzero class");
            }
        }
        for class in cls.b_classes() {
            if class.iter().any(|&b| self.curve_class(b) != self.curve_class(class[0])) {
                return Err("b-class members are not homologous");
            }
        }
        let tree = spanning_tree(g);
        for (j, &f) in tree.non_tree_edges().iter().enumerate() {
            if self.membership[f.0][j] != 1 {
                return Err("non-tree edge does not meet its dual once");
            }
        }
        Ok(())
    }
}

pub fn build_model(s: &SurfaceModel) -> Result<HomologyModel, HomologyError> {
    let g = s.graph();
    let tree = spanning_tree(g);
    let k = tree.rank();
    let handles = s.total_vertex_genus() as usize;
    let lattice = SymplecticLattice::graph_layout(k, handles);

    let mut membership = vec![vec![0i8; k]; g.edge_count()];
    for (j, cycle) in tree.fundamental_cycles().iter().enumerate() {
        for step in cycle.trail().steps() {
            membership[step.edge.0][j] = if step.forward { 1 } else { -1 };
        }
    }
    let raw = |e: EdgeId| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); lattice.rank()];
        for j in 0..k {
            v[j] = BigInt::from(membership[e.0][j]);
        }
        v
    };

    let cls = classify(g);
    let mut orientation = vec![1i8; g.edge_count()];
    for (index, class) in cls.b_classes().iter().enumerate() {
        // the representative is oriented so its first nonzero coordinate is positive
        let mut rep = raw(class[0]);
        if rep.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) {
            orientation[class[0].0] = -1;
            rep.iter_mut().for_each(|x| *x = -&*x);
        }
        let neg: Vec<BigInt> = rep.iter().map(|x| -x).collect();
        for &b in &class[1..] {
            let v = raw(b);
            if v == neg {
                orientation[b.0] = -1;
            } else if v != rep {
                return Err(HomologyError::UnequalBClass { class: index });
            }
        }
    }
    let curve_class = g
        .edges()
        .map(|e| raw(e).into_iter().map(|x| x * orientation[e.0]).collect())
        .collect();
    Ok(HomologyModel { graph: g.clone(), lattice, cycle_rank: k, curve_class, membership, orientation })
}

/// Matrix of `w ↦ w + Σ ε_e ⟨[e], w⟩ [e]`. The curve classes are isotropic and
/// pairwise orthogonal, so the individual twist powers commute and their
/// contributions add.
pub fn twist_action(model: &HomologyModel, m: &Multitwist) -> Result<IntMatrix, HomologyError> {
    if *m.graph() != model.graph {
        return Err(HomologyError::GraphMismatch);
    }
    let n = model.lattice.rank();
    let mut sum = IntMatrix::zeros(n, n);
    for e in model.graph.edges() {
        let eps = m.exponent(e);
        let c = model.curve_class(e);
        if eps.is_zero() || c.iter().all(Zero::is_zero) {
            continue;
        }
        sum = &sum + &IntMatrix::outer(c, c).scaled(eps);
    }
    Ok(&IntMatrix::identity(n) + &(&sum * &model.lattice.form()))
}

/// The same matrix as [`twist_action`], built as an ordered product of the
/// individual twist powers.
pub fn twist_action_product(model: &HomologyModel, m: &Multitwist) -> Result<IntMatrix, HomologyError> {
    if *m.graph() != model.graph {
        return Err(HomologyError::GraphMismatch);
    }
    let lat = &model.lattice;
    Ok(model.graph.edges().fold(IntMatrix::identity(lat.rank()), |acc, e| {
        let t = Transvection::new(model.curve_class(e).to_vec(), m.exponent(e).clone());
        &acc * &t.matrix(lat)
    }))
}

pub fn is_identity_action(model: &HomologyModel, m: &Multitwist) -> Result<bool, HomologyError> {
    Ok(twist_action(model, m)?.is_identity())
}

/// Whether the action is trivial on `H_1(S; Z/modulus)`.
pub fn is_identity_action_mod(model: &HomologyModel, m: &Multitwist, modulus: &BigInt) -> Result<bool, HomologyError> {
    Ok(twist_action(model, m)?.is_identity_mod(modulus))
}

/// Rank of the kernel of `ε ↦ (action of ε) - I`, a linear map from exponent
/// vectors to matrices, computed by exact elimination.
pub fn action_kernel_rank(model: &HomologyModel) -> usize {
    let n = model.lattice.rank();
    let j = model.lattice.form();
    let edges = model.graph.edge_count();
    let mut map = IntMatrix::zeros(n * n, edges);
    for e in model.graph.edges() {
        let c = model.curve_class(e);
        let col = &IntMatrix::outer(c, c) * &j;
        for (r, x) in col.entries().iter().enumerate() {
            if !x.is_zero() {
                map.set(r, e.0, x.clone());
            }
        }
    }
    edges - map.rank()
}

/// Largest absolute coordinate over all curve classes.
pub fn max_curve_coordinate(model: &HomologyModel) -> BigInt {
    model.curve_class.iter().flatten().map(Signed::abs).max().unwrap_or_default()
}
