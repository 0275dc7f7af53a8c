//! Gale transforms and the relative-interior face criterion.

use num_traits::{One, Signed, Zero};

use crate::complex::{Face, Label};
use crate::error::{Error, Result};
use crate::linalg::{affine_dimension, Matrix};
use crate::lp::{self, LpOutcome};
use crate::polytope::VertexMatrix;
use crate::rational::{self, Rational};

/// Upper bound on the number of vertices accepted by [`cofacets`].
pub const MAX_COFACET_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleTransform {
    /// Vertex labels, one per row.
    pub subsets: Vec<Face>,
    /// `b_S` for each vertex, all of length `#vertices - dim - 1`.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot columns of the homogenized vertex matrix; empty for closed forms.
    pub pivots: Vec<usize>,
    /// Free columns, one per kernel basis vector.
    pub free_columns: Vec<usize>,
    points: Vec<Vec<Rational>>,
}

impl GaleTransform {
    pub fn kernel_dim(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn num_vertices(&self) -> usize {
        self.rows.len()
    }

    /// Affine dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.num_vertices() - self.kernel_dim() - 1
    }

    /// The stacked kernel matrix: one column per basis vector.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows.clone(), self.kernel_dim())
    }
}

fn homogenized(v: &VertexMatrix) -> Matrix {
    let n = v.num_columns();
    let mut rows = vec![vec![Rational::one(); n]];
    for i in 0..v.num_rows() {
        rows.push(v.columns.iter().map(|c| c[i].clone()).collect());
    }
    Matrix::from_rows(rows, n)
}

pub fn gale(v: &VertexMatrix) -> Result<GaleTransform> {
    let h = homogenized(v);
    let rref = h.rref();
    let expected = v.num_rows();
    if rref.rank() != expected + 1 {
        return Err(Error::NotFullDimensional {
            rank: rref.rank().saturating_sub(1),
            expected,
        });
    }
    let kernel = rref.kernel();
    let rows = (0..v.num_columns())
        .map(|j| kernel.iter().map(|k| k[j].clone()).collect())
        .collect();
    Ok(GaleTransform {
        subsets: v.subsets.clone(),
        rows,
        pivots: rref.pivots.clone(),
        free_columns: rref.free_columns(),
        points: v.columns.clone(),
    })
}

/// Closed-form Gale transform of `GCut(turtle(n, k))`: `b_S = (-1)^{#S} e_{S ∩ I}`
/// with `I = {k+1, ..., n}` and basis vectors indexed by subsets of `I`.
pub fn turtle_gale(n: usize, k: usize) -> Result<GaleTransform> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("turtle needs 1 <= k <= n, got ({n}, {k})")));
    }
    let d = crate::complex::turtle(n, k);
    let core: Vec<Label> = (k as Label + 1..=n as Label).collect();
    let basis = crate::complex::subsets_of(&core);
    let v = crate::polytope::gcut_vertices(&d)?;
    let core_face = Face::new(core.iter().copied());
    let rows = v
        .subsets
        .iter()
        .map(|s| {
            let t = s.intersection(&core_face);
            let sign = rational::sign_pow(s.len() as u32);
            basis
                .iter()
                .map(|b| if *b == t { sign.clone() } else { Rational::zero() })
                .collect()
        })
        .collect();
    Ok(GaleTransform {
        subsets: v.subsets.clone(),
        rows,
        pivots: Vec::new(),
        free_columns: Vec::new(),
        points: v.columns,
    })
}

/// Whether the vertices indexed by `face` form a face of the polytope.
///
/// Solves `max t` subject to `Σ λ_i b_i = 0`, `Σ λ_i = 1`, `λ_i >= t` over the
/// complementary vertices; a face exactly when the optimum is positive.
pub fn is_face(g: &GaleTransform, face: &[usize]) -> Result<bool> {
    let n = g.num_vertices();
    if let Some(&i) = face.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("vertex index {i} out of range")));
    }
    let complement: Vec<usize> = (0..n).filter(|i| !face.contains(i)).collect();
    if complement.is_empty() {
        return Ok(true);
    }
    let m = complement.len();
    let k = g.kernel_dim();
    // Variables: λ_1..λ_m, t.
    let mut c = vec![Rational::zero(); m + 1];
    c[m] = Rational::one();
    let mut eq = Vec::with_capacity(k + 1);
    for r in 0..k {
        let mut row: Vec<Rational> = complement.iter().map(|&i| g.rows[i][r].clone()).collect();
        row.push(Rational::zero());
        eq.push((row, Rational::zero()));
    }
    let mut sum = vec![Rational::one(); m];
    sum.push(Rational::zero());
    eq.push((sum, Rational::one()));
    let le: Vec<(Vec<Rational>, Rational)> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); m + 1];
            row[i] = -Rational::one();
            row[m] = Rational::one();
            (row, Rational::zero())
        })
        .collect();
    Ok(match lp::maximize_free(&c, &le, &eq) {
        LpOutcome::Optimal { value, .. } => value.is_positive(),
        LpOutcome::Infeasible => false,
        LpOutcome::Unbounded => {
            return Err(Error::Internal("face LP is bounded by construction".into()))
        }
    })
}

/// Complement of a facet, as vertex indices and their subsets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoFace {
    pub indices: Vec<usize>,
    pub subsets: Vec<Face>,
}

/// All co-facets, found as the positive circuits of the Gale vectors.
pub fn cofacets(g: &GaleTransform) -> Result<Vec<CoFace>> {
    cofacets_with_cap(g, MAX_COFACET_VERTICES)
}

pub fn cofacets_with_cap(g: &GaleTransform, cap: usize) -> Result<Vec<CoFace>> {
    let n = g.num_vertices();
    if n > cap {
        return Err(Error::too_large("cofacet vertices", cap, n));
    }
    let mut circuits = Vec::new();
    let mut current = Vec::new();
    search(g, 0, &mut current, &mut circuits);
    let dim = g.dim();
    let mut out = Vec::new();
    for c in circuits {
        let face: Vec<Vec<Rational>> = (0..n)
            .filter(|i| !c.contains(i))
            .map(|i| g.points[i].clone())
            .collect();
        // Faces of a polytope of dimension 0 are handled by the circuit itself.
        let facet_dim = affine_dimension(&face).map_or(-1, |d| d as i64);
        if facet_dim == dim as i64 - 1 {
            out.push(CoFace {
                subsets: c.iter().map(|&i| g.subsets[i].clone()).collect(),
                indices: c,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Depth-first search over independent sets; the first dependent extension of
/// an independent set is a circuit, kept when its dependency is strictly positive.
fn search(g: &GaleTransform, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = g.kernel_dim();
    for i in start..g.num_vertices() {
        current.push(i);
        match dependency(g, current) {
            None => {
                if current.len() <= k {
                    search(g, i + 1, current, out);
                }
            }
            Some(lambda) => {
                let first = lambda[0].signum();
                if !first.is_zero() && lambda.iter().all(|x| x.signum() == first) {
                    out.push(current.clone());
                }
            }
        }
        current.pop();
    }
}

/// The unique linear dependency among the chosen rows, if they are dependent.
fn dependency(g: &GaleTransform, idx: &[usize]) -> Option<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = idx.iter().map(|&i| g.rows[i].clone()).collect();
    let m = Matrix::from_columns(&cols, g.kernel_dim());
    let kernel = m.kernel();
    match kernel.len() {
        0 => None,
        _ => Some(kernel[0].clone()),
    }
}
