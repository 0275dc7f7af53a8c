//! Exact beneath-beyond convex hull with a placing triangulation.
//!
//! Points are inserted in input order. The affine hull is computed first and the
//! incremental work happens in the pivot coordinates of that hull, so every
//! intermediate polytope is full-dimensional in its own span.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polytope::{canonical_set, LinearInequality};
use crate::rational::{self, Rational};

pub const DEFAULT_MAX_POINTS: usize = 64;
pub const DEFAULT_MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HullConfig {
    pub max_points: usize,
    pub max_dim: usize,
}

impl Default for HullConfig {
    fn default() -> Self {
        HullConfig {
            max_points: DEFAULT_MAX_POINTS,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl HullConfig {
    /// Defaults overridden by `GCUT_MAX_VERTICES` and `GCUT_MAX_DIM` when set.
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        HullConfig {
            max_points: read("GCUT_MAX_VERTICES", DEFAULT_MAX_POINTS),
            max_dim: read("GCUT_MAX_DIM", DEFAULT_MAX_DIM),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullResult {
    pub ambient_dim: usize,
    pub dim: usize,
    /// Facet inequalities, canonical and deduplicated.
    pub facets: Vec<LinearInequality>,
    /// Equalities cutting out the affine hull.
    pub affine_hull: Vec<LinearInequality>,
    /// Simplices of the placing triangulation, as indices into the input.
    pub triangulation: Vec<Vec<usize>>,
    /// Normalized volume of each simplex against the affine lattice generated
    /// by the points, for integral input.
    pub simplex_volumes: Option<Vec<BigInt>>,
    pub normalized_volume: Option<BigInt>,
    /// Index of the generated lattice in the integer points of the affine hull.
    pub lattice_index: Option<BigInt>,
}

pub fn hull(points: &[Vec<Rational>]) -> Result<HullResult> {
    hull_with(points, &HullConfig::from_env())
}

/// Lattice-normalized volume of the convex hull of integral points.
pub fn normalized_volume(points: &[Vec<Rational>]) -> Result<BigInt> {
    normalized_volume_with(points, &HullConfig::from_env())
}

pub fn normalized_volume_with(points: &[Vec<Rational>], config: &HullConfig) -> Result<BigInt> {
    hull_with(points, config)?.normalized_volume.ok_or(Error::NotLattice)
}

struct Facet {
    verts: Vec<usize>,
    opp: usize,
    normal: Vec<Rational>,
    offset: Rational,
}

pub fn hull_with(points: &[Vec<Rational>], config: &HullConfig) -> Result<HullResult> {
    let ambient = points.first().map_or(0, Vec::len);
    if let Some(p) = points.iter().find(|p| p.len() != ambient) {
        return Err(Error::AmbientMismatch {
            expected: ambient,
            found: p.len(),
        });
    }
    let mut seen = HashMap::new();
    let mut origin = Vec::new();
    for (i, p) in points.iter().enumerate() {
        seen.entry(p).or_insert_with(|| {
            origin.push(i);
            i
        });
    }
    let distinct: Vec<&Vec<Rational>> = origin.iter().map(|&i| &points[i]).collect();
    if distinct.len() < 2 {
        return Err(Error::Degenerate {
            distinct: distinct.len(),
        });
    }
    if distinct.len() > config.max_points {
        return Err(Error::too_large("hull points", config.max_points, distinct.len()));
    }

    let p0 = distinct[0];
    let dirs: Vec<Vec<Rational>> = distinct[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let rref = Matrix::from_rows(dirs, ambient).rref();
    let pivots = rref.pivots.clone();
    let dim = pivots.len();
    if dim > config.max_dim {
        return Err(Error::too_large("hull dimension", config.max_dim, dim));
    }

    let mut affine_hull = Vec::new();
    for j in rref.free_columns() {
        let mut coeffs = vec![Rational::zero(); ambient];
        coeffs[j] = Rational::one();
        for (k, &p) in pivots.iter().enumerate() {
            coeffs[p] = -rref.matrix[(k, j)].clone();
        }
        let rhs = rational::dot(&coeffs, p0);
        affine_hull.push(LinearInequality::new(coeffs, rhs).normalized_equality());
    }
    affine_hull.sort_by(crate::polytope::cmp_inequalities);

    let proj: Vec<Vec<Rational>> = distinct
        .iter()
        .map(|p| pivots.iter().map(|&k| p[k].clone()).collect())
        .collect();
    let (simplices, boundary) = place(&proj);

    let facets = canonical_set(
        &boundary
            .iter()
            .map(|f| {
                let mut coeffs = vec![Rational::zero(); ambient];
                for (k, &p) in pivots.iter().enumerate() {
                    coeffs[p] = f.normal[k].clone();
                }
                LinearInequality::new(coeffs, f.offset.clone())
            })
            .collect::<Vec<_>>(),
    );

    let mut lattice_index = None;
    let simplex_volumes: Option<Vec<BigInt>> = if distinct.iter().all(|p| rational::is_integral(p)) {
        let lattice = generated_det(&proj);
        lattice_index = Some(
            rational::to_bigint(&(&lattice / lattice_det(&affine_hull, &pivots, ambient)))
                .expect("generated lattice is a sublattice"),
        );
        Some(
            simplices
                .iter()
                .map(|s| {
                    let w = simplex_matrix(&proj, s);
                    let v = w.determinant().abs() / &lattice;
                    rational::to_bigint(&v).expect("lattice simplex has integral volume")
                })
                .collect(),
        )
    } else {
        None
    };
    let normalized_volume = simplex_volumes
        .as_ref()
        .map(|v| v.iter().fold(BigInt::zero(), |acc, x| acc + x));
    let triangulation = simplices
        .iter()
        .map(|s| s.iter().map(|&i| origin[i]).collect())
        .collect();

    Ok(HullResult {
        ambient_dim: ambient,
        dim,
        facets,
        affine_hull,
        triangulation,
        simplex_volumes,
        normalized_volume,
        lattice_index,
    })
}

fn simplex_matrix(proj: &[Vec<Rational>], s: &[usize]) -> Matrix {
    let base = &proj[s[0]];
    let cols: Vec<Vec<Rational>> = s[1..]
        .iter()
        .map(|&i| proj[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    Matrix::from_columns(&cols, base.len())
}

/// Incremental placing: returns the simplices and the triangulated boundary.
fn place(proj: &[Vec<Rational>]) -> (Vec<Vec<usize>>, Vec<Facet>) {
    let mut span = Span::default();
    let mut simplices: Vec<Vec<usize>> = vec![vec![0]];
    let mut boundary = vec![Facet {
        verts: Vec::new(),
        opp: 0,
        normal: Vec::new(),
        offset: Rational::zero(),
    }];
    for p in 1..proj.len() {
        let dir: Vec<Rational> = proj[p].iter().zip(&proj[0]).map(|(a, b)| a - b).collect();
        if span.extend(dir) {
            let mut next = Vec::with_capacity(simplices.len() + boundary.len());
            for s in &simplices {
                next.push(Facet {
                    verts: s.clone(),
                    opp: p,
                    normal: Vec::new(),
                    offset: Rational::zero(),
                });
            }
            for f in &boundary {
                let mut verts = f.verts.clone();
                verts.push(p);
                next.push(Facet {
                    verts,
                    opp: f.opp,
                    normal: Vec::new(),
                    offset: Rational::zero(),
                });
            }
            for s in simplices.iter_mut() {
                s.push(p);
            }
            for f in next.iter_mut() {
                orient(f, proj);
            }
            boundary = next;
            continue;
        }
        let visible: Vec<bool> = boundary
            .iter()
            .map(|f| rational::dot(&f.normal, &proj[p]) > f.offset)
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, f) in boundary.iter().enumerate() {
            for k in 0..f.verts.len() {
                let mut r = f.verts.clone();
                r.remove(k);
                ridges.entry(r).or_default().push(i);
            }
        }
        let mut fresh = Vec::new();
        for (i, f) in boundary.iter().enumerate().filter(|(i, _)| visible[*i]) {
            let mut s = f.verts.clone();
            s.push(p);
            simplices.push(s);
            for k in 0..f.verts.len() {
                let mut r = f.verts.clone();
                let removed = r.remove(k);
                let hidden_neighbour = ridges[&r].iter().any(|&j| j != i && !visible[j]);
                if hidden_neighbour {
                    r.push(p);
                    let mut g = Facet {
                        verts: r,
                        opp: removed,
                        normal: Vec::new(),
                        offset: Rational::zero(),
                    };
                    orient(&mut g, proj);
                    fresh.push(g);
                }
            }
        }
        let mut kept: Vec<Facet> = boundary
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        kept.extend(fresh);
        boundary = kept;
    }
    for s in simplices.iter_mut() {
        s.sort_unstable();
    }
    simplices.sort();
    (simplices, boundary)
}

/// Outward normal within the current span: minus the component of
/// `opp - f_0` orthogonal to the facet directions.
fn orient(f: &mut Facet, proj: &[Vec<Rational>]) {
    let f0 = &proj[f.verts[0]];
    let mut gs = Span::default();
    for &v in &f.verts[1..] {
        gs.extend(proj[v].iter().zip(f0).map(|(a, b)| a - b).collect());
    }
    let r = gs.residual(proj[f.opp].iter().zip(f0).map(|(a, b)| a - b).collect());
    let normal: Vec<Rational> = r.into_iter().map(|x| -x).collect();
    f.offset = rational::dot(&normal, f0);
    f.normal = normal;
}

/// Orthogonal basis built by Gram-Schmidt.
#[derive(Default)]
struct Span {
    basis: Vec<(Vec<Rational>, Rational)>,
}

impl Span {
    fn residual(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (w, ww) in &self.basis {
            let c = rational::dot(&v, w) / ww;
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(w) {
                *x -= &c * y;
            }
        }
        v
    }

    /// Adds `v` if it is independent of the span; reports whether it was.
    fn extend(&mut self, v: Vec<Rational>) -> bool {
        let r = self.residual(v);
        let rr = rational::dot(&r, &r);
        if rr.is_zero() {
            return false;
        }
        self.basis.push((r, rr));
        true
    }
}

/// `|det|` of a basis of the lattice spanned by `p_i - p_0`, in pivot coordinates.
fn generated_det(proj: &[Vec<Rational>]) -> Rational {
    let r = proj[0].len();
    let diffs: Vec<Vec<BigInt>> = proj[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&proj[0])
                .map(|(a, b)| rational::to_bigint(&(a - b)).expect("integral"))
                .collect()
        })
        .collect();
    let basis: Vec<Vec<Rational>> = integer_row_basis(diffs, r)
        .into_iter()
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    Matrix::from_rows(basis, r).determinant().abs()
}

/// Echelon basis of the integer row lattice, by Euclidean row operations.
pub fn integer_row_basis(mut a: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    let mut r = 0;
    for c in 0..cols {
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            let Some(&m) = nz.iter().min_by_key(|&&i| a[i][c].abs()) else {
                break;
            };
            a.swap(r, m);
            if nz.len() == 1 {
                r += 1;
                break;
            }
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot) {
                    *x -= y * &q;
                }
            }
        }
    }
    a.truncate(r);
    a
}

/// `|det B_P|` for an integer basis `B` of the direction lattice.
fn lattice_det(equalities: &[LinearInequality], pivots: &[usize], ambient: usize) -> Rational {
    if equalities.is_empty() {
        return Rational::one();
    }
    let e: Vec<Vec<BigInt>> = equalities
        .iter()
        .map(|q| q.coeffs.iter().map(|x| rational::to_bigint(x).expect("primitive")).collect())
        .collect();
    let basis = integer_kernel(&e, ambient);
    let cols: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| pivots.iter().map(|&k| Rational::from_integer(b[k].clone())).collect())
        .collect();
    Matrix::from_columns(&cols, pivots.len()).determinant().abs()
}

/// Basis of `{x ∈ Z^n : E x = 0}` from a unimodular column reduction of `E`.
pub fn integer_kernel(e: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = e.to_vec();
    // Columns of U, kept alongside the column operations on `a`.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let col_op = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for row in a.iter_mut() {
            let t = &row[src] * f;
            row[dst] -= t;
        }
        let s = u[src].clone();
        for (x, y) in u[dst].iter_mut().zip(s) {
            *x -= y * f;
        }
    };
    let swap = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        u.swap(i, j);
    };
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot..n).filter(|&j| !a[r][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let m = *nz.iter().min_by_key(|&&j| a[r][j].abs()).expect("nonempty");
            swap(&mut a, &mut u, pivot, m);
            if nz.len() == 1 {
                pivot += 1;
                break;
            }
            for j in pivot + 1..n {
                if a[r][j].is_zero() {
                    continue;
                }
                let q = a[r][j].div_floor(&a[r][pivot]);
                col_op(&mut a, &mut u, j, pivot, &q);
            }
        }
    }
    u.split_off(pivot)
}

/// Result of comparing two facet lists after normalization.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FacetDiff {
    /// In the expected list but not the actual one.
    pub missing: Vec<LinearInequality>,
    /// In the actual list but not the expected one.
    pub extra: Vec<LinearInequality>,
}

impl FacetDiff {
    pub fn is_equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn facets_equal(expected: &[LinearInequality], actual: &[LinearInequality]) -> Result<FacetDiff> {
    let dims: BTreeSet<usize> = expected.iter().chain(actual).map(LinearInequality::dim).collect();
    if dims.len() > 1 {
        let mut it = dims.into_iter();
        return Err(Error::AmbientMismatch {
            expected: it.next().expect("two dims"),
            found: it.next().expect("two dims"),
        });
    }
    let a = canonical_set(expected);
    let b = canonical_set(actual);
    Ok(FacetDiff {
        missing: a.iter().filter(|q| b.binary_search_by(|x| crate::polytope::cmp_inequalities(x, q)).is_err()).cloned().collect(),
        extra: b.iter().filter(|q| a.binary_search_by(|x| crate::polytope::cmp_inequalities(x, q)).is_err()).cloned().collect(),
    })
}
