//! Exact linear maps between the marginal, correlation and generalized cut polytopes.

use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::linalg::Matrix;
use crate::polytope::{margin_rows, marg_vertex, Coord, Space};
use crate::rational::{self, Rational};
use crate::complex::Face;

/// A rational matrix with labelled rows and columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    pub rows: Vec<Coord>,
    pub cols: Vec<Coord>,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    /// Pull-back of a functional: `q ↦ q M`.
    pub fn pull_back(&self, q: &[Rational]) -> Vec<Rational> {
        self.matrix.vec_mul(q)
    }

    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        LinearMap {
            rows: self.rows.clone(),
            cols: inner.cols.clone(),
            matrix: self.matrix.mul(&inner.matrix),
        }
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                let x = &self.matrix[(i, j)];
                if !x.is_zero() {
                    out.push((i, j, x.clone()));
                }
            }
        }
        out
    }
}

/// `x ↦ M x + t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    pub linear: LinearMap,
    pub translation: Vec<Rational>,
}

impl AffineMap {
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.linear
            .apply(x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect()
    }
}

fn face_coords(faces: &[Face]) -> Vec<Coord> {
    faces.iter().cloned().map(Coord::Face).collect()
}

/// Generalized covariance map `Φ` (Corr → GCut): entry `(F, H) = (-2)^{#H-1}` for `H ⊆ F`.
pub fn phi(d: &SimplicialComplex) -> LinearMap {
    let faces = d.faces();
    let n = faces.len();
    let mut m = Matrix::zeros(n, n);
    for (i, f) in faces.iter().enumerate() {
        for (j, h) in faces.iter().enumerate() {
            if h.is_subset(f) {
                let e = rational::pow2(h.len() as i64 - 1) * rational::sign_pow(h.len() as u32 - 1);
                m[(i, j)] = e;
            }
        }
    }
    LinearMap {
        rows: face_coords(&faces),
        cols: face_coords(&faces),
        matrix: m,
    }
}

/// Inverse covariance map `Ψ` (GCut → Corr): entry `(H, G) = (-1)^{#G-1} / 2^{#H-1}` for `G ⊆ H`.
pub fn psi(d: &SimplicialComplex) -> LinearMap {
    let faces = d.faces();
    let n = faces.len();
    let mut m = Matrix::zeros(n, n);
    for (i, h) in faces.iter().enumerate() {
        for (j, g) in faces.iter().enumerate() {
            if g.is_subset(h) {
                m[(i, j)] = rational::sign_pow(g.len() as u32 - 1) * rational::pow2(1 - h.len() as i64);
            }
        }
    }
    LinearMap {
        rows: face_coords(&faces),
        cols: face_coords(&faces),
        matrix: m,
    }
}

/// `Ω` (Marg → Corr): entry `(T, (H,F)) = 1/f(T)` for `T ⊆ H`, with `f(T)` the
/// number of facets containing `T`.
pub fn omega(d: &SimplicialComplex) -> LinearMap {
    let faces = d.faces();
    let rows = margin_rows(d);
    let mut m = Matrix::zeros(faces.len(), rows.len());
    for (i, t) in faces.iter().enumerate() {
        let f = d.facet_count_containing(t) as i64;
        for (j, r) in rows.iter().enumerate() {
            if t.is_subset(&r.h) {
                m[(i, j)] = rational::frac(1, f);
            }
        }
    }
    LinearMap {
        rows: face_coords(&faces),
        cols: rows.into_iter().map(Coord::Margin).collect(),
        matrix: m,
    }
}

/// Linear part `Π` of Corr → Marg: entry `((H,F), T) = (-1)^{#H+#T}` for `H ⊆ T ⊆ F`.
pub fn pi(d: &SimplicialComplex) -> LinearMap {
    let faces = d.faces();
    let rows = margin_rows(d);
    let mut m = Matrix::zeros(rows.len(), faces.len());
    for (i, r) in rows.iter().enumerate() {
        for (j, t) in faces.iter().enumerate() {
            if r.h.is_subset(t) && t.is_subset(&r.f) {
                m[(i, j)] = rational::sign_pow((r.h.len() + t.len()) as u32);
            }
        }
    }
    LinearMap {
        rows: rows.into_iter().map(Coord::Margin).collect(),
        cols: face_coords(&faces),
        matrix: m,
    }
}

/// The marginal vertex `u^∅`.
pub fn u_empty(d: &SimplicialComplex) -> Vec<Rational> {
    marg_vertex(d, &Face::empty())
}

/// Corr → Marg as `y ↦ Π y + u^∅`.
pub fn corr_to_marg(d: &SimplicialComplex) -> AffineMap {
    AffineMap {
        linear: pi(d),
        translation: u_empty(d),
    }
}

/// The map sending vertices of `from` to vertices of `to`, as an affine map.
pub fn between(d: &SimplicialComplex, from: Space, to: Space) -> AffineMap {
    let linear = match (from, to) {
        (Space::Corr, Space::Gcut) => phi(d),
        (Space::Gcut, Space::Corr) => psi(d),
        (Space::Marg, Space::Corr) => omega(d),
        (Space::Corr, Space::Marg) => return corr_to_marg(d),
        (Space::Marg, Space::Gcut) => phi(d).compose(&omega(d)),
        (Space::Gcut, Space::Marg) => {
            let m = corr_to_marg(d);
            return AffineMap {
                linear: m.linear.compose(&psi(d)),
                translation: m.translation,
            };
        }
        (a, b) => {
            let coords = a.coords(d);
            debug_assert_eq!(a, b);
            let n = coords.len();
            LinearMap {
                rows: coords.clone(),
                cols: coords,
                matrix: Matrix::identity(n),
            }
        }
    };
    let n = linear.rows.len();
    AffineMap {
        linear,
        translation: vec![Rational::zero(); n],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{simplex, SimplicialComplex};
    use crate::polytope::{corr_vertices, gcut_vertices, marg_vertices};
    use crate::rational::{frac, int};

    #[test]
    fn psi_of_edge() {
        let p = psi(&simplex(2));
        let expect = Matrix::from_rows(
            vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![frac(1, 2), frac(1, 2), frac(-1, 2)],
            ],
            3,
        );
        assert_eq!(p.matrix, expect);
        assert!(phi(&simplex(2)).matrix.mul(&p.matrix).is_identity());
    }

    #[test]
    fn singleton_faces_give_identity() {
        let d = SimplicialComplex::from_sets(&[&[1], &[2], &[3]]);
        assert!(phi(&d).matrix.is_identity());
    }

    #[test]
    fn pi_of_point() {
        let m = corr_to_marg(&simplex(1));
        assert_eq!(m.linear.matrix.column(0), vec![int(-1), int(1)]);
        assert_eq!(m.apply(&[frac(1, 3)]), vec![frac(2, 3), frac(1, 3)]);
        assert_eq!(m.apply(&[int(0)]), u_empty(&simplex(1)));
    }

    #[test]
    fn path_maps_on_vertices() {
        let d = SimplicialComplex::from_sets(&[&[1, 2], &[2, 3]]);
        let u = marg_vertices(&d).unwrap();
        let v = corr_vertices(&d).unwrap();
        let g = gcut_vertices(&d).unwrap();
        assert_eq!(psi(&d).matrix.mul(&g.to_matrix()), v.to_matrix());
        assert_eq!(omega(&d).apply(&u.columns[7]), v.columns[7]);
        let s2 = 2;
        assert_eq!(corr_to_marg(&d).apply(&v.columns[s2]), u.columns[s2]);
    }

    #[test]
    fn omega_on_simplex_has_unit_entries() {
        let o = omega(&simplex(2));
        for (_, _, x) in o.entries() {
            assert_eq!(x, int(1));
        }
    }
}
