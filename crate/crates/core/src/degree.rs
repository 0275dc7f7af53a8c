//! Closed-form toric degrees for the known families, cross-checked against the
//! normalized volume of the generalized cut polytope.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hrep::recognize::{lawrence_base, recognize, Shape};
use crate::hull::{self, HullConfig};
use crate::polytope::gcut_vertices;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeResult {
    pub value: BigInt,
    pub formula: &'static str,
    pub conjectural: bool,
    /// `Some(true)` when the value was confirmed by the volume oracle.
    pub volume_checked: Option<bool>,
}

impl DegreeResult {
    fn proven(value: BigInt, formula: &'static str) -> Self {
        DegreeResult {
            value,
            formula,
            conjectural: false,
            volume_checked: None,
        }
    }
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(2^m + 2^n - 2, 2^m - 1)`.
pub fn degree_disjoint_simplices(m: u32, n: u32) -> DegreeResult {
    let (a, b) = (1u64 << m, 1u64 << n);
    DegreeResult::proven(binomial(a + b - 2, a - 1), "disjoint_simplices")
}

/// `2^{n-1}`.
pub fn degree_boundary_simplex(n: u32) -> DegreeResult {
    DegreeResult::proven(pow2(u64::from(n.max(1)) - 1), "boundary_simplex")
}

pub fn degree_cone(deg: &BigInt) -> DegreeResult {
    DegreeResult::proven(deg * deg, "cone")
}

/// `deg^{2^k}`.
pub fn degree_k_cone(deg: &BigInt, k: u32) -> DegreeResult {
    DegreeResult::proven(Pow::pow(deg, 1u64 << k), "cone")
}

/// `2^{(k-1) 2^{n-k}}`.
pub fn degree_turtle(n: u32, k: u32) -> DegreeResult {
    DegreeResult::proven(pow2(u64::from(k - 1) << (n - k)), "turtle")
}

/// Degree of the no-three-way interaction model with levels `(2, 2, n)`: `n 2^{n-1}`.
pub fn degree_no_three_way(n: u64) -> DegreeResult {
    DegreeResult::proven(BigInt::from(n) * pow2(n - 1), "no_three_way")
}

/// `2^{2^n + n - 1}`, the no-three-way degree with `2^n` levels.
pub fn degree_lawrence_1n(n: u32) -> DegreeResult {
    DegreeResult::proven(pow2((1u64 << n) + u64::from(n) - 1), "lawrence")
}

/// Conjectured `2^{m(2^n - 1) + n(2^m - 1)}`; always flagged as conjectural.
pub fn conjecture_lawrence(m: u32, n: u32) -> DegreeResult {
    let e = u64::from(m) * ((1u64 << n) - 1) + u64::from(n) * ((1u64 << m) - 1);
    DegreeResult {
        value: pow2(e),
        formula: "lawrence_conjecture",
        conjectural: true,
        volume_checked: None,
    }
}

/// Formula value for a recognized complex, if any.
pub fn formula_degree(d: &SimplicialComplex) -> Option<DegreeResult> {
    match recognize(d) {
        Shape::Empty => Some(DegreeResult::proven(BigInt::one(), "empty")),
        Shape::Simplex(_) => Some(DegreeResult::proven(BigInt::one(), "simplex")),
        Shape::DisjointUnion(parts) => match parts.as_slice() {
            [a, b] => match (recognize(a), recognize(b)) {
                (Shape::Simplex(x), Shape::Simplex(y)) => {
                    Some(degree_disjoint_simplices(x.len() as u32, y.len() as u32))
                }
                _ => None,
            },
            _ => None,
        },
        Shape::Turtle { ground, removed } => {
            let (n, k) = (ground.len() as u32, removed.len() as u32);
            Some(if n == k {
                degree_boundary_simplex(n)
            } else {
                degree_turtle(n, k)
            })
        }
        Shape::Cone { base, .. } => {
            let inner = formula_degree(&base)?;
            Some(DegreeResult {
                conjectural: inner.conjectural,
                ..degree_cone(&inner.value)
            })
        }
        Shape::AlexanderDual { .. } | Shape::Unknown => lawrence_degree(d),
    }
}

fn lawrence_degree(d: &SimplicialComplex) -> Option<DegreeResult> {
    let (base, _) = lawrence_base(d)?;
    match recognize(&base) {
        Shape::DisjointUnion(parts) if parts.len() == 2 => {
            let sizes: Vec<u32> = parts
                .iter()
                .map(|p| match recognize(p) {
                    Shape::Simplex(x) => Some(x.len() as u32),
                    _ => None,
                })
                .collect::<Option<_>>()?;
            let (m, n) = (sizes[0].min(sizes[1]), sizes[0].max(sizes[1]));
            Some(if m == 1 {
                degree_lawrence_1n(n)
            } else {
                conjecture_lawrence(m, n)
            })
        }
        _ => None,
    }
}

/// Degree of the toric ideal of `Δ`: the formula when one applies, otherwise
/// the normalized volume. With `check` set, formula values are compared with the
/// volume whenever the oracle is within its caps.
pub fn degree_of(d: &SimplicialComplex, check: bool, config: &HullConfig) -> Result<DegreeResult> {
    match formula_degree(d) {
        Some(mut r) => {
            if check {
                r.volume_checked = match gcut_volume(d, config) {
                    Ok(v) => Some(v == r.value),
                    Err(Error::TooLarge { .. }) => None,
                    Err(e) => return Err(e),
                };
            }
            Ok(r)
        }
        None => Ok(DegreeResult {
            value: gcut_volume(d, config)?,
            formula: "volume",
            conjectural: false,
            volume_checked: Some(true),
        }),
    }
}

/// Normalized volume of `GCut(Δ)`; a single point has volume 1.
pub fn gcut_volume(d: &SimplicialComplex, config: &HullConfig) -> Result<BigInt> {
    let d = d.without_ghosts();
    if d.num_faces() == 0 {
        return Ok(BigInt::one());
    }
    let v = gcut_vertices(&d)?;
    hull::normalized_volume_with(&v.columns, config)
}
