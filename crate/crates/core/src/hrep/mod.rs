//! Closed-form H-representations of generalized cut polytopes, with a
//! dispatcher that recognizes the input complex and falls back to the hull oracle.

pub mod adual;
pub mod recognize;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::complex::{self, subsets_of, Face, Label, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hull::{self, HullConfig};
use crate::polytope::{canonical_set, gcut_vertices, LinearInequality};
use crate::rational::{self, Rational};

pub use adual::{build_g2, BipartiteDigraph, Cycle, GluingTree};
pub use recognize::{recognize, Shape};

/// An inequality keyed by faces; faces absent from the map have coefficient 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseInequality {
    pub coeffs: BTreeMap<Face, Rational>,
    pub rhs: Rational,
}

impl SparseInequality {
    pub fn new(rhs: Rational) -> Self {
        SparseInequality {
            coeffs: BTreeMap::new(),
            rhs,
        }
    }

    pub fn coeff(&self, f: &Face) -> Rational {
        self.coeffs.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    /// `a · d^S`.
    pub fn evaluate_at_vertex(&self, s: &Face) -> Rational {
        self.coeffs
            .iter()
            .filter(|(f, _)| f.odd_meet(s))
            .fold(Rational::zero(), |acc, (_, a)| acc + a)
    }

    /// The switching by `I`.
    pub fn switched(&self, i: &Face) -> SparseInequality {
        let mut rhs = self.rhs.clone();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(f, a)| {
                if f.odd_meet(i) {
                    rhs -= a;
                    (f.clone(), -a.clone())
                } else {
                    (f.clone(), a.clone())
                }
            })
            .collect();
        SparseInequality { coeffs, rhs }
    }

    pub fn plus(&self, other: &SparseInequality) -> SparseInequality {
        let mut coeffs = self.coeffs.clone();
        for (f, a) in &other.coeffs {
            *coeffs.entry(f.clone()).or_insert_with(Rational::zero) += a;
        }
        coeffs.retain(|_, a| !a.is_zero());
        SparseInequality {
            coeffs,
            rhs: &self.rhs + &other.rhs,
        }
    }

    pub fn to_dense(&self, faces: &[Face]) -> Result<LinearInequality> {
        if let Some(f) = self.coeffs.keys().find(|f| faces.binary_search(f).is_err()) {
            return Err(Error::Internal(format!("coefficient on non-face {}", f.key())));
        }
        Ok(LinearInequality::new(
            faces.iter().map(|f| self.coeff(f)).collect(),
            self.rhs.clone(),
        ))
    }

    pub fn from_dense(q: &LinearInequality, faces: &[Face]) -> SparseInequality {
        SparseInequality {
            coeffs: faces
                .iter()
                .zip(&q.coeffs)
                .filter(|(_, a)| !a.is_zero())
                .map(|(f, a)| (f.clone(), a.clone()))
                .collect(),
            rhs: q.rhs.clone(),
        }
    }
}

/// Which construction produced an H-representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Empty,
    Simplex,
    BoundarySimplex,
    Turtle,
    DisjointUnion,
    Cone,
    AlexanderDual,
    Oracle,
    /// Box constraints only, emitted when the oracle is out of range.
    ValidOnly,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Empty => "empty",
            Family::Simplex => "simplex",
            Family::BoundarySimplex => "boundary_simplex",
            Family::Turtle => "turtle",
            Family::DisjointUnion => "disjoint_union",
            Family::Cone => "cone",
            Family::AlexanderDual => "alexander_dual",
            Family::Oracle => "oracle",
            Family::ValidOnly => "valid_only",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Inequalities over the nonempty faces of `complex`, in canonical face order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HRepresentation {
    pub complex: SimplicialComplex,
    pub family: Family,
    pub complete: bool,
    pub equalities: Vec<LinearInequality>,
    pub inequalities: Vec<LinearInequality>,
}

impl HRepresentation {
    fn from_sparse(
        d: &SimplicialComplex,
        family: Family,
        complete: bool,
        system: &[SparseInequality],
    ) -> Result<Self> {
        let faces = d.faces();
        let dense = system
            .iter()
            .map(|q| q.to_dense(&faces))
            .collect::<Result<Vec<_>>>()?;
        Ok(HRepresentation {
            complex: d.clone(),
            family,
            complete,
            equalities: Vec::new(),
            inequalities: canonical_set(&dense),
        })
    }

    pub fn to_sparse(&self) -> Vec<SparseInequality> {
        let faces = self.complex.faces();
        self.inequalities
            .iter()
            .map(|q| SparseInequality::from_dense(q, &faces))
            .collect()
    }
}

/// `Σ_F x_F <= 2^{n-1}` switched over every subset of the facet.
pub fn simplex_system(labels: &[Label]) -> Vec<SparseInequality> {
    let n = labels.len();
    if n == 0 {
        return Vec::new();
    }
    let mut base = SparseInequality::new(rational::pow2(n as i64 - 1));
    for f in subsets_of(labels).into_iter().filter(|f| !f.is_empty()) {
        base.coeffs.insert(f, Rational::one());
    }
    subsets_of(labels).iter().map(|i| base.switched(i)).collect()
}

/// Turtle on `ground` with facets `ground \ {i}`, `i ∈ removed`: the functionals
/// `c^S` for odd `S ⊆ removed` with right-hand side `2^{n-2}`, switched over all
/// even subsets of the ground set.
pub fn turtle_system(ground: &[Label], removed: &[Label]) -> Vec<SparseInequality> {
    let n = ground.len();
    let g = Face::new(ground.iter().copied());
    let k = Face::new(removed.iter().copied());
    let faces: Vec<Face> = g
        .subsets()
        .into_iter()
        .filter(|f| !f.is_empty() && !k.is_subset(f))
        .collect();
    if faces.is_empty() {
        return Vec::new();
    }
    let rhs = rational::pow2(n as i64 - 2);
    let evens: Vec<Face> = g.subsets().into_iter().filter(|j| j.len() % 2 == 0).collect();
    let mut out = Vec::new();
    for s in k.subsets().into_iter().filter(|s| s.len() % 2 == 1) {
        let mut c = SparseInequality::new(rhs.clone());
        for f in &faces {
            if !f.odd_meet(&s) {
                c.coeffs.insert(f.clone(), Rational::one());
            }
        }
        out.extend(evens.iter().map(|j| c.switched(j)));
    }
    out
}

/// For each `a · x <= c`: `(a, a, λ) <= 2c` and `(a, -a, -λ) <= 0` on coordinates
/// `(x_F, x_{F ∪ ℓ}, x_ℓ)`, where `λ = 2c - a · 1` makes the first row tight on
/// every vertex containing the apex.
pub fn cone_system(base: &[SparseInequality], apex: Label) -> Vec<SparseInequality> {
    let apex_face = Face::new([apex]);
    let mut out = Vec::with_capacity(2 * base.len());
    for q in base {
        let total = q.coeffs.values().fold(Rational::zero(), |acc, a| acc + a);
        let two_c = &q.rhs + &q.rhs;
        let lambda = &two_c - &total;
        let mut up = SparseInequality::new(two_c);
        let mut down = SparseInequality::new(Rational::zero());
        for (f, a) in &q.coeffs {
            up.coeffs.insert(f.clone(), a.clone());
            up.coeffs.insert(f.with(apex), a.clone());
            down.coeffs.insert(f.clone(), a.clone());
            down.coeffs.insert(f.with(apex), -a.clone());
        }
        if !lambda.is_zero() {
            up.coeffs.insert(apex_face.clone(), lambda.clone());
            down.coeffs.insert(apex_face.clone(), -lambda);
        }
        out.push(up);
        out.push(down);
    }
    out
}

/// `0 <= x_F <= 1`.
fn box_system(d: &SimplicialComplex) -> Vec<SparseInequality> {
    d.faces()
        .into_iter()
        .flat_map(|f| {
            let mut up = SparseInequality::new(Rational::one());
            up.coeffs.insert(f.clone(), Rational::one());
            let mut down = SparseInequality::new(Rational::zero());
            down.coeffs.insert(f, -Rational::one());
            [up, down]
        })
        .collect()
}

pub fn hrep_simplex(n: usize) -> HRepresentation {
    let d = complex::simplex(n);
    HRepresentation::from_sparse(&d, Family::Simplex, true, &simplex_system(d.ground_set()))
        .expect("simplex system lives on simplex faces")
}

pub fn hrep_turtle(n: usize, k: usize) -> HRepresentation {
    let d = complex::turtle(n, k);
    let removed: Vec<Label> = (1..=k as Label).collect();
    let family = if k == n {
        Family::BoundarySimplex
    } else {
        Family::Turtle
    };
    HRepresentation::from_sparse(&d, family, true, &turtle_system(d.ground_set(), &removed))
        .expect("turtle system lives on turtle faces")
}

/// Block union of complete descriptions of the two parts.
pub fn hrep_disjoint_union(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    ha: &HRepresentation,
    hb: &HRepresentation,
) -> Result<HRepresentation> {
    let d = complex::disjoint_union(a, b)?;
    let mut system = HRepresentation { complex: a.clone(), ..ha.clone() }.to_sparse();
    system.extend(HRepresentation { complex: b.clone(), ..hb.clone() }.to_sparse());
    HRepresentation::from_sparse(&d, Family::DisjointUnion, ha.complete && hb.complete, &system)
}

pub fn hrep_cone(d: &SimplicialComplex, hd: &HRepresentation, apex: Label) -> Result<HRepresentation> {
    hrep_k_cone(d, hd, &[apex])
}

pub fn hrep_k_cone(
    d: &SimplicialComplex,
    hd: &HRepresentation,
    apexes: &[Label],
) -> Result<HRepresentation> {
    let c = complex::k_cone(d, apexes)?;
    let mut system = HRepresentation { complex: d.clone(), ..hd.clone() }.to_sparse();
    for &l in apexes {
        system = cone_system(&system, l);
    }
    HRepresentation::from_sparse(&c, Family::Cone, hd.complete, &system)
}

pub fn hrep_adual(m: usize, n: usize) -> Result<HRepresentation> {
    let d = complex::d_mn(m, n);
    let left: Vec<Label> = (1..=m as Label).collect();
    let right: Vec<Label> = (m as Label + 1..=(m + n) as Label).collect();
    let system: Vec<SparseInequality> = adual::adual_system(&left, &right, adual::MAX_CYCLES)?
        .into_iter()
        .map(|(_, q)| q)
        .collect();
    HRepresentation::from_sparse(&d, Family::AlexanderDual, true, &system)
}

/// Closed-form system for a recognized complex, or `None`.
pub fn closed_form(d: &SimplicialComplex) -> Result<Option<(Family, Vec<SparseInequality>)>> {
    Ok(match recognize(d) {
        Shape::Empty => Some((Family::Empty, Vec::new())),
        Shape::Simplex(g) => Some((Family::Simplex, simplex_system(&g))),
        Shape::Turtle { ground, removed } => {
            let family = if ground.len() == removed.len() {
                Family::BoundarySimplex
            } else {
                Family::Turtle
            };
            Some((family, turtle_system(&ground, &removed)))
        }
        Shape::DisjointUnion(parts) => {
            let mut system = Vec::new();
            for p in &parts {
                match closed_form(p)? {
                    Some((_, s)) => system.extend(s),
                    None => return Ok(None),
                }
            }
            Some((Family::DisjointUnion, system))
        }
        Shape::AlexanderDual { left, right } => {
            let system = adual::adual_system(&left, &right, adual::MAX_CYCLES)?
                .into_iter()
                .map(|(_, q)| q)
                .collect();
            Some((Family::AlexanderDual, system))
        }
        Shape::Cone { base, apex } => {
            closed_form(&base)?.map(|(_, s)| (Family::Cone, cone_system(&s, apex)))
        }
        Shape::Unknown => None,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Method {
    #[default]
    Auto,
    Oracle,
}

impl Method {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

/// H-representation of `GCut(Δ)` with default oracle caps.
pub fn hrep(d: &SimplicialComplex) -> Result<HRepresentation> {
    hrep_with(d, Method::Auto, &HullConfig::from_env())
}

pub fn hrep_with(d: &SimplicialComplex, method: Method, config: &HullConfig) -> Result<HRepresentation> {
    if method == Method::Auto {
        if let Some((family, system)) = closed_form(d)? {
            return HRepresentation::from_sparse(d, family, true, &system);
        }
    }
    match oracle_hrep(d, config) {
        Ok(h) => Ok(h),
        Err(Error::TooLarge { .. }) if method == Method::Auto => {
            HRepresentation::from_sparse(d, Family::ValidOnly, false, &box_system(d))
        }
        Err(e) => Err(e),
    }
}

/// Facets of `GCut(Δ)` computed by the hull oracle.
pub fn oracle_hrep(d: &SimplicialComplex, config: &HullConfig) -> Result<HRepresentation> {
    if d.num_faces() == 0 {
        return HRepresentation::from_sparse(d, Family::Empty, true, &[]);
    }
    let v = gcut_vertices(&d.without_ghosts())?;
    let h = hull::hull_with(&v.columns, config)?;
    Ok(HRepresentation {
        complex: d.clone(),
        family: Family::Oracle,
        complete: true,
        equalities: h.affine_hull,
        inequalities: canonical_set(&h.facets),
    })
}
