//! Vertex matrices of the marginal, correlation, generalized cut and cut
//! polytopes, and the inequality type shared by the rest of the crate.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::lp::{self, LpOutcome};
use crate::rational::{self, Rational};

/// Row index `(H, F)` of the marginal matrix: `H ⊆ F` with `F` a facet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginRow {
    pub h: Face,
    pub f: Face,
}

impl MarginRow {
    /// `"H|F"`, e.g. `"|1,2"` for `(∅, 12)`.
    pub fn key(&self) -> String {
        format!("{}|{}", self.h.key(), self.f.key())
    }

    pub fn parse_key(s: &str) -> Result<MarginRow> {
        let (h, f) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bad margin key {s:?}")))?;
        Ok(MarginRow {
            h: Face::parse_key(h)?,
            f: Face::parse_key(f)?,
        })
    }
}

impl fmt::Debug for MarginRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.f)
    }
}

/// A coordinate of one of the ambient spaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coord {
    /// A nonempty face (correlation and generalized cut coordinates).
    Face(Face),
    /// A marginal coordinate `(H, F)`.
    Margin(MarginRow),
    /// An edge of a graph (cut coordinates).
    Edge(Face),
}

impl Coord {
    pub fn key(&self) -> String {
        match self {
            Coord::Face(f) | Coord::Edge(f) => f.key(),
            Coord::Margin(r) => r.key(),
        }
    }
}

/// Which polytope a vector or inequality lives on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Space {
    Marg,
    Corr,
    Gcut,
}

impl Space {
    pub fn parse(s: &str) -> Result<Space> {
        match s {
            "marg" => Ok(Space::Marg),
            "corr" => Ok(Space::Corr),
            "gcut" => Ok(Space::Gcut),
            _ => Err(Error::InvalidArgument(format!("unknown space {s:?}"))),
        }
    }

    pub fn coords(self, d: &SimplicialComplex) -> Vec<Coord> {
        match self {
            Space::Marg => margin_rows(d).into_iter().map(Coord::Margin).collect(),
            Space::Corr | Space::Gcut => d.faces().into_iter().map(Coord::Face).collect(),
        }
    }
}

/// `ℰ(Δ)`: facets in canonical order, then `H` graded-lex within each facet.
pub fn margin_rows(d: &SimplicialComplex) -> Vec<MarginRow> {
    d.facets()
        .iter()
        .flat_map(|f| {
            f.subsets().into_iter().map(move |h| MarginRow {
                h,
                f: f.clone(),
            })
        })
        .collect()
}

/// `a · x <= rhs` over a coordinate list fixed by context.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearInequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl LinearInequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        LinearInequality { coeffs, rhs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        check_dim(self.coeffs.len(), point.len())?;
        Ok(rational::dot(&self.coeffs, point))
    }

    pub fn holds(&self, point: &[Rational]) -> Result<bool> {
        Ok(self.evaluate(point)? <= self.rhs)
    }

    pub fn is_tight(&self, point: &[Rational]) -> Result<bool> {
        Ok(self.evaluate(point)? == self.rhs)
    }

    pub fn is_zero_functional(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// A zero functional: always true when `rhs >= 0`, never otherwise.
    pub fn is_vacuous(&self) -> bool {
        self.is_zero_functional() && !self.rhs.is_negative()
    }

    /// Scaled by a positive factor to a primitive integer functional.
    pub fn normalized(&self) -> LinearInequality {
        match rational::primitive_scale(&self.coeffs) {
            Some(s) => LinearInequality {
                coeffs: rational::scale(&self.coeffs, &s),
                rhs: &self.rhs * &s,
            },
            None => LinearInequality {
                coeffs: self.coeffs.clone(),
                rhs: self.rhs.signum(),
            },
        }
    }

    /// Canonical form of `a · x = rhs`: primitive integer with positive leading nonzero.
    pub fn normalized_equality(&self) -> LinearInequality {
        let n = self.normalized();
        match n.coeffs.iter().find(|x| !x.is_zero()) {
            Some(lead) if lead.is_negative() => LinearInequality {
                coeffs: n.coeffs.iter().map(|x| -x).collect(),
                rhs: -n.rhs,
            },
            _ => n,
        }
    }

    /// Index of the first column violating the inequality, if any.
    pub fn first_violation(&self, v: &VertexMatrix) -> Result<Option<usize>> {
        check_dim(self.coeffs.len(), v.rows.len())?;
        for (j, col) in v.columns.iter().enumerate() {
            if rational::dot(&self.coeffs, col) > self.rhs {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    pub fn is_valid(&self, v: &VertexMatrix) -> Result<bool> {
        Ok(self.first_violation(v)?.is_none())
    }

    /// Column indices on which the inequality is tight.
    pub fn tight_columns(&self, v: &VertexMatrix) -> Result<Vec<usize>> {
        check_dim(self.coeffs.len(), v.rows.len())?;
        Ok(v.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| rational::dot(&self.coeffs, c) == self.rhs)
            .map(|(j, _)| j)
            .collect())
    }
}

/// Normalizes, drops vacuous rows, sorts and deduplicates.
pub fn canonical_set(ineqs: &[LinearInequality]) -> Vec<LinearInequality> {
    let mut out: Vec<LinearInequality> = ineqs
        .iter()
        .filter(|q| !q.is_vacuous())
        .map(LinearInequality::normalized)
        .collect();
    out.sort_by(cmp_inequalities);
    out.dedup();
    out
}

pub fn cmp_inequalities(a: &LinearInequality, b: &LinearInequality) -> std::cmp::Ordering {
    a.coeffs.cmp(&b.coeffs).then_with(|| a.rhs.cmp(&b.rhs))
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { expected, found })
    }
}

/// Columns indexed by subsets of the ground set, rows by coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexMatrix {
    pub rows: Vec<Coord>,
    pub subsets: Vec<Face>,
    pub columns: Vec<Vec<Rational>>,
}

impl VertexMatrix {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn row_keys(&self) -> Vec<String> {
        self.rows.iter().map(Coord::key).collect()
    }

    pub fn column_of(&self, s: &Face) -> Option<&[Rational]> {
        self.subsets
            .iter()
            .position(|t| t == s)
            .map(|j| self.columns[j].as_slice())
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.columns[col][row]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.columns, self.rows.len())
    }

    /// Barycenter of the columns.
    pub fn centroid(&self) -> Vec<Rational> {
        let n = Rational::from_integer(self.columns.len().into());
        (0..self.rows.len())
            .map(|i| {
                self.columns
                    .iter()
                    .fold(Rational::zero(), |acc, c| acc + &c[i])
                    / &n
            })
            .collect()
    }
}

fn bit(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `u^S_{(H,F)} = 1` iff `S ∩ F = H`.
pub fn marg_vertex(d: &SimplicialComplex, s: &Face) -> Vec<Rational> {
    margin_rows(d)
        .iter()
        .map(|r| bit(s.intersection(&r.f) == r.h))
        .collect()
}

/// `v^S_F = 1` iff `F ⊆ S`.
pub fn corr_vertex(d: &SimplicialComplex, s: &Face) -> Vec<Rational> {
    d.faces().iter().map(|f| bit(f.is_subset(s))).collect()
}

/// `d^S_F` is the parity of `#(F ∩ S)`.
pub fn gcut_vertex(d: &SimplicialComplex, s: &Face) -> Vec<Rational> {
    d.faces().iter().map(|f| bit(f.odd_meet(s))).collect()
}

pub fn marg_vertices(d: &SimplicialComplex) -> Result<VertexMatrix> {
    let rows = margin_rows(d);
    let subsets = d.subsets()?;
    let columns = subsets
        .iter()
        .map(|s| rows.iter().map(|r| bit(s.intersection(&r.f) == r.h)).collect())
        .collect();
    Ok(VertexMatrix {
        rows: rows.into_iter().map(Coord::Margin).collect(),
        subsets,
        columns,
    })
}

pub fn corr_vertices(d: &SimplicialComplex) -> Result<VertexMatrix> {
    face_matrix(d, |f, s| f.is_subset(s))
}

pub fn gcut_vertices(d: &SimplicialComplex) -> Result<VertexMatrix> {
    face_matrix(d, |f, s| f.odd_meet(s))
}

fn face_matrix(d: &SimplicialComplex, entry: impl Fn(&Face, &Face) -> bool) -> Result<VertexMatrix> {
    let faces = d.faces();
    let subsets = d.subsets()?;
    let columns = subsets
        .iter()
        .map(|s| faces.iter().map(|f| bit(entry(f, s))).collect())
        .collect();
    Ok(VertexMatrix {
        rows: faces.into_iter().map(Coord::Face).collect(),
        subsets,
        columns,
    })
}

pub fn vertices(d: &SimplicialComplex, space: Space) -> Result<VertexMatrix> {
    match space {
        Space::Marg => marg_vertices(d),
        Space::Corr => corr_vertices(d),
        Space::Gcut => gcut_vertices(d),
    }
}

/// Cut polytope of a graph: columns are cuts `S | T` with the largest label in `T`,
/// indexed by `S`; rows are the edges.
pub fn cut_vertices(g: &SimplicialComplex) -> Result<VertexMatrix> {
    if let Some(f) = g.facets().iter().find(|f| f.len() > 2) {
        return Err(Error::NotAGraph { size: f.len() });
    }
    let edges: Vec<Face> = g.faces().into_iter().filter(|f| f.len() == 2).collect();
    let ground = g.ground_set();
    let free = &ground[..ground.len().saturating_sub(1)];
    let subsets = crate::complex::subsets_of(free);
    let columns = subsets
        .iter()
        .map(|s| edges.iter().map(|e| bit(e.intersection_len(s) == 1)).collect())
        .collect();
    Ok(VertexMatrix {
        rows: edges.into_iter().map(Coord::Edge).collect(),
        subsets,
        columns,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MembershipMode {
    Closure,
    Relint,
}

impl MembershipMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "closure" => Ok(MembershipMode::Closure),
            "relint" => Ok(MembershipMode::Relint),
            _ => Err(Error::InvalidArgument(format!("unknown membership mode {s:?}"))),
        }
    }
}

/// Tests a point against an H-representation given as equalities plus inequalities.
///
/// In relint mode an inequality that holds with equality on the whole polyhedron
/// is treated as part of the affine hull; every other inequality must be strict.
pub fn membership(
    point: &[Rational],
    equalities: &[LinearInequality],
    inequalities: &[LinearInequality],
    mode: MembershipMode,
) -> Result<bool> {
    for e in equalities {
        if e.evaluate(point)? != e.rhs {
            return Ok(false);
        }
    }
    for q in inequalities {
        if !q.holds(point)? {
            return Ok(false);
        }
    }
    if mode == MembershipMode::Closure {
        return Ok(true);
    }
    let le: Vec<(Vec<Rational>, Rational)> = inequalities
        .iter()
        .map(|q| (q.coeffs.clone(), q.rhs.clone()))
        .collect();
    let eq: Vec<(Vec<Rational>, Rational)> = equalities
        .iter()
        .map(|q| (q.coeffs.clone(), q.rhs.clone()))
        .collect();
    for q in inequalities {
        if q.evaluate(point)? < q.rhs {
            continue;
        }
        let neg: Vec<Rational> = q.coeffs.iter().map(|x| -x).collect();
        match lp::maximize_free(&neg, &le, &eq) {
            LpOutcome::Optimal { value, .. } if value == -q.rhs.clone() => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{d_mn, simplex, SimplicialComplex};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn path_marginal_rows() {
        let d = SimplicialComplex::from_sets(&[&[1, 2], &[2, 3]]);
        let keys: Vec<String> = margin_rows(&d).iter().map(MarginRow::key).collect();
        assert_eq!(keys, ["|1,2", "1|1,2", "2|1,2", "1,2|1,2", "|2,3", "2|2,3", "3|2,3", "2,3|2,3"]);
        let u = marg_vertices(&d).unwrap();
        assert_eq!(u.columns[0], ints(&[1, 0, 0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn one_simplex_marginal() {
        let u = marg_vertices(&simplex(1)).unwrap();
        assert_eq!(u.columns, vec![ints(&[1, 0]), ints(&[0, 1])]);
    }

    #[test]
    fn gcut_parity_column() {
        let d = SimplicialComplex::from_sets(&[&[1, 2], &[2, 3]]);
        let dm = gcut_vertices(&d).unwrap();
        assert_eq!(dm.column_of(&Face::from([1, 3])).unwrap(), ints(&[1, 0, 1, 1, 1]).as_slice());
        assert!(dm.columns[0].iter().all(Zero::is_zero));
        let v = corr_vertices(&d).unwrap();
        assert!(v.columns[7].iter().all(|x| x.is_one()));
    }

    #[test]
    fn inequality_validity() {
        let d22 = gcut_vertices(&d_mn(2, 2)).unwrap();
        let q = LinearInequality::new(ints(&[0, 1, 0, 1, 0, 0, 0, 1]), int(2));
        assert!(q.is_valid(&d22).unwrap());
        let zero = LinearInequality::new(ints(&[0; 8]), int(0));
        assert!(zero.is_valid(&d22).unwrap());
        let g1 = gcut_vertices(&simplex(1)).unwrap();
        let x1 = LinearInequality::new(ints(&[1]), int(0));
        assert_eq!(x1.first_violation(&g1).unwrap(), Some(1));
        assert!(matches!(
            x1.first_violation(&d22),
            Err(Error::AmbientMismatch { expected: 1, found: 8 })
        ));
    }

    #[test]
    fn normalization() {
        let q = LinearInequality::new(vec![int(2), int(-4)], int(6)).normalized();
        assert_eq!(q, LinearInequality::new(ints(&[1, -2]), int(3)));
        let n = LinearInequality::new(ints(&[-2, 4]), int(2)).normalized();
        assert_eq!(n.coeffs, ints(&[-1, 2]));
        let e = LinearInequality::new(ints(&[-2, 4]), int(2)).normalized_equality();
        assert_eq!(e, LinearInequality::new(ints(&[1, -2]), int(-1)));
    }

    #[test]
    fn membership_modes() {
        let q = vec![
            LinearInequality::new(ints(&[1]), int(1)),
            LinearInequality::new(ints(&[-1]), int(0)),
        ];
        let half = vec![Rational::new(1.into(), 2.into())];
        assert!(membership(&half, &[], &q, MembershipMode::Relint).unwrap());
        assert!(!membership(&ints(&[1]), &[], &q, MembershipMode::Relint).unwrap());
        assert!(membership(&ints(&[1]), &[], &q, MembershipMode::Closure).unwrap());
        assert!(!membership(&ints(&[2]), &[], &q, MembershipMode::Closure).unwrap());
    }

    #[test]
    fn implicit_inequalities_count_as_hull() {
        // The segment {x + y = 1, x, y >= 0} written with a pair of opposite inequalities.
        let q = vec![
            LinearInequality::new(ints(&[1, 1]), int(1)),
            LinearInequality::new(ints(&[-1, -1]), int(-1)),
            LinearInequality::new(ints(&[-1, 0]), int(0)),
            LinearInequality::new(ints(&[0, -1]), int(0)),
        ];
        let mid = vec![Rational::new(1.into(), 2.into()); 2];
        assert!(membership(&mid, &[], &q, MembershipMode::Relint).unwrap());
        assert!(!membership(&ints(&[1, 0]), &[], &q, MembershipMode::Relint).unwrap());
    }
}
