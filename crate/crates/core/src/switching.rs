//! The switching operation on generalized cut inequalities, and its transport
//! to the correlation and marginal polytopes.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::polytope::{canonical_set, gcut_vertex, margin_rows, LinearInequality};
use crate::rational::{self, Rational};
use crate::transform::{omega, phi, pi, psi, u_empty};

fn check_switch_set(i: &Face, d: &SimplicialComplex) -> Result<()> {
    match i.elements().iter().find(|x| !d.ground_set().contains(x)) {
        Some(&label) => Err(Error::InvalidSwitchSet { label }),
        None => Ok(()),
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::AmbientMismatch { expected, found })
    }
}

/// `a^{(I)}_F = (-1)^{#(I ∩ F)} a_F` with right-hand side `a_0 - a · d^I`.
pub fn switch_gcut(q: &LinearInequality, i: &Face, d: &SimplicialComplex) -> Result<LinearInequality> {
    check_switch_set(i, d)?;
    let faces = d.faces();
    check_dim(faces.len(), q.coeffs.len())?;
    Ok(switch_raw(q, i, &faces))
}

fn switch_raw(q: &LinearInequality, i: &Face, faces: &[Face]) -> LinearInequality {
    let mut rhs = q.rhs.clone();
    let coeffs = faces
        .iter()
        .zip(&q.coeffs)
        .map(|(f, a)| {
            if f.odd_meet(i) {
                rhs -= a;
                -a.clone()
            } else {
                a.clone()
            }
        })
        .collect();
    LinearInequality { coeffs, rhs }
}

/// All switches of `q` by the given sets, normalized and deduplicated.
pub fn switch_family(
    q: &LinearInequality,
    sets: &[Face],
    d: &SimplicialComplex,
) -> Result<Vec<LinearInequality>> {
    let faces = d.faces();
    check_dim(faces.len(), q.coeffs.len())?;
    let mut out = Vec::with_capacity(sets.len());
    for i in sets {
        check_switch_set(i, d)?;
        out.push(switch_raw(q, i, &faces));
    }
    Ok(canonical_set(&out))
}

/// `q^{[I]} = (q Ψ)^{(I)} Φ` with right-hand side `q_0 - (q Ψ) · d^I`.
pub fn switch_corr(q: &LinearInequality, i: &Face, d: &SimplicialComplex) -> Result<LinearInequality> {
    check_switch_set(i, d)?;
    check_dim(d.num_faces(), q.coeffs.len())?;
    let a = LinearInequality::new(psi(d).pull_back(&q.coeffs), q.rhs.clone());
    let s = switch_gcut(&a, i, d)?;
    Ok(LinearInequality::new(phi(d).pull_back(&s.coeffs), s.rhs))
}

/// Oblique projection `r ↦ r Π Ω` onto the row space of `Ω`.
///
/// On the affine hull of the marginal polytope `r Π Ω · z = r · z - r · u^∅`, so the
/// projected functional cuts out the same face after shifting the right-hand side.
pub fn project_to_rowspace(r: &[Rational], d: &SimplicialComplex) -> Result<Vec<Rational>> {
    check_dim(margin_rows(d).len(), r.len())?;
    Ok(omega(d).pull_back(&pi(d).pull_back(r)))
}

/// Projects the functional and shifts the right-hand side by `r · u^∅`.
pub fn project_inequality(q: &LinearInequality, d: &SimplicialComplex) -> Result<LinearInequality> {
    let coeffs = project_to_rowspace(&q.coeffs, d)?;
    let rhs = &q.rhs - rational::dot(&q.coeffs, &u_empty(d));
    Ok(LinearInequality::new(coeffs, rhs))
}

pub fn in_marg_rowspace(r: &[Rational], d: &SimplicialComplex) -> Result<bool> {
    Ok(project_to_rowspace(r, d)? == r)
}

/// `r^{<I>} = (r Π Ψ)^{(I)} Φ Ω` with right-hand side `r_0 - (r Π Ψ) · d^I`.
pub fn switch_marg(r: &LinearInequality, i: &Face, d: &SimplicialComplex) -> Result<LinearInequality> {
    check_switch_set(i, d)?;
    if !in_marg_rowspace(&r.coeffs, d)? {
        return Err(Error::NotInRowSpace);
    }
    let a = psi(d).pull_back(&pi(d).pull_back(&r.coeffs));
    let di = gcut_vertex(d, i);
    let rhs = &r.rhs - rational::dot(&a, &di);
    let s = switch_gcut(&LinearInequality::new(a, r.rhs.clone()), i, d)?;
    debug_assert_eq!(s.rhs, rhs);
    let coeffs = omega(d).pull_back(&phi(d).pull_back(&s.coeffs));
    Ok(LinearInequality::new(coeffs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{d_mn, simplex, subsets_of};
    use crate::polytope::{corr_vertices, marg_vertices};
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn worked_switch_on_d22() {
        let d = d_mn(2, 2);
        let q = LinearInequality::new(ints(&[0, 1, 0, 1, 0, 0, 0, 1]), int(2));
        let s = switch_gcut(&q, &Face::from([1, 2, 3, 4]), &d).unwrap();
        assert_eq!(s, LinearInequality::new(ints(&[0, -1, 0, -1, 0, 0, 0, 1]), int(0)));
        assert_eq!(switch_gcut(&q, &Face::empty(), &d).unwrap(), q);
    }

    #[test]
    fn edge_sum_switch() {
        let d = simplex(2);
        let q = LinearInequality::new(ints(&[1, 1, 1]), int(2));
        let s = switch_gcut(&q, &Face::from([1]), &d).unwrap();
        assert_eq!(s, LinearInequality::new(ints(&[-1, 1, -1]), int(0)));
        assert_eq!(switch_family(&q, &subsets_of(&[1, 2]), &d).unwrap().len(), 4);
        assert_eq!(switch_family(&q, &[Face::empty()], &d).unwrap().len(), 1);
    }

    #[test]
    fn bad_switch_set() {
        let q = LinearInequality::new(ints(&[1]), int(1));
        assert_eq!(
            switch_gcut(&q, &Face::from([5]), &simplex(1)).unwrap_err(),
            Error::InvalidSwitchSet { label: 5 }
        );
    }

    #[test]
    fn corr_switch_is_involution_and_valid() {
        let d = crate::complex::SimplicialComplex::from_sets(&[&[1, 2], &[2, 3]]);
        let v = corr_vertices(&d).unwrap();
        let q = LinearInequality::new(ints(&[0, 0, 0, -1, 0]), int(0));
        let s = switch_corr(&q, &Face::from([1]), &d).unwrap();
        assert!(s.is_valid(&v).unwrap());
        assert_eq!(s.tight_columns(&v).unwrap().len(), 6);
        assert_eq!(switch_corr(&s, &Face::from([1]), &d).unwrap(), q);
    }

    #[test]
    fn marg_switch_needs_rowspace() {
        let d = crate::complex::SimplicialComplex::from_sets(&[&[1, 2], &[2, 3]]);
        let u = marg_vertices(&d).unwrap();
        // -z_(2,12) <= 0
        let mut r = ints(&[0; 8]);
        r[2] = int(-1);
        let q = LinearInequality::new(r, int(0));
        assert_eq!(switch_marg(&q, &Face::from([2]), &d).unwrap_err(), Error::NotInRowSpace);
        let p = project_inequality(&q, &d).unwrap();
        assert_eq!(p.tight_columns(&u).unwrap(), q.tight_columns(&u).unwrap());
        let s = switch_marg(&p, &Face::from([2]), &d).unwrap();
        assert!(s.is_valid(&u).unwrap());
        assert!(s.tight_columns(&u).unwrap().len() >= 5);
        assert_eq!(switch_marg(&s, &Face::from([2]), &d).unwrap(), p);
    }
}
