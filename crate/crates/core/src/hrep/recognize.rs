//! Structural recognition of the complex families with closed-form descriptions.
//!
//! Recognition works directly on labels, so no permutation search is needed:
//! each family is characterized by facet sizes and complement patterns.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Face, Label, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// No nonempty faces.
    Empty,
    /// A single facet.
    Simplex(Vec<Label>),
    /// Facets `ground \ {i}` for `i` in `removed`; the boundary when `removed == ground`.
    Turtle { ground: Vec<Label>, removed: Vec<Label> },
    /// More than one connected component.
    DisjointUnion(Vec<SimplicialComplex>),
    /// `D_{m,n}` with `m, n >= 2` on the given sides.
    AlexanderDual { left: Vec<Label>, right: Vec<Label> },
    /// Every facet contains `apex`.
    Cone { base: SimplicialComplex, apex: Label },
    Unknown,
}

/// Classifies a complex after dropping ghost vertices.
pub fn recognize(d: &SimplicialComplex) -> Shape {
    let d = d.without_ghosts();
    let facets: Vec<&Face> = d.facets().iter().filter(|f| !f.is_empty()).collect();
    if facets.is_empty() {
        return Shape::Empty;
    }
    if facets.len() == 1 {
        return Shape::Simplex(facets[0].elements().to_vec());
    }
    let comps = d.components();
    if comps.len() > 1 {
        return Shape::DisjointUnion(comps);
    }
    let ground = d.ground_face();
    let n = ground.len();
    if facets.iter().all(|f| f.len() + 1 == n) {
        let removed = facets
            .iter()
            .map(|f| ground.difference(f).elements()[0])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        return Shape::Turtle {
            ground: ground.elements().to_vec(),
            removed,
        };
    }
    if let Some((left, right)) = alexander_dual_sides(&d) {
        return Shape::AlexanderDual { left, right };
    }
    if let Some(apex) = common_apex(&d) {
        let base = SimplicialComplex::from_facets(
            d.ground_set().iter().copied().filter(|&x| x != apex).collect(),
            d.facets().iter().map(|f| f.without(apex)),
        )
        .expect("link lies in the remaining labels");
        return Shape::Cone { base, apex };
    }
    Shape::Unknown
}

/// The smallest label lying in every facet.
pub fn common_apex(d: &SimplicialComplex) -> Option<Label> {
    let mut it = d.facets().iter();
    let first = it.next()?;
    let common = it.fold(first.clone(), |acc, f| acc.intersection(f));
    common.elements().first().copied()
}

/// Sides `(X, Y)` when the facets are exactly `(X \ {x}) ∪ (Y \ {y})`, `|X|, |Y| >= 2`.
pub fn alexander_dual_sides(d: &SimplicialComplex) -> Option<(Vec<Label>, Vec<Label>)> {
    let d = d.without_ghosts();
    let ground = d.ground_face();
    let n = ground.len();
    if d.facets().iter().any(|f| f.len() + 2 != n) {
        return None;
    }
    let mut adj: BTreeMap<Label, BTreeSet<Label>> = BTreeMap::new();
    for f in d.facets() {
        let c = ground.difference(f);
        let (x, y) = (c.elements()[0], c.elements()[1]);
        adj.entry(x).or_default().insert(y);
        adj.entry(y).or_default().insert(x);
    }
    if adj.len() != n {
        return None;
    }
    // Two-colour from the smallest label; complete bipartite means every
    // vertex is adjacent to exactly the other side.
    let start = ground.elements()[0];
    let left: BTreeSet<Label> = ground
        .elements()
        .iter()
        .copied()
        .filter(|&v| v == start || !adj[&start].contains(&v))
        .collect();
    let right: BTreeSet<Label> = adj[&start].clone();
    if left.len() + right.len() != n || left.len() < 2 || right.len() < 2 {
        return None;
    }
    for &v in &left {
        if adj[&v] != right {
            return None;
        }
    }
    for &v in &right {
        if adj[&v] != left {
            return None;
        }
    }
    Some((left.into_iter().collect(), right.into_iter().collect()))
}

/// `(ground facet, base, apex)` when the complex is a Lawrence lifting:
/// one facet misses exactly the apex and every other facet contains it.
pub fn lawrence_base(d: &SimplicialComplex) -> Option<(SimplicialComplex, Label)> {
    let d = d.without_ghosts();
    let ground = d.ground_face();
    for big in d.facets() {
        if big.len() + 1 != ground.len() {
            continue;
        }
        let apex = ground.difference(big).elements()[0];
        let others: Vec<&Face> = d.facets().iter().filter(|f| *f != big).collect();
        if others.is_empty() || !others.iter().all(|f| f.contains(apex)) {
            continue;
        }
        let base = SimplicialComplex::from_facets(
            big.elements().to_vec(),
            others.iter().map(|f| f.without(apex)),
        )
        .ok()?;
        if base.ghost_vertices().is_empty() {
            return Some((base, apex));
        }
    }
    None
}
