//! Simplicial complexes and the constructors for the families studied here.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Label = u32;

/// Largest ground set for which subsets are enumerated.
pub const MAX_GROUND_SET: usize = 20;

/// A finite set of labels, stored sorted and duplicate-free.
///
/// Faces order graded-lexicographically: by cardinality, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<Label>);

impl Face {
    pub fn new<I: IntoIterator<Item = Label>>(elements: I) -> Self {
        let mut v: Vec<Label> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn elements(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Label) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn intersection_len(&self, other: &Face) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    /// Parity bit of `#(self ∩ other)`.
    pub fn odd_meet(&self, other: &Face) -> bool {
        self.intersection_len(other) % 2 == 1
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&x| other.contains(x)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&x| !other.contains(x)).collect())
    }

    pub fn symmetric_difference(&self, other: &Face) -> Face {
        Face::new(
            self.0
                .iter()
                .filter(|&&x| !other.contains(x))
                .chain(other.0.iter().filter(|&&x| !self.contains(x)))
                .copied(),
        )
    }

    pub fn with(&self, x: Label) -> Face {
        Face::new(self.0.iter().copied().chain([x]))
    }

    pub fn without(&self, x: Label) -> Face {
        Face(self.0.iter().copied().filter(|&y| y != x).collect())
    }

    /// Canonical key: comma-separated ascending labels, `""` for the empty face.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(Label::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_key(s: &str) -> Result<Face> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Face::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Label>()
                    .map_err(|_| Error::Parse(format!("bad face key {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Face::new)
    }

    /// All subsets, graded-lex.
    pub fn subsets(&self) -> Vec<Face> {
        subsets_of(&self.0)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", self.key())
        }
    }
}

impl<const N: usize> From<[Label; N]> for Face {
    fn from(v: [Label; N]) -> Self {
        Face::new(v)
    }
}

/// All subsets of a label list in graded-lex order.
pub fn subsets_of(labels: &[Label]) -> Vec<Face> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let n = sorted.len();
    let mut out: Vec<Face> = (0u64..1 << n)
        .map(|mask| {
            Face(
                (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| sorted[i])
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    ground_set: Vec<Label>,
    facets: Vec<Face>,
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    ground_set: Vec<Label>,
    facets: Vec<Vec<Label>>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = Error;
    fn try_from(raw: RawComplex) -> Result<Self> {
        SimplicialComplex::from_facets(raw.ground_set, raw.facets.into_iter().map(Face::new))
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(c: SimplicialComplex) -> Self {
        RawComplex {
            ground_set: c.ground_set,
            facets: c.facets.into_iter().map(|f| f.0).collect(),
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            write!(f, "[{}]", facet.key())?;
        }
        let ghosts = self.ghost_vertices();
        if !ghosts.is_empty() {
            write!(f, " + ghosts {}", Face::new(ghosts).key())?;
        }
        Ok(())
    }
}

impl SimplicialComplex {
    /// Canonicalizes a generating set: dominated sets are dropped and facets sorted.
    pub fn from_facets<I>(ground_set: Vec<Label>, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut ground = ground_set;
        ground.sort_unstable();
        ground.dedup();
        let mut sets: Vec<Face> = Vec::new();
        for f in facets {
            if let Some(&label) = f.0.iter().find(|x| ground.binary_search(x).is_err()) {
                return Err(Error::InvalidFacet { label });
            }
            sets.push(f);
        }
        sets.sort();
        sets.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for (i, f) in sets.iter().enumerate() {
            let dominated = sets[i + 1..].iter().any(|g| f.is_subset(g));
            if !dominated {
                kept.push(f.clone());
            }
        }
        kept.sort();
        Ok(SimplicialComplex {
            ground_set: ground,
            facets: kept,
        })
    }

    /// Shorthand for a complex on the union of its facets, as in `[12][23]`.
    pub fn from_sets(facets: &[&[Label]]) -> Self {
        let ground: BTreeSet<Label> = facets.iter().flat_map(|f| f.iter().copied()).collect();
        Self::from_facets(
            ground.into_iter().collect(),
            facets.iter().map(|f| Face::new(f.iter().copied())),
        )
        .expect("facets lie in their own union")
    }

    pub fn ground_set(&self) -> &[Label] {
        &self.ground_set
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn ground_face(&self) -> Face {
        Face(self.ground_set.clone())
    }

    /// Nonempty faces in graded-lex order.
    pub fn faces(&self) -> Vec<Face> {
        let mut all: BTreeSet<Face> = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets().into_iter().filter(|s| !s.is_empty()));
        }
        all.into_iter().collect()
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    pub fn contains_face(&self, s: &Face) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Ground-set labels lying in no facet.
    pub fn ghost_vertices(&self) -> Vec<Label> {
        self.ground_set
            .iter()
            .copied()
            .filter(|&x| !self.facets.iter().any(|f| f.contains(x)))
            .collect()
    }

    /// The same complex on the union of its facets.
    pub fn without_ghosts(&self) -> SimplicialComplex {
        let used: BTreeSet<Label> = self.facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        SimplicialComplex {
            ground_set: used.into_iter().collect(),
            facets: self.facets.clone(),
        }
    }

    /// All subsets of the ground set in graded-lex order (vertex indices).
    pub fn subsets(&self) -> Result<Vec<Face>> {
        if self.ground_set.len() > MAX_GROUND_SET {
            return Err(Error::too_large(
                "ground set size",
                MAX_GROUND_SET,
                self.ground_set.len(),
            ));
        }
        Ok(subsets_of(&self.ground_set))
    }

    /// Number of facets containing `t`.
    pub fn facet_count_containing(&self, t: &Face) -> usize {
        self.facets.iter().filter(|f| t.is_subset(f)).count()
    }

    pub fn is_graph(&self) -> bool {
        self.facets.iter().all(|f| f.len() <= 2)
    }

    /// Connected components as subcomplexes, each on its own vertex set.
    pub fn components(&self) -> Vec<SimplicialComplex> {
        let facets: Vec<&Face> = self.facets.iter().filter(|f| !f.is_empty()).collect();
        let mut parent: Vec<usize> = (0..facets.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                if facets[i].intersection_len(facets[j]) > 0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Face>> = BTreeMap::new();
        for (i, f) in facets.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push((*f).clone());
        }
        let mut comps: Vec<SimplicialComplex> = groups
            .into_values()
            .map(|fs| {
                let ground: BTreeSet<Label> = fs.iter().flat_map(|f| f.0.iter().copied()).collect();
                SimplicialComplex::from_facets(ground.into_iter().collect(), fs)
                    .expect("component facets lie in their union")
            })
            .collect();
        comps.sort_by(|a, b| a.ground_set.cmp(&b.ground_set));
        comps
    }
}

fn range(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

/// The full simplex `2^[n]`.
pub fn simplex(n: usize) -> SimplicialComplex {
    simplex_on(&range(n))
}

pub fn simplex_on(labels: &[Label]) -> SimplicialComplex {
    SimplicialComplex::from_facets(labels.to_vec(), [Face::new(labels.iter().copied())])
        .expect("facet equals ground set")
}

/// The boundary `2^[n] \ {[n]}`.
pub fn boundary(n: usize) -> SimplicialComplex {
    turtle(n, n)
}

/// Turtle complex with facets `[n] \ {i}` for `i = 1..=k`.
pub fn turtle(n: usize, k: usize) -> SimplicialComplex {
    assert!(1 <= k && k <= n, "turtle requires 1 <= k <= n");
    let ground = range(n);
    let all = Face::new(ground.clone());
    let facets = (1..=k as Label).map(|i| all.without(i));
    SimplicialComplex::from_facets(ground, facets).expect("facets lie in [n]")
}

/// The common intersection `[n] \ [k]` of the turtle facets.
pub fn turtle_core(n: usize, k: usize) -> Face {
    Face::new((k as Label + 1)..=(n as Label))
}

pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    if let Some(&label) = a.ground_set.iter().find(|x| b.ground_set.contains(x)) {
        return Err(Error::GroundSetClash { label });
    }
    let ground = a.ground_set.iter().chain(&b.ground_set).copied().collect();
    SimplicialComplex::from_facets(ground, a.facets.iter().chain(&b.facets).cloned())
}

/// `2^[m] ⊔ 2^[n]` on labels `1..=m` and `m+1..=m+n`.
pub fn disjoint_simplices(m: usize, n: usize) -> SimplicialComplex {
    let left = simplex(m);
    let right = simplex_on(&((m as Label + 1)..=(m + n) as Label).collect::<Vec<_>>());
    disjoint_union(&left, &right).expect("label ranges are disjoint")
}

pub fn cone(d: &SimplicialComplex, apex: Label) -> Result<SimplicialComplex> {
    if d.ground_set.contains(&apex) {
        return Err(Error::GroundSetClash { label: apex });
    }
    let mut ground = d.ground_set.clone();
    ground.push(apex);
    SimplicialComplex::from_facets(ground, d.facets.iter().map(|f| f.with(apex)))
}

pub fn k_cone(d: &SimplicialComplex, apexes: &[Label]) -> Result<SimplicialComplex> {
    let mut out = d.clone();
    for &l in apexes {
        out = cone(&out, l)?;
    }
    Ok(out)
}

/// Faces `S` of the ground set whose complement is not a face.
pub fn alexander_dual(d: &SimplicialComplex) -> Result<SimplicialComplex> {
    let ground = d.ground_face();
    let faces: Vec<Face> = d
        .subsets()?
        .into_iter()
        .filter(|s| !d.contains_face(&ground.difference(s)))
        .collect();
    SimplicialComplex::from_facets(d.ground_set.clone(), faces)
}

/// `D_{m,n} = { S ⊔ T : S ⊊ [m], T ⊊ [n] }` with `[n]` relabeled to `m+1..=m+n`.
pub fn d_mn(m: usize, n: usize) -> SimplicialComplex {
    let left = Face::new(range(m));
    let right = Face::new((m as Label + 1)..=(m + n) as Label);
    let mut facets = Vec::new();
    for &x in left.elements() {
        for &y in right.elements() {
            facets.push(left.without(x).union(&right.without(y)));
        }
    }
    SimplicialComplex::from_facets(range(m + n), facets).expect("facets lie in [m+n]")
}

/// Facets `{ground} ∪ { F ∪ {ℓ} }`.
pub fn lawrence_lifting(d: &SimplicialComplex, apex: Label) -> Result<SimplicialComplex> {
    if d.ground_set.contains(&apex) {
        return Err(Error::GroundSetClash { label: apex });
    }
    let mut ground = d.ground_set.clone();
    ground.push(apex);
    let facets = std::iter::once(d.ground_face()).chain(d.facets.iter().map(|f| f.with(apex)));
    SimplicialComplex::from_facets(ground, facets)
}

/// Graph with a new apex `max + 1` joined to every vertex.
pub fn suspension(g: &SimplicialComplex) -> Result<SimplicialComplex> {
    if let Some(f) = g.facets.iter().find(|f| f.len() > 2) {
        return Err(Error::NotAGraph { size: f.len() });
    }
    let apex = g.ground_set.iter().max().map_or(1, |m| m + 1);
    let mut ground = g.ground_set.clone();
    ground.push(apex);
    let facets = g
        .facets
        .iter()
        .filter(|f| f.len() == 2)
        .cloned()
        .chain(g.ground_set.iter().map(|&v| Face::new([v, apex])));
    SimplicialComplex::from_facets(ground, facets)
}

/// Renames labels through `map`; labels absent from `map` are kept.
pub fn relabel(d: &SimplicialComplex, map: &BTreeMap<Label, Label>) -> Result<SimplicialComplex> {
    let f = |x: &Label| *map.get(x).unwrap_or(x);
    let ground: Vec<Label> = d.ground_set.iter().map(f).collect();
    let distinct: BTreeSet<Label> = ground.iter().copied().collect();
    if distinct.len() != ground.len() {
        return Err(Error::InvalidArgument("relabeling is not injective".into()));
    }
    SimplicialComplex::from_facets(
        ground,
        d.facets.iter().map(|fc| Face::new(fc.0.iter().map(f))),
    )
}

/// All complexes on ground set `[n]` whose facets form a nonempty antichain of
/// nonempty sets, plus `{∅}`. Sorted by facet list.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let ground = range(n);
    let sets: Vec<Face> = subsets_of(&ground).into_iter().filter(|s| !s.is_empty()).collect();
    let mut out = vec![SimplicialComplex::from_facets(ground.clone(), [Face::empty()]).unwrap()];
    fn extend(
        sets: &[Face],
        start: usize,
        chosen: &mut Vec<Face>,
        ground: &[Label],
        out: &mut Vec<SimplicialComplex>,
    ) {
        for i in start..sets.len() {
            let s = &sets[i];
            if chosen.iter().any(|c| c.is_subset(s) || s.is_subset(c)) {
                continue;
            }
            chosen.push(s.clone());
            out.push(SimplicialComplex::from_facets(ground.to_vec(), chosen.clone()).unwrap());
            extend(sets, i + 1, chosen, ground, out);
            chosen.pop();
        }
    }
    extend(&sets, 0, &mut Vec::new(), &ground, &mut out);
    out
}
