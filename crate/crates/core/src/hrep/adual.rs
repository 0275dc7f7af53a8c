//! Facets of the generalized cut polytope of `D_{m,n}` from directed cycles of
//! the parity-oriented complete bipartite digraph `G_2^{m,n}`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::SparseInequality;
use crate::complex::{subsets_of, Face, Label};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Default cap on the number of enumerated cycles.
pub const MAX_CYCLES: usize = 200_000;

/// `K_{2^m, 2^n}` on subsets `A` of the left labels and `B` of the right labels;
/// the edge `A ⊔ B` points `A → B` when `#A + #B` is even and `B → A` otherwise.
#[derive(Clone, Debug)]
pub struct BipartiteDigraph {
    pub left_labels: Vec<Label>,
    pub right_labels: Vec<Label>,
    pub left: Vec<Face>,
    pub right: Vec<Face>,
}

/// A directed cycle as a node sequence `A_1, B_1, A_2, B_2, ...` starting at its
/// smallest left node. Node indices address `left` then `right`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cycle {
    pub nodes: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// `G_2^{m,n}` with left labels `1..=m` and right labels `m+1..=m+n`.
pub fn build_g2(m: usize, n: usize) -> BipartiteDigraph {
    let left: Vec<Label> = (1..=m as Label).collect();
    let right: Vec<Label> = (m as Label + 1..=(m + n) as Label).collect();
    BipartiteDigraph::new(&left, &right)
}

impl BipartiteDigraph {
    pub fn new(left_labels: &[Label], right_labels: &[Label]) -> Self {
        BipartiteDigraph {
            left_labels: left_labels.to_vec(),
            right_labels: right_labels.to_vec(),
            left: subsets_of(left_labels),
            right: subsets_of(right_labels),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_left(&self, v: usize) -> bool {
        v < self.left.len()
    }

    pub fn node(&self, v: usize) -> &Face {
        if self.is_left(v) {
            &self.left[v]
        } else {
            &self.right[v - self.left.len()]
        }
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        if self.is_left(from) == self.is_left(to) {
            return false;
        }
        let even = (self.node(from).len() + self.node(to).len()) % 2 == 0;
        if self.is_left(from) {
            even
        } else {
            !even
        }
    }

    fn successors(&self, v: usize) -> Vec<usize> {
        let range = if self.is_left(v) {
            self.left.len()..self.num_nodes()
        } else {
            0..self.left.len()
        };
        range.filter(|&w| self.has_arc(v, w)).collect()
    }

    /// The edge label `A ⊔ B` between a left and a right node.
    pub fn edge(&self, a: usize, b: usize) -> Face {
        self.node(a).union(self.node(b))
    }

    /// Edge labels of a cycle, in traversal order.
    pub fn cycle_edges(&self, c: &Cycle) -> Vec<Face> {
        let k = c.nodes.len();
        (0..k)
            .map(|i| self.edge(c.nodes[i], c.nodes[(i + 1) % k]))
            .collect()
    }

    /// Every directed cycle once, sorted by node sequence.
    pub fn cycles(&self, max_cycles: usize) -> Result<Vec<Cycle>> {
        let succ: Vec<Vec<usize>> = (0..self.num_nodes()).map(|v| self.successors(v)).collect();
        let mut out = Vec::new();
        for s in 0..self.left.len() {
            let mut path = vec![s];
            let mut on_path = vec![false; self.num_nodes()];
            on_path[s] = true;
            let mut stack = vec![0usize];
            while let Some(top) = stack.last_mut() {
                let v = *path.last().expect("path tracks stack");
                if *top >= succ[v].len() {
                    stack.pop();
                    on_path[v] = false;
                    path.pop();
                    continue;
                }
                let w = succ[v][*top];
                *top += 1;
                if w == s {
                    out.push(Cycle { nodes: path.clone() });
                    if out.len() > max_cycles {
                        return Err(Error::too_large("directed cycles", max_cycles, out.len()));
                    }
                } else if w > s && !on_path[w] {
                    on_path[w] = true;
                    path.push(w);
                    stack.push(0);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Recursive decomposition of a directed cycle into length-4 pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingTree {
    /// A 4-cycle `A → B → A' → B' → A`, described by `O = A △ A'`, `U = B △ B'`
    /// and the switching set `I = A ⊔ B` (empty when the cycle uses the `∅` edge).
    Base { o: Face, u: Face, switch: Face },
    /// `C` obtained by gluing `C_1` along `A_1 ⊔ B_1` and `C_2` along `A_2 ⊔ B_2`.
    Glued {
        a1: Face,
        b1: Face,
        a2: Face,
        b2: Face,
        first: Box<GluingTree>,
        second: Box<GluingTree>,
    },
}

impl GluingTree {
    pub fn depth(&self) -> usize {
        match self {
            GluingTree::Base { .. } => 0,
            GluingTree::Glued { first, second, .. } => 1 + first.depth().max(second.depth()),
        }
    }
}

/// Which left node to un-glue at.
#[derive(Clone, Copy, Debug)]
pub enum PeelChoice {
    /// The smallest odd left node (deterministic default).
    LeastOdd,
    /// The `k`-th admissible position, wrapping around.
    Nth(usize),
}

/// Positions `i` at which `C` splits as a glued cycle with `A_1 = nodes[i]`.
///
/// The four gluing nodes share the parity of `A_1`; requiring it odd keeps
/// them nonempty.
pub fn admissible_peels(g: &BipartiteDigraph, c: &Cycle) -> Vec<usize> {
    let k = c.len();
    if k < 8 {
        return Vec::new();
    }
    (0..k)
        .filter(|&i| {
            let at = |d: isize| c.nodes[((i as isize + d).rem_euclid(k as isize)) as usize];
            let (a1, b1, a2, b2) = (at(0), at(-3), at(-4), at(1));
            g.is_left(a1)
                && [a1, b1, a2, b2].iter().all(|&v| g.node(v).len() % 2 == 1)
        })
        .collect()
}

pub fn decompose(g: &BipartiteDigraph, c: &Cycle, choice: PeelChoice) -> Result<GluingTree> {
    let k = c.len();
    if k % 4 != 0 || k < 4 {
        return Err(Error::Internal(format!("cycle of length {k} is not a multiple of 4")));
    }
    if k == 4 {
        let [a, b, a2, b2] = [c.nodes[0], c.nodes[1], c.nodes[2], c.nodes[3]];
        let uses_empty = [(a, b), (a2, b), (a2, b2), (a, b2)]
            .iter()
            .any(|&(x, y)| g.edge(x, y).is_empty());
        return Ok(GluingTree::Base {
            o: g.node(a).symmetric_difference(g.node(a2)),
            u: g.node(b).symmetric_difference(g.node(b2)),
            switch: if uses_empty { Face::empty() } else { g.edge(a, b) },
        });
    }
    let peels = admissible_peels(g, c);
    if peels.is_empty() {
        return Err(Error::Internal("no admissible gluing decomposition".into()));
    }
    let i = match choice {
        PeelChoice::LeastOdd => *peels
            .iter()
            .min_by_key(|&&i| (g.node(c.nodes[i]).clone(), i))
            .expect("nonempty"),
        PeelChoice::Nth(t) => peels[t % peels.len()],
    };
    let at = |d: isize| c.nodes[((i as isize + d).rem_euclid(k as isize)) as usize];
    let (a1, b1, ap, bp, a2, b2) = (at(0), at(-3), at(-2), at(-1), at(-4), at(1));
    let first = Cycle {
        nodes: vec![a1, b1, ap, bp],
    };
    let mut rest = vec![a2];
    for d in 1..=(k as isize - 5) {
        rest.push(at(d));
    }
    let second = Cycle { nodes: rest };
    Ok(GluingTree::Glued {
        a1: g.node(a1).clone(),
        b1: g.node(b1).clone(),
        a2: g.node(a2).clone(),
        b2: g.node(b2).clone(),
        first: Box::new(decompose(g, &first, choice)?),
        second: Box::new(decompose(g, &second, choice)?),
    })
}

/// Nonempty faces `A ⊔ B` of `D_{m,n}`.
pub fn adual_faces(left: &[Label], right: &[Label]) -> Vec<Face> {
    let l = Face::new(left.iter().copied());
    let r = Face::new(right.iter().copied());
    let mut out: Vec<Face> = Vec::new();
    for a in subsets_of(left) {
        if a == l {
            continue;
        }
        for b in subsets_of(right) {
            if b == r {
                continue;
            }
            let s = a.union(&b);
            if !s.is_empty() {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// `Σ_{S ∈ Ev(O,U)} x_S <= 2^{m+n-3}`.
pub fn ev_inequality(faces: &[Face], o: &Face, u: &Face, m: usize, n: usize) -> SparseInequality {
    let mut q = SparseInequality::new(rational::pow2(m as i64 + n as i64 - 3));
    for s in faces {
        if !s.odd_meet(o) && !s.odd_meet(u) {
            q.coeffs.insert(s.clone(), Rational::one());
        }
    }
    q
}

/// The gluing functional `a` for nodes `A_1, B_1, A_2, B_2`.
pub fn gluing_functional(faces: &[Face], a1: &Face, b1: &Face, a2: &Face, b2: &Face) -> SparseInequality {
    let mut q = SparseInequality::new(Rational::zero());
    for s in faces {
        let (s1, t1, s2, t2) = (s.odd_meet(a1), s.odd_meet(b1), s.odd_meet(a2), s.odd_meet(b2));
        let v = match (s1, t1, s2, t2) {
            (true, false, false, true) | (false, true, true, false) => 1,
            (true, true, false, false) | (false, false, true, true) => -1,
            _ => continue,
        };
        q.coeffs.insert(s.clone(), rational::int(v));
    }
    q
}

/// The facet inequality encoded by a gluing tree.
pub fn tree_inequality(tree: &GluingTree, faces: &[Face], m: usize, n: usize) -> SparseInequality {
    match tree {
        GluingTree::Base { o, u, switch } => ev_inequality(faces, o, u, m, n).switched(switch),
        GluingTree::Glued {
            a1,
            b1,
            a2,
            b2,
            first,
            second,
        } => {
            let q1 = tree_inequality(first, faces, m, n);
            let q2 = tree_inequality(second, faces, m, n);
            let a = gluing_functional(faces, a1, b1, a2, b2);
            q1.plus(&q2).plus(&a)
        }
    }
}

/// One facet inequality per directed cycle of `G_2^{m,n}`, in cycle order,
/// each checked against its co-facet.
pub fn adual_system(
    left: &[Label],
    right: &[Label],
    max_cycles: usize,
) -> Result<Vec<(Cycle, SparseInequality)>> {
    let (m, n) = (left.len(), right.len());
    let faces = adual_faces(left, right);
    if faces.is_empty() {
        return Ok(Vec::new());
    }
    let g = BipartiteDigraph::new(left, right);
    let all: Vec<Face> = subsets_of(&[left, right].concat());
    let mut out = Vec::new();
    for c in g.cycles(max_cycles)? {
        let tree = decompose(&g, &c, PeelChoice::LeastOdd)?;
        let q = tree_inequality(&tree, &faces, m, n);
        let cofacet: BTreeSet<Face> = g.cycle_edges(&c).into_iter().collect();
        let drop = rational::pow2(m as i64 + n as i64 - 3);
        for s in &all {
            let v = q.evaluate_at_vertex(s);
            let expected = if cofacet.contains(s) { &q.rhs - &drop } else { q.rhs.clone() };
            if v != expected {
                return Err(Error::Internal(format!(
                    "gluing inequality disagrees with its cycle at vertex {}",
                    s.key()
                )));
            }
        }
        out.push((c, q));
    }
    Ok(out)
}
