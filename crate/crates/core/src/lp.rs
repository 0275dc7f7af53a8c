//! Exact two-phase simplex method over the rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj . x` over the current basis. Returns false when unbounded.
    fn optimize(&mut self, obj: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut rc = obj[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !obj[b].is_zero() && !self.rows[i][j].is_zero() {
                        rc -= &obj[b] * &self.rows[i][j];
                    }
                }
                rc.is_positive()
            });
            let Some(j) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, j),
                None => return false,
            }
        }
    }

    fn solution(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// Maximizes `c . x` subject to `A x = b`, `x >= 0`.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "row count mismatch");
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "column count mismatch");
        let flip = bi.is_negative();
        let mut t: Vec<Rational> = row
            .iter()
            .map(|x| if flip { -x.clone() } else { x.clone() })
            .collect();
        t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        t.push(if flip { -bi.clone() } else { bi.clone() });
        rows.push(t);
    }
    let mut tab = Tableau {
        rows,
        basis: (n..n + m).collect(),
        width,
    };

    let mut phase1 = vec![Rational::zero(); width];
    for x in phase1.iter_mut().skip(n) {
        *x = -Rational::one();
    }
    let all = vec![true; width];
    tab.optimize(&phase1, &all);
    let infeasibility: Rational = tab
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &bv)| bv >= n)
        .map(|(i, _)| tab.rhs(i).clone())
        .fold(Rational::zero(), |acc, v| acc + v);
    if !infeasibility.is_zero() {
        return LpOutcome::Infeasible;
    }

    let mut i = 0;
    while i < tab.rows.len() {
        if tab.basis[i] >= n {
            match (0..n).find(|&j| !tab.rows[i][j].is_zero()) {
                Some(j) => tab.pivot(i, j),
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut obj = c.to_vec();
    obj.extend((0..m).map(|_| Rational::zero()));
    let mut allowed = vec![true; width];
    for x in allowed.iter_mut().skip(n) {
        *x = false;
    }
    if !tab.optimize(&obj, &allowed) {
        return LpOutcome::Unbounded;
    }
    let x = tab.solution(n);
    let value = rational::dot(c, &x);
    LpOutcome::Optimal { value, x }
}

/// Maximizes `c . x` over free `x` subject to `G x <= h` and `E x = f`.
pub fn maximize_free(
    c: &[Rational],
    le: &[(Vec<Rational>, Rational)],
    eq: &[(Vec<Rational>, Rational)],
) -> LpOutcome {
    let n = c.len();
    let s = le.len();
    let cols = 2 * n + s;
    let mut a = Vec::with_capacity(le.len() + eq.len());
    let mut b = Vec::with_capacity(le.len() + eq.len());
    let split = |row: &[Rational]| -> Vec<Rational> {
        row.iter().cloned().chain(row.iter().map(|x| -x.clone())).collect()
    };
    for (k, (g, h)) in le.iter().enumerate() {
        let mut r = split(g);
        r.extend((0..s).map(|t| if t == k { Rational::one() } else { Rational::zero() }));
        a.push(r);
        b.push(h.clone());
    }
    for (e, f) in eq {
        let mut r = split(e);
        r.extend((0..s).map(|_| Rational::zero()));
        a.push(r);
        b.push(f.clone());
    }
    let mut obj = split(c);
    obj.extend((0..s).map(|_| Rational::zero()));
    debug_assert_eq!(obj.len(), cols);
    match maximize(&obj, &a, &b) {
        LpOutcome::Optimal { value, x } => {
            let y = (0..n).map(|i| &x[i] - &x[n + i]).collect();
            LpOutcome::Optimal { value, x: y }
        }
        other => other,
    }
}
