//! Test-only helpers, including a slow facet oracle that shares no code with
//! the library hull: it enumerates hyperplanes through affinely independent
//! subsets of the points using fraction-free integer elimination.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gcut::rational::{self, Rational};
use gcut::{LinearInequality, VertexMatrix};
use num_traits::ToPrimitive;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Integer kernel basis of `rows` (each of length `n`), by fraction-free reduction.
pub fn int_kernel(rows: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i == r || a[i][c] == 0 {
                continue;
            }
            let (x, y) = (a[r][c], a[i][c]);
            for j in 0..n {
                a[i][j] = a[i][j] * x - a[r][j] * y;
            }
            primitive(&mut a[i]);
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let l = pivots
                .iter()
                .enumerate()
                .fold(1i128, |l, (k, &p)| l / gcd(l, a[k][p]) * a[k][p].abs());
            let mut v = vec![0i128; n];
            v[f] = l;
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -a[k][f] * (l / a[k][p]);
            }
            primitive(&mut v);
            v
        })
        .collect()
}

pub fn rank(rows: &[Vec<i128>], n: usize) -> usize {
    n - int_kernel(rows, n).len()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Index sets of the input points lying on each facet, found by brute force.
pub fn slow_tight_sets(points: &[Vec<i64>]) -> BTreeSet<Vec<usize>> {
    let n = points[0].len();
    let p: Vec<Vec<i128>> = points.iter().map(|x| x.iter().map(|&v| v as i128).collect()).collect();
    let diffs = |idx: &[usize]| -> Vec<Vec<i128>> {
        idx[1..]
            .iter()
            .map(|&i| p[i].iter().zip(&p[idx[0]]).map(|(a, b)| a - b).collect())
            .collect()
    };
    let all: Vec<usize> = (0..p.len()).collect();
    let dim = rank(&diffs(&all), n);
    let mut out = BTreeSet::new();
    if dim == 0 {
        return out;
    }
    let mut combo: Vec<usize> = (0..dim).collect();
    loop {
        let d = diffs(&combo);
        if rank(&d, n) == dim - 1 {
            let base = &p[combo[0]];
            let a = int_kernel(&d, n)
                .into_iter()
                .find(|a| p.iter().any(|x| dot(a, x) != dot(a, base)));
            if let Some(a) = a {
                let c = dot(&a, base);
                let vals: Vec<i128> = p.iter().map(|x| dot(&a, x)).collect();
                let below = vals.iter().all(|&v| v <= c);
                let above = vals.iter().all(|&v| v >= c);
                if below || above {
                    let tight: Vec<usize> = (0..p.len()).filter(|&i| vals[i] == c).collect();
                    out.insert(tight);
                }
            }
        }
        if !next_combination(&mut combo, p.len()) {
            break;
        }
    }
    out
}

/// Facets of a full-dimensional point set as primitive `(a, b)` with `a · x <= b`.
pub fn slow_facets(points: &[Vec<i64>]) -> BTreeSet<(Vec<i64>, i64)> {
    let n = points[0].len();
    let p: Vec<Vec<i128>> = points.iter().map(|x| x.iter().map(|&v| v as i128).collect()).collect();
    let mut out = BTreeSet::new();
    for t in slow_tight_sets(points) {
        let d: Vec<Vec<i128>> = t[1..]
            .iter()
            .map(|&i| p[i].iter().zip(&p[t[0]]).map(|(a, b)| a - b).collect())
            .collect();
        let k = int_kernel(&d, n);
        assert_eq!(k.len(), 1, "full-dimensional input expected");
        let mut a = k[0].clone();
        let c = dot(&a, &p[t[0]]);
        let mut c = c;
        if p.iter().any(|x| dot(&a, x) > c) {
            a.iter_mut().for_each(|x| *x = -*x);
            c = -c;
        }
        out.insert((a.iter().map(|&x| x as i64).collect(), c as i64));
    }
    out
}

pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn to_i64(points: &[Vec<Rational>]) -> Vec<Vec<i64>> {
    points
        .iter()
        .map(|p| p.iter().map(|x| x.to_integer().to_i64().expect("small")).collect())
        .collect()
}

pub fn to_rational(points: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    points
        .iter()
        .map(|p| p.iter().map(|&x| rational::int(x)).collect())
        .collect()
}

/// Tight input indices of each inequality.
pub fn tight_sets(ineqs: &[LinearInequality], points: &[Vec<Rational>]) -> BTreeSet<Vec<usize>> {
    ineqs
        .iter()
        .map(|q| {
            (0..points.len())
                .filter(|&i| q.is_tight(&points[i]).unwrap())
                .collect()
        })
        .collect()
}

/// Complements of the tight sets, as vertex subsets.
pub fn cofacet_sets(ineqs: &[LinearInequality], v: &VertexMatrix) -> BTreeSet<Vec<gcut::Face>> {
    ineqs
        .iter()
        .map(|q| {
            v.columns
                .iter()
                .zip(&v.subsets)
                .filter(|(c, _)| !q.is_tight(c).unwrap())
                .map(|(_, s)| s.clone())
                .collect()
        })
        .collect()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rational::int(x)).collect()
}

pub fn ineq(coeffs: &[i64], rhs: i64) -> LinearInequality {
    LinearInequality::new(ints(coeffs), rational::int(rhs))
}

pub fn matrix_of(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| ints(r)).collect()
}
