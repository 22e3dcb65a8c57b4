//! Generators and brute-force oracles shared by the integration tests. Every
//! oracle here is written without touching the library's algorithms.

#![allow(dead_code)]

use minplus::{MinPlus, MinPlusMatrix, MinPlusPolynomial, Rational};
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Random `n × n` matrix: each entry finite with probability `density`,
/// integer in `-9..=9` or (one time in five) a half-integer.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, density: f64) -> MinPlusMatrix {
    MinPlusMatrix::from_fn(n, |_, _| {
        if rng.random_bool(density) {
            let base = rng.random_range(-9i64..=9);
            if rng.random_bool(0.2) {
                MinPlus::ratio(2 * base + 1, 2)
            } else {
                MinPlus::from_int(base)
            }
        } else {
            MinPlus::Epsilon
        }
    })
}

/// Monic polynomial of degree `n` with roughly a quarter of the lower
/// coefficients `ε`.
pub fn random_polynomial<R: Rng>(rng: &mut R, n: usize) -> MinPlusPolynomial {
    MinPlusPolynomial::monic((0..n).map(|_| {
        if rng.random_bool(0.25) {
            MinPlus::Epsilon
        } else {
            MinPlus::ratio(rng.random_range(-20i64..=20), rng.random_range(1i64..=4))
        }
    }))
}

/// `min_j (c_j + (n - j)·x)` written out directly.
pub fn eval_direct(coeffs: &[MinPlus], x: &Rational) -> Option<Rational> {
    let n = coeffs.len() - 1;
    coeffs
        .iter()
        .enumerate()
        .filter_map(|(j, c)| c.finite().map(|c| c + x * q((n - j) as i64)))
        .min()
}

/// Every pairwise intersection of the lines `c_j + (n - j)·x`, the midpoints
/// between consecutive ones, and a point beyond each end.
pub fn sample_grid(coeffs: &[MinPlus]) -> Vec<Rational> {
    let mut xs: Vec<Rational> = Vec::new();
    for (i, ci) in coeffs.iter().enumerate() {
        for (j, cj) in coeffs.iter().enumerate().skip(i + 1) {
            if let (Some(ci), Some(cj)) = (ci.finite(), cj.finite()) {
                xs.push((cj - ci) / q((j - i) as i64));
            }
        }
    }
    xs.sort();
    xs.dedup();
    let mut grid = Vec::new();
    match (xs.first(), xs.last()) {
        (Some(lo), Some(hi)) => {
            grid.push(lo - q(1));
            grid.push(hi + q(1));
        }
        _ => {
            grid.push(q(-1));
            grid.push(q(1));
        }
    }
    for w in xs.windows(2) {
        grid.push((&w[0] + &w[1]) / q(2));
    }
    grid.extend(xs);
    grid
}

/// Tropical determinant over every permutation, via Heap's algorithm.
pub fn tropdet_heap(a: &MinPlusMatrix) -> MinPlus {
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let value = |p: &[usize]| {
        p.iter()
            .enumerate()
            .fold(MinPlus::unit(), |acc, (i, &j)| acc.otimes(a.get(i, j)))
    };
    let mut best = value(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.oplus(&value(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Elementary circuits as (length, weight) by extending simple paths from
/// their smallest vertex.
pub fn brute_circuits(a: &MinPlusMatrix) -> Vec<(Vec<usize>, Rational)> {
    fn extend(
        a: &MinPlusMatrix,
        path: &mut Vec<usize>,
        weight: Rational,
        out: &mut Vec<(Vec<usize>, Rational)>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if let Some(w) = a.get(last, start).finite() {
            out.push((path.clone(), &weight + w));
        }
        for next in start + 1..a.order() {
            if path.contains(&next) {
                continue;
            }
            if let Some(w) = a.get(last, next).finite() {
                path.push(next);
                extend(a, path, &weight + w, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..a.order() {
        extend(a, &mut vec![s], q(0), &mut out);
    }
    out
}

/// Lightest disjoint circuit family of each total length, by trying every
/// subset of the brute-force circuit list.
pub fn brute_family_minima(a: &MinPlusMatrix) -> Vec<MinPlus> {
    let circuits = brute_circuits(a);
    let mut best = vec![MinPlus::Epsilon; a.order() + 1];
    best[0] = MinPlus::unit();
    fn go(
        circuits: &[(Vec<usize>, Rational)],
        k: usize,
        used: u64,
        len: usize,
        weight: Rational,
        best: &mut [MinPlus],
    ) {
        if k == circuits.len() {
            let w = MinPlus::Finite(weight);
            if len > 0 && w < best[len] {
                best[len] = w;
            }
            return;
        }
        go(circuits, k + 1, used, len, weight.clone(), best);
        let (vs, w) = &circuits[k];
        let mask = vs.iter().fold(0u64, |m, &v| m | 1 << v);
        if used & mask == 0 {
            go(circuits, k + 1, used | mask, len + vs.len(), weight + w, best);
        }
    }
    go(&circuits, 0, 0, 0, q(0), &mut best);
    best
}
