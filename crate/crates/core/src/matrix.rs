//! Square min-plus matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::MinPlus;

/// A square `n × n` matrix over `ℝ_min`, stored row-major.
///
/// The same value doubles as the weighted adjacency matrix of a network:
/// entry `(i, j)` is the weight of the edge `i → j`, or `ε` when absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinPlusMatrix {
    n: usize,
    entries: Vec<MinPlus>,
}

impl MinPlusMatrix {
    pub fn from_rows(rows: Vec<Vec<MinPlus>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSquare("no rows".into()));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        Ok(MinPlusMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n × n` matrix from a function of `(row, column)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> MinPlus) -> Self {
        assert!(n > 0, "matrix order must be positive");
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        MinPlusMatrix { n, entries }
    }

    /// Convenience constructor for tests and examples: `None` is `ε`.
    pub fn from_ints(rows: &[&[Option<i64>]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.map_or(MinPlus::Epsilon, MinPlus::from_int))
                        .collect()
                })
                .collect(),
        )
    }

    /// Diagonal `0`, off-diagonal `ε`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { MinPlus::unit() } else { MinPlus::Epsilon })
    }

    /// The all-`ε` matrix, the `⊕`-identity.
    pub fn epsilon(n: usize) -> Self {
        Self::from_fn(n, |_, _| MinPlus::Epsilon)
    }

    pub fn diagonal(values: &[MinPlus]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                MinPlus::Epsilon
            }
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MinPlus {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[MinPlus] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MinPlus]> {
        self.entries.chunks(self.n)
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Entrywise minimum.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(MinPlusMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.oplus(b))
                .collect(),
        })
    }

    /// `[A ⊗ B]_ij = min_l (a_il + b_lj)`.
    pub fn otimes(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| {
            (0..n).fold(MinPlus::Epsilon, |acc, l| {
                acc.oplus(&self.get(i, l).otimes(other.get(l, j)))
            })
        }))
    }

    /// `α ⊗ A`: adds `α` to every entry.
    pub fn scalar_otimes(&self, alpha: &MinPlus) -> Self {
        MinPlusMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| alpha.otimes(a)).collect(),
        }
    }

    /// `A^k`; `A^0` is the identity.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.otimes(self).expect("same order");
        }
        acc
    }

    /// Powers `A^1, …, A^k` computed by repeated right multiplication.
    pub fn powers(&self, k: usize) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(k);
        for _ in 0..k {
            let next = match out.last() {
                None => self.clone(),
                Some(prev) => prev.otimes(self).expect("same order"),
            };
            out.push(next);
        }
        out
    }

    /// `⊕` of the diagonal entries.
    pub fn trace(&self) -> MinPlus {
        (0..self.n).fold(MinPlus::Epsilon, |acc, i| acc.oplus(self.get(i, i)))
    }

    /// The principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]).clone())
    }

    /// `A ⊕ x ⊗ I`.
    pub fn shift_diagonal(&self, x: &MinPlus) -> Self {
        Self::from_fn(self.n, |i, j| {
            let a = self.get(i, j);
            if i == j {
                a.oplus(x)
            } else {
                a.clone()
            }
        })
    }

    /// Number of finite entries, i.e. edges of the associated network.
    pub fn finite_count(&self) -> usize {
        self.entries.iter().filter(|a| a.is_finite()).count()
    }
}

impl fmt::Display for MinPlusMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(MinPlus::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const E: Option<i64> = None;

    fn m(rows: &[&[Option<i64>]]) -> MinPlusMatrix {
        MinPlusMatrix::from_ints(rows).unwrap()
    }

    #[test]
    fn oplus_examples() {
        let a = m(&[&[Some(1), E], &[E, Some(2)]]);
        let b = m(&[&[Some(0), E], &[E, Some(5)]]);
        assert_eq!(a.oplus(&b).unwrap(), m(&[&[Some(0), E], &[E, Some(2)]]));
        assert_eq!(a.oplus(&a).unwrap(), a);
        assert_eq!(a.oplus(&MinPlusMatrix::epsilon(2)).unwrap(), a);
    }

    #[test]
    fn otimes_examples() {
        let a = m(&[&[Some(1), Some(2)], &[Some(3), E]]);
        let b = m(&[&[Some(0), Some(4)], &[Some(1), E]]);
        assert_eq!(
            a.otimes(&b).unwrap(),
            m(&[&[Some(1), Some(5)], &[Some(3), Some(7)]])
        );
        assert_eq!(a.otimes(&MinPlusMatrix::identity(2)).unwrap(), a);
        assert_eq!(MinPlusMatrix::identity(2).otimes(&a).unwrap(), a);
        assert_eq!(
            MinPlusMatrix::epsilon(2).otimes(&b).unwrap(),
            MinPlusMatrix::epsilon(2)
        );
    }

    #[test]
    fn dimension_mismatch() {
        let a = MinPlusMatrix::identity(2);
        let b = MinPlusMatrix::identity(3);
        assert_eq!(
            a.oplus(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(a.otimes(&b).is_err());
    }

    #[test]
    fn not_square() {
        assert!(MinPlusMatrix::from_rows(vec![]).is_err());
        let rows = vec![vec![MinPlus::unit(); 2], vec![MinPlus::unit(); 3]];
        assert!(matches!(
            MinPlusMatrix::from_rows(rows),
            Err(Error::NotSquare(_))
        ));
    }

    #[test]
    fn scalar_examples() {
        let a = m(&[&[Some(1), E], &[Some(3), Some(0)]]);
        assert_eq!(a.scalar_otimes(&MinPlus::unit()), a);
        assert_eq!(
            a.scalar_otimes(&MinPlus::from_int(2)),
            m(&[&[Some(3), E], &[Some(5), Some(2)]])
        );
        assert_eq!(a.scalar_otimes(&MinPlus::Epsilon), MinPlusMatrix::epsilon(2));
    }

    #[test]
    fn power_examples() {
        let a = m(&[&[E, Some(2)], &[Some(3), E]]);
        assert_eq!(a.power(1), a);
        assert_eq!(a.power(2), m(&[&[Some(5), E], &[E, Some(5)]]));
        assert_eq!(a.power(0), MinPlusMatrix::identity(2));
        assert_eq!(MinPlusMatrix::identity(3).power(4), MinPlusMatrix::identity(3));
        let powers = a.powers(3);
        assert_eq!(powers[2], a.power(3));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(MinPlusMatrix::identity(4).trace(), MinPlus::unit());
        assert_eq!(MinPlusMatrix::epsilon(3).trace(), MinPlus::Epsilon);
        let a = m(&[&[Some(4), E], &[E, Some(-1)]]);
        assert_eq!(a.trace(), MinPlus::from_int(-1));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(MinPlusMatrix::identity(1), m(&[&[Some(0)]]));
        assert_eq!(MinPlusMatrix::identity(2), m(&[&[Some(0), E], &[E, Some(0)]]));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = MinPlusMatrix> {
        proptest::collection::vec(prop::option::weighted(0.7, -9i64..10), n * n).prop_map(
            move |v| {
                MinPlusMatrix::from_fn(n, |i, j| v[i * n + j].map_or(MinPlus::Epsilon, MinPlus::from_int))
            },
        )
    }

    fn arb_triple() -> impl Strategy<Value = (MinPlusMatrix, MinPlusMatrix, MinPlusMatrix)> {
        (1usize..=6).prop_flat_map(|n| (arb_matrix(n), arb_matrix(n), arb_matrix(n)))
    }

    /// Minimum weight of a walk with exactly `k` edges, by enumerating every
    /// vertex sequence.
    fn brute_walk(a: &MinPlusMatrix, i: usize, j: usize, k: usize) -> MinPlus {
        fn go(a: &MinPlusMatrix, at: usize, j: usize, left: usize, acc: MinPlus, best: &mut MinPlus) {
            if left == 0 {
                if at == j && acc < *best {
                    *best = acc;
                }
                return;
            }
            for next in 0..a.order() {
                let w = a.get(at, next);
                if w.is_finite() {
                    go(a, next, j, left - 1, acc.otimes(w), best);
                }
            }
        }
        let mut best = MinPlus::Epsilon;
        go(a, i, j, k, MinPlus::unit(), &mut best);
        best
    }

    proptest! {
        #[test]
        fn matrix_laws((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.otimes(&b).unwrap().otimes(&c).unwrap(), a.otimes(&b.otimes(&c).unwrap()).unwrap());
            prop_assert_eq!(a.oplus(&b).unwrap().oplus(&c).unwrap(), a.oplus(&b.oplus(&c).unwrap()).unwrap());
            prop_assert_eq!(a.oplus(&b).unwrap(), b.oplus(&a).unwrap());
            prop_assert_eq!(a.oplus(&a).unwrap(), a.clone());
            prop_assert_eq!(
                a.otimes(&b.oplus(&c).unwrap()).unwrap(),
                a.otimes(&b).unwrap().oplus(&a.otimes(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                b.oplus(&c).unwrap().otimes(&a).unwrap(),
                b.otimes(&a).unwrap().oplus(&c.otimes(&a).unwrap()).unwrap()
            );
            prop_assert_eq!(a.oplus(&b).unwrap().trace(), a.trace().oplus(&b.trace()));
        }

        #[test]
        fn powers_are_walk_minima(a in (1usize..=5).prop_flat_map(arb_matrix), k in 1usize..=4) {
            let p = a.power(k);
            for i in 0..a.order() {
                for j in 0..a.order() {
                    prop_assert_eq!(p.get(i, j), &brute_walk(&a, i, j, k));
                }
            }
        }
    }
}
