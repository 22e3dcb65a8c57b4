//! Minimum-cost perfect assignment over exact rationals.
//!
//! Shortest augmenting path version of the Hungarian method with row and
//! column potentials, O(n³). `ε` cells are forbidden: they are priced above
//! any feasible assignment and an optimum that still uses one means no
//! feasible assignment exists.

use num_traits::{Signed, Zero};

use crate::matrix::MinPlusMatrix;
use crate::semiring::{rational_from_usize, MinPlus, Rational};

/// Optimal column for each row, or `None` when every assignment touches an
/// `ε` entry.
pub fn min_cost_assignment(a: &MinPlusMatrix) -> Option<Vec<usize>> {
    let n = a.order();
    let max_abs = a
        .rows()
        .flatten()
        .filter_map(MinPlus::finite)
        .map(|q| q.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let forbidden = (max_abs + Rational::from_integer(1.into())) * rational_from_usize(2 * n + 1);
    let cost = |i: usize, j: usize| -> Rational {
        a.get(i, j).finite().cloned().unwrap_or_else(|| forbidden.clone())
    };

    // 1-based arrays; index 0 is the virtual column used to start each phase.
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut col0 = 0usize;
        let mut min_slack: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[col0] = true;
            let i0 = owner[col0];
            let mut delta: Option<Rational> = None;
            let mut col1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let reduced = cost(i0 - 1, j - 1) - &u[i0] - &v[j];
                if min_slack[j].as_ref().is_none_or(|m| reduced < *m) {
                    min_slack[j] = Some(reduced);
                    way[j] = col0;
                }
                let slack = min_slack[j].as_ref().expect("set above");
                if delta.as_ref().is_none_or(|d| slack < d) {
                    delta = Some(slack.clone());
                    col1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = min_slack[j].as_mut() {
                    *m -= &delta;
                }
            }
            col0 = col1;
            if owner[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            owner[col0] = owner[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }

    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[owner[j] - 1] = j - 1;
    }
    assignment
        .iter()
        .enumerate()
        .all(|(i, &j)| a.get(i, j).is_finite())
        .then_some(assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_cheaper_diagonal() {
        let a = MinPlusMatrix::from_ints(&[&[Some(1), Some(2)], &[Some(3), Some(4)]]).unwrap();
        let s = min_cost_assignment(&a).unwrap();
        let total: Rational = s.iter().enumerate().map(|(i, &j)| a.get(i, j).finite().unwrap().clone()).sum();
        assert_eq!(total, Rational::from_integer(5.into()));
    }

    #[test]
    fn infeasible_is_none() {
        let a = MinPlusMatrix::from_ints(&[&[Some(1), Some(2)], &[None, None]]).unwrap();
        assert_eq!(min_cost_assignment(&a), None);
        assert_eq!(min_cost_assignment(&MinPlusMatrix::epsilon(3)), None);
    }

    #[test]
    fn forced_permutation() {
        let a = MinPlusMatrix::from_ints(&[
            &[None, Some(-7), None],
            &[None, None, Some(100)],
            &[Some(3), None, None],
        ])
        .unwrap();
        assert_eq!(min_cost_assignment(&a), Some(vec![1, 2, 0]));
    }
}
