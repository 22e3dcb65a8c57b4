//! Random networks whose circuits are known to be separated.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matrix::MinPlusMatrix;
use crate::semiring::{MinPlus, Rational};

/// A generated matrix together with the cycles planted in it.
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub matrix: MinPlusMatrix,
    /// Vertex sequences of the planted cycles (0-based).
    pub cycles: Vec<Vec<usize>>,
    /// Average weight of each planted cycle.
    pub averages: Vec<Rational>,
}

impl PlantedInstance {
    pub fn free_vertices(&self) -> usize {
        self.matrix.order() - self.cycles.iter().map(Vec::len).sum::<usize>()
    }
}

/// Plants up to `max_cycles` vertex-disjoint cycles on at most `max_n`
/// vertices, leaves the rest circuit-free, then sprinkles edges that only
/// run forward between components in a random topological order, so no new
/// circuit can appear.
///
/// Averages are drawn from a small set of halves and integers so that equal
/// averages (and hence merged homogeneous circuits) show up regularly.
pub fn random_separated<R: Rng + ?Sized>(rng: &mut R, max_n: usize, max_cycles: usize) -> PlantedInstance {
    assert!(max_n >= 1, "need at least one vertex");
    let n = rng.random_range(1..=max_n);
    let k = rng.random_range(0..=max_cycles.min(n));

    // Cycle lengths: k positive parts of at most n vertices.
    let mut lengths = vec![1usize; k];
    let mut budget = if k == 0 { 0 } else { rng.random_range(k..=n) - k };
    while budget > 0 {
        let slot = rng.random_range(0..k);
        lengths[slot] += 1;
        budget -= 1;
    }

    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut rows = vec![vec![MinPlus::Epsilon; n]; n];
    let mut component = vec![usize::MAX; n];
    let mut cycles = Vec::with_capacity(k);
    let mut averages = Vec::with_capacity(k);
    let mut cursor = 0;
    for (c, &len) in lengths.iter().enumerate() {
        let cycle: Vec<usize> = labels[cursor..cursor + len].to_vec();
        cursor += len;
        let average = Rational::new(rng.random_range(-4i64..=8).into(), 2.into());
        let total = &average * Rational::from_integer((len as i64).into());
        let mut spent = Rational::from_integer(0.into());
        for (pos, &v) in cycle.iter().enumerate() {
            let next = cycle[(pos + 1) % len];
            let w = if pos + 1 == len {
                &total - &spent
            } else {
                Rational::from_integer(rng.random_range(-3i64..=6).into())
            };
            spent += &w;
            rows[v][next] = MinPlus::Finite(w);
            component[v] = c;
        }
        cycles.push(cycle);
        averages.push(average);
    }
    for (offset, &v) in labels[cursor..].iter().enumerate() {
        component[v] = k + offset;
    }

    // Random topological order of components; edges only go forward.
    let mut order: Vec<usize> = (0..component.iter().max().map_or(0, |m| m + 1)).collect();
    order.shuffle(rng);
    let mut rank = vec![0usize; order.len()];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }
    let density = rng.random_range(0.0..0.6);
    for u in 0..n {
        for v in 0..n {
            if rank[component[u]] < rank[component[v]] && rng.random_bool(density) {
                rows[u][v] = MinPlus::from_int(rng.random_range(-5i64..=10));
            }
        }
    }
    PlantedInstance {
        matrix: MinPlusMatrix::from_rows(rows).expect("square"),
        cycles,
        averages,
    }
}
