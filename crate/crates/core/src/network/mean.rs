use super::Network;
use crate::semiring::{rational_from_usize, MinPlus, Rational};

/// Minimum average weight over all circuits, `ε` for an acyclic network.
///
/// Karp's dynamic program: `d[k][v]` is the lightest walk of exactly `k`
/// edges ending at `v` (starting anywhere), and the answer is
/// `min_v max_k (d[m][v] - d[k][v]) / (m - k)`.
pub fn min_cycle_mean(net: &Network) -> MinPlus {
    let m = net.vertex_count();
    if m == 0 {
        return MinPlus::Epsilon;
    }
    let mut walks: Vec<Vec<Option<Rational>>> = Vec::with_capacity(m + 1);
    walks.push(vec![Some(Rational::from_integer(0.into())); m]);
    for k in 1..=m {
        let prev = &walks[k - 1];
        let mut cur: Vec<Option<Rational>> = vec![None; m];
        for e in net.edges() {
            let Some(base) = &prev[e.tail] else { continue };
            let cand = base + &e.weight;
            if cur[e.head].as_ref().is_none_or(|c| cand < *c) {
                cur[e.head] = Some(cand);
            }
        }
        walks.push(cur);
    }

    let mut best: Option<Rational> = None;
    for (v, full) in walks[m].iter().enumerate() {
        let Some(full) = full else { continue };
        let worst = (0..m)
            .filter_map(|k| {
                walks[k][v]
                    .as_ref()
                    .map(|dk| (full - dk) / rational_from_usize(m - k))
            })
            .max()
            .expect("d[0][v] is finite");
        if best.as_ref().is_none_or(|b| worst < *b) {
            best = Some(worst);
        }
    }
    best.map_or(MinPlus::Epsilon, MinPlus::Finite)
}
