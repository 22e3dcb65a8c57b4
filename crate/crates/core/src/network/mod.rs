//! Weighted directed networks and their circuit structure.
//!
//! A square min-plus matrix is the weighted adjacency matrix of a network:
//! every finite entry `a_ij` is an edge `i → j` of weight `a_ij`. Vertices are
//! 0-based here; user-facing output (JSON reports, CLI text) numbers them from
//! 1 so they line up with matrix rows.

mod circuit;
mod mean;
mod planted;
mod verify;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::MinPlusMatrix;
use crate::semiring::{serialize_rational, MinPlus, Rational};

pub use circuit::{
    enumerate_circuits, enumerate_extended_circuits, min_extended_weights, Circuit, ExtendedCircuit,
};
pub use mean::min_cycle_mean;
pub use planted::{random_separated, PlantedInstance};
pub use verify::{
    coefficient_check, separated_check, verify_corollary_equivalence,
    verify_separated_factorization, CoefficientRow, EquivalenceDetails, FactorizationDetails,
    HomogeneousCircuit, Report,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub weight: Rational,
}

/// `N = (G, w)`: `m` vertices and at most one weighted edge per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    vertices: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, Rational)>>,
}

impl Network {
    pub fn new(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &edges {
            if e.tail >= vertices || e.head >= vertices {
                return Err(Error::InvalidNetwork(format!(
                    "edge {} -> {} outside 0..{vertices}",
                    e.tail, e.head
                )));
            }
            if !seen.insert((e.tail, e.head)) {
                return Err(Error::InvalidNetwork(format!(
                    "duplicate edge {} -> {}",
                    e.tail, e.head
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); vertices];
        for e in &edges {
            adjacency[e.tail].push((e.head, e.weight.clone()));
        }
        for out in &mut adjacency {
            out.sort_by_key(|(head, _)| *head);
        }
        Ok(Network {
            vertices,
            edges,
            adjacency,
        })
    }

    /// `N(A)`: one edge per finite entry.
    pub fn from_matrix(a: &MinPlusMatrix) -> Self {
        let n = a.order();
        let edges = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                a.get(i, j).finite().map(|w| Edge {
                    tail: i,
                    head: j,
                    weight: w.clone(),
                })
            })
            .collect();
        Network::new(n, edges).expect("matrix entries are unique pairs")
    }

    /// The weighted adjacency matrix.
    pub fn to_matrix(&self) -> Result<MinPlusMatrix> {
        if self.vertices == 0 {
            return Err(Error::InvalidNetwork("no vertices".into()));
        }
        Ok(MinPlusMatrix::from_fn(self.vertices, |i, j| {
            self.weight(i, j).map_or(MinPlus::Epsilon, |w| MinPlus::Finite(w.clone()))
        }))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-neighbours of `v` with edge weights, sorted by head.
    pub fn successors(&self, v: usize) -> &[(usize, Rational)] {
        &self.adjacency[v]
    }

    pub fn weight(&self, tail: usize, head: usize) -> Option<&Rational> {
        self.adjacency[tail]
            .binary_search_by_key(&head, |(h, _)| *h)
            .ok()
            .map(|k| &self.adjacency[tail][k].1)
    }
}
