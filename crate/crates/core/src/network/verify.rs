//! Cross-checks between the characteristic polynomials and the circuits of
//! `N(A)`. Each check returns a [`Report`] that serializes to
//! `{check, hypothesis_met, details, pass}`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{enumerate_circuits, min_extended_weights, Circuit, Network};
use crate::caps::Caps;
use crate::charpoly::{charpoly_flv, charpoly_tropdet};
use crate::error::Result;
use crate::matrix::MinPlusMatrix;
use crate::polynomial::{Factorization, MinPlusPolynomial};
use crate::semiring::{serialize_rational, MinPlus, Rational};

/// Outcome of one check. `pass` is false only when a check whose hypothesis
/// holds disagrees with its prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report<D> {
    pub check: &'static str,
    pub hypothesis_met: bool,
    pub details: D,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub j: usize,
    pub coefficient: MinPlus,
    pub enumerated_min: MinPlus,
    pub equal: bool,
}

/// Compares every coefficient of `g_A` with the lightest vertex-disjoint
/// circuit family of the same total length.
pub fn coefficient_check(a: &MinPlusMatrix, caps: &Caps) -> Result<Report<Vec<CoefficientRow>>> {
    let g = charpoly_tropdet(a, caps.subsets)?;
    let enumerated = min_extended_weights(&Network::from_matrix(a), caps)?;
    let rows: Vec<CoefficientRow> = g
        .coeffs()
        .iter()
        .zip(enumerated)
        .enumerate()
        .skip(1)
        .map(|(j, (c, e))| CoefficientRow {
            j,
            equal: *c == e,
            coefficient: c.clone(),
            enumerated_min: e,
        })
        .collect();
    let pass = rows.iter().all(|r| r.equal);
    Ok(Report {
        check: "coefficients",
        hypothesis_met: true,
        details: rows,
        pass,
    })
}

/// True when no two elementary circuits share a vertex.
pub fn separated_check(net: &Network, cap: usize) -> Result<bool> {
    let circuits = enumerate_circuits(net, cap)?;
    Ok(is_separated(&circuits, net.vertex_count()))
}

fn is_separated(circuits: &[Circuit], vertices: usize) -> bool {
    let mut seen = vec![false; vertices];
    circuits
        .iter()
        .flat_map(|c| c.vertices())
        .all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// Simple circuits of one average weight, merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneousCircuit {
    #[serde(serialize_with = "serialize_rational")]
    pub average: Rational,
    pub length: usize,
    pub circuits: Vec<Circuit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationDetails {
    pub homogeneous: Vec<HomogeneousCircuit>,
    pub predicted: Option<Factorization>,
    pub computed: Option<Factorization>,
    /// Every homogeneous circuit shows up as a factor of matching
    /// multiplicity, and `x^r` covers the circuit-free vertices.
    pub forward: bool,
    /// Every factor of `g_A` comes from a homogeneous circuit.
    pub converse: bool,
}

fn group_homogeneous(circuits: Vec<Circuit>) -> Vec<HomogeneousCircuit> {
    let mut groups: BTreeMap<Rational, Vec<Circuit>> = BTreeMap::new();
    for c in circuits {
        groups.entry(c.average()).or_default().push(c);
    }
    groups
        .into_iter()
        .map(|(average, circuits)| HomogeneousCircuit {
            average,
            length: circuits.iter().map(Circuit::length).sum(),
            circuits,
        })
        .collect()
}

/// On a network with separated circuits, predicts
/// `g_A ≡ (x ⊕ p̃_1)^{ℓ̃_1} ⊗ ⋯ ⊗ (x ⊕ p̃_k)^{ℓ̃_k} ⊗ x^r` from the homogeneous
/// circuits and compares it with the factorization of `g_A`.
pub fn verify_separated_factorization(
    a: &MinPlusMatrix,
    caps: &Caps,
) -> Result<Report<FactorizationDetails>> {
    let net = Network::from_matrix(a);
    let circuits = enumerate_circuits(&net, caps.circuits)?;
    if !is_separated(&circuits, net.vertex_count()) {
        return Ok(Report {
            check: "separated_factorization",
            hypothesis_met: false,
            details: FactorizationDetails {
                homogeneous: Vec::new(),
                predicted: None,
                computed: None,
                forward: false,
                converse: false,
            },
            pass: true,
        });
    }
    let homogeneous = group_homogeneous(circuits);
    let covered: usize = homogeneous.iter().map(|h| h.length).sum();
    let predicted = Factorization::new(
        homogeneous.iter().map(|h| (h.average.clone(), h.length)),
        a.order() - covered,
    );
    let computed = charpoly_tropdet(a, caps.subsets)?.factorize()?;
    let forward = predicted.xpower() == computed.xpower()
        && predicted
            .factors()
            .iter()
            .all(|f| computed.factors().contains(f));
    let converse = computed
        .factors()
        .iter()
        .all(|f| predicted.factors().contains(f));
    Ok(Report {
        check: "separated_factorization",
        hypothesis_met: true,
        pass: forward && converse,
        details: FactorizationDetails {
            homogeneous,
            predicted: Some(predicted),
            computed: Some(computed),
            forward,
            converse,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceDetails {
    pub tropdet: MinPlusPolynomial,
    pub flv: MinPlusPolynomial,
    pub tropdet_factors: Factorization,
    pub flv_factors: Factorization,
    pub equivalent: bool,
}

/// Checks `g_A ≡ ĝ_A` when all circuits are separated; otherwise the
/// comparison is recorded without being asserted.
pub fn verify_corollary_equivalence(
    a: &MinPlusMatrix,
    caps: &Caps,
) -> Result<Report<EquivalenceDetails>> {
    let separated = separated_check(&Network::from_matrix(a), caps.circuits)?;
    let tropdet = charpoly_tropdet(a, caps.subsets)?;
    let flv = charpoly_flv(a);
    let equivalent = tropdet.is_equivalent(&flv);
    Ok(Report {
        check: "corollary_equivalence",
        hypothesis_met: separated,
        pass: !separated || equivalent,
        details: EquivalenceDetails {
            tropdet_factors: tropdet.factorize()?,
            flv_factors: flv.factorize()?,
            tropdet,
            flv,
            equivalent,
        },
    })
}
