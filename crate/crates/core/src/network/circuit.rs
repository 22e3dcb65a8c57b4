use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::Network;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::semiring::{format_rational, rational_from_usize, MinPlus, Rational};

/// An elementary circuit, stored in canonical rotation (smallest vertex
/// first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    vertices: Vec<usize>,
    weight: Rational,
}

impl Circuit {
    /// Builds the circuit through `vertices` (in order, closing back to the
    /// first), checking that every hop is an edge and no vertex repeats.
    pub fn from_vertices(net: &Network, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidNetwork("empty circuit".into()));
        }
        let mut seen = vec![false; net.vertex_count()];
        let mut weight = Rational::from_integer(0.into());
        for (k, &v) in vertices.iter().enumerate() {
            if v >= net.vertex_count() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidNetwork(format!("vertex {v} repeated or out of range")));
            }
            let next = vertices[(k + 1) % vertices.len()];
            let w = net
                .weight(v, next)
                .ok_or_else(|| Error::InvalidNetwork(format!("no edge {v} -> {next}")))?;
            weight += w;
        }
        let start = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(k, _)| k)
            .expect("non-empty");
        let mut rotated = vertices[start..].to_vec();
        rotated.extend_from_slice(&vertices[..start]);
        Ok(Circuit {
            vertices: rotated,
            weight,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    /// `ave(C) = ω(C) / ℓ(C)`.
    pub fn average(&self) -> Rational {
        &self.weight / rational_from_usize(self.length())
    }

    fn touches(&self, used: &[bool]) -> bool {
        self.vertices.iter().any(|&v| used[v])
    }
}

impl Serialize for Circuit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Circuit", 4)?;
        let labels: Vec<usize> = self.vertices.iter().map(|v| v + 1).collect();
        s.serialize_field("vertices", &labels)?;
        s.serialize_field("length", &self.length())?;
        s.serialize_field("weight", &MinPlus::Finite(self.weight.clone()))?;
        s.serialize_field("average", &MinPlus::Finite(self.average()))?;
        s.end()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self
            .vertices
            .iter()
            .chain(self.vertices.first())
            .map(|v| (v + 1).to_string())
            .collect();
        write!(
            f,
            "{} (length {}, weight {}, average {})",
            path.join(" -> "),
            self.length(),
            format_rational(&self.weight),
            format_rational(&self.average())
        )
    }
}

/// A family of pairwise vertex-disjoint circuits treated as one object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendedCircuit {
    circuits: Vec<Circuit>,
}

impl ExtendedCircuit {
    pub fn new(circuits: Vec<Circuit>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &circuits {
            for &v in c.vertices() {
                if !seen.insert(v) {
                    return Err(Error::InvalidNetwork(format!(
                        "circuits share vertex {}",
                        v + 1
                    )));
                }
            }
        }
        Ok(ExtendedCircuit { circuits })
    }

    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    /// `ℓ̃`: sum of the member lengths.
    pub fn total_length(&self) -> usize {
        self.circuits.iter().map(Circuit::length).sum()
    }

    pub fn weight_sum(&self) -> Rational {
        self.circuits.iter().map(|c| c.weight().clone()).sum()
    }

    /// `p̃`: pooled average, total weight over total length.
    pub fn average(&self) -> Option<Rational> {
        let len = self.total_length();
        (len > 0).then(|| self.weight_sum() / rational_from_usize(len))
    }
}

/// Every elementary circuit of the network, sorted by `(length, vertices)`.
///
/// Johnson's backtracking with blocked sets, rooted in turn at each vertex
/// `s` and restricted to vertices `>= s`, so each circuit is produced once,
/// already in canonical rotation. Fails once more than `cap` circuits have
/// been found.
pub fn enumerate_circuits(net: &Network, cap: usize) -> Result<Vec<Circuit>> {
    let mut search = Johnson {
        net,
        cap,
        root: 0,
        blocked: vec![false; net.vertex_count()],
        blocked_by: vec![Vec::new(); net.vertex_count()],
        stack: Vec::new(),
        found: Vec::new(),
        overflow: false,
    };
    for root in 0..net.vertex_count() {
        search.root = root;
        search.blocked.iter_mut().for_each(|b| *b = false);
        search.blocked_by.iter_mut().for_each(Vec::clear);
        search.circuit(root);
        if search.overflow {
            return Err(Error::CircuitCapExceeded {
                found: search.found.len(),
                cap,
            });
        }
    }
    let mut found = search.found;
    found.sort_by(|a, b| {
        a.length()
            .cmp(&b.length())
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    Ok(found)
}

struct Johnson<'a> {
    net: &'a Network,
    cap: usize,
    root: usize,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    stack: Vec<usize>,
    found: Vec<Circuit>,
    overflow: bool,
}

impl Johnson<'_> {
    fn circuit(&mut self, v: usize) -> bool {
        let mut closed = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for &(w, _) in self.net.successors(v) {
            if self.overflow {
                break;
            }
            if w < self.root {
                continue;
            }
            if w == self.root {
                self.emit();
                closed = true;
            } else if !self.blocked[w] && self.circuit(w) {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &(w, _) in self.net.successors(v) {
                if w >= self.root && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        closed
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        let waiting = std::mem::take(&mut self.blocked_by[u]);
        for w in waiting {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn emit(&mut self) {
        if self.found.len() >= self.cap {
            self.overflow = true;
            return;
        }
        let c = Circuit::from_vertices(self.net, &self.stack).expect("stack is a circuit");
        self.found.push(c);
    }
}

fn check_exhaustive(net: &Network, caps: &Caps) -> Result<()> {
    if net.vertex_count() > caps.exhaustive {
        return Err(Error::CapExceeded {
            what: "extended-circuit enumeration",
            n: net.vertex_count(),
            cap: caps.exhaustive,
            hint: "",
        });
    }
    Ok(())
}

/// Visits every non-empty family of pairwise disjoint circuits, each family
/// once, with circuit indices increasing.
fn for_each_family(circuits: &[Circuit], vertices: usize, mut visit: impl FnMut(&[usize])) {
    fn go(
        circuits: &[Circuit],
        from: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        for k in from..circuits.len() {
            let c = &circuits[k];
            if c.touches(used) {
                continue;
            }
            c.vertices().iter().for_each(|&v| used[v] = true);
            chosen.push(k);
            visit(chosen);
            go(circuits, k + 1, used, chosen, visit);
            chosen.pop();
            c.vertices().iter().for_each(|&v| used[v] = false);
        }
    }
    go(circuits, 0, &mut vec![false; vertices], &mut Vec::new(), &mut visit);
}

/// `𝒞_j`: all vertex-disjoint families of circuits with total length `j`.
pub fn enumerate_extended_circuits(
    net: &Network,
    j: usize,
    caps: &Caps,
) -> Result<Vec<ExtendedCircuit>> {
    check_exhaustive(net, caps)?;
    let circuits = enumerate_circuits(net, caps.circuits)?;
    let mut out = Vec::new();
    for_each_family(&circuits, net.vertex_count(), |family| {
        let len: usize = family.iter().map(|&k| circuits[k].length()).sum();
        if len == j {
            out.push(ExtendedCircuit {
                circuits: family.iter().map(|&k| circuits[k].clone()).collect(),
            });
        }
    });
    Ok(out)
}

/// Minimum weight sum over `𝒞_j` for `j = 0..=m` (`ε` when `𝒞_j` is empty;
/// the empty family gives `0` at `j = 0`).
pub fn min_extended_weights(net: &Network, caps: &Caps) -> Result<Vec<MinPlus>> {
    check_exhaustive(net, caps)?;
    let circuits = enumerate_circuits(net, caps.circuits)?;
    let mut best = vec![MinPlus::Epsilon; net.vertex_count() + 1];
    best[0] = MinPlus::unit();
    for_each_family(&circuits, net.vertex_count(), |family| {
        let len: usize = family.iter().map(|&k| circuits[k].length()).sum();
        let weight: Rational = family.iter().map(|&k| circuits[k].weight().clone()).sum();
        let weight = MinPlus::Finite(weight);
        if weight < best[len] {
            best[len] = weight;
        }
    });
    Ok(best)
}
