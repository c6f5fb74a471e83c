use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Orientation of every edge of a graph, obtained from closed Eulerian
/// trails, one per nontrivial component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianOrientation {
    /// Directed arcs in traversal order; each host edge appears exactly once.
    pub arcs: Vec<(usize, usize)>,
    /// The closed trails as vertex sequences (first vertex repeated last).
    pub circuits: Vec<Vec<usize>>,
}

impl EulerianOrientation {
    /// Every edge of `g` exactly once, balanced at every vertex.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.arcs.len() != g.edge_count() {
            return false;
        }
        let mut seen = vec![false; g.edge_count()];
        let mut balance = vec![0i64; g.n()];
        for &(u, v) in &self.arcs {
            let Some(e) = g.edge_index(u, v) else {
                return false;
            };
            if std::mem::replace(&mut seen[e], true) {
                return false;
            }
            balance[u] += 1;
            balance[v] -= 1;
        }
        balance.iter().all(|&b| b == 0)
    }
}

/// Hierholzer traversal of each component, always leaving a vertex through
/// its lowest-indexed unused edge.
pub fn eulerian_circuit(g: &Graph) -> Result<EulerianOrientation> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegree { vertex: v, degree: g.degree(v) });
    }
    let mut next = vec![0usize; g.n()];
    let mut used = vec![false; g.edge_count()];
    let mut arcs = Vec::with_capacity(g.edge_count());
    let mut circuits = Vec::new();

    for start in 0..g.n() {
        if next[start] == g.degree(start) {
            continue;
        }
        let mut stack = vec![start];
        let mut circuit = Vec::new();
        while let Some(&v) = stack.last() {
            let nbrs = g.neighbors(v);
            let mut advanced = false;
            while next[v] < nbrs.len() {
                let w = nbrs[next[v]];
                next[v] += 1;
                let e = g.edge_index(v, w).expect("neighbour pair is an edge");
                if !used[e] {
                    used[e] = true;
                    stack.push(w);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                circuit.push(v);
                stack.pop();
            }
        }
        circuit.reverse();
        arcs.extend(circuit.windows(2).map(|w| (w[0], w[1])));
        circuits.push(circuit);
    }
    Ok(EulerianOrientation { arcs, circuits })
}
