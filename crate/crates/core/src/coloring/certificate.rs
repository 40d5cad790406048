use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::VertexWeights;

/// A proper `q`-colouring: every vertex gets a set of colours from `1..=k`.
/// Colour sets are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub k: u32,
    pub colours: Vec<Vec<u32>>,
}

impl ColoringCertificate {
    pub fn new(k: u32, mut colours: Vec<Vec<u32>>) -> Self {
        for c in &mut colours {
            c.sort_unstable();
        }
        ColoringCertificate { k, colours }
    }

    /// Checks cardinalities, disjointness along edges and the palette bound.
    pub fn validate(&self, g: &Graph, q: &VertexWeights) -> Result<()> {
        let bad = |msg: String| Err(Error::Invariant(msg));
        if self.colours.len() != g.n() || q.len() != g.n() {
            return bad(format!(
                "certificate covers {} vertices, graph has {}",
                self.colours.len(),
                g.n()
            ));
        }
        for (u, set) in self.colours.iter().enumerate() {
            if set.len() != q[u] as usize {
                return bad(format!("vertex {u} has {} colours, weight {}", set.len(), q[u]));
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("colour set of vertex {u} is not strictly increasing"));
            }
            if set.iter().any(|&c| c == 0 || c > self.k) {
                return bad(format!("vertex {u} uses a colour outside 1..={}", self.k));
            }
        }
        for (u, v) in g.edges() {
            let (a, b) = (&self.colours[u], &self.colours[v]);
            if a.iter().any(|c| b.binary_search(c).is_ok()) {
                return bad(format!("adjacent vertices {u} and {v} share a colour"));
            }
        }
        Ok(())
    }
}
