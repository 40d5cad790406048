use chiforge_core::patterns::{find_isomorphism, Pattern};
use chiforge_core::{Graph, VertexSet, VertexWeights};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExpansionBase {
    C5,
    W5,
}

impl ExpansionBase {
    pub fn graph(self) -> &'static Graph {
        match self {
            ExpansionBase::C5 => Pattern::C5.graph(),
            ExpansionBase::W5 => Pattern::W5.graph(),
        }
    }
}

/// Classes of true twins (`N[u] = N[v]`), ordered by smallest vertex. Each
/// class is a clique.
pub fn true_twin_classes(g: &Graph) -> Vec<VertexSet> {
    let mut rest = g.vertices();
    let mut out = Vec::new();
    while let Some(u) = rest.first() {
        let nu = g.closed_neighbors(u);
        let class: VertexSet = rest.iter().filter(|&v| g.closed_neighbors(v) == nu).collect();
        rest = rest - class;
        out.push(class);
    }
    out
}

/// Recognizes `g` as an expansion of C5 or W5 in which every vertex is
/// replaced by a nonempty clique. Returns the base and the clique sizes in
/// the base's vertex order.
pub fn recognize_clique_expansion(g: &Graph) -> Option<(ExpansionBase, VertexWeights)> {
    let classes = true_twin_classes(g);
    let reps: VertexSet = classes.iter().filter_map(|c| c.first()).collect();
    let quotient = g.induced(reps).ok()?;
    for base in [ExpansionBase::C5, ExpansionBase::W5] {
        let b = base.graph();
        // keep the natural correspondence when the quotient already is the base
        let map = if quotient == *b { Some((0..b.n()).collect()) } else { find_isomorphism(&quotient, b) };
        if let Some(map) = map {
            let sizes: Vec<u32> = map.iter().map(|&i: &usize| classes[i].len() as u32).collect();
            return Some((base, VertexWeights::from(sizes)));
        }
    }
    None
}
