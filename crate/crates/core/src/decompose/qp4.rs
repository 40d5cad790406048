use serde::{Deserialize, Serialize};

use super::modules::{is_prime, maximal_homogeneous_sets, HomogeneousSets};
use super::separator::find_clique_separator_of_modules;
use crate::coloring::{chi_weighted, clique_number_weighted, minimalize};
use crate::error::{Error, Result};
use crate::graph::{EdgeCut, Graph, VertexSet};
use crate::patterns::{find_induced, q_p4};
use crate::weights::VertexWeights;

/// One joined part `M_i` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionPart {
    pub vertices: VertexSet,
    /// `q_i`, over all vertices of the input graph; zero outside `vertices`.
    pub weights: VertexWeights,
    /// The clique of `M_i` each vertex of `support(q_i)` stands for, in
    /// ascending order of representative.
    pub bags: Vec<VertexSet>,
    /// `G[q_i]`, vertices renumbered in ascending order.
    #[serde(with = "graph6_string")]
    pub quotient: Graph,
}

/// Pairwise completely joined parts whose weighted chromatic numbers add up
/// to `χ_q(G)`, each an expansion by cliques of a prime quotient without a
/// clique-separator of modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    /// The minimal weight function the parts were computed from.
    pub minimal_weights: VertexWeights,
    pub parts: Vec<DecompositionPart>,
}

mod graph6_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;
    use crate::graph6::{parse_graph6, write_graph6};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

fn invariant(msg: String) -> Error {
    Error::Invariant(msg)
}

/// Decomposes a weighted Q{P4}-free graph.
///
/// The weights are first reduced to a minimal function with the same `χ_q`
/// (greedy unit decrements in ascending vertex order), whose support then
/// induces a connected graph. Its co-components are the parts. Inside a part
/// the maximal homogeneous sets are cliques; each is collapsed onto its lowest
/// vertex carrying the summed weight, which leaves a prime quotient without a
/// clique-separator of modules. Each of these facts is checked as it is used.
pub fn decompose_qp4(g: &Graph, q: &VertexWeights) -> Result<Decomposition> {
    q.check_len(g.n())?;
    if g.n() == 0 {
        return Err(Error::InvalidArgument("cannot decompose the empty graph".into()));
    }
    if let Some(w) = find_induced(g, q_p4()) {
        return Err(Error::ForbiddenSubgraph { pattern: "Q{P4}".into(), witness: w.set() });
    }
    let support = q.support();
    if support.is_empty() {
        let part = DecompositionPart {
            vertices: VertexSet::singleton(0),
            weights: VertexWeights::zeros(g.n()),
            bags: Vec::new(),
            quotient: Graph::empty(0)?,
        };
        return Ok(Decomposition { minimal_weights: q.clone(), parts: vec![part] });
    }

    let minimal = lift(g.n(), support, &minimalize(&g.induced(support)?, &q.project(support))?);
    let s = minimal.support();
    if g.components_within(s).len() != 1 {
        return Err(invariant(format!("support {s} of a minimal weight function is disconnected")));
    }
    let parts = g
        .co_components_within(s)
        .into_iter()
        .map(|c| collapse(g, &minimal.restricted_to(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { minimal_weights: minimal, parts })
}

/// Spreads weights on the members of `s` (ascending) back over `n` vertices.
fn lift(n: usize, s: VertexSet, w: &VertexWeights) -> VertexWeights {
    let mut out = vec![0; n];
    for (i, u) in s.iter().enumerate() {
        out[u] = w[i];
    }
    VertexWeights::from(out)
}

/// Collapses the maximal homogeneous sets of a co-connected part.
fn collapse(g: &Graph, q: &VertexWeights) -> Result<DecompositionPart> {
    let s = q.support();
    if g.components_within(s).len() != 1 {
        return Err(invariant(format!("part {s} of a minimal weight function is disconnected")));
    }
    let verts = s.to_vec();
    let h = g.induced(s)?;
    let homs = match maximal_homogeneous_sets(&h)? {
        HomogeneousSets::Disjoint(sets) => sets,
        HomogeneousSets::Overlapping(_) => {
            return Err(invariant(format!("part {s} has overlapping maximal homogeneous sets")));
        }
    };

    let mut weights = q.clone();
    let mut bag_of_rep: Vec<(usize, VertexSet)> = Vec::new();
    let mut covered = VertexSet::EMPTY;
    for m in homs {
        let bag: VertexSet = m.vertices.iter().map(|i| verts[i]).collect();
        if !g.is_clique(bag) {
            return Err(invariant(format!("maximal homogeneous set {bag} is not a clique")));
        }
        let rep = bag.first().expect("homogeneous sets are nonempty");
        let total = q.weight_of(bag);
        for u in bag {
            weights = weights.with(u, 0);
        }
        weights = weights.with(rep, total);
        bag_of_rep.push((rep, bag));
        covered |= bag;
    }
    for u in s - covered {
        bag_of_rep.push((u, VertexSet::singleton(u)));
    }
    bag_of_rep.sort();

    let quotient = g.induced(weights.support())?;
    if !is_prime(&quotient) {
        return Err(invariant(format!("quotient of part {s} is not prime")));
    }
    if let Some(sep) = find_clique_separator_of_modules(&quotient)? {
        return Err(invariant(format!(
            "quotient of part {s} has the clique-separator of modules {}",
            sep.separator
        )));
    }
    Ok(DecompositionPart {
        vertices: s,
        weights,
        bags: bag_of_rep.into_iter().map(|(_, b)| b).collect(),
        quotient,
    })
}

impl Decomposition {
    /// Checks every structural property against `(g, q)`, including
    /// `Σ χ_q(G[M_i]) = χ_q(G)` and `χ_q(G[M_i]) = χ_{q_i}(G)`.
    pub fn validate(&self, g: &Graph, q: &VertexWeights) -> Result<()> {
        q.check_len(g.n())?;
        if self.parts.is_empty() {
            return Err(invariant("decomposition has no parts".into()));
        }
        let support = q.support();
        if support.is_empty() {
            return if self.parts.len() == 1 && self.parts[0].weights.total() == 0 {
                Ok(())
            } else {
                Err(invariant("zero weights must give a single zero part".into()))
            };
        }

        let mut seen = VertexSet::EMPTY;
        for p in &self.parts {
            if p.vertices.is_empty() || p.vertices.intersects(seen) {
                return Err(invariant(format!("part {} is empty or overlaps another", p.vertices)));
            }
            if !p.vertices.is_subset(support) {
                return Err(invariant(format!("part {} leaves the support of q", p.vertices)));
            }
            if !g.is_complete_between(&EdgeCut::new(seen, p.vertices)?) {
                return Err(invariant(format!("part {} is not joined to the earlier parts", p.vertices)));
            }
            seen |= p.vertices;
            self.validate_part(g, p)?;
        }

        let chi = chi_weighted(g, q)?;
        let minimal = self.minimal_weights.le(q) && chi_weighted(g, &self.minimal_weights)? == chi;
        if !minimal {
            return Err(invariant("minimal weights do not preserve χ_q".into()));
        }
        let q_is_minimal = &self.minimal_weights == q;
        let mut sum = 0;
        for p in &self.parts {
            let on_part = q.restricted_to(p.vertices);
            let chi_part = chi_weighted(g, &on_part)?;
            if chi_part != chi_weighted(g, &p.weights)? {
                return Err(invariant(format!("part {}: χ_q(G[M]) differs from χ of its quotient weights", p.vertices)));
            }
            let (w_part, w_quot) = (clique_number_weighted(g, &on_part), clique_number_weighted(g, &p.weights));
            if w_part < w_quot || (q_is_minimal && w_part != w_quot) {
                return Err(invariant(format!("part {}: clique numbers {w_part} vs {w_quot}", p.vertices)));
            }
            sum += chi_part;
        }
        if sum != chi {
            return Err(invariant(format!("parts sum to {sum}, χ_q(G) = {chi}")));
        }
        Ok(())
    }

    fn validate_part(&self, g: &Graph, p: &DecompositionPart) -> Result<()> {
        let fail = |what: String| Err(invariant(format!("part {}: {what}", p.vertices)));
        let reps = p.weights.support();
        if !reps.is_subset(p.vertices) || reps.len() != p.bags.len() {
            return fail("weights do not match the bags".into());
        }
        if p.quotient != g.induced(reps)? {
            return fail("stored quotient is not G[q_i]".into());
        }
        let mut covered = VertexSet::EMPTY;
        for (a, (ra, ba)) in reps.iter().zip(&p.bags).enumerate() {
            if !ba.contains(ra) || !g.is_clique(*ba) || ba.intersects(covered) {
                return fail(format!("bag {ba} is not a clique around its representative"));
            }
            covered |= *ba;
            for (rb, bb) in reps.iter().zip(&p.bags).skip(a + 1) {
                let cut = EdgeCut::new(*ba, *bb)?;
                let ok = if g.has_edge(ra, rb) {
                    g.is_complete_between(&cut)
                } else {
                    g.is_anticomplete_between(&cut)
                };
                if !ok {
                    return fail(format!("bags {ba} and {bb} do not follow the quotient"));
                }
            }
        }
        if covered != p.vertices {
            return fail("bags do not cover the part".into());
        }
        if !is_prime(&p.quotient) {
            return fail("quotient is not prime".into());
        }
        if p.quotient.n() > 0 && find_clique_separator_of_modules(&p.quotient)?.is_some() {
            return fail("quotient has a clique-separator of modules".into());
        }
        Ok(())
    }
}
