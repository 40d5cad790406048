use crate::graph::{Graph, VertexSet};
use crate::weights::VertexWeights;

struct MaxClique<'a> {
    g: &'a Graph,
    w: &'a [u32],
    best: u32,
    best_set: VertexSet,
}

impl MaxClique<'_> {
    fn weight(&self, s: VertexSet) -> u32 {
        s.iter().map(|u| self.w[u]).sum()
    }

    fn search(&mut self, cur: VertexSet, cur_w: u32, cand: VertexSet) {
        if cand.is_empty() {
            if cur_w > self.best {
                self.best = cur_w;
                self.best_set = cur;
            }
            return;
        }
        if cur_w + self.weight(cand) <= self.best {
            return;
        }
        let v = cand.first().unwrap();
        self.search(cur.with(v), cur_w + self.w[v], cand & self.g.neighbors(v));
        self.search(cur, cur_w, cand.without(v));
    }
}

/// Heaviest clique inside `within` under weights `w`.
pub(crate) fn max_weight_clique_in(g: &Graph, w: &[u32], within: VertexSet) -> (u32, VertexSet) {
    let mut s = MaxClique { g, w, best: 0, best_set: VertexSet::EMPTY };
    let cand = within & (0..g.n()).filter(|&u| w[u] > 0).collect::<VertexSet>();
    s.search(VertexSet::EMPTY, 0, cand);
    (s.best, s.best_set)
}

/// `ω_q(G)` together with a clique attaining it.
pub fn max_weight_clique(g: &Graph, q: &VertexWeights) -> (u32, VertexSet) {
    assert_eq!(q.len(), g.n(), "weight vector length");
    max_weight_clique_in(g, q.as_slice(), g.vertices())
}

pub fn clique_number_weighted(g: &Graph, q: &VertexWeights) -> u32 {
    max_weight_clique(g, q).0
}

pub fn clique_number(g: &Graph) -> u32 {
    clique_number_weighted(g, &VertexWeights::ones(g.n()))
}

/// `α_q(G) = ω_q(complement)`.
pub fn independence_number_weighted(g: &Graph, q: &VertexWeights) -> u32 {
    clique_number_weighted(&g.complement(), q)
}

pub fn independence_number(g: &Graph) -> u32 {
    clique_number(&g.complement())
}

/// Size of a greedily grown clique inside `within`; a cheap lower bound on χ.
pub(crate) fn greedy_clique(g: &Graph, within: VertexSet) -> usize {
    let mut cand = within;
    let mut size = 0;
    while !cand.is_empty() {
        let v = cand.iter().max_by_key(|&u| (g.neighbors(u) & cand).len()).unwrap();
        size += 1;
        cand &= g.neighbors(v);
    }
    size
}
