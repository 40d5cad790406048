//! Backtracking search for induced copies of a small pattern graph.

use crate::graph::{Graph, VertexSet};

/// Vertex order for matching: start from a maximum-degree vertex, then keep
/// picking the vertex with the most already-ordered neighbours.
fn match_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.n() {
        let next = (h.vertices() - placed)
            .iter()
            .max_by_key(|&v| ((h.neighbors(v) & placed).len(), h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed = placed.with(next);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.h.degree(p);
        let mut cand = self.g.vertices() - self.used;
        for &q in &self.order[..depth] {
            let img = self.image[q];
            if self.h.has_edge(p, q) {
                cand &= self.g.neighbors(img);
            } else {
                cand = cand - self.g.neighbors(img);
            }
        }
        for v in cand {
            if self.g.degree(v) < need {
                continue;
            }
            self.image[p] = v;
            self.used = self.used.with(v);
            if self.extend(depth + 1) {
                return true;
            }
            self.used = self.used.without(v);
        }
        false
    }
}

fn non_edges(g: &Graph) -> usize {
    g.n() * g.n().saturating_sub(1) / 2 - g.edge_count()
}

/// Returns `image` with `image[i]` the host vertex playing pattern vertex `i`,
/// so that `g.induced_ordered(&image) == h`.
pub fn find_induced_map(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    if non_edges(h) > non_edges(g) {
        return None;
    }
    let mut s = Search {
        g,
        h,
        order: match_order(h),
        image: vec![usize::MAX; h.n()],
        used: VertexSet::EMPTY,
    };
    s.extend(0).then_some(s.image)
}

/// Isomorphism `g -> h` as a vertex map: `map[i]` is the vertex of `g`
/// corresponding to vertex `i` of `h`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    find_induced_map(g, h)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
