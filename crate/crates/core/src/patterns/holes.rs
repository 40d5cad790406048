//! Odd-hole detection by depth-first enumeration of chordless paths, and
//! perfection testing through odd holes in the graph and its complement.

use crate::graph::{Graph, VertexSet};

struct HoleSearch<'a> {
    g: &'a Graph,
    start: usize,
    allowed: VertexSet,
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    /// `blocked` holds the path and every neighbour of the interior path
    /// vertices; the next vertex must avoid it to keep the path chordless.
    fn grow(&mut self, blocked: VertexSet) -> bool {
        let last = *self.path.last().unwrap();
        let cand = (self.g.neighbors(last) & self.allowed) - blocked;
        for v in cand {
            if self.g.has_edge(v, self.start) {
                let len = self.path.len() + 1;
                if len >= 5 && len % 2 == 1 {
                    self.path.push(v);
                    return true;
                }
                continue;
            }
            self.path.push(v);
            let next_blocked = blocked | self.g.closed_neighbors(last) | VertexSet::singleton(v);
            // the start vertex's neighbours stay available only as closing vertices,
            // which is handled above, so they never need to be blocked here
            if self.grow(next_blocked) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// An induced odd cycle of length at least 5, listed in cycle order.
pub fn find_odd_hole(g: &Graph) -> Option<Vec<usize>> {
    for s in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(s + 1);
        for p1 in g.neighbors(s) & allowed {
            let mut search = HoleSearch { g, start: s, allowed, path: vec![s, p1] };
            let blocked = VertexSet::singleton(s).with(p1);
            if search.grow(blocked) {
                return Some(search.path);
            }
        }
    }
    None
}

pub fn has_odd_hole(g: &Graph) -> bool {
    find_odd_hole(g).is_some()
}

/// Perfect iff neither `g` nor its complement has an odd hole.
pub fn is_perfect(g: &Graph) -> bool {
    !has_odd_hole(g) && !has_odd_hole(&g.complement())
}
