//! Induced-subgraph detection, the named pattern zoo, odd holes and perfection,
//! and the hereditary classes defined by forbidding them.

mod classes;
mod holes;
mod matcher;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use classes::{is_class_member, GraphClass};
pub use holes::{find_odd_hole, has_odd_hole, is_perfect};
pub use matcher::{are_isomorphic, find_induced_map, find_isomorphism};

/// Vertices of a host graph inducing a copy of some pattern. `vertices[i]` is
/// the host vertex playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The named small graphs used as forbidden induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    ThreeK1,
    TwoK2,
    C4,
    Paw,
    Banner,
    CoBanner,
    Bull,
    C5,
    Gem,
    P5,
    Paraglider,
    W5,
    P4,
}

impl Pattern {
    pub const ALL: [Pattern; 13] = [
        Pattern::ThreeK1,
        Pattern::TwoK2,
        Pattern::C4,
        Pattern::Paw,
        Pattern::Banner,
        Pattern::CoBanner,
        Pattern::Bull,
        Pattern::C5,
        Pattern::Gem,
        Pattern::P5,
        Pattern::Paraglider,
        Pattern::W5,
        Pattern::P4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::ThreeK1 => "3K1",
            Pattern::TwoK2 => "2K2",
            Pattern::C4 => "C4",
            Pattern::Paw => "paw",
            Pattern::Banner => "banner",
            Pattern::CoBanner => "cobanner",
            Pattern::Bull => "bull",
            Pattern::C5 => "C5",
            Pattern::Gem => "gem",
            Pattern::P5 => "P5",
            Pattern::Paraglider => "paraglider",
            Pattern::W5 => "W5",
            Pattern::P4 => "P4",
        }
    }

    fn edges(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            Pattern::ThreeK1 => (3, &[]),
            Pattern::TwoK2 => (4, &[(0, 1), (2, 3)]),
            Pattern::C4 => (4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            // pendant 0 on the triangle 1,2,3
            Pattern::Paw => (4, &[(0, 1), (1, 2), (2, 3), (1, 3)]),
            // pendant 0 on the square 1-2-3-4
            Pattern::Banner => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]),
            // path 0-1-2 ending in the triangle 2,3,4
            Pattern::CoBanner => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]),
            // triangle 1,2,4 with pendants 0 (at 1) and 3 (at 2)
            Pattern::Bull => (5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]),
            Pattern::C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            // path 0-1-2-3 plus 4 adjacent to all of it
            Pattern::Gem => (5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
            Pattern::P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            // K_{2,3} on {0,1} x {2,3,4} plus the edge 3-4
            Pattern::Paraglider => {
                (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)])
            }
            // hub 0 on the rim 1-2-3-4-5
            Pattern::W5 => (
                6,
                &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
            ),
            Pattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
        }
    }

    pub fn graph(self) -> &'static Graph {
        static ZOO: OnceLock<Vec<Graph>> = OnceLock::new();
        let zoo = ZOO.get_or_init(|| {
            Pattern::ALL
                .iter()
                .map(|p| {
                    let (n, edges) = p.edges();
                    Graph::from_edges(n, edges).expect("pattern edge lists are valid")
                })
                .collect()
        });
        &zoo[self as usize]
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim();
        Pattern::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(key))
            .or_else(|| (key.eq_ignore_ascii_case("co-banner")).then_some(Pattern::CoBanner))
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

/// An induced copy of `h` in `g`, if any.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Witness> {
    find_induced_map(g, h).map(|vertices| Witness { vertices })
}

pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced_map(g, h).is_some()
}

/// `Q{F}`: the path `u1 u2 u3 u4` with `u3` replaced by a copy of `F` whose
/// vertices are all adjacent to `u2` and `u4`. Vertex layout: `u1 = 0`,
/// `u2 = 1`, the copy of `F` at `2..2+|F|`, `u4` last.
pub fn build_qf(f: &Graph) -> Result<Graph> {
    if f.n() == 0 {
        return Err(Error::InvalidArgument("Q{F} needs a nonempty F".into()));
    }
    let n = f.n() + 3;
    let u4 = n - 1;
    let mut edges: Vec<(usize, usize)> = f.edges().iter().map(|&(a, b)| (a + 2, b + 2)).collect();
    edges.push((0, 1));
    for x in 2..u4 {
        edges.push((1, x));
        edges.push((x, u4));
    }
    Graph::from_edges(n, &edges)
}

/// `Q{P4}`, cached.
pub fn q_p4() -> &'static Graph {
    static QP4: OnceLock<Graph> = OnceLock::new();
    QP4.get_or_init(|| build_qf(Pattern::P4.graph()).expect("Q{P4} fits"))
}

/// `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::complete_bipartite(a, b)
}
