use std::fmt;
use std::path::PathBuf;
use std::sync::OnceLock;

use chiforge_core::patterns::GraphClass;
use chiforge_core::{parse_graph6, Error, Graph};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};

/// Largest order for which every labeled graph is enumerated.
pub const LABELED_MAX_VERTICES: usize = 7;

/// The labeled graph on `n` vertices whose upper-triangle edge indicators,
/// in the order `(0,1), (0,2), (1,2), (0,3), ...`, are the low bits of `bits`.
pub fn labeled_graph(n: usize, bits: u64) -> Graph {
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj).expect("rows are symmetric and loop-free")
}

fn edge_slots(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn check_labeled(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("labeled enumeration starts at one vertex".into()).into());
    }
    if n > LABELED_MAX_VERTICES {
        return Err(Error::Budget(format!(
            "labeled enumeration stops at {LABELED_MAX_VERTICES} vertices; use a graph6 catalog for n = {n}"
        ))
        .into());
    }
    Ok(())
}

/// Every labeled graph on `n` vertices, each once.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_labeled(n)?;
    Ok((0..1u64 << edge_slots(n)).map(move |bits| labeled_graph(n, bits)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceKind {
    /// All labeled graphs on `1..=max_n` vertices.
    Labeled { max_n: usize },
    /// One graph6 string per line.
    Graph6File(PathBuf),
    Graphs(Vec<Graph>),
}

/// A stream of graphs: the union of its parts, narrowed by an optional class
/// and a connectivity flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSource {
    pub kinds: Vec<SourceKind>,
    pub class: Option<GraphClass>,
    pub connected_only: bool,
}

pub(crate) fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("CHIFORGE_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
    })
}

fn read_graph6_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| HarnessError::Io { path: path.clone(), source })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != chiforge_core::graph6::HEADER)
        .map(|(i, l)| {
            parse_graph6(l).map_err(|source| HarnessError::Catalog { path: path.clone(), line: i + 1, source })
        })
        .collect()
}

impl CatalogSource {
    pub fn labeled(max_n: usize) -> Result<Self> {
        check_labeled(max_n)?;
        Ok(Self::from_kind(SourceKind::Labeled { max_n }))
    }

    pub fn graph6_file(path: impl Into<PathBuf>) -> Self {
        Self::from_kind(SourceKind::Graph6File(path.into()))
    }

    pub fn graphs(graphs: Vec<Graph>) -> Self {
        Self::from_kind(SourceKind::Graphs(graphs))
    }

    fn from_kind(kind: SourceKind) -> Self {
        CatalogSource { kinds: vec![kind], class: None, connected_only: false }
    }

    /// Parses `builtin:<n>` or `file:<path>`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(n) = text.strip_prefix("builtin:") {
            let n = n.trim().parse::<usize>().map_err(|e| {
                Error::InvalidArgument(format!("bad vertex count in source {text:?}: {e}"))
            })?;
            Self::labeled(n)
        } else if let Some(path) = text.strip_prefix("file:") {
            Ok(Self::graph6_file(path))
        } else {
            Err(Error::InvalidArgument(format!("source {text:?} is neither builtin:<n> nor file:<path>")).into())
        }
    }

    /// The union of both sources; filters of `self` are kept.
    pub fn and(mut self, other: CatalogSource) -> Self {
        self.kinds.extend(other.kinds);
        self
    }

    pub fn with_class(mut self, class: GraphClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected_only || g.is_connected()) && self.class.is_none_or(|c| c.contains(g))
    }

    /// Folds every accepted graph on a worker pool (size capped by
    /// `CHIFORGE_THREADS`). `merge` must be associative and commutative for
    /// the result to be deterministic.
    pub fn fold<A, I, F, M>(&self, init: I, fold: F, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &Graph) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        let mut acc = init();
        for kind in &self.kinds {
            let part = match kind {
                SourceKind::Labeled { max_n } => pool().install(|| {
                    (1..=*max_n)
                        .map(|n| {
                            (0..1u64 << edge_slots(n))
                                .into_par_iter()
                                .map(|bits| labeled_graph(n, bits))
                                .filter(|g| self.accepts(g))
                                .fold(&init, |a, g| fold(a, &g))
                                .reduce(&init, &merge)
                        })
                        .fold(init(), &merge)
                }),
                SourceKind::Graph6File(path) => {
                    let graphs = read_graph6_file(path)?;
                    self.fold_slice(&graphs, &init, &fold, &merge)
                }
                SourceKind::Graphs(graphs) => self.fold_slice(graphs, &init, &fold, &merge),
            };
            acc = merge(acc, part);
        }
        Ok(acc)
    }

    fn fold_slice<A, I, F, M>(&self, graphs: &[Graph], init: &I, fold: &F, merge: &M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, &Graph) -> A + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        pool().install(|| {
            graphs
                .par_iter()
                .filter(|g| self.accepts(g))
                .fold(init, &fold)
                .reduce(init, merge)
        })
    }

    /// Collects the accepted graphs; meant for small sources.
    pub fn collect(&self) -> Result<Vec<Graph>> {
        let mut out = self.fold(Vec::new, |mut v, g| {
            v.push(g.clone());
            v
        }, |mut a, b| {
            a.extend(b);
            a
        })?;
        out.sort_by_key(|g| (g.n(), chiforge_core::write_graph6(g)));
        Ok(out)
    }
}

impl fmt::Display for CatalogSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .kinds
            .iter()
            .map(|k| match k {
                SourceKind::Labeled { max_n } => format!("builtin:{max_n}"),
                SourceKind::Graph6File(p) => format!("file:{}", p.display()),
                SourceKind::Graphs(g) => format!("inline:{}", g.len()),
            })
            .collect();
        write!(f, "{}", parts.join("+"))?;
        if let Some(c) = self.class {
            write!(f, " [{c}-free]")?;
        }
        if self.connected_only {
            write!(f, " [connected]")?;
        }
        Ok(())
    }
}
