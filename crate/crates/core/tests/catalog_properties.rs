//! Properties checked over every graph of the bundled catalogs of
//! non-isomorphic graphs.

use std::path::PathBuf;

use chiforge_core::coloring::{chi_weighted_direct, chromatic_number, clique_number, clique_number_weighted};
use chiforge_core::decompose::{is_module, module_trichotomy};
use chiforge_core::patterns::{build_qf, contains_induced, is_perfect, Pattern};
use chiforge_core::{parse_graph6_many, write_graph6, Graph, VertexSet, VertexWeights};

fn catalog(n: usize) -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../catalogs/graphs_n{n}.g6"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph6_many(&text).unwrap()
}

/// χ and ω of every induced subgraph, by dynamic programming over subsets.
fn subset_chi_omega(g: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = g.n();
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size).map(|s| g.is_independent(VertexSet(s as u64))).collect();
    let mut chi = vec![0u32; size];
    let mut omega = vec![0u32; size];
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & !(1 << low);
        // ω: either skip the lowest vertex or keep it with its neighbours
        omega[s] = omega[rest].max(1 + omega[rest & g.rows()[low] as usize]);
        // χ: the colour class of the lowest vertex is an independent subset of s
        let mut best = u32::MAX;
        let mut t = rest;
        loop {
            let class = t | 1 << low;
            if independent[class] {
                best = best.min(1 + chi[s & !class]);
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        chi[s] = best;
    }
    (chi, omega)
}

#[test]
fn perfection_test_matches_colouring_definition() {
    for n in 1..=8 {
        for g in catalog(n) {
            let (chi, omega) = subset_chi_omega(&g);
            let perfect = chi.iter().zip(&omega).all(|(c, w)| c == w);
            assert_eq!(is_perfect(&g), perfect, "{}", write_graph6(&g));
            assert_eq!(chromatic_number(&g).unwrap().0, chi[(1 << n) - 1], "{}", write_graph6(&g));
        }
    }
}

#[test]
fn catalogs_round_trip_and_are_complete() {
    let counts = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &count) in (1..=8).zip(&counts) {
        let graphs = catalog(n);
        assert_eq!(graphs.len(), count);
        for g in &graphs {
            assert_eq!(chiforge_core::parse_graph6(&write_graph6(g)).unwrap(), *g);
        }
    }
}

#[test]
fn expansion_preserves_weighted_invariants() {
    for n in 1..=5 {
        for g in catalog(n) {
            for code in 0..3u32.pow(n as u32) {
                let q: Vec<u32> = (0..n).map(|i| code / 3u32.pow(i as u32) % 3).collect();
                let q = VertexWeights::from(q);
                let h = g.expansion(&q).unwrap();
                assert_eq!(clique_number(&h), clique_number_weighted(&g, &q));
                assert_eq!(chromatic_number(&h).unwrap().0, chi_weighted_direct(&g, &q).unwrap().0);
            }
        }
    }
}

#[test]
fn module_trichotomy_never_falls_through() {
    let k1 = Graph::empty(1).unwrap();
    let two_k1 = Graph::empty(2).unwrap();
    let forbidden = [(k1, "K1"), (two_k1, "2K1"), (Pattern::P4.graph().clone(), "P4")];
    let mut checked = 0;
    for n in 1..=8 {
        for g in catalog(n) {
            if !g.is_connected() {
                continue;
            }
            for (f, name) in &forbidden {
                if contains_induced(&g, &build_qf(f).unwrap()) {
                    continue;
                }
                for m in (1u64..1 << n).map(VertexSet).filter(|&m| is_module(&g, m)) {
                    module_trichotomy(&g, f, m)
                        .unwrap_or_else(|e| panic!("{} F={name} M={m}: {e}", write_graph6(&g)));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000);
}
