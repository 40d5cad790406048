use proptest::prelude::*;

use super::*;
use crate::coloring::{chi_weighted, clique_number_weighted};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{contains_induced, q_p4, Pattern};
use crate::weights::VertexWeights;

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vs.iter().copied())
}

/// Module by the definition: every outside vertex sees all or none.
fn brute_module(g: &Graph, m: VertexSet) -> bool {
    !m.is_empty()
        && (0..g.n()).filter(|&v| !m.contains(v)).all(|v| {
            let hits = m.iter().filter(|&u| g.has_edge(u, v)).count();
            hits == 0 || hits == m.len()
        })
}

fn brute_maximal_homogeneous(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let homs: Vec<VertexSet> = (0u64..1 << n)
        .map(VertexSet)
        .filter(|&m| m.len() > 1 && m.len() < n && brute_module(g, m))
        .collect();
    let mut out: Vec<VertexSet> =
        homs.iter().copied().filter(|&m| !homs.iter().any(|&o| o != m && m.is_subset(o))).collect();
    out.sort();
    out
}

/// All set partitions of `items`.
fn partitions(items: &[usize]) -> Vec<Vec<VertexSet>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i] = q[i].with(first);
            out.push(q);
        }
        let mut q = p;
        q.push(VertexSet::singleton(first));
        out.push(q);
    }
    out
}

/// A clique-separator of modules by the definition: some partition of `X`
/// into pairwise completely joined modules, with `G - X` disconnected.
fn brute_has_separator(g: &Graph) -> bool {
    let all = g.vertices();
    (1u64..1 << g.n()).map(VertexSet).any(|x| {
        let rest = all - x;
        rest.len() >= 2
            && g.components_within(rest).len() > 1
            && partitions(&x.to_vec()).iter().any(|parts| {
                parts.iter().all(|&m| brute_module(g, m))
                    && parts.iter().enumerate().all(|(i, &a)| {
                        parts[i + 1..]
                            .iter()
                            .all(|&b| a.iter().all(|u| b.iter().all(|v| g.has_edge(u, v))))
                    })
            })
    })
}

#[test]
fn module_basics() {
    let c4 = Graph::cycle(4).unwrap();
    assert!(is_module(&c4, set(&[0, 2])));
    assert!(!is_module(&c4, set(&[0, 1])));
    assert!(!is_module(&c4, VertexSet::EMPTY));
    assert!(is_homogeneous_set(&c4, set(&[0, 2])));
    assert!(!is_homogeneous_set(&c4, c4.vertices()));
    assert_eq!(module_closure(&Graph::path(4).unwrap(), set(&[0, 1])), set(&[0, 1, 2, 3]));
    let m = ModuleSet::new(&c4, set(&[1, 3])).unwrap();
    assert!(m.homogeneous);
    assert!(!ModuleSet::new(&c4, set(&[2])).unwrap().homogeneous);
    assert!(ModuleSet::new(&c4, set(&[1, 2])).is_err());
}

#[test]
fn primality_examples() {
    assert!(is_prime(Pattern::P4.graph()));
    assert!(!is_prime(&Graph::cycle(4).unwrap()));
    assert!(is_prime(&Graph::cycle(5).unwrap()));
    assert!(is_prime(&Graph::complete(2).unwrap()));
    assert!(!is_prime(&Graph::complete(3).unwrap()));
    assert!(is_prime(Pattern::Bull.graph()));
}

#[test]
fn maximal_homogeneous_examples() {
    let p4 = maximal_homogeneous_sets(Pattern::P4.graph()).unwrap();
    assert_eq!(p4, HomogeneousSets::Disjoint(vec![]));

    let g = Graph::cycle(5).unwrap().expansion(&VertexWeights::from(vec![2, 1, 1, 1, 1])).unwrap();
    let hs = maximal_homogeneous_sets(&g).unwrap();
    assert!(hs.is_disjoint());
    assert_eq!(hs.sets().iter().map(|m| m.vertices).collect::<Vec<_>>(), vec![set(&[0, 1])]);

    let k4 = maximal_homogeneous_sets(&Graph::complete(4).unwrap()).unwrap();
    assert!(!k4.is_disjoint());
    assert_eq!(k4.sets().len(), 4);
    assert!(k4.sets().iter().all(|m| m.vertices.len() == 3 && m.homogeneous));

    // two co-components: the sides of K_{2,3}
    let k23 = maximal_homogeneous_sets(&Graph::complete_bipartite(2, 3).unwrap()).unwrap();
    assert!(k23.is_disjoint());
    assert_eq!(k23.sets().len(), 2);

    assert_eq!(maximal_homogeneous_sets(&Graph::empty(2).unwrap()), Err(Error::Disconnected));
}

#[test]
fn separator_examples() {
    let p4 = Graph::path(4).unwrap();
    let sep = find_clique_separator_of_modules(&p4).unwrap().unwrap();
    assert_eq!(sep.separator, set(&[1]));
    assert_eq!((sep.side1, sep.side2), (set(&[0, 1]), set(&[1, 2, 3])));
    sep.validate(&p4).unwrap();

    assert!(find_clique_separator_of_modules(&Graph::cycle(5).unwrap()).unwrap().is_none());

    // C4 has no clique cutset; its separator is a non-adjacent twin pair
    let c4 = Graph::cycle(4).unwrap();
    let sep = find_clique_separator_of_modules(&c4).unwrap().unwrap();
    assert_eq!(sep.separator, set(&[0, 2]));
    assert_eq!(sep.modules, vec![set(&[0, 2])]);
    sep.validate(&c4).unwrap();

    assert_eq!(find_clique_separator_of_modules(&Graph::empty(3).unwrap()), Err(Error::Disconnected));
}

/// Two C5s glued along one vertex which is then expanded into two
/// non-adjacent twins 0 and 1.
fn twin_glued_c5s() -> Graph {
    let mut edges = vec![(2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (8, 9)];
    for t in [0, 1] {
        edges.extend([(t, 2), (t, 5), (t, 6), (t, 9)]);
    }
    Graph::from_edges(10, &edges).unwrap()
}

#[test]
fn separator_of_non_clique_module() {
    let g = twin_glued_c5s();
    let sep = find_clique_separator_of_modules(&g).unwrap().unwrap();
    assert_eq!(sep.separator, set(&[0, 1]));
    assert!(!g.is_clique(sep.separator));
    sep.validate(&g).unwrap();
    assert_eq!(sep.side1, set(&[0, 1, 2, 3, 4, 5]));

    for q in [vec![1; 10], vec![2, 1, 1, 2, 1, 1, 1, 1, 2, 1], vec![0, 3, 1, 1, 1, 1, 2, 0, 1, 1]] {
        let q = VertexWeights::from(q);
        let chi = chi_weighted(&g, &q).unwrap();
        let sides = [sep.side1, sep.side2].map(|s| chi_weighted(&g, &q.restricted_to(s)).unwrap());
        assert_eq!(chi, sides[0].max(sides[1]));
        let omega = clique_number_weighted(&g, &q);
        let sides = [sep.side1, sep.side2].map(|s| clique_number_weighted(&g, &q.restricted_to(s)));
        assert_eq!(omega, sides[0].max(sides[1]));
    }
}

#[test]
fn separator_search_is_capped() {
    let big = Graph::cycle(SEPARATOR_SEARCH_MAX_VERTICES + 1).unwrap();
    assert!(matches!(find_clique_separator_of_modules(&big), Err(Error::Budget(_))));
}

#[test]
fn decompose_complete_graph() {
    let k5 = Graph::complete(5).unwrap();
    let d = decompose_qp4(&k5, &VertexWeights::ones(5)).unwrap();
    assert_eq!(d.parts.len(), 5);
    for (i, p) in d.parts.iter().enumerate() {
        assert_eq!(p.vertices, VertexSet::singleton(i));
        assert_eq!(p.quotient, Graph::complete(1).unwrap());
    }
    d.validate(&k5, &VertexWeights::ones(5)).unwrap();
}

#[test]
fn decompose_prime_c5() {
    let c5 = Graph::cycle(5).unwrap();
    let q = VertexWeights::ones(5);
    let d = decompose_qp4(&c5, &q).unwrap();
    assert_eq!(d.parts.len(), 1);
    assert_eq!(d.parts[0].vertices, c5.vertices());
    assert_eq!(d.parts[0].weights, q);
    assert_eq!(d.parts[0].quotient, c5);
    d.validate(&c5, &q).unwrap();
}

#[test]
fn decompose_w5_into_hub_and_rim() {
    let w5 = Pattern::W5.graph();
    let q = VertexWeights::ones(6);
    let d = decompose_qp4(w5, &q).unwrap();
    assert_eq!(d.parts.len(), 2);
    assert_eq!(d.parts[0].vertices, set(&[0]));
    assert_eq!(d.parts[0].quotient, Graph::complete(1).unwrap());
    assert_eq!(d.parts[1].vertices, set(&[1, 2, 3, 4, 5]));
    assert_eq!(d.parts[1].quotient, Graph::cycle(5).unwrap());
    d.validate(w5, &q).unwrap();
}

#[test]
fn decompose_collapses_clique_bags() {
    // (2,1,2,1,1) is a minimal weighting of C5 with χ = 4
    let g = Graph::cycle(5).unwrap().expansion(&VertexWeights::from(vec![2, 1, 2, 1, 1])).unwrap();
    let q = VertexWeights::ones(7);
    let d = decompose_qp4(&g, &q).unwrap();
    assert_eq!(d.minimal_weights, q);
    assert_eq!(d.parts.len(), 1);
    let p = &d.parts[0];
    assert_eq!(p.weights.as_slice(), &[2, 0, 1, 2, 0, 1, 1]);
    assert_eq!(p.bags, vec![set(&[0, 1]), set(&[2]), set(&[3, 4]), set(&[5]), set(&[6])]);
    assert_eq!(p.quotient, Graph::cycle(5).unwrap());
    d.validate(&g, &q).unwrap();
}

#[test]
fn decompose_reduces_non_minimal_weights() {
    let p5 = Graph::path(5).unwrap();
    let q = VertexWeights::ones(5);
    let d = decompose_qp4(&p5, &q).unwrap();
    assert_eq!(d.minimal_weights.as_slice(), &[0, 0, 0, 1, 1]);
    assert_eq!(d.parts.len(), 2);
    d.validate(&p5, &q).unwrap();
}

#[test]
fn decompose_degenerate_and_rejected_inputs() {
    let c5 = Graph::cycle(5).unwrap();
    let d = decompose_qp4(&c5, &VertexWeights::zeros(5)).unwrap();
    assert_eq!(d.parts.len(), 1);
    assert_eq!(d.parts[0].vertices, VertexSet::singleton(0));
    assert_eq!(d.parts[0].weights.total(), 0);
    d.validate(&c5, &VertexWeights::zeros(5)).unwrap();

    match decompose_qp4(q_p4(), &VertexWeights::ones(7)) {
        Err(Error::ForbiddenSubgraph { witness, .. }) => assert_eq!(witness.len(), 7),
        other => panic!("expected a precondition error, got {other:?}"),
    }
    assert!(matches!(
        decompose_qp4(&c5, &VertexWeights::ones(4)),
        Err(Error::WeightLength { expected: 5, got: 4 })
    ));
}

#[test]
fn decomposition_json_shape() {
    let d = decompose_qp4(Pattern::W5.graph(), &VertexWeights::ones(6)).unwrap();
    let v = serde_json::to_value(&d).unwrap();
    assert_eq!(v["parts"][1]["vertices"], serde_json::json!([1, 2, 3, 4, 5]));
    assert_eq!(v["parts"][1]["quotient"], "Dhc");
    assert_eq!(v["parts"][0]["weights"], serde_json::json!([1, 0, 0, 0, 0, 0]));
    let back: Decomposition = serde_json::from_value(v).unwrap();
    assert_eq!(back, d);
}

#[test]
fn trichotomy_examples() {
    let c5 = Graph::cycle(5).unwrap();
    let p4 = Pattern::P4.graph();
    assert_eq!(module_trichotomy(&c5, p4, set(&[0])).unwrap(), Trichotomy::FFree);

    // diamond: K2 joined with 2K1
    let diamond = Graph::complete(2).unwrap().join(&Graph::empty(2).unwrap()).unwrap();
    let k1 = Graph::empty(1).unwrap();
    assert_eq!(module_trichotomy(&diamond, &k1, set(&[2, 3])).unwrap(), Trichotomy::EmptyShell);

    let p3 = Graph::path(3).unwrap();
    match module_trichotomy(&p3, &k1, set(&[0])).unwrap() {
        Trichotomy::Separator(sep) => assert_eq!(sep.separator, set(&[1])),
        other => panic!("expected a separator, got {other:?}"),
    }

    assert!(matches!(module_trichotomy(&c5, &k1, set(&[0])), Err(Error::ForbiddenSubgraph { .. })));
    assert!(matches!(module_trichotomy(&c5, p4, set(&[0, 1])), Err(Error::InvalidArgument(_))));
}

proptest! {
    #[test]
    fn homogeneous_sets_match_exhaustive_search(n in 1usize..=8, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        prop_assume!(g.is_connected());
        let hs = maximal_homogeneous_sets(&g).unwrap();
        let mut got: Vec<VertexSet> = hs.sets().iter().map(|m| m.vertices).collect();
        got.sort();
        prop_assert_eq!(&got, &brute_maximal_homogeneous(&g));
        let disjoint = got.iter().enumerate().all(|(i, a)| got[i + 1..].iter().all(|b| !a.intersects(*b)));
        prop_assert_eq!(hs.is_disjoint(), disjoint);
        prop_assert_eq!(is_prime(&g), got.is_empty());
    }

    #[test]
    fn separator_search_matches_definition(n in 1usize..=7, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        prop_assume!(g.is_connected());
        let found = find_clique_separator_of_modules(&g).unwrap();
        prop_assert_eq!(found.is_some(), brute_has_separator(&g));
        if let Some(sep) = found {
            sep.validate(&g).unwrap();
        }
    }

    #[test]
    fn separator_splits_weighted_invariants(n in 3usize..=7, bits in any::<u64>(), ws in proptest::collection::vec(0u32..=2, 7)) {
        let g = graph_from_bits(n, bits);
        prop_assume!(g.is_connected());
        if let Some(sep) = find_clique_separator_of_modules(&g).unwrap() {
            let q = VertexWeights::from(ws[..n].to_vec());
            let chi = chi_weighted(&g, &q).unwrap();
            let c1 = chi_weighted(&g, &q.restricted_to(sep.side1)).unwrap();
            let c2 = chi_weighted(&g, &q.restricted_to(sep.side2)).unwrap();
            prop_assert_eq!(chi, c1.max(c2));
            let w1 = clique_number_weighted(&g, &q.restricted_to(sep.side1));
            let w2 = clique_number_weighted(&g, &q.restricted_to(sep.side2));
            prop_assert_eq!(clique_number_weighted(&g, &q), w1.max(w2));
        }
    }

    #[test]
    fn decomposition_satisfies_invariants(n in 1usize..=8, bits in any::<u64>(), ws in proptest::collection::vec(0u32..=2, 8)) {
        let g = graph_from_bits(n, bits);
        prop_assume!(!contains_induced(&g, q_p4()));
        let q = VertexWeights::from(ws[..n].to_vec());
        let d = decompose_qp4(&g, &q).unwrap();
        d.validate(&g, &q).unwrap();
    }
}
