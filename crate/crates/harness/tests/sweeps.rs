use std::path::PathBuf;

use chiforge_core::coloring::{chi, clique_number};
use chiforge_core::patterns::{are_isomorphic, GraphClass, Pattern};
use chiforge_core::{parse_graph6, Graph, VertexWeights};
use chiforge_harness::verify::{
    superadditive_closure, verify_c5_closed_form, verify_critical_structure, verify_decomposition,
    verify_dual_oracle, verify_p5c4_bound, verify_prime_dichotomy, verify_reduction, verify_reed_bound,
    verify_superadditivity, weight_grid, CriticalClass, ReductionPair,
};
use chiforge_harness::{
    enumerate_labeled, recognize_clique_expansion, CatalogSource, ExpansionBase, HarnessError, VerificationReport,
};

fn catalog(n: usize) -> CatalogSource {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalogs");
    CatalogSource::graph6_file(dir.join(format!("graphs_n{n}.g6")))
}

fn catalogs_up_to(n: usize) -> CatalogSource {
    (2..=n).fold(catalog(1), |s, k| s.and(catalog(k)))
}

#[test]
fn labeled_enumeration_counts() {
    assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
    assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
    assert_eq!(enumerate_labeled(6).unwrap().count(), 32768);
    assert!(matches!(enumerate_labeled(8), Err(HarnessError::Core(chiforge_core::Error::Budget(_)))));
    assert!(enumerate_labeled(0).is_err());
}

#[test]
fn labeled_source_spans_all_orders() {
    let src = CatalogSource::parse("builtin:3").unwrap();
    assert_eq!(src.collect().unwrap().len(), 1 + 2 + 8);
    assert!(CatalogSource::parse("nonsense").is_err());
}

#[test]
fn catalog_source_filters_by_class_and_connectivity() {
    let all = catalog(4).collect().unwrap();
    assert_eq!(all.len(), 11);
    assert_eq!(catalog(4).connected().collect().unwrap().len(), 6);
    let p5c4 = catalog(4).with_class(GraphClass::P5C4).collect().unwrap();
    assert_eq!(p5c4.len(), 10, "only C4 is excluded on four vertices");
}

#[test]
fn recognizes_c5_expansion_with_sizes() {
    let q = VertexWeights::from(vec![2, 1, 1, 1, 1]);
    let g = Pattern::C5.graph().expansion(&q).unwrap();
    let (base, sizes) = recognize_clique_expansion(&g).unwrap();
    assert_eq!(base, ExpansionBase::C5);
    assert_eq!(sizes, q);
}

#[test]
fn recognizes_relabelled_w5() {
    // hub moved to vertex 5, rim 0-1-2-3-4
    let g = Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4)],
    )
    .unwrap();
    let (base, sizes) = recognize_clique_expansion(&g).unwrap();
    assert_eq!(base, ExpansionBase::W5);
    assert_eq!(sizes.total(), 6);
    assert_eq!(base.graph().expansion(&sizes).unwrap().n(), 6);
}

#[test]
fn rejects_non_expansions() {
    assert!(recognize_clique_expansion(&Graph::complete(5).unwrap()).is_none());
    assert!(recognize_clique_expansion(&Graph::cycle(6).unwrap()).is_none());
    assert!(recognize_clique_expansion(&Graph::path(5).unwrap()).is_none());
}

#[test]
fn p5c4_table_on_small_orders() {
    let r = verify_p5c4_bound(&CatalogSource::labeled(5).unwrap()).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    let chi_at = |w: u32| r.table.iter().find(|t| t.omega == w).map(|t| t.max_chi);
    assert_eq!(chi_at(1), Some(1));
    assert_eq!(chi_at(2), Some(3));
    // some labelling of C5 is the ω = 2 witness
    let w = r.table.iter().find(|t| t.omega == 2).unwrap();
    assert!(are_isomorphic(&parse_graph6(&w.witness_graph6).unwrap(), Pattern::C5.graph()));
}

#[test]
fn p5c4_reaches_four_at_omega_three() {
    let r = verify_p5c4_bound(&catalogs_up_to(7)).unwrap();
    assert!(r.passed);
    let w3 = r.table.iter().find(|t| t.omega == 3).unwrap();
    assert_eq!(w3.max_chi, 4);
    let g = parse_graph6(&w3.witness_graph6).unwrap();
    assert_eq!((chi(&g).unwrap(), clique_number(&g)), (4, 3));
}

#[test]
fn c5_closed_form_small_totals() {
    let r = verify_c5_closed_form(8).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    assert!(r.checked > 1000);
}

#[test]
fn reed_bound_small() {
    let r = verify_reed_bound(&catalogs_up_to(6)).unwrap();
    assert!(r.passed, "{:?}", r.failures);
}

#[test]
fn critical_structure_small() {
    for class in CriticalClass::ALL {
        let r = verify_critical_structure(class, &catalogs_up_to(6)).unwrap();
        assert!(r.passed, "{}: {:?}", class.id(), r.failures);
    }
}

#[test]
fn reductions_small() {
    for pair in ReductionPair::ALL {
        let r = verify_reduction(pair, &catalogs_up_to(6)).unwrap();
        assert!(r.passed, "{}: {:?}", pair.id(), r.failures);
        assert!(r.table.iter().all(|t| t.n.is_some() && t.side.is_some()));
    }
}

#[test]
fn superadditivity_joins() {
    let src = catalogs_up_to(6);
    let r = verify_superadditivity(GraphClass::ThreeK1, 2, 2, &src).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    assert!(r.notes.iter().any(|n| n.contains("ω = 4, χ = 6")), "{:?}", r.notes);
    let r = verify_superadditivity(GraphClass::TwoK2, 2, 1, &src).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    assert!(r.notes.iter().any(|n| n.contains("ω = 3, χ = 4")), "{:?}", r.notes);
    assert!(verify_superadditivity(GraphClass::P5C4, 1, 1, &src).is_err());
}

#[test]
fn prime_dichotomy_small() {
    let r = verify_prime_dichotomy(&catalogs_up_to(7)).unwrap();
    assert!(r.passed, "{:?}", r.failures);
}

#[test]
fn decomposition_on_small_catalog() {
    let r = verify_decomposition(&catalogs_up_to(5), 7).unwrap();
    assert!(r.passed, "{:?}", r.failures);
    assert_eq!(r.seed, Some(7));
}

#[test]
fn weight_grid_shape() {
    let g = Graph::path(4).unwrap();
    let grid = weight_grid(&g, 0);
    assert_eq!(grid.len(), 81);
    assert!(grid.iter().all(|q| q.max() <= 2));
    let big = Graph::path(7).unwrap();
    let a = weight_grid(&big, 3);
    assert_eq!(a.len(), 64);
    assert_eq!(a, weight_grid(&big, 3));
    assert_ne!(a, weight_grid(&big, 4));
}

#[test]
fn superadditive_closure_is_superadditive() {
    let f = [(1, 1), (2, 3), (3, 4)].into_iter().collect();
    let c = superadditive_closure(&f, 6);
    assert_eq!(&c[..4], &[0, 1, 3, 4]);
    for a in 1..=6 {
        for b in 1..=6 - a {
            assert!(c[a + b] >= c[a] + c[b]);
        }
    }
}

#[test]
fn dual_oracle_is_deterministic() {
    let a = verify_dual_oracle(11, 50, 12).unwrap();
    let b = verify_dual_oracle(11, 50, 12).unwrap();
    assert!(a.passed, "{:?}", a.failures);
    assert_eq!(a, b);
}

#[test]
fn report_round_trips_and_writes() {
    let r = verify_p5c4_bound(&catalogs_up_to(5)).unwrap();
    let back: VerificationReport = serde_json::from_str(&r.to_json().unwrap()).unwrap();
    assert_eq!(back, r);
    let csv = r.to_csv().unwrap();
    assert!(csv.starts_with("omega,max_chi,witness_graph6\n"));
    let dir = tempfile::tempdir().unwrap();
    let (json, csv_path) = r.write_to(dir.path()).unwrap();
    assert!(json.ends_with("p5c4-bound.json"));
    assert_eq!(std::fs::read_to_string(csv_path).unwrap(), csv);
}

#[test]
fn reports_identical_across_runs() {
    let src = catalogs_up_to(6);
    let a = verify_critical_structure(CriticalClass::P5C4, &src).unwrap();
    let b = verify_critical_structure(CriticalClass::P5C4, &src).unwrap();
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
}
