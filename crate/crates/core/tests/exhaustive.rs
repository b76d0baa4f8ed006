use std::collections::BTreeSet;

use distinguishing::enumerate::{all_rooted_trees, all_trees, all_unicyclic, census, CensusOptions, GeneratorConfig};
use distinguishing::oracle;
use distinguishing::report::Family;
use distinguishing::rooted::{root_at, tree_aut_order};
use distinguishing::tree_dist::rooted_d;
use distinguishing::unicyclic::{
    cycle_symmetries, decompose, derive_cycle_tables, edge_stabilizer, vertex_stabilizer, Dihedral,
};
use num_bigint::BigUint;

#[test]
fn tree_automorphism_orders_match_oracle() {
    for n in 1..=9 {
        for t in all_trees(n).unwrap() {
            let count = oracle::automorphisms(&t).unwrap().len();
            assert_eq!(tree_aut_order(&t).unwrap(), BigUint::from(count), "{}", t.to_edge_list());
        }
    }
}

#[test]
fn cycle_symmetries_are_projected_automorphisms() {
    for n in 3..=9 {
        for g in all_unicyclic(n).unwrap() {
            let d = decompose(&g).unwrap();
            let cyc = d.cycle();
            let t = cyc.len();
            let pos = |v: usize| cyc.iter().position(|&c| c == v).unwrap();
            let projected: BTreeSet<Dihedral> = oracle::automorphisms(&g)
                .unwrap()
                .iter()
                .map(|p| {
                    let (a, b) = (pos(p.apply(cyc[0])), pos(p.apply(cyc[1])));
                    *Dihedral::all(t)
                        .iter()
                        .find(|s| s.vertex(0) == a && s.vertex(1) == b)
                        .unwrap()
                })
                .collect();
            let group: BTreeSet<Dihedral> = cycle_symmetries(&d).elements().iter().copied().collect();
            assert_eq!(projected, group, "{}", g.to_edge_list());
        }
    }
}

#[test]
fn rooted_d_matches_oracle() {
    for n in 1..=7 {
        for t in all_rooted_trees(n).unwrap() {
            let r = root_at(&t, 0).unwrap();
            assert_eq!(rooted_d(&r), oracle::brute_rooted_d_edge(&r).unwrap(), "{}", t.to_edge_list());
        }
    }
}

#[test]
fn cycle_tables_contain_stabilizers() {
    let tables = derive_cycle_tables().unwrap();
    for t in 3..=5 {
        for (input, output) in &tables.edge_to_vertex[&t] {
            assert!(vertex_stabilizer(output).is_subset(&edge_stabilizer(input)));
        }
        for (input, output) in &tables.vertex_to_edge[&t] {
            assert!(edge_stabilizer(output).is_subset(&vertex_stabilizer(input)));
        }
    }
    assert_eq!(derive_cycle_tables().unwrap(), tables);
}

#[test]
fn census_witnesses_pass_the_oracle() {
    for (family, max_n) in [(Family::Tree, 9), (Family::Unicyclic, 8)] {
        let cfg = GeneratorConfig::new(family, max_n);
        for item in census(&cfg, &CensusOptions::default()).unwrap() {
            let (g, r) = item.unwrap();
            let v = r.vertex_witness().unwrap().unwrap();
            let e = r.edge_witness().unwrap().unwrap();
            assert_eq!(v.len(), g.n());
            assert_eq!(e.len(), g.m());
            assert!(oracle::is_distinguishing(&g, &v).unwrap(), "{}", g.to_edge_list());
            assert!(oracle::is_distinguishing(&g, &e).unwrap(), "{}", g.to_edge_list());
        }
    }
}

#[test]
fn unicyclic_values_match_oracle() {
    for n in 3..=8 {
        for g in all_unicyclic(n).unwrap() {
            let a = distinguishing::unicyclic::UnicyclicAnalysis::new(&g).unwrap();
            assert_eq!(a.d().unwrap(), oracle::brute_d(&g).unwrap(), "{}", g.to_edge_list());
            assert_eq!(a.dprime().unwrap(), oracle::brute_dprime(&g).unwrap(), "{}", g.to_edge_list());
        }
    }
}
