//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any fails.

use std::time::{Duration, Instant};

use distinguishing::colabel::{from_colabel, is_rooted_distinguishing, to_colabel};
use distinguishing::enumerate::{all_rooted_trees, all_unicyclic};
use distinguishing::fixtures::{cycle_with_leaves, double_star, spider_pair};
use distinguishing::oracle::{self, OracleConfig};
use distinguishing::rooted::{root_at, RootedTree};
use distinguishing::tree_dist::{classify_tree, count_edge_classes, count_edge_classes_exact};
use distinguishing::unicyclic::{unicyclic_d, unicyclic_dprime, UnicyclicAnalysis};
use distinguishing::verify::{verify, Claim, VerifyConfig};
use distinguishing::{EdgeLabeling, Graph, Label, VertexLabeling};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spider_pair_values() -> Outcome {
    let t = spider_pair();
    let start = Instant::now();
    let c = classify_tree(&t).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(t.n() == 18, || format!("expected 18 vertices, got {}", t.n()))?;
    ensure((c.d, c.dprime) == (2, 3), || format!("(D, D') = ({}, {})", c.d, c.dprime))?;
    ensure(c.in_family_t(), || "not recognized as a family member".into())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    let bd = oracle::brute_d(&t).map_err(|e| e.to_string())?;
    let bdp = oracle::brute_dprime(&t).map_err(|e| e.to_string())?;
    ensure((bd, bdp) == (2, 3), || format!("oracle (D, D') = ({bd}, {bdp})"))?;
    Ok(format!("D = 2, D' = 3, member, fast path {elapsed:.2?}, oracle agrees"))
}

fn sweep(claim: Claim, fast_max: usize, oracle_max: Option<usize>) -> Outcome {
    let mut fast = VerifyConfig::new(claim, fast_max);
    fast.jobs = 1;
    let f = verify(&fast).map_err(|e| e.to_string())?;
    ensure(f.is_clean(), || format!("{} violations in the fast sweep: {}", f.violations.len(), f.violations[0]))?;
    let mut detail = format!("fast: {} instances in {:.2?} single-threaded", f.instances(), f.elapsed);
    if let Some(m) = oracle_max {
        let mut o = VerifyConfig::new(claim, m);
        o.oracle_max_n = Some(m);
        o.jobs = jobs();
        let s = verify(&o).map_err(|e| e.to_string())?;
        ensure(s.is_clean(), || format!("{} violations in the oracle sweep: {}", s.violations.len(), s.violations[0]))?;
        detail += &format!("; oracle: {} instances in {:.2?}", s.oracle_checked(), s.elapsed);
    }
    Ok(detail + "; 0 violations")
}

fn random_rooted_tree(rng: &mut StdRng, n: usize) -> RootedTree {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let g = Graph::new(n, edges).expect("parent arrays give trees");
    root_at(&g, rng.gen_range(0..n)).expect("tree")
}

fn all_labelings(n: usize, k: Label) -> impl Iterator<Item = Vec<Label>> {
    let total = (k as usize).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let l = (code % k as usize) as Label + 1;
                code /= k as usize;
                l
            })
            .collect()
    })
}

fn colabel_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..10_000 {
        let n = rng.gen_range(1..=12);
        let r = random_rooted_tree(&mut rng, n);
        let k = rng.gen_range(1..=4);
        let labels: Vec<Label> = (0..n).map(|_| rng.gen_range(1..=k)).collect();
        let f = VertexLabeling::new(labels, k).unwrap();
        let g = to_colabel(&r, &f).unwrap();
        let back = from_colabel(&r, &g, f.get(r.root())).unwrap();
        ensure(back == f, || format!("round trip {i} changed the vertex labeling"))?;
        ensure(to_colabel(&r, &back).unwrap() == g, || format!("round trip {i} changed the edge labeling"))?;
    }
    let mut checked = 0usize;
    for n in 1..=8 {
        let trees = all_rooted_trees(n).unwrap();
        for k in [2, 3] {
            let counts: Vec<Result<usize, String>> = trees
                .par_iter()
                .map(|t| {
                    let r = root_at(t, 0).unwrap();
                    let mut c = 0;
                    for labels in all_labelings(n, k) {
                        let f = VertexLabeling::new(labels, k).unwrap();
                        let g = to_colabel(&r, &f).unwrap();
                        let verdicts = [
                            is_rooted_distinguishing(&r, &f).unwrap(),
                            is_rooted_distinguishing(&r, &g).unwrap(),
                            oracle::is_rooted_distinguishing_vertex(&r, &f).unwrap(),
                            oracle::is_rooted_distinguishing_edge(&r, &g).unwrap(),
                        ];
                        if verdicts.iter().any(|&v| v != verdicts[0]) {
                            return Err(format!("disagreement {verdicts:?} on {:?}", f.labels()));
                        }
                        c += 1;
                    }
                    Ok(c)
                })
                .collect();
            for c in counts {
                checked += c?;
            }
        }
    }
    Ok(format!("10000 random round trips exact; {checked} labelings of rooted trees n <= 8 agree with the oracle"))
}

fn counting_vs_oracle() -> Outcome {
    let mut cases = 0usize;
    for n in 1..=8 {
        let trees = all_rooted_trees(n).unwrap();
        let results: Vec<Result<usize, String>> = trees
            .par_iter()
            .map(|t| {
                let r = root_at(t, 0).unwrap();
                for k in 1..=3u32 {
                    let brute = oracle::brute_class_count(&r, k).map_err(|e| e.to_string())?;
                    let exact = count_edge_classes_exact(&r, k as u64);
                    let fast = count_edge_classes(&r, k as u64);
                    if exact != brute.into() {
                        return Err(format!("exact count {exact} vs oracle {brute} (n = {n}, k = {k})"));
                    }
                    let ok = match fast.exact() {
                        Some(v) => v == brute,
                        None => brute >= fast.cap(),
                    };
                    if !ok {
                        return Err(format!("count {fast} vs oracle {brute} (n = {n}, k = {k})"));
                    }
                }
                Ok(3)
            })
            .collect();
        for r in results {
            cases += r?;
        }
    }
    Ok(format!("{cases} (tree, k) pairs, zero discrepancies"))
}

fn known_values() -> Outcome {
    let mut cases: Vec<(String, Graph, (usize, usize))> = Vec::new();
    for t in 3..=12 {
        let want = if t <= 5 { 3 } else { 2 };
        cases.push((format!("C{t}"), Graph::cycle(t), (want, want)));
    }
    cases.push(("S(2,2)".into(), double_star(), (2, 3)));
    for m in 2..=6 {
        cases.push((format!("K1,{m}"), Graph::star(m), (m, m)));
    }
    for (name, g, want) in &cases {
        let fast = if g.m() == g.n() {
            (unicyclic_d(g).unwrap(), unicyclic_dprime(g).unwrap())
        } else {
            let c = classify_tree(g).unwrap();
            (c.d, c.dprime)
        };
        let brute = (oracle::brute_d(g).unwrap(), oracle::brute_dprime(g).unwrap());
        ensure(fast == *want && brute == *want, || {
            format!("{name}: expected {want:?}, fast {fast:?}, oracle {brute:?}")
        })?;
    }
    Ok(format!("{} graphs match fast and oracle values", cases.len()))
}

fn transformation_soundness() -> Outcome {
    let mut graphs = Vec::new();
    for n in 3..=8 {
        graphs.extend(all_unicyclic(n).unwrap());
    }
    let cfg = OracleConfig::default();
    let results: Vec<Result<(usize, usize), String>> = graphs
        .par_iter()
        .map(|g| {
            let a = UnicyclicAnalysis::new(g).map_err(|e| e.to_string())?;
            let d = a.d().map_err(|e| e.to_string())?;
            let k = d as Label;
            let auts = oracle::automorphisms_with(g, &cfg).map_err(|e| e.to_string())?;
            let (mut nv, mut ne) = (0, 0);
            for labels in all_labelings(g.n(), k) {
                let f = VertexLabeling::new(labels, k).unwrap();
                let truth = oracle::is_distinguishing_by_enumeration(g, &f, &auts);
                if truth != a.is_distinguishing_vertex(&f).unwrap() {
                    return Err(format!("structural check disagrees on {:?}", f.labels()));
                }
                if truth {
                    let out = a.vertex_to_edge(&f).map_err(|e| format!("{e} on {:?}", f.labels()))?;
                    if out.k() != k || out.used() > d || !oracle::is_distinguishing(g, &out).unwrap() {
                        return Err(format!("vertex-to-edge output not distinguishing for {:?}", f.labels()));
                    }
                    nv += 1;
                }
            }
            let edges = g.edges().to_vec();
            for labels in all_labelings(g.m(), k) {
                let f = EdgeLabeling::for_graph(g, &labels, k).unwrap();
                let truth = oracle::is_distinguishing_by_enumeration(g, &f, &auts);
                if truth != a.is_distinguishing_edge(&f).unwrap() {
                    return Err(format!("structural check disagrees on edges {edges:?} / {labels:?}"));
                }
                if truth {
                    let out = a.edge_to_vertex(&f).map_err(|e| format!("{e} on {labels:?}"))?;
                    if out.k() != k || out.used() > d || !oracle::is_distinguishing(g, &out).unwrap() {
                        return Err(format!("edge-to-vertex output not distinguishing for {labels:?}"));
                    }
                    ne += 1;
                }
            }
            Ok((nv, ne))
        })
        .collect();
    let (mut nv, mut ne) = (0, 0);
    for r in results {
        let (a, b) = r?;
        nv += a;
        ne += b;
    }
    let sample = cycle_with_leaves(3, &[0]);
    ensure(unicyclic_d(&sample).unwrap() == 2, || "C3 with a leaf".into())?;
    Ok(format!(
        "{} graphs; {nv} vertex and {ne} edge labelings transformed, all outputs distinguishing",
        graphs.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("18-vertex spider pair: D = 2, D' = 3, family member", spider_pair_values),
        ("trees: D' = D + 1 iff family member (fast n <= 14, oracle n <= 10)", || {
            sweep(Claim::Trees, 14, Some(10))
        }),
        ("unicyclic: D' = D (fast n <= 11, oracle n <= 9)", || sweep(Claim::Unicyclic, 11, Some(9))),
        ("D' <= D + 1 on all trees and unicyclic graphs n <= 11", || sweep(Claim::Bound, 11, None)),
        ("co-labeling round trips and distinguishing equivalence", colabel_properties),
        ("class counts match brute force on rooted trees n <= 8, k <= 3", counting_vs_oracle),
        ("known values for cycles, S(2,2) and stars", known_values),
        ("vertex/edge transformations on unicyclic graphs n <= 8", transformation_soundness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
