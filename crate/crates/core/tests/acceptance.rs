//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Everything here is exact: no tolerances, no statistics. Naive reference
//! oracles live in this file and stay independent of the library's solvers.

use std::collections::BTreeSet;
use std::time::Instant;

use dkl_core::compose::{
    compose_ds, compose_ids, compose_im, lift_ds_witness, lift_ids_witness, ComposeKind,
    GadgetLabel,
};
use dkl_core::graph::{
    bipartite_degenerate_bound_check, cap_assignment_feasible, degeneracy_ordering, Graph,
};
use dkl_core::harness::{
    verify_enforcement, verify_kernel, verify_or_ds, verify_or_ids, verify_or_im,
    verify_reduction, KernelKind, ReductionKind, VerificationReport,
};
use dkl_core::oracles::{solve_ds, solve_ids, solve_im, solve_mpm, solve_x3c, Budget, Witness};
use dkl_core::problems::{
    gen_degenerate_bipartite, gen_mcc, gen_mcc_on_coloring, gen_mpm, gen_x3c, x3c_no_instance,
    MccInstance, MpmInstance, X3cInstance,
};
use dkl_core::reduce::CapVcVariant;

fn conclude(criterion: u32, name: &str, started: Instant, pass: bool) {
    println!(
        "criterion {criterion:2} ({name}): {} [{} ms]",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed().as_millis()
    );
    assert!(pass, "criterion {criterion} ({name}) failed");
}

fn report_failures(report: &VerificationReport) -> String {
    report
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
        .collect::<Vec<_>>()
        .join("; ")
}

#[test]
fn criterion_01_ds_composition_or_equivalence() {
    let started = Instant::now();
    let report = verify_or_ds(1, 2, 4, 6, 20260101, &Budget::default()).unwrap();
    assert_eq!(report.cases.len(), 9, "8 planted cases plus the all-NO case");
    let pass = report.pass();
    if !pass {
        eprintln!("{}", report_failures(&report));
    }
    conclude(1, "ds composition or-equivalence, tier A", started, pass);
}

#[test]
fn criterion_02_ds_composition_structure() {
    let started = Instant::now();
    let (d, t, n) = (2usize, 2usize, 4usize);
    let total = t.pow((d * (d + 2)) as u32);
    let batch: Vec<MpmInstance> = (0..total)
        .map(|j| gen_mpm(n, 4, 500 + j as u64, true).unwrap())
        .collect();
    let composed = compose_ds(&batch, d, t).unwrap();
    let k_ok = composed.k == 38;
    let degeneracy = degeneracy_ordering(&composed.graph).degeneracy;
    let degree_ok = composed
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, GadgetLabel::Rinst { .. }))
        .all(|(node, _)| composed.graph.degree(node) == d + 2);
    let plant_at = 37;
    let matching = solve_mpm(&batch[plant_at], &Budget::default()).unwrap();
    let Some(Witness::EdgeIds(ids)) = matching.witness else {
        panic!("planted instance must carry a matching")
    };
    // lift_ds_witness asserts size k and blue domination internally
    let lifted = lift_ds_witness(&composed, plant_at, &ids).unwrap();
    let lift_ok = lifted.len() == 38;
    let pass = k_ok && degeneracy <= d + 2 && degree_ok && lift_ok;
    if !pass {
        eprintln!(
            "k {} (want 38), degeneracy {degeneracy} (bound {}), degrees ok: {degree_ok}, lift ok: {lift_ok}",
            composed.k,
            d + 2
        );
    }
    conclude(2, "ds composition structure, tier B", started, pass);
}

#[test]
fn criterion_03_enforcement_solution() {
    let started = Instant::now();
    let mut pass = true;
    for (d, matrices, seed) in [(1usize, 25usize, 31u64), (2, 25, 32)] {
        let report = verify_enforcement(d, 2, 4, matrices, seed).unwrap();
        assert_eq!(report.cases.len(), matrices);
        if !report.pass() {
            eprintln!("d={d}: {}", report_failures(&report));
            pass = false;
        }
    }
    conclude(3, "enforcement solution, 50 random matrices", started, pass);
}

#[test]
fn criterion_04_ids_composition() {
    let started = Instant::now();
    // tier A: full OR-equivalence at d=1, t=2, n=3 (k = 4)
    let report = verify_or_ids(1, 2, 3, 1, 20260104, &Budget::default()).unwrap();
    let mut pass = report.pass();
    if !pass {
        eprintln!("{}", report_failures(&report));
    }
    {
        let batch = vec![
            gen_x3c(3, 1, 77, true).unwrap(),
            x3c_no_instance(3),
        ];
        let composed = compose_ids(&batch, 1, 2).unwrap();
        pass &= composed.k == 4;
        pass &= degeneracy_ordering(&composed.graph).degeneracy <= 5;
    }
    // tier B: d=2, t=2, n=6, witness lifting plus degeneracy only
    {
        let (d, t, n) = (2usize, 2usize, 6usize);
        let plant_at = 2;
        let batch: Vec<X3cInstance> = (0..t.pow(d as u32))
            .map(|j| {
                if j == plant_at {
                    gen_x3c(n, 5, 600, true).unwrap()
                } else {
                    x3c_no_instance(n)
                }
            })
            .collect();
        let composed = compose_ids(&batch, d, t).unwrap();
        let degeneracy = degeneracy_ordering(&composed.graph).degeneracy;
        let solved = solve_x3c(&batch[plant_at], &Budget::default()).unwrap();
        let Some(Witness::SetIndices(indices)) = solved.witness else {
            panic!("planted instance must carry a cover")
        };
        // lift_ids_witness asserts independence and domination internally
        let lifted = lift_ids_witness(&composed, &batch[plant_at], plant_at, &indices).unwrap();
        let ok = lifted.len() == 26 && composed.k == 26 && degeneracy <= d + 4;
        if !ok {
            eprintln!(
                "|D| {} (want 26), k {}, degeneracy {degeneracy} (bound {})",
                lifted.len(),
                composed.k,
                d + 4
            );
        }
        pass &= ok;
    }
    conclude(4, "ids composition", started, pass);
}

#[test]
fn criterion_05_im_composition() {
    let started = Instant::now();
    let budget = Budget::default();
    let (d, t, n, c) = (1usize, 2usize, 4usize, 4usize);
    let report = verify_or_im(d, t, n, c, 0.3, 20260105, &budget).unwrap();
    let mut pass = report.pass();
    if !pass {
        eprintln!("{}", report_failures(&report));
    }
    // structure on a planted composition
    let coloring = gen_mcc(n, c, 0.4, 88, true).unwrap().node_colors;
    let batch: Vec<MccInstance> = (0..t.pow(d as u32))
        .map(|j| gen_mcc_on_coloring(&coloring, c, 0.4, 900 + j as u64, j == 0).unwrap())
        .collect();
    let composed = compose_im(&batch, d, t).unwrap();
    let degeneracy = degeneracy_ordering(&composed.graph).degeneracy;
    pass &= degeneracy <= d + 3;
    // the induced matching bound on the instance part: at most C(c,2) + n - c
    let enforcement: BTreeSet<usize> = composed
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, GadgetLabel::X { .. } | GadgetLabel::Y { .. }))
        .map(|(node, _)| node)
        .collect();
    let (instance_part, _) = composed.graph.remove_nodes(&enforcement);
    let bound = c * (c - 1) / 2 + n - c;
    let at_bound = solve_im(&instance_part, bound, &budget).unwrap().answer;
    let above_bound = solve_im(&instance_part, bound + 1, &budget).unwrap().answer;
    if !(at_bound && !above_bound) {
        eprintln!("instance-part max induced matching: YES at {bound}: {at_bound}, YES above: {above_bound}");
    }
    pass &= at_bound && !above_bound;
    conclude(5, "im composition", started, pass);
}

#[test]
fn criterion_06_convc_kernel() {
    let started = Instant::now();
    let report = verify_kernel(KernelKind::ConVc, 200, 14, 3, 6, 20260106, &Budget::default())
        .unwrap();
    assert_eq!(report.cases.len(), 200);
    let pass = report.pass();
    if !pass {
        eprintln!("{}", report_failures(&report));
    }
    conclude(6, "convc kernel, 200 trials", started, pass);
}

#[test]
fn criterion_07_capvc_kernel() {
    let started = Instant::now();
    let report = verify_kernel(KernelKind::CapVc, 200, 12, 3, 5, 20260107, &Budget::default())
        .unwrap();
    assert_eq!(report.cases.len(), 200);
    let pass = report.pass();
    if !pass {
        eprintln!("{}", report_failures(&report));
    }
    conclude(7, "capvc kernel, 200 trials", started, pass);
}

#[test]
fn criterion_08_reductions() {
    let started = Instant::now();
    let budget = Budget::default();
    let mut pass = true;
    let rbds = verify_reduction(ReductionKind::RbdsToDs { trials: 100 }, 20260108, &budget)
        .unwrap();
    if !rbds.pass() {
        eprintln!("rbds-to-ds: {}", report_failures(&rbds));
        pass = false;
    }
    let mpm = verify_reduction(ReductionKind::MpmSimplify { trials: 100 }, 20260109, &budget)
        .unwrap();
    if !mpm.pass() {
        eprintln!("mpm-simplify: {}", report_failures(&mpm));
        pass = false;
    }
    let corrected = verify_reduction(
        ReductionKind::SetcoverToCapVc {
            variant: CapVcVariant::Corrected,
            k_max: 2,
            max_sets: 3,
        },
        0,
        &budget,
    )
    .unwrap();
    if !corrected.pass() {
        eprintln!("setcover-to-capvc corrected: {}", report_failures(&corrected));
        pass = false;
    }
    // literal verdicts are recorded, never asserted; the known discrepancy
    // must show up in the record
    let literal = verify_reduction(
        ReductionKind::SetcoverToCapVc {
            variant: CapVcVariant::Literal,
            k_max: 1,
            max_sets: 3,
        },
        0,
        &budget,
    )
    .unwrap();
    let discrepancies = literal
        .cases
        .iter()
        .filter(|case| case.detail.as_deref().is_some_and(|d| d.contains("discrepancy")))
        .count();
    println!(
        "  setcover-to-capvc literal variant: {} verdicts recorded, {} discrepancies",
        literal.cases.len(),
        discrepancies
    );
    pass &= literal.pass() && discrepancies > 0;
    conclude(8, "reductions", started, pass);
}

#[test]
fn criterion_09_degenerate_bipartite_bound() {
    let started = Instant::now();
    let mut checked = 0;
    let mut pass = true;
    for case in 0..500u64 {
        let d = 1 + (case % 3) as usize;
        let n_a = 12 + (case % 17) as usize;
        let n_b = 3 + (case % 5) as usize;
        let (g, a, b) = gen_degenerate_bipartite(n_a, n_b, d, 20260110 + case);
        match bipartite_degenerate_bound_check(&g, &a, &b) {
            Ok(true) => checked += 1,
            Ok(false) => {
                eprintln!("case {case}: |B| > d|A|");
                pass = false;
            }
            Err(e) => {
                eprintln!("case {case}: precondition unexpectedly violated: {e}");
                pass = false;
            }
        }
    }
    pass &= checked == 500;
    conclude(9, "bipartite degeneracy bound, 500 graphs", started, pass);
}

// --- naive reference oracles for criterion 10 -------------------------------

/// Minimum dominating (or independent dominating) set size by scanning all
/// 2^n subsets; None when no subset qualifies (cannot happen for plain
/// domination).
fn naive_min_domination(g: &Graph, independent: bool) -> Option<usize> {
    let n = g.node_count();
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let closed: Vec<u32> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .fold(1u32 << u, |acc, &v| acc | 1 << v)
        })
        .collect();
    let mut best: Option<usize> = None;
    for mask in 0..=(full as u64) {
        let mask = mask as u32;
        if n == 0 && mask > 0 {
            break;
        }
        let mut dominated = 0u32;
        let mut ok = true;
        for u in 0..n {
            if mask >> u & 1 == 1 {
                if independent && closed[u] & mask != 1 << u {
                    ok = false;
                    break;
                }
                dominated |= closed[u];
            }
        }
        if ok && dominated == full {
            let size = mask.count_ones() as usize;
            best = Some(best.map_or(size, |b| b.min(size)));
        }
    }
    best
}

/// Maximum induced matching size by unpruned enumeration of all edge subsets
/// of size at most n/2.
fn naive_max_induced_matching(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    let mut conflict = vec![vec![false; m]; m];
    for i in 0..m {
        let (a, b) = edges[i];
        for j in (i + 1)..m {
            let (c, d) = edges[j];
            let clash = a == c
                || a == d
                || b == c
                || b == d
                || g.has_edge(a, c)
                || g.has_edge(a, d)
                || g.has_edge(b, c)
                || g.has_edge(b, d);
            conflict[i][j] = clash;
            conflict[j][i] = clash;
        }
    }
    let cap = g.node_count() / 2;
    let mut best = 0;
    fn extend(
        start: usize,
        chosen: &mut Vec<usize>,
        m: usize,
        cap: usize,
        conflict: &[Vec<bool>],
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if chosen.len() == cap {
            return;
        }
        for e in start..m {
            if chosen.iter().all(|&f| !conflict[f][e]) {
                chosen.push(e);
                extend(e + 1, chosen, m, cap, conflict, best);
                chosen.pop();
            }
        }
    }
    extend(0, &mut Vec::new(), m, cap, &conflict, &mut best);
    best
}

/// Every edge -> endpoint map, by brute force.
fn naive_cap_feasible(g: &Graph, cover: &BTreeSet<usize>, caps: &[u64]) -> bool {
    let m = g.edge_count();
    'outer: for mask in 0u32..(1 << m) {
        let mut load = vec![0u64; g.node_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let target = if mask >> e & 1 == 0 { u } else { v };
            if !cover.contains(&target) {
                continue 'outer;
            }
            load[target] += 1;
            if load[target] > caps[target] {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, edges).expect("enumerated graphs are simple")
        })
        .collect()
}

#[test]
fn criterion_10_oracle_cross_validation() {
    let started = Instant::now();
    let budget = Budget::default();
    let mut pass = true;
    // exhaustive agreement with naive enumeration on all graphs with <= 6 nodes
    for n in 0..=6usize {
        for (gi, g) in all_graphs(n).into_iter().enumerate() {
            let min_ds = naive_min_domination(&g, false);
            let min_ids = naive_min_domination(&g, true);
            let max_im = naive_max_induced_matching(&g);
            for k in 0..=n {
                let ds = solve_ds(&g, k, &budget).unwrap().answer;
                if ds != min_ds.is_some_and(|m| m <= k) {
                    eprintln!("ds mismatch: n {n} graph {gi} k {k}");
                    pass = false;
                }
                let ids = solve_ids(&g, k, &budget).unwrap().answer;
                if ids != min_ids.is_some_and(|m| m <= k) {
                    eprintln!("ids mismatch: n {n} graph {gi} k {k}");
                    pass = false;
                }
            }
            for k in 0..=(n / 2 + 1) {
                let im = solve_im(&g, k, &budget).unwrap().answer;
                if im != (k <= max_im) {
                    eprintln!("im mismatch: n {n} graph {gi} k {k}");
                    pass = false;
                }
            }
        }
    }
    // capacity feasibility against exhaustive assignment enumeration: all
    // graphs on 4 and 5 nodes with at most 5 edges, every vertex cover,
    // capacities over {0,1,2}^n
    for n in [4usize, 5] {
        for g in all_graphs(n) {
            if g.edge_count() > 5 {
                continue;
            }
            let cap_limit = 3u64.pow(n as u32);
            for cap_code in 0..cap_limit {
                let mut caps = Vec::with_capacity(n);
                let mut rest = cap_code;
                for _ in 0..n {
                    caps.push(rest % 3);
                    rest /= 3;
                }
                for mask in 0u32..(1 << n) {
                    let cover: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    if !g.is_vertex_cover(&cover).unwrap() {
                        continue;
                    }
                    let fast = cap_assignment_feasible(&g, &cover, &caps).unwrap();
                    let slow = naive_cap_feasible(&g, &cover, &caps);
                    if fast != slow {
                        eprintln!("cap mismatch: n {n}, caps {caps:?}, cover {cover:?}");
                        pass = false;
                    }
                }
            }
        }
    }
    conclude(10, "oracle cross-validation", started, pass);
}

#[test]
fn degeneracy_structure_reports() {
    // supporting structural reports used by criteria 2, 4, 5 at their tier-B
    // parameter points
    let ds = dkl_core::harness::verify_degeneracy(ComposeKind::Ds, 2, 2, 4, 0, 9001).unwrap();
    assert!(ds.pass(), "{:?}", ds.cases);
    let ids = dkl_core::harness::verify_degeneracy(ComposeKind::Ids, 2, 2, 6, 0, 9002).unwrap();
    assert!(ids.pass(), "{:?}", ids.cases);
    let im = dkl_core::harness::verify_degeneracy(ComposeKind::Im, 2, 2, 5, 5, 9003).unwrap();
    assert!(im.pass(), "{:?}", im.cases);
}
