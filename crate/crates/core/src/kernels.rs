//! Twin-rule kernelizations for Connected Vertex Cover and Capacitated Vertex
//! Cover, with replayable rule traces and exact size-bound bookkeeping.
//!
//! Rule application order: isolated-vertex removals to fixpoint, then one
//! twin-class removal (eligible class with the lowest representative), then
//! the whole cycle repeats until nothing changes. All removals reference
//! original node ids, so replaying a trace on the original instance
//! reproduces the reduced instance exactly.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::Graph;
use crate::problems::{CapVcInstance, Validate};
use crate::util::binomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("invalid parameter: {0}")]
    BadParams(String),
    #[error("size-bound hypothesis k + 1 > d violated (k = {k}, d = {d})")]
    BoundHypothesis { k: usize, d: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

/// One rule application. Node ids refer to the original instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleEvent {
    IsolatedRemoved {
        node: usize,
    },
    TwinRemoved {
        class: Vec<usize>,
        removed: usize,
    },
    CapTwinRemoved {
        class: Vec<usize>,
        removed: usize,
        decremented: Vec<usize>,
    },
    /// A capacitated twin removal whose decrement would drive `neighbor`
    /// below zero; the kernelization short-circuits to the canonical NO
    /// instance at this point.
    CapForcedNo {
        class: Vec<usize>,
        removed: usize,
        neighbor: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RuleTrace {
    pub events: Vec<RuleEvent>,
}

impl RuleTrace {
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelOutput<T> {
    pub reduced: T,
    /// Old node id -> new node id; `None` for removed nodes.
    pub relabel: Vec<Option<usize>>,
    pub trace: RuleTrace,
    pub size_bound: u64,
    pub within_bound: bool,
}

/// Twin-removal processing order; `Standard` is the documented default, the
/// alternative exists so order-independence of the fixpoint answer can be
/// tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleOrder {
    /// Eligible class with the lowest representative first; remove the
    /// highest-id member.
    Standard,
    /// Eligible class with the highest representative first; remove the
    /// lowest-id member.
    ReverseTwins,
}

/// `k + dk + sum_{i=1..d} i * C(k, i)`, the exact node bound behind the
/// O(k^d) connected-vertex-cover kernel.
pub fn convc_size_bound(k: usize, d: usize) -> u64 {
    let (k64, _) = (k as u64, d as u64);
    let mut bound = k64 + (d as u64) * k64;
    for i in 1..=d as u64 {
        bound += i * binomial(k64, i);
    }
    bound
}

/// `k + dk + sum_{i=1..d} (k+1) * C(k, i)`, the exact node bound behind the
/// O(k^{d+1}) capacitated-vertex-cover kernel.
pub fn capvc_size_bound(k: usize, d: usize) -> u64 {
    let k64 = k as u64;
    let mut bound = k64 + (d as u64) * k64;
    for i in 1..=d as u64 {
        bound += (k64 + 1) * binomial(k64, i);
    }
    bound
}

/// State over the original graph: nodes are never relabeled until the end.
struct Peeler<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
}

impl Peeler<'_> {
    fn new(g: &Graph) -> Peeler<'_> {
        Peeler {
            g,
            alive: vec![true; g.node_count()],
        }
    }

    fn alive_degree(&self, u: usize) -> usize {
        self.g.neighbors(u).iter().filter(|&&v| self.alive[v]).count()
    }

    fn alive_neighbors(&self, u: usize) -> Vec<usize> {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| self.alive[v])
            .collect()
    }

    /// Remove isolated vertices (ascending id); returns the events emitted.
    fn isolated_fixpoint(&mut self, trace: &mut RuleTrace) -> bool {
        let mut changed = false;
        for u in 0..self.g.node_count() {
            if self.alive[u] && self.alive_degree(u) == 0 {
                self.alive[u] = false;
                trace.events.push(RuleEvent::IsolatedRemoved { node: u });
                changed = true;
            }
        }
        changed
    }

    /// Twin classes of the alive subgraph, ordered by representative.
    fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for u in 0..self.g.node_count() {
            if self.alive[u] {
                classes.entry(self.alive_neighbors(u)).or_default().push(u);
            }
        }
        let mut out: Vec<Vec<usize>> = classes.into_values().collect();
        out.sort_by_key(|c| c[0]);
        out
    }

    fn removed_set(&self) -> BTreeSet<usize> {
        (0..self.g.node_count())
            .filter(|&u| !self.alive[u])
            .collect()
    }
}

/// Exhaustively applies the isolated-vertex rule and the twin rule (classes
/// with common neighborhood of size q <= d are trimmed to q members) until
/// fixpoint. `d` is the degeneracy bound the twin rule is allowed to assume;
/// the rules are sound for any d, so it is an explicit argument.
pub fn convc_kernelize(g: &Graph, k: usize, d: usize) -> Result<KernelOutput<Graph>, KernelError> {
    convc_kernelize_with_order(g, k, d, RuleOrder::Standard)
}

pub fn convc_kernelize_with_order(
    g: &Graph,
    k: usize,
    d: usize,
    order: RuleOrder,
) -> Result<KernelOutput<Graph>, KernelError> {
    if d == 0 {
        return Err(KernelError::BadParams("d must be >= 1".into()));
    }
    let mut peeler = Peeler::new(g);
    let mut trace = RuleTrace::default();
    loop {
        let mut changed = peeler.isolated_fixpoint(&mut trace);
        let mut classes = peeler.twin_classes();
        if order == RuleOrder::ReverseTwins {
            classes.reverse();
        }
        for class in classes {
            let q = peeler.alive_neighbors(class[0]).len();
            if q >= 1 && q <= d && class.len() > q {
                let removed = match order {
                    RuleOrder::Standard => *class.last().expect("nonempty class"),
                    RuleOrder::ReverseTwins => class[0],
                };
                peeler.alive[removed] = false;
                trace.events.push(RuleEvent::TwinRemoved {
                    class: class.clone(),
                    removed,
                });
                changed = true;
                break; // recompute classes after every single removal
            }
        }
        if !changed {
            break;
        }
    }
    let (reduced, relabel) = g.remove_nodes(&peeler.removed_set());
    let size_bound = convc_size_bound(k, d);
    let within_bound = (reduced.node_count() as u64) <= size_bound;
    Ok(KernelOutput {
        reduced,
        relabel,
        trace,
        size_bound,
        within_bound,
    })
}

/// The canonical NO output: a single edge neither endpoint may cover.
pub fn capvc_canonical_no(k: usize) -> CapVcInstance {
    CapVcInstance {
        graph: Graph::new(2, [(0, 1)]).expect("K2"),
        capacities: vec![0, 0],
        k,
    }
}

/// Exhaustively applies the isolated-vertex rule and the capacitated twin
/// rule: while some twin class has at least k+2 members and a common
/// neighborhood of size at most d, remove a minimum-capacity member (ties to
/// the lowest id) and decrement every common neighbor's capacity. If a
/// decrement would go negative the instance is a NO and the output
/// short-circuits to [`capvc_canonical_no`].
pub fn capvc_kernelize(
    inst: &CapVcInstance,
    d: usize,
) -> Result<KernelOutput<CapVcInstance>, KernelError> {
    capvc_kernelize_with_order(inst, d, RuleOrder::Standard)
}

pub fn capvc_kernelize_with_order(
    inst: &CapVcInstance,
    d: usize,
    order: RuleOrder,
) -> Result<KernelOutput<CapVcInstance>, KernelError> {
    if d == 0 {
        return Err(KernelError::BadParams("d must be >= 1".into()));
    }
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(KernelError::InvalidInstance(violations.join("; ")));
    }
    if inst.k + 1 <= d {
        return Err(KernelError::BoundHypothesis { k: inst.k, d });
    }
    let g = &inst.graph;
    let size_bound = capvc_size_bound(inst.k, d);
    let mut caps = inst.capacities.clone();
    let mut peeler = Peeler::new(g);
    let mut trace = RuleTrace::default();
    loop {
        let mut changed = peeler.isolated_fixpoint(&mut trace);
        let mut classes = peeler.twin_classes();
        if order == RuleOrder::ReverseTwins {
            classes.reverse();
        }
        for class in classes {
            let common = peeler.alive_neighbors(class[0]);
            if common.is_empty() || common.len() > d || class.len() < inst.k + 2 {
                continue;
            }
            let removed = *class
                .iter()
                .min_by_key(|&&u| (caps[u], u))
                .expect("nonempty class");
            if let Some(&blocked) = common.iter().find(|&&v| caps[v] == 0) {
                trace.events.push(RuleEvent::CapForcedNo {
                    class: class.clone(),
                    removed,
                    neighbor: blocked,
                });
                let reduced = capvc_canonical_no(inst.k);
                let within_bound = (reduced.graph.node_count() as u64) <= size_bound;
                return Ok(KernelOutput {
                    reduced,
                    relabel: vec![None; g.node_count()],
                    trace,
                    size_bound,
                    within_bound,
                });
            }
            peeler.alive[removed] = false;
            for &v in &common {
                caps[v] -= 1;
            }
            trace.events.push(RuleEvent::CapTwinRemoved {
                class: class.clone(),
                removed,
                decremented: common,
            });
            changed = true;
            break;
        }
        if !changed {
            break;
        }
    }
    let removed = peeler.removed_set();
    let (graph, relabel) = g.remove_nodes(&removed);
    let capacities: Vec<u64> = (0..g.node_count())
        .filter(|u| !removed.contains(u))
        .map(|u| caps[u])
        .collect();
    let reduced = CapVcInstance {
        graph,
        capacities,
        k: inst.k,
    };
    let within_bound = (reduced.graph.node_count() as u64) <= size_bound;
    Ok(KernelOutput {
        reduced,
        relabel,
        trace,
        size_bound,
        within_bound,
    })
}

/// Replays a connected-vertex-cover trace on the original graph.
pub fn replay_convc(g: &Graph, trace: &RuleTrace) -> (Graph, Vec<Option<usize>>) {
    let mut removed = BTreeSet::new();
    for ev in &trace.events {
        match ev {
            RuleEvent::IsolatedRemoved { node } => {
                removed.insert(*node);
            }
            RuleEvent::TwinRemoved { removed: u, .. } => {
                removed.insert(*u);
            }
            other => panic!("unexpected event in convc trace: {other:?}"),
        }
    }
    g.remove_nodes(&removed)
}

/// Replays a capacitated trace; a `CapForcedNo` event reproduces the
/// canonical NO output.
pub fn replay_capvc(
    inst: &CapVcInstance,
    trace: &RuleTrace,
) -> (CapVcInstance, Vec<Option<usize>>) {
    let mut removed = BTreeSet::new();
    let mut caps = inst.capacities.clone();
    for ev in &trace.events {
        match ev {
            RuleEvent::IsolatedRemoved { node } => {
                removed.insert(*node);
            }
            RuleEvent::CapTwinRemoved {
                removed: u,
                decremented,
                ..
            } => {
                removed.insert(*u);
                for &v in decremented {
                    caps[v] -= 1;
                }
            }
            RuleEvent::CapForcedNo { .. } => {
                return (
                    capvc_canonical_no(inst.k),
                    vec![None; inst.graph.node_count()],
                );
            }
            other => panic!("unexpected event in capvc trace: {other:?}"),
        }
    }
    let (graph, relabel) = inst.graph.remove_nodes(&removed);
    let capacities: Vec<u64> = (0..inst.graph.node_count())
        .filter(|u| !removed.contains(u))
        .map(|u| caps[u])
        .collect();
    (
        CapVcInstance {
            graph,
            capacities,
            k: inst.k,
        },
        relabel,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{solve_capvc, solve_convc, Budget};
    use crate::problems::gen_degenerate_graph;
    use rand::{Rng, SeedableRng};

    #[test]
    fn size_bound_formulas() {
        assert_eq!(convc_size_bound(1, 1), 3);
        assert_eq!(capvc_size_bound(1, 1), 4);
        for d in [2usize, 3] {
            for k in 2usize..=6 {
                let bound = convc_size_bound(k, d);
                assert!(bound <= 4 * (k as u64).pow(d as u32), "k={k} d={d}");
            }
        }
    }

    #[test]
    fn pendant_twins_are_trimmed() {
        // one hub with three pendant leaves: class size 3, q = 1, keep 1
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let out = convc_kernelize(&g, 2, 2).unwrap();
        assert_eq!(out.reduced.node_count(), 2);
        let twin_removals = out
            .trace
            .events
            .iter()
            .filter(|e| matches!(e, RuleEvent::TwinRemoved { .. }))
            .count();
        assert_eq!(twin_removals, 2);
    }

    #[test]
    fn isolated_vertices_are_removed() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let out = convc_kernelize(&g, 1, 1).unwrap();
        assert_eq!(out.reduced.node_count(), 2);
        assert!(matches!(
            out.trace.events[0],
            RuleEvent::IsolatedRemoved { node: 2 }
        ));
    }

    #[test]
    fn convc_trace_replays_exactly() {
        for seed in 0..20u64 {
            let g = gen_degenerate_graph(12, 3, 0.7, seed);
            let out = convc_kernelize(&g, 4, 2).unwrap();
            let again = convc_kernelize(&g, 4, 2).unwrap();
            assert_eq!(out, again, "kernelize must be deterministic");
            let (replayed, relabel) = replay_convc(&g, &out.trace);
            assert_eq!(replayed, out.reduced);
            assert_eq!(relabel, out.relabel);
        }
    }

    #[test]
    fn convc_preserves_answers_small() {
        let b = Budget::default();
        for seed in 0..40u64 {
            let g = gen_degenerate_graph(10, 2, 0.6, seed);
            let k = (seed % 5) as usize;
            let out = convc_kernelize(&g, k, 2).unwrap();
            assert_eq!(
                solve_convc(&g, k, &b).unwrap().answer,
                solve_convc(&out.reduced, k, &b).unwrap().answer,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn order_independence_of_answers() {
        let b = Budget::default();
        for seed in 0..25u64 {
            let g = gen_degenerate_graph(11, 3, 0.6, seed);
            let k = 3 + (seed % 3) as usize;
            let std = convc_kernelize_with_order(&g, k, 2, RuleOrder::Standard).unwrap();
            let rev = convc_kernelize_with_order(&g, k, 2, RuleOrder::ReverseTwins).unwrap();
            assert_eq!(
                solve_convc(&std.reduced, k, &b).unwrap().answer,
                solve_convc(&rev.reduced, k, &b).unwrap().answer,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn capvc_twin_rule_example() {
        // class {1, 2, 3} adjacent to hub 0; k = 1 so the class has k+2 = 3
        // members; the minimum-capacity twin goes, the hub loses one unit
        let inst = CapVcInstance {
            graph: Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            capacities: vec![7, 5, 2, 9],
            k: 1,
        };
        let out = capvc_kernelize(&inst, 1).unwrap();
        assert_eq!(out.reduced.graph.node_count(), 3);
        assert_eq!(out.reduced.capacities, vec![6, 5, 9]);
        assert_eq!(
            out.trace.events,
            vec![RuleEvent::CapTwinRemoved {
                class: vec![1, 2, 3],
                removed: 2,
                decremented: vec![0],
            }]
        );
        let (replayed, _) = replay_capvc(&inst, &out.trace);
        assert_eq!(replayed, out.reduced);
    }

    #[test]
    fn capvc_without_eligible_class_is_identity() {
        let inst = CapVcInstance {
            graph: Graph::new(3, [(0, 1), (1, 2)]).unwrap(),
            capacities: vec![1, 2, 1],
            k: 2,
        };
        let out = capvc_kernelize(&inst, 1).unwrap();
        assert!(out.trace.is_empty());
        assert_eq!(out.reduced, inst);
    }

    #[test]
    fn capvc_forced_no_short_circuits() {
        let b = Budget::default();
        // hub with zero capacity and k+2 pendant twins: original is a NO
        let inst = CapVcInstance {
            graph: Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            capacities: vec![0, 1, 1, 1],
            k: 1,
        };
        let out = capvc_kernelize(&inst, 1).unwrap();
        assert_eq!(out.reduced, capvc_canonical_no(1));
        assert!(matches!(
            out.trace.events.last(),
            Some(RuleEvent::CapForcedNo { neighbor: 0, .. })
        ));
        assert!(!solve_capvc(&inst, &b).unwrap().answer);
        assert!(!solve_capvc(&out.reduced, &b).unwrap().answer);
        let (replayed, _) = replay_capvc(&inst, &out.trace);
        assert_eq!(replayed, out.reduced);
    }

    #[test]
    fn capvc_forced_no_after_earlier_removals() {
        let b = Budget::default();
        // k = 2: trimming class {2,3,4,5} on hub 0 drains the hub's capacity
        // to zero, then class {6,7,8,9} on hubs {0,1} trips the short-circuit
        let mut edges = vec![(0usize, 2usize), (0, 3), (0, 4), (0, 5)];
        for t in [6, 7, 8, 9] {
            edges.push((0, t));
            edges.push((1, t));
        }
        let inst = CapVcInstance {
            graph: Graph::new(10, edges).unwrap(),
            capacities: vec![1, 5, 1, 1, 1, 1, 1, 1, 1, 1],
            k: 2,
        };
        let out = capvc_kernelize(&inst, 2).unwrap();
        assert_eq!(out.reduced, capvc_canonical_no(2));
        assert!(out
            .trace
            .events
            .iter()
            .any(|e| matches!(e, RuleEvent::CapTwinRemoved { .. })));
        assert!(matches!(
            out.trace.events.last(),
            Some(RuleEvent::CapForcedNo { .. })
        ));
        assert!(!solve_capvc(&inst, &b).unwrap().answer);
        let (replayed, _) = replay_capvc(&inst, &out.trace);
        assert_eq!(replayed, out.reduced);
    }

    #[test]
    fn capvc_bound_hypothesis_is_reported() {
        let inst = CapVcInstance {
            graph: Graph::new(2, [(0, 1)]).unwrap(),
            capacities: vec![1, 1],
            k: 1,
        };
        assert!(matches!(
            capvc_kernelize(&inst, 3),
            Err(KernelError::BoundHypothesis { k: 1, d: 3 })
        ));
    }

    #[test]
    fn capvc_order_independence_of_answers() {
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(123);
        for seed in 0..20u64 {
            let g = gen_degenerate_graph(9, 2, 0.6, seed);
            let capacities: Vec<u64> = (0..9).map(|_| rng.random_range(0..=3u64)).collect();
            let inst = CapVcInstance {
                graph: g,
                capacities,
                k: 2,
            };
            let std = capvc_kernelize_with_order(&inst, 2, RuleOrder::Standard).unwrap();
            let rev = capvc_kernelize_with_order(&inst, 2, RuleOrder::ReverseTwins).unwrap();
            assert_eq!(
                solve_capvc(&std.reduced, &b).unwrap().answer,
                solve_capvc(&rev.reduced, &b).unwrap().answer,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn capvc_preserves_answers_small() {
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for seed in 0..40u64 {
            let g = gen_degenerate_graph(9, 2, 0.6, seed);
            let capacities = (0..9).map(|_| rng.random_range(0..=3u64)).collect();
            let k = 2 + (seed % 3) as usize;
            let inst = CapVcInstance {
                graph: g,
                capacities,
                k,
            };
            let out = capvc_kernelize(&inst, 2).unwrap();
            assert_eq!(
                solve_capvc(&inst, &b).unwrap().answer,
                solve_capvc(&out.reduced, &b).unwrap().answer,
                "seed {seed}"
            );
        }
    }
}
