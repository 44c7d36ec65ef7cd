//! Standalone inter-problem reductions: RBDS to DS via an apex red vertex,
//! multigraph-MPM to simple-MPM via edge subdivision gadgets, and d-Set-Cover
//! to capacitated vertex cover (literal and corrected capacity
//! variants). Every reduction is deterministic and emits a label table
//! mapping new nodes to their origin.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, MultiGraph};
use crate::problems::{CapVcInstance, MpmInstance, RbdsInstance, SetCoverInstance, Validate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid parameter: {0}")]
    BadParams(String),
}

/// Origin of a node in the RBDS -> DS output graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DsOrigin {
    Red(usize),
    Blue(usize),
    /// The red apex adjacent to every red and to its pendant.
    Apex,
    ApexPendant,
}

/// Dominating-set instance produced from an RBDS instance: the bipartite
/// graph plus an apex vertex adjacent to all reds and to a fresh pendant.
/// The parameter becomes k + 1 and degeneracy grows by at most one.
///
/// Equivalence holds when every blue has a red neighbor; a blue with no red
/// neighbor makes the RBDS side trivially NO while a dominating set may
/// still pick the blue itself.
pub fn rbds_to_ds(inst: &RbdsInstance) -> Result<(Graph, usize, Vec<DsOrigin>), ReduceError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(ReduceError::InvalidInstance(violations.join("; ")));
    }
    let r = inst.red_count;
    let b = inst.blue_count;
    let apex = r + b;
    let pendant = apex + 1;
    let mut edges: BTreeSet<(usize, usize)> = inst
        .edges
        .iter()
        .map(|&(red, blue)| (red, r + blue))
        .collect();
    for red in 0..r {
        edges.insert((red, apex));
    }
    edges.insert((apex, pendant));
    let graph = Graph::new(pendant + 1, edges).expect("reduction output is simple");
    let mut labels: Vec<DsOrigin> = (0..r).map(DsOrigin::Red).collect();
    labels.extend((0..b).map(DsOrigin::Blue));
    labels.push(DsOrigin::Apex);
    labels.push(DsOrigin::ApexPendant);
    Ok((graph, inst.k + 1, labels))
}

/// Maps a DS witness on the output graph back to an RBDS red set: drop the
/// apex; remaining nodes must be reds.
pub fn ds_witness_to_rbds(
    witness: &BTreeSet<usize>,
    labels: &[DsOrigin],
) -> Result<BTreeSet<usize>, ReduceError> {
    let mut out = BTreeSet::new();
    for &v in witness {
        match labels.get(v) {
            Some(DsOrigin::Red(r)) => {
                out.insert(*r);
            }
            Some(DsOrigin::Apex) => {}
            other => {
                return Err(ReduceError::BadParams(format!(
                    "witness node {v} maps to {other:?}, not a red vertex"
                )))
            }
        }
    }
    Ok(out)
}

/// Origin of a node in the multigraph-MPM simplification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MpmOrigin {
    /// x_v for an original vertex v.
    Vertex(usize),
    /// y_{v,e} for endpoint v of original edge e.
    EdgeEnd { vertex: usize, edge: usize },
}

/// Rewrites a multigraph MPM instance as an equivalent simple one: every
/// original edge becomes a path x_u - y_{u,e} - y_{v,e} - x_v. With pi the
/// edge-id bijection and u < v in the fixed id order, the middle edge and
/// x_v's edge keep color pi(e) while x_u's edge gets color |E| + col(e).
pub fn mpm_simplify(inst: &MpmInstance) -> Result<(MpmInstance, Vec<MpmOrigin>), ReduceError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(ReduceError::InvalidInstance(violations.join("; ")));
    }
    let n = inst.graph.node_count();
    if n % 2 != 0 {
        return Err(ReduceError::InvalidInstance(format!("node count {n} is odd")));
    }
    let m = inst.graph.edge_count();
    let y_of = |endpoint_is_max: bool, e: usize| n + 2 * e + endpoint_is_max as usize;
    let mut edges = Vec::with_capacity(3 * m);
    let mut colors = Vec::with_capacity(3 * m);
    for e in 0..m {
        edges.push((y_of(false, e), y_of(true, e)));
        colors.push(e);
    }
    for e in 0..m {
        let (a, b) = inst.graph.edge(e);
        let (u, v) = (a.min(b), a.max(b));
        edges.push((u, y_of(false, e)));
        colors.push(m + inst.colors[e]);
        edges.push((v, y_of(true, e)));
        colors.push(e);
    }
    let graph = MultiGraph::new(n + 2 * m, edges).expect("gadget endpoints are in range");
    debug_assert!(graph.is_simple());
    let mut labels: Vec<MpmOrigin> = (0..n).map(MpmOrigin::Vertex).collect();
    for e in 0..m {
        let (a, b) = inst.graph.edge(e);
        labels.push(MpmOrigin::EdgeEnd {
            vertex: a.min(b),
            edge: e,
        });
        labels.push(MpmOrigin::EdgeEnd {
            vertex: a.max(b),
            edge: e,
        });
    }
    Ok((MpmInstance { graph, colors }, labels))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapVcVariant {
    /// Every capacity is the node degree minus one, exactly as written.
    Literal,
    /// Set nodes keep capacity d (their degree); the literal capacities fail
    /// a global counting check on the YES side.
    Corrected,
}

/// Origin of a node in the d-Set-Cover -> CapVC output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapVcOrigin {
    Universe(usize),
    SetNode(usize),
    Leaf(usize),
}

/// Incidence bipartite graph of the hypergraph plus one leaf per universe
/// element; parameter (d+1)k. Requires universe_size = d*k.
pub fn setcover_to_capvc(
    inst: &SetCoverInstance,
    variant: CapVcVariant,
) -> Result<(CapVcInstance, Vec<CapVcOrigin>), ReduceError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(ReduceError::InvalidInstance(violations.join("; ")));
    }
    if inst.universe_size != inst.d * inst.k {
        return Err(ReduceError::BadParams(format!(
            "universe size {} must equal d*k = {}",
            inst.universe_size,
            inst.d * inst.k
        )));
    }
    let n = inst.universe_size;
    let s = inst.sets.len();
    let set_of = |i: usize| n + i;
    let leaf_of = |v: usize| n + s + v;
    let mut edges = Vec::new();
    for (i, set) in inst.sets.iter().enumerate() {
        for &v in set {
            edges.push((v, set_of(i)));
        }
    }
    for v in 0..n {
        edges.push((v, leaf_of(v)));
    }
    let graph = Graph::new(n + s + n, edges).expect("incidence graph is simple");
    let capacities: Vec<u64> = (0..graph.node_count())
        .map(|u| {
            let deg = graph.degree(u) as u64;
            if matches!(variant, CapVcVariant::Corrected) && (n..n + s).contains(&u) {
                deg
            } else {
                deg.saturating_sub(1)
            }
        })
        .collect();
    let mut labels: Vec<CapVcOrigin> = (0..n).map(CapVcOrigin::Universe).collect();
    labels.extend((0..s).map(CapVcOrigin::SetNode));
    labels.extend((0..n).map(CapVcOrigin::Leaf));
    Ok((
        CapVcInstance {
            graph,
            capacities,
            k: (inst.d + 1) * inst.k,
        },
        labels,
    ))
}

/// Maps a CapVC witness back to set-cover indices: its set-node members.
pub fn capvc_witness_to_setcover(witness: &BTreeSet<usize>, labels: &[CapVcOrigin]) -> Vec<usize> {
    witness
        .iter()
        .filter_map(|&v| match labels.get(v) {
            Some(CapVcOrigin::SetNode(i)) => Some(*i),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degeneracy_ordering;
    use crate::oracles::{solve_capvc, solve_ds, solve_mpm, solve_rbds, solve_setcover, Budget};
    use crate::problems::gen_rbds;
    use rand::{Rng, SeedableRng};

    #[test]
    fn rbds_to_ds_hand_example() {
        let inst = RbdsInstance {
            red_count: 1,
            blue_count: 1,
            edges: vec![(0, 0)],
            k: 1,
        };
        let (g, k, labels) = rbds_to_ds(&inst).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(k, 2);
        assert_eq!(labels.len(), 4);
        let b = Budget::default();
        assert!(solve_ds(&g, k, &b).unwrap().answer);
    }

    #[test]
    fn rbds_to_ds_equivalence_random() {
        let b = Budget::default();
        for seed in 0..60u64 {
            let inst = gen_rbds(4 + (seed % 3) as usize, 5, 0.35, (seed % 4) as usize, seed);
            let (g, k, labels) = rbds_to_ds(&inst).unwrap();
            let src = solve_rbds(&inst, &b).unwrap();
            let dst = solve_ds(&g, k, &b).unwrap();
            assert_eq!(src.answer, dst.answer, "seed {seed}");
            let d_in = degeneracy_ordering(&inst.to_graph()).degeneracy;
            let d_out = degeneracy_ordering(&g).degeneracy;
            assert!(d_out <= d_in + 1, "seed {seed}");
            if let Some(crate::oracles::Witness::Nodes(w)) = dst.witness {
                // apex-based witnesses map back to red sets
                let _ = ds_witness_to_rbds(&w, &labels);
            }
        }
    }

    #[test]
    fn mpm_simplify_single_edge() {
        let inst = MpmInstance {
            graph: MultiGraph::new(2, vec![(0, 1)]).unwrap(),
            colors: vec![0],
        };
        let (out, labels) = mpm_simplify(&inst).unwrap();
        assert_eq!(out.graph.node_count(), 4);
        assert_eq!(out.graph.edge_count(), 3);
        assert!(out.graph.is_simple());
        // y-y keeps pi(e) = 0; x_v side keeps 0; x_u side gets |E| + col = 1
        assert_eq!(out.graph.edge(0), (2, 3));
        assert_eq!(out.colors[0], 0);
        assert_eq!(out.graph.edge(1), (0, 2));
        assert_eq!(out.colors[1], 1);
        assert_eq!(out.graph.edge(2), (1, 3));
        assert_eq!(out.colors[2], 0);
        assert_eq!(labels.len(), 4);
        let b = Budget::default();
        assert!(solve_mpm(&inst, &b).unwrap().answer);
        assert!(solve_mpm(&out, &b).unwrap().answer);
    }

    #[test]
    fn mpm_simplify_parallel_edges() {
        let inst = MpmInstance {
            graph: MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
            colors: vec![0, 0],
        };
        let (out, _) = mpm_simplify(&inst).unwrap();
        assert_eq!(out.graph.node_count(), 6); // 2|E| + |V|
        assert!(out.graph.is_simple());
    }

    #[test]
    fn mpm_simplify_equivalence_random() {
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for trial in 0..60 {
            let n = 2 * rng.random_range(1usize..=3);
            let m = rng.random_range(0usize..=8);
            let edges: Vec<(usize, usize)> = (0..m)
                .map(|_| {
                    let u = rng.random_range(0..n);
                    let mut v = rng.random_range(0..n);
                    while v == u {
                        v = rng.random_range(0..n);
                    }
                    (u, v)
                })
                .collect();
            let colors = (0..m).map(|_| rng.random_range(0..n / 2)).collect();
            let inst = MpmInstance {
                graph: MultiGraph::new(n, edges).unwrap(),
                colors,
            };
            let (out, _) = mpm_simplify(&inst).unwrap();
            assert!(out.graph.is_simple());
            assert_eq!(
                solve_mpm(&inst, &b).unwrap().answer,
                solve_mpm(&out, &b).unwrap().answer,
                "trial {trial}"
            );
        }
    }

    #[test]
    fn setcover_capacity_variants() {
        let inst = SetCoverInstance {
            universe_size: 3,
            sets: vec![vec![0, 1, 2]],
            d: 3,
            k: 1,
        };
        let (literal, _) = setcover_to_capvc(&inst, CapVcVariant::Literal).unwrap();
        // set node: 2; universe nodes: 1 each; leaves: 0
        assert_eq!(literal.capacities, vec![1, 1, 1, 2, 0, 0, 0]);
        assert_eq!(literal.k, 4);
        let (corrected, _) = setcover_to_capvc(&inst, CapVcVariant::Corrected).unwrap();
        assert_eq!(corrected.capacities, vec![1, 1, 1, 3, 0, 0, 0]);

        let b = Budget::default();
        assert!(solve_setcover(&inst, &b).unwrap().answer);
        assert!(solve_capvc(&corrected, &b).unwrap().answer);
        // the literal capacities cannot absorb all k*d + d|E| edges
        assert!(!solve_capvc(&literal, &b).unwrap().answer);
    }

    #[test]
    fn capvc_witness_maps_back_to_sets() {
        let inst = SetCoverInstance {
            universe_size: 3,
            sets: vec![vec![0, 1, 2]],
            d: 3,
            k: 1,
        };
        let (out, labels) = setcover_to_capvc(&inst, CapVcVariant::Corrected).unwrap();
        let b = Budget::default();
        let solved = solve_capvc(&out, &b).unwrap();
        let Some(crate::oracles::Witness::Nodes(cover)) = solved.witness else {
            panic!("capvc witness is a node set")
        };
        let picks = capvc_witness_to_setcover(&cover, &labels);
        assert_eq!(picks, vec![0]);
    }

    #[test]
    fn setcover_size_mismatch_is_an_error() {
        let inst = SetCoverInstance {
            universe_size: 4,
            sets: vec![vec![0, 1, 2]],
            d: 3,
            k: 1,
        };
        assert!(matches!(
            setcover_to_capvc(&inst, CapVcVariant::Corrected),
            Err(ReduceError::BadParams(_))
        ));
    }
}
