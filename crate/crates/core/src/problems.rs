//! Typed problem instances, invariant validators, and seeded generators
//! (including planted-YES generators) for every source and target problem.
//!
//! Generators are deterministic functions of their full argument list
//! including the seed. Non-planted generation rejection-samples against the
//! exact oracle and is only sound at oracle-tractable sizes.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, MultiGraph};
use crate::oracles::{self, Budget};

/// Retry cap for rejection sampling in non-planted generators.
pub const REJECTION_RETRIES: u32 = 1000;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
    #[error("rejection sampling failed to find a NO-instance after {0} attempts")]
    RejectionFailed(u32),
    #[error("oracle failed during rejection sampling: {0}")]
    Oracle(#[from] oracles::OracleError),
    #[error("instances are not on a common vertex set: {0}")]
    MismatchedInstances(String),
    #[error("batch of {got} instances cannot be padded to length {want}")]
    BadBatchLength { got: usize, want: usize },
}

/// Multicolored Perfect Matching: a multigraph with an even number of nodes
/// and a color in `0..n/2` on every edge; asks for a perfect matching whose
/// edges have pairwise distinct colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpmInstance {
    pub graph: MultiGraph,
    /// `colors[edge_id]` is the color of that edge.
    pub colors: Vec<usize>,
}

/// 3-Exact Set Cover: a universe `0..universe_size` and a family of
/// 3-element subsets; asks for disjoint sets partitioning the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct X3cInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
}

/// Multicolored Clique: node colors in `1..=num_colors`; asks for a clique of
/// pairwise distinctly colored vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MccInstance {
    pub graph: Graph,
    pub node_colors: Vec<usize>,
    pub num_colors: usize,
}

/// d-Set Cover: a d-regular hypergraph plus a budget k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
    pub d: usize,
    pub k: usize,
}

/// Capacitated Vertex Cover instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapVcInstance {
    pub graph: Graph,
    pub capacities: Vec<u64>,
    pub k: usize,
}

/// Red-Blue Dominating Set: bipartite by construction, reds `0..red_count`,
/// blues `0..blue_count`, asks for at most k reds dominating all blues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    pub red_count: usize,
    pub blue_count: usize,
    /// `(red id, blue id)` pairs.
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl RbdsInstance {
    /// Combined simple-graph view: reds keep their ids, blue `b` becomes
    /// `red_count + b`.
    pub fn to_graph(&self) -> Graph {
        Graph::new(
            self.red_count + self.blue_count,
            self.edges
                .iter()
                .map(|&(r, b)| (r, self.red_count + b))
                .collect::<BTreeSet<_>>(),
        )
        .expect("validated rbds instance maps to a graph")
    }
}

/// Reports every intrinsic invariant violation; violations are data, not
/// errors. An empty list means the instance is well formed.
pub trait Validate {
    fn violations(&self) -> Vec<String>;

    fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}

impl Validate for MpmInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.graph.node_count();
        if n % 2 != 0 {
            out.push(format!("node count {n} is odd"));
        }
        if self.colors.len() != self.graph.edge_count() {
            out.push(format!(
                "{} colors for {} edges",
                self.colors.len(),
                self.graph.edge_count()
            ));
        }
        let limit = n / 2;
        for (e, &c) in self.colors.iter().enumerate() {
            if c >= limit {
                out.push(format!("edge {e}: color {c} out of range 0..{limit}"));
            }
        }
        out
    }
}

impl Validate for X3cInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, s) in self.sets.iter().enumerate() {
            if s.len() != 3 {
                out.push(format!("set {i}: has {} elements, expected 3", s.len()));
                continue;
            }
            let distinct: BTreeSet<usize> = s.iter().copied().collect();
            if distinct.len() != 3 {
                out.push(format!("set {i}: elements are not distinct"));
            }
            for &x in s {
                if x >= self.universe_size {
                    out.push(format!(
                        "set {i}: element {x} out of universe 0..{}",
                        self.universe_size
                    ));
                }
            }
        }
        out
    }
}

impl Validate for MccInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.node_colors.len() != self.graph.node_count() {
            out.push(format!(
                "{} colors for {} nodes",
                self.node_colors.len(),
                self.graph.node_count()
            ));
            return out;
        }
        if self.num_colors == 0 {
            out.push("num_colors is zero".into());
        }
        for (v, &c) in self.node_colors.iter().enumerate() {
            if c == 0 || c > self.num_colors {
                out.push(format!(
                    "node {v}: color {c} out of range 1..={}",
                    self.num_colors
                ));
            }
        }
        out
    }
}

impl MccInstance {
    /// Composition precondition: every edge bichromatic.
    pub fn all_edges_bichromatic(&self) -> bool {
        self.graph
            .edges()
            .iter()
            .all(|&(u, v)| self.node_colors[u] != self.node_colors[v])
    }
}

impl Validate for SetCoverInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, s) in self.sets.iter().enumerate() {
            if s.len() != self.d {
                out.push(format!(
                    "set {i}: has {} elements, expected d = {}",
                    s.len(),
                    self.d
                ));
            }
            let distinct: BTreeSet<usize> = s.iter().copied().collect();
            if distinct.len() != s.len() {
                out.push(format!("set {i}: elements are not distinct"));
            }
            for &x in s {
                if x >= self.universe_size {
                    out.push(format!(
                        "set {i}: element {x} out of universe 0..{}",
                        self.universe_size
                    ));
                }
            }
        }
        out
    }
}

impl Validate for CapVcInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.capacities.len() != self.graph.node_count() {
            out.push(format!(
                "{} capacities for {} nodes",
                self.capacities.len(),
                self.graph.node_count()
            ));
        }
        out
    }
}

impl Validate for RbdsInstance {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, &(r, b)) in self.edges.iter().enumerate() {
            if r >= self.red_count {
                out.push(format!("edge {i}: red id {r} out of range"));
            }
            if b >= self.blue_count {
                out.push(format!("edge {i}: blue id {b} out of range"));
            }
        }
        out
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic in `(n, m, seed, planted)`. Planted instances carry a
/// perfect matching with pairwise distinct colors; non-planted instances are
/// rejection-sampled until the oracle answers NO.
pub fn gen_mpm(n: usize, m: usize, seed: u64, planted: bool) -> Result<MpmInstance, GenError> {
    if n < 2 || n % 2 != 0 {
        return Err(GenError::BadParams(format!("n = {n} must be even and >= 2")));
    }
    if planted && m < n / 2 {
        return Err(GenError::BadParams(format!(
            "planted instance needs m >= n/2 = {} (got {m})",
            n / 2
        )));
    }
    let mut rng = rng_for(seed);
    if planted {
        let mut nodes: Vec<usize> = (0..n).collect();
        nodes.shuffle(&mut rng);
        let mut colors: Vec<usize> = (0..n / 2).collect();
        colors.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(m);
        let mut edge_colors = Vec::with_capacity(m);
        for i in 0..n / 2 {
            edges.push((nodes[2 * i], nodes[2 * i + 1]));
            edge_colors.push(colors[i]);
        }
        for _ in n / 2..m {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n);
            while v == u {
                v = rng.random_range(0..n);
            }
            edges.push((u, v));
            edge_colors.push(rng.random_range(0..n / 2));
        }
        return Ok(MpmInstance {
            graph: MultiGraph::new(n, edges)?,
            colors: edge_colors,
        });
    }
    for _ in 0..REJECTION_RETRIES {
        let mut edges = Vec::with_capacity(m);
        let mut edge_colors = Vec::with_capacity(m);
        for _ in 0..m {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n);
            while v == u {
                v = rng.random_range(0..n);
            }
            edges.push((u, v));
            edge_colors.push(rng.random_range(0..n / 2));
        }
        let inst = MpmInstance {
            graph: MultiGraph::new(n, edges)?,
            colors: edge_colors,
        };
        if !oracles::solve_mpm(&inst, &Budget::default())?.answer {
            return Ok(inst);
        }
    }
    Err(GenError::RejectionFailed(REJECTION_RETRIES))
}

impl From<crate::graph::GraphError> for GenError {
    fn from(e: crate::graph::GraphError) -> Self {
        GenError::BadParams(e.to_string())
    }
}

fn random_triple(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut s = BTreeSet::new();
    while s.len() < 3 {
        s.insert(rng.random_range(0..n));
    }
    s.into_iter().collect()
}

/// Planted instances contain a disjoint exact cover among their sets.
pub fn gen_x3c(n: usize, m: usize, seed: u64, planted: bool) -> Result<X3cInstance, GenError> {
    if n == 0 || n % 3 != 0 {
        return Err(GenError::BadParams(format!(
            "n = {n} must be a positive multiple of 3"
        )));
    }
    if planted && m < n / 3 {
        return Err(GenError::BadParams(format!(
            "planted instance needs m >= n/3 = {} (got {m})",
            n / 3
        )));
    }
    let mut rng = rng_for(seed);
    if planted {
        let mut elems: Vec<usize> = (0..n).collect();
        elems.shuffle(&mut rng);
        let mut sets: Vec<Vec<usize>> = elems
            .chunks(3)
            .map(|c| {
                let mut t = c.to_vec();
                t.sort_unstable();
                t
            })
            .collect();
        for _ in n / 3..m {
            sets.push(random_triple(&mut rng, n));
        }
        sets.shuffle(&mut rng);
        return Ok(X3cInstance {
            universe_size: n,
            sets,
        });
    }
    for _ in 0..REJECTION_RETRIES {
        let sets: Vec<Vec<usize>> = (0..m).map(|_| random_triple(&mut rng, n)).collect();
        let inst = X3cInstance {
            universe_size: n,
            sets,
        };
        if !oracles::solve_x3c(&inst, &Budget::default())?.answer {
            return Ok(inst);
        }
    }
    Err(GenError::RejectionFailed(REJECTION_RETRIES))
}

/// Surjective coloring of `n` nodes with `num_colors` colors, shuffled.
fn random_coloring(rng: &mut ChaCha8Rng, n: usize, num_colors: usize) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..n)
        .map(|i| {
            if i < num_colors {
                i + 1
            } else {
                rng.random_range(1..=num_colors)
            }
        })
        .collect();
    colors.shuffle(rng);
    colors
}

/// Like [`gen_mcc`] but on a fixed node coloring, so that whole batches can
/// share one coloring as the compositions require.
pub fn gen_mcc_on_coloring(
    node_colors: &[usize],
    num_colors: usize,
    edge_prob: f64,
    seed: u64,
    planted: bool,
) -> Result<MccInstance, GenError> {
    let n = node_colors.len();
    if num_colors < 2 {
        return Err(GenError::BadParams("num_colors must be >= 2".into()));
    }
    for c in 1..=num_colors {
        if !node_colors.contains(&c) {
            return Err(GenError::BadParams(format!("coloring misses color {c}")));
        }
    }
    let mut rng = rng_for(seed);
    let bichromatic: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| node_colors[u] != node_colors[v])
        .collect();
    if planted {
        // one representative per color, clique among them, then noise
        let mut reps = Vec::with_capacity(num_colors);
        for c in 1..=num_colors {
            let class: Vec<usize> = (0..n).filter(|&v| node_colors[v] == c).collect();
            reps.push(class[rng.random_range(0..class.len())]);
        }
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                edges.insert((reps[i].min(reps[j]), reps[i].max(reps[j])));
            }
        }
        for &(u, v) in &bichromatic {
            if rng.random_bool(edge_prob) {
                edges.insert((u, v));
            }
        }
        return Ok(MccInstance {
            graph: Graph::new(n, edges)?,
            node_colors: node_colors.to_vec(),
            num_colors,
        });
    }
    for _ in 0..REJECTION_RETRIES {
        let edges: Vec<(usize, usize)> = bichromatic
            .iter()
            .copied()
            .filter(|_| rng.random_bool(edge_prob))
            .collect();
        let inst = MccInstance {
            graph: Graph::new(n, edges)?,
            node_colors: node_colors.to_vec(),
            num_colors,
        };
        if !oracles::solve_mcc(&inst, num_colors, &Budget::default())?.answer {
            return Ok(inst);
        }
    }
    Err(GenError::RejectionFailed(REJECTION_RETRIES))
}

/// Planted instances contain a multicolored clique on `num_colors` vertices;
/// all generated edges are bichromatic.
pub fn gen_mcc(
    n: usize,
    num_colors: usize,
    edge_prob: f64,
    seed: u64,
    planted: bool,
) -> Result<MccInstance, GenError> {
    if num_colors < 2 || n < num_colors {
        return Err(GenError::BadParams(format!(
            "need n >= num_colors >= 2 (got n = {n}, num_colors = {num_colors})"
        )));
    }
    let mut rng = rng_for(seed);
    let colors = random_coloring(&mut rng, n, num_colors);
    gen_mcc_on_coloring(&colors, num_colors, edge_prob, seed.wrapping_add(1), planted)
}

/// Builds a graph by inserting nodes left to right, each choosing at most `d`
/// random earlier neighbors, hence degeneracy <= d by construction.
pub fn gen_degenerate_graph(n: usize, d: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        let slots = v.min(d);
        let mut wanted = 0;
        for _ in 0..slots {
            if rng.random_bool(edge_prob) {
                wanted += 1;
            }
        }
        let picks = rand::seq::index::sample(&mut rng, v, wanted);
        for u in picks {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("construction produces valid simple edges")
}

/// Random bipartite graph with degeneracy <= d whose B side keeps only nodes
/// of degree > d: B nodes come first, then each A node picks at most `d`
/// random B neighbors; B nodes of degree <= d are dropped (induced subgraph).
/// Returns the graph plus its (A, B) node sets.
pub fn gen_degenerate_bipartite(
    n_a: usize,
    n_b: usize,
    d: usize,
    seed: u64,
) -> (Graph, BTreeSet<usize>, BTreeSet<usize>) {
    let mut rng = rng_for(seed);
    let mut b_degree = vec![0usize; n_b];
    let mut picks_per_a: Vec<Vec<usize>> = Vec::with_capacity(n_a);
    for _ in 0..n_a {
        let wanted = if n_b == 0 { 0 } else { rng.random_range(0..=d.min(n_b)) };
        let picks: Vec<usize> = rand::seq::index::sample(&mut rng, n_b, wanted).into_vec();
        for &b in &picks {
            b_degree[b] += 1;
        }
        picks_per_a.push(picks);
    }
    // keep only B nodes of degree > d, relabel: survivors first, then A
    let survivors: Vec<usize> = (0..n_b).filter(|&b| b_degree[b] > d).collect();
    let b_new: std::collections::BTreeMap<usize, usize> = survivors
        .iter()
        .enumerate()
        .map(|(i, &b)| (b, i))
        .collect();
    let nb = survivors.len();
    let mut edges = Vec::new();
    for (a, picks) in picks_per_a.iter().enumerate() {
        for b in picks {
            if let Some(&nbid) = b_new.get(b) {
                edges.push((nbid, nb + a));
            }
        }
    }
    let g = Graph::new(nb + n_a, edges).expect("bipartite construction is simple");
    let b_side: BTreeSet<usize> = (0..nb).collect();
    let a_side: BTreeSet<usize> = (nb..nb + n_a).collect();
    (g, a_side, b_side)
}

/// Random RBDS instance (harness plumbing). Every blue receives at least one
/// red neighbor: an isolated blue makes the instance trivially NO while the
/// apex reduction to DS could still cover it, so such instances are outside
/// the reduction's equivalence domain.
pub fn gen_rbds(
    red_count: usize,
    blue_count: usize,
    edge_prob: f64,
    k: usize,
    seed: u64,
) -> RbdsInstance {
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for b in 0..blue_count {
        let mut degree = 0;
        for r in 0..red_count {
            if rng.random_bool(edge_prob) {
                edges.push((r, b));
                degree += 1;
            }
        }
        if degree == 0 && red_count > 0 {
            edges.push((rng.random_range(0..red_count), b));
        }
    }
    edges.sort_unstable();
    RbdsInstance {
        red_count,
        blue_count,
        edges,
        k,
    }
}

/// Canonical NO-instance used for padding MPM batches.
pub fn mpm_no_instance(n: usize) -> MpmInstance {
    MpmInstance {
        graph: MultiGraph::new(n, Vec::new()).expect("edgeless multigraph"),
        colors: Vec::new(),
    }
}

/// Canonical NO-instance used for padding X3C batches.
pub fn x3c_no_instance(n: usize) -> X3cInstance {
    X3cInstance {
        universe_size: n,
        sets: Vec::new(),
    }
}

/// Canonical NO-instance used for padding MCC batches (shared coloring).
pub fn mcc_no_instance(node_colors: &[usize], num_colors: usize) -> MccInstance {
    MccInstance {
        graph: Graph::empty(node_colors.len()),
        node_colors: node_colors.to_vec(),
        num_colors,
    }
}

/// Pads an MPM batch to length `want` with edgeless NO-instances. Instances
/// must already share their vertex set; no silent renaming.
pub fn pad_batch_mpm(batch: &[MpmInstance], want: usize) -> Result<Vec<MpmInstance>, GenError> {
    if batch.is_empty() || batch.len() > want {
        return Err(GenError::BadBatchLength {
            got: batch.len(),
            want,
        });
    }
    let n = batch[0].graph.node_count();
    if n < 2 {
        return Err(GenError::BadParams(
            "padding needs n >= 2 so the edgeless instance answers NO".into(),
        ));
    }
    for (i, inst) in batch.iter().enumerate() {
        if inst.graph.node_count() != n {
            return Err(GenError::MismatchedInstances(format!(
                "instance {i} has {} nodes, expected {n}",
                inst.graph.node_count()
            )));
        }
    }
    let mut out = batch.to_vec();
    out.resize(want, mpm_no_instance(n));
    Ok(out)
}

/// Pads an X3C batch to length `want` with empty-family NO-instances.
pub fn pad_batch_x3c(batch: &[X3cInstance], want: usize) -> Result<Vec<X3cInstance>, GenError> {
    if batch.is_empty() || batch.len() > want {
        return Err(GenError::BadBatchLength {
            got: batch.len(),
            want,
        });
    }
    let n = batch[0].universe_size;
    if n == 0 {
        return Err(GenError::BadParams(
            "padding needs a nonempty universe so the empty family answers NO".into(),
        ));
    }
    for (i, inst) in batch.iter().enumerate() {
        if inst.universe_size != n {
            return Err(GenError::MismatchedInstances(format!(
                "instance {i} has universe {}, expected {n}",
                inst.universe_size
            )));
        }
    }
    let mut out = batch.to_vec();
    out.resize(want, x3c_no_instance(n));
    Ok(out)
}

/// Pads an MCC batch to length `want` with edgeless NO-instances on the
/// shared coloring.
pub fn pad_batch_mcc(batch: &[MccInstance], want: usize) -> Result<Vec<MccInstance>, GenError> {
    if batch.is_empty() || batch.len() > want {
        return Err(GenError::BadBatchLength {
            got: batch.len(),
            want,
        });
    }
    let first = &batch[0];
    if first.num_colors < 2 {
        return Err(GenError::BadParams(
            "padding needs num_colors >= 2 so the edgeless instance answers NO".into(),
        ));
    }
    for (i, inst) in batch.iter().enumerate() {
        if inst.node_colors != first.node_colors || inst.num_colors != first.num_colors {
            return Err(GenError::MismatchedInstances(format!(
                "instance {i} disagrees on coloring"
            )));
        }
    }
    let mut out = batch.to_vec();
    out.resize(want, mcc_no_instance(&first.node_colors, first.num_colors));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy_ordering;

    #[test]
    fn validate_reports_violations() {
        let odd = MpmInstance {
            graph: MultiGraph::new(3, vec![(0, 1)]).unwrap(),
            colors: vec![0],
        };
        assert!(odd.violations().iter().any(|v| v.contains("odd")));

        let bad_set = X3cInstance {
            universe_size: 6,
            sets: vec![vec![0, 1]],
        };
        assert!(!bad_set.is_valid());

        let ok = MccInstance {
            graph: Graph::new(3, [(0, 1)]).unwrap(),
            node_colors: vec![1, 2, 1],
            num_colors: 2,
        };
        assert!(ok.is_valid());
    }

    #[test]
    fn gen_mpm_contracts() {
        let yes = gen_mpm(4, 6, 7, true).unwrap();
        assert!(oracles::solve_mpm(&yes, &Budget::default()).unwrap().answer);
        let no = gen_mpm(4, 2, 7, false).unwrap();
        assert!(!oracles::solve_mpm(&no, &Budget::default()).unwrap().answer);
        assert_eq!(gen_mpm(4, 6, 7, true).unwrap(), yes);
        assert!(gen_mpm(3, 2, 0, true).is_err());
    }

    #[test]
    fn gen_x3c_contracts() {
        let yes = gen_x3c(6, 4, 1, true).unwrap();
        assert!(oracles::solve_x3c(&yes, &Budget::default()).unwrap().answer);
        let no = gen_x3c(6, 1, 3, false).unwrap();
        assert!(!oracles::solve_x3c(&no, &Budget::default()).unwrap().answer);
        assert_eq!(gen_x3c(6, 4, 1, true).unwrap(), yes);
    }

    #[test]
    fn gen_mcc_contracts() {
        let yes = gen_mcc(8, 4, 0.3, 2, true).unwrap();
        assert!(yes.is_valid());
        assert!(yes.all_edges_bichromatic());
        assert!(oracles::solve_mcc(&yes, 4, &Budget::default())
            .unwrap()
            .answer);
        let no = gen_mcc(6, 3, 0.3, 5, false).unwrap();
        assert!(!oracles::solve_mcc(&no, 3, &Budget::default())
            .unwrap()
            .answer);
        assert_eq!(gen_mcc(8, 4, 0.3, 2, true).unwrap(), yes);
    }

    #[test]
    fn gen_degenerate_graph_bound() {
        let g = gen_degenerate_graph(20, 2, 0.5, 3);
        assert!(degeneracy_ordering(&g).degeneracy <= 2);
        let dense = gen_degenerate_graph(30, 3, 1.0, 9);
        assert!(degeneracy_ordering(&dense).degeneracy <= 3);
    }

    #[test]
    fn gen_degenerate_bipartite_shape() {
        let (g, a, b) = gen_degenerate_bipartite(20, 5, 2, 11);
        assert_eq!(a.len() + b.len(), g.node_count());
        assert!(degeneracy_ordering(&g).degeneracy <= 2);
        for &v in &b {
            assert!(g.degree(v) > 2);
        }
    }

    #[test]
    fn paddings_answer_no_for_every_kind() {
        let b = Budget::default();
        let x3c = pad_batch_x3c(&[gen_x3c(6, 3, 2, true).unwrap()], 4).unwrap();
        for inst in &x3c[1..] {
            assert!(!oracles::solve_x3c(inst, &b).unwrap().answer);
        }
        let mcc_seed = gen_mcc(5, 3, 0.4, 8, true).unwrap();
        let mcc = pad_batch_mcc(&[mcc_seed.clone()], 3).unwrap();
        assert_eq!(mcc[0], mcc_seed);
        for inst in &mcc[1..] {
            assert_eq!(inst.node_colors, mcc_seed.node_colors);
            assert!(!oracles::solve_mcc(inst, 3, &b).unwrap().answer);
        }
    }

    #[test]
    fn pad_batch_mpm_behaviour() {
        let batch: Vec<MpmInstance> = (0..3).map(|s| gen_mpm(4, 4, s, true).unwrap()).collect();
        let padded = pad_batch_mpm(&batch, 8).unwrap();
        assert_eq!(padded.len(), 8);
        assert_eq!(&padded[..3], &batch[..]);
        for inst in &padded[3..] {
            assert!(!oracles::solve_mpm(inst, &Budget::default()).unwrap().answer);
        }
        // identity when already full length
        assert_eq!(pad_batch_mpm(&batch, 3).unwrap(), batch);
        assert!(pad_batch_mpm(&[], 4).is_err());
        let mismatched = vec![
            gen_mpm(4, 2, 0, true).unwrap(),
            gen_mpm(6, 3, 0, true).unwrap(),
        ];
        assert!(matches!(
            pad_batch_mpm(&mismatched, 4),
            Err(GenError::MismatchedInstances(_))
        ));
    }
}
