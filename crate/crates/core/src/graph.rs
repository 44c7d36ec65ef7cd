//! Simple undirected graphs, a multigraph variant, exact degeneracy orderings,
//! and the solution-checking predicates every oracle and harness check relies
//! on. Graphs are immutable after construction; removal returns a fresh graph
//! together with an old-id -> new-id relabeling table.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("node {node} out of range (node count {n})")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("set is not a vertex cover: edge ({0}, {1}) uncovered")]
    NotACover(usize, usize),
    #[error("bipartition contract violated: {0}")]
    BipartitionContract(String),
}

/// Simple undirected graph on dense node ids `0..n`.
///
/// Adjacency is stored both as a sorted edge list and as per-node sorted
/// neighbor lists. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::NodeOutOfRange { node: u, n });
            }
            if v >= n {
                return Err(GraphError::NodeOutOfRange { node: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: normalized,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges normalized as `(min, max)`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_nodes<'a>(&self, nodes: impl IntoIterator<Item = &'a usize>) -> Result<(), GraphError> {
        for &u in nodes {
            if u >= self.n {
                return Err(GraphError::NodeOutOfRange { node: u, n: self.n });
            }
        }
        Ok(())
    }

    /// New graph without `remove`, plus the old-id -> new-id table
    /// (`None` for removed nodes). Surviving ids keep their relative order.
    pub fn remove_nodes(&self, remove: &BTreeSet<usize>) -> (Graph, Vec<Option<usize>>) {
        let mut relabel = vec![None; self.n];
        let mut next = 0;
        for u in 0..self.n {
            if !remove.contains(&u) {
                relabel[u] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((relabel[u]?, relabel[v]?)))
            .collect::<Vec<_>>();
        let g = Graph::new(next, edges).expect("removal preserves graph invariants");
        (g, relabel)
    }

    /// True iff every node is in `s` or has a neighbor in `s`.
    pub fn is_dominating_set(&self, s: &BTreeSet<usize>) -> Result<bool, GraphError> {
        self.check_nodes(s)?;
        let mut dominated = vec![false; self.n];
        for &u in s {
            dominated[u] = true;
            for &v in &self.adj[u] {
                dominated[v] = true;
            }
        }
        Ok(dominated.into_iter().all(|b| b))
    }

    pub fn is_independent_set(&self, s: &BTreeSet<usize>) -> Result<bool, GraphError> {
        self.check_nodes(s)?;
        for &u in s {
            for &v in &self.adj[u] {
                if v > u && s.contains(&v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_vertex_cover(&self, s: &BTreeSet<usize>) -> Result<bool, GraphError> {
        self.check_nodes(s)?;
        Ok(self
            .edges
            .iter()
            .all(|(u, v)| s.contains(u) || s.contains(v)))
    }

    /// Connectivity of the induced subgraph `G[s]`. The empty set and
    /// singletons count as connected.
    pub fn is_connected_induced(&self, s: &BTreeSet<usize>) -> Result<bool, GraphError> {
        self.check_nodes(s)?;
        if s.len() <= 1 {
            return Ok(true);
        }
        let start = *s.iter().next().expect("nonempty");
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if s.contains(&v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        Ok(seen.len() == s.len())
    }

    /// True iff `m` is a set of pairwise vertex-disjoint edges of the graph
    /// with no further edge of the graph joining endpoints of two distinct
    /// members. Edges may be given in either endpoint order.
    pub fn is_induced_matching(&self, m: &BTreeSet<(usize, usize)>) -> Result<bool, GraphError> {
        let mut mate: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for &(a, b) in m {
            let e = (a.min(b), a.max(b));
            if !self.has_edge(e.0, e.1) {
                if e.0 >= self.n || e.1 >= self.n {
                    return Err(GraphError::NodeOutOfRange {
                        node: e.0.max(e.1),
                        n: self.n,
                    });
                }
                return Err(GraphError::MissingEdge(e.0, e.1));
            }
            for node in [e.0, e.1] {
                if mate.insert(node, e).is_some() {
                    return Ok(false); // shared endpoint
                }
            }
        }
        for &(u, v) in &self.edges {
            if let (Some(eu), Some(ev)) = (mate.get(&u), mate.get(&v)) {
                if eu != ev {
                    return Ok(false); // edge joins two distinct matching edges
                }
            }
        }
        Ok(true)
    }
}

/// Exact degeneracy plus a certifying elimination ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub degeneracy: usize,
    /// Removal order: position `p` holds the node removed at step `p`; it has
    /// at most `degeneracy` neighbors at later positions.
    pub ordering: Vec<usize>,
}

/// Repeated minimum-degree peeling; ties broken by lowest node id. The maximum
/// degree observed at removal time is exactly the degeneracy.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyResult {
    let n = g.node_count();
    let mut degree: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|u| (degree[u], u)).collect();
    let mut ordering = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some(&(d, u)) = queue.iter().next() {
        queue.remove(&(d, u));
        alive[u] = false;
        degeneracy = degeneracy.max(d);
        ordering.push(u);
        for &v in g.neighbors(u) {
            if alive[v] {
                queue.remove(&(degree[v], v));
                degree[v] -= 1;
                queue.insert((degree[v], v));
            }
        }
    }
    DegeneracyResult {
        degeneracy,
        ordering,
    }
}

/// Decides whether every edge can be assigned to an endpoint in `cover`
/// without any vertex exceeding its capacity, via augmenting paths on the
/// edge-to-cover-vertex bipartite network.
///
/// `cover` must be a vertex cover; `caps` must assign a capacity to every
/// node of the graph.
pub fn cap_assignment_feasible(
    g: &Graph,
    cover: &BTreeSet<usize>,
    caps: &[u64],
) -> Result<bool, GraphError> {
    for &u in cover {
        if u >= g.node_count() {
            return Err(GraphError::NodeOutOfRange {
                node: u,
                n: g.node_count(),
            });
        }
    }
    if caps.len() != g.node_count() {
        return Err(GraphError::NodeOutOfRange {
            node: caps.len(),
            n: g.node_count(),
        });
    }
    for &(u, v) in g.edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            return Err(GraphError::NotACover(u, v));
        }
    }

    let in_cover: Vec<bool> = (0..g.node_count()).map(|u| cover.contains(&u)).collect();
    let mut load = vec![0u64; g.node_count()];
    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    let mut home: Vec<Option<usize>> = vec![None; g.edge_count()];

    fn augment(
        e: usize,
        g: &Graph,
        in_cover: &[bool],
        caps: &[u64],
        load: &mut [u64],
        assigned: &mut [Vec<usize>],
        home: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        let (a, b) = g.edges()[e];
        for v in [a, b] {
            if !in_cover[v] || visited[v] {
                continue;
            }
            visited[v] = true;
            if load[v] < caps[v] {
                load[v] += 1;
                assigned[v].push(e);
                home[e] = Some(v);
                return true;
            }
            // at capacity: try to relocate one of the edges parked here
            let parked = assigned[v].clone();
            for e2 in parked {
                if augment(e2, g, in_cover, caps, load, assigned, home, visited) {
                    assigned[v].retain(|&x| x != e2);
                    assigned[v].push(e);
                    home[e] = Some(v);
                    return true;
                }
            }
        }
        false
    }

    for e in 0..g.edge_count() {
        let mut visited = vec![false; g.node_count()];
        if !augment(
            e,
            g,
            &in_cover,
            caps,
            &mut load,
            &mut assigned,
            &mut home,
            &mut visited,
        ) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partition of the nodes into classes with identical open neighborhoods,
/// each class sorted, classes ordered by their smallest member. Twins are
/// necessarily nonadjacent, so every class is an independent set.
pub fn twin_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut classes: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for u in 0..g.node_count() {
        classes.entry(g.neighbors(u)).or_default().push(u);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Checks `|b| <= d*|a|` for a bipartition `(a, b)` of `g` in which every
/// node of `b` has degree strictly greater than the graph's degeneracy `d`.
/// Violated preconditions are contract errors; on valid inputs this is a
/// theorem and must always return true.
pub fn bipartite_degenerate_bound_check(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
) -> Result<bool, GraphError> {
    if let Some(&u) = a.intersection(b).next() {
        return Err(GraphError::BipartitionContract(format!(
            "node {u} is in both sides"
        )));
    }
    if a.len() + b.len() != g.node_count() {
        return Err(GraphError::BipartitionContract(format!(
            "sides cover {} of {} nodes",
            a.len() + b.len(),
            g.node_count()
        )));
    }
    for &u in a.iter().chain(b.iter()) {
        if u >= g.node_count() {
            return Err(GraphError::NodeOutOfRange {
                node: u,
                n: g.node_count(),
            });
        }
    }
    for &(u, v) in g.edges() {
        if a.contains(&u) == a.contains(&v) {
            return Err(GraphError::BipartitionContract(format!(
                "edge ({u}, {v}) does not cross the bipartition"
            )));
        }
    }
    let d = degeneracy_ordering(g).degeneracy;
    for &u in b {
        if g.degree(u) <= d {
            return Err(GraphError::BipartitionContract(format!(
                "node {u} on the B side has degree {} <= degeneracy {d}",
                g.degree(u)
            )));
        }
    }
    Ok(b.len() <= d * a.len())
}

/// Undirected multigraph: parallel edges are permitted, each with a distinct
/// edge id equal to its position in the edge list. Self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut incident = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(GraphError::NodeOutOfRange { node: u, n });
            }
            if v >= n {
                return Err(GraphError::NodeOutOfRange { node: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(MultiGraph { n, edges, incident })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `id`, in input order.
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Ids of the edges incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// True iff no two edges share the same endpoint pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }
}
