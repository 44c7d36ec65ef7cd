//! Exact decision procedures with witnesses for all nine problems. These are
//! the ground truth for every equivalence check in the repository; they exist
//! for desk-scale verification only, so each one enumerates under a soft work
//! budget and any pruning preserves exactness.
//!
//! Determinism: every solver enumerates in a fixed order (lowest-id
//! unsatisfied element, candidates ascending, subsets by size then position)
//! and returns the first witness found.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{cap_assignment_feasible, Graph};
use crate::problems::{
    CapVcInstance, MccInstance, MpmInstance, RbdsInstance, SetCoverInstance, Validate, X3cInstance,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("work budget exceeded (limit {limit})")]
    BudgetExceeded { limit: u64 },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// Soft cap on enumeration work (recursion nodes / subsets visited).
/// Exceeding it is a distinct error, never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 1_000_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: Self::DEFAULT_LIMIT,
        }
    }
}

struct Work {
    spent: u64,
    limit: u64,
}

impl Work {
    fn new(budget: &Budget) -> Self {
        Work {
            spent: 0,
            limit: budget.limit,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), OracleError> {
        self.spent += 1;
        if self.spent > self.limit {
            Err(OracleError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Witness payload, per problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Nodes(BTreeSet<usize>),
    EdgeIds(BTreeSet<usize>),
    Edges(BTreeSet<(usize, usize)>),
    SetIndices(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: bool,
    pub witness: Option<Witness>,
}

impl SolveResult {
    fn no() -> Self {
        SolveResult {
            answer: false,
            witness: None,
        }
    }

    fn yes(witness: Witness) -> Self {
        SolveResult {
            answer: true,
            witness: Some(witness),
        }
    }
}

// ---------------------------------------------------------------------------
// Dominating set variants

struct DomSearch<'a> {
    g: &'a Graph,
    k: usize,
    independent: bool,
    max_closed: usize,
    work: Work,
}

impl DomSearch<'_> {
    fn run(&mut self) -> Result<Option<Vec<usize>>, OracleError> {
        let n = self.g.node_count();
        let mut dom = vec![0u32; n];
        let mut blocked = vec![0u32; n];
        let mut chosen = Vec::new();
        self.rec(&mut chosen, &mut dom, &mut blocked, n)
    }

    fn rec(
        &mut self,
        chosen: &mut Vec<usize>,
        dom: &mut [u32],
        blocked: &mut [u32],
        undominated: usize,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        if undominated == 0 {
            return Ok(Some(chosen.clone()));
        }
        if chosen.len() >= self.k
            || undominated > (self.k - chosen.len()) * self.max_closed
        {
            return Ok(None);
        }
        let v = dom
            .iter()
            .position(|&c| c == 0)
            .expect("undominated > 0 implies a zero entry");
        // candidates: closed neighborhood of v, ascending
        let mut cands: Vec<usize> = self.g.neighbors(v).to_vec();
        let pos = cands.partition_point(|&u| u < v);
        cands.insert(pos, v);
        for u in cands {
            if self.independent && blocked[u] > 0 {
                continue;
            }
            chosen.push(u);
            let mut newly = 0;
            dom[u] += 1;
            if dom[u] == 1 {
                newly += 1;
            }
            for &w in self.g.neighbors(u) {
                dom[w] += 1;
                if dom[w] == 1 {
                    newly += 1;
                }
                blocked[w] += 1;
            }
            let found = self.rec(chosen, dom, blocked, undominated - newly)?;
            dom[u] -= 1;
            for &w in self.g.neighbors(u) {
                dom[w] -= 1;
                blocked[w] -= 1;
            }
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn solve_domination(
    g: &Graph,
    k: usize,
    independent: bool,
    budget: &Budget,
) -> Result<SolveResult, OracleError> {
    let max_closed = (0..g.node_count())
        .map(|u| g.degree(u) + 1)
        .max()
        .unwrap_or(1);
    let mut search = DomSearch {
        g,
        k,
        independent,
        max_closed,
        work: Work::new(budget),
    };
    match search.run()? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let set: BTreeSet<usize> = sol.into_iter().collect();
            assert!(g.is_dominating_set(&set)?, "witness fails domination");
            if independent {
                assert!(g.is_independent_set(&set)?, "witness fails independence");
            }
            Ok(SolveResult::yes(Witness::Nodes(set)))
        }
    }
}

/// Dominating set of size at most k?
pub fn solve_ds(g: &Graph, k: usize, budget: &Budget) -> Result<SolveResult, OracleError> {
    solve_domination(g, k, false, budget)
}

/// Independent dominating set of size at most k?
pub fn solve_ids(g: &Graph, k: usize, budget: &Budget) -> Result<SolveResult, OracleError> {
    solve_domination(g, k, true, budget)
}

// ---------------------------------------------------------------------------
// Connected vertex cover

fn node_masks_supported(g: &Graph) -> Result<(), OracleError> {
    if g.node_count() > 63 {
        return Err(OracleError::InvalidInstance(format!(
            "{} nodes exceed the subset oracle limit of 63",
            g.node_count()
        )));
    }
    Ok(())
}

fn mask_is_cover(g: &Graph, mask: u64) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| mask & (1 << u | 1 << v) != 0)
}

/// Connected vertex cover of size at most k, by size-ordered subset
/// enumeration. The empty set and singletons count as connected.
pub fn solve_convc(g: &Graph, k: usize, budget: &Budget) -> Result<SolveResult, OracleError> {
    node_masks_supported(g)?;
    let n = g.node_count();
    let mut work = Work::new(budget);
    for size in 0..=k.min(n) {
        let mut found: Option<u64> = None;
        let mut visit = |mask: u64, work: &mut Work| -> Result<bool, OracleError> {
            work.tick()?;
            if mask_is_cover(g, mask) {
                let set: BTreeSet<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
                if g.is_connected_induced(&set)? {
                    found = Some(mask);
                    return Ok(true);
                }
            }
            Ok(false)
        };
        if size == 0 {
            visit(0, &mut work)?;
        } else {
            let mut mask: u64 = (1 << size) - 1;
            while mask < 1 << n {
                if visit(mask, &mut work)? {
                    break;
                }
                // Gosper's hack: next mask of equal popcount
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        if let Some(mask) = found {
            let set: BTreeSet<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
            assert!(g.is_vertex_cover(&set)?, "witness fails cover");
            assert!(g.is_connected_induced(&set)?, "witness fails connectivity");
            return Ok(SolveResult::yes(Witness::Nodes(set)));
        }
    }
    Ok(SolveResult::no())
}

// ---------------------------------------------------------------------------
// Induced matching

/// Word-array bitset over edge indices.
#[derive(Clone, PartialEq, Eq)]
struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    fn empty(m: usize) -> Self {
        EdgeSet {
            words: vec![0; m.div_ceil(64)],
        }
    }

    fn full(m: usize) -> Self {
        let mut s = Self::empty(m);
        for i in 0..m {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn subtract(&mut self, other: &EdgeSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| wi * 64 + b)
        })
    }
}

struct ImSearch {
    conflicts: Vec<EdgeSet>,
    k: usize,
    work: Work,
}

impl ImSearch {
    /// Greedy clique cover of `cand` in the conflict graph; an induced
    /// matching can use at most one edge per clique, so the class count is an
    /// upper bound on how much `cand` can still contribute.
    fn clique_cover(&self, cand: &EdgeSet) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'next: for v in cand.iter() {
            for class in &mut classes {
                if class.iter().all(|&u| self.conflicts[v].contains(u)) {
                    class.push(v);
                    continue 'next;
                }
            }
            classes.push(vec![v]);
        }
        classes
    }

    fn rec(
        &mut self,
        cand: &EdgeSet,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        if chosen.len() == self.k {
            return Ok(Some(chosen.clone()));
        }
        let classes = self.clique_cover(cand);
        if chosen.len() + classes.len() < self.k {
            return Ok(None);
        }
        // Tomita-style: process vertices by descending class index; a vertex
        // in class ci extends the solution by at most ci + 1.
        let seq: Vec<(usize, usize)> = classes
            .iter()
            .enumerate()
            .flat_map(|(ci, class)| class.iter().map(move |&v| (v, ci)))
            .collect();
        let mut remaining = cand.clone();
        for &(v, ci) in seq.iter().rev() {
            if chosen.len() + ci + 1 < self.k {
                break;
            }
            chosen.push(v);
            let mut next = remaining.clone();
            next.remove(v);
            next.subtract(&self.conflicts[v]);
            let found = self.rec(&next, chosen)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
            remaining.remove(v);
        }
        Ok(None)
    }
}

/// Induced matching with at least k edges? Solved as an independent set
/// search on the edge-conflict graph with a clique-cover bound.
pub fn solve_im(g: &Graph, k: usize, budget: &Budget) -> Result<SolveResult, OracleError> {
    if k == 0 {
        return Ok(SolveResult::yes(Witness::Edges(BTreeSet::new())));
    }
    let edges = g.edges();
    let m = edges.len();
    if k > m {
        return Ok(SolveResult::no());
    }
    let mut conflicts = vec![EdgeSet::empty(m); m];
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
            if clash {
                conflicts[i].insert(j);
                conflicts[j].insert(i);
            }
        }
    }
    let mut search = ImSearch {
        conflicts,
        k,
        work: Work::new(budget),
    };
    let mut chosen = Vec::new();
    match search.rec(&EdgeSet::full(m), &mut chosen)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let set: BTreeSet<(usize, usize)> = sol.into_iter().map(|i| edges[i]).collect();
            assert!(g.is_induced_matching(&set)?, "witness fails induced matching");
            Ok(SolveResult::yes(Witness::Edges(set)))
        }
    }
}

// ---------------------------------------------------------------------------
// Red-blue dominating set

struct RbdsSearch<'a> {
    red_nbrs: Vec<Vec<usize>>,
    blue_cands: Vec<Vec<usize>>,
    inst: &'a RbdsInstance,
    max_red_deg: usize,
    work: Work,
}

impl RbdsSearch<'_> {
    fn rec(
        &mut self,
        chosen: &mut Vec<usize>,
        covered: &mut [u32],
        uncovered: usize,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        if uncovered == 0 {
            return Ok(Some(chosen.clone()));
        }
        if chosen.len() >= self.inst.k
            || uncovered > (self.inst.k - chosen.len()) * self.max_red_deg.max(1)
        {
            return Ok(None);
        }
        // uncovered blue with fewest candidate reds, ties to lowest id
        let b = (0..self.inst.blue_count)
            .filter(|&b| covered[b] == 0)
            .min_by_key(|&b| (self.blue_cands[b].len(), b))
            .expect("uncovered > 0");
        let cands = self.blue_cands[b].clone();
        for r in cands {
            chosen.push(r);
            let mut newly = 0;
            for &bb in &self.red_nbrs[r] {
                covered[bb] += 1;
                if covered[bb] == 1 {
                    newly += 1;
                }
            }
            let found = self.rec(chosen, covered, uncovered - newly)?;
            for &bb in &self.red_nbrs[r] {
                covered[bb] -= 1;
            }
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// At most k reds dominating every blue?
pub fn solve_rbds(inst: &RbdsInstance, budget: &Budget) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    let mut red_nbrs = vec![Vec::new(); inst.red_count];
    let mut blue_cands = vec![Vec::new(); inst.blue_count];
    for &(r, b) in &inst.edges {
        red_nbrs[r].push(b);
        blue_cands[b].push(r);
    }
    for list in red_nbrs.iter_mut().chain(blue_cands.iter_mut()) {
        list.sort_unstable();
        list.dedup();
    }
    let max_red_deg = red_nbrs.iter().map(Vec::len).max().unwrap_or(0);
    let mut search = RbdsSearch {
        red_nbrs,
        blue_cands,
        inst,
        max_red_deg,
        work: Work::new(budget),
    };
    let mut chosen = Vec::new();
    let mut covered = vec![0u32; inst.blue_count];
    match search.rec(&mut chosen, &mut covered, inst.blue_count)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let set: BTreeSet<usize> = sol.into_iter().collect();
            let mut dominated = vec![false; inst.blue_count];
            for &(r, b) in &inst.edges {
                if set.contains(&r) {
                    dominated[b] = true;
                }
            }
            assert!(
                dominated.iter().all(|&d| d),
                "witness fails blue domination"
            );
            Ok(SolveResult::yes(Witness::Nodes(set)))
        }
    }
}

// ---------------------------------------------------------------------------
// Multicolored perfect matching

struct MpmSearch<'a> {
    inst: &'a MpmInstance,
    work: Work,
}

impl MpmSearch<'_> {
    fn rec(
        &mut self,
        matched: &mut [bool],
        used_colors: &mut [bool],
        picked: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        let v = match matched.iter().position(|&m| !m) {
            None => return Ok(Some(picked.clone())),
            Some(v) => v,
        };
        for &eid in self.inst.graph.incident(v) {
            let (a, b) = self.inst.graph.edge(eid);
            let other = if a == v { b } else { a };
            let color = self.inst.colors[eid];
            if matched[other] || used_colors[color] {
                continue;
            }
            matched[v] = true;
            matched[other] = true;
            used_colors[color] = true;
            picked.push(eid);
            let found = self.rec(matched, used_colors, picked)?;
            picked.pop();
            matched[v] = false;
            matched[other] = false;
            used_colors[color] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Perfect matching with pairwise distinct edge colors?
pub fn solve_mpm(inst: &MpmInstance, budget: &Budget) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    let n = inst.graph.node_count();
    let mut search = MpmSearch {
        inst,
        work: Work::new(budget),
    };
    let mut matched = vec![false; n];
    let mut used_colors = vec![false; n / 2];
    let mut picked = Vec::new();
    match search.rec(&mut matched, &mut used_colors, &mut picked)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let ids: BTreeSet<usize> = sol.into_iter().collect();
            let mut seen_nodes = BTreeSet::new();
            let mut seen_colors = BTreeSet::new();
            for &eid in &ids {
                let (a, b) = inst.graph.edge(eid);
                assert!(seen_nodes.insert(a) && seen_nodes.insert(b), "not a matching");
                assert!(seen_colors.insert(inst.colors[eid]), "colors repeat");
            }
            assert_eq!(seen_nodes.len(), n, "matching is not perfect");
            Ok(SolveResult::yes(Witness::EdgeIds(ids)))
        }
    }
}

// ---------------------------------------------------------------------------
// Exact cover and set cover

struct CoverSearch<'a> {
    sets: &'a [Vec<usize>],
    by_element: Vec<Vec<usize>>,
    universe: usize,
    limit: Option<usize>,
    disjoint: bool,
    work: Work,
}

impl CoverSearch<'_> {
    fn rec(
        &mut self,
        covered: &mut [u32],
        uncovered: usize,
        picked: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        if uncovered == 0 {
            return Ok(Some(picked.clone()));
        }
        if let Some(limit) = self.limit {
            if picked.len() >= limit {
                return Ok(None);
            }
        }
        let u = covered.iter().position(|&c| c == 0).expect("uncovered > 0");
        let options = self.by_element[u].clone();
        for si in options {
            if self.disjoint && self.sets[si].iter().any(|&x| covered[x] > 0) {
                continue;
            }
            picked.push(si);
            let mut newly = 0;
            for &x in &self.sets[si] {
                covered[x] += 1;
                if covered[x] == 1 {
                    newly += 1;
                }
            }
            let found = self.rec(covered, uncovered - newly, picked)?;
            for &x in &self.sets[si] {
                covered[x] -= 1;
            }
            picked.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn run_cover(
    sets: &[Vec<usize>],
    universe: usize,
    limit: Option<usize>,
    disjoint: bool,
    budget: &Budget,
) -> Result<Option<Vec<usize>>, OracleError> {
    let mut by_element = vec![Vec::new(); universe];
    for (si, s) in sets.iter().enumerate() {
        for &x in s {
            by_element[x].push(si);
        }
    }
    let mut search = CoverSearch {
        sets,
        by_element,
        universe,
        limit,
        disjoint,
        work: Work::new(budget),
    };
    let mut covered = vec![0u32; universe];
    let mut picked = Vec::new();
    search.rec(&mut covered, search.universe, &mut picked)
}

/// Disjoint exact cover of the universe by 3-sets?
pub fn solve_x3c(inst: &X3cInstance, budget: &Budget) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    match run_cover(&inst.sets, inst.universe_size, None, true, budget)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let mut covered = BTreeSet::new();
            for &si in &sol {
                for &x in &inst.sets[si] {
                    assert!(covered.insert(x), "sets overlap");
                }
            }
            assert_eq!(covered.len(), inst.universe_size, "not an exact cover");
            Ok(SolveResult::yes(Witness::SetIndices(sol)))
        }
    }
}

/// At most k sets covering the universe?
pub fn solve_setcover(
    inst: &SetCoverInstance,
    budget: &Budget,
) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    match run_cover(&inst.sets, inst.universe_size, Some(inst.k), false, budget)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            assert!(sol.len() <= inst.k);
            let covered: BTreeSet<usize> = sol
                .iter()
                .flat_map(|&si| inst.sets[si].iter().copied())
                .collect();
            assert_eq!(covered.len(), inst.universe_size, "not a cover");
            Ok(SolveResult::yes(Witness::SetIndices(sol)))
        }
    }
}

// ---------------------------------------------------------------------------
// Multicolored clique

struct MccSearch<'a> {
    inst: &'a MccInstance,
    k: usize,
    work: Work,
}

impl MccSearch<'_> {
    fn rec(
        &mut self,
        chosen: &mut Vec<usize>,
        used_colors: &mut [bool],
        start: usize,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        self.work.tick()?;
        if chosen.len() == self.k {
            return Ok(Some(chosen.clone()));
        }
        let n = self.inst.graph.node_count();
        if chosen.len() + (n - start) < self.k {
            return Ok(None);
        }
        for v in start..n {
            if used_colors[self.inst.node_colors[v]] {
                continue;
            }
            if !chosen.iter().all(|&u| self.inst.graph.has_edge(u, v)) {
                continue;
            }
            chosen.push(v);
            used_colors[self.inst.node_colors[v]] = true;
            let found = self.rec(chosen, used_colors, v + 1)?;
            used_colors[self.inst.node_colors[v]] = false;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

/// Clique of k pairwise distinctly colored vertices?
pub fn solve_mcc(
    inst: &MccInstance,
    k: usize,
    budget: &Budget,
) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    let mut search = MccSearch {
        inst,
        k,
        work: Work::new(budget),
    };
    let mut chosen = Vec::new();
    let mut used_colors = vec![false; inst.num_colors + 1];
    match search.rec(&mut chosen, &mut used_colors, 0)? {
        None => Ok(SolveResult::no()),
        Some(sol) => {
            let set: BTreeSet<usize> = sol.iter().copied().collect();
            for &u in &set {
                for &v in &set {
                    if u < v {
                        assert!(inst.graph.has_edge(u, v), "witness is not a clique");
                        assert_ne!(
                            inst.node_colors[u], inst.node_colors[v],
                            "witness colors repeat"
                        );
                    }
                }
            }
            Ok(SolveResult::yes(Witness::Nodes(set)))
        }
    }
}

// ---------------------------------------------------------------------------
// Capacitated vertex cover

/// Cover of size at most k with a capacity-respecting edge assignment?
/// Feasibility is monotone under supersets, so it suffices to scan all covers
/// of size exactly min(k, n), in ascending mask order.
pub fn solve_capvc(inst: &CapVcInstance, budget: &Budget) -> Result<SolveResult, OracleError> {
    let violations = inst.violations();
    if !violations.is_empty() {
        return Err(OracleError::InvalidInstance(violations.join("; ")));
    }
    let g = &inst.graph;
    node_masks_supported(g)?;
    let n = g.node_count();
    let size = inst.k.min(n);
    let mut work = Work::new(budget);
    let check = |mask: u64, work: &mut Work| -> Result<Option<SolveResult>, OracleError> {
        work.tick()?;
        if !mask_is_cover(g, mask) {
            return Ok(None);
        }
        let set: BTreeSet<usize> = (0..n).filter(|&u| mask >> u & 1 == 1).collect();
        if cap_assignment_feasible(g, &set, &inst.capacities)? {
            return Ok(Some(SolveResult::yes(Witness::Nodes(set))));
        }
        Ok(None)
    };
    if size == 0 {
        if let Some(res) = check(0, &mut work)? {
            return Ok(res);
        }
        return Ok(SolveResult::no());
    }
    let mut mask: u64 = (1 << size) - 1;
    while mask < 1 << n {
        if let Some(res) = check(mask, &mut work)? {
            return Ok(res);
        }
        // Gosper's hack: next mask of equal popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(SolveResult::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::{gen_mpm, gen_rbds};

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn ds_examples() {
        let b = Budget::default();
        assert!(solve_ds(&k3(), 1, &b).unwrap().answer);
        assert!(!solve_ids(&path(4), 1, &b).unwrap().answer);
        let r = solve_ids(&path(4), 2, &b).unwrap();
        assert!(r.answer);
        let Some(Witness::Nodes(w)) = r.witness else {
            panic!("ids witness is a node set")
        };
        assert!(w.len() <= 2);
        assert!(path(4).is_independent_set(&w).unwrap());
        assert!(path(4).is_dominating_set(&w).unwrap());
    }

    #[test]
    fn convc_examples() {
        let b = Budget::default();
        assert!(!solve_convc(&path(4), 1, &b).unwrap().answer);
        let r = solve_convc(&path(4), 2, &b).unwrap();
        assert!(r.answer);
        assert_eq!(r.witness, Some(Witness::Nodes([1, 2].into())));
        // empty graph: empty cover, connected by convention
        assert!(solve_convc(&Graph::empty(3), 0, &b).unwrap().answer);
    }

    #[test]
    fn im_examples() {
        let b = Budget::default();
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(solve_im(&two_k2, 2, &b).unwrap().answer);
        assert!(!solve_im(&path(4), 2, &b).unwrap().answer);
        assert!(solve_im(&path(4), 0, &b).unwrap().answer);
    }

    #[test]
    fn rbds_examples() {
        let b = Budget::default();
        let inst = RbdsInstance {
            red_count: 1,
            blue_count: 2,
            edges: vec![(0, 0), (0, 1)],
            k: 1,
        };
        assert!(solve_rbds(&inst, &b).unwrap().answer);
        let hopeless = RbdsInstance {
            red_count: 1,
            blue_count: 2,
            edges: vec![],
            k: 5,
        };
        assert!(!solve_rbds(&hopeless, &b).unwrap().answer);
    }

    /// Independent second oracle: DP over blue subsets (minimum reds needed).
    fn rbds_min_dp(inst: &RbdsInstance) -> Option<usize> {
        let nb = inst.blue_count;
        let mut red_mask = vec![0u64; inst.red_count];
        for &(r, b) in &inst.edges {
            red_mask[r] |= 1 << b;
        }
        let full: u64 = if nb == 64 { u64::MAX } else { (1 << nb) - 1 };
        let mut dp = vec![usize::MAX; (full as usize) + 1];
        dp[0] = 0;
        for s in 0..=full {
            if dp[s as usize] == usize::MAX {
                continue;
            }
            for &rm in &red_mask {
                let t = (s | rm) & full;
                if dp[t as usize] > dp[s as usize] + 1 {
                    dp[t as usize] = dp[s as usize] + 1;
                }
            }
        }
        (dp[full as usize] != usize::MAX).then_some(dp[full as usize])
    }

    #[test]
    fn rbds_matches_dp_oracle() {
        let b = Budget::default();
        for seed in 0..60u64 {
            let inst = gen_rbds(5, 6, 0.35, (seed % 4) as usize, seed);
            let fast = solve_rbds(&inst, &b).unwrap().answer;
            let slow = rbds_min_dp(&inst).is_some_and(|min| min <= inst.k);
            assert_eq!(fast, slow, "seed {seed}");
        }
    }

    #[test]
    fn mpm_examples() {
        let b = Budget::default();
        let single = MpmInstance {
            graph: crate::graph::MultiGraph::new(2, vec![(0, 1)]).unwrap(),
            colors: vec![0],
        };
        assert!(solve_mpm(&single, &b).unwrap().answer);
        // C4 whose opposite edges share a color: both perfect matchings are
        // monochromatic pairs
        let c4 = MpmInstance {
            graph: crate::graph::MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            colors: vec![0, 1, 0, 1],
        };
        assert!(!solve_mpm(&c4, &b).unwrap().answer);
        let planted = gen_mpm(6, 7, 42, true).unwrap();
        assert!(solve_mpm(&planted, &b).unwrap().answer);
    }

    #[test]
    fn x3c_and_setcover_examples() {
        let b = Budget::default();
        let yes = X3cInstance {
            universe_size: 6,
            sets: vec![vec![0, 1, 2], vec![3, 4, 5]],
        };
        assert!(solve_x3c(&yes, &b).unwrap().answer);
        let no = X3cInstance {
            universe_size: 6,
            sets: vec![vec![0, 1, 2], vec![2, 3, 4]],
        };
        assert!(!solve_x3c(&no, &b).unwrap().answer);

        let sc = SetCoverInstance {
            universe_size: 3,
            sets: vec![vec![0, 1, 2]],
            d: 3,
            k: 1,
        };
        assert!(solve_setcover(&sc, &b).unwrap().answer);
    }

    #[test]
    fn mcc_examples() {
        let b = Budget::default();
        let rainbow = MccInstance {
            graph: k3(),
            node_colors: vec![1, 2, 3],
            num_colors: 3,
        };
        assert!(solve_mcc(&rainbow, 3, &b).unwrap().answer);
        let mono = MccInstance {
            graph: k3(),
            node_colors: vec![1, 1, 2],
            num_colors: 2,
        };
        assert!(!solve_mcc(&mono, 3, &b).unwrap().answer);
    }

    #[test]
    fn capvc_examples() {
        let b = Budget::default();
        let k2 = CapVcInstance {
            graph: Graph::new(2, [(0, 1)]).unwrap(),
            capacities: vec![1, 0],
            k: 1,
        };
        assert!(solve_capvc(&k2, &b).unwrap().answer);
        let star = |cap| CapVcInstance {
            graph: Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap(),
            capacities: vec![cap, 0, 0, 0],
            k: 1,
        };
        assert!(!solve_capvc(&star(2), &b).unwrap().answer);
        assert!(solve_capvc(&star(3), &b).unwrap().answer);
    }

    /// Unpruned reference: maximum induced matching over all edge subsets of
    /// size at most n/2.
    fn naive_max_im(g: &Graph) -> usize {
        fn extend(
            g: &Graph,
            start: usize,
            chosen: &mut Vec<(usize, usize)>,
            cap: usize,
            best: &mut usize,
        ) {
            *best = (*best).max(chosen.len());
            if chosen.len() == cap {
                return;
            }
            for e in start..g.edge_count() {
                let (a, b) = g.edges()[e];
                let compatible = chosen.iter().all(|&(c, d)| {
                    a != c
                        && a != d
                        && b != c
                        && b != d
                        && !g.has_edge(a, c)
                        && !g.has_edge(a, d)
                        && !g.has_edge(b, c)
                        && !g.has_edge(b, d)
                });
                if compatible {
                    chosen.push((a, b));
                    extend(g, e + 1, chosen, cap, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        extend(g, 0, &mut Vec::new(), g.node_count() / 2, &mut best);
        best
    }

    #[test]
    fn im_matches_naive_on_denser_graphs() {
        let b = Budget::default();
        for seed in 0..12u64 {
            let g = crate::problems::gen_degenerate_graph(8, 3, 0.85, seed);
            let max = naive_max_im(&g);
            for k in 0..=max + 1 {
                assert_eq!(
                    solve_im(&g, k, &b).unwrap().answer,
                    k <= max,
                    "seed {seed}, k {k}, max {max}"
                );
            }
        }
    }

    #[test]
    fn capvc_extreme_parameters() {
        let b = Budget::default();
        let inst = CapVcInstance {
            graph: Graph::new(3, [(0, 1), (1, 2)]).unwrap(),
            capacities: vec![1, 2, 1],
            k: 10, // k beyond n: the whole vertex set is the only candidate
        };
        assert!(solve_capvc(&inst, &b).unwrap().answer);
        let zero = CapVcInstance {
            graph: Graph::new(2, [(0, 1)]).unwrap(),
            capacities: vec![1, 1],
            k: 0,
        };
        assert!(!solve_capvc(&zero, &b).unwrap().answer);
        let edgeless = CapVcInstance {
            graph: Graph::empty(3),
            capacities: vec![0, 0, 0],
            k: 0,
        };
        assert!(solve_capvc(&edgeless, &b).unwrap().answer);
    }

    #[test]
    fn budget_is_enforced() {
        let tiny = Budget::new(3);
        let g = crate::problems::gen_degenerate_graph(12, 3, 0.9, 1);
        let err = solve_ds(&g, 4, &tiny).unwrap_err();
        assert!(matches!(err, OracleError::BudgetExceeded { .. }));
    }

    #[test]
    fn monotone_in_k_spot_checks() {
        type Solver = fn(&Graph, usize, &Budget) -> Result<SolveResult, OracleError>;
        let b = Budget::default();
        for seed in 0..10u64 {
            let g = crate::problems::gen_degenerate_graph(8, 2, 0.6, seed);
            // ds/ids: YES at k implies YES at k+1
            for (solver, name) in [(solve_ds as Solver, "ds"), (solve_ids as Solver, "ids")] {
                let mut prev_yes = false;
                for k in 0..=g.node_count() {
                    let ans = solver(&g, k, &b).unwrap().answer;
                    assert!(!prev_yes || ans, "{name} monotonicity at seed {seed}");
                    prev_yes = ans;
                }
            }
            // im: NO at k implies NO at k+1
            let mut prev_no = false;
            for k in 0..=g.edge_count() + 1 {
                let ans = solve_im(&g, k, &b).unwrap().answer;
                assert!(!(prev_no && ans), "im antitone at seed {seed}");
                prev_no = !ans;
            }
        }
    }
}
