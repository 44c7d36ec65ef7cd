//! Composition of t^{d(d+2)} multicolored-perfect-matching instances into one
//! red-blue dominating set instance on a (d+2)-degenerate graph.
//!
//! Node-id order: reds first (R_code, then R_fill by (color, j, addr), then
//! R_inst by (instance, edge id)), blues second (B_code by (color, addr),
//! B_choice, B_fill, B_inst). The RBDS parameter is
//! k = (d+2)d(t-1) + (n/2)(d^{d+2} - d) + n/2.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    digits, index_to_matrix, pair_index, ComposeError, ComposeKind, ComposeParams,
    ComposedInstance, GadgetLabel, IndexMatrix,
};
use crate::graph::Graph;
use crate::problems::{MpmInstance, Validate};

const MAX_NODES: usize = 5_000_000;

struct DsShape {
    d: usize,
    t: usize,
    n: usize,
    colors: usize,
    /// Address space per color block: (dt)^{d+2}.
    addr_count: usize,
    /// Fillin indices per color: d^{d+2} - d.
    fill_count: usize,
    batch_len: usize,
}

impl DsShape {
    fn new(d: usize, t: usize, n: usize) -> Result<Self, ComposeError> {
        if d < 1 || t < 2 {
            return Err(ComposeError::BadParams(format!(
                "need d >= 1 and t >= 2 (got d = {d}, t = {t})"
            )));
        }
        if n < 2 || n % 2 != 0 {
            return Err(ComposeError::BadParams(format!(
                "instances must share an even vertex set of size >= 2 (got n = {n})"
            )));
        }
        let width = (d + 2) as u32;
        let addr_count = (d * t)
            .checked_pow(width)
            .ok_or_else(|| ComposeError::BadParams("(dt)^(d+2) overflows".into()))?;
        let fill_count = d
            .checked_pow(width)
            .ok_or_else(|| ComposeError::BadParams("d^(d+2) overflows".into()))?
            - d;
        let batch_len = t
            .checked_pow((d * (d + 2)) as u32)
            .ok_or_else(|| ComposeError::BadParams("t^(d(d+2)) overflows".into()))?;
        Ok(DsShape {
            d,
            t,
            n,
            colors: n / 2,
            addr_count,
            fill_count,
            batch_len,
        })
    }

    fn r_code(&self, delta: usize, lambda: usize, gamma: usize) -> usize {
        delta * self.d * self.t + lambda * self.t + gamma
    }

    fn r_code_count(&self) -> usize {
        (self.d + 2) * self.d * self.t
    }

    fn r_fill(&self, color: usize, addr: usize, j: usize) -> usize {
        self.r_code_count()
            + color * self.fill_count * self.addr_count
            + (j - 1) * self.addr_count
            + addr
    }

    fn r_fill_count(&self) -> usize {
        self.colors * self.fill_count * self.addr_count
    }

    fn r_inst_base(&self) -> usize {
        self.r_code_count() + self.r_fill_count()
    }

    fn b_code(&self, color: usize, addr: usize) -> usize {
        color * self.addr_count + addr
    }

    fn b_choice(&self, delta: usize, lambda: usize, gamma1: usize, gamma2: usize) -> usize {
        self.colors * self.addr_count
            + (delta * self.d + lambda) * (self.t * (self.t - 1) / 2)
            + pair_index(gamma1, gamma2, 0, self.t - 1)
    }

    fn b_choice_count(&self) -> usize {
        (self.d + 2) * self.d * (self.t * (self.t - 1) / 2)
    }

    fn b_fill(&self, color: usize, j: usize) -> usize {
        self.colors * self.addr_count + self.b_choice_count() + color * self.fill_count + (j - 1)
    }

    fn b_inst(&self, v: usize) -> usize {
        self.colors * self.addr_count
            + self.b_choice_count()
            + self.colors * self.fill_count
            + v
    }

    fn blue_count(&self) -> usize {
        self.b_inst(0) + self.n
    }

    /// Address of the B_code node selected by matrix column `lambda`:
    /// the base-(dt) number with digit `lambda*t + m[delta,lambda]` at
    /// position delta.
    fn column_address(&self, m: &IndexMatrix, lambda: usize) -> usize {
        let base = self.d * self.t;
        let mut addr = 0;
        let mut weight = 1;
        for delta in 0..self.d + 2 {
            addr += (lambda * self.t + m.get(delta, lambda)) * weight;
            weight *= base;
        }
        addr
    }
}

/// The parameter of the composed RBDS instance.
fn ds_parameter(shape: &DsShape) -> usize {
    (shape.d + 2) * shape.d * (shape.t - 1) + shape.colors * shape.fill_count + shape.colors
}

/// Composes a padded batch of MPM instances (all on the same even vertex set)
/// into one RBDS instance with fully labeled gadget structure.
pub fn compose_ds(
    batch: &[MpmInstance],
    d: usize,
    t: usize,
) -> Result<ComposedInstance, ComposeError> {
    let n = batch
        .first()
        .map(|inst| inst.graph.node_count())
        .ok_or_else(|| ComposeError::BadParams("empty batch".into()))?;
    let shape = DsShape::new(d, t, n)?;
    if batch.len() != shape.batch_len {
        return Err(ComposeError::BatchSize {
            got: batch.len(),
            want: shape.batch_len,
        });
    }
    for (idx, inst) in batch.iter().enumerate() {
        let violations = inst.violations();
        if !violations.is_empty() {
            return Err(ComposeError::InvalidInstance {
                idx,
                msg: violations.join("; "),
            });
        }
        if inst.graph.node_count() != n {
            return Err(ComposeError::BatchMismatch(format!(
                "instance {idx} has {} nodes, expected {n}",
                inst.graph.node_count()
            )));
        }
    }

    let total_inst_edges: usize = batch.iter().map(|i| i.graph.edge_count()).sum();
    let red_count = shape.r_inst_base() + total_inst_edges;
    let node_count = red_count + shape.blue_count();
    if node_count > MAX_NODES {
        return Err(ComposeError::BadParams(format!(
            "construction would have {node_count} nodes"
        )));
    }

    let mut labels: Vec<GadgetLabel> = Vec::with_capacity(node_count);
    for delta in 0..d + 2 {
        for lambda in 0..d {
            for gamma in 0..t {
                labels.push(GadgetLabel::Rcode { delta, lambda, gamma });
            }
        }
    }
    for color in 0..shape.colors {
        for j in 1..=shape.fill_count {
            for addr in 0..shape.addr_count {
                labels.push(GadgetLabel::Rfill { color, addr, j });
            }
        }
    }
    let mut edge_base = vec![0usize; batch.len()];
    let mut acc = shape.r_inst_base();
    for (i, inst) in batch.iter().enumerate() {
        edge_base[i] = acc;
        acc += inst.graph.edge_count();
        for edge in 0..inst.graph.edge_count() {
            labels.push(GadgetLabel::Rinst { inst: i, edge });
        }
    }
    for color in 0..shape.colors {
        for addr in 0..shape.addr_count {
            labels.push(GadgetLabel::Bcode { color, addr });
        }
    }
    for delta in 0..d + 2 {
        for lambda in 0..d {
            for gamma1 in 0..t {
                for gamma2 in (gamma1 + 1)..t {
                    labels.push(GadgetLabel::Bchoice { delta, lambda, gamma1, gamma2 });
                }
            }
        }
    }
    for color in 0..shape.colors {
        for j in 1..=shape.fill_count {
            labels.push(GadgetLabel::Bfill { color, j });
        }
    }
    for vertex in 0..n {
        labels.push(GadgetLabel::Binst { vertex });
    }
    debug_assert_eq!(labels.len(), node_count);

    let blue = |b: usize| red_count + b;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    // encoding gadget: r_{delta,lambda,gamma} -- b^color_a iff digit delta of
    // a in base dt equals lambda*t + gamma
    for addr in 0..shape.addr_count {
        let ds = digits(addr, d * t, d + 2)?;
        for (delta, &digit) in ds.iter().enumerate() {
            let lambda = digit / t;
            let gamma = digit % t;
            let r = shape.r_code(delta, lambda, gamma);
            for color in 0..shape.colors {
                edges.push((r, blue(shape.b_code(color, addr))));
            }
        }
    }
    // choice gadget
    for delta in 0..d + 2 {
        for lambda in 0..d {
            for gamma1 in 0..t {
                for gamma2 in (gamma1 + 1)..t {
                    let b = blue(shape.b_choice(delta, lambda, gamma1, gamma2));
                    edges.push((shape.r_code(delta, lambda, gamma1), b));
                    edges.push((shape.r_code(delta, lambda, gamma2), b));
                }
            }
        }
    }
    // fillin gadget
    for color in 0..shape.colors {
        for j in 1..=shape.fill_count {
            let bf = blue(shape.b_fill(color, j));
            for addr in 0..shape.addr_count {
                let r = shape.r_fill(color, addr, j);
                edges.push((r, blue(shape.b_code(color, addr))));
                edges.push((r, bf));
            }
        }
    }
    // instance graph and connectors
    for (i, inst) in batch.iter().enumerate() {
        let matrix = index_to_matrix(i, d, t)?;
        let column_addrs: Vec<usize> =
            (0..d).map(|lambda| shape.column_address(&matrix, lambda)).collect();
        for edge in 0..inst.graph.edge_count() {
            let r = edge_base[i] + edge;
            let (u, v) = inst.graph.edge(edge);
            edges.push((r, blue(shape.b_inst(u))));
            edges.push((r, blue(shape.b_inst(v))));
            let color = inst.colors[edge];
            for &addr in &column_addrs {
                edges.push((r, blue(shape.b_code(color, addr))));
            }
        }
    }

    let graph = Graph::new(node_count, edges)
        .map_err(|e| ComposeError::BadParams(format!("internal construction error: {e}")))?;
    let k = ds_parameter(&shape);
    Ok(ComposedInstance {
        kind: ComposeKind::Ds,
        graph,
        k,
        labels,
        params: ComposeParams {
            d,
            t,
            n,
            batch_len: shape.batch_len,
            k,
        },
    })
}

/// The B_code addresses a solution built on `matrix` leaves uncovered in
/// every color block: one address per column lambda.
pub fn ds_uncovered_addresses(matrix: &IndexMatrix) -> Result<Vec<usize>, ComposeError> {
    let shape = DsShape::new(matrix.d, matrix.t, 2)?;
    Ok((0..matrix.d)
        .map(|lambda| shape.column_address(matrix, lambda))
        .collect())
}

/// Constructive enforcement solution for a given index matrix: all encoding
/// reds avoiding the matrix entries, plus one fillin red per (color, j)
/// covering the j-th lowest not-yet-covered non-column address. Its size is
/// exactly (n/2)(d^{d+2} - d) + (d+2)d(t-1), it dominates all of B_choice and
/// B_fill, and it leaves exactly the column addresses of each color block
/// uncovered.
pub fn ds_enforcement_witness(
    matrix: &IndexMatrix,
    d: usize,
    t: usize,
    n: usize,
) -> Result<BTreeSet<GadgetLabel>, ComposeError> {
    if matrix.d != d || matrix.t != t || matrix.entries.len() != d * (d + 2) {
        return Err(ComposeError::BadParams(
            "matrix dimensions disagree with (d, t)".into(),
        ));
    }
    if matrix.entries.iter().any(|&e| e >= t) {
        return Err(ComposeError::BadParams("matrix entry out of range".into()));
    }
    let shape = DsShape::new(d, t, n)?;
    let mut witness = BTreeSet::new();
    for delta in 0..d + 2 {
        for lambda in 0..d {
            for gamma in 0..t {
                if gamma != matrix.get(delta, lambda) {
                    witness.insert(GadgetLabel::Rcode { delta, lambda, gamma });
                }
            }
        }
    }
    if shape.fill_count > 0 {
        // Z: addresses whose every digit lies in the allowed set of its
        // coordinate; M: the d column addresses. |Z \ M| = d^{d+2} - d.
        let column_addrs: BTreeSet<usize> = (0..d)
            .map(|lambda| shape.column_address(matrix, lambda))
            .collect();
        let mut fill_targets = Vec::with_capacity(shape.fill_count);
        for pick in 0..d.pow((d + 2) as u32) {
            let lambda_choice = digits(pick, d, d + 2)?;
            let base = d * t;
            let mut addr = 0;
            let mut weight = 1;
            for (delta, &lambda) in lambda_choice.iter().enumerate() {
                addr += (lambda * t + matrix.get(delta, lambda)) * weight;
                weight *= base;
            }
            if !column_addrs.contains(&addr) {
                fill_targets.push(addr);
            }
        }
        fill_targets.sort_unstable();
        debug_assert_eq!(fill_targets.len(), shape.fill_count);
        for color in 0..shape.colors {
            for (j, &addr) in fill_targets.iter().enumerate() {
                witness.insert(GadgetLabel::Rfill { color, addr, j: j + 1 });
            }
        }
    }
    Ok(witness)
}

/// Lifts a multicolored perfect matching of batch instance `i` (given as a
/// set of its edge ids) to a full RBDS solution of the composed instance:
/// the enforcement witness for M_i plus the instance reds of the matching.
/// Returns red node ids of the combined graph.
pub fn lift_ds_witness(
    composed: &ComposedInstance,
    i: usize,
    mpm_solution: &BTreeSet<usize>,
) -> Result<BTreeSet<usize>, ComposeError> {
    if composed.kind != ComposeKind::Ds {
        return Err(ComposeError::BadParams("not a DS composition".into()));
    }
    let p = composed.params;
    if i >= p.batch_len {
        return Err(ComposeError::OutOfRange {
            value: i,
            limit: p.batch_len,
        });
    }
    let index: BTreeMap<GadgetLabel, usize> = composed.label_index();
    let red_count = composed.red_count().expect("DS composition has reds");

    if mpm_solution.len() != p.n / 2 {
        return Err(ComposeError::BadWitness(format!(
            "matching has {} edges, expected n/2 = {}",
            mpm_solution.len(),
            p.n / 2
        )));
    }
    let mut matched_vertices = BTreeSet::new();
    let mut used_colors = BTreeSet::new();
    let mut inst_reds = BTreeSet::new();
    for &edge in mpm_solution {
        let red = *index
            .get(&GadgetLabel::Rinst { inst: i, edge })
            .ok_or_else(|| {
                ComposeError::BadWitness(format!("edge {edge} is not an edge of instance {i}"))
            })?;
        inst_reds.insert(red);
        let mut color = None;
        for &nb in composed.graph.neighbors(red) {
            match &composed.labels[nb] {
                GadgetLabel::Binst { vertex } => {
                    if !matched_vertices.insert(*vertex) {
                        return Err(ComposeError::BadWitness(format!(
                            "vertex {vertex} matched twice"
                        )));
                    }
                }
                GadgetLabel::Bcode { color: l, .. } => color = Some(*l),
                _ => {}
            }
        }
        let color = color.expect("instance reds have d >= 1 connector neighbors");
        if !used_colors.insert(color) {
            return Err(ComposeError::BadWitness(format!("color {color} used twice")));
        }
    }
    if matched_vertices.len() != p.n {
        return Err(ComposeError::BadWitness(
            "matching does not cover the vertex set".into(),
        ));
    }

    let matrix = index_to_matrix(i, p.d, p.t)?;
    let enf = ds_enforcement_witness(&matrix, p.d, p.t, p.n)?;
    let mut solution: BTreeSet<usize> = enf
        .iter()
        .map(|l| *index.get(l).expect("enforcement labels exist in the graph"))
        .collect();
    solution.extend(inst_reds);
    assert_eq!(solution.len(), composed.k, "lifted witness has size k");

    // guaranteed by construction: every blue is dominated
    let mut dominated = vec![false; composed.graph.node_count() - red_count];
    for &r in &solution {
        for &b in composed.graph.neighbors(r) {
            dominated[b - red_count] = true;
        }
    }
    assert!(
        dominated.iter().all(|&x| x),
        "lifted witness dominates all blues"
    );
    Ok(solution)
}
