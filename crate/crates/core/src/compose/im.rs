//! Composition of t^d multicolored-clique instances into one induced matching
//! instance on a (d+3)-degenerate graph.
//!
//! Node-id order: enforcement pairs X then Y by (gamma, delta), then A-side
//! vertex nodes, A-side edge nodes by (instance, edge id), B-side vertex
//! nodes, and color-pair nodes. The parameter is
//! k' = d(t-1) + C(c,2) + n - c where c is the number of colors.
//!
//! The enforcement edges a lifted solution uses are exactly the pairs
//! {x_{gamma,delta}, y_{gamma,delta}} with digit delta of i different from
//! gamma, of which there are d(t-1); the parameter accounts for them.

use std::collections::BTreeSet;

use super::{digits, pair_index, ComposeError, ComposeKind, ComposeParams, ComposedInstance, GadgetLabel};
use crate::graph::Graph;
use crate::problems::{MccInstance, Validate};
use crate::util::binomial;

/// Composes a padded batch of MCC instances (shared vertex set and coloring,
/// all edges bichromatic, C(c,2) - c > d) into one IM instance.
pub fn compose_im(
    batch: &[MccInstance],
    d: usize,
    t: usize,
) -> Result<ComposedInstance, ComposeError> {
    if d < 1 || t < 2 {
        return Err(ComposeError::BadParams(format!(
            "need d >= 1 and t >= 2 (got d = {d}, t = {t})"
        )));
    }
    let want = t
        .checked_pow(d as u32)
        .ok_or_else(|| ComposeError::BadParams("t^d overflows".into()))?;
    if batch.len() != want {
        return Err(ComposeError::BatchSize {
            got: batch.len(),
            want,
        });
    }
    let first = &batch[0];
    let n = first.graph.node_count();
    let c = first.num_colors;
    if binomial(c as u64, 2) as usize <= c + d {
        return Err(ComposeError::BadParams(format!(
            "need C(c,2) - c > d (c = {c}, d = {d})"
        )));
    }
    for (idx, inst) in batch.iter().enumerate() {
        let violations = inst.violations();
        if !violations.is_empty() {
            return Err(ComposeError::InvalidInstance {
                idx,
                msg: violations.join("; "),
            });
        }
        if inst.graph.node_count() != n
            || inst.node_colors != first.node_colors
            || inst.num_colors != c
        {
            return Err(ComposeError::BatchMismatch(format!(
                "instance {idx} disagrees on vertex set or coloring"
            )));
        }
        if !inst.all_edges_bichromatic() {
            return Err(ComposeError::InvalidInstance {
                idx,
                msg: "instance has a monochromatic edge".into(),
            });
        }
    }
    let col = &first.node_colors;

    // node layout
    let x_of = |gamma: usize, delta: usize| gamma * d + delta;
    let y_of = |gamma: usize, delta: usize| t * d + gamma * d + delta;
    let anode_of = |v: usize| 2 * t * d + v;
    let aedge_start = 2 * t * d + n;
    let mut aedge_base = vec![0usize; batch.len()];
    let mut acc = aedge_start;
    for (i, inst) in batch.iter().enumerate() {
        aedge_base[i] = acc;
        acc += inst.graph.edge_count();
    }
    let bnode_of = |v: usize| acc + v;
    let bpair_base = acc + n;
    let bpair_of =
        |alpha: usize, beta: usize| bpair_base + pair_index(alpha, beta, 1, c);
    let node_count = bpair_base + binomial(c as u64, 2) as usize;

    let mut labels = Vec::with_capacity(node_count);
    for gamma in 0..t {
        for delta in 0..d {
            labels.push(GadgetLabel::X { gamma, delta });
        }
    }
    for gamma in 0..t {
        for delta in 0..d {
            labels.push(GadgetLabel::Y { gamma, delta });
        }
    }
    for vertex in 0..n {
        labels.push(GadgetLabel::Anode { vertex });
    }
    for (i, inst) in batch.iter().enumerate() {
        for edge in 0..inst.graph.edge_count() {
            labels.push(GadgetLabel::Aedge { inst: i, edge });
        }
    }
    for vertex in 0..n {
        labels.push(GadgetLabel::Bnode { vertex });
    }
    for alpha in 1..=c {
        for beta in (alpha + 1)..=c {
            labels.push(GadgetLabel::Bcolpair { alpha, beta });
        }
    }
    debug_assert_eq!(labels.len(), node_count);

    let mut edges = Vec::new();
    for gamma in 0..t {
        for delta in 0..d {
            edges.push((x_of(gamma, delta), y_of(gamma, delta)));
        }
    }
    for v in 0..n {
        edges.push((anode_of(v), bnode_of(v)));
    }
    for (i, inst) in batch.iter().enumerate() {
        let digit = digits(i, t, d)?;
        for (edge, &(u, v)) in inst.graph.edges().iter().enumerate() {
            let a = aedge_base[i] + edge;
            edges.push((a, bnode_of(u)));
            edges.push((a, bnode_of(v)));
            let (alpha, beta) = (col[u].min(col[v]), col[u].max(col[v]));
            edges.push((a, bpair_of(alpha, beta)));
            for (delta, &gamma) in digit.iter().enumerate() {
                edges.push((x_of(gamma, delta), a));
            }
        }
    }

    let graph = Graph::new(node_count, edges)
        .map_err(|e| ComposeError::BadParams(format!("internal construction error: {e}")))?;
    let k = d * (t - 1) + binomial(c as u64, 2) as usize + n - c;
    Ok(ComposedInstance {
        kind: ComposeKind::Im,
        graph,
        k,
        labels,
        params: ComposeParams {
            d,
            t,
            n,
            batch_len: want,
            k,
        },
    })
}

/// Lifts a multicolored clique of batch instance `i` to an induced matching
/// of size k' in the composed graph: the pairs {a_v, b_v} for vertices
/// outside the clique, one {a_{i,e}, b_{col pair}} edge per clique edge, and
/// the d(t-1) enforcement pairs avoiding the digits of i. Returns matching
/// edges as node-id pairs.
pub fn lift_im_witness(
    composed: &ComposedInstance,
    inst: &MccInstance,
    i: usize,
    clique: &BTreeSet<usize>,
) -> Result<BTreeSet<(usize, usize)>, ComposeError> {
    if composed.kind != ComposeKind::Im {
        return Err(ComposeError::BadParams("not an IM composition".into()));
    }
    let p = composed.params;
    if i >= p.batch_len {
        return Err(ComposeError::OutOfRange {
            value: i,
            limit: p.batch_len,
        });
    }
    let c = inst.num_colors;
    if clique.len() != c {
        return Err(ComposeError::BadWitness(format!(
            "clique has {} vertices, expected {c}",
            clique.len()
        )));
    }
    let mut by_color = vec![None; c + 1];
    for &v in clique {
        if v >= p.n {
            return Err(ComposeError::BadWitness(format!("vertex {v} out of range")));
        }
        let color = inst.node_colors[v];
        if by_color[color].replace(v).is_some() {
            return Err(ComposeError::BadWitness(format!("color {color} repeats")));
        }
    }
    for &u in clique {
        for &v in clique {
            if u < v && !inst.graph.has_edge(u, v) {
                return Err(ComposeError::BadWitness(format!(
                    "vertices {u} and {v} are not adjacent"
                )));
            }
        }
    }

    let index = composed.label_index();
    let digit = digits(i, p.t, p.d)?;
    let mut matching = BTreeSet::new();
    for gamma in 0..p.t {
        for delta in 0..p.d {
            if digit[delta] != gamma {
                matching.insert((
                    index[&GadgetLabel::X { gamma, delta }],
                    index[&GadgetLabel::Y { gamma, delta }],
                ));
            }
        }
    }
    for v in 0..p.n {
        if !clique.contains(&v) {
            matching.insert((
                index[&GadgetLabel::Anode { vertex: v }],
                index[&GadgetLabel::Bnode { vertex: v }],
            ));
        }
    }
    for alpha in 1..=c {
        for beta in (alpha + 1)..=c {
            let u = by_color[alpha].expect("one vertex per color");
            let v = by_color[beta].expect("one vertex per color");
            let key = (u.min(v), u.max(v));
            let edge = inst
                .graph
                .edges()
                .binary_search(&key)
                .expect("clique edges exist");
            matching.insert((
                index[&GadgetLabel::Aedge { inst: i, edge }],
                index[&GadgetLabel::Bcolpair { alpha, beta }],
            ));
        }
    }
    assert_eq!(matching.len(), composed.k, "lifted matching has size k'");
    assert!(
        composed
            .graph
            .is_induced_matching(&matching)
            .expect("edges exist"),
        "lifted matching is induced"
    );
    Ok(matching)
}
