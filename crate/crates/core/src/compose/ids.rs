//! Composition of t^d exact-3-cover instances into one independent dominating
//! set instance on a (d+4)-degenerate graph.
//!
//! Node-id order: encoding matching pairs (x, x') by (gamma, delta), choice
//! matching pairs (y, y') by triple, then the universe nodes, then the triple
//! nodes by (instance, triple). The parameter is k = dt + C(n,3) + n/3.

use std::collections::BTreeSet;

use super::{
    all_triples, digits, ComposeError, ComposeKind, ComposeParams, ComposedInstance, GadgetLabel,
};
use crate::graph::Graph;
use crate::problems::{Validate, X3cInstance};
use crate::util::binomial;

/// Composes a padded batch of X3C instances (shared universe, n = 0 mod 3)
/// into one IDS instance.
pub fn compose_ids(
    batch: &[X3cInstance],
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
    let n = batch[0].universe_size;
    if n == 0 || n % 3 != 0 {
        return Err(ComposeError::BadParams(format!(
            "universe size {n} must be a positive multiple of 3"
        )));
    }
    let mut families: Vec<BTreeSet<[usize; 3]>> = Vec::with_capacity(batch.len());
    for (idx, inst) in batch.iter().enumerate() {
        let violations = inst.violations();
        if !violations.is_empty() {
            return Err(ComposeError::InvalidInstance {
                idx,
                msg: violations.join("; "),
            });
        }
        if inst.universe_size != n {
            return Err(ComposeError::BatchMismatch(format!(
                "instance {idx} has universe {}, expected {n}",
                inst.universe_size
            )));
        }
        families.push(
            inst.sets
                .iter()
                .map(|s| {
                    let mut a = [s[0], s[1], s[2]];
                    a.sort_unstable();
                    a
                })
                .collect(),
        );
    }

    let triples = all_triples(n);
    let triple_count = triples.len();

    // node layout
    let x_of = |gamma: usize, delta: usize, primed: bool| 2 * (gamma * d + delta) + primed as usize;
    let x_end = 2 * t * d;
    let y_of = |sidx: usize, primed: bool| x_end + 2 * sidx + primed as usize;
    let y_end = x_end + 2 * triple_count;
    let univ_of = |u: usize| y_end + u;
    let triple_of = |i: usize, sidx: usize| y_end + n + i * triple_count + sidx;
    let node_count = y_end + n + batch.len() * triple_count;

    let mut labels = Vec::with_capacity(node_count);
    for gamma in 0..t {
        for delta in 0..d {
            labels.push(GadgetLabel::Xcode { gamma, delta, primed: false });
            labels.push(GadgetLabel::Xcode { gamma, delta, primed: true });
        }
    }
    for &triple in &triples {
        labels.push(GadgetLabel::Ychoice { triple, primed: false });
        labels.push(GadgetLabel::Ychoice { triple, primed: true });
    }
    for vertex in 0..n {
        labels.push(GadgetLabel::Vuniv { vertex });
    }
    for i in 0..batch.len() {
        for &triple in &triples {
            labels.push(GadgetLabel::Vtriple { inst: i, triple });
        }
    }
    debug_assert_eq!(labels.len(), node_count);

    let mut edges = Vec::new();
    for gamma in 0..t {
        for delta in 0..d {
            edges.push((x_of(gamma, delta, false), x_of(gamma, delta, true)));
        }
    }
    for sidx in 0..triple_count {
        edges.push((y_of(sidx, false), y_of(sidx, true)));
    }
    for (i, family) in families.iter().enumerate() {
        let digit = digits(i, t, d)?;
        for (sidx, triple) in triples.iter().enumerate() {
            let v = triple_of(i, sidx);
            // instance edges only for triples of the family
            if family.contains(triple) {
                for &u in triple {
                    edges.push((univ_of(u), v));
                }
            }
            // connectors attach unconditionally
            edges.push((y_of(sidx, false), v));
            for (delta, &gamma) in digit.iter().enumerate() {
                edges.push((x_of(gamma, delta, false), v));
            }
        }
    }

    let graph = Graph::new(node_count, edges)
        .map_err(|e| ComposeError::BadParams(format!("internal construction error: {e}")))?;
    let k = d * t + binomial(n as u64, 3) as usize + n / 3;
    Ok(ComposedInstance {
        kind: ComposeKind::Ids,
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

/// Lifts a disjoint exact cover of batch instance `i` (given by set indices
/// into that instance's family) to an independent dominating set of the
/// composed graph: the digit-complement endpoints of the encoding matching,
/// the primed endpoint of y_S exactly for chosen triples, and the chosen
/// triple nodes of instance i.
pub fn lift_ids_witness(
    composed: &ComposedInstance,
    inst: &X3cInstance,
    i: usize,
    solution: &[usize],
) -> Result<BTreeSet<usize>, ComposeError> {
    if composed.kind != ComposeKind::Ids {
        return Err(ComposeError::BadParams("not an IDS composition".into()));
    }
    let p = composed.params;
    if i >= p.batch_len {
        return Err(ComposeError::OutOfRange {
            value: i,
            limit: p.batch_len,
        });
    }
    // validate the exact cover
    let mut covered = BTreeSet::new();
    let mut chosen_triples: BTreeSet<[usize; 3]> = BTreeSet::new();
    for &si in solution {
        let s = inst.sets.get(si).ok_or_else(|| {
            ComposeError::BadWitness(format!("set index {si} out of range"))
        })?;
        let mut triple = [s[0], s[1], s[2]];
        triple.sort_unstable();
        for &x in &triple {
            if !covered.insert(x) {
                return Err(ComposeError::BadWitness(format!(
                    "element {x} covered twice"
                )));
            }
        }
        chosen_triples.insert(triple);
    }
    if covered.len() != p.n {
        return Err(ComposeError::BadWitness(format!(
            "solution covers {} of {} elements",
            covered.len(),
            p.n
        )));
    }

    let index = composed.label_index();
    let digit = digits(i, p.t, p.d)?;
    let mut set = BTreeSet::new();
    for gamma in 0..p.t {
        for delta in 0..p.d {
            let primed = digit[delta] == gamma;
            set.insert(index[&GadgetLabel::Xcode { gamma, delta, primed }]);
        }
    }
    for triple in all_triples(p.n) {
        let primed = chosen_triples.contains(&triple);
        set.insert(index[&GadgetLabel::Ychoice { triple, primed }]);
        if primed {
            set.insert(index[&GadgetLabel::Vtriple { inst: i, triple }]);
        }
    }
    assert_eq!(set.len(), composed.k, "lifted witness has size k");
    assert!(
        composed.graph.is_independent_set(&set).expect("valid ids"),
        "lifted witness is independent"
    );
    assert!(
        composed.graph.is_dominating_set(&set).expect("valid ids"),
        "lifted witness dominates"
    );
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degeneracy_ordering;
    use crate::oracles::{solve_ids, solve_x3c, Budget, Witness};
    use crate::problems::{gen_x3c, x3c_no_instance};

    #[test]
    fn shape_d1_t2_n3() {
        let batch = vec![x3c_no_instance(3), x3c_no_instance(3)];
        let composed = compose_ids(&batch, 1, 2).unwrap();
        // 3 universe + 2 triple nodes + 4 encoding + 2 choice
        assert_eq!(composed.graph.node_count(), 11);
        assert_eq!(composed.k, 4);
    }

    #[test]
    fn or_equivalence_d1_t2_n3() {
        let budget = Budget::default();
        for plant_at in 0..2usize {
            let batch: Vec<X3cInstance> = (0..2)
                .map(|j| {
                    if j == plant_at {
                        gen_x3c(3, 1, 40 + j as u64, true).unwrap()
                    } else {
                        x3c_no_instance(3)
                    }
                })
                .collect();
            let composed = compose_ids(&batch, 1, 2).unwrap();
            assert!(
                solve_ids(&composed.graph, composed.k, &budget).unwrap().answer,
                "planted at {plant_at}"
            );
        }
        let all_no = vec![x3c_no_instance(3), x3c_no_instance(3)];
        let composed = compose_ids(&all_no, 1, 2).unwrap();
        assert!(!solve_ids(&composed.graph, composed.k, &budget).unwrap().answer);
    }

    #[test]
    fn degeneracy_bound_d1() {
        let batch: Vec<X3cInstance> =
            (0..2).map(|j| gen_x3c(6, 4, j, true).unwrap()).collect();
        let composed = compose_ids(&batch, 1, 2).unwrap();
        assert!(degeneracy_ordering(&composed.graph).degeneracy <= 5);
    }

    #[test]
    fn ternary_arity_or_equivalence() {
        // t = 3: T = 3, k = dt + C(3,3) + 1 = 5
        let budget = Budget::default();
        for plant_at in 0..3usize {
            let batch: Vec<X3cInstance> = (0..3)
                .map(|j| {
                    if j == plant_at {
                        gen_x3c(3, 1, 50 + j as u64, true).unwrap()
                    } else {
                        x3c_no_instance(3)
                    }
                })
                .collect();
            let composed = compose_ids(&batch, 1, 3).unwrap();
            assert_eq!(composed.k, 5);
            assert!(
                solve_ids(&composed.graph, composed.k, &budget).unwrap().answer,
                "planted at {plant_at}"
            );
        }
        let all_no: Vec<X3cInstance> = (0..3).map(|_| x3c_no_instance(3)).collect();
        let composed = compose_ids(&all_no, 1, 3).unwrap();
        assert!(!solve_ids(&composed.graph, composed.k, &budget).unwrap().answer);
    }

    #[test]
    fn or_semantics_with_both_planted() {
        let budget = Budget::default();
        let batch: Vec<X3cInstance> =
            (0..2).map(|j| gen_x3c(3, 1, 60 + j, true).unwrap()).collect();
        let composed = compose_ids(&batch, 1, 2).unwrap();
        assert!(solve_ids(&composed.graph, composed.k, &budget).unwrap().answer);
    }

    #[test]
    fn lift_witness_small() {
        let budget = Budget::default();
        let batch: Vec<X3cInstance> = vec![gen_x3c(3, 1, 9, true).unwrap(), x3c_no_instance(3)];
        let composed = compose_ids(&batch, 1, 2).unwrap();
        let sol = solve_x3c(&batch[0], &budget).unwrap();
        let Witness::SetIndices(indices) = sol.witness.unwrap() else {
            panic!()
        };
        // lift asserts size, independence, and domination internally
        let set = lift_ids_witness(&composed, &batch[0], 0, &indices).unwrap();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn lift_rejects_bad_solutions() {
        let batch: Vec<X3cInstance> = vec![gen_x3c(3, 1, 9, true).unwrap(), x3c_no_instance(3)];
        let composed = compose_ids(&batch, 1, 2).unwrap();
        assert!(matches!(
            lift_ids_witness(&composed, &batch[0], 0, &[]),
            Err(ComposeError::BadWitness(_))
        ));
    }

    #[test]
    fn triple_nodes_have_expected_degrees() {
        let batch: Vec<X3cInstance> =
            (0..2).map(|j| gen_x3c(6, 3, 70 + j, true).unwrap()).collect();
        let composed = compose_ids(&batch, 1, 2).unwrap();
        let families: Vec<BTreeSet<[usize; 3]>> = batch
            .iter()
            .map(|inst| {
                inst.sets
                    .iter()
                    .map(|s| {
                        let mut a = [s[0], s[1], s[2]];
                        a.sort_unstable();
                        a
                    })
                    .collect()
            })
            .collect();
        for (node, label) in composed.labels.iter().enumerate() {
            if let GadgetLabel::Vtriple { inst, triple } = label {
                let expected = if families[*inst].contains(triple) {
                    composed.params.d + 4
                } else {
                    composed.params.d + 1
                };
                assert_eq!(composed.graph.degree(node), expected, "{label}");
            }
        }
    }
}
