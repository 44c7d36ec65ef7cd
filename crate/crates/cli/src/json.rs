//! JSON instance files: a top-level "kind" discriminator selects the payload
//! schema. Emission is canonical (edges sorted lexicographically, sets with
//! sorted elements), so parse-then-emit is the identity on canonical files.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use dkl_core::compose::{ComposeKind, ComposeParams, ComposedInstance, GadgetLabel};
use dkl_core::graph::{Graph, MultiGraph};
use dkl_core::problems::{
    CapVcInstance, MccInstance, MpmInstance, RbdsInstance, SetCoverInstance, X3cInstance,
};

#[derive(Debug, Clone)]
pub enum FileData {
    Graph { graph: Graph, k: Option<usize> },
    MultiGraph(MultiGraph),
    Mpm(MpmInstance),
    X3c(X3cInstance),
    Mcc(MccInstance),
    SetCover(SetCoverInstance),
    CapVc(CapVcInstance),
    Rbds(RbdsInstance),
    Composed(ComposedInstance),
}

impl FileData {
    pub fn kind(&self) -> &'static str {
        match self {
            FileData::Graph { .. } => "graph",
            FileData::MultiGraph(_) => "multigraph",
            FileData::Mpm(_) => "mpm",
            FileData::X3c(_) => "x3c",
            FileData::Mcc(_) => "mcc",
            FileData::SetCover(_) => "setcover",
            FileData::CapVc(_) => "capvc",
            FileData::Rbds(_) => "rbds",
            FileData::Composed(_) => "composed",
        }
    }

    /// The simple graph carried by this file, if any (for DIMACS export and
    /// graph-problem solvers).
    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            FileData::Graph { graph, .. } => Some(graph),
            FileData::Composed(c) => Some(&c.graph),
            FileData::Mcc(inst) => Some(&inst.graph),
            FileData::CapVc(inst) => Some(&inst.graph),
            _ => None,
        }
    }
}

fn field<'v>(obj: &'v Map<String, Value>, key: &str) -> Result<&'v Value, String> {
    obj.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, String> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| format!("{what} must be a nonnegative integer"))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize, String> {
    as_usize(field(obj, key)?, key)
}

fn pair_list(v: &Value, what: &str) -> Result<Vec<(usize, usize)>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{what} must be an array"))?;
    arr.iter()
        .map(|e| {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| format!("{what} entries must be [u, v] pairs"))?;
            Ok((as_usize(&pair[0], what)?, as_usize(&pair[1], what)?))
        })
        .collect()
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{what} must be an array"))?;
    arr.iter().map(|e| as_usize(e, what)).collect()
}

fn set_list(v: &Value, what: &str) -> Result<Vec<Vec<usize>>, String> {
    let arr = v.as_array().ok_or_else(|| format!("{what} must be an array"))?;
    arr.iter().map(|e| usize_list(e, what)).collect()
}

/// Multigraph-style edge objects `{"id", "u", "v"}` with optional color,
/// required dense ids 0..m.
fn edge_objects(v: &Value, with_color: bool) -> Result<(Vec<(usize, usize)>, Vec<usize>), String> {
    let arr = v.as_array().ok_or("edges must be an array")?;
    let mut edges = vec![None; arr.len()];
    let mut colors = vec![0usize; arr.len()];
    for entry in arr {
        let obj = entry.as_object().ok_or("edge entries must be objects")?;
        let id = usize_field(obj, "id")?;
        if id >= arr.len() || edges[id].is_some() {
            return Err(format!("edge ids must be unique and dense (bad id {id})"));
        }
        edges[id] = Some((usize_field(obj, "u")?, usize_field(obj, "v")?));
        if with_color {
            colors[id] = usize_field(obj, "color")?;
        }
    }
    Ok((edges.into_iter().map(|e| e.expect("dense")).collect(), colors))
}

pub fn parse(text: &str) -> Result<FileData, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let obj = value.as_object().ok_or("top level must be an object")?;
    let kind = field(obj, "kind")?
        .as_str()
        .ok_or("kind must be a string")?;
    match kind {
        "graph" => {
            let n = usize_field(obj, "n")?;
            let edges = pair_list(field(obj, "edges")?, "edges")?;
            let graph = Graph::new(n, edges).map_err(|e| e.to_string())?;
            let k = match obj.get("k") {
                Some(v) => Some(as_usize(v, "k")?),
                None => None,
            };
            Ok(FileData::Graph { graph, k })
        }
        "multigraph" => {
            let n = usize_field(obj, "n")?;
            let (edges, _) = edge_objects(field(obj, "edges")?, false)?;
            Ok(FileData::MultiGraph(
                MultiGraph::new(n, edges).map_err(|e| e.to_string())?,
            ))
        }
        "mpm" => {
            let n = usize_field(obj, "n")?;
            let (edges, colors) = edge_objects(field(obj, "edges")?, true)?;
            Ok(FileData::Mpm(MpmInstance {
                graph: MultiGraph::new(n, edges).map_err(|e| e.to_string())?,
                colors,
            }))
        }
        "x3c" => Ok(FileData::X3c(X3cInstance {
            universe_size: usize_field(obj, "n")?,
            sets: set_list(field(obj, "sets")?, "sets")?,
        })),
        "mcc" => {
            let n = usize_field(obj, "n")?;
            let edges = pair_list(field(obj, "edges")?, "edges")?;
            Ok(FileData::Mcc(MccInstance {
                graph: Graph::new(n, edges).map_err(|e| e.to_string())?,
                node_colors: usize_list(field(obj, "colors")?, "colors")?,
                num_colors: usize_field(obj, "num_colors")?,
            }))
        }
        "setcover" => Ok(FileData::SetCover(SetCoverInstance {
            universe_size: usize_field(obj, "n")?,
            sets: set_list(field(obj, "sets")?, "sets")?,
            d: usize_field(obj, "d")?,
            k: usize_field(obj, "k")?,
        })),
        "capvc" => {
            let n = usize_field(obj, "n")?;
            let edges = pair_list(field(obj, "edges")?, "edges")?;
            let capacities = usize_list(field(obj, "capacities")?, "capacities")?
                .into_iter()
                .map(|c| c as u64)
                .collect();
            Ok(FileData::CapVc(CapVcInstance {
                graph: Graph::new(n, edges).map_err(|e| e.to_string())?,
                capacities,
                k: usize_field(obj, "k")?,
            }))
        }
        "rbds" => Ok(FileData::Rbds(RbdsInstance {
            red_count: usize_field(obj, "n_red")?,
            blue_count: usize_field(obj, "n_blue")?,
            edges: pair_list(field(obj, "edges")?, "edges")?,
            k: usize_field(obj, "k")?,
        })),
        "composed" => parse_composed(obj),
        other => Err(format!("unknown kind {other:?}")),
    }
}

fn parse_composed(obj: &Map<String, Value>) -> Result<FileData, String> {
    let target = field(obj, "target")?
        .as_str()
        .ok_or("target must be a string")?;
    let k = usize_field(obj, "k")?;
    let params_obj = field(obj, "params")?
        .as_object()
        .ok_or("params must be an object")?;
    let (kind, graph) = match target {
        "rbds" => {
            let red = usize_field(obj, "n_red")?;
            let blue = usize_field(obj, "n_blue")?;
            let edges: Vec<(usize, usize)> = pair_list(field(obj, "edges")?, "edges")?
                .into_iter()
                .map(|(r, b)| (r, red + b))
                .collect();
            (
                ComposeKind::Ds,
                Graph::new(red + blue, edges).map_err(|e| e.to_string())?,
            )
        }
        "ids" | "im" => {
            let n = usize_field(obj, "n")?;
            let edges = pair_list(field(obj, "edges")?, "edges")?;
            let kind = if target == "ids" {
                ComposeKind::Ids
            } else {
                ComposeKind::Im
            };
            (kind, Graph::new(n, edges).map_err(|e| e.to_string())?)
        }
        other => return Err(format!("unknown composed target {other:?}")),
    };
    let labels_obj = field(obj, "labels")?
        .as_object()
        .ok_or("labels must be an object")?;
    let mut labels: Vec<Option<GadgetLabel>> = vec![None; graph.node_count()];
    for (key, val) in labels_obj {
        let node: usize = key.parse().map_err(|_| format!("bad node id {key:?}"))?;
        if node >= labels.len() {
            return Err(format!("label for out-of-range node {node}"));
        }
        let text = val.as_str().ok_or("labels must be strings")?;
        labels[node] = Some(text.parse::<GadgetLabel>()?);
    }
    let labels: Vec<GadgetLabel> = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or(format!("node {i} has no label")))
        .collect::<Result<_, _>>()?;
    let params = ComposeParams {
        d: usize_field(params_obj, "d")?,
        t: usize_field(params_obj, "t")?,
        n: usize_field(params_obj, "n")?,
        batch_len: usize_field(params_obj, "T")?,
        k,
    };
    Ok(FileData::Composed(ComposedInstance {
        kind,
        graph,
        k,
        labels,
        params,
    }))
}

fn edges_json(edges: &[(usize, usize)]) -> Value {
    Value::Array(edges.iter().map(|&(u, v)| json!([u, v])).collect())
}

fn colored_edges_json(graph: &MultiGraph, colors: Option<&[usize]>) -> Value {
    Value::Array(
        (0..graph.edge_count())
            .map(|id| {
                let (u, v) = graph.edge(id);
                match colors {
                    Some(c) => json!({"id": id, "u": u, "v": v, "color": c[id]}),
                    None => json!({"id": id, "u": u, "v": v}),
                }
            })
            .collect(),
    )
}

fn sets_json(sets: &[Vec<usize>]) -> Value {
    Value::Array(
        sets.iter()
            .map(|s| {
                let mut sorted = s.clone();
                sorted.sort_unstable();
                Value::Array(sorted.into_iter().map(|x| json!(x)).collect())
            })
            .collect(),
    )
}

pub fn emit(data: &FileData) -> Value {
    match data {
        FileData::Graph { graph, k } => {
            let mut obj = json!({
                "kind": "graph",
                "n": graph.node_count(),
                "edges": edges_json(graph.edges()),
            });
            if let Some(k) = k {
                obj.as_object_mut().expect("object").insert("k".into(), json!(k));
            }
            obj
        }
        FileData::MultiGraph(graph) => json!({
            "kind": "multigraph",
            "n": graph.node_count(),
            "edges": colored_edges_json(graph, None),
        }),
        FileData::Mpm(inst) => json!({
            "kind": "mpm",
            "n": inst.graph.node_count(),
            "edges": colored_edges_json(&inst.graph, Some(&inst.colors)),
        }),
        FileData::X3c(inst) => json!({
            "kind": "x3c",
            "n": inst.universe_size,
            "sets": sets_json(&inst.sets),
        }),
        FileData::Mcc(inst) => json!({
            "kind": "mcc",
            "n": inst.graph.node_count(),
            "edges": edges_json(inst.graph.edges()),
            "colors": inst.node_colors,
            "num_colors": inst.num_colors,
        }),
        FileData::SetCover(inst) => json!({
            "kind": "setcover",
            "n": inst.universe_size,
            "d": inst.d,
            "k": inst.k,
            "sets": sets_json(&inst.sets),
        }),
        FileData::CapVc(inst) => json!({
            "kind": "capvc",
            "n": inst.graph.node_count(),
            "edges": edges_json(inst.graph.edges()),
            "capacities": inst.capacities,
            "k": inst.k,
        }),
        FileData::Rbds(inst) => {
            let mut edges = inst.edges.clone();
            edges.sort_unstable();
            json!({
                "kind": "rbds",
                "n_red": inst.red_count,
                "n_blue": inst.blue_count,
                "edges": edges_json(&edges),
                "k": inst.k,
            })
        }
        FileData::Composed(composed) => {
            let labels: BTreeMap<String, String> = composed
                .labels
                .iter()
                .enumerate()
                .map(|(node, label)| (node.to_string(), label.to_string()))
                .collect();
            let params = json!({
                "d": composed.params.d,
                "t": composed.params.t,
                "n": composed.params.n,
                "T": composed.params.batch_len,
            });
            match composed.kind {
                ComposeKind::Ds => {
                    let rbds = composed.rbds_view().expect("ds composition");
                    json!({
                        "kind": "composed",
                        "target": "rbds",
                        "n_red": rbds.red_count,
                        "n_blue": rbds.blue_count,
                        "edges": edges_json(&rbds.edges),
                        "k": composed.k,
                        "labels": labels,
                        "params": params,
                    })
                }
                ComposeKind::Ids | ComposeKind::Im => json!({
                    "kind": "composed",
                    "target": if composed.kind == ComposeKind::Ids { "ids" } else { "im" },
                    "n": composed.graph.node_count(),
                    "edges": edges_json(composed.graph.edges()),
                    "k": composed.k,
                    "labels": labels,
                    "params": params,
                }),
            }
        }
    }
}

/// DIMACS edge-list export: `p edge n m` header, 1-indexed `e u v` lines.
pub fn to_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.node_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
