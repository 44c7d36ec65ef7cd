//! dkl: compositions, kernelizations, reductions, exact solvers and
//! verification suites for parameterized problems on graphs of bounded
//! degeneracy. Data goes to stdout (or --out), diagnostics to stderr.
//! Exit codes: 0 success (and all verify cases passing), 1 a verify case
//! failed, 2 usage or input errors (including oracle budget exhaustion).

mod json;

use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dkl_core::compose::{compose_ds, compose_ids, compose_im, ComposeKind, ComposedInstance};
use dkl_core::graph::{degeneracy_ordering, Graph};
use dkl_core::harness::{
    verify_degeneracy, verify_kernel, verify_or_ds, verify_or_ids, verify_or_im,
    verify_reduction, HarnessError, KernelKind, ReductionKind, VerificationReport,
};
use dkl_core::kernels::{capvc_kernelize, convc_kernelize, KernelOutput, RuleEvent, RuleTrace};
use dkl_core::oracles::{
    solve_capvc, solve_convc, solve_ds, solve_ids, solve_im, solve_mcc, solve_mpm, solve_rbds,
    solve_setcover, solve_x3c, Budget, SolveResult, Witness,
};
use dkl_core::problems::{
    gen_degenerate_graph, gen_mcc, gen_mpm, gen_x3c, pad_batch_mcc, pad_batch_mpm, pad_batch_x3c,
    MccInstance, MpmInstance, X3cInstance,
};
use dkl_core::reduce::{mpm_simplify, rbds_to_ds, setcover_to_capvc, CapVcVariant};
use json::FileData;

#[derive(Parser)]
#[command(name = "dkl", version, about = "Exact toolkit for problems on graphs of bounded degeneracy")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact degeneracy and a certifying elimination ordering
    Degen { file: String },
    /// Decide an instance exactly; prints the answer and a witness on YES
    Solve {
        problem: Problem,
        file: String,
        /// Parameter k (defaults to the instance's own parameter, if any)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Apply the kernelization rules; prints the reduced instance, the rule
    /// trace, and the size bound
    Kernelize {
        kind: KernelTarget,
        file: String,
        #[arg(long)]
        k: usize,
        /// Degeneracy bound the twin rules may assume
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// OR-compose a batch of instance files (padded with canonical
    /// NO-instances up to the required batch length)
    Compose {
        kind: ComposeTarget,
        /// Input files, or a single directory of .json files
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<String>,
        #[arg(long)]
        d: usize,
        /// Composition arity; the minimal feasible t >= 2 when omitted
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        out: Option<String>,
        /// Emit the graph part in DIMACS edge-list format instead of JSON
        #[arg(long)]
        dimacs: bool,
    },
    /// Transform an instance into another problem
    Reduce {
        kind: ReduceTarget,
        file: String,
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        dimacs: bool,
    },
    /// Generate a seeded instance
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a verification suite; exit 0 iff every case passes
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Ds,
    Ids,
    Convc,
    Im,
    Rbds,
    Mpm,
    X3c,
    Mcc,
    Setcover,
    Capvc,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelTarget {
    Convc,
    Capvc,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComposeTarget {
    Ds,
    Ids,
    Im,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceTarget {
    RbdsToDs,
    MpmSimplify,
    SetcoverToCapvc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Literal,
    Corrected,
}

impl From<Variant> for CapVcVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Literal => CapVcVariant::Literal,
            Variant::Corrected => CapVcVariant::Corrected,
        }
    }
}

#[derive(Subcommand)]
enum GenKind {
    Mpm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        planted: bool,
        #[arg(long)]
        out: Option<String>,
    },
    X3c {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        planted: bool,
        #[arg(long)]
        out: Option<String>,
    },
    Mcc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        planted: bool,
        #[arg(long)]
        out: Option<String>,
    },
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        dimacs: bool,
    },
}

#[derive(Args)]
struct SeedArg {
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum VerifyKind {
    /// OR-equivalence of a composition at oracle-tractable scale
    Or {
        #[arg(long)]
        kind: ComposeTarget,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        /// Edges (mpm) or sets (x3c) per planted instance
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        colors: usize,
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Kernelization answer preservation and size bounds over random trials
    Kernel {
        #[arg(long)]
        kind: KernelTarget,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Source-oracle vs target-oracle equivalence of a reduction
    Reduction {
        #[arg(long)]
        kind: ReduceTarget,
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        max_sets: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Peeling degeneracy and gadget-degree structure of a composition
    Degeneracy {
        #[arg(long)]
        kind: ComposeTarget,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        colors: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

fn parse_file(path: &str) -> Result<FileData, Failure> {
    json::parse(&read_input(path)?).map_err(|e| usage(format!("{path}: {e}")))
}

fn write_output(out: Option<&str>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, format!("{text}\n")).map_err(|e| usage(format!("writing {path}: {e}")))
        }
    }
}

fn budget_from_env() -> Result<Budget, Failure> {
    match std::env::var("DKL_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map(Budget::new)
            .map_err(|_| usage(format!("DKL_BUDGET must be an integer (got {v:?})"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn simple_graph_of(data: &FileData) -> Result<Graph, Failure> {
    match data {
        FileData::Rbds(inst) => Ok(inst.to_graph()),
        other => other
            .as_graph()
            .cloned()
            .ok_or_else(|| usage(format!("a {} file carries no simple graph", other.kind()))),
    }
}

fn witness_json(witness: &Option<Witness>) -> Value {
    match witness {
        None => Value::Null,
        Some(Witness::Nodes(s)) => json!(s.iter().collect::<Vec<_>>()),
        Some(Witness::EdgeIds(s)) => json!(s.iter().collect::<Vec<_>>()),
        Some(Witness::Edges(s)) => Value::Array(s.iter().map(|&(u, v)| json!([u, v])).collect()),
        Some(Witness::SetIndices(s)) => json!(s),
    }
}

fn solve_json(result: &SolveResult) -> Value {
    json!({"answer": result.answer, "witness": witness_json(&result.witness)})
}

fn trace_json(trace: &RuleTrace) -> Value {
    Value::Array(
        trace
            .events
            .iter()
            .map(|ev| match ev {
                RuleEvent::IsolatedRemoved { node } => json!({"rule": "isolated", "node": node}),
                RuleEvent::TwinRemoved { class, removed } => {
                    json!({"rule": "twin", "class": class, "removed": removed})
                }
                RuleEvent::CapTwinRemoved {
                    class,
                    removed,
                    decremented,
                } => json!({
                    "rule": "cap-twin", "class": class, "removed": removed,
                    "decremented": decremented,
                }),
                RuleEvent::CapForcedNo {
                    class,
                    removed,
                    neighbor,
                } => json!({
                    "rule": "cap-forced-no", "class": class, "removed": removed,
                    "neighbor": neighbor,
                }),
            })
            .collect(),
    )
}

fn relabel_json(relabel: &[Option<usize>]) -> Value {
    Value::Array(
        relabel
            .iter()
            .map(|r| r.map_or(Value::Null, |x| json!(x)))
            .collect(),
    )
}

fn kernel_json<T>(output: &KernelOutput<T>, instance: Value) -> Value {
    json!({
        "instance": instance,
        "trace": trace_json(&output.trace),
        "size_bound": output.size_bound,
        "within_bound": output.within_bound,
        "relabel": relabel_json(&output.relabel),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let budget = budget_from_env()?;
    match cli.command {
        Command::Degen { file } => {
            let data = parse_file(&file)?;
            let graph = simple_graph_of(&data)?;
            let result = degeneracy_ordering(&graph);
            println!(
                "{}",
                json!({"degeneracy": result.degeneracy, "ordering": result.ordering})
            );
            Ok(0)
        }
        Command::Solve { problem, file, k } => {
            let data = parse_file(&file)?;
            let result = dispatch_solve(problem, &data, k, &budget)?;
            println!("{}", solve_json(&result));
            Ok(0)
        }
        Command::Kernelize { kind, file, k, d, out } => {
            let data = parse_file(&file)?;
            let payload = match (kind, data) {
                (KernelTarget::Convc, data) => {
                    let graph = simple_graph_of(&data)?;
                    let output = convc_kernelize(&graph, k, d).map_err(usage)?;
                    let reduced = json::emit(&FileData::Graph {
                        graph: output.reduced.clone(),
                        k: Some(k),
                    });
                    kernel_json(&output, reduced)
                }
                (KernelTarget::Capvc, FileData::CapVc(mut inst)) => {
                    inst.k = k;
                    let output = capvc_kernelize(&inst, d).map_err(usage)?;
                    let reduced = json::emit(&FileData::CapVc(output.reduced.clone()));
                    kernel_json(&output, reduced)
                }
                (KernelTarget::Capvc, other) => {
                    return Err(usage(format!(
                        "capvc kernelization needs a capvc file, got {}",
                        other.kind()
                    )))
                }
            };
            write_output(out.as_deref(), &payload.to_string())?;
            Ok(0)
        }
        Command::Compose { kind, inputs, d, t, out, dimacs } => {
            let composed = run_compose(kind, &inputs, d, t)?;
            if dimacs {
                write_output(out.as_deref(), json::to_dimacs(&composed.graph).trim_end())?;
            } else {
                write_output(
                    out.as_deref(),
                    &json::emit(&FileData::Composed(composed)).to_string(),
                )?;
            }
            Ok(0)
        }
        Command::Reduce { kind, file, variant, out, dimacs } => {
            let data = parse_file(&file)?;
            let produced = match (kind, data) {
                (ReduceTarget::RbdsToDs, FileData::Rbds(inst)) => {
                    let (graph, k, _) = rbds_to_ds(&inst).map_err(usage)?;
                    FileData::Graph { graph, k: Some(k) }
                }
                (ReduceTarget::MpmSimplify, FileData::Mpm(inst)) => {
                    let (out_inst, _) = mpm_simplify(&inst).map_err(usage)?;
                    FileData::Mpm(out_inst)
                }
                (ReduceTarget::SetcoverToCapvc, FileData::SetCover(inst)) => {
                    let (out_inst, _) = setcover_to_capvc(&inst, variant.into()).map_err(usage)?;
                    FileData::CapVc(out_inst)
                }
                (_, other) => {
                    return Err(usage(format!(
                        "reduction input kind {} does not match",
                        other.kind()
                    )))
                }
            };
            if dimacs {
                let graph = simple_graph_of(&produced)?;
                write_output(out.as_deref(), json::to_dimacs(&graph).trim_end())?;
            } else {
                write_output(out.as_deref(), &json::emit(&produced).to_string())?;
            }
            Ok(0)
        }
        Command::Gen { kind } => {
            let (data, out, dimacs) = match kind {
                GenKind::Mpm { n, m, seed, planted, out } => (
                    FileData::Mpm(gen_mpm(n, m, seed, planted).map_err(usage)?),
                    out,
                    false,
                ),
                GenKind::X3c { n, m, seed, planted, out } => (
                    FileData::X3c(gen_x3c(n, m, seed, planted).map_err(usage)?),
                    out,
                    false,
                ),
                GenKind::Mcc { n, colors, edge_prob, seed, planted, out } => (
                    FileData::Mcc(gen_mcc(n, colors, edge_prob, seed, planted).map_err(usage)?),
                    out,
                    false,
                ),
                GenKind::Graph { n, d, edge_prob, seed, out, dimacs } => (
                    FileData::Graph {
                        graph: gen_degenerate_graph(n, d, edge_prob, seed),
                        k: None,
                    },
                    out,
                    dimacs,
                ),
            };
            if dimacs {
                let graph = simple_graph_of(&data)?;
                write_output(out.as_deref(), json::to_dimacs(&graph).trim_end())?;
            } else {
                write_output(out.as_deref(), &json::emit(&data).to_string())?;
            }
            Ok(0)
        }
        Command::Verify { kind } => {
            let report = run_verify(kind, &budget)?;
            let pass = report.pass();
            println!("{}", full_report_json(&report));
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn dispatch_solve(
    problem: Problem,
    data: &FileData,
    k: Option<usize>,
    budget: &Budget,
) -> Result<SolveResult, Failure> {
    let need_k = |k: Option<usize>, fallback: Option<usize>| -> Result<usize, Failure> {
        k.or(fallback)
            .ok_or_else(|| usage("this problem needs --k"))
    };
    let oracle_err = |e: dkl_core::oracles::OracleError| usage(e);
    match problem {
        Problem::Ds | Problem::Ids | Problem::Convc | Problem::Im => {
            let graph = simple_graph_of(data)?;
            let fallback = match data {
                FileData::Graph { k, .. } => *k,
                FileData::Composed(c) => Some(c.k),
                _ => None,
            };
            let k = need_k(k, fallback)?;
            let solver = match problem {
                Problem::Ds => solve_ds,
                Problem::Ids => solve_ids,
                Problem::Convc => solve_convc,
                Problem::Im => solve_im,
                _ => unreachable!(),
            };
            solver(&graph, k, budget).map_err(oracle_err)
        }
        Problem::Rbds => {
            let mut inst = match data {
                FileData::Rbds(inst) => inst.clone(),
                FileData::Composed(c) => c
                    .rbds_view()
                    .ok_or_else(|| usage("composed file is not an RBDS composition"))?,
                other => {
                    return Err(usage(format!(
                        "rbds needs an rbds file, got {}",
                        other.kind()
                    )))
                }
            };
            if let Some(k) = k {
                inst.k = k;
            }
            solve_rbds(&inst, budget).map_err(oracle_err)
        }
        Problem::Mpm => match data {
            FileData::Mpm(inst) => solve_mpm(inst, budget).map_err(oracle_err),
            other => Err(usage(format!("mpm needs an mpm file, got {}", other.kind()))),
        },
        Problem::X3c => match data {
            FileData::X3c(inst) => solve_x3c(inst, budget).map_err(oracle_err),
            other => Err(usage(format!("x3c needs an x3c file, got {}", other.kind()))),
        },
        Problem::Mcc => match data {
            FileData::Mcc(inst) => {
                let k = k.unwrap_or(inst.num_colors);
                solve_mcc(inst, k, budget).map_err(oracle_err)
            }
            other => Err(usage(format!("mcc needs an mcc file, got {}", other.kind()))),
        },
        Problem::Setcover => match data {
            FileData::SetCover(inst) => {
                let mut inst = inst.clone();
                if let Some(k) = k {
                    inst.k = k;
                }
                solve_setcover(&inst, budget).map_err(oracle_err)
            }
            other => Err(usage(format!(
                "setcover needs a setcover file, got {}",
                other.kind()
            ))),
        },
        Problem::Capvc => match data {
            FileData::CapVc(inst) => {
                let mut inst = inst.clone();
                if let Some(k) = k {
                    inst.k = k;
                }
                solve_capvc(&inst, budget).map_err(oracle_err)
            }
            other => Err(usage(format!(
                "capvc needs a capvc file, got {}",
                other.kind()
            ))),
        },
    }
}

fn expand_inputs(inputs: &[String]) -> Result<Vec<String>, Failure> {
    if inputs.len() == 1 && fs::metadata(&inputs[0]).map(|m| m.is_dir()).unwrap_or(false) {
        let mut paths: Vec<String> = fs::read_dir(&inputs[0])
            .map_err(|e| usage(format!("reading directory {}: {e}", inputs[0])))?
            .filter_map(|entry| entry.ok())
            .map(|entry| entry.path())
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .map(|p| p.to_string_lossy().into_owned())
            .collect();
        paths.sort();
        if paths.is_empty() {
            return Err(usage(format!("directory {} has no .json files", inputs[0])));
        }
        Ok(paths)
    } else {
        Ok(inputs.to_vec())
    }
}

/// Minimal t >= 2 with t^exponent >= batch length.
fn minimal_t(len: usize, exponent: usize) -> usize {
    let mut t = 2usize;
    loop {
        if t.checked_pow(exponent as u32).is_some_and(|cap| cap >= len) {
            return t;
        }
        t += 1;
    }
}

fn run_compose(
    kind: ComposeTarget,
    inputs: &[String],
    d: usize,
    t: Option<usize>,
) -> Result<ComposedInstance, Failure> {
    let paths = expand_inputs(inputs)?;
    let files: Vec<FileData> = paths
        .iter()
        .map(|p| parse_file(p))
        .collect::<Result<_, _>>()?;
    let compose_kind = match kind {
        ComposeTarget::Ds => ComposeKind::Ds,
        ComposeTarget::Ids => ComposeKind::Ids,
        ComposeTarget::Im => ComposeKind::Im,
    };
    let exponent = compose_kind.exponent(d);
    let t = match t {
        Some(t) if t < 2 => return Err(usage("t must be at least 2")),
        Some(t) => {
            let cap = t
                .checked_pow(exponent as u32)
                .ok_or_else(|| usage("t^exponent overflows"))?;
            if cap < files.len() {
                return Err(usage(format!(
                    "t = {t} yields batch capacity {cap} < {} inputs",
                    files.len()
                )));
            }
            t
        }
        None => minimal_t(files.len(), exponent),
    };
    let total = t.pow(exponent as u32);
    match kind {
        ComposeTarget::Ds => {
            let batch: Vec<MpmInstance> = files
                .into_iter()
                .map(|f| match f {
                    FileData::Mpm(inst) => Ok(inst),
                    other => Err(usage(format!(
                        "ds composition needs mpm files, got {}",
                        other.kind()
                    ))),
                })
                .collect::<Result<_, _>>()?;
            let padded = pad_batch_mpm(&batch, total).map_err(usage)?;
            compose_ds(&padded, d, t).map_err(usage)
        }
        ComposeTarget::Ids => {
            let batch: Vec<X3cInstance> = files
                .into_iter()
                .map(|f| match f {
                    FileData::X3c(inst) => Ok(inst),
                    other => Err(usage(format!(
                        "ids composition needs x3c files, got {}",
                        other.kind()
                    ))),
                })
                .collect::<Result<_, _>>()?;
            let padded = pad_batch_x3c(&batch, total).map_err(usage)?;
            compose_ids(&padded, d, t).map_err(usage)
        }
        ComposeTarget::Im => {
            let batch: Vec<MccInstance> = files
                .into_iter()
                .map(|f| match f {
                    FileData::Mcc(inst) => Ok(inst),
                    other => Err(usage(format!(
                        "im composition needs mcc files, got {}",
                        other.kind()
                    ))),
                })
                .collect::<Result<_, _>>()?;
            let padded = pad_batch_mcc(&batch, total).map_err(usage)?;
            compose_im(&padded, d, t).map_err(usage)
        }
    }
}

fn run_verify(kind: VerifyKind, budget: &Budget) -> Result<VerificationReport, Failure> {
    let harness_err = |e: HarnessError| usage(e);
    match kind {
        VerifyKind::Or { kind, d, t, n, m, colors, edge_prob, seed } => match kind {
            ComposeTarget::Ds => verify_or_ds(d, t, n, m, seed.seed, budget).map_err(harness_err),
            ComposeTarget::Ids => {
                verify_or_ids(d, t, n, m, seed.seed, budget).map_err(harness_err)
            }
            ComposeTarget::Im => {
                verify_or_im(d, t, n, colors, edge_prob, seed.seed, budget).map_err(harness_err)
            }
        },
        VerifyKind::Kernel { kind, trials, n_max, d_max, k_max, seed } => {
            let kernel_kind = match kind {
                KernelTarget::Convc => KernelKind::ConVc,
                KernelTarget::Capvc => KernelKind::CapVc,
            };
            verify_kernel(kernel_kind, trials, n_max, d_max, k_max, seed.seed, budget)
                .map_err(harness_err)
        }
        VerifyKind::Reduction { kind, variant, trials, k_max, max_sets, seed } => {
            let reduction = match kind {
                ReduceTarget::RbdsToDs => ReductionKind::RbdsToDs { trials },
                ReduceTarget::MpmSimplify => ReductionKind::MpmSimplify { trials },
                ReduceTarget::SetcoverToCapvc => ReductionKind::SetcoverToCapVc {
                    variant: variant.into(),
                    k_max,
                    max_sets,
                },
            };
            verify_reduction(reduction, seed.seed, budget).map_err(harness_err)
        }
        VerifyKind::Degeneracy { kind, d, t, n, colors, seed } => {
            let compose_kind = match kind {
                ComposeTarget::Ds => ComposeKind::Ds,
                ComposeTarget::Ids => ComposeKind::Ids,
                ComposeTarget::Im => ComposeKind::Im,
            };
            verify_degeneracy(compose_kind, d, t, n, colors, seed.seed).map_err(harness_err)
        }
    }
}

fn full_report_json(report: &VerificationReport) -> Value {
    let params: serde_json::Map<String, Value> = report
        .params
        .iter()
        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
        .collect();
    json!({
        "check": report.check,
        "params": params,
        "cases": report
            .cases
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "detail": c.detail.clone().map_or(Value::Null, Value::String),
                })
            })
            .collect::<Vec<_>>(),
        "pass": report.pass(),
        "wall_ms": report.wall_ms,
    })
}
