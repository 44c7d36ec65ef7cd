//! OR-composition constructions: many source instances combine into one
//! target instance that is YES iff some input is YES, with the target
//! parameter growing only like t * poly(n). Each construction emits a fully
//! labeled graph so structural claims can be checked by gadget label rather
//! than raw node id.
//!
//! Node-id assignment order is fixed per construction: enforcement block
//! first, instance block second, in the nested loop orders documented at each
//! builder.

mod ds;
mod ids;
mod im;

pub use ds::{compose_ds, ds_enforcement_witness, ds_uncovered_addresses, lift_ds_witness};
pub use ids::{compose_ids, lift_ids_witness};
pub use im::{compose_im, lift_im_witness};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::problems::RbdsInstance;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("invalid parameter: {0}")]
    BadParams(String),
    #[error("batch has {got} instances, construction requires exactly {want}")]
    BatchSize { got: usize, want: usize },
    #[error("batch instances disagree: {0}")]
    BatchMismatch(String),
    #[error("instance {idx} is invalid: {msg}")]
    InvalidInstance { idx: usize, msg: String },
    #[error("value {value} out of range 0..{limit}")]
    OutOfRange { value: usize, limit: usize },
    #[error("witness contract violated: {0}")]
    BadWitness(String),
}

/// Least-significant-first base expansion with exactly `width` digits.
pub fn digits(a: usize, base: usize, width: usize) -> Result<Vec<usize>, ComposeError> {
    if base < 2 {
        return Err(ComposeError::BadParams(format!("base {base} must be >= 2")));
    }
    let limit = base
        .checked_pow(width as u32)
        .ok_or_else(|| ComposeError::BadParams("base^width overflows".into()))?;
    if a >= limit {
        return Err(ComposeError::OutOfRange { value: a, limit });
    }
    let mut rest = a;
    let out = (0..width)
        .map(|_| {
            let digit = rest % base;
            rest /= base;
            digit
        })
        .collect();
    Ok(out)
}

/// A (d+2) x d matrix with entries in 0..t, identifying one input index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMatrix {
    pub d: usize,
    pub t: usize,
    /// Row-major: entry (delta, lambda) at `delta * d + lambda`.
    pub entries: Vec<usize>,
}

impl IndexMatrix {
    pub fn get(&self, delta: usize, lambda: usize) -> usize {
        self.entries[delta * self.d + lambda]
    }

    pub fn rows(&self) -> usize {
        self.d + 2
    }
}

/// Canonical injection of `0..t^{d(d+2)}` into (d+2) x d matrices: write `i`
/// in base t with d(d+2) digits and fill row-major (delta outer, lambda
/// inner).
pub fn index_to_matrix(i: usize, d: usize, t: usize) -> Result<IndexMatrix, ComposeError> {
    if d < 1 {
        return Err(ComposeError::BadParams("d must be >= 1".into()));
    }
    let entries = digits(i, t, d * (d + 2))?;
    Ok(IndexMatrix { d, t, entries })
}

/// One gadget role per node of a composed graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetLabel {
    // DS / RBDS composition
    Rcode { delta: usize, lambda: usize, gamma: usize },
    Rfill { color: usize, addr: usize, j: usize },
    Rinst { inst: usize, edge: usize },
    Bcode { color: usize, addr: usize },
    Bchoice { delta: usize, lambda: usize, gamma1: usize, gamma2: usize },
    Bfill { color: usize, j: usize },
    Binst { vertex: usize },
    // IDS composition
    Vuniv { vertex: usize },
    Vtriple { inst: usize, triple: [usize; 3] },
    Xcode { gamma: usize, delta: usize, primed: bool },
    Ychoice { triple: [usize; 3], primed: bool },
    // IM composition
    Anode { vertex: usize },
    Aedge { inst: usize, edge: usize },
    Bnode { vertex: usize },
    Bcolpair { alpha: usize, beta: usize },
    X { gamma: usize, delta: usize },
    Y { gamma: usize, delta: usize },
}

impl GadgetLabel {
    /// Red side of the RBDS composition.
    pub fn is_red(&self) -> bool {
        matches!(
            self,
            GadgetLabel::Rcode { .. } | GadgetLabel::Rfill { .. } | GadgetLabel::Rinst { .. }
        )
    }
}

impl fmt::Display for GadgetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GadgetLabel::*;
        match self {
            Rcode { delta, lambda, gamma } => write!(f, "Rcode({delta},{lambda},{gamma})"),
            Rfill { color, addr, j } => write!(f, "Rfill({color},{addr},{j})"),
            Rinst { inst, edge } => write!(f, "Rinst({inst},{edge})"),
            Bcode { color, addr } => write!(f, "Bcode({color},{addr})"),
            Bchoice { delta, lambda, gamma1, gamma2 } => {
                write!(f, "Bchoice({delta},{lambda},{gamma1},{gamma2})")
            }
            Bfill { color, j } => write!(f, "Bfill({color},{j})"),
            Binst { vertex } => write!(f, "Binst({vertex})"),
            Vuniv { vertex } => write!(f, "Vuniv({vertex})"),
            Vtriple { inst, triple } => {
                write!(f, "Vtriple({inst},{},{},{})", triple[0], triple[1], triple[2])
            }
            Xcode { gamma, delta, primed } => {
                write!(f, "Xcode{}({gamma},{delta})", if *primed { "'" } else { "" })
            }
            Ychoice { triple, primed } => write!(
                f,
                "Ychoice{}({},{},{})",
                if *primed { "'" } else { "" },
                triple[0],
                triple[1],
                triple[2]
            ),
            Anode { vertex } => write!(f, "Anode({vertex})"),
            Aedge { inst, edge } => write!(f, "Aedge({inst},{edge})"),
            Bnode { vertex } => write!(f, "Bnode({vertex})"),
            Bcolpair { alpha, beta } => write!(f, "Bcolpair({alpha},{beta})"),
            X { gamma, delta } => write!(f, "X({gamma},{delta})"),
            Y { gamma, delta } => write!(f, "Y({gamma},{delta})"),
        }
    }
}

impl FromStr for GadgetLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let open = s.find('(').ok_or_else(|| format!("no '(' in label {s:?}"))?;
        if !s.ends_with(')') {
            return Err(format!("no ')' in label {s:?}"));
        }
        let mut name = &s[..open];
        let primed = name.ends_with('\'');
        if primed {
            name = &name[..name.len() - 1];
        }
        let args: Vec<usize> = if s[open + 1..s.len() - 1].is_empty() {
            Vec::new()
        } else {
            s[open + 1..s.len() - 1]
                .split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?
        };
        let arity = |want: usize| -> Result<(), String> {
            if args.len() == want {
                Ok(())
            } else {
                Err(format!("label {name} expects {want} arguments, got {}", args.len()))
            }
        };
        use GadgetLabel::*;
        let label = match name {
            "Rcode" => {
                arity(3)?;
                Rcode { delta: args[0], lambda: args[1], gamma: args[2] }
            }
            "Rfill" => {
                arity(3)?;
                Rfill { color: args[0], addr: args[1], j: args[2] }
            }
            "Rinst" => {
                arity(2)?;
                Rinst { inst: args[0], edge: args[1] }
            }
            "Bcode" => {
                arity(2)?;
                Bcode { color: args[0], addr: args[1] }
            }
            "Bchoice" => {
                arity(4)?;
                Bchoice { delta: args[0], lambda: args[1], gamma1: args[2], gamma2: args[3] }
            }
            "Bfill" => {
                arity(2)?;
                Bfill { color: args[0], j: args[1] }
            }
            "Binst" => {
                arity(1)?;
                Binst { vertex: args[0] }
            }
            "Vuniv" => {
                arity(1)?;
                Vuniv { vertex: args[0] }
            }
            "Vtriple" => {
                arity(4)?;
                Vtriple { inst: args[0], triple: [args[1], args[2], args[3]] }
            }
            "Xcode" => {
                arity(2)?;
                Xcode { gamma: args[0], delta: args[1], primed }
            }
            "Ychoice" => {
                arity(3)?;
                Ychoice { triple: [args[0], args[1], args[2]], primed }
            }
            "Anode" => {
                arity(1)?;
                Anode { vertex: args[0] }
            }
            "Aedge" => {
                arity(2)?;
                Aedge { inst: args[0], edge: args[1] }
            }
            "Bnode" => {
                arity(1)?;
                Bnode { vertex: args[0] }
            }
            "Bcolpair" => {
                arity(2)?;
                Bcolpair { alpha: args[0], beta: args[1] }
            }
            "X" => {
                arity(2)?;
                X { gamma: args[0], delta: args[1] }
            }
            "Y" => {
                arity(2)?;
                Y { gamma: args[0], delta: args[1] }
            }
            other => return Err(format!("unknown label kind {other:?}")),
        };
        Ok(label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeKind {
    Ds,
    Ids,
    Im,
}

impl ComposeKind {
    /// Exponent in the batch-size requirement T = t^e.
    pub fn exponent(&self, d: usize) -> usize {
        match self {
            ComposeKind::Ds => d * (d + 2),
            ComposeKind::Ids | ComposeKind::Im => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComposeParams {
    pub d: usize,
    pub t: usize,
    /// Shared vertex / universe size of the inputs.
    pub n: usize,
    /// Batch length T = t^e.
    pub batch_len: usize,
    /// Target parameter.
    pub k: usize,
}

/// A composed target instance: the graph, its parameter, and one gadget
/// label per node. For the DS composition the graph is the red-blue graph
/// with all reds preceding all blues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposedInstance {
    pub kind: ComposeKind,
    pub graph: Graph,
    pub k: usize,
    pub labels: Vec<GadgetLabel>,
    pub params: ComposeParams,
}

impl ComposedInstance {
    /// Label -> node id. Labels are injective by construction.
    pub fn label_index(&self) -> BTreeMap<GadgetLabel, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(id, l)| (l.clone(), id))
            .collect()
    }

    /// Number of red nodes (DS composition only); reds form an id prefix.
    pub fn red_count(&self) -> Option<usize> {
        if self.kind != ComposeKind::Ds {
            return None;
        }
        let reds = self.labels.iter().take_while(|l| l.is_red()).count();
        debug_assert!(self.labels[reds..].iter().all(|l| !l.is_red()));
        Some(reds)
    }

    /// RBDS view of a DS composition.
    pub fn rbds_view(&self) -> Option<RbdsInstance> {
        let red_count = self.red_count()?;
        let blue_count = self.graph.node_count() - red_count;
        let edges = self
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v) - red_count))
            .collect();
        Some(RbdsInstance {
            red_count,
            blue_count,
            edges,
            k: self.k,
        })
    }
}

/// All 3-element subsets of `0..n` in lexicographic order.
pub(crate) fn all_triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Index of the pair `(x, y)` with `lo <= x < y` among pairs over
/// `lo..=hi`, lexicographic.
pub(crate) fn pair_index(x: usize, y: usize, lo: usize, hi: usize) -> usize {
    debug_assert!(lo <= x && x < y && y <= hi);
    let w = hi - lo + 1;
    let xi = x - lo;
    let yi = y - lo;
    xi * (2 * w - xi - 1) / 2 + (yi - xi - 1)
}
