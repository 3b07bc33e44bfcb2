//! Command-line front end.
//!
//! Every verb takes a Dynkin type such as `E8` or `B3`, runs one engine
//! operation and prints either line-oriented text or a JSON
//! [`ReportDocument`]. Weights are written `w3`, `2w1`, `w0` or
//! `[a,b,...]`; embeddings are `--iota 1:3,2:4,...` or one of the presets
//! `id`, `shift`, `reverse`, `reverse-shift`.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::deletion::{delete_node, deletion_equivalences, verify_table2, Deletion, EquivalenceClass, Table2Report};
use crate::error::{LieError, Result};
use crate::induction::{default_max_depth, exceptional_report, induction_search, ExceptionalReport, ExceptionalTarget, InductionState};
use crate::rep_theory::{
    classify_weight, defining_modules, freudenthal_character, weyl_orbit, ModuleDescriptor, WeightClass,
};
use crate::root_system::{diagram_automorphisms, Dominated, DynkinType, Root, RootSystem, Weight};
use crate::tensor_ops::{sym2_decompose, tensor_decompose, wedge2_decompose, DecompositionResult};

pub const SCHEMA_VERSION: &str = "1";

const WEIGHT_GRAMMAR: &str = "weights are `wN` (fundamental), `kwN` (multiple), `w0` (zero) or `[a,b,...]` (coordinates)";
const IOTA_GRAMMAR: &str = "embeddings are `i:j,...` pairs (residual node : ambient node) or one of id, shift, reverse, reverse-shift";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lie-induct", version, about = "Exact root systems, modules, node deletion and Lie induction")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Positive roots with heights and weights.
    Roots { algebra: String },
    /// Highest root, its height and the adjoint weight.
    HighestRoot { algebra: String },
    /// Diagram automorphisms as node permutations.
    Automorphisms { algebra: String },
    /// Weyl dimension of an irreducible module.
    Dim { algebra: String, weight: String },
    /// Dominant weight multiplicities of an irreducible module.
    Character { algebra: String, weight: String },
    /// Weyl orbit of a weight.
    Orbit { algebra: String, weight: String },
    /// Defining modules of an algebra.
    Defining { algebra: String },
    /// Decompose a tensor product.
    Tensor { algebra: String, left: String, right: String },
    /// Decompose an exterior square.
    Wedge2 { algebra: String, weight: String },
    /// Decompose a symmetric square.
    Sym2 { algebra: String, weight: String },
    /// Grade an algebra by deleting one node.
    Delete {
        algebra: String,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        iota: Option<String>,
    },
    /// Deletions equivalent to the canonical one at a node.
    Equivalences {
        algebra: String,
        #[arg(long)]
        node: usize,
    },
    /// Check every corank-one deletion row.
    Table2,
    /// Search for graded chains starting from a first level.
    Induct {
        algebra: String,
        weight: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Consistency report for E9, F5 or G3.
    Report {
        target: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Roots { .. } => "roots",
            Verb::HighestRoot { .. } => "highest-root",
            Verb::Automorphisms { .. } => "automorphisms",
            Verb::Dim { .. } => "dim",
            Verb::Character { .. } => "character",
            Verb::Orbit { .. } => "orbit",
            Verb::Defining { .. } => "defining",
            Verb::Tensor { .. } => "tensor",
            Verb::Wedge2 { .. } => "wedge2",
            Verb::Sym2 { .. } => "sym2",
            Verb::Delete { .. } => "delete",
            Verb::Equivalences { .. } => "equivalences",
            Verb::Table2 => "table2",
            Verb::Induct { .. } => "induct",
            Verb::Report { .. } => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub verb: String,
    pub args: Vec<String>,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: CommandEcho,
    pub result: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: Root,
    pub height: i64,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub algebra: DynkinType,
    pub num_roots: usize,
    pub dimension: usize,
    pub positive: Vec<RootEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestRootReport {
    pub algebra: DynkinType,
    pub root: Root,
    pub height: i64,
    pub adjoint_weight: Weight,
    pub adjoint_label: String,
    pub coxeter_number: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismReport {
    pub algebra: DynkinType,
    pub order: usize,
    /// Images of nodes `1..=l` under each automorphism.
    pub permutations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub module: ModuleDescriptor,
    pub class: WeightClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub weight: Weight,
    pub mult: i64,
    pub orbit_size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub module: ModuleDescriptor,
    /// Dominant weights, highest first.
    pub rows: Vec<CharacterRow>,
    pub num_weights: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub algebra: DynkinType,
    pub weight: Weight,
    pub dominant: Dominated,
    pub orbit: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningReport {
    pub algebra: DynkinType,
    pub modules: Vec<ModuleDescriptor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductReport {
    pub base: DynkinType,
    pub b1: Weight,
    pub max_depth: usize,
    pub states: Vec<InductionState>,
}

/// Result of one verb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Payload {
    Roots(RootsReport),
    HighestRoot(HighestRootReport),
    Automorphisms(AutomorphismReport),
    Dim(DimReport),
    Character(CharacterReport),
    Orbit(OrbitReport),
    Defining(DefiningReport),
    Tensor(DecompositionResult),
    Wedge2(DecompositionResult),
    Sym2(DecompositionResult),
    Delete(Deletion),
    Equivalences(EquivalenceClass),
    Table2(Table2Report),
    Induct(InductReport),
    Report(ExceptionalReport),
}

/// Parse `w3`, `2w1`, `w0` or `[a,b,...]` for an algebra of rank `rank`.
pub fn parse_weight(text: &str, rank: usize) -> Result<Weight> {
    let t = text.trim();
    let bad = || LieError::Parse(format!("cannot read weight `{text}`: {WEIGHT_GRAMMAR}"));
    if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        if coords.len() != rank {
            return Err(LieError::RankMismatch {
                expected: rank,
                got: coords.len(),
            });
        }
        return Ok(Weight(coords));
    }
    let (mult, node) = t.split_once('w').ok_or_else(bad)?;
    let m: i64 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
    let i: usize = node.parse().map_err(|_| bad())?;
    if i > rank {
        return Err(LieError::BadNode { node: i, rank });
    }
    Ok(Weight::fundamental(rank, i, m))
}

/// Parse an embedding of a residual diagram with `n` nodes.
pub fn parse_iota(text: &str, n: usize) -> Result<Vec<usize>> {
    let t = text.trim();
    let preset = match t {
        "id" => Some((1..=n).collect()),
        "shift" => Some((1..=n).map(|i| i + 1).collect()),
        "reverse" => Some((1..=n).map(|i| n + 1 - i).collect()),
        "reverse-shift" => Some((1..=n).map(|i| n + 2 - i).collect()),
        _ => None,
    };
    if let Some(v) = preset {
        return Ok(v);
    }
    let bad = || LieError::Parse(format!("cannot read embedding `{text}`: {IOTA_GRAMMAR}"));
    let mut out = vec![0usize; n];
    for pair in t.split(',') {
        let (a, b) = pair.split_once(':').ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || a > n || out[a - 1] != 0 {
            return Err(bad());
        }
        out[a - 1] = b;
    }
    if out.contains(&0) {
        return Err(bad());
    }
    Ok(out)
}

fn system(text: &str) -> Result<RootSystem> {
    RootSystem::build(text)
}

fn execute(verb: &Verb) -> Result<Payload> {
    Ok(match verb {
        Verb::Roots { algebra } => {
            let rs = system(algebra)?;
            let positive = rs
                .positive_roots()
                .iter()
                .map(|r| RootEntry {
                    root: r.clone(),
                    height: r.height(),
                    weight: rs.root_to_weight(r),
                })
                .collect();
            Payload::Roots(RootsReport {
                algebra: rs.dynkin(),
                num_roots: rs.num_roots(),
                dimension: rs.dimension(),
                positive,
            })
        }
        Verb::HighestRoot { algebra } => {
            let rs = system(algebra)?;
            let root = rs.highest_root().clone();
            let adjoint_weight = rs.root_to_weight(&root);
            Payload::HighestRoot(HighestRootReport {
                algebra: rs.dynkin(),
                height: root.height(),
                adjoint_label: adjoint_label(&adjoint_weight),
                adjoint_weight,
                root,
                coxeter_number: rs.coxeter_number(),
            })
        }
        Verb::Automorphisms { algebra } => {
            let t: DynkinType = algebra.parse()?;
            let permutations = diagram_automorphisms(t);
            Payload::Automorphisms(AutomorphismReport {
                algebra: t,
                order: permutations.len(),
                permutations,
            })
        }
        Verb::Dim { algebra, weight } => {
            let rs = system(algebra)?;
            let w = parse_weight(weight, rs.rank())?;
            Payload::Dim(DimReport {
                module: ModuleDescriptor::new(&rs, w.clone())?,
                class: classify_weight(&rs, &w)?,
            })
        }
        Verb::Character { algebra, weight } => {
            let rs = system(algebra)?;
            let w = parse_weight(weight, rs.rank())?;
            let ch = freudenthal_character(&rs, &w)?;
            let rows: Vec<CharacterRow> = ch
                .entries
                .iter()
                .rev()
                .map(|(wt, &m)| CharacterRow {
                    weight: wt.clone(),
                    mult: m,
                    orbit_size: rs.orbit_size(wt),
                })
                .collect();
            Payload::Character(CharacterReport {
                module: ModuleDescriptor::new(&rs, w)?,
                num_weights: rows.iter().map(|r| r.orbit_size).sum(),
                rows,
            })
        }
        Verb::Orbit { algebra, weight } => {
            let rs = system(algebra)?;
            let w = parse_weight(weight, rs.rank())?;
            Payload::Orbit(OrbitReport {
                algebra: rs.dynkin(),
                dominant: rs.to_dominant(&w),
                orbit: weyl_orbit(&rs, &w),
                weight: w,
            })
        }
        Verb::Defining { algebra } => {
            let rs = system(algebra)?;
            Payload::Defining(DefiningReport {
                algebra: rs.dynkin(),
                modules: defining_modules(&rs),
            })
        }
        Verb::Tensor { algebra, left, right } => {
            let rs = system(algebra)?;
            let a = parse_weight(left, rs.rank())?;
            let b = parse_weight(right, rs.rank())?;
            Payload::Tensor(tensor_decompose(&rs, &a, &b)?)
        }
        Verb::Wedge2 { algebra, weight } => {
            let rs = system(algebra)?;
            let w = parse_weight(weight, rs.rank())?;
            Payload::Wedge2(wedge2_decompose(&rs, &w)?)
        }
        Verb::Sym2 { algebra, weight } => {
            let rs = system(algebra)?;
            let w = parse_weight(weight, rs.rank())?;
            Payload::Sym2(sym2_decompose(&rs, &w)?)
        }
        Verb::Delete { algebra, node, iota } => {
            let rs = system(algebra)?;
            let iota = iota
                .as_deref()
                .map(|t| parse_iota(t, rs.rank() - 1))
                .transpose()?;
            Payload::Delete(delete_node(&rs, *node, iota.as_deref())?)
        }
        Verb::Equivalences { algebra, node } => {
            let t: DynkinType = algebra.parse()?;
            Payload::Equivalences(deletion_equivalences(t, *node)?)
        }
        Verb::Table2 => Payload::Table2(verify_table2()),
        Verb::Induct {
            algebra,
            weight,
            depth,
            threads,
        } => {
            let rs = system(algebra)?;
            let b1 = parse_weight(weight, rs.rank())?;
            let max_depth = depth.unwrap_or_else(default_max_depth);
            Payload::Induct(InductReport {
                base: rs.dynkin(),
                states: induction_search(&rs, &b1, max_depth, *threads)?,
                b1,
                max_depth,
            })
        }
        Verb::Report { target, depth, threads } => {
            let target: ExceptionalTarget = target.parse()?;
            let max_depth = depth.unwrap_or_else(default_max_depth);
            Payload::Report(exceptional_report(target, max_depth, *threads)?)
        }
    })
}

fn adjoint_label(w: &Weight) -> String {
    if let Some(s) = w.short_name() {
        return s;
    }
    let parts: Vec<String> = w
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { format!("w{}", i + 1) } else { format!("{c}w{}", i + 1) })
        .collect();
    parts.join("+")
}

fn module_line(m: &ModuleDescriptor) -> String {
    format!("V({}) dim {}", m.label(), m.dimension)
}

fn decomposition_text(out: &mut String, title: &str, d: &DecompositionResult) {
    let _ = writeln!(out, "{title} over {}: dimension {}", d.algebra, d.source_dimension);
    for s in &d.summands {
        let _ = writeln!(out, "  {} x {}", s.multiplicity, module_line(&s.module));
    }
}

fn chain_text(state: &InductionState) -> String {
    let end = if state.terminated { "" } else { " ..." };
    format!("{}{end} => dim {}", state.labels().join(", "), state.dbos_dimension)
}

/// Line-oriented rendering of a payload.
pub fn render_text(p: &Payload) -> String {
    let mut out = String::new();
    match p {
        Payload::Roots(r) => {
            let _ = writeln!(
                out,
                "{}: {} roots, {} positive, dimension {}",
                r.algebra,
                r.num_roots,
                r.positive.len(),
                r.dimension
            );
            for e in &r.positive {
                let _ = writeln!(out, "{} height {} weight {}", e.root, e.height, e.weight);
            }
        }
        Payload::HighestRoot(h) => {
            let _ = writeln!(out, "{} highest root {}", h.algebra, h.root);
            let _ = writeln!(out, "height {}", h.height);
            let _ = writeln!(out, "adjoint {} = {}", h.adjoint_weight, h.adjoint_label);
            let _ = writeln!(out, "coxeter number {}", h.coxeter_number);
        }
        Payload::Automorphisms(a) => {
            let _ = writeln!(out, "{}: {} diagram automorphisms", a.algebra, a.order);
            for p in &a.permutations {
                let v: Vec<String> = p.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "{}", v.join(" "));
            }
        }
        Payload::Dim(d) => {
            let _ = writeln!(out, "{}", d.module.dimension);
        }
        Payload::Character(c) => {
            let _ = writeln!(
                out,
                "{} over {}: {} weights",
                module_line(&c.module),
                c.module.algebra,
                c.num_weights
            );
            for r in &c.rows {
                let _ = writeln!(out, "{} mult {} orbit {}", r.weight, r.mult, r.orbit_size);
            }
        }
        Payload::Orbit(o) => {
            let _ = writeln!(
                out,
                "orbit of {} over {}: {} weights, dominant {}",
                o.weight,
                o.algebra,
                o.orbit.len(),
                o.dominant.dominant
            );
            for w in &o.orbit {
                let _ = writeln!(out, "{w}");
            }
        }
        Payload::Defining(d) => {
            let _ = writeln!(out, "{}: {} defining modules", d.algebra, d.modules.len());
            for m in &d.modules {
                let _ = writeln!(out, "{} {}", m.highest_weight, module_line(m));
            }
        }
        Payload::Tensor(d) => decomposition_text(&mut out, "tensor product", d),
        Payload::Wedge2(d) => decomposition_text(&mut out, "exterior square", d),
        Payload::Sym2(d) => decomposition_text(&mut out, "symmetric square", d),
        Payload::Delete(d) => {
            let iota: Vec<String> = d.iota().iter().map(|i| i.to_string()).collect();
            let _ = writeln!(
                out,
                "{} delete node {}: residual {}, iota [{}], m_d {}",
                d.ambient,
                d.node,
                d.residual_name(),
                iota.join(","),
                d.m_d
            );
            let _ = writeln!(out, "level 0 dim {}", d.level_zero.dimension);
            for c in &d.levels {
                let _ = writeln!(
                    out,
                    "level {} {} weight {} dim {}",
                    c.level,
                    c.label(),
                    c.highest_weight,
                    c.dimension
                );
            }
        }
        Payload::Equivalences(e) => {
            let res: Vec<String> = e.residual.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(
                out,
                "{} residual {}: class size {}, |Aut g| {}, |Aut g0| {}",
                e.ambient,
                res.join("+"),
                e.size(),
                e.aut_ambient,
                e.aut_residual
            );
            for k in &e.members {
                let v: Vec<String> = k.iota.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "node {} iota [{}]", k.node, v.join(","));
            }
        }
        Payload::Table2(t) => {
            for c in &t.rows {
                let levels: Vec<String> = c.row.levels.iter().map(|w| w.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{} {} node {} -> {} m_d {} levels {}",
                    if c.ok { "ok  " } else { "FAIL" },
                    c.row.ambient,
                    c.row.node,
                    c.row.residual,
                    c.row.m_d,
                    levels.join(" ")
                );
                if let Some(e) = &c.error {
                    let _ = writeln!(out, "     {e}");
                }
            }
            let _ = writeln!(out, "{} A1 node 1 (rank one)", if t.rank_one_ok { "ok  " } else { "FAIL" });
            let passed = t.rows.iter().filter(|c| c.ok).count();
            let _ = writeln!(out, "{passed}/{} rows ok", t.rows.len());
        }
        Payload::Induct(r) => {
            let _ = writeln!(
                out,
                "{} from {}: {} chains (depth {})",
                r.base,
                r.b1,
                r.states.len(),
                r.max_depth
            );
            for s in &r.states {
                let _ = writeln!(out, "{}", chain_text(s));
            }
        }
        Payload::Report(r) => {
            let _ = writeln!(out, "report {}", r.target);
            for route in &r.routes {
                let iota: Vec<String> = route.iota.iter().map(|i| i.to_string()).collect();
                let dims: Vec<String> = route.dimensions.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(
                    out,
                    "route {} via {} node {} iota [{}]: b1 {} defining {} dims {{{}}}",
                    route.diagram,
                    route.base,
                    route.node,
                    iota.join(","),
                    route.b1,
                    route.b1_defining,
                    dims.join(", ")
                );
                for s in &route.chains {
                    let _ = writeln!(out, "  {}", chain_text(s));
                }
            }
            for m in &r.matches {
                let _ = writeln!(out, "match dim {}: {} | {}", m.dimension, m.left.join(", "), m.right.join(", "));
            }
            if let Some(s) = &r.scan {
                let _ = writeln!(
                    out,
                    "scan {} dimension {}: {} modules at or below, {} of exact dimension",
                    s.algebra,
                    s.dimension,
                    s.below.len(),
                    s.found.len()
                );
            }
            for n in &r.notes {
                let _ = writeln!(out, "note: {n}");
            }
            let _ = writeln!(out, "consistent {}", r.consistent);
            let _ = writeln!(out, "verdict {}", serde_json::to_value(r.verdict).unwrap().as_str().unwrap_or(""));
        }
    }
    out
}

fn exit_code(e: &LieError) -> i32 {
    match e {
        LieError::Parse(_) => 2,
        _ => 1,
    }
}

/// Run one command. Returns the process exit code: 0 on success, 1 on a
/// domain error or a failed `table2` check, 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if e.exit_code() == 0 =>
                {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let payload = match execute(&cli.verb) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            if let LieError::Parse(_) = e {
                let _ = writeln!(err, "{WEIGHT_GRAMMAR}\n{IOTA_GRAMMAR}");
            }
            return exit_code(&e);
        }
    };
    let failed = matches!(&payload, Payload::Table2(t) if !t.all_ok());
    match cli.format {
        Format::Text => {
            let _ = write!(out, "{}", render_text(&payload));
        }
        Format::Json => {
            let doc = ReportDocument {
                schema_version: SCHEMA_VERSION.to_string(),
                command: CommandEcho {
                    verb: cli.verb.name().to_string(),
                    args: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
                    format: cli.format,
                },
                result: payload,
            };
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("payloads serialise"));
        }
    }
    if failed {
        let _ = writeln!(err, "error: table2 mismatch");
        1
    } else {
        0
    }
}
