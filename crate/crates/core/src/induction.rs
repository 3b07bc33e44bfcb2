//! Forward search for graded chains `b_{-1}, b_{-2}, ...` over a base
//! algebra, and the obstruction reports for `E9`, `F5` and `G3`.
//!
//! A chain is admissible when every level is a defining module, the first
//! level is nontrivial, and each level `b_k` occurs in `b_i (x) b_j` for every
//! split `i + j = k` (in the exterior square when `i = j`).

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::rep_theory::{check_dominant, is_defining, weyl_dim, ModuleDescriptor};
use crate::root_system::{diagram_isomorphisms, CartanMatrix, DynkinType, Family, RootSystem, Weight};
use crate::serde_util::decimal;
use crate::tensor_ops::{tensor_decompose, wedge2_decompose};

pub const DEFAULT_MAX_DEPTH: usize = 12;
pub const MAX_DEPTH_ENV: &str = "LIE_INDUCT_MAX_DEPTH";

/// Depth from the environment override, else [`DEFAULT_MAX_DEPTH`].
pub fn default_max_depth() -> usize {
    std::env::var(MAX_DEPTH_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&d| d >= 1)
        .unwrap_or(DEFAULT_MAX_DEPTH)
}

/// A candidate chain. `chain[k]` is level `-(k+1)`; a `None` entry is a zero
/// level and is always last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionState {
    pub base: DynkinType,
    pub chain: Vec<Option<ModuleDescriptor>>,
    /// A zero level has been reached.
    pub terminated: bool,
    #[serde(with = "decimal")]
    pub dbos_dimension: BigUint,
}

impl InductionState {
    pub fn nonzero(&self) -> Vec<&ModuleDescriptor> {
        self.chain.iter().flatten().collect()
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.nonzero().iter().map(|m| m.highest_weight.clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.chain
            .iter()
            .map(|m| m.as_ref().map_or("0".to_string(), ModuleDescriptor::label))
            .collect()
    }
}

/// `dim g0 + 1 + 2 sum dim b_{-j}`.
pub fn dbos_dimension(rs0: &RootSystem, chain: &[Weight]) -> Result<BigUint> {
    let mut total = BigUint::from(rs0.dimension() + 1);
    for w in chain {
        total += weyl_dim(rs0, w)? * 2u32;
    }
    Ok(total)
}

/// Whether deleting `target_node` from `target` would give `V(lambda)` at
/// level -1 with `iota` as the embedding of `g0`.
pub fn check_new_row(
    g0: DynkinType,
    iota: &[usize],
    lambda: &Weight,
    target: &CartanMatrix,
    target_node: usize,
) -> Result<bool> {
    let n = target.rank();
    if target_node == 0 || target_node > n {
        return Err(LieError::BadNode {
            node: target_node,
            rank: n,
        });
    }
    let c0 = g0.cartan_matrix();
    let image: BTreeSet<usize> = iota.iter().copied().collect();
    let expected: BTreeSet<usize> = (1..=n).filter(|&i| i != target_node).collect();
    if iota.len() != g0.rank() || image != expected {
        return Err(LieError::BadEmbedding(format!(
            "{iota:?} does not cover the nodes other than {target_node}"
        )));
    }
    for i in 1..=g0.rank() {
        for j in 1..=g0.rank() {
            if target.get(iota[i - 1], iota[j - 1]) != c0.get(i, j) {
                return Err(LieError::BadEmbedding(format!(
                    "bond {i}-{j} of {g0} is not preserved"
                )));
            }
        }
    }
    if lambda.rank() != g0.rank() {
        return Err(LieError::RankMismatch {
            expected: g0.rank(),
            got: lambda.rank(),
        });
    }
    Ok(new_row_weight(target, target_node, iota) == *lambda)
}

/// The negated Cartan row of `node` read along `iota`.
pub fn new_row_weight(target: &CartanMatrix, node: usize, iota: &[usize]) -> Weight {
    Weight(iota.iter().map(|&a| -target.get(node, a)).collect())
}

/// Memo for the decompositions a search keeps asking for.
#[derive(Default)]
struct Memo {
    summands: Mutex<HashMap<(Weight, Weight, bool), Arc<BTreeSet<Weight>>>>,
    defining: Mutex<HashMap<Weight, bool>>,
}

impl Memo {
    /// Summands of `a (x) b`, or of the exterior square of `a` when `wedge`.
    fn summands(&self, rs: &RootSystem, a: &Weight, b: &Weight, wedge: bool) -> Result<Arc<BTreeSet<Weight>>> {
        let key = if a <= b { (a.clone(), b.clone(), wedge) } else { (b.clone(), a.clone(), wedge) };
        if let Some(s) = self.summands.lock().unwrap().get(&key) {
            return Ok(Arc::clone(s));
        }
        let d = if wedge {
            wedge2_decompose(rs, a)?
        } else {
            tensor_decompose(rs, a, b)?
        };
        let set = Arc::new(d.highest_weights().into_iter().collect::<BTreeSet<_>>());
        self.summands.lock().unwrap().insert(key, Arc::clone(&set));
        Ok(set)
    }

    fn defining(&self, rs: &RootSystem, w: &Weight) -> Result<bool> {
        if let Some(&b) = self.defining.lock().unwrap().get(w) {
            return Ok(b);
        }
        let b = is_defining(rs, w)?.defining;
        self.defining.lock().unwrap().insert(w.clone(), b);
        Ok(b)
    }
}

/// Options for level `-k` given the nonzero levels `chain[0..]` (levels
/// `-1, -2, ...`). `None` stands for the zero module and is always present.
///
/// A split `i = j` whose factor is one-dimensional has an empty exterior
/// square; the bracket of such a level with itself vanishes identically, so
/// that split imposes no condition.
pub fn next_level_candidates(rs0: &RootSystem, chain: &[Weight], k: usize) -> Result<Vec<Option<Weight>>> {
    next_level_with(rs0, chain, k, &Memo::default())
}

fn next_level_with(rs0: &RootSystem, chain: &[Weight], k: usize, memo: &Memo) -> Result<Vec<Option<Weight>>> {
    for w in chain {
        check_dominant(rs0, w)?;
    }
    let mut out: Vec<Option<Weight>> = vec![None];
    if k < 2 || chain.len() < k - 1 {
        return Ok(out);
    }
    let mut allowed: Option<BTreeSet<Weight>> = None;
    for i in 1..=k / 2 {
        let j = k - i;
        let (a, b) = (&chain[i - 1], &chain[j - 1]);
        if i == j && a.is_zero() {
            continue;
        }
        let s = memo.summands(rs0, a, b, i == j)?;
        allowed = Some(match allowed {
            None => (*s).clone(),
            Some(prev) => prev.intersection(&s).cloned().collect(),
        });
    }
    let Some(allowed) = allowed else {
        // Only reachable when every split is a trivial square, i.e. k = 2
        // with a trivial first level, which the search never builds.
        return Ok(out);
    };
    for w in allowed {
        if memo.defining(rs0, &w)? {
            out.push(Some(w));
        }
    }
    Ok(out)
}

/// All admissible chains starting at `b1`, branching over
/// [`next_level_candidates`] up to `max_depth` levels. `threads > 1` runs
/// the branches on a worker pool; the result order does not depend on it.
pub fn induction_search(rs0: &RootSystem, b1: &Weight, max_depth: usize, threads: usize) -> Result<Vec<InductionState>> {
    check_dominant(rs0, b1)?;
    if b1.is_zero() {
        return Err(LieError::TrivialFirstLevel);
    }
    let memo = Memo::default();
    if !memo.defining(rs0, b1)? {
        return Ok(Vec::new());
    }
    let max_depth = max_depth.max(1);
    let start = vec![b1.clone()];
    let chains: Vec<(Vec<Weight>, bool)> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| explore(rs0, start, max_depth, &memo, true))?
    } else {
        explore(rs0, start, max_depth, &memo, false)?
    };
    let mut states = chains
        .into_iter()
        .map(|(ws, terminated)| to_state(rs0, &ws, terminated))
        .collect::<Result<Vec<_>>>()?;
    states.sort_by(|a, b| {
        a.weights()
            .cmp(&b.weights())
            .then_with(|| a.terminated.cmp(&b.terminated))
    });
    Ok(states)
}

fn explore(
    rs0: &RootSystem,
    chain: Vec<Weight>,
    max_depth: usize,
    memo: &Memo,
    parallel: bool,
) -> Result<Vec<(Vec<Weight>, bool)>> {
    if chain.len() >= max_depth {
        return Ok(vec![(chain, false)]);
    }
    let options = next_level_with(rs0, &chain, chain.len() + 1, memo)?;
    let step = |opt: &Option<Weight>| -> Result<Vec<(Vec<Weight>, bool)>> {
        match opt {
            None => Ok(vec![(chain.clone(), true)]),
            Some(w) => {
                let mut next = chain.clone();
                next.push(w.clone());
                explore(rs0, next, max_depth, memo, parallel)
            }
        }
    };
    let parts: Vec<Result<Vec<(Vec<Weight>, bool)>>> = if parallel {
        options.par_iter().map(step).collect()
    } else {
        options.iter().map(step).collect()
    };
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn to_state(rs0: &RootSystem, ws: &[Weight], terminated: bool) -> Result<InductionState> {
    let mut chain: Vec<Option<ModuleDescriptor>> = ws
        .iter()
        .map(|w| ModuleDescriptor::new(rs0, w.clone()).map(Some))
        .collect::<Result<_>>()?;
    if terminated {
        chain.push(None);
    }
    Ok(InductionState {
        base: rs0.dynkin(),
        chain,
        terminated,
        dbos_dimension: dbos_dimension(rs0, ws)?,
    })
}

/// A diagram one node larger than a known algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetDiagram {
    pub name: String,
    pub description: String,
    pub cartan: CartanMatrix,
}

/// One way of reaching a target diagram: delete `node`, embed the base by
/// `iota`, and search from the resulting first level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteReport {
    pub diagram: String,
    pub base: DynkinType,
    pub node: usize,
    pub iota: Vec<usize>,
    pub b1: Weight,
    pub row_matches: bool,
    pub b1_defining: bool,
    pub chains: Vec<InductionState>,
    /// Distinct dimensions over all chains, ascending.
    #[serde(with = "decimal_list")]
    pub dimensions: Vec<BigUint>,
}

impl RouteReport {
    pub fn has_candidates(&self) -> bool {
        !self.chains.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// No dimension is shared by all routes, or a route has no candidate.
    Inconsistent,
    /// Routes agree on dimensions, yet no such simple algebra exists.
    NecessaryConditionsInsufficient,
}

/// Two chains from different routes giving equal dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionMatch {
    #[serde(with = "decimal")]
    pub dimension: BigUint,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

/// Result of scanning for a module of one exact dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleScan {
    pub algebra: DynkinType,
    pub dimension: u64,
    /// Every dominant weight with Weyl dimension at most `dimension`.
    pub below: Vec<ModuleDescriptor>,
    pub found: Vec<ModuleDescriptor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalReport {
    pub target: String,
    pub diagrams: Vec<TargetDiagram>,
    pub routes: Vec<RouteReport>,
    pub consistent: bool,
    pub verdict: Verdict,
    pub matches: Vec<DimensionMatch>,
    pub scan: Option<ModuleScan>,
    pub notes: Vec<String>,
}

mod decimal_list {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|n| n.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| t.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExceptionalTarget {
    E9,
    F5,
    G3,
}

impl std::str::FromStr for ExceptionalTarget {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "E9" => Ok(ExceptionalTarget::E9),
            "F5" => Ok(ExceptionalTarget::F5),
            "G3" => Ok(ExceptionalTarget::G3),
            _ => Err(LieError::Parse(format!("unknown report target `{s}` (expected E9, F5 or G3)"))),
        }
    }
}

fn ty(f: Family, r: usize) -> DynkinType {
    DynkinType::new(f, r).expect("valid base type")
}

fn diagram(name: &str, description: &str, n: usize, bonds: &[(usize, usize, i64, i64)]) -> TargetDiagram {
    TargetDiagram {
        name: name.to_string(),
        description: description.to_string(),
        cartan: CartanMatrix::from_bonds(n, bonds).expect("target diagrams are symmetrisable"),
    }
}

pub fn run_route(target: &TargetDiagram, base: DynkinType, node: usize, iota: &[usize], max_depth: usize, threads: usize) -> Result<RouteReport> {
    let b1 = new_row_weight(&target.cartan, node, iota);
    let row_matches = check_new_row(base, iota, &b1, &target.cartan, node)?;
    let rs0 = RootSystem::new(base);
    let b1_defining = !b1.is_zero() && is_defining(&rs0, &b1)?.defining;
    let chains = if b1.is_zero() {
        Vec::new()
    } else {
        induction_search(&rs0, &b1, max_depth, threads)?
    };
    let dimensions: Vec<BigUint> = chains
        .iter()
        .map(|c| c.dbos_dimension.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(RouteReport {
        diagram: target.name.clone(),
        base,
        node,
        iota: iota.to_vec(),
        b1,
        row_matches,
        b1_defining,
        chains,
        dimensions,
    })
}

/// Every nontrivial module of `algebra` with dimension at most `bound`.
/// The Weyl dimension grows strictly in each coordinate, so the walk stops
/// extending a weight once its dimension exceeds the bound.
pub fn scan_small_modules(rs: &RootSystem, bound: u64) -> ModuleScan {
    let l = rs.rank();
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut below = Vec::new();
    let mut stack: Vec<Weight> = (0..l).map(|i| Weight::unit(l, i)).collect();
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        let m = ModuleDescriptor::new(rs, w.clone()).expect("dominant by construction");
        if m.dimension > BigUint::from(bound) {
            continue;
        }
        for i in 0..l {
            let mut up = w.clone();
            up.0[i] += 1;
            stack.push(up);
        }
        below.push(m);
    }
    below.sort_by(|a, b| a.dimension.cmp(&b.dimension).then_with(|| a.highest_weight.cmp(&b.highest_weight)));
    let found = below
        .iter()
        .filter(|m| m.dimension == BigUint::from(bound))
        .cloned()
        .collect();
    ModuleScan {
        algebra: rs.dynkin(),
        dimension: bound,
        below,
        found,
    }
}

fn cross_matches(a: &RouteReport, b: &RouteReport) -> Vec<DimensionMatch> {
    let mut out = Vec::new();
    for ca in &a.chains {
        for cb in &b.chains {
            if ca.terminated && cb.terminated && ca.dbos_dimension == cb.dbos_dimension {
                out.push(DimensionMatch {
                    dimension: ca.dbos_dimension.clone(),
                    left: ca.labels(),
                    right: cb.labels(),
                });
            }
        }
    }
    out
}

pub fn exceptional_report(target: ExceptionalTarget, max_depth: usize, threads: usize) -> Result<ExceptionalReport> {
    use Family::*;
    match target {
        ExceptionalTarget::E9 => {
            let e9 = TargetDiagram {
                name: "E9".into(),
                description: "1-3-4-5-6-7-8-9 with 2 attached to 4".into(),
                cartan: CartanMatrix::e_pattern(9),
            };
            let routes = vec![
                run_route(&e9, ty(E, 8), 9, &(1..=8).collect::<Vec<_>>(), max_depth, threads)?,
                run_route(&e9, ty(D, 8), 1, &(2..=9).rev().collect::<Vec<_>>(), max_depth, threads)?,
                run_route(&e9, ty(A, 8), 2, &std::iter::once(1).chain(3..=9).collect::<Vec<_>>(), max_depth, threads)?,
            ];
            let consistent = routes.iter().all(RouteReport::has_candidates) && common_dimensions(&routes).is_some();
            let matches = cross_matches(&routes[1], &routes[2]);
            Ok(ExceptionalReport {
                target: "E9".into(),
                diagrams: vec![e9],
                consistent,
                verdict: verdict(consistent),
                matches,
                scan: None,
                notes: vec![
                    "E8 admits no nontrivial defining module, so no first level exists".into(),
                    "the D8 and A8 routes share no dimension".into(),
                ],
                routes,
            })
        }
        ExceptionalTarget::F5 => {
            let long_end = diagram("F5 (long end)", "1-2-3=>4-5, F4 on nodes 2..5", 5, &[(1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -2, -1), (4, 5, -1, -1)]);
            let short_end = diagram("F5 (short end)", "1-2=>3-4-5, F4 on nodes 1..4", 5, &[(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1), (4, 5, -1, -1)]);
            let routes = vec![
                run_route(&long_end, ty(F, 4), 1, &[2, 3, 4, 5], max_depth, threads)?,
                run_route(&long_end, ty(B, 4), 5, &[1, 2, 3, 4], max_depth, threads)?,
                run_route(&short_end, ty(F, 4), 5, &[1, 2, 3, 4], max_depth, threads)?,
                run_route(&short_end, ty(C, 4), 1, &[5, 4, 3, 2], max_depth, threads)?,
            ];
            let f4 = RootSystem::new(ty(F, 4));
            let b4_dims = &routes[1].dimensions;
            let needed = b4_dims
                .first()
                .map(|d| (d - BigUint::from(f4.dimension() + 1)) / 2u32)
                .unwrap_or_default();
            let needed: u64 = needed.try_into().unwrap_or(0);
            let scan = scan_small_modules(&f4, needed);
            let consistent = routes.iter().all(RouteReport::has_candidates) && !scan.found.is_empty();
            Ok(ExceptionalReport {
                target: "F5".into(),
                diagrams: vec![long_end, short_end],
                consistent,
                verdict: verdict(consistent),
                matches: Vec::new(),
                notes: vec![format!(
                    "the B4 route needs an F4 module of dimension {needed}; none exists"
                )],
                scan: Some(scan),
                routes,
            })
        }
        ExceptionalTarget::G3 => {
            let at_one = diagram("G3 (new node at 1)", "3-1=>2, G2 on nodes 1,2", 3, &[(1, 2, -1, -3), (1, 3, -1, -1)]);
            let at_two = diagram("G3 (new node at 2)", "1=>2-3, G2 on nodes 1,2", 3, &[(1, 2, -1, -3), (2, 3, -1, -1)]);
            let routes = vec![
                run_route(&at_one, ty(G, 2), 3, &[1, 2], max_depth, threads)?,
                run_route(&at_two, ty(G, 2), 3, &[1, 2], max_depth, threads)?,
                run_route(&at_one, ty(A, 2), 2, &[1, 3], max_depth, threads)?,
                run_route(&at_two, ty(A, 2), 1, &[2, 3], max_depth, threads)?,
            ];
            let matches = cross_matches(&routes[0], &routes[3]);
            Ok(ExceptionalReport {
                target: "G3".into(),
                diagrams: vec![at_one, at_two],
                consistent: !matches.is_empty(),
                verdict: verdict(!matches.is_empty()),
                matches,
                scan: None,
                notes: vec![
                    "G2 chains of m copies of w1 match A2 chains with 3m+1 nonzero levels".into(),
                    "simplicity of the resulting algebras is not decided here".into(),
                ],
                routes,
            })
        }
    }
}

fn verdict(consistent: bool) -> Verdict {
    if consistent {
        Verdict::NecessaryConditionsInsufficient
    } else {
        Verdict::Inconsistent
    }
}

fn common_dimensions(routes: &[RouteReport]) -> Option<BTreeSet<BigUint>> {
    let mut iter = routes.iter().map(|r| r.dimensions.iter().cloned().collect::<BTreeSet<_>>());
    let first = iter.next()?;
    let common: BTreeSet<BigUint> = iter.fold(first, |acc, s| acc.intersection(&s).cloned().collect());
    (!common.is_empty()).then_some(common)
}

/// Whether `iota` is a diagram embedding of `g0` into `target` minus `node`.
pub fn is_embedding(g0: DynkinType, iota: &[usize], target: &CartanMatrix, node: usize) -> bool {
    let nodes: Vec<usize> = (1..=target.rank()).filter(|&i| i != node).collect();
    if nodes.len() != g0.rank() {
        return false;
    }
    let sub = target.submatrix(&nodes);
    diagram_isomorphisms(g0.cartan_matrix().entries(), &sub)
        .iter()
        .any(|f| f.iter().map(|&k| nodes[k - 1]).collect::<Vec<_>>() == iota)
}
