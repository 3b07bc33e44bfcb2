//! Dimensions, weight multiplicities and the defining-module classifier.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::root_system::{inner_with, DynkinType, Family, RootSystem, Weight};
use crate::serde_util::{decimal, weight_map};

/// An irreducible module `V(lambda)` together with its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    pub algebra: DynkinType,
    pub highest_weight: Weight,
    #[serde(with = "decimal")]
    pub dimension: BigUint,
}

impl ModuleDescriptor {
    pub fn new(rs: &RootSystem, highest_weight: Weight) -> Result<ModuleDescriptor> {
        let dimension = weyl_dim(rs, &highest_weight)?;
        Ok(ModuleDescriptor {
            algebra: rs.dynkin(),
            highest_weight,
            dimension,
        })
    }

    /// `w3`-style name when available, otherwise the coordinate list.
    pub fn label(&self) -> String {
        self.highest_weight
            .short_name()
            .unwrap_or_else(|| self.highest_weight.to_string())
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_weight.is_zero()
    }
}

/// Weight multiplicities of a module, stored on dominant weights only.
///
/// Multiplicities of other weights are read off through the dominant
/// chamber. A virtual table may carry negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub algebra: DynkinType,
    #[serde(with = "weight_map")]
    pub entries: BTreeMap<Weight, i64>,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
}

impl CharacterTable {
    pub fn empty(algebra: DynkinType) -> CharacterTable {
        CharacterTable {
            algebra,
            entries: BTreeMap::new(),
            is_virtual: false,
        }
    }

    pub fn mult(&self, rs: &RootSystem, w: &Weight) -> i64 {
        let d = rs.to_dominant(w).dominant;
        self.entries.get(&d).copied().unwrap_or(0)
    }

    /// Dominant weights with nonzero multiplicity.
    pub fn dominant_weights(&self) -> Vec<&Weight> {
        self.entries
            .iter()
            .filter(|(_, &m)| m != 0)
            .map(|(w, _)| w)
            .collect()
    }

    pub fn dimension(&self, rs: &RootSystem) -> i128 {
        self.entries
            .iter()
            .map(|(w, &m)| m as i128 * rs.orbit_size(w) as i128)
            .sum()
    }

    /// Every weight with its multiplicity, orbit by orbit.
    pub fn expand(&self, rs: &RootSystem) -> Vec<(Weight, i64)> {
        let mut out = Vec::new();
        for (w, &m) in &self.entries {
            if m != 0 {
                out.extend(weyl_orbit(rs, w).into_iter().map(|v| (v, m)));
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &CharacterTable, k: i64) {
        for (w, &m) in &other.entries {
            let e = self.entries.entry(w.clone()).or_insert(0);
            *e += k * m;
            if *e == 0 {
                self.entries.remove(w);
            }
        }
    }

    pub fn has_negative(&self) -> bool {
        self.entries.values().any(|&m| m < 0)
    }
}

/// Dimension of `V(lambda)` by the Weyl product formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    check_dominant(rs, lambda)?;
    let d = rs.cartan().symmetrizer();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        let mut top = 0i64;
        let mut bottom = 0i64;
        for i in 0..rs.rank() {
            top += (lambda.0[i] + 1) * alpha.0[i] * d[i];
            bottom += alpha.0[i] * d[i];
        }
        num *= top;
        den *= bottom;
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension must be integral");
    Ok(q.to_biguint().expect("positive dimension"))
}

/// Multiplicities of all dominant weights of `V(lambda)`, memoised per root
/// system.
pub fn freudenthal_character(rs: &RootSystem, lambda: &Weight) -> Result<Arc<CharacterTable>> {
    check_dominant(rs, lambda)?;
    if let Some(t) = rs.char_cache.lock().unwrap().get(lambda) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(freudenthal_with_form(rs, lambda, rs.form())?);
    rs.char_cache
        .lock()
        .unwrap()
        .insert(lambda.clone(), Arc::clone(&table));
    Ok(table)
}

/// Freudenthal recursion against an explicit symmetric form on weights.
///
/// `(lambda+rho, lambda+rho) - (mu+rho, mu+rho)` times `m(mu)` equals
/// `2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)`.
/// The recursion is homogeneous in the form, so any positive multiple of
/// the invariant form gives the same table.
pub fn freudenthal_with_form(
    rs: &RootSystem,
    lambda: &Weight,
    form: &[Vec<i64>],
) -> Result<CharacterTable> {
    check_dominant(rs, lambda)?;
    let rho = rs.rho();
    let alphas = rs.positive_root_weights();

    let levels = dominant_weights_below(rs, lambda);
    let lr = lambda + &rho;
    let top = inner_with(form, &lr, &lr);

    let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(levels.len());
    mult.insert(lambda.clone(), 1);
    for mu in levels.iter().skip(1) {
        let mr = mu + &rho;
        let denom = top - inner_with(form, &mr, &mr);
        let mut sum = 0i64;
        for alpha in alphas {
            let mut nu = mu + alpha;
            loop {
                let dom = rs.to_dominant(&nu).dominant;
                match mult.get(&dom) {
                    Some(&m) => {
                        if m != 0 {
                            sum = m
                                .checked_mul(inner_with(form, &nu, alpha))
                                .and_then(|t| sum.checked_add(t))
                                .ok_or_else(|| LieError::Overflow(mu.0.clone()))?;
                        }
                    }
                    None => break,
                }
                nu = &nu + alpha;
            }
        }
        let numer = sum.checked_mul(2).ok_or_else(|| LieError::Overflow(mu.0.clone()))?;
        assert!(denom > 0 && numer % denom == 0, "Freudenthal recursion out of step at {mu}");
        mult.insert(mu.clone(), numer / denom);
    }
    Ok(CharacterTable {
        algebra: rs.dynkin(),
        entries: mult.into_iter().filter(|(_, m)| *m != 0).collect(),
        is_virtual: false,
    })
}

/// Dominant weights `mu <= lambda`, ordered by the height of `lambda - mu`
/// and then lexicographically (largest first). Any two dominant weights
/// `mu < lambda` are joined by a chain of dominant weights differing by
/// positive roots, so a breadth-first walk from `lambda` finds them all.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(lambda.clone(), 0);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let h = depth[&mu];
        for (alpha_w, alpha) in rs.positive_root_weights().iter().zip(rs.positive_roots()) {
            let nu = &mu - alpha_w;
            if nu.is_dominant() && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), h + alpha.height());
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(i64, Weight)> = depth.into_iter().map(|(w, h)| (h, w)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    out.into_iter().map(|(_, w)| w).collect()
}

/// The full Weyl orbit of a weight, sorted.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(w.clone());
    let mut queue = vec![w.clone()];
    while let Some(v) = queue.pop() {
        for i in 1..=rs.rank() {
            if v.0[i - 1] != 0 {
                let r = rs.reflect(&v, i);
                if seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightClass {
    pub minuscule: bool,
    pub quasi_minuscule: bool,
}

/// Minuscule: `<lambda, alpha^vee> <= 1` for every positive root (zero
/// included). Quasi-minuscule: nonzero, one positive root pairs to 2 and
/// the rest to at most 1.
pub fn classify_weight(rs: &RootSystem, lambda: &Weight) -> Result<WeightClass> {
    check_dominant(rs, lambda)?;
    let pairings: Vec<i64> = (0..rs.positive_roots().len())
        .map(|k| rs.coroot_pairing(lambda, k))
        .collect();
    let minuscule = pairings.iter().all(|&p| p <= 1);
    let twos = pairings.iter().filter(|&&p| p == 2).count();
    let quasi_minuscule = !lambda.is_zero() && twos == 1 && pairings.iter().all(|&p| p <= 2);
    Ok(WeightClass {
        minuscule,
        quasi_minuscule,
    })
}

/// Why a module fails to be defining.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DefiningWitness {
    Defining,
    /// A dominant weight whose space has dimension above one.
    Multiplicity { weight: Weight, mult: i64 },
    /// More than two Weyl orbits of weights.
    DominantWeights { count: usize, weights: Vec<Weight> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningCheck {
    pub defining: bool,
    pub witness: DefiningWitness,
}

/// All weight spaces one-dimensional and at most two dominant weights.
pub fn is_defining(rs: &RootSystem, lambda: &Weight) -> Result<DefiningCheck> {
    let ch = freudenthal_character(rs, lambda)?;
    let witness = if let Some((w, &m)) = ch.entries.iter().rev().find(|(_, &m)| m > 1) {
        DefiningWitness::Multiplicity {
            weight: w.clone(),
            mult: m,
        }
    } else {
        let weights: Vec<Weight> = ch.dominant_weights().into_iter().cloned().collect();
        if weights.len() > 2 {
            DefiningWitness::DominantWeights {
                count: weights.len(),
                weights,
            }
        } else {
            DefiningWitness::Defining
        }
    };
    Ok(DefiningCheck {
        defining: witness == DefiningWitness::Defining,
        witness,
    })
}

/// Largest multiple used for the `m omega_1` / `m omega_l` candidates.
pub const A_FAMILY_MAX_MULTIPLE: i64 = 6;

/// Candidates with one-dimensional weight spaces: the zero weight,
/// minuscule fundamental weights, the short dominant root when at most one
/// simple root is short, `omega_3` of `C3`, and multiples of the end nodes
/// for type A.
pub fn howe_candidates(rs: &RootSystem) -> Vec<Weight> {
    let l = rs.rank();
    let mut out: BTreeSet<Weight> = BTreeSet::new();
    out.insert(Weight::zero(l));
    for i in 1..=l {
        let w = Weight::fundamental(l, i, 1);
        if classify_weight(rs, &w).unwrap().minuscule {
            out.insert(w);
        }
    }
    if rs.short_simple_roots() <= 1 {
        out.insert(short_dominant_root(rs));
    }
    let t = rs.dynkin();
    if t.to_string() == "C3" {
        out.insert(Weight::fundamental(3, 3, 1));
    }
    if t.family() == Family::A {
        for m in 1..=A_FAMILY_MAX_MULTIPLE {
            out.insert(Weight::fundamental(l, 1, m));
            out.insert(Weight::fundamental(l, l, m));
        }
    }
    out.into_iter().collect()
}

/// The dominant short root, in fundamental-weight coordinates.
pub fn short_dominant_root(rs: &RootSystem) -> Weight {
    let norms = rs.positive_root_norms();
    let min = *norms.iter().min().unwrap();
    rs.positive_root_weights()
        .iter()
        .zip(norms)
        .filter(|(w, &n)| n == min && w.is_dominant())
        .map(|(w, _)| w.clone())
        .next()
        .expect("every root system has a dominant short root")
}

/// The complete list of defining modules, Howe candidates filtered by
/// [`is_defining`]. Sorted by coordinate sum, then node.
pub fn defining_modules(rs: &RootSystem) -> Vec<ModuleDescriptor> {
    let mut ws: Vec<Weight> = howe_candidates(rs)
        .into_iter()
        .filter(|w| is_defining(rs, w).unwrap().defining)
        .collect();
    ws.sort_by_key(weight_order_key);
    ws.into_iter()
        .map(|w| ModuleDescriptor::new(rs, w).unwrap())
        .collect()
}

pub(crate) fn weight_order_key(w: &Weight) -> (i64, Reverse<Vec<i64>>) {
    (w.0.iter().sum(), Reverse(w.0.clone()))
}

pub(crate) fn check_dominant(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.rank() != rs.rank() {
        return Err(LieError::RankMismatch {
            expected: rs.rank(),
            got: w.rank(),
        });
    }
    if !w.is_dominant() {
        return Err(LieError::NotDominant(w.0.clone()));
    }
    Ok(())
}
