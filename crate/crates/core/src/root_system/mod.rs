//! Irreducible root systems generated from their Cartan matrices.

mod cartan;
mod vector;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use cartan::{parse_dynkin, CartanMatrix, DynkinType, Family};
pub use vector::{Root, Weight};

use crate::error::{LieError, Result};
use crate::rep_theory::CharacterTable;

/// The full root system of a simple Lie algebra.
///
/// Immutable after construction. The only interior mutability is the
/// character memo used by the representation-theory routines.
#[derive(Debug)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: CartanMatrix,
    positive: Vec<Root>,
    positive_weights: Vec<Weight>,
    /// `(alpha, alpha) / 2` for each positive root, short roots = 1.
    positive_norms: Vec<i64>,
    root_set: HashSet<Root>,
    highest: Root,
    weyl_order: u64,
    inverse: Vec<Vec<Ratio<i64>>>,
    form: Vec<Vec<i64>>,
    pub(crate) char_cache: Mutex<HashMap<Weight, Arc<CharacterTable>>>,
    parabolic_cache: Mutex<HashMap<u64, u64>>,
}

/// Height, support and per-node multiplicities of a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStats {
    pub height: i64,
    pub support: Vec<usize>,
    pub mult: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConvertDirection {
    RootToWeight,
    WeightToRoot,
}

/// Result of moving a weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dominated {
    pub dominant: Weight,
    pub reflections: usize,
    /// Simple reflections applied, in order (1-based labels).
    pub word: Vec<usize>,
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> RootSystem {
        let cartan = dynkin.cartan_matrix();
        let l = dynkin.rank();
        let d = cartan.symmetrizer().to_vec();

        let pairing = |k: &[i64], i: usize| -> i64 { (0..l).map(|j| k[j] * cartan.entries()[j][i]).sum() };

        let positive = generate_positive_roots(&cartan);
        let mut root_set: HashSet<Root> = positive.iter().cloned().collect();
        for r in positive.clone() {
            root_set.insert(-&r);
        }

        let max_height = positive.iter().map(Root::height).max().unwrap();
        let highest = positive
            .iter()
            .find(|r| r.height() == max_height)
            .unwrap()
            .clone();

        let positive_weights: Vec<Weight> = positive
            .iter()
            .map(|r| Weight((0..l).map(|i| pairing(&r.0, i)).collect()))
            .collect();
        let positive_norms: Vec<i64> = positive
            .iter()
            .map(|r| {
                let mut s = 0;
                for i in 0..l {
                    for j in 0..l {
                        s += r.0[i] * r.0[j] * cartan.entries()[i][j] * d[j];
                    }
                }
                s / 2
            })
            .collect();

        let inverse = invert(cartan.entries());
        // (omega_i, omega_j) = (C^-1)_{ij} d_j, cleared of denominators.
        let raw: Vec<Vec<Ratio<i64>>> = (0..l)
            .map(|i| (0..l).map(|j| inverse[i][j] * Ratio::from_integer(d[j])).collect())
            .collect();
        let denom = raw
            .iter()
            .flatten()
            .fold(1i64, |acc, r| acc.lcm(r.denom()));
        let form = raw
            .iter()
            .map(|row| row.iter().map(|r| (r * Ratio::from_integer(denom)).to_integer()).collect())
            .collect();

        let weyl_order = weyl_group_order(&cartan, &(1..=l).collect::<Vec<_>>());
        let rs = RootSystem {
            dynkin,
            cartan,
            positive,
            positive_weights,
            positive_norms,
            root_set,
            highest,
            weyl_order,
            inverse,
            form,
            char_cache: Mutex::new(HashMap::new()),
            parabolic_cache: Mutex::new(HashMap::new()),
        };
        rs.validate_against_highest_root_table();
        rs
    }

    pub fn build(text: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(parse_dynkin(text)?))
    }

    /// Fail fast if the node numbering or pairing convention has drifted: the
    /// highest root must be the adjoint highest weight listed per family.
    fn validate_against_highest_root_table(&self) {
        let (root, weight) = highest_root_table(self.dynkin);
        assert_eq!(self.highest.0, root, "highest root of {}", self.dynkin);
        assert_eq!(
            self.root_to_weight(&self.highest).0,
            weight,
            "adjoint weight of {}",
            self.dynkin
        );
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots in fundamental-weight coordinates, parallel to
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.positive_weights
    }

    pub fn positive_root_norms(&self) -> &[i64] {
        &self.positive_norms
    }

    /// All roots: positive ones by increasing height, then their negatives.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| -r));
        out
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn dimension(&self) -> usize {
        self.num_roots() + self.rank()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_set.contains(r)
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// Half-sum of positive roots, `[1, 1, ..., 1]`.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn root_stats(&self, r: &Root) -> Result<RootStats> {
        self.check_len(r.rank())?;
        if !self.is_root(r) {
            return Err(LieError::NotARoot(r.0.clone(), self.dynkin.to_string()));
        }
        Ok(RootStats {
            height: r.height(),
            support: r.support(),
            mult: r.0.clone(),
        })
    }

    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let l = self.rank();
        let c = self.cartan.entries();
        Weight((0..l).map(|j| (0..l).map(|i| r.0[i] * c[i][j]).sum()).collect())
    }

    /// Exact root-basis coordinates of a weight, possibly fractional.
    pub fn weight_to_root_rational(&self, w: &Weight) -> Vec<Ratio<i64>> {
        let l = self.rank();
        (0..l)
            .map(|j| {
                (0..l).fold(Ratio::zero(), |acc, i| {
                    acc + self.inverse[i][j] * Ratio::from_integer(w.0[i])
                })
            })
            .collect()
    }

    pub fn weight_to_root(&self, w: &Weight) -> Result<Root> {
        self.check_len(w.rank())?;
        let q = self.weight_to_root_rational(w);
        if q.iter().all(|x| x.is_integer()) {
            Ok(Root(q.iter().map(|x| x.to_integer()).collect()))
        } else {
            Err(LieError::NonIntegral(w.0.clone()))
        }
    }

    /// Height of a weight measured in the root basis (rational in general).
    pub fn weight_height(&self, w: &Weight) -> Ratio<i64> {
        self.weight_to_root_rational(w)
            .into_iter()
            .fold(Ratio::zero(), |a, b| a + b)
    }

    pub fn convert(&self, v: &[i64], direction: ConvertDirection) -> Result<Vec<i64>> {
        self.check_len(v.len())?;
        Ok(match direction {
            ConvertDirection::RootToWeight => self.root_to_weight(&Root(v.to_vec())).0,
            ConvertDirection::WeightToRoot => self.weight_to_root(&Weight(v.to_vec()))?.0,
        })
    }

    /// Simple reflection `s_i` (1-based) on a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let m = w.0[i - 1];
        let row = &self.cartan.entries()[i - 1];
        Weight(w.0.iter().zip(row).map(|(a, c)| a - m * c).collect())
    }

    pub fn to_dominant(&self, w: &Weight) -> Dominated {
        let mut cur = w.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.reflect(&cur, i + 1);
            word.push(i + 1);
        }
        Dominated {
            dominant: cur,
            reflections: word.len(),
            word,
        }
    }

    /// `<lambda, alpha^vee>` for the positive root with the given index.
    pub fn coroot_pairing(&self, w: &Weight, root_index: usize) -> i64 {
        let r = &self.positive[root_index];
        let d = self.cartan.symmetrizer();
        let num: i64 = (0..self.rank()).map(|i| w.0[i] * r.0[i] * d[i]).sum();
        num / self.positive_norms[root_index]
    }

    /// Symmetric bilinear form on weights, scaled to integers. The scale is a
    /// fixed positive multiple of the normalisation with short roots of
    /// squared length 2.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        inner_with(&self.form, a, b)
    }

    pub fn coxeter_number(&self) -> usize {
        let h = self.num_roots() / self.rank();
        assert_eq!(self.highest.height() as usize, h - 1);
        h
    }

    /// Number of short simple roots, counting none for simply-laced types.
    pub fn short_simple_roots(&self) -> usize {
        let d = self.cartan.symmetrizer();
        let max = *d.iter().max().unwrap();
        if max == 1 {
            0
        } else {
            d.iter().filter(|&&x| x == 1).count()
        }
    }

    pub fn weyl_group_order(&self) -> u64 {
        self.weyl_order
    }

    /// Size of the Weyl orbit of a dominant weight, `|W| / |W_J|` with `J`
    /// the nodes where the weight vanishes.
    pub fn orbit_size(&self, dominant: &Weight) -> u64 {
        let mut mask = 0u64;
        let mut nodes = Vec::new();
        for (i, &m) in dominant.0.iter().enumerate() {
            if m == 0 {
                mask |= 1 << i;
                nodes.push(i + 1);
            }
        }
        let stab = *self
            .parabolic_cache
            .lock()
            .unwrap()
            .entry(mask)
            .or_insert_with(|| weyl_group_order(&self.cartan, &nodes));
        self.weyl_order / stab
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            Err(LieError::RankMismatch {
                expected: self.rank(),
                got,
            })
        } else {
            Ok(())
        }
    }
}

/// Positive roots of a finite-type Cartan matrix, by increasing height and
/// then lexicographically. Built by closing simple-root strings: the
/// `alpha_i`-string through `beta` runs from `beta - p alpha_i` to
/// `beta + q alpha_i` with `p - q = <beta, alpha_i^vee>`.
pub fn generate_positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let l = cartan.rank();
    let c = cartan.entries();
    let pairing = |k: &[i64], i: usize| -> i64 { (0..l).map(|j| k[j] * c[j][i]).sum() };

    let mut seen: HashSet<Root> = HashSet::new();
    let mut positive: Vec<Root> = Vec::new();
    let mut layer: Vec<Root> = (0..l).map(|i| Root::unit(l, i)).collect();
    while !layer.is_empty() {
        for r in &layer {
            seen.insert(r.clone());
            positive.push(r.clone());
        }
        let mut next: Vec<Root> = Vec::new();
        for beta in &layer {
            for i in 0..l {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe.0[i] -= 1;
                    if seen.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(&beta.0, i) > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        layer = next;
    }
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    positive
}

/// Order of the Weyl group generated by the given nodes (1-based). Each
/// connected piece contributes `n! * prod(highest root coefficients) * det C`.
pub fn weyl_group_order(cartan: &CartanMatrix, nodes: &[usize]) -> u64 {
    let mut order = 1u64;
    for comp in cartan.components(nodes) {
        let sub = CartanMatrix::new(cartan.submatrix(&comp)).expect("sub-diagram of a Cartan matrix");
        let roots = generate_positive_roots(&sub);
        let top = roots.last().unwrap();
        let n = comp.len() as u64;
        let fact: u64 = (1..=n).product();
        let coeffs: i64 = top.0.iter().product();
        order *= fact * coeffs as u64 * determinant(sub.entries()) as u64;
    }
    order
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub(crate) fn inner_with(form: &[Vec<i64>], a: &Weight, b: &Weight) -> i64 {
    let mut s = 0;
    for (i, row) in form.iter().enumerate() {
        if a.0[i] == 0 {
            continue;
        }
        for (j, g) in row.iter().enumerate() {
            s += a.0[i] * g * b.0[j];
        }
    }
    s
}

/// Expected `(highest root, adjoint highest weight)` per family.
pub fn highest_root_table(t: DynkinType) -> (Vec<i64>, Vec<i64>) {
    let l = t.rank();
    let fund = |i: usize, m: i64| Weight::fundamental(l, i, m).0;
    match (t.family(), l) {
        (Family::A, 1) => (vec![1], vec![2]),
        (Family::A, _) => (vec![1; l], {
            let mut w = vec![0; l];
            w[0] = 1;
            w[l - 1] = 1;
            w
        }),
        (Family::B, _) => {
            let mut r = vec![2; l];
            r[0] = 1;
            // B2 has the spin weight at node 2, so its adjoint is 2 omega_2.
            (r, if l == 2 { fund(2, 2) } else { fund(2, 1) })
        }
        (Family::C, _) => {
            let mut r = vec![2; l];
            r[l - 1] = 1;
            (r, fund(1, 2))
        }
        (Family::D, _) => {
            let mut r = vec![2; l];
            r[0] = 1;
            r[l - 2] = 1;
            r[l - 1] = 1;
            (r, fund(2, 1))
        }
        (Family::E, 6) => (vec![1, 2, 2, 3, 2, 1], fund(2, 1)),
        (Family::E, 7) => (vec![2, 2, 3, 4, 3, 2, 1], fund(1, 1)),
        (Family::E, 8) => (vec![2, 3, 4, 6, 5, 4, 3, 2], fund(8, 1)),
        (Family::F, _) => (vec![2, 3, 4, 2], fund(1, 1)),
        (Family::G, _) => (vec![3, 2], fund(2, 1)),
        (Family::E, _) => unreachable!("E rank validated"),
    }
}

/// All permutations `sigma` of node labels with `C[sigma(i)][sigma(j)] = C[i][j]`.
pub fn diagram_automorphisms(t: DynkinType) -> Vec<Vec<usize>> {
    let c = t.cartan_matrix();
    diagram_isomorphisms(c.entries(), c.entries())
}

/// All bijections `f` (as 1-based image lists) with `y[f(i)][f(j)] = x[i][j]`.
pub fn diagram_isomorphisms(x: &[Vec<i64>], y: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = x.len();
    let mut out = Vec::new();
    if y.len() != n {
        return out;
    }
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        x: &[Vec<i64>],
        y: &[Vec<i64>],
        assign: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = assign.len();
        if i == x.len() {
            out.push(assign.iter().map(|a| a + 1).collect());
            return;
        }
        for cand in 0..x.len() {
            if used[cand] {
                continue;
            }
            let ok = y[cand][cand] == x[i][i]
                && (0..i).all(|j| y[cand][assign[j]] == x[i][j] && y[assign[j]][cand] == x[j][i]);
            if ok {
                used[cand] = true;
                assign.push(cand);
                rec(x, y, assign, used, out);
                assign.pop();
                used[cand] = false;
            }
        }
    }
    rec(x, y, &mut assign, &mut used, &mut out);
    out
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix of finite type is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}
