//! Helpers shared by the integration tests.
//!
//! `Rank2` is an independent model of a rank-two algebra built from
//! hard-coded root data: multiplicities come from Kostant's formula and
//! tensor products from Racah-Speiser reflection.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use proptest::prelude::*;

use lie_induct::rep_theory::{freudenthal_character, is_defining, weyl_dim, weyl_orbit};
use lie_induct::tensor_ops::{character_of, sym2_decompose, tensor_character, tensor_decompose, wedge2_decompose};
use lie_induct::{Root, RootSystem, Weight};

pub struct Rank2 {
    pub name: &'static str,
    cartan: [[i64; 2]; 2],
    pub positive: Vec<[i64; 2]>,
    pub group: Vec<[[i64; 2]; 2]>,
    partitions: HashMap<[i64; 2], i64>,
}

fn mat_mul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn apply(m: &[[i64; 2]; 2], w: [i64; 2]) -> [i64; 2] {
    [m[0][0] * w[0] + m[0][1] * w[1], m[1][0] * w[0] + m[1][1] * w[1]]
}

impl Rank2 {
    fn new(name: &'static str, cartan: [[i64; 2]; 2], positive: Vec<[i64; 2]>) -> Rank2 {
        // s_i(m) = m - m_i * (row i of C), as a matrix on column vectors.
        let refl = |i: usize| {
            let mut m = [[1, 0], [0, 1]];
            for j in 0..2 {
                m[j][i] -= cartan[i][j];
            }
            m
        };
        let gens = [refl(0), refl(1)];
        let mut group = vec![[[1, 0], [0, 1]]];
        let mut k = 0;
        while k < group.len() {
            for g in &gens {
                let h = mat_mul(g, &group[k]);
                if !group.contains(&h) {
                    group.push(h);
                }
            }
            k += 1;
        }
        Rank2 {
            name,
            cartan,
            positive,
            group,
            partitions: HashMap::new(),
        }
    }

    fn det(m: &[[i64; 2]; 2]) -> i64 {
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Root coordinates of a weight difference, if integral.
    fn to_root(&self, m: [i64; 2]) -> Option<[i64; 2]> {
        let c = self.cartan;
        let d = Self::det(&c);
        // k C = m, so k = m C^-1.
        let k0 = m[0] * c[1][1] - m[1] * c[1][0];
        let k1 = -m[0] * c[0][1] + m[1] * c[0][0];
        (k0 % d == 0 && k1 % d == 0).then(|| [k0 / d, k1 / d])
    }

    fn partition(&mut self, g: [i64; 2]) -> i64 {
        if g[0] < 0 || g[1] < 0 {
            return 0;
        }
        if let Some(&v) = self.partitions.get(&g) {
            return v;
        }
        // Count multisets of positive roots by processing roots in order.
        let mut table: HashMap<([i64; 2], usize), i64> = HashMap::new();
        fn count(
            roots: &[[i64; 2]],
            g: [i64; 2],
            from: usize,
            table: &mut HashMap<([i64; 2], usize), i64>,
        ) -> i64 {
            if g == [0, 0] {
                return 1;
            }
            if from == roots.len() || g[0] < 0 || g[1] < 0 {
                return 0;
            }
            if let Some(&v) = table.get(&(g, from)) {
                return v;
            }
            let r = roots[from];
            let v = count(roots, g, from + 1, table) + count(roots, [g[0] - r[0], g[1] - r[1]], from, table);
            table.insert((g, from), v);
            v
        }
        let roots = self.positive.clone();
        let v = count(&roots, g, 0, &mut table);
        self.partitions.insert(g, v);
        v
    }

    pub fn mult(&mut self, lambda: [i64; 2], mu: [i64; 2]) -> i64 {
        let lr = [lambda[0] + 1, lambda[1] + 1];
        let mr = [mu[0] + 1, mu[1] + 1];
        let mut total = 0;
        for w in self.group.clone() {
            let x = apply(&w, lr);
            if let Some(k) = self.to_root([x[0] - mr[0], x[1] - mr[1]]) {
                total += Self::det(&w) * self.partition(k);
            }
        }
        total
    }

    fn root_to_weight(&self, k: [i64; 2]) -> [i64; 2] {
        let c = self.cartan;
        [k[0] * c[0][0] + k[1] * c[1][0], k[0] * c[0][1] + k[1] * c[1][1]]
    }

    /// All weights of `V(lambda)` with multiplicities.
    pub fn weights(&mut self, lambda: [i64; 2]) -> Vec<([i64; 2], i64)> {
        let bound = 6 * (lambda[0] + lambda[1]) + 2;
        let mut out = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound {
                let s = self.root_to_weight([a, b]);
                let mu = [lambda[0] - s[0], lambda[1] - s[1]];
                let m = self.mult(lambda, mu);
                if m != 0 {
                    out.push((mu, m));
                }
            }
        }
        out
    }

    /// Reflect into the dominant chamber under the dot action.
    fn dot_dominant(&self, v: [i64; 2]) -> Option<([i64; 2], i64)> {
        for w in &self.group {
            let x = apply(w, v);
            if x[0] >= 0 && x[1] >= 0 {
                if x[0] == 0 || x[1] == 0 {
                    return None;
                }
                return Some(([x[0] - 1, x[1] - 1], Self::det(w)));
            }
        }
        unreachable!("every vector has a dominant image")
    }

    pub fn tensor(&mut self, lambda: [i64; 2], mu: [i64; 2]) -> BTreeMap<Weight, u64> {
        let mut acc: BTreeMap<[i64; 2], i64> = BTreeMap::new();
        for (nu, m) in self.weights(mu) {
            let v = [lambda[0] + nu[0] + 1, lambda[1] + nu[1] + 1];
            if let Some((top, sign)) = self.dot_dominant(v) {
                *acc.entry(top).or_insert(0) += sign * m;
            }
        }
        acc.into_iter()
            .filter(|(_, m)| *m != 0)
            .map(|(w, m)| {
                assert!(m > 0, "negative oracle multiplicity");
                (Weight(w.to_vec()), m as u64)
            })
            .collect()
    }
}

pub fn a2() -> Rank2 {
    Rank2::new("A2", [[2, -1], [-1, 2]], vec![[1, 0], [0, 1], [1, 1]])
}

pub fn b2() -> Rank2 {
    Rank2::new("B2", [[2, -2], [-1, 2]], vec![[1, 0], [0, 1], [1, 1], [1, 2]])
}

pub fn g2() -> Rank2 {
    Rank2::new(
        "G2",
        [[2, -1], [-3, 2]],
        vec![[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]],
    )
}

pub fn small_weights() -> Vec<[i64; 2]> {
    (0..=3).flat_map(|a| (0..=3).map(move |b| [a, b])).collect()
}

/// Generated positive roots and Weyl group order agree with the model.
pub fn check_root_data(o: &Rank2) -> Result<(), String> {
    let rs = RootSystem::build(o.name).unwrap();
    let mut mine: Vec<Root> = o.positive.iter().map(|r| Root(r.to_vec())).collect();
    mine.sort();
    let mut theirs = rs.positive_roots().to_vec();
    theirs.sort();
    if mine != theirs {
        return Err(format!("{}: positive roots differ", o.name));
    }
    if o.group.len() as u64 != rs.weyl_group_order() {
        return Err(format!("{}: Weyl group order differs", o.name));
    }
    Ok(())
}

pub fn check_characters(o: &mut Rank2) -> Result<(), String> {
    let rs = RootSystem::build(o.name).unwrap();
    for lambda in small_weights() {
        let w = Weight(lambda.to_vec());
        let ch = freudenthal_character(&rs, &w).unwrap();
        let ws = o.weights(lambda);
        let total: i64 = ws.iter().map(|(_, m)| m).sum();
        if total.to_string() != weyl_dim(&rs, &w).unwrap().to_string() {
            return Err(format!("{} {w}: dimension {total}", o.name));
        }
        for (mu, m) in ws {
            let got = ch.mult(&rs, &Weight(mu.to_vec()));
            if got != m {
                return Err(format!("{} {w} at {mu:?}: {got} != {m}", o.name));
            }
        }
    }
    Ok(())
}

pub fn check_tensor_products(o: &mut Rank2) -> Result<usize, String> {
    let rs = RootSystem::build(o.name).unwrap();
    let mut n = 0;
    for lambda in small_weights() {
        for mu in small_weights() {
            let want = o.tensor(lambda, mu);
            let got = tensor_decompose(&rs, &Weight(lambda.to_vec()), &Weight(mu.to_vec()))
                .map_err(|e| e.to_string())?
                .as_multiset();
            if got != want {
                return Err(format!("{} {lambda:?} x {mu:?}", o.name));
            }
            n += 1;
        }
    }
    Ok(n)
}

pub fn check_defining(o: &mut Rank2) -> Result<(), String> {
    let rs = RootSystem::build(o.name).unwrap();
    for lambda in small_weights() {
        let ws = o.weights(lambda);
        let dominant = ws.iter().filter(|(w, _)| w[0] >= 0 && w[1] >= 0).count();
        let want = ws.iter().all(|&(_, m)| m == 1) && dominant <= 2;
        let got = is_defining(&rs, &Weight(lambda.to_vec())).unwrap().defining;
        if got != want {
            return Err(format!("{} {lambda:?}: defining {got}", o.name));
        }
    }
    Ok(())
}

pub const SMALL: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"];

/// A dominant weight kept small enough that squares stay cheap.
pub fn small_weight(rank: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0i64..=2, rank).prop_filter_map("coordinate sum at most 2", |v| {
        (v.iter().sum::<i64>() <= 2).then_some(Weight(v))
    })
}

/// An algebra of rank at most four with two small dominant weights.
pub fn case() -> impl Strategy<Value = (&'static str, Weight, Weight)> {
    prop::sample::select(SMALL).prop_flat_map(|name| {
        let rank = RootSystem::build(name).unwrap().rank();
        (Just(name), small_weight(rank), small_weight(rank))
    })
}

fn sum_multisets(a: BTreeMap<Weight, u64>, b: BTreeMap<Weight, u64>) -> BTreeMap<Weight, u64> {
    let mut out = a;
    for (k, v) in b {
        *out.entry(k).or_insert(0) += v;
    }
    out
}

/// Tensor, exterior and symmetric squares conserve dimension, and the
/// peeled summands rebuild the product character.
pub fn check_conservation(name: &str, a: &Weight, b: &Weight) -> Result<(), String> {
    let rs = RootSystem::build(name).unwrap();
    let err = |e: lie_induct::LieError| e.to_string();
    let da = weyl_dim(&rs, a).map_err(err)?;
    let db = weyl_dim(&rs, b).map_err(err)?;
    let t = tensor_decompose(&rs, a, b).map_err(err)?;
    if t.total_dimension() != &da * &db {
        return Err(format!("{name} {a} x {b}: tensor dimension"));
    }
    if character_of(&rs, &t).map_err(err)?.entries != tensor_character(&rs, a, b).map_err(err)?.entries {
        return Err(format!("{name} {a} x {b}: character mismatch"));
    }
    let w = wedge2_decompose(&rs, a).map_err(err)?;
    let s = sym2_decompose(&rs, a).map_err(err)?;
    if w.total_dimension() != &da * (&da - 1u32) / 2u32 || s.total_dimension() != &da * (&da + 1u32) / 2u32 {
        return Err(format!("{name} {a}: square dimensions"));
    }
    Ok(())
}

pub fn check_square_split(name: &str, a: &Weight) -> Result<(), String> {
    let rs = RootSystem::build(name).unwrap();
    let both = sum_multisets(
        wedge2_decompose(&rs, a).unwrap().as_multiset(),
        sym2_decompose(&rs, a).unwrap().as_multiset(),
    );
    if both != tensor_decompose(&rs, a, a).unwrap().as_multiset() {
        return Err(format!("{name} {a}: wedge + sym != square"));
    }
    Ok(())
}

pub fn check_weyl_invariance(name: &str, a: &Weight) -> Result<(), String> {
    let rs = RootSystem::build(name).unwrap();
    let ch = freudenthal_character(&rs, a).unwrap();
    let full: BTreeMap<Weight, i64> = ch.expand(&rs).into_iter().collect();
    let total: i64 = full.values().sum();
    if BigUint::from(total as u64) != weyl_dim(&rs, a).unwrap() {
        return Err(format!("{name} {a}: expanded size"));
    }
    for i in 1..=rs.rank() {
        for (w, m) in &full {
            if full.get(&rs.reflect(w, i)) != Some(m) {
                return Err(format!("{name} {a}: s{i} moves {w}"));
            }
        }
    }
    for w in ch.dominant_weights() {
        if weyl_orbit(&rs, w).len() as u64 != rs.orbit_size(w) {
            return Err(format!("{name} {a}: orbit of {w}"));
        }
    }
    Ok(())
}
