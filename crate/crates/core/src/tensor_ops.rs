//! Decomposing characters, tensor products and exterior/symmetric squares.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::rep_theory::{check_dominant, freudenthal_character, weyl_dim, CharacterTable, ModuleDescriptor};
use crate::root_system::{DynkinType, RootSystem, Weight};
use crate::serde_util::decimal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub module: ModuleDescriptor,
    pub multiplicity: u64,
}

/// A direct-sum decomposition into irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionResult {
    pub algebra: DynkinType,
    /// In peeling order.
    pub summands: Vec<Summand>,
    #[serde(with = "decimal")]
    pub source_dimension: BigUint,
}

impl DecompositionResult {
    pub fn contains(&self, w: &Weight) -> bool {
        self.summands.iter().any(|s| &s.module.highest_weight == w)
    }

    pub fn highest_weights(&self) -> Vec<Weight> {
        self.summands
            .iter()
            .map(|s| s.module.highest_weight.clone())
            .collect()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.summands
            .iter()
            .map(|s| &s.module.dimension * s.multiplicity)
            .sum()
    }

    /// Highest weights with multiplicity, for multiset comparisons.
    pub fn as_multiset(&self) -> BTreeMap<Weight, u64> {
        let mut m = BTreeMap::new();
        for s in &self.summands {
            *m.entry(s.module.highest_weight.clone()).or_insert(0) += s.multiplicity;
        }
        m
    }
}

/// Greedy highest-weight peeling. The weight removed at each step has the
/// greatest height in root coordinates, ties going to the lexicographically
/// largest.
pub fn decompose_character(rs: &RootSystem, ch: &CharacterTable) -> Result<DecompositionResult> {
    let total = ch.dimension(rs);
    if total < 0 || ch.has_negative() {
        return Err(LieError::NotACharacter(
            ch.entries
                .iter()
                .find(|(_, &m)| m < 0)
                .map(|(w, _)| w.0.clone())
                .unwrap_or_default(),
        ));
    }
    let mut work = ch.clone();
    let mut summands = Vec::new();
    while let Some(top) = work
        .entries
        .keys()
        .max_by(|a, b| {
            rs.weight_height(a)
                .cmp(&rs.weight_height(b))
                .then_with(|| a.cmp(b))
        })
        .cloned()
    {
        let m = work.entries[&top];
        let irr = freudenthal_character(rs, &top)?;
        work.add_scaled(&irr, -m);
        if let Some((w, _)) = work.entries.iter().find(|(_, &v)| v < 0) {
            return Err(LieError::NotACharacter(w.0.clone()));
        }
        summands.push(Summand {
            module: ModuleDescriptor::new(rs, top)?,
            multiplicity: m as u64,
        });
    }
    let out = DecompositionResult {
        algebra: rs.dynkin(),
        summands,
        source_dimension: BigUint::from(total as u128),
    };
    assert_eq!(out.total_dimension(), out.source_dimension);
    Ok(out)
}

/// Dominant part of the product of two characters.
pub fn convolve(rs: &RootSystem, a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let full_a = a.expand(rs);
    let full_b = b.expand(rs);
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, ma) in &full_a {
        for (wb, mb) in &full_b {
            let s = wa + wb;
            if s.is_dominant() {
                *out.entry(s).or_insert(0) += ma * mb;
            }
        }
    }
    out.retain(|_, m| *m != 0);
    CharacterTable {
        algebra: rs.dynkin(),
        entries: out,
        is_virtual: a.is_virtual || b.is_virtual,
    }
}

pub fn tensor_character(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<CharacterTable> {
    let a = freudenthal_character(rs, lambda)?;
    let b = freudenthal_character(rs, mu)?;
    Ok(convolve(rs, &a, &b))
}

pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<DecompositionResult> {
    check_dominant(rs, lambda)?;
    check_dominant(rs, mu)?;
    let out = decompose_character(rs, &tensor_character(rs, lambda, mu)?)?;
    assert_eq!(out.source_dimension, weyl_dim(rs, lambda)? * weyl_dim(rs, mu)?);
    Ok(out)
}

/// `(chi*chi)(nu) - sign * chi(nu/2)`, halved. `sign = 1` gives the
/// exterior square and `-1` the symmetric square.
fn half_square(rs: &RootSystem, lambda: &Weight, sign: i64) -> Result<CharacterTable> {
    let ch = freudenthal_character(rs, lambda)?;
    let mut sq = convolve(rs, &ch, &ch);
    sq.is_virtual = true;
    let mut entries = BTreeMap::new();
    for (nu, m) in &sq.entries {
        let adams = if nu.0.iter().all(|c| c % 2 == 0) {
            let half = Weight(nu.0.iter().map(|c| c / 2).collect());
            ch.entries.get(&half).copied().unwrap_or(0)
        } else {
            0
        };
        let numer = m - sign * adams;
        if numer % 2 != 0 {
            return Err(LieError::InternalParity(nu.0.clone()));
        }
        if numer != 0 {
            entries.insert(nu.clone(), numer / 2);
        }
    }
    Ok(CharacterTable {
        algebra: rs.dynkin(),
        entries,
        is_virtual: false,
    })
}

pub fn wedge2_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
    half_square(rs, lambda, 1)
}

pub fn sym2_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
    half_square(rs, lambda, -1)
}

pub fn wedge2_decompose(rs: &RootSystem, lambda: &Weight) -> Result<DecompositionResult> {
    check_dominant(rs, lambda)?;
    let out = decompose_character(rs, &wedge2_character(rs, lambda)?)?;
    let n = weyl_dim(rs, lambda)?;
    assert_eq!(out.source_dimension, &n * (&n - 1u32) / 2u32);
    Ok(out)
}

pub fn sym2_decompose(rs: &RootSystem, lambda: &Weight) -> Result<DecompositionResult> {
    check_dominant(rs, lambda)?;
    let out = decompose_character(rs, &sym2_character(rs, lambda)?)?;
    let n = weyl_dim(rs, lambda)?;
    assert_eq!(out.source_dimension, &n * (&n + 1u32) / 2u32);
    Ok(out)
}

/// Sum of the irreducible characters named by a decomposition.
pub fn character_of(rs: &RootSystem, d: &DecompositionResult) -> Result<CharacterTable> {
    let mut out = CharacterTable::empty(rs.dynkin());
    for s in &d.summands {
        out.add_scaled(&*freudenthal_character(rs, &s.module.highest_weight)?, s.multiplicity as i64);
    }
    Ok(out)
}
