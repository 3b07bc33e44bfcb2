//! Dynkin types and Cartan matrices.
//!
//! Node numbering is the Bourbaki/Humphreys one. The matrix convention is
//! `C[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`,
//! so a root with simple-root coordinates `k` has fundamental-weight
//! coordinates `m_j = sum_i k_i C[i][j]`, and the weight of `-alpha_d`
//! restricted to the other nodes is the negated `d`-th row.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn accepted_ranks(self) -> &'static str {
        match self {
            Family::A => "rank >= 1",
            Family::B => "rank >= 2",
            Family::C => "rank >= 3",
            Family::D => "rank >= 4",
            Family::E => "rank 6, 7 or 8",
            Family::F => "rank 4",
            Family::G => "rank 2",
        }
    }

    fn accepts(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A finite-type irreducible Cartan type such as `E8` or `A12`.
///
/// Rank ranges avoid the low-rank coincidences (`C2 = B2`, `D3 = A3`), so every
/// simple algebra has exactly one label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.accepts(rank) {
            Ok(DynkinType { family, rank })
        } else {
            Err(LieError::InvalidType(format!(
                "{}{rank} (type {} requires {})",
                family.letter(),
                family.letter(),
                family.accepted_ranks()
            )))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All accepted types of the given rank, in family order.
    pub fn of_rank(rank: usize) -> Vec<DynkinType> {
        Family::ALL
            .iter()
            .filter_map(|&f| DynkinType::new(f, rank).ok())
            .collect()
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let l = self.rank;
        let mut bonds = Vec::new();
        match self.family {
            Family::A => {
                for i in 1..l {
                    bonds.push((i, i + 1, -1, -1));
                }
            }
            Family::B => {
                for i in 1..l - 1 {
                    bonds.push((i, i + 1, -1, -1));
                }
                bonds.push((l - 1, l, -2, -1));
            }
            Family::C => {
                for i in 1..l - 1 {
                    bonds.push((i, i + 1, -1, -1));
                }
                bonds.push((l - 1, l, -1, -2));
            }
            Family::D => {
                for i in 1..l - 1 {
                    bonds.push((i, i + 1, -1, -1));
                }
                bonds.push((l - 2, l, -1, -1));
            }
            Family::E => return CartanMatrix::e_pattern(l),
            Family::F => {
                bonds.push((1, 2, -1, -1));
                bonds.push((2, 3, -2, -1));
                bonds.push((3, 4, -1, -1));
            }
            Family::G => bonds.push((1, 2, -1, -3)),
        }
        CartanMatrix::from_bonds(l, &bonds).expect("built-in Cartan matrices are valid")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = LieError;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut chars = text.chars();
        let letter = chars
            .next()
            .ok_or_else(|| LieError::InvalidType("empty type".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => {
                return Err(LieError::InvalidType(format!(
                    "{text} (family must be one of A-G)"
                )))
            }
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(LieError::InvalidType(format!(
                "{text} (expected <letter><rank>, e.g. E8)"
            )));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| LieError::InvalidType(format!("{text} (rank out of range)")))?;
        DynkinType::new(family, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = LieError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> String {
        t.to_string()
    }
}

pub fn parse_dynkin(text: &str) -> Result<DynkinType> {
    text.parse()
}

/// A generalized Cartan matrix together with its symmetrizer.
///
/// Not restricted to finite type: hypothetical diagrams such as `E9` are built
/// from the same constructors and only need to satisfy the entry-level
/// invariants checked in [`CartanMatrix::new`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    /// `d_i = (alpha_i, alpha_i) / 2`, normalised so the shortest simple root
    /// of each connected component has `d_i = 1`. Satisfies
    /// `C[i][j] * d[j] == C[j][i] * d[i]`.
    symmetrizer: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(LieError::RankMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row[i] != 2 {
                return Err(LieError::BadEmbedding(format!(
                    "diagonal entry {} is {}",
                    i + 1,
                    row[i]
                )));
            }
            for (j, &c) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if !(-3..=0).contains(&c) {
                    return Err(LieError::BadEmbedding(format!(
                        "entry ({}, {}) = {c} outside 0..=-3",
                        i + 1,
                        j + 1
                    )));
                }
                if (c == 0) != (entries[j][i] == 0) {
                    return Err(LieError::BadEmbedding(format!(
                        "zero pattern not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let symmetrizer = symmetrize(&entries)?;
        Ok(CartanMatrix {
            entries,
            symmetrizer,
        })
    }

    /// Build from bonds `(i, j, C[i][j], C[j][i])` with 1-based labels.
    pub fn from_bonds(n: usize, bonds: &[(usize, usize, i64, i64)]) -> Result<Self> {
        let mut entries = vec![vec![0; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j, cij, cji) in bonds {
            if i == 0 || j == 0 || i > n || j > n || i == j {
                return Err(LieError::BadNode { node: i.max(j), rank: n });
            }
            entries[i - 1][j - 1] = cij;
            entries[j - 1][i - 1] = cji;
        }
        CartanMatrix::new(entries)
    }

    /// The `E_n` pattern for any `n >= 4`: chain `1-3-4-...-n` with node 2
    /// attached to node 4. Finite type only for `n` in 6..=8.
    pub fn e_pattern(n: usize) -> CartanMatrix {
        assert!(n >= 4, "E pattern needs at least 4 nodes");
        let mut bonds = vec![(1, 3, -1, -1), (2, 4, -1, -1)];
        for i in 3..n {
            bonds.push((i, i + 1, -1, -1));
        }
        CartanMatrix::from_bonds(n, &bonds).expect("E pattern is valid")
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based labels `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Labels adjacent to `i` in the diagram.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&j| j != i && self.get(i, j) != 0)
            .collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|&c| c == 2 || c == 0 || c == -1)
    }

    /// Connected components of the diagram restricted to `nodes`, each sorted.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank() + 1];
        let in_set = |x: usize| nodes.contains(&x);
        let mut out = Vec::new();
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if in_set(w) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }

    /// Principal submatrix on the given labels, in the given order.
    pub fn submatrix(&self, nodes: &[usize]) -> Vec<Vec<i64>> {
        nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.get(i, j)).collect())
            .collect()
    }
}

fn symmetrize(entries: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = entries.len();
    // Rational d_i as (num, den), propagated along bonds.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (ni, di) = d[i].unwrap();
            for j in 0..n {
                if i == j || entries[i][j] == 0 {
                    continue;
                }
                // C[i][j] d_j = C[j][i] d_i
                let num = ni * entries[j][i];
                let den = di * entries[i][j];
                let g = num.gcd(&den);
                let cand = if den / g < 0 {
                    (-num / g, -den / g)
                } else {
                    (num / g, den / g)
                };
                match d[j] {
                    None => {
                        d[j] = Some(cand);
                        comp.push(j);
                        stack.push(j);
                    }
                    Some(existing) if existing.0 * cand.1 != existing.1 * cand.0 => {
                        return Err(LieError::BadEmbedding(format!(
                            "matrix is not symmetrizable at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        // Scale the component so that all d are integers with minimum 1.
        let lcm_den = comp.iter().fold(1i64, |acc, &i| acc.lcm(&d[i].unwrap().1));
        let ints: Vec<i64> = comp
            .iter()
            .map(|&i| {
                let (a, b) = d[i].unwrap();
                a * (lcm_den / b)
            })
            .collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, &v) in comp.iter().zip(&ints) {
            d[i] = Some((v / g, 1));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_dynkin("E8").unwrap(), DynkinType::new(Family::E, 8).unwrap());
        assert_eq!(parse_dynkin("a12").unwrap(), DynkinType::new(Family::A, 12).unwrap());
        for bad in ["C2", "D3", "E9", "F5", "G3", "B1", "A0", "", "X4", "E", "E8x"] {
            let err = parse_dynkin(bad).unwrap_err();
            assert_eq!(err.name(), "InvalidType", "{bad}");
        }
        let msg = parse_dynkin("C2").unwrap_err().to_string();
        assert!(msg.contains("rank >= 3"), "{msg}");
    }

    #[test]
    fn humphreys_matrices() {
        let g2 = parse_dynkin("G2").unwrap().cartan_matrix();
        assert_eq!(g2.entries(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        let b3 = parse_dynkin("B3").unwrap().cartan_matrix();
        assert_eq!(b3.get(2, 3), -2);
        assert_eq!(b3.get(3, 2), -1);
        assert_eq!(b3.symmetrizer(), &[2, 2, 1]);
        let c3 = parse_dynkin("C3").unwrap().cartan_matrix();
        assert_eq!(c3.symmetrizer(), &[1, 1, 2]);
        let f4 = parse_dynkin("F4").unwrap().cartan_matrix();
        assert_eq!(f4.symmetrizer(), &[2, 2, 1, 1]);
        let e8 = parse_dynkin("E8").unwrap().cartan_matrix();
        assert_eq!(e8.neighbours(4), vec![2, 3, 5]);
    }

    #[test]
    fn symmetrizability_holds_for_all_types() {
        for rank in 1..=9 {
            for t in DynkinType::of_rank(rank) {
                let c = t.cartan_matrix();
                let d = c.symmetrizer();
                assert_eq!(*d.iter().min().unwrap(), 1);
                for i in 1..=rank {
                    for j in 1..=rank {
                        assert_eq!(c.get(i, j) * d[j - 1], c.get(j, i) * d[i - 1], "{t}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -4], vec![-1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1, 0], vec![0, 2]]).is_err());
    }

    #[test]
    fn components_of_deleted_diagram() {
        let e8 = parse_dynkin("E8").unwrap().cartan_matrix();
        let rest: Vec<usize> = (1..=8).filter(|&i| i != 4).collect();
        assert_eq!(e8.components(&rest), vec![vec![1, 3], vec![2], vec![5, 6, 7, 8]]);
    }
}
