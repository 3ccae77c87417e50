//! Root data for the compact simply connected simple groups.
//!
//! Weights are integer vectors in the basis of fundamental weights
//! `u_1, ..., u_n`. Nodes are numbered as in Bourbaki:
//!
//! | type | diagram                                   | notes                      |
//! |------|-------------------------------------------|----------------------------|
//! | A_n  | 1 - 2 - ... - n                           |                            |
//! | B_n  | 1 - 2 - ... - (n-1) => n                  | node n short               |
//! | C_n  | 1 - 2 - ... - (n-1) <= n                  | node n long                |
//! | D_n  | 1 - ... - (n-2) - (n-1), (n-2) - n        | spin nodes n-1 and n       |
//! | E_n  | 1 - 3 - 4 - 5 - 6 (- 7 - 8), 2 - 4        | trivalent node 4           |
//! | F_4  | 1 - 2 => 3 - 4                            | nodes 3, 4 short           |
//! | G_2  | 1 <= 2                                    | node 1 short               |
//!
//! The Cartan matrix entry `C[i][j]` is `<alpha_i^vee, alpha_j>`, so column
//! `j` holds the simple root `alpha_j` in fundamental-weight coordinates and
//! the simple reflection is `s_i(l) = l - l_i * alpha_i`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default element cap for [`weyl_orbit`].
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

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

    /// Whether `rank` is allowed for this family.
    pub fn admits_rank(self, rank: usize) -> bool {
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

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse {
                what: "family",
                value: s.to_string(),
            }),
        }
    }
}

/// A simple Cartan type such as `A2` or `E8`. Construction checks the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CartanTypeRepr", into = "CartanTypeRepr")]
pub struct CartanType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct CartanTypeRepr {
    family: Family,
    rank: usize,
}

impl TryFrom<CartanTypeRepr> for CartanType {
    type Error = Error;
    fn try_from(r: CartanTypeRepr) -> Result<Self> {
        CartanType::new(r.family, r.rank)
    }
}

impl From<CartanType> for CartanTypeRepr {
    fn from(t: CartanType) -> Self {
        CartanTypeRepr {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits_rank(rank) {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with rank in `1..=max_rank`, ordered by rank then family.
    pub fn all_up_to(max_rank: usize) -> Vec<CartanType> {
        let mut out = Vec::new();
        for rank in 1..=max_rank {
            for family in Family::ALL {
                if let Ok(t) = CartanType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::NodeOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: w.rank(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            what: "Cartan type",
            value: s.to_string(),
        };
        let family: Family = s.get(..1).ok_or_else(bad)?.parse()?;
        let rank: usize = s.get(1..).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// Square integer matrix with 2 on the diagonal and non-positive entries elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Simple root `alpha_j` in fundamental-weight coordinates (column `j`, 1-based).
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((1..=self.n).map(|i| self.entry(i, j)).collect())
    }

    fn set_bond(&mut self, i: usize, j: usize, a_ij: i64, a_ji: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] = a_ij;
        self.entries[(j - 1) * self.n + (i - 1)] = a_ji;
    }
}

pub fn cartan_matrix(t: CartanType) -> CartanMatrix {
    let n = t.rank;
    let mut m = CartanMatrix {
        n,
        entries: vec![0; n * n],
    };
    for i in 0..n {
        m.entries[i * n + i] = 2;
    }
    let chain = |m: &mut CartanMatrix, upto: usize| {
        for i in 1..upto {
            m.set_bond(i, i + 1, -1, -1);
        }
    };
    match t.family {
        Family::A => chain(&mut m, n),
        Family::B => {
            chain(&mut m, n - 1);
            // alpha_n short
            m.set_bond(n - 1, n, -1, -2);
        }
        Family::C => {
            chain(&mut m, n - 1);
            // alpha_n long
            m.set_bond(n - 1, n, -2, -1);
        }
        Family::D => {
            chain(&mut m, n - 1);
            m.set_bond(n - 2, n, -1, -1);
        }
        Family::E => {
            m.set_bond(1, 3, -1, -1);
            m.set_bond(2, 4, -1, -1);
            for i in 3..n {
                m.set_bond(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            m.set_bond(1, 2, -1, -1);
            m.set_bond(2, 3, -1, -2);
            m.set_bond(3, 4, -1, -1);
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            m.set_bond(1, 2, -3, -1);
        }
    }
    m
}

/// Order of the Weyl group.
pub fn weyl_group_order(t: CartanType) -> u128 {
    let n = t.rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match t.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

/// Lattice point in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The fundamental weight `u_i` (1-based).
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i - 1] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Coordinate sum; the grading used for rank tables.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Reflects `coords` in place through node `i` (0-based) given the simple root.
fn reflect_in_place(coords: &mut [i64], i: usize, root: &[i64]) -> Result<()> {
    let k = coords[i];
    if k == 0 {
        return Ok(());
    }
    for (c, &r) in coords.iter_mut().zip(root) {
        let step = k
            .checked_mul(r)
            .ok_or(Error::Overflow("simple reflection"))?;
        *c = c
            .checked_sub(step)
            .ok_or(Error::Overflow("simple reflection"))?;
    }
    Ok(())
}

/// `s_i(lambda)` for a 1-based node `i`.
pub fn simple_reflection(t: CartanType, i: usize, weight: &Weight) -> Result<Weight> {
    t.check_node(i)?;
    t.check_weight(weight)?;
    let root = cartan_matrix(t).simple_root(i);
    let mut out = weight.0.clone();
    reflect_in_place(&mut out, i - 1, &root.0)?;
    Ok(Weight(out))
}

/// The unique dominant weight in the Weyl orbit of `weight`.
pub fn dominant_representative(t: CartanType, weight: &Weight) -> Result<Weight> {
    t.check_weight(weight)?;
    let cm = cartan_matrix(t);
    let roots: Vec<Weight> = (1..=t.rank).map(|j| cm.simple_root(j)).collect();
    let mut w = weight.0.clone();
    // Each step strictly raises the weight in the dominance order, and the
    // orbit is finite.
    while let Some(i) = w.iter().position(|&c| c < 0) {
        reflect_in_place(&mut w, i, &roots[i].0)?;
    }
    Ok(Weight(w))
}

/// A Weyl orbit, stored sorted so that equal orbits compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylOrbit {
    source: Weight,
    elements: Vec<Weight>,
}

impl WeylOrbit {
    /// The dominant member.
    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn elements(&self) -> &[Weight] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

pub fn weyl_orbit(t: CartanType, weight: &Weight) -> Result<WeylOrbit> {
    weyl_orbit_capped(t, weight, DEFAULT_ORBIT_CAP)
}

/// Breadth-first closure of the dominant representative under the simple
/// reflections. Fails with [`Error::OrbitCapacity`] rather than truncating.
pub fn weyl_orbit_capped(t: CartanType, weight: &Weight, cap: usize) -> Result<WeylOrbit> {
    let source = dominant_representative(t, weight)?;
    let cm = cartan_matrix(t);
    let roots: Vec<Vec<i64>> = (1..=t.rank).map(|j| cm.simple_root(j).0).collect();

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(source.0.clone());
    if seen.len() > cap {
        return Err(Error::OrbitCapacity { cap });
    }
    let mut frontier = vec![source.0.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for (i, root) in roots.iter().enumerate() {
                if w[i] == 0 {
                    continue;
                }
                let mut image = w.clone();
                reflect_in_place(&mut image, i, root)?;
                if !seen.contains(&image) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitCapacity { cap });
                    }
                    seen.insert(image.clone());
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Weight> = seen.into_iter().map(Weight).collect();
    elements.sort_unstable();
    Ok(WeylOrbit { source, elements })
}
