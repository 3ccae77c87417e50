//! Representation-ring bookkeeping.
//!
//! `R(G)` is free on the dominant weights, and polynomial on the orbit sums
//! `ubar_1, ..., ubar_n`. All rank tables here are graded by the coordinate
//! sum of a dominant weight, so the orbit sum `ubar_i` has degree 1 and the
//! count in degree `d` is the number of monomials of degree `d`.
//!
//! The involution acts on dominant weights by permuting coordinates with
//! sigma. Fixed weights extend to `G x| Z/2` in two ways, and the remaining
//! weights pair up into regular orbits.

use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::SigmaPermutation;
use crate::rootdata::{weyl_orbit, CartanType, Weight, WeylOrbit};

/// Nonnegative counts indexed by weight degree `0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedCounts(Vec<u64>);

impl GradedCounts {
    pub fn new(v: Vec<u64>) -> Self {
        GradedCounts(v)
    }

    pub fn zeros(bound: usize) -> Self {
        GradedCounts(vec![0; bound + 1])
    }

    pub fn bound(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, d: usize) -> u64 {
        self.0[d]
    }

    /// `self + factor * other`, entrywise.
    pub fn add_scaled(&self, factor: u64, other: &GradedCounts) -> Result<GradedCounts> {
        let v = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                b.checked_mul(factor)
                    .and_then(|x| x.checked_add(a))
                    .ok_or(Error::Overflow("graded counts"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedCounts(v))
    }

    pub fn scaled(&self, factor: u64) -> Result<GradedCounts> {
        GradedCounts::zeros(self.bound()).add_scaled(factor, self)
    }
}

impl From<Vec<u64>> for GradedCounts {
    fn from(v: Vec<u64>) -> Self {
        GradedCounts(v)
    }
}

/// Coefficients of `prod_k 1/(1 - t^steps[k])` up to `t^bound`.
fn partition_series(steps: &[usize], bound: usize) -> Result<GradedCounts> {
    let mut c = vec![0u64; bound + 1];
    c[0] = 1;
    for &s in steps {
        for d in s..=bound {
            c[d] = c[d]
                .checked_add(c[d - s])
                .ok_or(Error::Overflow("graded counts"))?;
        }
    }
    Ok(GradedCounts(c))
}

/// The formal sum of the Weyl orbit of `u_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSum {
    pub node: usize,
    pub support: WeylOrbit,
}

pub fn orbit_sum(t: CartanType, i: usize) -> Result<OrbitSum> {
    if i == 0 || i > t.rank() {
        return Err(Error::NodeOutOfRange {
            index: i,
            rank: t.rank(),
        });
    }
    let support = weyl_orbit(t, &Weight::fundamental(t.rank(), i))?;
    Ok(OrbitSum { node: i, support })
}

/// Number of dominant weights of each degree: `C(d + n - 1, n - 1)`.
pub fn dominant_count(t: CartanType, bound: usize) -> Result<GradedCounts> {
    partition_series(&vec![1; t.rank()], bound)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedAndRegular {
    /// sigma-fixed dominant weights
    pub fixed: GradedCounts,
    /// two-element sigma-orbits of dominant weights
    pub regular_orbits: GradedCounts,
}

pub fn fixed_and_regular_counts(
    t: CartanType,
    sigma: &SigmaPermutation,
    bound: usize,
) -> Result<FixedAndRegular> {
    if sigma.n() != t.rank() {
        return Err(Error::DimensionMismatch {
            expected: t.rank(),
            actual: sigma.n(),
        });
    }
    let dominant = dominant_count(t, bound)?;
    // A fixed weight is constant on sigma-orbits: one free coordinate per
    // orbit, of degree 1 or 2.
    let steps: Vec<usize> = sigma.orbits().iter().map(|o| o.len()).collect();
    let fixed = partition_series(&steps, bound)?;
    let regular = dominant
        .0
        .iter()
        .zip(&fixed.0)
        .map(|(&dom, &fix)| {
            let moved = dom - fix;
            assert!(moved % 2 == 0, "non-fixed dominant weights pair up");
            moved / 2
        })
        .collect();
    Ok(FixedAndRegular {
        fixed,
        regular_orbits: GradedCounts(regular),
    })
}

/// Graded basis counts of `R(G x| Z/2)`: two per fixed weight, one per
/// regular orbit.
pub fn semidirect_basis_counts(
    t: CartanType,
    sigma: &SigmaPermutation,
    bound: usize,
) -> Result<GradedCounts> {
    let fr = fixed_and_regular_counts(t, sigma, bound)?;
    fr.regular_orbits.add_scaled(2, &fr.fixed)
}

/// `K_G(G) = Omega_{R(G)/Z}`, the exterior algebra over `R(G)` on
/// `d ubar_1, ..., d ubar_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KahlerDescriptor {
    pub rank: usize,
    pub generators: Vec<String>,
    /// Rank over `R(G)` of the `k`-forms, `k = 0..=n`.
    pub form_ranks: Vec<u64>,
    /// Free rank over `R(G)` in even total degree (K^0).
    pub even_rank: u64,
    /// Free rank over `R(G)` in odd total degree (K^1).
    pub odd_rank: u64,
}

impl KahlerDescriptor {
    /// Graded `Z`-ranks of `(K^0, K^1)`.
    pub fn graded(&self, t: CartanType, bound: usize) -> Result<(GradedCounts, GradedCounts)> {
        let dom = dominant_count(t, bound)?;
        Ok((dom.scaled(self.even_rank)?, dom.scaled(self.odd_rank)?))
    }
}

pub fn kahler_descriptor(t: CartanType) -> KahlerDescriptor {
    let n = t.rank();
    let mut form_ranks = vec![1u64; n + 1];
    for k in 1..=n {
        form_ranks[k] = form_ranks[k - 1] * (n - k + 1) as u64 / k as u64;
    }
    let even_rank = form_ranks.iter().step_by(2).sum();
    let odd_rank = form_ranks.iter().skip(1).step_by(2).sum();
    KahlerDescriptor {
        rank: n,
        generators: (1..=n).map(|i| format!("d ubar_{i}")).collect(),
        form_ranks,
        even_rank,
        odd_rank,
    }
}

/// `a + b u` in `Z[u]/(u^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BottElement {
    pub constant: i64,
    pub linear: i64,
}

impl BottElement {
    pub const ONE: BottElement = BottElement {
        constant: 1,
        linear: 0,
    };
    /// The tautological bundle `H = 1 + u`.
    pub const TAUTOLOGICAL: BottElement = BottElement {
        constant: 1,
        linear: 1,
    };

    pub fn new(constant: i64, linear: i64) -> Self {
        BottElement { constant, linear }
    }

    pub fn checked_mul(self, rhs: BottElement) -> Option<BottElement> {
        let constant = self.constant.checked_mul(rhs.constant)?;
        let linear = self
            .constant
            .checked_mul(rhs.linear)?
            .checked_add(self.linear.checked_mul(rhs.constant)?)?;
        Some(BottElement { constant, linear })
    }

    pub fn checked_sub(self, rhs: BottElement) -> Option<BottElement> {
        Some(BottElement {
            constant: self.constant.checked_sub(rhs.constant)?,
            linear: self.linear.checked_sub(rhs.linear)?,
        })
    }

    /// Square-and-multiply.
    pub fn checked_pow(self, mut e: u64) -> Option<BottElement> {
        let mut base = self;
        let mut acc = BottElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(base)?;
            }
        }
        Some(acc)
    }
}

impl Add for BottElement {
    type Output = BottElement;
    fn add(self, rhs: BottElement) -> BottElement {
        BottElement::new(self.constant + rhs.constant, self.linear + rhs.linear)
    }
}

impl Mul for BottElement {
    type Output = BottElement;
    fn mul(self, rhs: BottElement) -> BottElement {
        self.checked_mul(rhs).expect("overflow in Z[u]/(u^2)")
    }
}

/// `H^m - 1 = (1 + u)^m - 1` in `Z[u]/(u^2)`.
pub fn bott_check(m: u64) -> Result<BottElement> {
    if m == 0 {
        return Err(Error::InvalidParameters("bott_check needs m >= 1".into()));
    }
    BottElement::TAUTOLOGICAL
        .checked_pow(m)
        .and_then(|h| h.checked_sub(BottElement::ONE))
        .ok_or(Error::Overflow("bott_check"))
}
