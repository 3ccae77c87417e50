//! Brute-force validators and the verification sweep.
//!
//! Everything here recomputes a quantity by a route that does not share code
//! with the closed forms it checks: subsets are counted from the cycle type,
//! dominant weights are enumerated one by one, and the two reference examples
//! are counted from their polynomial presentations.

pub mod presentation;

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{
    automorphism_of, catalog, classify_pair, sigma_of, verify_sigma_with, ActionKind,
    FundamentalOrbits, InvolutionKind, PairLabel, SigmaPermutation, SymmetricPairClass,
};
use crate::kmodule::{
    assemble, classify_subsets, graded_ranks, AtomKind, KModuleDescriptor, SubsetKind, SubsetOrder,
};
use crate::repring::{dominant_count, fixed_and_regular_counts, semidirect_basis_counts};
use crate::rootdata::{CartanType, Family, Weight};

/// Largest rank accepted by [`full_sweep`].
pub const MAX_SWEEP_RANK: usize = 8;

/// Degree bound for the rank identities checked by the sweep.
pub const SWEEP_DEGREE_BOUND: usize = 20;

/// Degree bound for weight-by-weight enumeration in the sweep.
pub const SWEEP_ENUMERATION_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(
        &mut self,
        name: impl Into<String>,
        ok: bool,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual: actual.into(),
        });
    }

    /// Records a check comparing two debug-printable values.
    pub fn compare<T: PartialEq + fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        expected: &T,
        actual: &T,
    ) {
        self.push(
            name,
            expected == actual,
            format!("{expected:?}"),
            format!("{actual:?}"),
        );
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Sorts by check name.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "overall": if self.passed() { "pass" } else { "fail" },
            "total": self.checks.len(),
            "failed": self.failures().count(),
            "checks": self.checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.push_str(&format!("pass  {}\n", c.name)),
                Status::Fail => s.push_str(&format!(
                    "FAIL  {}: expected {}, got {}\n",
                    c.name, c.expected, c.actual
                )),
            }
        }
        s.push_str(&format!(
            "overall: {} ({} checks, {} failed)\n",
            if self.passed() { "pass" } else { "fail" },
            self.checks.len(),
            self.failures().count()
        ));
        s
    }
}

/// `(invariant subsets, mirror pairs)` for an involution with `fixed` fixed
/// points and `transpositions` 2-cycles on `1..=n`.
pub fn subset_counts_closed_form(
    n: usize,
    fixed: usize,
    transpositions: usize,
) -> Result<(u64, u64)> {
    if fixed + 2 * transpositions != n || n >= 64 {
        return Err(Error::CycleTypeMismatch {
            fixed,
            transpositions,
            n,
        });
    }
    let invariant = 1u64 << (fixed + transpositions);
    Ok((invariant, ((1u64 << n) - invariant) / 2))
}

/// Counts from exhaustive classification: `(|J|, |I|, mirrors)`.
pub fn enumerated_subset_counts(sigma: &SigmaPermutation) -> Result<(u64, u64, u64)> {
    let mut j = 0;
    let mut i = 0;
    let mut m = 0;
    for c in classify_subsets(sigma, SubsetOrder::SizeLex)? {
        match c.kind {
            SubsetKind::Invariant => j += 1,
            SubsetKind::RegularRepresentative => i += 1,
            SubsetKind::RegularMirror => m += 1,
        }
    }
    Ok((j, i, m))
}

/// Calls `f` on every dominant weight of rank `n` and degree `d`.
pub fn for_each_dominant(n: usize, d: usize, mut f: impl FnMut(&[i64])) {
    fn rec(pos: usize, left: i64, coords: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
        if pos + 1 == coords.len() {
            coords[pos] = left;
            f(coords);
            return;
        }
        for k in 0..=left {
            coords[pos] = k;
            rec(pos + 1, left - k, coords, f);
        }
    }
    if n == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    let mut coords = vec![0; n];
    rec(0, d as i64, &mut coords, &mut f);
}

/// Weight-by-weight counts in one degree: `(dominant, fixed, regular orbits)`.
/// Regular orbits are counted by their lexicographically smaller member.
pub fn enumerate_fixed_regular(sigma: &SigmaPermutation, d: usize) -> (u64, u64, u64) {
    let mut dominant = 0;
    let mut fixed = 0;
    let mut regular = 0;
    for_each_dominant(sigma.n(), d, |c| {
        dominant += 1;
        let w = Weight::new(c.to_vec());
        let image = sigma.permutation().act_on_weight(&w);
        if image == w {
            fixed += 1;
        } else if w < image {
            regular += 1;
        }
    });
    (dominant, fixed, regular)
}

/// Wedge notation, atom kinds and graded ranks for the two reference
/// examples, `SU(2)` and `SU(3)` with the `AI` involution.
pub fn golden_su2_su3(action: ActionKind) -> Result<VerificationReport> {
    const BOUND: usize = 10;
    let mut report = VerificationReport::default();
    let a1 = SymmetricPairClass::new(CartanType::new(Family::A, 1)?, PairLabel::AI, None)?;
    let a2 = SymmetricPairClass::new(CartanType::new(Family::A, 2)?, PairLabel::AI, None)?;
    let kinds = |v: &[AtomKind]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    let atom_kinds = |d: &KModuleDescriptor| {
        let mut k0: Vec<_> = d.degree0.iter().map(|a| a.kind).collect();
        let mut k1: Vec<_> = d.degree1.iter().map(|a| a.kind).collect();
        k0.sort();
        k1.sort();
        (k0, k1)
    };

    let d = assemble(&a1, action, SubsetOrder::SizeLex)?;
    let r = graded_ranks(&d, BOUND)?;
    let mut push = |prefix: &str,
                    d: &KModuleDescriptor,
                    wedge: Vec<&str>,
                    k0: Vec<AtomKind>,
                    k1: Vec<AtomKind>,
                    golden: (
        presentation::ModulePresentation,
        presentation::ModulePresentation,
    ),
                    r: &crate::kmodule::GradedRanks| {
        report.compare(
            format!("{prefix}/wedge"),
            &wedge.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            &d.notation(),
        );
        report.compare(
            format!("{prefix}/atoms"),
            &(kinds(&k0), kinds(&k1)),
            &atom_kinds(d),
        );
        report.compare(
            format!("{prefix}/ranks/k0"),
            &golden.0.graded_counts(BOUND),
            &r.k0.as_slice().to_vec(),
        );
        report.compare(
            format!("{prefix}/ranks/k1"),
            &golden.1.graded_counts(BOUND),
            &r.k1.as_slice().to_vec(),
        );
    };
    match action {
        ActionKind::Gamma => push(
            "golden/SU2-AI-gamma",
            &d,
            vec!["S^0", "S^A"],
            vec![AtomKind::FreeRank1, AtomKind::KerRes],
            vec![AtomKind::CokerRes],
            presentation::su2_gamma(),
            &r,
        ),
        // S^0 v S^1: one free module in each degree
        ActionKind::Alpha => push(
            "golden/SU2-AI-alpha",
            &d,
            vec!["S^0", "S^1"],
            vec![AtomKind::FreeRank1],
            vec![AtomKind::FreeRank1],
            (
                presentation::ModulePresentation(vec![presentation::su2_semidirect_ring()]),
                presentation::ModulePresentation(vec![presentation::su2_semidirect_ring()]),
            ),
            &r,
        ),
    }

    let d = assemble(&a2, action, SubsetOrder::SizeLex)?;
    let r = graded_ranks(&d, BOUND)?;
    match action {
        ActionKind::Gamma => push(
            "golden/SU3-AI-gamma",
            &d,
            vec!["S^0", "ΣZ/2_+", "S^{1+A}"],
            vec![AtomKind::FreeRank1, AtomKind::CokerRes],
            vec![AtomKind::InducedRG, AtomKind::KerRes],
            presentation::su3_gamma(),
            &r,
        ),
        // {1,2} is one free orbit: S^0 v ΣZ/2_+ v Σ^2 S^(A-1)
        ActionKind::Alpha => push(
            "golden/SU3-AI-alpha",
            &d,
            vec!["S^0", "ΣZ/2_+", "S^{1+A}"],
            vec![AtomKind::FreeRank1, AtomKind::CokerRes],
            vec![AtomKind::InducedRG, AtomKind::KerRes],
            presentation::su3_gamma(),
            &r,
        ),
    }
    Ok(report)
}

/// Runs every consistency check over the catalog up to `max_rank`.
///
/// Check names depend only on the pair and the check, so a larger
/// `max_rank` yields a superset of checks.
pub fn full_sweep(max_rank: usize) -> Result<VerificationReport> {
    if max_rank > MAX_SWEEP_RANK {
        return Err(Error::RankBound {
            requested: max_rank,
            max: MAX_SWEEP_RANK,
        });
    }
    let mut report = VerificationReport::default();
    let mut orbits: HashMap<CartanType, FundamentalOrbits> = HashMap::new();
    for pair in catalog(max_rank) {
        let t = pair.group();
        let o = match orbits.entry(t) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(FundamentalOrbits::compute(t)?),
        };
        sweep_pair(&pair, o, &mut report)?;
    }
    Ok(report.sorted())
}

fn sweep_pair(
    pair: &SymmetricPairClass,
    orbits: &FundamentalOrbits,
    report: &mut VerificationReport,
) -> Result<()> {
    let t = pair.group();
    let n = t.rank();
    let prefix = format!("{t}/{}", pair.pair_id());
    let sigma = sigma_of(pair);

    let kind = classify_pair(pair);
    let consistent = match &kind {
        InvolutionKind::Inner => sigma.is_identity(),
        InvolutionKind::Outer(_) => {
            !sigma.is_identity()
                && (t.family() == Family::A
                    || t.family() == Family::D
                    || (t.family() == Family::E && n == 6))
        }
    };
    report.push(
        format!("{prefix}/sigma/classification"),
        consistent,
        "inner => identity; outer only over A, D, E6",
        format!(
            "{} with sigma {sigma}",
            if kind.is_inner() { "inner" } else { "outer" }
        ),
    );
    report.extend(verify_sigma_with(
        orbits,
        &sigma,
        &automorphism_of(pair),
        &format!("{prefix}/"),
    )?);

    let (f, p) = sigma.cycle_type();
    let (inv, mirrors) = subset_counts_closed_form(n, f, p)?;
    let (j, i, m) = enumerated_subset_counts(&sigma)?;
    report.compare(
        format!("{prefix}/subsets/closed-form"),
        &(inv, mirrors, mirrors),
        &(j, i, m),
    );

    let bound = SWEEP_DEGREE_BOUND;
    let fr = fixed_and_regular_counts(t, &sigma, bound)?;
    let dom = dominant_count(t, bound)?;
    let bookkeeping = (0..=bound).all(|d| {
        fr.fixed.get(d) + 2 * fr.regular_orbits.get(d) == dom.get(d)
            && (dom.get(d) - fr.fixed.get(d)) % 2 == 0
    });
    report.push(
        format!("{prefix}/repring/restriction-bookkeeping"),
        bookkeeping,
        format!("fixed + 2 regular = dominant, degrees 0..={bound}"),
        format!("fixed {:?}", &fr.fixed.as_slice()[..6.min(bound + 1)]),
    );
    let enumerated: Vec<(u64, u64, u64)> = (0..=SWEEP_ENUMERATION_BOUND)
        .map(|d| enumerate_fixed_regular(&sigma, d))
        .collect();
    let closed: Vec<(u64, u64, u64)> = (0..=SWEEP_ENUMERATION_BOUND)
        .map(|d| (dom.get(d), fr.fixed.get(d), fr.regular_orbits.get(d)))
        .collect();
    report.compare(
        format!("{prefix}/repring/enumeration"),
        &enumerated,
        &closed,
    );

    for action in ActionKind::BOTH {
        let ap = format!("{prefix}/{action}");
        let base = assemble(pair, action, SubsetOrder::SizeLex)?;
        let ranks = graded_ranks(&base, bound)?;

        let odd = base
            .wedge
            .iter()
            .filter(|w| matches!(w.shape, crate::kmodule::WedgeShape::Sphere { epsilon } if epsilon % 2 == 1))
            .count() as u64;
        report.compare(
            format!("{ap}/wedge/size"),
            &(mirrors + inv, mirrors + inv + odd),
            &(
                base.wedge.len() as u64,
                (base.degree0.len() + base.degree1.len()) as u64,
            ),
        );

        let mut order_ok = true;
        for order in [SubsetOrder::Binary, SubsetOrder::ReverseSizeLex] {
            let other = assemble(pair, action, order)?;
            order_ok &= other.shape_multiset() == base.shape_multiset()
                && other.atom_counts() == base.atom_counts()
                && graded_ranks(&other, bound)? == ranks;
        }
        report.push(
            format!("{ap}/order-independence"),
            order_ok,
            "identical shapes, atoms and ranks under all subset orders",
            if order_ok { "identical" } else { "differs" },
        );

        if kind.is_inner() && action == ActionKind::Alpha {
            let free = semidirect_basis_counts(t, &sigma, bound)?.scaled(1 << (n - 1))?;
            report.compare(
                format!("{ap}/free-pattern"),
                &(free.clone(), free),
                &(ranks.k0.clone(), ranks.k1.clone()),
            );
        }
    }
    Ok(())
}
