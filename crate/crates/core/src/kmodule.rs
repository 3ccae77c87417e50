//! The wedge decomposition of `K^*_{G x| Z/2}(G)` and its module atoms.
//!
//! Subsets `S` of the nodes split three ways under sigma. Mirror pairs
//! `{S, sigma(S)}` contribute one `Sigma^|S| Z/2_+` each, counted once via
//! the representative with `sigma(S) > S` in a fixed linear order.
//! Invariant subsets contribute `Sigma^|S| S^(orb S)`, where `S^(e)` is
//! `S^(A-1)` for odd `e` and `S^0` for even `e`.
//!
//! Coefficients of the pieces:
//!
//! * `S^0` gives one free copy of `R(G x| Z/2)`;
//! * `Z/2_+` gives `R(G)`;
//! * `S^A` gives the kernel of restriction `R(G x| Z/2) -> R(G)` in degree 0
//!   and its cokernel in degree 1.
//!
//! Only `k mod 2` and `e mod 2` matter for the degree an atom lands in.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{sigma_of, ActionKind, SigmaPermutation, SymmetricPairClass};
use crate::repring::{dominant_count, fixed_and_regular_counts, GradedCounts};

/// Largest `n` for which all `2^n` subsets are enumerated.
pub const MAX_EXHAUSTIVE_N: usize = 24;

/// A subset of `1..=n`, stored as a bitmask (bit `i - 1` for node `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn from_elements(elements: &[usize]) -> Self {
        Subset(elements.iter().fold(0, |m, &i| m | (1 << (i - 1))))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b as usize + 1)
            .collect()
    }

    pub fn image(self, sigma: &SigmaPermutation) -> Subset {
        Subset::from_elements(
            &self
                .elements()
                .into_iter()
                .map(|i| sigma.apply(i))
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("subset element out of range"));
        }
        Ok(Subset::from_elements(&v))
    }
}

/// A linear order on subsets, used to pick one member of each mirror pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetOrder {
    /// Cardinality, then lexicographic on sorted elements.
    #[default]
    SizeLex,
    /// Numeric value of the bitmask.
    Binary,
    /// The reverse of `SizeLex`.
    ReverseSizeLex,
}

impl SubsetOrder {
    pub const ALL: [SubsetOrder; 3] = [
        SubsetOrder::SizeLex,
        SubsetOrder::Binary,
        SubsetOrder::ReverseSizeLex,
    ];

    pub fn compare(self, a: Subset, b: Subset) -> Ordering {
        let size_lex = |a: Subset, b: Subset| {
            a.len()
                .cmp(&b.len())
                .then_with(|| a.elements().cmp(&b.elements()))
        };
        match self {
            SubsetOrder::SizeLex => size_lex(a, b),
            SubsetOrder::Binary => a.0.cmp(&b.0),
            SubsetOrder::ReverseSizeLex => size_lex(b, a),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SubsetOrder::SizeLex => "size-lex",
            SubsetOrder::Binary => "binary",
            SubsetOrder::ReverseSizeLex => "reverse-size-lex",
        }
    }
}

impl fmt::Display for SubsetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubsetOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubsetOrder::ALL
            .into_iter()
            .find(|o| o.as_str() == s.trim())
            .ok_or_else(|| Error::Parse {
                what: "subset order",
                value: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetKind {
    /// `sigma(S) > S`: a member of `I_sigma`.
    RegularRepresentative,
    /// `sigma(S) < S`: the other half of a mirror pair.
    RegularMirror,
    /// `sigma(S) = S`: a member of `J_sigma`.
    Invariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetClass {
    pub subset: Subset,
    pub kind: SubsetKind,
    /// Free sigma-orbits in `S`; only for invariant subsets.
    pub orb_alpha: Option<usize>,
    /// All sigma-orbits in `S`; only for invariant subsets.
    pub orb_gamma: Option<usize>,
}

fn check_size(sigma: &SigmaPermutation) -> Result<()> {
    if sigma.n() > MAX_EXHAUSTIVE_N {
        Err(Error::SubsetCapacity {
            n: sigma.n(),
            max: MAX_EXHAUSTIVE_N,
        })
    } else {
        Ok(())
    }
}

fn sorted_subsets(n: usize, order: SubsetOrder) -> Vec<Subset> {
    let mut all: Vec<Subset> = (0..1u32 << n).map(Subset).collect();
    all.sort_by(|&a, &b| order.compare(a, b));
    all
}

/// Classifies every subset of `1..=n`, listed in `order`.
pub fn classify_subsets(sigma: &SigmaPermutation, order: SubsetOrder) -> Result<Vec<SubsetClass>> {
    check_size(sigma)?;
    let out = sorted_subsets(sigma.n(), order)
        .into_iter()
        .map(|s| {
            let image = s.image(sigma);
            let kind = match order.compare(image, s) {
                Ordering::Equal => SubsetKind::Invariant,
                Ordering::Greater => SubsetKind::RegularRepresentative,
                Ordering::Less => SubsetKind::RegularMirror,
            };
            let (orb_alpha, orb_gamma) = if kind == SubsetKind::Invariant {
                let (free, all) = count_orbits(s, sigma);
                (Some(free), Some(all))
            } else {
                (None, None)
            };
            SubsetClass {
                subset: s,
                kind,
                orb_alpha,
                orb_gamma,
            }
        })
        .collect();
    Ok(out)
}

/// `(free orbits, all orbits)` of sigma on an invariant subset.
fn count_orbits(s: Subset, sigma: &SigmaPermutation) -> (usize, usize) {
    let mut free = 0;
    let mut all = 0;
    for i in s.elements() {
        let j = sigma.apply(i);
        if j == i {
            all += 1;
        } else if j > i {
            all += 1;
            free += 1;
        }
    }
    (free, all)
}

pub fn orb_count(s: Subset, sigma: &SigmaPermutation, action: ActionKind) -> Result<usize> {
    if s.elements().iter().any(|&i| i > sigma.n()) || s.image(sigma) != s {
        return Err(Error::NotInvariant(s.to_string()));
    }
    let (free, all) = count_orbits(s, sigma);
    Ok(match action {
        ActionKind::Alpha => free,
        ActionKind::Gamma => all,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum WedgeShape {
    /// `Z/2_+`
    Z2Plus,
    /// `S^(epsilon)`
    Sphere { epsilon: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSummand {
    pub subset: Subset,
    #[serde(flatten)]
    pub shape: WedgeShape,
    pub suspension: usize,
}

impl WedgeSummand {
    /// `(shape, suspension)` up to the periodicity that matters for coefficients.
    pub fn shape_key(&self) -> (WedgeShape, usize) {
        (self.shape, self.suspension)
    }

    /// Conventional notation such as `S^0`, `S^A`, `S^{1+A}` or `ΣZ/2_+`.
    pub fn notation(&self) -> String {
        let k = self.suspension;
        match self.shape {
            WedgeShape::Z2Plus => match k {
                0 => "Z/2_+".to_string(),
                1 => "ΣZ/2_+".to_string(),
                _ => format!("Σ^{k}Z/2_+"),
            },
            WedgeShape::Sphere { epsilon } if epsilon % 2 == 0 => format!("S^{k}"),
            // Sigma^k S^(A-1) = S^((k-1)+A)
            WedgeShape::Sphere { .. } => match k {
                0 => "S^{A-1}".to_string(),
                1 => "S^A".to_string(),
                _ => format!("S^{{{}+A}}", k - 1),
            },
        }
    }
}

pub fn wedge_decomposition(
    sigma: &SigmaPermutation,
    action: ActionKind,
    order: SubsetOrder,
) -> Result<Vec<WedgeSummand>> {
    let classes = classify_subsets(sigma, order)?;
    let out = classes
        .into_iter()
        .filter_map(|c| {
            let shape = match c.kind {
                SubsetKind::RegularRepresentative => WedgeShape::Z2Plus,
                SubsetKind::RegularMirror => return None,
                SubsetKind::Invariant => WedgeShape::Sphere {
                    epsilon: match action {
                        ActionKind::Alpha => c.orb_alpha?,
                        ActionKind::Gamma => c.orb_gamma?,
                    },
                },
            };
            Some(WedgeSummand {
                subset: c.subset,
                shape,
                suspension: c.subset.len(),
            })
        })
        .collect();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AtomKind {
    /// One free copy of `R(G x| Z/2)`.
    FreeRank1,
    /// `R(G)`, induced up to `G x| Z/2`.
    InducedRG,
    /// Kernel of restriction: free on sigma-fixed dominant weights.
    KerRes,
    /// Cokernel of restriction: free on regular sigma-orbits of dominant weights.
    CokerRes,
}

impl AtomKind {
    pub const ALL: [AtomKind; 4] = [
        AtomKind::FreeRank1,
        AtomKind::InducedRG,
        AtomKind::KerRes,
        AtomKind::CokerRes,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleAtom {
    pub kind: AtomKind,
    pub origin: Subset,
}

/// Atoms a summand contributes to `(K^0, K^1)`.
pub fn summand_atoms(w: &WedgeSummand) -> (Vec<ModuleAtom>, Vec<ModuleAtom>) {
    let mut deg = [Vec::new(), Vec::new()];
    let k = w.suspension;
    let atom = |kind| ModuleAtom {
        kind,
        origin: w.subset,
    };
    match w.shape {
        WedgeShape::Z2Plus => deg[k % 2].push(atom(AtomKind::InducedRG)),
        WedgeShape::Sphere { epsilon } if epsilon % 2 == 0 => {
            deg[k % 2].push(atom(AtomKind::FreeRank1))
        }
        // K^q(Sigma^k S^(A-1)) = K^(q-k+1)(S^A)
        WedgeShape::Sphere { .. } => {
            deg[(k + 1) % 2].push(atom(AtomKind::KerRes));
            deg[k % 2].push(atom(AtomKind::CokerRes));
        }
    }
    let [d0, d1] = deg;
    (d0, d1)
}

/// `K^*_{G x| Z/2}(G)` as a Z/2-graded multiset of atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KModuleDescriptor {
    pub pair: SymmetricPairClass,
    pub action: ActionKind,
    pub sigma: SigmaPermutation,
    pub order: SubsetOrder,
    pub wedge: Vec<WedgeSummand>,
    pub degree0: Vec<ModuleAtom>,
    pub degree1: Vec<ModuleAtom>,
}

/// Atom multiplicities in one homological degree.
pub type AtomCounts = BTreeMap<AtomKind, usize>;

impl KModuleDescriptor {
    pub fn atom_counts(&self) -> (AtomCounts, AtomCounts) {
        let count = |atoms: &[ModuleAtom]| {
            let mut m = AtomCounts::new();
            for a in atoms {
                *m.entry(a.kind).or_insert(0) += 1;
            }
            m
        };
        (count(&self.degree0), count(&self.degree1))
    }

    /// Sorted `(shape, suspension)` pairs of the wedge.
    pub fn shape_multiset(&self) -> Vec<(WedgeShape, usize)> {
        let mut v: Vec<_> = self.wedge.iter().map(|w| w.shape_key()).collect();
        v.sort();
        v
    }

    pub fn notation(&self) -> Vec<String> {
        self.wedge.iter().map(|w| w.notation()).collect()
    }
}

pub fn assemble(
    pair: &SymmetricPairClass,
    action: ActionKind,
    order: SubsetOrder,
) -> Result<KModuleDescriptor> {
    let sigma = sigma_of(pair);
    let wedge = wedge_decomposition(&sigma, action, order)?;
    let mut degree0 = Vec::new();
    let mut degree1 = Vec::new();
    for w in &wedge {
        let (d0, d1) = summand_atoms(w);
        degree0.extend(d0);
        degree1.extend(d1);
    }
    Ok(KModuleDescriptor {
        pair: *pair,
        action,
        sigma,
        order,
        wedge,
        degree0,
        degree1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRanks {
    pub k0: GradedCounts,
    pub k1: GradedCounts,
}

/// Free-abelian ranks of `K^0` and `K^1` in weight degrees `0..=bound`.
pub fn graded_ranks(d: &KModuleDescriptor, bound: usize) -> Result<GradedRanks> {
    let t = d.pair.group();
    let fr = fixed_and_regular_counts(t, &d.sigma, bound)?;
    let dom = dominant_count(t, bound)?;
    let free = fr.regular_orbits.add_scaled(2, &fr.fixed)?;
    let per_atom = |kind: AtomKind| match kind {
        AtomKind::FreeRank1 => &free,
        AtomKind::InducedRG => &dom,
        AtomKind::KerRes => &fr.fixed,
        AtomKind::CokerRes => &fr.regular_orbits,
    };
    let sum = |counts: &AtomCounts| -> Result<GradedCounts> {
        let mut acc = GradedCounts::zeros(bound);
        for (&kind, &mult) in counts {
            acc = acc.add_scaled(mult as u64, per_atom(kind))?;
        }
        Ok(acc)
    };
    let (c0, c1) = d.atom_counts();
    Ok(GradedRanks {
        k0: sum(&c0)?,
        k1: sum(&c1)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::{catalog, PairLabel};
    use crate::rootdata::CartanType;
    use proptest::prelude::*;

    fn swap12() -> SigmaPermutation {
        SigmaPermutation::from_swaps(2, &[(1, 2)]).unwrap()
    }

    fn pair(t: &str, l: PairLabel) -> SymmetricPairClass {
        SymmetricPairClass::new(t.parse::<CartanType>().unwrap(), l, None).unwrap()
    }

    fn of_kind(c: &[SubsetClass], k: SubsetKind) -> Vec<Vec<usize>> {
        c.iter()
            .filter(|x| x.kind == k)
            .map(|x| x.subset.elements())
            .collect()
    }

    #[test]
    fn classify_examples() {
        let c = classify_subsets(&swap12(), SubsetOrder::SizeLex).unwrap();
        assert_eq!(of_kind(&c, SubsetKind::Invariant), vec![vec![], vec![1, 2]]);
        assert_eq!(
            of_kind(&c, SubsetKind::RegularRepresentative),
            vec![vec![1]]
        );
        assert_eq!(of_kind(&c, SubsetKind::RegularMirror), vec![vec![2]]);

        let c = classify_subsets(&SigmaPermutation::identity(1), SubsetOrder::SizeLex).unwrap();
        assert_eq!(of_kind(&c, SubsetKind::Invariant), vec![vec![], vec![1]]);
        assert!(of_kind(&c, SubsetKind::RegularRepresentative).is_empty());

        let c = classify_subsets(&SigmaPermutation::identity(3), SubsetOrder::Binary).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.iter().all(|x| x.kind == SubsetKind::Invariant));
    }

    #[test]
    fn subset_capacity() {
        let s = SigmaPermutation::identity(25);
        assert_eq!(
            classify_subsets(&s, SubsetOrder::SizeLex).unwrap_err(),
            Error::SubsetCapacity { n: 25, max: 24 }
        );
    }

    #[test]
    fn orb_examples() {
        let s12 = Subset::from_elements(&[1, 2]);
        assert_eq!(orb_count(s12, &swap12(), ActionKind::Gamma).unwrap(), 1);
        assert_eq!(orb_count(s12, &swap12(), ActionKind::Alpha).unwrap(), 1);
        let id1 = SigmaPermutation::identity(1);
        let s1 = Subset::from_elements(&[1]);
        assert_eq!(orb_count(s1, &id1, ActionKind::Gamma).unwrap(), 1);
        assert_eq!(orb_count(s1, &id1, ActionKind::Alpha).unwrap(), 0);
        for a in ActionKind::BOTH {
            assert_eq!(orb_count(Subset::EMPTY, &swap12(), a).unwrap(), 0);
        }
        assert!(matches!(
            orb_count(s1, &swap12(), ActionKind::Gamma),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn wedge_examples() {
        let w = wedge_decomposition(
            &SigmaPermutation::identity(1),
            ActionKind::Gamma,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        assert_eq!(
            w.iter().map(|x| x.notation()).collect::<Vec<_>>(),
            ["S^0", "S^A"]
        );
        let w = wedge_decomposition(&swap12(), ActionKind::Gamma, SubsetOrder::SizeLex).unwrap();
        assert_eq!(
            w.iter().map(|x| x.notation()).collect::<Vec<_>>(),
            ["S^0", "ΣZ/2_+", "S^{1+A}"]
        );
        let w = wedge_decomposition(
            &SigmaPermutation::identity(1),
            ActionKind::Alpha,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        assert_eq!(
            w.iter().map(|x| x.notation()).collect::<Vec<_>>(),
            ["S^0", "S^1"]
        );
        assert_eq!(w[1].shape, WedgeShape::Sphere { epsilon: 0 });
    }

    #[test]
    fn atom_examples() {
        let sa = WedgeSummand {
            subset: Subset::from_elements(&[1]),
            shape: WedgeShape::Sphere { epsilon: 1 },
            suspension: 1,
        };
        let (d0, d1) = summand_atoms(&sa);
        assert_eq!(
            d0.iter().map(|a| a.kind).collect::<Vec<_>>(),
            [AtomKind::KerRes]
        );
        assert_eq!(
            d1.iter().map(|a| a.kind).collect::<Vec<_>>(),
            [AtomKind::CokerRes]
        );

        let z = WedgeSummand {
            subset: Subset::from_elements(&[1]),
            shape: WedgeShape::Z2Plus,
            suspension: 1,
        };
        let (d0, d1) = summand_atoms(&z);
        assert!(d0.is_empty());
        assert_eq!(d1[0].kind, AtomKind::InducedRG);

        let s1a = WedgeSummand {
            subset: Subset::from_elements(&[1, 2]),
            shape: WedgeShape::Sphere { epsilon: 1 },
            suspension: 2,
        };
        let (d0, d1) = summand_atoms(&s1a);
        assert_eq!(d0[0].kind, AtomKind::CokerRes);
        assert_eq!(d1[0].kind, AtomKind::KerRes);
    }

    fn kinds(atoms: &[ModuleAtom]) -> Vec<AtomKind> {
        let mut v: Vec<_> = atoms.iter().map(|a| a.kind).collect();
        v.sort();
        v
    }

    #[test]
    fn assemble_examples() {
        let d = assemble(
            &pair("A2", PairLabel::AI),
            ActionKind::Gamma,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        assert_eq!(kinds(&d.degree0), [AtomKind::FreeRank1, AtomKind::CokerRes]);
        assert_eq!(kinds(&d.degree1), [AtomKind::InducedRG, AtomKind::KerRes]);

        let d = assemble(
            &pair("A1", PairLabel::AI),
            ActionKind::Gamma,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        assert_eq!(kinds(&d.degree0), [AtomKind::FreeRank1, AtomKind::KerRes]);
        assert_eq!(kinds(&d.degree1), [AtomKind::CokerRes]);

        let d = assemble(
            &pair("A1", PairLabel::AI),
            ActionKind::Alpha,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        assert_eq!(kinds(&d.degree0), [AtomKind::FreeRank1]);
        assert_eq!(kinds(&d.degree1), [AtomKind::FreeRank1]);
    }

    #[test]
    fn graded_rank_examples() {
        let d = assemble(
            &pair("A2", PairLabel::AI),
            ActionKind::Gamma,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        let r = graded_ranks(&d, 3).unwrap();
        assert_eq!(r.k0.as_slice(), &[2, 2, 4, 4]);
        assert_eq!(r.k1.as_slice(), &[2, 2, 4, 4]);

        let d = assemble(
            &pair("A1", PairLabel::AI),
            ActionKind::Gamma,
            SubsetOrder::SizeLex,
        )
        .unwrap();
        let r = graded_ranks(&d, 2).unwrap();
        assert_eq!(r.k0.as_slice(), &[3, 3, 3]);
        assert_eq!(r.k1.as_slice(), &[0, 0, 0]);

        let r = graded_ranks(&d, 0).unwrap();
        assert_eq!(r.k0.as_slice(), &[3]);
    }

    #[test]
    fn subset_count_identities() {
        for n in 0..=10usize {
            for p in 0..=n / 2 {
                let f = n - 2 * p;
                let sigma = SigmaPermutation::with_cycle_type(f, p);
                let c = classify_subsets(&sigma, SubsetOrder::SizeLex).unwrap();
                let j = c.iter().filter(|x| x.kind == SubsetKind::Invariant).count();
                let i = c
                    .iter()
                    .filter(|x| x.kind == SubsetKind::RegularRepresentative)
                    .count();
                let m = c
                    .iter()
                    .filter(|x| x.kind == SubsetKind::RegularMirror)
                    .count();
                assert_eq!(2 * i + j, 1 << n);
                assert_eq!(i, m);
                assert_eq!(j, 1 << (f + p));
            }
        }
    }

    #[test]
    fn order_independence_over_catalog() {
        for p in catalog(6) {
            for a in ActionKind::BOTH {
                let base = assemble(&p, a, SubsetOrder::SizeLex).unwrap();
                let base_ranks = graded_ranks(&base, 8).unwrap();
                for o in [SubsetOrder::Binary, SubsetOrder::ReverseSizeLex] {
                    let other = assemble(&p, a, o).unwrap();
                    assert_eq!(other.shape_multiset(), base.shape_multiset(), "{p} {a} {o}");
                    assert_eq!(other.atom_counts(), base.atom_counts(), "{p} {a} {o}");
                    assert_eq!(graded_ranks(&other, 8).unwrap(), base_ranks, "{p} {a} {o}");
                }
            }
        }
    }

    #[test]
    fn reversing_the_order_changes_representatives() {
        let a = classify_subsets(&swap12(), SubsetOrder::SizeLex).unwrap();
        let b = classify_subsets(&swap12(), SubsetOrder::ReverseSizeLex).unwrap();
        assert_eq!(
            of_kind(&a, SubsetKind::RegularRepresentative),
            vec![vec![1]]
        );
        assert_eq!(
            of_kind(&b, SubsetKind::RegularRepresentative),
            vec![vec![2]]
        );
    }

    #[test]
    fn identity_alpha_is_free() {
        for t in CartanType::all_up_to(6) {
            let n = t.rank();
            let w = wedge_decomposition(
                &SigmaPermutation::identity(n),
                ActionKind::Alpha,
                SubsetOrder::SizeLex,
            )
            .unwrap();
            assert_eq!(w.len(), 1 << n);
            assert!(w
                .iter()
                .all(|s| s.shape == WedgeShape::Sphere { epsilon: 0 }));
        }
    }

    #[test]
    fn assemble_is_deterministic() {
        for p in catalog(4) {
            let a = serde_json::to_string(
                &assemble(&p, ActionKind::Gamma, SubsetOrder::SizeLex).unwrap(),
            )
            .unwrap();
            let b = serde_json::to_string(
                &assemble(&p, ActionKind::Gamma, SubsetOrder::SizeLex).unwrap(),
            )
            .unwrap();
            assert_eq!(a, b);
        }
    }

    fn involution() -> impl Strategy<Value = SigmaPermutation> {
        (0usize..=8).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_flat_map(move |nodes| {
                    (0..=n / 2).prop_map(move |p| {
                        let swaps: Vec<_> =
                            (0..p).map(|k| (nodes[2 * k], nodes[2 * k + 1])).collect();
                        SigmaPermutation::from_swaps(n, &swaps).unwrap()
                    })
                })
        })
    }

    proptest! {
        #[test]
        fn orb_alpha_at_most_gamma(sigma in involution()) {
            for c in classify_subsets(&sigma, SubsetOrder::SizeLex).unwrap() {
                if c.kind != SubsetKind::Invariant {
                    continue;
                }
                let a = orb_count(c.subset, &sigma, ActionKind::Alpha).unwrap();
                let g = orb_count(c.subset, &sigma, ActionKind::Gamma).unwrap();
                prop_assert!(a <= g);
                let free = c.subset.elements().iter().all(|&i| sigma.apply(i) != i);
                prop_assert_eq!(a == g, free);
            }
        }

        #[test]
        fn exactly_one_representative_per_mirror_pair(sigma in involution()) {
            for order in SubsetOrder::ALL {
                let c = classify_subsets(&sigma, order).unwrap();
                let kinds: BTreeMap<u32, SubsetKind> =
                    c.iter().map(|x| (x.subset.mask(), x.kind)).collect();
                for x in &c {
                    let mirror = kinds[&x.subset.image(&sigma).mask()];
                    match x.kind {
                        SubsetKind::Invariant => prop_assert_eq!(mirror, SubsetKind::Invariant),
                        SubsetKind::RegularRepresentative =>
                            prop_assert_eq!(mirror, SubsetKind::RegularMirror),
                        SubsetKind::RegularMirror =>
                            prop_assert_eq!(mirror, SubsetKind::RegularRepresentative),
                    }
                }
            }
        }

        #[test]
        fn subset_serde_round_trip(mask in 0u32..(1 << 12)) {
            let s = Subset::from_mask(mask);
            let json = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<Subset>(&json).unwrap(), s);
        }
    }
}
