//! Symmetric-pair catalog, inner/outer classification, and the induced
//! permutation of the fundamental weights.
//!
//! An inner involution fixes every isomorphism class of representations, so
//! its permutation is the identity. An outer involution acts through the
//! nontrivial Dynkin diagram automorphism, which only exists for `A_n`
//! (`n >= 2`), `D_n` and `E_6`.
//!
//! The `AII` family is recorded over `A_{2m-1}` (`SU(2m)/Sp(m)`) with the
//! reversal permutation. `AIV` is the `q = 1` member of `AIII` and is accepted
//! as input but not listed separately in the catalog.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::VerificationReport;
use crate::rootdata::{weyl_orbit, CartanType, Family, Weight, WeylOrbit};

/// A permutation of the Dynkin nodes `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct NodePermutation(Vec<usize>);

impl NodePermutation {
    pub fn identity(n: usize) -> Self {
        NodePermutation((1..=n).collect())
    }

    /// Builds from 1-based images: `images[i - 1]` is the image of node `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &k in &images {
            if k == 0 || k > n || hit[k - 1] {
                return Err(Error::Parse {
                    what: "permutation",
                    value: format!("{images:?}"),
                });
            }
            hit[k - 1] = true;
        }
        Ok(NodePermutation(images))
    }

    /// Swaps the listed pairs of nodes, fixing the rest.
    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Self {
        let mut p = Self::identity(n);
        for &(a, b) in swaps {
            p.0.swap(a - 1, b - 1);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.len()).all(|i| self.apply(self.apply(i)) == i)
    }

    /// Moves coordinate `j` to position `pi(j)`.
    pub fn act_on_weight(&self, w: &Weight) -> Weight {
        let c = w.coords();
        let mut out = vec![0; c.len()];
        for (j, &x) in c.iter().enumerate() {
            out[self.0[j] - 1] = x;
        }
        Weight::new(out)
    }
}

impl TryFrom<Vec<usize>> for NodePermutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        NodePermutation::from_images(v)
    }
}

impl From<NodePermutation> for Vec<usize> {
    fn from(p: NodePermutation) -> Self {
        p.0
    }
}

impl fmt::Display for NodePermutation {
    /// Cycle notation, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut any = false;
        for start in 1..=self.len() {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i - 1] {
                seen[i - 1] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.apply(i);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "id")?;
        }
        Ok(())
    }
}

/// The involution sigma on `1..=n` with `alpha^* ubar_i = ubar_{sigma(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NodePermutation", into = "NodePermutation")]
pub struct SigmaPermutation(NodePermutation);

impl SigmaPermutation {
    pub fn new(p: NodePermutation) -> Result<Self> {
        if p.is_involution() {
            Ok(SigmaPermutation(p))
        } else {
            Err(Error::NotInvolution(p.len()))
        }
    }

    pub fn identity(n: usize) -> Self {
        SigmaPermutation(NodePermutation::identity(n))
    }

    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        Self::new(NodePermutation::from_swaps(n, swaps))
    }

    /// An involution with `fixed` fixed points followed by `transpositions`
    /// adjacent swaps.
    pub fn with_cycle_type(fixed: usize, transpositions: usize) -> Self {
        let n = fixed + 2 * transpositions;
        let swaps: Vec<_> = (0..transpositions)
            .map(|k| (fixed + 2 * k + 1, fixed + 2 * k + 2))
            .collect();
        SigmaPermutation(NodePermutation::from_swaps(n, &swaps))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn permutation(&self) -> &NodePermutation {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `(fixed points, transpositions)`.
    pub fn cycle_type(&self) -> (usize, usize) {
        let fixed = (1..=self.n()).filter(|&i| self.apply(i) == i).count();
        (fixed, (self.n() - fixed) / 2)
    }

    /// Orbits of sigma on the nodes, each sorted, in order of smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        (1..=self.n())
            .filter(|&i| self.apply(i) >= i)
            .map(|i| {
                let j = self.apply(i);
                if i == j {
                    vec![i]
                } else {
                    vec![i, j]
                }
            })
            .collect()
    }
}

impl From<SigmaPermutation> for NodePermutation {
    fn from(s: SigmaPermutation) -> Self {
        s.0
    }
}

impl TryFrom<NodePermutation> for SigmaPermutation {
    type Error = Error;
    fn try_from(p: NodePermutation) -> Result<Self> {
        SigmaPermutation::new(p)
    }
}

impl fmt::Display for SigmaPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// How the generator of `Z/2` acts on the group: by `alpha` or by
/// `gamma(g) = alpha(g)^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Alpha,
    Gamma,
}

impl ActionKind {
    pub const BOTH: [ActionKind; 2] = [ActionKind::Alpha, ActionKind::Gamma];

    pub fn as_str(self) -> &'static str {
        match self {
            ActionKind::Alpha => "alpha",
            ActionKind::Gamma => "gamma",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ActionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha" => Ok(ActionKind::Alpha),
            "gamma" => Ok(ActionKind::Gamma),
            _ => Err(Error::Parse {
                what: "action",
                value: s.to_string(),
            }),
        }
    }
}

/// Cartan labels of compact symmetric pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum PairLabel {
    AI,
    AII,
    AIII,
    AIV,
    BDI,
    DIII,
    CI,
    CII,
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

impl PairLabel {
    pub const ALL: [PairLabel; 20] = [
        PairLabel::AI,
        PairLabel::AII,
        PairLabel::AIII,
        PairLabel::AIV,
        PairLabel::BDI,
        PairLabel::DIII,
        PairLabel::CI,
        PairLabel::CII,
        PairLabel::EI,
        PairLabel::EII,
        PairLabel::EIII,
        PairLabel::EIV,
        PairLabel::EV,
        PairLabel::EVI,
        PairLabel::EVII,
        PairLabel::EVIII,
        PairLabel::EIX,
        PairLabel::FI,
        PairLabel::FII,
        PairLabel::G,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairLabel::AI => "AI",
            PairLabel::AII => "AII",
            PairLabel::AIII => "AIII",
            PairLabel::AIV => "AIV",
            PairLabel::BDI => "BDI",
            PairLabel::DIII => "DIII",
            PairLabel::CI => "CI",
            PairLabel::CII => "CII",
            PairLabel::EI => "EI",
            PairLabel::EII => "EII",
            PairLabel::EIII => "EIII",
            PairLabel::EIV => "EIV",
            PairLabel::EV => "EV",
            PairLabel::EVI => "EVI",
            PairLabel::EVII => "EVII",
            PairLabel::EVIII => "EVIII",
            PairLabel::EIX => "EIX",
            PairLabel::FI => "FI",
            PairLabel::FII => "FII",
            PairLabel::G => "G",
        }
    }

    fn admits(self, t: CartanType) -> bool {
        let (fam, n) = (t.family(), t.rank());
        match self {
            PairLabel::AI | PairLabel::AIII | PairLabel::AIV => fam == Family::A,
            PairLabel::AII => fam == Family::A && n >= 3 && n % 2 == 1,
            PairLabel::BDI => matches!(fam, Family::B | Family::D),
            PairLabel::DIII => fam == Family::D,
            PairLabel::CI | PairLabel::CII => fam == Family::C,
            PairLabel::EI | PairLabel::EII | PairLabel::EIII | PairLabel::EIV => {
                fam == Family::E && n == 6
            }
            PairLabel::EV | PairLabel::EVI | PairLabel::EVII => fam == Family::E && n == 7,
            PairLabel::EVIII | PairLabel::EIX => fam == Family::E && n == 8,
            PairLabel::FI | PairLabel::FII => fam == Family::F,
            PairLabel::G => fam == Family::G,
        }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        PairLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == up)
            .ok_or_else(|| Error::Parse {
                what: "pair label",
                value: s.to_string(),
            })
    }
}

/// A symmetric pair `(g, g^alpha)` of compact type, by Cartan label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetricPairClass {
    group: CartanType,
    label: PairLabel,
    /// `(p, q)` for `SO(p+q)/SO(p)xSO(q)`; only used by `BDI`.
    params: Option<(usize, usize)>,
}

impl SymmetricPairClass {
    pub fn new(
        group: CartanType,
        label: PairLabel,
        params: Option<(usize, usize)>,
    ) -> Result<Self> {
        if !label.admits(group) {
            return Err(Error::PairMismatch {
                label: label.to_string(),
                group: group.to_string(),
            });
        }
        match (label, params) {
            (PairLabel::BDI, Some((p, q))) => {
                let dim = match group.family() {
                    Family::B => 2 * group.rank() + 1,
                    _ => 2 * group.rank(),
                };
                if p == 0 || q == 0 || p + q != dim {
                    return Err(Error::InvalidParameters(format!(
                        "BDI over {group} needs p, q >= 1 with p + q = {dim}, got ({p}, {q})"
                    )));
                }
            }
            (PairLabel::BDI, None) => {
                return Err(Error::InvalidParameters("BDI needs (p, q)".to_string()))
            }
            (_, Some(_)) => {
                return Err(Error::InvalidParameters(format!(
                    "{label} takes no (p, q) parameters"
                )))
            }
            (_, None) => {}
        }
        Ok(SymmetricPairClass {
            group,
            label,
            params,
        })
    }

    pub fn group(&self) -> CartanType {
        self.group
    }

    pub fn label(&self) -> PairLabel {
        self.label
    }

    pub fn params(&self) -> Option<(usize, usize)> {
        self.params
    }

    /// File-name friendly identifier, e.g. `AI` or `BDI_p3_q7`.
    pub fn pair_id(&self) -> String {
        match self.params {
            Some((p, q)) => format!("{}_p{p}_q{q}", self.label),
            None => self.label.to_string(),
        }
    }
}

impl fmt::Display for SymmetricPairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.group, self.label)?;
        if let Some((p, q)) = self.params {
            write!(f, "({p},{q})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "diagram_permutation",
    rename_all = "lowercase"
)]
pub enum InvolutionKind {
    Inner,
    Outer(NodePermutation),
}

impl InvolutionKind {
    pub fn is_inner(&self) -> bool {
        matches!(self, InvolutionKind::Inner)
    }
}

/// The nontrivial Dynkin diagram automorphism, or the identity if there is none.
pub fn diagram_automorphism(t: CartanType) -> NodePermutation {
    let n = t.rank();
    match t.family() {
        Family::A if n >= 2 => NodePermutation((1..=n).rev().collect()),
        Family::D => NodePermutation::from_swaps(n, &[(n - 1, n)]),
        Family::E if n == 6 => NodePermutation::from_swaps(6, &[(1, 6), (3, 5)]),
        _ => NodePermutation::identity(n),
    }
}

pub fn classify_pair(p: &SymmetricPairClass) -> InvolutionKind {
    let outer = match p.label {
        // SU(2) has no outer automorphisms.
        PairLabel::AI => p.group.rank() >= 2,
        PairLabel::AII => true,
        PairLabel::BDI => {
            p.group.family() == Family::D && p.params.is_some_and(|(p, _)| p % 2 == 1)
        }
        PairLabel::EI | PairLabel::EIV => true,
        _ => false,
    };
    if outer {
        InvolutionKind::Outer(diagram_automorphism(p.group))
    } else {
        InvolutionKind::Inner
    }
}

/// The permutation sigma; the same for both actions.
pub fn sigma_of(p: &SymmetricPairClass) -> SigmaPermutation {
    match classify_pair(p) {
        InvolutionKind::Inner => SigmaPermutation::identity(p.group.rank()),
        // diagram automorphisms of A, D, E6 are involutions
        InvolutionKind::Outer(perm) => SigmaPermutation(perm),
    }
}

/// The node map through which the involution acts on weights.
pub fn automorphism_of(p: &SymmetricPairClass) -> NodePermutation {
    match classify_pair(p) {
        InvolutionKind::Inner => NodePermutation::identity(p.group.rank()),
        InvolutionKind::Outer(perm) => perm,
    }
}

/// Every catalog pair over a group of rank at most `max_rank`.
///
/// `BDI` is listed once per `(p, q)` with `p <= q`. `AIII` stands for the
/// whole `SU(p+q)/S(U(p)xU(q))` family and is listed from rank 2 on, since
/// over `A_1` it coincides with `AI`.
pub fn catalog(max_rank: usize) -> Vec<SymmetricPairClass> {
    let mut out = Vec::new();
    for t in CartanType::all_up_to(max_rank) {
        let n = t.rank();
        let mut push = |label: PairLabel, params: Option<(usize, usize)>| {
            out.push(SymmetricPairClass::new(t, label, params).expect("catalog entry is valid"));
        };
        match t.family() {
            Family::A => {
                push(PairLabel::AI, None);
                if n >= 3 && n % 2 == 1 {
                    push(PairLabel::AII, None);
                }
                if n >= 2 {
                    push(PairLabel::AIII, None);
                }
            }
            Family::B => {
                for p in 1..=n {
                    push(PairLabel::BDI, Some((p, 2 * n + 1 - p)));
                }
            }
            Family::C => {
                push(PairLabel::CI, None);
                push(PairLabel::CII, None);
            }
            Family::D => {
                for p in 1..=n {
                    push(PairLabel::BDI, Some((p, 2 * n - p)));
                }
                push(PairLabel::DIII, None);
            }
            Family::E => {
                let labels: &[PairLabel] = match n {
                    6 => &[
                        PairLabel::EI,
                        PairLabel::EII,
                        PairLabel::EIII,
                        PairLabel::EIV,
                    ],
                    7 => &[PairLabel::EV, PairLabel::EVI, PairLabel::EVII],
                    _ => &[PairLabel::EVIII, PairLabel::EIX],
                };
                for &l in labels {
                    push(l, None);
                }
            }
            Family::F => {
                push(PairLabel::FI, None);
                push(PairLabel::FII, None);
            }
            Family::G => push(PairLabel::G, None),
        }
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub group: CartanType,
    pub label: PairLabel,
    pub params: Option<(usize, usize)>,
    pub pair_id: String,
    pub involution: InvolutionKind,
    pub sigma: SigmaPermutation,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogTable {
    pub schema_version: u32,
    pub max_rank: usize,
    pub entries: Vec<CatalogEntry>,
}

pub const CATALOG_SCHEMA_VERSION: u32 = 1;

pub fn catalog_table(max_rank: usize) -> CatalogTable {
    let entries = catalog(max_rank)
        .into_iter()
        .map(|p| CatalogEntry {
            group: p.group,
            label: p.label,
            params: p.params,
            pair_id: p.pair_id(),
            involution: classify_pair(&p),
            sigma: sigma_of(&p),
        })
        .collect();
    CatalogTable {
        schema_version: CATALOG_SCHEMA_VERSION,
        max_rank,
        entries,
    }
}

/// The Weyl orbits of all fundamental weights of one type.
#[derive(Debug, Clone)]
pub struct FundamentalOrbits {
    group: CartanType,
    orbits: Vec<WeylOrbit>,
}

impl FundamentalOrbits {
    pub fn compute(t: CartanType) -> Result<Self> {
        let orbits = (1..=t.rank())
            .map(|i| weyl_orbit(t, &Weight::fundamental(t.rank(), i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FundamentalOrbits { group: t, orbits })
    }

    pub fn group(&self) -> CartanType {
        self.group
    }

    /// Orbit of `u_i`, 1-based.
    pub fn orbit(&self, i: usize) -> &WeylOrbit {
        &self.orbits[i - 1]
    }
}

/// Checks node by node that the coordinate permutation `map` carries the
/// Weyl orbit of `u_i` onto the Weyl orbit of `u_{sigma(i)}`.
pub fn verify_sigma(
    t: CartanType,
    sigma: &SigmaPermutation,
    map: &NodePermutation,
) -> Result<VerificationReport> {
    let orbits = FundamentalOrbits::compute(t)?;
    verify_sigma_with(&orbits, sigma, map, "")
}

/// [`verify_sigma`] against precomputed orbits; check names get `prefix`.
pub fn verify_sigma_with(
    orbits: &FundamentalOrbits,
    sigma: &SigmaPermutation,
    map: &NodePermutation,
    prefix: &str,
) -> Result<VerificationReport> {
    let n = orbits.group.rank();
    if sigma.n() != n || map.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: sigma.n().max(map.len()),
        });
    }
    let mut report = VerificationReport::default();
    for i in 1..=n {
        let target = orbits.orbit(sigma.apply(i));
        let mut image: Vec<Weight> = orbits
            .orbit(i)
            .elements()
            .iter()
            .map(|w| map.act_on_weight(w))
            .collect();
        image.sort_unstable();
        let ok = image.as_slice() == target.elements();
        let mismatched = image.iter().filter(|w| !target.contains(w)).count();
        report.push(
            format!("{prefix}sigma/node{i}"),
            ok,
            format!("orbit(u{}) [{} weights]", sigma.apply(i), target.len()),
            if ok {
                format!("orbit(u{}) [{} weights]", sigma.apply(i), image.len())
            } else {
                format!(
                    "{mismatched} of {} image weights outside target",
                    image.len()
                )
            },
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn pair(t: &str, l: PairLabel, params: Option<(usize, usize)>) -> SymmetricPairClass {
        SymmetricPairClass::new(ty(t), l, params).unwrap()
    }

    #[test]
    fn diagram_automorphisms() {
        assert_eq!(diagram_automorphism(ty("A3")).images(), &[3, 2, 1]);
        assert_eq!(diagram_automorphism(ty("E6")).images(), &[6, 2, 5, 4, 3, 1]);
        assert_eq!(diagram_automorphism(ty("D5")).images(), &[1, 2, 3, 5, 4]);
        for t in ["B3", "C3", "G2", "F4", "E7", "E8", "A1"] {
            assert!(diagram_automorphism(ty(t)).is_identity(), "{t}");
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_pair(&pair("A2", PairLabel::AI, None)),
            InvolutionKind::Outer(NodePermutation::from_swaps(2, &[(1, 2)]))
        );
        assert_eq!(
            classify_pair(&pair("A3", PairLabel::AIII, None)),
            InvolutionKind::Inner
        );
        assert_eq!(
            classify_pair(&pair("D5", PairLabel::BDI, Some((3, 7)))),
            InvolutionKind::Outer(NodePermutation::from_swaps(5, &[(4, 5)]))
        );
        assert!(classify_pair(&pair("D5", PairLabel::BDI, Some((4, 6)))).is_inner());
        assert!(classify_pair(&pair("B4", PairLabel::BDI, Some((3, 6)))).is_inner());
        assert!(!classify_pair(&pair("E6", PairLabel::EI, None)).is_inner());
        assert!(!classify_pair(&pair("E6", PairLabel::EIV, None)).is_inner());
        assert!(classify_pair(&pair("E6", PairLabel::EII, None)).is_inner());
        assert!(classify_pair(&pair("E6", PairLabel::EIII, None)).is_inner());
        assert!(classify_pair(&pair("D4", PairLabel::DIII, None)).is_inner());
    }

    #[test]
    fn sigma_examples() {
        for n in 1..=8 {
            let s = sigma_of(&pair(&format!("A{n}"), PairLabel::AI, None));
            for i in 1..=n {
                assert_eq!(s.apply(i), n + 1 - i);
            }
        }
        assert!(sigma_of(&pair("E6", PairLabel::EII, None)).is_identity());
        assert!(sigma_of(&pair("A1", PairLabel::AI, None)).is_identity());
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(
            SymmetricPairClass::new(ty("A2"), PairLabel::EI, None),
            Err(Error::PairMismatch { .. })
        ));
        assert!(SymmetricPairClass::new(ty("E7"), PairLabel::EI, None).is_err());
        assert!(SymmetricPairClass::new(ty("A2"), PairLabel::AII, None).is_err());
        assert!(SymmetricPairClass::new(ty("D5"), PairLabel::BDI, None).is_err());
        assert!(SymmetricPairClass::new(ty("D5"), PairLabel::BDI, Some((3, 6))).is_err());
        assert!(SymmetricPairClass::new(ty("B2"), PairLabel::BDI, Some((2, 3))).is_ok());
        assert!(SymmetricPairClass::new(ty("A2"), PairLabel::AI, Some((1, 2))).is_err());
        assert!(SymmetricPairClass::new(ty("A2"), PairLabel::AIV, None).is_ok());
    }

    #[test]
    fn catalog_invariants() {
        let cat = catalog(8);
        assert!(!cat.is_empty());
        for p in &cat {
            let s = sigma_of(p);
            assert!(s.permutation().is_involution(), "{p}");
            match classify_pair(p) {
                InvolutionKind::Inner => assert!(s.is_identity(), "{p}"),
                InvolutionKind::Outer(_) => {
                    let t = p.group();
                    assert!(
                        (t.family() == Family::A && t.rank() >= 2)
                            || t.family() == Family::D
                            || (t.family() == Family::E && t.rank() == 6),
                        "{p}"
                    );
                    assert!(!s.is_identity(), "{p}");
                }
            }
        }
        let small: Vec<String> = catalog(2).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            small,
            [
                "A1/AI",
                "A2/AI",
                "A2/AIII",
                "B2/BDI(1,4)",
                "B2/BDI(2,3)",
                "G2/G"
            ]
        );
    }

    #[test]
    fn verify_sigma_examples() {
        let a2 = ty("A2");
        let swap = NodePermutation::from_swaps(2, &[(1, 2)]);
        let s = SigmaPermutation::new(swap.clone()).unwrap();
        assert!(verify_sigma(a2, &s, &swap).unwrap().passed());

        let id = SigmaPermutation::identity(2);
        let r = verify_sigma(a2, &id, &swap).unwrap();
        assert!(!r.passed());
        assert!(!r.checks()[0].passed());
        assert_eq!(r.checks()[0].name, "sigma/node1");

        for t in CartanType::all_up_to(5) {
            let n = t.rank();
            let r = verify_sigma(
                t,
                &SigmaPermutation::identity(n),
                &NodePermutation::identity(n),
            );
            assert!(r.unwrap().passed(), "{t}");
        }
    }

    #[test]
    fn non_involution_rejected() {
        let p = NodePermutation::from_images(vec![2, 3, 1]).unwrap();
        assert!(matches!(
            SigmaPermutation::new(p),
            Err(Error::NotInvolution(3))
        ));
        assert!(NodePermutation::from_images(vec![1, 1]).is_err());
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(diagram_automorphism(ty("E6")).to_string(), "(1 6)(3 5)");
        assert_eq!(NodePermutation::identity(3).to_string(), "id");
        assert_eq!(
            SigmaPermutation::with_cycle_type(1, 2).to_string(),
            "(2 3)(4 5)"
        );
    }
}
