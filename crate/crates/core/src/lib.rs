//! Exact computation of `K^*_{G x| Z/2}(G)` for a compact simply connected
//! simple group `G` with an involution `alpha`, where `G` acts on itself by
//! conjugation and the generator of `Z/2` acts by `alpha` or by
//! `g -> alpha(g)^-1`.
//!
//! The pipeline runs bottom-up:
//!
//! * [`rootdata`]: Cartan matrices, weights, simple reflections, Weyl orbits.
//! * [`involutions`]: symmetric pairs, inner/outer classification, and the
//!   permutation `sigma` of the fundamental weights.
//! * [`repring`]: dominant-weight counts, fixed and regular `sigma`-orbits,
//!   the Kähler-differential model of `K_G(G)`.
//! * [`kmodule`]: the wedge decomposition indexed by subsets of the nodes and
//!   the resulting module atoms and graded ranks.
//! * [`oracle`]: independent brute-force checks.
//! * [`report`]: the JSON report schema and atlas writer used by the CLI.
//!
//! ```
//! use equik::prelude::*;
//!
//! let su3 = SymmetricPairClass::new("A2".parse()?, PairLabel::AI, None)?;
//! let k = assemble(&su3, ActionKind::Gamma, SubsetOrder::SizeLex)?;
//! assert_eq!(k.notation(), ["S^0", "ΣZ/2_+", "S^{1+A}"]);
//! let ranks = graded_ranks(&k, 3)?;
//! assert_eq!(ranks.k0.as_slice(), &[2, 2, 4, 4]);
//! # Ok::<(), equik::Error>(())
//! ```

pub mod error;
pub mod involutions;
pub mod kmodule;
pub mod oracle;
pub mod report;
pub mod repring;
pub mod rootdata;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::error::{Error, Result};
    pub use crate::involutions::{
        catalog, classify_pair, diagram_automorphism, sigma_of, verify_sigma, ActionKind,
        InvolutionKind, NodePermutation, PairLabel, SigmaPermutation, SymmetricPairClass,
    };
    pub use crate::kmodule::{
        assemble, classify_subsets, graded_ranks, orb_count, summand_atoms, wedge_decomposition,
        AtomKind, KModuleDescriptor, Subset, SubsetKind, SubsetOrder, WedgeShape, WedgeSummand,
    };
    pub use crate::oracle::{
        full_sweep, golden_su2_su3, subset_counts_closed_form, VerificationReport,
    };
    pub use crate::repring::{
        bott_check, dominant_count, fixed_and_regular_counts, kahler_descriptor, orbit_sum,
        BottElement, GradedCounts,
    };
    pub use crate::rootdata::{
        cartan_matrix, dominant_representative, simple_reflection, weyl_orbit, CartanType, Family,
        Weight,
    };
}

// The book's code listings compile and run as doc-tests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/root-data.md")]
    pub mod root_data {}
    #[doc = include_str!("../../../book/src/involutions.md")]
    pub mod involutions {}
    #[doc = include_str!("../../../book/src/representation-ring.md")]
    pub mod representation_ring {}
    #[doc = include_str!("../../../book/src/wedge.md")]
    pub mod wedge {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
